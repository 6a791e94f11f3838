//! Fixed combinatorics of one subdivision step: edge-type names, macrotile
//! environments, subtile positions and the subdivision table.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A side of a macrotile, in environment order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Top,
    Right,
    Bottom,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Top, Side::Right, Side::Bottom];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Side letter used in vertex types (`U`, `R`, `D`, `L`).
    pub fn letter(self) -> SideLetter {
        match self {
            Side::Left => SideLetter::L,
            Side::Top => SideLetter::U,
            Side::Right => SideLetter::R,
            Side::Bottom => SideLetter::D,
        }
    }

    /// Corners at the start and end of the side, walking clockwise.
    pub fn ends(self) -> (Corner, Corner) {
        match self {
            Side::Left => (Corner::DL, Corner::UL),
            Side::Top => (Corner::UL, Corner::UR),
            Side::Right => (Corner::UR, Corner::DR),
            Side::Bottom => (Corner::DR, Corner::DL),
        }
    }
}

/// Side letter of a vertex type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SideLetter {
    U,
    R,
    D,
    L,
}

impl fmt::Display for SideLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SideLetter::U => "U",
            SideLetter::R => "R",
            SideLetter::D => "D",
            SideLetter::L => "L",
        };
        f.write_str(s)
    }
}

/// Corner of a macrotile; faces list corners in this clockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Corner {
    UL,
    UR,
    DR,
    DL,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::UL, Corner::UR, Corner::DR, Corner::DL];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// One of the three internal vertices created inside a subdivided face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Inner {
    A,
    B,
    C,
}

/// Side of an internal edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeSide {
    A,
    B,
}

/// Type of a macrotile side: one of the 16 internal names or a boundary name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeType {
    Boundary(Side),
    Internal(u8, EdgeSide),
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeType::Boundary(Side::Left) => f.write_str("left"),
            EdgeType::Boundary(Side::Top) => f.write_str("top"),
            EdgeType::Boundary(Side::Right) => f.write_str("right"),
            EdgeType::Boundary(Side::Bottom) => f.write_str("bottom"),
            EdgeType::Internal(k, EdgeSide::A) => write!(f, "{k}A"),
            EdgeType::Internal(k, EdgeSide::B) => write!(f, "{k}B"),
        }
    }
}

/// Environment of a macrotile: side types in (left, top, right, bottom) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Env(pub [EdgeType; 4]);

impl Env {
    /// Environment of a root or pasted macrotile.
    pub const ROOT: Env = Env([
        EdgeType::Boundary(Side::Left),
        EdgeType::Boundary(Side::Top),
        EdgeType::Boundary(Side::Right),
        EdgeType::Boundary(Side::Bottom),
    ]);

    pub fn side(&self, s: Side) -> EdgeType {
        self.0[s.index()]
    }
}

impl fmt::Display for Env {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// Position of a face inside its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Position {
    Root,
    LeftUpper,
    RightUpper,
    Middle,
    LeftLower,
    RightLower,
    Bottom,
}

impl Position {
    /// Children positions in the order stored by a subdivided tile.
    pub const CHILDREN: [Position; 6] = [
        Position::LeftUpper,
        Position::RightUpper,
        Position::Middle,
        Position::LeftLower,
        Position::RightLower,
        Position::Bottom,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Position::Root => "root",
            Position::LeftUpper => "left-upper",
            Position::RightUpper => "right-upper",
            Position::Middle => "middle",
            Position::LeftLower => "left-lower",
            Position::RightLower => "right-lower",
            Position::Bottom => "bottom",
        }
    }

    pub fn child_index(self) -> Option<usize> {
        Position::CHILDREN.iter().position(|p| *p == self)
    }
}

/// Named points of a face being subdivided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Corner(Corner),
    Mid(Side),
    Inner(Inner),
}

/// Source of one side type of a child environment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideSource {
    /// Inherit the parent's side type.
    Parent(Side),
    /// A side of an internal edge of the parent.
    Internal(u8, EdgeSide),
}

/// One row of the subdivision table.
#[derive(Clone, Copy, Debug)]
pub struct ChildSpec {
    pub position: Position,
    /// Child corners (UL, UR, DR, DL) as points of the parent.
    pub corners: [Point; 4],
    /// Child environment in (left, top, right, bottom) order.
    pub env: [SideSource; 4],
}

use Corner as K;
use EdgeSide::{A as SA, B as SB};
use Point::{Corner as PC, Inner as PI, Mid as PM};
use SideSource::{Internal as SI, Parent as SP};

/// The subdivision of one face into six subtiles.
pub const SUBDIVISION_TABLE: [ChildSpec; 6] = [
    ChildSpec {
        position: Position::LeftUpper,
        corners: [PC(K::UL), PM(Side::Top), PI(Inner::A), PM(Side::Left)],
        env: [SP(Side::Left), SP(Side::Top), SI(1, SA), SI(3, SA)],
    },
    ChildSpec {
        position: Position::RightUpper,
        corners: [PC(K::UR), PM(Side::Right), PI(Inner::B), PM(Side::Top)],
        env: [SP(Side::Top), SP(Side::Right), SI(6, SA), SI(2, SA)],
    },
    ChildSpec {
        position: Position::Middle,
        corners: [PI(Inner::A), PM(Side::Top), PI(Inner::B), PI(Inner::C)],
        env: [SI(4, SB), SI(1, SB), SI(2, SB), SI(5, SB)],
    },
    ChildSpec {
        position: Position::LeftLower,
        corners: [PC(K::DL), PM(Side::Left), PI(Inner::A), PI(Inner::C)],
        env: [SI(7, SA), SP(Side::Left), SI(3, SB), SI(4, SA)],
    },
    ChildSpec {
        position: Position::RightLower,
        corners: [PC(K::DR), PI(Inner::C), PI(Inner::B), PM(Side::Right)],
        env: [SP(Side::Right), SI(8, SA), SI(5, SA), SI(6, SB)],
    },
    ChildSpec {
        position: Position::Bottom,
        corners: [PC(K::DR), PM(Side::Bottom), PC(K::DL), PI(Inner::C)],
        env: [SI(8, SB), SP(Side::Bottom), SP(Side::Bottom), SI(7, SB)],
    },
];

/// Endpoints of the eight internal edges, indexed 1..=8.
pub const INTERNAL_EDGES: [(Point, Point); 8] = [
    (PI(Inner::A), PM(Side::Top)),
    (PM(Side::Top), PI(Inner::B)),
    (PI(Inner::A), PM(Side::Left)),
    (PI(Inner::A), PI(Inner::C)),
    (PI(Inner::B), PI(Inner::C)),
    (PM(Side::Right), PI(Inner::B)),
    (PC(K::DL), PI(Inner::C)),
    (PC(K::DR), PI(Inner::C)),
];

/// Environments of the six children of a face with environment `env`.
pub fn child_envs(env: Env) -> [Env; 6] {
    SUBDIVISION_TABLE.map(|spec| {
        Env(spec.env.map(|src| match src {
            SideSource::Parent(s) => env.side(s),
            SideSource::Internal(k, s) => EdgeType::Internal(k, s),
        }))
    })
}

/// Position of a subtile on the given side of internal edge `k`.
pub fn edge_side_owner(k: u8, side: EdgeSide) -> Position {
    for spec in SUBDIVISION_TABLE.iter() {
        for src in spec.env.iter() {
            if *src == SideSource::Internal(k, side) {
                return spec.position;
            }
        }
    }
    unreachable!("every internal edge side borders one subtile")
}

/// First edge of a side walked from one of its end corners, descending one level.
///
/// Returns the child position, the child's side that continues the walk and
/// the child's corner sitting at the same point.
pub fn side_descent(side: Side, corner: Corner) -> (Position, Side, Corner) {
    use Position::*;
    match (side, corner) {
        (Side::Top, K::UL) => (LeftUpper, Side::Top, K::UL),
        (Side::Top, K::UR) => (RightUpper, Side::Left, K::UL),
        (Side::Right, K::UR) => (RightUpper, Side::Top, K::UL),
        (Side::Right, K::DR) => (RightLower, Side::Left, K::UL),
        (Side::Bottom, K::DR) => (Bottom, Side::Top, K::UL),
        (Side::Bottom, K::DL) => (Bottom, Side::Right, K::DR),
        (Side::Left, K::DL) => (LeftLower, Side::Top, K::UL),
        (Side::Left, K::UL) => (LeftUpper, Side::Left, K::UL),
        _ => panic!("corner {corner:?} is not an end of side {side:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn middle_child_mark() {
        let envs = child_envs(Env::ROOT);
        let mid = envs[2];
        assert_eq!(mid.to_string(), "(4B,1B,2B,5B)");
        let mut names: Vec<String> = mid.0.iter().map(|t| t.to_string()).collect();
        names.sort();
        assert_eq!(names, ["1B", "2B", "4B", "5B"]);
    }

    #[test]
    fn every_internal_edge_has_both_sides() {
        for k in 1..=8u8 {
            let a = edge_side_owner(k, EdgeSide::A);
            let b = edge_side_owner(k, EdgeSide::B);
            assert_ne!(a, b);
        }
    }

    #[test]
    fn children_share_internal_edges_with_opposite_orientation() {
        for (k, (p, q)) in INTERNAL_EDGES.iter().enumerate() {
            let mut dirs = Vec::new();
            for spec in SUBDIVISION_TABLE.iter() {
                for i in 0..4 {
                    let a = spec.corners[i];
                    let b = spec.corners[(i + 1) % 4];
                    if (a, b) == (*p, *q) {
                        dirs.push(1);
                    } else if (a, b) == (*q, *p) {
                        dirs.push(-1);
                    }
                }
            }
            assert_eq!(dirs.len(), 2, "edge {}", k + 1);
            assert_eq!(dirs[0] + dirs[1], 0, "edge {}", k + 1);
        }
    }

    #[test]
    fn root_children_environments() {
        let envs: Vec<String> = child_envs(Env::ROOT).iter().map(|e| e.to_string()).collect();
        assert_eq!(
            envs,
            [
                "(left,top,1A,3A)",
                "(top,right,6A,2A)",
                "(4B,1B,2B,5B)",
                "(7A,left,3B,4A)",
                "(right,8A,5A,6B)",
                "(8B,bottom,bottom,7B)",
            ]
        );
    }
}
