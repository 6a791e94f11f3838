//! Edge names at vertices and the rules assigning them when edges are created.

use crate::geometry::Position;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Name of an edge as seen from one of its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeName {
    /// Main exit edge, numbered from 1.
    Main(u8),
    Lu,
    Ld,
    Ru,
    Mid,
    Rd,
    Ld1,
    Ld2,
    Mid1,
    Mid2,
    /// `d1`, `d2` at C vertices and `d2`, `d3` at lower-left corners.
    D(u8),
    /// Bottom side of a pasted tile at its lower-left corner.
    Dside,
    /// `u1` .. `u4`.
    U(u8),
    /// `l`, `l2`, `l3`.
    L(u8),
    /// `r`, `r2`, `r3`.
    R(u8),
}

impl EdgeName {
    pub fn is_main(self) -> bool {
        matches!(self, EdgeName::Main(_))
    }
}

impl fmt::Display for EdgeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeName::Main(k) => write!(f, "{k}"),
            EdgeName::Lu => f.write_str("lu"),
            EdgeName::Ld => f.write_str("ld"),
            EdgeName::Ru => f.write_str("ru"),
            EdgeName::Mid => f.write_str("mid"),
            EdgeName::Rd => f.write_str("rd"),
            EdgeName::Ld1 => f.write_str("ld1"),
            EdgeName::Ld2 => f.write_str("ld2"),
            EdgeName::Mid1 => f.write_str("mid1"),
            EdgeName::Mid2 => f.write_str("mid2"),
            EdgeName::D(k) => write!(f, "d{k}"),
            EdgeName::Dside => f.write_str("d"),
            EdgeName::U(k) => write!(f, "u{k}"),
            EdgeName::L(1) => f.write_str("l"),
            EdgeName::L(k) => write!(f, "l{k}"),
            EdgeName::R(1) => f.write_str("r"),
            EdgeName::R(k) => write!(f, "r{k}"),
        }
    }
}

impl std::str::FromStr for EdgeName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fixed = match s {
            "lu" => Some(EdgeName::Lu),
            "ld" => Some(EdgeName::Ld),
            "ru" => Some(EdgeName::Ru),
            "mid" => Some(EdgeName::Mid),
            "rd" => Some(EdgeName::Rd),
            "ld1" => Some(EdgeName::Ld1),
            "ld2" => Some(EdgeName::Ld2),
            "mid1" => Some(EdgeName::Mid1),
            "mid2" => Some(EdgeName::Mid2),
            "d" => Some(EdgeName::Dside),
            "l" => Some(EdgeName::L(1)),
            "r" => Some(EdgeName::R(1)),
            _ => None,
        };
        if let Some(n) = fixed {
            return Ok(n);
        }
        let bad = || format!("unknown edge name `{s}`");
        let (head, digits) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let k: u8 = digits.parse().map_err(|_| bad())?;
        match head {
            "" if (1..=4).contains(&k) => Ok(EdgeName::Main(k)),
            "d" if (1..=3).contains(&k) => Ok(EdgeName::D(k)),
            "u" if (1..=4).contains(&k) => Ok(EdgeName::U(k)),
            "l" if (2..=3).contains(&k) => Ok(EdgeName::L(k)),
            "r" if (2..=3).contains(&k) => Ok(EdgeName::R(k)),
            _ => Err(bad()),
        }
    }
}

/// Edge letter: a name plus whether the edge leaves the vertex's base plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeLetter {
    pub name: EdgeName,
    pub hat: bool,
}

impl fmt::Display for EdgeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hat {
            write!(f, "^{}", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

impl std::str::FromStr for EdgeLetter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix('^') {
            Some(rest) => Ok(EdgeLetter { name: rest.parse()?, hat: true }),
            None => Ok(EdgeLetter { name: s.parse()?, hat: false }),
        }
    }
}

/// Name at the lower-left corner of a face for its internal edge 7.
pub fn edge7_corner_name(position: Position) -> EdgeName {
    match position {
        Position::LeftUpper => EdgeName::L(2),
        Position::LeftLower => EdgeName::Ld1,
        Position::Middle => EdgeName::Mid1,
        Position::RightUpper => EdgeName::U(3),
        Position::RightLower => EdgeName::R(2),
        Position::Bottom => EdgeName::D(1),
        Position::Root => EdgeName::D(2),
    }
}

/// Name at the lower-right corner of a face for its internal edge 8.
///
/// `parent` is the position of the face's parent, used for bottom faces.
pub fn edge8_corner_name(position: Position, parent: Position) -> EdgeName {
    match position {
        Position::LeftUpper => EdgeName::Lu,
        Position::LeftLower => EdgeName::Ld,
        Position::Middle => EdgeName::Mid,
        Position::RightUpper => EdgeName::Ru,
        Position::RightLower => EdgeName::Rd,
        Position::Bottom => match parent {
            Position::LeftUpper => EdgeName::L(3),
            Position::LeftLower => EdgeName::Ld2,
            Position::Middle => EdgeName::Mid2,
            Position::RightUpper => EdgeName::U(4),
            Position::RightLower => EdgeName::R(3),
            Position::Bottom => EdgeName::D(2),
            Position::Root => EdgeName::D(3),
        },
        Position::Root => EdgeName::Main(3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_through_text() {
        let all = [
            EdgeName::Main(1),
            EdgeName::Main(4),
            EdgeName::Lu,
            EdgeName::Mid2,
            EdgeName::D(3),
            EdgeName::Dside,
            EdgeName::U(4),
            EdgeName::L(1),
            EdgeName::L(3),
            EdgeName::R(1),
            EdgeName::R(2),
        ];
        for n in all {
            assert_eq!(n.to_string().parse::<EdgeName>().unwrap(), n);
            let hat = EdgeLetter { name: n, hat: true };
            assert_eq!(hat.to_string().parse::<EdgeLetter>().unwrap(), hat);
        }
        assert!("q7".parse::<EdgeName>().is_err());
    }

    #[test]
    fn bottom_corner_names_follow_grandparent() {
        assert_eq!(edge8_corner_name(Position::Bottom, Position::LeftLower), EdgeName::Ld2);
        assert_eq!(edge8_corner_name(Position::Bottom, Position::Root), EdgeName::D(3));
        assert_eq!(edge7_corner_name(Position::RightUpper), EdgeName::U(3));
    }
}
