//! Local geometry around a vertex within one plane: rotation order, role-relative
//! edge names, chain membership and chain members.

use crate::complex::{Complex, PlaneId, Role, TileId, VertexId};
use crate::geometry::{Corner, Side};
use crate::names::EdgeName;
use std::collections::{HashMap, HashSet};

/// Clockwise order of a vertex's neighbors within one plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    /// Neighbors in clockwise order, starting at the first main edge or the fan start.
    pub order: Vec<VertexId>,
    /// True when the vertex lies on the plane's boundary.
    pub boundary: bool,
}

/// Members of one chain in order, with their pointers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMembers {
    pub center: VertexId,
    pub plane: PlaneId,
    pub level: u32,
    /// (member, pointer, exit neighbor of the center).
    pub members: Vec<(VertexId, EdgeName, VertexId)>,
    /// True when the center is interior, so the order wraps around.
    pub cyclic: bool,
}

/// Where a vertex sits in the chain structure of a plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub center: VertexId,
    pub level: u32,
    /// Macrotile whose top or left midpoint is the member.
    pub tile: TileId,
}

/// Precomputed incidence used by chain and rotation queries.
pub struct LocalGeometry<'a> {
    pub c: &'a Complex,
    faces_at: Vec<Vec<TileId>>,
    by_corner: HashMap<(PlaneId, VertexId, u32), Vec<TileId>>,
}

impl<'a> LocalGeometry<'a> {
    pub fn new(c: &'a Complex) -> Self {
        let mut by_corner: HashMap<(PlaneId, VertexId, u32), Vec<TileId>> = HashMap::new();
        for t in &c.tiles {
            if t.split.is_some() {
                by_corner.entry((t.plane, t.corner(Corner::UL), t.depth)).or_default().push(t.id);
            }
        }
        LocalGeometry { c, faces_at: c.faces_at(), by_corner }
    }

    /// Faces of `plane` containing `v`.
    pub fn faces_in(&self, v: VertexId, plane: PlaneId) -> impl Iterator<Item = TileId> + '_ {
        self.faces_at[v as usize].iter().copied().filter(move |&f| self.c.tile(f).plane == plane)
    }

    /// Depth of the macrotile that owns `v` in `plane`; corners sit above the root.
    pub fn owning_depth(&self, v: VertexId, plane: PlaneId) -> Option<i64> {
        let role = self.c.vertices[v as usize].role_in(plane)?;
        Some(match role {
            Role::Corner { tile, .. } => self.c.tile(tile).depth as i64 - 1,
            Role::EdgeMid { tile, .. } | Role::Inner { tile, .. } => self.c.tile(tile).depth as i64,
            Role::SideMid { a, .. } => self.c.tile(a.0).depth as i64,
        })
    }

    /// Neighbors `w` such that some face of `plane` lies right of `v → w`.
    fn successors(&self, v: VertexId, plane: PlaneId) -> HashMap<VertexId, VertexId> {
        let mut succ = HashMap::new();
        for f in self.faces_in(v, plane) {
            let cs = self.c.tile(f).corners;
            let i = cs.iter().position(|&x| x == v).unwrap();
            succ.insert(cs[(i + 1) % 4], cs[(i + 3) % 4]);
        }
        succ
    }

    /// Clockwise neighbor order of `v` in `plane`.
    pub fn rotation(&self, v: VertexId, plane: PlaneId) -> Rotation {
        let succ = self.successors(v, plane);
        let targets: HashSet<VertexId> = succ.values().copied().collect();
        let mut fan_start: Vec<VertexId> = succ.keys().copied().filter(|w| !targets.contains(w)).collect();
        fan_start.sort_unstable();
        let (start, boundary) = match fan_start.first() {
            Some(&w) => (w, true),
            None => {
                let e = self
                    .c
                    .edge_named(v, plane, EdgeName::Main(1))
                    .expect("interior vertex has a first main edge");
                (self.c.edge(e).other(v), false)
            }
        };
        let mut order = vec![start];
        let mut cur = start;
        while let Some(&next) = succ.get(&cur) {
            if next == start {
                break;
            }
            order.push(next);
            cur = next;
        }
        Rotation { order, boundary }
    }

    /// Name of edge `v`–`w` at `v`, relative to the role of `v` in `plane`.
    pub fn role_name(&self, v: VertexId, plane: PlaneId, w: VertexId) -> EdgeName {
        let e = self.c.edge(self.c.edge_between(v, w).expect("adjacent vertices"));
        if e.plane == plane {
            return e.name_at(v);
        }
        if self.successors(v, plane).contains_key(&w) {
            EdgeName::Main(1)
        } else {
            EdgeName::Main(2)
        }
    }

    /// Tiles of `plane` with upper-left corner `v` at `depth` that are subdivided.
    pub fn tiles_cornered_at(&self, v: VertexId, plane: PlaneId, depth: u32) -> &[TileId] {
        self.by_corner.get(&(plane, v, depth)).map(|x| x.as_slice()).unwrap_or(&[])
    }

    /// Chain membership of `v` in `plane`, if it is a top or left midpoint.
    pub fn membership(&self, v: VertexId, plane: PlaneId) -> Option<Membership> {
        let role = self.c.vertices[v as usize].role_in(plane)?;
        let tile = match role {
            Role::EdgeMid { tile, side: Side::Top | Side::Left } => tile,
            Role::SideMid { a, b, .. } => {
                if matches!(a.1, Side::Top | Side::Left) {
                    a.0
                } else if matches!(b.1, Side::Top | Side::Left) {
                    b.0
                } else {
                    return None;
                }
            }
            _ => return None,
        };
        let t = self.c.tile(tile);
        let center = t.corner(Corner::UL);
        let level = t.depth as i64 - self.owning_depth(center, plane)? - 1;
        Some(Membership { center, level: u32::try_from(level).ok()?, tile })
    }

    /// Members of the chain of `center` at `level` in `plane`, ordered clockwise.
    pub fn chain(&self, center: VertexId, plane: PlaneId, level: u32) -> Option<ChainMembers> {
        let depth = self.owning_depth(center, plane)? + level as i64 + 1;
        let tiles = self.tiles_cornered_at(center, plane, u32::try_from(depth).ok()?);
        if tiles.is_empty() {
            return None;
        }
        let mut found: Vec<(VertexId, VertexId)> = Vec::new();
        for &t in tiles {
            let tile = self.c.tile(t);
            for side in [Side::Top, Side::Left] {
                let m = tile.mid(side).unwrap();
                if !found.iter().any(|(x, _)| *x == m) {
                    found.push((m, self.c.first_edge_along(t, side, Corner::UL)));
                }
            }
        }
        let rot = self.rotation(center, plane);
        let pos = |n: VertexId| rot.order.iter().position(|&x| x == n).expect("exit edge in rotation");
        found.sort_by_key(|&(_, n)| pos(n));
        let members =
            found.into_iter().map(|(m, n)| (m, self.role_name(center, plane, n), n)).collect();
        Some(ChainMembers { center, plane, level, members, cyclic: !rot.boundary })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{BuildConfig, PASTING_RULE};

    fn grow(n: u32) -> Complex {
        Complex::grow(n, BuildConfig::default(), &PASTING_RULE).unwrap()
    }

    #[test]
    fn rotation_covers_every_plane_neighbor() {
        let c = grow(3);
        let geo = LocalGeometry::new(&c);
        for v in &c.vertices {
            let rot = geo.rotation(v.id, v.plane);
            let in_plane = c.incident(v.id).iter().filter(|&&e| c.edge(e).plane == v.plane).count();
            assert_eq!(rot.order.len(), in_plane, "vertex {}", v.id);
            let interior = !matches!(v.base_role(), Role::Corner { .. } | Role::EdgeMid { .. });
            assert_eq!(rot.boundary, !interior, "vertex {}", v.id);
        }
    }

    #[test]
    fn corners_sit_above_their_tile() {
        let c = grow(2);
        let geo = LocalGeometry::new(&c);
        let root = c.tile(c.planes[0].root);
        assert_eq!(geo.owning_depth(root.corner(Corner::UL), 0), Some(-1));
    }

    #[test]
    fn members_belong_to_their_own_chain() {
        let c = grow(5);
        let geo = LocalGeometry::new(&c);
        let mut found = 0;
        for v in &c.vertices {
            let Some(m) = geo.membership(v.id, v.plane) else { continue };
            let ch = geo.chain(m.center, v.plane, m.level).expect("member implies chain");
            assert!(ch.members.iter().any(|&(x, _, _)| x == v.id));
            let names: HashSet<EdgeName> = ch.members.iter().map(|&(_, p, _)| p).collect();
            assert_eq!(names.len(), ch.members.len(), "pointers are distinct");
            found += 1;
        }
        assert!(found > 0);
    }
}
