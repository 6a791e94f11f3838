//! Vertex coloring: types, levels, marks, environments, information, pasting
//! flags and interned vertex letters.

use crate::chains::LocalGeometry;
use crate::complex::{Complex, Line, PlaneId, Role, VertexId};
use crate::error::{Error, Result};
use crate::geometry::{Corner, Env, Inner, Side, SideLetter};
use crate::intern::Interner;
use crate::names::{EdgeLetter, EdgeName};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Vertex type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VType {
    CUL,
    CUR,
    CDR,
    CDL,
    /// Midpoint of a boundary side.
    Edge(SideLetter),
    /// Side vertex: side letter in the A-side tile, then in the B-side tile.
    Pair(SideLetter, SideLetter),
    A,
    B,
    C,
}

impl VType {
    pub fn of_role(role: Role) -> VType {
        match role {
            Role::Corner { corner, .. } => match corner {
                Corner::UL => VType::CUL,
                Corner::UR => VType::CUR,
                Corner::DR => VType::CDR,
                Corner::DL => VType::CDL,
            },
            Role::EdgeMid { side, .. } => VType::Edge(side.letter()),
            Role::SideMid { a, b, .. } => VType::Pair(a.1.letter(), b.1.letter()),
            Role::Inner { which, .. } => match which {
                Inner::A => VType::A,
                Inner::B => VType::B,
                Inner::C => VType::C,
            },
        }
    }

    /// White vertices (side and edge types) carry a level.
    pub fn is_white(self) -> bool {
        matches!(self, VType::Edge(_) | VType::Pair(..))
    }

    /// Unordered pair name used to group side types, e.g. `UL/LU`.
    pub fn group(self) -> String {
        match self {
            VType::Pair(a, b) => {
                let (x, y) = if (a, b) <= (b, a) { (a, b) } else { (b, a) };
                format!("{x}{y}/{y}{x}")
            }
            other => other.to_string(),
        }
    }
}

impl fmt::Display for VType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VType::CUL => f.write_str("CUL"),
            VType::CUR => f.write_str("CUR"),
            VType::CDR => f.write_str("CDR"),
            VType::CDL => f.write_str("CDL"),
            VType::Edge(s) => write!(f, "{s}"),
            VType::Pair(a, b) => write!(f, "{a}{b}"),
            VType::A => f.write_str("A"),
            VType::B => f.write_str("B"),
            VType::C => f.write_str("C"),
        }
    }
}

/// Mark of a vertex with respect to a plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mark {
    Single(Env),
    Pair(Env, Env),
}

/// Marks of all members of a chain, in chain order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainEnv(pub Vec<Mark>);

/// Environment of a vertex with respect to one plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VEnv {
    Mark(Mark),
    /// Chain environment id plus the member's pointer.
    Chain { chain: u32, pointer: EdgeName },
    /// Internal edge index of an RD/DR vertex.
    EdgeKind(u8),
}

/// (type, level, environment id) of a vertex in one plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RoleDesc {
    pub vtype: VType,
    pub level: Option<u8>,
    pub env: u32,
}

/// A boss seen from the plane of the vertex it serves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BossDesc {
    pub own: RoleDesc,
    /// Base-plane description when the boss lives in another base plane.
    pub base: Option<RoleDesc>,
}

/// Only the type of a boss.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BossType {
    pub own: VType,
    pub base: Option<VType>,
}

/// Information of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Info {
    Empty,
    One(BossDesc),
    Two(BossDesc, BossType),
    Three(BossDesc, BossDesc, BossDesc),
}

impl Info {
    pub fn boss_count(&self) -> usize {
        match self {
            Info::Empty => 0,
            Info::One(_) => 1,
            Info::Two(..) => 2,
            Info::Three(..) => 3,
        }
    }
}

/// Pasting flag shared by every vertex whose base plane is a pasted tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flag {
    pub core_type: VType,
    pub core_level: Option<u8>,
    pub core_env: u32,
    pub core_info: u32,
    pub e1: EdgeName,
    pub e2: EdgeName,
}

/// The letter of a vertex on a path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexLetter {
    /// One component per plane: (incoming pasted), base, (outgoing pasted).
    pub comps: Vec<RoleDesc>,
    /// Index of the base-plane component in `comps`.
    pub base_at: u8,
    pub info: u32,
    pub flag: Option<u32>,
}

/// Global dictionary of letters and letter parts.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Alphabet {
    pub chains: Interner<ChainEnv>,
    pub envs: Interner<VEnv>,
    pub infos: Interner<Info>,
    pub flags: Interner<Flag>,
    pub vertices: Interner<VertexLetter>,
    pub edges: Interner<EdgeLetter>,
}

impl Alphabet {
    pub fn new() -> Self {
        Alphabet::default()
    }

    pub fn rebuild(&mut self) {
        self.chains.rebuild();
        self.envs.rebuild();
        self.infos.rebuild();
        self.flags.rebuild();
        self.vertices.rebuild();
        self.edges.rebuild();
    }

    /// Human-readable rendering of an environment id.
    pub fn env_text(&self, id: u32) -> String {
        match self.envs.resolve(id) {
            VEnv::Mark(m) => mark_text(m),
            VEnv::Chain { chain, pointer } => {
                let marks: Vec<String> = self.chains.resolve(*chain).0.iter().map(mark_text).collect();
                format!("chain#{chain}[{}]@{pointer}", marks.join(" "))
            }
            VEnv::EdgeKind(k) => format!("edge{k}"),
        }
    }

    pub fn role_text(&self, r: &RoleDesc) -> String {
        match r.level {
            Some(l) => format!("{},{},env#{}", r.vtype, l, r.env),
            None => format!("{},-,env#{}", r.vtype, r.env),
        }
    }

    /// `Y:<...>` rendering of a vertex letter.
    pub fn vertex_text(&self, id: u32) -> String {
        let l = self.vertices.resolve(id);
        let comps: Vec<String> = l.comps.iter().map(|r| self.role_text(r)).collect();
        let flag = l.flag.map(|f| format!("flag#{f}")).unwrap_or_else(|| "-".into());
        format!("<{};info#{};{}>", comps.join("|"), l.info, flag)
    }
}

pub fn mark_text(m: &Mark) -> String {
    match m {
        Mark::Single(e) => e.to_string(),
        Mark::Pair(a, b) => format!("{a}/{b}"),
    }
}

/// Colors of all vertices of one complex.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// Per vertex: description in each incident plane, base first.
    pub roles: Vec<Vec<(PlaneId, RoleDesc)>>,
    pub info: Vec<u32>,
    pub flag: Vec<Option<u32>>,
    /// Number of subdivision steps of the labeled complex.
    pub step: u32,
}

/// Level of a white vertex created at `created` in a complex after `step` steps.
pub fn level_of(created: u32, step: u32) -> u8 {
    (step + 1 - created).min(3) as u8
}

impl Labeling {
    /// Compute the coloring of `c`, interning new parts into `alpha`.
    pub fn new(c: &Complex, alpha: &mut Alphabet) -> Labeling {
        let geo = LocalGeometry::new(c);
        Labeling::with_geometry(&geo, alpha)
    }

    pub fn with_geometry(geo: &LocalGeometry<'_>, alpha: &mut Alphabet) -> Labeling {
        let c = geo.c;
        let mut chain_cache = ChainCache::new();
        let mut roles = Vec::with_capacity(c.vertices.len());
        for v in &c.vertices {
            let mut descs = Vec::with_capacity(v.roles.len());
            for &(plane, role) in &v.roles {
                let vtype = VType::of_role(role);
                let level = vtype.is_white().then(|| level_of(v.created, c.step));
                let venv = role_env(geo, alpha, &mut chain_cache, v.id, plane, role);
                let env = alpha.envs.intern(&venv);
                descs.push((plane, RoleDesc { vtype, level, env }));
            }
            roles.push(descs);
        }
        let mut lab = Labeling { roles, info: Vec::new(), flag: Vec::new(), step: c.step };
        let infos: Vec<Info> = c.vertices.iter().map(|v| lab.compute_info(c, v.id)).collect();
        lab.info = infos.iter().map(|i| alpha.infos.intern(i)).collect();
        lab.flag = c
            .vertices
            .iter()
            .map(|v| {
                let p = &c.planes[v.plane as usize];
                p.pasting.map(|i| {
                    let rec = &c.pastings[i];
                    let core = lab.base(rec.core);
                    let flag = Flag {
                        core_type: core.vtype,
                        core_level: core.level,
                        core_env: core.env,
                        core_info: lab.info[rec.core as usize],
                        e1: rec.e1,
                        e2: rec.e2,
                    };
                    alpha.flags.intern(&flag)
                })
            })
            .collect();
        lab
    }

    pub fn base(&self, v: VertexId) -> RoleDesc {
        self.roles[v as usize][0].1
    }

    pub fn base_plane(&self, v: VertexId) -> PlaneId {
        self.roles[v as usize][0].0
    }

    pub fn desc_in(&self, v: VertexId, plane: PlaneId) -> Option<RoleDesc> {
        self.roles[v as usize].iter().find(|(p, _)| *p == plane).map(|(_, d)| *d)
    }

    fn boss(&self, w: VertexId, plane: PlaneId) -> BossDesc {
        let own = self.desc_in(w, plane).expect("boss lies in the observing plane");
        let base = (self.base_plane(w) != plane).then(|| self.base(w));
        BossDesc { own, base }
    }

    fn boss_type(&self, w: VertexId, plane: PlaneId) -> BossType {
        let b = self.boss(w, plane);
        BossType { own: b.own.vtype, base: b.base.map(|r| r.vtype) }
    }

    /// Bosses of `v`: the vertices whose data forms its information.
    pub fn bosses(c: &Complex, v: VertexId) -> Vec<VertexId> {
        let vx = &c.vertices[v as usize];
        let from_tile = |tile: u32, count: usize| -> Vec<VertexId> {
            let t = c.tile(tile);
            let u = t.mid(Side::Top).expect("boss tile is subdivided");
            match count {
                1 => vec![u],
                2 => vec![u, t.corner(Corner::DR)],
                _ => vec![u, t.corner(Corner::DL), t.corner(Corner::DR)],
            }
        };
        match vx.base_role() {
            Role::Inner { tile, which } => from_tile(tile, which as usize + 1),
            Role::SideMid { line: Line::Internal { tile, index }, .. } => {
                from_tile(tile, boss_count_for_edge(index))
            }
            Role::Corner { tile, corner: Corner::DR } => vec![c.tile(tile).corner(Corner::DL)],
            _ => Vec::new(),
        }
    }

    fn compute_info(&self, c: &Complex, v: VertexId) -> Info {
        let plane = self.base_plane(v);
        let bosses = Labeling::bosses(c, v);
        let vx = &c.vertices[v as usize];
        let two = match vx.base_role() {
            Role::Inner { which, .. } => which == Inner::B,
            Role::SideMid { line: Line::Internal { index, .. }, .. } => {
                boss_count_for_edge(index) == 2
            }
            _ => false,
        };
        match bosses.as_slice() {
            [] => Info::Empty,
            [u] => Info::One(self.boss(*u, plane)),
            [u, dr] if two => Info::Two(self.boss(*u, plane), self.boss_type(*dr, plane)),
            [u, dl, dr] => {
                Info::Three(self.boss(*u, plane), self.boss(*dl, plane), self.boss(*dr, plane))
            }
            _ => unreachable!("boss count"),
        }
    }

    /// Letter of `v` entered from `in_plane` and left into `out_plane`.
    pub fn vertex_letter(
        &self,
        v: VertexId,
        in_plane: Option<PlaneId>,
        out_plane: Option<PlaneId>,
    ) -> Result<VertexLetter> {
        let base = self.base_plane(v);
        let mut comps = Vec::with_capacity(3);
        let side = |p: PlaneId| {
            self.desc_in(v, p).ok_or(Error::PlaneNotIncident { vertex: v, plane: p })
        };
        if let Some(p) = in_plane.filter(|&p| p != base) {
            comps.push(side(p)?);
        }
        let base_at = comps.len() as u8;
        comps.push(self.base(v));
        if let Some(p) = out_plane.filter(|&p| p != base) {
            comps.push(side(p)?);
        }
        Ok(VertexLetter { comps, base_at, info: self.info[v as usize], flag: self.flag[v as usize] })
    }

    /// Letter of edge `v`–`w` as seen from `v`.
    pub fn edge_letter(&self, c: &Complex, v: VertexId, w: VertexId) -> Result<EdgeLetter> {
        let e = c.edge_between(v, w).ok_or(Error::NotAdjacent(v, w))?;
        let e = c.edge(e);
        Ok(EdgeLetter { name: e.name_at(v), hat: e.plane != self.base_plane(v) })
    }
}

/// Number of bosses of a side vertex on internal edge `index`.
pub fn boss_count_for_edge(index: u8) -> usize {
    match index {
        1 | 3 | 4 => 1,
        2 | 5 | 6 => 2,
        _ => 3,
    }
}

/// Mark of a role.
pub fn role_mark(c: &Complex, role: Role) -> Mark {
    match role {
        Role::Corner { tile, .. } | Role::EdgeMid { tile, .. } | Role::Inner { tile, .. } => {
            Mark::Single(c.tile(tile).env)
        }
        Role::SideMid { a, b, .. } => Mark::Pair(c.tile(a.0).env, c.tile(b.0).env),
    }
}

type ChainCache = HashMap<(PlaneId, VertexId, u32), (u32, HashMap<VertexId, EdgeName>)>;

fn role_env(
    geo: &LocalGeometry<'_>,
    alpha: &mut Alphabet,
    cache: &mut ChainCache,
    v: VertexId,
    plane: PlaneId,
    role: Role,
) -> VEnv {
    let c = geo.c;
    if let Some(m) = geo.membership(v, plane) {
        let key = (plane, m.center, m.level);
        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
            let members = geo.chain(m.center, plane, m.level).expect("member implies chain");
            let marks: Vec<Mark> = members
                .members
                .iter()
                .map(|&(x, _, _)| role_mark(c, c.vertices[x as usize].role_in(plane).unwrap()))
                .collect();
            let id = alpha.chains.intern(&ChainEnv(marks));
            let pointers = members.members.iter().map(|&(x, p, _)| (x, p)).collect();
            e.insert((id, pointers));
        }
        let (chain, pointers) = &cache[&key];
        return VEnv::Chain { chain: *chain, pointer: pointers[&v] };
    }
    match role {
        Role::SideMid { line: Line::Internal { index, .. }, a, b }
            if matches!(a.1, Side::Right | Side::Bottom) && matches!(b.1, Side::Right | Side::Bottom) =>
        {
            VEnv::EdgeKind(index)
        }
        _ => VEnv::Mark(role_mark(c, role)),
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
    fn levels_saturate_at_three() {
        assert_eq!(level_of(3, 3), 1);
        assert_eq!(level_of(2, 3), 2);
        assert_eq!(level_of(0, 5), 3);
    }

    #[test]
    fn pair_groups_ignore_order() {
        let a = VType::Pair(SideLetter::U, SideLetter::L);
        let b = VType::Pair(SideLetter::L, SideLetter::U);
        assert_eq!(a.group(), b.group());
        assert_ne!(a.to_string(), b.to_string());
        assert_eq!(VType::C.group(), "C");
        assert!(a.is_white() && !VType::A.is_white());
    }

    #[test]
    fn only_white_vertices_carry_levels() {
        let c = grow(4);
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        for v in &c.vertices {
            for (p, d) in &lab.roles[v.id as usize] {
                assert_eq!(d.level.is_some(), d.vtype.is_white(), "vertex {} plane {p}", v.id);
            }
            assert_eq!(lab.base_plane(v.id), v.plane);
        }
    }

    #[test]
    fn flags_mark_pasted_planes_only() {
        let c = grow(4);
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        for v in &c.vertices {
            assert_eq!(lab.flag[v.id as usize].is_some(), v.plane != 0, "vertex {}", v.id);
        }
    }

    #[test]
    fn labeling_is_deterministic() {
        let c = grow(4);
        let (mut a1, mut a2) = (Alphabet::new(), Alphabet::new());
        let l1 = Labeling::new(&c, &mut a1);
        let l2 = Labeling::new(&c, &mut a2);
        assert_eq!(l1.roles, l2.roles);
        assert_eq!(l1.info, l2.info);
        assert_eq!(l1.flag, l2.flag);
    }

    #[test]
    fn base_edges_are_not_hatted() {
        let c = grow(4);
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        for e in &c.edges {
            let [a, b] = e.ends;
            let l = lab.edge_letter(&c, a, b).unwrap();
            assert_eq!(l.hat, e.plane != c.vertices[a as usize].plane);
            assert_eq!(l.name, e.name_at(a));
        }
    }

    #[test]
    fn vertex_letters_put_the_base_between_contexts() {
        let c = grow(4);
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        let v = c.vertices.iter().find(|v| v.roles.len() > 1).expect("some vertex has a pasted role");
        let other = v.roles[1].0;
        let l = lab.vertex_letter(v.id, Some(other), None).unwrap();
        assert_eq!((l.comps.len(), l.base_at), (2, 1));
        assert!(lab.vertex_letter(v.id, Some(9999), None).is_err());
    }
}
