//! Node functions on labeled complexes: chain lookups, pointers, the functions
//! recovering neighbor data from a vertex's letter, corner edge codes and the
//! edges and information around a pasting core.

use crate::chains::LocalGeometry;
use crate::complex::{Complex, Line, PlaneId, Role, TileId, VertexId};
use crate::error::{Error, Result};
use crate::geometry::{Corner, Inner, Side};
use crate::labels::{role_mark, Alphabet, BossDesc, BossType, ChainEnv, Info, Labeling, VEnv, VType};
use crate::names::{EdgeLetter, EdgeName};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// One chain with its members and environment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub center: VertexId,
    pub plane: PlaneId,
    pub level: u32,
    /// Members in clockwise order with their pointers.
    pub members: Vec<(VertexId, EdgeName)>,
    pub cyclic: bool,
    pub env: ChainEnv,
}

/// The chain containing `v` in `plane`, if any.
pub fn chain_of(geo: &LocalGeometry<'_>, v: VertexId, plane: PlaneId) -> Option<Chain> {
    let m = geo.membership(v, plane)?;
    chain_at(geo, m.center, plane, m.level)
}

/// The chain of `center` at `level` in `plane`.
pub fn chain_at(geo: &LocalGeometry<'_>, center: VertexId, plane: PlaneId, level: u32) -> Option<Chain> {
    let c = geo.c;
    let ch = geo.chain(center, plane, level)?;
    let env = ChainEnv(
        ch.members
            .iter()
            .map(|&(x, _, _)| role_mark(c, c.vertices[x as usize].role_in(plane).unwrap()))
            .collect(),
    );
    Some(Chain {
        center,
        plane,
        level,
        members: ch.members.iter().map(|&(x, p, _)| (x, p)).collect(),
        cyclic: ch.cyclic,
        env,
    })
}

/// Pointer of a chain member: the center's exit edge it sits on.
pub fn pointer_of(geo: &LocalGeometry<'_>, member: VertexId, plane: PlaneId) -> Result<EdgeName> {
    let ch = chain_of(geo, member, plane).ok_or(Error::NotInChain(member))?;
    Ok(ch.members.iter().find(|(x, _)| *x == member).unwrap().1)
}

/// Names of the node functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NodeFunction {
    TopFromCorner,
    RightCorner,
    TopRightType,
    BottomLeftType,
    LevelPlus,
    BottomRightTypeFromRight,
    TopFromRight,
    Next,
    Prev,
    BottomRightType,
    RightFromB,
}

impl NodeFunction {
    pub const ALL: [NodeFunction; 11] = [
        NodeFunction::TopFromCorner,
        NodeFunction::RightCorner,
        NodeFunction::TopRightType,
        NodeFunction::BottomLeftType,
        NodeFunction::LevelPlus,
        NodeFunction::BottomRightTypeFromRight,
        NodeFunction::TopFromRight,
        NodeFunction::Next,
        NodeFunction::Prev,
        NodeFunction::BottomRightType,
        NodeFunction::RightFromB,
    ];

    /// True for functions evaluated at chain members rather than at macrotiles.
    pub fn on_members(self) -> bool {
        matches!(self, NodeFunction::LevelPlus | NodeFunction::Next | NodeFunction::Prev)
    }

    /// True when the information of the site vertex is an argument.
    pub fn takes_info(self) -> bool {
        matches!(
            self,
            NodeFunction::BottomRightTypeFromRight
                | NodeFunction::TopFromRight
                | NodeFunction::BottomRightType
                | NodeFunction::RightFromB
        )
    }
}

impl fmt::Display for NodeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for NodeFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<NodeFunction> {
        NodeFunction::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown node function `{s}`")))
    }
}

/// Hashable form of a function's arguments.
pub type ArgKey = (VType, u32, Option<EdgeName>, Option<u32>);

/// Where a node function is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeSite {
    /// A subdivided macrotile; the site vertex is derived from the function.
    Tile(TileId),
    /// A chain member in a plane.
    Member { vertex: VertexId, plane: PlaneId },
}

/// Declared arguments of a node function at a site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NodeArgs {
    pub vertex: VertexId,
    pub vtype: VType,
    pub env: u32,
    /// Exit edge along the bottom side, for the corner functions.
    pub edge: Option<EdgeName>,
    pub info: Option<u32>,
}

impl NodeArgs {
    /// The letter-level part of the arguments, without the vertex id.
    pub fn key(&self) -> ArgKey {
        (self.vtype, self.env, self.edge, self.info)
    }
}

/// Value of a node function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeValue {
    /// An environment id.
    Env(u32),
    /// A vertex type, with the internal edge index for side vertices.
    Type(VType, Option<u8>),
}

/// Result of evaluating a node function at a site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Value { args: NodeArgs, value: NodeValue },
    NotApplicable,
}

/// Labeled complex with its local geometry, as needed by the node functions.
pub struct NodeContext<'a> {
    pub geo: &'a LocalGeometry<'a>,
    pub lab: &'a Labeling,
}

impl<'a> NodeContext<'a> {
    pub fn new(geo: &'a LocalGeometry<'a>, lab: &'a Labeling) -> Self {
        NodeContext { geo, lab }
    }

    fn c(&self) -> &'a Complex {
        self.geo.c
    }

    fn args(&self, v: VertexId, plane: PlaneId, edge: Option<EdgeName>, info: bool) -> Option<NodeArgs> {
        let d = self.lab.desc_in(v, plane)?;
        Some(NodeArgs {
            vertex: v,
            vtype: d.vtype,
            env: d.env,
            edge,
            info: info.then(|| self.lab.info[v as usize]),
        })
    }

    fn env_value(&self, v: VertexId, plane: PlaneId) -> Option<NodeValue> {
        self.lab.desc_in(v, plane).map(|d| NodeValue::Env(d.env))
    }

    fn type_value(&self, v: VertexId, plane: PlaneId) -> Option<NodeValue> {
        let role = self.c().vertices[v as usize].role_in(plane)?;
        let index = match role {
            Role::SideMid { line: Line::Internal { index, .. }, .. } => Some(index),
            _ => None,
        };
        Some(NodeValue::Type(VType::of_role(role), index))
    }

    /// Evaluate `f` at `site`, interning new chain environments into `alpha`.
    pub fn eval(&self, f: NodeFunction, site: NodeSite, alpha: &mut Alphabet) -> Result<Outcome> {
        let c = self.c();
        let out = match (f.on_members(), site) {
            (false, NodeSite::Tile(t)) => {
                if t as usize >= c.tiles.len() {
                    return Err(Error::Malformed(format!("tile {t} not found")));
                }
                self.eval_tile(f, t)
            }
            (true, NodeSite::Member { vertex, plane }) => {
                c.vertex(vertex)?;
                self.eval_member(f, vertex, plane, alpha)
            }
            _ => None,
        };
        Ok(match out {
            Some((args, value)) => Outcome::Value { args, value },
            None => Outcome::NotApplicable,
        })
    }

    fn eval_tile(&self, f: NodeFunction, t: TileId) -> Option<(NodeArgs, NodeValue)> {
        let c = self.c();
        let tile = c.tile(t);
        tile.split.as_ref()?;
        let p = tile.plane;
        let info = f.takes_info();
        match f {
            NodeFunction::TopFromCorner | NodeFunction::RightCorner => {
                let x = tile.corner(Corner::DL);
                let w = c.first_edge_along(t, Side::Bottom, Corner::DL);
                let edge = self.geo.role_name(x, p, w);
                let args = self.args(x, p, Some(edge), false)?;
                let target = if f == NodeFunction::TopFromCorner {
                    tile.mid(Side::Top)?
                } else {
                    tile.corner(Corner::DR)
                };
                Some((args, self.env_value(target, p)?))
            }
            NodeFunction::TopRightType | NodeFunction::BottomLeftType | NodeFunction::BottomRightType => {
                let x = tile.mid(Side::Top)?;
                let args = self.args(x, p, None, info)?;
                let corner = match f {
                    NodeFunction::TopRightType => Corner::UR,
                    NodeFunction::BottomLeftType => Corner::DL,
                    _ => Corner::DR,
                };
                Some((args, self.type_value(tile.corner(corner), p)?))
            }
            NodeFunction::BottomRightTypeFromRight | NodeFunction::TopFromRight => {
                let x = tile.mid(Side::Right)?;
                let args = self.args(x, p, None, info)?;
                let value = if f == NodeFunction::TopFromRight {
                    self.env_value(tile.mid(Side::Top)?, p)?
                } else {
                    self.type_value(tile.corner(Corner::DR), p)?
                };
                Some((args, value))
            }
            NodeFunction::RightFromB => {
                let x = tile.inner(Inner::B)?;
                let args = self.args(x, p, None, info)?;
                Some((args, self.env_value(tile.mid(Side::Right)?, p)?))
            }
            _ => None,
        }
    }

    fn eval_member(
        &self,
        f: NodeFunction,
        v: VertexId,
        plane: PlaneId,
        alpha: &mut Alphabet,
    ) -> Option<(NodeArgs, NodeValue)> {
        let m = self.geo.membership(v, plane)?;
        let args = self.args(v, plane, None, false)?;
        let chain = chain_at(self.geo, m.center, plane, m.level)?;
        let i = chain.members.iter().position(|(x, _)| *x == v)?;
        match f {
            NodeFunction::LevelPlus => {
                let pointer = chain.members[i].1;
                let up = chain_at(self.geo, m.center, plane, m.level + 1)?;
                if !up.members.iter().any(|(_, p)| *p == pointer) {
                    return None;
                }
                let id = alpha.chains.intern(&up.env);
                let env = alpha.envs.intern(&VEnv::Chain { chain: id, pointer });
                Some((args, NodeValue::Env(env)))
            }
            NodeFunction::Next | NodeFunction::Prev => {
                let n = chain.members.len();
                let j = if f == NodeFunction::Next {
                    if i + 1 < n {
                        i + 1
                    } else if chain.cyclic {
                        0
                    } else {
                        return None;
                    }
                } else if i > 0 {
                    i - 1
                } else if chain.cyclic {
                    n - 1
                } else {
                    return None;
                };
                if j == i {
                    return None;
                }
                Some((args, self.env_value(chain.members[j].0, plane)?))
            }
            _ => None,
        }
    }

    /// Every site where `f` may apply.
    pub fn sites(&self, f: NodeFunction) -> Vec<NodeSite> {
        let c = self.c();
        if f.on_members() {
            let mut out = Vec::new();
            for v in &c.vertices {
                for &(p, _) in &v.roles {
                    if self.geo.membership(v.id, p).is_some() {
                        out.push(NodeSite::Member { vertex: v.id, plane: p });
                    }
                }
            }
            out
        } else {
            c.tiles.iter().filter(|t| t.split.is_some()).map(|t| NodeSite::Tile(t.id)).collect()
        }
    }
}

/// Two sites with equal arguments and different values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub function: NodeFunction,
    pub first: (NodeSite, NodeArgs, NodeValue),
    pub second: (NodeSite, NodeArgs, NodeValue),
}

/// Outcome of a functionality sweep for one function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionReport {
    pub function: NodeFunction,
    pub sites: usize,
    pub applicable: usize,
    /// Distinct argument tuples seen.
    pub arguments: usize,
    pub violations: Vec<Violation>,
}

/// Accumulates argument-to-value maps across complexes.
#[derive(Default)]
pub struct FunctionalitySweep {
    seen: HashMap<(NodeFunction, ArgKey), (NodeSite, NodeArgs, NodeValue)>,
    reports: HashMap<NodeFunction, FunctionReport>,
}

impl FunctionalitySweep {
    pub fn new() -> Self {
        FunctionalitySweep::default()
    }

    /// Evaluate every function at every site of one labeled complex.
    pub fn add(&mut self, ctx: &NodeContext<'_>, alpha: &mut Alphabet) -> Result<()> {
        for f in NodeFunction::ALL {
            let report = self.reports.entry(f).or_insert_with(|| FunctionReport {
                function: f,
                sites: 0,
                applicable: 0,
                arguments: 0,
                violations: Vec::new(),
            });
            for site in ctx.sites(f) {
                report.sites += 1;
                if let Outcome::Value { args, value } = ctx.eval(f, site, alpha)? {
                    report.applicable += 1;
                    match self.seen.get(&(f, args.key())) {
                        None => {
                            report.arguments += 1;
                            self.seen.insert((f, args.key()), (site, args, value));
                        }
                        Some(prev) if prev.2 == value => {}
                        Some(prev) => report.violations.push(Violation {
                            function: f,
                            first: *prev,
                            second: (site, args, value),
                        }),
                    }
                }
            }
        }
        Ok(())
    }

    pub fn reports(&self) -> Vec<FunctionReport> {
        let mut out: Vec<FunctionReport> = self.reports.values().cloned().collect();
        out.sort_by_key(|r| r.function);
        out
    }
}

/// Corner edges of a macrotile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CornerEdge {
    /// Internal edge 7 at the lower-left corner.
    E7,
    /// Internal edge 8 at the lower-right corner.
    E8,
    /// Continuation of the left side below the lower-left corner.
    Ld,
    /// Continuation of the right side below the lower-right corner.
    Rd,
    /// Continuation of the right side above the upper-right corner.
    Ur,
    /// Continuation of the bottom side left of the lower-left corner.
    Ddl,
    /// Continuation of the bottom side right of the lower-right corner.
    Ddr,
}

impl std::str::FromStr for CornerEdge {
    type Err = Error;

    fn from_str(s: &str) -> Result<CornerEdge> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "e7" => CornerEdge::E7,
            "e8" => CornerEdge::E8,
            "ld" | "e_ld" => CornerEdge::Ld,
            "rd" | "e_rd" => CornerEdge::Rd,
            "ur" | "e_ur" => CornerEdge::Ur,
            "ddl" | "e_ddl" => CornerEdge::Ddl,
            "ddr" | "e_ddr" => CornerEdge::Ddr,
            _ => return Err(Error::Parse(format!("unknown corner edge `{s}`"))),
        })
    }
}

/// Edge at `v` on the same line as the edge toward `w`, on the other side of `v`.
fn continuation(c: &Complex, v: VertexId, w: VertexId) -> Option<VertexId> {
    let e = c.edge_between(v, w)?;
    let line = c.edge(e).line;
    c.incident(v)
        .iter()
        .copied()
        .find(|&g| g != e && c.edge(g).line == line)
        .map(|g| c.edge(g).other(v))
}

/// Letter of the named corner edge of a subdivided macrotile, as seen from the corner.
pub fn corner_edge_codes(
    c: &Complex,
    lab: &Labeling,
    tile: TileId,
    name: CornerEdge,
) -> Result<EdgeLetter> {
    if tile as usize >= c.tiles.len() {
        return Err(Error::Malformed(format!("tile {tile} not found")));
    }
    let t = c.tile(tile);
    let missing = || Error::NoCornerEdge(format!("{name:?} at tile {tile}"));
    t.split.as_ref().ok_or_else(missing)?;
    let (v, w) = match name {
        CornerEdge::E7 | CornerEdge::E8 => {
            let (corner, index) =
                if name == CornerEdge::E7 { (Corner::DL, 7) } else { (Corner::DR, 8) };
            let v = t.corner(corner);
            let line_tile = t.id;
            let w = c
                .incident(v)
                .iter()
                .map(|&e| c.edge(e))
                .find(|e| e.line == Line::Internal { tile: line_tile, index })
                .map(|e| e.other(v))
                .ok_or_else(missing)?;
            (v, w)
        }
        CornerEdge::Ld => {
            let v = t.corner(Corner::DL);
            (v, continuation(c, v, c.first_edge_along(tile, Side::Left, Corner::DL)).ok_or_else(missing)?)
        }
        CornerEdge::Rd => {
            let v = t.corner(Corner::DR);
            (v, continuation(c, v, c.first_edge_along(tile, Side::Right, Corner::DR)).ok_or_else(missing)?)
        }
        CornerEdge::Ur => {
            let v = t.corner(Corner::UR);
            (v, continuation(c, v, c.first_edge_along(tile, Side::Right, Corner::UR)).ok_or_else(missing)?)
        }
        CornerEdge::Ddl => {
            let v = t.corner(Corner::DL);
            (v, continuation(c, v, c.first_edge_along(tile, Side::Bottom, Corner::DL)).ok_or_else(missing)?)
        }
        CornerEdge::Ddr => {
            let v = t.corner(Corner::DR);
            (v, continuation(c, v, c.first_edge_along(tile, Side::Bottom, Corner::DR)).ok_or_else(missing)?)
        }
    };
    lab.edge_letter(c, v, w)
}

/// True when `v` is the core of some pasting.
pub fn is_core(c: &Complex, v: VertexId) -> bool {
    c.pastings.iter().any(|p| p.core == v)
}

/// Name at the neighbor of `core` of the base-plane edge named `edge` at `core`.
///
/// Defined only when the neighbor is a side vertex.
pub fn neighbor_name(c: &Complex, core: VertexId, edge: EdgeName) -> Result<EdgeName> {
    let plane = c.vertex(core)?.plane;
    let e = c
        .edge_named(core, plane, edge)
        .ok_or_else(|| Error::NoCornerEdge(format!("{edge} at vertex {core}")))?;
    let e = c.edge(e);
    let x = e.other(core);
    if !matches!(c.vertices[x as usize].base_role(), Role::SideMid { .. }) {
        return Err(Error::NotSideVertex(x));
    }
    Ok(e.name_at(x))
}

/// Exit edge from the predecessor and entry edge into the successor of a
/// pasting core on a path entering it by `edge_in` and leaving it by `edge_out`.
pub fn core_adjacent(
    c: &Complex,
    core: VertexId,
    edge_in: EdgeName,
    edge_out: EdgeName,
) -> Result<(EdgeName, EdgeName)> {
    c.vertex(core)?;
    if !is_core(c, core) {
        return Err(Error::NotACore(core));
    }
    Ok((neighbor_name(c, core, edge_in)?, neighbor_name(c, core, edge_out)?))
}

/// Expected neighbor name for a core of type `t` entered by `edge`, per the
/// reference exit tables. `None` when the table has no such row.
pub fn exit_table(t: VType, edge: EdgeName) -> Option<EdgeName> {
    use EdgeName::*;
    let one = Main(1);
    let two = Main(2);
    let v = match t {
        VType::A => match edge {
            Main(1) => one,
            Main(2) | Main(3) | Lu | Ld => two,
            _ => return None,
        },
        VType::B => match edge {
            Main(1) | Ru | Mid | Rd => two,
            Main(2) | Main(3) => one,
            _ => return None,
        },
        VType::C => match edge {
            Main(1) | Main(3) | Ld1 | Mid1 | D(1) => one,
            Main(2) | Main(4) | Ld2 | Mid2 | D(2) => two,
            _ => return None,
        },
        VType::Pair(..) => match edge {
            Main(1) => two,
            Main(2) => one,
            U(1) | U(3) | L(1) | L(2) | R(2) => one,
            U(2) | U(4) | L(3) | R(1) | R(3) => two,
            _ => return None,
        },
        _ => return None,
    };
    Some(v)
}

/// Information of `x`, a neighbor of pasting core `core` reached by `edge`
/// at the core, rebuilt from the macrotile owning that edge's line.
pub fn info_near_core(
    c: &Complex,
    lab: &Labeling,
    core: VertexId,
    x: VertexId,
    edge: EdgeName,
) -> Result<Info> {
    c.vertex(x)?;
    if !is_core(c, core) {
        return Err(Error::NotACore(core));
    }
    let plane = lab.base_plane(core);
    let e = c
        .edge_named(core, plane, edge)
        .ok_or_else(|| Error::NoCornerEdge(format!("{edge} at vertex {core}")))?;
    if c.edge(e).other(core) != x {
        return Err(Error::NotAdjacent(core, x));
    }
    let xp = lab.base_plane(x);
    let boss = |w: VertexId| -> Result<BossDesc> {
        let own = lab.desc_in(w, xp).ok_or(Error::PlaneNotIncident { vertex: w, plane: xp })?;
        let base = (lab.base_plane(w) != xp).then(|| lab.base(w));
        Ok(BossDesc { own, base })
    };
    let Line::Internal { tile, index } = c.edge(e).line else {
        return Ok(Info::Empty);
    };
    if !matches!(c.vertices[x as usize].base_role(), Role::SideMid { .. }) {
        return Err(Error::NotSideVertex(x));
    }
    let t = c.tile(tile);
    let u = t.mid(Side::Top).ok_or_else(|| Error::Malformed("line tile not split".into()))?;
    Ok(match crate::labels::boss_count_for_edge(index) {
        1 => Info::One(boss(u)?),
        2 => {
            let dr = boss(t.corner(Corner::DR))?;
            Info::Two(boss(u)?, BossType { own: dr.own.vtype, base: dr.base.map(|b| b.vtype) })
        }
        _ => Info::Three(boss(u)?, boss(t.corner(Corner::DL))?, boss(t.corner(Corner::DR))?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{BuildConfig, PASTING_RULE};

    fn grow(n: u32) -> Complex {
        Complex::grow(n, BuildConfig::default(), &PASTING_RULE).unwrap()
    }

    #[test]
    fn function_names_round_trip() {
        for f in NodeFunction::ALL {
            assert_eq!(f.to_string().parse::<NodeFunction>().unwrap(), f);
        }
        assert!("nope".parse::<NodeFunction>().is_err());
    }

    #[test]
    fn sweep_is_functional_at_level_three() {
        let c = grow(3);
        let geo = LocalGeometry::new(&c);
        let mut alpha = Alphabet::new();
        let lab = Labeling::with_geometry(&geo, &mut alpha);
        let mut sweep = FunctionalitySweep::new();
        sweep.add(&NodeContext::new(&geo, &lab), &mut alpha).unwrap();
        let reports = sweep.reports();
        assert_eq!(reports.len(), NodeFunction::ALL.len());
        assert!(reports.iter().all(|r| r.violations.is_empty()));
        assert!(reports.iter().any(|r| r.applicable > 0));
    }

    #[test]
    fn non_cores_are_rejected() {
        let c = grow(4);
        let v = c.vertices.iter().find(|v| !is_core(&c, v.id)).unwrap().id;
        assert!(matches!(core_adjacent(&c, v, EdgeName::Main(1), EdgeName::Main(2)), Err(Error::NotACore(_))));
    }

    #[test]
    fn cores_agree_with_exit_tables() {
        let c = grow(4);
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        let mut checked = 0;
        for p in &c.pastings {
            let t = lab.base(p.core).vtype;
            for name in [EdgeName::Main(1), EdgeName::Main(2), EdgeName::Main(3), EdgeName::Main(4)] {
                let (Some(want), Ok(got)) = (exit_table(t, name), neighbor_name(&c, p.core, name)) else { continue };
                assert_eq!(got, want, "core {} edge {name}", p.core);
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn corner_types_have_no_exit_rows() {
        for t in [VType::CUL, VType::CUR, VType::CDR, VType::CDL] {
            assert_eq!(exit_table(t, EdgeName::Main(1)), None);
        }
    }

    #[test]
    fn corner_edges_need_a_subdivided_tile() {
        let c = grow(3);
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        let root = c.planes[0].root;
        assert!(corner_edge_codes(&c, &lab, root, CornerEdge::E7).is_ok());
        let leaf = c.faces[0];
        assert!(matches!(corner_edge_codes(&c, &lab, leaf, CornerEdge::E7), Err(Error::NoCornerEdge(_))));
        assert!("e_ddl".parse::<CornerEdge>().is_ok());
        assert!("e9".parse::<CornerEdge>().is_err());
    }
}
