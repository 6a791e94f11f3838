//! The complex family: base square, subdivision, pasting and growth to a level.

use crate::error::{Error, Result};
use crate::geometry::{
    child_envs, side_descent, Corner, EdgeSide, EdgeType, Env, Inner, Point, Position, Side,
    INTERNAL_EDGES, SUBDIVISION_TABLE,
};
use crate::names::{edge7_corner_name, edge8_corner_name, EdgeName};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

pub type VertexId = u32;
pub type TileId = u32;
pub type PlaneId = u32;
pub type EdgeId = u32;

/// Default cap on the level reachable through [`grow_to_level`].
pub const DEFAULT_LEVEL_CAP: u32 = 5;
/// Default cap on the number of faces.
pub const DEFAULT_FACE_CAP: usize = 1_000_000;

/// Role of a vertex with respect to one plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    /// Corner of the plane's root macrotile.
    Corner { tile: TileId, corner: Corner },
    /// Midpoint of a macrotile side lying on the plane's boundary.
    EdgeMid { tile: TileId, side: Side },
    /// Midpoint of an internal edge, between the A-side and the B-side macrotiles.
    SideMid { a: (TileId, Side), b: (TileId, Side), line: Line },
    /// Internal vertex created inside `tile`.
    Inner { tile: TileId, which: Inner },
}

/// Maximal straight segment an edge lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Line {
    /// A side of a plane's root macrotile.
    Boundary { root: TileId, side: Side },
    /// Internal edge `index` of macrotile `tile`.
    Internal { tile: TileId, index: u8 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    /// Base plane.
    pub plane: PlaneId,
    /// Subdivision step that created the vertex (0 for the base corners).
    pub created: u32,
    /// Roles per plane; the first entry is the base plane.
    pub roles: Vec<(PlaneId, Role)>,
}

impl Vertex {
    pub fn base_role(&self) -> Role {
        self.roles[0].1
    }

    pub fn role_in(&self, plane: PlaneId) -> Option<Role> {
        self.roles.iter().find(|(p, _)| *p == plane).map(|(_, r)| *r)
    }
}

/// A minimal edge; `names[i]` is the name at endpoint `ends[i]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub ends: [VertexId; 2],
    pub plane: PlaneId,
    pub line: Line,
    pub names: [EdgeName; 2],
}

impl Edge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }

    pub fn name_at(&self, v: VertexId) -> EdgeName {
        if self.ends[0] == v {
            self.names[0]
        } else {
            self.names[1]
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Split {
    /// Children in [`Position::CHILDREN`] order.
    pub children: [TileId; 6],
    /// Side midpoints indexed by [`Side::index`].
    pub mids: [VertexId; 4],
    /// Internal vertices A, B, C.
    pub inner: [VertexId; 3],
}

/// Node of a macrotile tree; leaves are the faces of the complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Tile {
    pub id: TileId,
    pub plane: PlaneId,
    pub parent: Option<TileId>,
    pub position: Position,
    pub depth: u32,
    pub env: Env,
    /// Corners in (UL, UR, DR, DL) order.
    pub corners: [VertexId; 4],
    pub split: Option<Split>,
}

impl Tile {
    pub fn corner(&self, c: Corner) -> VertexId {
        self.corners[c.index()]
    }

    pub fn mid(&self, s: Side) -> Option<VertexId> {
        self.split.as_ref().map(|sp| sp.mids[s.index()])
    }

    pub fn inner(&self, i: Inner) -> Option<VertexId> {
        self.split.as_ref().map(|sp| sp.inner[i as usize])
    }

    pub fn child(&self, p: Position) -> Option<TileId> {
        let i = p.child_index()?;
        self.split.as_ref().map(|sp| sp.children[i])
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Plane {
    pub id: PlaneId,
    pub root: TileId,
    /// Plane carrying the glue path, for pasted planes.
    pub host: Option<PlaneId>,
    /// Index into [`Complex::pastings`], for pasted planes.
    pub pasting: Option<usize>,
    /// Step at which the plane appeared.
    pub created: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PastingRecord {
    pub core: VertexId,
    /// Name at the core of the edge running along the pasted tile's top side.
    pub e1: EdgeName,
    /// Name at the core of the edge running along the pasted tile's left side.
    pub e2: EdgeName,
    pub tile: TileId,
    pub plane: PlaneId,
    pub step: u32,
}

/// A face of the complex as reported by [`Complex::minimal_squares`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub tile: TileId,
    pub corners: [VertexId; 4],
    pub position: Position,
    /// Parent macrotile, absent for an undivided root.
    pub macrotile: Option<TileId>,
    pub plane: PlaneId,
}

/// Whether pastings also happen inside pasted planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum PastingMode {
    BaseOnly,
    #[default]
    Recursive,
}

impl std::str::FromStr for PastingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base-only" => Ok(PastingMode::BaseOnly),
            "recursive" => Ok(PastingMode::Recursive),
            _ => Err(Error::Parse(format!("unknown pasting mode `{s}`"))),
        }
    }
}

/// A pasting requested by a rule: core vertex plus the two exit edge names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PastingSite {
    pub core: VertexId,
    pub e1: EdgeName,
    pub e2: EdgeName,
}

/// Decides which vertices receive a pasted macrotile after a subdivision step.
pub trait PastingRule: Send + Sync {
    fn select(&self, c: &Complex, mode: PastingMode) -> Vec<PastingSite>;
}

/// Every internal vertex gets one pasted tile two steps after its creation,
/// glued along its first and last main edges.
#[derive(Clone, Copy, Debug, Default)]
pub struct InnerCoreRule;

/// The rule used when none is supplied.
pub const PASTING_RULE: InnerCoreRule = InnerCoreRule;

impl PastingRule for InnerCoreRule {
    fn select(&self, c: &Complex, mode: PastingMode) -> Vec<PastingSite> {
        if c.step < 3 {
            return Vec::new();
        }
        c.vertices
            .iter()
            .filter(|v| v.created == c.step - 2)
            .filter(|v| mode == PastingMode::Recursive || v.plane == 0)
            .filter_map(|v| match v.base_role() {
                Role::Inner { which, .. } => {
                    let last = if which == Inner::C { 4 } else { 3 };
                    Some(PastingSite { core: v.id, e1: EdgeName::Main(1), e2: EdgeName::Main(last) })
                }
                _ => None,
            })
            .collect()
    }
}

/// Never pastes, so complexes stay flat subdivisions of the base square.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoPasting;

impl PastingRule for NoPasting {
    fn select(&self, _: &Complex, _: PastingMode) -> Vec<PastingSite> {
        Vec::new()
    }
}

/// Build options.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildConfig {
    pub pasting_mode: PastingMode,
    pub level_cap: u32,
    pub face_cap: usize,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            pasting_mode: PastingMode::default(),
            level_cap: DEFAULT_LEVEL_CAP,
            face_cap: DEFAULT_FACE_CAP,
        }
    }
}

/// A labeled complex of the family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Complex {
    pub level: u32,
    /// Number of subdivision steps applied.
    pub step: u32,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub tiles: Vec<Tile>,
    pub planes: Vec<Plane>,
    pub pastings: Vec<PastingRecord>,
    /// Current faces (leaf tiles), sorted by (plane, id).
    pub faces: Vec<TileId>,
    pub config: BuildConfig,
    #[serde(skip)]
    index: HashMap<(VertexId, VertexId), EdgeId>,
    #[serde(skip)]
    incident: Vec<Vec<EdgeId>>,
}

fn key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The level-1 complex: one square.
pub fn new_base_complex() -> Complex {
    Complex::new(BuildConfig::default())
}

/// Subdivide every face once.
pub fn subdivide(mut c: Complex) -> Result<Complex> {
    c.subdivide()?;
    Ok(c)
}

/// Apply the default pasting rule.
pub fn apply_pastings(mut c: Complex) -> Result<Complex> {
    c.apply_pastings(&PASTING_RULE)?;
    Ok(c)
}

/// Grow the level-`n` complex with the default configuration.
pub fn grow_to_level(n: u32) -> Result<Complex> {
    Complex::grow(n, BuildConfig::default(), &PASTING_RULE)
}

impl Complex {
    pub fn new(config: BuildConfig) -> Complex {
        let mut c = Complex {
            level: 1,
            step: 0,
            vertices: Vec::new(),
            edges: Vec::new(),
            tiles: Vec::new(),
            planes: Vec::new(),
            pastings: Vec::new(),
            faces: Vec::new(),
            config,
            index: HashMap::new(),
            incident: Vec::new(),
        };
        let root = 0;
        let corners: Vec<VertexId> = Corner::ALL
            .iter()
            .map(|&corner| c.add_vertex(0, Role::Corner { tile: root, corner }))
            .collect();
        let corners = [corners[0], corners[1], corners[2], corners[3]];
        c.tiles.push(Tile {
            id: root,
            plane: 0,
            parent: None,
            position: Position::Root,
            depth: 0,
            env: Env::ROOT,
            corners,
            split: None,
        });
        for side in [Side::Top, Side::Right, Side::Bottom, Side::Left] {
            let (s, e) = side.ends();
            c.edges.push(Edge {
                ends: [corners[s.index()], corners[e.index()]],
                plane: 0,
                line: Line::Boundary { root, side },
                names: [EdgeName::Main(1), EdgeName::Main(2)],
            });
        }
        c.planes.push(Plane { id: 0, root, host: None, pasting: None, created: 0 });
        c.faces.push(root);
        c.reindex();
        c
    }

    /// Grow to level `n` (n−1 rounds of subdivision followed by pasting).
    pub fn grow(n: u32, config: BuildConfig, rule: &dyn PastingRule) -> Result<Complex> {
        if n == 0 {
            return Err(Error::Malformed("level must be positive".into()));
        }
        if n > config.level_cap {
            return Err(Error::CapExceeded(format!("level {n} above cap {}", config.level_cap)));
        }
        let mut c = Complex::new(config);
        for _ in 1..n {
            c.subdivide()?;
            c.apply_pastings(rule)?;
        }
        Ok(c)
    }

    fn add_vertex(&mut self, plane: PlaneId, role: Role) -> VertexId {
        let id = self.vertices.len() as VertexId;
        self.vertices.push(Vertex { id, plane, created: self.step, roles: vec![(plane, role)] });
        id
    }

    fn add_tile(&mut self, mut t: Tile) -> TileId {
        t.id = self.tiles.len() as TileId;
        let id = t.id;
        self.tiles.push(t);
        id
    }

    fn reindex(&mut self) {
        self.index.clear();
        self.incident = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            self.index.insert(key(e.ends[0], e.ends[1]), i as EdgeId);
            self.incident[e.ends[0] as usize].push(i as EdgeId);
            self.incident[e.ends[1] as usize].push(i as EdgeId);
        }
    }

    /// Rebuild lookup tables after deserialization.
    pub fn rebuild_index(&mut self) {
        self.reindex();
    }

    pub fn vertex(&self, v: VertexId) -> Result<&Vertex> {
        self.vertices.get(v as usize).ok_or(Error::VertexNotFound(v))
    }

    pub fn tile(&self, t: TileId) -> &Tile {
        &self.tiles[t as usize]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e as usize]
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.index.get(&key(a, b)).copied()
    }

    /// Edges incident to `v`, all planes.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v as usize]
    }

    /// The edge at `v` carrying `name` in plane `plane`.
    pub fn edge_named(&self, v: VertexId, plane: PlaneId, name: EdgeName) -> Option<EdgeId> {
        self.incident(v).iter().copied().find(|&e| {
            let edge = self.edge(e);
            edge.plane == plane && edge.name_at(v) == name
        })
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Subdivide every face into six.
    pub fn subdivide(&mut self) -> Result<()> {
        let projected = self.faces.len().saturating_mul(6);
        if projected > self.config.face_cap {
            return Err(Error::CapExceeded(format!(
                "{projected} faces above cap {}",
                self.config.face_cap
            )));
        }
        self.step += 1;
        self.level += 1;
        let faces = std::mem::take(&mut self.faces);
        let old_edges = std::mem::take(&mut self.edges);

        let mut sides: Vec<Vec<(TileId, Side)>> = vec![Vec::new(); old_edges.len()];
        for &f in &faces {
            for side in Side::ALL {
                let (s, e) = side.ends();
                let t = self.tile(f);
                let eid = self
                    .edge_between(t.corner(s), t.corner(e))
                    .ok_or_else(|| Error::Malformed(format!("face {f} misses its {side:?} edge")))?;
                sides[eid as usize].push((f, side));
            }
        }

        let mut mid_of: Vec<Option<VertexId>> = vec![None; old_edges.len()];
        let mut new_edges = Vec::with_capacity(old_edges.len() * 2 + faces.len() * 8);
        let mut face_mids: Vec<[VertexId; 4]> = Vec::with_capacity(faces.len());
        for &f in &faces {
            let mut mids = [0; 4];
            for side in [Side::Top, Side::Right, Side::Bottom, Side::Left] {
                let (s, e) = side.ends();
                let t = self.tile(f);
                let eid = self.edge_between(t.corner(s), t.corner(e)).unwrap() as usize;
                if mid_of[eid].is_none() {
                    let v = self.split_edge(&old_edges[eid], &sides[eid], &mut new_edges)?;
                    mid_of[eid] = Some(v);
                }
                mids[side.index()] = mid_of[eid].unwrap();
            }
            face_mids.push(mids);
        }

        let mut new_faces = Vec::with_capacity(faces.len() * 6);
        for (i, &f) in faces.iter().enumerate() {
            let children = self.split_face(f, face_mids[i], &mut new_edges);
            new_faces.extend_from_slice(&children);
        }
        new_faces.sort_by_key(|&t| (self.tile(t).plane, t));
        self.faces = new_faces;
        self.edges = new_edges;
        self.reindex();
        Ok(())
    }

    fn split_edge(
        &mut self,
        e: &Edge,
        incident: &[(TileId, Side)],
        out: &mut Vec<Edge>,
    ) -> Result<VertexId> {
        let own: Vec<(TileId, Side)> =
            incident.iter().copied().filter(|(t, _)| self.tile(*t).plane == e.plane).collect();
        let (role, toward) = match e.line {
            Line::Boundary { .. } => {
                let &[(t, side)] = own.as_slice() else {
                    return Err(Error::Malformed(format!(
                        "boundary edge {:?} bounds {} faces of its plane",
                        e.ends,
                        own.len()
                    )));
                };
                (Role::EdgeMid { tile: t, side }, self.tile(t).corner(side.ends().1))
            }
            Line::Internal { index, .. } => {
                let &[p, q] = own.as_slice() else {
                    return Err(Error::Malformed(format!(
                        "internal edge {:?} bounds {} faces of its plane",
                        e.ends,
                        own.len()
                    )));
                };
                let is_a = |(t, s): (TileId, Side)| {
                    self.tile(t).env.side(s) == EdgeType::Internal(index, EdgeSide::A)
                };
                let (a, b) = if is_a(p) { (p, q) } else { (q, p) };
                if !is_a(a) || is_a(b) {
                    return Err(Error::Malformed(format!("edge {:?} lacks an A side", e.ends)));
                }
                (Role::SideMid { a, b, line: e.line }, self.tile(a.0).corner(a.1.ends().1))
            }
        };
        let v = self.add_vertex(e.plane, role);
        for &(t, side) in incident {
            let plane = self.tile(t).plane;
            if plane != e.plane {
                self.vertices[v as usize].roles.push((plane, Role::EdgeMid { tile: t, side }));
            }
        }
        for i in 0..2 {
            let end = e.ends[i];
            let at_v = if end == toward { EdgeName::Main(1) } else { EdgeName::Main(2) };
            out.push(Edge { ends: [end, v], plane: e.plane, line: e.line, names: [e.names[i], at_v] });
        }
        Ok(v)
    }

    /// Create A, B, C, the internal edges and the six children of face `f`.
    fn split_face(&mut self, f: TileId, mids: [VertexId; 4], out: &mut Vec<Edge>) -> [TileId; 6] {
        let (plane, position, depth, env, corners, parent_pos) = {
            let t = self.tile(f);
            let pp = t.parent.map(|p| self.tile(p).position).unwrap_or(Position::Root);
            (t.plane, t.position, t.depth, t.env, t.corners, pp)
        };
        let inner = [Inner::A, Inner::B, Inner::C]
            .map(|which| self.add_vertex(plane, Role::Inner { tile: f, which }));
        self.add_internal_structure(f, plane, position, parent_pos, depth, env, corners, mids, inner, out)
    }

    #[allow(clippy::too_many_arguments)]
    fn add_internal_structure(
        &mut self,
        f: TileId,
        plane: PlaneId,
        position: Position,
        parent_pos: Position,
        depth: u32,
        env: Env,
        corners: [VertexId; 4],
        mids: [VertexId; 4],
        inner: [VertexId; 3],
        out: &mut Vec<Edge>,
    ) -> [TileId; 6] {
        let at = |p: Point| match p {
            Point::Corner(c) => corners[c.index()],
            Point::Mid(s) => mids[s.index()],
            Point::Inner(i) => inner[i as usize],
        };
        use EdgeName::*;
        let names: [(EdgeName, EdgeName); 8] = [
            (Main(1), U(2)),
            (U(1), Main(1)),
            (Main(3), L(1)),
            (Main(2), Main(1)),
            (Main(3), Main(2)),
            (R(1), Main(2)),
            (edge7_corner_name(position), Main(4)),
            (edge8_corner_name(position, parent_pos), Main(3)),
        ];
        for (k, &(p, q)) in INTERNAL_EDGES.iter().enumerate() {
            out.push(Edge {
                ends: [at(p), at(q)],
                plane,
                line: Line::Internal { tile: f, index: k as u8 + 1 },
                names: [names[k].0, names[k].1],
            });
        }
        let envs = child_envs(env);
        let mut children = [0; 6];
        for (i, spec) in SUBDIVISION_TABLE.iter().enumerate() {
            children[i] = self.add_tile(Tile {
                id: 0,
                plane,
                parent: Some(f),
                position: spec.position,
                depth: depth + 1,
                env: envs[i],
                corners: spec.corners.map(at),
                split: None,
            });
        }
        self.tiles[f as usize].split = Some(Split { children, mids, inner });
        children
    }

    /// Apply a pasting rule after a subdivision step.
    pub fn apply_pastings(&mut self, rule: &dyn PastingRule) -> Result<()> {
        let sites = rule.select(self, self.config.pasting_mode);
        for site in sites {
            self.paste(site)?;
        }
        Ok(())
    }

    /// Walk two edges from `core` along the line of its edge named `name`.
    fn glue_path(&self, core: VertexId, name: EdgeName) -> Result<(VertexId, VertexId)> {
        let missing = |reason: String| Error::MissingPastingPath { vertex: core, reason };
        let plane = self.vertex(core)?.plane;
        let e = self
            .edge_named(core, plane, name)
            .ok_or_else(|| missing(format!("no edge named {name}")))?;
        let line = self.edge(e).line;
        let v1 = self.edge(e).other(core);
        let next = self
            .incident(v1)
            .iter()
            .copied()
            .find(|&g| g != e && self.edge(g).line == line && self.edge(g).plane == plane)
            .ok_or_else(|| missing(format!("edge {name} has length 1")))?;
        Ok((v1, self.edge(next).other(v1)))
    }

    /// Glue a fresh level-2 macrotile with its upper-left corner at the core.
    pub fn paste(&mut self, site: PastingSite) -> Result<PastingRecord> {
        if site.e1 == site.e2 {
            return Err(Error::MissingPastingPath {
                vertex: site.core,
                reason: "exit edges coincide".into(),
            });
        }
        let core = site.core;
        let (v1, v2) = self.glue_path(core, site.e1)?;
        let (w1, w2) = self.glue_path(core, site.e2)?;
        let host = self.vertex(core)?.plane;
        let plane = self.planes.len() as PlaneId;
        let root = self.tiles.len() as TileId;
        let dr = self.add_vertex(plane, Role::Corner { tile: root, corner: Corner::DR });
        let r = self.add_vertex(plane, Role::EdgeMid { tile: root, side: Side::Right });
        let d = self.add_vertex(plane, Role::EdgeMid { tile: root, side: Side::Bottom });
        let inner = [Inner::A, Inner::B, Inner::C]
            .map(|which| self.add_vertex(plane, Role::Inner { tile: root, which }));
        for (v, role) in [
            (core, Role::Corner { tile: root, corner: Corner::UL }),
            (v2, Role::Corner { tile: root, corner: Corner::UR }),
            (w2, Role::Corner { tile: root, corner: Corner::DL }),
            (v1, Role::EdgeMid { tile: root, side: Side::Top }),
            (w1, Role::EdgeMid { tile: root, side: Side::Left }),
        ] {
            self.vertices[v as usize].roles.push((plane, role));
        }
        let corners = [core, v2, dr, w2];
        self.tiles.push(Tile {
            id: root,
            plane,
            parent: None,
            position: Position::Root,
            depth: 0,
            env: Env::ROOT,
            corners,
            split: None,
        });
        let mut out = Vec::new();
        let right = Line::Boundary { root, side: Side::Right };
        let bottom = Line::Boundary { root, side: Side::Bottom };
        use EdgeName::*;
        for (ends, line, names) in [
            ([v2, r], right, [R(1), Main(2)]),
            ([r, dr], right, [Main(1), Main(2)]),
            ([dr, d], bottom, [Main(1), Main(2)]),
            ([d, w2], bottom, [Main(1), Dside]),
        ] {
            out.push(Edge { ends, plane, line, names });
        }
        let mids = [w1, v1, r, d];
        let children = self.add_internal_structure(
            root,
            plane,
            Position::Root,
            Position::Root,
            0,
            Env::ROOT,
            corners,
            mids,
            inner,
            &mut out,
        );
        self.edges.extend(out);
        let rec = PastingRecord { core, e1: site.e1, e2: site.e2, tile: root, plane, step: self.step };
        self.planes.push(Plane {
            id: plane,
            root,
            host: Some(host),
            pasting: Some(self.pastings.len()),
            created: self.step,
        });
        self.pastings.push(rec.clone());
        self.faces.extend_from_slice(&children);
        self.reindex();
        Ok(rec)
    }

    /// Every face of every plane, once.
    pub fn minimal_squares(&self) -> Vec<Face> {
        self.faces
            .iter()
            .map(|&f| {
                let t = self.tile(f);
                Face {
                    tile: f,
                    corners: t.corners,
                    position: t.position,
                    macrotile: t.parent,
                    plane: t.plane,
                }
            })
            .collect()
    }

    /// BFS distance over all edges of all planes.
    pub fn geodesic_distance(&self, u: VertexId, v: VertexId) -> Result<u32> {
        self.vertex(u)?;
        self.vertex(v)?;
        let dist = self.distances_from(u);
        dist[v as usize].ok_or_else(|| Error::Malformed(format!("{v} unreachable from {u}")))
    }

    /// BFS distances from `u` to every vertex.
    pub fn distances_from(&self, u: VertexId) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[u as usize] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x as usize].unwrap();
            for &e in self.incident(x) {
                let y = self.edge(e).other(x);
                if dist[y as usize].is_none() {
                    dist[y as usize] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Neighbor of `corner` along the tile's `side`, at the finest scale.
    pub fn first_edge_along(&self, tile: TileId, side: Side, corner: Corner) -> VertexId {
        let mut t = self.tile(tile);
        let (mut side, mut corner) = (side, corner);
        while t.split.is_some() {
            let (pos, s, c) = side_descent(side, corner);
            t = self.tile(t.child(pos).unwrap());
            side = s;
            corner = c;
        }
        let (a, b) = side.ends();
        if a == corner {
            t.corner(b)
        } else {
            t.corner(a)
        }
    }

    /// The vertices of one side of a tile, from its start corner to its end corner.
    pub fn side_path(&self, tile: TileId, side: Side) -> Vec<VertexId> {
        let t = self.tile(tile);
        let (s, e) = side.ends();
        let mut path = vec![t.corner(s)];
        let end = t.corner(e);
        let line_plane = t.plane;
        let mut prev = None;
        let mut cur = t.corner(s);
        while cur != end {
            let next = match prev {
                None => self.first_edge_along(tile, side, s),
                Some(p) => self.continue_straight(p, cur, line_plane),
            };
            prev = Some(cur);
            cur = next;
            path.push(cur);
        }
        path
    }

    fn continue_straight(&self, prev: VertexId, cur: VertexId, _plane: PlaneId) -> VertexId {
        let e = self.edge_between(prev, cur).unwrap();
        let line = self.edge(e).line;
        let g = self
            .incident(cur)
            .iter()
            .copied()
            .find(|&g| g != e && self.edge(g).line == line)
            .expect("side continues along its line");
        self.edge(g).other(cur)
    }

    /// Faces containing `v`, grouped by plane.
    pub fn faces_at(&self) -> Vec<Vec<TileId>> {
        let mut at = vec![Vec::new(); self.vertices.len()];
        for &f in &self.faces {
            for &v in &self.tile(f).corners {
                at[v as usize].push(f);
            }
        }
        at
    }

    /// Vertex degree over all planes.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).len()
    }

    /// Roles of `v` in pasted planes only.
    pub fn pasted_roles(&self, v: VertexId) -> &[(PlaneId, Role)] {
        &self.vertices[v as usize].roles[1..]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grow(n: u32) -> Complex {
        Complex::grow(n, BuildConfig::default(), &PASTING_RULE).unwrap()
    }

    #[test]
    fn counts_of_first_levels() {
        for (n, v, e, f) in [(1, 4, 4, 1), (2, 11, 16, 6), (3, 45, 80, 36)] {
            let c = grow(n);
            assert_eq!((c.vertices.len(), c.edges.len(), c.face_count()), (v, e, f), "level {n}");
        }
    }

    #[test]
    fn flat_complexes_satisfy_euler() {
        for n in 1..=5 {
            let c = Complex::grow(n, BuildConfig::default(), &NoPasting).unwrap();
            let chi = c.vertices.len() as i64 - c.edges.len() as i64 + c.face_count() as i64;
            assert_eq!(chi, 1, "level {n}");
        }
    }

    #[test]
    fn pastings_start_at_level_four() {
        assert!(grow(3).pastings.is_empty());
        let c = grow(4);
        assert!(!c.pastings.is_empty());
        assert_eq!(c.planes.len(), 1 + c.pastings.len());
        for p in &c.pastings {
            assert!(matches!(c.vertices[p.core as usize].base_role(), Role::Inner { .. }));
        }
    }

    #[test]
    fn base_only_mode_pastes_no_more_than_recursive() {
        let cfg = BuildConfig { pasting_mode: PastingMode::BaseOnly, ..BuildConfig::default() };
        let base = Complex::grow(5, cfg, &PASTING_RULE).unwrap();
        let rec = grow(5);
        assert!(base.pastings.len() <= rec.pastings.len());
        assert!(base.pastings.iter().all(|p| c_plane(&base, p.core) == 0));
    }

    fn c_plane(c: &Complex, v: VertexId) -> PlaneId {
        c.vertices[v as usize].plane
    }

    #[test]
    fn level_cap_is_enforced() {
        let err = Complex::grow(6, BuildConfig::default(), &PASTING_RULE).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
        assert!(matches!(Complex::grow(0, BuildConfig::default(), &PASTING_RULE), Err(Error::Malformed(_))));
    }

    #[test]
    fn face_cap_is_enforced() {
        let cfg = BuildConfig { face_cap: 10, ..BuildConfig::default() };
        assert!(Complex::grow(3, cfg, &PASTING_RULE).is_err());
    }

    #[test]
    fn faces_are_quadrilaterals_of_existing_edges() {
        let c = grow(4);
        for f in c.minimal_squares() {
            for i in 0..4 {
                let (a, b) = (f.corners[i], f.corners[(i + 1) % 4]);
                let e = c.edge_between(a, b);
                assert!(e.is_some(), "face {} misses edge {a}-{b}", f.tile);
            }
        }
    }

    #[test]
    fn side_paths_run_corner_to_corner() {
        let c = grow(3);
        let root = c.planes[0].root;
        let t = c.tile(root);
        let top = c.side_path(root, Side::Top);
        assert_eq!(top.len(), 5);
        assert_eq!(top[0], t.corner(Corner::UL));
        assert_eq!(*top.last().unwrap(), t.corner(Corner::UR));
    }

    #[test]
    fn index_survives_serde_round_trip() {
        let c = grow(3);
        let mut back: Complex = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        back.rebuild_index();
        for e in &c.edges {
            assert!(back.edge_between(e.ends[0], e.ends[1]).is_some());
        }
    }

    #[test]
    fn pasting_mode_parses() {
        assert_eq!("base-only".parse::<PastingMode>().unwrap(), PastingMode::BaseOnly);
        assert_eq!("recursive".parse::<PastingMode>().unwrap(), PastingMode::Recursive);
        assert!("sideways".parse::<PastingMode>().is_err());
    }
}
