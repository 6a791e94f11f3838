//! Flat JSON and DOT dumps of complexes, labels and relations.

use crate::codec::Letter;
use crate::complex::{Complex, PlaneId};
use crate::error::Result;
use crate::labels::{Alphabet, Labeling};
use crate::relations::RelationSet;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: u32,
    pub plane: PlaneId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub a: u32,
    pub b: u32,
    pub plane: PlaneId,
    /// Names at `a` and `b`.
    #[serde(rename = "type")]
    pub kind: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRecord {
    pub corners: [u32; 4],
    pub position: String,
    pub macrotile: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PastingRecordOut {
    pub core: u32,
    pub e1: String,
    pub e2: String,
    pub tile: u32,
}

/// Serializable shape of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDump {
    pub level: u32,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    pub faces: Vec<FaceRecord>,
    pub pastings: Vec<PastingRecordOut>,
}

pub fn complex_dump(c: &Complex) -> ComplexDump {
    ComplexDump {
        level: c.level,
        vertices: c.vertices.iter().map(|v| VertexRecord { id: v.id, plane: v.plane }).collect(),
        edges: c
            .edges
            .iter()
            .map(|e| EdgeRecord {
                a: e.ends[0],
                b: e.ends[1],
                plane: e.plane,
                kind: [e.names[0].to_string(), e.names[1].to_string()],
            })
            .collect(),
        faces: c
            .minimal_squares()
            .into_iter()
            .map(|f| FaceRecord {
                corners: f.corners,
                position: f.position.tag().to_string(),
                macrotile: f.macrotile,
            })
            .collect(),
        pastings: c
            .pastings
            .iter()
            .map(|p| PastingRecordOut { core: p.core, e1: p.e1.to_string(), e2: p.e2.to_string(), tile: p.tile })
            .collect(),
    }
}

/// One vertex of the label dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub id: u32,
    #[serde(rename = "type")]
    pub vtype: String,
    pub level: Option<u8>,
    pub env: u32,
    pub info: u32,
    pub flag: Option<u32>,
    /// Letter of the vertex read inside its base plane.
    pub letter_id: u32,
}

/// Labels of every vertex plus the letter tables they refer to.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LabelDump {
    pub vertices: Vec<LabelRecord>,
    pub alphabet: Alphabet,
}

pub fn label_dump(c: &Complex, lab: &Labeling, alpha: &mut Alphabet) -> Result<LabelDump> {
    let mut vertices = Vec::with_capacity(c.vertices.len());
    for v in &c.vertices {
        let d = lab.base(v.id);
        let letter = lab.vertex_letter(v.id, None, None)?;
        vertices.push(LabelRecord {
            id: v.id,
            vtype: d.vtype.to_string(),
            level: d.level,
            env: d.env,
            info: lab.info[v.id as usize],
            flag: lab.flag[v.id as usize],
            letter_id: Letter::y(alpha.vertices.intern(&letter)).0,
        });
    }
    Ok(LabelDump { vertices, alphabet: alpha.clone() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub face: u32,
    pub plane: PlaneId,
    pub complex: usize,
}

/// One line of the relation dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationLine {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
    pub witness: WitnessOut,
}

/// Write relations as JSON lines, ordered by left side.
pub fn write_relations<W: Write>(set: &RelationSet, c_planes: &[&Complex], mut out: W) -> Result<()> {
    for r in set.rules.values() {
        let w = &r.witness;
        let plane = c_planes.get(w.complex).map_or(0, |c| c.tile(w.face).plane);
        let line = RelationLine {
            lhs: r.lhs.iter().map(|l| l.0).collect(),
            rhs: r.rhs.iter().map(|l| l.0).collect(),
            witness: WitnessOut { face: w.face, plane, complex: w.complex },
        };
        serde_json::to_writer(&mut out, &line)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Read relation lines back into (lhs, rhs) pairs.
pub fn read_relation_lines(text: &str) -> Result<Vec<RelationLine>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Ok(serde_json::from_str(l)?))
        .collect()
}

/// Graphviz rendering of one plane.
pub fn plane_dot(c: &Complex, plane: PlaneId, lab: Option<&Labeling>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph plane{plane} {{");
    let _ = writeln!(s, "  node [shape=circle, fontsize=8];");
    let mut seen = std::collections::BTreeSet::new();
    for e in c.edges.iter().filter(|e| e.plane == plane) {
        seen.extend(e.ends);
    }
    for v in seen {
        let label = match lab.and_then(|l| l.desc_in(v, plane)) {
            Some(d) => format!("{v}\\n{}", d.vtype),
            None => v.to_string(),
        };
        let _ = writeln!(s, "  v{v} [label=\"{label}\"];");
    }
    for e in c.edges.iter().filter(|e| e.plane == plane) {
        let _ = writeln!(
            s,
            "  v{} -- v{} [taillabel=\"{}\", headlabel=\"{}\"];",
            e.ends[0], e.ends[1], e.names[0], e.names[1]
        );
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{BuildConfig, PASTING_RULE};

    fn level(n: u32) -> Complex {
        Complex::grow(n, BuildConfig::default(), &PASTING_RULE).unwrap()
    }

    #[test]
    fn dump_counts_match_the_complex() {
        let c = level(2);
        let d = complex_dump(&c);
        assert_eq!(d.vertices.len(), c.vertices.len());
        assert_eq!(d.edges.len(), c.edges.len());
        assert_eq!(d.faces.len(), 6);
        let text = serde_json::to_string(&d).unwrap();
        let back: ComplexDump = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn dot_lists_every_plane_edge() {
        let c = level(2);
        let dot = plane_dot(&c, 0, None);
        assert_eq!(dot.matches(" -- ").count(), c.edges.len());
        assert!(dot.starts_with("graph plane0"));
    }

    #[test]
    fn label_dump_is_deterministic() {
        let c = level(3);
        let run = || {
            let mut alpha = Alphabet::new();
            let lab = Labeling::new(&c, &mut alpha);
            serde_json::to_string(&label_dump(&c, &lab, &mut alpha).unwrap()).unwrap()
        };
        assert_eq!(run(), run());
    }
}
