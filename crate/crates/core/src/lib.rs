//! Pasting complexes, their finite vertex coloring, path codes and the
//! square relations they induce.

pub mod census;
pub mod chains;
pub mod codec;
pub mod complex;
pub mod error;
pub mod export;
pub mod geometry;
pub mod intern;
pub mod labels;
pub mod names;
pub mod node_functions;
pub mod pipeline;
pub mod relations;
pub mod rewrite;
pub mod samples;

pub use complex::{
    apply_pastings, grow_to_level, new_base_complex, subdivide, BuildConfig, Complex, Face, NoPasting,
    PastingMode, PastingRecord, PastingRule, Role, VertexId,
};
pub use error::{Error, Result};
pub use geometry::{EdgeType, Env, Position, Side};
pub use names::{EdgeLetter, EdgeName};
pub use codec::{Letter, Word, ZeroRuleSet};
pub use labels::{Alphabet, Labeling, VType};
pub use pipeline::Family;
pub use relations::{Relation, RelationSet};
pub use rewrite::RewriteOutcome;
