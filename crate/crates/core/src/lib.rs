//! Size Ramsey numbers of star forests.
//!
//! The crate evaluates the l-sequence formulas for star-forest tuples, builds
//! witness graphs and free colorings, decides the arrowing relation
//! `G -> (F_1, ..., F_q)` by exhaustive search, and enumerates minimal arrowing
//! graphs for small instances.

pub mod graph;
pub mod star_forest;
pub mod edge_coloring;
pub mod free_coloring;
pub mod arrowing;
pub mod ramsey;
pub mod cli;

pub use arrowing::{arrows, arrows_with_certificate_check, ArrowOptions, ArrowVerdict, SearchBudget, Verdict};
pub use free_coloring::{lemma_free_coloring, verify_free, EdgeColoring};
pub use graph::{canonical_form, CanonicalCode, Graph};
pub use ramsey::{
    classify_instance, conjectured_size_ramsey, extremal_family, l_sequence, size_ramsey_exhaustive,
    verify_characterization, witness_graph, InstanceClass, LSequence,
};
pub use star_forest::{contains_star_forest, StarForest};
