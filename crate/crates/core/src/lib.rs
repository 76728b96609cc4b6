//! Robust list-3-coloring for graphs with no induced `P_t` and no induced
//! one-subdivided star `SDK_s`.
//!
//! The pipeline ([`solver::solve`]) screens for a K4, builds a dominating set
//! of bounded size by BFS-style layering ([`dominator`]), then tries every
//! coloring of that set and finishes each attempt with a linear-time
//! two-list solver ([`two_list`]). Inputs that fall outside the class are
//! either still solved correctly (promise mode) or rejected with a
//! checkable induced-subgraph certificate (robust mode, the default).

pub mod bench;
pub mod certificate;
pub mod dominator;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lists;
pub mod oracle;
pub mod ramsey;
pub mod solver;
pub mod two_list;
pub mod vertex_set;

pub use certificate::Certificate;
pub use graph::Graph;
pub use lists::{check_coloring, Color, ColorSet, Coloring, ListAssignment};
pub use solver::{solve, SolveOutcome, SolverConfig};
pub use vertex_set::VertexSet;
