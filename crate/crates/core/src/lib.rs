pub mod clique;
pub mod cuts;
pub mod graph;
pub mod heuristics;
pub mod instance;
pub mod lp;
pub mod model;
pub mod oracle;
pub mod bnc;

pub use bnc::{gap_percent, root_bounds, solve, CutSelection, SolveConfig, SolveReport, SolveStatus};
pub use graph::ConflictGraph;
pub use instance::{parse_instance, write_instance, Instance, Schedule};
pub use model::{Formulation, SymmetryBreaking};
