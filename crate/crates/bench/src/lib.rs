//! Fixed instances shared by the benchmarks.

use pmc_core::graph::{distance_ordering, greedy_maximal_clique};
use pmc_core::instance::{gen_bipartite, gen_erdos_renyi, Instance, TimeInterval};
use pmc_core::model::{build_rf, MilpModel};

/// `G(n, d)` instance with times in `[1, 10]` and five machines.
pub fn gnp(n: usize, d: f64, seed: u64) -> Instance {
    gen_erdos_renyi(n, d, TimeInterval::A, 5, seed).expect("valid parameters")
}

/// Complete bipartite graph on 100 unit jobs with three machines.
pub fn complete_bipartite() -> Instance {
    gen_bipartite(100, 1.0, 3, 1, 1, 1).expect("valid parameters")
}

/// RF model under the clique-seeded distance ordering.
pub fn rf_model(inst: &Instance) -> MilpModel {
    let g = inst.graph();
    build_rf(inst, &distance_ordering(g, &greedy_maximal_clique(g, 0))).expect("ordering covers the graph")
}
