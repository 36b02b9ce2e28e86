#![allow(dead_code)]

use std::time::Duration;

use pmc_core::bnc::SolveConfig;
use pmc_core::graph::ConflictGraph;
use pmc_core::instance::{gen_erdos_renyi, Instance, TimeInterval};
use pmc_core::model::{FractionalPoint, MilpModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(n: usize, d: f64, rng: &mut impl Rng) -> ConflictGraph {
    let mut g = ConflictGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < d {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_instance(n: usize, d: f64, m: usize, seed: u64) -> Instance {
    let interval = [TimeInterval::A, TimeInterval::B, TimeInterval::C][(seed % 3) as usize];
    gen_erdos_renyi(n, d, interval, m, seed).unwrap()
}

pub fn quick_config() -> SolveConfig {
    SolveConfig {
        time_limit: Duration::from_secs(60),
        heuristic_budget: Duration::from_millis(200),
        density_threshold: 0.0,
        ..SolveConfig::default()
    }
}

/// Chromatic number by plain backtracking over color assignments.
pub fn chromatic_number(g: &ConflictGraph) -> usize {
    fn colorable(g: &ConflictGraph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        // symmetry: vertex v may open at most one new color
        let used = colors.iter().copied().max().map_or(0, |c| c + 1);
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| !g.has_edge(u, v) || colors[u] != c) {
                colors.push(c);
                if colorable(g, k, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (0..=g.n()).find(|&k| colorable(g, k, 0, &mut Vec::new())).unwrap()
}

/// Largest stable set by subset enumeration.
pub fn stability_brute(g: &ConflictGraph) -> usize {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s & (1 << u) == 0 || adj[u] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Random point of an RF model satisfying its conflict rows: `γ_v` drawn
/// from `[0.2, 1]`, each `x_vu` in `[floor·γ_v, cap·γ_v]` with `cap ≤ 1/2`.
pub fn random_rf_point(model: &MilpModel, rng: &mut impl Rng) -> FractionalPoint {
    let mut x = vec![0.0; model.num_vars()];
    let anti = model.anti().unwrap();
    for &v in model.ordering().unwrap().order() {
        let cap = rng.gen_range(0.3..=0.5);
        let floor = rng.gen_range(0.0..=cap);
        let gamma = if anti.is_source(v) {
            1.0
        } else {
            let g = rng.gen_range(0.2..=1.0);
            x[model.var(pmc_core::model::VarKey::Rep { rep: v, job: v }).unwrap()] = g;
            g
        };
        for &u in &anti.plus[v] {
            let j = model.var(pmc_core::model::VarKey::Rep { rep: v, job: u }).unwrap();
            x[j] = gamma * rng.gen_range(floor..=cap);
        }
    }
    FractionalPoint::new(x, 0.0)
}

/// Random AF point with per-machine values in `[0, 1/2]`.
pub fn random_af_point(model: &MilpModel, rng: &mut impl Rng) -> FractionalPoint {
    let mut x = vec![0.0; model.num_vars()];
    let y = model.makespan_var();
    for (j, v) in x.iter_mut().enumerate() {
        if j != y {
            *v = rng.gen_range(0.0..=0.5);
        }
    }
    FractionalPoint::new(x, 0.0)
}
