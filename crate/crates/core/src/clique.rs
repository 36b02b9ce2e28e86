//! Maximum-weight cliques on small vertex sets.

use crate::graph::ConflictGraph;

/// Exact search handles at most this many candidates.
pub const EXACT_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedClique {
    /// Sorted vertex labels of the host graph.
    pub vertices: Vec<usize>,
    pub weight: f64,
    /// False when the candidate set was too large for the exact search.
    pub exact: bool,
}

struct Search<'a> {
    adj: Vec<u64>,
    w: &'a [f64],
    best: f64,
    best_set: u64,
}

impl Search<'_> {
    /// Greedy coloring bound: sum over color classes of the heaviest member.
    fn bound(&self, mut cand: u64) -> f64 {
        let mut total = 0.0;
        while cand != 0 {
            let mut class = cand;
            let mut heaviest = 0.0f64;
            while class != 0 {
                let i = class.trailing_zeros() as usize;
                class &= !(1u64 << i);
                class &= !self.adj[i];
                cand &= !(1u64 << i);
                heaviest = heaviest.max(self.w[i]);
            }
            total += heaviest;
        }
        total
    }

    fn expand(&mut self, current: u64, weight: f64, mut cand: u64) {
        if weight > self.best {
            self.best = weight;
            self.best_set = current;
        }
        while cand != 0 {
            if weight + self.bound(cand) <= self.best {
                return;
            }
            let i = cand.trailing_zeros() as usize;
            cand &= !(1u64 << i);
            self.expand(current | (1u64 << i), weight + self.w[i], cand & self.adj[i]);
        }
    }
}

/// Maximum-weight clique of `g` restricted to `candidates`, with `weights`
/// aligned to `candidates`. Non-positive weights are never needed in an
/// optimal clique and are skipped; above [`EXACT_LIMIT`] positive candidates a
/// greedy clique is returned with `exact = false`.
pub fn max_weight_clique(g: &ConflictGraph, candidates: &[usize], weights: &[f64]) -> WeightedClique {
    debug_assert_eq!(candidates.len(), weights.len());
    let mut items: Vec<(usize, f64)> = candidates
        .iter()
        .zip(weights)
        .filter(|&(_, &w)| w > 0.0)
        .map(|(&v, &w)| (v, w))
        .collect();
    // heavy vertices first makes the greedy bound sharper early on
    items.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));

    if items.len() > EXACT_LIMIT {
        let mut clique: Vec<usize> = Vec::new();
        let mut weight = 0.0;
        for &(v, w) in &items {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                weight += w;
            }
        }
        clique.sort_unstable();
        return WeightedClique {
            vertices: clique,
            weight,
            exact: false,
        };
    }

    let k = items.len();
    let adj: Vec<u64> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| j != i && g.has_edge(items[i].0, items[j].0))
                .fold(0u64, |m, j| m | (1u64 << j))
        })
        .collect();
    let w: Vec<f64> = items.iter().map(|&(_, w)| w).collect();
    let mut search = Search {
        adj,
        w: &w,
        best: 0.0,
        best_set: 0,
    };
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    search.expand(0, 0.0, all);

    let mut vertices: Vec<usize> = (0..k)
        .filter(|&i| search.best_set & (1u64 << i) != 0)
        .map(|i| items[i].0)
        .collect();
    vertices.sort_unstable();
    WeightedClique {
        vertices,
        weight: search.best,
        exact: true,
    }
}

/// Grows `clique` to an inclusion-maximal clique of `G[within]`, adding
/// candidates in the given order.
pub fn extend_clique(g: &ConflictGraph, clique: &[usize], within: &[usize]) -> Vec<usize> {
    let mut out = clique.to_vec();
    for &v in within {
        if !out.contains(&v) && out.iter().all(|&u| g.has_edge(u, v)) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}
