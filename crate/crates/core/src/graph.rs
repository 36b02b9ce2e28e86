//! Conflict graphs, vertex orderings and the small exact graph routines the
//! formulations and cut generators rely on.
//!
//! Vertices are `0..n` throughout the library; the instance file format and
//! the CLI shift them to `1..=n`.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("graph has {n} vertices, exact routine is limited to {limit}")]
    SizeExceeded { n: usize, limit: usize },
    #[error("invalid web parameters q={q}, l={l} (need l >= 2 and q >= 2l)")]
    InvalidWeb { q: usize, l: usize },
}

/// Undirected simple graph whose edges are job conflicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl ConflictGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            let v = (u + 1) % n;
            if u != v && !g.has_edge(u, v) {
                g.insert(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.insert(u - 1, u);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.insert(u, v);
        Ok(())
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        self.neighbors[u].sort_unstable();
        self.neighbors[v].sort_unstable();
        self.edge_count += 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Sorted neighbor list.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of non-adjacent vertex pairs.
    pub fn complement_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count
    }

    /// `|E| / C(n, 2)`, zero for graphs with fewer than two vertices.
    pub fn density(&self) -> f64 {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        if pairs == 0 {
            0.0
        } else {
            self.edge_count as f64 / pairs as f64
        }
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` removed; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Adjacency rows as bit masks. Requires `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        (0..self.n)
            .map(|u| self.neighbors[u].iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }
}

/// A total order on the vertices (`order[0]` is the minimum).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self, GraphError> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(GraphError::InvalidOrdering(format!(
                    "vertex {v} out of range for {n} vertices"
                )));
            }
            if position[v] != usize::MAX {
                return Err(GraphError::InvalidOrdering(format!("vertex {v} repeated")));
            }
            position[v] = i;
        }
        Ok(Self { order, position })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// `u ≺ v`.
    #[inline]
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.position[u] < self.position[v]
    }
}

/// Negative and positive anti-neighborhoods under an ordering, with the
/// induced sources and sinks. Every list is sorted by position in the
/// ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiNeighborhoods {
    pub minus: Vec<Vec<usize>>,
    pub plus: Vec<Vec<usize>>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    is_source: Vec<bool>,
}

impl AntiNeighborhoods {
    #[inline]
    pub fn is_source(&self, v: usize) -> bool {
        self.is_source[v]
    }

    #[inline]
    pub fn is_sink(&self, v: usize) -> bool {
        self.plus[v].is_empty()
    }

    /// `ē`, the number of complement edges.
    pub fn complement_edges(&self) -> usize {
        self.plus.iter().map(Vec::len).sum()
    }
}

pub fn anti_neighborhoods(
    g: &ConflictGraph,
    ord: &VertexOrdering,
) -> Result<AntiNeighborhoods, GraphError> {
    let n = g.n();
    if ord.len() != n {
        return Err(GraphError::InvalidOrdering(format!(
            "ordering has {} vertices, graph has {n}",
            ord.len()
        )));
    }
    let mut minus = vec![Vec::new(); n];
    let mut plus = vec![Vec::new(); n];
    for (i, &u) in ord.order().iter().enumerate() {
        for &v in &ord.order()[i + 1..] {
            if !g.has_edge(u, v) {
                plus[u].push(v);
                minus[v].push(u);
            }
        }
    }
    let is_source: Vec<bool> = minus.iter().map(Vec::is_empty).collect();
    let sources = ord.order().iter().copied().filter(|&v| is_source[v]).collect();
    let sinks = ord.order().iter().copied().filter(|&v| plus[v].is_empty()).collect();
    Ok(AntiNeighborhoods {
        minus,
        plus,
        sources,
        sinks,
        is_source,
    })
}

/// Greedy inclusion-maximal clique: repeated max-degree insertion, improved
/// by (1,2)-swaps (drop one member, add two adjacent common neighbors of the
/// rest) until none applies. `seed` only breaks degree ties.
pub fn greedy_maximal_clique(g: &ConflictGraph, seed: u64) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut tiebreak: Vec<usize> = (0..n).collect();
    tiebreak.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut rank = vec![0; n];
    for (r, &v) in tiebreak.iter().enumerate() {
        rank[v] = r;
    }
    let better = |a: usize, b: usize| (g.degree(a), std::cmp::Reverse(rank[a])) > (g.degree(b), std::cmp::Reverse(rank[b]));

    let mut clique: Vec<usize> = Vec::new();
    let extend = |clique: &mut Vec<usize>| loop {
        let best = (0..n)
            .filter(|v| !clique.contains(v) && clique.iter().all(|&u| g.has_edge(u, *v)))
            .fold(None, |best: Option<usize>, v| match best {
                Some(b) if !better(v, b) => Some(b),
                _ => Some(v),
            });
        match best {
            Some(v) => clique.push(v),
            None => break,
        }
    };
    extend(&mut clique);

    'swap: loop {
        for i in 0..clique.len() {
            let dropped = clique[i];
            let rest: Vec<usize> = clique.iter().copied().filter(|&u| u != dropped).collect();
            let mut common: Vec<usize> = (0..n)
                .filter(|&w| w != dropped && !clique.contains(&w))
                .filter(|&w| rest.iter().all(|&u| g.has_edge(u, w)))
                .collect();
            common.sort_by(|&a, &b| {
                if better(a, b) {
                    std::cmp::Ordering::Less
                } else if better(b, a) {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            });
            for (j, &a) in common.iter().enumerate() {
                if let Some(&b) = common[j + 1..].iter().find(|&&b| g.has_edge(a, b)) {
                    clique = rest;
                    clique.push(a);
                    clique.push(b);
                    extend(&mut clique);
                    continue 'swap;
                }
            }
        }
        break;
    }
    clique.sort_unstable();
    clique
}

/// Orders vertices by BFS distance from `k` (members of `k` first,
/// unreachable vertices last), ties by ascending label.
pub fn distance_ordering(g: &ConflictGraph, k: &[usize]) -> VertexOrdering {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in k {
        if dist[v] != 0 {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (dist[v], v));
    VertexOrdering::new(order).expect("sorted labels form a permutation")
}

/// Outcome of a budgeted k-colorability search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum ColorSearch {
    Found(Vec<usize>),
    Impossible,
    BudgetExhausted,
}

struct KColoring<'a> {
    g: &'a ConflictGraph,
    k: usize,
    colors: Vec<usize>,
    // neighbor_colors[v][c] = number of colored neighbors of v with color c
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl KColoring<'_> {
    const NONE: usize = usize::MAX;

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            if self.neighbor_colors[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.neighbor_colors[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = Self::NONE;
        for &w in self.g.neighbors(v) {
            self.neighbor_colors[w][c] -= 1;
            if self.neighbor_colors[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// `Some(true)` when a coloring was completed, `Some(false)` when this
    /// subtree is exhausted, `None` when the node budget ran out.
    fn search(&mut self, colored: usize, used: usize) -> Option<bool> {
        if colored == self.g.n() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let g = self.g;
        let v = (0..g.n())
            .filter(|&v| self.colors[v] == Self::NONE)
            .max_by_key(|&v| {
                let free_deg = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| self.colors[w] == Self::NONE)
                    .count();
                (self.saturation[v], free_deg, std::cmp::Reverse(v))
            })
            .expect("an uncolored vertex remains");
        if self.saturation[v] >= self.k {
            return Some(false);
        }
        for c in 0..(used + 1).min(self.k) {
            if self.neighbor_colors[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            let r = self.search(colored + 1, used.max(c + 1));
            match r {
                Some(true) => return r,
                None => {
                    self.unassign(v);
                    return None;
                }
                Some(false) => self.unassign(v),
            }
        }
        Some(false)
    }
}

/// Decides whether `g` admits a proper coloring with at most `k` colors,
/// exploring at most `budget` search nodes.
pub(crate) fn find_k_coloring(g: &ConflictGraph, k: usize, budget: u64) -> ColorSearch {
    let n = g.n();
    if n == 0 {
        return ColorSearch::Found(Vec::new());
    }
    if k == 0 {
        return ColorSearch::Impossible;
    }
    let mut s = KColoring {
        g,
        k,
        colors: vec![KColoring::NONE; n],
        neighbor_colors: vec![vec![0; k]; n],
        saturation: vec![0; n],
        nodes: 0,
        budget,
    };
    match s.search(0, 0) {
        Some(true) => ColorSearch::Found(s.colors),
        Some(false) => ColorSearch::Impossible,
        None => ColorSearch::BudgetExhausted,
    }
}

/// Chromatic number by exhaustive DSATUR-ordered backtracking.
pub fn exact_chromatic_number(g: &ConflictGraph, limit: usize) -> Result<usize, GraphError> {
    if g.n() > limit {
        return Err(GraphError::SizeExceeded { n: g.n(), limit });
    }
    Ok(chromatic_number_unchecked(g))
}

pub(crate) fn chromatic_number_unchecked(g: &ConflictGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let lower = greedy_maximal_clique(g, 0).len().max(1);
    (lower..=g.n())
        .find(|&k| matches!(find_k_coloring(g, k, u64::MAX), ColorSearch::Found(_)))
        .expect("n colors always suffice")
}

/// Size of a maximum stable set inside the vertex mask `mask`.
fn stable_in(adj: &[u64], mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    // v is isolated in the mask: taking it is always optimal
    if adj[v] & rest == 0 {
        return 1 + stable_in(adj, rest);
    }
    let with = 1 + stable_in(adj, rest & !adj[v]);
    if with > rest.count_ones() as usize {
        return with;
    }
    with.max(stable_in(adj, rest))
}

/// Stability number `α(G)`. Requires `n <= 64`.
pub fn stability_number(g: &ConflictGraph) -> Result<usize, GraphError> {
    if g.n() > 64 {
        return Err(GraphError::SizeExceeded { n: g.n(), limit: 64 });
    }
    let adj = g.adjacency_masks();
    Ok(stable_in(&adj, full_mask(g.n())))
}

/// Largest stable set containing `u`. Requires `n <= 64`.
pub fn stability_number_containing(g: &ConflictGraph, u: usize) -> Result<usize, GraphError> {
    if g.n() > 64 {
        return Err(GraphError::SizeExceeded { n: g.n(), limit: 64 });
    }
    let adj = g.adjacency_masks();
    let rest = full_mask(g.n()) & !adj[u] & !(1 << u);
    Ok(1 + stable_in(&adj, rest))
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `χ(G - v) < χ(G)` for every vertex.
pub fn is_chi_critical(g: &ConflictGraph) -> bool {
    let chi = chromatic_number_unchecked(g);
    (0..g.n()).all(|v| chromatic_number_unchecked(&g.without_vertex(v)) < chi)
}

/// Parameters of the web `W^q_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WebSpec {
    pub q: usize,
    pub l: usize,
}

/// A web or antiweb with its known stability and chromatic numbers.
#[derive(Clone, Debug)]
pub struct Web {
    pub spec: WebSpec,
    pub anti: bool,
    pub graph: ConflictGraph,
    pub alpha: usize,
    pub chi: usize,
}

impl Web {
    /// Webs and antiwebs are χ-critical exactly when `(q - 1) / α` is integral.
    pub fn predicted_chi_critical(&self) -> bool {
        (self.spec.q - 1).is_multiple_of(self.alpha)
    }
}

/// Builds `W^q_l` (vertices `v_i ~ v_j` iff `l <= |i-j| <= q-l`) or, with
/// `anti`, its complement.
pub fn make_web(spec: WebSpec, anti: bool) -> Result<Web, GraphError> {
    let WebSpec { q, l } = spec;
    if l < 2 || q < 2 * l {
        return Err(GraphError::InvalidWeb { q, l });
    }
    let mut graph = ConflictGraph::new(q);
    for i in 0..q {
        for j in i + 1..q {
            let d = j - i;
            let in_web = l <= d && d <= q - l;
            if in_web != anti {
                graph.insert(i, j);
            }
        }
    }
    let alpha = if anti { q / l } else { l };
    let chi = q.div_ceil(alpha);
    Ok(Web {
        spec,
        anti,
        graph,
        alpha,
        chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_maximal_cliques(g: &ConflictGraph) -> Vec<Vec<usize>> {
        let n = g.n();
        (1u32..(1 << n))
            .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect::<Vec<_>>())
            .filter(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v))))
            .filter(|s| (0..n).all(|w| s.contains(&w) || !s.iter().all(|&u| g.has_edge(u, w))))
            .collect()
    }

    fn brute_chromatic(g: &ConflictGraph) -> usize {
        let n = g.n();
        (1..=n)
            .find(|&k| {
                let total = k.pow(n as u32);
                (0..total).any(|mut code| {
                    let colors: Vec<usize> = (0..n)
                        .map(|_| {
                            let c = code % k;
                            code /= k;
                            c
                        })
                        .collect();
                    g.edges().all(|(u, v)| colors[u] != colors[v])
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(ConflictGraph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            ConflictGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            ConflictGraph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn anti_neighborhoods_of_path() {
        // path 1-2-3 shifted to 0-1-2
        let g = ConflictGraph::path(3);
        let a = anti_neighborhoods(&g, &VertexOrdering::identity(3)).unwrap();
        assert_eq!(a.sources, vec![0, 1]);
        assert_eq!(a.sinks, vec![1, 2]);
        assert_eq!(a.plus[0], vec![2]);
        assert_eq!(a.minus[2], vec![0]);
        assert_eq!(a.complement_edges(), 1);
    }

    #[test]
    fn anti_neighborhoods_complete_and_empty() {
        let k3 = anti_neighborhoods(&ConflictGraph::complete(3), &VertexOrdering::identity(3)).unwrap();
        assert_eq!(k3.sources, vec![0, 1, 2]);
        assert_eq!(k3.sinks, vec![0, 1, 2]);
        assert_eq!(k3.complement_edges(), 0);

        let e3 = anti_neighborhoods(&ConflictGraph::new(3), &VertexOrdering::identity(3)).unwrap();
        assert_eq!(e3.sources, vec![0]);
        assert_eq!(e3.plus[0], vec![1, 2]);
        assert_eq!(e3.complement_edges(), 3);
    }

    #[test]
    fn ordering_length_mismatch() {
        let err = anti_neighborhoods(&ConflictGraph::new(3), &VertexOrdering::identity(2));
        assert!(matches!(err, Err(GraphError::InvalidOrdering(_))));
        assert!(VertexOrdering::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(greedy_maximal_clique(&ConflictGraph::complete(3), 1), vec![0, 1, 2]);
        let p = greedy_maximal_clique(&ConflictGraph::path(3), 5);
        assert!(all_maximal_cliques(&ConflictGraph::path(3)).contains(&p));
        assert_eq!(greedy_maximal_clique(&ConflictGraph::new(4), 9).len(), 1);
    }

    #[test]
    fn clique_swap_escapes_greedy_trap() {
        // Greedy starts from the hub 0 and stops at the edge {0, 1}; a swap
        // drops 0 and adds the triangle partners 2 and 3.
        let g = ConflictGraph::from_edges(
            7,
            [(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let k = greedy_maximal_clique(&g, 0);
        assert!(all_maximal_cliques(&g).contains(&k));
    }

    #[test]
    fn distance_ordering_examples() {
        let star = ConflictGraph::from_edges(3, [(2, 0), (2, 1)]).unwrap();
        assert_eq!(distance_ordering(&star, &[2]).order(), &[2, 0, 1]);
        assert_eq!(distance_ordering(&ConflictGraph::path(4), &[0]).order(), &[0, 1, 2, 3]);
        let split = ConflictGraph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(distance_ordering(&split, &[0]).order(), &[0, 1, 2]);
        let rev = ConflictGraph::path(4);
        assert_eq!(distance_ordering(&rev, &[3]).order(), &[3, 2, 1, 0]);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(exact_chromatic_number(&ConflictGraph::complete(3), 20), Ok(3));
        assert_eq!(exact_chromatic_number(&ConflictGraph::cycle(5), 20), Ok(3));
        let w = make_web(WebSpec { q: 10, l: 4 }, false).unwrap();
        assert_eq!(exact_chromatic_number(&w.graph, 20), Ok(3));
        assert_eq!(
            exact_chromatic_number(&ConflictGraph::new(21), 20),
            Err(GraphError::SizeExceeded { n: 21, limit: 20 })
        );
    }

    #[test]
    fn chromatic_matches_brute_force() {
        let mut state = 12345u64;
        for trial in 0..40 {
            let n = 3 + trial % 5;
            let mut g = ConflictGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if (state >> 33).is_multiple_of(2) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            assert_eq!(exact_chromatic_number(&g, 20).unwrap(), brute_chromatic(&g));
        }
    }

    #[test]
    fn web_examples() {
        let w = make_web(WebSpec { q: 10, l: 4 }, false).unwrap();
        assert_eq!(w.graph.edge_count(), 15);
        assert_eq!((w.alpha, w.chi), (4, 3));
        let a = make_web(WebSpec { q: 10, l: 4 }, true).unwrap();
        assert_eq!((a.alpha, a.chi), (2, 5));
        assert_eq!(a.graph.edge_count(), 45 - 15);
        let c = make_web(WebSpec { q: 9, l: 4 }, false).unwrap();
        assert!(c.predicted_chi_critical());
        assert!(is_chi_critical(&c.graph));
        assert!(matches!(
            make_web(WebSpec { q: 7, l: 4 }, false),
            Err(GraphError::InvalidWeb { .. })
        ));
    }

    #[test]
    fn stability_numbers() {
        assert_eq!(stability_number(&ConflictGraph::cycle(5)), Ok(2));
        assert_eq!(stability_number(&ConflictGraph::new(6)), Ok(6));
        assert_eq!(stability_number(&ConflictGraph::complete(6)), Ok(1));
        let star = ConflictGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(stability_number_containing(&star, 0), Ok(1));
        assert_eq!(stability_number_containing(&star, 1), Ok(3));
    }
}
