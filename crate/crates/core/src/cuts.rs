//! Valid inequalities from the stable-set structure of the anti-neighborhoods
//! and their separation.
//!
//! For a representative `v` the jobs it may run are `N̄⁺(v)`, and the ones it
//! does run form a stable set of `G[N̄⁺(v)]`. Any inequality valid for the
//! stable-set polytope of that subgraph therefore holds with its right-hand
//! side scaled by `γ_v`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::clique::{extend_clique, max_weight_clique};
use crate::graph::{chromatic_number_unchecked, stability_number_containing, ConflictGraph, GraphError};
use crate::lp::{Row, Sense};
use crate::model::{FractionalPoint, Formulation, MilpModel, ModelError, VarKey};
use crate::oracle::{check_row_validity, OracleError, Verdict};

/// Minimum violation for a separated cut.
pub const VIOLATION_TOL: f64 = 1e-4;
/// Largest vertex set accepted by the exact constructors.
pub const SUBSET_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CutError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("point violates an edge row: weight {weight:e} on {{{u}, {w}}} below representative {v}")]
    InvalidPoint { v: usize, u: usize, w: usize, weight: f64 },
    #[error("vertex set of size {n} exceeds the limit {limit}")]
    SizeExceeded { n: usize, limit: usize },
    #[error("vertex {u} is not a positive anti-neighbor of {v}")]
    NotAntiNeighbor { v: usize, u: usize },
    #[error("empty vertex set")]
    EmptySet,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutClass {
    Clique,
    OddCycle,
    External,
    AfExternal,
    Internal,
}

impl CutClass {
    pub const ALL: [CutClass; 5] = [
        CutClass::Clique,
        CutClass::OddCycle,
        CutClass::External,
        CutClass::AfExternal,
        CutClass::Internal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CutClass::Clique => "clique",
            CutClass::OddCycle => "odd-cycle",
            CutClass::External => "external",
            CutClass::AfExternal => "af-external",
            CutClass::Internal => "internal",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CutRow {
    pub row: Row,
    pub class: CutClass,
    /// `lhs − rhs` at the separated point (0 for constructed rows).
    pub violation: f64,
    /// Representative (RF) or machine (AF) the cut belongs to; `None` for
    /// internal inequalities.
    pub anchor: Option<usize>,
    /// Jobs of the defining vertex set, sorted.
    pub members: Vec<usize>,
    /// False when a heuristic replaced the exact separation.
    pub exact: bool,
}

impl CutRow {
    fn order(&self, other: &Self) -> Ordering {
        other
            .violation
            .total_cmp(&self.violation)
            .then_with(|| self.anchor.cmp(&other.anchor))
            .then_with(|| self.members.cmp(&other.members))
            .then_with(|| self.class.cmp(&other.class))
    }
}

/// Most violated first, ties by anchor and members; duplicates dropped.
fn finish(mut cuts: Vec<CutRow>, max_cuts: usize) -> Vec<CutRow> {
    cuts.sort_by(|a, b| a.order(b));
    cuts.dedup_by(|b, a| a.anchor == b.anchor && a.members == b.members && a.class == b.class);
    cuts.truncate(max_cuts);
    cuts
}

fn require(model: &MilpModel, kind: Formulation) -> Result<(), CutError> {
    if model.kind() != kind {
        return Err(ModelError::WrongKind {
            expected: kind,
            found: model.kind(),
        }
        .into());
    }
    Ok(())
}

fn check_point(model: &MilpModel, point: &FractionalPoint) -> Result<(), CutError> {
    if point.values.len() != model.num_vars() {
        return Err(ModelError::PointLength {
            expected: model.num_vars(),
            got: point.values.len(),
        }
        .into());
    }
    Ok(())
}

fn rep_var(model: &MilpModel, v: usize, u: usize) -> usize {
    model.var(VarKey::Rep { rep: v, job: u }).expect("u is a positive anti-neighbor of v")
}

/// `Σ_{u∈K} x_vu ≤ γ_v` for a clique `K ⊆ N̄⁺(v)`.
pub fn rf_clique_cut(model: &MilpModel, v: usize, clique: &[usize], x: &[f64], exact: bool) -> CutRow {
    let coeffs = clique.iter().map(|&u| (rep_var(model, v, u), 1.0)).collect();
    let row = model.gamma_row(v, coeffs, 1.0);
    CutRow {
        violation: row.activity(x) - row.rhs,
        row,
        class: CutClass::Clique,
        anchor: Some(v),
        members: clique.to_vec(),
        exact,
    }
}

/// Clique inequalities for every representative: a maximum-weight clique of
/// `G[N̄⁺(v)]` under weights `x̄_vu`, extended to a maximal clique, whenever
/// its weight exceeds `γ̄_v`.
pub fn separate_clique_rf(model: &MilpModel, point: &FractionalPoint, max_cuts: usize) -> Result<Vec<CutRow>, CutError> {
    require(model, Formulation::Rf)?;
    check_point(model, point)?;
    let x = &point.values;
    let anti = model.anti().expect("RF model");
    let g = model.instance().graph();
    let mut cuts = Vec::new();
    for &v in model.ordering().unwrap().order() {
        let plus = &anti.plus[v];
        if plus.len() < 3 {
            continue;
        }
        let gamma = model.gamma(v).value(x);
        let weights: Vec<f64> = plus.iter().map(|&u| x[rep_var(model, v, u)]).collect();
        let best = max_weight_clique(g, plus, &weights);
        if best.weight <= gamma + VIOLATION_TOL {
            continue;
        }
        let clique = extend_clique(g, &best.vertices, plus);
        cuts.push(rf_clique_cut(model, v, &clique, x, best.exact));
    }
    Ok(finish(cuts, max_cuts))
}

/// AF clique inequalities `Σ_{u∈K} x̃_uk ≤ 1`, one maximum-weight clique per
/// machine.
pub fn separate_clique_af(model: &MilpModel, point: &FractionalPoint, max_cuts: usize) -> Result<Vec<CutRow>, CutError> {
    require(model, Formulation::Af)?;
    check_point(model, point)?;
    let x = &point.values;
    let inst = model.instance();
    let g = inst.graph();
    let all: Vec<usize> = (0..inst.n()).collect();
    let mut cuts = Vec::new();
    for k in 0..inst.machines() {
        let var = |u: usize| model.var(VarKey::Assign { job: u, machine: k }).unwrap();
        let weights: Vec<f64> = all.iter().map(|&u| x[var(u)]).collect();
        let best = max_weight_clique(g, &all, &weights);
        if best.weight <= 1.0 + VIOLATION_TOL || best.vertices.len() < 3 {
            continue;
        }
        let clique = extend_clique(g, &best.vertices, &all);
        let row = Row::new(clique.iter().map(|&u| (var(u), 1.0)).collect(), Sense::Le, 1.0);
        cuts.push(CutRow {
            violation: row.activity(x) - 1.0,
            row,
            class: CutClass::Clique,
            anchor: Some(k),
            members: clique,
            exact: best.exact,
        });
    }
    Ok(finish(cuts, max_cuts))
}

/// Weighted search state for Dijkstra on the split graph.
#[derive(PartialEq)]
struct Label(f64, usize);

impl Eq for Label {}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

/// Minimum-weight odd closed walk through each vertex of `h` under edge
/// weights `f`, found as a shortest path from `u⁺` to `u⁻` in the bipartite
/// double cover. Returns, per start vertex, the walk's weight and a simple odd
/// cycle extracted from it (weights are nonnegative, so the cycle weighs no
/// more than the walk).
pub fn shortest_odd_cycles(h: &ConflictGraph, f: &dyn Fn(usize, usize) -> f64) -> Vec<Option<(f64, Vec<usize>)>> {
    let n = h.n();
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        // node 2u is u⁺ (even parity), 2u+1 is u⁻
        let mut dist = vec![f64::INFINITY; 2 * n];
        let mut prev = vec![usize::MAX; 2 * n];
        let mut heap = BinaryHeap::new();
        dist[2 * s] = 0.0;
        heap.push(Label(0.0, 2 * s));
        while let Some(Label(d, node)) = heap.pop() {
            if d > dist[node] {
                continue;
            }
            if node == 2 * s + 1 {
                break;
            }
            let (u, parity) = (node / 2, node % 2);
            for &w in h.neighbors(u) {
                let next = 2 * w + (1 - parity);
                let nd = d + f(u, w);
                if nd < dist[next] {
                    dist[next] = nd;
                    prev[next] = node;
                    heap.push(Label(nd, next));
                }
            }
        }
        if !dist[2 * s + 1].is_finite() {
            out.push(None);
            continue;
        }
        let mut walk = vec![s];
        let mut node = 2 * s + 1;
        while node != 2 * s {
            node = prev[node];
            walk.push(node / 2);
        }
        out.push(Some((dist[2 * s + 1], odd_cycle_in_walk(&walk))));
    }
    out
}

/// A simple odd cycle inside the closed walk `walk` (first vertex repeated at
/// the end, odd number of edges).
fn odd_cycle_in_walk(walk: &[usize]) -> Vec<usize> {
    let mut walk = walk.to_vec();
    loop {
        let len = walk.len() - 1;
        let mut split = None;
        'outer: for i in 0..len {
            for j in i + 1..len {
                if walk[i] == walk[j] {
                    split = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = split else {
            walk.pop();
            return walk;
        };
        // walk[i..=j] is closed; keep whichever half has odd length
        if (j - i) % 2 == 1 {
            walk = walk[i..=j].to_vec();
        } else {
            let mut rest = walk[..=i].to_vec();
            rest.extend_from_slice(&walk[j + 1..]);
            walk = rest;
        }
    }
}

/// `Σ_{u∈C} x_vu ≤ ((|C|−1)/2)·γ_v` for an odd cycle `C` of `G[N̄⁺(v)]`.
pub fn rf_odd_cycle_cut(model: &MilpModel, v: usize, cycle: &[usize], x: &[f64]) -> CutRow {
    let mut members = cycle.to_vec();
    members.sort_unstable();
    let coeffs = members.iter().map(|&u| (rep_var(model, v, u), 1.0)).collect();
    let row = model.gamma_row(v, coeffs, ((cycle.len() - 1) / 2) as f64);
    CutRow {
        violation: row.activity(x) - row.rhs,
        row,
        class: CutClass::OddCycle,
        anchor: Some(v),
        members,
        exact: true,
    }
}

/// Odd-cycle inequalities for every representative `v`. Edge `{u, w}` of
/// `G⁺(v) = G[N̄⁺(v)]` gets weight `(γ̄_v − x̄_vu − x̄_vw)/2`; a cycle is
/// violated exactly when it weighs less than `γ̄_v/2`, by the difference.
pub fn separate_odd_cycle_rf(model: &MilpModel, point: &FractionalPoint, max_cuts: usize) -> Result<Vec<CutRow>, CutError> {
    require(model, Formulation::Rf)?;
    check_point(model, point)?;
    let x = &point.values;
    let anti = model.anti().expect("RF model");
    let g = model.instance().graph();
    let mut cuts = Vec::new();
    for &v in model.ordering().unwrap().order() {
        let plus = &anti.plus[v];
        if plus.len() < 3 {
            continue;
        }
        let gamma = model.gamma(v).value(x);
        let h = g.induced(plus);
        let xv: Vec<f64> = plus.iter().map(|&u| x[rep_var(model, v, u)]).collect();
        for (a, b) in h.edges() {
            let weight = (gamma - xv[a] - xv[b]) / 2.0;
            if weight < -1e-9 {
                return Err(CutError::InvalidPoint {
                    v,
                    u: plus[a],
                    w: plus[b],
                    weight,
                });
            }
        }
        if gamma / 2.0 <= VIOLATION_TOL {
            continue;
        }
        let f = |a: usize, b: usize| ((gamma - xv[a] - xv[b]) / 2.0).max(0.0);
        for (weight, cycle) in shortest_odd_cycles(&h, &f).into_iter().flatten() {
            if weight < gamma / 2.0 - VIOLATION_TOL {
                let jobs: Vec<usize> = cycle.iter().map(|&i| plus[i]).collect();
                cuts.push(rf_odd_cycle_cut(model, v, &jobs, x));
            }
        }
    }
    Ok(finish(cuts, max_cuts))
}

/// Replaces triangle odd-cycle cuts by clique cuts on a maximal clique of
/// `G[N̄⁺(v)]` containing the triangle.
pub fn lift_triangles(model: &MilpModel, point: &FractionalPoint, cuts: Vec<CutRow>) -> Vec<CutRow> {
    let g = model.instance().graph();
    let n = cuts.len();
    let lifted = cuts
        .into_iter()
        .map(|c| match (c.class, c.anchor) {
            (CutClass::OddCycle, Some(v)) if c.members.len() == 3 => {
                let plus = &model.anti().unwrap().plus[v];
                let clique = extend_clique(g, &c.members, plus);
                rf_clique_cut(model, v, &clique, &point.values, true)
            }
            _ => c,
        })
        .collect();
    finish(lifted, n)
}

/// `α_u` for each `u ∈ U`: the largest stable set of `G[U]` containing `u`.
fn alphas(g: &ConflictGraph, set: &[usize]) -> Result<Vec<usize>, CutError> {
    let h = g.induced(set);
    (0..set.len())
        .map(|i| stability_number_containing(&h, i).map_err(CutError::from))
        .collect()
}

fn check_subset(set: &[usize]) -> Result<(), CutError> {
    if set.is_empty() {
        return Err(CutError::EmptySet);
    }
    if set.len() > SUBSET_LIMIT {
        return Err(CutError::SizeExceeded {
            n: set.len(),
            limit: SUBSET_LIMIT,
        });
    }
    Ok(())
}

fn normalized(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// `Σ_{u∈U} x_vu / α_u ≤ γ_v` for `U ⊆ N̄⁺(v)`.
pub fn external_inequality(model: &MilpModel, v: usize, set: &[usize]) -> Result<CutRow, CutError> {
    require(model, Formulation::Rf)?;
    let set = normalized(set);
    check_subset(&set)?;
    let anti = model.anti().unwrap();
    if let Some(&u) = set.iter().find(|u| !anti.plus[v].contains(u)) {
        return Err(CutError::NotAntiNeighbor { v, u });
    }
    let alpha = alphas(model.instance().graph(), &set)?;
    let coeffs = set
        .iter()
        .zip(&alpha)
        .map(|(&u, &a)| (rep_var(model, v, u), 1.0 / a as f64))
        .collect();
    Ok(CutRow {
        row: model.gamma_row(v, coeffs, 1.0),
        class: CutClass::External,
        violation: 0.0,
        anchor: Some(v),
        members: set,
        exact: true,
    })
}

/// `Σ_{u∈U} x̃_uk / α_u ≤ 1` on machine `k`.
pub fn af_external_inequality(model: &MilpModel, k: usize, set: &[usize]) -> Result<CutRow, CutError> {
    require(model, Formulation::Af)?;
    let set = normalized(set);
    check_subset(&set)?;
    let alpha = alphas(model.instance().graph(), &set)?;
    let coeffs = set
        .iter()
        .zip(&alpha)
        .map(|(&u, &a)| (model.var(VarKey::Assign { job: u, machine: k }).unwrap(), 1.0 / a as f64))
        .collect();
    Ok(CutRow {
        row: Row::new(coeffs, Sense::Le, 1.0),
        class: CutClass::AfExternal,
        violation: 0.0,
        anchor: Some(k),
        members: set,
        exact: true,
    })
}

/// Machines needed by `U`: with `S_U` the ≺-minimal elements of `U`,
/// `Σ_{v∈U∖S_U} Σ_{u∈(N̄⁻(v)∖U)∪{v}} x_uv ≥ χ(G[U]) − |S_U|`.
pub fn internal_inequality(model: &MilpModel, set: &[usize]) -> Result<CutRow, CutError> {
    require(model, Formulation::Rf)?;
    let set = normalized(set);
    check_subset(&set)?;
    let anti = model.anti().unwrap();
    let in_set = |u: usize| set.binary_search(&u).is_ok();
    let minimal: Vec<usize> = set
        .iter()
        .copied()
        .filter(|&v| !anti.minus[v].iter().any(|&u| in_set(u)))
        .collect();
    let chi = chromatic_number_unchecked(&model.instance().graph().induced(&set));
    let mut coeffs = Vec::new();
    for &v in set.iter().filter(|v| !minimal.contains(v)) {
        // v has a ≺-smaller anti-neighbor in U, so it is not a source
        coeffs.push((rep_var(model, v, v), 1.0));
        coeffs.extend(anti.minus[v].iter().filter(|&&u| !in_set(u)).map(|&u| (rep_var(model, u, v), 1.0)));
    }
    Ok(CutRow {
        row: Row::new(coeffs, Sense::Ge, chi as f64 - minimal.len() as f64),
        class: CutClass::Internal,
        violation: 0.0,
        anchor: None,
        members: set,
        exact: true,
    })
}

/// Exhaustive validity check of a cut on an instance with at most 10 jobs.
pub fn check_cut_validity(model: &MilpModel, cut: &CutRow) -> Result<Verdict, CutError> {
    Ok(check_row_validity(model, &cut.row)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_web, VertexOrdering, WebSpec};
    use crate::instance::Instance;
    use crate::model::{build_af, build_rf};

    /// Representative 0 of an instance whose other jobs induce `h` and are
    /// all non-adjacent to job 0.
    fn hub_model(h: &ConflictGraph) -> MilpModel {
        let n = h.n() + 1;
        let mut g = ConflictGraph::new(n);
        for (a, b) in h.edges() {
            g.add_edge(a + 1, b + 1).unwrap();
        }
        let inst = Instance::new("hub", g, vec![1; n], 3).unwrap();
        build_rf(&inst, &VertexOrdering::identity(n)).unwrap()
    }

    fn hub_point(model: &MilpModel, xs: &[f64], gamma_rest: f64) -> FractionalPoint {
        let mut x = vec![0.0; model.num_vars()];
        for (i, &w) in xs.iter().enumerate() {
            x[model.var(VarKey::Rep { rep: 0, job: i + 1 }).unwrap()] = w;
        }
        for v in 1..model.instance().n() {
            x[model.var(VarKey::Rep { rep: v, job: v }).unwrap()] = gamma_rest;
        }
        FractionalPoint::new(x, 0.0)
    }

    #[test]
    fn odd_cycle_on_c5() {
        let model = hub_model(&ConflictGraph::cycle(5));
        let cuts = separate_odd_cycle_rf(&model, &hub_point(&model, &[0.45; 5], 0.0), 50).unwrap();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].members, vec![1, 2, 3, 4, 5]);
        assert!((cuts[0].violation - 0.25).abs() < 1e-12);
        assert_eq!(cuts[0].row.rhs, 2.0);
        let none = separate_odd_cycle_rf(&model, &hub_point(&model, &[0.3; 5], 0.0), 50).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn odd_cycle_ignores_bipartite() {
        let model = hub_model(&ConflictGraph::cycle(6));
        assert!(separate_odd_cycle_rf(&model, &hub_point(&model, &[0.5; 6], 0.0), 50).unwrap().is_empty());
    }

    #[test]
    fn odd_cycle_rejects_points_off_edge_rows() {
        let model = hub_model(&ConflictGraph::cycle(5));
        assert!(matches!(
            separate_odd_cycle_rf(&model, &hub_point(&model, &[0.7; 5], 0.0), 50),
            Err(CutError::InvalidPoint { .. })
        ));
    }

    #[test]
    fn walk_decomposition_keeps_odd_part() {
        // 0-1-2-0 triangle glued to a 4-cycle 0-3-4-5-0
        let c = odd_cycle_in_walk(&[0, 1, 2, 0, 3, 4, 5, 0]);
        assert_eq!(c, vec![0, 1, 2]);
        let c = odd_cycle_in_walk(&[0, 3, 4, 5, 0, 1, 2, 0]);
        assert_eq!(c, vec![0, 1, 2]);
    }

    #[test]
    fn clique_on_triangle() {
        let model = hub_model(&ConflictGraph::complete(3));
        let cuts = separate_clique_rf(&model, &hub_point(&model, &[0.5; 3], 0.0), 50).unwrap();
        assert_eq!(cuts.len(), 1);
        assert!((cuts[0].violation - 0.5).abs() < 1e-12);
        assert_eq!(cuts[0].class, CutClass::Clique);
    }

    #[test]
    fn clique_none_when_edgeless_or_integral() {
        let model = hub_model(&ConflictGraph::new(4));
        assert!(separate_clique_rf(&model, &hub_point(&model, &[1.0; 4], 0.0), 50).unwrap().is_empty());
        let model = hub_model(&ConflictGraph::complete(4));
        assert!(separate_clique_rf(&model, &hub_point(&model, &[1.0, 0.0, 0.0, 0.0], 0.0), 50).unwrap().is_empty());
    }

    #[test]
    fn af_clique_per_machine() {
        let inst = Instance::new("k3", ConflictGraph::complete(3), vec![1; 3], 2).unwrap();
        let model = build_af(&inst);
        let mut x = vec![0.5; model.num_vars()];
        x[model.makespan_var()] = 1.5;
        let cuts = separate_clique_af(&model, &FractionalPoint::new(x, 1.5), 50).unwrap();
        assert_eq!(cuts.len(), 2);
        assert!(cuts.iter().all(|c| (c.violation - 0.5).abs() < 1e-12));
        let capped = separate_clique_af(&model, &FractionalPoint::new(vec![0.5; 7], 1.5), 1).unwrap();
        assert_eq!(capped.len(), 1);
    }

    #[test]
    fn triangle_lifting() {
        // K4 minus nothing: the triangle {1,2,3} extends to {1,2,3,4}
        let model = hub_model(&ConflictGraph::complete(4));
        let p = hub_point(&model, &[0.4, 0.4, 0.4, 0.0], 0.0);
        let raw = vec![rf_odd_cycle_cut(&model, 0, &[1, 2, 3], &p.values)];
        let lifted = lift_triangles(&model, &p, raw);
        assert_eq!(lifted[0].class, CutClass::Clique);
        assert_eq!(lifted[0].members, vec![1, 2, 3, 4]);
    }

    #[test]
    fn external_examples() {
        let model = hub_model(&ConflictGraph::cycle(5));
        let c = external_inequality(&model, 0, &[1, 2, 3, 4, 5]).unwrap();
        assert!(c.row.coeffs.iter().take(5).all(|&(_, a)| a == 0.5));
        let model = hub_model(&ConflictGraph::new(4));
        let c = external_inequality(&model, 0, &[1, 2, 3, 4]).unwrap();
        assert!(c.row.coeffs.iter().take(4).all(|&(_, a)| a == 0.25));
        let model = hub_model(&ConflictGraph::complete(3));
        let c = external_inequality(&model, 0, &[1, 2, 3]).unwrap();
        assert!(c.row.coeffs.iter().take(3).all(|&(_, a)| a == 1.0));
        assert!(matches!(external_inequality(&model, 1, &[0]), Err(CutError::NotAntiNeighbor { .. })));
    }

    #[test]
    fn internal_on_web() {
        let web = make_web(WebSpec { q: 9, l: 4 }, false).unwrap();
        let inst = Instance::new("web", web.graph.clone(), vec![1; 9], 3).unwrap();
        let model = build_rf(&inst, &VertexOrdering::identity(9)).unwrap();
        let all: Vec<usize> = (0..9).collect();
        let c = internal_inequality(&model, &all).unwrap();
        let sources = model.anti().unwrap().sources.len() as f64;
        assert_eq!(c.row.rhs, 3.0 - sources);
        assert_eq!(check_cut_validity(&model, &c).unwrap(), Verdict::Valid);
    }

    #[test]
    fn internal_single_vertex() {
        let inst = Instance::new("p", ConflictGraph::new(3), vec![1; 3], 2).unwrap();
        let model = build_rf(&inst, &VertexOrdering::identity(3)).unwrap();
        let c = internal_inequality(&model, &[2]).unwrap();
        assert!(c.row.coeffs.is_empty());
        assert_eq!(c.row.rhs, 0.0);
        // U = {1, 2}: 2 needs a machine not represented by 1
        let c = internal_inequality(&model, &[1, 2]).unwrap();
        assert_eq!(c.row.rhs, 0.0);
        let c = internal_inequality(&model, &[0, 1, 2]).unwrap();
        assert_eq!(c.row.rhs, 0.0);
    }

    #[test]
    fn constructors_reject_oversized_sets() {
        let inst = Instance::new("big", ConflictGraph::new(22), vec![1; 22], 2).unwrap();
        let model = build_rf(&inst, &VertexOrdering::identity(22)).unwrap();
        let set: Vec<usize> = (1..22).collect();
        assert!(matches!(external_inequality(&model, 0, &set), Err(CutError::SizeExceeded { .. })));
        assert!(matches!(internal_inequality(&model, &set), Err(CutError::SizeExceeded { .. })));
    }
}
