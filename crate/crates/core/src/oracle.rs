//! Exhaustive reference computations for small instances: optimal makespan,
//! integer points of the relaxed representatives polytope, affine
//! dimension in exact arithmetic, most violated odd cycles and cut validity.
//!
//! Nothing here uses the LP machinery; it only relies on the definitions.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::ConflictGraph;
use crate::instance::Instance;
use crate::lp::{Row, Sense};
use crate::model::{Formulation, MilpModel, VarKey};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("{what} needs at most {limit} vertices, got {n}")]
    SizeExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("affine dimension of an empty point set is undefined")]
    EmptyPointSet,
    #[error("points have different lengths")]
    RaggedPoints,
    #[error("{0}")]
    Unsupported(String),
}

fn check_size(what: &'static str, n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        return Err(OracleError::SizeExceeded { what, n, limit });
    }
    Ok(())
}

pub const MAKESPAN_LIMIT: usize = 12;
pub const POINT_LIMIT: usize = 8;
pub const VALIDITY_LIMIT: usize = 10;
pub const CYCLE_LIMIT: usize = 9;

/// Optimal makespan by exhaustive search, or `None` when no conflict-free
/// schedule on `m` machines exists. Machines are numbered in order of first
/// use, so each partition is visited once.
pub fn brute_force_makespan(inst: &Instance) -> Result<Option<u64>, OracleError> {
    let n = inst.n();
    check_size("brute-force makespan", n, MAKESPAN_LIMIT)?;
    let mut jobs: Vec<usize> = (0..n).collect();
    jobs.sort_by_key(|&v| (std::cmp::Reverse(inst.time(v)), v));
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + inst.time(jobs[i]);
    }
    struct Ctx<'a> {
        inst: &'a Instance,
        jobs: Vec<usize>,
        suffix: Vec<u64>,
        machine_of: Vec<usize>,
        loads: Vec<u64>,
        best: u64,
    }
    fn go(c: &mut Ctx, i: usize, used: usize) {
        let m = c.inst.machines() as u64;
        let cur = c.loads.iter().copied().max().unwrap_or(0);
        let placed: u64 = c.loads.iter().sum();
        if cur.max((placed + c.suffix[i]).div_ceil(m)) >= c.best {
            return;
        }
        if i == c.jobs.len() {
            c.best = cur;
            return;
        }
        let v = c.jobs[i];
        let p = c.inst.time(v);
        let limit = (used + 1).min(c.inst.machines());
        for k in 0..limit {
            if c.loads[k] + p >= c.best {
                continue;
            }
            let clash = c.inst.graph().neighbors(v).iter().any(|&u| c.machine_of[u] == k);
            if clash {
                continue;
            }
            c.machine_of[v] = k;
            c.loads[k] += p;
            go(c, i + 1, used.max(k + 1));
            c.loads[k] -= p;
            c.machine_of[v] = usize::MAX;
        }
    }
    let mut ctx = Ctx {
        inst,
        jobs,
        suffix,
        machine_of: vec![usize::MAX; n],
        loads: vec![0; inst.machines()],
        best: u64::MAX,
    };
    go(&mut ctx, 0, 0);
    Ok((ctx.best != u64::MAX).then_some(ctx.best))
}

/// All stable subsets of `set` in `g`, as index lists into `set`.
fn stable_subsets(g: &ConflictGraph, set: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (i, &v) in set.iter().enumerate() {
        let extra: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.iter().all(|&j| !g.has_edge(set[j], v)))
            .map(|s| {
                let mut t = s.clone();
                t.push(i);
                t
            })
            .collect();
        out.extend(extra);
    }
    out
}

/// Per-representative choices for the RF enumeration: `(γ, chosen
/// members)` with members as indices into `N̄⁺(u)`.
struct RfWalk<'a> {
    model: &'a MilpModel,
    order: Vec<usize>,
    subsets: Vec<Vec<Vec<usize>>>,
    covered: Vec<u32>,
    x: Vec<u8>,
    loads_max: Vec<u64>,
}

impl<'a> RfWalk<'a> {
    fn new(model: &'a MilpModel) -> Self {
        let inst = model.instance();
        let anti = model.anti().expect("RF model");
        let order = model.ordering().expect("RF model").order().to_vec();
        let subsets = (0..inst.n()).map(|u| stable_subsets(inst.graph(), &anti.plus[u])).collect();
        Self {
            model,
            order,
            subsets,
            covered: vec![0; inst.n()],
            x: vec![0; model.num_vars()],
            loads_max: vec![0; inst.n() + 1],
        }
    }

    /// Options for representative `u`: `None` means closed.
    fn options(&self, u: usize) -> Vec<Option<usize>> {
        let anti = self.model.anti().unwrap();
        let mut opts = Vec::new();
        if !anti.is_source(u) && self.covered[u] > 0 {
            opts.push(None);
        }
        opts.extend((0..self.subsets[u].len()).map(Some));
        opts
    }

    fn apply(&mut self, u: usize, choice: Option<usize>, on: bool) -> u64 {
        let inst = self.model.instance();
        let anti = self.model.anti().unwrap();
        let Some(s) = choice else { return 0 };
        let val = u8::from(on);
        if let Some(j) = self.model.var(VarKey::Rep { rep: u, job: u }) {
            self.x[j] = val;
        }
        let mut load = inst.time(u);
        for &i in &self.subsets[u][s] {
            let w = anti.plus[u][i];
            let j = self.model.var(VarKey::Rep { rep: u, job: w }).unwrap();
            self.x[j] = val;
            if on {
                self.covered[w] += 1;
            } else {
                self.covered[w] -= 1;
            }
            load += inst.time(w);
        }
        load
    }

    fn visit<F>(&mut self, depth: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u8], u64) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return f(&self.x, self.loads_max[depth]);
        }
        let u = self.order[depth];
        for choice in self.options(u) {
            let load = self.apply(u, choice, true);
            self.loads_max[depth + 1] = self.loads_max[depth].max(load);
            let flow = self.visit(depth + 1, f);
            self.apply(u, choice, false);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit(x, y*)` for every 0/1 point `x` of the relaxed RF polytope
/// (cover, edge and load rows; no machine-count row), where `x` is indexed
/// like the model's variables (the makespan slot stays 0) and `y*` is the
/// smallest feasible makespan for `x`.
pub fn for_each_rf_point<F>(model: &MilpModel, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&[u8], u64) -> ControlFlow<()>,
{
    require_rf(model)?;
    check_size("RF point enumeration", model.instance().n(), POINT_LIMIT)?;
    let _ = RfWalk::new(model).visit(0, &mut visit);
    Ok(())
}

/// Every integer point of the relaxed RF polytope with its minimal makespan.
pub fn enumerate_rf_points(model: &MilpModel) -> Result<Vec<(Vec<u8>, u64)>, OracleError> {
    let mut out = Vec::new();
    for_each_rf_point(model, |x, y| {
        out.push((x.to_vec(), y));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn require_rf(model: &MilpModel) -> Result<(), OracleError> {
    if model.kind() != Formulation::Rf {
        return Err(OracleError::Unsupported("needs an RF model".into()));
    }
    Ok(())
}

/// Incremental affine rank over the rationals.
#[derive(Clone, Debug, Default)]
pub struct AffineRank {
    origin: Option<Vec<BigRational>>,
    /// Reduced rows with their pivot column.
    basis: Vec<(usize, Vec<BigRational>)>,
}

impl AffineRank {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a point; returns whether the affine hull grew.
    pub fn add(&mut self, point: &[i64]) -> Result<bool, OracleError> {
        let p: Vec<BigRational> = point.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
        let Some(origin) = &self.origin else {
            self.origin = Some(p);
            return Ok(true);
        };
        if origin.len() != p.len() {
            return Err(OracleError::RaggedPoints);
        }
        let mut d: Vec<BigRational> = p.iter().zip(origin).map(|(a, b)| a - b).collect();
        for (col, row) in &self.basis {
            if !d[*col].is_zero() {
                let f = d[*col].clone();
                for (x, r) in d.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        let Some(col) = d.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = BigRational::one() / d[col].clone();
        for x in d.iter_mut() {
            *x *= &inv;
        }
        // keep the basis fully reduced on pivot columns
        for (_, row) in self.basis.iter_mut() {
            if !row[col].is_zero() {
                let f = row[col].clone();
                for (x, r) in row.iter_mut().zip(&d) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        self.basis.push((col, d));
        Ok(true)
    }

    /// `None` before the first point.
    pub fn dimension(&self) -> Option<usize> {
        self.origin.as_ref().map(|_| self.basis.len())
    }
}

/// Dimension of the affine hull of `points`.
pub fn affine_dimension(points: &[Vec<i64>]) -> Result<usize, OracleError> {
    let mut rank = AffineRank::new();
    for p in points {
        rank.add(p)?;
    }
    rank.dimension().ok_or(OracleError::EmptyPointSet)
}

/// Affine dimension of the relaxed RF polytope restricted to the integer
/// points accepted by `keep`, each lifted to `(x, y*)` and `(x, y* + 1)`.
/// Stops early once the full model dimension is reached.
pub fn rf_face_dimension<F>(model: &MilpModel, mut keep: F) -> Result<usize, OracleError>
where
    F: FnMut(&[u8]) -> bool,
{
    let full = model.num_vars();
    let y = model.makespan_var();
    let mut rank = AffineRank::new();
    let mut failure = None;
    for_each_rf_point(model, |x, ystar| {
        if !keep(x) {
            return ControlFlow::Continue(());
        }
        let mut p: Vec<i64> = x.iter().map(|&b| b as i64).collect();
        for extra in [0, 1] {
            p[y] = (ystar + extra) as i64;
            if let Err(e) = rank.add(&p) {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        }
        if rank.dimension() == Some(full) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    rank.dimension().ok_or(OracleError::EmptyPointSet)
}

/// Dimension of the relaxed RF polytope.
pub fn rf_polytope_dimension(model: &MilpModel) -> Result<usize, OracleError> {
    rf_face_dimension(model, |_| true)
}

/// The odd cycle `C` of `h` maximizing `Σ_{u∈C} x̄_u − ((|C|−1)/2)·γ̄`, if
/// that maximum is positive. `weights` is indexed by the vertices of `h`.
pub fn most_violated_odd_cycle(
    h: &ConflictGraph,
    weights: &[f64],
    gamma: f64,
) -> Result<Option<(Vec<usize>, f64)>, OracleError> {
    let n = h.n();
    check_size("odd-cycle enumeration", n, CYCLE_LIMIT)?;
    let mut best: Option<(Vec<usize>, f64)> = None;
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    fn extend(
        h: &ConflictGraph,
        w: &[f64],
        gamma: f64,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        best: &mut Option<(Vec<usize>, f64)>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &u in h.neighbors(last) {
            if u == start && path.len() >= 3 && path.len() % 2 == 1 {
                let viol = path.iter().map(|&v| w[v]).sum::<f64>() - ((path.len() - 1) / 2) as f64 * gamma;
                if viol > 0.0 && best.as_ref().is_none_or(|b| viol > b.1) {
                    let mut c = path.clone();
                    c.sort_unstable();
                    *best = Some((c, viol));
                }
            }
            if u > start && !on_path[u] {
                on_path[u] = true;
                path.push(u);
                extend(h, w, gamma, path, on_path, best);
                path.pop();
                on_path[u] = false;
            }
        }
    }
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend(h, weights, gamma, &mut path, &mut on_path, &mut best);
        on_path[s] = false;
        path.pop();
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Valid,
    /// An integer point of the model's relaxed polytope violating the row
    /// (makespan slot left at 0).
    Violated { point: Vec<f64>, lhs: f64 },
}

/// Searches the integer points of the relaxed RF polytope (or of the AF
/// assignment polytope, without symmetry breaking) for one violating `row`
/// by more than 1e-9. Rows touching the makespan variable are rejected.
pub fn check_row_validity(model: &MilpModel, row: &Row) -> Result<Verdict, OracleError> {
    let n = model.instance().n();
    check_size("cut validity check", n, VALIDITY_LIMIT)?;
    let mut c = vec![0.0; model.num_vars()];
    for &(j, a) in &row.coeffs {
        c[j] += a;
    }
    if c[model.makespan_var()] != 0.0 {
        return Err(OracleError::Unsupported("rows on the makespan variable".into()));
    }
    // look for c·x > rhs (≤ rows) or c·x < rhs (≥ rows)
    let mut senses = Vec::new();
    if matches!(row.sense, Sense::Le | Sense::Eq) {
        senses.push((c.clone(), row.rhs));
    }
    if matches!(row.sense, Sense::Ge | Sense::Eq) {
        senses.push((c.iter().map(|v| -v).collect(), -row.rhs));
    }
    for (obj, target) in senses {
        let found = match model.kind() {
            Formulation::Rf => max_rf(model, &obj, target + 1e-9),
            Formulation::Af => max_af(model, &obj, target + 1e-9),
        };
        if let Some(x) = found {
            let point: Vec<f64> = x.iter().map(|&b| b as f64).collect();
            let lhs = row.activity(&point);
            return Ok(Verdict::Violated { point, lhs });
        }
    }
    Ok(Verdict::Valid)
}

/// First RF point with `c·x > target`, found by branch and bound over
/// representatives.
fn max_rf(model: &MilpModel, c: &[f64], target: f64) -> Option<Vec<u8>> {
    let mut walk = RfWalk::new(model);
    let anti = model.anti().unwrap();
    let value_of = |walk: &RfWalk, u: usize, s: usize| -> f64 {
        let mut v = model.var(VarKey::Rep { rep: u, job: u }).map_or(0.0, |j| c[j]);
        for &i in &walk.subsets[u][s] {
            v += c[model.var(VarKey::Rep { rep: u, job: anti.plus[u][i] }).unwrap()];
        }
        v
    };
    let best: Vec<f64> = walk
        .order
        .iter()
        .map(|&u| {
            let open = (0..walk.subsets[u].len()).map(|s| value_of(&walk, u, s)).fold(f64::NEG_INFINITY, f64::max);
            if anti.is_source(u) {
                open
            } else {
                open.max(0.0)
            }
        })
        .collect();
    let mut suffix = vec![0.0; best.len() + 1];
    for i in (0..best.len()).rev() {
        suffix[i] = suffix[i + 1] + best[i];
    }

    fn go(
        walk: &mut RfWalk,
        depth: usize,
        value: f64,
        suffix: &[f64],
        target: f64,
        value_of: &dyn Fn(&RfWalk, usize, usize) -> f64,
    ) -> bool {
        if value + suffix[depth] <= target {
            return false;
        }
        if depth == walk.order.len() {
            return true;
        }
        let u = walk.order[depth];
        for choice in walk.options(u) {
            let gain = choice.map_or(0.0, |s| value_of(walk, u, s));
            walk.apply(u, choice, true);
            if go(walk, depth + 1, value + gain, suffix, target, value_of) {
                return true;
            }
            walk.apply(u, choice, false);
        }
        false
    }
    go(&mut walk, 0, 0.0, &suffix, target, &value_of).then(|| walk.x.clone())
}

/// First AF point (jobs covered at least once, machines conflict-free) with
/// `c·x > target`.
fn max_af(model: &MilpModel, c: &[f64], target: f64) -> Option<Vec<u8>> {
    let inst = model.instance();
    let n = inst.n();
    let m = inst.machines();
    let var = |v: usize, k: usize| model.var(VarKey::Assign { job: v, machine: k }).unwrap();
    let subset_value = |v: usize, mask: usize| (0..m).filter(|k| mask & (1 << k) != 0).map(|k| c[var(v, k)]).sum::<f64>();
    let best: Vec<f64> = (0..n)
        .map(|v| (1..1usize << m).map(|mask| subset_value(v, mask)).fold(f64::NEG_INFINITY, f64::max))
        .collect();
    let mut suffix = vec![0.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + best[i];
    }
    let mut on = vec![0usize; n];
    fn go(
        inst: &Instance,
        v: usize,
        value: f64,
        on: &mut [usize],
        suffix: &[f64],
        target: f64,
        subset_value: &dyn Fn(usize, usize) -> f64,
    ) -> bool {
        if value + suffix[v] <= target {
            return false;
        }
        if v == on.len() {
            return true;
        }
        let m = inst.machines();
        let blocked = inst.graph().neighbors(v).iter().filter(|&&u| u < v).fold(0, |acc, &u| acc | on[u]);
        for mask in 1..1usize << m {
            if mask & blocked != 0 {
                continue;
            }
            on[v] = mask;
            if go(inst, v + 1, value + subset_value(v, mask), on, suffix, target, subset_value) {
                return true;
            }
        }
        on[v] = 0;
        false
    }
    if !go(inst, 0, 0.0, &mut on, &suffix, target, &subset_value) {
        return None;
    }
    let mut x = vec![0u8; model.num_vars()];
    for v in 0..n {
        for k in 0..m {
            if on[v] & (1 << k) != 0 {
                x[var(v, k)] = 1;
            }
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexOrdering;
    use crate::model::{build_af, build_rf};

    fn inst(g: ConflictGraph, times: Vec<u64>, m: usize) -> Instance {
        Instance::new("t", g, times, m).unwrap()
    }

    #[test]
    fn makespan_examples() {
        assert_eq!(brute_force_makespan(&inst(ConflictGraph::complete(3), vec![1, 2, 3], 3)).unwrap(), Some(3));
        assert_eq!(brute_force_makespan(&inst(ConflictGraph::complete(3), vec![1, 2, 3], 2)).unwrap(), None);
        assert_eq!(brute_force_makespan(&inst(ConflictGraph::path(3), vec![1, 1, 1], 2)).unwrap(), Some(2));
        assert_eq!(brute_force_makespan(&inst(ConflictGraph::new(4), vec![5, 1, 1, 1], 2)).unwrap(), Some(5));
        assert!(brute_force_makespan(&inst(ConflictGraph::new(13), vec![1; 13], 2)).is_err());
    }

    #[test]
    fn path_points() {
        let model = build_rf(&inst(ConflictGraph::path(3), vec![1, 1, 1], 2), &VertexOrdering::identity(3)).unwrap();
        let x13 = model.var(VarKey::Rep { rep: 0, job: 2 }).unwrap();
        let x33 = model.var(VarKey::Rep { rep: 2, job: 2 }).unwrap();
        let mut pts: Vec<(u8, u8)> = enumerate_rf_points(&model).unwrap().iter().map(|(x, _)| (x[x13], x[x33])).collect();
        pts.sort_unstable();
        assert_eq!(pts, vec![(0, 1), (1, 0), (1, 1)]);
        assert_eq!(rf_polytope_dimension(&model).unwrap(), 3);
    }

    #[test]
    fn complete_graph_has_one_point() {
        let model = build_rf(&inst(ConflictGraph::complete(3), vec![1, 2, 3], 3), &VertexOrdering::identity(3)).unwrap();
        let pts = enumerate_rf_points(&model).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].1, 3);
        assert_eq!(rf_polytope_dimension(&model).unwrap(), 1);
    }

    #[test]
    fn empty_pair_points() {
        let model = build_rf(&inst(ConflictGraph::new(2), vec![1, 1], 2), &VertexOrdering::identity(2)).unwrap();
        let x12 = model.var(VarKey::Rep { rep: 0, job: 1 }).unwrap();
        let x22 = model.var(VarKey::Rep { rep: 1, job: 1 }).unwrap();
        let mut pts: Vec<(u8, u8)> = enumerate_rf_points(&model).unwrap().iter().map(|(x, _)| (x[x12], x[x22])).collect();
        pts.sort_unstable();
        assert_eq!(pts, vec![(0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn affine_rank_examples() {
        assert_eq!(affine_dimension(&[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap(), 1);
        assert_eq!(affine_dimension(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap(), 3);
        assert_eq!(affine_dimension(&[vec![3, 1]]).unwrap(), 0);
        assert_eq!(affine_dimension(&[]), Err(OracleError::EmptyPointSet));
    }

    #[test]
    fn odd_cycle_oracle_examples() {
        let c5 = ConflictGraph::cycle(5);
        let (cyc, v) = most_violated_odd_cycle(&c5, &[0.45; 5], 1.0).unwrap().unwrap();
        assert_eq!(cyc, vec![0, 1, 2, 3, 4]);
        assert!((v - 0.25).abs() < 1e-12);
        assert!(most_violated_odd_cycle(&c5, &[0.3; 5], 1.0).unwrap().is_none());
        let bip = ConflictGraph::cycle(6);
        assert!(most_violated_odd_cycle(&bip, &[0.5; 6], 1.0).unwrap().is_none());
        // C5 plus chord {0,2}: triangle 0-1-2 against the 5-cycle
        let mut g = ConflictGraph::cycle(5);
        g.add_edge(0, 2).unwrap();
        let w = [0.5, 0.5, 0.5, 0.3, 0.3];
        let (cyc, v) = most_violated_odd_cycle(&g, &w, 1.0).unwrap().unwrap();
        assert_eq!(cyc, vec![0, 1, 2]);
        assert!((v - 0.5).abs() < 1e-12);
        let w = [0.1, 0.45, 0.1, 0.48, 0.48];
        let (cyc, _) = most_violated_odd_cycle(&g, &w, 0.6).unwrap().unwrap();
        assert_eq!(cyc, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn validity_checks_catch_bad_rows() {
        let i = inst(ConflictGraph::new(3), vec![1, 1, 1], 2);
        let model = build_rf(&i, &VertexOrdering::identity(3)).unwrap();
        // x_12 + x_13 ≤ 1 is not valid: 1 can represent both
        let a = model.var(VarKey::Rep { rep: 0, job: 1 }).unwrap();
        let b = model.var(VarKey::Rep { rep: 0, job: 2 }).unwrap();
        let bad = Row::new(vec![(a, 1.0), (b, 1.0)], Sense::Le, 1.0);
        assert!(matches!(check_row_validity(&model, &bad).unwrap(), Verdict::Violated { lhs, .. } if lhs == 2.0));
        let ok = Row::new(vec![(a, 1.0), (b, 1.0)], Sense::Le, 2.0);
        assert_eq!(check_row_validity(&model, &ok).unwrap(), Verdict::Valid);

        let k2 = inst(ConflictGraph::complete(2), vec![1, 1], 3);
        let af = build_af(&k2);
        let row = Row::new(vec![(0, 1.0), (3, 1.0)], Sense::Le, 1.0);
        assert_eq!(check_row_validity(&af, &row).unwrap(), Verdict::Valid);
        // job 0 may cover two machines when a third hosts job 1
        let row = Row::new(vec![(0, 1.0), (1, 1.0)], Sense::Le, 1.0);
        assert!(matches!(check_row_validity(&af, &row).unwrap(), Verdict::Violated { .. }));
        let row = Row::new(vec![(0, 1.0)], Sense::Ge, 1.0);
        assert!(matches!(check_row_validity(&af, &row).unwrap(), Verdict::Violated { .. }));
    }
}
