//! The assignment (AF) and representatives (RF) MILP models.
//!
//! AF has a binary `x̃[v][k]` per (job, machine) and the makespan `ỹ`. RF
//! picks a representative job per machine: `x[u][v] = 1` means the machine
//! represented by `u` runs `v`, allowed only when `u ⪯ v` in the vertex
//! ordering and `u`, `v` do not conflict. Sources of the ordering can only be
//! represented by themselves, so their self-variables are fixed to one and
//! dropped from the model.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{anti_neighborhoods, AntiNeighborhoods, GraphError, VertexOrdering};
use crate::instance::{Instance, Schedule};
use crate::lp::{write_mps, LinearProgram, LpBackend, LpError, LpStatus, Row, Sense, DenseSimplex};

/// Tolerance for treating a value as integral.
pub const INTEGRALITY_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("operation needs a {expected} model, got {found}")]
    WrongKind {
        expected: Formulation,
        found: Formulation,
    },
    #[error("point has {got} values, model has {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("variable {0} is not integral")]
    NotIntegral(usize),
    #[error("point violates the model by {0:e}")]
    Infeasible(f64),
    #[error("job {0} is not assigned")]
    Unassigned(usize),
    #[error("point opens {used} machines, only {available} exist")]
    TooManyMachines { used: usize, available: usize },
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formulation {
    Af,
    Rf,
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formulation::Af => "af",
            Formulation::Rf => "rf",
        })
    }
}

/// Meaning of a model variable. Jobs and machines are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKey {
    /// AF: job on machine.
    Assign { job: usize, machine: usize },
    /// RF: the machine represented by `rep` runs `job`.
    Rep { rep: usize, job: usize },
    Makespan,
}

impl fmt::Display for VarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarKey::Assign { job, machine } => write!(f, "x[{},{}]", job + 1, machine + 1),
            VarKey::Rep { rep, job } => write!(f, "x[{},{}]", rep + 1, job + 1),
            VarKey::Makespan => f.write_str("y"),
        }
    }
}

/// Symmetry-breaking families for AF.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryBreaking {
    /// Machines sorted by non-increasing load.
    LoadOrder,
    /// Color classes sorted by smallest job label.
    Label,
    /// `Label` with the aggregated (stronger) linking rows.
    LabelStrengthened,
}

/// Whether a representative is open: a model variable, or the constant one
/// for sources.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gamma {
    Var(usize),
    One,
}

impl Gamma {
    pub fn value(self, x: &[f64]) -> f64 {
        match self {
            Gamma::Var(i) => x[i],
            Gamma::One => 1.0,
        }
    }
}

/// An LP solution mapped onto a model's variables.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalPoint {
    pub values: Vec<f64>,
    pub objective: f64,
}

impl FractionalPoint {
    pub fn new(values: Vec<f64>, objective: f64) -> Self {
        Self { values, objective }
    }

    pub fn is_integral(&self, mask: &[bool]) -> bool {
        self.values
            .iter()
            .zip(mask)
            .all(|(&v, &int)| !int || (v - v.round()).abs() <= INTEGRALITY_TOL)
    }
}

#[derive(Clone, Debug)]
pub struct MilpModel {
    pub lp: LinearProgram,
    pub integer: Vec<bool>,
    pub keys: Vec<VarKey>,
    kind: Formulation,
    instance: Instance,
    ordering: Option<VertexOrdering>,
    anti: Option<AntiNeighborhoods>,
    index: HashMap<VarKey, usize>,
    makespan: usize,
    symmetry: Vec<SymmetryBreaking>,
}

impl MilpModel {
    fn empty(kind: Formulation, instance: &Instance) -> Self {
        Self {
            lp: LinearProgram::new(),
            integer: Vec::new(),
            keys: Vec::new(),
            kind,
            instance: instance.clone(),
            ordering: None,
            anti: None,
            index: HashMap::new(),
            makespan: 0,
            symmetry: Vec::new(),
        }
    }

    fn push_var(&mut self, key: VarKey, lo: f64, hi: f64, cost: f64, integer: bool) -> usize {
        let j = self.lp.add_var(lo, hi, cost).expect("static bounds are valid");
        self.keys.push(key);
        self.integer.push(integer);
        self.index.insert(key, j);
        j
    }

    fn push_row(&mut self, row: Row) {
        self.lp.add_row(row).expect("rows reference existing variables");
    }

    #[inline]
    pub fn kind(&self) -> Formulation {
        self.kind
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    /// RF only.
    pub fn ordering(&self) -> Option<&VertexOrdering> {
        self.ordering.as_ref()
    }

    /// RF only.
    pub fn anti(&self) -> Option<&AntiNeighborhoods> {
        self.anti.as_ref()
    }

    pub fn num_vars(&self) -> usize {
        self.keys.len()
    }

    pub fn var(&self, key: VarKey) -> Option<usize> {
        self.index.get(&key).copied()
    }

    pub fn makespan_var(&self) -> usize {
        self.makespan
    }

    pub fn symmetry(&self) -> &[SymmetryBreaking] {
        &self.symmetry
    }

    /// RF: the open-representative term for `v`.
    pub fn gamma(&self, v: usize) -> Gamma {
        match self.var(VarKey::Rep { rep: v, job: v }) {
            Some(i) => Gamma::Var(i),
            None => Gamma::One,
        }
    }

    /// Row `Σ coeffs·x ≤ factor·γ_v`, with the constant case folded into the
    /// right-hand side.
    pub fn gamma_row(&self, v: usize, mut coeffs: Vec<(usize, f64)>, factor: f64) -> Row {
        match self.gamma(v) {
            Gamma::Var(i) => {
                coeffs.push((i, -factor));
                Row::new(coeffs, Sense::Le, 0.0)
            }
            Gamma::One => Row::new(coeffs, Sense::Le, factor),
        }
    }

    fn require(&self, kind: Formulation) -> Result<(), ModelError> {
        if self.kind != kind {
            return Err(ModelError::WrongKind {
                expected: kind,
                found: self.kind,
            });
        }
        Ok(())
    }

    /// Fixed-format MPS text with integrality markers.
    pub fn to_mps(&self, name: &str) -> String {
        write_mps(&self.lp, name, Some(&self.integer))
    }

    /// The integer point encoding `schedule`. AF machines are relabelled to
    /// respect any symmetry breaking in the model; RF uses the ≺-first job of
    /// each machine as its representative.
    pub fn point_from_schedule(&self, schedule: &Schedule) -> Result<Vec<f64>, ModelError> {
        let inst = &self.instance;
        schedule
            .validate(inst)
            .map_err(|_| ModelError::Infeasible(f64::INFINITY))?;
        let mut x = vec![0.0; self.num_vars()];
        x[self.makespan] = schedule.makespan as f64;
        let m = inst.machines();
        match self.kind {
            Formulation::Af => {
                let loads = schedule.loads(inst);
                let mut min_label = vec![usize::MAX; m];
                for (v, &k) in schedule.assignment.iter().enumerate() {
                    min_label[k] = min_label[k].min(v);
                }
                let mut perm: Vec<usize> = (0..m).collect();
                if self.symmetry.contains(&SymmetryBreaking::LoadOrder) {
                    perm.sort_by(|&a, &b| loads[b].cmp(&loads[a]).then(a.cmp(&b)));
                } else if !self.symmetry.is_empty() {
                    perm.sort_by_key(|&k| (min_label[k], k));
                }
                let mut relabel = vec![0; m];
                for (new, &old) in perm.iter().enumerate() {
                    relabel[old] = new;
                }
                for (v, &k) in schedule.assignment.iter().enumerate() {
                    let j = self.var(VarKey::Assign { job: v, machine: relabel[k] }).unwrap();
                    x[j] = 1.0;
                }
            }
            Formulation::Rf => {
                let ord = self.ordering.as_ref().expect("RF keeps its ordering");
                let mut rep = vec![usize::MAX; m];
                for (v, &k) in schedule.assignment.iter().enumerate() {
                    if rep[k] == usize::MAX || ord.precedes(v, rep[k]) {
                        rep[k] = v;
                    }
                }
                for (v, &k) in schedule.assignment.iter().enumerate() {
                    if let Some(j) = self.var(VarKey::Rep { rep: rep[k], job: v }) {
                        x[j] = 1.0;
                    }
                }
            }
        }
        Ok(x)
    }
}

/// AF: cover rows per job, conflict rows per (edge, machine), load rows per
/// machine. `n·m + 1` variables and `n + (|E| + 1)·m` rows.
pub fn build_af(inst: &Instance) -> MilpModel {
    let n = inst.n();
    let m = inst.machines();
    let mut model = MilpModel::empty(Formulation::Af, inst);
    for v in 0..n {
        for k in 0..m {
            model.push_var(VarKey::Assign { job: v, machine: k }, 0.0, 1.0, 0.0, true);
        }
    }
    model.makespan = model.push_var(VarKey::Makespan, 0.0, f64::INFINITY, 1.0, false);
    let x = |v: usize, k: usize| v * m + k;

    for v in 0..n {
        let coeffs = (0..m).map(|k| (x(v, k), 1.0)).collect();
        model.push_row(Row::new(coeffs, Sense::Ge, 1.0));
    }
    let edges: Vec<(usize, usize)> = inst.graph().edges().collect();
    for &(u, v) in &edges {
        for k in 0..m {
            model.push_row(Row::new(vec![(x(u, k), 1.0), (x(v, k), 1.0)], Sense::Le, 1.0));
        }
    }
    for k in 0..m {
        let mut coeffs: Vec<(usize, f64)> = (0..n).map(|v| (x(v, k), inst.time(v) as f64)).collect();
        coeffs.push((model.makespan, -1.0));
        model.push_row(Row::new(coeffs, Sense::Le, 0.0));
    }
    model
}

/// Appends one symmetry-breaking family to an AF model. Jobs are compared by
/// label.
pub fn add_symmetry_breaking(
    mut model: MilpModel,
    variant: SymmetryBreaking,
) -> Result<MilpModel, ModelError> {
    model.require(Formulation::Af)?;
    let n = model.instance.n();
    let m = model.instance.machines();
    let x = |v: usize, k: usize| v * m + k;
    match variant {
        SymmetryBreaking::LoadOrder => {
            for k in 0..m - 1 {
                let mut coeffs = Vec::with_capacity(2 * n);
                for v in 0..n {
                    let p = model.instance.time(v) as f64;
                    coeffs.push((x(v, k), p));
                    coeffs.push((x(v, k + 1), -p));
                }
                model.push_row(Row::new(coeffs, Sense::Ge, 0.0));
            }
        }
        SymmetryBreaking::Label | SymmetryBreaking::LabelStrengthened => {
            // job v can only open machines 0..=v
            for v in 0..n.min(m - 1) {
                for k in v + 1..m {
                    model.lp.set_bounds(x(v, k), 0.0, 0.0)?;
                }
            }
            // job v on machine k needs a smaller job on machine k-1
            for v in 1..n {
                for k in 1..=v.min(m - 1) {
                    let mut coeffs: Vec<(usize, f64)> = if variant == SymmetryBreaking::Label {
                        vec![(x(v, k), 1.0)]
                    } else {
                        (k..=v.min(m - 1)).map(|i| (x(v, i), 1.0)).collect()
                    };
                    coeffs.extend((k - 1..v).map(|u| (x(u, k - 1), -1.0)));
                    model.push_row(Row::new(coeffs, Sense::Le, 0.0));
                }
            }
        }
    }
    model.symmetry.push(variant);
    Ok(model)
}

/// `K(v)`: the edges of `G[N̄⁺(v)]` plus its isolated vertices.
pub fn edge_row_sets(inst: &Instance, plus: &[usize]) -> Vec<Vec<usize>> {
    let g = inst.graph();
    let mut sets = Vec::new();
    for (i, &a) in plus.iter().enumerate() {
        let mut isolated = true;
        for &b in plus {
            if g.has_edge(a, b) {
                isolated = false;
                break;
            }
        }
        if isolated {
            sets.push(vec![a]);
        }
        for &b in &plus[i + 1..] {
            if g.has_edge(a, b) {
                sets.push(vec![a, b]);
            }
        }
    }
    sets
}

/// Reduced RF for the given ordering: `n + ē − |S|` binaries plus `y`.
pub fn build_rf(inst: &Instance, ord: &VertexOrdering) -> Result<MilpModel, ModelError> {
    let anti = anti_neighborhoods(inst.graph(), ord)?;
    let mut model = MilpModel::empty(Formulation::Rf, inst);
    for &u in ord.order() {
        if !anti.is_source(u) {
            model.push_var(VarKey::Rep { rep: u, job: u }, 0.0, 1.0, 0.0, true);
        }
        for &v in &anti.plus[u] {
            model.push_var(VarKey::Rep { rep: u, job: v }, 0.0, 1.0, 0.0, true);
        }
    }
    model.makespan = model.push_var(VarKey::Makespan, 0.0, f64::INFINITY, 1.0, false);
    model.ordering = Some(ord.clone());

    let m = inst.machines() as f64;
    let s = anti.sources.len() as f64;
    let reps: Vec<(usize, f64)> = ord
        .order()
        .iter()
        .filter_map(|&v| model.var(VarKey::Rep { rep: v, job: v }).map(|j| (j, 1.0)))
        .collect();
    model.push_row(Row::new(reps, Sense::Le, m - s));

    for &v in ord.order() {
        if anti.is_source(v) {
            continue;
        }
        let mut coeffs = vec![(model.var(VarKey::Rep { rep: v, job: v }).unwrap(), 1.0)];
        coeffs.extend(anti.minus[v].iter().map(|&u| (model.var(VarKey::Rep { rep: u, job: v }).unwrap(), 1.0)));
        model.push_row(Row::new(coeffs, Sense::Ge, 1.0));
    }

    for &v in ord.order() {
        for set in edge_row_sets(inst, &anti.plus[v]) {
            let coeffs = set
                .iter()
                .map(|&u| (model.var(VarKey::Rep { rep: v, job: u }).unwrap(), 1.0))
                .collect();
            let row = model.gamma_row(v, coeffs, 1.0);
            model.push_row(row);
        }
    }

    for &v in ord.order() {
        let mut coeffs: Vec<(usize, f64)> = anti.plus[v]
            .iter()
            .map(|&u| (model.var(VarKey::Rep { rep: v, job: u }).unwrap(), inst.time(u) as f64))
            .collect();
        coeffs.push((model.makespan, -1.0));
        let p = inst.time(v) as f64;
        let row = match model.gamma(v) {
            Gamma::Var(i) => {
                coeffs.push((i, p));
                Row::new(coeffs, Sense::Le, 0.0)
            }
            Gamma::One => Row::new(coeffs, Sense::Le, -p),
        };
        model.push_row(row);
    }
    model.anti = Some(anti);
    Ok(model)
}

/// LP relaxation value with the reference simplex; `+∞` if the relaxation is
/// infeasible.
pub fn lp_root_bound(model: &MilpModel) -> Result<f64, ModelError> {
    lp_root_bound_with(model, &DenseSimplex::default())
}

pub fn lp_root_bound_with(model: &MilpModel, backend: &dyn LpBackend) -> Result<f64, ModelError> {
    let sol = backend.solve(&model.lp)?;
    Ok(match sol.status {
        LpStatus::Optimal => sol.objective,
        LpStatus::Infeasible => f64::INFINITY,
        LpStatus::Unbounded => f64::NEG_INFINITY,
    })
}

/// Decodes an integral, feasible point into a schedule. AF jobs go to the
/// lowest machine they cover; RF machines are numbered by the ≺-order of
/// their representatives and each job joins its ≺-first open
/// representative.
pub fn extract_schedule(model: &MilpModel, point: &FractionalPoint) -> Result<Schedule, ModelError> {
    let x = &point.values;
    if x.len() != model.num_vars() {
        return Err(ModelError::PointLength {
            expected: model.num_vars(),
            got: x.len(),
        });
    }
    if let Some(j) = (0..x.len()).find(|&j| model.integer[j] && (x[j] - x[j].round()).abs() > INTEGRALITY_TOL) {
        return Err(ModelError::NotIntegral(j));
    }
    let violation = model.lp.max_violation(x);
    if violation > INTEGRALITY_TOL {
        return Err(ModelError::Infeasible(violation));
    }
    let inst = &model.instance;
    let n = inst.n();
    let m = inst.machines();
    let on = |j: usize| x[j] > 0.5;
    let mut assignment = vec![usize::MAX; n];
    match model.kind {
        Formulation::Af => {
            for (v, slot) in assignment.iter_mut().enumerate() {
                *slot = (0..m)
                    .find(|&k| on(model.var(VarKey::Assign { job: v, machine: k }).unwrap()))
                    .ok_or(ModelError::Unassigned(v))?;
            }
        }
        Formulation::Rf => {
            let ord = model.ordering.as_ref().expect("RF keeps its ordering");
            let mut machine = vec![usize::MAX; n];
            let mut open = 0;
            for &u in ord.order() {
                if model.gamma(u).value(x) > 0.5 {
                    machine[u] = open;
                    open += 1;
                }
            }
            if open > m {
                return Err(ModelError::TooManyMachines { used: open, available: m });
            }
            for &v in ord.order() {
                let rep = ord.order()[..=ord.position(v)].iter().copied().find(|&u| {
                    machine[u] != usize::MAX
                        && model.var(VarKey::Rep { rep: u, job: v }).map_or(u == v, on)
                });
                assignment[v] = machine[rep.ok_or(ModelError::Unassigned(v))?];
            }
        }
    }
    Ok(Schedule::from_assignment(inst, assignment))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ConflictGraph;
    use crate::lp::solve_lp;

    fn inst(g: ConflictGraph, times: Vec<u64>, m: usize) -> Instance {
        Instance::new("t", g, times, m).unwrap()
    }

    #[test]
    fn af_sizes() {
        let k3 = build_af(&inst(ConflictGraph::complete(3), vec![1, 1, 1], 2));
        assert_eq!(k3.num_vars(), 7);
        assert_eq!(k3.lp.num_rows(), 11);
        let single = build_af(&inst(ConflictGraph::new(1), vec![4], 2));
        assert_eq!(single.num_vars(), 3);
        assert_eq!(single.lp.num_rows(), 3);
    }

    #[test]
    fn af_root_bound_is_average_load() {
        let model = build_af(&inst(ConflictGraph::path(4), vec![1, 2, 3, 4], 2));
        assert!((lp_root_bound(&model).unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn label_variant_fixes_upper_triangle() {
        let model = build_af(&inst(ConflictGraph::new(3), vec![1, 1, 1], 3));
        let model = add_symmetry_breaking(model, SymmetryBreaking::Label).unwrap();
        let fixed: Vec<(usize, usize)> = (0..3)
            .flat_map(|v| (0..3).map(move |k| (v, k)))
            .filter(|&(v, k)| model.lp.upper()[v * 3 + k] == 0.0)
            .collect();
        assert_eq!(fixed, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn load_order_on_two_machines() {
        let base = build_af(&inst(ConflictGraph::new(2), vec![3, 5], 2));
        let rows = base.lp.num_rows();
        let model = add_symmetry_breaking(base, SymmetryBreaking::LoadOrder).unwrap();
        assert_eq!(model.lp.num_rows(), rows + 1);
        let row = model.lp.rows().last().unwrap();
        assert_eq!(row.sense, Sense::Ge);
        assert_eq!(row.coeffs, vec![(0, 3.0), (1, -3.0), (2, 5.0), (3, -5.0)]);
    }

    #[test]
    fn symmetry_breaking_rejects_rf() {
        let i = inst(ConflictGraph::new(2), vec![1, 1], 2);
        let rf = build_rf(&i, &VertexOrdering::identity(2)).unwrap();
        assert!(matches!(
            add_symmetry_breaking(rf, SymmetryBreaking::Label),
            Err(ModelError::WrongKind { .. })
        ));
    }

    #[test]
    fn rf_path_variables() {
        let model = build_rf(&inst(ConflictGraph::path(3), vec![1, 1, 1], 2), &VertexOrdering::identity(3)).unwrap();
        let mut keys = model.keys.clone();
        keys.sort();
        assert_eq!(
            keys,
            vec![
                VarKey::Rep { rep: 0, job: 2 },
                VarKey::Rep { rep: 2, job: 2 },
                VarKey::Makespan
            ]
        );
    }

    #[test]
    fn rf_point_below_af_bound() {
        // empty graph, unit times, two machines
        let i = inst(ConflictGraph::new(4), vec![1; 4], 2);
        let model = build_rf(&i, &VertexOrdering::identity(4)).unwrap();
        let mut x = vec![0.0; model.num_vars()];
        for j in 1..4 {
            let xjj = 0.5f64.powi(j as i32);
            x[model.var(VarKey::Rep { rep: j, job: j }).unwrap()] = xjj;
            x[model.var(VarKey::Rep { rep: 0, job: j }).unwrap()] = xjj;
            for k in j + 1..4 {
                x[model.var(VarKey::Rep { rep: j, job: k }).unwrap()] = xjj;
            }
        }
        x[model.makespan_var()] = 1.875;
        assert!(model.lp.max_violation(&x) < 1e-12);
        assert!(lp_root_bound(&model).unwrap() <= 1.875 + 1e-9);
        assert!((lp_root_bound(&build_af(&i)).unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn rf_bound_at_least_first_job_time() {
        let i = inst(ConflictGraph::new(4), vec![1, 1, 9, 1], 3);
        let ord = VertexOrdering::new(vec![2, 0, 1, 3]).unwrap();
        assert!(lp_root_bound(&build_rf(&i, &ord).unwrap()).unwrap() >= 9.0 - 1e-9);
    }

    #[test]
    fn extract_rf_path() {
        let i = inst(ConflictGraph::path(3), vec![2, 3, 4], 2);
        let model = build_rf(&i, &VertexOrdering::identity(3)).unwrap();
        let mut x = vec![0.0; model.num_vars()];
        x[model.var(VarKey::Rep { rep: 0, job: 2 }).unwrap()] = 1.0;
        x[model.makespan_var()] = 6.0;
        let s = extract_schedule(&model, &FractionalPoint::new(x, 6.0)).unwrap();
        assert_eq!(s.assignment, vec![0, 1, 0]);
        assert_eq!(s.makespan, 6);
        s.validate(&i).unwrap();
    }

    #[test]
    fn extract_rf_lonely_representative() {
        let i = inst(ConflictGraph::new(2), vec![1, 1], 2);
        let model = build_rf(&i, &VertexOrdering::identity(2)).unwrap();
        let mut x = vec![0.0; model.num_vars()];
        x[model.var(VarKey::Rep { rep: 1, job: 1 }).unwrap()] = 1.0;
        x[model.makespan_var()] = 1.0;
        let s = extract_schedule(&model, &FractionalPoint::new(x, 1.0)).unwrap();
        assert_eq!(s.assignment, vec![0, 1]);
    }

    #[test]
    fn extract_af_identity() {
        let i = inst(ConflictGraph::complete(3), vec![4, 2, 7], 3);
        let model = build_af(&i);
        let mut x = vec![0.0; model.num_vars()];
        for v in 0..3 {
            x[model.var(VarKey::Assign { job: v, machine: v }).unwrap()] = 1.0;
        }
        x[model.makespan_var()] = 7.0;
        let s = extract_schedule(&model, &FractionalPoint::new(x, 7.0)).unwrap();
        assert_eq!(s.makespan, 7);
    }

    #[test]
    fn extract_rejects_fractional_and_infeasible() {
        let i = inst(ConflictGraph::new(2), vec![1, 1], 2);
        let model = build_af(&i);
        let mut x = vec![0.5; model.num_vars()];
        x[model.makespan_var()] = 1.0;
        assert!(matches!(
            extract_schedule(&model, &FractionalPoint::new(x, 1.0)),
            Err(ModelError::NotIntegral(_))
        ));
        let x = vec![0.0; model.num_vars()];
        assert!(matches!(
            extract_schedule(&model, &FractionalPoint::new(x, 0.0)),
            Err(ModelError::Infeasible(_))
        ));
    }

    #[test]
    fn schedule_points_are_feasible_and_round_trip() {
        let i = inst(ConflictGraph::path(4), vec![3, 1, 2, 2], 3);
        let s = Schedule::from_assignment(&i, vec![2, 0, 2, 1]);
        let ord = VertexOrdering::new(vec![1, 3, 0, 2]).unwrap();
        let mut models = vec![build_af(&i), build_rf(&i, &ord).unwrap()];
        for v in [SymmetryBreaking::LoadOrder, SymmetryBreaking::Label, SymmetryBreaking::LabelStrengthened] {
            models.push(add_symmetry_breaking(build_af(&i), v).unwrap());
        }
        for model in models {
            let x = model.point_from_schedule(&s).unwrap();
            assert!(model.lp.max_violation(&x) < 1e-12, "{:?}", model.kind());
            let back = extract_schedule(&model, &FractionalPoint::new(x, s.makespan as f64)).unwrap();
            assert_eq!(back.makespan, s.makespan);
            back.validate(&i).unwrap();
        }
    }

    #[test]
    fn mps_marks_binaries() {
        let model = build_af(&inst(ConflictGraph::path(2), vec![1, 1], 2));
        let text = model.to_mps("af");
        assert!(text.contains("'INTORG'") && text.contains("'INTEND'"));
        assert!(solve_lp(&model.lp).unwrap().is_optimal());
    }
}
