//! LP-based branch and cut over either formulation.
//!
//! The search keeps the best schedule found so far (seeded by the warm
//! start) and explores nodes best-bound first. Node bounds are rounded up to
//! integers, which is valid because processing times are integral.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use log::{debug, info};
use thiserror::Error;

use crate::cuts::{lift_triangles, separate_clique_af, separate_clique_rf, separate_odd_cycle_rf, CutClass, CutError, CutRow};
use crate::graph::{distance_ordering, find_k_coloring, greedy_maximal_clique, ColorSearch};
use crate::heuristics::{list_schedule, local_search, warm_start, Coloring};
use crate::instance::{trivial_lower_bound, Instance, Schedule};
use crate::lp::{DenseSimplex, LinearProgram, LpBackend, LpError, LpSession, LpSolution, LpStatus, SparseSimplex};
use crate::model::{
    add_symmetry_breaking, build_af, build_rf, extract_schedule, FractionalPoint, Formulation, MilpModel, ModelError,
    SymmetryBreaking, VarKey, INTEGRALITY_TOL,
};

/// Node budget of the exact coloring run when no warm start was found.
const PRESOLVE_COLORING_NODES: u64 = 200_000;
/// Open nodes that keep a warm LP session; the rest are re-solved from the
/// root LP when popped.
const SESSION_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("root LP failed: {0}")]
    RootLp(LpError),
    #[error(transparent)]
    Cut(#[from] CutError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutSelection {
    None,
    Clique,
    OddCycle,
    Both,
}

impl CutSelection {
    pub fn clique(self) -> bool {
        matches!(self, CutSelection::Clique | CutSelection::Both)
    }

    pub fn odd_cycle(self) -> bool {
        matches!(self, CutSelection::OddCycle | CutSelection::Both)
    }
}

impl fmt::Display for CutSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutSelection::None => "none",
            CutSelection::Clique => "clique",
            CutSelection::OddCycle => "oddcycle",
            CutSelection::Both => "both",
        })
    }
}

impl FromStr for CutSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(CutSelection::None),
            "clique" => Ok(CutSelection::Clique),
            "oddcycle" | "odd-cycle" => Ok(CutSelection::OddCycle),
            "both" => Ok(CutSelection::Both),
            _ => Err(format!("unknown cut selection `{s}`")),
        }
    }
}

impl FromStr for Formulation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "af" => Ok(Formulation::Af),
            "rf" => Ok(Formulation::Rf),
            _ => Err(format!("unknown formulation `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendChoice {
    Dense,
    Sparse,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveConfig {
    pub formulation: Formulation,
    pub cuts: CutSelection,
    /// Separate only at the root node.
    pub root_only: bool,
    /// Clique cuts are separated only on graphs at least this dense.
    pub density_threshold: f64,
    pub time_limit: Duration,
    pub heuristic_budget: Duration,
    /// Run the warm start; when off, schedules come only from LP solutions.
    pub heuristics: bool,
    /// Seeds the clique heuristic behind the RF vertex ordering.
    pub seed: u64,
    /// AF only.
    pub symmetry: Option<SymmetryBreaking>,
    pub max_rounds: usize,
    pub max_cuts_per_round: usize,
    pub backend: BackendChoice,
    pub node_limit: Option<u64>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            formulation: Formulation::Rf,
            cuts: CutSelection::Clique,
            root_only: true,
            density_threshold: 0.3,
            time_limit: Duration::from_secs(840),
            heuristic_budget: Duration::from_secs(5),
            heuristics: true,
            seed: 0,
            symmetry: None,
            max_rounds: 20,
            max_cuts_per_round: 50,
            backend: BackendChoice::Sparse,
            node_limit: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    Feasible,
    Infeasible,
    Unknown,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Feasible => "feasible",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unknown => "unknown",
        })
    }
}

/// Bounds at one moment of the search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundEvent {
    pub elapsed: Duration,
    pub primal: Option<u64>,
    pub dual: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub instance: String,
    pub formulation: Formulation,
    pub cuts: CutSelection,
    pub seed: u64,
    pub status: SolveStatus,
    pub primal: Option<u64>,
    /// Proven lower bound; absent only for infeasible instances.
    pub dual: Option<u64>,
    pub nodes: u64,
    pub cuts_added: BTreeMap<CutClass, usize>,
    /// Separations that fell back to a heuristic.
    pub inexact_separations: usize,
    pub root_lp: Option<f64>,
    pub root_lp_after_cuts: Option<f64>,
    pub elapsed: Duration,
    pub schedule: Option<Schedule>,
    pub trace: Vec<BoundEvent>,
}

pub const CSV_HEADER: [&str; 11] = [
    "instance",
    "formulation",
    "cuts",
    "status",
    "primal",
    "dual",
    "gap_pct",
    "nodes",
    "cuts_added",
    "time_s",
    "seed",
];

impl SolveReport {
    pub fn gap_pct(&self) -> Option<f64> {
        gap_percent(self.primal.map(|p| p as f64), self.dual.map(|d| d as f64))
    }

    pub fn total_cuts(&self) -> usize {
        self.cuts_added.values().sum()
    }

    /// Fields in [`CSV_HEADER`] order; missing values are empty.
    pub fn csv_record(&self) -> Vec<String> {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            self.instance.clone(),
            self.formulation.to_string(),
            self.cuts.to_string(),
            self.status.to_string(),
            opt(self.primal),
            opt(self.dual),
            self.gap_pct().map(|g| format!("{g:.4}")).unwrap_or_default(),
            self.nodes.to_string(),
            self.total_cuts().to_string(),
            format!("{:.3}", self.elapsed.as_secs_f64()),
            self.seed.to_string(),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(s, "instance     {}", self.instance);
        let _ = writeln!(s, "status       {}", self.status);
        let _ = writeln!(s, "formulation  {} (cuts: {})", self.formulation, self.cuts);
        let _ = writeln!(s, "primal       {}", opt(self.primal));
        let _ = writeln!(s, "dual         {}", opt(self.dual));
        let gap = self.gap_pct().map(|g| format!("{g:.2}%")).unwrap_or_else(|| "-".into());
        let _ = writeln!(s, "gap          {gap}");
        let _ = writeln!(s, "nodes        {}", self.nodes);
        let by_class: Vec<String> = self.cuts_added.iter().map(|(c, k)| format!("{}={k}", c.name())).collect();
        let _ = writeln!(s, "cuts         {} [{}]", self.total_cuts(), by_class.join(", "));
        if let Some(lp) = self.root_lp {
            let _ = write!(s, "root lp      {lp:.4}");
            if let Some(after) = self.root_lp_after_cuts {
                let _ = write!(s, " -> {after:.4}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "time         {:.3}s", self.elapsed.as_secs_f64());
        if let Some(sched) = &self.schedule {
            let labels: Vec<String> = sched.assignment.iter().map(|k| (k + 1).to_string()).collect();
            let _ = writeln!(s, "machines     {}", labels.join(" "));
        }
        s
    }
}

/// `100·(primal − dual)/primal`; `None` without both bounds or when the
/// primal bound is zero.
pub fn gap_percent(primal: Option<f64>, dual: Option<f64>) -> Option<f64> {
    match (primal, dual) {
        (Some(p), Some(d)) if p > 0.0 => Some(100.0 * (p - d) / p),
        _ => None,
    }
}

/// Open node of the search tree.
pub struct SearchNode {
    /// Branching decisions `(variable, value)` from the root.
    pub fixings: Vec<(usize, f64)>,
    /// Integral lower bound for the subtree.
    pub bound: u64,
    pub depth: usize,
    up: bool,
    seq: u64,
    values: Vec<f64>,
    session: Option<Box<dyn LpSession>>,
}

impl PartialEq for SearchNode {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for SearchNode {}

impl PartialOrd for SearchNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SearchNode {
    /// Max-heap order: smaller bound, then deeper, then the 1-branch, then
    /// older.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .bound
            .cmp(&self.bound)
            .then(self.depth.cmp(&other.depth))
            .then(self.up.cmp(&other.up))
            .then(other.seq.cmp(&self.seq))
    }
}

fn integral_bound(lp_value: f64) -> u64 {
    (lp_value - INTEGRALITY_TOL).ceil().max(0.0) as u64
}

struct Solver<'a> {
    inst: &'a Instance,
    config: &'a SolveConfig,
    backend: Box<dyn LpBackend>,
    start: Instant,
    deadline: Instant,
    model: Option<MilpModel>,
    /// Model LP plus every cut found so far.
    pool_lp: LinearProgram,
    incumbent: Option<Schedule>,
    dual: u64,
    report: SolveReport,
    /// Every cut added, in order.
    added: Vec<CutRow>,
}

impl<'a> Solver<'a> {
    fn out_of_time(&self) -> bool {
        Instant::now() >= self.deadline
    }

    fn record(&mut self) {
        let event = BoundEvent {
            elapsed: self.start.elapsed(),
            primal: self.incumbent.as_ref().map(|s| s.makespan),
            dual: self.dual,
        };
        if self.report.trace.last().is_none_or(|e| e.primal != event.primal || e.dual != event.dual) {
            self.report.trace.push(event);
        }
    }

    fn offer(&mut self, schedule: Schedule) {
        debug_assert!(schedule.validate(self.inst).is_ok());
        if self.incumbent.as_ref().is_none_or(|s| schedule.makespan < s.makespan) {
            debug!("incumbent {} after {:?}", schedule.makespan, self.start.elapsed());
            self.incumbent = Some(schedule);
            self.record();
        }
    }

    fn raise_dual(&mut self, bound: u64) {
        let cap = self.incumbent.as_ref().map_or(u64::MAX, |s| s.makespan);
        let bound = bound.min(cap);
        if bound > self.dual {
            self.dual = bound;
            self.record();
        }
    }

    fn primal(&self) -> u64 {
        self.incumbent.as_ref().map_or(u64::MAX, |s| s.makespan)
    }

    fn finish(mut self, status: SolveStatus) -> SolveReport {
        let r = &mut self.report;
        r.status = status;
        r.primal = self.incumbent.as_ref().map(|s| s.makespan);
        r.dual = match status {
            SolveStatus::Infeasible => None,
            SolveStatus::Optimal => r.primal,
            _ => Some(self.dual),
        };
        r.schedule = self.incumbent.take();
        r.elapsed = self.start.elapsed();
        if let Some(d) = r.dual {
            let event = BoundEvent {
                elapsed: r.elapsed,
                primal: r.primal,
                dual: d,
            };
            if r.trace.last().is_none_or(|e| e.primal != event.primal || e.dual != event.dual) {
                r.trace.push(event);
            }
        }
        info!(
            "{}: {} primal={:?} dual={:?} nodes={} in {:?}",
            r.instance, r.status, r.primal, r.dual, r.nodes, r.elapsed
        );
        self.report
    }

    fn build_model(&self) -> Result<MilpModel, SolveError> {
        let g = self.inst.graph();
        Ok(match self.config.formulation {
            Formulation::Af => {
                let model = build_af(self.inst);
                match self.config.symmetry {
                    Some(v) => add_symmetry_breaking(model, v)?,
                    None => model,
                }
            }
            Formulation::Rf => {
                let clique = greedy_maximal_clique(g, self.config.seed);
                build_rf(self.inst, &distance_ordering(g, &clique))?
            }
        })
    }

    fn separate(&mut self, point: &FractionalPoint) -> Result<Vec<CutRow>, SolveError> {
        let model = self.model.as_ref().unwrap();
        let cap = self.config.max_cuts_per_round;
        let dense_enough = self.inst.graph().density() >= self.config.density_threshold;
        let mut cuts = Vec::new();
        if self.config.cuts.clique() && dense_enough {
            cuts.extend(match model.kind() {
                Formulation::Af => separate_clique_af(model, point, cap)?,
                Formulation::Rf => separate_clique_rf(model, point, cap)?,
            });
        }
        if self.config.cuts.odd_cycle() && model.kind() == Formulation::Rf {
            let odd = separate_odd_cycle_rf(model, point, cap)?;
            cuts.extend(lift_triangles(model, point, odd));
        }
        cuts.sort_by(|a, b| b.violation.total_cmp(&a.violation).then_with(|| a.members.cmp(&b.members)));
        cuts.dedup_by(|b, a| a.row == b.row);
        cuts.truncate(cap);
        Ok(cuts)
    }

    /// Separation rounds on `session`; returns `false` if the LP became
    /// infeasible.
    fn cut_loop(&mut self, session: &mut Box<dyn LpSession>) -> Result<bool, SolveError> {
        for round in 0..self.config.max_rounds {
            if self.out_of_time() {
                break;
            }
            let sol = session.solution();
            let point = FractionalPoint::new(sol.values.clone(), sol.objective);
            if point.is_integral(&self.model.as_ref().unwrap().integer) {
                break;
            }
            let cuts = self.separate(&point)?;
            if cuts.is_empty() {
                break;
            }
            debug!("round {round}: {} cuts, best violation {:.4}", cuts.len(), cuts[0].violation);
            for cut in cuts {
                *self.report.cuts_added.entry(cut.class).or_insert(0) += 1;
                if !cut.exact {
                    self.report.inexact_separations += 1;
                }
                self.pool_lp.add_row(cut.row.clone()).expect("cut rows reference model variables");
                let row = cut.row.clone();
                self.added.push(cut);
                match session.add_row(row) {
                    Ok(s) if s.status == LpStatus::Infeasible => return Ok(false),
                    Ok(_) => {}
                    Err(e) => return Err(SolveError::RootLp(e)),
                }
            }
        }
        Ok(true)
    }

    /// Most fractional binary; ties go to the job with the larger processing
    /// time, then to the smaller key.
    fn branching_var(&self, values: &[f64]) -> Option<usize> {
        let model = self.model.as_ref().unwrap();
        let mut best: Option<(f64, u64, VarKey, usize)> = None;
        for (j, &x) in values.iter().enumerate() {
            if !model.integer[j] {
                continue;
            }
            let frac = x.min(1.0 - x);
            if frac <= INTEGRALITY_TOL {
                continue;
            }
            let key = model.keys[j];
            let job = match key {
                VarKey::Assign { job, .. } | VarKey::Rep { job, .. } => job,
                VarKey::Makespan => unreachable!("the makespan is continuous"),
            };
            let p = self.inst.time(job);
            let better = match &best {
                None => true,
                Some((bf, bp, bk, _)) => {
                    if (frac - bf).abs() > 1e-9 {
                        frac > *bf
                    } else if p != *bp {
                        p > *bp
                    } else {
                        key < *bk
                    }
                }
            };
            if better {
                best = Some((frac, p, key, j));
            }
        }
        best.map(|b| b.3)
    }

    fn rebuild_session(&self, fixings: &[(usize, f64)]) -> Result<Box<dyn LpSession>, LpError> {
        let mut lp = self.pool_lp.clone();
        for &(j, v) in fixings {
            lp.set_bounds(j, v, v)?;
        }
        self.backend.open(&lp)
    }

    fn try_point(&mut self, values: &[f64], objective: f64) {
        let model = self.model.as_ref().unwrap();
        let point = FractionalPoint::new(values.to_vec(), objective);
        if let Ok(s) = extract_schedule(model, &point) {
            if s.validate(self.inst).is_ok() {
                self.offer(s);
            }
        }
    }

    fn run(mut self) -> Result<SolveReport, SolveError> {
        let inst = self.inst;
        let g = inst.graph();
        self.dual = trivial_lower_bound(inst);
        self.record();

        let budget = self.config.heuristic_budget.min(self.config.time_limit);
        if self.config.heuristics {
            if let Some(s) = warm_start(inst, budget) {
                self.offer(s);
            }
        }
        if self.primal() <= self.dual {
            return Ok(self.finish(SolveStatus::Optimal));
        }

        // a clique larger than m or an exact coloring search settles
        // feasibility without the LP
        if greedy_maximal_clique(g, self.config.seed).len() > inst.machines() {
            return Ok(self.finish(SolveStatus::Infeasible));
        }
        if self.incumbent.is_none() {
            match find_k_coloring(g, inst.machines(), PRESOLVE_COLORING_NODES) {
                ColorSearch::Impossible => return Ok(self.finish(SolveStatus::Infeasible)),
                ColorSearch::Found(colors) if self.config.heuristics => {
                    if let Some(s) = list_schedule(inst, Some(&Coloring::from_colors(colors))) {
                        let left = self.deadline.saturating_duration_since(Instant::now()).min(budget);
                        self.offer(local_search(inst, &s, left));
                    }
                }
                _ => {}
            }
            if self.primal() <= self.dual {
                return Ok(self.finish(SolveStatus::Optimal));
            }
        }

        let model = self.build_model()?;
        self.pool_lp = model.lp.clone();
        self.model = Some(model);

        let mut root = match self.backend.open(&self.pool_lp) {
            Ok(s) => s,
            Err(_) if self.out_of_time() => return Ok(self.finish_by_bounds()),
            Err(e) => return Err(SolveError::RootLp(e)),
        };
        if root.solution().status != LpStatus::Optimal {
            return Ok(self.finish(SolveStatus::Infeasible));
        }
        self.report.root_lp = Some(root.solution().objective);
        self.raise_dual(integral_bound(root.solution().objective));

        if self.config.cuts != CutSelection::None {
            if !self.cut_loop(&mut root)? {
                return Ok(self.finish(SolveStatus::Infeasible));
            }
            self.report.root_lp_after_cuts = Some(root.solution().objective);
            self.raise_dual(integral_bound(root.solution().objective));
        }

        let root_sol = root.solution().clone();
        self.try_point(&root_sol.values, root_sol.objective);
        let mut heap = BinaryHeap::new();
        let mut seq = 0u64;
        heap.push(SearchNode {
            fixings: Vec::new(),
            bound: self.dual,
            depth: 0,
            up: true,
            seq,
            values: root_sol.values,
            session: Some(root),
        });
        let mut stored = 1usize;
        // bound of subtrees dropped after LP failures
        let mut abandoned: Option<u64> = None;
        let up_first = self.config.formulation == Formulation::Af;

        while let Some(mut node) = heap.pop() {
            if node.session.is_some() {
                stored -= 1;
            }
            if node.bound >= self.primal() {
                heap.clear();
                break;
            }
            self.raise_dual(node.bound.min(abandoned.unwrap_or(u64::MAX)));
            if self.out_of_time() || self.config.node_limit.is_some_and(|l| self.report.nodes >= l) {
                heap.push(node);
                break;
            }
            self.report.nodes += 1;

            if !self.config.root_only && node.depth > 0 && self.config.cuts != CutSelection::None {
                let mut session = match node.session.take() {
                    Some(s) => s,
                    None => match self.rebuild_session(&node.fixings) {
                        Ok(s) => s,
                        Err(_) => {
                            abandoned = Some(abandoned.map_or(node.bound, |a| a.min(node.bound)));
                            continue;
                        }
                    },
                };
                if !self.cut_loop(&mut session)? {
                    continue;
                }
                let sol = session.solution();
                node.values = sol.values.clone();
                node.bound = node.bound.max(integral_bound(sol.objective));
                node.session = Some(session);
                if node.bound >= self.primal() {
                    continue;
                }
            }

            let Some(j) = self.branching_var(&node.values) else {
                let y = node.values[self.model.as_ref().unwrap().makespan_var()];
                self.try_point(&node.values.clone(), y);
                continue;
            };

            let order: [f64; 2] = [1.0, 0.0];
            let mut parent = node.session.take();
            for (i, &val) in order.iter().enumerate() {
                let last = i + 1 == order.len();
                let session = match (&parent, last) {
                    (Some(s), false) => Ok(s.fork()),
                    (Some(_), true) => Ok(parent.take().unwrap()),
                    (None, _) => self.rebuild_session(&node.fixings),
                };
                let mut fixings = node.fixings.clone();
                fixings.push((j, val));
                let solved: Result<(Box<dyn LpSession>, LpSolution), LpError> = session.and_then(|mut s| {
                    let sol = s.fix_var(j, val)?.clone();
                    Ok((s, sol))
                });
                let (session, sol) = match solved {
                    Ok(x) => x,
                    Err(e) => {
                        debug!("abandoning child after LP failure: {e}");
                        abandoned = Some(abandoned.map_or(node.bound, |a| a.min(node.bound)));
                        continue;
                    }
                };
                if sol.status != LpStatus::Optimal {
                    continue;
                }
                let bound = integral_bound(sol.objective).max(node.bound);
                self.try_point(&sol.values, sol.objective);
                if bound >= self.primal() {
                    continue;
                }
                seq += 1;
                let keep = stored < SESSION_CAP;
                if keep {
                    stored += 1;
                }
                heap.push(SearchNode {
                    fixings,
                    bound,
                    depth: node.depth + 1,
                    up: up_first && val == 1.0,
                    seq,
                    values: sol.values,
                    session: keep.then_some(session),
                });
            }
        }

        let open_bound = heap.peek().map(|n| n.bound);
        match (open_bound, abandoned) {
            (None, None) => {
                let status = if self.incumbent.is_some() {
                    SolveStatus::Optimal
                } else {
                    SolveStatus::Infeasible
                };
                Ok(self.finish(status))
            }
            (a, b) => {
                let bound = a.unwrap_or(u64::MAX).min(b.unwrap_or(u64::MAX));
                self.raise_dual(bound);
                Ok(self.finish_by_bounds())
            }
        }
    }

    fn finish_by_bounds(self) -> SolveReport {
        let status = match &self.incumbent {
            Some(s) if s.makespan <= self.dual => SolveStatus::Optimal,
            Some(_) => SolveStatus::Feasible,
            None => SolveStatus::Unknown,
        };
        self.finish(status)
    }
}

fn new_solver<'a>(inst: &'a Instance, config: &'a SolveConfig, backend: Box<dyn LpBackend>) -> Solver<'a> {
    let start = Instant::now();
    Solver {
        inst,
        config,
        backend,
        start,
        deadline: start + config.time_limit,
        model: None,
        pool_lp: LinearProgram::new(),
        incumbent: None,
        dual: 0,
        report: SolveReport {
            instance: inst.name.clone(),
            formulation: config.formulation,
            cuts: config.cuts,
            seed: config.seed,
            status: SolveStatus::Unknown,
            primal: None,
            dual: None,
            nodes: 0,
            cuts_added: BTreeMap::new(),
            inexact_separations: 0,
            root_lp: None,
            root_lp_after_cuts: None,
            elapsed: Duration::ZERO,
            schedule: None,
            trace: Vec::new(),
        },
        added: Vec::new(),
    }
}

/// Solves `inst` to optimality or until the time or node limit.
pub fn solve(inst: &Instance, config: &SolveConfig) -> Result<SolveReport, SolveError> {
    let backend: Box<dyn LpBackend> = match config.backend {
        BackendChoice::Dense => Box::new(DenseSimplex::default()),
        BackendChoice::Sparse => Box::new(SparseSimplex {
            time_limit: Some(config.time_limit),
        }),
    };
    new_solver(inst, config, backend).run()
}

/// Root relaxation values before and after the cut loop of `config`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootBounds {
    pub lp: f64,
    pub after_cuts: f64,
    pub cuts: Vec<CutRow>,
}

/// Solves only the root LP of `config`'s model and runs its cut loop,
/// skipping heuristics and presolve. `+inf` marks an infeasible relaxation.
pub fn root_bounds(inst: &Instance, config: &SolveConfig) -> Result<RootBounds, SolveError> {
    let backend: Box<dyn LpBackend> = match config.backend {
        BackendChoice::Dense => Box::new(DenseSimplex::default()),
        BackendChoice::Sparse => Box::new(SparseSimplex::default()),
    };
    let mut solver = new_solver(inst, config, backend);
    let model = solver.build_model()?;
    solver.pool_lp = model.lp.clone();
    solver.model = Some(model);
    let mut root = solver.backend.open(&solver.pool_lp).map_err(SolveError::RootLp)?;
    if root.solution().status != LpStatus::Optimal {
        return Ok(RootBounds {
            lp: f64::INFINITY,
            after_cuts: f64::INFINITY,
            cuts: Vec::new(),
        });
    }
    let lp = root.solution().objective;
    let after_cuts = if config.cuts == CutSelection::None || solver.cut_loop(&mut root)? {
        root.solution().objective
    } else {
        f64::INFINITY
    };
    Ok(RootBounds {
        lp,
        after_cuts,
        cuts: solver.added,
    })
}
