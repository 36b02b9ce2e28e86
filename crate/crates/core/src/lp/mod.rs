//! Linear programs and the relaxation backends.
//!
//! Two backends implement [`LpBackend`]:
//!
//! * [`DenseSimplex`], a bounded-variable revised simplex with a dense basis
//!   inverse. It is the reference implementation and is what [`solve_lp`]
//!   uses.
//! * [`SparseSimplex`], backed by `microlp` (sparse LU, dual simplex
//!   re-optimization). The branch-and-cut driver uses it by default because
//!   it warm-starts after bound fixings and added rows.
//!
//! Both minimize.

mod dense;
mod mps;
mod sparse;

use thiserror::Error;

pub use dense::DenseSimplex;
pub use mps::write_mps;
pub use sparse::SparseSimplex;

/// Primal feasibility tolerance used to accept a solution.
pub const FEASIBILITY_TOL: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LpError {
    #[error("variable {var}: lower bound {lo} exceeds upper bound {hi}")]
    InvalidBounds { var: usize, lo: f64, hi: f64 },
    #[error("row references variable {var}, only {count} exist")]
    VariableOutOfRange { var: usize, count: usize },
    #[error("non-finite coefficient or right-hand side")]
    NonFinite,
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("LP backend error: {0}")]
    Backend(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl Sense {
    pub fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        }
    }
}

/// Sparse linear row `Σ coeffs · x  (sense)  rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub coeffs: Vec<(usize, f64)>,
    pub sense: Sense,
    pub rhs: f64,
}

impl Row {
    pub fn new(coeffs: Vec<(usize, f64)>, sense: Sense, rhs: f64) -> Self {
        Self { coeffs, sense, rhs }
    }

    pub fn activity(&self, x: &[f64]) -> f64 {
        self.coeffs.iter().map(|&(j, a)| a * x[j]).sum()
    }

    /// How far `x` is outside the row (zero when satisfied).
    pub fn violation(&self, x: &[f64]) -> f64 {
        let lhs = self.activity(x);
        match self.sense {
            Sense::Le => (lhs - self.rhs).max(0.0),
            Sense::Ge => (self.rhs - lhs).max(0.0),
            Sense::Eq => (lhs - self.rhs).abs(),
        }
    }
}

/// `min c·x` subject to rows and variable bounds.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinearProgram {
    lower: Vec<f64>,
    upper: Vec<f64>,
    objective: Vec<f64>,
    rows: Vec<Row>,
}

impl LinearProgram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_var(&mut self, lo: f64, hi: f64, cost: f64) -> Result<usize, LpError> {
        let var = self.objective.len();
        if lo.is_nan() || hi.is_nan() || !cost.is_finite() {
            return Err(LpError::NonFinite);
        }
        if lo > hi {
            return Err(LpError::InvalidBounds { var, lo, hi });
        }
        self.lower.push(lo);
        self.upper.push(hi);
        self.objective.push(cost);
        Ok(var)
    }

    pub fn add_row(&mut self, row: Row) -> Result<usize, LpError> {
        self.check_row(&row)?;
        self.rows.push(row);
        Ok(self.rows.len() - 1)
    }

    pub(crate) fn check_row(&self, row: &Row) -> Result<(), LpError> {
        if !row.rhs.is_finite() {
            return Err(LpError::NonFinite);
        }
        for &(j, a) in &row.coeffs {
            if j >= self.num_vars() {
                return Err(LpError::VariableOutOfRange {
                    var: j,
                    count: self.num_vars(),
                });
            }
            if !a.is_finite() {
                return Err(LpError::NonFinite);
            }
        }
        Ok(())
    }

    pub fn set_bounds(&mut self, var: usize, lo: f64, hi: f64) -> Result<(), LpError> {
        if var >= self.num_vars() {
            return Err(LpError::VariableOutOfRange {
                var,
                count: self.num_vars(),
            });
        }
        if lo > hi {
            return Err(LpError::InvalidBounds { var, lo, hi });
        }
        self.lower[var] = lo;
        self.upper[var] = hi;
        Ok(())
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn objective(&self) -> &[f64] {
        &self.objective
    }

    pub fn objective_value(&self, x: &[f64]) -> f64 {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Largest row or bound violation of `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let bounds = x
            .iter()
            .enumerate()
            .map(|(j, &v)| (self.lower[j] - v).max(v - self.upper[j]).max(0.0));
        let rows = self.rows.iter().map(|r| r.violation(x));
        bounds.chain(rows).fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Meaningful only when optimal.
    pub objective: f64,
    /// Empty unless optimal.
    pub values: Vec<f64>,
}

impl LpSolution {
    pub(crate) fn infeasible() -> Self {
        Self {
            status: LpStatus::Infeasible,
            objective: f64::INFINITY,
            values: Vec::new(),
        }
    }

    pub(crate) fn unbounded() -> Self {
        Self {
            status: LpStatus::Unbounded,
            objective: f64::NEG_INFINITY,
            values: Vec::new(),
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// An LP held open for incremental modification and re-solving.
pub trait LpSession: Send {
    /// Solution of the current LP.
    fn solution(&self) -> &LpSolution;

    fn add_row(&mut self, row: Row) -> Result<&LpSolution, LpError>;

    /// Fixes `var` to `value` (both bounds).
    fn fix_var(&mut self, var: usize, value: f64) -> Result<&LpSolution, LpError>;

    /// Independent copy sharing no mutable state.
    fn fork(&self) -> Box<dyn LpSession>;
}

pub trait LpBackend: Send + Sync {
    fn name(&self) -> &'static str;

    fn solve(&self, lp: &LinearProgram) -> Result<LpSolution, LpError>;

    fn open(&self, lp: &LinearProgram) -> Result<Box<dyn LpSession>, LpError>;
}

/// Solves `lp` with the reference dense simplex.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    DenseSimplex::default().solve(lp)
}

/// Appends `row` to `lp` and re-solves with the reference backend.
pub fn add_row_and_resolve(lp: &mut LinearProgram, row: Row) -> Result<LpSolution, LpError> {
    lp.add_row(row)?;
    solve_lp(lp)
}
