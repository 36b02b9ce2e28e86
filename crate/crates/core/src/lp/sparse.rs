use std::time::Duration;

use microlp::{ComparisonOp, OptimizationDirection, Problem, SolveOutcome, Variable};

use super::{LinearProgram, LpBackend, LpError, LpSession, LpSolution, LpStatus, Row, Sense};

/// LP backend built on the `microlp` sparse simplex. Sessions keep the
/// factorized basis and re-optimize with the dual simplex after each change.
#[derive(Clone, Debug, Default)]
pub struct SparseSimplex {
    /// Per-call limit handed to the solver; hitting it is reported as a
    /// backend error.
    pub time_limit: Option<Duration>,
}

fn op(sense: Sense) -> ComparisonOp {
    match sense {
        Sense::Le => ComparisonOp::Le,
        Sense::Ge => ComparisonOp::Ge,
        Sense::Eq => ComparisonOp::Eq,
    }
}

/// Sums repeated variables; microlp wants each variable at most once.
fn expr(vars: &[Variable], coeffs: &[(usize, f64)]) -> Vec<(Variable, f64)> {
    let mut merged: Vec<(usize, f64)> = coeffs.to_vec();
    merged.sort_by_key(|&(j, _)| j);
    merged.dedup_by(|b, a| {
        if a.0 == b.0 {
            a.1 += b.1;
            true
        } else {
            false
        }
    });
    merged
        .into_iter()
        .filter(|&(_, a)| a != 0.0)
        .map(|(j, a)| (vars[j], a))
        .collect()
}

struct MicroSession {
    vars: Vec<Variable>,
    num_vars: usize,
    state: Option<microlp::Solution>,
    current: LpSolution,
}

impl MicroSession {
    fn absorb(&mut self, outcome: Result<SolveOutcome, microlp::Error>) -> Result<(), LpError> {
        self.state = None;
        self.current = match outcome {
            Ok(SolveOutcome::Solution(sol)) => {
                let values: Vec<f64> = self.vars.iter().map(|&v| sol.var_value_raw(v)).collect();
                let current = LpSolution {
                    status: LpStatus::Optimal,
                    objective: sol.objective(),
                    values,
                };
                self.state = Some(sol);
                current
            }
            Ok(SolveOutcome::Interrupted(_)) => {
                return Err(LpError::Backend("time limit reached".into()));
            }
            Err(microlp::Error::Infeasible) => LpSolution::infeasible(),
            Err(microlp::Error::Unbounded) => LpSolution::unbounded(),
            Err(e) => return Err(LpError::Backend(e.to_string())),
        };
        Ok(())
    }
}

impl LpSession for MicroSession {
    fn solution(&self) -> &LpSolution {
        &self.current
    }

    fn add_row(&mut self, row: Row) -> Result<&LpSolution, LpError> {
        if row.coeffs.iter().any(|&(j, _)| j >= self.num_vars) {
            let var = row.coeffs.iter().map(|&(j, _)| j).max().unwrap_or(0);
            return Err(LpError::VariableOutOfRange {
                var,
                count: self.num_vars,
            });
        }
        if !row.rhs.is_finite() || row.coeffs.iter().any(|&(_, a)| !a.is_finite()) {
            return Err(LpError::NonFinite);
        }
        // infeasible and unbounded states have nothing to warm-start from;
        // infeasibility persists under added rows
        if let Some(state) = self.state.take() {
            let e = expr(&self.vars, &row.coeffs);
            let outcome = state.add_constraint(e, op(row.sense), row.rhs);
            self.absorb(outcome)?;
        } else if self.current.status == LpStatus::Unbounded {
            return Err(LpError::Backend("cannot modify an unbounded LP".into()));
        }
        Ok(&self.current)
    }

    fn fix_var(&mut self, var: usize, value: f64) -> Result<&LpSolution, LpError> {
        if var >= self.num_vars {
            return Err(LpError::VariableOutOfRange {
                var,
                count: self.num_vars,
            });
        }
        if let Some(state) = self.state.take() {
            let outcome = state.fix_var(self.vars[var], value);
            self.absorb(outcome)?;
        } else if self.current.status == LpStatus::Unbounded {
            return Err(LpError::Backend("cannot modify an unbounded LP".into()));
        }
        Ok(&self.current)
    }

    fn fork(&self) -> Box<dyn LpSession> {
        Box::new(MicroSession {
            vars: self.vars.clone(),
            num_vars: self.num_vars,
            state: self.state.clone(),
            current: self.current.clone(),
        })
    }
}

impl SparseSimplex {
    fn session(&self, lp: &LinearProgram) -> Result<MicroSession, LpError> {
        let mut problem = Problem::new(OptimizationDirection::Minimize);
        if let Some(limit) = self.time_limit {
            problem.set_time_limit(limit);
        }
        let vars: Vec<Variable> = (0..lp.num_vars())
            .map(|j| problem.add_var(lp.objective()[j], (lp.lower()[j], lp.upper()[j])))
            .collect();
        for row in lp.rows() {
            lp.check_row(row)?;
            problem.add_constraint(expr(&vars, &row.coeffs), op(row.sense), row.rhs);
        }
        let mut session = MicroSession {
            vars,
            num_vars: lp.num_vars(),
            state: None,
            current: LpSolution::infeasible(),
        };
        session.absorb(problem.solve())?;
        Ok(session)
    }
}

impl LpBackend for SparseSimplex {
    fn name(&self) -> &'static str {
        "sparse"
    }

    fn solve(&self, lp: &LinearProgram) -> Result<LpSolution, LpError> {
        Ok(self.session(lp)?.current)
    }

    fn open(&self, lp: &LinearProgram) -> Result<Box<dyn LpSession>, LpError> {
        Ok(Box::new(self.session(lp)?))
    }
}
