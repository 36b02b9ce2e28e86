use super::{LinearProgram, LpBackend, LpError, LpSession, LpSolution, LpStatus, Row, Sense, FEASIBILITY_TOL};

/// Bounded-variable revised primal simplex with an explicit dense basis
/// inverse.
///
/// Rows become equalities with a slack per row; an artificial per row gives
/// the phase-one starting basis. Pricing is Dantzig's rule until
/// `10 · (rows + cols)` iterations have passed, then Bland's rule, which
/// cannot cycle.
#[derive(Clone, Debug)]
pub struct DenseSimplex {
    /// Reduced-cost tolerance.
    pub optimality_tol: f64,
    /// Smallest pivot magnitude accepted in the ratio test.
    pub pivot_tol: f64,
    /// Iterations between refactorizations of the basis inverse.
    pub refactor_every: usize,
}

impl Default for DenseSimplex {
    fn default() -> Self {
        Self {
            optimality_tol: 1e-9,
            pivot_tol: 1e-9,
            refactor_every: 64,
        }
    }
}

impl LpBackend for DenseSimplex {
    fn name(&self) -> &'static str {
        "dense"
    }

    fn solve(&self, lp: &LinearProgram) -> Result<LpSolution, LpError> {
        Tableau::new(lp, self)?.run()
    }

    fn open(&self, lp: &LinearProgram) -> Result<Box<dyn LpSession>, LpError> {
        let solution = self.solve(lp)?;
        Ok(Box::new(DenseSession {
            backend: self.clone(),
            lp: lp.clone(),
            solution,
        }))
    }
}

/// Session that re-solves from scratch after every change.
#[derive(Clone)]
struct DenseSession {
    backend: DenseSimplex,
    lp: LinearProgram,
    solution: LpSolution,
}

impl LpSession for DenseSession {
    fn solution(&self) -> &LpSolution {
        &self.solution
    }

    fn add_row(&mut self, row: Row) -> Result<&LpSolution, LpError> {
        self.lp.add_row(row)?;
        self.solution = self.backend.solve(&self.lp)?;
        Ok(&self.solution)
    }

    fn fix_var(&mut self, var: usize, value: f64) -> Result<&LpSolution, LpError> {
        let (lo, hi) = (self.lp.lower()[var], self.lp.upper()[var]);
        if value < lo - FEASIBILITY_TOL || value > hi + FEASIBILITY_TOL {
            self.solution = LpSolution::infeasible();
            self.lp.set_bounds(var, value, value)?;
            return Ok(&self.solution);
        }
        self.lp.set_bounds(var, value, value)?;
        self.solution = self.backend.solve(&self.lp)?;
        Ok(&self.solution)
    }

    fn fork(&self) -> Box<dyn LpSession> {
        Box::new(self.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Position {
    Basic,
    AtLower,
    AtUpper,
    /// Nonbasic free variable parked at zero.
    FreeZero,
}

enum Step {
    Optimal,
    Unbounded,
    Moved,
}

struct Tableau<'a> {
    lp: &'a LinearProgram,
    opts: &'a DenseSimplex,
    rows: usize,
    structurals: usize,
    /// Sparse columns: structurals, then slacks, then artificials.
    columns: Vec<Vec<(usize, f64)>>,
    lower: Vec<f64>,
    upper: Vec<f64>,
    rhs: Vec<f64>,
    x: Vec<f64>,
    position: Vec<Position>,
    basis: Vec<usize>,
    /// Row-major `rows × rows` inverse of the basis matrix.
    binv: Vec<f64>,
    iterations: usize,
    since_refactor: usize,
}

impl<'a> Tableau<'a> {
    fn new(lp: &'a LinearProgram, opts: &'a DenseSimplex) -> Result<Self, LpError> {
        let rows = lp.num_rows();
        let structurals = lp.num_vars();
        let total = structurals + 2 * rows;
        let mut columns: Vec<Vec<(usize, f64)>> = vec![Vec::new(); total];
        let mut rhs = Vec::with_capacity(rows);

        for (i, row) in lp.rows().iter().enumerate() {
            lp.check_row(row)?;
            for &(j, a) in &row.coeffs {
                columns[j].push((i, a));
            }
            rhs.push(row.rhs);
        }
        // merge repeated (row, column) entries
        for col in columns.iter_mut().take(structurals) {
            col.sort_by_key(|&(i, _)| i);
            col.dedup_by(|b, a| {
                if a.0 == b.0 {
                    a.1 += b.1;
                    true
                } else {
                    false
                }
            });
            col.retain(|&(_, a)| a != 0.0);
        }

        let mut lower = Vec::with_capacity(total);
        let mut upper = Vec::with_capacity(total);
        lower.extend_from_slice(lp.lower());
        upper.extend_from_slice(lp.upper());
        for (i, row) in lp.rows().iter().enumerate() {
            columns[structurals + i].push((i, 1.0));
            let (lo, hi) = match row.sense {
                Sense::Le => (0.0, f64::INFINITY),
                Sense::Ge => (f64::NEG_INFINITY, 0.0),
                Sense::Eq => (0.0, 0.0),
            };
            lower.push(lo);
            upper.push(hi);
        }

        let mut x = vec![0.0; total];
        let mut position = vec![Position::AtLower; total];
        for j in 0..structurals + rows {
            let (lo, hi) = (lower[j], upper[j]);
            (x[j], position[j]) = if lo.is_finite() {
                (lo, Position::AtLower)
            } else if hi.is_finite() {
                (hi, Position::AtUpper)
            } else {
                (0.0, Position::FreeZero)
            };
        }

        let mut residual = rhs.clone();
        for (j, col) in columns.iter().enumerate().take(structurals) {
            if x[j] != 0.0 {
                for &(i, a) in col {
                    residual[i] -= a * x[j];
                }
            }
        }
        let mut binv = vec![0.0; rows * rows];
        let mut basis = Vec::with_capacity(rows);
        for (i, &r) in residual.iter().enumerate() {
            let sign = if r >= 0.0 { 1.0 } else { -1.0 };
            let art = structurals + rows + i;
            columns[art].push((i, sign));
            lower.push(0.0);
            upper.push(f64::INFINITY);
            x[art] = r.abs();
            position[art] = Position::Basic;
            basis.push(art);
            binv[i * rows + i] = sign;
        }

        Ok(Self {
            lp,
            opts,
            rows,
            structurals,
            columns,
            lower,
            upper,
            rhs,
            x,
            position,
            basis,
            binv,
            iterations: 0,
            since_refactor: 0,
        })
    }

    fn artificial_start(&self) -> usize {
        self.structurals + self.rows
    }

    fn run(mut self) -> Result<LpSolution, LpError> {
        let total = self.columns.len();
        let art = self.artificial_start();

        if self.rows > 0 {
            let mut phase_one = vec![0.0; total];
            phase_one[art..].iter_mut().for_each(|c| *c = 1.0);
            self.optimize(&phase_one, true)?;
            self.refactor()?;
            let infeasibility: f64 = self.x[art..].iter().sum();
            let scale = 1.0 + self.rhs.iter().fold(0.0f64, |m, b| m.max(b.abs()));
            if infeasibility > FEASIBILITY_TOL * scale {
                return Ok(LpSolution::infeasible());
            }
        }
        for j in art..total {
            self.upper[j] = 0.0;
            if self.position[j] != Position::Basic {
                self.x[j] = 0.0;
                self.position[j] = Position::AtLower;
            }
        }

        let mut costs = vec![0.0; total];
        costs[..self.structurals].copy_from_slice(self.lp.objective());
        if !self.optimize(&costs, false)? {
            return Ok(LpSolution::unbounded());
        }
        self.refactor()?;

        let mut values = self.x[..self.structurals].to_vec();
        for (j, v) in values.iter_mut().enumerate() {
            *v = v.clamp(self.lower[j], self.upper[j]);
        }
        let scale = 1.0 + self.rhs.iter().fold(0.0f64, |m, b| m.max(b.abs()));
        let violation = self.lp.max_violation(&values);
        if violation > FEASIBILITY_TOL * scale {
            return Err(LpError::NumericalFailure(format!(
                "final point violates the LP by {violation:e}"
            )));
        }
        Ok(LpSolution {
            status: LpStatus::Optimal,
            objective: self.lp.objective_value(&values),
            values,
        })
    }

    /// Runs simplex iterations for `costs`. Returns `false` on unboundedness.
    fn optimize(&mut self, costs: &[f64], phase_one: bool) -> Result<bool, LpError> {
        let bland_after = 10 * (self.rows + self.structurals);
        let give_up = 50 * (self.rows + self.columns.len()) + 1000;
        let mut local = 0usize;
        loop {
            if local > give_up {
                return Err(LpError::NumericalFailure(format!(
                    "no convergence after {local} iterations"
                )));
            }
            if self.since_refactor >= self.opts.refactor_every {
                self.refactor()?;
            }
            let bland = local >= bland_after;
            match self.step(costs, bland, phase_one)? {
                Step::Optimal => return Ok(true),
                Step::Unbounded => return Ok(false),
                Step::Moved => {}
            }
            local += 1;
            self.iterations += 1;
        }
    }

    fn step(&mut self, costs: &[f64], bland: bool, phase_one: bool) -> Result<Step, LpError> {
        let m = self.rows;
        let mut duals = vec![0.0; m];
        for (i, &b) in self.basis.iter().enumerate() {
            let c = costs[b];
            if c != 0.0 {
                let row = &self.binv[i * m..(i + 1) * m];
                for (d, r) in duals.iter_mut().zip(row) {
                    *d += c * r;
                }
            }
        }

        let tol = self.opts.optimality_tol;
        let mut entering: Option<(usize, f64, f64)> = None;
        for (j, column) in self.columns.iter().enumerate() {
            let pos = self.position[j];
            if pos == Position::Basic || self.lower[j] == self.upper[j] {
                continue;
            }
            let d = costs[j] - column.iter().map(|&(i, a)| duals[i] * a).sum::<f64>();
            let dir = match pos {
                Position::AtLower if d < -tol => 1.0,
                Position::AtUpper if d > tol => -1.0,
                Position::FreeZero if d.abs() > tol => -d.signum(),
                _ => continue,
            };
            if bland {
                entering = Some((j, dir, d));
                break;
            }
            if entering.is_none_or(|(_, _, best)| d.abs() > best.abs()) {
                entering = Some((j, dir, d));
            }
        }
        let Some((enter, dir, _)) = entering else {
            return Ok(Step::Optimal);
        };

        let mut alpha = vec![0.0; m];
        for &(k, a) in &self.columns[enter] {
            for (i, al) in alpha.iter_mut().enumerate() {
                *al += self.binv[i * m + k] * a;
            }
        }

        let mut best: Option<(usize, f64)> = None;
        for (i, &al) in alpha.iter().enumerate() {
            let rate = -dir * al;
            let b = self.basis[i];
            let limit = if rate < -self.opts.pivot_tol && self.lower[b].is_finite() {
                (self.x[b] - self.lower[b]) / -rate
            } else if rate > self.opts.pivot_tol && self.upper[b].is_finite() {
                (self.upper[b] - self.x[b]) / rate
            } else {
                continue;
            };
            let limit = limit.max(0.0);
            let replace = match best {
                None => true,
                Some((r, t)) => {
                    if limit < t - 1e-12 {
                        true
                    } else if limit <= t + 1e-12 {
                        if bland {
                            b < self.basis[r]
                        } else {
                            al.abs() > alpha[r].abs()
                        }
                    } else {
                        false
                    }
                }
            };
            if replace {
                best = Some((i, limit));
            }
        }

        let flip = self.upper[enter] - self.lower[enter];
        let (theta, leaving) = match best {
            Some((r, t)) if t < flip => (t, Some(r)),
            _ if flip.is_finite() => (flip, None),
            _ => return Ok(Step::Unbounded),
        };

        for (i, &al) in alpha.iter().enumerate() {
            let b = self.basis[i];
            self.x[b] -= dir * al * theta;
        }
        self.x[enter] += dir * theta;

        match leaving {
            None => {
                // bound flip, basis unchanged
                (self.x[enter], self.position[enter]) = if dir > 0.0 {
                    (self.upper[enter], Position::AtUpper)
                } else {
                    (self.lower[enter], Position::AtLower)
                };
            }
            Some(r) => {
                let out = self.basis[r];
                let rate = -dir * alpha[r];
                (self.x[out], self.position[out]) = if rate < 0.0 {
                    (self.lower[out], Position::AtLower)
                } else {
                    (self.upper[out], Position::AtUpper)
                };
                if phase_one && out >= self.artificial_start() {
                    self.upper[out] = 0.0;
                }
                self.basis[r] = enter;
                self.position[enter] = Position::Basic;
                self.pivot(r, &alpha);
            }
        }
        Ok(Step::Moved)
    }

    fn pivot(&mut self, r: usize, alpha: &[f64]) {
        let m = self.rows;
        let inv = 1.0 / alpha[r];
        let (head, tail) = self.binv.split_at_mut(r * m);
        let (pivot_row, tail) = tail.split_at_mut(m);
        pivot_row.iter_mut().for_each(|v| *v *= inv);
        for (i, row) in head.chunks_exact_mut(m).enumerate() {
            let f = alpha[i];
            if f != 0.0 {
                row.iter_mut().zip(pivot_row.iter()).for_each(|(v, p)| *v -= f * p);
            }
        }
        for (i, row) in tail.chunks_exact_mut(m).enumerate() {
            let f = alpha[r + 1 + i];
            if f != 0.0 {
                row.iter_mut().zip(pivot_row.iter()).for_each(|(v, p)| *v -= f * p);
            }
        }
        self.since_refactor += 1;
    }

    /// Recomputes the basis inverse by Gauss-Jordan elimination and the basic
    /// values from the nonbasic ones.
    fn refactor(&mut self) -> Result<(), LpError> {
        let m = self.rows;
        self.since_refactor = 0;
        if m == 0 {
            return Ok(());
        }
        let mut a = vec![0.0; m * m];
        for (col, &b) in self.basis.iter().enumerate() {
            for &(i, v) in &self.columns[b] {
                a[i * m + col] = v;
            }
        }
        let mut inv = vec![0.0; m * m];
        for i in 0..m {
            inv[i * m + i] = 1.0;
        }
        for c in 0..m {
            let p = (c..m)
                .max_by(|&i, &k| a[i * m + c].abs().total_cmp(&a[k * m + c].abs()))
                .expect("non-empty range");
            let pv = a[p * m + c];
            if pv.abs() < 1e-12 {
                return Err(LpError::NumericalFailure("singular basis".into()));
            }
            if p != c {
                for k in 0..m {
                    a.swap(p * m + k, c * m + k);
                    inv.swap(p * m + k, c * m + k);
                }
            }
            let s = 1.0 / pv;
            for k in 0..m {
                a[c * m + k] *= s;
                inv[c * m + k] *= s;
            }
            for i in 0..m {
                if i == c {
                    continue;
                }
                let f = a[i * m + c];
                if f != 0.0 {
                    for k in 0..m {
                        a[i * m + k] -= f * a[c * m + k];
                        inv[i * m + k] -= f * inv[c * m + k];
                    }
                }
            }
        }
        self.binv = inv;

        let mut residual = self.rhs.clone();
        for (j, col) in self.columns.iter().enumerate() {
            if self.position[j] != Position::Basic && self.x[j] != 0.0 {
                for &(i, v) in col {
                    residual[i] -= v * self.x[j];
                }
            }
        }
        for (i, &b) in self.basis.iter().enumerate() {
            let row = &self.binv[i * m..(i + 1) * m];
            self.x[b] = row.iter().zip(&residual).map(|(p, r)| p * r).sum();
        }
        Ok(())
    }
}
