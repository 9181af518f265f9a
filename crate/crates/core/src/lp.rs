//! Self-contained dense two-phase simplex.
//!
//! Solves `minimize c . x  subject to  A x = b, x >= 0`. The problems in
//! this crate are small and dense (convex-combination membership rows,
//! feasibility margins, minimal-cover scale minimization), so a tableau
//! method is adequate. Callers split free variables into differences of
//! non-negative pairs.
//!
//! Rows are equilibrated by their largest magnitude before solving, so the
//! phase-1 residual reported for infeasible systems is relative to each
//! row's scale.

pub(crate) struct StandardLp {
    cols: usize,
    objective: Vec<f64>,
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
}

#[derive(Debug, Clone)]
pub(crate) enum LpSolution {
    Optimal {
        x: Vec<f64>,
        /// Objective value at `x`, in the minimization convention.
        #[allow(dead_code)]
        value: f64,
    },
    Infeasible { residual: f64 },
    Unbounded,
}

const ENTER_EPS: f64 = 1e-9;
const PIVOT_EPS: f64 = 1e-11;

impl StandardLp {
    pub fn new(cols: usize) -> Self {
        StandardLp {
            cols,
            objective: vec![0.0; cols],
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn set_objective(&mut self, col: usize, coeff: f64) {
        self.objective[col] = coeff;
    }

    /// Add an equality row given as sparse (column, coefficient) entries.
    pub fn add_row(&mut self, entries: &[(usize, f64)], b: f64) {
        let mut row = vec![0.0; self.cols];
        for &(j, v) in entries {
            debug_assert!(j < self.cols);
            row[j] += v;
        }
        self.rows.push(row);
        self.rhs.push(b);
    }

    /// Two-phase solve. `feas_tol` bounds the acceptable phase-1 residual
    /// (in equilibrated row units).
    pub fn solve(&self, feas_tol: f64) -> LpSolution {
        let m = self.rows.len();
        let n = self.cols;
        if m == 0 {
            return LpSolution::Optimal {
                x: vec![0.0; n],
                value: 0.0,
            };
        }
        let width = n + m + 1; // structural + artificial + rhs
        let mut t = vec![0.0f64; m * width];
        for i in 0..m {
            let scale = self.rows[i]
                .iter()
                .fold(self.rhs[i].abs(), |acc, &v| acc.max(v.abs()))
                .max(1e-300);
            let inv = if scale > 1.0 { 1.0 / scale } else { 1.0 };
            let sign = if self.rhs[i] * inv < 0.0 { -1.0 } else { 1.0 };
            let f = inv * sign;
            let row = &mut t[i * width..(i + 1) * width];
            for j in 0..n {
                row[j] = self.rows[i][j] * f;
            }
            row[n + i] = 1.0;
            row[width - 1] = self.rhs[i] * f;
        }
        let mut basis: Vec<usize> = (n..n + m).collect();

        // Phase 1: minimize the sum of artificials. Reduced costs for the
        // structural columns are the negated column sums.
        let mut cost = vec![0.0f64; width];
        for i in 0..m {
            let row = &t[i * width..(i + 1) * width];
            for j in 0..n {
                cost[j] -= row[j];
            }
            cost[width - 1] -= row[width - 1];
        }
        if !pivot_loop(&mut t, &mut cost, &mut basis, m, n, width) {
            // Phase-1 objective is bounded below by zero; unbounded cannot
            // happen, but bail out defensively.
            return LpSolution::Infeasible { residual: f64::MAX };
        }
        let residual = -cost[width - 1];
        if residual > feas_tol {
            return LpSolution::Infeasible { residual };
        }

        // Drive remaining artificials out of the basis where possible.
        for i in 0..m {
            if basis[i] >= n {
                let row_off = i * width;
                if let Some(j) = (0..n).find(|&j| t[row_off + j].abs() > 1e-9) {
                    pivot(&mut t, &mut cost, m, width, i, j);
                    basis[i] = j;
                }
            }
        }

        // Phase 2: rebuild reduced costs from the true objective.
        let mut cost2 = vec![0.0f64; width];
        cost2[..n].copy_from_slice(&self.objective);
        for i in 0..m {
            let cb = if basis[i] < n {
                self.objective[basis[i]]
            } else {
                0.0
            };
            if cb != 0.0 {
                let row = t[i * width..(i + 1) * width].to_vec();
                for j in 0..width {
                    cost2[j] -= cb * row[j];
                }
            }
        }
        // Basic columns must show zero reduced cost exactly.
        for &b in &basis {
            if b < n {
                cost2[b] = 0.0;
            }
        }
        if !pivot_loop(&mut t, &mut cost2, &mut basis, m, n, width) {
            return LpSolution::Unbounded;
        }

        let mut x = vec![0.0; n];
        for i in 0..m {
            if basis[i] < n {
                x[basis[i]] = t[i * width + width - 1];
            }
        }
        let value = self
            .objective
            .iter()
            .zip(&x)
            .map(|(c, xi)| c * xi)
            .sum::<f64>();
        LpSolution::Optimal { x, value }
    }
}

/// Run simplex pivots until optimal (true) or unbounded (false). Entering
/// candidates are the structural columns only; artificials never re-enter.
fn pivot_loop(
    t: &mut [f64],
    cost: &mut [f64],
    basis: &mut [usize],
    m: usize,
    n: usize,
    width: usize,
) -> bool {
    let bland_after = 20 * (m + n) + 200;
    let hard_cap = 200 * (m + n) + 20_000;
    for iter in 0..hard_cap {
        let bland = iter >= bland_after;
        let entering = if bland {
            (0..n).find(|&j| cost[j] < -ENTER_EPS)
        } else {
            let mut best = None;
            let mut best_val = -ENTER_EPS;
            for j in 0..n {
                if cost[j] < best_val {
                    best_val = cost[j];
                    best = Some(j);
                }
            }
            best
        };
        let Some(enter) = entering else {
            return true;
        };
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            let a = t[i * width + enter];
            if a > PIVOT_EPS {
                let ratio = t[i * width + width - 1] / a;
                let better = if bland {
                    ratio < best_ratio - 1e-12
                        || (ratio < best_ratio + 1e-12
                            && leave.map_or(true, |l| basis[i] < basis[l]))
                } else {
                    ratio < best_ratio - 1e-12
                        || (ratio < best_ratio + 1e-12
                            && leave.map_or(true, |l| a > t[l * width + enter]))
                };
                if better {
                    best_ratio = ratio.max(0.0);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            return false;
        };
        pivot(t, cost, m, width, leave, enter);
        basis[leave] = enter;
    }
    // Iteration cap: accept the current basic solution. The callers'
    // verification layers catch a genuinely unconverged solve.
    true
}

fn pivot(t: &mut [f64], cost: &mut [f64], m: usize, width: usize, leave: usize, enter: usize) {
    let p = t[leave * width + enter];
    let inv = 1.0 / p;
    {
        let row = &mut t[leave * width..(leave + 1) * width];
        for v in row.iter_mut() {
            *v *= inv;
        }
        row[enter] = 1.0;
    }
    let pivot_row = t[leave * width..(leave + 1) * width].to_vec();
    for i in 0..m {
        if i == leave {
            continue;
        }
        let f = t[i * width + enter];
        if f != 0.0 {
            let row = &mut t[i * width..(i + 1) * width];
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
            row[enter] = 0.0;
        }
    }
    let f = cost[enter];
    if f != 0.0 {
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            *v -= f * pv;
        }
        cost[enter] = 0.0;
    }
}
