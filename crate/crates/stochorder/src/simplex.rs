//! A small dense simplex solver for equality-form linear programs.
//!
//! Solves `min cᵀx  s.t.  Ax = b, x ≥ 0` from a caller-supplied feasible
//! starting basis. Bland's rule is used throughout, so degenerate problems
//! (ubiquitous here: the supermodular-cone constraints have zero right-hand
//! sides) cannot cycle. Dimensions stay at desk scale (a few hundred rows),
//! so a dense tableau is the simplest correct choice.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("objective is unbounded below")]
    Unbounded,
    #[error("iteration limit reached")]
    IterationLimit,
    #[error("starting basis is infeasible or singular")]
    BadBasis,
}

/// `min cᵀx  s.t. Ax = b, x ≥ 0`, with `basis[i]` the index of the variable
/// basic in row `i`. The basis columns must form the identity in `rows`
/// (after any row scaling done by the caller) and `b ≥ 0`.
pub struct StandardLp {
    pub costs: Vec<f64>,
    pub rows: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
    pub basis: Vec<usize>,
}

#[derive(Debug)]
pub struct LpSolution {
    pub objective: f64,
    pub x: Vec<f64>,
}

const PIVOT_EPS: f64 = 1e-9;
const MAX_ITERS: usize = 200_000;

pub fn solve(lp: StandardLp) -> Result<LpSolution, LpError> {
    let m = lp.rows.len();
    let n = lp.costs.len();
    if lp.rhs.len() != m || lp.basis.len() != m || lp.rows.iter().any(|r| r.len() != n) {
        return Err(LpError::BadBasis);
    }
    if lp.rhs.iter().any(|b| *b < -PIVOT_EPS) {
        return Err(LpError::BadBasis);
    }
    // tableau: rows of [A | b], reduced-cost row maintained separately
    let mut t: Vec<Vec<f64>> = lp
        .rows
        .iter()
        .zip(&lp.rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(*b);
            row
        })
        .collect();
    let mut basis = lp.basis.clone();

    // verify the declared basis columns are identity-like
    for (i, &bi) in basis.iter().enumerate() {
        if bi >= n {
            return Err(LpError::BadBasis);
        }
        for (k, row) in t.iter().enumerate() {
            let expect = if k == i { 1.0 } else { 0.0 };
            if (row[bi] - expect).abs() > 1e-7 {
                return Err(LpError::BadBasis);
            }
        }
    }

    // reduced costs r = c − c_B B⁻¹ A; with identity basis columns this is
    // c minus the basic-cost combination of the tableau rows
    let mut red: Vec<f64> = lp.costs.clone();
    red.push(0.0); // objective value slot (negated)
    for (i, &bi) in basis.iter().enumerate() {
        let cb = lp.costs[bi];
        if cb != 0.0 {
            for j in 0..=n {
                red[j] -= cb * t[i][j];
            }
        }
    }

    for _ in 0..MAX_ITERS {
        // Bland: entering = lowest index with negative reduced cost
        let Some(enter) = (0..n).find(|&j| red[j] < -PIVOT_EPS) else {
            let mut x = vec![0.0; n];
            for (i, &bi) in basis.iter().enumerate() {
                x[bi] = t[i][n];
            }
            return Ok(LpSolution {
                objective: -red[n],
                x,
            });
        };
        // ratio test with Bland tie-break on the basic variable index
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            let a = t[i][enter];
            if a > PIVOT_EPS {
                let ratio = t[i][n] / a;
                let better = ratio < best - PIVOT_EPS
                    || (ratio < best + PIVOT_EPS
                        && leave.map_or(true, |l| basis[i] < basis[l]));
                if better {
                    best = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            return Err(LpError::Unbounded);
        };
        // pivot
        let piv = t[leave][enter];
        for v in t[leave].iter_mut() {
            *v /= piv;
        }
        for i in 0..m {
            if i != leave {
                let f = t[i][enter];
                if f != 0.0 {
                    for j in 0..=n {
                        t[i][j] -= f * t[leave][j];
                    }
                }
            }
        }
        let f = red[enter];
        if f != 0.0 {
            for j in 0..=n {
                red[j] -= f * t[leave][j];
            }
        }
        basis[leave] = enter;
    }
    Err(LpError::IterationLimit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_textbook_max_as_min() {
        // max 3x + 5y s.t. x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18  →  36 at (2,6)
        // min −3x − 5y with slacks s1..s3 basic
        let lp = StandardLp {
            costs: vec![-3.0, -5.0, 0.0, 0.0, 0.0],
            rows: vec![
                vec![1.0, 0.0, 1.0, 0.0, 0.0],
                vec![0.0, 2.0, 0.0, 1.0, 0.0],
                vec![3.0, 2.0, 0.0, 0.0, 1.0],
            ],
            rhs: vec![4.0, 12.0, 18.0],
            basis: vec![2, 3, 4],
        };
        let s = solve(lp).unwrap();
        assert!((s.objective + 36.0).abs() < 1e-9);
        assert!((s.x[0] - 2.0).abs() < 1e-9 && (s.x[1] - 6.0).abs() < 1e-9);
    }

    #[test]
    fn handles_degenerate_zero_rhs() {
        // min −x s.t. x − s = 0 (i.e. x ≤ s), x + t = 1: optimum −1
        let lp = StandardLp {
            costs: vec![-1.0, 0.0, 0.0],
            rows: vec![vec![-1.0, 1.0, 0.0], vec![1.0, 0.0, 1.0]],
            rhs: vec![0.0, 1.0],
            basis: vec![1, 2],
        };
        let s = solve(lp).unwrap();
        assert!((s.objective + 1.0).abs() < 1e-9);
    }

    #[test]
    fn detects_unbounded() {
        // min −x s.t. x − s = 0, no upper bound
        let lp = StandardLp {
            costs: vec![-1.0, 0.0],
            rows: vec![vec![-1.0, 1.0]],
            rhs: vec![0.0],
            basis: vec![1],
        };
        assert_eq!(solve(lp).unwrap_err(), LpError::Unbounded);
    }

    #[test]
    fn rejects_bad_basis() {
        let lp = StandardLp {
            costs: vec![1.0, 0.0],
            rows: vec![vec![1.0, 2.0]],
            rhs: vec![1.0],
            basis: vec![1],
        };
        assert_eq!(solve(lp).unwrap_err(), LpError::BadBasis);
    }
}
