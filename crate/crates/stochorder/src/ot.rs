//! Fréchet-class optimal-transport bounds for supermodular costs in two
//! dimensions, plus an exhaustive assignment oracle for small discrete
//! instances.
//!
//! For a supermodular cost the transport extremes over all couplings of two
//! fixed marginals are attained at the counter-monotonic (minimum) and
//! comonotonic (maximum) couplings, so evaluating both is a pair of
//! one-dimensional integrals.

use crate::couplings::{comonotonic_version, countermono_version, expectation_of};
use crate::dist::Distribution;
use crate::extmath::{MeanClass, NonConvergent, QuadConfig};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OtError {
    #[error("cost is not declared supermodular")]
    NotSupermodular,
    #[error("random 4-point supermodularity spot check failed at ({x1}, {y1}) vs ({x2}, {y2})")]
    SpotCheckFailed { x1: f64, y1: f64, x2: f64, y2: f64 },
    #[error("assignment oracle handles at most {cap} atoms, got {n}")]
    TooManyAtoms { n: usize, cap: usize },
    #[error("atom lists must be nonempty and of equal length")]
    BadAtoms,
    #[error("unknown cost name: {0}")]
    UnknownCost(String),
    #[error(transparent)]
    NonConvergent(#[from] NonConvergent),
    #[error("coupling construction failed: {0}")]
    Coupling(String),
}

/// A bivariate cost function with a declared supermodularity status.
///
/// Declared-supermodular costs are spot-verified on random 4-point lattices
/// at construction: `c(x) + c(y) ≤ c(x∧y) + c(x∨y)` within 1e−12. This
/// catches sign errors cheaply without attempting a proof.
#[derive(Clone)]
pub struct CostFn {
    evaluator: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    declared_supermodular: bool,
}

impl std::fmt::Debug for CostFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CostFn")
            .field("declared_supermodular", &self.declared_supermodular)
            .finish_non_exhaustive()
    }
}

const SPOT_CHECKS: usize = 128;

impl CostFn {
    pub fn new(
        evaluator: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
        declared_supermodular: bool,
    ) -> Result<CostFn, OtError> {
        if declared_supermodular {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5f3c);
            for _ in 0..SPOT_CHECKS {
                let (x1, y1): (f64, f64) =
                    (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                let (x2, y2): (f64, f64) =
                    (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                let lo = evaluator(x1.min(x2), y1.min(y2));
                let hi = evaluator(x1.max(x2), y1.max(y2));
                if evaluator(x1, y1) + evaluator(x2, y2) > lo + hi + 1e-12 {
                    return Err(OtError::SpotCheckFailed { x1, y1, x2, y2 });
                }
            }
        }
        Ok(CostFn {
            evaluator,
            declared_supermodular,
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.evaluator)(x, y)
    }

    pub fn declared_supermodular(&self) -> bool {
        self.declared_supermodular
    }

    /// Built-in costs: `product` (xy), `neg_sq_diff` (−(x−y)²),
    /// `cx_of_sum:w` ((x+y−w)₊), `abs_diff_neg` (−|x−y|).
    pub fn by_name(name: &str) -> Result<CostFn, OtError> {
        if let Some(w) = name.strip_prefix("cx_of_sum:") {
            let w: f64 = w
                .parse()
                .map_err(|_| OtError::UnknownCost(name.to_string()))?;
            return CostFn::new(Arc::new(move |x, y| (x + y - w).max(0.0)), true);
        }
        match name {
            "product" => CostFn::new(Arc::new(|x, y| x * y), true),
            "neg_sq_diff" => CostFn::new(Arc::new(|x, y| -(x - y) * (x - y)), true),
            "abs_diff_neg" => CostFn::new(Arc::new(|x, y| -(x - y).abs()), true),
            other => Err(OtError::UnknownCost(other.to_string())),
        }
    }
}

/// Transport extremes of `E[c(X, Y)]` over the Fréchet class of the two
/// marginals: `(min, max)` attained at the counter-monotonic and comonotonic
/// couplings respectively. Either value may be infinite or undefined.
pub fn ot_extremes_supermodular(
    dx: &Distribution,
    dy: &Distribution,
    c: &CostFn,
    cfg: &QuadConfig,
) -> Result<(MeanClass, MeanClass), OtError> {
    if !c.declared_supermodular {
        return Err(OtError::NotSupermodular);
    }
    let marginals = [dx.clone(), dy.clone()];
    let ct = countermono_version(&marginals).map_err(|e| OtError::Coupling(e.to_string()))?;
    let co = comonotonic_version(&marginals).map_err(|e| OtError::Coupling(e.to_string()))?;
    let min = expectation_of(&ct, |p| c.eval(p[0], p[1]), cfg)?;
    let max = expectation_of(&co, |p| c.eval(p[0], p[1]), cfg)?;
    Ok((min, max))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OtMode {
    Min,
    Max,
}

impl std::str::FromStr for OtMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(OtMode::Min),
            "max" => Ok(OtMode::Max),
            other => Err(format!("unknown mode: {other}")),
        }
    }
}

pub const ORACLE_CAP: usize = 9;

/// Exhaustive assignment oracle on uniform discrete laws: optimizes
/// `(1/n) Σ c(x_i, y_{σ(i)})` over all permutations `σ`. An unarguable
/// reference for the coupling-based evaluations at `n ≤ 9`.
pub fn assignment_oracle(
    xs: &[f64],
    ys: &[f64],
    c: &CostFn,
    mode: OtMode,
) -> Result<(f64, Vec<usize>), OtError> {
    let n = xs.len();
    if n == 0 || ys.len() != n {
        return Err(OtError::BadAtoms);
    }
    if n > ORACLE_CAP {
        return Err(OtError::TooManyAtoms { n, cap: ORACLE_CAP });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_perm = perm.clone();
    let mut best = value_of(xs, ys, &perm, c);
    // Heap's algorithm
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            let v = value_of(xs, ys, &perm, c);
            let improves = match mode {
                OtMode::Min => v < best,
                OtMode::Max => v > best,
            };
            if improves {
                best = v;
                best_perm = perm.clone();
            }
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok((best, best_perm))
}

fn value_of(xs: &[f64], ys: &[f64], perm: &[usize], c: &CostFn) -> f64 {
    let n = xs.len() as f64;
    xs.iter()
        .zip(perm)
        .map(|(x, &j)| c.eval(*x, ys[j]))
        .sum::<f64>()
        / n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_cost_uniform_extremes() {
        let c = CostFn::by_name("product").unwrap();
        let cfg = QuadConfig::default();
        let (min, max) =
            ot_extremes_supermodular(&Distribution::Uniform01, &Distribution::Uniform01, &c, &cfg)
                .unwrap();
        match (min, max) {
            (MeanClass::Finite(lo), MeanClass::Finite(hi)) => {
                assert!((lo - 1.0 / 6.0).abs() < 1e-8, "{lo}");
                assert!((hi - 1.0 / 3.0).abs() < 1e-8, "{hi}");
            }
            other => panic!("expected finite extremes, got {other:?}"),
        }
    }

    #[test]
    fn stop_loss_of_sum_cost() {
        let c = CostFn::by_name("cx_of_sum:1").unwrap();
        let cfg = QuadConfig::default();
        let (min, max) =
            ot_extremes_supermodular(&Distribution::Uniform01, &Distribution::Uniform01, &c, &cfg)
                .unwrap();
        assert_eq!(min, MeanClass::Finite(0.0));
        match max {
            MeanClass::Finite(v) => assert!((v - 0.25).abs() < 1e-8, "{v}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infinite_mean_sum_cost() {
        let x = Distribution::pareto(0.5).unwrap();
        let c = CostFn::new(Arc::new(|a, b| a + b), true).unwrap();
        let cfg = QuadConfig::default();
        let (min, _max) = ot_extremes_supermodular(&x, &x, &c, &cfg).unwrap();
        assert_eq!(min, MeanClass::PlusInf);
    }

    #[test]
    fn oracle_small_instances() {
        let c = CostFn::by_name("product").unwrap();
        let xs = [1.0, 2.0, 3.0];
        let (vmax, pmax) = assignment_oracle(&xs, &xs, &c, OtMode::Max).unwrap();
        assert!((vmax - 14.0 / 3.0).abs() < 1e-12);
        assert_eq!(pmax, vec![0, 1, 2]);
        let (vmin, pmin) = assignment_oracle(&xs, &xs, &c, OtMode::Min).unwrap();
        assert!((vmin - 10.0 / 3.0).abs() < 1e-12);
        assert_eq!(pmin, vec![2, 1, 0]);
        let (v1, p1) = assignment_oracle(&[5.0], &[7.0], &c, OtMode::Min).unwrap();
        assert_eq!((v1, p1), (35.0, vec![0]));
        assert!(matches!(
            assignment_oracle(&[0.0; 10], &[0.0; 10], &c, OtMode::Min),
            Err(OtError::TooManyAtoms { .. })
        ));
    }

    #[test]
    fn spot_check_rejects_submodular_declaration() {
        let err = CostFn::new(Arc::new(|x, y| (x - y) * (x - y)), true);
        assert!(matches!(err, Err(OtError::SpotCheckFailed { .. })));
        // but the same evaluator is fine when not declared supermodular
        assert!(CostFn::new(Arc::new(|x, y| (x - y) * (x - y)), false).is_ok());
    }

    #[test]
    fn unknown_cost_name() {
        assert!(matches!(
            CostFn::by_name("bogus"),
            Err(OtError::UnknownCost(_))
        ));
        assert!(CostFn::by_name("cx_of_sum:0.5").is_ok());
        assert!(CostFn::by_name("abs_diff_neg").is_ok());
        assert!(CostFn::by_name("neg_sq_diff").is_ok());
    }
}
