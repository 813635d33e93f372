//! Deciders for the univariate stochastic orders: convex, †convex,
//! increasing/decreasing convex, and first-order stochastic dominance.
//!
//! Every convex-family check runs through the stop-loss characterization:
//! `X` precedes `Y` when `E[(X−w)₋] ≤ E[(Y−w)₋]` and
//! `E[(X−w)₊] ≤ E[(Y−w)₊]` for all `w`, with comparisons taken in the
//! extended reals (`∞ ≤ ∞` holds). The †variants evaluate the same
//! inequalities under the relaxation that `∞ ≤ x` and `x ≤ −∞` count as
//! true. Discrete inputs are decided exactly at the union of atoms (the
//! stop-loss transforms are piecewise linear with kinks only there);
//! everything else is probed on a quantile-spaced grid and certified as
//! grid-numeric evidence.

use crate::dist::{DiscreteLaw, Distribution};
use crate::extmath::{ExtReal, MeanClass, QuadConfig};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Which defining inequality a witness violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
    Cdf,
}

/// A concrete parameter at which the defining inequality fails.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub param: f64,
    pub lhs: ExtReal,
    pub rhs: ExtReal,
    pub side: Side,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OrderResult {
    Holds,
    Fails { witness: Witness },
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "level", rename_all = "snake_case")]
pub enum Certification {
    /// Closed-form, complete check at breakpoints.
    Exact,
    /// Finite probe grid: a Fails is certified, a Holds is evidence.
    GridNumeric { grid_n: usize, tol: f64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderVerdict {
    pub result: OrderResult,
    pub certification: Certification,
}

impl OrderVerdict {
    pub fn holds(&self) -> bool {
        matches!(self.result, OrderResult::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self.result, OrderResult::Fails { .. })
    }

    pub fn is_exact(&self) -> bool {
        self.certification == Certification::Exact
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.result {
            OrderResult::Fails { witness } => Some(witness),
            _ => None,
        }
    }
}

/// The univariate orders exposed by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderRelation {
    Cx,
    CxDagger,
    Icx,
    Dcx,
    St,
}

impl std::str::FromStr for OrderRelation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cx" => Ok(OrderRelation::Cx),
            "cx_dagger" | "cx-dagger" => Ok(OrderRelation::CxDagger),
            "icx" => Ok(OrderRelation::Icx),
            "dcx" => Ok(OrderRelation::Dcx),
            "st" => Ok(OrderRelation::St),
            other => Err(format!("unknown order: {other}")),
        }
    }
}

/// Dispatch a relation by name.
pub fn check_order(
    rel: OrderRelation,
    x: &Distribution,
    y: &Distribution,
    cfg: &QuadConfig,
) -> OrderVerdict {
    match rel {
        OrderRelation::Cx => check_cx(x, y, cfg),
        OrderRelation::CxDagger => check_cx_dagger(x, y, cfg),
        OrderRelation::Icx => check_icx(x, y, cfg),
        OrderRelation::Dcx => check_dcx(x, y, cfg),
        OrderRelation::St => check_st(x, y, cfg),
    }
}

/// Convex order `X ≤cx Y`.
pub fn check_cx(x: &Distribution, y: &Distribution, cfg: &QuadConfig) -> OrderVerdict {
    check_stop_loss_family(x, y, cfg, Sides::BOTH, Comparator::Standard)
}

/// †convex order `X ≤†cx Y` (same inequalities under the relaxation).
pub fn check_cx_dagger(x: &Distribution, y: &Distribution, cfg: &QuadConfig) -> OrderVerdict {
    check_stop_loss_family(x, y, cfg, Sides::BOTH, Comparator::Relaxed)
}

/// Increasing convex order: the plus stop-loss family alone generates it.
pub fn check_icx(x: &Distribution, y: &Distribution, cfg: &QuadConfig) -> OrderVerdict {
    check_stop_loss_family(x, y, cfg, Sides::PLUS_ONLY, Comparator::Standard)
}

/// Decreasing convex order: the minus stop-loss family alone generates it.
pub fn check_dcx(x: &Distribution, y: &Distribution, cfg: &QuadConfig) -> OrderVerdict {
    check_stop_loss_family(x, y, cfg, Sides::MINUS_ONLY, Comparator::Standard)
}

/// What `X ≤cx Y` reduces to, from the mean classification of `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma1Reduction {
    /// Finite mean: the full two-sided check is needed.
    Full,
    /// `E[Y₊] = ∞`: `≤cx` coincides with `≤dcx`.
    DcxSuffices,
    /// `E[Y₋] = ∞`: `≤cx` coincides with `≤icx`.
    IcxSuffices,
    /// Both part means infinite: `X ≤cx Y` holds for every `X`.
    TriviallyHolds,
}

/// Diagnostic fast-path classification; the deciders themselves use plain
/// extended-real comparisons, which agree with this reduction.
pub fn lemma1_reduce(
    _x: &Distribution,
    y: &Distribution,
    cfg: &QuadConfig,
) -> Result<Lemma1Reduction, crate::extmath::NonConvergent> {
    Ok(match y.mean_class(cfg)? {
        MeanClass::Finite(_) => Lemma1Reduction::Full,
        MeanClass::PlusInf => Lemma1Reduction::DcxSuffices,
        MeanClass::MinusInf => Lemma1Reduction::IcxSuffices,
        MeanClass::Undefined => Lemma1Reduction::TriviallyHolds,
    })
}

/// First-order stochastic dominance `X ≤st Y`: `F_X(x) ≥ F_Y(x)` for all x.
pub fn check_st(x: &Distribution, y: &Distribution, cfg: &QuadConfig) -> OrderVerdict {
    if let (Some(dx), Some(dy)) = (x.as_discrete(), y.as_discrete()) {
        let mut probes: Vec<f64> = dx.atoms().iter().chain(dy.atoms()).copied().collect();
        probes.sort_by(|a, b| a.partial_cmp(b).unwrap());
        probes.dedup();
        for p in probes {
            let (fx, fy) = (dx.cdf(p), dy.cdf(p));
            if fx < fy - 1e-12 {
                return OrderVerdict {
                    result: OrderResult::Fails {
                        witness: Witness {
                            param: p,
                            lhs: ExtReal::Finite(fx),
                            rhs: ExtReal::Finite(fy),
                            side: Side::Cdf,
                        },
                    },
                    certification: Certification::Exact,
                };
            }
        }
        return OrderVerdict {
            result: OrderResult::Holds,
            certification: Certification::Exact,
        };
    }
    let cert = Certification::GridNumeric {
        grid_n: cfg.grid_n,
        tol: cfg.tol,
    };
    let mut near_tie = false;
    for p in probe_grid(x, y, cfg, &[]) {
        let (fx, fy) = (x.cdf(p), y.cdf(p));
        let gap = fy - fx;
        if gap > 10.0 * cfg.tol {
            return OrderVerdict {
                result: OrderResult::Fails {
                    witness: Witness {
                        param: p,
                        lhs: ExtReal::Finite(fx),
                        rhs: ExtReal::Finite(fy),
                        side: Side::Cdf,
                    },
                },
                certification: cert,
            };
        }
        if gap > 0.0 {
            near_tie = true;
        }
    }
    OrderVerdict {
        result: if near_tie {
            OrderResult::Inconclusive
        } else {
            OrderResult::Holds
        },
        certification: cert,
    }
}

#[derive(Clone, Copy)]
struct Sides {
    plus: bool,
    minus: bool,
}

impl Sides {
    const BOTH: Sides = Sides { plus: true, minus: true };
    const PLUS_ONLY: Sides = Sides { plus: true, minus: false };
    const MINUS_ONLY: Sides = Sides { plus: false, minus: true };
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Comparator {
    Standard,
    Relaxed,
}

enum Violation {
    None,
    NearTie,
    Certified,
}

fn compare(cmp: Comparator, lhs: ExtReal, rhs: ExtReal, margin: f64) -> Violation {
    if cmp == Comparator::Relaxed && (lhs == ExtReal::PosInf || rhs == ExtReal::NegInf) {
        return Violation::None;
    }
    match (lhs, rhs) {
        (ExtReal::Finite(a), ExtReal::Finite(b)) => {
            if a <= b {
                Violation::None
            } else if a - b > margin {
                Violation::Certified
            } else {
                Violation::NearTie
            }
        }
        _ => {
            if lhs.leq(&rhs) {
                Violation::None
            } else {
                Violation::Certified
            }
        }
    }
}

fn check_stop_loss_family(
    x: &Distribution,
    y: &Distribution,
    cfg: &QuadConfig,
    sides: Sides,
    cmp: Comparator,
) -> OrderVerdict {
    if let (Some(dx), Some(dy)) = (x.as_discrete(), y.as_discrete()) {
        return check_discrete_exact(&dx, &dy, sides, cmp);
    }
    let cert = Certification::GridNumeric {
        grid_n: cfg.grid_n,
        tol: cfg.tol,
    };
    let inconclusive = OrderVerdict {
        result: OrderResult::Inconclusive,
        certification: cert.clone(),
    };

    // Canonical probes first (w = 0, then finite means), then the quantile
    // grid in ascending order; this keeps witnesses reproducible.
    let (mcx, mcy) = match (x.mean_class(cfg), y.mean_class(cfg)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return inconclusive,
    };
    let mut canonical = vec![0.0];
    if let MeanClass::Finite(m) = mcx {
        canonical.push(m);
    }
    if let MeanClass::Finite(m) = mcy {
        canonical.push(m);
    }
    let probes = probe_grid(x, y, cfg, &canonical);

    let margin = 10.0 * cfg.tol;
    let mut near_tie = false;
    for w in probes {
        let pairs: [(bool, Side); 2] = [(sides.plus, Side::Plus), (sides.minus, Side::Minus)];
        for (active, side) in pairs {
            if !active {
                continue;
            }
            let (lv, rv) = match side {
                Side::Plus => (x.stop_loss_plus(w, cfg), y.stop_loss_plus(w, cfg)),
                _ => (x.stop_loss_minus(w, cfg), y.stop_loss_minus(w, cfg)),
            };
            let (lhs, rhs) = match (lv, rv) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return inconclusive,
            };
            match compare(cmp, lhs, rhs, margin) {
                Violation::None => {}
                Violation::NearTie => near_tie = true,
                Violation::Certified => {
                    return OrderVerdict {
                        result: OrderResult::Fails {
                            witness: Witness { param: w, lhs, rhs, side },
                        },
                        certification: cert,
                    }
                }
            }
        }
    }

    // Tail classification: when both means are finite, the stop-loss limits
    // at w → ∓∞ force a mean relation that the finite grid cannot see.
    if let (MeanClass::Finite(mx), MeanClass::Finite(my)) = (mcx, mcy) {
        let plus_bad = sides.plus && mx - my > margin;
        let minus_bad = sides.minus && my - mx > margin;
        if plus_bad || minus_bad {
            // The violation is realized far out in the tail; walk outward
            // until the stop-loss gap certifies it so the witness is honest.
            let side = if plus_bad { Side::Plus } else { Side::Minus };
            if let Some(witness) = tail_witness(x, y, cfg, side, margin) {
                return OrderVerdict {
                    result: OrderResult::Fails { witness },
                    certification: cert,
                };
            }
            return inconclusive;
        }
    }

    OrderVerdict {
        result: if near_tie {
            OrderResult::Inconclusive
        } else {
            OrderResult::Holds
        },
        certification: cert,
    }
}

fn tail_witness(
    x: &Distribution,
    y: &Distribution,
    cfg: &QuadConfig,
    side: Side,
    margin: f64,
) -> Option<Witness> {
    let anchor = x.quantile(0.5).abs().max(y.quantile(0.5).abs()).max(1.0);
    for k in 0..64 {
        let offset = anchor * 2f64.powi(k);
        let w = if side == Side::Plus { -offset } else { offset };
        let (lv, rv) = match side {
            Side::Plus => (x.stop_loss_plus(w, cfg), y.stop_loss_plus(w, cfg)),
            _ => (x.stop_loss_minus(w, cfg), y.stop_loss_minus(w, cfg)),
        };
        if let (Ok(lhs), Ok(rhs)) = (lv, rv) {
            if let Violation::Certified = compare(Comparator::Standard, lhs, rhs, margin) {
                return Some(Witness { param: w, lhs, rhs, side });
            }
        } else {
            return None;
        }
    }
    None
}

fn check_discrete_exact(
    dx: &DiscreteLaw,
    dy: &DiscreteLaw,
    sides: Sides,
    cmp: Comparator,
) -> OrderVerdict {
    // Stop-loss transforms of discrete laws are piecewise linear with
    // breakpoints only at atoms, and the union of atoms contains the global
    // extremes of both supports, so checking there (plus the means, which
    // cost nothing) is complete.
    let mut probes: Vec<f64> = dx.atoms().iter().chain(dy.atoms()).copied().collect();
    probes.push(dx.mean());
    probes.push(dy.mean());
    probes.sort_by(|a, b| a.partial_cmp(b).unwrap());
    probes.dedup();
    for w in probes {
        let checks: [(bool, Side, f64, f64); 2] = [
            (
                sides.plus,
                Side::Plus,
                dx.stop_loss_plus(w),
                dy.stop_loss_plus(w),
            ),
            (
                sides.minus,
                Side::Minus,
                dx.stop_loss_minus(w),
                dy.stop_loss_minus(w),
            ),
        ];
        for (active, side, a, b) in checks {
            if !active {
                continue;
            }
            // float-dust guard on closed-form sums
            let eps = 1e-9 * (1.0 + a.abs() + b.abs());
            if a > b + eps {
                // discrete laws are integrable, so the relaxation never bites
                let _ = cmp;
                return OrderVerdict {
                    result: OrderResult::Fails {
                        witness: Witness {
                            param: w,
                            lhs: ExtReal::Finite(a),
                            rhs: ExtReal::Finite(b),
                            side,
                        },
                    },
                    certification: Certification::Exact,
                };
            }
        }
    }
    OrderVerdict {
        result: OrderResult::Holds,
        certification: Certification::Exact,
    }
}

/// Quantile-spaced probe values for both laws: stop-loss curves bend where
/// mass lives.
fn probe_grid(x: &Distribution, y: &Distribution, cfg: &QuadConfig, canonical: &[f64]) -> Vec<f64> {
    let n = cfg.grid_n;
    let mut grid = Vec::with_capacity(2 * n + canonical.len());
    for k in 1..=n {
        let t = k as f64 / (n + 1) as f64;
        grid.push(x.quantile(t));
        grid.push(y.quantile(t));
    }
    grid.retain(|v| v.is_finite());
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    let mut out: Vec<f64> = canonical.to_vec();
    for v in grid {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// A piecewise-linear convex test function: nondecreasing slopes around
/// fixed breakpoints. Used by the brute-force oracle only.
#[derive(Clone, Debug)]
pub struct ConvexTestFn {
    breakpoints: Vec<f64>,
    slopes: Vec<f64>,
    intercept: f64,
}

impl ConvexTestFn {
    /// `slopes.len() == breakpoints.len() + 1`, slopes nondecreasing;
    /// `intercept` is the value at the first breakpoint.
    pub fn new(breakpoints: Vec<f64>, slopes: Vec<f64>, intercept: f64) -> Option<Self> {
        if slopes.len() != breakpoints.len() + 1
            || breakpoints.windows(2).any(|w| w[0] >= w[1])
            || slopes.windows(2).any(|w| w[0] > w[1])
        {
            return None;
        }
        Some(ConvexTestFn {
            breakpoints,
            slopes,
            intercept,
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let b = &self.breakpoints;
        if b.is_empty() {
            return self.intercept + self.slopes[0] * x;
        }
        if x <= b[0] {
            return self.intercept + self.slopes[0] * (x - b[0]);
        }
        let mut val = self.intercept;
        for i in 1..b.len() {
            if x <= b[i] {
                return val + self.slopes[i] * (x - b[i - 1]);
            }
            val += self.slopes[i] * (b[i] - b[i - 1]);
        }
        val + self.slopes[b.len()] * (x - b[b.len() - 1])
    }

    pub fn expectation(&self, d: &DiscreteLaw) -> f64 {
        d.atoms()
            .iter()
            .zip(d.probs())
            .map(|(a, p)| p * self.eval(*a))
            .sum()
    }

    /// The breakpoint carrying the strongest kink.
    fn sharpest_kink(&self) -> f64 {
        let mut best = 0.0;
        let mut arg = *self.breakpoints.first().unwrap_or(&0.0);
        for (i, b) in self.breakpoints.iter().enumerate() {
            let kink = self.slopes[i + 1] - self.slopes[i];
            if kink > best {
                best = kink;
                arg = *b;
            }
        }
        arg
    }
}

/// Direct falsifier for `X ≤cx Y` on discrete laws: samples piecewise-linear
/// convex functions with kinks at the atom union and compares expectations.
/// A Fails is certified; a Holds is only "no violation found".
pub fn cx_bruteforce_oracle(
    x: &DiscreteLaw,
    y: &DiscreteLaw,
    n_fns: usize,
    rng_seed: u64,
) -> OrderVerdict {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut breakpoints: Vec<f64> = x.atoms().iter().chain(y.atoms()).copied().collect();
    breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breakpoints.dedup();
    let cert = Certification::GridNumeric {
        grid_n: n_fns,
        tol: 1e-9,
    };
    for _ in 0..n_fns {
        let mut slopes: Vec<f64> = (0..breakpoints.len() + 1)
            .map(|_| standard_normal(&mut rng))
            .collect();
        slopes.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let intercept = standard_normal(&mut rng);
        let u = ConvexTestFn::new(breakpoints.clone(), slopes, intercept).unwrap();
        let (ex, ey) = (u.expectation(x), u.expectation(y));
        let eps = 1e-9 * (1.0 + ex.abs() + ey.abs());
        if ex > ey + eps {
            return OrderVerdict {
                result: OrderResult::Fails {
                    witness: Witness {
                        param: u.sharpest_kink(),
                        lhs: ExtReal::Finite(ex),
                        rhs: ExtReal::Finite(ey),
                        side: Side::Plus,
                    },
                },
                certification: cert,
            };
        }
    }
    OrderVerdict {
        result: OrderResult::Holds,
        certification: cert,
    }
}

fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    fn pm(c: f64) -> Distribution {
        Distribution::point_mass(c).unwrap()
    }

    fn d2(a0: f64, a1: f64, p0: f64) -> Distribution {
        Distribution::discrete(vec![a0, a1], vec![p0, 1.0 - p0]).unwrap()
    }

    #[test]
    fn mean_preserving_spread_holds_exact() {
        let v = check_cx(&pm(0.5), &d2(0.0, 1.0, 0.5), &cfg());
        assert!(v.holds() && v.is_exact());
        // and the reverse fails
        let v = check_cx(&d2(0.0, 1.0, 0.5), &pm(0.5), &cfg());
        assert!(v.fails() && v.is_exact());
    }

    #[test]
    fn example2_pareto_vs_negated() {
        let c = cfg();
        let x = Distribution::pareto(0.5).unwrap();
        let y = Distribution::affine(-1.0, 0.0, x.clone()).unwrap();
        let v = check_cx(&x, &y, &c);
        let w = v.witness().expect("cx must fail");
        assert_eq!(w.param, 0.0);
        assert_eq!(w.side, Side::Plus);
        assert_eq!(w.lhs, ExtReal::PosInf);
        assert_eq!(w.rhs, ExtReal::Finite(0.0));
        let v = check_cx(&y, &x, &c);
        let w = v.witness().expect("reverse cx must fail");
        assert_eq!(w.param, 0.0);
        assert_eq!(w.side, Side::Minus);
        // dagger holds in both directions
        assert!(check_cx_dagger(&x, &y, &c).holds());
        assert!(check_cx_dagger(&y, &x, &c).holds());
    }

    #[test]
    fn example3_cauchy_both_ways() {
        let c = cfg();
        let x = Distribution::Cauchy;
        let y = Distribution::affine(2.0, 0.0, Distribution::Cauchy).unwrap();
        assert!(check_cx(&x, &y, &c).holds());
        assert!(check_cx(&y, &x, &c).holds());
    }

    #[test]
    fn dagger_fails_on_distinct_finite_means() {
        let v = check_cx_dagger(&pm(0.0), &pm(1.0), &cfg());
        assert!(v.fails());
    }

    #[test]
    fn icx_dcx_shifts() {
        let c = cfg();
        assert!(check_icx(&pm(0.0), &pm(1.0), &c).holds());
        assert!(check_dcx(&pm(1.0), &pm(0.0), &c).holds());
        assert!(check_icx(&pm(1.0), &pm(0.0), &c).fails());
    }

    #[test]
    fn st_examples() {
        let c = cfg();
        let shifted = Distribution::affine(1.0, 1.0, Distribution::Uniform01).unwrap();
        assert!(check_st(&Distribution::Uniform01, &shifted, &c).holds());
        let x = d2(0.0, 1.0, 0.5);
        let y = d2(0.0, 1.0, 0.7);
        let v = check_st(&x, &y, &c);
        let w = v.witness().expect("st must fail");
        assert_eq!(w.param, 0.0);
        assert!(check_st(&Distribution::Cauchy, &Distribution::Cauchy, &c).holds());
    }

    #[test]
    fn lemma1_examples() {
        let c = cfg();
        let x = Distribution::Uniform01;
        assert_eq!(
            lemma1_reduce(&x, &Distribution::pareto(0.5).unwrap(), &c).unwrap(),
            Lemma1Reduction::DcxSuffices
        );
        assert_eq!(
            lemma1_reduce(&x, &Distribution::Cauchy, &c).unwrap(),
            Lemma1Reduction::TriviallyHolds
        );
        assert_eq!(
            lemma1_reduce(&x, &Distribution::Uniform01, &c).unwrap(),
            Lemma1Reduction::Full
        );
    }

    #[test]
    fn dagger_non_transitive_chain() {
        let c = cfg();
        let x = Distribution::Cauchy;
        let y = pm(0.0);
        let z = pm(1.0);
        assert!(check_cx_dagger(&y, &x, &c).holds());
        assert!(check_cx_dagger(&x, &z, &c).holds());
        assert!(check_cx_dagger(&y, &z, &c).fails());
    }

    #[test]
    fn oracle_agrees_on_spread() {
        let x = pm(0.5).as_discrete().unwrap();
        let y = d2(0.0, 1.0, 0.5).as_discrete().unwrap();
        assert!(cx_bruteforce_oracle(&x, &y, 1000, 7).holds());
        assert!(cx_bruteforce_oracle(&y, &x, 1000, 7).fails());
        assert!(cx_bruteforce_oracle(&y, &y, 200, 7).holds());
    }

    #[test]
    fn convex_test_fn_eval() {
        // |x - 1| has breakpoint 1, slopes [-1, 1], value 0 there
        let u = ConvexTestFn::new(vec![1.0], vec![-1.0, 1.0], 0.0).unwrap();
        assert_eq!(u.eval(1.0), 0.0);
        assert_eq!(u.eval(3.0), 2.0);
        assert_eq!(u.eval(-2.0), 3.0);
    }
}
