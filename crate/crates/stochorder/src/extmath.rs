//! Extended-real arithmetic, mean classification and one-dimensional
//! quadrature over quantile functions.
//!
//! Everything downstream compares possibly-infinite quantities, so the
//! arithmetic here is total: `ExtReal` admits no NaN and the comparison
//! operators never panic. Quadrature over `(0,1)` detects endpoint
//! divergence with geometric shell refinement and reports it as `±∞`
//! instead of failing.

use thiserror::Error;

/// An extended real number: a finite float, `+∞` or `−∞`.
///
/// NaN is rejected at construction so that the derived total order is sound.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtError {
    /// `∞ + (−∞)` has no value.
    #[error("undefined sum: +inf + -inf")]
    UndefinedSum,
    #[error("NaN is not an extended real")]
    NotANumber,
}

/// Quadrature failure: endpoint refinement neither stabilized nor certified
/// divergence within the configured depth.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("quadrature did not converge within max_depth")]
pub struct NonConvergent;

impl ExtReal {
    pub fn finite(v: f64) -> Result<ExtReal, ExtError> {
        if v.is_nan() {
            Err(ExtError::NotANumber)
        } else if v == f64::INFINITY {
            Ok(ExtReal::PosInf)
        } else if v == f64::NEG_INFINITY {
            Ok(ExtReal::NegInf)
        } else {
            Ok(ExtReal::Finite(v))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::Finite(v) => *v,
            ExtReal::PosInf => f64::INFINITY,
        }
    }

    pub fn neg(&self) -> ExtReal {
        match self {
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::Finite(v) => ExtReal::Finite(-v),
            ExtReal::PosInf => ExtReal::NegInf,
        }
    }

    /// Scale by a finite nonzero factor, flipping infinities with the sign.
    pub fn scale(&self, a: f64) -> ExtReal {
        match self {
            ExtReal::Finite(v) => ExtReal::Finite(a * v),
            inf => {
                if a >= 0.0 {
                    *inf
                } else {
                    inf.neg()
                }
            }
        }
    }

    pub fn leq(&self, other: &ExtReal) -> bool {
        self.as_f64() <= other.as_f64()
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        self.as_f64().partial_cmp(&other.as_f64())
    }
}

impl std::fmt::Display for ExtReal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::Finite(v) => write!(f, "{v}"),
            ExtReal::PosInf => write!(f, "inf"),
        }
    }
}

/// Extended-real sum. `∞ + (−∞)` is an error, everything else absorbs.
pub fn ext_add(a: ExtReal, b: ExtReal) -> Result<ExtReal, ExtError> {
    use ExtReal::*;
    match (a, b) {
        (PosInf, NegInf) | (NegInf, PosInf) => Err(ExtError::UndefinedSum),
        (PosInf, _) | (_, PosInf) => Ok(PosInf),
        (NegInf, _) | (_, NegInf) => Ok(NegInf),
        (Finite(x), Finite(y)) => ExtReal::finite(x + y),
    }
}

/// The relaxed comparison of Theorem-2 style checks: `∞ ≤ x` and `x ≤ −∞`
/// are treated as true for every extended real `x`.
pub fn relaxed_leq(a: ExtReal, b: ExtReal) -> bool {
    matches!(a, ExtReal::PosInf) || matches!(b, ExtReal::NegInf) || a.leq(&b)
}

/// Four-way classification of an expectation from its positive and negative
/// part integrals.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum MeanClass {
    Finite(f64),
    PlusInf,
    MinusInf,
    /// Both part integrals are `+∞`, so the expectation is `∞ − ∞`.
    Undefined,
}

impl MeanClass {
    /// Combine `E[X₊]` and `E[X₋]` (both in `[0, +∞]`) into a classification.
    pub fn from_parts(pos: ExtReal, neg: ExtReal) -> MeanClass {
        match (pos, neg) {
            (ExtReal::PosInf, ExtReal::PosInf) => MeanClass::Undefined,
            (ExtReal::PosInf, _) => MeanClass::PlusInf,
            (_, ExtReal::PosInf) => MeanClass::MinusInf,
            (ExtReal::Finite(p), ExtReal::Finite(n)) => MeanClass::Finite(p - n),
            _ => unreachable!("part integrals are nonnegative"),
        }
    }

    pub fn finite_value(&self) -> Option<f64> {
        match self {
            MeanClass::Finite(v) => Some(*v),
            _ => None,
        }
    }
}

impl std::fmt::Display for MeanClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MeanClass::Finite(v) => write!(f, "finite({v})"),
            MeanClass::PlusInf => write!(f, "+inf"),
            MeanClass::MinusInf => write!(f, "-inf"),
            MeanClass::Undefined => write!(f, "undefined"),
        }
    }
}

/// Tunables shared by quadrature and the grid-numeric order checks.
#[derive(Clone, Debug)]
pub struct QuadConfig {
    /// Absolute tolerance for bounded integrands.
    pub tol: f64,
    /// Maximum number of dyadic endpoint shells.
    pub max_depth: usize,
    /// Probe-grid size for grid-numeric order checks and map discretization.
    pub grid_n: usize,
    /// A shell sequence whose successive ratios stay at or above this value
    /// is declared divergent.
    pub divergence_ratio: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            tol: 1e-10,
            max_depth: 60,
            grid_n: 256,
            divergence_ratio: 0.999,
        }
    }
}

impl QuadConfig {
    pub fn with_grid_n(mut self, n: usize) -> Self {
        self.grid_n = n.max(16);
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        assert!(tol > 0.0);
        self.tol = tol;
        self
    }
}

// Shells with ratios at or above `divergence_ratio` for this many
// consecutive steps certify divergence.
const DIVERGENCE_STREAK: usize = 40;
const GROWTH_STREAK: usize = 10;
// Consecutive stable decay ratios before geometric tail extrapolation.
const STABLE_STREAK: usize = 6;

/// Integrate `q` over `(lo, hi) ⊆ [0,1]`.
///
/// `q` must be finite on the open interval; it may blow up at `lo = 0` or
/// `hi = 1`, where it is assumed monotone in a neighborhood of the endpoint
/// (true for quantile functions). A divergent endpoint is reported as `±∞`.
pub fn integrate_quantile<F: Fn(f64) -> f64>(
    q: F,
    lo: f64,
    hi: f64,
    cfg: &QuadConfig,
) -> Result<ExtReal, NonConvergent> {
    assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi) && lo < hi);
    let len = hi - lo;
    let open_lo = lo == 0.0;
    let open_hi = hi == 1.0;
    let a = if open_lo { lo + 0.25 * len } else { lo };
    let b = if open_hi { hi - 0.25 * len } else { hi };

    let mut total = adaptive_simpson(&q, a, b, cfg.tol * 0.5, 48);
    if !total.is_finite() {
        return Err(NonConvergent);
    }
    if open_lo {
        match endpoint_shells(&q, Endpoint::Lower { at: lo, first: a }, cfg)? {
            ShellOutcome::Finite(v) => total += v,
            ShellOutcome::Infinite(s) => return Ok(s),
        }
    }
    if open_hi {
        match endpoint_shells(&q, Endpoint::Upper { at: hi, first: b }, cfg)? {
            ShellOutcome::Finite(v) => total += v,
            ShellOutcome::Infinite(s) => return Ok(s),
        }
    }
    ExtReal::finite(total).map_err(|_| NonConvergent)
}

enum Endpoint {
    /// Shells descend toward `at` from `first` (`at < first`).
    Lower { at: f64, first: f64 },
    /// Shells ascend toward `at` from `first` (`first < at`).
    Upper { at: f64, first: f64 },
}

enum ShellOutcome {
    Finite(f64),
    Infinite(ExtReal),
}

/// Sum dyadic shells toward an open endpoint.
///
/// Shell k covers the dyadic band at distance `w·2⁻ᵏ⁻¹ .. w·2⁻ᵏ` from the
/// endpoint. Quantile functions are monotone near endpoints, so shell sums
/// are monotone-comparable: sustained non-decay certifies divergence, a
/// stable geometric decay admits tail extrapolation.
fn endpoint_shells<F: Fn(f64) -> f64>(
    q: &F,
    ep: Endpoint,
    cfg: &QuadConfig,
) -> Result<ShellOutcome, NonConvergent> {
    let width0 = match ep {
        Endpoint::Lower { at, first } => first - at,
        Endpoint::Upper { at, first } => at - first,
    };
    let mut sum = 0.0;
    let mut prev: Option<f64> = None;
    let mut nondecay = 0usize;
    let mut growth = 1.0f64;
    let mut stable = 0usize;
    let mut prev_ratio = f64::NAN;
    for k in 0..cfg.max_depth {
        let w_far = width0 * 0.5f64.powi(k as i32);
        let w_near = w_far * 0.5;
        let (x0, x1) = match ep {
            Endpoint::Lower { at, .. } => (at + w_near, at + w_far),
            Endpoint::Upper { at, .. } => (at - w_far, at - w_near),
        };
        let s = composite_simpson(q, x0, x1, 32);
        if !s.is_finite() {
            // The integrand already overflows on this shell.
            return Ok(ShellOutcome::Infinite(sign_inf(q(0.5 * (x0 + x1)))));
        }
        sum += s;
        if let Some(p) = prev {
            let ratio = if p != 0.0 { s / p } else { f64::NAN };
            if ratio.is_finite() && ratio.abs() >= cfg.divergence_ratio && s.signum() == p.signum()
            {
                nondecay += 1;
                growth *= ratio.abs();
            } else {
                nondecay = 0;
                growth = 1.0;
            }
            // A long non-decay streak certifies divergence even for shells
            // hovering at constant size (logarithmic singularities). Shells
            // that have doubled over a shorter streak are already growing
            // geometrically, so divergence can be declared sooner — this
            // matters when a clamp saturates the integrand before the long
            // streak completes.
            if nondecay >= DIVERGENCE_STREAK.min(cfg.max_depth.saturating_sub(2))
                || (nondecay >= GROWTH_STREAK && growth >= 2.0)
            {
                return Ok(ShellOutcome::Infinite(sign_inf(s)));
            }
            // Tail extrapolation is reserved for slowly decaying,
            // near-exactly-geometric tails (power singularities). Faster
            // tails are summed directly: ratios below 0.7 reach tolerance
            // within the depth budget, and their ratios drift, which would
            // poison the geometric-sum formula.
            if ratio.is_finite()
                && ratio >= 0.7
                && ratio < cfg.divergence_ratio
                && (ratio - prev_ratio).abs() <= 1e-6 * (1.0 + ratio)
            {
                stable += 1;
            } else {
                stable = 0;
            }
            prev_ratio = ratio;
            if stable >= STABLE_STREAK && k >= 10 {
                // Geometric tail: remaining shells sum to ~ s·r/(1−r).
                let r = ratio;
                return Ok(ShellOutcome::Finite(sum + s * r / (1.0 - r)));
            }
        }
        if s.abs() <= cfg.tol * 0.25 && prev.map_or(true, |p| s.abs() <= p.abs()) {
            return Ok(ShellOutcome::Finite(sum));
        }
        prev = Some(s);
    }
    Err(NonConvergent)
}

fn sign_inf(v: f64) -> ExtReal {
    if v >= 0.0 {
        ExtReal::PosInf
    } else {
        ExtReal::NegInf
    }
}

fn composite_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let n = 2 * panels;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: usize) -> f64 {
    if a == b {
        return 0.0;
    }
    let c = 0.5 * (a + b);
    let (fa, fb, fc) = (f(a), f(b), f(c));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    simpson_step(f, a, b, fa, fb, fc, whole, tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> f64 {
    let c = 0.5 * (a + b);
    let d = 0.5 * (a + c);
    let e = 0.5 * (c + b);
    let (fd, fe) = (f(d), f(e));
    let left = (c - a) / 6.0 * (fa + 4.0 * fd + fc);
    let right = (b - c) / 6.0 * (fc + 4.0 * fe + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_step(f, a, c, fa, fc, fd, left, 0.5 * tol, depth - 1)
            + simpson_step(f, c, b, fc, fb, fe, right, 0.5 * tol, depth - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_add_absorbs_and_rejects() {
        assert_eq!(
            ext_add(ExtReal::PosInf, ExtReal::Finite(3.0)),
            Ok(ExtReal::PosInf)
        );
        assert_eq!(
            ext_add(ExtReal::Finite(2.0), ExtReal::Finite(3.0)),
            Ok(ExtReal::Finite(5.0))
        );
        assert_eq!(
            ext_add(ExtReal::PosInf, ExtReal::NegInf),
            Err(ExtError::UndefinedSum)
        );
    }

    #[test]
    fn relaxed_leq_adds_true_verdicts_only() {
        assert!(relaxed_leq(ExtReal::PosInf, ExtReal::Finite(3.0)));
        assert!(relaxed_leq(ExtReal::Finite(5.0), ExtReal::NegInf));
        assert!(!relaxed_leq(ExtReal::Finite(3.0), ExtReal::Finite(2.0)));
        // relaxation is implied by the standard order
        let vals = [
            ExtReal::NegInf,
            ExtReal::Finite(-1.0),
            ExtReal::Finite(4.0),
            ExtReal::PosInf,
        ];
        for a in vals {
            for b in vals {
                if a.leq(&b) {
                    assert!(relaxed_leq(a, b));
                }
            }
        }
    }

    #[test]
    fn nan_rejected_at_construction() {
        assert_eq!(ExtReal::finite(f64::NAN), Err(ExtError::NotANumber));
    }

    #[test]
    fn integrates_example1_integrand() {
        let cfg = QuadConfig::default();
        let v = integrate_quantile(|u| 2.0 / (1.0 + u), 0.0, 1.0, &cfg).unwrap();
        match v {
            ExtReal::Finite(x) => assert!((x - 2.0 * std::f64::consts::LN_2).abs() < 1e-9),
            other => panic!("expected finite, got {other}"),
        }
    }

    #[test]
    fn detects_divergent_upper_tail() {
        let cfg = QuadConfig::default();
        let v = integrate_quantile(|u| (1.0 - u).powi(-2), 0.5, 1.0, &cfg).unwrap();
        assert_eq!(v, ExtReal::PosInf);
    }

    #[test]
    fn detects_log_divergence() {
        let cfg = QuadConfig::default();
        let v = integrate_quantile(|u| 1.0 / (1.0 - u), 0.0, 1.0, &cfg).unwrap();
        assert_eq!(v, ExtReal::PosInf);
        let v = integrate_quantile(|u| -1.0 / u, 0.0, 1.0, &cfg).unwrap();
        assert_eq!(v, ExtReal::NegInf);
    }

    #[test]
    fn bounded_integrand_hits_tolerance() {
        let cfg = QuadConfig::default();
        let cases: Vec<(Box<dyn Fn(f64) -> f64>, f64, f64, f64)> = vec![
            (Box::new(|u| u), 0.0, 1.0, 0.5),
            (Box::new(|u: f64| u.powi(3)), 0.0, 1.0, 0.25),
            (Box::new(|u: f64| (u * 3.0).sin()), 0.0, 1.0, (1.0 - 3f64.cos()) / 3.0),
            (Box::new(|u| u * u), 0.25, 0.75, (0.75f64.powi(3) - 0.25f64.powi(3)) / 3.0),
        ];
        for (f, lo, hi, exact) in cases {
            let v = integrate_quantile(&f, lo, hi, &cfg).unwrap().as_f64();
            assert!((v - exact).abs() <= cfg.tol * 10.0, "{v} vs {exact}");
        }
    }

    #[test]
    fn integrable_singularity_converges() {
        let cfg = QuadConfig::default();
        // ∫₀¹ (1−u)^{−1/2} du = 2
        let v = integrate_quantile(|u| (1.0 - u).powf(-0.5), 0.0, 1.0, &cfg)
            .unwrap()
            .as_f64();
        assert!((v - 2.0).abs() < 1e-6, "{v}");
        // slow decay near the exponent-1 boundary, tail-extrapolated
        let p = 0.85;
        let exact = 1.0 / (1.0 - p);
        let v = integrate_quantile(|u| (1.0 - u).powf(-p), 0.0, 1.0, &cfg)
            .unwrap()
            .as_f64();
        assert!((v - exact).abs() < 1e-4 * exact, "{v} vs {exact}");
    }

    #[test]
    fn additive_over_adjacent_intervals() {
        let cfg = QuadConfig::default();
        let q = |u: f64| (u / (1.0 - u)).ln(); // logistic quantile, bounded inside
        let whole = integrate_quantile(q, 0.1, 0.9, &cfg).unwrap().as_f64();
        let l = integrate_quantile(q, 0.1, 0.4, &cfg).unwrap().as_f64();
        let r = integrate_quantile(q, 0.4, 0.9, &cfg).unwrap().as_f64();
        assert!((whole - (l + r)).abs() <= 2.0 * cfg.tol);
    }
}
