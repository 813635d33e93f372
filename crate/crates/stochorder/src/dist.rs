//! Univariate laws represented through their left quantile functions.
//!
//! The model is closed under affine transforms and finite mixtures, and
//! every transform needed by the order checks (CDF, stop-loss, tail
//! integrals, mean classification) is evaluated in closed form whenever the
//! law flattens to a finite discrete one, and numerically with divergence
//! detection otherwise. Heavy tails need no density: Pareto and Cauchy
//! classify their means analytically.

use crate::extmath::{
    ext_add, integrate_quantile, ExtReal, MeanClass, NonConvergent, QuadConfig,
};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistError {
    #[error("invalid distribution parameters: {0}")]
    InvalidParameters(String),
}

/// A finite discrete law with strictly increasing atoms.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteLaw {
    atoms: Vec<f64>,
    probs: Vec<f64>,
}

impl DiscreteLaw {
    pub fn new(atoms: Vec<f64>, probs: Vec<f64>) -> Result<Self, DistError> {
        if atoms.is_empty() || atoms.len() != probs.len() {
            return Err(DistError::InvalidParameters(
                "atoms and probs must be nonempty and of equal length".into(),
            ));
        }
        if atoms.iter().any(|a| !a.is_finite()) {
            return Err(DistError::InvalidParameters("atoms must be finite".into()));
        }
        if atoms.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DistError::InvalidParameters(
                "atoms must be strictly increasing".into(),
            ));
        }
        if probs.iter().any(|p| !(*p > 0.0)) {
            return Err(DistError::InvalidParameters("probs must be positive".into()));
        }
        let total: f64 = probs.iter().sum();
        // 1e-9 absorbs naive-summation roundoff for grids up to ~10⁶ atoms.
        if (total - 1.0).abs() > 1e-9 {
            return Err(DistError::InvalidParameters(format!(
                "probs sum to {total}, expected 1"
            )));
        }
        Ok(DiscreteLaw { atoms, probs })
    }

    /// Build from unsorted, possibly repeated `(atom, prob)` pairs.
    pub fn from_pairs(pairs: Vec<(f64, f64)>) -> Result<Self, DistError> {
        let mut pairs: Vec<(f64, f64)> = pairs.into_iter().filter(|(_, p)| *p > 0.0).collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut atoms = Vec::new();
        let mut probs: Vec<f64> = Vec::new();
        for (a, p) in pairs {
            if atoms.last() == Some(&a) {
                *probs.last_mut().unwrap() += p;
            } else {
                atoms.push(a);
                probs.push(p);
            }
        }
        DiscreteLaw::new(atoms, probs)
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn mean(&self) -> f64 {
        self.atoms
            .iter()
            .zip(&self.probs)
            .map(|(a, p)| a * p)
            .sum()
    }

    pub fn quantile(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for (a, p) in self.atoms.iter().zip(&self.probs) {
            acc += p;
            if acc >= t {
                return *a;
            }
        }
        *self.atoms.last().unwrap()
    }

    /// `sup{x : P(X < x) ≤ t}`; differs from the left quantile at jumps.
    pub fn right_quantile(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        let mut out = self.atoms[0];
        for (a, p) in self.atoms.iter().zip(&self.probs) {
            if acc <= t {
                out = *a;
            }
            acc += p;
        }
        out
    }

    pub fn cdf(&self, x: f64) -> f64 {
        self.atoms
            .iter()
            .zip(&self.probs)
            .take_while(|(a, _)| **a <= x)
            .map(|(_, p)| p)
            .sum()
    }

    pub fn mass_at(&self, x: f64) -> f64 {
        self.atoms
            .iter()
            .zip(&self.probs)
            .find(|(a, _)| **a == x)
            .map_or(0.0, |(_, p)| *p)
    }

    pub fn stop_loss_plus(&self, w: f64) -> f64 {
        self.atoms
            .iter()
            .zip(&self.probs)
            .map(|(a, p)| (a - w).max(0.0) * p)
            .sum()
    }

    pub fn stop_loss_minus(&self, w: f64) -> f64 {
        self.atoms
            .iter()
            .zip(&self.probs)
            .map(|(a, p)| (w - a).max(0.0) * p)
            .sum()
    }

    /// Exact `∫ₚ¹ F⁻¹(t) dt`.
    pub fn upper_tail(&self, p: f64) -> f64 {
        let mut acc = 0.0f64;
        let mut out = 0.0;
        for (a, pr) in self.atoms.iter().zip(&self.probs) {
            let lo = acc.max(p);
            acc += pr;
            if acc > lo {
                out += a * (acc.min(1.0) - lo);
            }
        }
        out
    }

    /// Exact `∫₀ᵖ F⁻¹(t) dt`.
    pub fn lower_tail(&self, p: f64) -> f64 {
        let mut acc = 0.0;
        let mut out = 0.0;
        for (a, pr) in self.atoms.iter().zip(&self.probs) {
            let lo = acc;
            acc += pr;
            let hi = acc.min(p);
            if hi > lo {
                out += a * (hi - lo);
            }
        }
        out
    }
}

/// A nondecreasing quantile evaluator backing a law with no parametric form,
/// e.g. the exact quantile-sum law of a comonotonic coupling.
#[derive(Clone)]
pub struct QuantileMap {
    q: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl QuantileMap {
    pub fn new(q: Arc<dyn Fn(f64) -> f64 + Send + Sync>) -> Self {
        QuantileMap { q }
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.q)(t)
    }
}

impl std::fmt::Debug for QuantileMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuantileMap(<fn>)")
    }
}

/// A univariate probability law.
#[derive(Clone, Debug)]
pub enum Distribution {
    Discrete(DiscreteLaw),
    Uniform01,
    /// Survival `P(X > x) = x^{−α}` on `[1, ∞)`.
    Pareto { alpha: f64 },
    Cauchy,
    PointMass { c: f64 },
    Affine {
        a: f64,
        b: f64,
        base: Box<Distribution>,
    },
    Mixture {
        weights: Vec<f64>,
        components: Vec<Distribution>,
    },
    /// Internal: a law carried by its quantile function. Not part of the
    /// JSON schema; produced by coupling sums.
    QuantileBacked(QuantileMap),
}

impl Distribution {
    pub fn discrete(atoms: Vec<f64>, probs: Vec<f64>) -> Result<Self, DistError> {
        Ok(Distribution::Discrete(DiscreteLaw::new(atoms, probs)?))
    }

    pub fn pareto(alpha: f64) -> Result<Self, DistError> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(DistError::InvalidParameters("pareto alpha must be > 0".into()));
        }
        Ok(Distribution::Pareto { alpha })
    }

    pub fn point_mass(c: f64) -> Result<Self, DistError> {
        if !c.is_finite() {
            return Err(DistError::InvalidParameters("point mass must be finite".into()));
        }
        Ok(Distribution::PointMass { c })
    }

    pub fn affine(a: f64, b: f64, base: Distribution) -> Result<Self, DistError> {
        if a == 0.0 || !a.is_finite() || !b.is_finite() {
            return Err(DistError::InvalidParameters(
                "affine scale must be finite nonzero, shift finite".into(),
            ));
        }
        Ok(Distribution::Affine {
            a,
            b,
            base: Box::new(base),
        })
    }

    pub fn mixture(weights: Vec<f64>, components: Vec<Distribution>) -> Result<Self, DistError> {
        if components.is_empty() || weights.len() != components.len() {
            return Err(DistError::InvalidParameters(
                "mixture needs matching nonempty weights and components".into(),
            ));
        }
        if weights.iter().any(|w| !(*w > 0.0)) {
            return Err(DistError::InvalidParameters("weights must be positive".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(DistError::InvalidParameters(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(Distribution::Mixture { weights, components })
    }

    pub fn from_quantile_fn(q: Arc<dyn Fn(f64) -> f64 + Send + Sync>) -> Self {
        Distribution::QuantileBacked(QuantileMap::new(q))
    }

    /// Flatten to an exact finite discrete law when the representation
    /// permits it (Discrete, PointMass, and affine transforms or finite
    /// mixtures thereof). This is what gates `Exact` certification.
    pub fn as_discrete(&self) -> Option<DiscreteLaw> {
        match self {
            Distribution::Discrete(d) => Some(d.clone()),
            Distribution::PointMass { c } => {
                Some(DiscreteLaw::new(vec![*c], vec![1.0]).unwrap())
            }
            Distribution::Affine { a, b, base } => {
                let d = base.as_discrete()?;
                let pairs = d
                    .atoms
                    .iter()
                    .zip(&d.probs)
                    .map(|(x, p)| (a * x + b, *p))
                    .collect();
                DiscreteLaw::from_pairs(pairs).ok()
            }
            Distribution::Mixture { weights, components } => {
                let mut pairs = Vec::new();
                for (w, c) in weights.iter().zip(components) {
                    let d = c.as_discrete()?;
                    pairs.extend(d.atoms.iter().zip(&d.probs).map(|(x, p)| (*x, w * p)));
                }
                DiscreteLaw::from_pairs(pairs).ok()
            }
            _ => None,
        }
    }

    /// Left quantile `F⁻¹(t) = inf{x : P(X ≤ x) ≥ t}` for `t ∈ (0,1)`.
    pub fn quantile(&self, t: f64) -> f64 {
        debug_assert!(t > 0.0 && t < 1.0);
        match self {
            Distribution::Discrete(d) => d.quantile(t),
            Distribution::Uniform01 => t,
            Distribution::Pareto { alpha } => (1.0 - t).powf(-1.0 / alpha),
            Distribution::Cauchy => (std::f64::consts::PI * (t - 0.5)).tan(),
            Distribution::PointMass { c } => *c,
            Distribution::Affine { a, b, base } => {
                if *a > 0.0 {
                    a * base.quantile(t) + b
                } else {
                    a * base.right_quantile(1.0 - t) + b
                }
            }
            Distribution::Mixture { .. } => {
                if let Some(d) = self.as_discrete() {
                    d.quantile(t)
                } else {
                    bisect_quantile(self, t, false)
                }
            }
            Distribution::QuantileBacked(q) => q.eval(t),
        }
    }

    /// Right quantile `sup{x : P(X < x) ≤ t}`.
    pub fn right_quantile(&self, t: f64) -> f64 {
        debug_assert!(t > 0.0 && t < 1.0);
        match self {
            Distribution::Discrete(d) => d.right_quantile(t),
            Distribution::PointMass { c } => *c,
            Distribution::Affine { a, b, base } => {
                if *a > 0.0 {
                    a * base.right_quantile(t) + b
                } else {
                    a * base.quantile(1.0 - t) + b
                }
            }
            Distribution::Mixture { .. } => {
                if let Some(d) = self.as_discrete() {
                    d.right_quantile(t)
                } else {
                    bisect_quantile(self, t, true)
                }
            }
            // continuous families: left and right quantiles coincide
            _ => self.quantile(t),
        }
    }

    /// Right-continuous CDF `P(X ≤ x)`.
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Distribution::Discrete(d) => d.cdf(x),
            Distribution::Uniform01 => x.clamp(0.0, 1.0),
            Distribution::Pareto { alpha } => {
                if x < 1.0 {
                    0.0
                } else {
                    1.0 - x.powf(-alpha)
                }
            }
            Distribution::Cauchy => 0.5 + x.atan() / std::f64::consts::PI,
            Distribution::PointMass { c } => {
                if x >= *c {
                    1.0
                } else {
                    0.0
                }
            }
            Distribution::Affine { a, b, base } => {
                let y = (x - b) / a;
                if *a > 0.0 {
                    base.cdf(y)
                } else {
                    // P(aX+b ≤ x) = P(X ≥ y) = 1 − F(y) + P(X = y)
                    1.0 - base.cdf(y) + base.mass_at(y)
                }
            }
            Distribution::Mixture { weights, components } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.cdf(x))
                .sum(),
            Distribution::QuantileBacked(q) => quantile_backed_cdf(q, x),
        }
    }

    /// `P(X = x)`; zero for the continuous families.
    pub fn mass_at(&self, x: f64) -> f64 {
        match self {
            Distribution::Discrete(d) => d.mass_at(x),
            Distribution::PointMass { c } => {
                if *c == x {
                    1.0
                } else {
                    0.0
                }
            }
            Distribution::Affine { a, b, base } => base.mass_at((x - b) / a),
            Distribution::Mixture { weights, components } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.mass_at(x))
                .sum(),
            _ => 0.0,
        }
    }

    /// `(ess-inf, ess-sup)` of the support.
    pub fn support_bounds(&self) -> (ExtReal, ExtReal) {
        match self {
            Distribution::Discrete(d) => (
                ExtReal::Finite(d.atoms[0]),
                ExtReal::Finite(*d.atoms.last().unwrap()),
            ),
            Distribution::Uniform01 => (ExtReal::Finite(0.0), ExtReal::Finite(1.0)),
            Distribution::Pareto { .. } => (ExtReal::Finite(1.0), ExtReal::PosInf),
            Distribution::Cauchy => (ExtReal::NegInf, ExtReal::PosInf),
            Distribution::PointMass { c } => (ExtReal::Finite(*c), ExtReal::Finite(*c)),
            Distribution::Affine { a, b, base } => {
                let (lo, hi) = base.support_bounds();
                let (x, y) = (lo.scale(*a), hi.scale(*a));
                let (x, y) = if *a > 0.0 { (x, y) } else { (y, x) };
                (shift(x, *b), shift(y, *b))
            }
            Distribution::Mixture { components, .. } => {
                let mut lo = ExtReal::PosInf;
                let mut hi = ExtReal::NegInf;
                for c in components {
                    let (l, h) = c.support_bounds();
                    if l.leq(&lo) {
                        lo = l;
                    }
                    if hi.leq(&h) {
                        hi = h;
                    }
                }
                (lo, hi)
            }
            Distribution::QuantileBacked(q) => {
                // probe-based; exact only up to the evaluator's tails
                let lo = q.eval(1e-12);
                let hi = q.eval(1.0 - 1e-12);
                (
                    if lo <= -1e10 { ExtReal::NegInf } else { ExtReal::Finite(lo) },
                    if hi >= 1e10 { ExtReal::PosInf } else { ExtReal::Finite(hi) },
                )
            }
        }
    }

    pub fn is_degenerate(&self) -> bool {
        let (lo, hi) = self.support_bounds();
        lo == hi
    }

    /// `(E[X₊], E[X₋])`, each in `[0, +∞]`.
    pub fn part_means(&self, cfg: &QuadConfig) -> Result<(ExtReal, ExtReal), NonConvergent> {
        Ok((self.stop_loss_plus(0.0, cfg)?, self.stop_loss_minus(0.0, cfg)?))
    }

    /// Classify the mean: exact for discrete, analytic for the parametric
    /// tails, numeric with divergence detection otherwise.
    pub fn mean_class(&self, cfg: &QuadConfig) -> Result<MeanClass, NonConvergent> {
        match self {
            Distribution::Uniform01 => Ok(MeanClass::Finite(0.5)),
            Distribution::Pareto { alpha } => Ok(if *alpha > 1.0 {
                MeanClass::Finite(alpha / (alpha - 1.0))
            } else {
                MeanClass::PlusInf
            }),
            Distribution::Cauchy => Ok(MeanClass::Undefined),
            Distribution::Affine { a, b, base } => {
                Ok(match base.mean_class(cfg)? {
                    MeanClass::Finite(m) => MeanClass::Finite(a * m + b),
                    MeanClass::PlusInf => {
                        if *a > 0.0 {
                            MeanClass::PlusInf
                        } else {
                            MeanClass::MinusInf
                        }
                    }
                    MeanClass::MinusInf => {
                        if *a > 0.0 {
                            MeanClass::MinusInf
                        } else {
                            MeanClass::PlusInf
                        }
                    }
                    MeanClass::Undefined => MeanClass::Undefined,
                })
            }
            _ => {
                if let Some(d) = self.as_discrete() {
                    return Ok(MeanClass::Finite(d.mean()));
                }
                let (pos, neg) = self.part_means(cfg)?;
                Ok(MeanClass::from_parts(pos, neg))
            }
        }
    }

    /// `E[(X−w)₊] ∈ [0, +∞]`.
    pub fn stop_loss_plus(&self, w: f64, cfg: &QuadConfig) -> Result<ExtReal, NonConvergent> {
        match self {
            Distribution::Discrete(d) => Ok(ExtReal::Finite(d.stop_loss_plus(w))),
            Distribution::PointMass { c } => Ok(ExtReal::Finite((c - w).max(0.0))),
            Distribution::Uniform01 => Ok(ExtReal::Finite(if w <= 0.0 {
                0.5 - w
            } else if w >= 1.0 {
                0.0
            } else {
                0.5 * (1.0 - w) * (1.0 - w)
            })),
            Distribution::Pareto { alpha } => Ok(if *alpha <= 1.0 {
                ExtReal::PosInf
            } else if w <= 1.0 {
                ExtReal::Finite(alpha / (alpha - 1.0) - w)
            } else {
                // ∫_w^∞ x^{−α} dx
                ExtReal::Finite(w.powf(1.0 - alpha) / (alpha - 1.0))
            }),
            Distribution::Cauchy => Ok(ExtReal::PosInf),
            Distribution::Affine { a, b, base } => {
                let y = (w - b) / a;
                if *a > 0.0 {
                    Ok(base.stop_loss_plus(y, cfg)?.scale(*a))
                } else {
                    Ok(base.stop_loss_minus(y, cfg)?.scale(-*a))
                }
            }
            Distribution::Mixture { weights, components } => {
                let mut acc = ExtReal::Finite(0.0);
                for (wt, c) in weights.iter().zip(components) {
                    let v = c.stop_loss_plus(w, cfg)?.scale(*wt);
                    acc = ext_add(acc, v).expect("stop-loss parts are nonnegative");
                }
                Ok(acc)
            }
            Distribution::QuantileBacked(q) => {
                let qf = q.clone();
                integrate_quantile(move |t| (qf.eval(t) - w).max(0.0), 0.0, 1.0, cfg)
            }
        }
    }

    /// `E[(X−w)₋] ∈ [0, +∞]`.
    pub fn stop_loss_minus(&self, w: f64, cfg: &QuadConfig) -> Result<ExtReal, NonConvergent> {
        match self {
            Distribution::Discrete(d) => Ok(ExtReal::Finite(d.stop_loss_minus(w))),
            Distribution::PointMass { c } => Ok(ExtReal::Finite((w - c).max(0.0))),
            Distribution::Uniform01 => Ok(ExtReal::Finite(if w <= 0.0 {
                0.0
            } else if w >= 1.0 {
                w - 0.5
            } else {
                0.5 * w * w
            })),
            Distribution::Pareto { alpha } => Ok(ExtReal::Finite(if w <= 1.0 {
                0.0
            } else if *alpha == 1.0 {
                (w - 1.0) - w.ln()
            } else {
                // ∫_1^w F(x) dx = (w−1) − (1 − w^{1−α})/(α−1)
                (w - 1.0) - (1.0 - w.powf(1.0 - alpha)) / (alpha - 1.0)
            })),
            Distribution::Cauchy => Ok(ExtReal::PosInf),
            Distribution::Affine { a, b, base } => {
                let y = (w - b) / a;
                if *a > 0.0 {
                    Ok(base.stop_loss_minus(y, cfg)?.scale(*a))
                } else {
                    Ok(base.stop_loss_plus(y, cfg)?.scale(-*a))
                }
            }
            Distribution::Mixture { weights, components } => {
                let mut acc = ExtReal::Finite(0.0);
                for (wt, c) in weights.iter().zip(components) {
                    let v = c.stop_loss_minus(w, cfg)?.scale(*wt);
                    acc = ext_add(acc, v).expect("stop-loss parts are nonnegative");
                }
                Ok(acc)
            }
            Distribution::QuantileBacked(q) => {
                let qf = q.clone();
                integrate_quantile(move |t| (w - qf.eval(t)).max(0.0), 0.0, 1.0, cfg)
            }
        }
    }

    /// `∫ₚ¹ F⁻¹(t) dt`; bounded below on the domain, hence well-defined.
    pub fn upper_tail_integral(&self, p: f64, cfg: &QuadConfig) -> Result<ExtReal, NonConvergent> {
        assert!(p > 0.0 && p < 1.0);
        match self {
            Distribution::Uniform01 => Ok(ExtReal::Finite(0.5 * (1.0 - p * p))),
            Distribution::Pareto { alpha } => {
                let c = 1.0 / alpha;
                Ok(if *alpha <= 1.0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::Finite((1.0 - p).powf(1.0 - c) / (1.0 - c))
                })
            }
            Distribution::Cauchy => Ok(ExtReal::PosInf),
            Distribution::Affine { a, b, base } => {
                if *a > 0.0 {
                    let t = base.upper_tail_integral(p, cfg)?.scale(*a);
                    Ok(ext_add(t, ExtReal::Finite(b * (1.0 - p))).expect("one-sided"))
                } else {
                    let t = base.lower_tail_integral(1.0 - p, cfg)?.scale(*a);
                    Ok(ext_add(t, ExtReal::Finite(b * (1.0 - p))).expect("one-sided"))
                }
            }
            _ => {
                if let Some(d) = self.as_discrete() {
                    return Ok(ExtReal::Finite(d.upper_tail(p)));
                }
                let me = self.clone();
                integrate_quantile(move |t| me.quantile(t), p, 1.0, cfg)
            }
        }
    }

    /// `∫₀ᵖ F⁻¹(t) dt`; bounded above on the domain, hence well-defined.
    pub fn lower_tail_integral(&self, p: f64, cfg: &QuadConfig) -> Result<ExtReal, NonConvergent> {
        assert!(p > 0.0 && p < 1.0);
        match self {
            Distribution::Uniform01 => Ok(ExtReal::Finite(0.5 * p * p)),
            Distribution::Pareto { alpha } => {
                let c = 1.0 / alpha;
                Ok(ExtReal::Finite(if (c - 1.0).abs() < 1e-15 {
                    -(1.0 - p).ln()
                } else {
                    (1.0 - (1.0 - p).powf(1.0 - c)) / (1.0 - c)
                }))
            }
            Distribution::Cauchy => Ok(ExtReal::NegInf),
            Distribution::Affine { a, b, base } => {
                if *a > 0.0 {
                    let t = base.lower_tail_integral(p, cfg)?.scale(*a);
                    Ok(ext_add(t, ExtReal::Finite(b * p)).expect("one-sided"))
                } else {
                    let t = base.upper_tail_integral(1.0 - p, cfg)?.scale(*a);
                    Ok(ext_add(t, ExtReal::Finite(b * p)).expect("one-sided"))
                }
            }
            _ => {
                if let Some(d) = self.as_discrete() {
                    return Ok(ExtReal::Finite(d.lower_tail(p)));
                }
                let me = self.clone();
                integrate_quantile(move |t| me.quantile(t), 0.0, p, cfg)
            }
        }
    }
}

fn shift(v: ExtReal, b: f64) -> ExtReal {
    match v {
        ExtReal::Finite(x) => ExtReal::Finite(x + b),
        inf => inf,
    }
}

/// Bisect the CDF for mixture quantiles. `right` selects the right quantile
/// (bisection on `P(X < x)` instead of `P(X ≤ x)`).
fn bisect_quantile(d: &Distribution, t: f64, right: bool) -> f64 {
    let below = |x: f64| {
        if right {
            d.cdf(x) - d.mass_at(x) <= t
        } else {
            d.cdf(x) < t
        }
    };
    let mut lo = -1.0;
    let mut step = 1.0;
    while !below(lo) {
        lo -= step;
        step *= 2.0;
    }
    let mut hi = 1.0;
    step = 1.0;
    while below(hi) {
        hi += step;
        step *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi.abs().max(lo.abs()).max(1.0) {
            break;
        }
    }
    if right {
        lo
    } else {
        hi
    }
}

/// `F(x) = sup{t : q(t) ≤ x}` for a nondecreasing quantile evaluator.
fn quantile_backed_cdf(q: &QuantileMap, x: f64) -> f64 {
    let eps = 1e-13;
    if q.eval(eps) > x {
        return 0.0;
    }
    if q.eval(1.0 - eps) <= x {
        return 1.0;
    }
    let mut lo = eps;
    let mut hi = 1.0 - eps;
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if q.eval(mid) <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

// --- JSON schema -----------------------------------------------------------

/// Serde mirror of the JSON distribution schema consumed by the CLI.
#[derive(serde::Serialize, serde::Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum DistSpec {
    Discrete { atoms: Vec<f64>, probs: Vec<f64> },
    Uniform01,
    Pareto { alpha: f64 },
    Cauchy,
    PointMass { c: f64 },
    Affine { a: f64, b: f64, base: Box<DistSpec> },
    Mixture {
        weights: Vec<f64>,
        components: Vec<DistSpec>,
    },
}

impl DistSpec {
    fn build(self) -> Result<Distribution, DistError> {
        match self {
            DistSpec::Discrete { atoms, probs } => Distribution::discrete(atoms, probs),
            DistSpec::Uniform01 => Ok(Distribution::Uniform01),
            DistSpec::Pareto { alpha } => Distribution::pareto(alpha),
            DistSpec::Cauchy => Ok(Distribution::Cauchy),
            DistSpec::PointMass { c } => Distribution::point_mass(c),
            DistSpec::Affine { a, b, base } => Distribution::affine(a, b, base.build()?),
            DistSpec::Mixture { weights, components } => {
                let comps = components
                    .into_iter()
                    .map(|c| c.build())
                    .collect::<Result<Vec<_>, _>>()?;
                Distribution::mixture(weights, comps)
            }
        }
    }

    fn from_dist(d: &Distribution) -> Option<DistSpec> {
        Some(match d {
            Distribution::Discrete(dl) => DistSpec::Discrete {
                atoms: dl.atoms.clone(),
                probs: dl.probs.clone(),
            },
            Distribution::Uniform01 => DistSpec::Uniform01,
            Distribution::Pareto { alpha } => DistSpec::Pareto { alpha: *alpha },
            Distribution::Cauchy => DistSpec::Cauchy,
            Distribution::PointMass { c } => DistSpec::PointMass { c: *c },
            Distribution::Affine { a, b, base } => DistSpec::Affine {
                a: *a,
                b: *b,
                base: Box::new(DistSpec::from_dist(base)?),
            },
            Distribution::Mixture { weights, components } => DistSpec::Mixture {
                weights: weights.clone(),
                components: components
                    .iter()
                    .map(DistSpec::from_dist)
                    .collect::<Option<Vec<_>>>()?,
            },
            Distribution::QuantileBacked(_) => return None,
        })
    }
}

impl serde::Serialize for Distribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match DistSpec::from_dist(self) {
            Some(spec) => spec.serialize(s),
            None => Err(serde::ser::Error::custom(
                "quantile-backed laws have no JSON form",
            )),
        }
    }
}

impl<'de> serde::Deserialize<'de> for Distribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let spec = DistSpec::deserialize(d)?;
        spec.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn quantile_examples() {
        let p = Distribution::pareto(0.5).unwrap();
        assert!((p.quantile(0.75) - 16.0).abs() < 1e-12);
        let d = Distribution::discrete(vec![0.0, 1.0], vec![0.5, 0.5]).unwrap();
        assert_eq!(d.quantile(0.5), 0.0); // left-quantile convention at the jump
        assert_eq!(Distribution::Uniform01.quantile(0.3), 0.3);
    }

    #[test]
    fn cdf_examples() {
        assert!((Distribution::pareto(1.0).unwrap().cdf(2.0) - 0.5).abs() < 1e-15);
        assert_eq!(Distribution::point_mass(3.0).unwrap().cdf(3.0), 1.0);
        assert_eq!(Distribution::Uniform01.cdf(-1.0), 0.0);
    }

    #[test]
    fn support_bounds_examples() {
        let p = Distribution::pareto(0.5).unwrap();
        assert_eq!(p.support_bounds(), (ExtReal::Finite(1.0), ExtReal::PosInf));
        let d = Distribution::discrete(vec![0.0, 1.0], vec![0.3, 0.7]).unwrap();
        assert_eq!(
            d.support_bounds(),
            (ExtReal::Finite(0.0), ExtReal::Finite(1.0))
        );
        assert_eq!(
            Distribution::Cauchy.support_bounds(),
            (ExtReal::NegInf, ExtReal::PosInf)
        );
    }

    #[test]
    fn mean_class_examples() {
        assert_eq!(
            Distribution::Cauchy.mean_class(&cfg()).unwrap(),
            MeanClass::Undefined
        );
        assert_eq!(
            Distribution::pareto(0.5).unwrap().mean_class(&cfg()).unwrap(),
            MeanClass::PlusInf
        );
        assert_eq!(
            Distribution::Uniform01.mean_class(&cfg()).unwrap(),
            MeanClass::Finite(0.5)
        );
    }

    #[test]
    fn stop_loss_examples() {
        let c = cfg();
        assert_eq!(
            Distribution::Uniform01.stop_loss_plus(0.0, &c).unwrap(),
            ExtReal::Finite(0.5)
        );
        let d = Distribution::discrete(vec![0.0, 1.0], vec![0.5, 0.5]).unwrap();
        assert_eq!(d.stop_loss_plus(0.5, &c).unwrap(), ExtReal::Finite(0.25));
        let p = Distribution::pareto(0.5).unwrap();
        assert_eq!(p.stop_loss_plus(7.0, &c).unwrap(), ExtReal::PosInf);
        assert_eq!(
            Distribution::Uniform01.stop_loss_minus(1.0, &c).unwrap(),
            ExtReal::Finite(0.5)
        );
        let neg = Distribution::affine(-1.0, 0.0, Distribution::pareto(0.5).unwrap()).unwrap();
        assert_eq!(neg.stop_loss_minus(3.0, &c).unwrap(), ExtReal::PosInf);
        let pm = Distribution::point_mass(2.0).unwrap();
        assert_eq!(pm.stop_loss_minus(1.0, &c).unwrap(), ExtReal::Finite(0.0));
    }

    #[test]
    fn tail_integral_examples() {
        let c = cfg();
        assert_eq!(
            Distribution::Uniform01.upper_tail_integral(0.5, &c).unwrap(),
            ExtReal::Finite(0.375)
        );
        assert_eq!(
            Distribution::pareto(1.0)
                .unwrap()
                .upper_tail_integral(0.5, &c)
                .unwrap(),
            ExtReal::PosInf
        );
        let d = Distribution::discrete(vec![0.0, 1.0], vec![0.5, 0.5]).unwrap();
        assert_eq!(
            d.lower_tail_integral(0.25, &c).unwrap(),
            ExtReal::Finite(0.0)
        );
    }

    #[test]
    fn negative_affine_uses_right_quantile() {
        // -X for X = Discrete({0,1}, {0.3, 0.7})
        let x = Distribution::discrete(vec![0.0, 1.0], vec![0.3, 0.7]).unwrap();
        let neg = Distribution::affine(-1.0, 0.0, x).unwrap();
        let flat = neg.as_discrete().unwrap();
        assert_eq!(flat.atoms(), &[-1.0, 0.0]);
        assert_eq!(flat.probs(), &[0.7, 0.3]);
        // left quantile of -X at 0.7 is -1, at 0.71 it is 0
        assert_eq!(neg.quantile(0.7), -1.0);
        assert_eq!(neg.quantile(0.71), 0.0);
    }

    #[test]
    fn stop_loss_identity_for_finite_means() {
        let c = cfg();
        let laws = [
            Distribution::Uniform01,
            Distribution::pareto(3.0).unwrap(),
            Distribution::discrete(vec![-1.0, 2.0, 5.0], vec![0.2, 0.5, 0.3]).unwrap(),
            Distribution::mixture(
                vec![0.4, 0.6],
                vec![
                    Distribution::Uniform01,
                    Distribution::point_mass(2.0).unwrap(),
                ],
            )
            .unwrap(),
        ];
        for d in &laws {
            let m = d.mean_class(&c).unwrap().finite_value().unwrap();
            for w in [-2.0, 0.0, 0.5, 1.5, 4.0] {
                let plus = d.stop_loss_plus(w, &c).unwrap().as_f64();
                let minus = d.stop_loss_minus(w, &c).unwrap().as_f64();
                assert!(
                    ((plus - minus) - (m - w)).abs() <= 2.0 * c.tol + 1e-9,
                    "identity failed at w={w}"
                );
            }
        }
    }

    #[test]
    fn mixture_quantile_bisection_matches_components() {
        // mixture of two continuous laws: check Galois connection numerically
        let m = Distribution::mixture(
            vec![0.5, 0.5],
            vec![
                Distribution::Uniform01,
                Distribution::affine(1.0, 2.0, Distribution::Uniform01).unwrap(),
            ],
        )
        .unwrap();
        for k in 1..20 {
            let t = k as f64 / 20.0;
            let x = m.quantile(t);
            assert!(m.cdf(x) >= t - 1e-9);
        }
        // cdf of this mixture at 0.5 is 0.25
        assert!((m.cdf(0.5) - 0.25).abs() < 1e-12);
        assert!((m.quantile(0.25) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn json_round_trip() {
        let src = r#"{"type":"affine","a":-1,"b":0,"base":{"type":"pareto","alpha":0.5}}"#;
        let d: Distribution = serde_json::from_str(src).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        let d2: Distribution = serde_json::from_str(&json).unwrap();
        assert_eq!(d.quantile(0.3), d2.quantile(0.3));
        let bad = r#"{"type":"discrete","atoms":[1,0],"probs":[0.5,0.5]}"#;
        assert!(serde_json::from_str::<Distribution>(bad).is_err());
    }
}
