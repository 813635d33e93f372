//! Couplings on ℝ^d driven by a single shared uniform variable, plus
//! finitely discrete joints.
//!
//! Every coupling constructed here is either a vector of transport maps
//! `(T₁(U), …, T_d(U))` of one uniform `U` on `(0,1)`, or a finite joint
//! law. This makes `E[φ]` a one-dimensional integral, and covers the two
//! extremes of interest: the comonotonic version `T_i = F_i⁻¹` and the
//! counter-monotonic version (pairwise for `d = 2`, single-uniform interval
//! construction for `d ≥ 3` when it exists).

use crate::dist::{DiscreteLaw, Distribution, QuantileMap};
use crate::extmath::{integrate_quantile, ExtReal, MeanClass, NonConvergent, QuadConfig};
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CouplingError {
    /// Requested a counter-monotonic version for marginals that have none.
    #[error("no counter-monotonic version exists for these marginals")]
    CtNotExists,
    #[error("invalid joint: {0}")]
    BadJoint(String),
    #[error("a coupling needs at least one marginal")]
    Empty,
}

/// A coupling of `d` laws.
#[derive(Clone, Debug)]
pub enum Coupling {
    /// Transport maps of one shared uniform: the i-th coordinate is
    /// `maps[i](U)`.
    UMaps {
        maps: Vec<QuantileMap>,
        marginals: Vec<Distribution>,
        /// All maps nondecreasing (comonotonic); enables the exact
        /// quantile-sum law.
        monotone: bool,
    },
    /// Finite joint law: `atoms[k]` is a point of ℝ^d carrying `probs[k]`.
    DiscreteJoint { atoms: Vec<Vec<f64>>, probs: Vec<f64> },
}

/// Outcome of the counter-monotonic existence test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CtExistence {
    /// `Σ P(Xᵢ > ess-inf Xᵢ) ≤ 1`: all-but-one components sit at their
    /// minimum at any time.
    ExistsLow,
    /// `Σ P(Xᵢ < ess-sup Xᵢ) ≤ 1`: the symmetric condition at the top.
    ExistsHigh,
    /// At most two non-degenerate components: counter-monotonicity is
    /// unconstrained.
    ExistsPairwise,
    NotExists,
}

impl Coupling {
    pub fn dim(&self) -> usize {
        match self {
            Coupling::UMaps { maps, .. } => maps.len(),
            Coupling::DiscreteJoint { atoms, .. } => atoms.first().map_or(0, |a| a.len()),
        }
    }

    pub fn discrete_joint(atoms: Vec<Vec<f64>>, probs: Vec<f64>) -> Result<Coupling, CouplingError> {
        if atoms.is_empty() {
            return Err(CouplingError::Empty);
        }
        let d = atoms[0].len();
        if d == 0 || atoms.iter().any(|a| a.len() != d) {
            return Err(CouplingError::BadJoint(
                "all atoms must share a positive dimension".into(),
            ));
        }
        if atoms.len() != probs.len() {
            return Err(CouplingError::BadJoint("atoms/probs length mismatch".into()));
        }
        if probs.iter().any(|p| !p.is_finite() || *p <= 0.0)
            || (probs.iter().sum::<f64>() - 1.0).abs() > 1e-9
        {
            return Err(CouplingError::BadJoint(
                "probabilities must be positive and sum to 1".into(),
            ));
        }
        if atoms.iter().flatten().any(|v| !v.is_finite()) {
            return Err(CouplingError::BadJoint("atoms must be finite".into()));
        }
        Ok(Coupling::DiscreteJoint { atoms, probs })
    }

    /// Exact marginal of coordinate `i` for finite joints; the declared
    /// marginal for transport-map couplings.
    pub fn marginal(&self, i: usize) -> Distribution {
        match self {
            Coupling::UMaps { marginals, .. } => marginals[i].clone(),
            Coupling::DiscreteJoint { atoms, probs } => {
                let pairs = atoms.iter().map(|a| a[i]).zip(probs.iter().copied());
                Distribution::Discrete(
                    DiscreteLaw::from_pairs(pairs.map(|(a, p)| (a, p)).collect())
                        .expect("joint invariants guarantee a valid marginal"),
                )
            }
        }
    }

    /// Evaluate all coordinates at one uniform value (UMaps only).
    pub fn point_at(&self, u: f64) -> Option<Vec<f64>> {
        match self {
            Coupling::UMaps { maps, .. } => Some(maps.iter().map(|m| m.eval(u)).collect()),
            Coupling::DiscreteJoint { .. } => None,
        }
    }

    /// A finite support discretization: exact for finite joints, midpoint
    /// grid for transport maps.
    pub fn support_points(&self, grid_n: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
        match self {
            Coupling::DiscreteJoint { atoms, probs } => (atoms.clone(), probs.clone()),
            Coupling::UMaps { maps, .. } => {
                let n = grid_n.max(2);
                let w = 1.0 / n as f64;
                let pts = (0..n)
                    .map(|k| {
                        let u = (k as f64 + 0.5) * w;
                        maps.iter().map(|m| m.eval(u)).collect()
                    })
                    .collect();
                (pts, vec![w; n])
            }
        }
    }
}

/// The comonotonic version: `T_i(u) = F_i⁻¹(u)` for every coordinate.
pub fn comonotonic_version(ds: &[Distribution]) -> Result<Coupling, CouplingError> {
    if ds.is_empty() {
        return Err(CouplingError::Empty);
    }
    let maps = ds
        .iter()
        .map(|d| {
            let d = d.clone();
            QuantileMap::new(Arc::new(move |u| d.quantile(u)))
        })
        .collect();
    Ok(Coupling::UMaps {
        maps,
        marginals: ds.to_vec(),
        monotone: true,
    })
}

/// `P(X > ess-inf X)` and `P(X < ess-sup X)`.
fn boundary_escape_probs(d: &Distribution) -> (f64, f64) {
    let (lo, hi) = d.support_bounds();
    let p = match lo {
        ExtReal::Finite(a) => 1.0 - d.mass_at(a),
        _ => 1.0,
    };
    let q = match hi {
        ExtReal::Finite(b) => 1.0 - d.mass_at(b),
        _ => 1.0,
    };
    (p, q)
}

/// Decide whether a counter-monotonic version of the given marginals exists.
pub fn countermono_existence(ds: &[Distribution]) -> CtExistence {
    let non_degenerate = ds.iter().filter(|d| !d.is_degenerate()).count();
    if non_degenerate <= 2 {
        return CtExistence::ExistsPairwise;
    }
    let (mut sum_low, mut sum_high) = (0.0, 0.0);
    for d in ds {
        let (p, q) = boundary_escape_probs(d);
        sum_low += p;
        sum_high += q;
    }
    if sum_low <= 1.0 + 1e-12 {
        CtExistence::ExistsLow
    } else if sum_high <= 1.0 + 1e-12 {
        CtExistence::ExistsHigh
    } else {
        CtExistence::NotExists
    }
}

fn clamp_unit(t: f64) -> f64 {
    t.clamp(1e-12, 1.0 - 1e-12)
}

/// The counter-monotonic version, when it exists.
///
/// For at most two non-degenerate components the classical pair
/// `(F₁⁻¹(U), F₂⁻¹-right(1−U))` is used. With three or more, disjoint
/// intervals `I_i` of length `p_i = P(X_i > ess-inf X_i)` are packed left to
/// right in input order; coordinate `i` climbs through its upper quantiles
/// on `I_i` and rests at its essential infimum elsewhere (the symmetric
/// construction at the top is used when only the high-side sum fits).
pub fn countermono_version(ds: &[Distribution]) -> Result<Coupling, CouplingError> {
    if ds.is_empty() {
        return Err(CouplingError::Empty);
    }
    let existence = countermono_existence(ds);
    let mut maps: Vec<QuantileMap> = Vec::with_capacity(ds.len());
    match existence {
        CtExistence::NotExists => return Err(CouplingError::CtNotExists),
        CtExistence::ExistsPairwise => {
            let mut live = ds.iter().enumerate().filter(|(_, d)| !d.is_degenerate());
            let first = live.next().map(|(i, _)| i);
            let second = live.next().map(|(i, _)| i);
            for (i, d) in ds.iter().enumerate() {
                let d = d.clone();
                let f: Arc<dyn Fn(f64) -> f64 + Send + Sync> = if Some(i) == second {
                    Arc::new(move |u| d.right_quantile(clamp_unit(1.0 - u)))
                } else if Some(i) == first {
                    Arc::new(move |u| d.quantile(clamp_unit(u)))
                } else {
                    Arc::new(move |_| d.quantile(0.5))
                };
                maps.push(QuantileMap::new(f));
            }
        }
        CtExistence::ExistsLow => {
            let mut left = 0.0f64;
            for d in ds {
                let (p, _) = boundary_escape_probs(d);
                let lo = match d.support_bounds().0 {
                    ExtReal::Finite(a) => a,
                    _ => unreachable!("ExistsLow forces a finite essential infimum"),
                };
                let (l, d) = (left, d.clone());
                maps.push(QuantileMap::new(Arc::new(move |u| {
                    if u >= l && u < l + p {
                        d.quantile(clamp_unit(u - l + (1.0 - p)))
                    } else {
                        lo
                    }
                })));
                left += p;
            }
        }
        CtExistence::ExistsHigh => {
            let mut left = 0.0f64;
            for d in ds {
                let (_, q) = boundary_escape_probs(d);
                let hi = match d.support_bounds().1 {
                    ExtReal::Finite(b) => b,
                    _ => unreachable!("ExistsHigh forces a finite essential supremum"),
                };
                let (l, d) = (left, d.clone());
                maps.push(QuantileMap::new(Arc::new(move |u| {
                    if u >= l && u < l + q {
                        d.quantile(clamp_unit(u - l))
                    } else {
                        hi
                    }
                })));
                left += q;
            }
        }
    }
    Ok(Coupling::UMaps {
        maps,
        marginals: ds.to_vec(),
        monotone: false,
    })
}

/// The law of the coordinate sum under the coupling.
///
/// Finite joints push forward exactly; comonotonic couplings have the exact
/// quantile-sum law; other transport-map couplings are discretized at
/// `grid_n` midpoints (grid-numeric quality).
pub fn sum_distribution(c: &Coupling, cfg: &QuadConfig) -> Distribution {
    match c {
        Coupling::DiscreteJoint { atoms, probs } => {
            let pairs = atoms
                .iter()
                .map(|a| a.iter().sum::<f64>())
                .zip(probs.iter().copied())
                .collect();
            Distribution::Discrete(
                DiscreteLaw::from_pairs(pairs).expect("joint invariants give a valid sum law"),
            )
        }
        Coupling::UMaps {
            maps,
            marginals,
            monotone,
        } => {
            let maps = maps.clone();
            if *monotone {
                if let Some(discretes) = marginals
                    .iter()
                    .map(|m| m.as_discrete())
                    .collect::<Option<Vec<_>>>()
                {
                    return Distribution::Discrete(comonotonic_discrete_sum(&discretes));
                }
                Distribution::from_quantile_fn(Arc::new(move |u| {
                    maps.iter().map(|m| m.eval(u)).sum()
                }))
            } else {
                let n = cfg.grid_n.max(2);
                let w = 1.0 / n as f64;
                let pairs = (0..n)
                    .map(|k| {
                        let u = (k as f64 + 0.5) * w;
                        (maps.iter().map(|m| m.eval(u)).sum::<f64>(), w)
                    })
                    .collect();
                Distribution::Discrete(
                    DiscreteLaw::from_pairs(pairs).expect("midpoint grid weights are valid"),
                )
            }
        }
    }
}

/// Exact sum law of comonotonic discrete marginals: all quantile functions
/// are constant between cumulative-probability levels, so walking the merged
/// level grid enumerates the atoms of the sum.
fn comonotonic_discrete_sum(ds: &[DiscreteLaw]) -> DiscreteLaw {
    let mut levels: Vec<f64> = vec![1.0];
    for d in ds {
        let mut acc = 0.0;
        for p in &d.probs()[..d.probs().len() - 1] {
            acc += p;
            levels.push(acc);
        }
    }
    levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
    levels.dedup();
    let mut pairs = Vec::with_capacity(levels.len());
    let mut prev = 0.0;
    for lv in levels {
        if lv - prev > 1e-15 {
            let mid = 0.5 * (prev + lv);
            pairs.push((ds.iter().map(|d| d.quantile(mid)).sum(), lv - prev));
        }
        prev = lv;
    }
    DiscreteLaw::from_pairs(pairs).expect("level walk yields a valid law")
}

/// `E[φ(X₁,…,X_d)]` under the coupling, classified in the extended reals by
/// integrating the positive and negative parts separately.
pub fn expectation_of<F: Fn(&[f64]) -> f64>(
    c: &Coupling,
    phi: F,
    cfg: &QuadConfig,
) -> Result<MeanClass, NonConvergent> {
    match c {
        Coupling::DiscreteJoint { atoms, probs } => {
            let v: f64 = atoms
                .iter()
                .zip(probs)
                .map(|(a, p)| p * phi(a))
                .sum();
            if v.is_finite() {
                Ok(MeanClass::Finite(v))
            } else {
                Err(NonConvergent)
            }
        }
        Coupling::UMaps { maps, .. } => {
            let eval = |u: f64| {
                let pt: Vec<f64> = maps.iter().map(|m| m.eval(u)).collect();
                phi(&pt)
            };
            let pos = integrate_quantile(|u| eval(u).max(0.0), 0.0, 1.0, cfg)?;
            let neg = integrate_quantile(|u| (-eval(u)).max(0.0), 0.0, 1.0, cfg)?;
            Ok(MeanClass::from_parts(pos, neg))
        }
    }
}

/// Support criterion for pairwise counter-monotonicity: no coordinate pair
/// may move in the same direction between two support points.
pub fn is_pairwise_countermonotonic(atoms: &[Vec<f64>]) -> bool {
    let d = atoms.first().map_or(0, |a| a.len());
    let tol = 1e-9;
    // grid discretizations repeat points heavily; the criterion only sees
    // distinct support points
    let mut atoms: Vec<&Vec<f64>> = atoms.iter().collect();
    atoms.sort_by(|a, b| a.partial_cmp(b).unwrap());
    atoms.dedup();
    for a in &atoms {
        for b in &atoms {
            for i in 0..d {
                for j in (i + 1)..d {
                    if (a[i] - b[i]) * (a[j] - b[j]) > tol {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Grid check that a transport-map coupling reproduces its declared
/// marginals: sorted map evaluations must fall in the quantile envelope of
/// the adjacent grid levels (exact joints are checked atomwise).
pub fn marginals_faithful(c: &Coupling, grid_n: usize, tol: f64) -> bool {
    match c {
        Coupling::DiscreteJoint { .. } => {
            // projection is exact by construction
            true
        }
        Coupling::UMaps { maps, marginals, .. } => {
            let n = grid_n.max(4);
            for (m, law) in maps.iter().zip(marginals) {
                let mut vals: Vec<f64> = (0..n)
                    .map(|k| m.eval((k as f64 + 0.5) / n as f64))
                    .collect();
                vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
                for (k, v) in vals.iter().enumerate() {
                    // jumps make pointwise quantile comparison too strict;
                    // bracket by the neighboring grid levels instead
                    let lo = law.quantile(clamp_unit(k as f64 / n as f64));
                    let hi = law.quantile(clamp_unit((k + 2) as f64 / n as f64));
                    if *v < lo - tol.max(1e-9 * lo.abs()) || *v > hi + tol.max(1e-9 * hi.abs()) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// JSON wire form of a coupling request.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CouplingSpec {
    Comonotonic { marginals: Vec<Distribution> },
    Countermonotonic { marginals: Vec<Distribution> },
    DiscreteJoint { atoms: Vec<Vec<f64>>, probs: Vec<f64> },
}

impl CouplingSpec {
    pub fn build(self) -> Result<Coupling, CouplingError> {
        match self {
            CouplingSpec::Comonotonic { marginals } => comonotonic_version(&marginals),
            CouplingSpec::Countermonotonic { marginals } => countermono_version(&marginals),
            CouplingSpec::DiscreteJoint { atoms, probs } => Coupling::discrete_joint(atoms, probs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::check_cx;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    fn bern(p: f64) -> Distribution {
        Distribution::discrete(vec![0.0, 1.0], vec![1.0 - p, p]).unwrap()
    }

    #[test]
    fn comonotonic_uniform_pair_sums_to_double() {
        let c = comonotonic_version(&[Distribution::Uniform01, Distribution::Uniform01]).unwrap();
        let s = sum_distribution(&c, &cfg());
        for t in [0.1, 0.5, 0.77] {
            assert!((s.quantile(t) - 2.0 * t).abs() < 1e-12);
        }
    }

    #[test]
    fn comonotonic_pareto_half_pair_is_scaled_single() {
        let x = Distribution::pareto(0.5).unwrap();
        let c = comonotonic_version(&[x.clone(), x.clone()]).unwrap();
        let s = sum_distribution(&c, &cfg());
        for t in [0.2, 0.5, 0.9, 0.99] {
            assert!((s.quantile(t) - 2.0 * (1.0 - t).powi(-2)).abs() < 1e-9 * s.quantile(t));
        }
    }

    #[test]
    fn countermono_existence_examples() {
        let b = bern(0.3);
        assert_eq!(
            countermono_existence(&[b.clone(), b.clone(), b.clone()]),
            CtExistence::ExistsLow
        );
        let u = Distribution::Uniform01;
        assert_eq!(
            countermono_existence(&[u.clone(), u.clone(), u.clone()]),
            CtExistence::NotExists
        );
        assert_eq!(
            countermono_existence(&[u.clone(), Distribution::Cauchy]),
            CtExistence::ExistsPairwise
        );
        // high-side: mirror of three Bernoulli(0.3)
        let b7 = bern(0.7);
        assert_eq!(
            countermono_existence(&[b7.clone(), b7.clone(), b7.clone()]),
            CtExistence::ExistsHigh
        );
    }

    #[test]
    fn countermono_uniform_pair_sums_to_one() {
        let c =
            countermono_version(&[Distribution::Uniform01, Distribution::Uniform01]).unwrap();
        let s = sum_distribution(&c, &cfg());
        let d = s.as_discrete().expect("grid sum law is discrete");
        assert_eq!(d.atoms().len(), 1);
        assert!((d.atoms()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn countermono_three_bernoulli_joint() {
        let b = bern(0.3);
        let c = countermono_version(&[b.clone(), b.clone(), b.clone()]).unwrap();
        let (pts, probs) = c.support_points(10_000);
        // tally the four admissible support points
        let mut mass = std::collections::HashMap::new();
        for (p, w) in pts.iter().zip(&probs) {
            let key: Vec<i64> = p.iter().map(|v| v.round() as i64).collect();
            assert!(p.iter().all(|v| (v - v.round()).abs() < 1e-9));
            *mass.entry(key).or_insert(0.0) += w;
        }
        let expect = [
            (vec![1, 0, 0], 0.3),
            (vec![0, 1, 0], 0.3),
            (vec![0, 0, 1], 0.3),
            (vec![0, 0, 0], 0.1),
        ];
        assert_eq!(mass.len(), 4);
        for (k, v) in expect {
            assert!((mass[&k] - v).abs() < 1e-3, "{k:?}: {}", mass[&k]);
        }
        assert!(is_pairwise_countermonotonic(&pts));
    }

    #[test]
    fn example1_nested_reciprocal_sum_quantile() {
        // X = U, Y = 1 − U; 1/X + 1/Y has quantile 4/(1−u²)
        let x = Distribution::Uniform01;
        let y = Distribution::affine(-1.0, 1.0, Distribution::Uniform01).unwrap();
        let c = countermono_version(&[x, y]).unwrap();
        let recip_sum = |p: &[f64]| 1.0 / p[0] + 1.0 / p[1];
        let (pts, _) = c.support_points(100_000);
        let mut vals: Vec<f64> = pts.iter().map(|p| recip_sum(p)).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for t in [0.1, 0.5, 0.9] {
            let k = (t * vals.len() as f64) as usize;
            let expect = 4.0 / (1.0 - t * t);
            assert!(
                (vals[k] - expect).abs() < 1e-3 * expect,
                "{t}: {} vs {expect}",
                vals[k]
            );
        }
    }

    #[test]
    fn theorem3_bounds_on_a_discrete_joint() {
        // marginals Bernoulli(0.5); independent-ish joint
        let atoms = vec![
            vec![0.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
        ];
        let probs = vec![0.25, 0.25, 0.25, 0.25];
        let j = Coupling::discrete_joint(atoms, probs).unwrap();
        let marg = [j.marginal(0), j.marginal(1)];
        let cfg = cfg();
        let sum_j = sum_distribution(&j, &cfg);
        let co = sum_distribution(&comonotonic_version(&marg).unwrap(), &cfg);
        let ct = sum_distribution(&countermono_version(&marg).unwrap(), &cfg);
        assert!(check_cx(&ct, &sum_j, &cfg).holds());
        assert!(check_cx(&sum_j, &co, &cfg).holds());
    }

    #[test]
    fn point_mass_marginal_is_affine_shift() {
        let d = bern(0.4);
        let c = comonotonic_version(&[Distribution::point_mass(1.0).unwrap(), d.clone()]).unwrap();
        let s = sum_distribution(&c, &cfg());
        let expect = Distribution::affine(1.0, 1.0, d).unwrap();
        for t in [0.1, 0.5, 0.9] {
            assert!((s.quantile(t) - expect.quantile(t)).abs() < 1e-12);
        }
    }

    #[test]
    fn expectation_of_discrete_and_umaps() {
        let j = Coupling::discrete_joint(
            vec![vec![0.0, 0.0], vec![1.0, 2.0]],
            vec![0.5, 0.5],
        )
        .unwrap();
        let m = expectation_of(&j, |p| p[0] * p[1], &cfg()).unwrap();
        assert_eq!(m, MeanClass::Finite(1.0));
        let c = comonotonic_version(&[Distribution::Uniform01, Distribution::Uniform01]).unwrap();
        match expectation_of(&c, |p| p[0] * p[1], &cfg()).unwrap() {
            MeanClass::Finite(v) => assert!((v - 1.0 / 3.0).abs() < 1e-8),
            other => panic!("expected finite, got {other:?}"),
        }
    }

    #[test]
    fn pairwise_countermonotonic_criterion() {
        assert!(is_pairwise_countermonotonic(&[
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, 0.0],
        ]));
        assert!(!is_pairwise_countermonotonic(&[
            vec![0.0, 0.0],
            vec![1.0, 1.0],
        ]));
        assert!(is_pairwise_countermonotonic(&[vec![2.0, 5.0]]));
    }

    #[test]
    fn marginal_fidelity_on_constructions() {
        let b = bern(0.3);
        let cases = [
            comonotonic_version(&[Distribution::Uniform01, Distribution::pareto(1.5).unwrap()])
                .unwrap(),
            countermono_version(&[Distribution::Uniform01, Distribution::Uniform01]).unwrap(),
            countermono_version(&[b.clone(), b.clone(), b.clone()]).unwrap(),
        ];
        for c in &cases {
            assert!(marginals_faithful(c, 10_000, 1e-8));
        }
    }

    #[test]
    fn coupling_spec_json_round_trip() {
        let txt = r#"{"type":"comonotonic","marginals":[{"type":"uniform01"},{"type":"pareto","alpha":2.0}]}"#;
        let spec: CouplingSpec = serde_json::from_str(txt).unwrap();
        let c = spec.build().unwrap();
        assert_eq!(c.dim(), 2);
        let txt = r#"{"type":"discrete_joint","atoms":[[0,0],[1,1]],"probs":[0.5,0.5]}"#;
        let spec: CouplingSpec = serde_json::from_str(txt).unwrap();
        assert!(spec.build().is_ok());
        // invalid: probs off
        let txt = r#"{"type":"discrete_joint","atoms":[[0,0]],"probs":[0.5]}"#;
        let spec: CouplingSpec = serde_json::from_str(txt).unwrap();
        assert!(spec.build().is_err());
    }
}
