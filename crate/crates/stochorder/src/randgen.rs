//! Seeded random instance generators for tests and scripted suites.
//!
//! Probabilities are kept dyadic (multiples of 1/2⁶ or finer), so marginal
//! sums, transport residuals, and mean-preserving splits are exact in
//! binary floating point and "exact equality" assertions are meaningful.

use crate::couplings::{Coupling, CouplingError};
use crate::dist::DiscreteLaw;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Probability denominator for generated laws; dyadic for exactness.
pub const UNIT_DENOM: u32 = 64;

/// A random discrete law with up to `max_atoms` distinct integer atoms and
/// dyadic probabilities.
pub fn random_discrete(rng: &mut ChaCha8Rng, max_atoms: usize) -> DiscreteLaw {
    let n_atoms = rng.gen_range(1..=max_atoms.max(1));
    let mut atoms: Vec<f64> = Vec::new();
    while atoms.len() < n_atoms {
        let a = rng.gen_range(-8..=8) as f64;
        if !atoms.contains(&a) {
            atoms.push(a);
        }
    }
    atoms.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let units = random_units(rng, atoms.len(), UNIT_DENOM);
    let probs = units
        .iter()
        .map(|u| *u as f64 / UNIT_DENOM as f64)
        .collect();
    DiscreteLaw::new(atoms, probs).expect("generated atoms/probs are valid")
}

/// Split `total` units into `n` positive parts, uniformly at random.
fn random_units(rng: &mut ChaCha8Rng, n: usize, total: u32) -> Vec<u32> {
    assert!(n as u32 <= total);
    let mut units = vec![1u32; n];
    for _ in 0..(total - n as u32) {
        units[rng.gen_range(0..n)] += 1;
    }
    units
}

/// A random joint law with the given marginals, exactly.
///
/// Marginal masses are decomposed into units of `1/UNIT_DENOM` and moved in
/// random batches: repeatedly pick one level with remaining units per
/// coordinate and transfer a random amount bounded by all of them. The
/// projections reproduce each marginal with no rounding.
pub fn random_joint(
    rng: &mut ChaCha8Rng,
    marginals: &[DiscreteLaw],
) -> Result<Coupling, CouplingError> {
    let d = marginals.len();
    let mut remaining: Vec<Vec<u32>> = marginals
        .iter()
        .map(|m| {
            m.probs()
                .iter()
                .map(|p| {
                    let u = (p * UNIT_DENOM as f64).round() as u32;
                    assert!(
                        (u as f64 / UNIT_DENOM as f64 - p).abs() < 1e-12,
                        "marginals must have dyadic probabilities"
                    );
                    u
                })
                .collect()
        })
        .collect();
    let mut atoms = Vec::new();
    let mut probs = Vec::new();
    let mut left = UNIT_DENOM;
    while left > 0 {
        let picks: Vec<usize> = remaining
            .iter()
            .map(|r| {
                let live: Vec<usize> = (0..r.len()).filter(|&k| r[k] > 0).collect();
                live[rng.gen_range(0..live.len())]
            })
            .collect();
        let cap = picks
            .iter()
            .zip(&remaining)
            .map(|(&k, r)| r[k])
            .min()
            .unwrap();
        let t = rng.gen_range(1..=cap);
        for (dim, &k) in picks.iter().enumerate() {
            remaining[dim][k] -= t;
        }
        atoms.push(
            (0..d)
                .map(|dim| marginals[dim].atoms()[picks[dim]])
                .collect(),
        );
        probs.push(t as f64 / UNIT_DENOM as f64);
        left -= t;
    }
    Coupling::discrete_joint(atoms, probs)
}

/// A mean-preserving spread of `d`: half the mass of one atom is split
/// equally onto `a − δ` and `a + δ`. The result dominates `d` in convex
/// order with the same mean, exactly.
pub fn mean_preserving_spread(rng: &mut ChaCha8Rng, d: &DiscreteLaw) -> DiscreteLaw {
    let k = rng.gen_range(0..d.atoms().len());
    let delta = rng.gen_range(1..=2) as f64;
    let a = d.atoms()[k];
    let moved = d.probs()[k] / 2.0;
    let mut pairs: Vec<(f64, f64)> = Vec::new();
    for (i, (&atom, &p)) in d.atoms().iter().zip(d.probs()).enumerate() {
        if i == k {
            if p - moved > 0.0 {
                pairs.push((atom, p - moved));
            }
        } else {
            pairs.push((atom, p));
        }
    }
    pairs.push((a - delta, moved / 2.0));
    pairs.push((a + delta, moved / 2.0));
    DiscreteLaw::from_pairs(pairs).expect("spread preserves a valid law")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::couplings::sum_distribution;
    use crate::dist::Distribution;
    use crate::extmath::QuadConfig;
    use crate::orders::check_cx;
    use rand::SeedableRng;

    #[test]
    fn random_discrete_is_valid_and_dyadic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = random_discrete(&mut rng, 8);
            let sum: f64 = d.probs().iter().sum();
            assert_eq!(sum, 1.0, "dyadic masses sum exactly");
        }
    }

    #[test]
    fn random_joint_reproduces_marginals_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let m: Vec<DiscreteLaw> = (0..3).map(|_| random_discrete(&mut rng, 5)).collect();
            let j = random_joint(&mut rng, &m).unwrap();
            for (i, want) in m.iter().enumerate() {
                let got = j.marginal(i).as_discrete().unwrap();
                assert_eq!(got.atoms(), want.atoms());
                for (a, b) in got.probs().iter().zip(want.probs()) {
                    assert_eq!(a, b, "marginal mass must be exact");
                }
            }
        }
    }

    #[test]
    fn spread_dominates_in_convex_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let cfg = QuadConfig::default();
        for _ in 0..30 {
            let d = random_discrete(&mut rng, 6);
            let s = mean_preserving_spread(&mut rng, &d);
            assert_eq!(d.mean(), s.mean(), "mean preserved exactly");
            let v = check_cx(
                &Distribution::Discrete(d),
                &Distribution::Discrete(s),
                &cfg,
            );
            assert!(v.holds() && v.is_exact());
        }
    }

    #[test]
    fn joint_sum_is_valid_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let m: Vec<DiscreteLaw> = (0..2).map(|_| random_discrete(&mut rng, 4)).collect();
        let j = random_joint(&mut rng, &m).unwrap();
        let s = sum_distribution(&j, &QuadConfig::default());
        let d = s.as_discrete().unwrap();
        assert!((d.probs().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
