//! Property-based invariants of the order checkers on random discrete
//! laws: agreement with a brute-force oracle, order implications,
//! affine equivariance, mixture closure, and transitivity.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stochorder::dist::DiscreteLaw;
use stochorder::orders::{check_cx, check_cx_dagger, check_icx, check_st, cx_bruteforce_oracle};
use stochorder::randgen::{mean_preserving_spread, random_discrete};
use stochorder::{Distribution, QuadConfig};

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

fn law(seed: u64, max_atoms: usize) -> DiscreteLaw {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_discrete(&mut rng, max_atoms)
}

fn dist(d: &DiscreteLaw) -> Distribution {
    Distribution::Discrete(d.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The stop-loss decision agrees with sampling 300 random convex test
    /// functions: the oracle never contradicts an exact verdict.
    #[test]
    fn oracle_never_contradicts_checker(sx in 0u64..5000, sy in 5000u64..10000) {
        let (a, b) = (law(sx, 8), law(sy, 8));
        let v = check_cx(&dist(&a), &dist(&b), &cfg());
        let o = cx_bruteforce_oracle(&a, &b, 300, sx ^ sy);
        if v.holds() {
            prop_assert!(!o.fails(), "oracle found a violating convex function");
        }
        if o.fails() {
            prop_assert!(v.fails(), "checker missed a violation the oracle found");
        }
    }

    /// Convex order implies its relaxed variant.
    #[test]
    fn cx_implies_dagger(sx in 0u64..5000, sy in 5000u64..10000) {
        let (a, b) = (dist(&law(sx, 6)), dist(&law(sy, 6)));
        if check_cx(&a, &b, &cfg()).holds() {
            prop_assert!(check_cx_dagger(&a, &b, &cfg()).holds());
        }
    }

    /// First-order dominance implies increasing-convex dominance.
    #[test]
    fn st_implies_icx(sx in 0u64..5000, sy in 5000u64..10000) {
        let (a, b) = (dist(&law(sx, 6)), dist(&law(sy, 6)));
        if check_st(&a, &b, &cfg()).holds() {
            prop_assert!(check_icx(&a, &b, &cfg()).holds());
        }
    }

    /// Convex order is invariant under increasing affine maps.
    #[test]
    fn affine_equivariance(seed in 0u64..5000, scale in 1u32..5, shift in -4i32..4) {
        let base = law(seed, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
        let spread = mean_preserving_spread(&mut rng, &base);
        let (a, b) = (dist(&base), dist(&spread));
        let c = cfg();
        prop_assert!(check_cx(&a, &b, &c).holds());
        let fa = Distribution::affine(scale as f64, shift as f64, a).unwrap();
        let fb = Distribution::affine(scale as f64, shift as f64, b).unwrap();
        prop_assert!(check_cx(&fa, &fb, &c).holds());
    }

    /// Mixing both sides with a common component preserves convex order
    /// (stop-loss transforms are linear in the law).
    #[test]
    fn mixture_closure(seed in 0u64..5000, sz in 10000u64..15000, w in 1u32..10) {
        let base = law(seed, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1234);
        let spread = mean_preserving_spread(&mut rng, &base);
        let z = dist(&law(sz, 5));
        let wt = w as f64 / 10.0;
        let c = cfg();
        let mix_a =
            Distribution::mixture(vec![wt, 1.0 - wt], vec![dist(&base), z.clone()]).unwrap();
        let mix_b = Distribution::mixture(vec![wt, 1.0 - wt], vec![dist(&spread), z]).unwrap();
        prop_assert!(check_cx(&mix_a, &mix_b, &c).holds());
    }

    /// Chains of mean-preserving spreads compose: transitivity of the
    /// convex order on exact discrete instances.
    #[test]
    fn transitivity_along_spread_chains(seed in 0u64..5000) {
        let x = law(seed, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x77);
        let y = mean_preserving_spread(&mut rng, &x);
        let z = mean_preserving_spread(&mut rng, &y);
        let c = cfg();
        prop_assert!(check_cx(&dist(&x), &dist(&y), &c).holds());
        prop_assert!(check_cx(&dist(&y), &dist(&z), &c).holds());
        prop_assert!(check_cx(&dist(&x), &dist(&z), &c).holds());
    }

    /// Reflexivity, and exactness of verdicts on discrete laws.
    #[test]
    fn reflexive_and_exact(seed in 0u64..10000) {
        let a = dist(&law(seed, 8));
        let v = check_cx(&a, &a, &cfg());
        prop_assert!(v.holds() && v.is_exact());
    }
}
