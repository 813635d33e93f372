//! Stochastic-order verification for probability laws on the real line,
//! including laws with infinite or undefined means.
//!
//! The crate decides convex-family order relations through their stop-loss
//! characterizations in the extended reals, builds comonotonic and
//! counter-monotonic couplings, checks concordance and supermodular order on
//! finite lattices, and evaluates optimal-transport extremes for
//! supermodular costs.
//!
//! The examples below mirror the chapters of the guide in `book/`; each is
//! a doc-test, so the guide's snippets stay compilable.
//!
//! # Laws and extended means
//!
//! ```
//! use stochorder::{Distribution, MeanClass, QuadConfig};
//!
//! let cfg = QuadConfig::default();
//! let pareto = Distribution::pareto(0.5).unwrap();
//! assert_eq!(pareto.mean_class(&cfg).unwrap(), MeanClass::PlusInf);
//! assert_eq!(Distribution::Cauchy.mean_class(&cfg).unwrap(), MeanClass::Undefined);
//! ```
//!
//! # Convex-family orders
//!
//! ```
//! use stochorder::{check_cx, check_cx_dagger, Distribution, QuadConfig};
//!
//! let cfg = QuadConfig::default();
//! let x = Distribution::pareto(0.5).unwrap();
//! let y = Distribution::affine(-1.0, 0.0, x.clone()).unwrap();
//!
//! // The relaxed variant holds both ways; the strict one fails with a
//! // witness at w = 0, where the opposite infinite tails disagree.
//! assert!(check_cx_dagger(&x, &y, &cfg).holds());
//! assert!(check_cx_dagger(&y, &x, &cfg).holds());
//! let v = check_cx(&x, &y, &cfg);
//! assert!(v.fails());
//! assert_eq!(v.witness().unwrap().param, 0.0);
//! ```
//!
//! # Couplings and sums
//!
//! ```
//! use stochorder::couplings::{comonotonic_version, countermono_version, sum_distribution};
//! use stochorder::{check_cx, Distribution, QuadConfig};
//!
//! let cfg = QuadConfig::default();
//! let coin = Distribution::discrete(vec![0.0, 1.0], vec![0.5, 0.5]).unwrap();
//! let co = comonotonic_version(&[coin.clone(), coin.clone()]).unwrap();
//! let ct = countermono_version(&[coin.clone(), coin.clone()]).unwrap();
//!
//! // Counter-monotonic sums sit at the bottom of the convex order,
//! // comonotonic sums at the top — exactly, for discrete marginals.
//! let v = check_cx(&sum_distribution(&ct, &cfg), &sum_distribution(&co, &cfg), &cfg);
//! assert!(v.holds() && v.is_exact());
//! ```
//!
//! # Lattice orders
//!
//! ```
//! use stochorder::multiorder::{check_sm_lattice, LatticeDist};
//!
//! let axes = vec![vec![0.0, 1.0], vec![0.0, 1.0]];
//! let indep = LatticeDist::new(axes.clone(), vec![0.25; 4]).unwrap();
//! let co = LatticeDist::new(axes, vec![0.5, 0.0, 0.0, 0.5]).unwrap();
//! assert!(check_sm_lattice(&indep, &co, 1e-9).unwrap().holds());
//! assert!(!check_sm_lattice(&co, &indep, 1e-9).unwrap().holds());
//! ```
//!
//! # Transport extremes
//!
//! ```
//! use stochorder::ot::{ot_extremes_supermodular, CostFn};
//! use stochorder::{Distribution, MeanClass, QuadConfig};
//!
//! let c = CostFn::by_name("product").unwrap();
//! let u = Distribution::Uniform01;
//! let (min, max) = ot_extremes_supermodular(&u, &u, &c, &QuadConfig::default()).unwrap();
//! // E[U(1-U)] = 1/6 at the counter-monotonic extreme, E[U^2] = 1/3 at
//! // the comonotonic one.
//! match (min, max) {
//!     (MeanClass::Finite(lo), MeanClass::Finite(hi)) => {
//!         assert!((lo - 1.0 / 6.0).abs() < 1e-6);
//!         assert!((hi - 1.0 / 3.0).abs() < 1e-6);
//!     }
//!     other => panic!("unexpected: {other:?}"),
//! }
//! ```
//!
//! # Scenario gallery
//!
//! ```
//! use stochorder::gallery::run_scenario;
//! use stochorder::QuadConfig;
//!
//! let r = run_scenario("example3_cauchy", &QuadConfig::default(), 0, false).unwrap();
//! assert!(r.overall);
//! ```

pub mod couplings;
pub mod dist;
pub mod extmath;
pub mod gallery;
pub mod multiorder;
pub mod orders;
pub mod ot;
pub mod randgen;
pub mod simplex;

pub use dist::{DiscreteLaw, Distribution};
pub use extmath::{ExtReal, MeanClass, QuadConfig};
pub use orders::{
    check_cx, check_cx_dagger, check_dcx, check_icx, check_order, check_st, OrderRelation,
    OrderResult, OrderVerdict,
};
