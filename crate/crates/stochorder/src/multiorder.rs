//! Multivariate order deciders on finite lattices: concordance order by
//! direct cdf/survival comparison, and supermodular order by linear
//! programming over the supermodular cone.
//!
//! On finite support every expectation of a grid function is finite, so the
//! supermodular order and its well-definedness refinements coincide; a
//! single LP verdict serves them all. Comparisons happen on the merged
//! product grid of the two inputs, which is sufficient for step functions.

use crate::couplings::{comonotonic_version, countermono_version, Coupling, CouplingError};
use crate::dist::{DiscreteLaw, Distribution};
use crate::simplex::{solve, LpError, StandardLp};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A finitely supported law on a product grid of ℝ^d.
///
/// `pmf` is row-major over the product of `axes` (last axis fastest).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "LatticeSpec", into = "LatticeSpec")]
pub struct LatticeDist {
    axes: Vec<Vec<f64>>,
    pmf: Vec<f64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice laws need dimension >= 2")]
    DimensionTooLow,
    #[error("axes must be nonempty and strictly increasing")]
    BadAxes,
    #[error("pmf must be nonnegative, match the grid size, and sum to 1")]
    BadPmf,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmError {
    #[error("merged grid has {cells} cells, exceeding the cap of {cap}")]
    GridTooLarge { cells: usize, cap: usize },
    #[error("LP failure: {0}")]
    LpFailure(String),
    #[error("dimension mismatch between the two laws")]
    DimensionMismatch,
}

/// Default cap on merged grid cells for the supermodular LP.
pub const SM_CELL_CAP: usize = 256;

impl LatticeDist {
    pub fn new(axes: Vec<Vec<f64>>, pmf: Vec<f64>) -> Result<Self, LatticeError> {
        if axes.len() < 2 {
            return Err(LatticeError::DimensionTooLow);
        }
        for ax in &axes {
            if ax.is_empty()
                || ax.iter().any(|v| !v.is_finite())
                || ax.windows(2).any(|w| w[0] >= w[1])
            {
                return Err(LatticeError::BadAxes);
            }
        }
        let cells: usize = axes.iter().map(|a| a.len()).product();
        if pmf.len() != cells
            || pmf.iter().any(|p| !p.is_finite() || *p < 0.0)
            || (pmf.iter().sum::<f64>() - 1.0).abs() > 1e-12
        {
            return Err(LatticeError::BadPmf);
        }
        Ok(LatticeDist { axes, pmf })
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Vec<f64>] {
        &self.axes
    }

    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.len()).collect()
    }

    fn cells(&self) -> usize {
        self.pmf.len()
    }

    /// Weights of the i-th one-dimensional marginal, aligned with `axes[i]`.
    pub fn marginal(&self, i: usize) -> Vec<f64> {
        let shape = self.shape();
        let mut out = vec![0.0; shape[i]];
        for (flat, p) in self.pmf.iter().enumerate() {
            out[unflatten(flat, &shape)[i]] += p;
        }
        out
    }

    /// `P(X_j ≤ axes[j][k_j] for all j)` at a grid multi-index.
    pub fn cdf_at(&self, k: &[usize]) -> f64 {
        let shape = self.shape();
        self.pmf
            .iter()
            .enumerate()
            .filter(|(flat, _)| {
                unflatten(*flat, &shape)
                    .iter()
                    .zip(k)
                    .all(|(i, kk)| i <= kk)
            })
            .map(|(_, p)| p)
            .sum()
    }

    /// `P(X_j > axes[j][k_j] for all j)` at a grid multi-index.
    pub fn survival_at(&self, k: &[usize]) -> f64 {
        self.survival_at_ext(&k.iter().map(|&v| v as isize).collect::<Vec<_>>())
    }

    /// Survival with extended thresholds: level `−1` places the threshold
    /// below the axis minimum, i.e. leaves that coordinate unconstrained.
    /// These levels are needed for completeness — at `d ≥ 3`, upper-orthant
    /// probabilities of coordinate subsets appear only there.
    pub fn survival_at_ext(&self, k: &[isize]) -> f64 {
        let shape = self.shape();
        self.pmf
            .iter()
            .enumerate()
            .filter(|(flat, _)| {
                unflatten(*flat, &shape)
                    .iter()
                    .zip(k)
                    .all(|(i, kk)| *kk < 0 || (*i as isize) > *kk)
            })
            .map(|(_, p)| p)
            .sum()
    }

    /// Re-index onto a larger product grid whose axes contain this law's
    /// axes.
    fn reindex(&self, axes: &[Vec<f64>]) -> LatticeDist {
        let shape = self.shape();
        let new_shape: Vec<usize> = axes.iter().map(|a| a.len()).collect();
        let mut pmf = vec![0.0; new_shape.iter().product()];
        for (flat, p) in self.pmf.iter().enumerate() {
            if *p == 0.0 {
                continue;
            }
            let idx = unflatten(flat, &shape);
            let new_idx: Vec<usize> = idx
                .iter()
                .enumerate()
                .map(|(d, &k)| {
                    let v = self.axes[d][k];
                    axes[d]
                        .iter()
                        .position(|a| *a == v)
                        .expect("merged axes contain all original values")
                })
                .collect();
            pmf[flatten(&new_idx, &new_shape)] += p;
        }
        LatticeDist {
            axes: axes.to_vec(),
            pmf,
        }
    }
}

fn unflatten(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for d in (0..shape.len()).rev() {
        idx[d] = flat % shape[d];
        flat /= shape[d];
    }
    idx
}

fn flatten(idx: &[usize], shape: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (i, n)| acc * n + i)
}

/// Union the axes of two laws and re-index both.
pub fn merge_grids(a: &LatticeDist, b: &LatticeDist) -> Option<(LatticeDist, LatticeDist)> {
    if a.dim() != b.dim() {
        return None;
    }
    let axes: Vec<Vec<f64>> = (0..a.dim())
        .map(|d| {
            let mut ax: Vec<f64> = a.axes[d].iter().chain(&b.axes[d]).copied().collect();
            ax.sort_by(|x, y| x.partial_cmp(y).unwrap());
            ax.dedup();
            ax
        })
        .collect();
    Some((a.reindex(&axes), b.reindex(&axes)))
}

/// Exact equality of all one-dimensional marginals after grid merging.
pub fn marginals_equal(a: &LatticeDist, b: &LatticeDist) -> bool {
    let Some((a, b)) = merge_grids(a, b) else {
        return false;
    };
    (0..a.dim()).all(|d| {
        a.marginal(d)
            .iter()
            .zip(b.marginal(d))
            .all(|(x, y)| (x - y).abs() <= 1e-12)
    })
}

/// Where a lattice comparison failed.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "channel", rename_all = "lowercase")]
pub enum LatticeChannel {
    Cdf,
    Survival,
    Marginal { dim: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeWitness {
    pub point: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(flatten)]
    pub channel: LatticeChannel,
}

/// Verdict of a lattice order check. Always exact: the merged grid is a
/// complete probe set for step functions.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LatticeVerdict {
    Holds,
    Fails { witness: LatticeWitness },
}

impl LatticeVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, LatticeVerdict::Holds)
    }
}

fn marginal_mismatch_witness(a: &LatticeDist, b: &LatticeDist) -> Option<LatticeWitness> {
    let (a, b) = merge_grids(a, b)?;
    for d in 0..a.dim() {
        let (ma, mb) = (a.marginal(d), b.marginal(d));
        for (k, (x, y)) in ma.iter().zip(&mb).enumerate() {
            if (x - y).abs() > 1e-12 {
                return Some(LatticeWitness {
                    point: vec![a.axes[d][k]],
                    lhs: *x,
                    rhs: *y,
                    channel: LatticeChannel::Marginal { dim: d },
                });
            }
        }
    }
    None
}

/// Concordance order `A ≤c B`: joint cdf and joint survival of `A` are
/// dominated by those of `B` at every merged grid point.
pub fn check_concordance(a: &LatticeDist, b: &LatticeDist) -> LatticeVerdict {
    if let Some(witness) = marginal_mismatch_witness(a, b) {
        return LatticeVerdict::Fails { witness };
    }
    let (a, b) = merge_grids(a, b).expect("dimensions matched during the marginal check");
    let shape = a.shape();
    for flat in 0..a.cells() {
        let k = unflatten(flat, &shape);
        let point: Vec<f64> = k.iter().enumerate().map(|(d, &i)| a.axes[d][i]).collect();
        let (fa, fb) = (a.cdf_at(&k), b.cdf_at(&k));
        if fa > fb + 1e-12 {
            return LatticeVerdict::Fails {
                witness: LatticeWitness {
                    point,
                    lhs: fa,
                    rhs: fb,
                    channel: LatticeChannel::Cdf,
                },
            };
        }
    }
    // survival thresholds additionally range over a virtual level below
    // each axis minimum (coordinate unconstrained); cdf needs no such
    // extension because the top grid level already absorbs a coordinate
    let ext_shape: Vec<usize> = shape.iter().map(|n| n + 1).collect();
    let ext_cells: usize = ext_shape.iter().product();
    for flat in 0..ext_cells {
        let k: Vec<isize> = unflatten(flat, &ext_shape)
            .iter()
            .map(|&i| i as isize - 1)
            .collect();
        let (sa, sb) = (a.survival_at_ext(&k), b.survival_at_ext(&k));
        if sa > sb + 1e-12 {
            let point: Vec<f64> = k
                .iter()
                .enumerate()
                .map(|(d, &i)| {
                    if i < 0 {
                        a.axes[d][0] - 1.0
                    } else {
                        a.axes[d][i as usize]
                    }
                })
                .collect();
            return LatticeVerdict::Fails {
                witness: LatticeWitness {
                    point,
                    lhs: sa,
                    rhs: sb,
                    channel: LatticeChannel::Survival,
                },
            };
        }
    }
    LatticeVerdict::Holds
}

/// A real function on a product grid; the test-function certificates of
/// supermodular failures live here.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeFn {
    pub axes: Vec<Vec<f64>>,
    /// row-major over the product grid, last axis fastest
    pub values: Vec<f64>,
}

impl LatticeFn {
    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.len()).collect()
    }

    /// All adjacent mixed second differences are ≥ −tol.
    pub fn is_supermodular(&self, tol: f64) -> bool {
        let shape = self.shape();
        for (base, ei, ej) in mixed_difference_cells(&shape) {
            let d = self.values[base + ei + ej] - self.values[base + ei] - self.values[base + ej]
                + self.values[base];
            if d < -tol {
                return false;
            }
        }
        true
    }

    /// `E_D[φ]` by direct summation; the law must live on the same axes.
    pub fn expectation(&self, d: &LatticeDist) -> f64 {
        assert_eq!(self.axes, d.axes, "certificate and law must share a grid");
        self.values.iter().zip(&d.pmf).map(|(v, p)| v * p).sum()
    }
}

/// Enumerate (flat base index, stride_i, stride_j) for every adjacent mixed
/// second difference of a grid of the given shape.
fn mixed_difference_cells(shape: &[usize]) -> Vec<(usize, usize, usize)> {
    let d = shape.len();
    let mut strides = vec![1usize; d];
    for k in (0..d.saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * shape[k + 1];
    }
    let cells: usize = shape.iter().product();
    let mut out = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            for flat in 0..cells {
                let idx = unflatten(flat, shape);
                if idx[i] + 1 < shape[i] && idx[j] + 1 < shape[j] {
                    out.push((flat, strides[i], strides[j]));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmCertificate {
    /// A supermodular test function with `E_A[φ] > E_B[φ]`.
    pub phi: LatticeFn,
    /// `E_A[φ] − E_B[φ]`, recomputed by direct summation.
    pub gap: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SmVerdict {
    Holds,
    Fails { certificate: SmCertificate },
}

impl SmVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SmVerdict::Holds)
    }
}

/// Supermodular order `A ≤sm B` on the merged grid, by minimizing
/// `E_B[φ] − E_A[φ]` over supermodular `φ` with values in `[−1, 1]`.
///
/// The cone is scale-invariant, so the clamp loses nothing: any violation
/// scales into the box. A marginal mismatch fails immediately (equal
/// marginals are part of the order's definition); a Fails verdict carries
/// the minimizing `φ`, re-verified supermodular and re-summed directly.
pub fn check_sm_lattice(a: &LatticeDist, b: &LatticeDist, tol: f64) -> Result<SmVerdict, SmError> {
    if a.dim() != b.dim() {
        return Err(SmError::DimensionMismatch);
    }
    if let Some(witness) = marginal_mismatch_witness(a, b) {
        // any marginal gap is already a supermodular-order failure: ±x_d
        // and constants are supermodular
        let (am, bm) = merge_grids(a, b).unwrap();
        let d = match witness.channel {
            LatticeChannel::Marginal { dim } => dim,
            _ => unreachable!(),
        };
        let shape = am.shape();
        let sign = if witness.lhs > witness.rhs { 1.0 } else { -1.0 };
        // indicator-style marginal separator: φ(x) = ±1{x_d ≥ v}
        let values: Vec<f64> = (0..am.cells())
            .map(|flat| {
                let k = unflatten(flat, &shape)[d];
                if am.axes[d][k] >= witness.point[0] {
                    sign
                } else {
                    0.0
                }
            })
            .collect();
        let phi = LatticeFn {
            axes: am.axes.clone(),
            values,
        };
        let gap = phi.expectation(&am) - phi.expectation(&bm);
        return Ok(SmVerdict::Fails {
            certificate: SmCertificate { phi, gap },
        });
    }
    let (a, b) = merge_grids(a, b).unwrap();
    let cells = a.cells();
    if cells > SM_CELL_CAP {
        return Err(SmError::GridTooLarge {
            cells,
            cap: SM_CELL_CAP,
        });
    }
    let shape = a.shape();
    let diffs = mixed_difference_cells(&shape);
    let m = diffs.len();

    // Variables: y = φ + 1 ∈ [0,2] (cells), slack s per cone constraint,
    // slack t per upper bound. Shifting by 1 leaves second differences and
    // the objective untouched (the pmfs share total mass), and makes
    // (y, s, t) = (0, 0, 2) a feasible starting basis.
    let n_vars = 2 * cells + m;
    let mut costs = vec![0.0; n_vars];
    for c in 0..cells {
        costs[c] = b.pmf[c] - a.pmf[c];
    }
    let mut rows = Vec::with_capacity(m + cells);
    let mut rhs = Vec::with_capacity(m + cells);
    let mut basis = Vec::with_capacity(m + cells);
    for (k, (base, si, sj)) in diffs.iter().enumerate() {
        // −(Δ_iΔ_j y) + s = 0, s basic
        let mut row = vec![0.0; n_vars];
        row[*base] -= 1.0;
        row[base + si] += 1.0;
        row[base + sj] += 1.0;
        row[base + si + sj] -= 1.0;
        row[cells + k] = 1.0;
        rows.push(row);
        rhs.push(0.0);
        basis.push(cells + k);
    }
    for c in 0..cells {
        let mut row = vec![0.0; n_vars];
        row[c] = 1.0;
        row[cells + m + c] = 1.0;
        rows.push(row);
        rhs.push(2.0);
        basis.push(cells + m + c);
    }
    let sol = solve(StandardLp {
        costs,
        rows,
        rhs,
        basis,
    })
    .map_err(|e: LpError| SmError::LpFailure(e.to_string()))?;

    if sol.objective >= -tol {
        return Ok(SmVerdict::Holds);
    }
    let phi = LatticeFn {
        axes: a.axes.clone(),
        values: sol.x[..cells].iter().map(|y| y - 1.0).collect(),
    };
    if !phi.is_supermodular(1e-12) {
        return Err(SmError::LpFailure(
            "certificate violates the supermodular cone".into(),
        ));
    }
    let gap = phi.expectation(&a) - phi.expectation(&b);
    if gap <= tol / 2.0 {
        return Err(SmError::LpFailure(
            "certificate gap vanished on re-summation".into(),
        ));
    }
    Ok(SmVerdict::Fails {
        certificate: SmCertificate { phi, gap },
    })
}

/// Build a lattice law from weighted points (axes form the product grid of
/// observed coordinates).
pub fn lattice_from_points(
    points: &[Vec<f64>],
    masses: &[f64],
) -> Result<LatticeDist, LatticeError> {
    let d = points.first().map_or(0, |p| p.len());
    if d < 2 {
        return Err(LatticeError::DimensionTooLow);
    }
    let axes: Vec<Vec<f64>> = (0..d)
        .map(|i| {
            let mut ax: Vec<f64> = points.iter().map(|p| p[i]).collect();
            ax.sort_by(|a, b| a.partial_cmp(b).unwrap());
            ax.dedup();
            ax
        })
        .collect();
    let shape: Vec<usize> = axes.iter().map(|a| a.len()).collect();
    let mut pmf = vec![0.0; shape.iter().product()];
    for (p, m) in points.iter().zip(masses) {
        let idx: Vec<usize> = p
            .iter()
            .enumerate()
            .map(|(i, v)| axes[i].iter().position(|a| a == v).unwrap())
            .collect();
        pmf[flatten(&idx, &shape)] += m;
    }
    LatticeDist::new(axes, pmf)
}

/// Independent product of one-dimensional lattice marginals.
pub fn independent_lattice(marginals: &[DiscreteLaw]) -> Result<LatticeDist, LatticeError> {
    let axes: Vec<Vec<f64>> = marginals.iter().map(|m| m.atoms().to_vec()).collect();
    let shape: Vec<usize> = axes.iter().map(|a| a.len()).collect();
    let cells: usize = shape.iter().product();
    let pmf = (0..cells)
        .map(|flat| {
            unflatten(flat, &shape)
                .iter()
                .enumerate()
                .map(|(d, &k)| marginals[d].probs()[k])
                .product()
        })
        .collect();
    LatticeDist::new(axes, pmf)
}

/// Exact lattice joint of a single-uniform coupling, given the partition of
/// `(0,1)` on which all maps are constant.
fn lattice_of_umaps(c: &Coupling, mut breaks: Vec<f64>) -> Result<LatticeDist, LatticeError> {
    breaks.push(0.0);
    breaks.push(1.0);
    breaks.retain(|u| (0.0..=1.0).contains(u));
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.dedup();
    let mut points = Vec::new();
    let mut masses = Vec::new();
    for w in breaks.windows(2) {
        if w[1] - w[0] > 1e-15 {
            points.push(c.point_at(0.5 * (w[0] + w[1])).expect("UMaps coupling"));
            masses.push(w[1] - w[0]);
        }
    }
    lattice_from_points(&points, &masses)
}

fn cum_levels(m: &DiscreteLaw) -> Vec<f64> {
    let mut acc = 0.0;
    m.probs()[..m.probs().len() - 1]
        .iter()
        .map(|p| {
            acc += p;
            acc
        })
        .collect()
}

/// Exact comonotonic lattice joint of discrete marginals.
pub fn comonotonic_lattice(marginals: &[DiscreteLaw]) -> Result<LatticeDist, LatticeError> {
    let ds: Vec<Distribution> = marginals
        .iter()
        .map(|m| Distribution::Discrete(m.clone()))
        .collect();
    let c = comonotonic_version(&ds).map_err(|_| LatticeError::DimensionTooLow)?;
    let breaks: Vec<f64> = marginals.iter().flat_map(cum_levels).collect();
    lattice_of_umaps(&c, breaks)
}

/// Exact counter-monotonic lattice joint of discrete marginals, when one
/// exists.
pub fn countermono_lattice(marginals: &[DiscreteLaw]) -> Result<LatticeDist, CouplingError> {
    let ds: Vec<Distribution> = marginals
        .iter()
        .map(|m| Distribution::Discrete(m.clone()))
        .collect();
    let c = countermono_version(&ds)?;
    // the transport maps are constant between these u-levels: direct and
    // reflected marginal cumulatives, plus every interval boundary of the
    // d ≥ 3 construction
    let mut breaks = Vec::new();
    for m in marginals {
        for lv in cum_levels(m) {
            breaks.push(lv);
            breaks.push(1.0 - lv);
        }
    }
    let (mut low_edge, mut high_edge) = (0.0, 0.0);
    for m in marginals {
        let p = 1.0 - m.probs()[0];
        let q = 1.0 - m.probs()[m.probs().len() - 1];
        for lv in cum_levels(m) {
            breaks.push(low_edge + lv - (1.0 - p));
            breaks.push(high_edge + lv);
        }
        low_edge += p;
        high_edge += q;
        breaks.push(low_edge);
        breaks.push(high_edge);
    }
    lattice_of_umaps(&c, breaks).map_err(|_| CouplingError::Empty)
}

/// Randomized search for a pair that is concordance-ordered but not
/// supermodular-ordered (possible only in dimension ≥ 3).
///
/// Pairs share marginals by construction: both laws are reachable from the
/// same independent product by mass moves on coordinate-pair rectangles,
/// which preserve every one-dimensional marginal. Returned instances are
/// re-verified by both checkers.
pub fn search_concordance_not_sm(
    dim: usize,
    grid_size: usize,
    rng_seed: u64,
    budget: usize,
) -> Option<(LatticeDist, LatticeDist)> {
    if dim < 3 || grid_size < 2 || budget == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let axes: Vec<Vec<f64>> = (0..dim)
        .map(|_| (0..grid_size).map(|k| k as f64).collect())
        .collect();
    let shape: Vec<usize> = vec![grid_size; dim];
    let cells: usize = shape.iter().product();

    for _ in 0..budget {
        // random strictly positive base pmf
        let mut base: Vec<f64> = (0..cells).map(|_| rng.gen_range(1.0..4.0)).collect();
        let total: f64 = base.iter().sum();
        base.iter_mut().for_each(|p| *p /= total);
        let a = perturb(&base, &shape, &mut rng);
        let b = perturb(&base, &shape, &mut rng);
        let (Ok(a), Ok(b)) = (
            LatticeDist::new(axes.clone(), a),
            LatticeDist::new(axes.clone(), b),
        ) else {
            continue;
        };
        for (x, y) in [(&a, &b), (&b, &a)] {
            if check_concordance(x, y).holds() {
                if let Ok(SmVerdict::Fails { .. }) = check_sm_lattice(x, y, 1e-9) {
                    // re-verify before returning
                    if check_concordance(x, y).holds()
                        && matches!(check_sm_lattice(x, y, 1e-9), Ok(SmVerdict::Fails { .. }))
                    {
                        return Some((x.clone(), y.clone()));
                    }
                }
            }
        }
    }
    None
}

/// Apply a few random signed rectangle moves: ±ε on the diagonal corners of
/// a coordinate-pair rectangle and ∓ε on its anti-diagonal, all other
/// coordinates fixed. Every move preserves all 1-D marginals.
fn perturb(base: &[f64], shape: &[usize], rng: &mut ChaCha8Rng) -> Vec<f64> {
    let d = shape.len();
    let mut strides = vec![1usize; d];
    for k in (0..d - 1).rev() {
        strides[k] = strides[k + 1] * shape[k + 1];
    }
    let mut pmf = base.to_vec();
    let n_moves = rng.gen_range(1..=4);
    for _ in 0..n_moves {
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let idx: Vec<usize> = shape.iter().map(|&n| rng.gen_range(0..n)).collect();
        if idx[i] + 1 >= shape[i] || idx[j] + 1 >= shape[j] {
            continue;
        }
        let base_flat = flatten(&idx, shape);
        let (si, sj) = (strides[i], strides[j]);
        let corners = [base_flat, base_flat + si + sj]; // diagonal
        let anti = [base_flat + si, base_flat + sj];
        let room = if rng.gen_bool(0.5) {
            // push mass toward the diagonal
            let eps = anti.iter().map(|&c| pmf[c]).fold(f64::INFINITY, f64::min)
                * rng.gen_range(0.2..1.0);
            for &c in &corners {
                pmf[c] += eps;
            }
            for &c in &anti {
                pmf[c] -= eps;
            }
            eps
        } else {
            let eps = corners.iter().map(|&c| pmf[c]).fold(f64::INFINITY, f64::min)
                * rng.gen_range(0.2..1.0);
            for &c in &corners {
                pmf[c] -= eps;
            }
            for &c in &anti {
                pmf[c] += eps;
            }
            eps
        };
        let _ = room;
    }
    pmf
}

/// JSON wire form: axes plus a possibly nested pmf tensor (row-major).
#[derive(Clone, Debug, Serialize, Deserialize)]
struct LatticeSpec {
    axes: Vec<Vec<f64>>,
    pmf: serde_json::Value,
}

fn flatten_json(v: &serde_json::Value, out: &mut Vec<f64>) -> Result<(), String> {
    match v {
        serde_json::Value::Array(items) => {
            for item in items {
                flatten_json(item, out)?;
            }
            Ok(())
        }
        serde_json::Value::Number(n) => {
            out.push(n.as_f64().ok_or("non-finite pmf entry")?);
            Ok(())
        }
        other => Err(format!("pmf entries must be numbers or arrays, got {other}")),
    }
}

impl TryFrom<LatticeSpec> for LatticeDist {
    type Error = String;
    fn try_from(spec: LatticeSpec) -> Result<Self, String> {
        let mut pmf = Vec::new();
        flatten_json(&spec.pmf, &mut pmf)?;
        LatticeDist::new(spec.axes, pmf).map_err(|e| e.to_string())
    }
}

impl From<LatticeDist> for LatticeSpec {
    fn from(d: LatticeDist) -> LatticeSpec {
        LatticeSpec {
            axes: d.axes,
            pmf: serde_json::json!(d.pmf),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bern(p: f64) -> DiscreteLaw {
        DiscreteLaw::new(vec![0.0, 1.0], vec![1.0 - p, p]).unwrap()
    }

    #[test]
    fn marginals_and_merge() {
        let a = independent_lattice(&[bern(0.3), bern(0.3)]).unwrap();
        let b = comonotonic_lattice(&[bern(0.3), bern(0.3)]).unwrap();
        assert!(marginals_equal(&a, &b));
        let c = independent_lattice(&[bern(0.5), bern(0.5)]).unwrap();
        assert!(!marginals_equal(&a, &c));
        assert!(marginals_equal(&a, &a));
    }

    #[test]
    fn comonotonic_lattice_mass() {
        let j = comonotonic_lattice(&[bern(0.3), bern(0.5)]).unwrap();
        // comonotonic (Bern(0.3), Bern(0.5)): P(0,0)=0.5, P(0,1)=0.2, P(1,1)=0.3
        assert_eq!(j.shape(), vec![2, 2]);
        let p = j.pmf();
        assert!((p[0] - 0.5).abs() < 1e-12);
        assert!((p[1] - 0.2).abs() < 1e-12);
        assert!((p[2] - 0.0).abs() < 1e-12);
        assert!((p[3] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn countermono_lattice_mass() {
        let j = countermono_lattice(&[bern(0.3), bern(0.5)]).unwrap();
        // counter-monotonic: P(1, 0) = 0.3, P(0,1)=0.5, P(0,0)=0.2
        let p = j.pmf();
        assert!((p[0] - 0.2).abs() < 1e-12, "{p:?}");
        assert!((p[1] - 0.5).abs() < 1e-12);
        assert!((p[2] - 0.3).abs() < 1e-12);
        assert!((p[3] - 0.0).abs() < 1e-12);
        // three-marginal low construction
        let j = countermono_lattice(&[bern(0.3), bern(0.3), bern(0.3)]).unwrap();
        let mass: f64 = j.pmf().iter().sum();
        assert!((mass - 1.0).abs() < 1e-12);
        assert_eq!(j.pmf().iter().filter(|p| **p > 1e-12).count(), 4);
    }

    #[test]
    fn concordance_examples() {
        let ind = independent_lattice(&[bern(0.5), bern(0.5)]).unwrap();
        let co = comonotonic_lattice(&[bern(0.5), bern(0.5)]).unwrap();
        let ct = countermono_lattice(&[bern(0.5), bern(0.5)]).unwrap();
        assert!(check_concordance(&ind, &co).holds());
        assert!(check_concordance(&ct, &ind).holds());
        assert!(check_concordance(&ind, &ind).holds());
        match check_concordance(&co, &ct) {
            LatticeVerdict::Fails { witness } => {
                assert_eq!(witness.point, vec![0.0, 0.0]);
            }
            _ => panic!("comonotonic is not below counter-monotonic"),
        }
    }

    #[test]
    fn sm_examples() {
        let ind = independent_lattice(&[bern(0.5), bern(0.5)]).unwrap();
        let co = comonotonic_lattice(&[bern(0.5), bern(0.5)]).unwrap();
        let ct = countermono_lattice(&[bern(0.5), bern(0.5)]).unwrap();
        assert!(check_sm_lattice(&ind, &co, 1e-9).unwrap().holds());
        assert!(check_sm_lattice(&ct, &ind, 1e-9).unwrap().holds());
        match check_sm_lattice(&co, &ct, 1e-9).unwrap() {
            SmVerdict::Fails { certificate } => {
                assert!(certificate.phi.is_supermodular(1e-12));
                assert!(certificate.gap > 0.0);
                // cross-check against E[XY]: 0.25 under co, 0 under ct
                let product = LatticeFn {
                    axes: certificate.phi.axes.clone(),
                    values: vec![0.0, 0.0, 0.0, 1.0],
                };
                let (a, b) = merge_grids(&co, &ct).unwrap();
                assert!(product.expectation(&a) - product.expectation(&b) > 0.2);
            }
            _ => panic!("expected sm failure"),
        }
    }

    #[test]
    fn sm_three_bernoulli_countermono_below_independent() {
        let m = [bern(0.3), bern(0.3), bern(0.3)];
        let ct = countermono_lattice(&m).unwrap();
        let ind = independent_lattice(&m).unwrap();
        assert!(check_sm_lattice(&ct, &ind, 1e-9).unwrap().holds());
    }

    #[test]
    fn sm_implies_concordance_and_d2_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let shape = vec![4usize, 4usize];
        let axes = vec![
            vec![0.0, 1.0, 2.0, 3.0],
            vec![0.0, 1.0, 2.0, 3.0],
        ];
        let mut agreements = 0;
        for _ in 0..100 {
            let mut base: Vec<f64> = (0..16).map(|_| rng.gen_range(1.0..4.0)).collect();
            let t: f64 = base.iter().sum();
            base.iter_mut().for_each(|p| *p /= t);
            let a = LatticeDist::new(axes.clone(), perturb(&base, &shape, &mut rng)).unwrap();
            let b = LatticeDist::new(axes.clone(), perturb(&base, &shape, &mut rng)).unwrap();
            let conc = check_concordance(&a, &b).holds();
            let sm = check_sm_lattice(&a, &b, 1e-9).unwrap().holds();
            assert_eq!(conc, sm, "orders must agree in dimension 2");
            agreements += 1;
        }
        assert_eq!(agreements, 100);
    }

    #[test]
    fn search_finds_dim3_separation_and_rejects_dim2() {
        assert!(search_concordance_not_sm(2, 2, 1, 1000).is_none());
        assert!(search_concordance_not_sm(3, 3, 1, 0).is_none());
        let found = search_concordance_not_sm(3, 3, 7, 10_000);
        let (a, b) = found.expect("dimension 3 separates the orders");
        assert!(check_concordance(&a, &b).holds());
        assert!(matches!(
            check_sm_lattice(&a, &b, 1e-9),
            Ok(SmVerdict::Fails { .. })
        ));
    }

    #[test]
    fn grid_cap_is_enforced() {
        let n = 17;
        let axes: Vec<Vec<f64>> = (0..2).map(|_| (0..n).map(|k| k as f64).collect()).collect();
        let pmf = vec![1.0 / (n * n) as f64; n * n];
        let d = LatticeDist::new(axes, pmf).unwrap();
        assert!(matches!(
            check_sm_lattice(&d, &d, 1e-9),
            Err(SmError::GridTooLarge { .. })
        ));
    }

    #[test]
    fn json_round_trip_nested_and_flat() {
        let txt = r#"{"axes":[[0,1],[0,1]],"pmf":[[0.25,0.25],[0.25,0.25]]}"#;
        let d: LatticeDist = serde_json::from_str(txt).unwrap();
        assert_eq!(d.pmf(), &[0.25; 4]);
        let txt2 = serde_json::to_string(&d).unwrap();
        let d2: LatticeDist = serde_json::from_str(&txt2).unwrap();
        assert_eq!(d, d2);
        assert!(serde_json::from_str::<LatticeDist>(
            r#"{"axes":[[0,1],[0,1]],"pmf":[0.5,0.5]}"#
        )
        .is_err());
    }
}
