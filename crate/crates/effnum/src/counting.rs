//! Counting functions and the measures built from them.
//!
//! An effective number function assigns a consistent total to a weighted
//! collection. Every such function is additively separable: it is the sum of a
//! one-variable *counting function* `𝔫(w)` that is concave, continuous,
//! `𝔫(0) = 0`, and `𝔫(w) = 1` for `w ≥ 1`. [`CountingFunctionSpec`] describes
//! the counting functions shipped here:
//!
//! * `min{w, 1}` — the minimal effective number, the least element of the
//!   whole family;
//! * `min{w^α, 1}` for `α ∈ (0, 1]` — a one-parameter family interpolating
//!   between the minimal count (`α = 1`) and the support count (`α → 0⁺`);
//! * the support indicator `1_{w>0}` — the supremum of the family, kept
//!   evaluable although its discontinuity disqualifies it;
//! * user-supplied concave tables, interpolated piecewise-linearly.
//!
//! Comparison measures that are *not* additive (participation number,
//! exponentiated Shannon entropy) live here as well.

use crate::error::{Error, Result};
use crate::weights::{CountingVector, GeneralWeights, ProbabilityVector};

/// Alpha grid used by default wherever a family sweep is wanted.
pub const DEFAULT_ALPHA_GRID: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

/// Slack allowed when validating monotonicity/concavity of tabulated knots.
const TABLE_SLACK: f64 = 1e-9;

/// Piecewise-linear concave table on `[0, 1]`, extended by 1 beyond.
#[derive(Clone, Debug, PartialEq)]
pub struct TabulatedFn {
    /// Knots sorted by weight; first is exactly `(0, 0)`, last has `w ≥ 1`.
    knots: Vec<(f64, f64)>,
}

impl TabulatedFn {
    fn new(mut knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::BadTable("no knots given".into()));
        }
        for &(w, v) in &knots {
            if !w.is_finite() || !v.is_finite() {
                return Err(Error::BadTable(format!("non-finite knot ({w}, {v})")));
            }
            if w < 0.0 {
                return Err(Error::BadTable(format!("negative knot weight {w}")));
            }
        }
        knots.sort_by(|a, b| a.0.total_cmp(&b.0));
        knots.dedup();
        for pair in knots.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::BadTable(format!(
                    "two values at the same weight {}",
                    pair[0].0
                )));
            }
        }
        if knots[0] != (0.0, 0.0) {
            return Err(Error::BadTable(format!(
                "knots must begin at (0, 0), got ({}, {})",
                knots[0].0, knots[0].1
            )));
        }
        // All knots at w >= 1 must carry the value 1; store exactly 1 there.
        for knot in knots.iter_mut().filter(|k| k.0 >= 1.0) {
            if (knot.1 - 1.0).abs() > TABLE_SLACK {
                return Err(Error::BadTable(format!(
                    "knot at w = {} has value {}, expected 1",
                    knot.0, knot.1
                )));
            }
            knot.1 = 1.0;
        }
        // The counting-function class is identically 1 on [1, ∞); close the
        // table with that knot if the caller stopped short of it.
        if knots.last().unwrap().0 < 1.0 {
            knots.push((1.0, 1.0));
        }
        for pair in knots.windows(2) {
            if pair[1].1 < pair[0].1 - TABLE_SLACK {
                return Err(Error::BadTable(format!(
                    "values decrease between w = {} and w = {}",
                    pair[0].0, pair[1].0
                )));
            }
        }
        // Concavity on the knot grid: successive chord slopes nonincreasing.
        let mut prev_slope = f64::INFINITY;
        for pair in knots.windows(2) {
            let slope = (pair[1].1 - pair[0].1) / (pair[1].0 - pair[0].0);
            if slope > prev_slope + TABLE_SLACK {
                return Err(Error::BadTable(format!(
                    "not concave on the knot grid near w = {}",
                    pair[0].0
                )));
            }
            prev_slope = slope;
        }
        Ok(Self { knots })
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    fn eval(&self, w: f64) -> f64 {
        if w >= 1.0 {
            return 1.0;
        }
        if w <= 0.0 {
            return 0.0;
        }
        // knots[0].0 = 0 <= w < 1 <= knots[last].0, so the segment exists.
        let hi = self.knots.partition_point(|k| k.0 <= w);
        let (w0, v0) = self.knots[hi - 1];
        if w0 == w {
            return v0; // exact knot hit, no interpolation error
        }
        let (w1, v1) = self.knots[hi];
        v0 + (w - w0) * (v1 - v0) / (w1 - w0)
    }
}

/// Specification of a one-variable counting function.
#[derive(Clone, Debug, PartialEq)]
pub struct CountingFunctionSpec {
    kind: Kind,
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    MinimalStar,
    Alpha(f64),
    SupportPlus,
    Tabulated(TabulatedFn),
}

impl CountingFunctionSpec {
    /// `𝔫⋆(w) = min{w, 1}`, the counting function of the minimal effective
    /// number.
    pub fn minimal_star() -> Self {
        Self {
            kind: Kind::MinimalStar,
        }
    }

    /// `𝔫_α(w) = min{w^α, 1}` with `0^α = 0`, valid for `α ∈ (0, 1]`.
    ///
    /// `α = 1` evaluates through the same code path as
    /// [`minimal_star`](Self::minimal_star), so the two agree bitwise.
    pub fn alpha(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha > 1.0 {
            return Err(Error::BadAlpha(alpha));
        }
        Ok(Self {
            kind: Kind::Alpha(alpha),
        })
    }

    /// Indicator of `w > 0`. Counts non-zero weights exactly (no epsilon
    /// threshold); not an effective number function — it is discontinuous —
    /// but evaluable as the supremum of the family.
    pub fn support_plus() -> Self {
        Self {
            kind: Kind::SupportPlus,
        }
    }

    /// Piecewise-linear interpolation of concave knot data. Knots must begin
    /// at `(0, 0)`, be nondecreasing, midpoint-concave on the knot grid, and
    /// equal 1 at every knot with `w ≥ 1`.
    pub fn tabulated(knots: Vec<(f64, f64)>) -> Result<Self> {
        Ok(Self {
            kind: Kind::Tabulated(TabulatedFn::new(knots)?),
        })
    }

    /// Whether this spec lies in the effective-number family (concave,
    /// continuous, correctly pinned at 0 and 1).
    pub fn is_enf(&self) -> bool {
        !matches!(self.kind, Kind::SupportPlus)
    }

    pub fn as_tabulated(&self) -> Option<&TabulatedFn> {
        match &self.kind {
            Kind::Tabulated(t) => Some(t),
            _ => None,
        }
    }

    /// Display name, matching the CLI measure syntax.
    pub fn name(&self) -> String {
        match &self.kind {
            Kind::MinimalStar => "n_star".into(),
            Kind::Alpha(a) => format!("alpha:{a}"),
            Kind::SupportPlus => "n_plus".into(),
            Kind::Tabulated(t) => format!("tabulated[{}]", t.knots.len()),
        }
    }

    /// Evaluates the counting function at a single weight.
    pub fn eval(&self, w: f64) -> f64 {
        match &self.kind {
            Kind::MinimalStar => w.min(1.0),
            Kind::Alpha(a) => {
                if w >= 1.0 {
                    1.0
                } else if w <= 0.0 {
                    0.0
                } else if *a == 1.0 {
                    w
                } else {
                    w.powf(*a).min(1.0)
                }
            }
            Kind::SupportPlus => {
                if w > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Kind::Tabulated(t) => t.eval(w),
        }
    }

    /// Separable evaluation `Σ 𝔫(w_i)` over a weight slice.
    ///
    /// Terms are summed in ascending order of weight; this stabilizes the
    /// floating-point result and makes permutation symmetry bitwise exact.
    pub fn sum_over(&self, weights: &[f64]) -> f64 {
        let mut sorted = weights.to_vec();
        sorted.sort_unstable_by(f64::total_cmp);
        sorted.iter().map(|&w| self.eval(w)).sum()
    }
}

/// `𝒩[W̃] = Σ_j 𝔫(w̃_j)` on the unconstrained weight domain.
pub fn eval_separable(f: &CountingFunctionSpec, w: &GeneralWeights) -> f64 {
    f.sum_over(w.weights())
}

/// The minimal effective number `𝒩⋆[W] = Σ min{w_i, 1}`.
pub fn effective_number_min(w: &CountingVector) -> f64 {
    CountingFunctionSpec::minimal_star().sum_over(w.weights())
}

/// Number of strictly positive weights (`𝒩₊`), the supremum of the family.
pub fn support_count(w: &GeneralWeights) -> f64 {
    support_count_slice(w.weights())
}

pub(crate) fn support_count_slice(weights: &[f64]) -> f64 {
    weights.iter().filter(|&&w| w > 0.0).count() as f64
}

/// Participation number `𝒫[W] = N² / Σ w_i²`.
///
/// A traditional localization measure; monotone under cumulation but not
/// additive, so it is not an effective number function.
pub fn participation_number(w: &CountingVector) -> f64 {
    participation_slice(w.weights())
}

pub(crate) fn participation_slice(weights: &[f64]) -> f64 {
    let n = weights.len() as f64;
    let mut sorted = weights.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let sum_sq: f64 = sorted.iter().map(|&w| w * w).sum();
    debug_assert!(sum_sq > 0.0, "all-zero vector cannot be a CountingVector");
    n * n / sum_sq
}

/// Exponentiated Shannon entropy of `P = W / N`.
///
/// Comparison measure only: like the participation number it fails
/// additivity.
pub fn exp_shannon(w: &CountingVector) -> f64 {
    exp_shannon_slice(w.weights())
}

pub(crate) fn exp_shannon_slice(weights: &[f64]) -> f64 {
    let n = weights.len() as f64;
    let mut sorted = weights.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let entropy: f64 = sorted
        .iter()
        .map(|&w| {
            let p = w / n;
            if p > 0.0 {
                -p * p.ln()
            } else {
                0.0
            }
        })
        .sum();
    entropy.exp()
}

/// Effective co-number `ℳ[W] = N − 𝒩[W]`, the complementary total.
///
/// Equals `Σ (1 − 𝔫(w_i))` up to floating-point summation order.
pub fn co_enf_value(f: &CountingFunctionSpec, w: &CountingVector) -> f64 {
    w.dim() as f64 - f.sum_over(w.weights())
}

/// Effective fraction `ℱ[P] = (1/N) 𝒩[N·P]`.
///
/// For the minimal counting function this is `Σ min{p_i, 1/N}`, the
/// size-normalized form used for large-`N` limits.
pub fn effective_fraction(f: &CountingFunctionSpec, p: &ProbabilityVector) -> f64 {
    let n = p.dim() as f64;
    let scaled: Vec<f64> = p.probs().iter().map(|&x| x * n).collect();
    f.sum_over(&scaled) / n
}

/// Raw counting-function extraction from a black-box evaluator on counting
/// vectors: probes `(x, 2−x)` for grid `x` and subtracts the additive gauge
/// `evaluator((1,1)) / 2`.
///
/// Returns `(knots, gauge)` without validating the counting-function class;
/// used by the separability check, which must interrogate non-separable
/// measures too.
pub(crate) fn extract_raw<F>(evaluator: F, grid: &[f64]) -> Result<(Vec<(f64, f64)>, f64)>
where
    F: Fn(&CountingVector) -> Result<f64>,
{
    for &x in grid {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::InvalidArgument(format!(
                "extraction grid point {x} outside [0, 1]"
            )));
        }
    }
    let mut xs: Vec<f64> = grid.to_vec();
    if !xs.contains(&0.0) {
        xs.push(0.0);
    }
    if !xs.contains(&1.0) {
        xs.push(1.0);
    }
    xs.sort_unstable_by(f64::total_cmp);
    xs.dedup();

    let ones = CountingVector::new(vec![1.0, 1.0]).expect("(1,1) is a valid counting vector");
    // Additivity gives evaluator(1,1) = 2·evaluator(1); halving avoids a
    // dimension-1 probe the evaluator may not support.
    let gauge = evaluator(&ones)? / 2.0;
    let mut knots = Vec::with_capacity(xs.len());
    for &x in &xs {
        let probe = CountingVector::new(vec![x, 2.0 - x])
            .map_err(|e| Error::EvalFailed(format!("probe vector ({x}, {}): {e}", 2.0 - x)))?;
        knots.push((x, evaluator(&probe)? - gauge));
    }
    Ok((knots, gauge))
}

/// Interpolates raw extracted knots; beyond the last knot the separable
/// hypothesis fixes the value at the gauge constant.
pub(crate) fn raw_table_eval(knots: &[(f64, f64)], gauge: f64, w: f64) -> f64 {
    if w >= 1.0 {
        return gauge;
    }
    if w <= knots[0].0 {
        return knots[0].1;
    }
    let hi = knots.partition_point(|k| k.0 <= w);
    let (w0, v0) = knots[hi - 1];
    if w0 == w {
        return v0;
    }
    let (w1, v1) = knots[hi];
    v0 + (w - w0) * (v1 - v0) / (w1 - w0)
}

/// Recovers the counting function of a separable measure from black-box
/// evaluations on dimension-2 counting vectors, tabulated on `grid ⊂ [0, 1]`.
///
/// For an evaluator realizing an effective number function, the recovered
/// values match its counting function at every grid point to within
/// floating-point error. Evaluators outside the class surface as
/// construction errors (the extracted table violates the concave-table
/// invariants).
pub fn extract_counting_function<F>(evaluator: F, grid: &[f64]) -> Result<CountingFunctionSpec>
where
    F: Fn(&CountingVector) -> Result<f64>,
{
    let (knots, _gauge) = extract_raw(evaluator, grid)?;
    CountingFunctionSpec::tabulated(knots)
}
