//! Weight-vector domains for effective counting.
//!
//! Three closely related vector types appear throughout the crate:
//!
//! * [`CountingVector`] — nonnegative weights over `N` objects summing to `N`.
//!   This is the universal argument of effective number functions: the uniform
//!   vector `(1,...,1)` represents ordinary counting, a delta vector
//!   `(N,0,...,0)` full cumulation on one object.
//! * [`ProbabilityVector`] — nonnegative entries summing to 1; the two are
//!   related by `W = N * P`.
//! * [`GeneralWeights`] — nonnegative entries with no sum constraint, the
//!   extension domain used when counting contributions of subsets.

use crate::error::{Error, Result};

/// Relative tolerance on the counting-vector sum constraint: `|Σw − N| ≤ TOL_SUM_REL · N`.
pub const TOL_SUM_REL: f64 = 1e-9;

/// Absolute tolerance on the probability-vector sum constraint.
pub const TOL_SUM_PROB: f64 = 1e-9;

/// Tolerance used when comparing two evaluation routes of the same quantity.
pub const TOL_EVAL: f64 = 1e-9;

fn check_entries(entries: &[f64]) -> Result<()> {
    for (index, &value) in entries.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::BadWeight { index, value });
        }
    }
    Ok(())
}

/// Nonnegative weights `(w_1, ..., w_N)` with `Σ w_i = N`.
#[derive(Clone, Debug, PartialEq)]
pub struct CountingVector {
    weights: Vec<f64>,
}

impl CountingVector {
    /// Builds a counting vector, rejecting negative/non-finite entries and
    /// sums off `N` by more than [`TOL_SUM_REL`]`·N`.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty);
        }
        check_entries(&weights)?;
        let n = weights.len() as f64;
        let sum: f64 = weights.iter().sum();
        let tol = TOL_SUM_REL * n;
        if (sum - n).abs() > tol {
            return Err(Error::SumMismatch {
                sum,
                expected: n,
                tol,
            });
        }
        Ok(Self { weights })
    }

    /// Builds a counting vector after rescaling the entries so they sum to `N`.
    ///
    /// Rescaling is opt-in: silent renormalization hides data errors, so
    /// [`CountingVector::new`] rejects instead.
    pub fn renormalized(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty);
        }
        check_entries(&weights)?;
        let n = weights.len() as f64;
        let sum: f64 = weights.iter().sum();
        if sum <= 0.0 {
            return Err(Error::ZeroSum);
        }
        let scale = n / sum;
        Ok(Self {
            weights: weights.into_iter().map(|w| w * scale).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Concatenation `W₁ ⊞ W₂`; the sum constraint is preserved, so no
    /// revalidation is needed.
    pub fn concat(&self, other: &Self) -> Self {
        let mut weights = Vec::with_capacity(self.dim() + other.dim());
        weights.extend_from_slice(&self.weights);
        weights.extend_from_slice(&other.weights);
        Self { weights }
    }

    /// Moves `eps` of weight from entry `i` to entry `j` (0-based), the
    /// elementary cumulation-increasing deformation. Requires `w_i ≤ w_j`,
    /// `0 ≤ eps ≤ w_i` and `i ≠ j`.
    pub fn elementary_transfer(&self, i: usize, j: usize, eps: f64) -> Result<Self> {
        let n = self.dim();
        if i >= n || j >= n {
            return Err(Error::BadTransfer(format!(
                "index out of range: i={i}, j={j}, dim={n}"
            )));
        }
        if i == j {
            return Err(Error::BadTransfer(format!("i == j ({i})")));
        }
        let (wi, wj) = (self.weights[i], self.weights[j]);
        if wi > wj {
            return Err(Error::BadTransfer(format!(
                "w_i <= w_j violated: w_{i} = {wi} > w_{j} = {wj}"
            )));
        }
        if !(0.0..=wi).contains(&eps) || !eps.is_finite() {
            return Err(Error::BadTransfer(format!(
                "0 <= eps <= w_i violated: eps = {eps}, w_{i} = {wi}"
            )));
        }
        let mut weights = self.weights.clone();
        weights[i] = wi - eps;
        weights[j] = wj + eps;
        Ok(Self { weights })
    }

    /// Internal constructor for vectors whose sum constraint holds by
    /// construction (permutations, transfers, normalized samples).
    pub(crate) fn from_vec_unchecked(weights: Vec<f64>) -> Self {
        debug_assert!(!weights.is_empty());
        debug_assert!({
            let n = weights.len() as f64;
            let sum: f64 = weights.iter().sum();
            (sum - n).abs() <= TOL_SUM_REL * n
        });
        Self { weights }
    }

    /// Copies the weights into the unconstrained domain.
    pub fn to_general(&self) -> GeneralWeights {
        GeneralWeights {
            weights: self.weights.clone(),
        }
    }

    /// The induced probability vector `P = W / N`.
    pub fn to_probabilities(&self) -> ProbabilityVector {
        let n = self.dim() as f64;
        ProbabilityVector {
            probs: self.weights.iter().map(|w| w / n).collect(),
        }
    }
}

/// Probabilities `(p_1, ..., p_N)` with `Σ p_i = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityVector {
    probs: Vec<f64>,
}

impl ProbabilityVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Empty);
        }
        check_entries(&probs)?;
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > TOL_SUM_PROB {
            return Err(Error::SumMismatch {
                sum,
                expected: 1.0,
                tol: TOL_SUM_PROB,
            });
        }
        Ok(Self { probs })
    }

    pub fn renormalized(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Empty);
        }
        check_entries(&probs)?;
        let sum: f64 = probs.iter().sum();
        if sum <= 0.0 {
            return Err(Error::ZeroSum);
        }
        Ok(Self {
            probs: probs.into_iter().map(|p| p / sum).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// The counting vector `W = N * P`.
    pub fn to_counting(&self) -> CountingVector {
        let n = self.dim() as f64;
        CountingVector {
            weights: self.probs.iter().map(|p| p * n).collect(),
        }
    }
}

/// Nonnegative weights with no sum constraint (may be empty).
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralWeights {
    weights: Vec<f64>,
}

impl GeneralWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        check_entries(&weights)?;
        Ok(Self { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut weights = Vec::with_capacity(self.len() + other.len());
        weights.extend_from_slice(&self.weights);
        weights.extend_from_slice(&other.weights);
        Self { weights }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_accepts_valid_sums() {
        let w = CountingVector::new(vec![1.0, 1.0, 1.0]).unwrap();
        assert_eq!(w.dim(), 3);
        let w = CountingVector::new(vec![4.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(w.dim(), 4);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(CountingVector::new(vec![]), Err(Error::Empty)));
        assert!(matches!(
            CountingVector::new(vec![1.0, -0.5, 2.5]),
            Err(Error::BadWeight { index: 1, .. })
        ));
        assert!(matches!(
            CountingVector::new(vec![1.0, f64::NAN]),
            Err(Error::BadWeight { .. })
        ));
        assert!(matches!(
            CountingVector::new(vec![1.0, 1.5]),
            Err(Error::SumMismatch { .. })
        ));
    }

    #[test]
    fn renormalize_scales_to_n() {
        let w = CountingVector::renormalized(vec![1.0, 3.0]).unwrap();
        assert_eq!(w.weights(), &[0.5, 1.5]);
        assert!(matches!(
            CountingVector::renormalized(vec![0.0, 0.0]),
            Err(Error::ZeroSum)
        ));
    }

    #[test]
    fn concat_matches_definition() {
        let a = CountingVector::new(vec![2.0, 0.0]).unwrap();
        let b = CountingVector::new(vec![1.0]).unwrap();
        assert_eq!(a.concat(&b).weights(), &[2.0, 0.0, 1.0]);

        let u = CountingVector::new(vec![1.0, 1.0]).unwrap();
        assert_eq!(u.concat(&u).weights(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn transfer_full_and_identity() {
        let w = CountingVector::new(vec![0.5, 1.5]).unwrap();
        let t = w.elementary_transfer(0, 1, 0.5).unwrap();
        assert_eq!(t.weights(), &[0.0, 2.0]);

        let u = CountingVector::new(vec![1.0, 1.0]).unwrap();
        let t = u.elementary_transfer(0, 1, 0.0).unwrap();
        assert_eq!(t.weights(), &[1.0, 1.0]);
    }

    #[test]
    fn transfer_rejects_violated_preconditions() {
        let w = CountingVector::new(vec![0.5, 1.5]).unwrap();
        let err = w.elementary_transfer(1, 0, 0.2).unwrap_err();
        assert!(err.to_string().contains("w_i <= w_j"));
        let err = w.elementary_transfer(0, 1, 0.6).unwrap_err();
        assert!(err.to_string().contains("eps"));
        assert!(w.elementary_transfer(0, 0, 0.0).is_err());
        assert!(w.elementary_transfer(0, 5, 0.0).is_err());
    }

    #[test]
    fn probability_round_trip() {
        let p = ProbabilityVector::new(vec![0.75, 0.25]).unwrap();
        let w = p.to_counting();
        assert_eq!(w.weights(), &[1.5, 0.5]);
        let q = w.to_probabilities();
        assert_eq!(q.probs(), &[0.75, 0.25]);
    }

    #[test]
    fn probability_sum_tolerance() {
        assert!(ProbabilityVector::new(vec![0.5, 0.5 + 2e-9]).is_err());
        assert!(ProbabilityVector::new(vec![0.5, 0.5 + 0.5e-9]).is_ok());
    }

    #[test]
    fn general_weights_allow_any_sum() {
        let g = GeneralWeights::new(vec![3.0, 0.0, 0.25]).unwrap();
        assert_eq!(g.len(), 3);
        assert!(GeneralWeights::new(vec![]).unwrap().is_empty());
        assert!(GeneralWeights::new(vec![-1.0]).is_err());
    }
}
