//! The black-box measure interface consumed by the axiom verifier and the
//! CLI, plus the built-in measures.

use crate::counting::{exp_shannon_slice, participation_slice, CountingFunctionSpec};
use crate::error::{Error, Result};
use crate::weights::CountingVector;

/// A measure assigning a real value to every counting vector.
///
/// Implementations must be callable concurrently (`Sync`); the verifier may
/// evaluate trials in parallel.
pub trait Measure: Sync {
    fn name(&self) -> &str;
    fn eval(&self, w: &CountingVector) -> Result<f64>;
}

/// Separable measure `W ↦ Σ 𝔫(w_i)` for a counting-function spec.
pub struct SeparableMeasure {
    name: String,
    spec: CountingFunctionSpec,
}

impl SeparableMeasure {
    pub fn new(spec: CountingFunctionSpec) -> Self {
        Self {
            name: spec.name(),
            spec,
        }
    }

    /// The minimal effective number `𝒩⋆`.
    pub fn n_star() -> Self {
        Self::new(CountingFunctionSpec::minimal_star())
    }

    /// The support counter `𝒩₊` (not an effective number function).
    pub fn n_plus() -> Self {
        Self::new(CountingFunctionSpec::support_plus())
    }

    /// The family member `𝒩_α`.
    pub fn alpha(alpha: f64) -> Result<Self> {
        Ok(Self::new(CountingFunctionSpec::alpha(alpha)?))
    }

    pub fn spec(&self) -> &CountingFunctionSpec {
        &self.spec
    }
}

impl Measure for SeparableMeasure {
    fn name(&self) -> &str {
        &self.name
    }

    fn eval(&self, w: &CountingVector) -> Result<f64> {
        Ok(self.spec.sum_over(w.weights()))
    }
}

/// Participation number `N² / Σ w_i²`.
pub struct ParticipationMeasure;

impl Measure for ParticipationMeasure {
    fn name(&self) -> &str {
        "participation"
    }

    fn eval(&self, w: &CountingVector) -> Result<f64> {
        Ok(participation_slice(w.weights()))
    }
}

/// Exponentiated Shannon entropy of `W / N`.
pub struct ExpShannonMeasure;

impl Measure for ExpShannonMeasure {
    fn name(&self) -> &str {
        "exp_shannon"
    }

    fn eval(&self, w: &CountingVector) -> Result<f64> {
        Ok(exp_shannon_slice(w.weights()))
    }
}

/// Measure defined by a closure; handy for tests and adapters.
pub struct FnMeasure<F> {
    name: String,
    f: F,
}

impl<F> FnMeasure<F>
where
    F: Fn(&CountingVector) -> Result<f64> + Sync,
{
    pub fn new(name: impl Into<String>, f: F) -> Self {
        Self {
            name: name.into(),
            f,
        }
    }
}

impl<F> Measure for FnMeasure<F>
where
    F: Fn(&CountingVector) -> Result<f64> + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn eval(&self, w: &CountingVector) -> Result<f64> {
        (self.f)(w)
    }
}

/// Parses a measure name as used on the command line: `n_star`, `n_plus`,
/// `alpha:<a>`, `participation`, `exp_shannon`.
pub fn parse_measure(name: &str) -> Result<Box<dyn Measure>> {
    match name {
        "n_star" => Ok(Box::new(SeparableMeasure::n_star())),
        "n_plus" => Ok(Box::new(SeparableMeasure::n_plus())),
        "participation" => Ok(Box::new(ParticipationMeasure)),
        "exp_shannon" => Ok(Box::new(ExpShannonMeasure)),
        _ => {
            if let Some(rest) = name.strip_prefix("alpha:") {
                let alpha: f64 = rest.parse().map_err(|_| {
                    Error::InvalidArgument(format!("cannot parse alpha value in `{name}`"))
                })?;
                Ok(Box::new(SeparableMeasure::alpha(alpha)?))
            } else {
                Err(Error::InvalidArgument(format!(
                    "unknown measure `{name}` (expected n_star, n_plus, alpha:<a>, participation, exp_shannon)"
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_builtin_names() {
        for name in [
            "n_star",
            "n_plus",
            "alpha:0.5",
            "participation",
            "exp_shannon",
        ] {
            let m = parse_measure(name).unwrap();
            assert_eq!(m.name(), name);
        }
        assert!(parse_measure("alpha:2.0").is_err());
        assert!(parse_measure("n_weird").is_err());
    }

    #[test]
    fn separable_measure_evaluates() {
        let m = SeparableMeasure::alpha(0.5).unwrap();
        let w = CountingVector::new(vec![1.5, 0.5]).unwrap();
        assert!((m.eval(&w).unwrap() - (1.0 + 0.5f64.sqrt())).abs() < 1e-12);
    }
}
