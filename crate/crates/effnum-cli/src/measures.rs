//! Measure selection for `eval` and `count` rows.

use effnum::counting::{co_enf_value, effective_fraction, exp_shannon, participation_number};
use effnum::{CountingFunctionSpec, CountingVector};

use crate::CliError;

/// A named column computed per input vector.
#[derive(Clone, Debug)]
pub enum EvalMeasure {
    /// Separable count on `W`: `n_star`, `n_plus`, `alpha:<a>`.
    Enf(CountingFunctionSpec),
    Participation,
    ExpShannon,
    /// Effective fraction of `P = W/N`: `f_star`, `f_alpha:<a>`.
    Fraction(CountingFunctionSpec),
    /// Co-number `N − 𝒩[W]`: `co_star`, `co_alpha:<a>`.
    Co(CountingFunctionSpec),
}

impl EvalMeasure {
    pub fn name(&self) -> String {
        match self {
            EvalMeasure::Enf(spec) => spec.name(),
            EvalMeasure::Participation => "participation".into(),
            EvalMeasure::ExpShannon => "exp_shannon".into(),
            EvalMeasure::Fraction(spec) => match spec.name().as_str() {
                "n_star" => "f_star".into(),
                other => format!("f_{other}"),
            },
            EvalMeasure::Co(spec) => match spec.name().as_str() {
                "n_star" => "co_star".into(),
                other => format!("co_{other}"),
            },
        }
    }

    pub fn eval(&self, w: &CountingVector) -> f64 {
        match self {
            EvalMeasure::Enf(spec) => spec.sum_over(w.weights()),
            EvalMeasure::Participation => participation_number(w),
            EvalMeasure::ExpShannon => exp_shannon(w),
            EvalMeasure::Fraction(spec) => effective_fraction(spec, &w.to_probabilities()),
            EvalMeasure::Co(spec) => co_enf_value(spec, w),
        }
    }

    /// Whether this column is usable on subset/partition structures (it must
    /// be backed by a counting function).
    pub fn counting_spec(&self) -> Option<&CountingFunctionSpec> {
        match self {
            EvalMeasure::Enf(spec) => Some(spec),
            _ => None,
        }
    }
}

fn alpha_from(name: &str, prefix: &str) -> Result<CountingFunctionSpec, CliError> {
    let value: f64 = name[prefix.len()..]
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot parse alpha in `{name}`")))?;
    CountingFunctionSpec::alpha(value).map_err(|e| CliError::Usage(e.to_string()))
}

/// Parses one measure name.
pub fn parse_eval_measure(name: &str) -> Result<EvalMeasure, CliError> {
    match name {
        "n_star" => Ok(EvalMeasure::Enf(CountingFunctionSpec::minimal_star())),
        "n_plus" => Ok(EvalMeasure::Enf(CountingFunctionSpec::support_plus())),
        "participation" => Ok(EvalMeasure::Participation),
        "exp_shannon" => Ok(EvalMeasure::ExpShannon),
        "f_star" => Ok(EvalMeasure::Fraction(CountingFunctionSpec::minimal_star())),
        "co_star" => Ok(EvalMeasure::Co(CountingFunctionSpec::minimal_star())),
        _ => {
            if name.starts_with("alpha:") {
                Ok(EvalMeasure::Enf(alpha_from(name, "alpha:")?))
            } else if name.starts_with("f_alpha:") {
                Ok(EvalMeasure::Fraction(alpha_from(name, "f_alpha:")?))
            } else if name.starts_with("co_alpha:") {
                Ok(EvalMeasure::Co(alpha_from(name, "co_alpha:")?))
            } else {
                Err(CliError::Usage(format!(
                    "unknown measure `{name}` (expected n_star, n_plus, alpha:<a>, participation, \
                     exp_shannon, f_star, f_alpha:<a>, co_star, co_alpha:<a>)"
                )))
            }
        }
    }
}

/// Expands `--measure` flags; with none given, the default set covers the
/// core measures plus the alpha grid.
pub fn resolve_measures(
    requested: &[String],
    alpha_grid: &[f64],
) -> Result<Vec<EvalMeasure>, CliError> {
    if requested.is_empty() {
        let mut out = vec![parse_eval_measure("n_star")?, parse_eval_measure("n_plus")?];
        for &a in alpha_grid.iter().filter(|&&a| a != 1.0) {
            out.push(EvalMeasure::Enf(
                CountingFunctionSpec::alpha(a).map_err(|e| CliError::Usage(e.to_string()))?,
            ));
        }
        out.push(parse_eval_measure("participation")?);
        out.push(parse_eval_measure("exp_shannon")?);
        out.push(parse_eval_measure("f_star")?);
        Ok(out)
    } else {
        requested
            .iter()
            .flat_map(|group| group.split(','))
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(parse_eval_measure)
            .collect()
    }
}
