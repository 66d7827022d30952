//! Per-vector evaluation reports.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::weights::TOL_EVAL;

/// Evaluation of one weight vector under a set of measures, keyed by measure
/// identifier. Iteration order is the identifier order (BTreeMap), so output
/// is deterministic.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureReport {
    n: usize,
    values: BTreeMap<String, f64>,
}

impl MeasureReport {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            values: BTreeMap::new(),
        }
    }

    /// Input dimension the report refers to.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, id: impl Into<String>, value: f64) {
        self.values.insert(id.into(), value);
    }

    /// Inserts a value claimed to be an effective number, enforcing the
    /// `1 ≤ 𝒩 ≤ N` bounds up to [`TOL_EVAL`].
    pub fn insert_enf(&mut self, id: impl Into<String>, value: f64) -> Result<()> {
        let n = self.n as f64;
        if !(1.0 - TOL_EVAL..=n + TOL_EVAL).contains(&value) {
            return Err(Error::InvalidArgument(format!(
                "effective number {value} outside [1, {n}]"
            )));
        }
        self.values.insert(id.into(), value);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<f64> {
        self.values.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.values.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enf_entries_are_bound_checked() {
        let mut r = MeasureReport::new(4);
        assert!(r.insert_enf("n_star", 2.5).is_ok());
        assert!(r.insert_enf("bad_low", 0.5).is_err());
        assert!(r.insert_enf("bad_high", 4.1).is_err());
        r.insert("participation", 0.5); // non-ENF entries are unconstrained
        assert_eq!(r.get("n_star"), Some(2.5));
        assert_eq!(r.len(), 2);
    }
}
