//! Additive effective counting for weighted collections.
//!
//! When `N` objects carry probability weights, "how many of them are
//! effectively there?" has a well-founded answer only for measures that are
//! additive over concatenation, symmetric, continuous, and monotone under
//! weight cumulation. Every such measure is a sum `Σ 𝔫(w_i)` of a concave
//! counting function pinned at `𝔫(0) = 0` and `𝔫(w ≥ 1) = 1`, and the family
//! has a least element, `𝒩⋆[W] = Σ min{w_i, 1}` — the minimal effective
//! number. The support count `𝒩₊` bounds the family from above without
//! belonging to it, and traditional quantifiers (participation number,
//! exponentiated entropies) fall outside the family entirely.
//!
//! The crate provides:
//!
//! * [`weights`] / [`counting`] — the weight-vector domains and every
//!   measure as a pure function, including co-number duals, effective
//!   fractions, and counting-function extraction from black-box evaluators;
//! * [`axioms`] — a randomized verifier that checks any measure against the
//!   defining axioms and produces counterexample witnesses;
//! * [`quantum`] — effective counting of quantum identities: basis states,
//!   orthonormal subsets, orthogonal subspace decompositions;
//! * [`lattice`] — a 1D disordered-chain testbed where effective fractions
//!   quantify localization;
//! * [`batch`] — the rayon/sequential switch point (feature `parallel`,
//!   enabled by default).
//!
//! All randomness is seeded ChaCha8; identical inputs give bitwise identical
//! results regardless of thread count.
//!
//! ```
//! use effnum::{effective_number_min, participation_number, CountingVector};
//! use effnum::axioms::{check_additivity, TrialConfig};
//! use effnum::measure::ParticipationMeasure;
//!
//! // two weights share the total unevenly: effectively 1.5 objects
//! let w = CountingVector::new(vec![1.5, 0.5])?;
//! assert_eq!(effective_number_min(&w), 1.5);
//!
//! // the participation number is not additive, and the verifier says so
//! let cfg = TrialConfig { trials: 200, max_dim: 8, ..TrialConfig::default() };
//! let verdict = check_additivity(&ParticipationMeasure, &cfg);
//! assert!(!verdict.passed);
//! assert!(verdict.witness.unwrap().violation > 1e-8);
//!
//! // the canonical counterexample by hand
//! let joined = CountingVector::new(vec![2.0, 0.0, 1.0])?;
//! assert!((participation_number(&joined) - 1.8).abs() < 1e-12);
//! # Ok::<(), effnum::Error>(())
//! ```

pub use num_complex;

pub mod axioms;
pub mod batch;
pub mod counting;
mod eigen;
pub mod error;
pub mod lattice;
pub mod measure;
pub mod quantum;
pub mod report;
pub mod sample;
pub mod weights;

pub use counting::{
    co_enf_value, effective_fraction, effective_number_min, eval_separable, exp_shannon,
    extract_counting_function, participation_number, support_count, CountingFunctionSpec,
    DEFAULT_ALPHA_GRID,
};
pub use error::{Error, Result};
pub use report::MeasureReport;
pub use weights::{CountingVector, GeneralWeights, ProbabilityVector};
