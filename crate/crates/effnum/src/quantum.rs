//! Counting the identities of a quantum state.
//!
//! A normalized state and an orthonormal basis induce probabilities
//! `p_i = |⟨i|ψ⟩|²`; scaling by the dimension turns these into a counting
//! vector, and any counting function then assigns the state an effective
//! number of basis identities. The same construction extends to orthonormal
//! subsets (via the unconstrained weight domain) and to orthogonal subspace
//! decompositions (via projection probabilities).

use num_complex::Complex64;

use crate::counting::{eval_separable, CountingFunctionSpec};
use crate::error::{Error, Result};
use crate::weights::{CountingVector, GeneralWeights};

/// Tolerance on the squared norm of a state.
pub const TOL_NORM: f64 = 1e-9;

/// Tolerance on pairwise orthonormality, `|⟨j|k⟩ − δ_jk|`.
pub const TOL_ORTHO: f64 = 1e-8;

/// Inner product `⟨a|b⟩`, conjugating the left argument.
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Normalized complex state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumState {
    amplitudes: Vec<Complex64>,
}

impl QuantumState {
    /// Builds a state, rejecting non-finite amplitudes and squared norms off
    /// 1 by more than [`TOL_NORM`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Empty);
        }
        for (index, a) in amplitudes.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::BadWeight {
                    index,
                    value: f64::NAN,
                });
            }
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > TOL_NORM {
            return Err(Error::NotNormalized {
                norm_sq,
                tol: TOL_NORM,
            });
        }
        Ok(Self { amplitudes })
    }

    /// Builds a state after rescaling to unit norm.
    pub fn renormalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Empty);
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq <= 0.0 || !norm_sq.is_finite() {
            return Err(Error::ZeroSum);
        }
        let scale = norm_sq.sqrt().recip();
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|a| a * scale).collect(),
        })
    }

    /// Embeds a real amplitude vector (eigenvectors of real Hamiltonians).
    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Detection probabilities `|ψ_i|²` in the standard basis.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// Counting vector `W = N·P` induced by the state in the standard basis.
pub fn weights_in_basis(psi: &QuantumState) -> CountingVector {
    let n = psi.dim() as f64;
    let weights = psi.probabilities().iter().map(|p| n * p).collect();
    // Σ w = N·|ψ|² lands within the counting-vector tolerance by the norm
    // invariant.
    CountingVector::from_vec_unchecked(weights)
}

/// Effective number of standard-basis identities held by the state.
pub fn count_identities(psi: &QuantumState, f: &CountingFunctionSpec) -> f64 {
    f.sum_over(weights_in_basis(psi).weights())
}

/// A set of pairwise orthonormal vectors in an `N`-dimensional space.
///
/// May be empty (the trivial completion of a full basis); `dim` then records
/// the ambient dimension explicitly.
#[derive(Clone, Debug)]
pub struct OrthonormalSet {
    vectors: Vec<Vec<Complex64>>,
    dim: usize,
}

impl OrthonormalSet {
    pub fn new(vectors: Vec<Vec<Complex64>>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Empty);
        }
        if vectors.len() > dim {
            return Err(Error::NotOrthonormal(format!(
                "{} vectors cannot be orthonormal in dimension {dim}",
                vectors.len()
            )));
        }
        for (j, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "vector {j} has length {}, expected {dim}",
                    v.len()
                )));
            }
        }
        for j in 0..vectors.len() {
            for k in j..vectors.len() {
                let ip = inner(&vectors[j], &vectors[k]);
                let expected = if j == k { 1.0 } else { 0.0 };
                let dev = (ip - Complex64::new(expected, 0.0)).norm();
                if dev > TOL_ORTHO {
                    return Err(Error::NotOrthonormal(format!(
                        "|<{j}|{k}> - {expected}| = {dev:e} exceeds {TOL_ORTHO:e}"
                    )));
                }
            }
        }
        Ok(Self { vectors, dim })
    }

    /// The standard basis of dimension `n`.
    pub fn standard_basis(n: usize) -> Self {
        let vectors = (0..n)
            .map(|i| {
                let mut v = vec![Complex64::new(0.0, 0.0); n];
                v[i] = Complex64::new(1.0, 0.0);
                v
            })
            .collect();
        Self { vectors, dim: n }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    /// Concatenates two sets over the same space without re-checking
    /// orthonormality between them.
    fn chain(&self, other: &Self) -> Vec<Vec<Complex64>> {
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        all
    }
}

/// Weights `w_j = N |⟨j|ψ⟩|²` of the state against an orthonormal subset.
///
/// No sum constraint holds unless the subset is a full basis, so the result
/// lives in the unconstrained domain.
pub fn subset_weights(psi: &QuantumState, subset: &OrthonormalSet) -> Result<GeneralWeights> {
    if subset.dim() != psi.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} vs subset dimension {}",
            psi.dim(),
            subset.dim()
        )));
    }
    let n = psi.dim() as f64;
    GeneralWeights::new(
        subset
            .vectors()
            .iter()
            .map(|v| n * inner(v, psi.amplitudes()).norm_sqr())
            .collect(),
    )
}

/// Effective number of identities from an orthonormal subset contained in
/// the state: `Σ_j 𝔫(N |⟨j|ψ⟩|²)`.
pub fn count_subset(
    psi: &QuantumState,
    subset: &OrthonormalSet,
    f: &CountingFunctionSpec,
) -> Result<f64> {
    Ok(eval_separable(f, &subset_weights(psi, subset)?))
}

/// Verifies that the subset contribution is independent of how the subset is
/// completed into a basis: for each completion, the count over the full
/// basis must equal subset count plus completion count. Returns the
/// conjunction of both comparisons.
pub fn check_completion_independence(
    psi: &QuantumState,
    subset: &OrthonormalSet,
    completion_a: &OrthonormalSet,
    completion_b: &OrthonormalSet,
    f: &CountingFunctionSpec,
) -> Result<bool> {
    let n = psi.dim();
    let mut ok = true;
    for completion in [completion_a, completion_b] {
        if subset.len() + completion.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "subset ({}) plus completion ({}) must span dimension {n}",
                subset.len(),
                completion.len()
            )));
        }
        // the union must itself be orthonormal — this also validates
        // subset-completion cross terms
        let union = OrthonormalSet::new(subset.chain(completion), n)?;
        let whole = count_subset(psi, &union, f)?;
        let parts = count_subset(psi, subset, f)? + count_subset(psi, completion, f)?;
        ok &= (whole - parts).abs() <= crate::weights::TOL_EVAL;
    }
    Ok(ok)
}

/// Orthogonal decomposition (possibly partial) of an `N`-dimensional space.
#[derive(Clone, Debug)]
pub struct SubspacePartition {
    n: usize,
    blocks: Blocks,
}

#[derive(Clone, Debug)]
enum Blocks {
    /// Disjoint sets of 0-based standard-basis indices.
    Indices(Vec<Vec<usize>>),
    /// Orthonormal spanning sets with mutually orthogonal spans.
    Spans(Vec<OrthonormalSet>),
}

impl SubspacePartition {
    /// Partition by standard-basis index blocks (0-based), checked disjoint
    /// and nonempty.
    pub fn from_index_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 || blocks.is_empty() {
            return Err(Error::BadPartition("empty partition".into()));
        }
        let mut seen = vec![false; n];
        for (m, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::BadPartition(format!("block {m} is empty")));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::BadPartition(format!(
                        "index {i} out of range for dimension {n}"
                    )));
                }
                if seen[i] {
                    return Err(Error::BadPartition(format!(
                        "index {i} appears in two blocks"
                    )));
                }
                seen[i] = true;
            }
        }
        Ok(Self {
            n,
            blocks: Blocks::Indices(blocks),
        })
    }

    /// Partition by orthonormal spanning sets; spans must be mutually
    /// orthogonal across blocks.
    pub fn from_spans(sets: Vec<OrthonormalSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::BadPartition("empty partition".into()));
        }
        let n = sets[0].dim();
        let mut covered = 0;
        for (m, set) in sets.iter().enumerate() {
            if set.dim() != n {
                return Err(Error::DimensionMismatch(format!(
                    "block {m} lives in dimension {}, expected {n}",
                    set.dim()
                )));
            }
            if set.is_empty() {
                return Err(Error::BadPartition(format!("block {m} is empty")));
            }
            covered += set.len();
        }
        if covered > n {
            return Err(Error::BadPartition(format!(
                "blocks span {covered} dimensions, more than the space ({n})"
            )));
        }
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                for (ja, va) in sets[a].vectors().iter().enumerate() {
                    for (jb, vb) in sets[b].vectors().iter().enumerate() {
                        let dev = inner(va, vb).norm();
                        if dev > TOL_ORTHO {
                            return Err(Error::NotOrthonormal(format!(
                                "blocks {a} and {b} overlap: |<{ja}|{jb}>| = {dev:e}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self {
            n,
            blocks: Blocks::Spans(sets),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        match &self.blocks {
            Blocks::Indices(b) => b.len(),
            Blocks::Spans(s) => s.len(),
        }
    }

    pub fn block_dims(&self) -> Vec<usize> {
        match &self.blocks {
            Blocks::Indices(b) => b.iter().map(Vec::len).collect(),
            Blocks::Spans(s) => s.iter().map(OrthonormalSet::len).collect(),
        }
    }

    /// Total dimension covered by the blocks.
    pub fn covered_dim(&self) -> usize {
        self.block_dims().iter().sum()
    }

    pub fn is_full(&self) -> bool {
        self.covered_dim() == self.n
    }

    /// Squared projection norms `p_m = ⟨χ_m|χ_m⟩` of the state onto each
    /// block, computed from explicit inner products (index blocks slice
    /// coordinates directly; no projector matrices are formed).
    pub fn projection_probabilities(&self, psi: &QuantumState) -> Result<Vec<f64>> {
        if psi.dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "state dimension {} vs partition dimension {}",
                psi.dim(),
                self.n
            )));
        }
        Ok(match &self.blocks {
            Blocks::Indices(blocks) => blocks
                .iter()
                .map(|block| block.iter().map(|&i| psi.amplitudes()[i].norm_sqr()).sum())
                .collect(),
            Blocks::Spans(sets) => sets
                .iter()
                .map(|set| {
                    set.vectors()
                        .iter()
                        .map(|v| inner(v, psi.amplitudes()).norm_sqr())
                        .sum()
                })
                .collect(),
        })
    }
}

/// Effective number of subspaces, for a full orthogonal decomposition into
/// `M` blocks: evaluates the counting function on `W = M·P` where
/// `p_m = ⟨χ_m|χ_m⟩`.
pub fn count_subspaces(
    psi: &QuantumState,
    partition: &SubspacePartition,
    f: &CountingFunctionSpec,
) -> Result<f64> {
    if !partition.is_full() {
        return Err(Error::PartialDecomposition {
            covered: partition.covered_dim(),
            n: partition.ambient_dim(),
        });
    }
    let probs = partition.projection_probabilities(psi)?;
    let m = probs.len() as f64;
    let weights: Vec<f64> = probs.iter().map(|p| m * p).collect();
    // W = M·P lies on the counting simplex up to the norm and orthonormality
    // tolerances of the inputs.
    debug_assert!({
        let sum: f64 = weights.iter().sum();
        (sum - m).abs() <= m * (TOL_NORM + partition.ambient_dim() as f64 * TOL_ORTHO)
    });
    Ok(f.sum_over(&weights))
}

/// Effective number of subspaces from a partial orthogonal family of
/// equal-dimensional blocks.
///
/// With common block dimension `d` dividing the space dimension `N`, the
/// weights are `w_m = (N/d)·p_m`, evaluated on the unconstrained domain;
/// this reduces to [`count_subspaces`] when the family is a full
/// decomposition and to subset counting when `d = 1`.
pub fn count_subspace_subset(
    psi: &QuantumState,
    partition: &SubspacePartition,
    f: &CountingFunctionSpec,
) -> Result<f64> {
    let dims = partition.block_dims();
    let d = dims[0];
    if dims.iter().any(|&x| x != d) {
        return Err(Error::BadPartition(
            "partial families require equal block dimensions".into(),
        ));
    }
    let n = partition.ambient_dim();
    if !n.is_multiple_of(d) {
        return Err(Error::BadPartition(format!(
            "block dimension {d} does not divide the space dimension {n}"
        )));
    }
    let scale = (n / d) as f64;
    let probs = partition.projection_probabilities(psi)?;
    let weights = GeneralWeights::new(probs.iter().map(|p| scale * p).collect())?;
    Ok(eval_separable(f, &weights))
}
