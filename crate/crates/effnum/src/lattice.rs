//! Desk-scale localization testbed: 1D tight-binding chains with diagonal
//! disorder (the Anderson model), full diagonalization, and size-scaling
//! studies of effective fractions.
//!
//! Effective fractions of eigenstates inversely reflect localization: a
//! state spread over the whole chain keeps its fraction finite as the chain
//! grows, a localized state's fraction decays like `1/N`.

use crate::batch;
use crate::counting::{
    effective_fraction, exp_shannon, participation_number, CountingFunctionSpec, DEFAULT_ALPHA_GRID,
};
use crate::eigen::{tql2, tred2};
use crate::error::{Error, Result};
use crate::quantum::QuantumState;
use crate::report::MeasureReport;
use crate::sample::rng_from;
use rand::Rng;

/// Residual target `‖Hv − Ev‖` for accepted eigenpairs.
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Open,
    Periodic,
}

/// Tight-binding chain with uniform on-site disorder.
#[derive(Clone, Debug)]
pub struct LatticeModel {
    pub n_sites: usize,
    /// Off-diagonal coupling; −1 by convention.
    pub hopping: f64,
    /// Half-width of the uniform on-site potential; entries are drawn from
    /// `[-disorder_strength, +disorder_strength]`.
    pub disorder_strength: f64,
    pub seed: u64,
    pub boundary: Boundary,
}

impl LatticeModel {
    pub fn new(n_sites: usize) -> Self {
        Self {
            n_sites,
            hopping: -1.0,
            disorder_strength: 0.0,
            seed: 0,
            boundary: Boundary::Open,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_sites < 2 {
            return Err(Error::InvalidArgument("n_sites must be >= 2".into()));
        }
        if !self.hopping.is_finite() {
            return Err(Error::InvalidArgument("hopping must be finite".into()));
        }
        if !self.disorder_strength.is_finite() || self.disorder_strength < 0.0 {
            return Err(Error::InvalidArgument(
                "disorder_strength must be finite and >= 0".into(),
            ));
        }
        if self.boundary == Boundary::Periodic && self.n_sites < 3 {
            return Err(Error::InvalidArgument(
                "periodic boundary needs n_sites >= 3".into(),
            ));
        }
        Ok(())
    }
}

/// Real symmetric Hamiltonian, stored tridiagonally when possible.
#[derive(Clone, Debug, PartialEq)]
pub enum Hamiltonian {
    Tridiagonal { diag: Vec<f64>, off: Vec<f64> },
    Dense(Vec<Vec<f64>>),
}

impl Hamiltonian {
    /// Wraps a dense matrix, rejecting non-square or non-symmetric input.
    pub fn dense(a: Vec<Vec<f64>>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
        }
        for (i, row) in a.iter().enumerate() {
            for j in i + 1..n {
                if row[j] != a[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "matrix not symmetric at ({i}, {j}): {} vs {}",
                        row[j], a[j][i]
                    )));
                }
            }
        }
        Ok(Self::Dense(a))
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Tridiagonal { diag, .. } => diag.len(),
            Self::Dense(a) => a.len(),
        }
    }

    fn matvec(&self, v: &[f64]) -> Vec<f64> {
        match self {
            Self::Tridiagonal { diag, off } => {
                let n = diag.len();
                (0..n)
                    .map(|i| {
                        let mut y = diag[i] * v[i];
                        if i > 0 {
                            y += off[i - 1] * v[i - 1];
                        }
                        if i + 1 < n {
                            y += off[i] * v[i + 1];
                        }
                        y
                    })
                    .collect()
            }
            Self::Dense(a) => a
                .iter()
                .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
                .collect(),
        }
    }
}

/// Builds the chain Hamiltonian: hopping on the off-diagonals (plus corner
/// entries for periodic chains) and seeded uniform disorder on the diagonal.
pub fn build_model(cfg: &LatticeModel) -> Result<Hamiltonian> {
    cfg.validate()?;
    let n = cfg.n_sites;
    let mut rng = rng_from(cfg.seed);
    let w = cfg.disorder_strength;
    let diag: Vec<f64> = (0..n)
        .map(|_| w * (2.0 * rng.random::<f64>() - 1.0))
        .collect();
    match cfg.boundary {
        Boundary::Open => Ok(Hamiltonian::Tridiagonal {
            diag,
            off: vec![cfg.hopping; n - 1],
        }),
        Boundary::Periodic => {
            let mut a = vec![vec![0.0; n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = diag[i];
            }
            for i in 0..n - 1 {
                a[i][i + 1] = cfg.hopping;
                a[i + 1][i] = cfg.hopping;
            }
            a[0][n - 1] = cfg.hopping;
            a[n - 1][0] = cfg.hopping;
            Hamiltonian::dense(a)
        }
    }
}

/// Full spectrum with orthonormal eigenvectors, energies ascending.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub energies: Vec<f64>,
    pub states: Vec<QuantumState>,
}

/// Diagonalizes a real symmetric Hamiltonian; every returned pair satisfies
/// `‖Hv − Ev‖ ≤` [`RESIDUAL_TOL`] (checked, error otherwise) and the
/// accumulated rotations keep the eigenvectors orthonormal.
pub fn eigensolve(h: &Hamiltonian) -> Result<EigenSystem> {
    let n = h.dim();
    let mut d;
    let mut v;
    match h {
        Hamiltonian::Tridiagonal { diag, off } => {
            d = diag.clone();
            let mut e = off.clone();
            e.push(0.0);
            v = (0..n)
                .map(|i| {
                    let mut row = vec![0.0; n];
                    row[i] = 1.0;
                    row
                })
                .collect::<Vec<_>>();
            tql2(&mut d, &mut e, &mut v)?;
        }
        Hamiltonian::Dense(a) => {
            v = a.clone();
            d = vec![0.0; n];
            let mut e = vec![0.0; n];
            tred2(&mut v, &mut d, &mut e);
            tql2(&mut d, &mut e, &mut v)?;
        }
    }

    // ascending energies, ties broken by original index (stable sort)
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));

    let mut energies = Vec::with_capacity(n);
    let mut states = Vec::with_capacity(n);
    for &j in &order {
        let vec_j: Vec<f64> = (0..n).map(|i| v[i][j]).collect();
        let hv = h.matvec(&vec_j);
        let residual: f64 = hv
            .iter()
            .zip(&vec_j)
            .map(|(hx, x)| (hx - d[j] * x).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual > RESIDUAL_TOL {
            return Err(Error::NoConvergence(format!(
                "residual {residual:e} for eigenvalue {} exceeds {RESIDUAL_TOL:e}",
                d[j]
            )));
        }
        energies.push(d[j]);
        states.push(QuantumState::from_real(&vec_j)?);
    }
    Ok(EigenSystem { energies, states })
}

/// Localization measures of one state: effective fractions for the default
/// alpha grid, participation fraction and exponentiated-entropy fraction.
pub fn state_measures(psi: &QuantumState) -> MeasureReport {
    let n = psi.dim();
    let p = crate::weights::ProbabilityVector::new(psi.probabilities())
        .expect("state probabilities sum to 1 within tolerance");
    let w = p.to_counting();
    let mut report = MeasureReport::new(n);
    let star = CountingFunctionSpec::minimal_star();
    report.insert("f_star", effective_fraction(&star, &p));
    for &alpha in DEFAULT_ALPHA_GRID.iter().filter(|&&a| a != 1.0) {
        let spec = CountingFunctionSpec::alpha(alpha).expect("grid alphas are valid");
        report.insert(format!("f_alpha:{alpha}"), effective_fraction(&spec, &p));
    }
    report.insert(
        "participation_fraction",
        participation_number(&w) / n as f64,
    );
    report.insert("exp_shannon_fraction", exp_shannon(&w) / n as f64);
    report
}

/// Which eigenstate a scaling study tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandSelector {
    Ground,
    /// Eigenindex ⌈N/2⌉ (1-based) after the ascending energy sort.
    MidBand,
}

impl BandSelector {
    pub fn label(&self) -> &'static str {
        match self {
            BandSelector::Ground => "ground",
            BandSelector::MidBand => "mid-band",
        }
    }

    fn index(&self, n: usize) -> usize {
        match self {
            BandSelector::Ground => 0,
            BandSelector::MidBand => n.div_ceil(2) - 1,
        }
    }
}

/// One measure's trace across chain sizes.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalingPoint {
    pub n_sites: usize,
    pub value: f64,
    pub stderr: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingCurve {
    pub measure: String,
    pub disorder_strength: f64,
    pub ensemble: usize,
    pub points: Vec<ScalingPoint>,
}

/// Ensemble-averaged localization measures across chain sizes.
///
/// For each size, `ensemble` disorder realizations are solved (realization
/// `r` uses seed `base.seed + r`) and the selected eigenstate's measures are
/// averaged. Realizations may run in parallel; the reduction happens in
/// realization-index order, so results are bitwise reproducible.
pub fn scaling_study(
    base: &LatticeModel,
    sizes: &[usize],
    ensemble: usize,
    band: BandSelector,
) -> Result<Vec<ScalingCurve>> {
    if sizes.is_empty() {
        return Err(Error::InvalidArgument("no sizes given".into()));
    }
    if !sizes.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::InvalidArgument(
            "sizes must be strictly increasing".into(),
        ));
    }
    if ensemble < 1 {
        return Err(Error::InvalidArgument("ensemble must be >= 1".into()));
    }
    LatticeModel {
        n_sites: sizes[0],
        ..base.clone()
    }
    .validate()?;

    let mut curves: Vec<ScalingCurve> = Vec::new();
    for &size in sizes {
        let reports: Vec<Result<MeasureReport>> = batch::map_indexed(ensemble, |r| {
            let cfg = LatticeModel {
                n_sites: size,
                seed: base.seed.wrapping_add(r as u64),
                ..base.clone()
            };
            let h = build_model(&cfg)?;
            let system = eigensolve(&h)?;
            Ok(state_measures(&system.states[band.index(size)]))
        });

        let mut sums: Vec<(String, f64, f64)> = Vec::new(); // (measure, sum, sum of squares)
        for report in reports {
            let report = report?;
            if sums.is_empty() {
                sums = report
                    .iter()
                    .map(|(k, _)| (k.to_string(), 0.0, 0.0))
                    .collect();
            }
            for (slot, (key, value)) in sums.iter_mut().zip(report.iter()) {
                debug_assert_eq!(slot.0, key);
                slot.1 += value;
                slot.2 += value * value;
            }
        }

        let m = ensemble as f64;
        for (measure, sum, sum_sq) in sums {
            let value = sum / m;
            let stderr = if ensemble > 1 {
                ((sum_sq - sum * sum / m).max(0.0) / (m - 1.0) / m).sqrt()
            } else {
                0.0
            };
            let point = ScalingPoint {
                n_sites: size,
                value,
                stderr,
            };
            match curves.iter_mut().find(|c| c.measure == measure) {
                Some(curve) => curve.points.push(point),
                None => curves.push(ScalingCurve {
                    measure,
                    disorder_strength: base.disorder_strength,
                    ensemble,
                    points: vec![point],
                }),
            }
        }
    }
    Ok(curves)
}
