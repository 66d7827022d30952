//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p effnum --test acceptance -- --nocapture` to see
//! the per-criterion lines. The CLI determinism criterion lives in the CLI
//! crate's own acceptance suite.

use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;

use effnum::axioms::{
    check_additivity, check_continuity_probe, check_range_interval, run_verdict_suite, TrialConfig,
    TOL_AXIOM,
};
use effnum::counting::{co_enf_value, participation_number};
use effnum::measure::{ExpShannonMeasure, Measure, ParticipationMeasure, SeparableMeasure};
use effnum::quantum::{
    check_completion_independence, count_identities, count_subspaces, inner, OrthonormalSet,
    QuantumState, SubspacePartition,
};
use effnum::sample::{random_counting_vector, rng_for, std_normal};
use effnum::weights::CountingVector;
use effnum::{extract_counting_function, CountingFunctionSpec};

fn report(name: &str, ok: bool, details: &str) {
    println!("[{}] {name}: {details}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {details}");
}

fn enf_specs() -> Vec<CountingFunctionSpec> {
    vec![
        CountingFunctionSpec::minimal_star(),
        CountingFunctionSpec::alpha(0.25).unwrap(),
        CountingFunctionSpec::alpha(0.5).unwrap(),
        CountingFunctionSpec::alpha(0.75).unwrap(),
        CountingFunctionSpec::alpha(1.0).unwrap(),
    ]
}

/// All eight verdicts pass for the minimal count and the alpha family at
/// full trial volume, within the runtime budget.
#[test]
fn criterion_axiom_suite() {
    assert_eq!(TOL_AXIOM, 1e-8);
    let cfg = TrialConfig::default(); // seed 42, trials 10^4, max_dim 64
    assert_eq!(cfg.trials, 10_000);
    assert_eq!(cfg.max_dim, 64);

    let start = Instant::now();
    let mut failures = Vec::new();
    for spec in enf_specs() {
        let m = SeparableMeasure::new(spec);
        for verdict in run_verdict_suite(&m, &cfg) {
            if !verdict.passed {
                failures.push(format!(
                    "{} failed {} (witness: {:?})",
                    m.name(),
                    verdict.axiom,
                    verdict.witness
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed.as_secs_f64() < 60.0;
    report(
        "axiom-suite",
        ok,
        &format!(
            "5 measures x 8 verdicts, 10^4 trials, max_dim 64 in {:.2}s (budget 60s){}",
            elapsed.as_secs_f64(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}

/// The known non-members fail for the documented reasons, with the
/// documented counterexamples.
#[test]
fn criterion_counterexamples() {
    let cfg = TrialConfig::default();

    // participation number: exact hand witness (2,0) ⊞ (1)
    let w12 = CountingVector::new(vec![2.0, 0.0, 1.0]).unwrap();
    let w1 = CountingVector::new(vec![2.0, 0.0]).unwrap();
    let w2 = CountingVector::new(vec![1.0]).unwrap();
    let joined = participation_number(&w12);
    let parts = participation_number(&w1) + participation_number(&w2);
    let violation = (joined - parts).abs();
    let witness_ok = (joined - 1.8).abs() < 1e-12
        && (parts - 2.0).abs() < 1e-12
        && (violation - 0.2).abs() < 1e-12;
    let participation_fails = !check_additivity(&ParticipationMeasure, &cfg).passed;

    // exponentiated Shannon entropy: some random pair within 10^3 trials
    let small = TrialConfig {
        trials: 1000,
        ..cfg.clone()
    };
    let exp_shannon_fails = !check_additivity(&ExpShannonMeasure, &small).passed;

    // support counter: collapse probe at delta = 1e-6
    let delta = 1e-6;
    let n_plus = SeparableMeasure::n_plus();
    let before = n_plus
        .eval(&CountingVector::new(vec![delta, 2.0 - delta]).unwrap())
        .unwrap();
    let after = n_plus
        .eval(&CountingVector::new(vec![0.0, 2.0]).unwrap())
        .unwrap();
    let jump = (before - after).abs();
    let probe_cfg = TrialConfig {
        continuity_delta: delta,
        ..cfg
    };
    let verdict = check_continuity_probe(&n_plus, &probe_cfg);
    let n_plus_fails =
        !verdict.passed && verdict.witness.as_ref().map_or(0.0, |w| w.violation) >= 1.0 - 1e-6;

    let ok = witness_ok
        && participation_fails
        && exp_shannon_fails
        && n_plus_fails
        && jump >= 1.0 - 1e-6;
    report(
        "counterexamples",
        ok,
        &format!(
            "participation witness 1.8 vs 2.0 (violation {violation:.12}); \
             exp_shannon additivity failed within 10^3 trials: {exp_shannon_fails}; \
             support-counter jump {jump} at delta 1e-6"
        ),
    );
}

/// Sandwich bound and attainable range: the alpha sweep stays inside
/// [minimal, support], is monotone, anchors at the minimal count at alpha=1,
/// and approaches the support count at alpha=1e-4 (relative tolerance; see
/// the printed worst deviations).
#[test]
fn criterion_sandwich_and_range() {
    // log grid on [1e-4, 1] with exact endpoints
    let mut grid: Vec<f64> = (0..=24)
        .map(|i| 10f64.powf(-4.0 + i as f64 / 6.0))
        .collect();
    grid[0] = 1e-4;
    *grid.last_mut().unwrap() = 1.0;
    let cfg = TrialConfig {
        alpha_grid: grid,
        ..TrialConfig::default()
    };
    let star = CountingFunctionSpec::minimal_star();

    let mut worst_low: f64 = 0.0; // sandwich undershoot
    let mut worst_high: f64 = 0.0; // sandwich overshoot
    let mut worst_anchor: f64 = 0.0; // |v(1) − minimal|
    let mut worst_tail_abs: f64 = 0.0; // support − v(1e-4)
    let mut worst_tail_rel: f64 = 0.0;
    let mut exact_cases = 0u32;

    for idx in 0..10_000u64 {
        let mut rng = rng_for(42, 31, idx);
        let dim = rng.random_range(1..=64);
        let w = random_counting_vector(&mut rng, dim);
        let lo = star.sum_over(w.weights());
        let hi = w.weights().iter().filter(|&&x| x > 0.0).count() as f64;

        // monotonicity and the alpha=1 anchor are enforced inside
        let sweep = check_range_interval(&w, &cfg).unwrap();

        for &(_, v) in &sweep.points {
            worst_low = worst_low.max(lo - v);
            worst_high = worst_high.max(v - hi);
        }
        if w.weights().iter().all(|&x| !(0.0 < x && x < 1.0)) {
            assert_eq!(sweep.lo, sweep.hi, "degenerate sweep must be constant");
            assert_eq!(sweep.lo, lo);
            assert_eq!(sweep.hi, hi);
            exact_cases += 1;
        } else {
            worst_anchor = worst_anchor.max((sweep.lo - lo).abs());
            let tail = hi - sweep.hi;
            worst_tail_abs = worst_tail_abs.max(tail);
            worst_tail_rel = worst_tail_rel.max(tail / hi);
        }
    }

    let ok =
        worst_low <= 1e-9 && worst_high <= 1e-9 && worst_anchor <= 1e-6 && worst_tail_rel <= 1e-3;
    report(
        "sandwich-and-range",
        ok,
        &format!(
            "10^4 vectors, dim <= 64: sandwich slack ({worst_low:.2e}, {worst_high:.2e}); \
             alpha=1 anchor {worst_anchor:.2e} (tol 1e-6); \
             alpha=1e-4 endpoint gap {worst_tail_rel:.2e} of support (tol 1e-3; absolute {worst_tail_abs:.2e}); \
             {exact_cases} all-integer cases exact"
        ),
    );
}

/// Counting functions recovered from black-box evaluators match the family
/// at 101 grid points to 1e-9.
#[test]
fn criterion_separability_extraction() {
    let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
    let mut worst: f64 = 0.0;
    for alpha in [0.25, 0.5, 1.0] {
        let m = SeparableMeasure::alpha(alpha).unwrap();
        let extracted = extract_counting_function(|w| m.eval(w), &grid).unwrap();
        for &x in &grid {
            // direct formula, incl. 0^alpha = 0
            let expected = if x == 0.0 {
                0.0
            } else {
                x.powf(alpha).min(1.0)
            };
            worst = worst.max((extracted.eval(x) - expected).abs());
        }
    }
    report(
        "separability-extraction",
        worst <= 1e-9,
        &format!(
            "alpha in {{0.25, 0.5, 1.0}}, 101 grid points, worst residual {worst:.2e} (tol 1e-9)"
        ),
    );
}

/// Number plus co-number is the dimension, and the generating-function gauge
/// freedom K(1−w) moves nothing on counting vectors.
#[test]
fn criterion_duality_and_gauge() {
    let specs = enf_specs();
    let mut worst_dual: f64 = 0.0;
    let mut worst_gauge: f64 = 0.0;
    for idx in 0..10_000u64 {
        let mut rng = rng_for(42, 57, idx);
        let dim = rng.random_range(1..=64);
        let w = random_counting_vector(&mut rng, dim);
        let n = dim as f64;
        let mut sorted = w.weights().to_vec();
        sorted.sort_unstable_by(f64::total_cmp);
        for spec in &specs {
            let enf = spec.sum_over(w.weights());
            let co = co_enf_value(spec, &w);
            worst_dual = worst_dual.max((co + enf - n).abs());
            for k in [-10.0, 1.0, 7.0] {
                let shifted: f64 = sorted.iter().map(|&x| spec.eval(x) + k * (1.0 - x)).sum();
                worst_gauge = worst_gauge.max((shifted - enf).abs());
            }
        }
    }
    let ok = worst_dual <= 1e-9 && worst_gauge <= 1e-8;
    report(
        "duality-and-gauge",
        ok,
        &format!(
            "10^4 vectors x 5 counting functions: worst |N − (enf + co)| = {worst_dual:.2e} (tol 1e-9), \
             worst gauge shift {worst_gauge:.2e} over K in {{-10, 1, 7}} (tol 1e-8)"
        ),
    );
}

fn random_state(rng: &mut impl Rng, n: usize) -> QuantumState {
    let amps: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(std_normal(rng), std_normal(rng)))
        .collect();
    QuantumState::renormalized(amps).unwrap()
}

/// Gram-Schmidt (two passes) of `count` random combinations of `span`;
/// passing the standard basis as `span` yields a random basis of the space.
fn random_orthonormal_in_span(
    rng: &mut impl Rng,
    span: &[Vec<Complex64>],
    count: usize,
) -> Vec<Vec<Complex64>> {
    let n = span[0].len();
    let mut out: Vec<Vec<Complex64>> = Vec::with_capacity(count);
    while out.len() < count {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for basis_vec in span {
            let c = Complex64::new(std_normal(rng), std_normal(rng));
            for (vi, bi) in v.iter_mut().zip(basis_vec) {
                *vi += c * bi;
            }
        }
        for _ in 0..2 {
            for u in &out {
                let c = inner(u, &v);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= c * ui;
                }
            }
        }
        let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            for x in &mut v {
                *x /= norm;
            }
            out.push(v);
        }
    }
    out
}

/// Completion independence on random draws, and coarse-graining consistency
/// of singleton partitions.
#[test]
fn criterion_quantum_counting() {
    let star = CountingFunctionSpec::minimal_star();
    let half = CountingFunctionSpec::alpha(0.5).unwrap();
    let mut singleton_worst: f64 = 0.0;
    let mut all_independent = true;

    for idx in 0..1_000u64 {
        let mut rng = rng_for(42, 73, idx);
        let n = rng.random_range(2..=16);
        let psi = random_state(&mut rng, n);

        let standard: Vec<Vec<Complex64>> = OrthonormalSet::standard_basis(n).vectors().to_vec();
        let basis = random_orthonormal_in_span(&mut rng, &standard, n);
        let k = rng.random_range(1..n);
        let subset = OrthonormalSet::new(basis[..k].to_vec(), n).unwrap();
        let comp_a = OrthonormalSet::new(basis[k..].to_vec(), n).unwrap();
        let rotated = random_orthonormal_in_span(&mut rng, &basis[k..], n - k);
        let comp_b = OrthonormalSet::new(rotated, n).unwrap();

        let f = if idx % 2 == 0 { &star } else { &half };
        all_independent &=
            check_completion_independence(&psi, &subset, &comp_a, &comp_b, f).unwrap();

        let singles =
            SubspacePartition::from_index_blocks(n, (0..n).map(|i| vec![i]).collect()).unwrap();
        let via_partition = count_subspaces(&psi, &singles, f).unwrap();
        let via_basis = count_identities(&psi, f);
        singleton_worst = singleton_worst.max((via_partition - via_basis).abs());
    }

    let ok = all_independent && singleton_worst <= 1e-9;
    report(
        "quantum-counting",
        ok,
        &format!(
            "10^3 draws at N <= 16: completion independence {all_independent}; \
             singleton-partition vs basis worst gap {singleton_worst:.2e} (tol 1e-9)"
        ),
    );
}

/// Clean-chain ground states sit at the analytic effective fraction;
/// disordered mid-band states localize, so their fraction falls with size.
#[test]
fn criterion_localization_lab() {
    use effnum::lattice::{scaling_study, BandSelector, LatticeModel};

    let start = Instant::now();
    let oracle = 1.0 - 1.0 / std::f64::consts::PI;

    let clean = LatticeModel::new(2);
    let curves = scaling_study(&clean, &[64, 128, 256], 1, BandSelector::Ground).unwrap();
    let f_clean = curves.iter().find(|c| c.measure == "f_star").unwrap();
    let clean_vals: Vec<f64> = f_clean.points.iter().map(|p| p.value).collect();
    let clean_ok = clean_vals.iter().all(|v| (v - oracle).abs() < 0.02);

    let disordered = LatticeModel {
        disorder_strength: 5.0,
        seed: 42,
        ..LatticeModel::new(2)
    };
    let curves =
        scaling_study(&disordered, &[64, 128, 256, 512], 32, BandSelector::MidBand).unwrap();
    let f_dis = curves.iter().find(|c| c.measure == "f_star").unwrap();
    let dis_vals: Vec<f64> = f_dis.points.iter().map(|p| p.value).collect();
    let decreasing_ok = dis_vals.windows(2).all(|p| p[1] < p[0]);

    let elapsed = start.elapsed();
    let ok = clean_ok && decreasing_ok && elapsed.as_secs_f64() < 120.0;
    report(
        "localization-lab",
        ok,
        &format!(
            "clean ground f_star {clean_vals:.6?} vs {oracle:.6} (tol 0.02); \
             disorder 5 mid-band f_star {dis_vals:.6?} strictly decreasing: {decreasing_ok}; \
             {:.1}s (budget 120s)",
            elapsed.as_secs_f64()
        ),
    );
}

/// Library-level determinism backing the CLI criterion: seeded studies and
/// verdicts reproduce bitwise.
#[test]
fn criterion_library_determinism() {
    use effnum::lattice::{scaling_study, BandSelector, LatticeModel};

    let base = LatticeModel {
        disorder_strength: 3.0,
        seed: 7,
        ..LatticeModel::new(2)
    };
    let a = scaling_study(&base, &[32, 64], 4, BandSelector::MidBand).unwrap();
    let b = scaling_study(&base, &[32, 64], 4, BandSelector::MidBand).unwrap();
    let curves_equal = a == b;

    let cfg = TrialConfig {
        trials: 2000,
        max_dim: 32,
        ..TrialConfig::default()
    };
    let va = check_additivity(&ParticipationMeasure, &cfg);
    let vb = check_additivity(&ParticipationMeasure, &cfg);
    let (wa, wb) = (va.witness.unwrap(), vb.witness.unwrap());
    let verdicts_equal = wa.violation == wb.violation && wa.inputs == wb.inputs;

    let ok = curves_equal && verdicts_equal;
    report(
        "library-determinism",
        ok,
        &format!("scaling curves bitwise equal: {curves_equal}; verdict witnesses bitwise equal: {verdicts_equal}"),
    );
}
