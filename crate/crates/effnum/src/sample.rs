//! Seedable sampling shared by the verifier, quantum, and lattice modules.
//!
//! All randomness flows through ChaCha8 seeded from 64-bit values, so every
//! run is reproducible across platforms; [`RNG_ALGORITHM`] names the generator
//! for output metadata.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::weights::CountingVector;

/// Identifier of the generator recorded in run manifests.
pub const RNG_ALGORITHM: &str = "chacha8";

/// SplitMix64 step, used to decorrelate (seed, salt, index) triples before
/// seeding per-trial generators.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent generator for trial `index` of the stream `(seed, salt)`.
pub fn rng_for(seed: u64, salt: u64, index: u64) -> ChaCha8Rng {
    let stream = splitmix64(seed ^ splitmix64(salt));
    ChaCha8Rng::seed_from_u64(splitmix64(stream ^ index))
}

/// Plain seeded generator.
pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard exponential sample, strictly in `(0, ∞)` almost surely.
pub fn exp1(rng: &mut impl Rng) -> f64 {
    let u: f64 = rng.random();
    -(1.0 - u).ln()
}

/// Standard normal via Box-Muller.
pub fn std_normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.random();
    let u2: f64 = rng.random();
    let r = (-2.0 * (1.0 - u1).ln()).sqrt();
    r * (std::f64::consts::TAU * u2).cos()
}

/// Random counting vector of the given dimension: exponential(1) samples
/// normalized to sum `N`, i.e. uniform on the counting simplex.
pub fn random_counting_vector(rng: &mut impl Rng, dim: usize) -> CountingVector {
    assert!(dim >= 1, "dimension must be at least 1");
    loop {
        let raw: Vec<f64> = (0..dim).map(|_| exp1(rng)).collect();
        let total: f64 = raw.iter().sum();
        if total > 0.0 {
            let n = dim as f64;
            let weights = raw.iter().map(|e| n * e / total).collect();
            return CountingVector::new(weights)
                .expect("normalized exponential samples form a counting vector");
        }
    }
}
