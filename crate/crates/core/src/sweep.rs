//! Deterministic sweep engine and samplers.
//!
//! Every randomized check derives its inputs from `(seed, stream)` alone, so
//! a sweep produces identical results whether trials run sequentially or in
//! parallel, and results are independent of which other suites ran. With the
//! `parallel` feature (default) trials fan out over rayon; without it the
//! same sweeps run sequentially.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::finsler::Momentum9;
use crate::scalar::{rat, Rational};

/// splitmix64-style mixing for deriving independent sub-seeds.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The RNG for one trial: same `(seed, stream)`, same draws, regardless of
/// execution order.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Run `check` over trial indices `0..trials`, collecting reported items in
/// trial order. Sequential reference implementation.
pub fn sweep_sequential<T, F>(trials: u64, check: F) -> Vec<T>
where
    F: Fn(u64) -> Option<T>,
{
    (0..trials).filter_map(check).collect()
}

/// Parallel sweep; the collected order still matches trial order because the
/// indexed collect preserves it.
#[cfg(feature = "parallel")]
pub fn sweep_parallel<T, F>(trials: u64, check: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    (0..trials)
        .into_par_iter()
        .map(check)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Feature-dispatched sweep: parallel when built with the `parallel`
/// feature, sequential otherwise. Output is identical either way.
#[cfg(feature = "parallel")]
pub fn sweep<T, F>(trials: u64, check: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    sweep_parallel(trials, check)
}

#[cfg(not(feature = "parallel"))]
pub fn sweep<T, F>(trials: u64, check: F) -> Vec<T>
where
    F: Fn(u64) -> Option<T>,
{
    sweep_sequential(trials, check)
}

/// Integer 9-momentum with entries in [-9, 9].
pub fn random_int_momentum(rng: &mut impl Rng) -> Momentum9 {
    Momentum9::from_ints(std::array::from_fn(|_| rng.gen_range(-9..=9)))
}

/// Rational with numerator in [-9, 9] and denominator in [1, 9].
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

/// Rational 4-vector built from [`random_rational`].
pub fn random_rational4(rng: &mut impl Rng) -> [Rational; 4] {
    std::array::from_fn(|_| random_rational(rng))
}
