//! Fixed benchmark inputs, shared so that every bench run sees the same
//! instances.

use tfp_core::{gen_planted_yes, gen_random, GenSpec, Tournament};

/// Uniform instances of size `n` with in-degree `k`, seeds `0..count`.
pub fn random_instances(n: usize, k: usize, count: u64) -> Vec<Tournament> {
    (0..count)
        .map(|seed| gen_random(&GenSpec::random(n, k, seed)).expect("valid spec"))
        .collect()
}

/// Planted yes-instances of size `n` with in-degree `k`, seeds `0..count`.
pub fn planted_instances(n: usize, k: usize, count: u64) -> Vec<Tournament> {
    (0..count)
        .map(|seed| {
            gen_planted_yes(&GenSpec::planted(n, k, seed))
                .expect("valid spec")
                .tournament
        })
        .collect()
}
