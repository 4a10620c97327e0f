#![allow(dead_code)]

pub mod snf_oracle;

use std::sync::Arc;

use hilden_core::catalog::hilden_generators;
use hilden_core::{GeneratorName, GeneratorWord, SurfaceConfig};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn cfg(g: usize, n: usize) -> Arc<SurfaceConfig> {
    Arc::new(SurfaceConfig::with_arcs(g, n))
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut StdRng, pool: &[GeneratorName], max_len: usize) -> GeneratorWord {
    if pool.is_empty() {
        return GeneratorWord::empty();
    }
    let len = rng.gen_range(0..=max_len);
    let factors = (0..len).map(|_| (*pool.choose(rng).unwrap(), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    GeneratorWord::from_factors(factors)
}

/// Generators fixing every puncture.
pub fn pure_generators(g: usize, n: usize) -> Vec<GeneratorName> {
    hilden_generators(g, n)
        .into_iter()
        .filter(|x| !matches!(x, GeneratorName::Interval(_) | GeneratorName::Exchange(_)))
        .collect()
}

pub fn handle_twists(g: usize) -> Vec<GeneratorName> {
    (1..=g).flat_map(|j| [GeneratorName::HandleTwistU(j), GeneratorName::HandleTwistV(j)]).collect()
}
