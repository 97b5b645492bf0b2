//! Reproducible random words.
//!
//! Words are drawn from ChaCha8 seeded with `seed_from_u64(seed)`; symbol `k`
//! of a word is `gen_range(0..sigma)`. ChaCha8's output stream is fixed by the
//! algorithm, so a seed names the same word on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::word::{Symbol, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word_with(rng: &mut impl Rng, n: usize, sigma: u32) -> Word {
    assert!(sigma >= 1, "alphabet must be non-empty");
    Word::new((0..n).map(|_| rng.gen_range(0..sigma) as Symbol).collect())
}

/// The word named by `(n, sigma, seed)`.
pub fn random_word(n: usize, sigma: u32, seed: u64) -> Word {
    random_word_with(&mut rng(seed), n, sigma)
}

/// A word of random length in `1..=max_n`: the length is the first draw from
/// the seeded generator, the symbols follow.
pub fn random_trial(max_n: usize, sigma: u32, seed: u64) -> Word {
    assert!(max_n >= 1, "max_n must be positive");
    let mut g = rng(seed);
    let n = g.gen_range(1..=max_n);
    random_word_with(&mut g, n, sigma)
}
