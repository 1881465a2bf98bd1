//! Fixtures shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use redrep::{Matrix, PChar, RootDatum, Weight};

/// A seeded uniformly random matrix over GF(p).
pub fn random_matrix(rows: usize, cols: usize, p: u32, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(rows, cols, p, |_, _| rng.gen_range(0..p))
}

/// `(datum, χ, λ)` for sl_3 at p = 3 with the given character.
pub fn sl3_case(subregular: bool, lambda: [i64; 2]) -> (RootDatum, PChar, Weight) {
    let chi = if subregular { PChar::subregular(3, 3) } else { PChar::regular(3, 3) };
    (RootDatum::sl(3, 3).expect("valid datum"), chi.expect("valid character"), Weight::cartan(&lambda, 3))
}
