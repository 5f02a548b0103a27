//! Seeded random matrices over prime fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yb_core::matrix::Matrix;
use yb_core::scalar::{Field, Scalar};

/// Draws uniform `n × n` matrices over `GF(p)` from a ChaCha8 stream seeded
/// with `seed` until one is invertible.
pub fn seeded_invertible(p: u64, n: usize, seed: u64) -> Matrix {
    let field = Field::gf(p).expect("prime modulus");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|_| (0..n).map(|_| Scalar::from_int(field, rng.gen_range(0..p) as i64)).collect())
            .collect();
        let m = Matrix::from_rows(field, rows).expect("square");
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_invertible() {
        let a = seeded_invertible(7, 4, 3);
        assert_eq!(a, seeded_invertible(7, 4, 3));
        assert!(a.is_invertible());
        assert_ne!(a, seeded_invertible(7, 4, 4));
    }
}
