//! Random inputs shared by the benchmarks.

use gcdtoda_core::{BigInt, DenseMatrix, GcdTodaState};
use rand::Rng;

pub fn random_seed<G: Rng>(rng: &mut G, n: usize, bound: i64) -> GcdTodaState<BigInt> {
    let mut nonzero = || loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return BigInt::from(v);
        }
    };
    let q = (0..n).map(|_| nonzero()).collect();
    let e = (0..n - 1).map(|_| nonzero()).collect();
    GcdTodaState::new(q, e).expect("integer entries share a ring")
}

pub fn random_dense<G: Rng>(rng: &mut G, n: usize, bound: i64) -> DenseMatrix<BigInt> {
    let data = (0..n * n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    DenseMatrix::new(n, n, data).expect("shape matches")
}
