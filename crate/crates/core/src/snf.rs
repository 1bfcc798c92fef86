//! Smith normal form: the gcd-Toda pipeline and two independent oracles.

use std::fmt;

use crate::bidiagonalize::{bidiagonalize, seed_state};
use crate::error::{Error, Result};
use crate::gcd_toda::{run, GcdTodaState};
use crate::matrix::{Block, DenseMatrix};
use crate::ring::{divides, exact_div, extended_gcd, Pid};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Toda,
    Classical,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Toda => "toda",
            Method::Classical => "classical",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SnfResult<R> {
    /// `min(rows, cols)` canonical invariant factors, each dividing the
    /// next; zeros trail for rank-deficient inputs.
    pub factors: Vec<R>,
    pub iterations: usize,
    pub method: Method,
    /// gcd-Toda states `X^(0), …, X^(t)` when a trace was requested.
    pub trace: Vec<GcdTodaState<R>>,
}

impl<R: Pid> SnfResult<R> {
    pub fn rank(&self) -> usize {
        self.factors.iter().take_while(|f| !f.is_zero()).count()
    }

    pub fn nonzero_factors(&self) -> &[R] {
        &self.factors[..self.rank()]
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SnfOptions {
    pub max_iters: Option<usize>,
    pub trace: bool,
}

/// Bidiagonalize, seed, and run the gcd-Toda lattice to termination.
pub fn smith_normal_form<R: Pid>(a: &DenseMatrix<R>, options: SnfOptions) -> Result<SnfResult<R>> {
    let form = bidiagonalize(a, false)?.form;
    let seed = seed_state(&form);
    let out = run(&seed, options.max_iters, options.trace)?;
    let size = a.rows().min(a.cols());
    let zero = a.witness().zero_like();
    let mut factors: Vec<R> = out.factors.into_iter().filter(|f| !f.is_zero()).collect();
    factors.resize(size, zero);
    Ok(SnfResult { factors, iterations: out.iterations, method: Method::Toda, trace: out.trace })
}

/// Textbook elimination: move a nonzero pivot to the corner, clear its row
/// and column with gcd rotations until both stay clear, and repair any
/// entry the pivot fails to divide by adding its row to the pivot row.
pub fn classical_snf<R: Pid>(a: &DenseMatrix<R>) -> SnfResult<R> {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let size = rows.min(cols);
    let mut factors = Vec::with_capacity(size);
    for t in 0..size {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !m.get(i, j).is_zero());
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        loop {
            clear_cross(&mut m, t);
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !divides(m.get(t, t), m.get(i, j)));
            match bad {
                Some((i, _)) => m.add_row(t, i),
                None => break,
            }
        }
        factors.push(m.get(t, t).canonical());
    }
    factors.resize(size, a.witness().zero_like());
    SnfResult { factors, iterations: 0, method: Method::Classical, trace: Vec::new() }
}

// Entries the pivot already divides are eliminated by subtraction; a gcd
// rotation there can merely permute equal-ideal rows and cycle forever.
fn clear_cross<R: Pid>(m: &mut DenseMatrix<R>, t: usize) {
    loop {
        let mut changed = false;
        for i in t + 1..m.rows() {
            if !m.get(i, t).is_zero() {
                m.rotate_rows(t, i, &clearing_block(m.get(t, t), m.get(i, t)));
                changed = true;
            }
        }
        for j in t + 1..m.cols() {
            if !m.get(t, j).is_zero() {
                m.rotate_cols(t, j, &clearing_block(m.get(t, t), m.get(t, j)));
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

fn clearing_block<R: Pid>(pivot: &R, entry: &R) -> Block<R> {
    match exact_div(entry, pivot) {
        Ok(c) => [[pivot.one_like(), -c], [pivot.zero_like(), pivot.one_like()]],
        Err(_) => {
            let bz = extended_gcd(pivot, entry).expect("pivot is nonzero");
            [[bz.p, bz.t], [bz.q, bz.s]]
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// The `k`-th determinantal divisor: canonical gcd of all `k×k` minors.
/// Combinatorial; meant for matrices up to about 6×6.
pub fn minors_gcd<R: Pid>(a: &DenseMatrix<R>, k: usize) -> Result<R> {
    let (rows, cols) = (a.rows(), a.cols());
    if k == 0 || k > rows.min(cols) {
        return Err(Error::MinorOutOfRange { k, rows, cols });
    }
    let row_sets = subsets(rows, k);
    let col_sets = subsets(cols, k);
    let mut g = a.witness().zero_like();
    for r in &row_sets {
        for c in &col_sets {
            g = g.gcd(&a.submatrix(r, c).determinant());
            if g.is_unit() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// Checks a claimed factor list against determinantal divisors:
/// `f_0 ⋯ f_{k−1} = d_k(A)` for each nonzero prefix, `d_{r+1}(A) = 0` past
/// the rank, and the divisibility chain.
pub fn verify<R: Pid>(a: &DenseMatrix<R>, result: &SnfResult<R>) -> bool {
    let f = &result.factors;
    if f.len() != a.rows().min(a.cols()) || !f.iter().all(Pid::is_canonical) {
        return false;
    }
    if !f.windows(2).all(|w| divides(&w[0], &w[1])) {
        return false;
    }
    let rank = result.rank();
    if f[rank..].iter().any(|v| !v.is_zero()) {
        return false;
    }
    let mut product = a.witness().one_like();
    for (k, factor) in f[..rank].iter().enumerate() {
        product = product * factor.clone();
        match minors_gcd(a, k + 1) {
            Ok(d) if d == product => {}
            _ => return false,
        }
    }
    rank == f.len() || minors_gcd(a, rank + 1).map(|d| d.is_zero()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyModP;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn int_matrix(rows: &[&[i64]]) -> DenseMatrix<BigInt> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| z(v)).collect()).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| z(x)).collect()
    }

    fn example() -> DenseMatrix<BigInt> {
        int_matrix(&[&[2, 0, 0], &[4, 6, 0], &[0, 3, 9]])
    }

    #[test]
    fn pipeline_on_example() {
        let r = smith_normal_form(&example(), SnfOptions::default()).unwrap();
        assert_eq!(r.factors, ints(&[1, 6, 18]));
        assert_eq!(r.iterations, 4);
        assert_eq!(r.method, Method::Toda);
        assert!(verify(&example(), &r));
    }

    #[test]
    fn identity_factors() {
        let id = DenseMatrix::identity(4, &z(0));
        assert_eq!(smith_normal_form(&id, SnfOptions::default()).unwrap().factors, ints(&[1, 1, 1, 1]));
        assert_eq!(classical_snf(&id).factors, ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_snf(&example()).factors, ints(&[1, 6, 18]));
        assert_eq!(classical_snf(&int_matrix(&[&[6, 0], &[0, 4]])).factors, ints(&[2, 12]));
        let padded = int_matrix(&[&[6, 0, 0], &[0, 4, 0], &[0, 0, 0]]);
        assert_eq!(classical_snf(&padded).factors, ints(&[2, 12, 0]));
        assert_eq!(classical_snf(&int_matrix(&[&[0, 0], &[0, 0]])).factors, ints(&[0, 0]));
    }

    #[test]
    fn minors_examples() {
        assert_eq!(minors_gcd(&example(), 2).unwrap(), z(6));
        assert_eq!(minors_gcd(&example(), 3).unwrap(), z(108));
        assert_eq!(minors_gcd(&int_matrix(&[&[4, -6], &[8, 10]]), 1).unwrap(), z(2));
        assert!(matches!(minors_gcd(&example(), 4), Err(Error::MinorOutOfRange { .. })));
        assert!(minors_gcd(&example(), 0).is_err());
    }

    #[test]
    fn verify_rejects_wrong_factors() {
        let wrong = SnfResult { factors: ints(&[1, 2, 54]), iterations: 0, method: Method::Toda, trace: vec![] };
        assert!(!verify(&example(), &wrong));
        let unchained = SnfResult { factors: ints(&[2, 3]), iterations: 0, method: Method::Toda, trace: vec![] };
        assert!(!verify(&int_matrix(&[&[2, 0], &[0, 3]]), &unchained));
        let id = DenseMatrix::identity(3, &z(0));
        let ones = SnfResult { factors: ints(&[1, 1, 1]), iterations: 0, method: Method::Toda, trace: vec![] };
        assert!(verify(&id, &ones));
        // rank must match: claiming a zero factor for an invertible matrix fails
        let short = SnfResult { factors: ints(&[1, 1, 0]), iterations: 0, method: Method::Toda, trace: vec![] };
        assert!(!verify(&id, &short));
    }

    #[test]
    fn rectangular_and_singular() {
        let a = int_matrix(&[&[2, 4, 6], &[1, 2, 3]]);
        let r = smith_normal_form(&a, SnfOptions::default()).unwrap();
        assert_eq!(r.factors, ints(&[1, 0]));
        assert_eq!(r.rank(), 1);
        assert_eq!(r.nonzero_factors(), &ints(&[1])[..]);
        assert!(verify(&a, &r));
        assert_eq!(classical_snf(&a).factors, r.factors);
    }

    #[test]
    fn zero_matrix_is_an_error_for_toda() {
        let a = int_matrix(&[&[0, 0]]);
        assert!(matches!(smith_normal_form(&a, SnfOptions::default()), Err(Error::ZeroMatrix)));
    }

    #[test]
    fn polynomial_matrix() {
        let p = |c: &[i64]| PolyModP::new(3, c).unwrap();
        // [[x, x+1], [x^2, 1]] over F_3
        let a = DenseMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[1, 1])], vec![p(&[0, 0, 1]), p(&[1])]]).unwrap();
        let r = smith_normal_form(&a, SnfOptions::default()).unwrap();
        assert_eq!(r.factors, classical_snf(&a).factors);
        assert!(verify(&a, &r));
        assert_eq!(r.factors[0], p(&[1]));
        assert_eq!(r.factors[1], a.determinant().canonical());
    }

    #[test]
    fn classical_terminates_when_unit_pivot_meets_equal_entries() {
        let p = |c: &[i64]| PolyModP::new(3, c).unwrap();
        let o = || p(&[]);
        let a = DenseMatrix::from_rows(vec![
            vec![p(&[0, 1]), o(), o(), o()],
            vec![p(&[2, 2, 2, 1]), p(&[1, 0, 2]), o(), o()],
            vec![o(), p(&[2]), p(&[1]), o()],
            vec![o(), o(), p(&[2]), p(&[1, 1])],
        ])
        .unwrap();
        let r = classical_snf(&a);
        assert!(verify(&a, &r));
        assert_eq!(r.factors, smith_normal_form(&a, SnfOptions::default()).unwrap().factors);
    }

    fn dense(max_n: usize, bound: i64) -> impl Strategy<Value = DenseMatrix<BigInt>> {
        (1..=max_n, 1..=max_n).prop_flat_map(move |(m, n)| {
            prop::collection::vec(prop_oneof![1 => Just(0i64), 3 => -bound..=bound], m * n)
                .prop_map(move |v| DenseMatrix::new(m, n, v.into_iter().map(BigInt::from).collect()).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn methods_agree_and_verify(a in dense(4, 30)) {
            prop_assume!(!a.is_zero());
            let toda = smith_normal_form(&a, SnfOptions::default()).unwrap();
            let classical = classical_snf(&a);
            prop_assert_eq!(&toda.factors, &classical.factors);
            prop_assert!(verify(&a, &toda));
            if a.is_square() && !a.determinant().is_zero() {
                let product = toda.factors.iter().fold(z(1), |acc, f| acc * f);
                prop_assert_eq!(product, a.determinant().canonical());
            }
        }
    }
}
