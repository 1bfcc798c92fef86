//! Unimodular reduction of a dense matrix to a gcd-Toda seed.
//!
//! Level by level: make the pivot row nonzero, clear it right of the
//! diagonal with gcd rotations on columns, make the subdiagonal entry
//! nonzero, then clear the pivot column below it with gcd rotations on rows.
//! The result is lower bidiagonal with a nonzero prefix of the diagonal and
//! subdiagonal and at most one trailing subdiagonal corner.

use crate::error::{Error, Result};
use crate::gcd_toda::GcdTodaState;
use crate::matrix::{Block, DenseMatrix};
use crate::ring::{extended_gcd, Pid};

/// The 2×2 block `((p, t), (q, s))` built from the Bézout data of `(a, b)`.
/// It has determinant one and sends the row vector `(a, b)` to `(gcd, 0)`.
pub fn gcd_rotation<R: Pid>(a: &R, b: &R) -> Result<Block<R>> {
    let bz = extended_gcd(a, b)?;
    Ok([[bz.p, bz.t], [bz.q, bz.s]])
}

/// Lower-bidiagonal `B` with `b_{ii} ≠ 0` for `i < k`, `b_{i+1,i} ≠ 0` for
/// `i + 1 < k`, and nothing else nonzero except possibly `b_{k,k−1}`
/// (zero-based), which is flagged by `corner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidiagonalForm<R> {
    pub matrix: DenseMatrix<R>,
    pub k: usize,
    pub corner: bool,
}

impl<R: Pid> BidiagonalForm<R> {
    /// Checks the structural invariants; returns a description of the first
    /// violation.
    pub fn check(&self) -> std::result::Result<(), String> {
        let b = &self.matrix;
        if !b.is_square() || !b.is_lower_bidiagonal() {
            return Err("not square lower bidiagonal".into());
        }
        let n = b.rows();
        for i in 0..n {
            let diag_nonzero = !b.get(i, i).is_zero();
            if diag_nonzero != (i < self.k) {
                return Err(format!("diagonal entry {i} breaks the nonzero prefix of length {}", self.k));
            }
            if i + 1 < n {
                let sub_nonzero = !b.get(i + 1, i).is_zero();
                let expected = i + 1 < self.k || (i + 1 == self.k && self.corner);
                if sub_nonzero != expected {
                    return Err(format!("subdiagonal entry {i} has unexpected support"));
                }
            }
        }
        if self.corner && self.k == n {
            return Err("corner flag set on a full-rank diagonal".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Bidiagonalization<R> {
    pub form: BidiagonalForm<R>,
    /// Row transform `P` with `B = P·A'·Q`, `A'` the zero-padded square input.
    pub left: Option<DenseMatrix<R>>,
    pub right: Option<DenseMatrix<R>>,
}

struct Reducer<R> {
    a: DenseMatrix<R>,
    left: Option<DenseMatrix<R>>,
    right: Option<DenseMatrix<R>>,
}

impl<R: Pid> Reducer<R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(p) = &mut self.left {
            p.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(q) = &mut self.right {
            q.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize) {
        self.a.add_row(dst, src);
        if let Some(p) = &mut self.left {
            p.add_row(dst, src);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize) {
        self.a.add_col(dst, src);
        if let Some(q) = &mut self.right {
            q.add_col(dst, src);
        }
    }

    fn rotate_cols(&mut self, i: usize, j: usize, block: &Block<R>) {
        self.a.rotate_cols(i, j, block);
        if let Some(q) = &mut self.right {
            q.rotate_cols(i, j, block);
        }
    }

    fn rotate_rows(&mut self, i: usize, j: usize, block: &Block<R>) {
        self.a.rotate_rows(i, j, block);
        if let Some(p) = &mut self.left {
            p.rotate_rows(i, j, block);
        }
    }

    fn nonzero_in(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
        rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
            .find(|&(i, j)| !self.a.get(i, j).is_zero())
    }

    /// Reduces level `r`, assuming rows/columns before `r` are already in
    /// final shape. Returns false when the trailing block is zero.
    fn level(&mut self, r: usize) -> Result<bool> {
        let n = self.a.rows();
        let Some((row, _)) = self.nonzero_in(r..n, r..n) else {
            return Ok(false);
        };
        // Pivot row must be nonzero right of the diagonal. Rows below r are
        // zero in column r-1, so adding one leaves the subdiagonal alone.
        if self.nonzero_in(r..r + 1, r..n).is_none() {
            self.add_row(r, row);
        }
        let (_, col) = self.nonzero_in(r..r + 1, r..n).expect("pivot row is nonzero");
        self.swap_cols(r, col);

        for j in r + 1..n {
            if !self.a.get(r, j).is_zero() {
                let block = gcd_rotation(self.a.get(r, r), self.a.get(r, j))?;
                self.rotate_cols(r, j, &block);
            }
        }
        if r + 1 == n {
            return Ok(true);
        }

        // Make b_{r+1,r} nonzero using only rows/columns beyond the pivot.
        let Some((_, _)) = self.nonzero_in(r + 1..n, r..n) else {
            return Ok(true);
        };
        if self.nonzero_in(r + 1..n, r..r + 1).is_none() {
            let (_, c) = self.nonzero_in(r + 1..n, r + 1..n).expect("trailing block is nonzero");
            // row r is zero at column c, so it is unaffected
            self.add_col(r, c);
        }
        let (i, _) = self.nonzero_in(r + 1..n, r..r + 1).expect("column r is nonzero below the pivot");
        self.swap_rows(r + 1, i);

        for i in r + 2..n {
            if !self.a.get(i, r).is_zero() {
                let block = gcd_rotation(self.a.get(r + 1, r), self.a.get(i, r))?;
                self.rotate_rows(r + 1, i, &block);
            }
        }
        Ok(true)
    }
}

/// Reduces `a` (zero-padded to square) to a [`BidiagonalForm`] by
/// determinant-±1 row and column operations. With `track` set, also returns
/// the accumulated transforms.
pub fn bidiagonalize<R: Pid>(a: &DenseMatrix<R>, track: bool) -> Result<Bidiagonalization<R>> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let square = a.padded_square();
    let n = square.rows();
    let witness = square.witness().clone();
    let mut reducer = Reducer {
        a: square,
        left: track.then(|| DenseMatrix::identity(n, &witness)),
        right: track.then(|| DenseMatrix::identity(n, &witness)),
    };
    let mut k = 0;
    while k < n && reducer.level(k)? {
        k += 1;
    }
    let corner = k > 0 && k < n && !reducer.a.get(k, k - 1).is_zero();
    let form = BidiagonalForm { matrix: reducer.a, k, corner };
    if let Err(msg) = form.check() {
        unreachable!("bidiagonal reduction produced an invalid form: {msg}");
    }
    Ok(Bidiagonalization { form, left: reducer.left, right: reducer.right })
}

/// The gcd-Toda seed of a bidiagonal form: the leading `k×k` block, or the
/// `(k+1)×(k+1)` block with a zero bottom-right entry when the corner is set.
pub fn seed_state<R: Pid>(form: &BidiagonalForm<R>) -> GcdTodaState<R> {
    let b = &form.matrix;
    let size = if form.corner { form.k + 1 } else { form.k };
    let q = (0..size).map(|i| b.get(i, i).clone()).collect();
    let e = (0..size - 1).map(|i| b.get(i + 1, i).clone()).collect();
    GcdTodaState::new(q, e).expect("entries of one matrix share a ring")
}
