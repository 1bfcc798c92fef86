//! Dense row-major matrices over a [`Pid`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Pid;

/// A 2×2 block `((p, t), (q, s))` used by the gcd rotations.
pub type Block<R> = [[R; 2]; 2];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Pid> DenseMatrix<R> {
    /// Row-major construction. Every entry must belong to the same ring.
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix(format!("empty shape {rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|v| !v.same_ring(&data[0])) {
            return Err(crate::ring::RingError::Mismatch.into());
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Self::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, like: &R) -> Self {
        assert!(rows > 0 && cols > 0, "empty shape");
        Self { rows, cols, data: vec![like.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, like: &R) -> Self {
        let mut m = Self::zeros(n, n, like);
        for i in 0..n {
            m.set(i, i, like.one_like());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Any entry, used as a ring witness for constants.
    pub fn witness(&self) -> &R {
        &self.data[0]
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Pid::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += row[src]`
    pub fn add_row(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.get(dst, j).clone() + self.get(src, j).clone();
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += col[src]`
    pub fn add_col(&mut self, dst: usize, src: usize) {
        for i in 0..self.rows {
            let v = self.get(i, dst).clone() + self.get(i, src).clone();
            self.set(i, dst, v);
        }
    }

    /// Right-multiplies columns `a` and `b` by `block`:
    /// `(col_a, col_b) <- (p col_a + q col_b, t col_a + s col_b)`.
    pub fn rotate_cols(&mut self, a: usize, b: usize, block: &Block<R>) {
        let [[p, t], [q, s]] = block;
        for i in 0..self.rows {
            let (x, y) = (self.get(i, a).clone(), self.get(i, b).clone());
            self.set(i, a, x.clone() * p.clone() + y.clone() * q.clone());
            self.set(i, b, x * t.clone() + y * s.clone());
        }
    }

    /// Left-multiplies rows `a` and `b` by the transpose of `block`:
    /// `(row_a, row_b) <- (p row_a + q row_b, t row_a + s row_b)`.
    pub fn rotate_rows(&mut self, a: usize, b: usize, block: &Block<R>) {
        let [[p, t], [q, s]] = block;
        for j in 0..self.cols {
            let (x, y) = (self.get(a, j).clone(), self.get(b, j).clone());
            self.set(a, j, p.clone() * x.clone() + q.clone() * y.clone());
            self.set(b, j, t.clone() * x + s.clone() * y);
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidMatrix(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.witness().zero_like();
        let data = (0..self.rows)
            .flat_map(|i| (0..other.cols).map(move |j| (i, j)))
            .map(|(i, j)| {
                (0..self.cols).fold(zero.clone(), |acc, k| {
                    acc + self.get(i, k).clone() * other.get(k, j).clone()
                })
            })
            .collect();
        Ok(Self { rows: self.rows, cols: other.cols, data })
    }

    /// Embeds the matrix in the top-left corner of a zero square matrix of
    /// side `max(rows, cols)`.
    pub fn padded_square(&self) -> Self {
        let n = self.rows.max(self.cols);
        let mut out = Self::zeros(n, n, self.witness());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Self { rows: rows.len(), cols: cols.len(), data }
    }

    /// Determinant by cofactor expansion along the first row. Exponential;
    /// intended for the small matrices seen by oracles and tests.
    pub fn determinant(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.laplace(0, &idx)
    }

    fn laplace(&self, row: usize, cols: &[usize]) -> R {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = self.witness().zero_like();
        for (pos, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry.clone() * self.laplace(row + 1, &rest);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// True when every entry off the diagonal and first subdiagonal is zero.
    pub fn is_lower_bidiagonal(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| i == j || i == j + 1 || self.get(i, j).is_zero())
        })
    }
}

impl<R: Pid> fmt::Display for DenseMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyModP;
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> DenseMatrix<BigInt> {
        DenseMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn shape_validation() {
        let one = BigInt::from(1);
        assert!(DenseMatrix::new(2, 2, vec![one.clone(); 3]).is_err());
        assert!(DenseMatrix::new(0, 2, Vec::<BigInt>::new()).is_err());
        assert!(DenseMatrix::from_rows(vec![vec![one.clone()], vec![one.clone(), one]]).is_err());
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = PolyModP::new(2, &[1]).unwrap();
        let b = PolyModP::new(3, &[1]).unwrap();
        assert!(matches!(DenseMatrix::new(1, 2, vec![a, b]), Err(Error::Ring(_))));
    }

    #[test]
    fn determinant_and_product() {
        let a = int_matrix(&[&[2, 0, 0], &[4, 6, 0], &[0, 3, 9]]);
        assert_eq!(a.determinant(), BigInt::from(108));
        let b = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(b.determinant(), BigInt::from(-2));
        let id = DenseMatrix::identity(3, &BigInt::from(0));
        assert_eq!(a.matmul(&id).unwrap(), a);
        assert_eq!(b.matmul(&b).unwrap(), int_matrix(&[&[7, 10], &[15, 22]]));
    }

    #[test]
    fn rotations_match_block_products() {
        let a = int_matrix(&[&[4, 6], &[1, 5]]);
        let block = [[BigInt::from(-1), BigInt::from(-3)], [BigInt::from(1), BigInt::from(2)]];
        let as_matrix = DenseMatrix::from_rows(vec![block[0].to_vec(), block[1].to_vec()]).unwrap();
        let mut by_cols = a.clone();
        by_cols.rotate_cols(0, 1, &block);
        assert_eq!(by_cols, a.matmul(&as_matrix).unwrap());
        assert_eq!(by_cols.row(0), &[BigInt::from(2), BigInt::from(0)]);
    }

    #[test]
    fn bidiagonal_shape_check() {
        assert!(int_matrix(&[&[2, 0, 0], &[4, 6, 0], &[0, 3, 9]]).is_lower_bidiagonal());
        assert!(!int_matrix(&[&[2, 1], &[0, 1]]).is_lower_bidiagonal());
        assert!(!int_matrix(&[&[2, 0, 0], &[0, 1, 0], &[1, 0, 1]]).is_lower_bidiagonal());
    }

    #[test]
    fn padding() {
        let a = int_matrix(&[&[1, 2, 3]]);
        let p = a.padded_square();
        assert_eq!((p.rows(), p.cols()), (3, 3));
        assert!(p.get(2, 2).is_zero());
        assert_eq!(p.get(0, 2), &BigInt::from(3));
    }
}
