use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use super::field::{inverse_table, is_prime};

/// `dst += factor * src` over GF(p).
pub fn axpy(dst: &mut [u8], src: &[u8], factor: u32, p: u32) {
    if factor == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = ((*d as u32 + factor * s as u32) % p) as u8;
        }
    }
}

/// `v *= factor` over GF(p).
pub fn scale_vec(v: &mut [u8], factor: u32, p: u32) {
    for x in v.iter_mut() {
        *x = (*x as u32 * factor % p) as u8;
    }
}

/// Dense matrix over GF(p), row-major, one byte per entry.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u8>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        assert!(is_prime(p) && p < 256, "modulus must be a prime below 256");
        Matrix { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Matrix::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries are reduced mod p.
    pub fn from_rows(rows: &[Vec<u32>], p: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zeros(r, c, p);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = (x % p) as u8;
            }
        }
        m
    }

    /// Build from residue vectors taken as rows.
    pub fn from_vectors(vectors: &[Vec<u8>], cols: usize, p: u32) -> Self {
        let mut m = Matrix::zeros(vectors.len(), cols, p);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), cols);
            m.data[i * cols..(i + 1) * cols].copy_from_slice(v);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, p: u32, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Matrix::zeros(rows, cols, p);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = (f(i, j) % p) as u8;
            }
        }
        m
    }

    pub fn diagonal_matrix(diag: &[u32], p: u32) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n, n, p);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = (d % p) as u8;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j] as u32
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = (v % self.p) as u8;
    }

    /// Add `v` to entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, v: u32) {
        let k = i * self.cols + j;
        self.data[k] = ((self.data[k] as u32 + v % self.p) % self.p) as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.data[i * self.cols + j]).collect()
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&x| x as u32).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.row(i).iter().enumerate().all(|(j, &x)| i == j || x == 0)
            })
    }

    pub fn diagonal(&self) -> Vec<u32> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| ((a as u32 + b as u32) % p) as u8)
            .collect();
        Matrix { rows: self.rows, cols: self.cols, p, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| ((a as u32 + p - b as u32) % p) as u8)
            .collect();
        Matrix { rows: self.rows, cols: self.cols, p, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let p = self.p;
        let c = c % p;
        let data = self.data.iter().map(|&a| (a as u32 * c % p) as u8).collect();
        Matrix { rows: self.rows, cols: self.cols, p, data }
    }

    /// `self + c * I`.
    pub fn add_scalar(&self, c: u32) -> Matrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m.add_to(i, i, c);
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        assert_eq!(self.p, other.p, "modulus mismatch");
        let p = self.p;
        let (n, m) = (self.rows, other.cols);
        let mut out = Matrix::zeros(n, m, p);
        let mut acc = vec![0u32; m];
        for i in 0..n {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0u32;
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u32;
                for (x, &b) in acc.iter_mut().zip(other.row(k)) {
                    *x += a * b as u32;
                }
                pending += 1;
                if pending == 60_000 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (j, x) in acc.iter().enumerate() {
                out.data[i * m + j] = (x % p) as u8;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        let nz: Vec<usize> = (0..v.len()).filter(|&j| v[j] != 0).collect();
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let s: u64 = nz.iter().map(|&j| row[j] as u64 * v[j] as u64).sum();
                (s % p as u64) as u8
            })
            .collect()
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> Rref {
        let p = self.p;
        let inv = inverse_table(p);
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    m.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let f = inv[m.data[r * cols + c] as usize];
            scale_vec(&mut m.data[r * cols..(r + 1) * cols], f, p);
            let pivot_row = m.data[r * cols..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let x = m.data[i * cols + c] as u32;
                if x != 0 {
                    axpy(&mut m.data[i * cols..(i + 1) * cols], &pivot_row, p - x, p);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self * v = 0}`, one vector per non-pivot column.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let p = self.p;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; self.cols];
            v[f] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                let x = matrix.get(i, f);
                v[c] = ((p - x) % p) as u8;
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.p);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.data[i * n + j];
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        let red = aug.rref();
        if red.pivots.iter().take(n).copied().ne(0..n) || red.rank < n {
            return None;
        }
        Some(Matrix::from_fn(n, n, self.p, |i, j| red.matrix.get(i, n + j)))
    }

    /// Rows indexed by `rows`, columns by `cols`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), self.p, |i, j| self.get(rows[i], cols[j]))
    }

    /// Column space as the rows of a reduced echelon basis.
    pub fn column_space(&self) -> Vec<Vec<u8>> {
        let red = self.transpose().rref();
        (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect()
    }

    fn check_same_shape(&self, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        assert_eq!(self.p, other.p, "modulus mismatch");
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = u8;
    fn index(&self, (i, j): (usize, usize)) -> &u8 {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
