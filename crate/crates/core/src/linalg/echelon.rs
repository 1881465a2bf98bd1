use super::field::inverse_table;
use super::matrix::{axpy, scale_vec, Matrix};

/// Incrementally built subspace kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    p: u32,
    inv: Vec<u32>,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize, p: u32) -> Self {
        Echelon { dim, p, inv: inverse_table(p), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(dim: usize, p: u32, vectors: impl IntoIterator<Item = Vec<u8>>) -> Self {
        let mut e = Echelon::new(dim, p);
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Subtract the span from `v`; the result has zeros at all pivots.
    pub fn reduce(&self, v: &mut [u8]) {
        let p = self.p;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = v[c] as u32;
            if x != 0 {
                axpy(v, row, p - x, p);
            }
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Insert `v`; returns the new normalized row when the span grows.
    pub fn insert(&mut self, mut v: Vec<u8>) -> Option<&[u8]> {
        assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        let c = v.iter().position(|&x| x != 0)?;
        let p = self.p;
        let f = self.inv[v[c] as usize];
        scale_vec(&mut v, f, p);
        for row in self.rows.iter_mut() {
            let x = row[c] as u32;
            if x != 0 {
                axpy(row, &v, p - x, p);
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        self.rows.last().map(|r| r.as_slice())
    }

    /// Rows sorted by pivot column: the reduced row echelon basis.
    pub fn basis(&self) -> Vec<Vec<u8>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    pub fn pivots_sorted(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_vectors(&self.basis(), self.dim, self.p)
    }
}
