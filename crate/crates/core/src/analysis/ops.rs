use crate::linalg::Matrix;
use crate::uea::ModuleRep;

/// Generator actions as sparse columns, for fast repeated application.
#[derive(Clone, Debug)]
pub struct SparseOps {
    dim: usize,
    p: u32,
    cols: Vec<Vec<Vec<(u32, u8)>>>,
}

impl SparseOps {
    pub fn from_matrices<'a>(mats: impl IntoIterator<Item = &'a Matrix>, dim: usize, p: u32) -> Self {
        let cols = mats
            .into_iter()
            .map(|m| {
                let mut cols = vec![Vec::new(); dim];
                for r in 0..dim {
                    for (c, &x) in m.row(r).iter().enumerate() {
                        if x != 0 {
                            cols[c].push((r as u32, x));
                        }
                    }
                }
                cols
            })
            .collect();
        SparseOps { dim, p, cols }
    }

    /// `e_k`, `f_k` and the Cartan basis of `m`.
    pub fn of_module(m: &ModuleRep) -> Self {
        SparseOps::from_matrices(m.generator_matrices(), m.dim(), m.p())
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn apply(&self, k: usize, v: &[u8]) -> Vec<u8> {
        let p = self.p;
        let mut acc = vec![0u32; self.dim];
        for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(r, c) in &self.cols[k][j] {
                let a = &mut acc[r as usize];
                *a = (*a + x as u32 * c as u32) % p;
            }
        }
        acc.into_iter().map(|x| x as u8).collect()
    }
}
