use crate::error::{Error, Result};

use super::matrix::Matrix;

/// An eigenvalue tuple with a basis of its eigenspace.
pub type Eigenspace = (Vec<u32>, Vec<Vec<u8>>);

/// Simultaneous eigenspaces of commuting square matrices.
///
/// Returns `(eigenvalues, basis vectors)` pairs sorted by eigenvalue tuple; each basis is
/// in reduced echelon form. Fails when the eigenspaces do not fill the whole space.
pub fn simultaneous_eigenspaces(ops: &[Matrix], dim: usize, p: u32) -> Result<Vec<Eigenspace>> {
    let mut pieces: Vec<Eigenspace> = vec![(Vec::new(), identity_rows(dim))];
    for op in ops {
        assert_eq!((op.rows(), op.cols()), (dim, dim));
        let mut next = Vec::new();
        for (vals, basis) in pieces {
            if basis.is_empty() {
                continue;
            }
            // Columns of B span the current piece; solve (op - c) B y = 0.
            let b = Matrix::from_vectors(&basis, dim, p).transpose();
            let ob = op.mul(&b);
            for c in 0..p {
                let shifted = ob.sub(&b.scale(c));
                let ys = shifted.nullspace();
                if ys.is_empty() {
                    continue;
                }
                let vecs: Vec<Vec<u8>> = ys.iter().map(|y| b.mul_vec(y)).collect();
                let red = Matrix::from_vectors(&vecs, dim, p).rref();
                let rows = (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect();
                let mut v = vals.clone();
                v.push(c);
                next.push((v, rows));
            }
        }
        pieces = next;
    }
    let total: usize = pieces.iter().map(|(_, b)| b.len()).sum();
    if total != dim {
        return Err(Error::NotDiagonalizable);
    }
    pieces.retain(|(_, b)| !b.is_empty());
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(pieces)
}

fn identity_rows(dim: usize) -> Vec<Vec<u8>> {
    (0..dim)
        .map(|i| {
            let mut v = vec![0u8; dim];
            v[i] = 1;
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizable_pair() {
        let p = 5;
        let a = Matrix::diagonal_matrix(&[1, 1, 2], p);
        let b = Matrix::diagonal_matrix(&[0, 3, 0], p);
        let s = simultaneous_eigenspaces(&[a, b], 3, p).unwrap();
        let vals: Vec<_> = s.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(vals, vec![vec![1, 0], vec![1, 3], vec![2, 0]]);
    }

    #[test]
    fn conjugated_diagonal() {
        let p = 3;
        let d = Matrix::diagonal_matrix(&[0, 1, 2, 1], p);
        let q = Matrix::from_rows(&[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1], vec![1, 0, 0, 2]], p);
        let qi = q.inverse().unwrap();
        let m = qi.mul(&d).mul(&q);
        let s = simultaneous_eigenspaces(&[m], 4, p).unwrap();
        let dims: Vec<_> = s.iter().map(|(v, b)| (v[0], b.len())).collect();
        assert_eq!(dims, vec![(0, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn nilpotent_is_rejected() {
        let n = Matrix::from_rows(&[vec![0, 1], vec![0, 0]], 2);
        assert_eq!(simultaneous_eigenspaces(&[n], 2, 2), Err(Error::NotDiagonalizable));
    }
}
