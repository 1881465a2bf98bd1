use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::uea::ModuleRep;

fn check_ambient(m: &ModuleRep, sub: &Echelon) -> Result<()> {
    if sub.ambient_dim() != m.dim() || sub.modulus() != m.p() {
        return Err(Error::InvalidInput("subspace does not live in this module".into()));
    }
    Ok(())
}

/// The submodule spanned by `sub`, in its reduced echelon basis.
///
/// Basis vector `i` is the `i`-th echelon row; its weight is the weight at its pivot.
pub fn submodule(m: &ModuleRep, sub: &Echelon) -> Result<ModuleRep> {
    check_ambient(m, sub)?;
    let p = m.p();
    let rows = sub.basis();
    let pivots = sub.pivots_sorted();
    let k = rows.len();
    let restrict = |a: &Matrix| -> Result<Matrix> {
        let mut out = Matrix::zeros(k, k, p);
        for (c, row) in rows.iter().enumerate() {
            let img = a.mul_vec(row);
            if !sub.contains(&img) {
                return Err(Error::NotSubmodule);
            }
            for (r, &pv) in pivots.iter().enumerate() {
                out.set(r, c, img[pv] as u32);
            }
        }
        Ok(out)
    };
    let raising = m.raising().iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let lowering = m.lowering().iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let cartan = m.cartan().iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let weights = pivots.iter().map(|&pv| m.weights()[pv].clone()).collect();
    ModuleRep::from_weight_basis(
        m.datum().clone(),
        m.chi().clone(),
        raising,
        lowering,
        cartan,
        weights,
        format!("sub({})", m.label()),
    )
}

/// `M / sub`, in the basis of standard vectors outside the pivot columns of `sub`.
pub fn quotient(m: &ModuleRep, sub: &Echelon) -> Result<ModuleRep> {
    check_ambient(m, sub)?;
    let p = m.p();
    let pivots = sub.pivots_sorted();
    let keep: Vec<usize> = (0..m.dim()).filter(|b| pivots.binary_search(b).is_err()).collect();
    let k = keep.len();
    let induced = |a: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(k, k, p);
        for (c, &b) in keep.iter().enumerate() {
            let mut img = a.column(b);
            sub.reduce(&mut img);
            for (r, &q) in keep.iter().enumerate() {
                out.set(r, c, img[q] as u32);
            }
        }
        out
    };
    // Invariance of `sub` makes the induced action well defined.
    for a in m.generator_matrices() {
        for row in sub.basis() {
            if !sub.contains(&a.mul_vec(&row)) {
                return Err(Error::NotSubmodule);
            }
        }
    }
    let raising = m.raising().iter().map(induced).collect();
    let lowering = m.lowering().iter().map(induced).collect();
    let cartan = m.cartan().iter().map(induced).collect();
    let weights = keep.iter().map(|&b| m.weights()[b].clone()).collect();
    ModuleRep::from_weight_basis(
        m.datum().clone(),
        m.chi().clone(),
        raising,
        lowering,
        cartan,
        weights,
        format!("quot({})", m.label()),
    )
}

/// `M ⊕ N` with the basis of `M` first.
pub fn direct_sum(m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    if m.datum() != n.datum() || m.chi() != n.chi() {
        return Err(Error::InvalidInput("direct sum needs the same algebra and p-character".into()));
    }
    let p = m.p();
    let (a, b) = (m.dim(), n.dim());
    let block = |x: &Matrix, y: &Matrix| {
        Matrix::from_fn(a + b, a + b, p, |i, j| match (i < a, j < a) {
            (true, true) => x.get(i, j),
            (false, false) => y.get(i - a, j - a),
            _ => 0,
        })
    };
    let zip = |xs: &[Matrix], ys: &[Matrix]| xs.iter().zip(ys).map(|(x, y)| block(x, y)).collect::<Vec<_>>();
    let weights = m.weights().iter().chain(n.weights()).cloned().collect();
    ModuleRep::from_weight_basis(
        m.datum().clone(),
        m.chi().clone(),
        zip(m.raising(), n.raising()),
        zip(m.lowering(), n.lowering()),
        zip(m.cartan(), n.cartan()),
        weights,
        format!("{} + {}", m.label(), n.label()),
    )
}
