use std::collections::BTreeMap;

use super::induced::{BaseModule, Induced, SparseVec};
use super::lie::Letter;
use super::module::ModuleRep;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pchar::PChar;
use crate::roots::{AlgebraKind, Root, RootDatum, Weight};
use crate::Limits;

/// The simple `𝔭_α`-module `L_{χ,α}(λ)` with basis `X_{-α}^j ⊗ 1`, `0 ≤ j < m`.
///
/// Only `e_α` and `f_α` act nontrivially; the nilradical of `𝔭_α` acts by zero.
#[derive(Clone, Debug)]
pub struct ParabolicModule {
    pub alpha: usize,
    pub m: u32,
    /// ε-weights of the basis vectors (lifted for sl).
    pub weights: Vec<Vec<u32>>,
    pub e: Matrix,
    pub f: Matrix,
}

impl ParabolicModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn to_base_module(&self) -> BaseModule {
        let k = self.alpha;
        let mut actions = BTreeMap::new();
        actions.insert((k - 1, k), sparse_columns(&self.e));
        actions.insert((k, k - 1), sparse_columns(&self.f));
        BaseModule { dim: self.dim(), weights: self.weights.clone(), actions }
    }
}

fn sparse_columns(m: &Matrix) -> Vec<SparseVec> {
    (0..m.cols())
        .map(|c| (0..m.rows()).filter_map(|r| Some((r, m.get(r, c))).filter(|&(_, v)| v != 0)).collect())
        .collect()
}

fn check_inputs(datum: &RootDatum, chi: &PChar, lambda: &Weight) -> Result<Weight> {
    if chi.n() != datum.n() || chi.p() != datum.p() {
        return Err(Error::InvalidInput(format!(
            "p-character {} does not match n={} p={}",
            chi.text(),
            datum.n(),
            datum.p()
        )));
    }
    datum.normalize(lambda)
}

fn guard(p: u32, complement_len: usize, base_dim: usize, limits: &Limits) -> Result<()> {
    let dim = Induced::dim_for(p, complement_len, base_dim);
    if dim > limits.max_dim {
        return Err(Error::DimensionGuard { dim, cap: limits.max_dim });
    }
    Ok(())
}

fn letter(root: Root) -> Letter {
    (root.i, root.j)
}

/// Turn an induced module into generator matrices in its PBW weight basis.
fn into_module(datum: &RootDatum, chi: &PChar, mut induced: Induced, label: String) -> Result<ModuleRep> {
    let n = datum.n();
    let p = datum.p();
    let raising: Vec<Matrix> = (0..n - 1).map(|k| induced.matrix((k, k + 1))).collect();
    let lowering: Vec<Matrix> = (0..n - 1).map(|k| induced.matrix((k + 1, k))).collect();
    let eps: Vec<Weight> = induced.weights().iter().map(|w| Weight::new(w.clone(), crate::roots::Coords::Eps, p)).collect();
    let (cartan, weights) = match datum.kind() {
        AlgebraKind::GeneralLinear => {
            let cartan = (0..n).map(|i| Matrix::diagonal_matrix(&eps.iter().map(|w| w.coords()[i]).collect::<Vec<_>>(), p)).collect();
            (cartan, eps)
        }
        AlgebraKind::SpecialLinear => {
            let weights: Vec<Weight> = eps.iter().map(|w| w.restrict()).collect();
            let cartan = (0..n - 1)
                .map(|k| Matrix::diagonal_matrix(&weights.iter().map(|w| w.coords()[k]).collect::<Vec<_>>(), p))
                .collect();
            (cartan, weights)
        }
    };
    ModuleRep::from_weight_basis(datum.clone(), chi.clone(), raising, lowering, cartan, weights, label)
}

/// The baby Verma module `Z_χ(λ) = U_χ(𝔤) ⊗_{U_χ(𝔟)} 𝕜_λ`, of dimension `p^N`.
///
/// Basis vector `b` is the PBW monomial over the negative roots (height, then position)
/// with base-p exponent digits of `b`; vector 0 is `1 ⊗ 1_λ`.
pub fn baby_verma(datum: &RootDatum, chi: &PChar, lambda: &Weight) -> Result<ModuleRep> {
    baby_verma_limited(datum, chi, lambda, &Limits::default())
}

pub fn baby_verma_limited(datum: &RootDatum, chi: &PChar, lambda: &Weight, limits: &Limits) -> Result<ModuleRep> {
    let lambda = check_inputs(datum, chi, lambda)?;
    let complement: Vec<Letter> = datum.negative_roots_pbw().into_iter().map(letter).collect();
    guard(datum.p(), complement.len(), 1, limits)?;
    let base = BaseModule::character(lambda.lift().coords().to_vec());
    let induced = Induced::new(chi, base, complement);
    into_module(datum, chi, induced, format!("Z_chi({lambda})"))
}

fn check_alpha(datum: &RootDatum, chi: &PChar, alpha: usize) -> Result<()> {
    if alpha == 0 || alpha >= datum.n() {
        return Err(Error::InvalidInput(format!("alpha_{alpha} is not a simple root")));
    }
    if chi.simple_negative(alpha) != 0 {
        return Err(Error::NotApplicable { root: alpha });
    }
    Ok(())
}

/// `L_{χ,α}(λ) = Z_{χ,α}(λ) / Im φ` for the simple root `α = α_alpha`, of dimension
/// `m = m_exponent(λ, α)`.
pub fn parabolic_simple(datum: &RootDatum, chi: &PChar, lambda: &Weight, alpha: usize) -> Result<ParabolicModule> {
    let lambda = check_inputs(datum, chi, lambda)?;
    check_alpha(datum, chi, alpha)?;
    let k = alpha;
    let fa: Letter = (k, k - 1);
    let ea: Letter = (k - 1, k);
    let base = BaseModule::character(lambda.lift().coords().to_vec());
    let mut z = Induced::new(chi, base, vec![fa]);
    let e_full = z.matrix(ea);
    let f_full = z.matrix(fa);
    let m = datum.m_exponent(&lambda, k) as usize;
    let p = datum.p() as usize;
    // Im φ is spanned by X_{-α}^j ⊗ 1 with j ≥ m.
    for op in [&e_full, &f_full] {
        for c in m..p {
            if (0..m).any(|r| op.get(r, c) != 0) {
                return Err(Error::NotSubmodule);
            }
        }
    }
    let keep: Vec<usize> = (0..m).collect();
    Ok(ParabolicModule {
        alpha,
        m: m as u32,
        weights: z.weights()[..m].to_vec(),
        e: e_full.submatrix(&keep, &keep),
        f: f_full.submatrix(&keep, &keep),
    })
}

/// `Z_χ(λ, α) = U_χ(𝔤) ⊗_{U_0(𝔭_α)} L_{χ,α}(λ)`, of dimension `p^{N-1} · m`.
///
/// Basis index `mono · m + j` pairs a PBW monomial over the negative roots other than
/// `−α` with `X_{-α}^j ⊗ 1_λ`.
pub fn parabolic_verma(datum: &RootDatum, chi: &PChar, lambda: &Weight, alpha: usize) -> Result<ModuleRep> {
    parabolic_verma_limited(datum, chi, lambda, alpha, &Limits::default())
}

pub fn parabolic_verma_limited(
    datum: &RootDatum,
    chi: &PChar,
    lambda: &Weight,
    alpha: usize,
    limits: &Limits,
) -> Result<ModuleRep> {
    let lambda = check_inputs(datum, chi, lambda)?;
    check_alpha(datum, chi, alpha)?;
    let complement: Vec<Letter> = datum
        .negative_roots_pbw()
        .into_iter()
        .filter(|&r| r != Root::simple(alpha).negate())
        .map(letter)
        .collect();
    let m = datum.m_exponent(&lambda, alpha) as usize;
    guard(datum.p(), complement.len(), m, limits)?;
    let simple = parabolic_simple(datum, chi, &lambda, alpha)?;
    let induced = Induced::new(chi, simple.to_base_module(), complement);
    into_module(datum, chi, induced, format!("Z_chi({lambda}, alpha_{alpha})"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_baby_verma() {
        let d = RootDatum::sl(2, 2).unwrap();
        let chi = PChar::regular(2, 2).unwrap();
        let z = baby_verma(&d, &chi, &Weight::cartan(&[0], 2)).unwrap();
        assert_eq!(z.dim(), 2);
        assert_eq!(z.f(1).to_rows(), vec![vec![0, 1], vec![1, 0]]);
        assert!(z.e(1).is_zero());
    }

    #[test]
    fn dimensions() {
        let d = RootDatum::sl(3, 3).unwrap();
        let reg = PChar::regular(3, 3).unwrap();
        let sub = PChar::subregular(3, 3).unwrap();
        assert_eq!(baby_verma(&d, &reg, &Weight::cartan(&[1, 2], 3)).unwrap().dim(), 27);
        assert_eq!(parabolic_verma(&d, &sub, &Weight::cartan(&[2, 2], 3), 2).unwrap().dim(), 27);
        assert_eq!(parabolic_verma(&d, &sub, &Weight::cartan(&[1, 0], 3), 2).unwrap().dim(), 9);
        let g = RootDatum::gl(4, 3).unwrap();
        let sub4 = PChar::subregular(4, 3).unwrap();
        let z = parabolic_verma(&g, &sub4, &Weight::eps(&[0, 0, 0, 0], 3), 3).unwrap();
        assert_eq!(z.dim(), 243);
    }

    #[test]
    fn parabolic_simple_dimensions() {
        let d = RootDatum::sl(3, 3).unwrap();
        let sub = PChar::subregular(3, 3).unwrap();
        assert_eq!(parabolic_simple(&d, &sub, &Weight::cartan(&[1, 0], 3), 2).unwrap().m, 1);
        assert_eq!(parabolic_simple(&d, &sub, &Weight::cartan(&[0, 0], 3), 2).unwrap().m, 1);
        let full = parabolic_simple(&d, &sub, &Weight::cartan(&[2, 2], 3), 2).unwrap();
        assert_eq!(full.m, 3);
        assert!(full.f.pow(3).is_zero());
        let reg = PChar::regular(3, 3).unwrap();
        assert_eq!(
            parabolic_simple(&d, &reg, &Weight::cartan(&[0, 0], 3), 2).unwrap_err(),
            Error::NotApplicable { root: 2 }
        );
    }

    #[test]
    fn guard_trips() {
        let d = RootDatum::sl(4, 3).unwrap();
        let chi = PChar::regular(4, 3).unwrap();
        let limits = Limits { max_dim: 100, ..Limits::default() };
        let err = baby_verma_limited(&d, &chi, &Weight::cartan(&[0, 0, 0], 3), &limits).unwrap_err();
        assert_eq!(err, Error::DimensionGuard { dim: 729, cap: 100 });
    }

    #[test]
    fn top_vector_is_maximal() {
        let d = RootDatum::gl(3, 3).unwrap();
        let chi = PChar::regular(3, 3).unwrap();
        let lambda = Weight::eps(&[2, 0, 1], 3);
        let z = baby_verma(&d, &chi, &lambda).unwrap();
        assert_eq!(z.weights()[0], lambda);
        for k in 1..3 {
            assert!(z.e(k).column(0).iter().all(|&x| x == 0));
        }
        assert!(z.check_all_relations().all_pass());
    }
}
