//! Restriction and induction between gl_n and sl_n, central twists, the corner
//! embedding `sl_n ⊂ sl_{n+1}` and the subregular simple modules.

use std::collections::BTreeMap;

use crate::analysis::{canonical_label, is_simple_limited, submodule};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::pchar::PChar;
use crate::roots::{AlgebraKind, Permutation, RootDatum, Weight};
use crate::uea::{parabolic_verma_limited, AlgebraElement, Letter, ModuleRep};
use crate::Limits;

/// `res_χ M`: a gl_n-module viewed as an sl_n-module.
pub fn restrict_module(m: &ModuleRep) -> Result<ModuleRep> {
    if m.kind() != AlgebraKind::GeneralLinear {
        return Err(Error::InvalidInput("restriction expects a gl_n-module".into()));
    }
    let n = m.n();
    let cartan = (0..n - 1).map(|k| m.cartan()[k].sub(&m.cartan()[k + 1])).collect();
    let weights = m.weights().iter().map(Weight::restrict).collect();
    ModuleRep::from_weight_basis(
        m.datum().with_kind(AlgebraKind::SpecialLinear),
        m.chi().clone(),
        m.raising().to_vec(),
        m.lowering().to_vec(),
        cartan,
        weights,
        format!("res {}", m.label()),
    )
}

/// Restriction to the top-left corner `g_k ⊂ g_n`, `2 ≤ k ≤ n`.
pub fn restrict_to_corner(m: &ModuleRep, k: usize) -> Result<ModuleRep> {
    if k < 2 || k > m.n() {
        return Err(Error::InvalidInput(format!("corner rank {k} out of range")));
    }
    let datum = RootDatum::new(k, m.p(), m.kind())?;
    let chi = m.chi().corner(k)?;
    let cartan_len = match m.kind() {
        AlgebraKind::GeneralLinear => k,
        AlgebraKind::SpecialLinear => k - 1,
    };
    ModuleRep::from_actions(
        datum,
        chi,
        m.raising()[..k - 1].to_vec(),
        m.lowering()[..k - 1].to_vec(),
        m.cartan()[..cartan_len].to_vec(),
        format!("corner {}", m.label()),
    )
}

fn binomials(p: u32) -> Vec<Vec<u32>> {
    let p_us = p as usize;
    let mut c = vec![vec![0u32; p_us]; p_us];
    for j in 0..p_us {
        c[j][0] = 1;
        for k in 1..=j {
            c[j][k] = (c[j - 1][k - 1] + if k < j { c[j - 1][k] } else { 0 }) % p;
        }
    }
    c
}

/// `ind_χ M = U_χ(gl_n) ⊗_{U_χ(sl_n)} M`, of dimension `p · dim M`.
///
/// Built on the basis `z^j ⊗ m` with `z = E_11`, then moved to a weight basis.
pub fn induce_module(m: &ModuleRep) -> Result<ModuleRep> {
    induce_module_limited(m, &Limits::default())
}

#[allow(clippy::needless_range_loop)]
pub fn induce_module_limited(m: &ModuleRep, limits: &Limits) -> Result<ModuleRep> {
    if m.kind() != AlgebraKind::SpecialLinear {
        return Err(Error::InvalidInput("induction expects an sl_n-module".into()));
    }
    let p = m.p();
    let n = m.n();
    let d = m.dim();
    let big = p as u128 * d as u128;
    if big > limits.max_dim {
        return Err(Error::DimensionGuard { dim: big, cap: limits.max_dim });
    }
    let pu = p as usize;
    let total = pu * d;
    let binom = binomials(p);
    // x z^j = (z − c_x)^j x with c_x = δ_{1k} − δ_{1l} for x = E_kl.
    let lift_root = |a: &Matrix, c_x: i64| -> Matrix {
        let neg_c = (-c_x).rem_euclid(p as i64) as u32;
        let mut out = Matrix::zeros(total, total, p);
        for j in 0..pu {
            for k in 0..=j {
                let coef = binom[j][k] * crate::linalg::pow_mod(neg_c, (j - k) as u64, p) % p;
                if coef == 0 {
                    continue;
                }
                for r in 0..d {
                    for (c, &x) in a.row(r).iter().enumerate() {
                        if x != 0 {
                            out.add_to(k * d + r, j * d + c, coef * x as u32 % p);
                        }
                    }
                }
            }
        }
        out
    };
    let mut z = Matrix::zeros(total, total, p);
    for j in 0..pu {
        let next = if j + 1 < pu { j + 1 } else { 1 };
        for b in 0..d {
            z.set(next * d + b, j * d + b, 1);
        }
    }
    let raising: Vec<Matrix> = (0..n - 1).map(|k| lift_root(&m.raising()[k], if k == 0 { 1 } else { 0 })).collect();
    let lowering: Vec<Matrix> = (0..n - 1).map(|k| lift_root(&m.lowering()[k], if k == 0 { -1 } else { 0 })).collect();
    let h: Vec<Matrix> = m.cartan().iter().map(|hk| lift_root(hk, 0)).collect();
    let mut cartan = vec![z.clone()];
    let mut acc = z;
    for hk in &h {
        acc = acc.sub(hk);
        cartan.push(acc.clone());
    }
    ModuleRep::from_actions(
        m.datum().with_kind(AlgebraKind::GeneralLinear),
        m.chi().clone(),
        raising,
        lowering,
        cartan,
        format!("ind {}", m.label()),
    )
}

/// `M ⊗ 𝕜_a`: every `E_ii` acts with an extra `a`.
pub fn tensor_twist(m: &ModuleRep, a: u32) -> Result<ModuleRep> {
    if m.kind() != AlgebraKind::GeneralLinear {
        return Err(Error::InvalidInput("twists apply to gl_n-modules".into()));
    }
    let p = m.p();
    let a = a % p;
    ModuleRep::from_weight_basis(
        m.datum().clone(),
        m.chi().clone(),
        m.raising().to_vec(),
        m.lowering().to_vec(),
        m.cartan().iter().map(|h| h.add_scalar(a)).collect(),
        m.weights().iter().map(|w| w.shift(a)).collect(),
        format!("{} (x) k_{a}", m.label()),
    )
}

/// `X_{-θ_i} = E_{n+1,i}` as a zero-based letter of gl_{n+1}, one-based `i`.
pub fn theta_letter(n: usize, i: usize) -> Letter {
    (n, i - 1)
}

/// `u = ∏_{i=1}^{n} X_{-θ_i}^{p-1}` in `U(sl_{n+1})`, factors in the given order of `i`.
pub fn u_element_ordered(n: usize, p: u32, order: &[usize]) -> Result<AlgebraElement> {
    if !n.is_multiple_of(p as usize) {
        return Err(Error::RankNotDivisible { n, p });
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n).collect::<Vec<_>>() {
        return Err(Error::InvalidInput("order must list 1..=n once each".into()));
    }
    let word = order.iter().flat_map(|&i| std::iter::repeat_n(theta_letter(n, i), p as usize - 1)).collect();
    Ok(AlgebraElement::word(word))
}

/// `u` with factors in descending `i`.
pub fn u_element(n: usize, p: u32) -> Result<AlgebraElement> {
    u_element_ordered(n, p, &(1..=n).rev().collect::<Vec<_>>())
}

/// The ambient module `Z̃_χ(0, α_n)` over sl_{n+1} with χ regular on sl_n extended by zero.
pub fn u_ambient(n: usize, p: u32, limits: &Limits) -> Result<ModuleRep> {
    if !n.is_multiple_of(p as usize) {
        return Err(Error::RankNotDivisible { n, p });
    }
    let datum = RootDatum::sl(n + 1, p)?;
    let chi = PChar::regular(n, p)?.extend(n + 1)?;
    parabolic_verma_limited(&datum, &chi, &Weight::zero(datum.coords(), n, p), n, limits)
}

/// Column space of `u` acting on `ambient`, factors in the given order.
pub fn u_image(ambient: &ModuleRep, order: &[usize]) -> Result<Echelon> {
    let n = ambient.n() - 1;
    let u = u_element_ordered(n, ambient.p(), order)?;
    let a = ambient.element_action(&u)?;
    Ok(Echelon::from_vectors(ambient.dim(), ambient.p(), a.column_space()))
}

/// `L_χ(0)` for regular χ on sl_n, `p | n`, realized as `u · Z̃_χ(0, α_n)`.
pub fn construct_l0_via_u(n: usize, p: u32) -> Result<ModuleRep> {
    construct_l0_via_u_limited(n, p, &Limits::default())
}

pub fn construct_l0_via_u_limited(n: usize, p: u32, limits: &Limits) -> Result<ModuleRep> {
    let ambient = u_ambient(n, p, limits)?;
    let order: Vec<usize> = (1..=n).rev().collect();
    let image = u_image(&ambient, &order)?;
    let corner = restrict_to_corner(&ambient, n)?;
    let l0 = submodule(&corner, &image)?.with_label(format!("u Z~(0, alpha_{n})"));
    if !is_simple_limited(&l0, limits)? {
        return Err(Error::NotSimple);
    }
    let big_n = n * (n - 1) / 2;
    let expected = (p as usize).pow(big_n as u32 - 1);
    if l0.dim() != expected {
        return Err(Error::StructureViolation(format!("u-image has dimension {} instead of {expected}", l0.dim())));
    }
    Ok(l0)
}

/// `λ_i = σ^i . λ0` with `σ(k) = k + 1 mod n`.
pub fn coset_weight(datum: &RootDatum, lambda0: &Weight, i: usize) -> Weight {
    datum.dot(&Permutation::cycle(datum.n()).pow(i), lambda0)
}

/// `L_χ(λ_i) = Z_χ(λ_i, α_{n-1})` for subregular χ, checked simple of dimension
/// `p^{N-1} r_{n-1-i}`.
pub fn subregular_simple(datum: &RootDatum, lambda0: &Weight, i: usize, limits: &Limits) -> Result<ModuleRep> {
    let n = datum.n();
    let p = datum.p();
    if i >= n {
        return Err(Error::InvalidInput(format!("coset index {i} must be below n = {n}")));
    }
    let r = datum.r_coefficients(lambda0)?;
    let rr = r[n - 1 - i];
    if rr == 0 {
        return Err(Error::ZeroFactor { index: n - 1 - i });
    }
    let chi = PChar::subregular(n, p)?;
    let lambda_i = coset_weight(datum, &datum.normalize(lambda0)?, i);
    let m = parabolic_verma_limited(datum, &chi, &lambda_i, n - 1, limits)?;
    let expected = (p as usize).pow(datum.num_positive_roots() as u32 - 1) * rr as usize;
    if m.dim() != expected {
        return Err(Error::StructureViolation(format!("L(lambda_{i}) has dimension {} instead of {expected}", m.dim())));
    }
    if !is_simple_limited(&m, limits)? {
        return Err(Error::NotSimple);
    }
    Ok(m.with_label(format!("L_chi(lambda_{i}) = {lambda_i}")))
}

/// `N_j`: the number of `s` with `r_{n-s-1} > 0` for which some `τ` fixing `n` satisfies
/// `t_{l-j} − t_{τ(l)-s} = t_{n-j} − t_{n-s}` for `1 ≤ l ≤ n-1`, indices mod `n`.
pub fn subregular_multiplicity(j: usize, t: &[u32], r: &[u32], p: u32) -> Result<usize> {
    let n = t.len();
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidInput(format!("subregular multiplicity needs 2 <= n <= 8, got {n}")));
    }
    if r.len() != n {
        return Err(Error::InvalidInput("r must have n entries".into()));
    }
    // One-based cyclic index: t_k for any integer k.
    let tk = |k: i64| t[((k - 1).rem_euclid(n as i64)) as usize] as i64;
    let diff = |a: i64, b: i64| (a - b).rem_euclid(p as i64);
    let taus: Vec<Permutation> = Permutation::all(n).into_iter().filter(|w| w.apply(n - 1) == n - 1).collect();
    let (j, ni) = (j as i64, n as i64);
    let mut count = 0;
    for s in 0..n {
        if r[n - s - 1] == 0 {
            continue;
        }
        let si = s as i64;
        let rhs = diff(tk(ni - j), tk(ni - si));
        let found = taus.iter().any(|tau| {
            (1..n).all(|l| {
                let tl = tau.apply(l - 1) as i64 + 1;
                diff(tk(l as i64 - j), tk(tl - si)) == rhs
            })
        });
        if found {
            count += 1;
        }
    }
    Ok(count)
}

/// A composition factor predicted from the alcove data of a subregular weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedFactor {
    pub j: usize,
    pub lambda_j: Weight,
    pub label: Weight,
    pub dim: usize,
    pub multiplicity: usize,
}

/// Factors `L_χ(λ_j)` of `Z_χ(λ)` for subregular χ: one entry per `j` with
/// `r_{n-1-j} > 0`, dimension `p^{N-1} r_{n-1-j}` and multiplicity `N_j`.
pub fn predicted_subregular_factors(datum: &RootDatum, lambda: &Weight) -> Result<Vec<PredictedFactor>> {
    let n = datum.n();
    let p = datum.p();
    let chi = PChar::subregular(n, p)?;
    let (lambda0, _) = datum.alcove_representative(lambda)?;
    let r = datum.r_coefficients(&lambda0)?;
    let t = datum.t_vector(&lambda0);
    let base = (p as usize).pow(datum.num_positive_roots() as u32 - 1);
    let mut out = Vec::new();
    for j in 0..n {
        let rr = r[n - 1 - j];
        if rr == 0 {
            continue;
        }
        let lambda_j = coset_weight(datum, &lambda0, j);
        let multiplicity = match datum.kind() {
            AlgebraKind::SpecialLinear => subregular_multiplicity(j, &t, &r, p)?,
            AlgebraKind::GeneralLinear => 1,
        };
        out.push(PredictedFactor {
            j,
            label: canonical_label(datum, &chi, &lambda_j),
            lambda_j,
            dim: base * rr as usize,
            multiplicity,
        });
    }
    Ok(out)
}

/// Label → multiplicity view of [`predicted_subregular_factors`]; classes sharing a label
/// are counted once.
pub fn predicted_multiset(factors: &[PredictedFactor]) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for f in factors {
        out.insert(f.label.clone(), f.multiplicity);
    }
    out
}
