use std::collections::{BTreeMap, HashMap};

use super::lie::{bracket, Letter};
use crate::linalg::{pow_mod, Matrix};
use crate::pchar::PChar;

/// Sparse vector: `(index, coefficient)` pairs, indices increasing, coefficients nonzero.
pub type SparseVec = Vec<(usize, u32)>;

/// A module for a subalgebra `P ⊇ 𝔟` of gl_n with a weight basis.
///
/// Root vectors of `P` missing from `actions` act by zero; the Cartan subalgebra acts
/// through `weights` (ε-coordinates, lifted for sl).
#[derive(Clone, Debug)]
pub struct BaseModule {
    pub dim: usize,
    pub weights: Vec<Vec<u32>>,
    /// For each root vector, column `v` lists `x·v`.
    pub actions: BTreeMap<Letter, Vec<SparseVec>>,
}

impl BaseModule {
    /// The one-dimensional `𝔟`-module `𝕜_λ`.
    pub fn character(lambda_eps: Vec<u32>) -> Self {
        BaseModule { dim: 1, weights: vec![lambda_eps], actions: BTreeMap::new() }
    }
}

/// `U_χ(P ⊕ 𝔠) ⊗_{U(P)} V` where `𝔠` is spanned by the listed negative root vectors.
///
/// Basis: PBW monomials over `complement` (in the given order, exponents below p)
/// tensored with the basis of `V`; index `mono * dim V + v`, with the exponent of
/// `complement[k]` as base-p digit `k` of `mono`.
pub struct Induced {
    p: u32,
    chi_values: HashMap<Letter, u32>,
    base: BaseModule,
    complement: Vec<Letter>,
    position: HashMap<Letter, usize>,
    radix: Vec<usize>,
    monomials: usize,
    weights: Vec<Vec<u32>>,
    memo: HashMap<(Letter, usize), SparseVec>,
}

impl Induced {
    pub fn new(chi: &PChar, base: BaseModule, complement: Vec<Letter>) -> Self {
        let p = chi.p();
        let chi_values = complement.iter().map(|&(i, j)| ((i, j), chi.value(i, j))).collect();
        let position = complement.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let radix: Vec<usize> = (0..complement.len()).map(|k| (p as usize).pow(k as u32)).collect();
        let monomials = (p as usize).pow(complement.len() as u32);
        let mut induced = Induced {
            p,
            chi_values,
            base,
            complement,
            position,
            radix,
            monomials,
            weights: Vec::new(),
            memo: HashMap::new(),
        };
        induced.weights = (0..induced.dim()).map(|b| induced.compute_weight(b)).collect();
        induced
    }

    /// `p^{|complement|} · dim V`; callers check caps before construction.
    pub fn dim_for(p: u32, complement_len: usize, base_dim: usize) -> u128 {
        (p as u128).pow(complement_len as u32) * base_dim as u128
    }

    pub fn dim(&self) -> usize {
        self.monomials * self.base.dim
    }

    /// ε-weights of the basis vectors.
    pub fn weights(&self) -> &[Vec<u32>] {
        &self.weights
    }

    /// Exponents of the PBW monomial of basis vector `b`.
    pub fn exponents(&self, b: usize) -> Vec<u32> {
        let mono = b / self.base.dim;
        self.radix.iter().map(|&r| ((mono / r) % self.p as usize) as u32).collect()
    }

    fn digit(&self, b: usize, k: usize) -> usize {
        (b / self.base.dim / self.radix[k]) % self.p as usize
    }

    fn compute_weight(&self, b: usize) -> Vec<u32> {
        let p = self.p;
        let mut w = self.base.weights[b % self.base.dim].clone();
        for (k, &(i, j)) in self.complement.iter().enumerate() {
            let e = self.digit(b, k) as u32;
            w[i] = (w[i] + e) % p;
            w[j] = (w[j] + (p - 1) * e) % p;
        }
        w
    }

    /// `E_x · b` in the basis, computed by moving `E_x` rightwards through the monomial.
    pub fn act(&mut self, x: Letter, b: usize) -> SparseVec {
        if let Some(v) = self.memo.get(&(x, b)) {
            return v.clone();
        }
        let out = self.act_uncached(x, b);
        self.memo.insert((x, b), out.clone());
        out
    }

    fn act_uncached(&mut self, x: Letter, b: usize) -> SparseVec {
        let p = self.p;
        let d = self.base.dim;
        if x.0 == x.1 {
            let c = self.weights[b][x.0];
            return if c == 0 { Vec::new() } else { vec![(b, c)] };
        }
        let mono = b / d;
        let first = (0..self.complement.len()).find(|&k| self.digit(b, k) > 0);
        let Some(c) = first else {
            // Monomial is 1.
            if let Some(&k) = self.position.get(&x) {
                return vec![(b + self.radix[k] * d, 1)];
            }
            let v = b % d;
            return match self.base.actions.get(&x) {
                Some(cols) => cols[v].iter().map(|&(w, c)| (mono * d + w, c)).collect(),
                None => Vec::new(),
            };
        };
        if let Some(&kx) = self.position.get(&x) {
            if kx < c {
                return vec![(b + self.radix[kx] * d, 1)];
            }
            if kx == c {
                let a = self.digit(b, c);
                if a + 1 < p as usize {
                    return vec![(b + self.radix[c] * d, 1)];
                }
                // X^p = χ(X)^p is central.
                let s = pow_mod(self.chi_values[&x], p as u64, p);
                return if s == 0 { Vec::new() } else { vec![(b - a * self.radix[c] * d, s)] };
            }
        }
        // x · Y · rest = Y · (x · rest) + [x, Y] · rest
        let y = self.complement[c];
        let rest = b - self.radix[c] * d;
        let mut acc: HashMap<usize, u32> = HashMap::new();
        for (b1, c1) in self.act(x, rest) {
            for (b2, c2) in self.act(y, b1) {
                *acc.entry(b2).or_insert(0) += c1 * c2 % p;
            }
        }
        for (z, cz) in bracket(x, y, p) {
            for (b1, c1) in self.act(z, rest) {
                *acc.entry(b1).or_insert(0) += cz * c1 % p;
            }
        }
        let mut out: SparseVec = acc.into_iter().map(|(k, v)| (k, v % p)).filter(|&(_, v)| v != 0).collect();
        out.sort_unstable();
        out
    }

    /// Full action matrix of `E_x`.
    pub fn matrix(&mut self, x: Letter) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n, self.p);
        for b in 0..n {
            for (r, c) in self.act(x, b) {
                m.set(r, b, c);
            }
        }
        m
    }

    /// Action of `E_x` as sparse columns.
    pub fn columns(&mut self, x: Letter) -> Vec<SparseVec> {
        (0..self.dim()).map(|b| self.act(x, b)).collect()
    }
}
