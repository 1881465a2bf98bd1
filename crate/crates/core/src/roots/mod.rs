//! Type A root data, restricted weights and Weyl group combinatorics.
//!
//! Simple roots and Levi subsets are indexed one-based (`α_1, …, α_{n-1}`);
//! matrix indices are zero-based throughout.

pub mod perm;
pub mod weight;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::is_prime;

pub use perm::Permutation;
pub use weight::{Coords, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    GeneralLinear,
    SpecialLinear,
}

impl AlgebraKind {
    pub fn coords(self) -> Coords {
        match self {
            AlgebraKind::GeneralLinear => Coords::Eps,
            AlgebraKind::SpecialLinear => Coords::Cartan,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            AlgebraKind::GeneralLinear => "gl",
            AlgebraKind::SpecialLinear => "sl",
        }
    }
}

/// The root `ε_i − ε_j` (zero-based, `i != j`); its root vector is `E_ij`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "roots need distinct indices");
        Root { i, j }
    }

    /// `α_k = ε_k − ε_{k+1}`, one-based `k`.
    pub fn simple(k: usize) -> Self {
        Root::new(k - 1, k)
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    pub fn negate(self) -> Root {
        Root { i: self.j, j: self.i }
    }

    /// Number of simple roots in the positive root `±self`.
    pub fn height(self) -> usize {
        self.i.abs_diff(self.j)
    }

    /// One-based index of the simple root, if simple and positive.
    pub fn simple_index(self) -> Option<usize> {
        (self.j == self.i + 1).then_some(self.j)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

/// Rank, characteristic and algebra of a type A root datum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootDatum {
    n: usize,
    p: u32,
    kind: AlgebraKind,
}

impl RootDatum {
    pub fn new(n: usize, p: u32, kind: AlgebraKind) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("rank parameter n = {n} must be at least 2")));
        }
        if !is_prime(p) || p >= 256 {
            return Err(Error::InvalidInput(format!("p = {p} must be a prime below 256")));
        }
        Ok(RootDatum { n, p, kind })
    }

    pub fn gl(n: usize, p: u32) -> Result<Self> {
        RootDatum::new(n, p, AlgebraKind::GeneralLinear)
    }

    pub fn sl(n: usize, p: u32) -> Result<Self> {
        RootDatum::new(n, p, AlgebraKind::SpecialLinear)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn with_kind(&self, kind: AlgebraKind) -> RootDatum {
        RootDatum { n: self.n, p: self.p, kind }
    }

    /// Coordinate system of weights for this algebra.
    pub fn coords(&self) -> Coords {
        self.kind.coords()
    }

    /// `N = n(n-1)/2`.
    pub fn num_positive_roots(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// `(i, j)` with `i < j`, lexicographic.
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(Root::new(i, j));
            }
        }
        out
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..self.n).map(Root::simple).collect()
    }

    /// Negative roots in PBW order: by height, then by the smaller index.
    pub fn negative_roots_pbw(&self) -> Vec<Root> {
        let mut out = Vec::new();
        for h in 1..self.n {
            for i in 0..self.n - h {
                out.push(Root::new(i + h, i));
            }
        }
        out
    }

    /// `ρ` in ε-coordinates, `(n-1, …, 1, 0)` mod p.
    pub fn rho(&self) -> Weight {
        let c: Vec<i64> = (0..self.n).map(|i| (self.n - 1 - i) as i64).collect();
        Weight::eps(&c, self.p)
    }

    /// A root as a weight in this datum's coordinates.
    pub fn root_weight(&self, root: Root) -> Weight {
        let mut e = vec![0i64; self.n];
        e[root.i] += 1;
        e[root.j] -= 1;
        Weight::eps(&e, self.p).to_system(self.coords())
    }

    /// Validate `λ` for this datum and convert it to native coordinates.
    pub fn normalize(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.modulus() != self.p || lambda.rank() != self.n {
            return Err(Error::InvalidInput(format!(
                "weight {lambda} does not belong to {} n={} p={}",
                self.kind.short_name(),
                self.n,
                self.p
            )));
        }
        match (self.kind, lambda.system()) {
            (AlgebraKind::GeneralLinear, Coords::Cartan) => Err(Error::InvalidInput(
                "gl weights must be given in epsilon coordinates".into(),
            )),
            _ => Ok(lambda.to_system(self.coords())),
        }
    }

    /// `w.λ = w(λ+ρ) − ρ`, returned in the coordinates of `λ`.
    pub fn dot(&self, w: &Permutation, lambda: &Weight) -> Weight {
        assert_eq!(w.n(), self.n);
        let sys = lambda.system();
        let p = self.p;
        let shifted = lambda.lift().add(&self.rho()).expect("compatible");
        let moved = Weight::new(w.permute(shifted.coords()), Coords::Eps, p);
        moved.sub(&self.rho()).expect("compatible").to_system(sys)
    }

    /// `⟨λ+ρ, α_k^∨⟩` mod p, one-based `k`.
    pub fn pairing(&self, lambda: &Weight, k: usize) -> u32 {
        let x = lambda.lift().add(&self.rho()).expect("compatible");
        let c = x.coords();
        (c[k - 1] + self.p - c[k]) % self.p
    }

    /// The unique `m` in `(0, p]` congruent to `⟨λ+ρ, α_k^∨⟩`.
    pub fn m_exponent(&self, lambda: &Weight, k: usize) -> u32 {
        match self.pairing(lambda, k) {
            0 => self.p,
            m => m,
        }
    }

    /// Whether `λ` lies in the dot orbit `W.0`; requires `p | n`.
    ///
    /// For sl the test runs over all `p` lifts `a_i + c`.
    pub fn in_w_dot_zero(&self, lambda: &Weight) -> Result<bool> {
        if !self.n.is_multiple_of(self.p as usize) {
            return Err(Error::RankNotDivisible { n: self.n, p: self.p });
        }
        let lambda = self.normalize(lambda)?;
        let x = lambda.lift().add(&self.rho()).expect("compatible");
        let shifts = match self.kind {
            AlgebraKind::GeneralLinear => 1,
            AlgebraKind::SpecialLinear => self.p,
        };
        let want = self.n / self.p as usize;
        Ok((0..shifts).any(|c| {
            let mut counts = vec![0usize; self.p as usize];
            for &a in x.coords() {
                counts[((a + c) % self.p) as usize] += 1;
            }
            counts.iter().all(|&k| k == want)
        }))
    }

    /// Dot orbit of `λ` under the parabolic subgroup generated by `s_k`, `k` in `levi` (one-based).
    pub fn parabolic_dot_orbit(&self, lambda: &Weight, levi: &[usize]) -> BTreeSet<Weight> {
        let gens: Vec<Permutation> =
            levi.iter().map(|&k| Permutation::simple_reflection(self.n, k - 1)).collect();
        let mut orbit = BTreeSet::new();
        orbit.insert(lambda.clone());
        let mut queue = vec![lambda.clone()];
        while let Some(mu) = queue.pop() {
            for g in &gens {
                let nu = self.dot(g, &mu);
                if orbit.insert(nu.clone()) {
                    queue.push(nu);
                }
            }
        }
        orbit
    }

    /// Alcove lifts `r_i = ⟨λ+ρ, α_i^∨⟩ ∈ [0, p-1]`, or `None` when `Σ r_i > p`.
    fn alcove_lifts(&self, lambda: &Weight) -> Option<Vec<u32>> {
        let r: Vec<u32> = (1..self.n).map(|k| self.pairing(lambda, k)).collect();
        (r.iter().sum::<u32>() <= self.p).then_some(r)
    }

    /// A weight `λ0` in the closure of the first dominant alcove and `w` with `w.λ0 = λ`.
    ///
    /// Among the weights of the dot orbit of `λ` with an alcove lift, the one with the
    /// largest `Σ_{i≥1} r_i` wins, then the lexicographically smallest weight; among the
    /// permutations realizing it the lexicographically smallest is returned. Weights and
    /// the comparison use this datum's coordinates.
    pub fn alcove_representative(&self, lambda: &Weight) -> Result<(Weight, Permutation)> {
        let lambda = self.normalize(lambda)?;
        let mut best: Option<(u32, Weight, Permutation)> = None;
        for w in Permutation::all(self.n) {
            let mu = self.dot(&w.inverse(), &lambda);
            let Some(r) = self.alcove_lifts(&mu) else { continue };
            let s: u32 = r.iter().sum();
            let key = mu.restrict();
            let better = match &best {
                None => true,
                Some((bs, bmu, _)) => s > *bs || (s == *bs && key < bmu.restrict()),
            };
            if better {
                best = Some((s, mu, w));
            }
        }
        let (_, mu, w) = best.expect("every orbit meets the alcove closure");
        Ok((mu, w))
    }

    /// `(r_0, r_1, …, r_{n-1})` with `r_i = ⟨λ0+ρ, α_i^∨⟩` and `r_0 = p − Σ r_i`.
    pub fn r_coefficients(&self, lambda0: &Weight) -> Result<Vec<u32>> {
        let lambda0 = self.normalize(lambda0)?;
        let r = self.alcove_lifts(&lambda0).ok_or(Error::NotInAlcove)?;
        let mut out = vec![self.p - r.iter().sum::<u32>()];
        out.extend(r);
        Ok(out)
    }

    /// `[σ^0, …, σ^{n-1}]` with `σ(i) = i + 1 mod n`.
    pub fn subregular_coset_reps(&self) -> Vec<Permutation> {
        let s = Permutation::cycle(self.n);
        (0..self.n).map(|j| s.pow(j)).collect()
    }

    /// `λ0 + ρ` in ε-coordinates with the `a_n = 0` lift, as residues `t_1, …, t_n`.
    pub fn t_vector(&self, lambda0: &Weight) -> Vec<u32> {
        lambda0.lift().add(&self.rho()).expect("compatible").coords().to_vec()
    }

    /// All restricted weights in native coordinates, lexicographic.
    pub fn all_weights(&self) -> Vec<Weight> {
        let len = match self.kind {
            AlgebraKind::GeneralLinear => self.n,
            AlgebraKind::SpecialLinear => self.n - 1,
        };
        let total = (self.p as usize).pow(len as u32);
        (0..total)
            .map(|mut idx| {
                let mut c = vec![0u32; len];
                for k in (0..len).rev() {
                    c[k] = (idx % self.p as usize) as u32;
                    idx /= self.p as usize;
                }
                Weight::new(c, self.coords(), self.p)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(n: usize, p: u32) -> RootDatum {
        RootDatum::sl(n, p).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(sl(3, 3).rho().coords(), &[2, 1, 0]);
        assert_eq!(sl(2, 2).rho().coords(), &[1, 0]);
        assert_eq!(sl(4, 2).rho().coords(), &[1, 0, 1, 0]);
    }

    #[test]
    fn root_lists() {
        let d = sl(4, 3);
        assert_eq!(d.positive_roots().len(), 6);
        assert_eq!(d.simple_roots(), vec![Root::new(0, 1), Root::new(1, 2), Root::new(2, 3)]);
        let neg = d.negative_roots_pbw();
        assert_eq!(neg[0], Root::new(1, 0));
        assert_eq!(neg[3], Root::new(2, 0));
        assert_eq!(neg[5], Root::new(3, 0));
    }

    #[test]
    fn dot_examples() {
        let d = sl(3, 3);
        let zero = Weight::cartan(&[0, 0], 3);
        let sigma = Permutation::cycle(3);
        assert_eq!(d.dot(&Permutation::identity(3), &zero), zero);
        assert_eq!(d.dot(&sigma, &zero.lift()).coords(), &[1, 1, 1]);
        assert_eq!(d.dot(&sigma, &zero), zero);
        let s1 = Permutation::simple_reflection(3, 0);
        assert_eq!(d.dot(&s1, &zero).coords(), &[1, 1]);
    }

    #[test]
    fn w_dot_zero_examples() {
        let d = sl(3, 3);
        assert!(d.in_w_dot_zero(&Weight::cartan(&[0, 0], 3)).unwrap());
        assert!(d.in_w_dot_zero(&Weight::cartan(&[1, 1], 3)).unwrap());
        assert!(!d.in_w_dot_zero(&Weight::cartan(&[2, 2], 3)).unwrap());
        assert_eq!(
            sl(3, 2).in_w_dot_zero(&Weight::cartan(&[0, 0], 2)),
            Err(Error::RankNotDivisible { n: 3, p: 2 })
        );
    }

    #[test]
    fn alcove_examples() {
        let d = sl(3, 3);
        let (l0, w) = d.alcove_representative(&Weight::cartan(&[0, 2], 3)).unwrap();
        assert_eq!(l0.coords(), &[1, 0]);
        assert_eq!(d.dot(&w, &l0), Weight::cartan(&[0, 2], 3));
        let (l0, _) = d.alcove_representative(&Weight::cartan(&[2, 0], 3)).unwrap();
        assert_eq!(l0.coords(), &[0, 1]);
        let (l0, w) = d.alcove_representative(&Weight::cartan(&[1, 0], 3)).unwrap();
        assert_eq!(l0.coords(), &[1, 0]);
        assert!(w.is_identity());
        let (l0, _) = d.alcove_representative(&Weight::cartan(&[1, 1], 3)).unwrap();
        assert_eq!(l0.coords(), &[0, 0]);
    }

    #[test]
    fn r_examples() {
        let d = sl(3, 3);
        assert_eq!(d.r_coefficients(&Weight::cartan(&[0, 0], 3)).unwrap(), vec![1, 1, 1]);
        assert_eq!(d.r_coefficients(&Weight::cartan(&[2, 2], 3)).unwrap(), vec![3, 0, 0]);
        assert_eq!(d.r_coefficients(&Weight::cartan(&[1, 0], 3)).unwrap(), vec![0, 2, 1]);
        assert_eq!(d.r_coefficients(&Weight::cartan(&[1, 1], 3)), Err(Error::NotInAlcove));
    }

    #[test]
    fn m_examples() {
        let d = sl(3, 3);
        assert_eq!(d.m_exponent(&Weight::cartan(&[0, 0], 3), 1), 1);
        assert_eq!(d.m_exponent(&Weight::cartan(&[2, 2], 3), 2), 3);
        assert_eq!(d.m_exponent(&Weight::cartan(&[1, 0], 3), 2), 1);
    }

    #[test]
    fn coset_reps() {
        let r2 = sl(2, 2).subregular_coset_reps();
        assert_eq!(r2[1].one_based(), vec![2, 1]);
        let r3 = sl(3, 3).subregular_coset_reps();
        assert_eq!(r3[1].one_based(), vec![2, 3, 1]);
        assert_eq!(r3[2].one_based(), vec![3, 1, 2]);
        let r4 = sl(4, 2).subregular_coset_reps();
        assert_eq!(r4[2].one_based(), vec![3, 4, 1, 2]);
    }

    #[test]
    fn gl_normalization() {
        let d = RootDatum::gl(3, 3).unwrap();
        assert!(d.normalize(&Weight::cartan(&[0, 0], 3)).is_err());
        assert!(d.normalize(&Weight::eps(&[0, 0], 3)).is_err());
        assert_eq!(d.all_weights().len(), 27);
        assert_eq!(sl(3, 3).all_weights().len(), 9);
    }
}
