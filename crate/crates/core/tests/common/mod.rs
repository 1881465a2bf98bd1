#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use redrep::linalg::{enumerate_lines, Echelon};
use redrep::{AlgebraKind, Coords, Matrix, ModuleRep, RootDatum, Weight};

/// All permutations of `0..n` by recursive insertion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for w in permutations(n - 1) {
        for pos in 0..=w.len() {
            let mut v = w.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// `W.0` by direct enumeration of `w(ρ) − ρ` over integers, then reduced mod p.
pub fn brute_w_dot_zero(datum: &RootDatum) -> BTreeSet<Weight> {
    let n = datum.n();
    let p = datum.p() as i64;
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let mut out = BTreeSet::new();
    for w in permutations(n) {
        let mut moved = vec![0i64; n];
        for i in 0..n {
            moved[w[i]] = rho[i];
        }
        let eps: Vec<i64> = (0..n).map(|i| moved[i] - rho[i]).collect();
        let weight = match datum.kind() {
            AlgebraKind::GeneralLinear => Weight::eps(&eps, p as u32),
            AlgebraKind::SpecialLinear => {
                let c: Vec<i64> = (0..n - 1).map(|i| eps[i] - eps[i + 1]).collect();
                Weight::cartan(&c, p as u32)
            }
        };
        out.insert(weight);
    }
    out
}

/// Dimension of `S ∩ M_μ` for each weight, for a Cartan-stable subspace `S`.
fn subspace_character(m: &ModuleRep, s: &Echelon) -> BTreeMap<Weight, usize> {
    let mut blocks: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (b, w) in m.weights().iter().enumerate() {
        blocks.entry(w.clone()).or_default().push(b);
    }
    let basis = s.basis();
    let mut out = BTreeMap::new();
    for (w, idx) in blocks {
        let proj: Vec<Vec<u32>> = basis.iter().map(|v| idx.iter().map(|&i| v[i] as u32).collect()).collect();
        let r = if proj.is_empty() { 0 } else { Matrix::from_rows(&proj, m.p()).rank() };
        if r > 0 {
            out.insert(w, r);
        }
    }
    out
}

fn dense_spin(m: &ModuleRep, seed: Vec<u8>) -> Echelon {
    let gens = m.generator_matrices();
    let mut span = Echelon::new(m.dim(), m.p());
    let mut frontier = Vec::new();
    if let Some(r) = span.insert(seed) {
        frontier.push(r.to_vec());
    }
    while let Some(v) = frontier.pop() {
        for g in &gens {
            if let Some(r) = span.insert(g.mul_vec(&v)) {
                frontier.push(r.to_vec());
            }
        }
    }
    span
}

fn key(e: &Echelon) -> Vec<Vec<u8>> {
    e.basis()
}

/// Every submodule of `m`: spins of all lines, closed under sums.
pub fn submodule_lattice(m: &ModuleRep, cap: u128) -> Vec<Echelon> {
    let dim = m.dim();
    let p = m.p();
    let mut found: BTreeMap<Vec<Vec<u8>>, Echelon> = BTreeMap::new();
    let zero = Echelon::new(dim, p);
    found.insert(key(&zero), zero);
    for line in enumerate_lines(dim, p, cap).expect("module small enough for the oracle") {
        let s = dense_spin(m, line);
        found.entry(key(&s)).or_insert(s);
    }
    loop {
        let list: Vec<Echelon> = found.values().cloned().collect();
        let mut grew = false;
        for a in 0..list.len() {
            for b in a + 1..list.len() {
                let mut sum = list[a].clone();
                for v in list[b].basis() {
                    sum.insert(v);
                }
                let k = key(&sum);
                if let std::collections::btree_map::Entry::Vacant(e) = found.entry(k) {
                    e.insert(sum);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    found.into_values().collect()
}

fn contains(big: &Echelon, small: &Echelon) -> bool {
    small.basis().iter().all(|v| big.contains(v))
}

/// Formal characters of the factors of a maximal chain in the full submodule lattice,
/// sorted.
pub fn lattice_factor_characters(m: &ModuleRep, cap: u128) -> Vec<BTreeMap<Weight, usize>> {
    let lattice = submodule_lattice(m, cap);
    let mut current = Echelon::new(m.dim(), m.p());
    let mut out = Vec::new();
    while current.rank() < m.dim() {
        let next = lattice
            .iter()
            .filter(|s| s.rank() > current.rank() && contains(s, &current))
            .min_by_key(|s| s.rank())
            .expect("the whole module is in the lattice")
            .clone();
        let hi = subspace_character(m, &next);
        let lo = subspace_character(m, &current);
        let mut diff = BTreeMap::new();
        for (w, k) in hi {
            let d = k - lo.get(&w).copied().unwrap_or(0);
            if d > 0 {
                diff.insert(w, d);
            }
        }
        out.push(diff);
        current = next;
    }
    out.sort();
    out
}

pub fn random_invertible(dim: usize, p: u32, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(dim, dim, p, |_, _| rng.gen_range(0..p));
        if m.inverse().is_some() {
            return m;
        }
    }
}

pub fn sl_weight(c: &[i64], p: u32) -> Weight {
    Weight::cartan(c, p)
}

pub fn is_cartan(w: &Weight) -> bool {
    w.system() == Coords::Cartan
}
