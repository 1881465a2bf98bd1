use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::lie::{bracket, letter_key, Letter};
use crate::linalg::pow_mod;
use crate::pchar::PChar;

/// A linear combination of words in the basis `E_ij` of gl_n.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    pub terms: BTreeMap<Vec<Letter>, u32>,
}

impl AlgebraElement {
    pub fn word(letters: Vec<Letter>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(letters, 1);
        AlgebraElement { terms }
    }

    pub fn scalar(c: u32, p: u32) -> Self {
        let mut e = AlgebraElement::default();
        e.add_term(Vec::new(), c, p);
        e
    }

    pub fn add_term(&mut self, w: Vec<Letter>, c: u32, p: u32) {
        let c = c % p;
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = (*e.get() + c) % p;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &AlgebraElement, p: u32) -> AlgebraElement {
        let mut out = AlgebraElement::default();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y % p, p);
            }
        }
        out
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let letters: Vec<String> = w.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
                if letters.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}*{}", letters.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A rewrite available at some position of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Site {
    /// Adjacent letters at `k`, `k+1` out of order.
    Swap(usize),
    /// `p` equal letters starting at `k`.
    Power(usize),
}

fn sites(w: &[Letter], p: usize) -> Vec<Site> {
    let mut out = Vec::new();
    for k in 0..w.len().saturating_sub(1) {
        if letter_key(w[k]) > letter_key(w[k + 1]) {
            out.push(Site::Swap(k));
        }
    }
    let mut k = 0;
    while k + p <= w.len() {
        if w[k..k + p].iter().all(|&x| x == w[k]) {
            out.push(Site::Power(k));
        }
        k += 1;
    }
    out
}

/// Normal form in U_χ(gl_n): negative-root monomial, Cartan monomial, positive-root monomial,
/// each letter occurring fewer than `p` times.
///
/// Uses `xy = yx + [x, y]`, `X^p = χ(X)^p` for root vectors and `E_ii^p = E_ii`.
pub fn straighten(elem: &AlgebraElement, chi: &PChar) -> AlgebraElement {
    straighten_with(elem, chi, &mut |_| 0)
}

/// As [`straighten`], with `choose(k)` picking which of `k` available rewrites to apply.
pub fn straighten_with(
    elem: &AlgebraElement,
    chi: &PChar,
    choose: &mut dyn FnMut(usize) -> usize,
) -> AlgebraElement {
    let p = chi.p();
    let mut pending = elem.clone();
    let mut done = AlgebraElement::default();
    while let Some((w, c)) = pending.terms.pop_first() {
        let avail = sites(&w, p as usize);
        if avail.is_empty() {
            done.add_term(w, c, p);
            continue;
        }
        match avail[choose(avail.len()) % avail.len()] {
            Site::Swap(k) => {
                let (x, y) = (w[k], w[k + 1]);
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                pending.add_term(swapped, c, p);
                for (z, cz) in bracket(x, y, p) {
                    let mut v = w[..k].to_vec();
                    v.push(z);
                    v.extend_from_slice(&w[k + 2..]);
                    pending.add_term(v, c * cz % p, p);
                }
            }
            Site::Power(k) => {
                let x = w[k];
                let mut v = w[..k].to_vec();
                if x.0 == x.1 {
                    v.push(x);
                    v.extend_from_slice(&w[k + p as usize..]);
                    pending.add_term(v, c, p);
                } else {
                    let s = pow_mod(chi.value(x.0, x.1), p as u64, p);
                    v.extend_from_slice(&w[k + p as usize..]);
                    pending.add_term(v, c * s % p, p);
                }
            }
        }
    }
    done
}

/// Whether every word is in normal form.
pub fn is_normal(elem: &AlgebraElement, p: u32) -> bool {
    elem.terms.keys().all(|w| sites(w, p as usize).is_empty())
}
