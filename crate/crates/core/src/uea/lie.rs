use std::collections::BTreeMap;

/// Basis element `E_ij` of gl_n, zero-based.
pub type Letter = (usize, usize);

/// A linear combination of `E_ij` with residues mod p.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    pub terms: BTreeMap<Letter, u32>,
}

impl LieElement {
    pub fn basis(x: Letter) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, 1);
        LieElement { terms }
    }

    /// `h_{α_k} = E_kk − E_{k+1,k+1}`, one-based `k`.
    pub fn coroot(k: usize, p: u32) -> Self {
        let mut e = LieElement::default();
        e.add_term((k - 1, k - 1), 1, p);
        e.add_term((k, k), p - 1, p);
        e
    }

    pub fn add_term(&mut self, x: Letter, c: u32, p: u32) {
        let v = self.terms.entry(x).or_insert(0);
        *v = (*v + c) % p;
        if *v == 0 {
            self.terms.remove(&x);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Bilinear extension of [`bracket`].
    pub fn bracket(&self, other: &LieElement, p: u32) -> LieElement {
        let mut out = LieElement::default();
        for (&x, &a) in &self.terms {
            for (&y, &b) in &other.terms {
                for (z, c) in bracket(x, y, p) {
                    out.add_term(z, a * b % p * c % p, p);
                }
            }
        }
        out
    }

    /// Sum of diagonal coefficients.
    pub fn trace(&self, p: u32) -> u32 {
        self.terms.iter().filter(|((i, j), _)| i == j).map(|(_, &c)| c).sum::<u32>() % p
    }
}

/// `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`.
pub fn bracket(a: Letter, b: Letter, p: u32) -> Vec<(Letter, u32)> {
    let (i, j) = a;
    let (k, l) = b;
    let mut out: Vec<(Letter, u32)> = Vec::with_capacity(2);
    if j == k {
        out.push(((i, l), 1));
    }
    if l == i {
        let z = (k, j);
        if let Some(t) = out.iter_mut().find(|(x, _)| *x == z) {
            t.1 = (t.1 + p - 1) % p;
        } else {
            out.push((z, p - 1));
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}

/// Total order used for normal forms: negative roots, then Cartan, then positive roots;
/// root vectors by height, then by the smaller index.
pub fn letter_key(x: Letter) -> (u8, usize, usize) {
    let (i, j) = x;
    if i > j {
        (0, i - j, j)
    } else if i == j {
        (1, i, 0)
    } else {
        (2, j - i, i)
    }
}
