use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{0, .., n-1}`; displayed one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Panics unless `images` is a bijection of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Permutation { images }
    }

    pub fn from_one_based(images: &[usize]) -> Self {
        Permutation::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Simple reflection swapping `k` and `k + 1` (zero-based).
    pub fn simple_reflection(n: usize, k: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(k, k + 1);
        Permutation { images }
    }

    /// The n-cycle `i -> i + 1 mod n`.
    pub fn cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.n()), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Move coordinates: the result `r` satisfies `r[w(i)] = v[i]`.
    pub fn permute<T: Copy>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n());
        let mut out = v.to_vec();
        for (i, &x) in v.iter().enumerate() {
            out[self.images[i]] = x;
        }
        out
    }

    /// All permutations of `0..n` in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { images: cur.clone() });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// The subgroup generated by the simple reflections `s_k`, `k` in `subset` (zero-based).
    pub fn parabolic_subgroup(n: usize, subset: &[usize]) -> Vec<Permutation> {
        let gens: Vec<Permutation> =
            subset.iter().map(|&k| Permutation::simple_reflection(n, k)).collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![Permutation::identity(n)];
        seen.insert(Permutation::identity(n));
        while let Some(w) = queue.pop() {
            for g in &gens {
                let x = g.compose(&w);
                if seen.insert(x.clone()) {
                    queue.push(x);
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_based())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
