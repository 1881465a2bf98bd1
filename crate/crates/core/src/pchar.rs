//! Nilpotent p-characters of standard Levi form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::is_prime;

/// Named families of p-characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PCharKind {
    Regular,
    Subregular,
    Custom,
}

impl PCharKind {
    pub fn name(self) -> &'static str {
        match self {
            PCharKind::Regular => "regular",
            PCharKind::Subregular => "subregular",
            PCharKind::Custom => "custom",
        }
    }
}

/// Values of χ on the Chevalley basis.
///
/// Root values are keyed by zero-based `(i, j)` for `E_ij`; Cartan values by the
/// one-based index of `h_{α_i}`. Missing keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PCharValues {
    pub roots: BTreeMap<(usize, usize), u32>,
    pub cartan: BTreeMap<usize, u32>,
}

/// Standard Levi subset `I` (one-based simple root indices) of χ.
pub fn detect_levi_subset(n: usize, p: u32, values: &PCharValues) -> Result<Vec<usize>> {
    for (&k, &v) in &values.cartan {
        if v % p != 0 {
            return Err(Error::NotStandardLevi { i: k, j: k });
        }
    }
    let mut levi = Vec::new();
    for (&(i, j), &v) in &values.roots {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidInput(format!("E_{}{} is not a root vector of gl_{n}", i + 1, j + 1)));
        }
        if v % p == 0 {
            continue;
        }
        if i == j + 1 {
            levi.push(i);
        } else {
            return Err(Error::NotStandardLevi { i: i + 1, j: j + 1 });
        }
    }
    levi.sort_unstable();
    Ok(levi)
}

/// A nilpotent p-character of standard Levi form on gl_n (and, by restriction, sl_n).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PChar {
    n: usize,
    p: u32,
    values: PCharValues,
    levi: Vec<usize>,
    kind: PCharKind,
}

impl PChar {
    /// Validates that χ is of standard Levi form.
    pub fn from_values(n: usize, p: u32, values: PCharValues) -> Result<Self> {
        if !is_prime(p) || p >= 256 {
            return Err(Error::InvalidInput(format!("p = {p} must be a prime below 256")));
        }
        let levi = detect_levi_subset(n, p, &values)?;
        let mut values = values;
        values.roots.retain(|_, v| {
            *v %= p;
            *v != 0
        });
        values.cartan.clear();
        let kind = if levi == (1..n).collect::<Vec<_>>() && values.roots.values().all(|&v| v == 1) {
            PCharKind::Regular
        } else if levi == (1..n.saturating_sub(1)).collect::<Vec<_>>() && values.roots.values().all(|&v| v == 1) {
            PCharKind::Subregular
        } else {
            PCharKind::Custom
        };
        Ok(PChar { n, p, values, levi, kind })
    }

    /// `χ(X_{-α_i}) = c_i` for `i` in `1..n`, zero elsewhere.
    pub fn from_simple_values(n: usize, p: u32, simple: &[u32]) -> Result<Self> {
        let mut values = PCharValues::default();
        for (k, &c) in simple.iter().enumerate() {
            values.roots.insert((k + 1, k), c);
        }
        PChar::from_values(n, p, values)
    }

    /// `χ(X_{-α_i}) = 1` for `i = 1, …, n-1`.
    pub fn regular(n: usize, p: u32) -> Result<Self> {
        PChar::from_simple_values(n, p, &vec![1; n.saturating_sub(1)])
    }

    /// `χ(X_{-α_i}) = 1` for `i = 1, …, n-2`.
    pub fn subregular(n: usize, p: u32) -> Result<Self> {
        PChar::from_simple_values(n, p, &vec![1; n.saturating_sub(2)])
    }

    pub fn zero(n: usize, p: u32) -> Result<Self> {
        PChar::from_simple_values(n, p, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn kind(&self) -> PCharKind {
        self.kind
    }

    /// Standard Levi subset, one-based simple root indices.
    pub fn levi_subset(&self) -> &[usize] {
        &self.levi
    }

    pub fn values(&self) -> &PCharValues {
        &self.values
    }

    /// `χ(E_ij)`, zero-based; zero on the diagonal.
    pub fn value(&self, i: usize, j: usize) -> u32 {
        self.values.roots.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `χ(X_{-α_k})`, one-based `k`.
    pub fn simple_negative(&self, k: usize) -> u32 {
        self.value(k, k - 1)
    }

    /// The same stored values viewed on `gl_m`, `m >= n`, through the corner embedding.
    pub fn extend(&self, m: usize) -> Result<PChar> {
        assert!(m >= self.n);
        PChar::from_values(m, self.p, self.values.clone())
    }

    /// Restriction to the top-left `gl_m`, `m <= n`.
    pub fn corner(&self, m: usize) -> Result<PChar> {
        let mut v = self.values.clone();
        v.roots.retain(|&(i, j), _| i < m && j < m);
        PChar::from_values(m, self.p, v)
    }

    /// Text form, e.g. `regular(3,3)`.
    pub fn text(&self) -> String {
        format!("{}({},{})", self.kind.name(), self.n, self.p)
    }
}

impl fmt::Debug for PChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} I={:?}", self.text(), self.levi)
    }
}

impl fmt::Display for PChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl FromStr for PChar {
    type Err = Error;

    /// Parses `regular(n,p)` or `subregular(n,p)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse p-character {s:?}"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let name = &s[..open];
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let mut parts = inner.split(',').map(|x| x.trim().parse::<u64>());
        let n = parts.next().ok_or_else(bad)?.map_err(|_| bad())? as usize;
        let p = parts.next().ok_or_else(bad)?.map_err(|_| bad())? as u32;
        if parts.next().is_some() || n < 2 {
            return Err(bad());
        }
        match name {
            "regular" => PChar::regular(n, p),
            "subregular" => PChar::subregular(n, p),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_values() {
        let c = PChar::regular(2, 2).unwrap();
        assert_eq!(c.value(1, 0), 1);
        assert_eq!(c.value(0, 1), 0);
        let c = PChar::regular(3, 3).unwrap();
        assert_eq!((c.value(1, 0), c.value(2, 1), c.value(2, 0)), (1, 1, 0));
        assert_eq!(PChar::regular(4, 3).unwrap().values().roots.len(), 3);
    }

    #[test]
    fn subregular_values() {
        let c = PChar::subregular(3, 3).unwrap();
        assert_eq!((c.value(1, 0), c.value(2, 1)), (1, 0));
        assert!(PChar::subregular(2, 2).unwrap().values().roots.is_empty());
        let c = PChar::subregular(4, 2).unwrap();
        let keys: Vec<_> = c.values().roots.keys().copied().collect();
        assert_eq!(keys, vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn levi_detection() {
        assert_eq!(PChar::regular(3, 3).unwrap().levi_subset(), &[1, 2]);
        assert_eq!(PChar::subregular(3, 3).unwrap().levi_subset(), &[1]);
        let mut v = PCharValues::default();
        v.roots.insert((2, 0), 1);
        assert_eq!(detect_levi_subset(3, 3, &v), Err(Error::NotStandardLevi { i: 3, j: 1 }));
        let mut v = PCharValues::default();
        v.roots.insert((0, 1), 2);
        assert!(PChar::from_values(3, 3, v).is_err());
        let mut v = PCharValues::default();
        v.cartan.insert(1, 1);
        assert!(PChar::from_values(3, 3, v).is_err());
        let c = PChar::from_simple_values(3, 5, &[2, 3]).unwrap();
        assert_eq!(c.levi_subset(), &[1, 2]);
        assert_eq!(c.kind(), PCharKind::Custom);
    }

    #[test]
    fn text_round_trip() {
        for s in ["regular(3,3)", "subregular(4,2)"] {
            let c: PChar = s.parse().unwrap();
            assert_eq!(c.text(), s);
        }
        assert!("regular(3)".parse::<PChar>().is_err());
        assert!("weird(3,3)".parse::<PChar>().is_err());
        assert!("regular(3,4)".parse::<PChar>().is_err());
    }

    #[test]
    fn extension_and_corner() {
        let c = PChar::subregular(4, 3).unwrap();
        assert_eq!(c.corner(3).unwrap(), PChar::regular(3, 3).unwrap());
        assert_eq!(PChar::regular(3, 3).unwrap().extend(4).unwrap(), c);
    }
}
