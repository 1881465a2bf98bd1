use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coordinate system of a [`Weight`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Coords {
    /// `n` values `a_i` with `λ = Σ a_i ε_i` (gl_n).
    Eps,
    /// `n - 1` values `λ(h_i)` (sl_n).
    Cartan,
}

/// A restricted weight with residues mod p.
///
/// Ordering is lexicographic in the coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    coords: Vec<u32>,
    system: Coords,
    p: u32,
}

impl Weight {
    pub fn new(coords: Vec<u32>, system: Coords, p: u32) -> Self {
        let coords = coords.into_iter().map(|x| x % p).collect();
        Weight { coords, system, p }
    }

    pub fn eps(coords: &[i64], p: u32) -> Self {
        Weight::from_signed(coords, Coords::Eps, p)
    }

    pub fn cartan(coords: &[i64], p: u32) -> Self {
        Weight::from_signed(coords, Coords::Cartan, p)
    }

    pub fn from_signed(coords: &[i64], system: Coords, p: u32) -> Self {
        let coords = coords.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect();
        Weight { coords, system, p }
    }

    pub fn zero(system: Coords, len: usize, p: u32) -> Self {
        Weight { coords: vec![0; len], system, p }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn system(&self) -> Coords {
        self.system
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Rank parameter `n` of the ambient algebra.
    pub fn rank(&self) -> usize {
        match self.system {
            Coords::Eps => self.coords.len(),
            Coords::Cartan => self.coords.len() + 1,
        }
    }

    /// Cartan coordinates to ε-coordinates with `a_n = 0`; ε-weights are returned unchanged.
    pub fn lift(&self) -> Weight {
        match self.system {
            Coords::Eps => self.clone(),
            Coords::Cartan => {
                let p = self.p;
                let n = self.coords.len() + 1;
                let mut a = vec![0u32; n];
                for i in (0..n - 1).rev() {
                    a[i] = (a[i + 1] + self.coords[i]) % p;
                }
                Weight { coords: a, system: Coords::Eps, p }
            }
        }
    }

    /// ε-coordinates to Cartan coordinates `a_i - a_{i+1}`.
    pub fn restrict(&self) -> Weight {
        match self.system {
            Coords::Cartan => self.clone(),
            Coords::Eps => {
                let p = self.p;
                let c = self.coords.windows(2).map(|w| (w[0] + p - w[1]) % p).collect();
                Weight { coords: c, system: Coords::Cartan, p }
            }
        }
    }

    /// Convert to the requested system (lifting with `a_n = 0` if needed).
    pub fn to_system(&self, system: Coords) -> Weight {
        match system {
            Coords::Eps => self.lift(),
            Coords::Cartan => self.restrict(),
        }
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_compatible(other)?;
        let p = self.p;
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| (a + b) % p).collect();
        Ok(Weight { coords: c, system: self.system, p })
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.check_compatible(other)?;
        let p = self.p;
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| (a + p - b) % p).collect();
        Ok(Weight { coords: c, system: self.system, p })
    }

    /// Add `a · ϖ_n = a(ε_1 + … + ε_n)`; a no-op on Cartan coordinates.
    pub fn shift(&self, a: u32) -> Weight {
        match self.system {
            Coords::Cartan => self.clone(),
            Coords::Eps => {
                let p = self.p;
                Weight { coords: self.coords.iter().map(|x| (x + a) % p).collect(), system: Coords::Eps, p }
            }
        }
    }

    pub fn is_sl_restricted(&self) -> bool {
        match self.system {
            Coords::Cartan => true,
            Coords::Eps => self.coords.iter().sum::<u32>() % self.p == 0,
        }
    }

    fn check_compatible(&self, other: &Weight) -> Result<()> {
        if self.system != other.system || self.p != other.p || self.coords.len() != other.coords.len() {
            return Err(Error::InvalidInput(format!("incompatible weights {self} and {other}")));
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        match self.system {
            Coords::Eps => write!(f, "eps({})", parts.join(",")),
            Coords::Cartan => write!(f, "({})", parts.join(",")),
        }
    }
}
