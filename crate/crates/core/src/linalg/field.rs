use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Trial division; moduli here are below 256.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue `a^e mod p`.
pub fn pow_mod(a: u32, mut e: u64, p: u32) -> u32 {
    let mut base = (a % p) as u64;
    let m = p as u64;
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u32
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, (p - 2) as u64, p)
}

/// Table of inverses indexed by residue; entry 0 is unused.
pub fn inverse_table(p: u32) -> Vec<u32> {
    let mut t = vec![0; p as usize];
    for a in 1..p {
        t[a as usize] = inv_mod(a, p);
    }
    t
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce_i64(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// An element of GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: u32, modulus: u32) -> Self {
        assert!(is_prime(modulus) && modulus < 256, "modulus must be a prime below 256");
        Fp { value: value % modulus, modulus }
    }

    pub fn zero(modulus: u32) -> Self {
        Fp::new(0, modulus)
    }

    pub fn one(modulus: u32) -> Self {
        Fp::new(1, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, e: u64) -> Self {
        Fp { value: pow_mod(self.value, e, self.modulus), modulus: self.modulus }
    }

    /// `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(Fp { value: inv_mod(self.value, self.modulus), modulus: self.modulus })
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Fp { value: (self.value + rhs.value) % self.modulus, modulus: self.modulus }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Fp { value: (self.value + self.modulus - rhs.value) % self.modulus, modulus: self.modulus }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Fp { value: self.value * rhs.value % self.modulus, modulus: self.modulus }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
}
