//! Modules over reduced enveloping algebras of gl_n and sl_n in positive characteristic.
//!
//! Builds baby Verma and parabolic modules as explicit matrices over `GF(p)`, computes
//! composition series, and checks the combinatorics of regular and subregular
//! nilpotent p-characters.

pub mod analysis;
pub mod error;
pub mod functors;
pub mod linalg;
pub mod pchar;
pub mod roots;
pub mod uea;

pub use analysis::{composition_series, hom_space_dim, is_simple, is_uniserial, label_simple, CompSeries, Factor};
pub use error::{Error, Result};
pub use linalg::{Echelon, Matrix};
pub use pchar::{PChar, PCharKind, PCharValues};
pub use roots::{AlgebraKind, Coords, Permutation, Root, RootDatum, Weight};
pub use uea::{baby_verma, parabolic_simple, parabolic_verma, AlgebraElement, ModuleRep};

/// Size limits shared by constructions and analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest module dimension a construction may produce.
    pub max_dim: u128,
    /// Largest `p^d` for which lines of a `d`-dimensional space are enumerated.
    pub line_cap: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_dim: 1 << 15, line_cap: linalg::DEFAULT_LINE_CAP }
    }
}
