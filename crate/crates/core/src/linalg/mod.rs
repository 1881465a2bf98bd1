//! Exact linear algebra over prime fields.

pub mod echelon;
pub mod eigen;
pub mod field;
pub mod lines;
pub mod matrix;

pub use echelon::Echelon;
pub use eigen::{simultaneous_eigenspaces, Eigenspace};
pub use field::{inv_mod, is_prime, pow_mod, reduce_i64, Fp};
pub use lines::{enumerate_lines, line_count, Lines, DEFAULT_LINE_CAP};
pub use matrix::{Matrix, Rref};

/// Default bound on the number of rows any construction may produce.
pub const DEFAULT_ROW_GUARD: usize = 65536;
