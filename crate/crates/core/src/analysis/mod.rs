//! Weight spaces, submodules, composition series and homomorphisms.

pub mod free;
pub mod hom;
pub mod label;
pub mod ops;
pub mod series;
pub mod spin;
pub mod subquotient;
pub mod weights;

pub use free::verify_free_over_unipotent;
pub use hom::hom_space_dim;
pub use label::{canonical_label, label_is_heuristic, label_simple, label_simple_limited};
pub use ops::SparseOps;
pub use series::{
    composition_series, composition_series_limited, is_simple, is_simple_limited, is_uniserial,
    is_uniserial_limited, CompSeries, Factor,
};
pub use spin::{spin, spin_bounded};
pub use subquotient::{direct_sum, quotient, submodule};
pub use weights::{formal_character, maximal_vectors, weight_indices, weight_spaces};
