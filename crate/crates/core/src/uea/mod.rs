//! Enveloping algebra arithmetic and induced module constructions.

pub mod constructions;
pub mod induced;
pub mod lie;
pub mod module;
pub mod straighten;

pub use constructions::{
    baby_verma, baby_verma_limited, parabolic_simple, parabolic_verma, parabolic_verma_limited, ParabolicModule,
};
pub use induced::{BaseModule, Induced, SparseVec};
pub use lie::{bracket, Letter, LieElement};
pub use module::{Generator, ModuleRep, StructureReport};
pub use straighten::{is_normal, straighten, straighten_with, AlgebraElement};
