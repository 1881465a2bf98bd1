use crate::error::{Error, Result};
use crate::pchar::{PChar, PCharKind};
use crate::roots::{AlgebraKind, RootDatum, Weight};
use crate::uea::ModuleRep;
use crate::Limits;

use super::series::is_simple_limited;
use super::weights::maximal_vectors;

/// Lexicographically smallest weight in the `W_I`-dot orbit of `mu`, `I` the Levi subset of χ.
///
/// In Cartan coordinates the `ϖ_n`-shift is invisible, so sl orbits are automatically
/// closed under it.
pub fn canonical_label(datum: &RootDatum, chi: &PChar, mu: &Weight) -> Weight {
    let mu = mu.to_system(datum.coords());
    datum
        .parabolic_dot_orbit(&mu, chi.levi_subset())
        .into_iter()
        .next()
        .expect("orbit contains mu")
}

/// Whether labels for this algebra and character are only conjectured complete invariants.
pub fn label_is_heuristic(datum: &RootDatum, chi: &PChar) -> bool {
    datum.kind() == AlgebraKind::SpecialLinear && chi.kind() == PCharKind::Regular
}

/// Label of a module already known to be simple.
pub(crate) fn label_of_simple(m: &ModuleRep) -> Result<Weight> {
    let mut labels = maximal_vectors(m).into_iter().map(|(w, _)| canonical_label(m.datum(), m.chi(), &w));
    let first = labels.next().ok_or(Error::InconsistentLabel)?;
    if labels.any(|l| l != first) {
        return Err(Error::InconsistentLabel);
    }
    Ok(first)
}

/// Canonical label of a simple module: the orbit minimum of its maximal-vector weights.
pub fn label_simple(m: &ModuleRep) -> Result<Weight> {
    label_simple_limited(m, &Limits::default())
}

pub fn label_simple_limited(m: &ModuleRep, limits: &Limits) -> Result<Weight> {
    if !is_simple_limited(m, limits)? {
        return Err(Error::NotSimple);
    }
    label_of_simple(m)
}
