use crate::linalg::Echelon;
use crate::roots::Root;
use crate::uea::ModuleRep;

/// Whether `M` is free over `U_χ(𝔪)`, `𝔪` spanned by `X_{-α}` for positive `α ≠ α_1`.
///
/// χ vanishes on `[𝔪, 𝔪]`, so `U_χ(𝔪)` is local with maximal ideal generated by the
/// `x − χ(x)`; by Nakayama `M` is free iff `dim M = p^{N-1} · dim M/JM`.
pub fn verify_free_over_unipotent(m: &ModuleRep) -> bool {
    let p = m.p();
    let dim = m.dim();
    let big_n = m.datum().num_positive_roots();
    let rank_u = (p as u128).pow(big_n as u32 - 1);
    if !(dim as u128).is_multiple_of(rank_u) {
        return false;
    }
    let mut jm = Echelon::new(dim, p);
    for root in m.datum().positive_roots() {
        if root == Root::simple(1) {
            continue;
        }
        let neg = root.negate();
        let c = m.chi().value(neg.i, neg.j);
        let a = m.root_vector_action(neg).add_scalar((p - c) % p);
        for col in 0..dim {
            jm.insert(a.column(col));
        }
    }
    dim as u128 == rank_u * (dim - jm.rank()) as u128
}
