use super::ops::SparseOps;
use crate::linalg::Echelon;
use crate::uea::ModuleRep;

/// Smallest submodule containing `seeds`, as a reduced echelon basis.
pub fn spin(m: &ModuleRep, seeds: &[Vec<u8>]) -> Echelon {
    spin_bounded(&SparseOps::of_module(m), m.dim(), m.p(), seeds, None).0
}

/// Spin with an optional early stop once the span reaches `bound`; the flag reports
/// whether the closure finished.
pub fn spin_bounded(
    ops: &SparseOps,
    dim: usize,
    p: u32,
    seeds: &[Vec<u8>],
    bound: Option<usize>,
) -> (Echelon, bool) {
    let mut span = Echelon::new(dim, p);
    let mut queue: Vec<Vec<u8>> = Vec::new();
    for s in seeds {
        if let Some(row) = span.insert(s.clone()) {
            queue.push(row.to_vec());
        }
    }
    while let Some(v) = queue.pop() {
        if bound.is_some_and(|b| span.rank() >= b) {
            return (span, false);
        }
        for k in 0..ops.len() {
            let w = ops.apply(k, &v);
            if let Some(row) = span.insert(w) {
                queue.push(row.to_vec());
            }
        }
    }
    (span, true)
}
