use std::collections::BTreeMap;

use crate::error::Result;
use crate::linalg::{simultaneous_eigenspaces, Matrix};
use crate::roots::Weight;
use crate::uea::ModuleRep;

/// Basis indices of each weight space, weights ascending.
pub fn weight_indices(m: &ModuleRep) -> BTreeMap<Weight, Vec<usize>> {
    let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (b, w) in m.weights().iter().enumerate() {
        out.entry(w.clone()).or_default().push(b);
    }
    out
}

/// Simultaneous eigenspaces of the Cartan action, keyed by weight.
pub fn weight_spaces(m: &ModuleRep) -> Result<BTreeMap<Weight, Vec<Vec<u8>>>> {
    let dim = m.dim();
    if m.cartan().iter().all(Matrix::is_diagonal) {
        return Ok(weight_indices(m)
            .into_iter()
            .map(|(w, idx)| (w, idx.into_iter().map(|b| unit(dim, b)).collect()))
            .collect());
    }
    let spaces = simultaneous_eigenspaces(m.cartan(), dim, m.p())?;
    Ok(spaces
        .into_iter()
        .map(|(vals, basis)| (Weight::new(vals, m.datum().coords(), m.p()), basis))
        .collect())
}

pub(crate) fn unit(dim: usize, b: usize) -> Vec<u8> {
    let mut v = vec![0u8; dim];
    v[b] = 1;
    v
}

/// For each weight `μ`, a basis of `{v ∈ M_μ : e_k v = 0 for all k}`; zero spaces omitted.
pub fn maximal_vectors(m: &ModuleRep) -> Vec<(Weight, Vec<Vec<u8>>)> {
    let dim = m.dim();
    let p = m.p();
    let mut out = Vec::new();
    for (w, idx) in weight_indices(m) {
        let idx = &idx;
        let rows: Vec<Vec<u32>> = m
            .raising()
            .iter()
            .flat_map(|e| (0..dim).map(move |r| idx.iter().map(|&c| e.get(r, c)).collect::<Vec<u32>>()))
            .filter(|row| row.iter().any(|&x| x != 0))
            .collect();
        let null = if rows.is_empty() {
            (0..idx.len()).map(|k| unit(idx.len(), k)).collect()
        } else {
            Matrix::from_rows(&rows, p).nullspace()
        };
        if null.is_empty() {
            continue;
        }
        let basis = null
            .into_iter()
            .map(|y| {
                let mut v = vec![0u8; dim];
                for (k, &c) in idx.iter().enumerate() {
                    v[c] = y[k];
                }
                v
            })
            .collect();
        out.push((w, basis));
    }
    out
}

/// Weight multiplicities.
pub fn formal_character(m: &ModuleRep) -> BTreeMap<Weight, usize> {
    m.character()
}
