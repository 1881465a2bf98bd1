use std::collections::{BTreeMap, HashMap};

use super::weights::weight_indices;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::roots::{Root, Weight};
use crate::uea::ModuleRep;

/// `dim Hom(M, N)` for modules over the same algebra and p-character.
///
/// A homomorphism preserves weight spaces, so unknowns are the entries of `T` pairing
/// equal weights; the intertwining equations for `e_k` and `f_k` are then solved.
pub fn hom_space_dim(m: &ModuleRep, n: &ModuleRep) -> Result<usize> {
    if m.datum() != n.datum() || m.chi() != n.chi() {
        return Err(Error::InvalidInput("hom spaces need the same algebra and p-character".into()));
    }
    let p = m.p();
    let wm = weight_indices(m);
    let wn = weight_indices(n);
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for (w, cols) in &wm {
        if let Some(rows) = wn.get(w) {
            for &r in rows {
                for &c in cols {
                    let k = index.len();
                    index.insert((r, c), k);
                }
            }
        }
    }
    let unknowns = index.len();
    if unknowns == 0 {
        return Ok(0);
    }
    let empty: Vec<usize> = Vec::new();
    let mut eqs = Echelon::new(unknowns, p);
    let gens: Vec<(Root, &Matrix, &Matrix)> = (1..m.n())
        .flat_map(|k| {
            [
                (Root::simple(k), m.e(k), n.e(k)),
                (Root::simple(k).negate(), m.f(k), n.f(k)),
            ]
        })
        .collect();
    for (root, am, an) in gens {
        let shift = m.datum().root_weight(root);
        let am_cols = sparse_columns(am);
        let an_cols = sparse_columns(an);
        for c in 0..m.dim() {
            let wc: &Weight = &m.weights()[c];
            let target = wc.add(&shift)?;
            let Some(rows) = wn.get(&target) else { continue };
            let same = wn.get(wc).unwrap_or(&empty);
            for &r in rows {
                // (A_N T − T A_M)[r, c]
                let mut eq = vec![0u8; unknowns];
                for &s in same {
                    let a = an_cols[s].get(&r).copied().unwrap_or(0);
                    if a != 0 {
                        let k = index[&(s, c)];
                        eq[k] = ((eq[k] as u32 + a) % p) as u8;
                    }
                }
                for (&s, &a) in &am_cols[c] {
                    if let Some(&k) = index.get(&(r, s)) {
                        eq[k] = ((eq[k] as u32 + p - a) % p) as u8;
                    }
                }
                eqs.insert(eq);
                if eqs.rank() == unknowns {
                    return Ok(0);
                }
            }
        }
    }
    Ok(unknowns - eqs.rank())
}

fn sparse_columns(a: &Matrix) -> Vec<BTreeMap<usize, u32>> {
    let mut cols = vec![BTreeMap::new(); a.cols()];
    for r in 0..a.rows() {
        for (c, &x) in a.row(r).iter().enumerate() {
            if x != 0 {
                cols[c].insert(r, x as u32);
            }
        }
    }
    cols
}
