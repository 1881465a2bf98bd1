use std::collections::BTreeMap;

use super::label::label_of_simple;
use super::ops::SparseOps;
use super::spin::spin_bounded;
use super::subquotient::{quotient, submodule};
use super::weights::maximal_vectors;
use crate::error::Result;
use crate::linalg::{enumerate_lines, Echelon};
use crate::roots::Weight;
use crate::uea::ModuleRep;
use crate::Limits;

/// A composition factor: its label, dimension and the simple subquotient itself.
#[derive(Clone, Debug)]
pub struct Factor {
    pub label: Weight,
    pub dim: usize,
    pub module: ModuleRep,
}

/// Composition factors from the bottom up.
#[derive(Clone, Debug)]
pub struct CompSeries {
    pub factors: Vec<Factor>,
}

impl CompSeries {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Label → multiplicity.
    pub fn multiset(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            *out.entry(f.label.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).sum()
    }
}

/// Maximal lines of `m`, grouped by weight ascending, each in enumeration order.
pub(crate) fn maximal_lines(m: &ModuleRep, limits: &Limits) -> Result<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    for (_, basis) in maximal_vectors(m) {
        for c in enumerate_lines(basis.len(), m.p(), limits.line_cap)? {
            let mut v = vec![0u8; m.dim()];
            for (b, &x) in basis.iter().zip(&c) {
                if x != 0 {
                    crate::linalg::matrix::axpy(&mut v, b, x as u32, m.p());
                }
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// The smallest proper submodule generated by a maximal line, if any.
///
/// Such a submodule is simple: a proper nonzero submodule of it would contain a maximal
/// line spinning to something smaller still.
pub(crate) fn smallest_proper_spin(m: &ModuleRep, ops: &SparseOps, limits: &Limits) -> Result<Option<Echelon>> {
    let dim = m.dim();
    let mut best: Option<Echelon> = None;
    for line in maximal_lines(m, limits)? {
        let bound = best.as_ref().map_or(dim, |b| b.rank());
        let (span, finished) = spin_bounded(ops, dim, m.p(), &[line], Some(bound));
        if finished && span.rank() < bound {
            best = Some(span);
        }
    }
    Ok(best)
}

/// Composition series by repeatedly splitting off a simple submodule.
pub fn composition_series(m: &ModuleRep) -> Result<CompSeries> {
    composition_series_limited(m, &Limits::default())
}

pub fn composition_series_limited(m: &ModuleRep, limits: &Limits) -> Result<CompSeries> {
    let mut factors = Vec::new();
    let mut current = m.clone();
    while current.dim() > 0 {
        let ops = SparseOps::of_module(&current);
        match smallest_proper_spin(&current, &ops, limits)? {
            Some(s) => {
                let simple = submodule(&current, &s)?;
                push_factor(&mut factors, simple)?;
                current = quotient(&current, &s)?;
            }
            None => {
                push_factor(&mut factors, current)?;
                break;
            }
        }
    }
    Ok(CompSeries { factors })
}

fn push_factor(factors: &mut Vec<Factor>, module: ModuleRep) -> Result<()> {
    let label = label_of_simple(&module)?;
    let module = module.with_label(format!("L({label})"));
    factors.push(Factor { label, dim: module.dim(), module });
    Ok(())
}

/// Whether every maximal line generates the whole module.
pub fn is_simple(m: &ModuleRep) -> Result<bool> {
    is_simple_limited(m, &Limits::default())
}

pub fn is_simple_limited(m: &ModuleRep, limits: &Limits) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let ops = SparseOps::of_module(m);
    for line in maximal_lines(m, limits)? {
        let (span, _) = spin_bounded(&ops, m.dim(), m.p(), &[line], None);
        if span.rank() < m.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the socle series has simple layers, i.e. the submodules form a chain.
pub fn is_uniserial(m: &ModuleRep) -> Result<bool> {
    is_uniserial_limited(m, &Limits::default())
}

pub fn is_uniserial_limited(m: &ModuleRep, limits: &Limits) -> Result<bool> {
    let mut current = m.clone();
    loop {
        let ops = SparseOps::of_module(&current);
        let Some(s) = smallest_proper_spin(&current, &ops, limits)? else {
            return Ok(true);
        };
        // The socle is simple iff every maximal line generates a submodule containing s.
        let seed = s.basis();
        for line in maximal_lines(&current, limits)? {
            let (span, _) = spin_bounded(&ops, current.dim(), current.p(), &[line], None);
            if !seed.iter().all(|v| span.contains(v)) {
                return Ok(false);
            }
        }
        current = quotient(&current, &s)?;
    }
}
