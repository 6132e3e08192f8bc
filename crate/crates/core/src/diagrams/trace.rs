//! The trace: closing the last strand of a weighted staircase-like diagram.
//!
//! For `D` with weights `(a_1, …, a_n)`, `tr(D)` deletes strand `n` (the
//! top crossing `[i, n]` shrinks to `[i, n-1]` and disappears once it has a
//! single strand) and returns
//!
//! * `p_{a_n + 1} · D'`, plus
//! * one copy of `D'` with `a_n + 1` extra dots on strand `s`, for every
//!   `s ∈ {i, …, n-1}`, when strand `n` was engaged by the top crossing.
//!
//! Closing a lone strand with `a` dots leaves the scalar `p_{a+1}` on the
//! empty diagram.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::format;
use alloc::vec::Vec;

use super::{colored::weighted_csf, StrandDiagram, WeightedDiagram};
use crate::{Basis, Error, Result, SymFun};

/// A finite `Λ`-linear combination of weighted diagrams. Coefficients are
/// kept in the p basis.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct DiagramCombo {
    terms: BTreeMap<WeightedDiagram, SymFun>,
}

impl DiagramCombo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(diagram: WeightedDiagram) -> Self {
        let mut combo = Self::new();
        combo.add_term(diagram, SymFun::one(Basis::Power));
        combo
    }

    pub fn add_term(&mut self, diagram: WeightedDiagram, coeff: SymFun) {
        let coeff = coeff.to_basis(Basis::Power);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(diagram) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &DiagramCombo, factor: &SymFun) {
        let factor = factor.to_basis(Basis::Power);
        for (d, c) in &other.terms {
            self.add_term(d.clone(), c * &factor);
        }
    }

    pub fn terms(&self) -> btree_map::Iter<'_, WeightedDiagram, SymFun> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The symmetric function once every diagram has been closed; `None`
    /// while some term still has strands.
    pub fn value(&self) -> Option<SymFun> {
        let mut total = SymFun::zero(Basis::Power);
        for (d, c) in &self.terms {
            if d.strands() != 0 {
                return None;
            }
            total.add_assign_scaled(c, &crate::symfun::int(1));
        }
        Some(total)
    }

    /// Applies the trace to every term.
    pub fn trace(&self) -> Result<DiagramCombo> {
        let mut out = DiagramCombo::new();
        for (d, c) in &self.terms {
            out.add_scaled(&trace_weighted(d)?, c);
        }
        Ok(out)
    }

    /// Traces until no strands remain.
    pub fn trace_to_end(&self) -> Result<SymFun> {
        let mut combo = self.clone();
        loop {
            if let Some(v) = combo.value() {
                return Ok(v);
            }
            combo = combo.trace()?;
        }
    }

    /// Evaluates every diagram by brute force over its colorings.
    pub fn evaluate(&self) -> Result<SymFun> {
        let mut total = SymFun::zero(Basis::Power);
        for (d, c) in &self.terms {
            total.add_assign_scaled(&(c * &weighted_csf(d)?), &crate::symfun::int(1));
        }
        Ok(total)
    }
}

impl core::fmt::Debug for DiagramCombo {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub fn trace_weighted(wd: &WeightedDiagram) -> Result<DiagramCombo> {
    let diagram = wd.diagram();
    let n = diagram.strands();
    if n == 0 {
        return Err(Error::NoStrands);
    }
    if !diagram.is_staircase_like() {
        return Err(Error::NonTraceable(format!(
            "{diagram} is not staircase-like"
        )));
    }
    let dots = wd.weights()[n - 1] + 1;
    let mut crossings = diagram.crossings().to_vec();
    let shrunk = match crossings.last().copied() {
        Some(top) if top.j() == n => {
            crossings.pop();
            if top.i() < n - 1 {
                crossings.push(super::Crossing::new(top.i(), n - 1)?);
            }
            Some(top.i())
        }
        _ => None,
    };
    let reduced = StrandDiagram::new(n - 1, crossings)?;
    if !reduced.is_staircase_like() {
        return Err(Error::NonTraceable(format!(
            "closing strand {n} of {diagram} leaves {reduced}, which is not staircase-like"
        )));
    }
    let weights: Vec<usize> = wd.weights()[..n - 1].to_vec();

    let mut out = DiagramCombo::new();
    out.add_term(
        WeightedDiagram::new(reduced.clone(), weights.clone())?,
        SymFun::p(dots),
    );
    if let Some(first) = shrunk {
        for s in first..n {
            let mut w = weights.clone();
            w[s - 1] += dots;
            out.add_term(
                WeightedDiagram::new(reduced.clone(), w)?,
                SymFun::one(Basis::Power),
            );
        }
    }
    Ok(out)
}

/// Iterated trace of an unweighted diagram down to a symmetric function.
pub fn full_trace(d: &StrandDiagram) -> Result<SymFun> {
    DiagramCombo::single(WeightedDiagram::unweighted(d.clone())).trace_to_end()
}
