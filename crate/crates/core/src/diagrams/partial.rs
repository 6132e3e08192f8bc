//! The operator `∂_k D = h_k D + h_{k-1} D^1 + ⋯ + h_0 D^k`, where `D^j`
//! carries `j` dots on its right-most strand, and the closed forms for
//! tracing a single crossing down to one strand.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{DiagramCombo, StrandDiagram, WeightedDiagram};
use crate::symfun::{factorial, int};
use crate::{Basis, Error, Result, SymFun};

/// `∂_k D` as a combination of weighted diagrams.
pub fn partial(d: &StrandDiagram, k: usize) -> Result<DiagramCombo> {
    let mut out = DiagramCombo::new();
    for j in 0..=k {
        out.add_term(
            WeightedDiagram::with_last_dots(d.clone(), j)?,
            SymFun::h(k - j),
        );
    }
    Ok(out)
}

/// `Σ coeff · ∂_b(D)` over terms `(D, b)`. Coefficients are kept in the h
/// basis.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PartialCombo {
    terms: BTreeMap<(StrandDiagram, usize), SymFun>,
}

impl PartialCombo {
    pub fn new() -> Self {
        Self::default()
    }

    /// `∂_b D` with coefficient 1.
    pub fn single(d: StrandDiagram, b: usize) -> Self {
        let mut combo = Self::new();
        combo.add_term(d, b, SymFun::one(Basis::Homogeneous));
        combo
    }

    pub fn add_term(&mut self, d: StrandDiagram, b: usize, coeff: SymFun) {
        let coeff = coeff.to_basis(Basis::Homogeneous);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((d, b)) {
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

    pub fn terms(&self) -> btree_map::Iter<'_, (StrandDiagram, usize), SymFun> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &StrandDiagram, b: usize) -> Option<&SymFun> {
        self.terms.get(&(d.clone(), b))
    }

    /// Replaces each `∂_b D` by `Σ_j h_{b-j} D^j`.
    pub fn expand(&self) -> Result<DiagramCombo> {
        let mut out = DiagramCombo::new();
        for ((d, b), c) in &self.terms {
            out.add_scaled(&partial(d, *b)?, c);
        }
        Ok(out)
    }

    /// Whether every h-coefficient of every term is nonnegative.
    pub fn is_h_nonnegative(&self) -> bool {
        self.terms.values().all(SymFun::is_nonnegative)
    }

    /// `deg(coeff) + b + strands` for each term, deduplicated. A single
    /// value means the combination is homogeneous.
    pub fn total_degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .terms
            .iter()
            .flat_map(|((d, b), c)| {
                c.terms()
                    .map(move |(l, _)| l.size() + b + d.strands())
                    .collect::<Vec<_>>()
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Sum of the coefficients once every diagram is empty.
    pub fn value(&self) -> Option<SymFun> {
        let mut total = SymFun::zero(Basis::Homogeneous);
        for ((d, _), c) in &self.terms {
            if d.strands() != 0 {
                return None;
            }
            total.add_assign_scaled(c, &int(1));
        }
        Some(total)
    }
}

impl core::fmt::Debug for PartialCombo {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut map = f.debug_map();
        for ((d, b), c) in &self.terms {
            map.entry(&alloc::format!("∂_{b} {d}"), c);
        }
        map.finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::CrossingTooSmall(n));
    }
    Ok(())
}

fn factorial_coeff(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(factorial(n)))
}

/// `tr^{n-1}(∂_k [1,n])` as a combination of `∂_b` on a single strand:
/// `(n-2)! Σ_{i=2}^{n} (i-1) h_{n-i} ∂_{k+i-1} + (k+i-n) h_{k+i-1} ∂_{n-i}`.
///
/// The negative terms cancel against positive ones, so every net
/// coefficient is a nonnegative multiple of a single `h_m`.
pub fn closed_form_single_crossing(n: usize, k: usize) -> Result<PartialCombo> {
    check_size(n)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let mut net: BTreeMap<usize, SymFun> = BTreeMap::new();
    for i in 2..=n {
        let i_i = i as i64;
        net.entry(k + i - 1)
            .or_insert_with(|| SymFun::zero(Basis::Homogeneous))
            .add_assign_scaled(&SymFun::h(n - i), &int(i_i - 1));
        net.entry(n - i)
            .or_insert_with(|| SymFun::zero(Basis::Homogeneous))
            .add_assign_scaled(&SymFun::h(k + i - 1), &int(k_i + i_i - n_i));
    }
    let scale = factorial_coeff(n - 2);
    let strand = StrandDiagram::identity(1);
    let mut out = PartialCombo::new();
    for (b, coeff) in net {
        assert!(
            coeff.len() <= 1 && coeff.terms().all(|(_, c)| !c.is_negative()),
            "closed form for n={n}, k={k} left {coeff} on ∂_{b}"
        );
        out.add_term(strand.clone(), b, coeff.scale(&scale));
    }
    Ok(out)
}

/// The same quantity in the uncancelled dot form:
/// `(n-2)! Σ_{j=0}^{k} h_{k-j} [ Σ_{i=2}^{n} (i-1) h_{n-i} |^{i+j-1}
///  + Σ_{i=1}^{n-1} Σ_{l=1}^{n-i} h_{n-l-i} p_{l+j} |^{i-1} ]`.
pub fn closed_form_single_crossing_raw(n: usize, k: usize) -> Result<DiagramCombo> {
    check_size(n)?;
    let strand = StrandDiagram::identity(1);
    let dotted = |d: usize| WeightedDiagram::with_last_dots(strand.clone(), d);
    let mut out = DiagramCombo::new();
    for j in 0..=k {
        let outer = SymFun::h(k - j);
        for i in 2..=n {
            let c = (&outer * &SymFun::h(n - i)).scale(&int(i as i64 - 1));
            out.add_term(dotted(i + j - 1)?, c);
        }
        let outer = outer.to_basis(Basis::Power);
        for i in 1..n {
            for l in 1..=n - i {
                let h = SymFun::h(n - l - i).to_basis(Basis::Power);
                let c = &(&outer * &h) * &SymFun::p(l + j);
                out.add_term(dotted(i - 1)?, c);
            }
        }
    }
    let scale = SymFun::term(
        Basis::Power,
        crate::Partition::empty(),
        factorial_coeff(n - 2),
    );
    let mut scaled = DiagramCombo::new();
    scaled.add_scaled(&out, &scale);
    Ok(scaled)
}

/// `tr^{steps}(∂_k D)` by repeated application of the trace.
pub fn iterate_trace_partial(d: &StrandDiagram, k: usize, steps: usize) -> Result<DiagramCombo> {
    let mut combo = partial(d, k)?;
    for _ in 0..steps {
        combo = combo.trace()?;
    }
    Ok(combo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Partition;

    fn strand() -> StrandDiagram {
        StrandDiagram::identity(1)
    }

    fn hint(parts: &[usize], c: i64) -> SymFun {
        SymFun::term(
            Basis::Homogeneous,
            Partition::from_parts(parts.iter().copied()),
            int(c),
        )
    }

    fn combo(terms: &[(usize, SymFun)]) -> PartialCombo {
        let mut out = PartialCombo::new();
        for (b, c) in terms {
            out.add_term(strand(), *b, c.clone());
        }
        out
    }

    #[test]
    fn partial_terms() {
        let d = StrandDiagram::from_pairs(3, &[(1, 3)]).unwrap();
        assert_eq!(
            partial(&d, 0).unwrap(),
            DiagramCombo::single(WeightedDiagram::unweighted(d.clone()))
        );
        let p2 = partial(&d, 2).unwrap();
        assert_eq!(p2.len(), 3);
        let mut expected = DiagramCombo::new();
        expected.add_term(
            WeightedDiagram::with_last_dots(d.clone(), 0).unwrap(),
            SymFun::h(2),
        );
        expected.add_term(
            WeightedDiagram::with_last_dots(d.clone(), 1).unwrap(),
            SymFun::h(1),
        );
        expected.add_term(WeightedDiagram::with_last_dots(d, 2).unwrap(), SymFun::h(0));
        assert_eq!(p2, expected);
    }

    #[test]
    fn trace_of_partial_on_a_strand() {
        for i in 0..6 {
            let v = iterate_trace_partial(&strand(), i, 1)
                .unwrap()
                .value()
                .unwrap();
            assert_eq!(v.to_basis(Basis::Homogeneous), hint(&[i + 1], i as i64 + 1));
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form_single_crossing(2, 0).unwrap(),
            combo(&[(1, hint(&[], 1))])
        );
        assert_eq!(
            closed_form_single_crossing(4, 0).unwrap(),
            combo(&[(3, hint(&[], 6))])
        );
        assert_eq!(
            closed_form_single_crossing(3, 1).unwrap(),
            combo(&[(2, hint(&[1], 1)), (3, hint(&[], 2)), (0, hint(&[3], 1))])
        );
        assert_eq!(
            closed_form_single_crossing(2, 2).unwrap(),
            combo(&[(3, hint(&[], 1)), (0, hint(&[3], 2))])
        );
        assert!(closed_form_single_crossing(1, 0).is_err());
        assert!(closed_form_single_crossing_raw(0, 0).is_err());
    }

    #[test]
    fn brute_force_matches_closed_forms_small() {
        let d = StrandDiagram::from_pairs(3, &[(1, 3)]).unwrap();
        let brute = iterate_trace_partial(&d, 0, 2).unwrap();
        assert_eq!(brute, combo(&[(2, hint(&[], 2))]).expand().unwrap());
        let d = StrandDiagram::from_pairs(2, &[(1, 2)]).unwrap();
        let brute = iterate_trace_partial(&d, 2, 1).unwrap();
        assert_eq!(
            brute,
            closed_form_single_crossing(2, 2).unwrap().expand().unwrap()
        );
        assert_eq!(brute, closed_form_single_crossing_raw(2, 2).unwrap());
        let d = StrandDiagram::from_pairs(4, &[(1, 4)]).unwrap();
        let v = iterate_trace_partial(&d, 0, 4).unwrap().value().unwrap();
        assert_eq!(v.to_basis(Basis::Homogeneous), hint(&[4], 24));
    }

    #[test]
    fn degree_bookkeeping() {
        let c = closed_form_single_crossing(5, 3).unwrap();
        assert_eq!(c.total_degrees(), alloc::vec![5 + 3]);
        assert!(c.is_h_nonnegative());
    }
}
