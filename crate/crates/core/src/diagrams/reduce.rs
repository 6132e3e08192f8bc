//! Reduction of `∂_0 D` to an h-positive symmetric function.
//!
//! Each step removes the top crossing `[i, n]` of every term by substituting
//! the single-crossing closed form, which leaves the `∂` decoration on strand
//! `i`, now the right-most strand. A decorated strand that no crossing
//! engages is closed directly: `tr(∂_b |) = (b+1) h_{b+1}`.

use alloc::format;
use alloc::vec::Vec;

use super::{closed_form_single_crossing, Crossing, PartialCombo, StrandDiagram};
use crate::orders::StaircaseShape;
use crate::symfun::int;
use crate::{Basis, Error, Result, SymFun};

#[derive(Clone, Debug)]
pub struct Reduction {
    pub diagram: StrandDiagram,
    /// Every intermediate combination, starting at `∂_0 D` and ending with
    /// all strands closed.
    pub steps: Vec<PartialCombo>,
    /// The result, in the h basis.
    pub value: SymFun,
}

/// Reduces the diagram of `shape`. With `require_211`, shapes containing
/// 2+1+1 are rejected up front instead of failing midway.
pub fn reduce_to_h(shape: &StaircaseShape, require_211: bool) -> Result<Reduction> {
    if require_211 && !shape.is_211_avoiding() {
        return Err(Error::Contains211 {
            n: shape.n(),
            parts: shape.lambda().parts().to_vec(),
        });
    }
    reduce_diagram(&shape.diagram())
}

pub fn reduce_diagram(d: &StrandDiagram) -> Result<Reduction> {
    if !d.is_staircase_like() {
        return Err(Error::NonTraceable(format!("{d} is not staircase-like")));
    }
    let mut current = PartialCombo::single(d.clone(), 0);
    let mut steps = alloc::vec![current.clone()];
    loop {
        if let Some(value) = current.value() {
            return Ok(Reduction {
                diagram: d.clone(),
                steps,
                value,
            });
        }
        let mut next = PartialCombo::new();
        for ((diagram, b), coeff) in current.terms() {
            if diagram.strands() == 0 {
                next.add_term(diagram.clone(), *b, coeff.clone());
                continue;
            }
            step(diagram, *b, coeff, &mut next)?;
        }
        current = next;
        steps.push(current.clone());
    }
}

fn step(d: &StrandDiagram, b: usize, coeff: &SymFun, out: &mut PartialCombo) -> Result<()> {
    let n = d.strands();
    let crossings = d.crossings();
    let top = match crossings.last() {
        Some(top) if top.j() == n => *top,
        _ => {
            let collapsed = SymFun::h(b + 1).scale(&int(b as i64 + 1));
            let rest = StrandDiagram::new(n - 1, crossings.to_vec())?;
            out.add_term(rest, 0, coeff * &collapsed);
            return Ok(());
        }
    };
    let lower: Vec<Crossing> = crossings[..crossings.len() - 1].to_vec();
    if let Some(c) = lower.iter().find(|c| c.j() > top.i()) {
        return Err(Error::NonTraceable(format!(
            "crossing {c} of {d} overlaps the top crossing {top} in more than one strand"
        )));
    }
    let rest = StrandDiagram::new(top.i(), lower)?;
    for ((_, b2), c2) in closed_form_single_crossing(top.size(), b)?.terms() {
        out.add_term(rest.clone(), *b2, coeff * c2);
    }
    Ok(())
}

impl Reduction {
    /// `deg(coeff) + b + strands` equals the strand count of the original
    /// diagram in every step.
    pub fn degrees_consistent(&self) -> bool {
        let n = self.diagram.strands();
        self.steps
            .iter()
            .all(|s| s.total_degrees().iter().all(|&d| d == n))
    }

    pub fn all_steps_h_nonnegative(&self) -> bool {
        self.steps.iter().all(PartialCombo::is_h_nonnegative)
    }

    pub fn is_h_positive(&self) -> bool {
        self.value.basis() == Basis::Homogeneous && self.value.is_nonnegative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ch_gamma;
    use crate::Partition;

    fn h(parts: &[usize], c: i64) -> SymFun {
        SymFun::term(
            Basis::Homogeneous,
            Partition::from_parts(parts.iter().copied()),
            int(c),
        )
    }

    #[test]
    fn worked_example() {
        let shape = StaircaseShape::from_parts(4, &[2, 1]).unwrap();
        let r = reduce_to_h(&shape, true).unwrap();
        assert_eq!(r.value, &(&h(&[4], 4) + &h(&[3, 1], 2)) + &h(&[2, 2], 2));

        let d3 = StrandDiagram::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        let d2 = StrandDiagram::from_pairs(2, &[(1, 2)]).unwrap();
        let d1 = StrandDiagram::identity(1);
        assert_eq!(r.steps[1], PartialCombo::single(d3, 1));
        let mut s2 = PartialCombo::single(d2.clone(), 2);
        s2.add_term(d2, 0, SymFun::h(2));
        assert_eq!(r.steps[2], s2);
        let mut s3 = PartialCombo::single(d1.clone(), 3);
        s3.add_term(d1.clone(), 0, h(&[3], 2));
        s3.add_term(d1, 1, SymFun::h(2));
        assert_eq!(r.steps[3], s3);
        assert_eq!(r.steps.len(), 5);
        assert!(r.degrees_consistent());
        assert!(r.all_steps_h_nonnegative());
    }

    #[test]
    fn empty_shape() {
        let r = reduce_to_h(&StaircaseShape::from_parts(3, &[]).unwrap(), true).unwrap();
        assert_eq!(r.value, h(&[3], 6));
    }

    #[test]
    fn free_strands_collapse() {
        let shape = StaircaseShape::from_parts(4, &[2, 2]).unwrap();
        let r = reduce_to_h(&shape, true).unwrap();
        assert_eq!(
            r.value,
            ch_gamma(&shape).unwrap().to_basis(Basis::Homogeneous)
        );
        let stair = StaircaseShape::staircase(4).unwrap();
        assert_eq!(
            reduce_to_h(&stair, true).unwrap().value,
            h(&[1, 1, 1, 1], 1)
        );
    }

    #[test]
    fn larger_shape_matches_oracle() {
        let shape = StaircaseShape::from_parts(6, &[4, 3, 1, 1]).unwrap();
        let r = reduce_to_h(&shape, true).unwrap();
        assert_eq!(
            r.value,
            ch_gamma(&shape).unwrap().to_basis(Basis::Homogeneous)
        );
        assert!(r.is_h_positive());
        assert!(r.degrees_consistent());
    }

    #[test]
    fn contains_211() {
        let shape = StaircaseShape::from_parts(4, &[1]).unwrap();
        assert!(matches!(
            reduce_to_h(&shape, true),
            Err(Error::Contains211 { .. })
        ));
        assert!(matches!(
            reduce_to_h(&shape, false),
            Err(Error::NonTraceable(_))
        ));
    }
}
