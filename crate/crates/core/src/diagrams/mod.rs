//! Strand diagrams and the trace calculus on them.
//!
//! A diagram on `n` strands is a bottom-to-top list of crossings `[i, j]`; a
//! crossing lets the strands `i..=j` leave in any order. A coloring of the
//! diagram picks one permutation per crossing and yields the composite
//! permutation sending bottom positions to top positions, later crossings
//! acting after earlier ones.

mod colored;
mod partial;
mod reduce;
mod search;
mod trace;

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use colored::{colored_permutations, coloring_count, diagram_csf, weighted_csf, CsfMode};
pub use partial::{
    closed_form_single_crossing, closed_form_single_crossing_raw, iterate_trace_partial, partial,
    PartialCombo,
};
pub use reduce::{reduce_diagram, reduce_to_h, Reduction};
pub use search::{
    all_crossings, evaluate_diagram, generate_diagrams, search_general, SearchMode, SearchRecord,
};
pub use trace::{full_trace, trace_weighted, DiagramCombo};

/// The crossing `[i, j]`, engaging strands `i` through `j` (1-based, `i < j`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Crossing {
    i: usize,
    j: usize,
}

impl Crossing {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidCrossing { i, j, strands: j });
        }
        Ok(Crossing { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn size(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn engages(&self, strand: usize) -> bool {
        self.i <= strand && strand <= self.j
    }
}

impl fmt::Debug for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrandDiagram {
    strands: usize,
    crossings: Vec<Crossing>,
}

impl StrandDiagram {
    pub fn new(strands: usize, crossings: Vec<Crossing>) -> Result<Self> {
        if let Some(c) = crossings.iter().find(|c| c.j > strands) {
            return Err(Error::InvalidCrossing {
                i: c.i,
                j: c.j,
                strands,
            });
        }
        Ok(StrandDiagram { strands, crossings })
    }

    /// From `(i, j)` pairs, bottom to top.
    pub fn from_pairs(strands: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let crossings = pairs
            .iter()
            .map(|&(i, j)| {
                Crossing::new(i, j).map_err(|_| Error::InvalidCrossing { i, j, strands })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, crossings)
    }

    /// `n` parallel strands.
    pub fn identity(strands: usize) -> Self {
        StrandDiagram {
            strands,
            crossings: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// The top-most (right-most) crossing.
    pub fn top(&self) -> Option<&Crossing> {
        self.crossings.last()
    }

    /// Both endpoint sequences strictly increase, bottom to top.
    pub fn is_staircase_like(&self) -> bool {
        self.crossings
            .windows(2)
            .all(|w| w[0].i < w[1].i && w[0].j < w[1].j)
    }

    /// Every pair of consecutive crossings shares at most the right-most
    /// strand of the lower one.
    pub fn has_single_strand_overlaps(&self) -> bool {
        self.crossings.windows(2).all(|w| w[1].i >= w[0].j)
    }
}

impl fmt::Debug for StrandDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `n=4; [2,3] [1,2] [3,4] [2,3]`
impl fmt::Display for StrandDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.strands)?;
        for c in &self.crossings {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

/// A strand diagram with `weights[s-1]` dots on top of strand `s`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedDiagram {
    diagram: StrandDiagram,
    weights: Vec<usize>,
}

impl WeightedDiagram {
    pub fn new(diagram: StrandDiagram, weights: Vec<usize>) -> Result<Self> {
        if weights.len() != diagram.strands {
            return Err(Error::InvalidWeights {
                expected: diagram.strands,
                found: weights.len(),
            });
        }
        Ok(WeightedDiagram { diagram, weights })
    }

    pub fn unweighted(diagram: StrandDiagram) -> Self {
        let weights = alloc::vec![0; diagram.strands];
        WeightedDiagram { diagram, weights }
    }

    /// `D^dots`: the diagram with `dots` dots on its right-most strand.
    pub fn with_last_dots(diagram: StrandDiagram, dots: usize) -> Result<Self> {
        let mut w = Self::unweighted(diagram);
        match w.weights.last_mut() {
            Some(last) => *last = dots,
            None => return Err(Error::NoStrands),
        }
        Ok(w)
    }

    pub fn diagram(&self) -> &StrandDiagram {
        &self.diagram
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn strands(&self) -> usize {
        self.diagram.strands
    }

    pub fn total_dots(&self) -> usize {
        self.weights.iter().sum()
    }
}

impl fmt::Debug for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} dots={:?}", self.diagram, self.weights)
    }
}
