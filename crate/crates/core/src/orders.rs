//! Partitions inside the staircase and the natural unit interval orders they
//! encode.
//!
//! A shape `λ ⊆ stair(n)` is drawn in the south-west corner of an `n × n`
//! square with rows numbered from the top, so part `λ_r` fills row
//! `n + 1 - r` from column 1. The order `P(λ)` on `[n]` has `a ≺ b` iff
//! `a ≤ λ_{n+1-b}`.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::diagrams::{Crossing, StrandDiagram};
use crate::{Error, Partition, Result, PATTERN_GUARD, SHAPE_GUARD};

/// A partition contained in `stair(n) = (n-1, …, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StaircaseShape {
    n: usize,
    lambda: Partition,
}

/// A cell of the `n × n` square; `row` 1 is the top row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub column: usize,
    pub row: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeFilter {
    All,
    Avoiding211,
}

impl StaircaseShape {
    pub fn new(n: usize, lambda: Partition) -> Result<Self> {
        let fits = n >= 1 && lambda.parts().iter().enumerate().all(|(k, &p)| p + k < n);
        if !fits {
            return Err(Error::NotInStaircase {
                n,
                parts: lambda.parts().to_vec(),
            });
        }
        Ok(StaircaseShape { n, lambda })
    }

    pub fn from_parts(n: usize, parts: &[usize]) -> Result<Self> {
        Self::new(n, Partition::new(parts.to_vec())?)
    }

    /// `stair(n)` itself.
    pub fn staircase(n: usize) -> Result<Self> {
        Self::new(n, Partition::from_parts((1..n).rev()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// North-east inner corners of the Young diagram, listed north-west to
    /// south-east.
    pub fn corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        let mut last_row_index = 0;
        for (value, mult) in self.lambda.multiplicities() {
            last_row_index += mult;
            out.push(Cell {
                column: value,
                row: self.n + 1 - last_row_index,
            });
        }
        out.reverse();
        out
    }

    /// `P(λ)` avoids 2+1+1 iff every corner of `λ` is a corner of
    /// `stair(n)` or of `stair(n-1)`, i.e. sits one or two rows below the
    /// diagonal.
    pub fn is_211_avoiding(&self) -> bool {
        self.corners()
            .iter()
            .all(|c| c.row > c.column && c.row - c.column <= 2)
    }

    pub fn poset(&self) -> UIOrder {
        UIOrder {
            n: self.n,
            bounds: (1..=self.n)
                .map(|b| self.lambda.part(self.n + 1 - b))
                .collect(),
        }
    }

    /// The strand diagram of `P(λ)`: `[1, n-ℓ]`, then `[λ_{j+1}+1, n-j]` for
    /// each `j < ℓ` with `λ_j > λ_{j+1}` (north-west corners first), then
    /// `[λ_1+1, n]`. Size-1 crossings and repeated crossings are dropped.
    pub fn diagram(&self) -> StrandDiagram {
        let n = self.n;
        let l = self.lambda.len();
        let mut raw = Vec::with_capacity(l + 1);
        raw.push((1, n - l));
        for j in (1..l).rev() {
            if self.lambda.part(j) > self.lambda.part(j + 1) {
                raw.push((self.lambda.part(j + 1) + 1, n - j));
            }
        }
        raw.push((self.lambda.part(1) + 1, n));

        let mut crossings: Vec<Crossing> = Vec::new();
        for (i, j) in raw {
            if i >= j {
                continue;
            }
            let c = Crossing::new(i, j).expect("i < j");
            if crossings.last() != Some(&c) {
                crossings.push(c);
            }
        }
        StrandDiagram::new(n, crossings).expect("crossings fit inside [1, n]")
    }
}

/// Every `λ ⊆ stair(n)` in canonical partition order, optionally only the
/// 2+1+1-avoiding ones.
pub fn enumerate_shapes(n: usize, filter: ShapeFilter) -> Result<Vec<StaircaseShape>> {
    if n > SHAPE_GUARD {
        return Err(Error::GuardExceeded {
            what: "shape enumeration n",
            limit: SHAPE_GUARD as u64,
            requested: n as u64,
        });
    }
    if n == 0 {
        return Err(Error::NotInStaircase {
            n,
            parts: Vec::new(),
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_shapes(n, n, &mut current, &mut out);
    out.sort();
    let shapes = out.into_iter().map(|parts| {
        StaircaseShape::new(n, Partition::new(parts).expect("decreasing")).expect("fits")
    });
    Ok(match filter {
        ShapeFilter::All => shapes.collect(),
        ShapeFilter::Avoiding211 => shapes.filter(StaircaseShape::is_211_avoiding).collect(),
    })
}

fn collect_shapes(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(current.clone());
    let row = current.len() + 1;
    if row >= n {
        return;
    }
    for v in 1..=max.min(n - row) {
        current.push(v);
        collect_shapes(n, v, current, out);
        current.pop();
    }
}

/// The natural unit interval order `P(λ)` on `[n]`.
///
/// The elements below `b` always form the initial segment
/// `1..=λ_{n+1-b}`, so the order is stored as one bound per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UIOrder {
    n: usize,
    bounds: Vec<usize>,
}

impl UIOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `{a : a ≺ b}` for 1-based `b`.
    pub fn below(&self, b: usize) -> RangeInclusive<usize> {
        1..=self.bounds[b - 1]
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        a <= self.bounds[b - 1]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a != b && (self.precedes(a, b) || self.precedes(b, a))
    }

    /// All pairs `(a, b)` with `a ≺ b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (1..=self.n)
            .flat_map(|b| self.below(b).map(move |a| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn incomparability_graph(&self) -> IncompGraph {
        let n = self.n;
        let mut adjacency = alloc::vec![false; n * n];
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if !self.comparable(a, b) {
                    edges.push((a, b));
                    adjacency[(a - 1) * n + (b - 1)] = true;
                    adjacency[(b - 1) * n + (a - 1)] = true;
                }
            }
        }
        IncompGraph {
            n,
            edges,
            adjacency,
        }
    }
}

/// Searches for an induced copy of the disjoint union of chains with the
/// given lengths. Returns the chains (each increasing) when one exists.
pub fn find_pattern(order: &UIOrder, pattern: &[usize]) -> Result<Option<Vec<Vec<usize>>>> {
    if pattern.is_empty() || pattern.contains(&0) {
        return Err(Error::InvalidPattern(pattern.to_vec()));
    }
    let total: usize = pattern.iter().sum();
    if total > PATTERN_GUARD {
        return Err(Error::GuardExceeded {
            what: "pattern size",
            limit: PATTERN_GUARD as u64,
            requested: total as u64,
        });
    }
    let mut search = PatternSearch {
        order,
        pattern,
        chains: pattern.iter().map(|_| Vec::new()).collect(),
        used: alloc::vec![false; order.n + 1],
    };
    Ok(if search.extend(0) {
        Some(search.chains)
    } else {
        None
    })
}

pub fn avoids_pattern(order: &UIOrder, pattern: &[usize]) -> Result<bool> {
    Ok(find_pattern(order, pattern)?.is_none())
}

struct PatternSearch<'a> {
    order: &'a UIOrder,
    pattern: &'a [usize],
    chains: Vec<Vec<usize>>,
    used: Vec<bool>,
}

impl PatternSearch<'_> {
    fn extend(&mut self, chain: usize) -> bool {
        if chain == self.pattern.len() {
            return true;
        }
        if self.chains[chain].len() == self.pattern[chain] {
            return self.extend(chain + 1);
        }
        // natural labelling: a chain is increasing in the usual order
        let start = self.chains[chain].last().map_or(1, |&x| x + 1);
        for x in start..=self.order.n {
            if self.used[x] || !self.fits(chain, x) {
                continue;
            }
            self.used[x] = true;
            self.chains[chain].push(x);
            if self.extend(chain) {
                return true;
            }
            self.chains[chain].pop();
            self.used[x] = false;
        }
        false
    }

    fn fits(&self, chain: usize, x: usize) -> bool {
        if let Some(&prev) = self.chains[chain].last() {
            if !self.order.precedes(prev, x) {
                return false;
            }
        }
        self.chains
            .iter()
            .enumerate()
            .filter(|&(c, _)| c != chain)
            .all(|(_, other)| other.iter().all(|&y| !self.order.comparable(x, y)))
    }
}

/// The incomparability graph of a [`UIOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncompGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<bool>,
}

impl IncompGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency[(a - 1) * self.n + (b - 1)]
    }
}
