//! Brute-force reference computations, independent of the diagram calculus.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::orders::{IncompGraph, StaircaseShape};
use crate::{Basis, Error, Partition, Result, SymFun, PERMUTATION_GUARD, PROPER_COLORING_GUARD};

/// A bijection on `[n]`, stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-line notation with 1-based values, e.g. `[1, 3, 2, 4]`.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut seen = alloc::vec![false; n];
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(values.to_vec()));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: values.iter().map(|v| v - 1).collect(),
        })
    }

    /// Builds a permutation of `[n]` from disjoint cycles with 1-based entries.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = alloc::vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n || touched[a - 1] {
                    return Err(Error::InvalidPermutation(cycle.to_vec()));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub(crate) fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(k)` with 1-based `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Permutation { images: inv }
    }

    /// Cycles with 1-based entries, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        cycle_type_of(&self.images)
    }
}

pub(crate) fn cycle_type_of(images: &[usize]) -> Partition {
    let n = images.len();
    let mut seen = alloc::vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            len += 1;
            k = images[k];
        }
        lengths.push(len);
    }
    Partition::from_parts(lengths)
}

/// Cycle notation with fixed points, e.g. `(1)(243)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 && self.images.len() > 9 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_line())
    }
}

/// Lexicographic iteration over `S_n`.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            next: Some((0..n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[i - 1])
                .unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn permutation_guard(n: usize) -> Result<()> {
    if n > PERMUTATION_GUARD {
        return Err(Error::GuardExceeded {
            what: "permutation oracle size",
            limit: PERMUTATION_GUARD as u64,
            requested: n as u64,
        });
    }
    Ok(())
}

/// Calls `visit` on every `σ ∈ S_n` with `σ(k) > λ_{n+1-k}` for all `k`,
/// pruning on the position constraints.
fn for_each_restricted(shape: &StaircaseShape, mut visit: impl FnMut(&[usize])) {
    let n = shape.n();
    // lower[k] is the smallest allowed 0-based image of k
    let lower: Vec<usize> = (1..=n).map(|k| shape.lambda().part(n + 1 - k)).collect();
    let mut images = alloc::vec![0usize; n];
    let mut used = alloc::vec![false; n];

    fn go(
        k: usize,
        lower: &[usize],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == images.len() {
            visit(images);
            return;
        }
        for v in lower[k]..images.len() {
            if !used[v] {
                used[v] = true;
                images[k] = v;
                go(k + 1, lower, images, used, visit);
                used[v] = false;
            }
        }
    }

    go(0, &lower, &mut images, &mut used, &mut visit);
}

/// Every permutation avoiding the cells of `λ`, in lexicographic order.
pub fn restricted_permutations(shape: &StaircaseShape) -> Result<Vec<Permutation>> {
    permutation_guard(shape.n())?;
    let mut out = Vec::new();
    for_each_restricted(shape, |images| {
        out.push(Permutation::from_images_unchecked(images.to_vec()))
    });
    Ok(out)
}

/// `ch(Γ_λ) = Σ p_{cycletype(σ)}` over permutations with `σ(k) > λ_{n+1-k}`.
pub fn ch_gamma(shape: &StaircaseShape) -> Result<SymFun> {
    permutation_guard(shape.n())?;
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for_each_restricted(shape, |images| {
        *counts.entry(cycle_type_of(images)).or_default() += 1;
    });
    Ok(SymFun::from_int_terms(Basis::Power, counts))
}

/// Permanent of the 0/1 matrix `A[k][v] = [v > λ_{n+1-k}]` by Ryser's formula.
pub fn constraint_permanent(shape: &StaircaseShape) -> Result<i128> {
    permutation_guard(shape.n())?;
    let n = shape.n();
    let rows: Vec<Vec<i128>> = (1..=n)
        .map(|k| {
            let bound = shape.lambda().part(n + 1 - k);
            (1..=n).map(|v| i128::from(v > bound)).collect()
        })
        .collect();
    let mut total: i128 = 0;
    for subset in 1u32..(1 << n) {
        let mut product: i128 = 1;
        for row in &rows {
            let s: i128 = (0..n)
                .filter(|&c| subset & (1 << c) != 0)
                .map(|c| row[c])
                .sum();
            product *= s;
            if product == 0 {
                break;
            }
        }
        let sign = if (n - subset.count_ones() as usize).is_multiple_of(2) {
            1
        } else {
            -1
        };
        total += sign * product;
    }
    Ok(total)
}

/// Number of maps `[n] → [m]` that give adjacent vertices different colors.
pub fn proper_coloring_count(graph: &IncompGraph, m: u64) -> Result<u64> {
    let n = graph.n();
    let space = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(m));
    match space {
        Some(s) if s <= PROPER_COLORING_GUARD => {}
        _ => {
            return Err(Error::GuardExceeded {
                what: "coloring space m^n",
                limit: PROPER_COLORING_GUARD,
                requested: space.unwrap_or(u64::MAX),
            })
        }
    }
    let neighbours: Vec<Vec<usize>> = (1..=n)
        .map(|v| {
            (1..v)
                .filter(|&u| graph.adjacent(u, v))
                .map(|u| u - 1)
                .collect()
        })
        .collect();
    let mut colors = alloc::vec![0u64; n];

    fn count(v: usize, m: u64, neighbours: &[Vec<usize>], colors: &mut [u64]) -> u64 {
        if v == colors.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..m {
            if neighbours[v].iter().all(|&u| colors[u] != c) {
                colors[v] = c;
                total += count(v + 1, m, neighbours, colors);
            }
        }
        total
    }

    Ok(count(0, m, &neighbours, &mut colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::StaircaseShape;

    fn shape(n: usize, parts: &[usize]) -> StaircaseShape {
        StaircaseShape::new(n, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn cycle_types() {
        let s = Permutation::from_one_line(&[1, 3, 2, 4]).unwrap();
        assert_eq!(s.cycle_type(), Partition::from_parts([2, 1, 1]));
        assert_eq!(alloc::format!("{s}"), "(1)(23)(4)");
        assert_eq!(
            Permutation::identity(5).cycle_type(),
            Partition::from_parts([1; 5])
        );
        let c = Permutation::from_one_line(&[2, 3, 4, 1]).unwrap();
        assert_eq!(c.cycle_type(), Partition::from_parts([4]));
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }

    #[test]
    fn cycle_type_is_inverse_invariant() {
        for s in Permutations::new(6) {
            assert_eq!(s.cycle_type(), s.inverse().cycle_type());
        }
    }

    #[test]
    fn permutations_count() {
        assert_eq!(Permutations::new(0).count(), 1);
        assert_eq!(Permutations::new(5).count(), 120);
    }

    #[test]
    fn ch_gamma_examples() {
        let f = ch_gamma(&shape(4, &[2, 1])).unwrap();
        let expected = SymFun::from_int_terms(
            Basis::Power,
            [
                (Partition::from_parts([1, 1, 1, 1]), 1),
                (Partition::from_parts([2, 1, 1]), 3),
                (Partition::from_parts([3, 1]), 2),
                (Partition::from_parts([2, 2]), 1),
                (Partition::from_parts([4]), 1),
            ],
        );
        assert_eq!(f, expected);
        let stair = ch_gamma(&shape(5, &[4, 3, 2, 1])).unwrap();
        assert_eq!(
            stair,
            SymFun::basis_element(Basis::Power, Partition::from_parts([1; 5]))
        );
        assert!(matches!(
            ch_gamma(&shape(11, &[])),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn permanent_matches_count() {
        let s = shape(5, &[3, 1, 1]);
        let count = restricted_permutations(&s).unwrap().len() as i128;
        assert_eq!(constraint_permanent(&s).unwrap(), count);
        assert_eq!(constraint_permanent(&shape(4, &[])).unwrap(), 24);
    }

    #[test]
    fn colorings() {
        let path = shape(4, &[2, 1]).poset().incomparability_graph();
        assert_eq!(proper_coloring_count(&path, 2).unwrap(), 2);
        let triangle = shape(3, &[]).poset().incomparability_graph();
        assert_eq!(proper_coloring_count(&triangle, 3).unwrap(), 6);
        let edgeless = shape(4, &[3, 2, 1]).poset().incomparability_graph();
        assert_eq!(proper_coloring_count(&edgeless, 3).unwrap(), 81);
        assert!(proper_coloring_count(&edgeless, 1000).is_err());
    }
}
