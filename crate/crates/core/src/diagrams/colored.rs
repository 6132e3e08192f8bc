use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{StrandDiagram, WeightedDiagram};
use crate::oracle::{Permutation, Permutations};
use crate::{Basis, Error, Partition, Result, SymFun, COLORING_GUARD};

/// How colorings inducing the same permutation are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsfMode {
    /// Each induced permutation once.
    Distinct,
    /// Each coloring once.
    Multiset,
}

/// `∏_k (size of crossing k)!`, or `None` on overflow.
pub fn coloring_count(d: &StrandDiagram) -> Option<u64> {
    d.crossings().iter().try_fold(1u64, |acc, c| {
        (1..=c.size() as u64).try_fold(acc, |a, k| a.checked_mul(k))
    })
}

fn check_guard(d: &StrandDiagram) -> Result<()> {
    match coloring_count(d) {
        Some(count) if count <= COLORING_GUARD => Ok(()),
        other => Err(Error::GuardExceeded {
            what: "colorings of diagram",
            limit: COLORING_GUARD,
            requested: other.unwrap_or(u64::MAX),
        }),
    }
}

/// Composite permutations of every coloring, with multiplicity.
///
/// Colorings are folded crossing by crossing: the map holds, for the diagram
/// cut above the current crossing, how many colorings induce each
/// permutation.
pub fn colored_permutations(d: &StrandDiagram) -> Result<BTreeMap<Permutation, u64>> {
    check_guard(d)?;
    let n = d.strands();
    let mut layer: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    layer.insert((0..n).collect(), 1);
    for c in d.crossings() {
        let offset = c.i() - 1;
        let local: Vec<Permutation> = Permutations::new(c.size()).collect();
        let mut next: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (sigma, count) in &layer {
            for tau in &local {
                let tau = tau.images();
                let composite: Vec<usize> = sigma
                    .iter()
                    .map(|&y| {
                        if y >= offset && y < offset + tau.len() {
                            offset + tau[y - offset]
                        } else {
                            y
                        }
                    })
                    .collect();
                *next.entry(composite).or_default() += count;
            }
        }
        layer = next;
    }
    Ok(layer
        .into_iter()
        .map(|(images, count)| (Permutation::from_images_unchecked(images), count))
        .collect())
}

/// `Σ p_{cycletype(σ)}` over the colorings of `d`.
pub fn diagram_csf(d: &StrandDiagram, mode: CsfMode) -> Result<SymFun> {
    let perms = colored_permutations(d)?;
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for (sigma, mult) in perms {
        let weight = match mode {
            CsfMode::Distinct => 1,
            CsfMode::Multiset => mult as i64,
        };
        *counts.entry(sigma.cycle_type()).or_default() += weight;
    }
    Ok(SymFun::from_int_terms(Basis::Power, counts))
}

/// Direct evaluation of a weighted diagram: every coloring contributes
/// `∏_cycles p_{Σ_{s ∈ cycle} (1 + dots_s)}`.
pub fn weighted_csf(wd: &WeightedDiagram) -> Result<SymFun> {
    let perms = colored_permutations(wd.diagram())?;
    let weights = wd.weights();
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for (sigma, mult) in perms {
        let images = sigma.images();
        let mut seen = alloc::vec![false; images.len()];
        let mut parts = Vec::new();
        for start in 0..images.len() {
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                len += 1 + weights[k];
                k = images[k];
            }
            if len > 0 {
                parts.push(len);
            }
        }
        *counts.entry(Partition::from_parts(parts)).or_default() += mult as i64;
    }
    Ok(SymFun::from_int_terms(Basis::Power, counts))
}
