//! Search for h-negative diagrams among arbitrary concatenations of
//! crossings.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{diagram_csf, Crossing, CsfMode, StrandDiagram};
use crate::{Basis, Error, Positivity, Result, SymFun, SEARCH_GUARD};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every crossing sequence of length `1..=max_crossings`, shortest first,
    /// then lexicographically.
    Exhaustive,
    /// `samples` sequences drawn from ChaCha8 seeded with `seed`. The length
    /// is uniform in `1..=max_crossings`, each crossing uniform among all
    /// crossings on the strands.
    Random { seed: u64, samples: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRecord {
    pub diagram: StrandDiagram,
    /// Multiset-mode value in the p basis.
    pub csf: SymFun,
    pub h: SymFun,
    pub verdict: Positivity,
}

/// Every crossing `[i, j]` on `n` strands, lexicographically.
pub fn all_crossings(n: usize) -> Vec<Crossing> {
    (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| Crossing { i, j }))
        .collect()
}

fn sequence_count(choices: u64, max_crossings: usize) -> Option<u64> {
    let mut total = 0u64;
    let mut layer = 1u64;
    for _ in 0..max_crossings {
        layer = layer.checked_mul(choices)?;
        total = total.checked_add(layer)?;
    }
    Some(total)
}

pub fn generate_diagrams(
    strands: usize,
    max_crossings: usize,
    mode: SearchMode,
) -> Result<Vec<StrandDiagram>> {
    if strands < 2 {
        return Err(Error::CrossingTooSmall(strands));
    }
    let crossings = all_crossings(strands);
    let requested = match mode {
        SearchMode::Exhaustive => sequence_count(crossings.len() as u64, max_crossings),
        SearchMode::Random { samples, .. } => Some(samples),
    };
    match requested {
        Some(r) if r <= SEARCH_GUARD => {}
        other => {
            return Err(Error::GuardExceeded {
                what: "diagrams in search",
                limit: SEARCH_GUARD,
                requested: other.unwrap_or(u64::MAX),
            })
        }
    }
    let mut out = Vec::new();
    match mode {
        SearchMode::Exhaustive => {
            let mut layer: Vec<Vec<Crossing>> = alloc::vec![Vec::new()];
            for _ in 0..max_crossings {
                layer = layer
                    .iter()
                    .flat_map(|seq| {
                        crossings.iter().map(move |c| {
                            let mut s = seq.clone();
                            s.push(*c);
                            s
                        })
                    })
                    .collect();
                out.extend(layer.iter().map(|s| StrandDiagram {
                    strands,
                    crossings: s.clone(),
                }));
            }
        }
        SearchMode::Random { seed, samples } => {
            if max_crossings == 0 {
                return Ok(out);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let choices = crossings.len() as u64;
            for _ in 0..samples {
                let len = rng.gen_range(1..=max_crossings as u64);
                let seq = (0..len)
                    .map(|_| crossings[rng.gen_range(0..choices) as usize])
                    .collect();
                out.push(StrandDiagram {
                    strands,
                    crossings: seq,
                });
            }
        }
    }
    Ok(out)
}

pub fn evaluate_diagram(d: &StrandDiagram) -> Result<SearchRecord> {
    let csf = diagram_csf(d, CsfMode::Multiset)?;
    let h = csf.to_basis(Basis::Homogeneous);
    let verdict = h.is_h_positive();
    Ok(SearchRecord {
        diagram: d.clone(),
        csf,
        h,
        verdict,
    })
}

/// Sequential search; see [`generate_diagrams`] for the order.
pub fn search_general(
    strands: usize,
    max_crossings: usize,
    mode: SearchMode,
) -> Result<Vec<SearchRecord>> {
    generate_diagrams(strands, max_crossings, mode)?
        .iter()
        .map(evaluate_diagram)
        .collect()
}
