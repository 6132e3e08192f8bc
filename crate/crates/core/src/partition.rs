//! Integer partitions.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered first by size and then lexicographically by their
/// parts, so `() < (1) < (1,1) < (2) < (1,1,1) < (2,1) < (3)`. This is the
/// canonical term order used everywhere output is serialized.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(k)`, or the empty partition for `k = 0`.
    pub fn single(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition {
                parts: alloc::vec![k],
            }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sorted concatenation of the parts of both partitions.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => {
                    parts.extend(a);
                    break;
                }
                (None, Some(_)) => {
                    parts.extend(b);
                    break;
                }
                (None, None) => break,
            }
        }
        Partition { parts }
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{d_i} d_i!`, the size of the centralizer of a permutation
    /// of cycle type `λ`.
    pub fn z_value(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(k);
            }
        }
        z
    }

    /// All partitions of `n` in canonical order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out.sort();
        out
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1]).z_value(), BigUint::from(2u32));
        assert_eq!(p(&[2, 1]).z_value(), BigUint::from(2u32));
        assert_eq!(p(&[3, 3, 1]).z_value(), BigUint::from(18u32));
        assert_eq!(Partition::empty().z_value(), BigUint::one());
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        // Σ n!/z_λ = n!
        for n in 0..=9usize {
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            let total: BigUint = Partition::all_of(n)
                .iter()
                .map(|l| &fact / l.z_value())
                .sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn canonical_order() {
        let all = Partition::all_of(4);
        assert_eq!(
            all,
            vec![
                p(&[1, 1, 1, 1]),
                p(&[2, 1, 1]),
                p(&[2, 2]),
                p(&[3, 1]),
                p(&[4])
            ]
        );
        assert!(p(&[3]) < p(&[1, 1, 1, 1]));
    }

    #[test]
    fn merge_sorts() {
        assert_eq!(p(&[3, 1]).merge(&p(&[2, 2, 1])), p(&[3, 2, 2, 1, 1]));
        assert_eq!(p(&[2]).merge(&Partition::empty()), p(&[2]));
    }
}
