//! Symbolic checks of the symmetric-function identities the reduction relies
//! on. Each `*_sides` function returns both sides expanded in the p basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::oracle::Permutations;
use crate::symfun::{homogeneous_in_power, int};
use crate::{Basis, Partition, SymFun};

/// Memoized `h_k` in the p basis.
struct HomogeneousTable(BTreeMap<usize, SymFun>);

impl HomogeneousTable {
    fn new() -> Self {
        HomogeneousTable(BTreeMap::new())
    }

    fn get(&mut self, k: usize) -> &SymFun {
        self.0.entry(k).or_insert_with(|| homogeneous_in_power(k))
    }
}

/// `n!·h_n` and `Σ_{σ ∈ S_n} p_{cycletype(σ)}` by explicit enumeration.
pub fn factorial_h_sides(n: usize) -> (SymFun, SymFun) {
    let fact = crate::symfun::factorial(n);
    let left = homogeneous_in_power(n).scale(&BigRational::from_integer(BigInt::from(fact)));
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for sigma in Permutations::new(n) {
        *counts.entry(sigma.cycle_type()).or_default() += 1;
    }
    (left, SymFun::from_int_terms(Basis::Power, counts))
}

/// `i·h_i` and `Σ_{j=1}^{i} h_{i-j} p_j`.
pub fn newton_sides(i: usize) -> (SymFun, SymFun) {
    let mut table = HomogeneousTable::new();
    let left = table.get(i).scale(&int(i as i64));
    let mut right = SymFun::zero(Basis::Power);
    for j in 1..=i {
        right.add_assign_scaled(&(table.get(i - j) * &SymFun::p(j)), &int(1));
    }
    (left, right)
}

/// The two sides of
/// `Σ_{i=0}^{a} Σ_{j=0}^{b} h_{a-i} h_{b-j} p_{i+j} = (b+1) h_a h_b + Σ_{i=1}^{a} (b-a+2i) h_{a-i} h_{b+i}`
/// with `p_0 = 1`.
pub fn double_sum_sides(a: usize, b: usize) -> (SymFun, SymFun) {
    let mut table = HomogeneousTable::new();
    let mut left = SymFun::zero(Basis::Power);
    for i in 0..=a {
        for j in 0..=b {
            let hh = table.get(a - i).clone();
            let term = &(&hh * table.get(b - j)) * &SymFun::p(i + j);
            left.add_assign_scaled(&term, &int(1));
        }
    }
    let mut right = SymFun::zero(Basis::Power);
    let first = table.get(a).clone();
    right.add_assign_scaled(&(&first * table.get(b)), &int(b as i64 + 1));
    for i in 1..=a {
        let factor = table.get(a - i).clone();
        let coeff = b as i64 - a as i64 + 2 * i as i64;
        right.add_assign_scaled(&(&factor * table.get(b + i)), &int(coeff));
    }
    (left, right)
}

pub fn factorial_h_check(n: usize) -> bool {
    let (l, r) = factorial_h_sides(n);
    l == r
}

pub fn newton_check(i: usize) -> bool {
    let (l, r) = newton_sides(i);
    l == r
}

pub fn double_sum_identity_check(a: usize, b: usize) -> bool {
    let (l, r) = double_sum_sides(a, b);
    l == r
}

/// Every `(a, b)` with `a, b ≤ max` for which the double-sum identity fails.
pub fn double_sum_failures(max: usize) -> Vec<(usize, usize)> {
    (0..=max)
        .flat_map(|a| (0..=max).map(move |b| (a, b)))
        .filter(|&(a, b)| !double_sum_identity_check(a, b))
        .collect()
}
