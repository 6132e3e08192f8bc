//! Symmetric functions with exact rational coefficients in the power-sum
//! (`p`), complete homogeneous (`h`) and elementary (`e`) bases.
//!
//! All three bases are multiplicative, so a product of basis elements is the
//! basis element indexed by the merged partition. Conversions go through the
//! power-sum basis:
//!
//! * `h_n = Σ_{λ ⊢ n} p_λ / z_λ`
//! * `p_i = i h_i - Σ_{j=1}^{i-1} h_{i-j} p_j` (Newton)
//! * `ω(e_λ) = h_λ`, and `ω(p_λ) = (-1)^{|λ|-ℓ(λ)} p_λ`.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Partition, Result};

pub type Coeff = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Power,
    Homogeneous,
    Elementary,
}

impl Basis {
    pub fn tag(self) -> char {
        match self {
            Basis::Power => 'p',
            Basis::Homogeneous => 'h',
            Basis::Elementary => 'e',
        }
    }

    pub fn from_tag(tag: &str) -> Option<Basis> {
        match tag {
            "p" => Some(Basis::Power),
            "h" => Some(Basis::Homogeneous),
            "e" => Some(Basis::Elementary),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// A finite linear combination `Σ c_λ b_λ` over one basis `b`.
///
/// Zero coefficients are never stored and terms iterate in canonical
/// partition order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFun {
    basis: Basis,
    terms: BTreeMap<Partition, Coeff>,
}

/// Outcome of [`SymFun::is_h_positive`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    /// Every h-coefficient is nonnegative; carries the h-expansion.
    Positive(SymFun),
    /// The first negative h-coefficient in canonical order.
    Negative { witness: Partition, coeff: Coeff },
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive(_))
    }
}

pub(crate) fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

impl SymFun {
    pub fn zero(basis: Basis) -> Self {
        SymFun {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), Coeff::one())
    }

    pub fn term(basis: Basis, index: Partition, coeff: Coeff) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(index, coeff);
        f
    }

    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        Self::term(basis, index, Coeff::one())
    }

    /// The single-part element `b_k`; `b_0 = 1`.
    pub fn single(basis: Basis, k: usize) -> Self {
        Self::basis_element(basis, Partition::single(k))
    }

    pub fn p(k: usize) -> Self {
        Self::single(Basis::Power, k)
    }

    pub fn h(k: usize) -> Self {
        Self::single(Basis::Homogeneous, k)
    }

    pub fn e(k: usize) -> Self {
        Self::single(Basis::Elementary, k)
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Coeff)>,
    {
        let mut f = Self::zero(basis);
        for (index, coeff) in terms {
            f.add_term(index, coeff);
        }
        f
    }

    /// Convenience for integer coefficients.
    pub fn from_int_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        Self::from_terms(basis, terms.into_iter().map(|(l, c)| (l, int(c))))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Partition, Coeff> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &Partition) -> Option<&Coeff> {
        self.terms.get(index)
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Partition::size);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, index: Partition, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &SymFun) -> Result<SymFun> {
        self.check_basis(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &Coeff::one());
        Ok(out)
    }

    /// `self += scale · other`. Panics on a basis mismatch.
    pub fn add_assign_scaled(&mut self, other: &SymFun, scale: &Coeff) {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        if scale.is_zero() {
            return;
        }
        for (index, c) in &other.terms {
            self.add_term(index.clone(), c * scale);
        }
    }

    pub fn scale(&self, factor: &Coeff) -> SymFun {
        if factor.is_zero() {
            return Self::zero(self.basis);
        }
        SymFun {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * factor))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &SymFun) -> Result<SymFun> {
        self.check_basis(other)?;
        let mut out = Self::zero(self.basis);
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                out.add_term(l1.merge(l2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn check_basis(&self, other: &SymFun) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        Ok(())
    }

    /// Reinterprets the coefficient table in another basis without
    /// converting anything.
    fn relabel(mut self, basis: Basis) -> SymFun {
        self.basis = basis;
        self
    }

    pub fn to_basis(&self, target: Basis) -> SymFun {
        use Basis::*;
        match (self.basis, target) {
            (a, b) if a == b => self.clone(),
            (Power, Homogeneous) => power_to_homogeneous(self),
            (Homogeneous, Power) => homogeneous_to_power(self),
            // e_λ = ω(h_λ)
            (Elementary, Power) => homogeneous_to_power(&self.clone().relabel(Homogeneous)).omega(),
            (Power, Elementary) => power_to_homogeneous(&self.omega()).relabel(Elementary),
            (Elementary, Homogeneous) => self.to_basis(Power).to_basis(Homogeneous),
            (Homogeneous, Elementary) => self.to_basis(Power).to_basis(Elementary),
            _ => unreachable!(),
        }
    }

    /// The involution `ω`: swaps the `h` and `e` tags, and signs `p_λ` by
    /// `(-1)^{|λ| - ℓ(λ)}`.
    pub fn omega(&self) -> SymFun {
        match self.basis {
            Basis::Homogeneous => self.clone().relabel(Basis::Elementary),
            Basis::Elementary => self.clone().relabel(Basis::Homogeneous),
            Basis::Power => SymFun {
                basis: Basis::Power,
                terms: self
                    .terms
                    .iter()
                    .map(|(l, c)| {
                        let c = if (l.size() - l.len()) % 2 == 1 {
                            -c
                        } else {
                            c.clone()
                        };
                        (l.clone(), c)
                    })
                    .collect(),
            },
        }
    }

    pub fn is_h_positive(&self) -> Positivity {
        let h = self.to_basis(Basis::Homogeneous);
        let negative = h.terms.iter().find(|(_, c)| c.is_negative());
        match negative {
            Some((witness, coeff)) => Positivity::Negative {
                witness: witness.clone(),
                coeff: coeff.clone(),
            },
            None => Positivity::Positive(h),
        }
    }

    /// Evaluates at `x_1 = ⋯ = x_m = 1` and all other variables `0`.
    pub fn specialize_ones(&self, m: u64) -> Coeff {
        let p = self.to_basis(Basis::Power);
        let m = BigInt::from(m);
        let mut total = Coeff::zero();
        for (l, c) in &p.terms {
            let value = num_traits::pow(m.clone(), l.len());
            total += c * BigRational::from_integer(value);
        }
        total
    }

    /// True when no stored coefficient is negative (in the current basis).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

/// `p_1, …, p_max` expressed in the h basis; index 0 holds `1`.
fn power_sums_in_h(max: usize) -> Vec<SymFun> {
    let mut table: Vec<SymFun> = Vec::with_capacity(max + 1);
    table.push(SymFun::one(Basis::Homogeneous));
    for i in 1..=max {
        let mut p_i = SymFun::term(Basis::Homogeneous, Partition::single(i), int(i as i64));
        for (j, p_j) in table.iter().enumerate().skip(1) {
            let shifted = p_j.multiply(&SymFun::h(i - j)).expect("same basis");
            p_i.add_assign_scaled(&shifted, &-Coeff::one());
        }
        table.push(p_i);
    }
    table
}

/// `h_n = Σ_{λ ⊢ n} p_λ / z_λ`.
pub fn homogeneous_in_power(n: usize) -> SymFun {
    SymFun::from_terms(
        Basis::Power,
        Partition::all_of(n).into_iter().map(|l| {
            let z = l.z_value();
            (l, BigRational::new(BigInt::one(), BigInt::from(z)))
        }),
    )
}

/// Expands every multiplicative basis element `b_λ = ∏ b_{λ_i}` using the
/// images of the single-part elements.
fn expand_multiplicative(f: &SymFun, target: Basis, image: impl Fn(usize) -> SymFun) -> SymFun {
    let mut singles: BTreeMap<usize, SymFun> = BTreeMap::new();
    let mut out = SymFun::zero(target);
    for (l, c) in &f.terms {
        let mut product = SymFun::one(target);
        for &part in l.parts() {
            let factor = singles.entry(part).or_insert_with(|| image(part));
            product = product.multiply(factor).expect("same basis");
        }
        out.add_assign_scaled(&product, c);
    }
    out
}

fn power_to_homogeneous(f: &SymFun) -> SymFun {
    let max = f
        .terms
        .keys()
        .flat_map(|l| l.parts().first().copied())
        .max()
        .unwrap_or(0);
    let table = power_sums_in_h(max);
    expand_multiplicative(f, Basis::Homogeneous, |i| table[i].clone())
}

fn homogeneous_to_power(f: &SymFun) -> SymFun {
    expand_multiplicative(f, Basis::Power, homogeneous_in_power)
}

/// Panics on a basis mismatch; use [`SymFun::try_add`] for a fallible sum.
impl Add for &SymFun {
    type Output = SymFun;

    fn add(self, rhs: &SymFun) -> SymFun {
        self.try_add(rhs).expect("basis mismatch")
    }
}

impl Sub for &SymFun {
    type Output = SymFun;

    fn sub(self, rhs: &SymFun) -> SymFun {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Coeff::one());
        out
    }
}

/// Panics on a basis mismatch; use [`SymFun::multiply`] for a fallible product.
impl Mul for &SymFun {
    type Output = SymFun;

    fn mul(self, rhs: &SymFun) -> SymFun {
        self.multiply(rhs).expect("basis mismatch")
    }
}

impl Neg for &SymFun {
    type Output = SymFun;

    fn neg(self) -> SymFun {
        self.scale(&-Coeff::one())
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFun({self})")
    }
}

/// `2·h(2,2) + 2·h(3,1) + 4·h(4)`; the zero function prints as `0`.
impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}·")?;
            }
            write!(f, "{}{}", self.basis.tag(), l)?;
        }
        Ok(())
    }
}

/// `n!` as a big integer.
pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ints(basis: Basis, terms: &[(&[usize], i64)]) -> SymFun {
        SymFun::from_int_terms(basis, terms.iter().map(|(l, c)| (part(l), *c)))
    }

    fn example_ch() -> SymFun {
        ints(
            Basis::Power,
            &[
                (&[1, 1, 1, 1], 1),
                (&[2, 1, 1], 3),
                (&[3, 1], 2),
                (&[2, 2], 1),
                (&[4], 1),
            ],
        )
    }

    #[test]
    fn products() {
        assert_eq!(
            &SymFun::h(2) * &SymFun::h(1),
            ints(Basis::Homogeneous, &[(&[2, 1], 1)])
        );
        let f = ints(Basis::Power, &[(&[1, 1], 1), (&[2], 1)]);
        assert_eq!(
            &f * &f,
            ints(
                Basis::Power,
                &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], 2), (&[2, 2], 1)]
            )
        );
        assert_eq!(&f * &SymFun::one(Basis::Power), f);
        assert!(matches!(
            SymFun::h(1).multiply(&SymFun::p(1)),
            Err(Error::BasisMismatch { .. })
        ));
        assert!(SymFun::h(1).try_add(&SymFun::e(1)).is_err());
    }

    #[test]
    fn conversions() {
        assert_eq!(SymFun::p(1).to_basis(Basis::Homogeneous), SymFun::h(1));
        assert_eq!(
            example_ch().to_basis(Basis::Homogeneous),
            ints(Basis::Homogeneous, &[(&[2, 2], 2), (&[3, 1], 2), (&[4], 4)])
        );
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(
            SymFun::h(2).to_basis(Basis::Power),
            SymFun::from_terms(
                Basis::Power,
                vec![(part(&[1, 1]), half.clone()), (part(&[2]), half)]
            )
        );
        // e_2 = (p_11 - p_2)/2
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(
            SymFun::e(2).to_basis(Basis::Power),
            SymFun::from_terms(
                Basis::Power,
                vec![(part(&[1, 1]), half.clone()), (part(&[2]), -half)]
            )
        );
        // e_2 = h_11 - h_2
        assert_eq!(
            SymFun::e(2).to_basis(Basis::Homogeneous),
            ints(Basis::Homogeneous, &[(&[1, 1], 1), (&[2], -1)])
        );
        assert_eq!(
            SymFun::h(2).to_basis(Basis::Elementary),
            ints(Basis::Elementary, &[(&[1, 1], 1), (&[2], -1)])
        );
    }

    #[test]
    fn omega_rules() {
        assert_eq!(
            ints(Basis::Homogeneous, &[(&[2, 1], 1)]).omega(),
            ints(Basis::Elementary, &[(&[2, 1], 1)])
        );
        assert_eq!(SymFun::p(2).omega(), ints(Basis::Power, &[(&[2], -1)]));
        let f = ints(Basis::Homogeneous, &[(&[2, 2], 2), (&[3, 1], 2), (&[4], 4)]);
        assert_eq!(f.omega().omega(), f);
        // ω commutes with change of basis
        let g = f.to_basis(Basis::Power).omega();
        assert_eq!(g.to_basis(Basis::Elementary), f.omega());
    }

    #[test]
    fn positivity() {
        let f = ints(Basis::Homogeneous, &[(&[2, 2], 2), (&[3, 1], 2), (&[4], 4)]);
        assert!(f.is_h_positive().is_positive());
        assert_eq!(
            SymFun::p(2).is_h_positive(),
            Positivity::Negative {
                witness: part(&[1, 1]),
                coeff: int(-1)
            }
        );
        assert!(SymFun::zero(Basis::Power).is_h_positive().is_positive());
    }

    #[test]
    fn specialization() {
        assert_eq!(
            ints(Basis::Power, &[(&[2, 1], 1)]).specialize_ones(3),
            int(9)
        );
        assert_eq!(example_ch().omega().specialize_ones(2), int(2));
        let constant = SymFun::term(Basis::Homogeneous, Partition::empty(), int(7));
        assert_eq!(constant.specialize_ones(5), int(7));
    }

    #[test]
    fn display() {
        let f = ints(
            Basis::Homogeneous,
            &[(&[2, 2], 2), (&[3, 1], -1), (&[4], 1)],
        );
        assert_eq!(alloc::format!("{f}"), "2·h(2,2) - h(3,1) + h(4)");
        assert_eq!(alloc::format!("{}", SymFun::zero(Basis::Power)), "0");
    }
}
