//! Truncated formal power series in `q` with exact coefficients.
//!
//! A [`QSeries`] of order `N` stores the coefficients of `q^0, ..., q^N`.
//! Every operation is exact on those degrees; anything above `N` is
//! discarded. Binary operations require equal orders and never resize
//! implicitly.

mod builders;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{AddAssign, Mul, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use builders::{geometric, lambert, pochhammer, Count, Sign};

use crate::{Error, Result};

/// Exact coefficient ring for [`QSeries`].
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, if the value is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_i64(value: i64) -> Self;
}

impl Coefficient for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
}

impl Coefficient for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}

/// Truncated power series with integer coefficients.
pub type IntSeries = QSeries<BigInt>;

/// Truncated power series with rational coefficients.
pub type RatSeries = QSeries<BigRational>;

/// A power series in `q` known exactly through `q^order`.
#[derive(Clone, PartialEq)]
pub struct QSeries<C = BigInt> {
    // invariant: coeffs.len() == order + 1
    coeffs: Vec<C>,
}

impl<C: Coefficient> QSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c * q^exp`, which is the zero series when `exp > order`.
    pub fn monomial(c: C, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Builds a series from leading coefficients. Missing coefficients are
    /// zero and coefficients past `order` are dropped.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    /// Sparse polynomial `sum c * q^e` from small integer terms.
    pub fn polynomial(terms: &[(i64, usize)], order: usize) -> Self {
        let mut s = Self::zero(order);
        for &(c, e) in terms {
            if e <= order {
                s.coeffs[e] += &C::from_i64(c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^k`; zero above the truncation order.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// Truncated Cauchy product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let order = self.order();
        // Iterate over the sparser operand.
        let (sparse, dense) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let one = C::one();
        let minus_one = -C::one();
        let mut out = Self::zero(order);
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let targets = out.coeffs[i..].iter_mut().zip(&dense.coeffs);
            if *a == one {
                targets.for_each(|(o, b)| *o += b);
            } else if *a == minus_one {
                targets.for_each(|(o, b)| *o -= b);
            } else {
                for (o, b) in targets {
                    if !b.is_zero() {
                        *o += &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse. The constant term must be a unit: `±1` over
    /// the integers, nonzero over the rationals.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::NotInvertible)?;
        let order = self.order();
        let support: Vec<usize> = (1..=order).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let mut out = Self::zero(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = C::zero();
            for &k in support.iter().take_while(|&&k| k <= n) {
                acc += &(self.coeffs[k].clone() * &out.coeffs[n - k]);
            }
            out.coeffs[n] = -(acc * &inv0);
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through [`QSeries::inverse`].
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        if e <= order {
            out.coeffs[e..].clone_from_slice(&self.coeffs[..=order - e]);
        }
        out
    }

    /// The same series known only through `q^order`.
    pub fn restrict(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// In-place multiplication by `1 + c q^e`.
    pub fn mul_binomial(&mut self, c: &C, e: usize) {
        if c.is_zero() {
            return;
        }
        if e == 0 {
            let factor = C::one() + c.clone();
            self.coeffs.iter_mut().for_each(|a| *a = a.clone() * &factor);
            return;
        }
        let order = self.order();
        if e > order {
            return;
        }
        let unit = unit_sign(c);
        for k in (e..=order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            let src = &lo[k - e];
            if src.is_zero() {
                continue;
            }
            match unit {
                Some(true) => hi[0] += src,
                Some(false) => hi[0] -= src,
                None => hi[0] += &(src.clone() * c),
            }
        }
    }

    /// In-place multiplication by the inverse of `1 + c q^e`.
    pub fn div_binomial(&mut self, c: &C, e: usize) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if e == 0 {
            let inv = (C::one() + c.clone())
                .unit_inverse()
                .ok_or(Error::NotInvertible)?;
            self.coeffs.iter_mut().for_each(|a| *a = a.clone() * &inv);
            return Ok(());
        }
        let order = self.order();
        let unit = unit_sign(c);
        for k in e..=order {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            let src = &lo[k - e];
            if src.is_zero() {
                continue;
            }
            match unit {
                Some(true) => hi[0] -= src,
                Some(false) => hi[0] += src,
                None => hi[0] -= &(src.clone() * c),
            }
        }
        Ok(())
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Exponents whose coefficient is negative, in increasing order.
    pub fn negative_exponents(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(k, _)| k)
            .collect()
    }
}

// Some(true) for 1, Some(false) for -1.
fn unit_sign<C: Coefficient>(c: &C) -> Option<bool> {
    if c.is_one() {
        Some(true)
    } else if (-c.clone()).is_one() {
        Some(false)
    } else {
        None
    }
}

impl<C: Coefficient> fmt::Debug for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `1 - q + 2*q^3 + O(q^N)` with `N = order + 1`.
impl<C: Coefficient> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{abs}*q^{k}")?,
            }
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn ints(series: &IntSeries) -> Vec<i64> {
        series
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn from_ints(values: &[i64], order: usize) -> IntSeries {
        IntSeries::from_coeffs(values.iter().map(|&v| BigInt::from(v)).collect(), order)
    }

    #[test]
    fn telescoping_product_is_one() {
        for order in [0, 1, 5, 40] {
            let one_minus_q = IntSeries::polynomial(&[(1, 0), (-1, 1)], order);
            let geo = from_ints(&vec![1; order + 1], order);
            assert_eq!(one_minus_q.checked_mul(&geo).unwrap(), IntSeries::one(order));
        }
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = IntSeries::one(3);
        let b = IntSeries::one(4);
        assert_eq!(
            a.checked_mul(&b),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_sub(&b).is_err());
    }

    #[test]
    fn inverse_needs_unit_constant() {
        let two = IntSeries::polynomial(&[(2, 0), (1, 1)], 5);
        assert_eq!(two.inverse(), Err(Error::NotInvertible));
        let rational = RatSeries::polynomial(&[(2, 0), (1, 1)], 5);
        let inv = rational.inverse().unwrap();
        assert_eq!(rational.checked_mul(&inv).unwrap(), RatSeries::one(5));
        assert_eq!(IntSeries::one(7).inverse().unwrap(), IntSeries::one(7));
    }

    #[test]
    fn binomial_ops_match_generic_products() {
        let base = from_ints(&[3, -1, 4, 1, -5, 9, 2, -6], 7);
        for (c, e) in [(1, 1), (-1, 2), (3, 3), (-2, 0), (5, 9)] {
            let factor = IntSeries::polynomial(&[(1, 0), (c, e)], 7);
            let mut fast = base.clone();
            fast.mul_binomial(&BigInt::from(c), e);
            assert_eq!(fast, base.checked_mul(&factor).unwrap());
            if e > 0 {
                let mut slow = base.clone();
                slow.div_binomial(&BigInt::from(c), e).unwrap();
                assert_eq!(slow, base.checked_mul(&factor.inverse().unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let euler = IntSeries::polynomial(&[(1, 0), (-1, 1)], 6);
        assert_eq!(ints(&euler.pow(-1).unwrap()), vec![1; 7]);
        assert_eq!(ints(&euler.pow(2).unwrap()), vec![1, -2, 1, 0, 0, 0, 0]);
        assert_eq!(euler.pow(0).unwrap(), IntSeries::one(6));
    }

    #[test]
    fn shift_and_restrict() {
        let s = from_ints(&[1, 2, 3, 4], 3);
        assert_eq!(ints(&s.shift(2)), vec![0, 0, 1, 2]);
        assert_eq!(ints(&s.shift(4)), vec![0, 0, 0, 0]);
        assert_eq!(ints(&s.restrict(1).unwrap()), vec![1, 2]);
        assert!(s.restrict(4).is_err());
    }

    #[test]
    fn display() {
        let s = from_ints(&[1, -1, 0, 2], 3);
        assert_eq!(s.to_string(), "1 - q + 2*q^3 + O(q^4)");
        assert_eq!(IntSeries::zero(2).to_string(), "O(q^3)");
        assert_eq!(from_ints(&[0, 0, -1], 4).to_string(), "-q^2 + O(q^5)");
    }

    fn series(order: usize) -> impl Strategy<Value = IntSeries> {
        proptest::collection::vec(-20i64..20, order + 1).prop_map(move |v| from_ints(&v, order))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = IntSeries> {
        (prop_oneof![Just(1i64), Just(-1i64)], proptest::collection::vec(-20i64..20, order))
            .prop_map(move |(c0, rest)| {
                let mut v = vec![c0];
                v.extend(rest);
                from_ints(&v, order)
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in series(12), b in series(12), c in series(12)) {
            let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
            let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
            let right = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
            prop_assert_eq!(a.checked_mul(&IntSeries::one(12)).unwrap(), a.clone());
        }

        #[test]
        fn inverse_contract(s in unit_series(15)) {
            let inv = s.inverse().unwrap();
            prop_assert_eq!(s.checked_mul(&inv).unwrap(), IntSeries::one(15));
        }

        #[test]
        fn truncation_consistency(a in series(20), b in unit_series(20), cut in 0usize..20) {
            let prod = a.checked_mul(&b).unwrap().restrict(cut).unwrap();
            let prod_low = a.restrict(cut).unwrap().checked_mul(&b.restrict(cut).unwrap()).unwrap();
            prop_assert_eq!(prod, prod_low);
            let inv = b.inverse().unwrap().restrict(cut).unwrap();
            prop_assert_eq!(inv, b.restrict(cut).unwrap().inverse().unwrap());
        }
    }

    #[test]
    fn display_uses_order() {
        assert!(IntSeries::one(0).to_string().ends_with("O(q^1)"));
    }
}
