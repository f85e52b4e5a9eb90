//! Closed-form generating functions for hook and gap totals.
//!
//! Every series here is an exact [`IntSeries`] assembled from q-Pochhammer
//! products, geometric factors and Lambert sums. The partition module's
//! enumeration is the reference these are tested against.

mod checks;
mod identity;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::qseries::{geometric, lambert, pochhammer, Count, IntSeries, Sign};
use crate::{Error, Result};

pub use checks::{check_bisection, check_gap_series, CheckReport, SubCheck};
pub use identity::{check_identity, Identity, IdentityReport, IDENTITY_ORDER_CAP};

/// Coefficients of `f(q)` from `q^25` to `q^51`.
pub const F_COEFFS: [i64; 27] = [
    1, 1, 1, 3, 5, 3, 6, 7, 5, 8, 7, 7, 9, 8, 7, 7, 6, 6, 5, 4, 3, 3, 2, 1, 1, 1, 1,
];
pub const F_LOW: usize = 25;

/// Coefficients of `g(q)` from `q^9` to `q^22`.
pub const G_COEFFS: [i64; 14] = [1, 0, 0, 1, 1, 1, 2, 1, 1, 2, 1, 2, 2, 1];
pub const G_LOW: usize = 9;

/// Coefficients of `p(q)` from `q^9` to `q^39`.
pub const P_COEFFS: [i64; 31] = [
    1, 0, 0, 1, 1, 1, 2, 2, 2, 3, 2, 4, 5, 4, 4, 5, 5, 5, 6, 5, 4, 6, 4, 3, 5, 2, 3, 3, 0, 1, 1,
];
pub const P_LOW: usize = 9;

/// Identifiers of the series [`build`] knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    /// Hooks of length 1 in odd partitions (number of different part sizes).
    A1,
    /// Hooks of length 1 in distinct partitions (number of parts).
    B1,
    /// Partitions with one part repeated three times, the rest distinct.
    C,
    A2,
    B2,
    A3,
    B3,
    Diff2,
    Diff3,
    Aq,
    Bq,
    FPoly,
    GPoly,
    PPoly,
    H1,
    H2,
    Ell1Diff,
    W,
}

impl SeriesName {
    pub const ALL: [SeriesName; 18] = [
        SeriesName::A1,
        SeriesName::B1,
        SeriesName::C,
        SeriesName::A2,
        SeriesName::B2,
        SeriesName::A3,
        SeriesName::B3,
        SeriesName::Diff2,
        SeriesName::Diff3,
        SeriesName::Aq,
        SeriesName::Bq,
        SeriesName::FPoly,
        SeriesName::GPoly,
        SeriesName::PPoly,
        SeriesName::H1,
        SeriesName::H2,
        SeriesName::Ell1Diff,
        SeriesName::W,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesName::A1 => "a1",
            SeriesName::B1 => "b1",
            SeriesName::C => "c",
            SeriesName::A2 => "a2",
            SeriesName::B2 => "b2",
            SeriesName::A3 => "a3",
            SeriesName::B3 => "b3",
            SeriesName::Diff2 => "diff2",
            SeriesName::Diff3 => "diff3",
            SeriesName::Aq => "Aq",
            SeriesName::Bq => "Bq",
            SeriesName::FPoly => "fpoly",
            SeriesName::GPoly => "gpoly",
            SeriesName::PPoly => "pq",
            SeriesName::H1 => "H1",
            SeriesName::H2 => "H2",
            SeriesName::Ell1Diff => "ell1diff",
            SeriesName::W => "w",
        }
    }

    pub fn from_name(name: &str) -> Result<SeriesName> {
        SeriesName::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::UnknownSeries(name.into()))
    }

    /// Closed form in plain text, `(a)_inf` standing for `(a;q)_inf`.
    pub fn formula(self) -> &'static str {
        match self {
            SeriesName::A1 => "(-q)_inf q/(1-q^2)",
            SeriesName::B1 => "(-q)_inf sum_{m>=1} q^m/(1+q^m)",
            SeriesName::C => "(-q)_inf sum_{m>=1} q^{3m}/(1+q^m)",
            SeriesName::A2 => "1/(q;q^2)_inf (q^2 + sum_{k>=2} (q^{2k-1} + q^{4k-2}))",
            SeriesName::B2 => "q^2/(1-q) (-q^2)_inf",
            SeriesName::A3 => {
                "(-q^3)_inf q^3(1+q^3)/(1-q^2) + (-q)_inf (q^6/(1-q^4) + q^3/(1-q^6))"
            }
            SeriesName::B3 => "(-q)_inf sum_{m>=2} q^m/(1+q^m) - q^2/(1-q^2) (-q^3)_inf",
            SeriesName::Diff2 => "q^3(1+q^3)/(1-q^2) (-q^3)_inf",
            SeriesName::Diff3 => "a3 - b3",
            SeriesName::Aq => {
                "(-q)_inf sum_{m=1}^{3} q^{4m}/(1+q^m) - (-q^4)_inf q^4(1+q+2q^3+q^4)"
            }
            SeriesName::Bq => {
                "(-q)_inf sum_{m>=4} q^{6m}/(1+q^m) + (-q^9)_inf (q^41(1+q^2)(1+q^3)/(1-q^3) \
                 + q^44(1+q^3)(1+q^5)/(1-q^5)) + (-q^9)_inf (f - g)"
            }
            SeriesName::FPoly => "q^25 + q^26 + ... + q^51 (118 in total)",
            SeriesName::GPoly => "q^9 + q^12 + ... + q^22 (16 in total)",
            SeriesName::PPoly => "q^9 + q^12 + ... + q^39",
            SeriesName::H1 => {
                "q^6 + q^10(-q^4)_inf + q^12(-q^5)_inf + q^3 sum_{k>=3} q^{2k+1}(-q^{k+2})_inf \
                 + q^6 sum_{k>=3} q^{2k+1}(1+q+q^{k+2})(-q^{k+3})_inf"
            }
            SeriesName::H2 => "(-q)_inf q^4/(1-q^4) - (-q^3)_inf q^2/(1-q^2)",
            SeriesName::Ell1Diff => "(-q)_inf (sum_{m>=1} q^m/(1+q^m) - q^2/(1-q^2) - q)",
            SeriesName::W => "(1+q^3)/(1-q^4) * 1/(q^3;q^2)_inf * q^3/(1-q^2)",
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named generating function truncated at some order.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedSeries {
    pub name: SeriesName,
    pub series: IntSeries,
}

impl NamedSeries {
    pub fn formula(&self) -> &'static str {
        self.name.formula()
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.series.coeff(n)
    }
}

/// Exact coefficients of the named series through `q^order`.
pub fn build(name: SeriesName, order: usize) -> NamedSeries {
    let series = match name {
        SeriesName::A1 => {
            let mut s = dist(1, order).shift(1);
            s.div_binomial(&minus_one(), 2).expect("unit constant term");
            s
        }
        SeriesName::B1 => mul(&dist(1, order), &lam(1, 1, order)),
        SeriesName::C => mul(&dist(1, order), &lam(3, 1, order)),
        SeriesName::A2 => a2(order),
        SeriesName::B2 => over(dist(2, order).shift(2), &[1]),
        SeriesName::A3 => a3(order),
        SeriesName::B3 => b3(order),
        SeriesName::Diff2 => diff2(order),
        SeriesName::Diff3 => sub(&a3(order), &b3(order)),
        SeriesName::Aq => a_q(order),
        SeriesName::Bq => b_q(order),
        SeriesName::FPoly => block(&F_COEFFS, F_LOW, order),
        SeriesName::GPoly => block(&G_COEFFS, G_LOW, order),
        SeriesName::PPoly => block(&P_COEFFS, P_LOW, order),
        SeriesName::H1 => h1(order),
        SeriesName::H2 => h2(order),
        SeriesName::Ell1Diff => ell1diff(order),
        SeriesName::W => w(order),
    };
    NamedSeries { name, series }
}

/// Builds a series by its textual name.
pub fn build_by_name(name: &str, order: usize) -> Result<NamedSeries> {
    Ok(build(SeriesName::from_name(name)?, order))
}

fn minus_one() -> BigInt {
    BigInt::from(-1)
}

/// `(-q^j; q)_inf`.
pub(crate) fn dist(j: usize, order: usize) -> IntSeries {
    pochhammer(Sign::Minus, j, 1, Count::Infinite, order).expect("j >= 1")
}

pub(crate) fn lam(a: usize, m0: usize, order: usize) -> IntSeries {
    lambert(a, m0, order).expect("a, m0 >= 1")
}

pub(crate) fn poly(terms: &[(i64, usize)], order: usize) -> IntSeries {
    IntSeries::polynomial(terms, order)
}

// `coeffs[i] q^{low + i}`.
pub(crate) fn block(coeffs: &[i64], low: usize, order: usize) -> IntSeries {
    let terms: Vec<(i64, usize)> = coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, low + i))
        .collect();
    poly(&terms, order)
}

/// `s / prod (1 - q^e)`.
pub(crate) fn over(mut s: IntSeries, denominators: &[usize]) -> IntSeries {
    for &e in denominators {
        s.div_binomial(&minus_one(), e).expect("unit constant term");
    }
    s
}

pub(crate) fn mul(a: &IntSeries, b: &IntSeries) -> IntSeries {
    a.checked_mul(b).expect("equal orders")
}

pub(crate) fn add(a: &IntSeries, b: &IntSeries) -> IntSeries {
    a.checked_add(b).expect("equal orders")
}

pub(crate) fn sub(a: &IntSeries, b: &IntSeries) -> IntSeries {
    a.checked_sub(b).expect("equal orders")
}

fn a2(order: usize) -> IntSeries {
    let odd: IntSeries = pochhammer(Sign::Plus, 1, 2, Count::Infinite, order).expect("j >= 1");
    let mut terms = alloc::vec![(1, 2)];
    for k in (3..=order).step_by(2) {
        terms.push((1, k));
        terms.push((1, 2 * k));
    }
    mul(&odd.inverse().expect("unit constant term"), &poly(&terms, order))
}

fn a3(order: usize) -> IntSeries {
    let first = mul(&dist(3, order), &over(poly(&[(1, 3), (1, 6)], order), &[2]));
    let second = mul(
        &dist(1, order),
        &add(
            &over(poly(&[(1, 6)], order), &[4]),
            &over(poly(&[(1, 3)], order), &[6]),
        ),
    );
    add(&first, &second)
}

fn b3(order: usize) -> IntSeries {
    let lambert_part = mul(&dist(1, order), &lam(1, 2, order));
    let correction = over(dist(3, order).shift(2), &[2]);
    sub(&lambert_part, &correction)
}

fn diff2(order: usize) -> IntSeries {
    let mut s = dist(3, order).shift(3);
    s.mul_binomial(&BigInt::from(1), 3);
    over(s, &[2])
}

fn w(order: usize) -> IntSeries {
    let odd_above_one: IntSeries =
        pochhammer(Sign::Plus, 3, 2, Count::Infinite, order).expect("j >= 1");
    let mut s = odd_above_one.inverse().expect("unit constant term").shift(3);
    s.mul_binomial(&BigInt::from(1), 3);
    over(s, &[4, 2])
}

fn a_q(order: usize) -> IntSeries {
    let lambert_part = (1..=3).fold(IntSeries::zero(order), |acc, m| {
        let mut term = poly(&[(1, 4 * m)], order);
        term.div_binomial(&BigInt::from(1), m).expect("unit constant term");
        add(&acc, &term)
    });
    sub(
        &mul(&dist(1, order), &lambert_part),
        &mul(&dist(4, order), &poly(&[(1, 4), (1, 5), (2, 7), (1, 8)], order)),
    )
}

pub(crate) fn fg_product(order: usize) -> IntSeries {
    let diff = sub(
        &block(&F_COEFFS, F_LOW, order),
        &block(&G_COEFFS, G_LOW, order),
    );
    mul(&dist(9, order), &diff)
}

fn b_q(order: usize) -> IntSeries {
    let lambert_part = mul(&dist(1, order), &lam(6, 4, order));
    let tails = add(
        &over(poly(&[(1, 41), (1, 43), (1, 44), (1, 46)], order), &[3]),
        &over(poly(&[(1, 44), (1, 47), (1, 49), (1, 52)], order), &[5]),
    );
    add(
        &add(&lambert_part, &mul(&dist(9, order), &tails)),
        &fg_product(order),
    )
}

fn ell1diff(order: usize) -> IntSeries {
    let inner = sub(
        &sub(&lam(1, 1, order), &over(poly(&[(1, 2)], order), &[2])),
        &poly(&[(1, 1)], order),
    );
    mul(&dist(1, order), &inner)
}

/// `(-q^k; q)_inf` for every `k` in `1..=order + 1`, index `k`.
pub(crate) fn tails(order: usize) -> Vec<IntSeries> {
    let mut out = alloc::vec![IntSeries::one(order); order + 2];
    for k in (1..=order).rev() {
        let mut next = out[k + 1].clone();
        next.mul_binomial(&BigInt::from(1), k);
        out[k] = next;
    }
    out
}

fn h1(order: usize) -> IntSeries {
    let tail = tails(order);
    let at = |k: usize| tail[k.min(order + 1)].clone();
    let mut s = poly(&[(1, 6)], order);
    s = add(&s, &at(4).shift(10));
    s = add(&s, &at(5).shift(12));
    for k in 3..=order {
        if 2 * k + 4 > order {
            break;
        }
        s = add(&s, &at(k + 2).shift(2 * k + 4));
        let mut second = at(k + 3).shift(2 * k + 7);
        let factor = poly(&[(1, 0), (1, 1), (1, k + 2)], order);
        second = mul(&second, &factor);
        s = add(&s, &second);
    }
    s
}

fn h2(order: usize) -> IntSeries {
    sub(
        &mul(&dist(1, order), &over(poly(&[(1, 4)], order), &[4])),
        &mul(&dist(3, order), &geometric(2, order).expect("j >= 1")),
    )
}
