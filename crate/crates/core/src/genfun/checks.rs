use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    add, block, build, dist, fg_product, lam, mul, over, poly, sub, tails, SeriesName, P_COEFFS,
    P_LOW,
};
use crate::qseries::IntSeries;
use crate::{Error, Result};

/// Outcome of one coefficientwise comparison or sign condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubCheck {
    pub label: &'static str,
    /// Smallest exponent at which the check fails.
    pub failure: Option<usize>,
}

impl SubCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn equal(label: &'static str, left: &IntSeries, right: &IntSeries) -> Self {
        let failure = left
            .coeffs()
            .iter()
            .zip(right.coeffs())
            .position(|(a, b)| a != b);
        Self { label, failure }
    }

    fn nonnegative_except(
        label: &'static str,
        series: &IntSeries,
        allowed: impl Fn(usize) -> bool,
    ) -> Self {
        let failure = series
            .negative_exponents()
            .into_iter()
            .find(|&n| !allowed(n));
        Self { label, failure }
    }
}

/// Result of a family of sub-checks, plus the observed negative exponents of
/// the series whose sign pattern is of interest.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub order: usize,
    pub checks: Vec<SubCheck>,
    pub sign_patterns: Vec<(&'static str, Vec<(usize, BigInt)>)>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(SubCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SubCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, label: &str) -> Option<&SubCheck> {
        self.checks.iter().find(|c| c.label == label)
    }

    /// One line per sub-check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match c.failure {
                None => out.push_str(&format!("ok    {}\n", c.label)),
                Some(n) => out.push_str(&format!("FAIL  {} (first failure at q^{n})\n", c.label)),
            }
        }
        out
    }
}

fn negatives(series: &IntSeries, up_to: usize) -> Vec<(usize, BigInt)> {
    series
        .negative_exponents()
        .into_iter()
        .take_while(|&n| n <= up_to)
        .map(|n| (n, series.coeff(n)))
        .collect()
}

/// Verifies the decomposition of `a_3 - b_3` into `A(q) + B(q)` and the
/// sign conditions on both pieces, with the intermediate rewrites.
pub fn check_bisection(order: usize) -> Result<CheckReport> {
    if order < 76 {
        return Err(Error::InvalidParameter(format!(
            "bisection check needs order >= 76, got {order}"
        )));
    }
    let a = build(SeriesName::Aq, order).series;
    let b = build(SeriesName::Bq, order).series;
    let diff3 = build(SeriesName::Diff3, order).series;
    let fg = fg_product(order);

    let mut checks = Vec::new();
    checks.push(SubCheck::equal("A + B = a3 - b3", &add(&a, &b), &diff3));
    checks.push(SubCheck::nonnegative_except(
        "A >= 0 except at q^5, q^7",
        &a,
        |n| n == 5 || n == 7,
    ));
    checks.push(SubCheck::nonnegative_except(
        "(-q^9)_inf (f - g) >= 0 from q^76",
        &fg,
        |n| n <= 75,
    ));

    let helper_left = sub(
        &mul(&dist(3, order), &poly(&[(1, 16), (1, 17), (1, 18)], order)),
        &mul(&dist(9, order), &block(&P_COEFFS, P_LOW, order)),
    );
    checks.push(SubCheck::equal(
        "(-q^3)_inf (q^16 + q^17 + q^18) - (-q^9)_inf p = (-q^9)_inf (f - g)",
        &helper_left,
        &fg,
    ));

    let a_rewritten = mul(
        &dist(4, order),
        &poly(
            &[(1, 6), (2, 9), (1, 11), (2, 12), (1, 13), (1, 14), (1, 15), (-1, 5), (-1, 7)],
            order,
        ),
    );
    checks.push(SubCheck::equal("A rewritten over (-q^4)_inf", &a, &a_rewritten));

    let lambert4 = mul(&dist(1, order), &lam(4, 4, order));
    let lambert6 = mul(&dist(1, order), &lam(6, 4, order));
    let shifted = add(
        &poly(&[(1, 16), (1, 17), (1, 18)], order),
        &over(poly(&[(1, 19)], order), &[5]),
    );
    checks.push(SubCheck::equal(
        "Lambert tail from q^{4m} to q^{6m}",
        &lambert4,
        &add(&lambert6, &mul(&dist(3, order), &shifted)),
    ));

    let delta_left = sub(
        &mul(&dist(3, order), &over(poly(&[(1, 19)], order), &[5])),
        &mul(&dist(4, order), &over(poly(&[(1, 9)], order), &[3])),
    );
    let delta_right = mul(
        &dist(9, order),
        &sub(
            &add(
                &over(poly(&[(1, 41), (1, 43), (1, 44), (1, 46)], order), &[3]),
                &over(poly(&[(1, 44), (1, 47), (1, 49), (1, 52)], order), &[5]),
            ),
            &block(&P_COEFFS, P_LOW, order),
        ),
    );
    checks.push(SubCheck::equal(
        "(-q^3)_inf q^19/(1-q^5) - (-q^4)_inf q^9/(1-q^3) over (-q^9)_inf",
        &delta_left,
        &delta_right,
    ));

    let lambert_left = lam(1, 1, order).neg();
    let lambert_right = sub(
        &sub(&lam(4, 1, order), &over(poly(&[(1, 3)], order), &[3])),
        &over(poly(&[(1, 1)], order), &[2]),
    );
    checks.push(SubCheck::equal(
        "-sum q^m/(1+q^m) = sum q^{4m}/(1+q^m) - q^3/(1-q^3) - q/(1-q^2)",
        &lambert_left,
        &lambert_right,
    ));

    let sign_patterns = alloc::vec![
        ("A", negatives(&a, order)),
        ("(-q^9)_inf (f - g)", negatives(&fg, 75)),
        ("a3 - b3", negatives(&diff3, order)),
    ];
    Ok(CheckReport {
        order,
        checks,
        sign_patterns,
    })
}

/// `(1 + q^4) sum_{k>=7} q^k sum_{j=5}^{k-2} q^j (-q^{j+1})_inf`, summed
/// literally.
fn h_identity_right(order: usize) -> IntSeries {
    let tail = tails(order);
    let at = |k: usize| &tail[k.min(order + 1)];
    let mut inner = IntSeries::zero(order);
    let mut total = IntSeries::zero(order);
    for k in 7..=order {
        // inner = sum_{j=5}^{k-2} q^j (-q^{j+1})_inf
        inner = add(&inner, &at(k - 1).shift(k - 2));
        if k + 5 > order {
            break;
        }
        total = add(&total, &inner.shift(k));
    }
    total.mul_binomial(&BigInt::one(), 4);
    total
}

fn exceptions(series: &IntSeries) -> Vec<(usize, BigInt)> {
    negatives(series, series.order())
}

fn exact_exceptions(
    label: &'static str,
    series: &IntSeries,
    expected: &[usize],
) -> SubCheck {
    let minus_one = -BigInt::one();
    let found = exceptions(series);
    let failure = found
        .iter()
        .find(|(n, c)| !expected.contains(n) || *c != minus_one)
        .map(|(n, _)| *n)
        .or_else(|| {
            expected
                .iter()
                .copied()
                .find(|&n| n <= series.order() && series.coeff(n) != minus_one)
        });
    SubCheck { label, failure }
}

/// Verifies the gap-difference generating functions: the size-1 rewrite
/// and its decomposition, identity for the size-2 excess, and the exact
/// negative coefficients of both.
pub fn check_gap_series(order: usize) -> Result<CheckReport> {
    if order < 10 {
        return Err(Error::InvalidParameter(format!(
            "gap-series check needs order >= 10, got {order}"
        )));
    }
    let ell1 = build(SeriesName::Ell1Diff, order).series;
    let h1 = build(SeriesName::H1, order).series;
    let h2 = build(SeriesName::H2, order).series;

    let mut checks = Vec::new();
    let mut quotient = poly(&[(1, 2)], order);
    quotient.div_binomial(&BigInt::one(), 1)?;
    let rewrite = mul(&dist(1, order), &sub(&lam(3, 1, order), &quotient));
    checks.push(SubCheck::equal(
        "ell1 difference = (-q)_inf (sum q^{3m}/(1+q^m) - q^2/(1+q))",
        &ell1,
        &rewrite,
    ));
    let split = add(
        &add(&poly(&[(-1, 2), (1, 3), (-1, 4)], order), &h1),
        &mul(&dist(1, order), &lam(3, 3, order)),
    );
    checks.push(SubCheck::equal(
        "ell1 difference = -q^2 + q^3 - q^4 + H1 + (-q)_inf sum_{m>=3} q^{3m}/(1+q^m)",
        &ell1,
        &split,
    ));
    checks.push(SubCheck::nonnegative_except("H1 >= 0", &h1, |_| false));
    let shifted_h2 = add(&h2, &poly(&[(1, 2), (1, 6)], order));
    checks.push(SubCheck::equal(
        "H2 + q^2 + q^6 = (1+q^4) sum_k q^k sum_j q^j (-q^{j+1})_inf",
        &shifted_h2,
        &h_identity_right(order),
    ));
    checks.push(exact_exceptions(
        "ell1 difference negative exactly at q^2, q^4 (value -1)",
        &ell1,
        &[2, 4],
    ));
    checks.push(exact_exceptions(
        "H2 negative exactly at q^2, q^6 (value -1)",
        &h2,
        &[2, 6],
    ));
    let sign_patterns = alloc::vec![("ell1 difference", exceptions(&ell1)), ("H2", exceptions(&h2))];
    debug_assert!(sign_patterns.iter().all(|(_, v)| v.iter().all(|(_, c)| !c.is_zero())));
    Ok(CheckReport {
        order,
        checks,
        sign_patterns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisection_passes_at_300() {
        let report = check_bisection(300).unwrap();
        assert!(report.passed(), "{}", report.summary());
        let a = build(SeriesName::Aq, 10).series;
        assert!(a.coeff(5) < BigInt::zero());
        let total = add(&a, &build(SeriesName::Bq, 10).series);
        assert!(total.coeff(0).is_zero());
    }

    #[test]
    fn bisection_rejects_small_order() {
        assert!(check_bisection(75).is_err());
    }

    #[test]
    fn gap_series_pass() {
        let report = check_gap_series(200).unwrap();
        assert!(report.passed(), "{}", report.summary());
        let ell1 = build(SeriesName::Ell1Diff, 10).series;
        assert_eq!(ell1.coeff(2), BigInt::from(-1));
        assert_eq!(ell1.coeff(4), BigInt::from(-1));
        let h2 = build(SeriesName::H2, 10).series;
        assert_eq!(h2.coeff(2), BigInt::from(-1));
        assert_eq!(h2.coeff(6), BigInt::from(-1));
        assert!(check_gap_series(9).is_err());
    }

    #[test]
    fn corrupted_series_is_reported() {
        let b = build(SeriesName::Aq, 20).series;
        let a = add(&b, &IntSeries::monomial(BigInt::one(), 15, 20));
        let check = SubCheck::equal("x", &a, &b);
        assert_eq!(check.failure, Some(15));
    }
}
