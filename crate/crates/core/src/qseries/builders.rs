use alloc::format;

use super::{Coefficient, QSeries};
use crate::{Error, Result};

/// Sign of the base `a = ±q^j` in `(a; q^step)_count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `a = q^j`, factors `1 - q^e`.
    Plus,
    /// `a = -q^j`, factors `1 + q^e`.
    Minus,
}

/// Number of factors in a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(usize),
    Infinite,
}

/// `(±q^j; q^step)_count` truncated at `order`.
///
/// Infinite products stop at the first factor of degree above `order`.
pub fn pochhammer<C: Coefficient>(
    sign: Sign,
    j: usize,
    step: usize,
    count: Count,
    order: usize,
) -> Result<QSeries<C>> {
    if step == 0 && count == Count::Infinite {
        return Err(Error::InvalidParameter(format!(
            "infinite product with step 0 and base q^{j}"
        )));
    }
    if j == 0 && count == Count::Infinite {
        return Err(Error::DivergentProduct);
    }
    let c = match sign {
        Sign::Plus => -C::one(),
        Sign::Minus => C::one(),
    };
    let mut out = QSeries::one(order);
    let mut i = 0usize;
    loop {
        if let Count::Finite(n) = count {
            if i >= n {
                break;
            }
        }
        let e = j + step * i;
        // Exponents never decrease, so every remaining factor is 1 mod q^{order+1}.
        if e > order {
            break;
        }
        out.mul_binomial(&c, e);
        i += 1;
    }
    Ok(out)
}

/// `sum_{k >= 1} q^{jk}`, that is `q^j / (1 - q^j)`.
pub fn geometric<C: Coefficient>(j: usize, order: usize) -> Result<QSeries<C>> {
    if j == 0 {
        return Err(Error::InvalidParameter("geometric factor needs j >= 1".into()));
    }
    let mut out = QSeries::zero(order);
    for k in (j..=order).step_by(j) {
        out.coeffs[k] = C::one();
    }
    Ok(out)
}

/// Lambert sum `sum_{m >= m0} q^{am} / (1 + q^m)`, expanded as the
/// alternating series `q^{am} (1 - q^m + q^{2m} - ...)`.
pub fn lambert<C: Coefficient>(a: usize, m0: usize, order: usize) -> Result<QSeries<C>> {
    if a == 0 || m0 == 0 {
        return Err(Error::InvalidParameter(
            "Lambert sum needs a >= 1 and m0 >= 1".into(),
        ));
    }
    let mut out = QSeries::zero(order);
    let one = C::one();
    let mut m = m0;
    while a * m <= order {
        let mut negative = false;
        for e in (a * m..=order).step_by(m) {
            if negative {
                out.coeffs[e] -= &one;
            } else {
                out.coeffs[e] += &one;
            }
            negative = !negative;
        }
        m += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::IntSeries;
    use alloc::vec::Vec;
    use num_bigint::BigInt;

    fn ints(series: &IntSeries) -> Vec<i64> {
        series
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn distinct_and_pentagonal_products() {
        let distinct: IntSeries = pochhammer(Sign::Minus, 1, 1, Count::Infinite, 7).unwrap();
        assert_eq!(ints(&distinct), [1, 1, 1, 2, 2, 3, 4, 5]);
        let euler: IntSeries = pochhammer(Sign::Plus, 1, 1, Count::Infinite, 7).unwrap();
        assert_eq!(ints(&euler), [1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn finite_product_degree() {
        let p: IntSeries = pochhammer(Sign::Minus, 3, 1, Count::Finite(6), 40).unwrap();
        let degree = p.coeffs().iter().rposition(|c| *c != BigInt::from(0)).unwrap();
        assert_eq!(degree, 33);
        assert_eq!(p.coeff(33), BigInt::from(1));
    }

    #[test]
    fn divergent_product_rejected() {
        let r: Result<IntSeries> = pochhammer(Sign::Plus, 0, 1, Count::Infinite, 5);
        assert_eq!(r, Err(Error::DivergentProduct));
        let finite: IntSeries = pochhammer(Sign::Minus, 0, 1, Count::Finite(2), 3).unwrap();
        // (1 + 1)(1 + q)
        assert_eq!(ints(&finite), [2, 2, 0, 0]);
    }

    #[test]
    fn product_identity_euler_times_distinct() {
        let order = 50;
        let a: IntSeries = pochhammer(Sign::Plus, 1, 1, Count::Infinite, order).unwrap();
        let b: IntSeries = pochhammer(Sign::Minus, 1, 1, Count::Infinite, order).unwrap();
        let c: IntSeries = pochhammer(Sign::Plus, 2, 2, Count::Infinite, order).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), c);
    }

    #[test]
    fn euler_odd_distinct_inverse() {
        let order = 40;
        let odd: IntSeries = pochhammer(Sign::Plus, 1, 2, Count::Infinite, order).unwrap();
        let distinct: IntSeries = pochhammer(Sign::Minus, 1, 1, Count::Infinite, order).unwrap();
        assert_eq!(odd.inverse().unwrap(), distinct);
    }

    #[test]
    fn geometric_and_lambert() {
        let g: IntSeries = geometric(2, 7).unwrap();
        assert_eq!(ints(&g), [0, 0, 1, 0, 1, 0, 1, 0]);
        let l: IntSeries = lambert(1, 1, 12).unwrap();
        for n in 1..=12usize {
            let expected: i64 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| if (n / d) % 2 == 1 { 1 } else { -1 })
                .sum();
            assert_eq!(l.coeff(n), BigInt::from(expected), "n = {n}");
        }
        assert_eq!(l.coeff(4), BigInt::from(-1));
    }

    #[test]
    fn lambert_rewrite_identity() {
        let order = 60;
        let lhs: IntSeries = lambert::<BigInt>(1, 1, order).unwrap().neg();
        let rhs = lambert(4, 1, order)
            .unwrap()
            .checked_sub(&geometric(3, order).unwrap())
            .unwrap()
            .checked_sub(&IntSeries::monomial(BigInt::from(1), 1, order).checked_mul(
                &IntSeries::polynomial(&[(1, 0), (-1, 2)], order).inverse().unwrap(),
            ).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parameter_validation() {
        assert!(geometric::<BigInt>(0, 3).is_err());
        assert!(lambert::<BigInt>(0, 1, 3).is_err());
        assert!(lambert::<BigInt>(1, 0, 3).is_err());
    }
}
