use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partitions::{Family, Partitions};
use crate::qseries::{Coefficient, RatSeries};
use crate::{Error, Result};

/// Largest order accepted by [`check_identity`]. The left-hand side sums
/// over every partition of every `n` up to the order.
pub const IDENTITY_ORDER_CAP: usize = 20;

/// Hook-product identities with small integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `sum x^|λ| prod_h (1 - z/h^2) = prod_k (1 - x^k)^(z-1)`.
    NekrasovOkounkov { z: i64 },
    /// `sum x^|λ| y^#{h = t} = prod_k (1 + (y-1) x^{tk})^t / (1 - x^k)`.
    HanHookCount { t: usize, y: i64 },
    /// `sum x^|λ| prod_{t | h} (y - tyz/h^2)
    ///  = prod_k (1 - x^{tk})^t / ((1 - (y x^t)^k)^(t-z) (1 - x^k))`.
    HanMultiple { t: usize, y: i64, z: i64 },
}

/// Both sides of an identity and the first exponent where they differ.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub lhs: RatSeries,
    pub rhs: RatSeries,
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_i64(v)
}

fn int_pow(base: i64, exp: usize) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(base), exp))
}

/// Multiplies `s` by `(1 + c x^e)^power`, dividing for negative powers.
fn apply_power(s: &mut RatSeries, c: &BigRational, e: usize, power: i64) -> Result<()> {
    if e > s.order() || c.is_zero() {
        return Ok(());
    }
    for _ in 0..power.unsigned_abs() {
        if power > 0 {
            s.mul_binomial(c, e);
        } else {
            s.div_binomial(c, e)?;
        }
    }
    Ok(())
}

fn hook_weight(identity: Identity, hooks: &[usize]) -> BigRational {
    let mut w = BigRational::one();
    match identity {
        Identity::NekrasovOkounkov { z } => {
            for &h in hooks {
                let h2 = BigInt::from(h * h);
                w *= BigRational::one() - BigRational::new(BigInt::from(z), h2);
            }
        }
        Identity::HanHookCount { t, y } => {
            let count = hooks.iter().filter(|&&h| h == t).count();
            w = int_pow(y, count);
        }
        Identity::HanMultiple { t, y, z } => {
            for &h in hooks.iter().filter(|&&h| h % t == 0) {
                let h2 = BigInt::from(h * h);
                let tyz = BigInt::from(t as i64 * y * z);
                w *= rat(y) - BigRational::new(tyz, h2);
            }
        }
    }
    w
}

fn right_side(identity: Identity, order: usize) -> Result<RatSeries> {
    let mut s = RatSeries::one(order);
    let minus_one = -BigRational::one();
    match identity {
        Identity::NekrasovOkounkov { z } => {
            for k in 1..=order {
                apply_power(&mut s, &minus_one, k, z - 1)?;
            }
        }
        Identity::HanHookCount { t, y } => {
            for k in 1..=order {
                apply_power(&mut s, &rat(y - 1), t * k, t as i64)?;
                apply_power(&mut s, &minus_one, k, -1)?;
            }
        }
        Identity::HanMultiple { t, y, z } => {
            for k in 1..=order {
                apply_power(&mut s, &minus_one, t * k, t as i64)?;
                apply_power(&mut s, &-int_pow(y, k), t * k, z - t as i64)?;
                apply_power(&mut s, &minus_one, k, -1)?;
            }
        }
    }
    Ok(s)
}

/// Compares both sides of `identity` through `x^order` in exact rational
/// arithmetic: the left by summing hook products over all partitions, the
/// right by expanding the infinite product.
pub fn check_identity(identity: Identity, order: usize) -> Result<IdentityReport> {
    if order > IDENTITY_ORDER_CAP {
        return Err(Error::InvalidParameter(format!(
            "identity checks enumerate every partition; order {order} exceeds {IDENTITY_ORDER_CAP}"
        )));
    }
    if let Identity::HanHookCount { t: 0, .. } | Identity::HanMultiple { t: 0, .. } = identity {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let mut lhs = RatSeries::zero(order);
    let mut coeffs = lhs.clone().into_coeffs();
    for (n, slot) in coeffs.iter_mut().enumerate() {
        let mut acc = BigRational::zero();
        for lambda in Partitions::new(Family::All, n) {
            acc += hook_weight(identity, &lambda.hook_multiset());
        }
        *slot = acc;
    }
    lhs = RatSeries::from_coeffs(coeffs, order);
    let rhs = right_side(identity, order)?;
    let first_mismatch = (0..=order).find(|&n| lhs.coeff(n) != rhs.coeff(n));
    Ok(IdentityReport {
        identity,
        lhs,
        rhs,
        first_mismatch,
    })
}
