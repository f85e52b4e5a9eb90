use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::ToPrimitive;

/// A real number stored as `sign * exp(ln_abs)`.
///
/// Quantities such as `e^mu / mu^2` overflow binary64 long before the
/// verification ranges end, so everything exponential is carried in this
/// form. Sums of opposite signs lose relative accuracy in the usual way.
#[derive(Clone, Copy, PartialEq)]
pub struct LogReal {
    ln_abs: f64,
    sign: i8,
}

impl LogReal {
    pub const ZERO: LogReal = LogReal {
        ln_abs: f64::NEG_INFINITY,
        sign: 0,
    };
    pub const ONE: LogReal = LogReal { ln_abs: 0.0, sign: 1 };

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self {
                ln_abs: libm::log(libm::fabs(x)),
                sign: if x > 0.0 { 1 } else { -1 },
            }
        }
    }

    /// `e^x`.
    pub fn exp(x: f64) -> Self {
        Self { ln_abs: x, sign: 1 }
    }

    /// `sign * e^ln_abs`.
    pub fn from_parts(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            Self {
                ln_abs,
                sign: sign.signum(),
            }
        }
    }

    pub fn from_biguint(x: &BigUint) -> Self {
        let bits = x.bits();
        if bits == 0 {
            return Self::ZERO;
        }
        if bits <= 1000 {
            return Self::from_f64(x.to_f64().expect("fits in binary64"));
        }
        let shift = bits - 64;
        let top = (x >> shift).to_f64().expect("64-bit value");
        Self {
            ln_abs: libm::log(top) + shift as f64 * core::f64::consts::LN_2,
            sign: 1,
        }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let magnitude = Self::from_biguint(x.magnitude());
        match x.sign() {
            Sign::Minus => -magnitude,
            _ => magnitude,
        }
    }

    /// Natural log of the absolute value (`-inf` for zero).
    pub fn ln_abs(self) -> f64 {
        self.ln_abs
    }

    pub fn signum(self) -> i8 {
        self.sign
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn is_positive(self) -> bool {
        self.sign > 0
    }

    pub fn abs(self) -> Self {
        Self {
            sign: self.sign.abs(),
            ..self
        }
    }

    /// Nearest binary64 value; infinite when out of range.
    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => s as f64 * libm::exp(self.ln_abs),
        }
    }

    /// `|self|^p`, keeping the sign only for `p = 1`.
    pub fn powf(self, p: f64) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        Self {
            ln_abs: self.ln_abs * p,
            sign: 1,
        }
    }

    pub fn sqrt(self) -> Self {
        debug_assert!(self.sign >= 0, "square root of a negative value");
        self.powf(0.5)
    }

    pub fn scale(self, c: f64) -> Self {
        self * Self::from_f64(c)
    }

    /// `|self / other - 1|`, computed without leaving log space when the
    /// signs agree.
    pub fn relative_difference(self, other: Self) -> f64 {
        if self.sign == other.sign && self.sign != 0 {
            libm::fabs(libm::expm1(self.ln_abs - other.ln_abs))
        } else if self == other {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

impl Default for LogReal {
    fn default() -> Self {
        Self::ZERO
    }
}

impl fmt::Debug for LogReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LogReal({}e^{})", self.sign, self.ln_abs)
    }
}

impl fmt::Display for LogReal {
    /// Scientific notation with a decimal exponent, valid at any magnitude.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        let log10 = self.ln_abs / core::f64::consts::LN_10;
        let mut exponent = libm::floor(log10);
        let mut mantissa = libm::pow(10.0, log10 - exponent);
        let precision = f.precision().unwrap_or(14);
        let rounding = libm::pow(10.0, precision as f64);
        if libm::round(mantissa * rounding) / rounding >= 10.0 {
            mantissa /= 10.0;
            exponent += 1.0;
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}{mantissa:.precision$}e{exponent}")
    }
}

impl Neg for LogReal {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            sign: -self.sign,
            ..self
        }
    }
}

impl Mul for LogReal {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        Self {
            ln_abs: self.ln_abs + rhs.ln_abs,
            sign: self.sign * rhs.sign,
        }
    }
}

impl Div for LogReal {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division of a LogReal by zero");
        if self.is_zero() {
            return Self::ZERO;
        }
        Self {
            ln_abs: self.ln_abs - rhs.ln_abs,
            sign: self.sign * rhs.sign,
        }
    }
}

impl Add for LogReal {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.ln_abs >= rhs.ln_abs {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let ratio = libm::exp(small.ln_abs - big.ln_abs);
        if big.sign == small.sign {
            Self {
                ln_abs: big.ln_abs + libm::log1p(ratio),
                sign: big.sign,
            }
        } else if ratio >= 1.0 {
            Self::ZERO
        } else {
            Self {
                ln_abs: big.ln_abs + libm::log1p(-ratio),
                sign: big.sign,
            }
        }
    }
}

impl Sub for LogReal {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl PartialOrd for LogReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => {}
            unequal => return Some(unequal),
        }
        match self.sign {
            0 => Some(Ordering::Equal),
            1 => self.ln_abs.partial_cmp(&other.ln_abs),
            _ => other.ln_abs.partial_cmp(&self.ln_abs),
        }
    }
}
