use core::f64::consts::{LN_2, PI, SQRT_2};
use core::fmt;

use super::LogReal;
use crate::genfun::SeriesName;
use crate::{Error, Result};

/// Hypothesis constants for a product `L(q) xi(q)` where
/// `xi(e^{-z}) ~ K z^beta e^{A/z}` and `L(e^{-z}) ~ alpha0 z^{-B}` near
/// `z = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticParams {
    pub k: f64,
    pub a: f64,
    pub b: f64,
    pub beta: f64,
    pub alpha0: f64,
}

impl AsymptoticParams {
    /// `xi = (-q; q)_inf`: `K = 1/sqrt 2`, `A = pi^2 / 12`, `B = 1`, `beta = 0`.
    pub fn distinct_parts(alpha0: f64) -> Self {
        Self {
            k: 1.0 / SQRT_2,
            a: PI * PI / 12.0,
            b: 1.0,
            beta: 0.0,
            alpha0,
        }
    }

    /// Constants for the hook-count series that have a known main term.
    pub fn for_series(name: SeriesName) -> Option<Self> {
        let alpha0 = match name {
            SeriesName::A1 => 0.5,
            SeriesName::B1 => LN_2,
            SeriesName::C => LN_2 - 0.5,
            SeriesName::A2 => 0.75,
            SeriesName::B2 => 0.5,
            SeriesName::Diff2 | SeriesName::W => 0.25,
            SeriesName::A3 => 2.0 / 3.0,
            SeriesName::B3 => LN_2 - 0.125,
            SeriesName::Diff3 => 2.0 / 3.0 - LN_2 + 0.125,
            _ => return None,
        };
        Some(Self::distinct_parts(alpha0))
    }

    /// `K alpha0 sqrt(A)^{beta - B + 1/2} / (2 sqrt pi)`.
    pub fn prefactor(&self) -> f64 {
        self.k * self.alpha0 * libm::pow(libm::sqrt(self.a), self.beta - self.b + 0.5)
            / (2.0 * libm::sqrt(PI))
    }

    /// Power of `n` in the main term.
    pub fn n_exponent(&self) -> f64 {
        (2.0 * self.b - 2.0 * self.beta - 3.0) / 4.0
    }
}

/// Main term `prefactor * n^{(2B - 2beta - 3)/4} e^{2 sqrt(A n)}` of the
/// circle-method expansion, in log space.
pub fn wright_main(params: &AsymptoticParams, n: usize) -> Result<LogReal> {
    if n == 0 {
        return Err(Error::InvalidParameter("main term needs n >= 1".into()));
    }
    let n = n as f64;
    let growth = 2.0 * libm::sqrt(params.a * n) + params.n_exponent() * libm::log(n);
    Ok(LogReal::from_f64(params.prefactor()) * LogReal::exp(growth))
}

/// Rational and Lambert factors whose polar part at `q = 1` gives `alpha0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaurentName {
    /// `q^2 (1 + q + q^3) / (1 - q^4)`.
    Lo2,
    /// `q^2 / (1 - q^2)`.
    Ld2,
    /// `q^3 (1 + q^3) / ((1 + q)(1 - q^4)) + q^6 / (1 - q^4) + q^3 / (1 - q^6)`.
    Lo3,
    /// `-q^2 / ((1 - q^4)(1 + q)) - q / (1 + q)`.
    Rd3,
    /// `sum_{n >= 1} q^n / (1 + q^n)`.
    LambertSum,
}

impl LaurentName {
    pub const ALL: [LaurentName; 5] = [
        LaurentName::Lo2,
        LaurentName::Ld2,
        LaurentName::Lo3,
        LaurentName::Rd3,
        LaurentName::LambertSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LaurentName::Lo2 => "Lo2",
            LaurentName::Ld2 => "Ld2",
            LaurentName::Lo3 => "Lo3",
            LaurentName::Rd3 => "Rd3",
            LaurentName::LambertSum => "LambertSum",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name().eq_ignore_ascii_case(name))
    }

    /// `lim_{z -> 0} z L(e^{-z})`.
    pub fn limit(self) -> f64 {
        match self {
            LaurentName::Lo2 => 0.75,
            LaurentName::Ld2 => 0.5,
            LaurentName::Lo3 => 2.0 / 3.0,
            LaurentName::Rd3 => -0.125,
            LaurentName::LambertSum => LN_2,
        }
    }
}

impl fmt::Display for LaurentName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `z L(e^{-z})` for real `0 < z <= 1`.
pub fn laurent_limit(name: LaurentName, z: f64) -> Result<f64> {
    if !(z > 0.0 && z <= 1.0) {
        return Err(Error::Domain {
            x: z,
            domain: "0 < z <= 1",
        });
    }
    let q = |k: f64| libm::exp(-k * z);
    // 1 - q^k without cancellation.
    let one_minus = |k: f64| -libm::expm1(-k * z);
    let value = match name {
        LaurentName::Lo2 => q(2.0) * (1.0 + q(1.0) + q(3.0)) / one_minus(4.0),
        LaurentName::Ld2 => q(2.0) / one_minus(2.0),
        LaurentName::Lo3 => {
            q(3.0) * (1.0 + q(3.0)) / ((1.0 + q(1.0)) * one_minus(4.0))
                + q(6.0) / one_minus(4.0)
                + q(3.0) / one_minus(6.0)
        }
        LaurentName::Rd3 => {
            -q(2.0) / (one_minus(4.0) * (1.0 + q(1.0))) - q(1.0) / (1.0 + q(1.0))
        }
        LaurentName::LambertSum => {
            let mut sum = 0.0;
            let mut n = 1.0;
            loop {
                let qn = q(n);
                let term = qn / (1.0 + qn);
                if term < 1e-18 * sum {
                    break;
                }
                sum += term;
                n += 1.0;
            }
            sum
        }
    };
    Ok(z * value)
}
