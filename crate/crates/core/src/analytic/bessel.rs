use core::f64::consts::{LN_10, PI, SQRT_2};

use super::LogReal;
use crate::{Error, Result};

/// Largest argument accepted by [`bessel_i1`].
pub const BESSEL_MAX_ARG: f64 = 800.0;

/// The modified Bessel function `I_1(x)` for `0 < x <= 800`, summed from
/// its ascending series `sum_k (x/2)^{2k+1} / (k! (k+1)!)` until the terms
/// stop changing the total. The running sum is rescaled whenever it grows
/// large, so the result is exact to a few ulps even where `e^x` overflows.
pub fn bessel_i1(x: f64) -> Result<LogReal> {
    if !(x > 0.0 && x <= BESSEL_MAX_ARG) {
        return Err(Error::Domain {
            x,
            domain: "0 < x <= 800",
        });
    }
    const RESCALE: f64 = 1e250;
    let half = x / 2.0;
    let half_sq = half * half;
    let mut term = half;
    let mut sum = half;
    let mut scale_ln = 0.0;
    let mut k = 0.0;
    loop {
        term *= half_sq / ((k + 1.0) * (k + 2.0));
        k += 1.0;
        let before = sum;
        sum += term;
        if sum == before && k > half {
            break;
        }
        if sum > RESCALE {
            sum /= RESCALE;
            term /= RESCALE;
            scale_ln += 250.0 * LN_10;
        }
    }
    Ok(LogReal::from_parts(1, libm::log(sum) + scale_ln))
}

/// `3 pi / (8x) exp(3 pi / (8x))` and `3 / (4x) exp(3 / (4x))`, the bounds on
/// the two correction terms of the large-argument expansion of `I_1`.
pub fn expansion_error_bounds(x: f64) -> (f64, f64) {
    let d = 3.0 * PI / (8.0 * x);
    let g = 3.0 / (4.0 * x);
    (d * libm::exp(d), g * libm::exp(g))
}

/// Elementary bounds `L_1(x) < I_1(x) < U_1(x)` for `x > 3`:
/// `e^x / sqrt(2 pi x) (1 -+ 2/x) -+ 2 e^{-x} / sqrt(2 pi x)`.
pub fn bessel_bounds(x: f64) -> Result<(LogReal, LogReal)> {
    if x.is_nan() || x <= 3.0 || x.is_infinite() {
        return Err(Error::Domain { x, domain: "x > 3" });
    }
    let root = LogReal::from_f64(libm::sqrt(2.0 * PI * x));
    let grow = LogReal::exp(x) / root;
    let decay = LogReal::exp(-x).scale(2.0) / root;
    let lower = grow.scale(1.0 - 2.0 / x) - decay;
    let upper = grow.scale(1.0 + 2.0 / x) + decay;
    Ok((lower, upper))
}

/// `mu_n = pi / (6 sqrt 2) sqrt(24 n + 1)`.
pub fn mu(n: usize) -> f64 {
    PI / (6.0 * SQRT_2) * libm::sqrt(24.0 * n as f64 + 1.0)
}

/// The main term and error envelope for `q(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BbEnvelope {
    pub n: usize,
    pub mu: f64,
    /// `pi^2 / (6 sqrt 2 mu) I_1(mu)`.
    pub main: LogReal,
    /// `0.9 pi^2 / (6 sqrt 2) e^mu / mu^2 (1 + 5 mu^2 e^{-mu})`.
    pub err_bound: LogReal,
    /// `(11/10) e^mu / mu^2`, which dominates `err_bound` once `mu > 9`.
    pub simplified: LogReal,
}

impl BbEnvelope {
    pub fn lower(&self) -> LogReal {
        self.main - self.err_bound
    }

    pub fn upper(&self) -> LogReal {
        self.main + self.err_bound
    }

    /// Whether the simplified error bound is claimed at this `n`.
    pub fn simplified_applies(&self) -> bool {
        self.mu > 9.0
    }
}

fn err_hat(mu: f64) -> LogReal {
    let c = 0.9 * PI * PI / (6.0 * SQRT_2);
    let mu2 = LogReal::from_f64(mu * mu);
    (LogReal::exp(mu) / mu2 + LogReal::from_f64(5.0)).scale(c)
}

fn main_prefactor(mu: f64) -> LogReal {
    LogReal::from_f64(PI * PI / (6.0 * SQRT_2 * mu))
}

/// Evaluates the envelope `q(n) = main + E` with `|E| <= err_bound`.
/// Fails when `mu_n` exceeds the range of [`bessel_i1`] (`n` beyond about
/// 194000).
pub fn bb_envelope(n: usize) -> Result<BbEnvelope> {
    let mu = mu(n);
    let main = main_prefactor(mu) * bessel_i1(mu)?;
    Ok(BbEnvelope {
        n,
        mu,
        main,
        err_bound: err_hat(mu),
        simplified: LogReal::exp(mu).scale(1.1) / LogReal::from_f64(mu * mu),
    })
}

/// A lower bound for `q(n)` valid at any size, from the envelope with
/// `I_1` replaced by its elementary lower bound. `None` when the bound is
/// not positive.
pub fn q_lower_bound(n: usize) -> Option<LogReal> {
    let mu = mu(n);
    let (lower, _) = bessel_bounds(mu).ok()?;
    let bound = main_prefactor(mu) * lower - err_hat(mu);
    bound.is_positive().then_some(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `e^{-x} I_1(x) = (1/2pi) int_0^{2pi} e^{x (cos t - 1)} cos t dt`, by
    /// the trapezoid rule, which converges geometrically for periodic
    /// analytic integrands.
    fn scaled_i1_quadrature(x: f64) -> f64 {
        let points = 8192;
        let h = 2.0 * PI / points as f64;
        let mut total = 0.0;
        for i in 0..points {
            let t = i as f64 * h;
            total += libm::exp(x * (libm::cos(t) - 1.0)) * libm::cos(t);
        }
        total / points as f64
    }

    #[test]
    fn matches_quadrature() {
        for &x in &[0.5, 1.0, 3.0, 7.5, 20.0, 64.0, 150.0, 333.0, 700.0, 800.0] {
            let series = bessel_i1(x).unwrap();
            let scaled = libm::exp(series.ln_abs() - x);
            let oracle = scaled_i1_quadrature(x);
            assert!(libm::fabs(scaled / oracle - 1.0) < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn known_values() {
        let at3 = bessel_i1(3.0).unwrap().to_f64();
        assert!(libm::fabs(at3 - 3.953370217402609) < 1e-12);
        let tiny = bessel_i1(1e-6).unwrap().to_f64() / 1e-6;
        assert!(libm::fabs(tiny - 0.5) < 1e-6);
        assert!(bessel_i1(0.0).is_err());
        assert!(bessel_i1(800.5).is_err());
    }

    #[test]
    fn bounds_sandwich_the_function() {
        for &x in &[3.01, 4.0, 10.0, 50.0, 100.0] {
            let (lo, hi) = bessel_bounds(x).unwrap();
            let i1 = bessel_i1(x).unwrap();
            assert!(lo < i1 && i1 < hi, "x = {x}");
        }
        let (d, g) = expansion_error_bounds(3.01);
        assert!(d < 2.0 / 3.01 && 1.0 + g < 2.0);
        let (lo, hi) = bessel_bounds(1e4).unwrap();
        assert!((hi / lo).to_f64() < 1.001);
        assert!(bessel_bounds(3.0).is_err());
    }

    #[test]
    fn envelope_simplification() {
        for n in [25, 100, 1000] {
            let env = bb_envelope(n).unwrap();
            assert!(env.simplified_applies());
            assert!(env.err_bound < env.simplified, "n = {n}");
        }
        assert!(!bb_envelope(24).unwrap().simplified_applies());
        assert!(bb_envelope(200_000).is_err());
    }
}
