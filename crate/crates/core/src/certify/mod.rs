//! Effective certification of linear inequalities
//! `sum_k alpha_k rho(n + mu_k, m) <= sum_l beta_l rho(n + nu_l, m)`.
//!
//! The analytic thresholds say the inequality holds for every `n > N`; the
//! certificate closes the gap by checking each integer `n <= floor(N)` with
//! exact big-integer arithmetic.

mod thresholds;

use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::analytic::{distinct_counts, DistinctCountTable};
use crate::genfun::{F_COEFFS, G_COEFFS};
use crate::{Error, Result};

pub use thresholds::{
    d_value, optimize_abc, thresholds, AbcChoice, Thresholds, ABC_SEARCH_MAX, ABC_SEARCH_MIN,
};

/// One summand `coeff * rho(n + shift, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub shift: usize,
}

/// A validated inequality: positive coefficients, strictly increasing
/// shifts on each side, `m >= 1` and `sum alpha < sum beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalitySpec {
    lhs: Vec<Term>,
    rhs: Vec<Term>,
    m: usize,
}

fn validate_side(side: &[Term], label: &str) -> Result<()> {
    if side.is_empty() {
        return Err(Error::Hypothesis(format!("{label} side is empty")));
    }
    if let Some(t) = side.iter().find(|t| !t.coeff.is_positive()) {
        return Err(Error::Hypothesis(format!(
            "{label} coefficient {} is not positive",
            t.coeff
        )));
    }
    if side.windows(2).any(|w| w[0].shift >= w[1].shift) {
        return Err(Error::Hypothesis(format!(
            "{label} shifts are not strictly increasing"
        )));
    }
    Ok(())
}

fn sum(side: &[Term]) -> BigRational {
    side.iter().fold(BigRational::zero(), |acc, t| acc + &t.coeff)
}

/// `(coefficient, shift)` pairs with integer coefficients.
type IntegerSide = Vec<(BigInt, usize)>;

impl InequalitySpec {
    pub fn new(lhs: Vec<Term>, rhs: Vec<Term>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Hypothesis("minimum part m must be at least 1".into()));
        }
        validate_side(&lhs, "left")?;
        validate_side(&rhs, "right")?;
        let (a, b) = (sum(&lhs), sum(&rhs));
        if a >= b {
            return Err(Error::Hypothesis(format!(
                "sum of alpha ({a}) must be below sum of beta ({b})"
            )));
        }
        Ok(Self { lhs, rhs, m })
    }

    /// Builds a spec from integer `(coefficient, shift)` pairs.
    pub fn from_integers(lhs: &[(i64, usize)], rhs: &[(i64, usize)], m: usize) -> Result<Self> {
        let side = |terms: &[(i64, usize)]| {
            terms
                .iter()
                .map(|&(c, shift)| Term {
                    coeff: BigRational::from_integer(BigInt::from(c)),
                    shift,
                })
                .collect()
        };
        Self::new(side(lhs), side(rhs), m)
    }

    /// The inequality behind `(-q^9; q)_inf (f(q) - g(q))`:
    /// `sum_{j=29}^{42} g_{43-j} rho(n+j, 9) <= sum_{j=0}^{26} f_{27-j} rho(n+j, 9)`,
    /// with the vanishing coefficients `g_2 = g_3 = 0` left out.
    pub fn paper_t3() -> Self {
        let g = |j: usize| G_COEFFS[j - 1];
        let f = |j: usize| F_COEFFS[j - 1];
        let lhs: Vec<(i64, usize)> = (1..=14)
            .map(|k| (g(15 - k), k + 28))
            .filter(|&(c, _)| c != 0)
            .collect();
        let rhs: Vec<(i64, usize)> = (1..=27).map(|l| (f(28 - l), l - 1)).collect();
        Self::from_integers(&lhs, &rhs, 9).expect("preset is valid")
    }

    /// `q(n + 1) <= 2 q(n)`.
    pub fn toy() -> Self {
        Self::from_integers(&[(1, 1)], &[(2, 0)], 1).expect("preset is valid")
    }

    pub fn lhs(&self) -> &[Term] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Term] {
        &self.rhs
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `(sum beta - sum alpha) / sum alpha`, exactly.
    pub fn epsilon_exact(&self) -> BigRational {
        let a = sum(&self.lhs);
        (sum(&self.rhs) - &a) / a
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon_exact().to_f64().expect("finite ratio")
    }

    /// `L = mu_r + m(m-1)/2`.
    pub fn l(&self) -> u64 {
        let mu_r = self.lhs.last().expect("nonempty").shift;
        (mu_r + self.m * (self.m - 1) / 2) as u64
    }

    /// Largest shift on either side.
    pub fn max_shift(&self) -> usize {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .map(|t| t.shift)
            .max()
            .unwrap_or(0)
    }

    /// Cancels summands with equal shifts on both sides by subtracting the
    /// smaller coefficient from both. Returns `None` when the whole left
    /// side cancels, in which case the inequality holds for every `n`.
    pub fn cancel(&self) -> Option<Self> {
        let mut lhs = self.lhs.clone();
        let mut rhs = self.rhs.clone();
        for a in lhs.iter_mut() {
            if let Some(b) = rhs.iter_mut().find(|b| b.shift == a.shift) {
                let common = a.coeff.clone().min(b.coeff.clone());
                a.coeff -= &common;
                b.coeff -= &common;
            }
        }
        lhs.retain(|t| !t.coeff.is_zero());
        rhs.retain(|t| !t.coeff.is_zero());
        if lhs.is_empty() {
            return None;
        }
        Some(Self::new(lhs, rhs, self.m).expect("cancellation keeps the hypotheses"))
    }

    /// Integer coefficients `(alpha * den, beta * den)` over the least
    /// common denominator.
    fn integer_sides(&self) -> (IntegerSide, IntegerSide) {
        let den = self
            .lhs
            .iter()
            .chain(&self.rhs)
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let scale = |side: &[Term]| {
            side.iter()
                .map(|t| ((&t.coeff * &den).to_integer(), t.shift))
                .collect()
        };
        (scale(&self.lhs), scale(&self.rhs))
    }

    /// Every `n` in `range` where the inequality fails, evaluated exactly
    /// against `table`. Panics if the table is for a different `m` or
    /// does not reach `range.end() + max_shift()`.
    pub fn violations(&self, table: &DistinctCountTable, range: RangeInclusive<usize>) -> Vec<usize> {
        assert_eq!(table.m(), self.m, "table is for a different minimum part");
        assert!(
            range.is_empty() || table.n_max() >= range.end() + self.max_shift(),
            "table too short"
        );
        let (lhs, rhs) = self.integer_sides();
        let weigh = |side: &[(BigInt, usize)], n: usize| {
            side.iter().fold(BigInt::zero(), |acc, (c, s)| {
                acc + c * BigInt::from(table.values()[n + s].clone())
            })
        };
        range.filter(|&n| weigh(&lhs, n) > weigh(&rhs, n)).collect()
    }

    /// The sufficient condition from the reduction to `q`:
    /// `(sum alpha) (q(n + L)/q(n) - 1) <= sum beta - sum alpha`, exactly.
    /// `q` must reach `n + L`.
    pub fn reduction_holds(&self, q: &[BigUint], n: usize) -> bool {
        let l = self.l() as usize;
        let a = sum(&self.lhs);
        let b = sum(&self.rhs);
        let ratio = BigRational::new(BigInt::from(q[n + l].clone()), BigInt::from(q[n].clone()));
        a * (ratio - BigRational::one()) <= b - sum(&self.lhs)
    }
}

/// How a certificate is produced.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifyOptions {
    /// Fixed `(A, B, C)`; when absent, [`optimize_abc`] chooses them.
    pub abc: Option<(f64, f64, f64)>,
    /// Evaluation budget for the optimiser.
    pub budget: usize,
    pub verified_from: usize,
    /// Upper limit on the exhaustive range, below `floor(N)` when the full
    /// check is too expensive.
    pub cap: Option<usize>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            abc: None,
            budget: 100_000,
            verified_from: 0,
            cap: None,
        }
    }
}

/// Thresholds plus the outcome of the exhaustive finite check.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub spec: InequalitySpec,
    pub epsilon: f64,
    pub l: u64,
    pub abc: (f64, f64, f64),
    pub thresholds: Thresholds,
    pub n: f64,
    pub verified_from: usize,
    pub verified_to: usize,
    pub violations: Vec<usize>,
}

impl Certificate {
    /// `floor(N)`, the end of the range the analytic bound does not cover.
    pub fn required_to(&self) -> usize {
        libm::floor(self.n) as usize
    }

    /// Whether the checked range reaches `floor(N)`.
    pub fn covers_threshold(&self) -> bool {
        self.verified_to >= self.required_to()
    }

    /// Violations at or above `n`.
    pub fn violations_from(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        self.violations.iter().copied().filter(move |&v| v >= n)
    }
}

/// Computes thresholds and checks the finite range sequentially.
pub fn certify(spec: &InequalitySpec, options: &CertifyOptions) -> Result<Certificate> {
    certify_with(
        spec,
        options,
        distinct_counts,
        |spec, table, range| spec.violations(table, range),
    )
}

/// [`certify`] with caller-supplied table construction and range checking,
/// for cached tables and parallel checks.
pub fn certify_with<T, C>(
    spec: &InequalitySpec,
    options: &CertifyOptions,
    table_for: T,
    check: C,
) -> Result<Certificate>
where
    T: FnOnce(usize, usize) -> Result<DistinctCountTable>,
    C: FnOnce(&InequalitySpec, &DistinctCountTable, RangeInclusive<usize>) -> Vec<usize>,
{
    let epsilon = spec.epsilon();
    let l = spec.l();
    let (abc, t) = match options.abc {
        Some((a, b, c)) => ((a, b, c), thresholds(a, b, c, epsilon, l)?),
        None => {
            let best = optimize_abc(epsilon, l, options.budget)?;
            ((best.a, best.b, best.c), best.thresholds)
        }
    };
    let required = libm::floor(t.n) as usize;
    let verified_to = options.cap.map_or(required, |cap| cap.min(required));
    let verified_from = options.verified_from;
    let violations = if verified_from > verified_to {
        Vec::new()
    } else {
        let table = table_for(spec.m, verified_to + spec.max_shift())?;
        check(spec, &table, verified_from..=verified_to)
    };
    Ok(Certificate {
        spec: spec.clone(),
        epsilon,
        l,
        abc,
        thresholds: t,
        n: t.n,
        verified_from,
        verified_to,
        violations,
    })
}
