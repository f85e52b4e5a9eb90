use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::LogReal;
use crate::{Error, Result};

/// Exact values of `rho(n, m)`, the number of partitions of `n` into
/// distinct parts all at least `m`, for `0 <= n <= n_max`. With `m = 1`
/// these are the distinct-partition counts `q(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctCountTable {
    m: usize,
    values: Vec<BigUint>,
}

impl DistinctCountTable {
    /// Wraps precomputed counts (for example from a cache), checking the
    /// boundary values `rho(0, m) = 1` and `rho(n, m) = 0` for `0 < n < m`.
    pub fn from_values(m: usize, values: Vec<BigUint>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("minimum part must be at least 1".into()));
        }
        if values.first().map_or(true, |v| !v.is_one()) {
            return Err(Error::InvalidParameter("rho(0, m) must be 1".into()));
        }
        if let Some(n) = (1..m.min(values.len())).find(|&n| !values[n].is_zero()) {
            return Err(Error::InvalidParameter(format!(
                "rho({n}, {m}) must vanish below the minimum part"
            )));
        }
        Ok(Self { m, values })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    /// Turns the table for `m` into the table for `m + 1` in place, using
    /// `rho(n, m) = rho(n, m + 1) + rho(n - m, m + 1)`.
    pub fn raise_min_part(&mut self) {
        let m = self.m;
        for n in m..self.values.len() {
            let (low, high) = self.values.split_at_mut(n);
            high[0] -= &low[n - m];
        }
        self.m += 1;
    }
}

/// Counts distinct partitions with parts at least `m` by a knapsack over
/// the allowed parts, in exact arithmetic.
pub fn distinct_counts(m: usize, n_max: usize) -> Result<DistinctCountTable> {
    if m == 0 {
        return Err(Error::InvalidParameter("minimum part must be at least 1".into()));
    }
    let mut values = vec![BigUint::zero(); n_max + 1];
    values[0] = BigUint::one();
    for part in m..=n_max {
        // Descending so each part is used at most once.
        for n in (part..=n_max).rev() {
            let (low, high) = values.split_at_mut(n);
            high[0] += &low[n - part];
        }
    }
    Ok(DistinctCountTable { m, values })
}

/// Independent route to the same table: `q(n)` from
/// `Q(q) (q; q)_inf = (q^2; q^2)_inf` with Euler's pentagonal expansion,
/// then division by `(1 + q)(1 + q^2)...(1 + q^{m-1})`.
pub fn distinct_counts_pentagonal(m: usize, n_max: usize) -> Result<DistinctCountTable> {
    if m == 0 {
        return Err(Error::InvalidParameter("minimum part must be at least 1".into()));
    }
    let mut pentagonal = Vec::new();
    for k in 1usize.. {
        let minus = k * (3 * k - 1) / 2;
        if minus > n_max {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        pentagonal.push((minus, sign));
        let plus = k * (3 * k + 1) / 2;
        if plus <= n_max {
            pentagonal.push((plus, sign));
        }
    }
    let mut q: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        // Coefficient of q^n in (q^2; q^2)_inf.
        let mut value = if n == 0 { BigInt::one() } else { BigInt::zero() };
        for &(g, sign) in &pentagonal {
            if 2 * g == n {
                value = BigInt::from(if sign == 1 { -1 } else { 1 });
            }
        }
        for &(g, sign) in &pentagonal {
            if g > n {
                break;
            }
            if sign == 1 {
                value += &q[n - g];
            } else {
                value -= &q[n - g];
            }
        }
        q.push(value);
    }
    for j in 1..m {
        for n in j..=n_max {
            let (low, high) = q.split_at_mut(n);
            high[0] -= &low[n - j];
        }
    }
    let values = q
        .into_iter()
        .map(|v| {
            debug_assert!(!v.is_negative());
            v.into_parts().1
        })
        .collect();
    Ok(DistinctCountTable { m, values })
}

/// Outcome of checking `q(n) / 2^{m-1} <= rho(n, m) <= q(n + m(m-1)/2) / 2^{m-1}`
/// for every `1 <= m <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SandwichReport {
    /// Pairs whose upper side was compared with an exact `q` value.
    pub exact_upper: usize,
    /// Pairs whose upper side used `q(cap) <= q(n + m(m-1)/2)` instead.
    pub monotone_upper: usize,
    /// Pairs whose upper side needed the analytic lower bound for `q`.
    pub analytic_upper: usize,
    pub failures: Vec<(usize, usize)>,
}

/// Checks the Erdos-Nicolas-Szalay sandwich for all `1 <= m <= n <= n_max`.
///
/// The lower side is always exact. For the upper side, `q` is tabulated
/// exactly up to `q_cap`; larger arguments first use that `q` is
/// nondecreasing, and if that is not enough, the Beckwith-Bessenrodt
/// envelope with the elementary Bessel lower bound.
pub fn check_ens_sandwich(n_max: usize, q_cap: usize) -> SandwichReport {
    let q = distinct_counts_pentagonal(1, q_cap.max(n_max))
        .expect("m = 1")
        .into_values();
    let mut rho = DistinctCountTable {
        m: 1,
        values: q[..=n_max].to_vec(),
    };
    let mut report = SandwichReport::default();
    for m in 1..=n_max {
        if m > 1 {
            rho.raise_min_part();
        }
        let shift = m * (m - 1) / 2;
        for n in m..=n_max {
            let scaled = &rho.values[n] << (m - 1);
            let lower = q[n] <= scaled;
            let arg = n + shift;
            let upper = if arg < q.len() {
                report.exact_upper += 1;
                scaled <= q[arg]
            } else if scaled <= q[q.len() - 1] {
                report.monotone_upper += 1;
                true
            } else {
                report.analytic_upper += 1;
                super::q_lower_bound(arg).is_some_and(|low| LogReal::from_biguint(&scaled) <= low)
            };
            if !(lower && upper) {
                report.failures.push((n, m));
            }
        }
    }
    report
}
