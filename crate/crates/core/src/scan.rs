//! Scanners for the conjectural hook biases, the self-conjugate congruence
//! and the exact identities proved about hook and gap totals.
//!
//! A scan only ever reports what it saw up to `n_max`. The last observed
//! violation is consistent with a conjectured crossover point; it is never
//! proof of one.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::genfun::{build, SeriesName};
use crate::partitions::{
    beck_c, beck_w, excess_interpretation_counts, family_totals, Family, FamilyTotals,
    Interpretation, Statistic,
};
use crate::{Error, Result};

/// Last violations of `a_t(n) >= b_t(n)` conjectured for `t = 2..=10`.
pub const CONJECTURED_N_T: [usize; 9] = [0, 7, 8, 18, 16, 34, 34, 56, 59];
/// Last violations of `a*_t(n) >= b*_t(n)` conjectured for `t = 2..=10`.
pub const CONJECTURED_N_T_STAR: [usize; 9] = [10, 8, 22, 12, 30, 20, 38, 32, 54];

/// The two family pairs compared hook by hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BiasPair {
    OddVsDistinct,
    SelfConjVsDistinctOdd,
}

impl BiasPair {
    pub const ALL: [BiasPair; 2] = [BiasPair::OddVsDistinct, BiasPair::SelfConjVsDistinctOdd];

    pub fn name(self) -> &'static str {
        match self {
            BiasPair::OddVsDistinct => "odd_vs_distinct",
            BiasPair::SelfConjVsDistinctOdd => "selfconj_vs_distinctodd",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.name() == name)
    }

    /// `(a side, b side)`: the family expected to have more hooks first.
    pub fn families(self) -> (Family, Family) {
        match self {
            BiasPair::OddVsDistinct => (Family::Odd, Family::Distinct),
            BiasPair::SelfConjVsDistinctOdd => (Family::SelfConjugate, Family::DistinctOdd),
        }
    }

    /// Conjectured last violation for `t` in `2..=10`.
    pub fn conjectured(self, t: usize) -> Option<usize> {
        let table = match self {
            BiasPair::OddVsDistinct => &CONJECTURED_N_T,
            BiasPair::SelfConjVsDistinctOdd => &CONJECTURED_N_T_STAR,
        };
        t.checked_sub(2).and_then(|i| table.get(i)).copied()
    }
}

impl fmt::Display for BiasPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where the hook totals come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Enumeration,
    Genfun,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Enumeration => "enumeration",
            Source::Genfun => "genfun",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [Source::Enumeration, Source::Genfun]
            .into_iter()
            .find(|s| s.name() == name)
    }
}

/// Exact hook totals for both families of a pair and their difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiasReport {
    pub pair: BiasPair,
    pub t: usize,
    pub n_max: usize,
    pub source: Source,
    pub a_values: BTreeMap<usize, BigInt>,
    pub b_values: BTreeMap<usize, BigInt>,
    /// `a_t(n) - b_t(n)`.
    pub differences: BTreeMap<usize, BigInt>,
    pub violation_set: Vec<usize>,
    pub last_violation: Option<usize>,
}

impl BiasReport {
    /// Assembles a report from per-`n` totals of both sides.
    pub fn from_values(
        pair: BiasPair,
        t: usize,
        n_max: usize,
        source: Source,
        a_values: BTreeMap<usize, BigInt>,
        b_values: BTreeMap<usize, BigInt>,
    ) -> Self {
        let differences: BTreeMap<usize, BigInt> = a_values
            .iter()
            .filter_map(|(&n, a)| b_values.get(&n).map(|b| (n, a - b)))
            .collect();
        let violation_set: Vec<usize> = differences
            .iter()
            .filter(|(_, d)| d.is_negative())
            .map(|(&n, _)| n)
            .collect();
        let last_violation = violation_set.last().copied();
        Self {
            pair,
            t,
            n_max,
            source,
            a_values,
            b_values,
            differences,
            violation_set,
            last_violation,
        }
    }

    /// Whether the last observed violation equals the conjectured one
    /// (`0` standing for none). `None` when no value is conjectured.
    pub fn consistent_with_conjecture(&self) -> Option<bool> {
        let expected = self.pair.conjectured(self.t)?;
        Some(self.last_violation.unwrap_or(0) == expected)
    }

    /// `a_t(n) / b_t(n)` where `b_t(n) > 0`.
    pub fn ratio(&self, n: usize) -> Option<f64> {
        let a = self.a_values.get(&n)?;
        let b = self.b_values.get(&n)?;
        if b.is_zero() {
            return None;
        }
        Some(ratio_f64(a, b))
    }
}

/// `a / b` as binary64 for integers of any size.
pub fn ratio_f64(a: &BigInt, b: &BigInt) -> f64 {
    let shift = a.bits().max(b.bits()).saturating_sub(900);
    let a = (a >> shift).to_f64().unwrap_or(f64::NAN);
    let b = (b >> shift).to_f64().unwrap_or(f64::NAN);
    a / b
}

/// Hook totals for one `n` of both families in `pair`.
pub fn pair_totals(pair: BiasPair, t: usize, n: usize) -> (FamilyTotals, FamilyTotals) {
    let (fa, fb) = pair.families();
    (family_totals(fa, n, t), family_totals(fb, n, t))
}

/// Differences `a_t(n) - b_t(n)` for `0 <= n <= n_max` from enumeration or,
/// for odd versus distinct partitions with `t` in `{2, 3}`, from the
/// generating functions.
pub fn scan_bias(pair: BiasPair, t: usize, n_max: usize, source: Source) -> Result<BiasReport> {
    if t == 0 {
        return Err(Error::InvalidParameter("hook length t must be positive".into()));
    }
    let (a_values, b_values) = match source {
        Source::Genfun => genfun_values(pair, t, n_max)?,
        Source::Enumeration => {
            let mut a = BTreeMap::new();
            let mut b = BTreeMap::new();
            for n in 0..=n_max {
                let (ta, tb) = pair_totals(pair, t, n);
                a.insert(n, hook_value(&ta, t));
                b.insert(n, hook_value(&tb, t));
            }
            (a, b)
        }
    };
    Ok(BiasReport::from_values(pair, t, n_max, source, a_values, b_values))
}

/// Number of hooks of length `t` recorded in `totals`.
pub fn hook_value(totals: &FamilyTotals, t: usize) -> BigInt {
    BigInt::from(totals.value(Statistic::HooksEq, t).expect("t covered"))
}

/// Hook totals of odd and distinct partitions from the generating
/// functions.
pub fn genfun_values(
    pair: BiasPair,
    t: usize,
    n_max: usize,
) -> Result<(BTreeMap<usize, BigInt>, BTreeMap<usize, BigInt>)> {
    let (a, b) = match (pair, t) {
        (BiasPair::OddVsDistinct, 2) => (SeriesName::A2, SeriesName::B2),
        (BiasPair::OddVsDistinct, 3) => (SeriesName::A3, SeriesName::B3),
        _ => return Err(Error::UnsupportedSource),
    };
    let collect = |name| {
        build(name, n_max)
            .series
            .into_coeffs()
            .into_iter()
            .enumerate()
            .collect::<BTreeMap<_, _>>()
    };
    Ok((collect(a), collect(b)))
}

/// Residues of hook counts in self-conjugate partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceRow {
    pub m: usize,
    pub n: usize,
    /// `a*_{2m}(n)`, hooks of length exactly `2m`.
    pub exact: u64,
    /// `a**_{2m}(n)`, hooks of length divisible by `2m`.
    pub divisible: u64,
}

impl CongruenceRow {
    pub fn residue(&self) -> u64 {
        self.exact % (2 * self.m as u64)
    }

    pub fn divisible_residue(&self) -> u64 {
        self.divisible % (2 * self.m as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub m_max: usize,
    pub n_max: usize,
    pub rows: Vec<CongruenceRow>,
}

impl CongruenceReport {
    /// Rows where either count is not divisible by `2m`.
    pub fn nonzero(&self) -> impl Iterator<Item = &CongruenceRow> {
        self.rows
            .iter()
            .filter(|r| r.residue() != 0 || r.divisible_residue() != 0)
    }

    pub fn all_zero(&self) -> bool {
        self.nonzero().next().is_none()
    }
}

/// Builds the congruence report from self-conjugate totals with
/// `t_max >= n`, one entry per `n` in `0..=n_max`.
pub fn congruence_from_totals(m_max: usize, totals: &[FamilyTotals]) -> CongruenceReport {
    let n_max = totals.len().saturating_sub(1);
    let mut rows = Vec::new();
    for m in 1..=m_max {
        for entry in totals {
            rows.push(CongruenceRow {
                m,
                n: entry.n,
                exact: entry.value(Statistic::HooksEq, 2 * m).expect("t covered"),
                divisible: entry.value(Statistic::HooksDiv, 2 * m).expect("t_max >= n"),
            });
        }
    }
    CongruenceReport { m_max, n_max, rows }
}

/// `a*_{2m}(n) mod 2m` (and the same for hooks divisible by `2m`) for
/// `1 <= m <= m_max`, `0 <= n <= n_max`.
pub fn scan_congruence(m_max: usize, n_max: usize) -> Result<CongruenceReport> {
    if m_max == 0 {
        return Err(Error::InvalidParameter("m_max must be at least 1".into()));
    }
    let totals: Vec<FamilyTotals> = (0..=n_max)
        .map(|n| family_totals(Family::SelfConjugate, n, n))
        .collect();
    Ok(congruence_from_totals(m_max, &totals))
}

/// Whether a check restates a theorem or a claim made without proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backing {
    Theorem,
    Claim,
}

impl Backing {
    pub fn name(self) -> &'static str {
        match self {
            Backing::Theorem => "theorem",
            Backing::Claim => "claim",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub backing: Backing,
    pub checked: usize,
    /// `n` values where the statement fails.
    pub failures: Vec<usize>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityScan {
    pub n_max: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityScan {
    /// Whether every theorem-backed check passed.
    pub fn theorems_hold(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.backing == Backing::Theorem)
            .all(IdentityCheck::passed)
    }

    pub fn get(&self, label_prefix: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.label.starts_with(label_prefix))
    }
}

/// Everything [`scan_identities`] needs about one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRow {
    pub n: usize,
    pub odd: FamilyTotals,
    pub distinct: FamilyTotals,
    pub c: u64,
    pub w: u64,
    pub ell1_interpretation: u64,
    pub ell2_interpretation: u64,
    pub ell2_alt_interpretation: u64,
}

/// Computes the totals and counts behind the identity checks at `n`.
pub fn identity_row(n: usize) -> IdentityRow {
    IdentityRow {
        n,
        odd: family_totals(Family::Odd, n, n),
        distinct: family_totals(Family::Distinct, n, n),
        c: beck_c(n),
        w: beck_w(n),
        ell1_interpretation: excess_interpretation_counts(Interpretation::Ell1, n),
        ell2_interpretation: excess_interpretation_counts(Interpretation::Ell2, n),
        ell2_alt_interpretation: excess_interpretation_counts(Interpretation::Ell2Alt, n),
    }
}

/// Evaluates every identity and inequality over the given rows.
pub fn identities_from_rows(rows: &[IdentityRow]) -> IdentityScan {
    let n_max = rows.iter().map(|r| r.n).max().unwrap_or(0);
    let mut checks = Vec::new();
    let mut add = |label: &str, backing, applies: &dyn Fn(usize) -> bool, ok: &dyn Fn(&IdentityRow) -> bool| {
        let mut checked = 0;
        let mut failures = Vec::new();
        for row in rows.iter().filter(|r| applies(r.n)) {
            checked += 1;
            if !ok(row) {
                failures.push(row.n);
            }
        }
        checks.push(IdentityCheck {
            label: label.to_string(),
            backing,
            checked,
            failures,
        });
    };
    let a1 = |r: &IdentityRow| r.odd.part_sizes as i64;
    let b1 = |r: &IdentityRow| r.distinct.parts as i64;
    let ell1 = |r: &IdentityRow| r.distinct.gaps1 as i64 - r.odd.gaps1 as i64;
    let ell2 = |r: &IdentityRow| r.odd.gaps2 as i64 - r.distinct.gaps2 as i64;
    let hooks = |f: &FamilyTotals, t: usize| f.value(Statistic::HooksEq, t).unwrap_or(0) as i64;
    let always = |_: usize| true;

    add("b1 - a1 = c", Backing::Theorem, &always, &|r| b1(r) - a1(r) == r.c as i64);
    add(
        "sum_t a_t = sum_t b_t",
        Backing::Theorem,
        &always,
        &|r| r.odd.hook_sum() == r.distinct.hook_sum(),
    );
    add("a2 - b2 = w", Backing::Theorem, &always, &|r| {
        hooks(&r.odd, 2) - hooks(&r.distinct, 2) == r.w as i64
    });
    add(
        "ell1 difference >= 0, equal to -1 exactly at n = 2, 4",
        Backing::Theorem,
        &always,
        &|r| if r.n == 2 || r.n == 4 { ell1(r) == -1 } else { ell1(r) >= 0 },
    );
    add(
        "ell2 difference >= 0, equal to -1 exactly at n = 2, 6",
        Backing::Theorem,
        &always,
        &|r| if r.n == 2 || r.n == 6 { ell2(r) == -1 } else { ell2(r) >= 0 },
    );
    add(
        "ell1 difference counts its combinatorial interpretation (n >= 5)",
        Backing::Theorem,
        &|n| n >= 5,
        &|r| ell1(r) == r.ell1_interpretation as i64,
    );
    add(
        "ell2 difference counts its first interpretation (n != 2, 6)",
        Backing::Theorem,
        &|n| n != 2 && n != 6,
        &|r| ell2(r) == r.ell2_interpretation as i64,
    );
    add(
        "ell2 difference counts its second interpretation (n != 2, 6)",
        Backing::Theorem,
        &|n| n != 2 && n != 6,
        &|r| ell2(r) == r.ell2_alt_interpretation as i64,
    );
    add(
        "ell1 difference <= b1 - a1 (n >= 5)",
        Backing::Theorem,
        &|n| n >= 5,
        &|r| ell1(r) <= b1(r) - a1(r),
    );
    let rewritten = |r: &IdentityRow| {
        a1(r) - r.odd.gaps1 as i64 <= b1(r) - r.distinct.gaps1 as i64
    };
    add(
        "a1 - ell1(odd) <= b1 - ell1(distinct) (n >= 5)",
        Backing::Theorem,
        &|n| n >= 5,
        &rewritten,
    );
    add(
        "a1 - ell1(odd) <= b1 - ell1(distinct) (n < 5)",
        Backing::Claim,
        &|n| n < 5,
        &rewritten,
    );
    IdentityScan { n_max, checks }
}

/// Checks the Andrews-Beck identity, the hook-sum balance, the gap-bias
/// theorems with their interpretations, and the derived inequalities for
/// `0 <= n <= n_max` by enumeration.
pub fn scan_identities(n_max: usize) -> IdentityScan {
    let rows: Vec<IdentityRow> = (0..=n_max).map(identity_row).collect();
    identities_from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bias_scans() {
        let t2 = scan_bias(BiasPair::OddVsDistinct, 2, 40, Source::Enumeration).unwrap();
        assert_eq!(t2.last_violation, None);
        assert_eq!(t2.consistent_with_conjecture(), Some(true));
        let t3 = scan_bias(BiasPair::OddVsDistinct, 3, 40, Source::Enumeration).unwrap();
        assert_eq!(t3.last_violation, Some(7));
        let star = scan_bias(BiasPair::SelfConjVsDistinctOdd, 2, 40, Source::Enumeration).unwrap();
        assert_eq!(star.last_violation, Some(10));
        assert_eq!(t3.differences[&7], t3.a_values[&7].clone() - &t3.b_values[&7]);
        assert!(scan_bias(BiasPair::OddVsDistinct, 0, 5, Source::Enumeration).is_err());
    }

    #[test]
    fn genfun_matches_enumeration() {
        for t in [2, 3] {
            let e = scan_bias(BiasPair::OddVsDistinct, t, 45, Source::Enumeration).unwrap();
            let g = scan_bias(BiasPair::OddVsDistinct, t, 45, Source::Genfun).unwrap();
            assert_eq!(e.differences, g.differences);
            assert_eq!(e.violation_set, g.violation_set);
        }
        assert_eq!(
            scan_bias(BiasPair::OddVsDistinct, 4, 10, Source::Genfun),
            Err(Error::UnsupportedSource)
        );
        assert_eq!(
            scan_bias(BiasPair::SelfConjVsDistinctOdd, 2, 10, Source::Genfun),
            Err(Error::UnsupportedSource)
        );
    }

    #[test]
    fn congruence_small() {
        let report = scan_congruence(3, 30).unwrap();
        assert!(report.all_zero());
        assert!(report.rows.iter().filter(|r| r.n == 0).all(|r| r.exact == 0));
        assert_eq!(report.rows.len(), 3 * 31);
        assert!(scan_congruence(0, 5).is_err());
    }

    #[test]
    fn identities_small() {
        let scan = scan_identities(30);
        for check in &scan.checks {
            assert!(check.passed(), "{} failed at {:?}", check.label, check.failures);
            assert!(check.checked > 0, "{}", check.label);
        }
        assert!(scan.theorems_hold());
    }

    #[test]
    fn big_ratio() {
        let a = BigInt::from(3) << 5000u32;
        let b = BigInt::from(2) << 5000u32;
        assert_eq!(ratio_f64(&a, &b), 1.5);
    }
}
