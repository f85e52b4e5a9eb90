//! Multi-threaded versions of the core scans and of the certificate check,
//! all backed by the cache.
//!
//! Work is split over `n` and merged afterwards. Results never depend on
//! the number of threads.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use anyhow::Result;
use hookbias_core::analytic::distinct_counts;
use hookbias_core::certify::{certify_with, Certificate, CertifyOptions, InequalitySpec};
use hookbias_core::partitions::{
    beck_c, beck_w, excess_interpretation_counts, family_totals, Family, FamilyTotals,
    Interpretation,
};
use hookbias_core::scan::{
    congruence_from_totals, genfun_values, hook_value, identities_from_rows, BiasPair,
    BiasReport, CongruenceReport, IdentityRow, IdentityScan, Source,
};
use rayon::prelude::*;

use crate::cache::{Cache, HookRange};

/// Runs `f` on a pool with `threads` workers, or rayon's default pool
/// (one worker per hardware thread) when `threads` is `None`.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build()?;
            Ok(pool.install(f))
        }
    }
}

/// Totals of `family` at every `n` in `ns`, reusing and extending the
/// cache. Larger `n` are scheduled first since they dominate the cost.
pub fn family_totals_for(
    cache: &Cache,
    family: Family,
    range: HookRange,
    ns: impl IntoIterator<Item = usize>,
) -> Result<BTreeMap<usize, FamilyTotals>> {
    let mut stored = cache.load_totals(family, range);
    let mut missing: Vec<usize> = ns.into_iter().filter(|n| !stored.contains_key(n)).collect();
    missing.sort_unstable_by(|a, b| b.cmp(a));
    missing.dedup();
    if !missing.is_empty() {
        let fresh: Vec<FamilyTotals> = missing
            .par_iter()
            .map(|&n| family_totals(family, n, range.t_max(n)))
            .collect();
        stored.extend(fresh.into_iter().map(|t| (t.n, t)));
        cache.store_totals(family, range, &stored)?;
    }
    Ok(stored)
}

fn hook_range_for(t: usize) -> HookRange {
    HookRange::UpTo(t.max(10))
}

/// Bias reports for several `t` from one pass of enumeration (or from the
/// generating functions where available).
pub fn scan_bias_many(
    cache: &Cache,
    pair: BiasPair,
    ts: &[usize],
    n_max: usize,
    source: Source,
) -> Result<Vec<BiasReport>> {
    if let Some(&bad) = ts.iter().find(|&&t| t == 0) {
        anyhow::bail!("hook length t must be positive, got {bad}");
    }
    match source {
        Source::Genfun => {
            let reports = ts
                .par_iter()
                .map(|&t| {
                    let (a, b) = genfun_values(pair, t, n_max)?;
                    Ok(BiasReport::from_values(pair, t, n_max, source, a, b))
                })
                .collect::<hookbias_core::Result<Vec<_>>>()?;
            Ok(reports)
        }
        Source::Enumeration => {
            let range = hook_range_for(ts.iter().copied().max().unwrap_or(1));
            let (fa, fb) = pair.families();
            let a = family_totals_for(cache, fa, range, 0..=n_max)?;
            let b = family_totals_for(cache, fb, range, 0..=n_max)?;
            let values = |totals: &BTreeMap<usize, FamilyTotals>, t| {
                (0..=n_max)
                    .map(|n| (n, hook_value(&totals[&n], t)))
                    .collect::<BTreeMap<_, _>>()
            };
            Ok(ts
                .iter()
                .map(|&t| {
                    BiasReport::from_values(pair, t, n_max, source, values(&a, t), values(&b, t))
                })
                .collect())
        }
    }
}

pub fn scan_congruence(cache: &Cache, m_max: usize, n_max: usize) -> Result<CongruenceReport> {
    if m_max == 0 {
        anyhow::bail!("m_max must be at least 1");
    }
    let totals = family_totals_for(cache, Family::SelfConjugate, HookRange::Full, 0..=n_max)?;
    let ordered: Vec<FamilyTotals> = (0..=n_max).map(|n| totals[&n].clone()).collect();
    Ok(congruence_from_totals(m_max, &ordered))
}

pub fn scan_identities(cache: &Cache, n_max: usize) -> Result<IdentityScan> {
    let odd = family_totals_for(cache, Family::Odd, HookRange::Full, 0..=n_max)?;
    let distinct = family_totals_for(cache, Family::Distinct, HookRange::Full, 0..=n_max)?;
    let rows: Vec<IdentityRow> = (0..=n_max)
        .into_par_iter()
        .map(|n| IdentityRow {
            n,
            odd: odd[&n].clone(),
            distinct: distinct[&n].clone(),
            c: beck_c(n),
            w: beck_w(n),
            ell1_interpretation: excess_interpretation_counts(Interpretation::Ell1, n),
            ell2_interpretation: excess_interpretation_counts(Interpretation::Ell2, n),
            ell2_alt_interpretation: excess_interpretation_counts(Interpretation::Ell2Alt, n),
        })
        .collect();
    Ok(identities_from_rows(&rows))
}

const CHECK_CHUNK: usize = 256;

/// Splits `range` into chunks and checks them in parallel.
pub fn violations_parallel(
    spec: &InequalitySpec,
    table: &hookbias_core::analytic::DistinctCountTable,
    range: RangeInclusive<usize>,
) -> Vec<usize> {
    if range.is_empty() {
        return Vec::new();
    }
    let (lo, hi) = (*range.start(), *range.end());
    let starts: Vec<usize> = (lo..=hi).step_by(CHECK_CHUNK).collect();
    let mut found: Vec<usize> = starts
        .par_iter()
        .flat_map_iter(|&s| spec.violations(table, s..=(s + CHECK_CHUNK - 1).min(hi)))
        .collect();
    found.sort_unstable();
    found
}

/// [`hookbias_core::certify::certify`] with a cached `rho` table and a
/// parallel range check.
pub fn certify(cache: &Cache, spec: &InequalitySpec, options: &CertifyOptions) -> Result<Certificate> {
    let mut failure = None;
    let cert = certify_with(
        spec,
        options,
        |m, n_max| match cache.rho_table(m, n_max, distinct_counts) {
            Ok((table, _)) => Ok(table),
            Err(e) => {
                // The core error type has no IO variant, so the cause is
                // carried out of the closure separately.
                failure = Some(e);
                Err(hookbias_core::Error::InvalidParameter("rho table unavailable".into()))
            }
        },
        violations_parallel,
    );
    match (cert, failure) {
        (_, Some(e)) => Err(e),
        (cert, None) => Ok(cert?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hookbias_core::scan::scan_bias;

    #[test]
    fn parallel_matches_sequential() {
        let cache = Cache::disabled();
        let many = scan_bias_many(&cache, BiasPair::OddVsDistinct, &[2, 3, 4], 30, Source::Enumeration)
            .unwrap();
        for r in &many {
            let seq = scan_bias(BiasPair::OddVsDistinct, r.t, 30, Source::Enumeration).unwrap();
            assert_eq!(r, &seq);
        }
        let spec = InequalitySpec::toy();
        let options = CertifyOptions {
            abc: Some((4.0, 4.0, 4.0)),
            cap: Some(2000),
            ..CertifyOptions::default()
        };
        let seq = hookbias_core::certify::certify(&spec, &options).unwrap();
        let par = with_threads(Some(2), || certify(&cache, &spec, &options)).unwrap().unwrap();
        assert_eq!(seq, par);
    }
}
