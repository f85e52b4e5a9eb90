//! Command-line surface.
//!
//! Exit status: 0 on success, 1 when a theorem-backed check or a
//! certificate fails, 2 on usage and runtime errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hookbias_core::analytic::{
    bb_envelope, bessel_bounds, bessel_i1, distinct_counts_pentagonal, laurent_limit,
    wright_main, AsymptoticParams, LaurentName, LogReal,
};
use hookbias_core::certify::{optimize_abc, thresholds, Certificate, CertifyOptions, InequalitySpec, Term};
use hookbias_core::genfun::{
    build, check_bisection, check_gap_series, check_identity, CheckReport, Identity, SeriesName,
};
use hookbias_core::partitions::{Family, Statistic};
use hookbias_core::scan::{self, BiasPair, Source};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cache::{Cache, HookRange};
use crate::parallel;
use crate::report::{Backing, Report, Section, Value};

/// Largest `n_max` the enumeration scans accept without `--allow-large`.
pub const DEFAULT_SCAN_LIMIT: usize = 120;
/// Exhaustive certificate range without `--long`.
pub const DEFAULT_CERTIFY_CAP: usize = 10_000;

#[derive(Debug, Parser)]
#[command(name = "hookbias", version, about = "Hook-length biases in odd and distinct partitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Cache directory (defaults to $HOOKBIAS_CACHE_DIR; no cache if unset).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the available hardware parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Lift the default size caps (full certificate range).
    #[arg(long, global = true)]
    pub long: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of a named generating function.
    Series(SeriesArgs),
    /// Total of a statistic over one partition family at one n.
    Count(CountArgs),
    /// Bias, congruence and identity scans.
    #[command(subcommand)]
    Scan(ScanCommand),
    /// Thresholds and exhaustive check for a linear rho inequality.
    Certify(CertifyArgs),
    /// Asymptotic main terms, Bessel bounds and the q(n) envelope.
    #[command(subcommand)]
    Asym(AsymCommand),
    /// Hook-product identities and generating-function checks.
    #[command(subcommand)]
    Identity(IdentityCommand),
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Series name (a1, b1, c, a2, b2, a3, b3, diff2, diff3, Aq, Bq, fpoly, gpoly, pq, H1, H2, ell1diff, w).
    #[arg(long, value_parser = parse_series)]
    pub name: SeriesName,
    /// Truncation order.
    #[arg(long, default_value_t = 30)]
    pub order: usize,
    /// First exponent to print.
    #[arg(long, default_value_t = 0)]
    pub from: usize,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// hook, hook_div, gaps1, gaps2, parts or part_sizes.
    #[arg(long, value_parser = parse_stat)]
    pub stat: Statistic,
    /// Hook length (required for hook statistics).
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum ScanCommand {
    /// Last observed violations of a_t(n) >= b_t(n).
    Bias(BiasArgs),
    /// Residues of hooks of length 2m in self-conjugate partitions mod 2m.
    Congruence(CongruenceArgs),
    /// Exact identities and gap-bias theorems by enumeration.
    Identities(IdentitiesArgs),
}

#[derive(Debug, Args)]
pub struct BiasArgs {
    #[arg(long, value_parser = parse_pair, default_value = "odd_vs_distinct")]
    pub pair: BiasPair,
    /// Hook lengths (comma separated); defaults to 2..=10.
    #[arg(long, value_delimiter = ',')]
    pub t: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
    pub n_max: usize,
    #[arg(long, value_parser = parse_source, default_value = "enumeration")]
    pub source: Source,
    /// Include the per-n totals and differences in table output.
    #[arg(long)]
    pub differences: bool,
    /// Allow enumeration beyond n = 120.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct CongruenceArgs {
    #[arg(long, default_value_t = 5)]
    pub m_max: usize,
    #[arg(long, default_value_t = 70)]
    pub n_max: usize,
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long, default_value_t = 50)]
    pub n_max: usize,
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// The built-in inequality for rho(n, 9) from the f and g polynomials.
    #[arg(long, conflicts_with_all = ["toy", "lhs"])]
    pub paper_t3: bool,
    /// The inequality q(n + 1) <= 2 q(n).
    #[arg(long, conflicts_with = "lhs")]
    pub toy: bool,
    /// Left side as coeff@shift terms, e.g. `1@3,3/2@5`.
    #[arg(long, requires_all = ["rhs", "m"])]
    pub lhs: Option<String>,
    /// Right side as coeff@shift terms.
    #[arg(long)]
    pub rhs: Option<String>,
    /// Minimum part size.
    #[arg(long)]
    pub m: Option<usize>,
    /// Fixed A,B,C; omitted means optimise.
    #[arg(long, value_parser = parse_abc)]
    pub abc: Option<(f64, f64, f64)>,
    /// Threshold evaluations for the optimiser.
    #[arg(long, default_value_t = 100_000)]
    pub budget: usize,
    /// First n of the exhaustive check (25 for --paper-t3, else 0).
    #[arg(long)]
    pub from: Option<usize>,
    /// Last n of the exhaustive check without --long.
    #[arg(long, default_value_t = DEFAULT_CERTIFY_CAP)]
    pub cap: usize,
    /// Only evaluate the thresholds.
    #[arg(long)]
    pub thresholds_only: bool,
}

#[derive(Debug, Subcommand)]
pub enum AsymCommand {
    /// Circle-method main term against exact coefficients.
    Wright {
        /// Series to approximate (a2, b2, a3, b3).
        #[arg(long, value_parser = parse_series)]
        series: SeriesName,
        /// Comma-separated indices.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
    /// The Beckwith-Bessenrodt envelope for q(n).
    Envelope {
        /// Comma-separated indices.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
    /// I_1(x) and its elementary bounds.
    Bessel {
        /// Comma-separated arguments, each above 3.
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<f64>,
    },
    /// z L(e^{-z}) for a rational or Lambert factor.
    Laurent {
        /// Factor name (Lo2, Ld2, Lo3, Rd3, LambertSum).
        #[arg(long, value_parser = parse_laurent)]
        name: LaurentName,
        /// Comma-separated positive z values.
        #[arg(long, value_delimiter = ',', required = true)]
        z: Vec<f64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum IdentityCommand {
    /// sum over partitions of prod (1 - z/h^2) against prod (1 - x^k)^(z-1).
    NekrasovOkounkov {
        /// Integer parameter z.
        #[arg(long, allow_negative_numbers = true)]
        z: i64,
        /// Truncation order.
        #[arg(long, default_value_t = 15)]
        order: usize,
    },
    /// Generating function of the number of hooks of length t.
    HanHookCount {
        /// Hook length.
        #[arg(long)]
        t: usize,
        /// Weight per hook of length t.
        #[arg(long, allow_negative_numbers = true)]
        y: i64,
        /// Truncation order.
        #[arg(long, default_value_t = 15)]
        order: usize,
    },
    /// Product over hooks with length divisible by t.
    HanMultiple {
        /// Hook lengths divisible by t are weighted.
        #[arg(long)]
        t: usize,
        /// Integer parameter y.
        #[arg(long, allow_negative_numbers = true)]
        y: i64,
        /// Integer parameter z.
        #[arg(long, allow_negative_numbers = true)]
        z: i64,
        /// Truncation order.
        #[arg(long, default_value_t = 15)]
        order: usize,
    },
    /// Decomposition of a3 - b3 and its sign conditions.
    Bisection {
        /// Truncation order.
        #[arg(long, default_value_t = 300)]
        order: usize,
    },
    /// Gap-difference generating functions and their exceptions.
    GapSeries {
        /// Truncation order.
        #[arg(long, default_value_t = 200)]
        order: usize,
    },
}

fn parse_series(s: &str) -> Result<SeriesName, String> {
    SeriesName::from_name(s).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    let canonical = match s {
        "selfconj" | "self-conjugate" | "selfconjugate" => "self_conjugate",
        "distinctodd" | "distinct-odd" => "distinct_odd",
        other => other,
    };
    Family::from_name(canonical).ok_or_else(|| {
        format!("unknown family `{s}` (all, odd, distinct, self_conjugate, distinct_odd)")
    })
}

fn parse_stat(s: &str) -> Result<Statistic, String> {
    let canonical = match s {
        "hook" | "hooks" => "hooks_eq",
        "hook_div" => "hooks_div",
        "gaps1" | "gap1" => "gaps_1",
        "gaps2" | "gap2" => "gaps_2",
        "sizes" => "part_sizes",
        other => other,
    };
    Statistic::from_name(canonical).ok_or_else(|| {
        format!("unknown statistic `{s}` (hook, hook_div, gaps1, gaps2, parts, part_sizes)")
    })
}

fn parse_pair(s: &str) -> Result<BiasPair, String> {
    BiasPair::from_name(s)
        .ok_or_else(|| format!("unknown pair `{s}` (odd_vs_distinct, selfconj_vs_distinctodd)"))
}

fn parse_source(s: &str) -> Result<Source, String> {
    Source::from_name(s).ok_or_else(|| format!("unknown source `{s}` (enumeration, genfun)"))
}

fn parse_laurent(s: &str) -> Result<LaurentName, String> {
    LaurentName::from_name(s).ok_or_else(|| format!("unknown factor `{s}` (Lo2, Ld2, Lo3, Rd3, LambertSum)"))
}

fn parse_abc(s: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(format!("expected three comma-separated numbers, got `{s}`")),
    }
}

/// Parses `coeff@shift` terms such as `1@3,3/2@5`.
pub fn parse_terms(s: &str) -> Result<Vec<Term>> {
    s.split(',')
        .map(|item| {
            let (c, shift) = item
                .trim()
                .split_once('@')
                .ok_or_else(|| anyhow!("term `{item}` is not of the form coeff@shift"))?;
            let coeff = match c.split_once('/') {
                Some((p, q)) => BigRational::new(p.trim().parse::<BigInt>()?, q.trim().parse::<BigInt>()?),
                None => BigRational::from_integer(c.trim().parse::<BigInt>()?),
            };
            Ok(Term {
                coeff,
                shift: shift.trim().parse()?,
            })
        })
        .collect()
}

/// Failures that map to exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                eprintln!("run `hookbias --help` for usage");
            }
            2
        }
    }
}

/// Runs a parsed command, emitting its report; returns the exit status.
pub fn run(cli: &Cli) -> Result<i32> {
    let cache = Cache::resolve(cli.global.cache_dir.clone());
    let threads = cli.global.threads.map(|t| t as usize);
    let report = parallel::with_threads(threads, || dispatch(cli, &cache))??;
    let text = match cli.global.format {
        Format::Table => report.to_table(),
        Format::Structured => report.to_structured(),
    };
    match &cli.global.out {
        Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(if report.theorems_hold() { 0 } else { 1 })
}

fn dispatch(cli: &Cli, cache: &Cache) -> Result<Report> {
    let long = cli.global.long;
    let structured = cli.global.format == Format::Structured;
    match &cli.command {
        Command::Series(a) => series(a),
        Command::Count(a) => count(a, cache),
        Command::Scan(ScanCommand::Bias(a)) => scan_bias(a, cache, long, structured),
        Command::Scan(ScanCommand::Congruence(a)) => scan_congruence(a, cache, long),
        Command::Scan(ScanCommand::Identities(a)) => scan_identities(a, cache, long),
        Command::Certify(a) => certify(a, cache, long),
        Command::Asym(a) => asym(a),
        Command::Identity(a) => identity(a),
    }
}

fn core_usage(e: hookbias_core::Error) -> anyhow::Error {
    usage(e.to_string())
}

/// Errors raised by the core on bad parameters are usage errors.
fn reclassify(e: anyhow::Error) -> anyhow::Error {
    match e.downcast::<hookbias_core::Error>() {
        Ok(core) => core_usage(core),
        Err(other) => other,
    }
}

fn series(a: &SeriesArgs) -> Result<Report> {
    let s = build(a.name, a.order);
    let mut r = Report::new("series");
    r.param("name", a.name.name())
        .param("order", a.order)
        .param("formula", s.formula());
    let mut sec = Section::new("coefficients", &["n", "coefficient"]);
    for n in a.from..=a.order {
        sec.push(vec![n.into(), s.coeff(n).into()]);
    }
    r.sections.push(sec);
    Ok(r)
}

fn count(a: &CountArgs, cache: &Cache) -> Result<Report> {
    let t = match (a.stat.uses_t(), a.t) {
        (true, None) => return Err(usage(format!("--t is required for {}", a.stat))),
        (true, Some(0)) => return Err(usage("--t must be positive")),
        (true, Some(t)) => t,
        (false, _) => 0,
    };
    let range = if a.stat == Statistic::HooksDiv || t > 10 {
        HookRange::Full
    } else {
        HookRange::UpTo(10)
    };
    let totals = parallel::family_totals_for(cache, a.family, range, [a.n])?;
    let value = totals[&a.n]
        .value(a.stat, t)
        .expect("hook range covers the request");
    let mut r = Report::new("count");
    r.param("family", a.family.name())
        .param("stat", a.stat.name())
        .param("t", a.t)
        .param("n", a.n);
    r.result = Some(value.into());
    Ok(r)
}

fn check_scan_size(n_max: usize, allow: bool, long: bool) -> Result<()> {
    if n_max > DEFAULT_SCAN_LIMIT && !(allow || long) {
        return Err(usage(format!(
            "enumeration beyond n = {DEFAULT_SCAN_LIMIT} is slow; pass --allow-large to run n_max = {n_max}"
        )));
    }
    Ok(())
}

fn scan_bias(a: &BiasArgs, cache: &Cache, long: bool, structured: bool) -> Result<Report> {
    if a.source == Source::Enumeration {
        check_scan_size(a.n_max, a.allow_large, long)?;
    }
    let ts: Vec<usize> = if a.t.is_empty() { (2..=10).collect() } else { a.t.clone() };
    let reports =
        parallel::scan_bias_many(cache, a.pair, &ts, a.n_max, a.source).map_err(reclassify)?;
    let mut r = Report::new("scan bias");
    r.param("pair", a.pair.name())
        .param("t", Value::ints(&ts.iter().map(|&t| t as u64).collect::<Vec<_>>()))
        .param("n_max", a.n_max)
        .param("source", a.source.name());
    let half = a.n_max / 2;
    let mut sec = Section::new(
        "last observed violation of a_t(n) >= b_t(n)",
        &["t", "last_violation", "conjectured", "violations", &format!("ratio@{half}"), &format!("ratio@{}", a.n_max)],
    );
    for rep in &reports {
        let violations: Vec<u64> = rep.violation_set.iter().map(|&n| n as u64).collect();
        sec.push(vec![
            rep.t.into(),
            rep.last_violation.into(),
            a.pair.conjectured(rep.t).map(|v| v as u64).into(),
            Value::ints(&violations),
            rep.ratio(half).into(),
            rep.ratio(a.n_max).into(),
        ]);
        // Proved ranges: a_2 >= b_2 everywhere, a_3 >= b_3 beyond 7.
        let theorem = match (a.pair, rep.t) {
            (BiasPair::OddVsDistinct, 2) => Some((0, "0 <=")),
            (BiasPair::OddVsDistinct, 3) => Some((8, "7 <")),
            _ => None,
        };
        if let Some((first, range)) = theorem {
            let bad: Vec<usize> = rep.violation_set.iter().copied().filter(|&n| n >= first).collect();
            r.check(
                format!("a_{t}(n) >= b_{t}(n) for {range} n <= {}", a.n_max, t = rep.t),
                Backing::Theorem,
                bad.is_empty(),
                if bad.is_empty() { String::new() } else { format!("violations at {bad:?}") },
            );
        }
        if let Some(consistent) = rep.consistent_with_conjecture() {
            r.check(
                format!(
                    "last violation for t = {} consistent with conjectured value {}",
                    rep.t,
                    a.pair.conjectured(rep.t).unwrap_or(0)
                ),
                Backing::Conjecture,
                consistent,
                format!("observed {}", rep.last_violation.map_or("none".into(), |v| v.to_string())),
            );
        }
    }
    r.sections.push(sec);
    if a.differences || structured {
        for rep in &reports {
            let mut detail = Section::new(format!("t = {}", rep.t), &["n", "a", "b", "a - b"]);
            for (n, d) in &rep.differences {
                detail.push(vec![
                    (*n).into(),
                    rep.a_values[n].clone().into(),
                    rep.b_values[n].clone().into(),
                    d.clone().into(),
                ]);
            }
            r.sections.push(detail);
        }
    }
    r.note(format!(
        "a scan reports the last violation up to n = {}; it cannot exclude later ones",
        a.n_max
    ));
    Ok(r)
}

fn scan_congruence(a: &CongruenceArgs, cache: &Cache, long: bool) -> Result<Report> {
    check_scan_size(a.n_max, a.allow_large, long)?;
    if a.m_max == 0 {
        return Err(usage("--m-max must be at least 1"));
    }
    let rep = parallel::scan_congruence(cache, a.m_max, a.n_max)?;
    let mut r = Report::new("scan congruence");
    r.param("m_max", a.m_max).param("n_max", a.n_max);
    let mut sec = Section::new(
        "rows with a nonzero residue mod 2m (hooks of length 2m, and of length divisible by 2m, in self-conjugate partitions)",
        &["m", "n", "exact", "exact mod 2m", "divisible", "divisible mod 2m"],
    );
    for row in rep.nonzero() {
        sec.push(vec![
            row.m.into(),
            row.n.into(),
            row.exact.into(),
            row.residue().into(),
            row.divisible.into(),
            row.divisible_residue().into(),
        ]);
    }
    for m in 1..=a.m_max {
        let bad: Vec<usize> = rep.nonzero().filter(|row| row.m == m).map(|row| row.n).collect();
        let backing = if m == 1 { Backing::Theorem } else { Backing::Conjecture };
        r.check(
            format!("counts divisible by {} for 0 <= n <= {}", 2 * m, a.n_max),
            backing,
            bad.is_empty(),
            if bad.is_empty() { String::new() } else { format!("nonzero residues at n = {bad:?}") },
        );
    }
    r.summary("nonzero residues", rep.nonzero().count());
    r.sections.push(sec);
    Ok(r)
}

fn scan_identities(a: &IdentitiesArgs, cache: &Cache, long: bool) -> Result<Report> {
    check_scan_size(a.n_max, a.allow_large, long)?;
    let rep = parallel::scan_identities(cache, a.n_max)?;
    let mut r = Report::new("scan identities");
    r.param("n_max", a.n_max);
    let mut sec = Section::new("checks", &["statement", "backing", "n checked", "failures"]);
    for c in &rep.checks {
        let backing = match c.backing {
            scan::Backing::Theorem => Backing::Theorem,
            scan::Backing::Claim => Backing::Claim,
        };
        let failures: Vec<u64> = c.failures.iter().map(|&n| n as u64).collect();
        sec.push(vec![
            c.label.clone().into(),
            backing.name().into(),
            c.checked.into(),
            Value::ints(&failures),
        ]);
        r.check(
            c.label.clone(),
            backing,
            c.passed(),
            if c.passed() { String::new() } else { format!("fails at n = {:?}", c.failures) },
        );
    }
    r.sections.push(sec);
    Ok(r)
}

fn certify_spec(a: &CertifyArgs) -> Result<(String, InequalitySpec)> {
    if a.paper_t3 {
        return Ok(("paper_t3".into(), InequalitySpec::paper_t3()));
    }
    if a.toy {
        return Ok(("toy".into(), InequalitySpec::toy()));
    }
    match (&a.lhs, &a.rhs, a.m) {
        (Some(l), Some(rh), Some(m)) => {
            let spec = InequalitySpec::new(
                parse_terms(l).map_err(|e| usage(e.to_string()))?,
                parse_terms(rh).map_err(|e| usage(e.to_string()))?,
                m,
            )
            .map_err(core_usage)?;
            Ok(("custom".into(), spec))
        }
        _ => Err(usage("choose --paper-t3, --toy, or give --lhs, --rhs and --m")),
    }
}

fn terms_text(terms: &[Term]) -> String {
    let items: Vec<String> = terms.iter().map(|t| format!("{}@{}", t.coeff, t.shift)).collect();
    items.join(",")
}

fn certify(a: &CertifyArgs, cache: &Cache, long: bool) -> Result<Report> {
    let (preset, spec) = certify_spec(a)?;
    let mut r = Report::new("certify");
    r.param("spec", preset.as_str())
        .param("m", spec.m())
        .param("lhs", terms_text(spec.lhs()))
        .param("rhs", terms_text(spec.rhs()));
    if a.thresholds_only {
        let (abc, t, evaluations) = match a.abc {
            Some((x, y, z)) => ((x, y, z), thresholds(x, y, z, spec.epsilon(), spec.l()).map_err(core_usage)?, None),
            None => {
                let best = optimize_abc(spec.epsilon(), spec.l(), a.budget).map_err(core_usage)?;
                ((best.a, best.b, best.c), best.thresholds, Some(best.evaluations))
            }
        };
        r.summary("epsilon", spec.epsilon())
            .summary("L", spec.l())
            .summary("A", abc.0)
            .summary("B", abc.1)
            .summary("C", abc.2)
            .summary("N_A", t.n_a)
            .summary("N_B", t.n_b)
            .summary("N_C", t.n_c)
            .summary("N_D", t.n_d)
            .summary("N", t.n)
            .summary("binding", t.binding());
        if let Some(e) = evaluations {
            r.summary("optimizer evaluations", e);
        }
        return Ok(r);
    }
    let from = a.from.unwrap_or(if a.paper_t3 { 25 } else { 0 });
    let options = CertifyOptions {
        abc: a.abc,
        budget: a.budget,
        verified_from: from,
        cap: (!long).then_some(a.cap),
    };
    r.param("budget", a.budget)
        .param("long", long)
        .param("cap", options.cap);
    let cert = parallel::certify(cache, &spec, &options).map_err(reclassify)?;
    certificate_report(&mut r, &cert);
    Ok(r)
}

/// Adds the certificate fields, its check and its coverage note.
pub fn certificate_report(r: &mut Report, cert: &Certificate) {
    let t = cert.thresholds;
    r.summary("epsilon", cert.epsilon)
        .summary("L", cert.l)
        .summary("A", cert.abc.0)
        .summary("B", cert.abc.1)
        .summary("C", cert.abc.2)
        .summary("N_A", t.n_a)
        .summary("N_B", t.n_b)
        .summary("N_C", t.n_c)
        .summary("N_D", t.n_d)
        .summary("N", cert.n)
        .summary("binding", t.binding())
        .summary("required_to", cert.required_to())
        .summary("verified_from", cert.verified_from)
        .summary("verified_to", cert.verified_to)
        .summary("covers_threshold", cert.covers_threshold())
        .summary("violations", Value::ints(&cert.violations.iter().map(|&n| n as u64).collect::<Vec<_>>()));
    r.check(
        format!(
            "inequality holds for {} <= n <= {}",
            cert.verified_from, cert.verified_to
        ),
        Backing::Theorem,
        cert.violations.is_empty(),
        if cert.violations.is_empty() {
            String::new()
        } else {
            format!("{} violations, first at n = {}", cert.violations.len(), cert.violations[0])
        },
    );
    if cert.covers_threshold() && !cert.violations.is_empty() {
        r.note(format!(
            "the analytic bound covers n > {}; for n >= {} the inequality fails exactly at the listed violations",
            crate::report::format_real(cert.n),
            cert.verified_from
        ));
    } else if cert.covers_threshold() {
        r.note(format!(
            "the analytic bound covers n > {}; with the finite check the inequality holds for all n >= {}",
            crate::report::format_real(cert.n),
            cert.verified_from
        ));
    } else {
        r.note(format!(
            "partial certificate: the check stops at {} below floor(N) = {}; rerun with --long",
            cert.verified_to,
            cert.required_to()
        ));
    }
}

fn asym(cmd: &AsymCommand) -> Result<Report> {
    match cmd {
        AsymCommand::Wright { series, n } => {
            let params = AsymptoticParams::for_series(*series)
                .ok_or_else(|| usage(format!("no main term is known for {series}")))?;
            let order = n.iter().copied().max().unwrap_or(0);
            let s = build(*series, order);
            let mut r = Report::new("asym wright");
            r.param("series", series.name())
                .param("alpha0", params.alpha0)
                .param("prefactor", params.prefactor())
                .param("n_exponent", params.n_exponent());
            let mut sec = Section::new("main term", &["n", "exact", "main", "exact / main"]);
            for &k in n {
                let main = wright_main(&params, k).map_err(core_usage)?;
                let exact = LogReal::from_bigint(&s.coeff(k));
                let ratio = if exact.is_zero() { None } else { Some((exact / main).to_f64()) };
                sec.push(vec![k.into(), s.coeff(k).into(), main.into(), ratio.into()]);
            }
            r.sections.push(sec);
            Ok(r)
        }
        AsymCommand::Envelope { n } => {
            let top = n.iter().copied().max().unwrap_or(0);
            let q = distinct_counts_pentagonal(1, top).map_err(core_usage)?;
            let mut r = Report::new("asym envelope");
            let mut sec = Section::new(
                "|q(n) - pi^2/(6 sqrt 2 mu) I_1(mu)| <= E(mu)",
                &["n", "mu", "q(n)", "main", "error bound", "inside"],
            );
            let mut all_inside = true;
            for &k in n {
                let env = bb_envelope(k).map_err(core_usage)?;
                let exact = LogReal::from_biguint(&q.values()[k]);
                let inside = env.lower() <= exact && exact <= env.upper();
                all_inside &= inside;
                sec.push(vec![
                    k.into(),
                    env.mu.into(),
                    BigInt::from(q.values()[k].clone()).into(),
                    env.main.into(),
                    env.err_bound.into(),
                    inside.into(),
                ]);
            }
            r.sections.push(sec);
            r.check("q(n) inside the envelope", Backing::Theorem, all_inside, "");
            Ok(r)
        }
        AsymCommand::Bessel { x } => {
            let mut r = Report::new("asym bessel");
            let mut sec = Section::new("I_1(x) with L_1(x) < I_1(x) < U_1(x)", &["x", "L_1", "I_1", "U_1", "ordered"]);
            let mut ok = true;
            for &v in x {
                let i1 = bessel_i1(v).map_err(core_usage)?;
                let (lo, hi) = bessel_bounds(v).map_err(core_usage)?;
                let ordered = lo < i1 && i1 < hi;
                ok &= ordered;
                sec.push(vec![v.into(), lo.into(), i1.into(), hi.into(), ordered.into()]);
            }
            r.sections.push(sec);
            r.check("elementary bounds bracket I_1", Backing::Theorem, ok, "");
            Ok(r)
        }
        AsymCommand::Laurent { name, z } => {
            let mut r = Report::new("asym laurent");
            r.param("factor", name.name()).param("limit", name.limit());
            let mut sec = Section::new("z L(e^{-z})", &["z", "value", "value - limit"]);
            for &v in z {
                let value = laurent_limit(*name, v).map_err(core_usage)?;
                sec.push(vec![v.into(), value.into(), (value - name.limit()).into()]);
            }
            r.sections.push(sec);
            Ok(r)
        }
    }
}

fn check_report(r: &mut Report, check: &CheckReport) {
    for c in &check.checks {
        r.check(
            c.label,
            Backing::Theorem,
            c.passed(),
            c.failure.map_or(String::new(), |n| format!("first failure at q^{n}")),
        );
    }
    for (label, negatives) in &check.sign_patterns {
        let mut sec = Section::new(format!("negative coefficients of {label}"), &["n", "coefficient"]);
        for (n, c) in negatives {
            sec.push(vec![(*n).into(), c.clone().into()]);
        }
        r.sections.push(sec);
    }
}

fn identity(cmd: &IdentityCommand) -> Result<Report> {
    let (name, id, order) = match *cmd {
        IdentityCommand::Bisection { order } => {
            let mut r = Report::new("identity bisection");
            r.param("order", order);
            check_report(&mut r, &check_bisection(order).map_err(core_usage)?);
            return Ok(r);
        }
        IdentityCommand::GapSeries { order } => {
            let mut r = Report::new("identity gap-series");
            r.param("order", order);
            check_report(&mut r, &check_gap_series(order).map_err(core_usage)?);
            return Ok(r);
        }
        IdentityCommand::NekrasovOkounkov { z, order } => {
            ("nekrasov-okounkov", Identity::NekrasovOkounkov { z }, order)
        }
        IdentityCommand::HanHookCount { t, y, order } => {
            ("han-hook-count", Identity::HanHookCount { t, y }, order)
        }
        IdentityCommand::HanMultiple { t, y, z, order } => {
            ("han-multiple", Identity::HanMultiple { t, y, z }, order)
        }
    };
    let rep = check_identity(id, order).map_err(core_usage)?;
    let mut r = Report::new(format!("identity {name}"));
    r.param("identity", format!("{id:?}")).param("order", order);
    let mut sec = Section::new("coefficients", &["n", "lhs", "rhs"]);
    for n in 0..=order {
        sec.push(vec![
            n.into(),
            rep.lhs.coeff(n).to_string().into(),
            rep.rhs.coeff(n).to_string().into(),
        ]);
    }
    r.sections.push(sec);
    r.check(
        format!("both sides agree through x^{order}"),
        Backing::Theorem,
        rep.holds(),
        rep.first_mismatch.map_or(String::new(), |n| format!("first mismatch at x^{n}")),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_parsing() {
        let terms = parse_terms("1@3, 3/2@5").unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[1].shift, 5);
        assert_eq!(terms[1].coeff, BigRational::new(3.into(), 2.into()));
        assert!(parse_terms("1").is_err());
        assert_eq!(parse_abc("180,7,471177"), Ok((180.0, 7.0, 471177.0)));
        assert!(parse_abc("1,2").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn name_aliases() {
        assert_eq!(parse_stat("hook"), Ok(Statistic::HooksEq));
        assert_eq!(parse_family("selfconj"), Ok(Family::SelfConjugate));
        assert!(parse_family("prime").is_err());
    }

    #[test]
    fn bail_is_usage() {
        let e = usage("x");
        assert!(e.downcast_ref::<UsageError>().is_some());
        let other: anyhow::Error = anyhow!("io");
        assert!(other.downcast_ref::<UsageError>().is_none());
    }
}
