//! On-disk cache for the expensive exact tables.
//!
//! Each file is tab-separated text (`<TAB>` below):
//!
//! ```text
//! # hookbias-cache v1
//! # kind=rho m=9 records=10043
//! 0<TAB>1
//! ...
//! # end
//! ```
//!
//! A file is only reused when the version, the key, the declared record
//! count and the trailer all check out. Anything else is treated as
//! corrupt, reported on stderr and recomputed. Files are written to a
//! temporary sibling and renamed into place.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use hookbias_core::analytic::DistinctCountTable;
use hookbias_core::partitions::{Family, FamilyTotals};
use num_bigint::BigUint;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "HOOKBIAS_CACHE_DIR";
const MAGIC: &str = "# hookbias-cache v1";
const TRAILER: &str = "# end";

/// How far hook totals reach: up to a fixed `t` or up to `n` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookRange {
    UpTo(usize),
    Full,
}

impl HookRange {
    pub fn t_max(self, n: usize) -> usize {
        match self {
            HookRange::UpTo(t) => t.min(n),
            HookRange::Full => n,
        }
    }

    fn tag(self) -> String {
        match self {
            HookRange::UpTo(t) => format!("t{t}"),
            HookRange::Full => "full".into(),
        }
    }
}

/// What happened when a table was looked up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
    Corrupt,
    Disabled,
}

/// A cache rooted at a directory, or a no-op when there is none.
#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    /// The explicit directory if given, else the environment variable,
    /// else no cache.
    pub fn resolve(explicit: Option<PathBuf>) -> Self {
        let dir = explicit.or_else(|| {
            std::env::var_os(CACHE_DIR_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        });
        Self { dir }
    }

    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn rho_path(&self, m: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("rho-m{m}.tsv")))
    }

    pub fn totals_path(&self, family: Family, range: HookRange) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("totals-{}-{}.tsv", family.name(), range.tag())))
    }

    /// `rho(n, m)` for `0 <= n <= n_max`, from disk if a long enough table
    /// is stored, otherwise from `compute`, which is then stored.
    pub fn rho_table(
        &self,
        m: usize,
        n_max: usize,
        compute: impl FnOnce(usize, usize) -> hookbias_core::Result<DistinctCountTable>,
    ) -> Result<(DistinctCountTable, Lookup)> {
        let Some(path) = self.rho_path(m) else {
            return Ok((compute(m, n_max)?, Lookup::Disabled));
        };
        let key = format!("kind=rho m={m}");
        let status = match read_records(&path, &key) {
            Ok(Some(rows)) => match parse_rho(m, &rows) {
                Ok(table) if table.n_max() >= n_max => {
                    let mut values = table.into_values();
                    values.truncate(n_max + 1);
                    return Ok((DistinctCountTable::from_values(m, values)?, Lookup::Hit));
                }
                Ok(_) => Lookup::Miss,
                Err(e) => {
                    warn_corrupt(&path, &e);
                    Lookup::Corrupt
                }
            },
            Ok(None) => Lookup::Miss,
            Err(e) => {
                warn_corrupt(&path, &e);
                Lookup::Corrupt
            }
        };
        let table = compute(m, n_max)?;
        let rows: Vec<String> = table
            .values()
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n}\t{v}"))
            .collect();
        self.store(&path, &key, &rows)?;
        Ok((table, status))
    }

    /// Stored family totals keyed by `n`; empty when absent or corrupt.
    pub fn load_totals(&self, family: Family, range: HookRange) -> BTreeMap<usize, FamilyTotals> {
        let Some(path) = self.totals_path(family, range) else {
            return BTreeMap::new();
        };
        let key = totals_key(family, range);
        let parsed = read_records(&path, &key)
            .and_then(|rows| rows.map_or(Ok(BTreeMap::new()), |r| parse_totals(family, range, &r)));
        parsed.unwrap_or_else(|e| {
            warn_corrupt(&path, &e);
            BTreeMap::new()
        })
    }

    /// Replaces the stored totals with `totals`.
    pub fn store_totals(
        &self,
        family: Family,
        range: HookRange,
        totals: &BTreeMap<usize, FamilyTotals>,
    ) -> Result<()> {
        let Some(path) = self.totals_path(family, range) else {
            return Ok(());
        };
        let rows: Vec<String> = totals.values().map(totals_row).collect();
        self.store(&path, &totals_key(family, range), &rows)
    }

    fn store(&self, path: &Path, key: &str, rows: &[String]) -> Result<()> {
        let dir = path.parent().expect("cache files live in a directory");
        fs::create_dir_all(dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)
            .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
        {
            let mut w = std::io::BufWriter::new(tmp.as_file_mut());
            writeln!(w, "{MAGIC}")?;
            writeln!(w, "# {key} records={}", rows.len())?;
            for row in rows {
                writeln!(w, "{row}")?;
            }
            writeln!(w, "{TRAILER}")?;
            w.flush()?;
        }
        tmp.as_file().sync_all()?;
        tmp.persist(path)
            .with_context(|| format!("writing cache file {}", path.display()))?;
        Ok(())
    }
}

fn warn_corrupt(path: &Path, err: &anyhow::Error) {
    eprintln!(
        "warning: ignoring corrupt cache file {} ({err:#}); recomputing",
        path.display()
    );
}

fn totals_key(family: Family, range: HookRange) -> String {
    format!("kind=totals family={} hooks={}", family.name(), range.tag())
}

/// Data lines of a cache file, `None` when the file does not exist.
fn read_records(path: &Path, key: &str) -> Result<Option<Vec<String>>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
    };
    let mut lines = text.lines();
    if lines.next() != Some(MAGIC) {
        bail!("missing or unknown version line");
    }
    let header = lines.next().unwrap_or_default();
    let declared = header
        .strip_prefix("# ")
        .and_then(|h| h.strip_prefix(key))
        .and_then(|rest| rest.strip_prefix(" records="))
        .with_context(|| format!("header `{header}` does not match `{key}`"))?;
    let declared: usize = declared.parse().context("record count")?;
    let mut rows: Vec<String> = lines.map(str::to_owned).collect();
    if rows.last().map(String::as_str) != Some(TRAILER) {
        bail!("truncated file: no end marker");
    }
    rows.pop();
    if rows.len() != declared {
        bail!("header declares {declared} records, found {}", rows.len());
    }
    Ok(Some(rows))
}

fn parse_rho(m: usize, rows: &[String]) -> Result<DistinctCountTable> {
    let mut values = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let (n, v) = row.split_once('\t').context("malformed record")?;
        if n.parse::<usize>().ok() != Some(i) {
            bail!("record {i} is labelled {n}");
        }
        values.push(v.parse::<BigUint>().context("malformed count")?);
    }
    if values.is_empty() {
        bail!("empty table");
    }
    Ok(DistinctCountTable::from_values(m, values)?)
}

fn totals_row(t: &FamilyTotals) -> String {
    let hooks: Vec<String> = t.hooks[1..].iter().map(u64::to_string).collect();
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        t.n,
        t.count,
        t.parts,
        t.part_sizes,
        t.gaps1,
        t.gaps2,
        hooks.join(",")
    )
}

fn parse_totals(
    family: Family,
    range: HookRange,
    rows: &[String],
) -> Result<BTreeMap<usize, FamilyTotals>> {
    let mut out = BTreeMap::new();
    for row in rows {
        let fields: Vec<&str> = row.split('\t').collect();
        if fields.len() != 7 {
            bail!("expected 7 fields, found {}", fields.len());
        }
        let num = |i: usize| -> Result<u64> {
            fields[i].parse().with_context(|| format!("field {i} of `{row}`"))
        };
        let n = num(0)? as usize;
        let t_max = range.t_max(n);
        let mut hooks = vec![0u64];
        if !fields[6].is_empty() {
            for h in fields[6].split(',') {
                hooks.push(h.parse().context("hook count")?);
            }
        }
        if hooks.len() != t_max + 1 {
            bail!("n = {n} has {} hook counts, expected {t_max}", hooks.len() - 1);
        }
        let totals = FamilyTotals {
            family,
            n,
            t_max,
            count: num(1)?,
            hooks,
            parts: num(2)?,
            part_sizes: num(3)?,
            gaps1: num(4)?,
            gaps2: num(5)?,
        };
        if out.insert(n, totals).is_some() {
            bail!("duplicate record for n = {n}");
        }
    }
    Ok(out)
}
