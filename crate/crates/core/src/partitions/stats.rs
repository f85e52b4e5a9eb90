use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Family, Partitions, Statistic};

/// Exact totals of every statistic over one family at one `n`.
///
/// Hook counts are kept for `1 <= t <= t_max`; `hooks[0]` is unused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTotals {
    pub family: Family,
    pub n: usize,
    pub t_max: usize,
    /// Number of partitions in the family.
    pub count: u64,
    pub hooks: Vec<u64>,
    pub gaps1: u64,
    pub gaps2: u64,
    pub parts: u64,
    pub part_sizes: u64,
}

impl FamilyTotals {
    /// Total of `statistic`, or `None` when the hook range does not cover
    /// the request. Divisibility counts need `t_max >= n`.
    pub fn value(&self, statistic: Statistic, t: usize) -> Option<u64> {
        match statistic {
            Statistic::HooksEq => {
                if t == 0 {
                    None
                } else if t > self.n {
                    Some(0)
                } else {
                    self.hooks.get(t).copied()
                }
            }
            Statistic::HooksDiv => {
                if t == 0 || self.t_max < self.n {
                    return None;
                }
                Some((t..=self.n).step_by(t).map(|k| self.hooks[k]).sum())
            }
            Statistic::Gaps1 => Some(self.gaps1),
            Statistic::Gaps2 => Some(self.gaps2),
            Statistic::Parts => Some(self.parts),
            Statistic::PartSizes => Some(self.part_sizes),
        }
    }

    /// Sum over all hook lengths, which is `n` times the family size.
    pub fn hook_sum(&self) -> u64 {
        self.hooks.iter().sum()
    }
}

/// Tallies every statistic over the partitions of `n` in `family`, counting
/// hooks of length up to `t_max` (clamped to `n`).
///
/// Hooks are read off the boundary path of the diagram: walking from the
/// bottom-left corner, each part contributes east steps followed by a north
/// step, and every east step at position `p` paired with a later north step
/// at position `p + t` is one hook of length `t`.
pub fn family_totals(family: Family, n: usize, t_max: usize) -> FamilyTotals {
    let t_max = t_max.min(n);
    let mut totals = FamilyTotals {
        family,
        n,
        t_max,
        count: 0,
        hooks: vec![0; t_max + 1],
        gaps1: 0,
        gaps2: 0,
        parts: 0,
        part_sizes: 0,
    };
    let mut east: Vec<usize> = Vec::with_capacity(n + 1);
    let mut parts = Partitions::new(family, n);
    while let Some(lambda) = parts.advance() {
        totals.count += 1;
        totals.parts += lambda.len() as u64;
        east.clear();
        let mut pos = 0usize;
        let mut next = 0usize;
        for &part in lambda.iter().rev() {
            let diff = part - next;
            match diff {
                0 => {}
                1 => totals.gaps1 += 1,
                2 => totals.gaps2 += 1,
                _ => {}
            }
            if diff > 0 {
                totals.part_sizes += 1;
            }
            for _ in 0..diff {
                east.push(pos);
                pos += 1;
            }
            // North step at `pos`; pair it with the nearby east steps.
            for &p in east.iter().rev() {
                let t = pos - p;
                if t > t_max {
                    break;
                }
                totals.hooks[t] += 1;
            }
            pos += 1;
            next = part;
        }
    }
    totals
}

/// Total of `statistic` over the partitions of `n` in `family`.
pub fn stat_total(family: Family, statistic: Statistic, t: usize, n: usize) -> u64 {
    let t_max = if statistic == Statistic::HooksDiv { n } else { t };
    family_totals(family, n, t_max)
        .value(statistic, t)
        .unwrap_or(0)
}

/// Exact counts of one statistic for a family, indexed by `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTable {
    pub family: Family,
    pub statistic: Statistic,
    /// Hook length parameter; 0 for statistics that ignore it.
    pub t: usize,
    pub values: BTreeMap<usize, u64>,
}

impl HookTable {
    pub fn new(family: Family, statistic: Statistic, t: usize) -> Self {
        let t = if statistic.uses_t() { t } else { 0 };
        Self {
            family,
            statistic,
            t,
            values: BTreeMap::new(),
        }
    }

    /// Collects the requested statistic from per-`n` totals of the same
    /// family, skipping entries that do not cover it.
    pub fn from_totals<'a>(
        statistic: Statistic,
        t: usize,
        totals: impl IntoIterator<Item = &'a FamilyTotals>,
    ) -> Option<Self> {
        let mut totals = totals.into_iter().peekable();
        let family = totals.peek()?.family;
        let mut table = Self::new(family, statistic, t);
        for entry in totals {
            if entry.family != family {
                return None;
            }
            if let Some(v) = entry.value(statistic, table.t) {
                table.values.insert(entry.n, v);
            }
        }
        Some(table)
    }

    pub fn get(&self, n: usize) -> Option<u64> {
        self.values.get(&n).copied()
    }

    /// Union of two tables for the same key. Entries present in both must
    /// agree; a disagreement returns the offending `n`.
    pub fn merge(&mut self, other: &HookTable) -> Result<(), usize> {
        debug_assert_eq!(
            (self.family, self.statistic, self.t),
            (other.family, other.statistic, other.t)
        );
        for (&n, &v) in &other.values {
            match self.values.get(&n) {
                Some(&mine) if mine != v => return Err(n),
                _ => {
                    self.values.insert(n, v);
                }
            }
        }
        Ok(())
    }
}
