//! Integer partitions, restricted families and their statistics.
//!
//! Everything here is computed by brute force and serves as the oracle the
//! generating functions are tested against.

mod beck;
mod enumerate;
mod stats;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use beck::{beck_c, beck_w, excess_interpretation_counts, Interpretation};
pub use enumerate::Partitions;
pub use stats::{family_totals, stat_total, FamilyTotals, HookTable};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Restricted partition families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    All,
    Odd,
    Distinct,
    SelfConjugate,
    DistinctOdd,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::All,
        Family::Odd,
        Family::Distinct,
        Family::SelfConjugate,
        Family::DistinctOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::Odd => "odd",
            Family::Distinct => "distinct",
            Family::SelfConjugate => "self_conjugate",
            Family::DistinctOdd => "distinct_odd",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-partition statistics that [`stat_total`] sums over a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    /// Number of hooks of length exactly `t`.
    HooksEq,
    /// Number of hooks of length divisible by `t`.
    HooksDiv,
    /// Number of gaps `λ_i - λ_{i+1} = 1`, with `λ_{ℓ+1} = 0`.
    Gaps1,
    /// Number of gaps `λ_i - λ_{i+1} = 2`, with `λ_{ℓ+1} = 0`.
    Gaps2,
    /// Number of parts.
    Parts,
    /// Number of different part sizes.
    PartSizes,
}

impl Statistic {
    pub const ALL: [Statistic; 6] = [
        Statistic::HooksEq,
        Statistic::HooksDiv,
        Statistic::Gaps1,
        Statistic::Gaps2,
        Statistic::Parts,
        Statistic::PartSizes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::HooksEq => "hooks_eq",
            Statistic::HooksDiv => "hooks_div",
            Statistic::Gaps1 => "gaps_1",
            Statistic::Gaps2 => "gaps_2",
            Statistic::Parts => "parts",
            Statistic::PartSizes => "part_sizes",
        }
    }

    pub fn from_name(name: &str) -> Option<Statistic> {
        Statistic::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Whether the statistic depends on the parameter `t`.
    pub fn uses_t(self) -> bool {
        matches!(self, Statistic::HooksEq | Statistic::HooksDiv)
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(Self::new(parts.clone()).is_ok());
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            parts: conjugate_parts(&self.parts),
        }
    }

    /// `m_λ(k)`, the number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.parts.contains(&k)
    }

    pub fn is_in(&self, family: Family) -> bool {
        let p = &self.parts;
        let distinct = p.windows(2).all(|w| w[0] > w[1]);
        let odd = p.iter().all(|x| x % 2 == 1);
        match family {
            Family::All => true,
            Family::Odd => odd,
            Family::Distinct => distinct,
            Family::DistinctOdd => odd && distinct,
            Family::SelfConjugate => *self == self.conjugate(),
        }
    }

    /// All hook lengths `λ_i + λ'_j - i - j + 1`, in row-major order.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let conj = conjugate_parts(&self.parts);
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row) {
                // 0-based indices: (row - j - 1) + (col - i - 1) + 1
                hooks.push(row + col - i - j - 1);
            }
        }
        hooks
    }

    /// `ℓ_j(λ)`: number of `i` with `λ_i - λ_{i+1} = j`.
    pub fn gaps(&self, j: usize) -> usize {
        self.differences().filter(|&d| d == j).count()
    }

    /// Number of different part sizes, which equals the number of hooks of
    /// length 1.
    pub fn part_sizes(&self) -> usize {
        self.differences().filter(|&d| d > 0).count()
    }

    // λ_i - λ_{i+1} for i = 1..=ℓ, with λ_{ℓ+1} = 0.
    fn differences(&self) -> impl Iterator<Item = usize> + '_ {
        let next = self.parts.iter().skip(1).copied().chain(core::iter::once(0));
        self.parts.iter().zip(next).map(|(a, b)| a - b)
    }
}

pub(crate) fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let Some(&first) = parts.first() else {
        return Vec::new();
    };
    let mut conj = vec![0usize; first];
    for &p in parts {
        for c in &mut conj[..p] {
            *c += 1;
        }
    }
    conj
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
