use alloc::vec::Vec;

use super::{Family, Partition};

/// Streaming enumerator over the partitions of `n` in a family.
///
/// Partitions come out in reverse lexicographic order, except for
/// self-conjugate partitions, which are unfolded from their diagonal hook
/// lengths (a distinct-odd partition) and follow that order instead.
/// [`Partitions::advance`] lends the current parts without allocating; the
/// [`Iterator`] impl clones them into owned [`Partition`] values.
#[derive(Debug, Clone)]
pub struct Partitions {
    rule: Rule,
    n: usize,
    parts: Vec<usize>,
    state: State,
    unfold: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Part constraints of the families enumerated directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    All,
    Odd,
    Distinct,
    DistinctOdd,
}

impl Rule {
    fn step(self) -> usize {
        match self {
            Rule::All | Rule::Distinct => 1,
            Rule::Odd | Rule::DistinctOdd => 2,
        }
    }

    // Largest allowed part of a partition of n.
    fn top(self, n: usize) -> usize {
        match self {
            Rule::All | Rule::Distinct => n,
            Rule::Odd | Rule::DistinctOdd => largest_odd(n),
        }
    }

    // Largest allowed part after a part equal to p.
    fn below(self, p: usize) -> usize {
        match self {
            Rule::All | Rule::Odd => p,
            Rule::Distinct => p - 1,
            Rule::DistinctOdd => p.saturating_sub(2),
        }
    }

    // Whether r splits into allowed parts no larger than cap.
    fn feasible(self, r: usize, cap: usize) -> bool {
        if r == 0 {
            return true;
        }
        if cap == 0 {
            return false;
        }
        match self {
            Rule::All | Rule::Odd => true,
            Rule::Distinct => r <= cap * (cap + 1) / 2,
            Rule::DistinctOdd => {
                // j distinct odd numbers from {1, 3, ..., 2k - 1} reach
                // exactly the sums of parity j between j^2 and j(2k - j).
                let k = cap.div_ceil(2);
                (1..=k).any(|j| j % 2 == r % 2 && j * j <= r && r <= j * (2 * k - j))
            }
        }
    }

    fn largest_part(self, r: usize, cap: usize) -> usize {
        let p = r.min(cap);
        if self.step() == 2 {
            largest_odd(p)
        } else {
            p
        }
    }
}

fn largest_odd(n: usize) -> usize {
    if n % 2 == 1 {
        n
    } else {
        n.saturating_sub(1)
    }
}

impl Partitions {
    pub fn new(family: Family, n: usize) -> Self {
        let (rule, unfold) = match family {
            Family::All => (Rule::All, None),
            Family::Odd => (Rule::Odd, None),
            Family::Distinct => (Rule::Distinct, None),
            Family::DistinctOdd => (Rule::DistinctOdd, None),
            Family::SelfConjugate => (Rule::DistinctOdd, Some(Vec::new())),
        };
        Self {
            rule,
            n,
            parts: Vec::new(),
            state: State::Fresh,
            unfold,
        }
    }

    /// Moves to the next partition and returns its parts.
    pub fn advance(&mut self) -> Option<&[usize]> {
        let found = match self.state {
            State::Fresh => {
                let top = self.rule.top(self.n);
                if self.rule.feasible(self.n, top) {
                    self.fill(self.n, top);
                    true
                } else {
                    false
                }
            }
            State::Running => self.step(),
            State::Done => false,
        };
        if !found {
            self.state = State::Done;
            return None;
        }
        self.state = State::Running;
        match &mut self.unfold {
            Some(buf) => {
                unfold_diagonal_hooks(&self.parts, buf);
                Some(buf)
            }
            None => Some(&self.parts),
        }
    }

    fn fill(&mut self, mut r: usize, mut cap: usize) {
        let step = self.rule.step();
        while r > 0 {
            let mut p = self.rule.largest_part(r, cap);
            while !self.rule.feasible(r - p, self.rule.below(p)) {
                p -= step;
            }
            self.parts.push(p);
            r -= p;
            cap = self.rule.below(p);
        }
    }

    fn step(&mut self) -> bool {
        let step = self.rule.step();
        let mut r = 0;
        while let Some(x) = self.parts.pop() {
            r += x;
            let mut p = x;
            while p > step {
                p -= step;
                let below = self.rule.below(p);
                if self.rule.feasible(r - p, below) {
                    self.parts.push(p);
                    self.fill(r - p, below);
                    return true;
                }
                // Only distinct odd parts can recover with a smaller part:
                // 9 = 7 + 2 fails but 9 = 5 + 3 + 1 works.
                if self.rule != Rule::DistinctOdd {
                    break;
                }
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance().map(|p| Partition::from_sorted(p.to_vec()))
    }
}

/// Rebuilds the self-conjugate partition whose diagonal hooks are `hooks`.
fn unfold_diagonal_hooks(hooks: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let k = hooks.len();
    out.extend(hooks.iter().enumerate().map(|(i, h)| (h - 1) / 2 + i + 1));
    let first = out.first().copied().unwrap_or(0);
    for row in k + 1..=first {
        let len = out[..k].iter().take_while(|&&p| p >= row).count();
        if len == 0 {
            break;
        }
        out.push(len);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn brute_force(family: Family, n: usize) -> BTreeSet<Partition> {
        Partitions::new(Family::All, n)
            .filter(|p| p.is_in(family))
            .collect()
    }

    #[test]
    fn distinct_partitions_of_seven() {
        let got: Vec<Vec<usize>> = Partitions::new(Family::Distinct, 7)
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![7], vec![6, 1], vec![5, 2], vec![4, 3], vec![4, 2, 1]]
        );
    }

    #[test]
    fn empty_partition() {
        for family in Family::ALL {
            let all: Vec<Partition> = Partitions::new(family, 0).collect();
            assert_eq!(all, vec![Partition::empty()], "{family}");
        }
    }

    #[test]
    fn all_partitions_are_reverse_lexicographic_and_complete() {
        let counts: Vec<usize> = (0..=15).map(|n| Partitions::new(Family::All, n).count()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]);
        let list: Vec<Partition> = Partitions::new(Family::All, 12).collect();
        assert!(list.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn restricted_families_match_filtered_enumeration() {
        for n in 0..=22 {
            for family in [Family::Odd, Family::Distinct, Family::DistinctOdd, Family::SelfConjugate] {
                let fast: BTreeSet<Partition> = Partitions::new(family, n).collect();
                let count = Partitions::new(family, n).count();
                assert_eq!(count, fast.len(), "duplicates for {family} at n = {n}");
                assert_eq!(fast, brute_force(family, n), "{family} at n = {n}");
            }
        }
    }

    #[test]
    fn euler_identity_counts() {
        for n in 0..=60 {
            let odd = Partitions::new(Family::Odd, n).count();
            let distinct = Partitions::new(Family::Distinct, n).count();
            assert_eq!(odd, distinct, "n = {n}");
            let sc = Partitions::new(Family::SelfConjugate, n).count();
            let dodd = Partitions::new(Family::DistinctOdd, n).count();
            assert_eq!(sc, dodd, "n = {n}");
        }
    }

    #[test]
    fn lending_interface_matches_iterator() {
        let mut lending = Partitions::new(Family::SelfConjugate, 30);
        let owned: Vec<Partition> = Partitions::new(Family::SelfConjugate, 30).collect();
        let mut seen = 0;
        while let Some(parts) = lending.advance() {
            assert_eq!(parts, owned[seen].parts());
            seen += 1;
        }
        assert_eq!(seen, owned.len());
        assert!(lending.advance().is_none());
    }
}
