use super::{Family, Partitions};

/// Combinatorial descriptions of the gap and part-count excesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Interpretation {
    /// Excess of gaps of size 1 in distinct over odd partitions (`n >= 5`):
    /// exactly one part repeated three times, all others distinct, with
    /// extra conditions when the repeated part is 1 or 2.
    Ell1,
    /// Excess of gaps of size 2 in odd over distinct partitions
    /// (`n` not 2 or 6), first description: 3 is the only repeated part.
    Ell2,
    /// Same excess, second description: 1 repeated, no 2 or 3, and the
    /// smallest part above 4 occurring exactly twice.
    Ell2Alt,
    /// `c(n)`: exactly one part of multiplicity three, the rest distinct.
    AndrewsBeck,
}

impl Interpretation {
    pub const ALL: [Interpretation; 4] = [
        Interpretation::Ell1,
        Interpretation::Ell2,
        Interpretation::Ell2Alt,
        Interpretation::AndrewsBeck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Interpretation::Ell1 => "ell1",
            Interpretation::Ell2 => "ell2",
            Interpretation::Ell2Alt => "ell2_alt",
            Interpretation::AndrewsBeck => "andrews_beck",
        }
    }

    fn accepts(self, parts: &[usize]) -> bool {
        let mult = |k: usize| parts.iter().filter(|&&p| p == k).count();
        let has = |k: usize| mult(k) > 0;
        // Parts listed once per size, ascending.
        let mut sizes: alloc::vec::Vec<usize> = parts.iter().rev().copied().collect();
        sizes.dedup();
        match self {
            Interpretation::AndrewsBeck => one_triple_rest_distinct(parts).is_some(),
            Interpretation::Ell1 => {
                let Some(repeated) = one_triple_rest_distinct(parts) else {
                    return false;
                };
                let mut others = sizes.iter().copied().filter(|&p| p != repeated);
                let smallest_gap = match (others.next(), others.next()) {
                    (Some(a), Some(b)) => Some(b - a),
                    _ => None,
                };
                match repeated {
                    1 => {
                        parts.len() >= 5
                            && smallest_gap == Some(1)
                            && (!has(2) || has(4))
                    }
                    2 => {
                        let len_ok = parts.len() == 3 || parts.len() >= 5;
                        let tail_ok = if has(1) {
                            has(3)
                        } else {
                            parts.len() == 3 || matches!(smallest_gap, Some(1 | 2))
                        };
                        len_ok && tail_ok
                    }
                    _ => true,
                }
            }
            Interpretation::Ell2 => {
                let m3 = mult(3);
                let smallest = parts.last().copied().unwrap_or(0);
                let cond_i = m3 >= 2 && (m3 > 2 || smallest < 3);
                let only_three_repeats = sizes.iter().all(|&k| k == 3 || mult(k) == 1);
                let cond_ii = only_three_repeats && !(has(1) && has(2));
                let low_sum: usize = parts.iter().filter(|&&p| p <= 3).sum();
                let cond_iii = match sizes.iter().find(|&&p| p > 4) {
                    Some(&s) => s >= 5 && s + 2 <= low_sum,
                    None => false,
                };
                cond_i && cond_ii && cond_iii
            }
            Interpretation::Ell2Alt => {
                let Some(&s) = sizes.iter().find(|&&p| p > 4) else {
                    return false;
                };
                mult(1) >= 2
                    && !has(2)
                    && !has(3)
                    && mult(s) == 2
                    && sizes.iter().all(|&k| k == 1 || k == s || mult(k) == 1)
            }
        }
    }
}

// The part of multiplicity exactly three when every other part is distinct.
fn one_triple_rest_distinct(parts: &[usize]) -> Option<usize> {
    let mut triple = None;
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        match run {
            1 => {}
            3 if triple.is_none() => triple = Some(parts[i]),
            _ => return None,
        }
        i += run;
    }
    triple
}

/// `c(n)`: partitions of `n` with exactly one part occurring three times and
/// every other part occurring once.
pub fn beck_c(n: usize) -> u64 {
    excess_interpretation_counts(Interpretation::AndrewsBeck, n)
}

/// `w(n)`: total number of different part sizes greater than 1 in the odd
/// partitions of `n` whose number of 1s is congruent to 0 or 3 mod 4.
pub fn beck_w(n: usize) -> u64 {
    let mut total = 0u64;
    let mut odd = Partitions::new(Family::Odd, n);
    while let Some(parts) = odd.advance() {
        let ones = parts.iter().filter(|&&p| p == 1).count();
        if ones % 4 == 0 || ones % 4 == 3 {
            let mut sizes: alloc::vec::Vec<usize> =
                parts.iter().copied().filter(|&p| p > 1).collect();
            sizes.dedup();
            total += sizes.len() as u64;
        }
    }
    total
}

/// Number of partitions of `n` satisfying the conditions of `kind`.
pub fn excess_interpretation_counts(kind: Interpretation, n: usize) -> u64 {
    let mut count = 0;
    let mut all = Partitions::new(Family::All, n);
    while let Some(parts) = all.advance() {
        if kind.accepts(parts) {
            count += 1;
        }
    }
    count
}
