use core::f64::consts::PI;

use crate::{Error, Result};

/// Lower end of each coordinate in the `(A, B, C)` search.
pub const ABC_SEARCH_MIN: f64 = 1.05;
/// Upper end of each coordinate in the `(A, B, C)` search.
pub const ABC_SEARCH_MAX: f64 = 1e7;

/// The four closed-form thresholds and `N = max(N_A, N_B, N_C, N_D, 26)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub n_a: f64,
    pub n_b: f64,
    pub n_c: f64,
    pub n_d: f64,
    pub n: f64,
}

impl Thresholds {
    /// Name of the term attaining the maximum.
    pub fn binding(&self) -> &'static str {
        let terms = [
            ("N_A", self.n_a),
            ("N_B", self.n_b),
            ("N_C", self.n_c),
            ("N_D", self.n_d),
        ];
        terms
            .iter()
            .filter(|(_, v)| *v >= self.n)
            .map(|(name, _)| *name)
            .next()
            .unwrap_or("26")
    }
}

/// `D = 1/A + 1/B + 1/C`.
pub fn d_value(a: f64, b: f64, c: f64) -> f64 {
    1.0 / a + 1.0 / b + 1.0 / c
}

/// Thresholds beyond which `0 < q(n + L)/q(n) - 1 < eps`:
///
/// - `N_A = 12 A^2 (2+eps)^2 / (pi^2 eps^2) - L - 1/24`
/// - `N_B = 910787328 B^4 (2+eps)^4 / (10^4 pi^8 eps^4) - L - 1/24`
/// - `N_C = 3/(4 pi^2) log^2(2C (2+eps)(1+L) / eps) - 1/24`
/// - `N_D = L^2 pi^2 / (12 log^2((1+eps)/(1+eps D))) - 1/24`
pub fn thresholds(a: f64, b: f64, c: f64, eps: f64, l: u64) -> Result<Thresholds> {
    for (name, v) in [("A", a), ("B", b), ("C", c), ("epsilon", eps)] {
        if v.is_nan() || v <= 0.0 || v.is_infinite() {
            return Err(Error::InvalidParameter(alloc::format!(
                "{name} must be positive and finite, got {v}"
            )));
        }
    }
    if l == 0 {
        return Err(Error::InvalidParameter("L must be at least 1".into()));
    }
    let d = d_value(a, b, c);
    if d >= 1.0 {
        return Err(Error::ConstraintViolation(d));
    }
    let l = l as f64;
    let tail = l + 1.0 / 24.0;
    let growth = (2.0 + eps) / eps;
    let n_a = 12.0 * a * a * growth * growth / (PI * PI) - tail;
    let n_b = 910_787_328.0 * libm::pow(b * growth, 4.0) / (10_000.0 * libm::pow(PI, 8.0)) - tail;
    let log_c = libm::log(2.0 * c * (2.0 + eps) * (1.0 + l) / eps);
    let n_c = 3.0 / (4.0 * PI * PI) * log_c * log_c - 1.0 / 24.0;
    let log_d = libm::log((1.0 + eps) / (1.0 + eps * d));
    let n_d = l * l * PI * PI / (12.0 * log_d * log_d) - 1.0 / 24.0;
    let n = n_a.max(n_b).max(n_c).max(n_d).max(26.0);
    Ok(Thresholds {
        n_a,
        n_b,
        n_c,
        n_d,
        n,
    })
}

/// A feasible `(A, B, C)` and its thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbcChoice {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub thresholds: Thresholds,
    /// Threshold evaluations spent.
    pub evaluations: usize,
}

struct Search {
    eps: f64,
    l: u64,
    budget: usize,
    used: usize,
    best: Option<([f64; 3], Thresholds)>,
}

impl Search {
    fn exhausted(&self) -> bool {
        self.used >= self.budget
    }

    // Evaluates a point given in log coordinates and keeps it if it is
    // strictly better.
    fn try_point(&mut self, x: [f64; 3]) -> bool {
        if self.exhausted() {
            return false;
        }
        let lo = libm::log(ABC_SEARCH_MIN);
        let hi = libm::log(ABC_SEARCH_MAX);
        if x.iter().any(|&v| v < lo || v > hi) {
            return false;
        }
        self.used += 1;
        let [a, b, c] = x.map(libm::exp);
        let Ok(t) = thresholds(a, b, c, self.eps, self.l) else {
            return false;
        };
        let better = self.best.map_or(true, |(_, old)| t.n < old.n);
        if better {
            self.best = Some((x, t));
        }
        better
    }
}

/// Deterministic search for `(A, B, C)` minimising `N`: a logarithmic grid
/// over `[1.05, 10^7]^3` using about half the budget, then coordinate
/// descent in log coordinates with a shrinking step.
pub fn optimize_abc(eps: f64, l: u64, budget: usize) -> Result<AbcChoice> {
    // Validates eps and L.
    thresholds(4.0, 4.0, 4.0, eps, l)?;
    let mut search = Search {
        eps,
        l,
        budget: budget.max(1),
        used: 0,
        best: None,
    };
    let lo = libm::log(ABC_SEARCH_MIN);
    let hi = libm::log(ABC_SEARCH_MAX);
    let mut per_axis = 2usize;
    while (per_axis + 1).pow(3) * 2 <= search.budget && per_axis < 64 {
        per_axis += 1;
    }
    let spacing = (hi - lo) / (per_axis - 1) as f64;
    'grid: for i in 0..per_axis {
        for j in 0..per_axis {
            for k in 0..per_axis {
                if search.exhausted() {
                    break 'grid;
                }
                let x = [i, j, k].map(|v| lo + v as f64 * spacing);
                search.try_point(x);
            }
        }
    }
    if search.best.is_none() {
        // Tiny budgets may not reach a feasible grid point.
        search.budget = search.budget.max(search.used + 1);
        search.try_point([libm::log(4.0); 3]);
    }
    let mut step = spacing / 2.0;
    while !search.exhausted() && step > 1e-12 {
        let mut improved = false;
        for axis in 0..3 {
            for dir in [1.0, -1.0] {
                let (mut x, _) = search.best.expect("feasible start");
                x[axis] += dir * step;
                improved |= search.try_point(x);
            }
        }
        if !improved {
            step /= 2.0;
        }
    }
    let (x, thresholds) = search.best.expect("feasible start");
    let [a, b, c] = x.map(libm::exp);
    Ok(AbcChoice {
        a,
        b,
        c,
        thresholds,
        evaluations: search.used,
    })
}
