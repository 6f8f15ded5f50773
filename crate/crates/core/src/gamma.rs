//! Γ(a, t): the least value of Σ C(z_i, 2) over compositions
//! z_1 + ... + z_a = a + t with every z_i ≥ 0.
//!
//! All arithmetic is exact integer arithmetic.

use serde::Serialize;

use crate::error::{Error, Result};

/// Γ(a, t) with its division witnesses `a + t = r·a + s`, `0 ≤ s < a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaValue {
    pub a: u64,
    pub t: u64,
    pub r: u64,
    pub s: u64,
    pub value: u64,
}

const fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Closed form: `a − s` parts of size `r` and `s` parts of size `r + 1`.
pub fn gamma_closed(a: u64, t: u64) -> Result<GammaValue> {
    if a == 0 {
        return Err(Error::GammaDomain);
    }
    let total = a + t;
    let (r, s) = (total / a, total % a);
    Ok(GammaValue {
        a,
        t,
        r,
        s,
        value: (a - s) * choose2(r) + s * choose2(r + 1),
    })
}

/// Shorthand for `gamma_closed(a, t)?.value`.
pub fn gamma(a: u64, t: u64) -> Result<u64> {
    gamma_closed(a, t).map(|g| g.value)
}

/// `best[k][s]` = least Σ C(z_i, 2) over `k` nonnegative parts summing to
/// `s`, for `k ≤ max_parts` and `s ≤ max_sum`.
fn composition_table(max_parts: usize, max_sum: usize) -> Vec<Vec<u64>> {
    let mut best = vec![vec![u64::MAX; max_sum + 1]; max_parts + 1];
    best[0][0] = 0;
    for k in 1..=max_parts {
        for s in 0..=max_sum {
            best[k][s] = (0..=s)
                .filter(|&z| best[k - 1][s - z] != u64::MAX)
                .map(|z| choose2(z as u64) + best[k - 1][s - z])
                .min()
                .unwrap_or(u64::MAX);
        }
    }
    best
}

/// Γ by dynamic programming over (parts used, remaining sum). Independent of
/// the closed form; quadratic in `a + t` per part.
pub fn gamma_oracle(a: u64, t: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::GammaDomain);
    }
    let (parts, sum) = (a as usize, (a + t) as usize);
    Ok(composition_table(parts, sum)[parts][sum])
}

/// One failing grid point. `point` is `[a, t]`, or `[a1, t1, a2, t2]` for
/// the superadditivity clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridViolation {
    pub point: Vec<u64>,
    pub lhs: i64,
    pub rhs: i64,
    pub reason: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub clause: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    pub equality_cases: usize,
    pub violations: Vec<GridViolation>,
}

impl ClauseReport {
    fn new(clause: &'static str, statement: &'static str) -> Self {
        ClauseReport {
            clause,
            statement,
            ..Default::default()
        }
    }

    fn violation(&mut self, point: Vec<u64>, lhs: i64, rhs: i64, reason: &'static str) {
        self.violations.push(GridViolation {
            point,
            lhs,
            rhs,
            reason,
        });
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaPropertyReport {
    pub a_max: u64,
    pub t_max: u64,
    /// Grid points where the closed form and the oracle differ.
    pub closed_form_mismatches: Vec<[u64; 2]>,
    pub clauses: Vec<ClauseReport>,
    pub notes: Vec<String>,
}

impl GammaPropertyReport {
    pub fn clause(&self, name: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.clause == name)
    }

    pub fn total_violations(&self) -> usize {
        self.closed_form_mismatches.len()
            + self
                .clauses
                .iter()
                .map(|c| c.violations.len())
                .sum::<usize>()
    }
}

const fn ceil_div(num: u64, den: u64) -> u64 {
    num.div_ceil(den)
}

/// Checks the Γ identities on `2 ≤ a ≤ a_max`, `1 ≤ t ≤ t_max`, with values
/// taken from the oracle:
///
/// * `ii`: Γ(a,t) ≤ Γ(a−1,t), equality iff t ≤ a − 1;
/// * `iii`: Γ(a,t) − Γ(a,t−1) = 1 + ⌊(t−1)/a⌋;
/// * `iv`: Γ(a1,t1) + Γ(a2,t2) ≥ Γ(a1+a2, t1+t2) for every split of a grid
///   point into `a_i ≥ 1`, `t_i ≥ 1`, equality iff ⌊t1/a1⌋ = ⌊t2/a2⌋;
/// * `v`: ⌈2(a−1+Γ(a,t))/(a+t)⌉ ≥ 1 + ⌊t/a⌋, equality iff t ≠ a − 1.
pub fn gamma_property_suite(a_max: u64, t_max: u64) -> GammaPropertyReport {
    let a_max = a_max.max(2);
    let t_max = t_max.max(1);
    let table = composition_table(a_max as usize, (a_max + t_max) as usize);
    let g = |a: u64, t: u64| table[a as usize][(a + t) as usize];

    let mut closed_form_mismatches = Vec::new();
    for a in 1..=a_max {
        for t in 0..=t_max {
            if gamma(a, t).ok() != Some(g(a, t)) {
                closed_form_mismatches.push([a, t]);
            }
        }
    }

    let mut ii = ClauseReport::new("ii", "Γ(a,t) ≤ Γ(a−1,t), equality iff t ≤ a−1");
    let mut iii = ClauseReport::new("iii", "Γ(a,t) − Γ(a,t−1) = 1 + ⌊(t−1)/a⌋");
    let mut iv = ClauseReport::new(
        "iv",
        "Γ(a1,t1) + Γ(a2,t2) ≥ Γ(a1+a2,t1+t2), equality iff ⌊t1/a1⌋ = ⌊t2/a2⌋",
    );
    let mut v = ClauseReport::new(
        "v",
        "⌈2(a−1+Γ(a,t))/(a+t)⌉ ≥ 1 + ⌊t/a⌋, equality iff t ≠ a−1",
    );
    let mut strictly_decreasing = Vec::new();

    for a in 2..=a_max {
        for t in 1..=t_max {
            let (here, fewer) = (g(a, t) as i64, g(a - 1, t) as i64);
            ii.checked += 1;
            if here > fewer {
                ii.violation(vec![a, t], here, fewer, "Γ(a,t) > Γ(a−1,t)");
            } else if (here == fewer) != (t < a) {
                ii.violation(vec![a, t], here, fewer, "equality condition");
            }
            if here == fewer {
                ii.equality_cases += 1;
            } else {
                strictly_decreasing.push((a, t, here, fewer));
            }

            let step = g(a, t) as i64 - g(a, t - 1) as i64;
            let expected = 1 + ((t - 1) / a) as i64;
            iii.checked += 1;
            iii.equality_cases += 1;
            if step != expected {
                iii.violation(vec![a, t], step, expected, "increment");
            }

            let lhs = ceil_div(2 * (a - 1 + g(a, t)), a + t) as i64;
            let rhs = 1 + (t / a) as i64;
            v.checked += 1;
            if lhs < rhs {
                v.violation(vec![a, t], lhs, rhs, "inequality");
            } else if (lhs == rhs) != (t != a - 1) {
                v.violation(vec![a, t], lhs, rhs, "equality condition");
            }
            if lhs == rhs {
                v.equality_cases += 1;
            }

            for a1 in 1..a {
                for t1 in 1..t {
                    let (a2, t2) = (a - a1, t - t1);
                    let split = (g(a1, t1) + g(a2, t2)) as i64;
                    let joined = g(a, t) as i64;
                    iv.checked += 1;
                    let point = vec![a1, t1, a2, t2];
                    if split < joined {
                        iv.violation(point, split, joined, "inequality");
                    } else if (split == joined) != (t1 / a1 == t2 / a2) {
                        iv.violation(point, split, joined, "equality condition");
                    }
                    if split == joined {
                        iv.equality_cases += 1;
                    }
                }
            }
        }
    }

    let mut notes = Vec::new();
    if let Some(&(a, t, here, fewer)) = strictly_decreasing.first() {
        notes.push(format!(
            "ii: Γ(a,t) − Γ(a−1,t) is never positive and is strictly negative at {} grid points \
             (first: a={a}, t={t}: {here} − {fewer}); the reverse inequality Γ(a,t) ≥ Γ(a−1,t) is false",
            strictly_decreasing.len()
        ));
    }
    for c in [&iv, &v] {
        let eq = c
            .violations
            .iter()
            .filter(|x| x.reason == "equality condition")
            .count();
        if eq > 0 {
            notes.push(format!(
                "{}: inequality holds everywhere; the stated equality condition fails at {eq} of {} points",
                c.clause, c.checked
            ));
        }
    }

    GammaPropertyReport {
        a_max,
        t_max,
        closed_form_mismatches,
        clauses: vec![ii, iii, iv, v],
        notes,
    }
}
