//! Cross-checks tying the closed forms, the constructor and the exact
//! solver together, plus the row type for value tables.

use serde::Serialize;

use crate::construct::{construct_min_3tds, decompose_counts};
use crate::gamma::{gamma_3t, gamma_3t_square, lower_bound_2n2};
use crate::solve::{solve_min_ktds, SolveStatus, SolverConfig};

#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub name: &'static str,
    pub pass: bool,
    /// First counterexample found, when failing.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub properties: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.pass)
    }
}

fn property(name: &'static str, check: impl FnOnce() -> Option<String>) -> PropertyResult {
    let counterexample = check();
    PropertyResult { name, pass: counterexample.is_none(), counterexample }
}

/// True when the branch-and-bound solver supports the board shape (the
/// row-pattern table is exponential in the column count).
fn solver_supported(n: usize, m: usize) -> bool {
    if n == 1 {
        m <= 32
    } else {
        m <= 20
    }
}

/// Run every cross-check over 1 <= n <= max_n, n <= m <= max_m, calling the
/// exact solver on boards with at most `oracle_limit` cells. Failures are
/// reported as data, one result per property, each with its first
/// counterexample.
pub fn run_consistency_check(max_n: usize, max_m: usize, oracle_limit: usize) -> CheckReport {
    assert!(max_n <= max_m, "needs max_n <= max_m");
    let mut properties = Vec::new();

    properties.push(property("constructor-soundness", || {
        for n in 1..=max_n {
            for m in n..=max_m {
                let g = gamma_3t(n, m);
                match (g.value(), construct_min_3tds(n, m)) {
                    (None, None) => {}
                    (None, Some(_)) => {
                        return Some(format!("({n},{m}): built a matrix for an infeasible board"))
                    }
                    (Some(v), None) => {
                        return Some(format!("({n},{m}): no matrix built, expected {v} ones"))
                    }
                    (Some(v), Some(w)) => {
                        if n >= 4 && v < 3 * n && decompose_counts(n, m, v).is_none() {
                            return Some(format!(
                                "({n},{m}): no catalog decomposition for {v} ones"
                            ));
                        }
                        if !w.is_ktds(3) {
                            return Some(format!(
                                "({n},{m}): constructed matrix violates the neighbor bound"
                            ));
                        }
                        if w.ones_count() != v {
                            return Some(format!(
                                "({n},{m}): constructed {} ones, formula says {v}",
                                w.ones_count()
                            ));
                        }
                    }
                }
            }
        }
        None
    }));

    properties.push(property("formula-vs-oracle", || {
        for n in 1..=max_n {
            for m in n..=max_m {
                if n * m > oracle_limit || !solver_supported(n, m) {
                    continue;
                }
                let g = gamma_3t(n, m);
                let cfg = SolverConfig {
                    initial_upper_bound: construct_min_3tds(n, m).map(|w| w.ones_count()),
                    ..Default::default()
                };
                let report = solve_min_ktds(n, m, 3, &cfg);
                match (g.value(), report.status) {
                    (None, SolveStatus::NoSolution) => {}
                    (Some(v), SolveStatus::Optimal) if report.value == Some(v) => {}
                    _ => {
                        return Some(format!(
                            "({n},{m}): formula {:?} vs solver {:?} {:?}",
                            g.value(),
                            report.status,
                            report.value
                        ))
                    }
                }
            }
        }
        None
    }));

    properties.push(property("square-diagonal-agreement", || {
        for n in 3..=200 {
            if gamma_3t(n, n).value() != Some(gamma_3t_square(n)) {
                return Some(format!("n={n}"));
            }
        }
        None
    }));

    properties.push(property("column-step", || {
        for n in 3..=max_n {
            for m in n..=max_m {
                let g = gamma_3t(n, m).value().unwrap();
                let g2 = gamma_3t(n, m + 1).value().unwrap();
                if !(g <= g2 && g2 <= g + 1) {
                    return Some(format!("({n},{m}): {g} then {g2}"));
                }
            }
        }
        None
    }));

    properties.push(property("row-step", || {
        for n in 3..=max_n {
            for m in (n + 1)..=max_m {
                let g = gamma_3t(n, m).value().unwrap();
                if g >= 3 * n {
                    continue; // hypothesis of the step bound
                }
                let g2 = gamma_3t(n + 1, m).value().unwrap();
                if !(g <= g2 && g2 <= g + 2) {
                    return Some(format!("({n},{m}): {g} then {g2}"));
                }
            }
        }
        None
    }));

    properties.push(property("diagonal-step", || {
        // The +2/+3 growth step when both sides grow by one. It fails for
        // exactly one pair in the verified range: gamma(3,5) = 9 while
        // gamma(4,6) = 10 (both values oracle-checked above), a step of 1.
        // That exception is pinned here, not skipped.
        for n in 3..=max_n {
            for m in n..=max_m {
                let g = gamma_3t(n, m).value().unwrap();
                let g2 = gamma_3t(n + 1, m + 1).value().unwrap();
                if (n, m) == (3, 5) {
                    if g2 != g + 1 {
                        return Some(format!(
                            "(3,5): expected the known step of 1, got {g} then {g2}"
                        ));
                    }
                    continue;
                }
                if !(g + 2 <= g2 && g2 <= g + 3) {
                    return Some(format!("({n},{m}): {g} then {g2}"));
                }
            }
        }
        None
    }));

    properties.push(property("lower-bound", || {
        for n in 3..=max_n {
            for m in n..=max_m {
                let g = gamma_3t(n, m).value().unwrap();
                if g < lower_bound_2n2(n) {
                    return Some(format!("({n},{m}): {g} < {}", lower_bound_2n2(n)));
                }
            }
        }
        None
    }));

    properties.push(property("upper-bound", || {
        for n in 2..=max_n {
            for m in n.max(3)..=max_m {
                let g = gamma_3t(n, m).value().unwrap();
                if g > 3 * n {
                    return Some(format!("({n},{m}): {g} > 3n"));
                }
                if m >= 3 * n - 1 && g != 3 * n {
                    return Some(format!("({n},{m}): {g} != 3n despite m >= 3n-1"));
                }
            }
        }
        None
    }));

    properties.push(property("three-row-values", || {
        if gamma_3t(3, 3).value() != Some(8) || gamma_3t(3, 4).value() != Some(8) {
            return Some("(3,3) or (3,4) is not 8".into());
        }
        for m in 5..=max_m.max(12) {
            if gamma_3t(3, m).value() != Some(9) {
                return Some(format!("(3,{m}) is not 9"));
            }
        }
        None
    }));

    properties.push(property("symmetry", || {
        for n in 1..=max_n {
            for m in 1..=max_m {
                if gamma_3t(n, m) != gamma_3t(m, n) {
                    return Some(format!("({n},{m})"));
                }
            }
        }
        None
    }));

    CheckReport { properties }
}

/// One row of a value table. Optional fields are absent when the board is
/// infeasible (gamma, construct_ones) or the solver was not run
/// (oracle_value).
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub m: usize,
    pub gamma: Option<usize>,
    pub regime: String,
    pub construct_ones: Option<usize>,
    pub oracle_value: Option<usize>,
}

/// Rows for every board with 1 <= n <= max_n, n <= m <= max_m, sorted by
/// (n, m). The exact solver contributes oracle_value on boards with at most
/// `oracle_cell_limit` cells.
pub fn build_table(max_n: usize, max_m: usize, oracle_cell_limit: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for m in n..=max_m {
            let g = gamma_3t(n, m);
            let construct_ones = construct_min_3tds(n, m).map(|w| {
                debug_assert!(w.is_ktds(3));
                w.ones_count()
            });
            let oracle_value = if n * m <= oracle_cell_limit && solver_supported(n, m) {
                let cfg =
                    SolverConfig { initial_upper_bound: construct_ones, ..Default::default() };
                solve_min_ktds(n, m, 3, &cfg).value
            } else {
                None
            };
            rows.push(TableRow {
                n,
                m,
                gamma: g.value(),
                regime: g.regime_name().to_string(),
                construct_ones,
                oracle_value,
            });
        }
    }
    rows
}
