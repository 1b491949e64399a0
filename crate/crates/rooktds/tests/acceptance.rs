//! Acceptance gate: every release-blocking requirement as one test each,
//! at its stated time budget. Each test prints a single pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Budgets are wall-clock on the test profile; they are generous enough
//! for an unoptimized build on desk hardware.

use std::time::{Duration, Instant};

use rooktds::{
    construct_min_3tds, gamma_3t, gamma_3t_square, lower_bound_2n2, naive_min_ktds,
    parse_matrix_text, render_matrix, solve_min_ktds, upper_bound_kn, GammaResult, RenderFormat,
    SolveStatus, SolverConfig,
};

/// Runs one criterion, prints its pass/fail line, and enforces the budget.
fn criterion(name: &str, budget: Duration, body: impl FnOnce(&mut Vec<String>)) {
    let start = Instant::now();
    let mut failures = Vec::new();
    body(&mut failures);
    let elapsed = start.elapsed();
    let verdict = if failures.is_empty() && elapsed <= budget { "PASS" } else { "FAIL" };
    println!("[acceptance] {name}: {verdict} ({elapsed:?}, budget {budget:?})");
    if !failures.is_empty() {
        panic!("{name}: {} violation(s):\n{}", failures.len(), failures.join("\n"));
    }
    assert!(elapsed <= budget, "{name}: over budget ({elapsed:?} > {budget:?})");
}

fn gamma_value(n: usize, m: usize) -> Option<usize> {
    gamma_3t(n, m).value()
}

#[test]
fn anchor_values_for_small_boards() {
    criterion("anchor values", Duration::from_millis(1), |fails| {
        let mut expect = |n: usize, m: usize, want: Option<usize>| {
            let got = gamma_value(n, m);
            if got != want {
                fails.push(format!("gamma({n},{m}) = {got:?}, want {want:?}"));
            }
        };
        expect(3, 4, Some(8));
        for m in 3..=12 {
            expect(2, m, Some(6));
        }
        expect(3, 3, Some(8));
        for m in 5..=12 {
            expect(3, m, Some(9));
        }
        for m in 4..=40 {
            expect(1, m, Some(4));
        }
        // Infeasible exactly on these four boards (both orientations).
        for (n, m) in [(1, 1), (1, 2), (1, 3), (2, 2)] {
            expect(n, m, None);
            expect(m, n, None);
        }
    });
}

#[test]
fn small_board_fixture_values() {
    // Hardcoded optima for every board in the reference table of small cases.
    const FIXTURES: [(usize, usize, usize); 17] = [
        (4, 4, 10),
        (4, 5, 10),
        (4, 6, 10),
        (4, 7, 11),
        (5, 5, 12),
        (5, 6, 12),
        (5, 7, 13),
        (5, 8, 14),
        (5, 9, 14),
        (6, 6, 14),
        (6, 7, 14),
        (6, 8, 15),
        (7, 7, 16),
        (8, 8, 18),
        (9, 9, 20),
        (10, 10, 22),
        (11, 11, 25),
    ];
    criterion("small-board fixtures", Duration::from_millis(1), |fails| {
        for (n, m, want) in FIXTURES {
            let got = gamma_value(n, m);
            if got != Some(want) {
                fails.push(format!("gamma({n},{m}) = {got:?}, want Some({want})"));
            }
        }
    });
}

/// All (n, m) with n <= m and n*m <= cells, ascending.
fn boards_up_to(cells: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for n in 1..=cells {
        for m in n..=cells {
            if n * m <= cells {
                v.push((n, m));
            }
        }
    }
    v
}

fn oracle_check(n: usize, m: usize, fails: &mut Vec<String>) {
    let seed = construct_min_3tds(n, m).map(|w| w.ones_count());
    let cfg = SolverConfig { initial_upper_bound: seed, ..SolverConfig::default() };
    let report = solve_min_ktds(n, m, 3, &cfg);
    match (gamma_3t(n, m), report.status) {
        (GammaResult::NoSolution, SolveStatus::NoSolution) => {}
        (GammaResult::Feasible { value, .. }, SolveStatus::Optimal) => {
            if report.value != Some(value) {
                fails.push(format!(
                    "({n},{m}): solver found {:?}, formula says {value}",
                    report.value
                ));
            }
            let w = report.witness.expect("optimal report carries a witness");
            if !w.is_ktds(3) || w.ones_count() != value {
                fails.push(format!("({n},{m}): solver witness fails independent validation"));
            }
        }
        (g, s) => fails.push(format!("({n},{m}): formula {g:?} vs solver status {s:?}")),
    }
}

#[test]
fn exact_solver_agrees_with_formula_up_to_30_cells() {
    criterion("oracle equivalence (n*m <= 30)", Duration::from_secs(60), |fails| {
        for (n, m) in boards_up_to(30) {
            oracle_check(n, m, fails);
        }
    });
}

/// Slow extras beyond the gating sweep; run with `cargo test -- --ignored`.
#[test]
#[ignore]
fn exact_solver_agrees_on_stretch_boards() {
    criterion("oracle equivalence (stretch)", Duration::from_secs(3600), |fails| {
        for (n, m) in [(5, 7), (6, 6)] {
            oracle_check(n, m, fails);
        }
    });
}

#[test]
fn naive_enumeration_agrees_up_to_12_cells() {
    criterion("naive-enumeration cross-check (n*m <= 12)", Duration::from_secs(5), |fails| {
        for (n, m) in boards_up_to(12) {
            let naive = naive_min_ktds(n, m, 3).map(|(ones, _)| ones);
            let bb = solve_min_ktds(n, m, 3, &SolverConfig::default());
            if naive != bb.value {
                fails
                    .push(format!("({n},{m}): naive {naive:?} vs branch-and-bound {:?}", bb.value));
            }
            if naive != gamma_value(n, m) {
                fails
                    .push(format!("({n},{m}): naive {naive:?} vs formula {:?}", gamma_value(n, m)));
            }
            if let Some((ones, witness)) = naive_min_ktds(n, m, 3) {
                if !witness.is_ktds(3) || witness.ones_count() != ones {
                    fails.push(format!("({n},{m}): naive witness fails validation"));
                }
            }
        }
    });
}

#[test]
fn constructor_is_certified_over_the_sweep() {
    criterion("constructor soundness sweep", Duration::from_secs(10), |fails| {
        let mut boards: Vec<(usize, usize)> = Vec::new();
        for n in 1..=40 {
            for m in n..=(3 * n + 3) {
                boards.push((n, m));
            }
        }
        boards.push((4, 100));
        boards.push((10, 200));
        for (n, m) in boards {
            match (gamma_3t(n, m), construct_min_3tds(n, m)) {
                (GammaResult::NoSolution, None) => {}
                (GammaResult::Feasible { value, .. }, Some(w)) => {
                    if !w.is_ktds(3) {
                        fails.push(format!("({n},{m}): constructed matrix is not a 3TDS"));
                    }
                    if w.ones_count() != value {
                        fails.push(format!(
                            "({n},{m}): constructed {} ones, formula says {value}",
                            w.ones_count()
                        ));
                    }
                    if w.n_rows() != n || w.n_cols() != m {
                        fails.push(format!("({n},{m}): wrong output shape"));
                    }
                }
                (g, w) => fails.push(format!(
                    "({n},{m}): formula {g:?} but constructor returned a matrix: {}",
                    w.is_some()
                )),
            }
        }
    });
}

#[test]
fn growth_and_bound_inequalities_hold() {
    criterion("inequality suite (3<=n<=60, n<=m<=200)", Duration::from_secs(5), |fails| {
        let g = |n: usize, m: usize| gamma_value(n, m).unwrap() as i64;
        for n in 3..=60usize {
            for m in n..=200usize {
                let v = g(n, m);
                // Floor from the two forced low-count columns.
                if v < lower_bound_2n2(n) as i64 {
                    fails.push(format!("({n},{m}): gamma {v} below 2n+2"));
                }
                // Ceiling 3n, tight once m >= 3n-1.
                let (kn, tight) = upper_bound_kn(n, m, 3);
                if v > kn as i64 {
                    fails.push(format!("({n},{m}): gamma {v} above 3n"));
                }
                if tight && v != kn as i64 {
                    fails.push(format!("({n},{m}): expected 3n at m >= 3n-1, got {v}"));
                }
                // Adding a column moves gamma by 0 or 1.
                let step = g(n, m + 1) - v;
                if !(0..=1).contains(&step) {
                    fails.push(format!("({n},{m}): column step {step}"));
                }
                // Adding a row moves gamma by at most 2 while below the 3n ceiling.
                if m > n && v < 3 * n as i64 {
                    let step = g(n + 1, m) - v;
                    if !(0..=2).contains(&step) {
                        fails.push(format!("({n},{m}): row step {step}"));
                    }
                }
                // Adding a row AND a column moves gamma by 2 or 3 — except at
                // (3,5), the one board where the step is 1: gamma(3,5) = 9 but
                // gamma(4,6) = 10. Both values are independently certified
                // (exhaustive enumeration for (3,5); branch-and-bound plus a
                // verified 10-ones witness for (4,6)), so the exception is
                // pinned exactly rather than skipped.
                let step = g(n + 1, m + 1) - v;
                if (n, m) == (3, 5) {
                    if step != 1 {
                        fails.push(format!("(3,5): diagonal step {step}, expected the known 1"));
                    }
                } else if !(2..=3).contains(&step) {
                    fails.push(format!("({n},{m}): diagonal step {step}"));
                }
            }
            // The square-board closed form must agree with the general formula.
            if gamma_3t_square(n) as i64 != g(n, n) {
                fails.push(format!("({n},{n}): square formula disagrees with general formula"));
            }
        }
    });
}

#[test]
fn grid_format_round_trips() {
    criterion("grid format round-trip", Duration::from_secs(1), |fails| {
        // Fixed-seed LCG so the 1000 matrices are reproducible without
        // pulling RNG crates into the integration test.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for case in 0..1000u32 {
            let n = (next() % 20 + 1) as usize;
            let m = (next() % 20 + 1) as usize;
            let mut mat = rooktds::BitMatrix::zeros(n, m);
            for i in 1..=n {
                for j in 1..=m {
                    mat.set(i, j, next() % 2 == 1);
                }
            }
            let text = render_matrix(&mat, RenderFormat::Grid);
            match parse_matrix_text(&text) {
                Ok(back) if back == mat => {}
                Ok(_) => fails.push(format!("case {case}: round-trip changed the matrix")),
                Err(e) => fails.push(format!("case {case}: render output failed to parse: {e}")),
            }
        }
        // Exact byte encoding of the canonical 3x4 example.
        let sample = rooktds::BitMatrix::from_rows(&[b"0011", b"0011", b"1111"]);
        let text = render_matrix(&sample, RenderFormat::Grid);
        if text != "3 4\n0011\n0011\n1111\n" {
            fails.push(format!("canonical 3x4 encoding is {text:?}"));
        }
    });
}
