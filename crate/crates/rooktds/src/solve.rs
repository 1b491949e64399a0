//! Exact minimum k-tuple total domination by branch-and-bound over row bit
//! patterns, plus a brute-force enumerator for tiny boards.
//!
//! This module is the oracle that certifies the closed forms and the
//! constructions, so it deliberately shares no logic with them: feasibility
//! here is the raw per-cell neighbor count, and the only symmetry reductions
//! are two provably sound ones (rows nonincreasing as binary values, first
//! row canonical), not anything formula-shaped.

use std::time::{Duration, Instant};

use crate::matrix::BitMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveStatus {
    /// A true global minimum, with witness.
    Optimal,
    /// No k-tuple total dominating set exists: some vertex has degree
    /// n+m-2 < k, so it can never have k set neighbors.
    NoSolution,
    /// A budget expired; `value` holds the best incumbent, possibly none.
    Aborted,
}

#[derive(Clone, Debug, Default)]
pub struct SolverConfig {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Known upper bound on the optimum (e.g. a constructed witness size).
    /// The search still finds a witness AT this value; a bound below the
    /// true optimum only costs a second, unseeded pass.
    pub initial_upper_bound: Option<usize>,
    /// Use plain enumeration of all 2^(n*m) matrices instead of
    /// branch-and-bound (tiny boards only; for cross-validation).
    pub use_naive_enumeration: bool,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub witness: Option<BitMatrix>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Row pattern with t ones in the t highest of m bit positions (bit b holds
/// column b+1, so the ones sit in the last t columns).
fn prefix_pattern(m: usize, t: usize) -> u64 {
    debug_assert!(t <= m && m < 64);
    ((1u64 << m) - 1) ^ ((1u64 << (m - t)) - 1)
}

fn rows_to_matrix(n: usize, m: usize, rows: &[u64]) -> BitMatrix {
    let mut out = BitMatrix::zeros(n, m);
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..m {
            if (row >> j) & 1 == 1 {
                out.set(i + 1, j + 1, true);
            }
        }
    }
    out
}

struct Search {
    n: usize,
    m: usize,
    k: i64,
    /// All 2^m row patterns, cheapest (fewest ones) first; within a
    /// popcount, larger values first so ones stack into the same columns.
    /// Left empty for n = 1, where only the canonical first row is needed.
    pats: Vec<u64>,
    cols: Vec<i64>,
    /// Per column j: the largest value of k - r(i) + 2*s_ij over the rows
    /// placed so far — the number of ones column j must end up with. Only
    /// grows as rows are placed, so at any node it lower-bounds the final
    /// requirement.
    need: Vec<i64>,
    rows: Vec<u64>,
    /// Strict bound: only assignments with fewer ones are recorded.
    best_val: usize,
    best_rows: Option<Vec<u64>>,
    /// Proven global lower bound; reaching it ends the search early.
    glb: usize,
    nodes: u64,
    ticks: u64,
    node_budget: u64,
    deadline: Option<Instant>,
    aborted: bool,
}

impl Search {
    fn new(
        n: usize,
        m: usize,
        k: usize,
        bound: usize,
        node_budget: u64,
        deadline: Option<Instant>,
    ) -> Self {
        let pats = if n == 1 {
            Vec::new()
        } else {
            let mut v: Vec<u64> = (0..(1u64 << m)).collect();
            v.sort_by_key(|&p| (p.count_ones(), std::cmp::Reverse(p)));
            v
        };
        // Any nonempty solution has at least k+1 ones: a set cell sees
        // r(i)-1 + c(j)-1 >= k others, all distinct, plus itself. For k = 3
        // on boards with both sides >= 3, 2*min(n,m)+2 is also proven.
        let mut glb = k + 1;
        if k == 3 && n.min(m) >= 3 {
            glb = glb.max(2 * n.min(m) + 2);
        }
        Search {
            n,
            m,
            k: k as i64,
            pats,
            cols: vec![0; m],
            need: vec![i64::MIN; m],
            rows: Vec::with_capacity(n),
            best_val: bound,
            best_rows: None,
            glb,
            nodes: 0,
            ticks: 0,
            node_budget,
            deadline,
            aborted: false,
        }
    }

    /// Record the current full assignment if it is feasible and improving.
    /// Returns true when the search should stop (optimum proven).
    fn try_record(&mut self, ones: usize) -> bool {
        if ones < self.best_val && (0..self.m).all(|j| self.cols[j] >= self.need[j]) {
            self.best_val = ones;
            self.best_rows = Some(self.rows.clone());
            if self.best_val <= self.glb {
                return true;
            }
        }
        false
    }

    /// Try row pattern `q` at `depth`. Returns true to stop the search.
    fn enter(&mut self, depth: usize, ones: usize, q: u64) -> bool {
        self.ticks += 1;
        if self.ticks.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted = true;
                    return true;
                }
            }
        }
        // An all-zero row forces every column to hold k ones (the row's
        // cells have no set row-neighbors), so such assignments have at
        // least k*m ones and cannot beat the incumbent once k*m >= bound.
        if q == 0 && (self.k as u128) * (self.m as u128) >= self.best_val as u128 {
            return false;
        }
        let pq = q.count_ones() as i64;
        let old_need = self.need.clone();
        for j in 0..self.m {
            let bit = ((q >> j) & 1) as i64;
            self.cols[j] += bit;
            let constraint = self.k - pq + 2 * bit;
            if constraint > self.need[j] {
                self.need[j] = constraint;
            }
        }
        self.rows.push(q);
        let ones_now = ones + pq as usize;
        let rem = self.n - depth - 1;
        // Symmetric exclusion: an all-zero column forces k ones in every
        // row, so once k*n >= bound such assignments cannot improve and
        // every column may be required to be nonzero.
        let mincol: i64 =
            if (self.k as u128) * (self.n as u128) >= self.best_val as u128 { 1 } else { 0 };
        let mut deficit: usize = 0;
        let mut ok = true;
        for j in 0..self.m {
            let want = self.need[j].max(mincol);
            let lack = want - self.cols[j];
            if lack > 0 {
                // Each remaining row adds at most one 1 to this column.
                if lack as usize > rem {
                    ok = false;
                    break;
                }
                deficit += lack as usize;
            }
        }
        let mut stop = false;
        if ok && ones_now + deficit < self.best_val {
            if q == 0 {
                // Rows are nonincreasing, so every later row is zero too,
                // and the zero-row column constraint is already folded into
                // `need`. The assignment is complete here.
                if deficit == 0 {
                    for _ in 0..rem {
                        self.rows.push(0);
                    }
                    stop = self.try_record(ones_now);
                    for _ in 0..rem {
                        self.rows.pop();
                    }
                }
            } else {
                stop = self.dfs(depth + 1, ones_now);
            }
        }
        self.rows.pop();
        for j in 0..self.m {
            self.cols[j] -= ((q >> j) & 1) as i64;
        }
        self.need = old_need;
        stop
    }

    fn dfs(&mut self, depth: usize, ones: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            self.aborted = true;
            return true;
        }
        if depth == self.n {
            return self.try_record(ones);
        }
        if depth == 0 {
            // Column symmetry: some optimum has its largest row first, with
            // that row's ones in a canonical (suffix) position; every other
            // pattern with no more ones compares <= it as a binary value.
            for t in 0..=self.m {
                if self.enter(depth, ones, prefix_pattern(self.m, t)) {
                    return true;
                }
            }
        } else {
            let prev = self.rows[depth - 1];
            for idx in 0..self.pats.len() {
                let q = self.pats[idx];
                if q <= prev && self.enter(depth, ones, q) {
                    return true;
                }
            }
        }
        false
    }
}

/// Exact minimum size of a k-tuple total dominating set of K_n □ K_m, with
/// witness, by depth-first branch-and-bound over whole-row bit patterns.
///
/// Sound reductions only: rows in nonincreasing binary-value order (row
/// permutation symmetry), canonical first row (column permutation symmetry),
/// and pruning by the per-column ones deficit, which never overestimates the
/// ones still required.
pub fn solve_min_ktds(n: usize, m: usize, k: usize, cfg: &SolverConfig) -> SolveReport {
    assert!(n >= 1 && m >= 1 && k >= 1, "n, m, k must be positive");
    let start = Instant::now();
    if k > n + m - 2 {
        return SolveReport {
            status: SolveStatus::NoSolution,
            value: None,
            witness: None,
            nodes_explored: 0,
            elapsed: start.elapsed(),
        };
    }
    if cfg.use_naive_enumeration {
        let (found, examined) = enumerate_all(n, m, k);
        let (value, witness) =
            found.expect("feasible board: enumeration includes the all-ones matrix");
        return SolveReport {
            status: SolveStatus::Optimal,
            value: Some(value),
            witness: Some(witness),
            nodes_explored: examined,
            elapsed: start.elapsed(),
        };
    }
    if n == 1 {
        assert!(m <= 32, "single-row search caps columns at 32");
    } else {
        assert!(m <= 20, "row-pattern table is 2^m entries; columns capped at 20");
    }
    let deadline = cfg.time_budget.map(|b| start + b);
    let mut total_nodes = 0u64;
    let mut seed_bound = cfg.initial_upper_bound.map(|u| u + 1);
    loop {
        let bound = seed_bound.unwrap_or(n * m + 1);
        let budget_left = cfg.node_budget.map_or(u64::MAX, |b| b.saturating_sub(total_nodes));
        let mut s = Search::new(n, m, k, bound, budget_left, deadline);
        s.dfs(0, 0);
        total_nodes += s.nodes;
        let elapsed = start.elapsed();
        if s.aborted {
            return SolveReport {
                status: SolveStatus::Aborted,
                value: s.best_rows.as_ref().map(|_| s.best_val),
                witness: s.best_rows.map(|r| rows_to_matrix(n, m, &r)),
                nodes_explored: total_nodes,
                elapsed,
            };
        }
        if let Some(rows) = s.best_rows {
            return SolveReport {
                status: SolveStatus::Optimal,
                value: Some(s.best_val),
                witness: Some(rows_to_matrix(n, m, &rows)),
                nodes_explored: total_nodes,
                elapsed,
            };
        }
        // Nothing under the seed bound: the seed was below the optimum.
        // Rerun unseeded; the all-ones matrix is always feasible here.
        assert!(seed_bound.is_some(), "unseeded search on a feasible board must find a witness");
        seed_bound = None;
    }
}

/// Plain enumeration of every (0,1)-matrix on the board, smallest-mask
/// first, checking the neighbor bound cell by cell. Independent of both the
/// branch-and-bound machinery and the BitMatrix line-sum code.
fn enumerate_all(n: usize, m: usize, k: usize) -> (Option<(usize, BitMatrix)>, u64) {
    let cells = n * m;
    assert!(cells <= 24, "plain enumeration is 2^(n*m); capped at 24 cells");
    let k = k as i64;
    let mut best: Option<(usize, u32)> = None;
    let mut examined = 0u64;
    for mask in 0u32..(1u32 << cells) {
        examined += 1;
        let ones = mask.count_ones() as usize;
        if best.is_some_and(|(b, _)| ones >= b) {
            continue;
        }
        let mut rs = [0i64; 24];
        let mut cs = [0i64; 24];
        for c in 0..cells {
            if (mask >> c) & 1 == 1 {
                rs[c / m] += 1;
                cs[c % m] += 1;
            }
        }
        let mut ok = true;
        'cells: for i in 0..n {
            for j in 0..m {
                let s = ((mask >> (i * m + j)) & 1) as i64;
                if rs[i] + cs[j] - 2 * s < k {
                    ok = false;
                    break 'cells;
                }
            }
        }
        if ok {
            best = Some((ones, mask));
        }
    }
    let found = best.map(|(ones, mask)| {
        let mut w = BitMatrix::zeros(n, m);
        for c in 0..cells {
            if (mask >> c) & 1 == 1 {
                w.set(c / m + 1, c % m + 1, true);
            }
        }
        (ones, w)
    });
    (found, examined)
}

/// Minimum ones over all 2^(n*m) matrices satisfying the k-neighbor bound,
/// or None when the board is infeasible. Capped at 24 cells.
pub fn naive_min_ktds(n: usize, m: usize, k: usize) -> Option<(usize, BitMatrix)> {
    assert!(n >= 1 && m >= 1 && k >= 1);
    enumerate_all(n, m, k).0
}
