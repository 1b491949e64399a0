//! Closed-form values of the 3-tuple total domination number of K_n □ K_m,
//! plus the auxiliary bounds used to certify them.
//!
//! All arithmetic is exact integer arithmetic; ceilings are computed as
//! (a+b-1)/b on nonnegative integers.

/// Which branch of the closed form produced a value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Regime {
    /// One of the hardcoded small rows: n = 1 (value 4), n = 2 (value 6),
    /// n = 3 (value 8 or 9).
    SmallN,
    /// Saturated regime: value = 3n (ones in three full columns). Ties with
    /// the residue value report this regime.
    ThreeN,
    /// value = ceil((8n+3m)/5).
    Residue,
    /// value = ceil((8n+3m)/5) + 1 (residue classes 5 and 6).
    ResiduePlusOne,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::SmallN => "small_n",
            Regime::ThreeN => "three_n",
            Regime::Residue => "residue",
            Regime::ResiduePlusOne => "residue_plus_one",
        }
    }
}

/// Result of evaluating the closed form. `NoSolution` is a regime of the
/// problem, not a fault: boards whose vertices have degree below 3 admit no
/// 3-tuple total dominating set at all.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GammaResult {
    NoSolution,
    Feasible { value: usize, regime: Regime },
}

impl GammaResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            GammaResult::NoSolution => None,
            GammaResult::Feasible { value, .. } => Some(*value),
        }
    }

    pub fn regime_name(&self) -> &'static str {
        match self {
            GammaResult::NoSolution => "no_solution",
            GammaResult::Feasible { regime, .. } => regime.name(),
        }
    }
}

/// The residue class (2n - 3m) mod 10, always in 0..=9. It selects both the
/// exceptional component of the minimum construction and whether the +1
/// correction applies in the general formula.
pub fn residue_class(n: usize, m: usize) -> usize {
    let a = (2 * (n % 10)) % 10;
    let b = (3 * (m % 10)) % 10;
    (a + 10 - b) % 10
}

/// Minimum size of a 3-tuple total dominating set of K_n □ K_m.
///
/// Symmetric in (n,m); inputs are normalized so n <= m. With that
/// normalization: no solution exists exactly for (1,1), (1,2), (1,3), (2,2);
/// the n = 1,2,3 rows are fixed small values; and for n >= 4 the value is
/// min(3n, f) where f = ceil((8n+3m)/5), plus 1 when the residue class is
/// 5 or 6.
pub fn gamma_3t(n: usize, m: usize) -> GammaResult {
    assert!(n >= 1 && m >= 1, "board dimensions must be positive");
    let (n, m) = if n <= m { (n, m) } else { (m, n) };
    match (n, m) {
        (1, 1) | (1, 2) | (1, 3) | (2, 2) => return GammaResult::NoSolution,
        (1, _) => return GammaResult::Feasible { value: 4, regime: Regime::SmallN },
        (2, _) => return GammaResult::Feasible { value: 6, regime: Regime::SmallN },
        (3, 3) | (3, 4) => return GammaResult::Feasible { value: 8, regime: Regime::SmallN },
        (3, _) => return GammaResult::Feasible { value: 9, regime: Regime::SmallN },
        _ => {}
    }
    let extra = matches!(residue_class(n, m), 5 | 6) as usize;
    let f = (8 * n + 3 * m).div_ceil(5) + extra;
    let cap = 3 * n;
    if cap <= f {
        GammaResult::Feasible { value: cap, regime: Regime::ThreeN }
    } else if extra == 1 {
        GammaResult::Feasible { value: f, regime: Regime::ResiduePlusOne }
    } else {
        GammaResult::Feasible { value: f, regime: Regime::Residue }
    }
}

/// The square-board value gamma_3t(n,n) in closed form, for n >= 3.
///
/// 8 for n = 3; otherwise with r = n mod 10: 2n + 2*floor(n/10) + 2 when
/// r in 4..=9, and 2n + 2*floor(n/10) + ceil(r/3) when r in 0..=3.
pub fn gamma_3t_square(n: usize) -> usize {
    assert!(n >= 3, "square closed form needs n >= 3");
    if n == 3 {
        return 8;
    }
    let (q, r) = (n / 10, n % 10);
    if r >= 4 {
        2 * n + 2 * q + 2
    } else {
        2 * n + 2 * q + r.div_ceil(3)
    }
}

/// Column count beyond which the value saturates at 3n: floor((7n-1)/3) - 1.
pub fn three_n_threshold(n: usize) -> usize {
    assert!(n >= 1);
    (7 * n - 1) / 3 - 1
}

/// The 2n+2 lower bound, valid whenever both board sides are at least 3
/// (the caller's obligation for the larger side).
pub fn lower_bound_2n2(n: usize) -> usize {
    assert!(n >= 3, "the 2n+2 bound needs n >= 3");
    2 * n + 2
}

/// Column-counting lower bound 3m - 2t - 4*floor(t/2) on the ones of an
/// n×m 3TDS matrix that has 2n+t ones and no all-zero lines. Computes the
/// raw expression (possibly negative); hypothesis checking is the caller's.
pub fn column_counting_bound(m: usize, t: usize) -> i64 {
    3 * m as i64 - 2 * t as i64 - 4 * (t as i64 / 2)
}

/// The kn upper bound for k-tuple total domination (ones in the last k
/// columns), with a flag telling whether equality is guaranteed by the
/// m >= kn-1 criterion. Requires m >= n >= 2 and m >= k.
pub fn upper_bound_kn(n: usize, m: usize, k: usize) -> (usize, bool) {
    assert!(m >= n && n >= 2, "needs m >= n >= 2");
    assert!(m >= k, "needs m >= k");
    (k * n, m >= k * n - 1)
}
