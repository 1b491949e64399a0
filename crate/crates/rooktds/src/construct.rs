//! Certified minimum 3TDS matrices, assembled block-diagonally from a small
//! catalog of component shapes.
//!
//! Every catalog block is itself a valid 3TDS matrix, and any block-diagonal
//! stack of catalog blocks stays valid: a zero cell that sees one block in
//! its row and another in its column has at least 2+1 set neighbors... in
//! fact at least 3, because every catalog block has at least 2 ones per row
//! and at least 1 per column, and single-row blocks have at least 4 ones.
//! Soundness is still certified per output via `is_ktds`, never assumed.

use std::collections::BTreeMap;

use crate::gamma::gamma_3t;
use crate::matrix::{compose_block_diagonal, BitMatrix};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BlockError {
    /// An x×y all-ones block is a valid 3TDS component only when x+y >= 5
    /// (each one then has (x-1)+(y-1) >= 3 set neighbors).
    #[error("all-ones block needs x+y >= 5, got {x}x{y}")]
    FullTooSmall { x: usize, y: usize },
    /// The staircase needs at least 5 rows for its column sums to reach 3.
    #[error("staircase block needs x >= 5 rows, got {x}")]
    StairTooSmall { x: usize },
}

/// The x×y all-ones block. Valid (as a 3TDS component) iff x+y >= 5.
pub fn full_block(x: usize, y: usize) -> Result<BitMatrix, BlockError> {
    if x + y < 5 {
        return Err(BlockError::FullTooSmall { x, y });
    }
    let mut m = BitMatrix::zeros(x, y);
    for i in 1..=x {
        for j in 1..=y {
            m.set(i, j, true);
        }
    }
    Ok(m)
}

/// The x×3 staircase block with two ones per row: x-3 rows of (0,1,1), two
/// rows of (1,0,1), one row of (1,1,0). Valid for x >= 5; ones = 2x.
pub fn stair_block(x: usize) -> Result<BitMatrix, BlockError> {
    if x < 5 {
        return Err(BlockError::StairTooSmall { x });
    }
    let mut m = BitMatrix::zeros(x, 3);
    for i in 1..=x {
        let zero_col = if i <= x - 3 {
            1
        } else if i < x {
            2
        } else {
            3
        };
        for j in 1..=3 {
            m.set(i, j, j != zero_col);
        }
    }
    Ok(m)
}

/// 4×4 one-component block with 10 ones: three rows (0,0,1,1) over an
/// all-ones bottom row.
pub fn hook_4x4() -> BitMatrix {
    BitMatrix::from_rows(&[b"0011", b"0011", b"0011", b"1111"])
}

/// 4×5 one-component block with 10 ones: three rows (0,0,0,1,1) over a
/// bottom row (1,1,1,1,0).
pub fn hook_4x5() -> BitMatrix {
    BitMatrix::from_rows(&[b"00011", b"00011", b"00011", b"11110"])
}

/// The component shapes minimum constructions are assembled from.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BlockKind {
    Full1x4,
    Full1x5,
    Full1x6,
    Full2x3,
    Full3x2,
    Full4x2,
    Full5x2,
    Stair5x3,
    Stair6x3,
    Hook4x4,
    Hook4x5,
}

impl BlockKind {
    pub const ALL: [BlockKind; 11] = [
        BlockKind::Full1x4,
        BlockKind::Full1x5,
        BlockKind::Full1x6,
        BlockKind::Full2x3,
        BlockKind::Full3x2,
        BlockKind::Full4x2,
        BlockKind::Full5x2,
        BlockKind::Stair5x3,
        BlockKind::Stair6x3,
        BlockKind::Hook4x4,
        BlockKind::Hook4x5,
    ];

    /// The kinds a decomposition may use at most twice each. The two
    /// workhorse kinds (Full1x4 and Full3x2) are excluded: their counts are
    /// solved for exactly, not enumerated.
    pub const SPECIALS: [BlockKind; 9] = [
        BlockKind::Full1x5,
        BlockKind::Full1x6,
        BlockKind::Full2x3,
        BlockKind::Full4x2,
        BlockKind::Full5x2,
        BlockKind::Stair5x3,
        BlockKind::Stair6x3,
        BlockKind::Hook4x4,
        BlockKind::Hook4x5,
    ];

    pub fn rows(&self) -> usize {
        match self {
            BlockKind::Full1x4 | BlockKind::Full1x5 | BlockKind::Full1x6 => 1,
            BlockKind::Full2x3 => 2,
            BlockKind::Full3x2 => 3,
            BlockKind::Full4x2 | BlockKind::Hook4x4 | BlockKind::Hook4x5 => 4,
            BlockKind::Full5x2 | BlockKind::Stair5x3 => 5,
            BlockKind::Stair6x3 => 6,
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            BlockKind::Full3x2 | BlockKind::Full4x2 | BlockKind::Full5x2 => 2,
            BlockKind::Full2x3 | BlockKind::Stair5x3 | BlockKind::Stair6x3 => 3,
            BlockKind::Full1x4 | BlockKind::Hook4x4 => 4,
            BlockKind::Full1x5 | BlockKind::Hook4x5 => 5,
            BlockKind::Full1x6 => 6,
        }
    }

    pub fn ones(&self) -> usize {
        match self {
            BlockKind::Full1x4 => 4,
            BlockKind::Full1x5 => 5,
            BlockKind::Full1x6 | BlockKind::Full2x3 | BlockKind::Full3x2 => 6,
            BlockKind::Full4x2 => 8,
            BlockKind::Full5x2 | BlockKind::Stair5x3 | BlockKind::Hook4x4 | BlockKind::Hook4x5 => {
                10
            }
            BlockKind::Stair6x3 => 12,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BlockKind::Full1x4 => "full1x4",
            BlockKind::Full1x5 => "full1x5",
            BlockKind::Full1x6 => "full1x6",
            BlockKind::Full2x3 => "full2x3",
            BlockKind::Full3x2 => "full3x2",
            BlockKind::Full4x2 => "full4x2",
            BlockKind::Full5x2 => "full5x2",
            BlockKind::Stair5x3 => "stair5x3",
            BlockKind::Stair6x3 => "stair6x3",
            BlockKind::Hook4x4 => "hook4x4",
            BlockKind::Hook4x5 => "hook4x5",
        }
    }

    pub fn build(&self) -> BitMatrix {
        match self {
            BlockKind::Hook4x4 => hook_4x4(),
            BlockKind::Hook4x5 => hook_4x5(),
            BlockKind::Stair5x3 => stair_block(5).unwrap(),
            BlockKind::Stair6x3 => stair_block(6).unwrap(),
            _ => full_block(self.rows(), self.cols()).unwrap(),
        }
    }
}

/// A multiset of catalog blocks whose row, column and ones totals hit a
/// target board exactly. Only nonzero counts are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub counts: BTreeMap<BlockKind, usize>,
}

impl Decomposition {
    pub fn count(&self, kind: BlockKind) -> usize {
        self.counts.get(&kind).copied().unwrap_or(0)
    }

    pub fn rows_total(&self) -> usize {
        self.counts.iter().map(|(k, c)| k.rows() * c).sum()
    }

    pub fn cols_total(&self) -> usize {
        self.counts.iter().map(|(k, c)| k.cols() * c).sum()
    }

    pub fn ones_total(&self) -> usize {
        self.counts.iter().map(|(k, c)| k.ones() * c).sum()
    }

    /// The blocks, expanded and ordered for composition: most rows first,
    /// then most columns. Kinds have pairwise distinct shapes, so this order
    /// is total and the composed output is deterministic.
    pub fn blocks(&self) -> Vec<BitMatrix> {
        let mut kinds: Vec<BlockKind> = Vec::new();
        for (&kind, &count) in &self.counts {
            kinds.extend(std::iter::repeat_n(kind, count));
        }
        kinds.sort_by_key(|k| (std::cmp::Reverse(k.rows()), std::cmp::Reverse(k.cols())));
        kinds.iter().map(|k| k.build()).collect()
    }
}

/// Find a catalog multiset with the exact row/column/ones totals, or None.
///
/// Each special kind is tried with count 0, 1 or 2 (enumerated with the
/// first-listed kind varying fastest, so all-zero special counts come first
/// and pure Full1x4/Full3x2 solutions are preferred). The two workhorse
/// counts a (Full1x4) and b (Full3x2) are then forced by the residual totals
/// n' and m': a + 3b = n' and 4a + 2b = m' give b = (4n'-m')/10 and
/// a = (3m'-2n')/10; a candidate is accepted when both are nonnegative
/// integers and the ones residual equals 4a + 6b. First hit wins.
pub fn decompose_counts(n: usize, m: usize, target_ones: usize) -> Option<Decomposition> {
    assert!(n >= 4 && m >= n, "decomposition targets need m >= n >= 4");
    let specials = BlockKind::SPECIALS;
    let combos = 3usize.pow(specials.len() as u32);
    for code in 0..combos {
        let mut counts = [0usize; 9];
        let mut rest = code;
        let (mut rows_used, mut cols_used, mut ones_used) = (0usize, 0usize, 0usize);
        for (i, kind) in specials.iter().enumerate() {
            let c = rest % 3;
            rest /= 3;
            counts[i] = c;
            rows_used += kind.rows() * c;
            cols_used += kind.cols() * c;
            ones_used += kind.ones() * c;
        }
        if rows_used > n || cols_used > m || ones_used > target_ones {
            continue;
        }
        let (np, mp, op) = (n - rows_used, m - cols_used, target_ones - ones_used);
        let b_num = 4 * np as i64 - mp as i64;
        let a_num = 3 * mp as i64 - 2 * np as i64;
        if b_num < 0 || a_num < 0 || b_num % 10 != 0 || a_num % 10 != 0 {
            continue;
        }
        let (a, b) = ((a_num / 10) as usize, (b_num / 10) as usize);
        if 4 * a + 6 * b != op {
            continue;
        }
        let mut map = BTreeMap::new();
        if a > 0 {
            map.insert(BlockKind::Full1x4, a);
        }
        if b > 0 {
            map.insert(BlockKind::Full3x2, b);
        }
        for (i, kind) in specials.iter().enumerate() {
            if counts[i] > 0 {
                map.insert(*kind, counts[i]);
            }
        }
        return Some(Decomposition { counts: map });
    }
    None
}

/// The n×m matrix with ones exactly in the last three columns: 3n ones,
/// valid for n >= 2, m >= 3. (A single row of three ones is not valid: its
/// ones would have only 2 set neighbors.)
pub fn last_three_columns(n: usize, m: usize) -> BitMatrix {
    assert!(n >= 2 && m >= 3, "the three-column shape needs n >= 2, m >= 3");
    let mut out = BitMatrix::zeros(n, m);
    for i in 1..=n {
        for j in m - 2..=m {
            out.set(i, j, true);
        }
    }
    out
}

/// A minimum 3TDS matrix for the n×m board, or None when no 3TDS exists.
///
/// The output always satisfies `is_ktds(·, 3)` and has exactly
/// `gamma_3t(n, m)` ones. Identical inputs produce bit-identical outputs.
pub fn construct_min_3tds(n: usize, m: usize) -> Option<BitMatrix> {
    assert!(n >= 1 && m >= 1, "board dimensions must be positive");
    if n > m {
        return construct_min_3tds(m, n).map(|w| w.transpose());
    }
    let value = gamma_3t(n, m).value()?;
    if n == 1 {
        // m >= 4 here; four ones anywhere in the row work, placed last.
        let mut out = BitMatrix::zeros(1, m);
        for j in m - 3..=m {
            out.set(1, j, true);
        }
        return Some(out);
    }
    if n == 3 && m == 3 {
        return Some(BitMatrix::from_rows(&[b"011", b"111", b"111"]));
    }
    if n == 3 && m == 4 {
        return Some(BitMatrix::from_rows(&[b"0011", b"0011", b"1111"]));
    }
    if value == 3 * n {
        return Some(last_three_columns(n, m));
    }
    // Remaining cases have n >= 4 and value < 3n; the catalog covers them.
    let decomp = decompose_counts(n, m, value)
        .expect("catalog decomposition exists for every feasible board below the 3n regime");
    Some(compose_block_diagonal(&decomp.blocks()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::components;

    #[test]
    fn full_block_examples() {
        assert_eq!(full_block(1, 4).unwrap(), BitMatrix::from_rows(&[b"1111"]));
        assert_eq!(full_block(1, 3), Err(BlockError::FullTooSmall { x: 1, y: 3 }));
        let b = full_block(3, 2).unwrap();
        assert_eq!(b.ones_count(), 6);
        assert!(b.is_ktds(3));
    }

    #[test]
    fn stair_block_shape() {
        let d = stair_block(5).unwrap();
        let expect = BitMatrix::from_rows(&[b"011", b"011", b"101", b"101", b"110"]);
        assert_eq!(d, expect);
        assert_eq!(d.ones_count(), 10);
        assert!(d.is_ktds(3));
        assert_eq!(stair_block(4), Err(BlockError::StairTooSmall { x: 4 }));
        // Larger staircases are buildable even though no minimum
        // construction uses them.
        let d7 = stair_block(7).unwrap();
        assert_eq!(d7.ones_count(), 14);
        assert!(d7.is_ktds(3));
    }

    #[test]
    fn hook_blocks() {
        let h44 = hook_4x4();
        assert_eq!((h44.n_rows(), h44.n_cols(), h44.ones_count()), (4, 4, 10));
        assert!(h44.is_ktds(3));
        let h45 = hook_4x5();
        assert_eq!((h45.n_rows(), h45.n_cols(), h45.ones_count()), (4, 5, 10));
        assert!(h45.is_ktds(3));
    }

    #[test]
    fn catalog_metadata_matches_built_blocks() {
        for kind in BlockKind::ALL {
            let b = kind.build();
            assert_eq!(b.n_rows(), kind.rows(), "{}", kind.name());
            assert_eq!(b.n_cols(), kind.cols(), "{}", kind.name());
            assert_eq!(b.ones_count(), kind.ones(), "{}", kind.name());
            assert!(b.is_ktds(3), "{}", kind.name());
        }
    }

    #[test]
    fn last_three_columns_examples() {
        assert_eq!(last_three_columns(2, 3), BitMatrix::from_rows(&[b"111", b"111"]));
        let w = last_three_columns(3, 5);
        assert_eq!(w.ones_count(), 9);
        assert!(w.is_ktds(3));
        let w = last_three_columns(4, 8);
        assert_eq!(w.ones_count(), 12);
        assert!(w.is_ktds(3));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_counts(4, 6, 10).unwrap();
        assert_eq!(d.count(BlockKind::Full1x4), 1);
        assert_eq!(d.count(BlockKind::Full3x2), 1);
        assert_eq!(d.counts.len(), 2);

        let d = decompose_counts(6, 6, 14).unwrap();
        assert_eq!(d.count(BlockKind::Full5x2), 1);
        assert_eq!(d.count(BlockKind::Full1x4), 1);
        assert_eq!(d.counts.len(), 2);

        let d = decompose_counts(16, 16, 36).unwrap();
        assert_eq!(d.count(BlockKind::Full1x6), 1);
        assert_eq!(d.count(BlockKind::Full3x2), 5);
        assert_eq!(d.counts.len(), 2);

        let d = decompose_counts(5, 9, 14).unwrap();
        assert_eq!(d.count(BlockKind::Hook4x5), 1);
        assert_eq!(d.count(BlockKind::Full1x4), 1);
        assert_eq!(d.counts.len(), 2);

        let d = decompose_counts(5, 5, 12).unwrap();
        assert_eq!(d.count(BlockKind::Full2x3), 1);
        assert_eq!(d.count(BlockKind::Full3x2), 1);
        assert_eq!(d.counts.len(), 2);
    }

    #[test]
    fn decompose_totals_always_consistent() {
        for (n, m) in [(4, 6), (6, 6), (16, 16), (5, 9), (8, 13)] {
            let target = gamma_3t(n, m).value().unwrap();
            let d = decompose_counts(n, m, target).unwrap();
            assert_eq!(d.rows_total(), n);
            assert_eq!(d.cols_total(), m);
            assert_eq!(d.ones_total(), target);
        }
    }

    #[test]
    fn construct_small_boards() {
        let w = construct_min_3tds(3, 4).unwrap();
        assert_eq!(w.ones_count(), 8);
        assert!(w.is_ktds(3));

        let w = construct_min_3tds(1, 5).unwrap();
        assert_eq!(w, BitMatrix::from_rows(&[b"01111"]));

        let w = construct_min_3tds(7, 7).unwrap();
        assert_eq!(w.ones_count(), 16);
        assert!(w.is_ktds(3));

        assert_eq!(construct_min_3tds(2, 2), None);
        assert_eq!(construct_min_3tds(1, 3), None);
    }

    #[test]
    fn construct_transposes_wide_inputs() {
        let w = construct_min_3tds(100, 4).unwrap();
        assert_eq!((w.n_rows(), w.n_cols()), (100, 4));
        assert_eq!(w.ones_count(), 12);
        assert!(w.is_ktds(3));
    }

    #[test]
    fn construct_is_deterministic() {
        for (n, m) in [(5, 5), (6, 8), (9, 13), (1, 7), (12, 4)] {
            assert_eq!(construct_min_3tds(n, m), construct_min_3tds(n, m), "({n},{m})");
        }
    }

    #[test]
    fn construct_components_match_decomposition() {
        let n = 6;
        let m = 6;
        let target = gamma_3t(n, m).value().unwrap();
        let d = decompose_counts(n, m, target).unwrap();
        let w = construct_min_3tds(n, m).unwrap();
        let mut got: Vec<(usize, usize, usize)> = components(&w)
            .iter()
            .map(|c| (c.row_indices.len(), c.col_indices.len(), c.ones))
            .collect();
        got.sort();
        let mut want: Vec<(usize, usize, usize)> = d
            .counts
            .iter()
            .flat_map(|(k, &c)| std::iter::repeat_n((k.rows(), k.cols(), k.ones()), c))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn construct_rows_never_sparse_in_catalog_outputs() {
        // Catalog-built minimum matrices have no all-zero rows and at least
        // 2 ones per row.
        for (n, m) in [(4, 4), (5, 7), (9, 9), (11, 14)] {
            let w = construct_min_3tds(n, m).unwrap();
            if gamma_3t(n, m).value().unwrap() < 3 * n {
                let (rows, _) = w.line_sums();
                assert!(rows.iter().all(|&r| r >= 2), "({n},{m})");
            }
        }
    }
}
