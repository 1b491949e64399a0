//! Minimum 3-tuple total dominating sets of rook's graphs K_n □ K_m.
//!
//! A set S of board cells is a k-tuple total dominating set (kTDS) when
//! every cell of the n×m board, in S or not, sees at least k cells of S in
//! its row and column combined. This crate provides:
//!
//! - [`matrix`]: the (0,1)-matrix model, the per-cell neighbor count, the
//!   kTDS predicate, and component decomposition of a matrix's ones;
//! - [`gamma`]: exact closed forms for the minimum size gamma_3t(n, m) of a
//!   3TDS, with the auxiliary bounds around them;
//! - [`construct`]: certified minimum 3TDS matrices, built block-diagonally
//!   from a small component catalog;
//! - [`solve`]: an independent exact branch-and-bound solver (any k), the
//!   oracle used to certify the formulas and constructions;
//! - [`textio`]: grid/PBM/JSON renderings and strict grid parsing;
//! - [`check`]: the consistency harness cross-checking everything above.

// Index arithmetic here is 1-based and two-dimensional; plain indexed loops
// read better than iterator chains for it.
#![allow(clippy::needless_range_loop)]

pub mod check;
pub mod construct;
pub mod gamma;
pub mod matrix;
pub mod solve;
pub mod textio;

pub use check::{build_table, run_consistency_check, CheckReport, PropertyResult, TableRow};
pub use construct::{
    construct_min_3tds, decompose_counts, full_block, hook_4x4, hook_4x5, last_three_columns,
    stair_block, BlockError, BlockKind, Decomposition,
};
pub use gamma::{
    column_counting_bound, gamma_3t, gamma_3t_square, lower_bound_2n2, residue_class,
    three_n_threshold, upper_bound_kn, GammaResult, Regime,
};
pub use matrix::{components, compose_block_diagonal, BitMatrix, ComponentReport};
pub use solve::{naive_min_ktds, solve_min_ktds, SolveReport, SolveStatus, SolverConfig};
pub use textio::{parse_matrix_text, render_matrix, ParseError, RenderFormat};
