//! Ordered-submatrix containment: `P ≺ A` iff strictly increasing row and
//! column maps send every 1 of `P` onto a 1 of `A`.
//!
//! Two complete engines back the public API, chosen by host representation:
//!
//! * dense [`BitMatrix`] hosts run a row-scan backtracking search that maps
//!   pattern rows to host rows in increasing order and keeps, per partial
//!   assignment, the minimal feasible column map via "next set bit at or
//!   after" queries (with popcount pruning);
//! * sparse [`SparseMatrix`] hosts run an anchored line search that assigns
//!   whole pattern lines (rows or columns) in a most-constrained-first order
//!   computed from the pattern, drawing candidates from the host's sorted
//!   per-line coordinate lists.
//!
//! Both engines are exhaustive and deterministic; a node budget turns
//! runaway searches into an error rather than a wrong answer. The naive
//! subset-enumeration oracle [`contains_naive`] cross-checks them at small
//! sizes.

use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{BitMatrix, SparseMatrix};
use crate::pattern::Pattern;

mod dense;
mod naive;
mod sparse;

/// Anchored single-cell containment check on dense hosts; the extremal
/// searches use it as their incremental P-freeness primitive.
pub(crate) use dense::contains_anchored as dense_anchored;

/// Node ceiling applied when no explicit [`SearchOptions`] is given.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Hosts larger than this are refused by the naive oracle.
pub const NAIVE_MAX_SIDE: u64 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContainmentError {
    /// Weight-0 patterns make containment vacuous; callers must not ask.
    DegeneratePattern,
    /// The search exceeded its node budget before reaching an answer.
    BudgetExceeded { visited: u64 },
    /// Host too large for the brute-force oracle.
    OracleScale { side: u64, max: u64 },
}

impl fmt::Display for ContainmentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContainmentError::DegeneratePattern => {
                write!(f, "containment of a weight-0 pattern is vacuous")
            }
            ContainmentError::BudgetExceeded { visited } => {
                write!(f, "containment search exceeded node budget after {visited} nodes")
            }
            ContainmentError::OracleScale { side, max } => {
                write!(f, "naive oracle limited to side {max}, host has side {side}")
            }
        }
    }
}

impl core::error::Error for ContainmentError {}

/// Resource knobs for the containment engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes (candidate assignments) visited before
    /// the engine gives up with [`ContainmentError::BudgetExceeded`].
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// A witnessed occurrence of a pattern inside a host matrix.
///
/// `row_map[i]` is the host row image of pattern row `i+1`; likewise for
/// columns. Both maps cover every pattern line, including lines without 1s.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Embedding {
    pub row_map: Vec<u64>,
    pub col_map: Vec<u64>,
}

/// Why an embedding failed validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingViolation {
    WrongLength,
    NotStrictlyIncreasing,
    OutOfRange { index: u64 },
    MissingOne { pattern_row: u32, pattern_col: u32, host_row: u64, host_col: u64 },
}

impl fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingViolation::WrongLength => write!(f, "map lengths do not match pattern dims"),
            EmbeddingViolation::NotStrictlyIncreasing => {
                write!(f, "row or column map is not strictly increasing")
            }
            EmbeddingViolation::OutOfRange { index } => {
                write!(f, "host index {index} out of range")
            }
            EmbeddingViolation::MissingOne { pattern_row, pattern_col, host_row, host_col } => {
                write!(
                    f,
                    "pattern 1 at ({pattern_row}, {pattern_col}) maps to host 0 at ({host_row}, {host_col})"
                )
            }
        }
    }
}

impl core::error::Error for EmbeddingViolation {}

impl Embedding {
    /// Re-checks every invariant against the pattern and host; searches are
    /// not trusted to produce valid embeddings.
    pub fn validate<H: Host>(&self, p: &Pattern, host: &H) -> Result<(), EmbeddingViolation> {
        let n = host.side();
        if self.row_map.len() != p.rows() as usize || self.col_map.len() != p.cols() as usize {
            return Err(EmbeddingViolation::WrongLength);
        }
        for map in [&self.row_map, &self.col_map] {
            for w in map.windows(2) {
                if w[0] >= w[1] {
                    return Err(EmbeddingViolation::NotStrictlyIncreasing);
                }
            }
            for &v in map {
                if v == 0 || v > n {
                    return Err(EmbeddingViolation::OutOfRange { index: v });
                }
            }
        }
        for &(r, c) in p.ones() {
            let hr = self.row_map[r as usize - 1];
            let hc = self.col_map[c as usize - 1];
            if !host.get(hr, hc) {
                return Err(EmbeddingViolation::MissingOne {
                    pattern_row: r,
                    pattern_col: c,
                    host_row: hr,
                    host_col: hc,
                });
            }
        }
        Ok(())
    }
}

/// What a search is asked to produce.
#[doc(hidden)]
#[derive(Debug, Clone, Copy)]
pub enum Goal {
    Decide,
    Witness,
    Enumerate { limit: Option<u64> },
}

#[doc(hidden)]
#[derive(Debug, Default)]
pub struct Outcome {
    pub found: bool,
    pub witness: Option<Embedding>,
    pub embeddings: Vec<Embedding>,
    pub nodes: u64,
}

/// Pattern structure shared by the engines.
pub(crate) struct Shape {
    pub kp: u32,
    pub lp: u32,
    /// Per pattern row (0-based), ascending pattern columns of its 1s.
    pub row_ones: Vec<Vec<u32>>,
    /// Per pattern column (0-based), ascending pattern rows of its 1s.
    pub col_ones: Vec<Vec<u32>>,
    /// Pattern rows with at least one 1, ascending, 1-based.
    pub essential_rows: Vec<u32>,
    pub essential_cols: Vec<u32>,
}

impl Shape {
    pub fn new(p: &Pattern) -> Shape {
        let (kp, lp) = (p.rows(), p.cols());
        let mut row_ones = alloc::vec![Vec::new(); kp as usize];
        let mut col_ones = alloc::vec![Vec::new(); lp as usize];
        for &(r, c) in p.ones() {
            row_ones[r as usize - 1].push(c);
            col_ones[c as usize - 1].push(r);
        }
        let essential_rows =
            (1..=kp).filter(|&r| !row_ones[r as usize - 1].is_empty()).collect();
        let essential_cols =
            (1..=lp).filter(|&c| !col_ones[c as usize - 1].is_empty()).collect();
        Shape { kp, lp, row_ones, col_ones, essential_rows, essential_cols }
    }
}

/// A square 0-1 host matrix the containment engines can search.
///
/// Sealed: implemented by [`BitMatrix`] and [`SparseMatrix`].
pub trait Host: private::Sealed {
    fn side(&self) -> u64;
    /// 1-based entry lookup.
    fn get(&self, row: u64, col: u64) -> bool;
    #[doc(hidden)]
    fn run_search(
        &self,
        p: &Pattern,
        goal: Goal,
        opts: &SearchOptions,
    ) -> Result<Outcome, ContainmentError>;
}

mod private {
    pub trait Sealed {}
    impl Sealed for super::BitMatrix {}
    impl Sealed for super::SparseMatrix {}
}

impl Host for BitMatrix {
    fn side(&self) -> u64 {
        BitMatrix::side(self)
    }

    fn get(&self, row: u64, col: u64) -> bool {
        BitMatrix::get(self, row, col)
    }

    fn run_search(
        &self,
        p: &Pattern,
        goal: Goal,
        opts: &SearchOptions,
    ) -> Result<Outcome, ContainmentError> {
        dense::search(p, self, goal, opts)
    }
}

impl Host for SparseMatrix {
    fn side(&self) -> u64 {
        SparseMatrix::side(self)
    }

    fn get(&self, row: u64, col: u64) -> bool {
        SparseMatrix::get(self, row, col)
    }

    fn run_search(
        &self,
        p: &Pattern,
        goal: Goal,
        opts: &SearchOptions,
    ) -> Result<Outcome, ContainmentError> {
        sparse::search(p, self, goal, opts)
    }
}

fn check_pattern(p: &Pattern) -> Result<(), ContainmentError> {
    if p.weight() == 0 {
        return Err(ContainmentError::DegeneratePattern);
    }
    Ok(())
}

fn fits(p: &Pattern, n: u64) -> bool {
    p.rows() as u64 <= n && p.cols() as u64 <= n
}

/// Decides `P ≺ A`. Deterministic; errors on weight-0 patterns.
pub fn contains<H: Host>(p: &Pattern, host: &H) -> Result<bool, ContainmentError> {
    contains_with(p, host, &SearchOptions::default())
}

pub fn contains_with<H: Host>(
    p: &Pattern,
    host: &H,
    opts: &SearchOptions,
) -> Result<bool, ContainmentError> {
    check_pattern(p)?;
    if !fits(p, host.side()) {
        return Ok(false);
    }
    Ok(host.run_search(p, Goal::Decide, opts)?.found)
}

/// Returns a valid embedding iff `P ≺ A`; the witness is reproducible
/// across runs (fixed exploration order).
pub fn find_witness<H: Host>(
    p: &Pattern,
    host: &H,
) -> Result<Option<Embedding>, ContainmentError> {
    find_witness_with(p, host, &SearchOptions::default())
}

pub fn find_witness_with<H: Host>(
    p: &Pattern,
    host: &H,
    opts: &SearchOptions,
) -> Result<Option<Embedding>, ContainmentError> {
    Ok(find_witness_counted(p, host, opts)?.0)
}

/// Like [`find_witness_with`] but also reports the number of search nodes
/// visited, for inclusion in verification reports.
pub fn find_witness_counted<H: Host>(
    p: &Pattern,
    host: &H,
    opts: &SearchOptions,
) -> Result<(Option<Embedding>, u64), ContainmentError> {
    check_pattern(p)?;
    if !fits(p, host.side()) {
        return Ok((None, 0));
    }
    let out = host.run_search(p, Goal::Witness, opts)?;
    debug_assert!(
        out.witness.as_ref().is_none_or(|e| e.validate(p, host).is_ok()),
        "engine produced an invalid witness"
    );
    Ok((out.witness, out.nodes))
}

/// All distinct embeddings of `P` in `A`, lexicographically ordered by
/// `(row_map, col_map)`; exhaustive when no limit is given. With a limit,
/// dense hosts return the lexicographically first `limit` embeddings;
/// sparse hosts return a deterministic set of `limit` embeddings (fixed
/// search order), sorted.
pub fn enumerate_occurrences<H: Host>(
    p: &Pattern,
    host: &H,
    limit: Option<u64>,
) -> Result<Vec<Embedding>, ContainmentError> {
    enumerate_occurrences_with(p, host, limit, &SearchOptions::default())
}

pub fn enumerate_occurrences_with<H: Host>(
    p: &Pattern,
    host: &H,
    limit: Option<u64>,
    opts: &SearchOptions,
) -> Result<Vec<Embedding>, ContainmentError> {
    check_pattern(p)?;
    if !fits(p, host.side()) {
        return Ok(Vec::new());
    }
    let out = host.run_search(p, Goal::Enumerate { limit }, opts)?;
    Ok(out.embeddings)
}

/// Brute-force containment over all row and column subsets; the test oracle
/// for the search engines. Refuses hosts with side above [`NAIVE_MAX_SIDE`].
pub fn contains_naive<H: Host>(p: &Pattern, host: &H) -> Result<bool, ContainmentError> {
    check_pattern(p)?;
    if host.side() > NAIVE_MAX_SIDE {
        return Err(ContainmentError::OracleScale { side: host.side(), max: NAIVE_MAX_SIDE });
    }
    if !fits(p, host.side()) {
        return Ok(false);
    }
    Ok(naive::contains(p, host))
}

#[cfg(test)]
mod tests;
