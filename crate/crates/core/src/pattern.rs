//! 0-1 patterns: the small forbidden matrices.
//!
//! A [`Pattern`] is stored as its dimensions plus the sorted list of 1-cells.
//! All coordinates in the public API are 1-based, matching how patterns are
//! written down in the literature.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

/// Error for coordinates that do not fit the declared dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternError {
    /// Dimensions must be at least 1x1.
    EmptyDimensions,
    /// A cell lies outside `1..=rows` x `1..=cols`.
    OutOfBounds { row: u32, col: u32, rows: u32, cols: u32 },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::EmptyDimensions => write!(f, "pattern dimensions must be positive"),
            PatternError::OutOfBounds { row, col, rows, cols } => {
                write!(f, "cell ({row}, {col}) outside {rows}x{cols} pattern")
            }
        }
    }
}

impl core::error::Error for PatternError {}

/// Unknown name passed to [`catalog`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogError(pub String);

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown catalog pattern `{}`", self.0)
    }
}

impl core::error::Error for CatalogError {}

/// The five symmetry operations used throughout; all are involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Transform {
    /// `(r, c) -> (c, r)`.
    Transpose,
    /// `(r, c) -> (rows+1-r, cols+1-c)`.
    Rot180,
    /// `(r, c) -> (rows+1-r, c)`.
    FlipRows,
    /// `(r, c) -> (r, cols+1-c)`.
    FlipCols,
    /// Reflection across the minor diagonal: `(r, c) -> (cols+1-c, rows+1-r)`.
    AntiTranspose,
}

impl Transform {
    pub const ALL: [Transform; 5] = [
        Transform::Transpose,
        Transform::Rot180,
        Transform::FlipRows,
        Transform::FlipCols,
        Transform::AntiTranspose,
    ];
}

/// A 0-1 pattern: dimensions plus the row-major sorted set of 1-cells.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pattern {
    rows: u32,
    cols: u32,
    ones: Vec<(u32, u32)>,
}

impl Pattern {
    /// Builds a normalized pattern from a list of 1-cells (1-based).
    /// Duplicates are merged; cells are sorted row-major.
    pub fn from_points(
        rows: u32,
        cols: u32,
        points: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Pattern, PatternError> {
        if rows == 0 || cols == 0 {
            return Err(PatternError::EmptyDimensions);
        }
        let mut ones: Vec<(u32, u32)> = Vec::new();
        for (row, col) in points {
            if row == 0 || col == 0 || row > rows || col > cols {
                return Err(PatternError::OutOfBounds { row, col, rows, cols });
            }
            ones.push((row, col));
        }
        ones.sort_unstable();
        ones.dedup();
        Ok(Pattern { rows, cols, ones })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    /// The 1-cells, row-major sorted, 1-based.
    pub fn ones(&self) -> &[(u32, u32)] {
        &self.ones
    }

    /// Number of 1 entries.
    pub fn weight(&self) -> u64 {
        self.ones.len() as u64
    }

    pub fn get(&self, row: u32, col: u32) -> bool {
        self.ones.binary_search(&(row, col)).is_ok()
    }

    /// Column indices of the 1s in `row`, ascending.
    pub fn row_ones(&self, row: u32) -> impl Iterator<Item = u32> + '_ {
        let start = self.ones.partition_point(|&(r, _)| r < row);
        self.ones[start..]
            .iter()
            .take_while(move |&&(r, _)| r == row)
            .map(|&(_, c)| c)
    }

    /// Row indices of the 1s in `col`, ascending.
    pub fn col_ones(&self, col: u32) -> impl Iterator<Item = u32> + '_ {
        self.ones.iter().filter(move |&&(_, c)| c == col).map(|&(r, _)| r)
    }

    /// Applies a symmetry operation, remapping every cell by the exact
    /// coordinate bijection.
    pub fn transform(&self, op: Transform) -> Pattern {
        let (rows, cols) = match op {
            Transform::Transpose | Transform::AntiTranspose => (self.cols, self.rows),
            _ => (self.rows, self.cols),
        };
        let mut ones: Vec<(u32, u32)> = self
            .ones
            .iter()
            .map(|&(r, c)| match op {
                Transform::Transpose => (c, r),
                Transform::Rot180 => (self.rows + 1 - r, self.cols + 1 - c),
                Transform::FlipRows => (self.rows + 1 - r, c),
                Transform::FlipCols => (r, self.cols + 1 - c),
                Transform::AntiTranspose => (self.cols + 1 - c, self.rows + 1 - r),
            })
            .collect();
        ones.sort_unstable();
        Pattern { rows, cols, ones }
    }

    /// The k x k identity permutation pattern.
    pub fn identity(k: u32) -> Result<Pattern, PatternError> {
        Pattern::from_points(k, k, (1..=k).map(|i| (i, i)))
    }

    /// The 1 x l all-ones pattern.
    pub fn one_row(l: u32) -> Result<Pattern, PatternError> {
        Pattern::from_points(1, l, (1..=l).map(|j| (1, j)))
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Pattern {}x{} [", self.rows, self.cols)?;
        for r in 1..=self.rows {
            write!(f, "  ")?;
            for c in 1..=self.cols {
                write!(f, "{}", if self.get(r, c) { 'X' } else { '.' })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

fn pattern_exact(rows: u32, cols: u32, pts: &[(u32, u32)]) -> Pattern {
    Pattern::from_points(rows, cols, pts.iter().copied()).expect("catalog coordinates are in bounds")
}

/// 3x3 pattern with `Ex(R1, n) = Omega(n log n)`.
pub fn r1() -> Pattern {
    pattern_exact(3, 3, &[(1, 1), (1, 2), (2, 3), (3, 1), (3, 3)])
}

/// 2x4 companion of `R1` with the same known bounds.
pub fn r2() -> Pattern {
    pattern_exact(2, 4, &[(1, 1), (1, 2), (1, 4), (2, 1), (2, 3)])
}

/// 3x4 class-2 degenerate pattern.
pub fn s1() -> Pattern {
    pattern_exact(3, 4, &[(1, 1), (1, 3), (2, 1), (2, 4), (3, 2), (3, 4)])
}

/// 3x4 class-2 degenerate pattern.
pub fn s2() -> Pattern {
    pattern_exact(3, 4, &[(1, 2), (1, 4), (2, 1), (2, 3), (3, 1), (3, 4)])
}

/// The 4x4 "pretzel": smallest non-degenerate acyclic pattern whose
/// transpose is also non-degenerate.
pub fn pretzel_t() -> Pattern {
    pattern_exact(4, 4, &[(1, 1), (1, 4), (2, 2), (3, 1), (3, 3), (4, 2), (4, 4)])
}

/// Looks up a named pattern. Accepts `R1`, `R2`, `S1`, `S2`, `T`,
/// `identity(k)` and `one_row(l)` (case-insensitive).
pub fn catalog(name: &str) -> Result<Pattern, CatalogError> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "r1" => return Ok(r1()),
        "r2" => return Ok(r2()),
        "s1" => return Ok(s1()),
        "s2" => return Ok(s2()),
        "t" => return Ok(pretzel_t()),
        _ => {}
    }
    for (prefix, make) in [
        ("identity", Pattern::identity as fn(u32) -> Result<Pattern, PatternError>),
        ("one_row", Pattern::one_row as fn(u32) -> Result<Pattern, PatternError>),
    ] {
        if let Some(rest) = lower.strip_prefix(prefix) {
            let inner = rest.trim().trim_start_matches('(').trim_end_matches(')');
            if let Ok(arg) = inner.trim().parse::<u32>() {
                return make(arg).map_err(|_| CatalogError(String::from(name)));
            }
        }
    }
    Err(CatalogError(String::from(name)))
}
