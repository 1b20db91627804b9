//! Host matrices: dense bitset rows for containment search, sparse sorted
//! coordinates for large construction outputs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::pattern::Pattern;

/// Dense square matrices refuse sides beyond this; larger hosts must stay
/// sparse.
pub const BITMATRIX_MAX_SIDE: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// Side must be at least 1.
    EmptySide,
    /// Requested dense side exceeds [`BITMATRIX_MAX_SIDE`].
    SideTooLarge { n: u64 },
    /// An entry lies outside `1..=n`.
    OutOfBounds { row: u64, col: u64, n: u64 },
    /// Sparse entries must be strictly sorted row-major with no duplicates.
    NotSorted { index: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::EmptySide => write!(f, "matrix side must be positive"),
            MatrixError::SideTooLarge { n } => {
                write!(f, "side {n} exceeds dense limit {BITMATRIX_MAX_SIDE}; use sparse form")
            }
            MatrixError::OutOfBounds { row, col, n } => {
                write!(f, "entry ({row}, {col}) outside {n}x{n} matrix")
            }
            MatrixError::NotSorted { index } => {
                write!(f, "sparse entry #{index} breaks strict row-major order")
            }
        }
    }
}

impl core::error::Error for MatrixError {}

/// Square 0-1 matrix stored as one u64-bitset per row.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(n: u64) -> Result<BitMatrix, MatrixError> {
        if n == 0 {
            return Err(MatrixError::EmptySide);
        }
        if n > BITMATRIX_MAX_SIDE {
            return Err(MatrixError::SideTooLarge { n });
        }
        let n = n as usize;
        let words_per_row = n.div_ceil(64);
        Ok(BitMatrix { n, words_per_row, bits: vec![0; n * words_per_row] })
    }

    pub fn all_ones(n: u64) -> Result<BitMatrix, MatrixError> {
        let mut m = BitMatrix::zeros(n)?;
        for r in 1..=n {
            for c in 1..=n {
                m.set(r, c, true);
            }
        }
        Ok(m)
    }

    /// Embeds a pattern's 1-cells at the top-left of an `n x n` matrix.
    pub fn from_pattern(p: &Pattern, n: u64) -> Result<BitMatrix, MatrixError> {
        let mut m = BitMatrix::zeros(n)?;
        for &(r, c) in p.ones() {
            if r as u64 > n || c as u64 > n {
                return Err(MatrixError::OutOfBounds { row: r as u64, col: c as u64, n });
            }
            m.set(r as u64, c as u64, true);
        }
        Ok(m)
    }

    pub fn side(&self) -> u64 {
        self.n as u64
    }

    /// 1-based access.
    pub fn get(&self, row: u64, col: u64) -> bool {
        debug_assert!(1 <= row && row <= self.n as u64 && 1 <= col && col <= self.n as u64);
        let (r, c) = (row as usize - 1, col as usize - 1);
        self.bits[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, row: u64, col: u64, value: bool) {
        debug_assert!(1 <= row && row <= self.n as u64 && 1 <= col && col <= self.n as u64);
        let (r, c) = (row as usize - 1, col as usize - 1);
        let word = &mut self.bits[r * self.words_per_row + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    pub fn weight(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    fn row_words(&self, row: u64) -> &[u64] {
        let r = row as usize - 1;
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Smallest column `>= col` holding a 1 in `row`, or `None`.
    pub fn next_one_at_or_after(&self, row: u64, col: u64) -> Option<u64> {
        if col > self.n as u64 {
            return None;
        }
        let words = self.row_words(row);
        let start = (col.max(1) - 1) as usize;
        let mut wi = start / 64;
        let mut w = words[wi] & (!0u64 << (start % 64));
        loop {
            if w != 0 {
                let bit = wi * 64 + w.trailing_zeros() as usize;
                return (bit < self.n).then_some(bit as u64 + 1);
            }
            wi += 1;
            if wi >= words.len() {
                return None;
            }
            w = words[wi];
        }
    }

    /// Number of 1s in `row` at columns `>= col`.
    pub fn row_weight_from(&self, row: u64, col: u64) -> u64 {
        if col > self.n as u64 {
            return 0;
        }
        let words = self.row_words(row);
        let start = (col.max(1) - 1) as usize;
        let mut total = (words[start / 64] & (!0u64 << (start % 64))).count_ones() as u64;
        for w in &words[start / 64 + 1..] {
            total += w.count_ones() as u64;
        }
        total
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.n as u64).expect("same side");
        for r in 1..=self.n as u64 {
            let mut c = 1;
            while let Some(hit) = self.next_one_at_or_after(r, c) {
                out.set(hit, r, true);
                c = hit + 1;
            }
        }
        out
    }

    pub fn rot180(&self) -> BitMatrix {
        let n = self.n as u64;
        let mut out = BitMatrix::zeros(n).expect("same side");
        for r in 1..=n {
            let mut c = 1;
            while let Some(hit) = self.next_one_at_or_after(r, c) {
                out.set(n + 1 - r, n + 1 - hit, true);
                c = hit + 1;
            }
        }
        out
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let mut entries = Vec::with_capacity(self.weight() as usize);
        for r in 1..=self.n as u64 {
            let mut c = 1;
            while let Some(hit) = self.next_one_at_or_after(r, c) {
                entries.push((r, hit));
                c = hit + 1;
            }
        }
        SparseMatrix { n: self.n as u64, entries }
    }
}

/// Debug rendering shared by both matrix forms (grid shown for small sides).
fn fmt_matrix(
    f: &mut fmt::Formatter<'_>,
    n: u64,
    weight: u64,
    get: impl Fn(u64, u64) -> bool,
) -> fmt::Result {
    write!(f, "{n}x{n} matrix, weight {weight}")?;
    if n <= 32 {
        writeln!(f)?;
        for r in 1..=n {
            for c in 1..=n {
                write!(f, "{}", if get(r, c) { 'X' } else { '.' })?;
            }
            writeln!(f)?;
        }
    }
    Ok(())
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(f, self.side(), self.weight(), |r, c| self.get(r, c))
    }
}

/// Square 0-1 matrix as a strictly sorted row-major coordinate list (1-based).
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    n: u64,
    entries: Vec<(u64, u64)>,
}

impl SparseMatrix {
    pub fn new(n: u64, entries: Vec<(u64, u64)>) -> Result<SparseMatrix, MatrixError> {
        if n == 0 {
            return Err(MatrixError::EmptySide);
        }
        for (i, &(r, c)) in entries.iter().enumerate() {
            if r == 0 || c == 0 || r > n || c > n {
                return Err(MatrixError::OutOfBounds { row: r, col: c, n });
            }
            if i > 0 && entries[i - 1] >= (r, c) {
                return Err(MatrixError::NotSorted { index: i });
            }
        }
        Ok(SparseMatrix { n, entries })
    }

    pub fn side(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn weight(&self) -> u64 {
        self.entries.len() as u64
    }

    pub fn get(&self, row: u64, col: u64) -> bool {
        self.entries.binary_search(&(row, col)).is_ok()
    }

    /// Column indices of the 1s in `row`, ascending.
    pub fn row_cols(&self, row: u64) -> &[(u64, u64)] {
        let lo = self.entries.partition_point(|&(r, _)| r < row);
        let hi = self.entries.partition_point(|&(r, _)| r <= row);
        &self.entries[lo..hi]
    }

    pub fn to_bitmatrix(&self) -> Result<BitMatrix, MatrixError> {
        let mut m = BitMatrix::zeros(self.n)?;
        for &(r, c) in &self.entries {
            m.set(r, c, true);
        }
        Ok(m)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(f, self.side(), self.weight(), |r, c| self.get(r, c))
    }
}
