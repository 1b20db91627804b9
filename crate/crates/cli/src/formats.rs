//! Byte-exact text formats for patterns and sparse matrices.
//!
//! Pattern: first line `rows cols`, then `rows` lines of `.` and `X`.
//! Matrix: first line `n n nnz`, then `nnz` lines `r c`, 1-based, strictly
//! sorted row-major. Writers emit exactly one `\n` after every line;
//! readers accept a missing final newline but nothing else.

use anyhow::{bail, Context, Result};
use exmat_core::{Pattern, SparseMatrix};

pub fn write_pattern(p: &Pattern) -> String {
    let mut out = format!("{} {}\n", p.rows(), p.cols());
    for r in 1..=p.rows() {
        for c in 1..=p.cols() {
            out.push(if p.get(r, c) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn read_pattern(text: &str) -> Result<Pattern> {
    let mut lines = text.split('\n');
    let header = lines.next().context("empty pattern file")?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [rows, cols] = dims[..] else {
        bail!("pattern header must be `rows cols`, got {header:?}");
    };
    let rows: u32 = rows.parse().context("bad row count")?;
    let cols: u32 = cols.parse().context("bad column count")?;
    let mut points = Vec::new();
    for r in 1..=rows {
        let line = lines.next().with_context(|| format!("missing pattern row {r}"))?;
        if line.chars().count() != cols as usize {
            bail!("pattern row {r} has {} characters, expected {cols}", line.chars().count());
        }
        for (i, ch) in line.chars().enumerate() {
            match ch {
                'X' => points.push((r, i as u32 + 1)),
                '.' => {}
                other => bail!("pattern row {r} contains {other:?}; use `.` and `X`"),
            }
        }
    }
    for extra in lines {
        if !extra.is_empty() {
            bail!("trailing content after pattern grid: {extra:?}");
        }
    }
    Pattern::from_points(rows, cols, points).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn write_matrix(m: &SparseMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.side(), m.side(), m.weight());
    for &(r, c) in m.entries() {
        out.push_str(&format!("{r} {c}\n"));
    }
    out
}

pub fn read_matrix(text: &str) -> Result<SparseMatrix> {
    let mut lines = text.split('\n');
    let header = lines.next().context("empty matrix file")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n1, n2, nnz] = fields[..] else {
        bail!("matrix header must be `n n nnz`, got {header:?}");
    };
    let n1: u64 = n1.parse().context("bad side")?;
    let n2: u64 = n2.parse().context("bad side")?;
    if n1 != n2 {
        bail!("host matrices are square; header says {n1} x {n2}");
    }
    let nnz: usize = nnz.parse().context("bad entry count")?;
    let mut entries = Vec::with_capacity(nnz);
    for i in 0..nnz {
        let line = lines.next().with_context(|| format!("missing entry {}", i + 1))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [r, c] = parts[..] else {
            bail!("entry {} must be `r c`, got {line:?}", i + 1);
        };
        entries.push((r.parse().context("bad row")?, c.parse().context("bad col")?));
    }
    for extra in lines {
        if !extra.is_empty() {
            bail!("trailing content after matrix entries: {extra:?}");
        }
    }
    SparseMatrix::new(n1, entries).map_err(|e| anyhow::anyhow!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exmat_core::pattern;

    #[test]
    fn pattern_round_trip_is_byte_identical() {
        for p in [pattern::r1(), pattern::pretzel_t(), Pattern::one_row(4).unwrap()] {
            let text = write_pattern(&p);
            let back = read_pattern(&text).unwrap();
            assert_eq!(back, p);
            assert_eq!(write_pattern(&back), text);
        }
    }

    #[test]
    fn pattern_golden_bytes() {
        let p = Pattern::from_points(2, 3, [(1, 1), (2, 3)]).unwrap();
        assert_eq!(write_pattern(&p), "2 3\nX..\n..X\n");
        // Missing final newline is accepted.
        assert_eq!(read_pattern("2 3\nX..\n..X").unwrap(), p);
    }

    #[test]
    fn pattern_rejects_malformed() {
        assert!(read_pattern("").is_err());
        assert!(read_pattern("2\nX\nX\n").is_err());
        assert!(read_pattern("2 2\nX.\nX\n").is_err());
        assert!(read_pattern("2 2\nX.\nXO\n").is_err());
        assert!(read_pattern("1 1\nX\njunk\n").is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let m = SparseMatrix::new(5, vec![(1, 2), (3, 1), (3, 5), (5, 5)]).unwrap();
        let text = write_matrix(&m);
        assert_eq!(text, "5 5 4\n1 2\n3 1\n3 5\n5 5\n");
        assert_eq!(read_matrix(&text).unwrap(), m);
    }

    #[test]
    fn matrix_rejects_malformed() {
        assert!(read_matrix("3 4 0\n").is_err());
        assert!(read_matrix("3 3 2\n1 1\n").is_err());
        assert!(read_matrix("3 3 2\n1 2\n1 1\n").is_err());
        assert!(read_matrix("3 3 1\n4 1\n").is_err());
        assert!(read_matrix("3 3 1\n1 1\nleftover\n").is_err());
    }
}
