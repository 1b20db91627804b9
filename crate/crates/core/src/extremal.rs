//! Exact and heuristic computation of the extremal function `Ex(P, n)`:
//! the maximum weight of an n x n 0-1 matrix avoiding `P`.
//!
//! Exact search is branch and bound over cells in row-major order, branching
//! "set 1" before "set 0", with the trivial bound `current weight +
//! remaining cells` and an incremental P-freeness check restricted to
//! embeddings through the newly set cell. A second descending pass pins the
//! optimum value and extracts the lexicographically least maximizer, so the
//! reported matrix is deterministic.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::containment::dense_anchored;
use crate::matrix::BitMatrix;
use crate::pattern::{Pattern, PatternError};
use crate::sampling::Sampler;

/// Branch and bound refuses hosts beyond this side.
pub const BNB_MAX_N: u64 = 8;
/// Exhaustive enumeration refuses hosts beyond this side.
pub const EXHAUSTIVE_MAX_N: u64 = 4;
/// Randomized greedy refuses hosts beyond this side.
pub const GREEDY_MAX_N: u64 = 512;
/// Search-node ceiling for branch and bound.
pub const BNB_NODE_BUDGET: u64 = 2_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    /// Weight-0 patterns are refused (every matrix vacuously avoids nothing).
    DegeneratePattern,
    /// Host side exceeds the method's cap.
    Scale { n: u64, cap: u64 },
    /// Branch and bound exceeded its node budget.
    Budget { visited: u64 },
    /// `join` needs a southeast 1 in the left operand.
    JoinMissingSoutheast,
    /// `join` needs a northwest 1 in the right operand.
    JoinMissingNorthwest,
    /// Joined dimensions overflow.
    JoinTooLarge(PatternError),
}

impl fmt::Display for ExtremalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalError::DegeneratePattern => write!(f, "weight-0 pattern refused"),
            ExtremalError::Scale { n, cap } => {
                write!(f, "side {n} exceeds this method's cap of {cap}")
            }
            ExtremalError::Budget { visited } => {
                write!(f, "search exceeded node budget after {visited} nodes")
            }
            ExtremalError::JoinMissingSoutheast => {
                write!(f, "left join operand has no 1 in its southeast corner")
            }
            ExtremalError::JoinMissingNorthwest => {
                write!(f, "right join operand has no 1 in its northwest corner")
            }
            ExtremalError::JoinTooLarge(e) => write!(f, "join result invalid: {e}"),
        }
    }
}

impl core::error::Error for ExtremalError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalMethod {
    BranchAndBound,
    Exhaustive,
    Greedy,
}

impl fmt::Display for ExtremalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalMethod::BranchAndBound => "bnb",
            ExtremalMethod::Exhaustive => "exhaustive",
            ExtremalMethod::Greedy => "greedy",
        })
    }
}

/// Result of an extremal computation. The maximizer is always P-free with
/// weight equal to `value`; for the exact methods it is the
/// lexicographically least optimum (row-major bit-string order).
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub value: u64,
    pub maximizer: BitMatrix,
    pub nodes_explored: u64,
    pub method: ExtremalMethod,
}

fn check_pattern(p: &Pattern) -> Result<(), ExtremalError> {
    if p.weight() == 0 {
        return Err(ExtremalError::DegeneratePattern);
    }
    Ok(())
}

/// True when setting `(r, c)` in an otherwise P-free `m` creates an
/// occurrence of `p`. The cell must already be set in `m`.
fn creates_occurrence(p: &Pattern, m: &BitMatrix, r: u64, c: u64) -> bool {
    p.ones().iter().any(|&(pi, pj)| dense_anchored(p, m, (pi, pj), (r, c)))
}

/// Exact `Ex(P, n)` by branch and bound or exhaustive enumeration.
pub fn extremal_exact(
    p: &Pattern,
    n: u64,
    method: ExtremalMethod,
) -> Result<ExtremalResult, ExtremalError> {
    check_pattern(p)?;
    match method {
        ExtremalMethod::BranchAndBound => {
            if n == 0 || n > BNB_MAX_N {
                return Err(ExtremalError::Scale { n, cap: BNB_MAX_N });
            }
            branch_and_bound(p, n)
        }
        ExtremalMethod::Exhaustive => {
            if n == 0 || n > EXHAUSTIVE_MAX_N {
                return Err(ExtremalError::Scale { n, cap: EXHAUSTIVE_MAX_N });
            }
            exhaustive(p, n)
        }
        ExtremalMethod::Greedy => Err(ExtremalError::Scale { n, cap: 0 }),
    }
}

struct Bnb<'a> {
    p: &'a Pattern,
    n: u64,
    cells: u64,
    m: BitMatrix,
    best: u64,
    nodes: u64,
}

impl<'a> Bnb<'a> {
    fn cell(&self, d: u64) -> (u64, u64) {
        (d / self.n + 1, d % self.n + 1)
    }

    fn tick(&mut self) -> Result<(), ExtremalError> {
        self.nodes += 1;
        if self.nodes > BNB_NODE_BUDGET {
            return Err(ExtremalError::Budget { visited: self.nodes });
        }
        Ok(())
    }

    /// Value pass: 1-branch first, prune when the trivial bound cannot
    /// strictly beat the incumbent.
    fn value_pass(&mut self, d: u64, w: u64) -> Result<(), ExtremalError> {
        self.tick()?;
        if w + (self.cells - d) <= self.best {
            return Ok(());
        }
        if d == self.cells {
            self.best = w;
            return Ok(());
        }
        let (r, c) = self.cell(d);
        self.m.set(r, c, true);
        if !creates_occurrence(self.p, &self.m, r, c) {
            self.value_pass(d + 1, w + 1)?;
        }
        self.m.set(r, c, false);
        self.value_pass(d + 1, w)
    }

    /// Maximizer pass: 0-branch first; the first full assignment reaching
    /// the known optimum is the lexicographically least maximizer.
    fn lex_pass(&mut self, d: u64, w: u64) -> Result<bool, ExtremalError> {
        self.tick()?;
        if w + (self.cells - d) < self.best {
            return Ok(false);
        }
        if d == self.cells {
            return Ok(true);
        }
        let (r, c) = self.cell(d);
        if self.lex_pass(d + 1, w)? {
            return Ok(true);
        }
        self.m.set(r, c, true);
        if !creates_occurrence(self.p, &self.m, r, c) && self.lex_pass(d + 1, w + 1)? {
            return Ok(true);
        }
        self.m.set(r, c, false);
        Ok(false)
    }
}

fn branch_and_bound(p: &Pattern, n: u64) -> Result<ExtremalResult, ExtremalError> {
    let mut bnb = Bnb {
        p,
        n,
        cells: n * n,
        m: BitMatrix::zeros(n).expect("n <= cap"),
        best: 0,
        nodes: 0,
    };
    bnb.value_pass(0, 0)?;
    let value = bnb.best;
    let found = bnb.lex_pass(0, 0)?;
    debug_assert!(found, "the optimum must be reachable");
    Ok(ExtremalResult {
        value,
        maximizer: bnb.m,
        nodes_explored: bnb.nodes,
        method: ExtremalMethod::BranchAndBound,
    })
}

/// Row-major bit-string comparison: which matrix is lexicographically
/// smaller, reading cells (1,1), (1,2), ... with 0 < 1.
fn bits_less(a: &BitMatrix, b: &BitMatrix) -> bool {
    let n = a.side();
    for r in 1..=n {
        for c in 1..=n {
            match (a.get(r, c), b.get(r, c)) {
                (false, true) => return true,
                (true, false) => return false,
                _ => {}
            }
        }
    }
    false
}

fn exhaustive(p: &Pattern, n: u64) -> Result<ExtremalResult, ExtremalError> {
    if n <= 3 {
        // All 2^(n^2) matrices.
        let cells = (n * n) as u32;
        let mut best: Option<(u64, BitMatrix)> = None;
        let mut nodes = 0u64;
        for mask in 0u64..1 << cells {
            nodes += 1;
            let mut m = BitMatrix::zeros(n).expect("tiny");
            for d in 0..cells as u64 {
                if mask >> d & 1 == 1 {
                    m.set(d / n + 1, d % n + 1, true);
                }
            }
            if crate::containment::contains(p, &m).expect("pattern checked") {
                continue;
            }
            let w = m.weight();
            let better = match &best {
                None => true,
                Some((bw, bm)) => w > *bw || (w == *bw && bits_less(&m, bm)),
            };
            if better {
                best = Some((w, m));
            }
        }
        let (value, maximizer) = best.expect("all-zeros is always P-free");
        return Ok(ExtremalResult {
            value,
            maximizer,
            nodes_explored: nodes,
            method: ExtremalMethod::Exhaustive,
        });
    }

    // n == 4: row-by-row enumeration with prefix pruning. A prefix that
    // already contains P cannot be completed to a P-free matrix.
    let mut m = BitMatrix::zeros(n).expect("tiny");
    let mut best: Option<(u64, BitMatrix)> = None;
    let mut nodes = 0u64;
    enumerate_rows(p, n, 1, 0, &mut m, &mut best, &mut nodes);
    let (value, maximizer) = best.expect("all-zeros is always P-free");
    Ok(ExtremalResult {
        value,
        maximizer,
        nodes_explored: nodes,
        method: ExtremalMethod::Exhaustive,
    })
}

fn enumerate_rows(
    p: &Pattern,
    n: u64,
    row: u64,
    w: u64,
    m: &mut BitMatrix,
    best: &mut Option<(u64, BitMatrix)>,
    nodes: &mut u64,
) {
    if row > n {
        let better = match best {
            None => true,
            Some((bw, bm)) => w > *bw || (w == *bw && bits_less(m, bm)),
        };
        if better {
            *best = Some((w, m.clone()));
        }
        return;
    }
    for value in 0u64..1 << n {
        *nodes += 1;
        for c in 1..=n {
            m.set(row, c, value >> (c - 1) & 1 == 1);
        }
        // Prefix check: remaining rows are all zero right now, so this is
        // exactly "does the prefix already contain P".
        if !crate::containment::contains(p, m).expect("pattern checked") {
            enumerate_rows(p, n, row + 1, w + value.count_ones() as u64, m, best, nodes);
        }
    }
    for c in 1..=n {
        m.set(row, c, false);
    }
}

/// Randomized greedy lower bound: visit all cells in a seeded random order,
/// keeping each 1 that preserves P-freeness. The result is maximal, P-free,
/// and reproducible from the seed.
pub fn extremal_greedy_lb(p: &Pattern, n: u64, seed: u64) -> Result<ExtremalResult, ExtremalError> {
    check_pattern(p)?;
    if n == 0 || n > GREEDY_MAX_N {
        return Err(ExtremalError::Scale { n, cap: GREEDY_MAX_N });
    }
    let mut order: Vec<u64> = (0..n * n).collect();
    let mut sampler = Sampler::new(seed);
    // Fisher-Yates
    for i in (1..order.len()).rev() {
        let j = sampler.below(i as u64 + 1) as usize;
        order.swap(i, j);
    }
    let mut m = BitMatrix::zeros(n).expect("n <= cap");
    let mut value = 0u64;
    for &d in &order {
        let (r, c) = (d / n + 1, d % n + 1);
        m.set(r, c, true);
        if creates_occurrence(p, &m, r, c) {
            m.set(r, c, false);
        } else {
            value += 1;
        }
    }
    Ok(ExtremalResult {
        value,
        maximizer: m,
        nodes_explored: n * n,
        method: ExtremalMethod::Greedy,
    })
}

/// Corner join: `a` placed top-left, `b` bottom-right, with `a`'s southeast
/// 1 identified with `b`'s northwest 1. Extremal functions are subadditive
/// across a join.
pub fn join(a: &Pattern, b: &Pattern) -> Result<Pattern, ExtremalError> {
    if !a.get(a.rows(), a.cols()) {
        return Err(ExtremalError::JoinMissingSoutheast);
    }
    if !b.get(1, 1) {
        return Err(ExtremalError::JoinMissingNorthwest);
    }
    let rows = a.rows() + b.rows() - 1;
    let cols = a.cols() + b.cols() - 1;
    let points = a
        .ones()
        .iter()
        .copied()
        .chain(b.ones().iter().map(|&(r, c)| (r + a.rows() - 1, c + a.cols() - 1)));
    Pattern::from_points(rows, cols, points).map_err(ExtremalError::JoinTooLarge)
}
