//! Pattern classification and single-1 line-removal reduction chains.
//!
//! The classifiers decide lightness (one 1 per column), permutation shape,
//! acyclicity of the bipartite incidence graph, and the minimal class-s
//! degeneracy under horizontal cuts sharing at most one column. The
//! reduction machinery finds every line removal justified by the single-1
//! adjacency lemma (in all eight symmetry orientations), applies them, and
//! searches for shortest chains down to a target weight — each chain is a
//! replayable certificate trading one 1 for one logarithmic factor per step.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::pattern::{Pattern, Transform};

/// BFS over reduced patterns stops after this many distinct patterns.
pub const CHAIN_SEARCH_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    /// Weight-0 pattern where at least one 1 is required.
    DegeneratePattern,
    /// The step does not satisfy its orientation's conditions on this pattern.
    InvalidStep,
    /// Chain search exceeded [`CHAIN_SEARCH_CAP`] distinct patterns.
    SearchBudget { explored: usize },
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::DegeneratePattern => write!(f, "weight-0 pattern refused"),
            AnalysisError::InvalidStep => write!(f, "reduction step invalid on this pattern"),
            AnalysisError::SearchBudget { explored } => {
                write!(f, "chain search stopped after {explored} patterns")
            }
        }
    }
}

impl core::error::Error for AnalysisError {}

/// Exactly one 1 per column.
pub fn is_light(p: &Pattern) -> bool {
    let mut counts = alloc::vec![0u32; p.cols() as usize];
    for &(_, c) in p.ones() {
        counts[c as usize - 1] += 1;
    }
    counts.iter().all(|&x| x == 1)
}

/// Square with exactly one 1 per row and per column.
pub fn is_permutation(p: &Pattern) -> bool {
    if p.rows() != p.cols() || p.weight() != p.rows() as u64 {
        return false;
    }
    let mut rows = alloc::vec![0u32; p.rows() as usize];
    let mut cols = alloc::vec![0u32; p.cols() as usize];
    for &(r, c) in p.ones() {
        rows[r as usize - 1] += 1;
        cols[c as usize - 1] += 1;
    }
    rows.iter().all(|&x| x == 1) && cols.iter().all(|&x| x == 1)
}

/// The bipartite incidence graph (row nodes, column nodes, one edge per 1)
/// is a forest.
pub fn is_acyclic(p: &Pattern) -> bool {
    let rows = p.rows() as usize;
    let mut parent: Vec<usize> = (0..rows + p.cols() as usize).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(r, c) in p.ones() {
        let a = find(&mut parent, r as usize - 1);
        let b = find(&mut parent, rows + c as usize - 1);
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Degeneracy classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Degeneracy {
    Class(u32),
    NotDegenerate,
}

/// Minimal `s` such that the pattern is class-s degenerate: recursively
/// splittable by horizontal cuts where at most one column has 1s on both
/// sides, bottoming out when all 1s sit in a single row (class 0).
///
/// Cuts are contiguous, matching the stacked form of the definition.
pub fn degeneracy_class(p: &Pattern) -> Result<Degeneracy, AnalysisError> {
    if p.weight() == 0 {
        return Err(AnalysisError::DegeneratePattern);
    }
    let rows = p.rows() as usize;
    let words = (p.cols() as usize).div_ceil(64);
    // Column bitmask per row.
    let mut row_cols = alloc::vec![alloc::vec![0u64; words]; rows];
    for &(r, c) in p.ones() {
        row_cols[r as usize - 1][(c as usize - 1) / 64] |= 1 << ((c as usize - 1) % 64);
    }
    let mut memo: BTreeMap<(usize, usize), Option<u32>> = BTreeMap::new();
    let result = interval_class(&row_cols, 0, rows - 1, &mut memo);
    Ok(match result {
        Some(s) => Degeneracy::Class(s),
        None => Degeneracy::NotDegenerate,
    })
}

fn interval_class(
    row_cols: &[Vec<u64>],
    lo: usize,
    hi: usize,
    memo: &mut BTreeMap<(usize, usize), Option<u32>>,
) -> Option<u32> {
    if let Some(&v) = memo.get(&(lo, hi)) {
        return v;
    }
    let occupied = (lo..=hi).filter(|&r| row_cols[r].iter().any(|&w| w != 0)).count();
    if occupied <= 1 {
        memo.insert((lo, hi), Some(0));
        return Some(0);
    }
    let words = row_cols[0].len();
    let mut best: Option<u32> = None;
    // Prefix union grows as the cut moves down; the suffix union is
    // recomputed per cut (intervals are short for the patterns at hand).
    let mut top = alloc::vec![0u64; words];
    for cut in lo..hi {
        for (w, &bits) in top.iter_mut().zip(&row_cols[cut]) {
            *w |= bits;
        }
        let mut shared = 0u32;
        for wi in 0..words {
            let bottom = row_cols[cut + 1..=hi].iter().fold(0u64, |acc, row| acc | row[wi]);
            shared += (top[wi] & bottom).count_ones();
            if shared > 1 {
                break;
            }
        }
        if shared > 1 {
            continue;
        }
        let a = interval_class(row_cols, lo, cut, memo);
        let b = interval_class(row_cols, cut + 1, hi, memo);
        if let (Some(a), Some(b)) = (a, b) {
            let v = 1 + a.max(b);
            best = Some(best.map_or(v, |old| old.min(v)));
        }
    }
    memo.insert((lo, hi), best);
    best
}

/// Which axis a reduction removes a line from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    Row,
    Col,
}

/// One application of the single-1 line-removal lemma.
///
/// Column orientation (`axis == Col`): column `removed` has its only 1 at
/// row `pivot`; with the adjacent columns `j-1`, `j+1` (swapped when
/// `mirrored`), the pattern also has 1s at `(pivot, j+1)`, `(partner, j-1)`
/// and `(partner, j+1)`. Row orientation is the transposed statement, with
/// `pivot`/`partner` naming columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReductionStep {
    pub axis: Axis,
    pub mirrored: bool,
    pub removed: u32,
    pub pivot: u32,
    pub partner: u32,
}

impl ReductionStep {
    /// Checks the step's conditions on `p` under its declared orientation.
    pub fn validate(&self, p: &Pattern) -> Result<(), AnalysisError> {
        let q;
        let view = match self.axis {
            Axis::Col => p,
            Axis::Row => {
                q = p.transform(Transform::Transpose);
                &q
            }
        };
        let j = self.removed;
        if j < 2 || j + 1 > view.cols() {
            return Err(AnalysisError::InvalidStep);
        }
        let col: Vec<u32> = view.col_ones(j).collect();
        if col != [self.pivot] || self.pivot == self.partner {
            return Err(AnalysisError::InvalidStep);
        }
        let (near, far) = if self.mirrored { (j + 1, j - 1) } else { (j - 1, j + 1) };
        // As stated: 1s at (pivot, j+1), (partner, j-1), (partner, j+1);
        // mirrored swaps the roles of j-1 and j+1.
        let ok = view.get(self.pivot, far)
            && view.get(self.partner, near)
            && view.get(self.partner, far)
            && self.partner >= 1
            && self.partner <= view.rows();
        if ok {
            Ok(())
        } else {
            Err(AnalysisError::InvalidStep)
        }
    }
}

/// Every valid reduction step on `p`, across all four orientation labels
/// (axis x mirrored) and both vertical orders of the witnesses.
pub fn find_reductions(p: &Pattern) -> Vec<ReductionStep> {
    let mut steps = Vec::new();
    for axis in [Axis::Col, Axis::Row] {
        let q;
        let view = match axis {
            Axis::Col => p,
            Axis::Row => {
                q = p.transform(Transform::Transpose);
                &q
            }
        };
        for mirrored in [false, true] {
            for j in 2..view.cols() {
                let col: Vec<u32> = view.col_ones(j).collect();
                let [pivot] = col[..] else { continue };
                let (near, far) = if mirrored { (j + 1, j - 1) } else { (j - 1, j + 1) };
                if !view.get(pivot, far) {
                    continue;
                }
                for partner in 1..=view.rows() {
                    if partner == pivot {
                        continue;
                    }
                    if view.get(partner, near) && view.get(partner, far) {
                        steps.push(ReductionStep { axis, mirrored, removed: j, pivot, partner });
                    }
                }
            }
        }
    }
    debug_assert!(steps.iter().all(|s| s.validate(p).is_ok()));
    steps
}

/// Applies a validated step: deletes the removed line and compacts indices.
pub fn apply_reduction(p: &Pattern, step: &ReductionStep) -> Result<Pattern, AnalysisError> {
    step.validate(p)?;
    let (rows, cols) = match step.axis {
        Axis::Col => (p.rows(), p.cols() - 1),
        Axis::Row => (p.rows() - 1, p.cols()),
    };
    let points = p.ones().iter().filter_map(|&(r, c)| match step.axis {
        Axis::Col => {
            if c == step.removed {
                None
            } else {
                Some((r, if c > step.removed { c - 1 } else { c }))
            }
        }
        Axis::Row => {
            if r == step.removed {
                None
            } else {
                Some((if r > step.removed { r - 1 } else { r }, c))
            }
        }
    });
    Ok(Pattern::from_points(rows, cols, points).expect("compacted cells in bounds"))
}

/// An ordered list of reduction steps from `start` down to `final_pattern`;
/// the number of steps is the implied log-exponent of the resulting upper
/// bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionChain {
    pub start: Pattern,
    pub steps: Vec<(ReductionStep, Pattern)>,
    pub final_pattern: Pattern,
}

impl ReductionChain {
    pub fn implied_exponent(&self) -> usize {
        self.steps.len()
    }

    /// Re-applies every step from the start, checking each precondition.
    pub fn replay(&self) -> Result<Pattern, AnalysisError> {
        let mut cur = self.start.clone();
        for (step, expect) in &self.steps {
            cur = apply_reduction(&cur, step)?;
            if cur != *expect {
                return Err(AnalysisError::InvalidStep);
            }
        }
        Ok(cur)
    }
}

/// Shortest chain of reductions from `p` to any pattern of weight at most
/// `target_weight`, by breadth-first search over reduced patterns
/// (deduplicated up to exact equality). `None` when unreachable.
pub fn reduce_chain(
    p: &Pattern,
    target_weight: u64,
) -> Result<Option<ReductionChain>, AnalysisError> {
    if target_weight < 1 {
        return Err(AnalysisError::DegeneratePattern);
    }
    struct Node {
        pattern: Pattern,
        parent: Option<(usize, ReductionStep)>,
    }
    let mut arena: Vec<Node> = alloc::vec![Node { pattern: p.clone(), parent: None }];
    let mut seen: BTreeSet<Pattern> = BTreeSet::new();
    seen.insert(p.clone());
    let mut queue: VecDeque<usize> = VecDeque::new();
    queue.push_back(0);
    while let Some(idx) = queue.pop_front() {
        if arena[idx].pattern.weight() <= target_weight {
            // Rebuild the path.
            let mut rev: Vec<(ReductionStep, Pattern)> = Vec::new();
            let mut at = idx;
            while let Some((parent, step)) = arena[at].parent {
                rev.push((step, arena[at].pattern.clone()));
                at = parent;
            }
            rev.reverse();
            let chain = ReductionChain {
                start: p.clone(),
                final_pattern: arena[idx].pattern.clone(),
                steps: rev,
            };
            debug_assert_eq!(chain.replay().as_ref(), Ok(&chain.final_pattern));
            return Ok(Some(chain));
        }
        let steps = find_reductions(&arena[idx].pattern);
        for step in steps {
            let next = apply_reduction(&arena[idx].pattern, &step).expect("found steps are valid");
            if seen.insert(next.clone()) {
                if seen.len() > CHAIN_SEARCH_CAP {
                    return Err(AnalysisError::SearchBudget { explored: seen.len() });
                }
                arena.push(Node { pattern: next, parent: Some((idx, step)) });
                queue.push_back(arena.len() - 1);
            }
        }
    }
    Ok(None)
}
