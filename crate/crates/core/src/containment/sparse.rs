//! Anchored line-search containment engine for sparse hosts.
//!
//! Blind row-by-row scans die on hosts with hundreds of thousands of rows:
//! the weakly constrained middle rows of a pattern admit almost every host
//! row. Instead this engine assigns whole pattern *lines* (rows or columns)
//! in a most-constrained-first order computed from the pattern alone. Once
//! any line of a connected component is placed, every further line draws
//! its candidates from the host's per-line coordinate lists (at most the
//! maximum line weight of the host, k^t for the block construction), so the
//! full-host scan happens only for the first line of each component.

use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::SparseMatrix;
use crate::pattern::Pattern;

use super::{ContainmentError, Embedding, Goal, Outcome, SearchOptions, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    Row,
    Col,
}

pub(super) fn search(
    p: &Pattern,
    host: &SparseMatrix,
    goal: Goal,
    opts: &SearchOptions,
) -> Result<Outcome, ContainmentError> {
    let shape = Shape::new(p);
    let plan = plan_order(&shape);

    // Column-major copy for rows-of-column candidate lists.
    let mut col_major: Vec<(u64, u64)> = host.entries().iter().map(|&(r, c)| (c, r)).collect();
    col_major.sort_unstable();

    let row_groups = Groups::build(host.entries());
    let col_groups = Groups::build(&col_major);

    let mut ctx = SpCtx {
        host,
        shape: &shape,
        plan: &plan,
        col_major: &col_major,
        row_groups,
        col_groups,
        n: host.side(),
        budget: opts.node_budget,
        goal,
        out: Outcome::default(),
        row_assign: vec![None; shape.kp as usize],
        col_assign: vec![None; shape.lp as usize],
        limit_hit: false,
    };
    ctx.dfs(0)?;

    if matches!(goal, Goal::Enumerate { .. }) {
        ctx.out.embeddings.sort_unstable();
        debug_assert!(ctx.out.embeddings.windows(2).all(|w| w[0] < w[1]));
    }
    Ok(ctx.out)
}

/// Grouping of a sorted coordinate list by its first component.
struct Groups {
    keys: Vec<u64>,
    ranges: Vec<(usize, usize)>,
}

impl Groups {
    fn build(sorted: &[(u64, u64)]) -> Groups {
        let mut keys = Vec::new();
        let mut ranges = Vec::new();
        let mut i = 0;
        while i < sorted.len() {
            let key = sorted[i].0;
            let start = i;
            while i < sorted.len() && sorted[i].0 == key {
                i += 1;
            }
            keys.push(key);
            ranges.push((start, i));
        }
        Groups { keys, ranges }
    }

    fn range_of(&self, key: u64) -> Option<(usize, usize)> {
        self.keys.binary_search(&key).ok().map(|i| self.ranges[i])
    }
}

/// Deterministic assignment order over essential pattern lines: heaviest
/// line first, then always the line with the most 1s crossing already
/// planned lines (ties: more 1s total, rows before columns, smaller index).
fn plan_order(shape: &Shape) -> Vec<(Axis, u32)> {
    let mut remaining: Vec<(Axis, u32)> = shape
        .essential_rows
        .iter()
        .map(|&r| (Axis::Row, r))
        .chain(shape.essential_cols.iter().map(|&c| (Axis::Col, c)))
        .collect();
    let mut chosen: Vec<(Axis, u32)> = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best = 0;
        let mut best_key = (0u32, 0u32, 0u8, u32::MAX);
        for (i, &(axis, pos)) in remaining.iter().enumerate() {
            let ones = match axis {
                Axis::Row => &shape.row_ones[pos as usize - 1],
                Axis::Col => &shape.col_ones[pos as usize - 1],
            };
            let score = ones
                .iter()
                .filter(|&&perp| {
                    let want = match axis {
                        Axis::Row => (Axis::Col, perp),
                        Axis::Col => (Axis::Row, perp),
                    };
                    chosen.contains(&want)
                })
                .count() as u32;
            let key =
                (score, ones.len() as u32, if axis == Axis::Row { 1 } else { 0 }, u32::MAX - pos);
            if key > best_key {
                best_key = key;
                best = i;
            }
        }
        chosen.push(remaining.swap_remove(best));
    }
    chosen
}

struct SpCtx<'a> {
    host: &'a SparseMatrix,
    shape: &'a Shape,
    plan: &'a [(Axis, u32)],
    col_major: &'a [(u64, u64)],
    row_groups: Groups,
    col_groups: Groups,
    n: u64,
    budget: u64,
    goal: Goal,
    out: Outcome,
    row_assign: Vec<Option<u64>>,
    col_assign: Vec<Option<u64>>,
    limit_hit: bool,
}

impl<'a> SpCtx<'a> {
    fn tick(&mut self) -> Result<(), ContainmentError> {
        self.out.nodes += 1;
        if self.out.nodes > self.budget {
            return Err(ContainmentError::BudgetExceeded { visited: self.out.nodes });
        }
        Ok(())
    }

    /// Host index window for pattern position `pos`, reserving room for
    /// every other pattern line of the axis (assigned or not).
    fn window(&self, axis: Axis, pos: u32) -> (u64, u64) {
        let (assign, len) = match axis {
            Axis::Row => (&self.row_assign, self.shape.kp),
            Axis::Col => (&self.col_assign, self.shape.lp),
        };
        let mut lo = pos as u64;
        let mut hi = self.n.saturating_sub((len - pos) as u64);
        for (i, slot) in assign.iter().enumerate() {
            let p2 = i as u32 + 1;
            if let Some(h2) = slot {
                if p2 < pos {
                    lo = lo.max(h2.saturating_add((pos - p2) as u64));
                } else if p2 > pos {
                    hi = hi.min(h2.saturating_sub((p2 - pos) as u64));
                }
            }
        }
        (lo, hi)
    }

    fn stop_early(&self) -> bool {
        self.limit_hit || (self.out.found && matches!(self.goal, Goal::Decide | Goal::Witness))
    }

    fn dfs(&mut self, step: usize) -> Result<(), ContainmentError> {
        if self.stop_early() {
            return Ok(());
        }
        if step == self.plan.len() {
            return self.leaf();
        }
        let (axis, pos) = self.plan[step];
        let (lo, hi) = self.window(axis, pos);
        if lo > hi || hi == 0 {
            return Ok(());
        }
        let ones = match axis {
            Axis::Row => &self.shape.row_ones[pos as usize - 1],
            Axis::Col => &self.shape.col_ones[pos as usize - 1],
        };
        // Crossings into already-assigned perpendicular lines.
        let crossings: Vec<u64> = ones
            .iter()
            .filter_map(|&perp| match axis {
                Axis::Row => self.col_assign[perp as usize - 1],
                Axis::Col => self.row_assign[perp as usize - 1],
            })
            .collect();

        if crossings.is_empty() {
            self.scan_component_anchor(step, axis, pos, ones.len(), lo, hi)
        } else {
            self.scan_crossings(step, axis, pos, &crossings, lo, hi)
        }
    }

    /// Candidates for a line whose crossings are all unassigned: every
    /// present host line in the window with enough 1s.
    fn scan_component_anchor(
        &mut self,
        step: usize,
        axis: Axis,
        pos: u32,
        needed: usize,
        lo: u64,
        hi: u64,
    ) -> Result<(), ContainmentError> {
        let groups = match axis {
            Axis::Row => &self.row_groups,
            Axis::Col => &self.col_groups,
        };
        let start = groups.keys.partition_point(|&k| k < lo);
        let total = groups.keys.len();
        for i in start..total {
            let groups = match axis {
                Axis::Row => &self.row_groups,
                Axis::Col => &self.col_groups,
            };
            let h = groups.keys[i];
            let (gs, ge) = groups.ranges[i];
            if h > hi || self.stop_early() {
                break;
            }
            self.tick()?;
            if ge - gs < needed {
                continue;
            }
            self.assign(axis, pos, Some(h));
            self.dfs(step + 1)?;
            self.assign(axis, pos, None);
        }
        Ok(())
    }

    /// Candidates filtered through assigned crossings: iterate the shortest
    /// crossing line's coordinate list, check the rest by direct lookup.
    fn scan_crossings(
        &mut self,
        step: usize,
        axis: Axis,
        pos: u32,
        crossings: &[u64],
        lo: u64,
        hi: u64,
    ) -> Result<(), ContainmentError> {
        let groups = match axis {
            Axis::Row => &self.col_groups,
            Axis::Col => &self.row_groups,
        };
        let mut anchor: Option<(usize, usize)> = None;
        for &g in crossings {
            match groups.range_of(g) {
                Some((s, e)) => {
                    if anchor.is_none_or(|(as_, ae)| e - s < ae - as_) {
                        anchor = Some((s, e));
                    }
                }
                // An assigned crossing line with no 1s at all: dead branch.
                None => return Ok(()),
            }
        }
        let (s, e) = anchor.expect("crossings nonempty");
        // Both backing slices live as long as the host borrow, not `self`.
        let host: &'a SparseMatrix = self.host;
        let list: &'a [(u64, u64)] = match axis {
            Axis::Row => &self.col_major[s..e],
            Axis::Col => &host.entries()[s..e],
        };
        let start = list.partition_point(|&(_, h)| h < lo);
        for &(_, h) in &list[start..] {
            if h > hi || self.stop_early() {
                break;
            }
            self.tick()?;
            let hits = crossings.iter().all(|&g| match axis {
                Axis::Row => host.get(h, g),
                Axis::Col => host.get(g, h),
            });
            if !hits {
                continue;
            }
            self.assign(axis, pos, Some(h));
            self.dfs(step + 1)?;
            self.assign(axis, pos, None);
        }
        Ok(())
    }

    fn assign(&mut self, axis: Axis, pos: u32, value: Option<u64>) {
        match axis {
            Axis::Row => self.row_assign[pos as usize - 1] = value,
            Axis::Col => self.col_assign[pos as usize - 1] = value,
        }
    }

    fn leaf(&mut self) -> Result<(), ContainmentError> {
        self.out.found = true;
        match self.goal {
            Goal::Decide => Ok(()),
            Goal::Witness => {
                self.out.witness = Some(Embedding {
                    row_map: fill_minimal(&self.row_assign),
                    col_map: fill_minimal(&self.col_assign),
                });
                Ok(())
            }
            Goal::Enumerate { limit } => {
                let row_assign = self.row_assign.clone();
                let col_assign = self.col_assign.clone();
                let rows = self.expansions(&row_assign, self.shape.kp)?;
                let cols = self.expansions(&col_assign, self.shape.lp)?;
                for r in &rows {
                    for c in &cols {
                        self.tick()?;
                        self.out
                            .embeddings
                            .push(Embedding { row_map: r.clone(), col_map: c.clone() });
                        if let Some(limit) = limit {
                            if self.out.embeddings.len() as u64 >= limit {
                                self.limit_hit = true;
                                return Ok(());
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    /// All strictly increasing completions of a partial line map, in
    /// lexicographic order. Lines with 1s are already fixed; only zero
    /// lines vary.
    fn expansions(
        &mut self,
        assign: &[Option<u64>],
        len: u32,
    ) -> Result<Vec<Vec<u64>>, ContainmentError> {
        let mut out = Vec::new();
        let mut acc: Vec<u64> = Vec::with_capacity(len as usize);
        self.expand_rec(assign, len, &mut acc, &mut out)?;
        Ok(out)
    }

    fn expand_rec(
        &mut self,
        assign: &[Option<u64>],
        len: u32,
        acc: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) -> Result<(), ContainmentError> {
        let pos = acc.len();
        if pos == len as usize {
            out.push(acc.clone());
            return Ok(());
        }
        let prev = acc.last().copied().unwrap_or(0);
        match assign[pos] {
            Some(h) => {
                debug_assert!(h > prev);
                acc.push(h);
                self.expand_rec(assign, len, acc, out)?;
                acc.pop();
            }
            None => {
                // Upper bound: room for the remaining positions, tightened by
                // the next fixed value.
                let mut hi = self.n - (len as usize - 1 - pos) as u64;
                for (off, slot) in assign[pos + 1..].iter().enumerate() {
                    if let Some(h2) = slot {
                        hi = hi.min(h2 - (off as u64 + 1));
                        break;
                    }
                }
                let mut v = prev + 1;
                while v <= hi {
                    self.tick()?;
                    acc.push(v);
                    self.expand_rec(assign, len, acc, out)?;
                    acc.pop();
                    v += 1;
                }
            }
        }
        Ok(())
    }
}

/// Minimal strictly increasing completion of a partial line map.
fn fill_minimal(assign: &[Option<u64>]) -> Vec<u64> {
    let mut out = Vec::with_capacity(assign.len());
    let mut prev = 0u64;
    for slot in assign {
        let v = match slot {
            Some(h) => *h,
            None => prev + 1,
        };
        debug_assert!(v > prev);
        out.push(v);
        prev = v;
    }
    out
}
