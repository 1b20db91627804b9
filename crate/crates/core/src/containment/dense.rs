//! Row-scan containment engine for dense bitset hosts.
//!
//! Pattern rows are mapped to host rows in increasing order. After each
//! assignment the minimal feasible column map for the constraints collected
//! so far is recomputed greedily with "next set bit at or after" queries;
//! constraints only tighten as rows are added, so a greedy failure prunes
//! the whole branch. Host rows whose popcount is below the pattern row's
//! weight are skipped, and windows reserve room for unassigned lines.

use alloc::vec::Vec;

use crate::matrix::BitMatrix;
use crate::pattern::Pattern;

use super::{ContainmentError, Embedding, Goal, Outcome, SearchOptions, Shape};

pub(super) fn search(
    p: &Pattern,
    host: &BitMatrix,
    goal: Goal,
    opts: &SearchOptions,
) -> Result<Outcome, ContainmentError> {
    let shape = Shape::new(p);
    let mut ctx = Ctx {
        host,
        shape: &shape,
        n: host.side(),
        budget: opts.node_budget,
        out: Outcome::default(),
        goal,
        limit_hit: false,
    };
    match goal {
        Goal::Decide | Goal::Witness => {
            let mut hosts = Vec::with_capacity(shape.essential_rows.len());
            ctx.decide_rows(0, &mut hosts)?;
        }
        Goal::Enumerate { .. } => {
            let mut hosts = Vec::with_capacity(shape.kp as usize);
            ctx.enumerate_rows(&mut hosts)?;
        }
    }
    Ok(ctx.out)
}

struct Ctx<'a> {
    host: &'a BitMatrix,
    shape: &'a Shape,
    n: u64,
    budget: u64,
    out: Outcome,
    goal: Goal,
    limit_hit: bool,
}

impl<'a> Ctx<'a> {
    fn tick(&mut self) -> Result<(), ContainmentError> {
        self.out.nodes += 1;
        if self.out.nodes > self.budget {
            return Err(ContainmentError::BudgetExceeded { visited: self.out.nodes });
        }
        Ok(())
    }

    /// Minimal feasible column map under the 1-constraints of the assigned
    /// essential rows (`assigned[i]` hosts `essential_rows[i]`). Returns
    /// `None` when no strictly increasing in-range map exists.
    fn greedy_cols(&self, assigned: &[u64]) -> Option<Vec<u64>> {
        let lp = self.shape.lp as usize;
        let mut cols = Vec::with_capacity(lp);
        let mut prev = 0u64;
        for j in 0..lp {
            let hi = self.n - (lp - 1 - j) as u64;
            let mut c = prev + 1;
            loop {
                if c > hi {
                    return None;
                }
                let mut moved = false;
                for (i, &er) in self.shape.essential_rows.iter().enumerate() {
                    if i >= assigned.len() {
                        break;
                    }
                    if !self.shape.col_ones[j].contains(&er) {
                        continue;
                    }
                    match self.host.next_one_at_or_after(assigned[i], c) {
                        Some(nc) if nc == c => {}
                        Some(nc) => {
                            c = nc;
                            moved = true;
                        }
                        None => return None,
                    }
                }
                if !moved {
                    break;
                }
            }
            if c > hi {
                return None;
            }
            cols.push(c);
            prev = c;
        }
        Some(cols)
    }

    /// Decision/witness search over essential rows only.
    fn decide_rows(&mut self, s: usize, assigned: &mut Vec<u64>) -> Result<bool, ContainmentError> {
        let er = &self.shape.essential_rows;
        if s == er.len() {
            let cols = self.greedy_cols(assigned).expect("checked at every level");
            self.out.found = true;
            if matches!(self.goal, Goal::Witness) {
                self.out.witness = Some(Embedding {
                    row_map: fill_lines(self.shape.kp, er, assigned),
                    col_map: cols,
                });
            }
            return Ok(true);
        }
        let pat_row = er[s];
        let weight = self.shape.row_ones[pat_row as usize - 1].len() as u64;
        let lo = if s == 0 {
            pat_row as u64
        } else {
            assigned[s - 1] + (pat_row - er[s - 1]) as u64
        };
        let hi = self.n - (self.shape.kp - pat_row) as u64;
        let mut r = lo;
        while r <= hi {
            self.tick()?;
            if self.host.row_weight_from(r, 1) >= weight {
                assigned.push(r);
                let feasible = self.greedy_cols(assigned).is_some();
                if feasible && self.decide_rows(s + 1, assigned)? {
                    assigned.pop();
                    return Ok(true);
                }
                assigned.pop();
            }
            r += 1;
        }
        Ok(false)
    }

    /// Exhaustive enumeration over all pattern rows (zero rows included),
    /// emitting embeddings in lexicographic `(row_map, col_map)` order.
    fn enumerate_rows(&mut self, assigned: &mut Vec<u64>) -> Result<(), ContainmentError> {
        if self.limit_hit {
            return Ok(());
        }
        let i = assigned.len();
        if i == self.shape.kp as usize {
            let mut cols = Vec::with_capacity(self.shape.lp as usize);
            return self.enumerate_cols(assigned, &mut cols);
        }
        let lo = if i == 0 { 1 } else { assigned[i - 1] + 1 };
        let hi = self.n - (self.shape.kp as usize - 1 - i) as u64;
        let mut r = lo;
        while r <= hi && !self.limit_hit {
            self.tick()?;
            assigned.push(r);
            // Prune on the essential prefix: constraints from assigned
            // essential rows must still admit a column map.
            let prefix: Vec<u64> = self
                .shape
                .essential_rows
                .iter()
                .filter(|&&er| er as usize <= assigned.len())
                .map(|&er| assigned[er as usize - 1])
                .collect();
            if self.greedy_cols(&prefix).is_some() {
                self.enumerate_rows(assigned)?;
            }
            assigned.pop();
            r += 1;
        }
        Ok(())
    }

    fn enumerate_cols(
        &mut self,
        rows: &[u64],
        cols: &mut Vec<u64>,
    ) -> Result<(), ContainmentError> {
        if self.limit_hit {
            return Ok(());
        }
        let j = cols.len();
        if j == self.shape.lp as usize {
            self.out.embeddings.push(Embedding { row_map: rows.to_vec(), col_map: cols.clone() });
            self.out.found = true;
            if let Goal::Enumerate { limit: Some(limit) } = self.goal {
                if self.out.embeddings.len() as u64 >= limit {
                    self.limit_hit = true;
                }
            }
            return Ok(());
        }
        let lo = if j == 0 { 1 } else { cols[j - 1] + 1 };
        let hi = self.n - (self.shape.lp as usize - 1 - j) as u64;
        let constraints = &self.shape.col_ones[j];
        let mut c = lo;
        while c <= hi && !self.limit_hit {
            self.tick()?;
            // Advance c to the next column satisfying every constraining row.
            let mut moved = false;
            for &pr in constraints {
                match self.host.next_one_at_or_after(rows[pr as usize - 1], c) {
                    Some(nc) if nc == c => {}
                    Some(nc) => {
                        c = nc;
                        moved = true;
                    }
                    None => return Ok(()),
                }
            }
            if moved {
                continue;
            }
            if c > hi {
                break;
            }
            cols.push(c);
            self.enumerate_cols(rows, cols)?;
            cols.pop();
            c += 1;
        }
        Ok(())
    }
}

/// Decides whether `p` embeds in `host` with pattern cell `(pi, pj)` pinned
/// onto host cell `(hr, hc)`. The pinned pattern cell must be a 1 of `p`.
///
/// This is the incremental P-freeness primitive: a matrix that was P-free
/// gains an occurrence of `p` after setting a cell iff some embedding maps
/// a pattern 1 onto that cell.
pub(crate) fn contains_anchored(
    p: &Pattern,
    host: &BitMatrix,
    (pi, pj): (u32, u32),
    (hr, hc): (u64, u64),
) -> bool {
    debug_assert!(p.get(pi, pj) && host.get(hr, hc));
    let n = host.side();
    if p.rows() as u64 > n || p.cols() as u64 > n {
        return false;
    }
    // Room around the pin on both axes.
    if hr < pi as u64 || n - hr < (p.rows() - pi) as u64 {
        return false;
    }
    if hc < pj as u64 || n - hc < (p.cols() - pj) as u64 {
        return false;
    }
    let shape = Shape::new(p);
    let mut assigned = Vec::with_capacity(shape.essential_rows.len());
    anchored_rows(&shape, host, n, (pi, pj), (hr, hc), 0, &mut assigned)
}

fn anchored_rows(
    shape: &Shape,
    host: &BitMatrix,
    n: u64,
    pin: (u32, u32),
    pin_host: (u64, u64),
    s: usize,
    assigned: &mut Vec<u64>,
) -> bool {
    if s == shape.essential_rows.len() {
        return anchored_cols_prefix(shape, host, n, pin, pin_host, assigned);
    }
    let pat_row = shape.essential_rows[s];
    let mut lo = if s == 0 {
        pat_row as u64
    } else {
        assigned[s - 1] + (pat_row - shape.essential_rows[s - 1]) as u64
    };
    let mut hi = n - (shape.kp - pat_row) as u64;
    // Tighten around the pinned row.
    if pat_row == pin.0 {
        lo = lo.max(pin_host.0);
        hi = hi.min(pin_host.0);
    } else if pat_row < pin.0 {
        hi = hi.min(pin_host.0.saturating_sub((pin.0 - pat_row) as u64));
    } else {
        lo = lo.max(pin_host.0 + (pat_row - pin.0) as u64);
    }
    let mut r = lo;
    while r <= hi {
        assigned.push(r);
        if anchored_cols_prefix(shape, host, n, pin, pin_host, assigned)
            && anchored_rows(shape, host, n, pin, pin_host, s + 1, assigned)
        {
            assigned.pop();
            return true;
        }
        assigned.pop();
        r += 1;
    }
    false
}

/// Greedy minimal column map under the constraints of the assigned
/// essential-row prefix, with column `pin.1` forced to `pin_host.1`.
fn anchored_cols_prefix(
    shape: &Shape,
    host: &BitMatrix,
    n: u64,
    pin: (u32, u32),
    pin_host: (u64, u64),
    assigned: &[u64],
) -> bool {
    let lp = shape.lp as usize;
    let mut prev = 0u64;
    for j in 0..lp {
        let hi = n - (lp - 1 - j) as u64;
        let pinned_here = j as u32 + 1 == pin.1;
        let mut c = if pinned_here { pin_host.1 } else { prev + 1 };
        if pinned_here && c < prev + 1 {
            return false;
        }
        loop {
            if c > hi {
                return false;
            }
            let mut moved = false;
            for (i, &er) in shape.essential_rows.iter().enumerate() {
                if i >= assigned.len() {
                    break;
                }
                if !shape.col_ones[j].contains(&er) {
                    continue;
                }
                match host.next_one_at_or_after(assigned[i], c) {
                    Some(nc) if nc == c => {}
                    Some(nc) => {
                        if pinned_here {
                            return false;
                        }
                        c = nc;
                        moved = true;
                    }
                    None => return false,
                }
            }
            if !moved {
                break;
            }
        }
        if c > hi {
            return false;
        }
        prev = c;
    }
    true
}

/// Completes an essential-line assignment to a full strictly increasing
/// line map, filling lines without 1s minimally.
pub(super) fn fill_lines(len: u32, essential: &[u32], assigned: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(len as usize);
    let mut next_essential = 0;
    let mut prev = 0u64;
    for pos in 1..=len {
        let v = if next_essential < essential.len() && essential[next_essential] == pos {
            let v = assigned[next_essential];
            next_essential += 1;
            v
        } else {
            prev + 1
        };
        debug_assert!(v > prev);
        out.push(v);
        prev = v;
    }
    out
}
