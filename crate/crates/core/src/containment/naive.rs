//! Subset-enumeration containment oracle. Exponential and proud of it.

use alloc::vec::Vec;

use crate::pattern::Pattern;

use super::Host;

/// Tries every strictly increasing choice of `k` host rows and `l` host
/// columns. Caller guarantees the pattern fits and the host is tiny.
pub(super) fn contains<H: Host>(p: &Pattern, host: &H) -> bool {
    let n = host.side();
    let k = p.rows() as usize;
    let l = p.cols() as usize;
    let mut rows: Vec<u64> = (1..=k as u64).collect();
    loop {
        let mut cols: Vec<u64> = (1..=l as u64).collect();
        loop {
            if p.ones().iter().all(|&(r, c)| {
                host.get(rows[r as usize - 1], cols[c as usize - 1])
            }) {
                return true;
            }
            if !next_combination(&mut cols, n) {
                break;
            }
        }
        if !next_combination(&mut rows, n) {
            return false;
        }
    }
}

/// Advances a strictly increasing combination over `1..=n`; returns false
/// after the last one.
fn next_combination(combo: &mut [u64], n: u64) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - 1 - i) as u64 {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
