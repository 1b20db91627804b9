use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::pattern::Transform;

fn pat(rows: u32, cols: u32, pts: &[(u32, u32)]) -> Pattern {
    Pattern::from_points(rows, cols, pts.iter().copied()).unwrap()
}

fn dense(n: u64, pts: &[(u64, u64)]) -> BitMatrix {
    let mut m = BitMatrix::zeros(n).unwrap();
    for &(r, c) in pts {
        m.set(r, c, true);
    }
    m
}

#[test]
fn single_one_in_anything() {
    let p = pat(1, 1, &[(1, 1)]);
    let a = dense(4, &[(3, 2)]);
    assert!(contains(&p, &a).unwrap());
    assert!(contains(&p, &a.to_sparse()).unwrap());
    let empty = BitMatrix::zeros(4).unwrap();
    assert!(!contains(&p, &empty).unwrap());
    assert!(!contains(&p, &empty.to_sparse()).unwrap());
}

#[test]
fn identity2_needs_an_increasing_pair() {
    let p = Pattern::identity(2).unwrap();
    let anti = dense(2, &[(1, 2), (2, 1)]);
    assert!(!contains(&p, &anti).unwrap());
    assert!(!contains(&p, &anti.to_sparse()).unwrap());
    let diag = dense(2, &[(1, 1), (2, 2)]);
    assert!(contains(&p, &diag).unwrap());
    assert!(contains(&p, &diag.to_sparse()).unwrap());
}

#[test]
fn degenerate_pattern_is_refused() {
    let p = pat(2, 2, &[]);
    let a = BitMatrix::all_ones(3).unwrap();
    assert_eq!(contains(&p, &a), Err(ContainmentError::DegeneratePattern));
    assert_eq!(find_witness(&p, &a), Err(ContainmentError::DegeneratePattern));
    assert_eq!(contains_naive(&p, &a), Err(ContainmentError::DegeneratePattern));
}

#[test]
fn oversized_pattern_is_false_not_error() {
    let p = pat(4, 1, &[(1, 1)]);
    let a = BitMatrix::all_ones(3).unwrap();
    assert!(!contains(&p, &a).unwrap());
    assert!(!contains_naive(&p, &a).unwrap());
    assert!(find_witness(&p, &a.to_sparse()).unwrap().is_none());
}

#[test]
fn naive_oracle_guard() {
    let p = pat(1, 1, &[(1, 1)]);
    let a = BitMatrix::zeros(13).unwrap();
    assert_eq!(contains_naive(&p, &a), Err(ContainmentError::OracleScale { side: 13, max: 12 }));
}

#[test]
fn pattern_equal_to_host_embeds_identically() {
    let p = crate::pattern::r1();
    let host = BitMatrix::from_pattern(&p, 3).unwrap();
    assert!(contains(&p, &host).unwrap());
    assert!(contains_naive(&p, &host).unwrap());
    let w = find_witness(&p, &host).unwrap().unwrap();
    assert_eq!(w.row_map, vec![1, 2, 3]);
    assert_eq!(w.col_map, vec![1, 2, 3]);
}

#[test]
fn witness_for_single_one() {
    let p = Pattern::one_row(1).unwrap();
    let a = dense(5, &[(3, 4)]);
    for w in [
        find_witness(&p, &a).unwrap().unwrap(),
        find_witness(&p, &a.to_sparse()).unwrap().unwrap(),
    ] {
        assert_eq!(w.row_map, vec![3]);
        assert_eq!(w.col_map, vec![4]);
        w.validate(&p, &a).unwrap();
    }
}

#[test]
fn enumeration_counts_on_all_ones() {
    // one_row(2) in the 3x3 all-ones host: 3 rows x C(3,2) column pairs.
    let host = BitMatrix::all_ones(3).unwrap();
    let p = Pattern::one_row(2).unwrap();
    let occ = enumerate_occurrences(&p, &host, None).unwrap();
    assert_eq!(occ.len(), 9);
    // identity(2): C(3,2)^2 = 9.
    let occ = enumerate_occurrences(&Pattern::identity(2).unwrap(), &host, None).unwrap();
    assert_eq!(occ.len(), 9);
    // single 1 in the 3x3 identity: one embedding per diagonal cell.
    let id3 = dense(3, &[(1, 1), (2, 2), (3, 3)]);
    let occ = enumerate_occurrences(&pat(1, 1, &[(1, 1)]), &id3, None).unwrap();
    assert_eq!(occ.len(), 3);
    assert_eq!(occ[0].row_map, vec![1]);
    assert_eq!(occ[2].col_map, vec![3]);
}

#[test]
fn enumeration_is_lex_sorted_and_limit_prefixes() {
    let host = BitMatrix::all_ones(4).unwrap();
    let p = pat(2, 2, &[(1, 1), (2, 2)]);
    for all in [
        enumerate_occurrences(&p, &host, None).unwrap(),
        enumerate_occurrences(&p, &host.to_sparse(), None).unwrap(),
    ] {
        assert!(all.windows(2).all(|w| (&w[0].row_map, &w[0].col_map) < (&w[1].row_map, &w[1].col_map)));
        let three = enumerate_occurrences(&p, &host, Some(3)).unwrap();
        assert_eq!(three[..], all[..3]);
    }
}

#[test]
fn engines_agree_with_each_other_and_expand_zero_lines() {
    // A pattern with an all-zero middle column and row.
    let p = pat(3, 3, &[(1, 1), (3, 3)]);
    let host = BitMatrix::all_ones(4).unwrap();
    let d = enumerate_occurrences(&p, &host, None).unwrap();
    let s = enumerate_occurrences(&p, &host.to_sparse(), None).unwrap();
    assert_eq!(d, s);
    // Brute-force count: row maps = col maps = C(4,3) = 4 each, with the
    // pattern 1s at corners always present in the all-ones host.
    assert_eq!(d.len(), 16);
    for e in &d {
        e.validate(&p, &host).unwrap();
    }
}

#[test]
fn budget_exhaustion_reports_error() {
    let host = BitMatrix::all_ones(8).unwrap();
    let p = pat(2, 2, &[(1, 1), (2, 2)]);
    let opts = SearchOptions { node_budget: 3 };
    assert!(matches!(
        enumerate_occurrences_with(&p, &host, None, &opts),
        Err(ContainmentError::BudgetExceeded { .. })
    ));
}

#[test]
fn embedding_validator_rejects_bad_maps() {
    let p = Pattern::identity(2).unwrap();
    let host = dense(3, &[(1, 1), (2, 2)]);
    let good = Embedding { row_map: vec![1, 2], col_map: vec![1, 2] };
    good.validate(&p, &host).unwrap();
    let wrong_len = Embedding { row_map: vec![1], col_map: vec![1, 2] };
    assert_eq!(wrong_len.validate(&p, &host), Err(EmbeddingViolation::WrongLength));
    let not_incr = Embedding { row_map: vec![2, 2], col_map: vec![1, 2] };
    assert_eq!(not_incr.validate(&p, &host), Err(EmbeddingViolation::NotStrictlyIncreasing));
    let out = Embedding { row_map: vec![1, 4], col_map: vec![1, 2] };
    assert_eq!(out.validate(&p, &host), Err(EmbeddingViolation::OutOfRange { index: 4 }));
    let missing = Embedding { row_map: vec![1, 3], col_map: vec![1, 3] };
    assert!(matches!(
        missing.validate(&p, &host),
        Err(EmbeddingViolation::MissingOne { .. })
    ));
}

#[test]
fn anchored_check_matches_full_contains() {
    // Setting one cell in a P-free matrix creates an occurrence iff the
    // anchored check fires for some pattern 1.
    let patterns = [
        Pattern::identity(2).unwrap(),
        Pattern::one_row(2).unwrap(),
        pat(2, 2, &[(1, 2), (2, 1)]),
        crate::pattern::r2(),
    ];
    let mut sampler = crate::sampling::Sampler::new(99);
    for p in &patterns {
        let mut m = BitMatrix::zeros(6).unwrap();
        for _ in 0..24 {
            let r = sampler.below(6) + 1;
            let c = sampler.below(6) + 1;
            if m.get(r, c) {
                continue;
            }
            m.set(r, c, true);
            let anchored =
                p.ones().iter().any(|&(pi, pj)| dense::contains_anchored(p, &m, (pi, pj), (r, c)));
            let full = contains(p, &m).unwrap();
            // m was P-free before, so full containment now == anchored hit.
            assert_eq!(anchored, full, "pattern {p:?} cell ({r},{c})");
            if full {
                m.set(r, c, false);
            }
        }
    }
}

#[test]
fn symmetry_equivariance_spot_checks() {
    let p = crate::pattern::r2();
    let host = dense(
        6,
        &[(1, 2), (1, 3), (1, 6), (2, 1), (2, 4), (3, 3), (4, 2), (5, 5), (6, 1), (6, 6)],
    );
    let c0 = contains(&p, &host).unwrap();
    assert_eq!(
        c0,
        contains(&p.transform(Transform::Transpose), &host.transpose()).unwrap()
    );
    assert_eq!(c0, contains(&p.transform(Transform::Rot180), &host.rot180()).unwrap());
}

/// Exhaustive equivalence of both engines against the subset oracle on a
/// dense grid of small cases.
#[test]
fn oracle_agreement_exhaustive_small() {
    let mut sampler = crate::sampling::Sampler::new(0xFEED);
    for _ in 0..400 {
        let pr = sampler.below(3) as u32 + 1;
        let pc = sampler.below(3) as u32 + 1;
        let mut pts = Vec::new();
        for r in 1..=pr {
            for c in 1..=pc {
                if sampler.below(3) == 0 {
                    pts.push((r, c));
                }
            }
        }
        if pts.is_empty() {
            continue;
        }
        let p = Pattern::from_points(pr, pc, pts).unwrap();
        let n = sampler.below(5) + 2; // 2..=6
        let mut m = BitMatrix::zeros(n).unwrap();
        for r in 1..=n {
            for c in 1..=n {
                if sampler.below(3) == 0 {
                    m.set(r, c, true);
                }
            }
        }
        let oracle = contains_naive(&p, &m).unwrap();
        assert_eq!(contains(&p, &m).unwrap(), oracle, "dense vs oracle\n{p:?}{m:?}");
        assert_eq!(contains(&p, &m.to_sparse()).unwrap(), oracle, "sparse vs oracle\n{p:?}{m:?}");
    }
}
