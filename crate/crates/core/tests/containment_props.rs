//! Property tests pitting the containment engines against the subset
//! oracle and against each other.

use proptest::prelude::*;

use exmat_core::containment::{
    contains, contains_naive, enumerate_occurrences, find_witness, Embedding,
};
use exmat_core::matrix::BitMatrix;
use exmat_core::pattern::{Pattern, Transform};

/// Arbitrary pattern on an `rows x cols` grid with at least one 1.
fn pattern_strategy(max_dim: u32) -> impl Strategy<Value = Pattern> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(|(rows, cols)| {
            let cells = (rows * cols) as usize;
            (Just(rows), Just(cols), proptest::bits::u32::between(0, cells))
        })
        .prop_filter_map("need at least one 1", |(rows, cols, mask)| {
            let pts: Vec<(u32, u32)> = (0..rows * cols)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b / cols + 1, b % cols + 1))
                .collect();
            if pts.is_empty() {
                None
            } else {
                Some(Pattern::from_points(rows, cols, pts).unwrap())
            }
        })
}

fn host_strategy(max_n: u64) -> impl Strategy<Value = BitMatrix> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), (n * n) as usize)))
        .prop_map(|(n, bits)| {
            let mut m = BitMatrix::zeros(n).unwrap();
            for (d, &b) in bits.iter().enumerate() {
                if b {
                    m.set(d as u64 / n + 1, d as u64 % n + 1, true);
                }
            }
            m
        })
}

/// Brute-force enumeration of every embedding by sweeping all strictly
/// increasing row and column maps.
fn enumerate_brute(p: &Pattern, host: &BitMatrix) -> Vec<Embedding> {
    let n = host.side();
    let (k, l) = (p.rows() as usize, p.cols() as usize);
    if k as u64 > n || l as u64 > n {
        return Vec::new();
    }
    fn combos(n: u64, k: usize) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur: Vec<u64> = (1..=k as u64).collect();
        loop {
            out.push(cur.clone());
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < n - (k - 1 - i) as u64 {
                    cur[i] += 1;
                    for j in i + 1..k {
                        cur[j] = cur[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    let mut out = Vec::new();
    for rows in combos(n, k) {
        for cols in combos(n, l) {
            if p.ones().iter().all(|&(r, c)| host.get(rows[r as usize - 1], cols[c as usize - 1]))
            {
                out.push(Embedding { row_map: rows.clone(), col_map: cols });
            }
        }
    }
    out
}

proptest! {
    /// The acceptance-grade equivalence: both engines agree with the
    /// subset-enumeration oracle.
    #[test]
    fn engines_match_oracle(p in pattern_strategy(3), host in host_strategy(8)) {
        let expect = contains_naive(&p, &host).unwrap();
        prop_assert_eq!(contains(&p, &host).unwrap(), expect);
        prop_assert_eq!(contains(&p, &host.to_sparse()).unwrap(), expect);
    }

    /// Exact embedding sets: dense engine, sparse engine, and the brute
    /// force all produce identical lexicographically sorted lists.
    #[test]
    fn enumeration_matches_brute_force(p in pattern_strategy(3), host in host_strategy(6)) {
        let mut brute = enumerate_brute(&p, &host);
        brute.sort();
        let dense = enumerate_occurrences(&p, &host, None).unwrap();
        prop_assert_eq!(&dense, &brute);
        let sparse = enumerate_occurrences(&p, &host.to_sparse(), None).unwrap();
        prop_assert_eq!(&sparse, &brute);
        for e in &dense {
            prop_assert!(e.validate(&p, &host).is_ok());
        }
    }

    /// Witnesses validate, and exist iff containment holds.
    #[test]
    fn witness_iff_contained(p in pattern_strategy(3), host in host_strategy(8)) {
        let c = contains(&p, &host).unwrap();
        let w = find_witness(&p, &host).unwrap();
        prop_assert_eq!(c, w.is_some());
        if let Some(w) = w {
            prop_assert!(w.validate(&p, &host).is_ok());
        }
        let ws = find_witness(&p, &host.to_sparse()).unwrap();
        prop_assert_eq!(c, ws.is_some());
    }

    /// Entrywise monotonicity: adding 1s to the host preserves containment.
    #[test]
    fn monotone_in_host(p in pattern_strategy(3), host in host_strategy(7), seed in any::<u64>()) {
        if contains(&p, &host).unwrap() {
            let n = host.side();
            let mut bigger = host.clone();
            let mut x = seed;
            for _ in 0..3 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                bigger.set(x % n + 1, (x >> 32) % n + 1, true);
            }
            prop_assert!(contains(&p, &bigger).unwrap());
        }
    }

    /// Symmetry equivariance under transpose and rot180.
    #[test]
    fn symmetry_equivariance(p in pattern_strategy(3), host in host_strategy(7)) {
        let c = contains(&p, &host).unwrap();
        prop_assert_eq!(
            c,
            contains(&p.transform(Transform::Transpose), &host.transpose()).unwrap()
        );
        prop_assert_eq!(
            c,
            contains(&p.transform(Transform::Rot180), &host.rot180()).unwrap()
        );
    }

    /// Reflexivity: every pattern embeds into itself padded square.
    #[test]
    fn reflexive_on_padded_self(p in pattern_strategy(4)) {
        let n = p.rows().max(p.cols()) as u64;
        let host = BitMatrix::from_pattern(&p, n).unwrap();
        prop_assert!(contains(&p, &host).unwrap());
        prop_assert!(contains(&p, &host.to_sparse()).unwrap());
    }
}
