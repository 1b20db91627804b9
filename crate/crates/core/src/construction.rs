//! The lexicographic block construction `A_t` and its companion patterns.
//!
//! Index vectors live in `I = [0, k^t - 1]^(t*k)`, read as `t` blocks of `k`
//! coordinates over an alphabet of size `m = k^t`, ordered lexicographically
//! with the first coordinate most significant. For every tuple
//! `(j_1, ..., j_t) in [1, k]^t` there is one eligible offset vector that is
//! zero everywhere except coordinate `(r, j_r)`, which holds the angle
//! encoding of the prefix `(j_1, ..., j_{r-1})`. The matrix `A_t` has a 1 at
//! `(a, b)` exactly when `b - a` is an eligible offset.
//!
//! Coordinates are 0-based here even though offsets are built from 1-based
//! tuples: offset vectors contain genuine zero entries, which do not fit a
//! strictly 1-based alphabet. Counting is unaffected — the in-bounds test
//! for `b = a + v` is that every coordinate stays below `m`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::SparseMatrix;
use crate::pattern::Pattern;

/// Default ceiling on `n` for materializing `A_t`.
pub const DEFAULT_BUILD_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    /// `t >= 2` and `k >= 2` are required.
    ParamRange { t: u32, k: u32 },
    /// `n = k^(t^2 * k)` does not fit in 64 bits; the build is refused.
    Overflow { t: u32, k: u32 },
    /// An angle prefix entry or offset tuple entry lies outside `[1, k]`,
    /// or an index is outside its range.
    Bounds,
    /// `type(a, b)` is undefined for equal vectors.
    TypeUndefined,
    /// Materializing the matrix would exceed the configured cap.
    ResourceCap { n: u64, cap: u64 },
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::ParamRange { t, k } => {
                write!(f, "construction needs t >= 2 and k >= 2, got t={t}, k={k}")
            }
            ConstructionError::Overflow { t, k } => {
                write!(f, "n = k^(t^2 k) overflows 64 bits for t={t}, k={k}; build refused")
            }
            ConstructionError::Bounds => write!(f, "value out of range"),
            ConstructionError::TypeUndefined => write!(f, "type(a, b) undefined for a == b"),
            ConstructionError::ResourceCap { n, cap } => {
                write!(f, "matrix side n={n} exceeds build cap {cap}")
            }
        }
    }
}

impl core::error::Error for ConstructionError {}

/// Sizes of one `A_t` instance: `t` blocks of `k` coordinates over the
/// alphabet `[0, m-1]`, `m = k^t`, side `n = m^(t*k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    t: u32,
    k: u32,
    m: u64,
    n: u64,
}

impl ConstructionParams {
    pub fn new(t: u32, k: u32) -> Result<ConstructionParams, ConstructionError> {
        if t < 2 || k < 2 {
            return Err(ConstructionError::ParamRange { t, k });
        }
        let m = (k as u64)
            .checked_pow(t)
            .ok_or(ConstructionError::Overflow { t, k })?;
        let tk = t.checked_mul(k).ok_or(ConstructionError::Overflow { t, k })?;
        let n = m.checked_pow(tk).ok_or(ConstructionError::Overflow { t, k })?;
        Ok(ConstructionParams { t, k, m, n })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Coordinate alphabet size `k^t`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Matrix side `m^(t*k) = k^(t^2 k)`.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn block_count(&self) -> u32 {
        self.t
    }

    pub fn block_len(&self) -> u32 {
        self.k
    }

    pub fn coords_len(&self) -> usize {
        (self.t * self.k) as usize
    }

    /// Mixed-radix rank in `[0, n-1]`, first coordinate most significant;
    /// equals the lexicographic position of the vector in `I`.
    pub fn index_rank(&self, v: &IndexVector) -> u64 {
        debug_assert_eq!(v.coords.len(), self.coords_len());
        v.coords.iter().fold(0u64, |acc, &c| acc * self.m + c as u64)
    }

    pub fn index_unrank(&self, rank: u64) -> Result<IndexVector, ConstructionError> {
        if rank >= self.n {
            return Err(ConstructionError::Bounds);
        }
        let len = self.coords_len();
        let mut coords = vec![0u32; len];
        let mut r = rank;
        for i in (0..len).rev() {
            coords[i] = (r % self.m) as u32;
            r /= self.m;
        }
        Ok(IndexVector { coords })
    }

    /// First block (1-based) where `a` and `b` differ.
    pub fn type_of(&self, a: &IndexVector, b: &IndexVector) -> Result<u32, ConstructionError> {
        let k = self.k as usize;
        for block in 0..self.t as usize {
            if a.coords[block * k..(block + 1) * k] != b.coords[block * k..(block + 1) * k] {
                return Ok(block as u32 + 1);
            }
        }
        Err(ConstructionError::TypeUndefined)
    }

    /// First coordinate where `a` and `b` differ, as 1-based
    /// `(block, position)`; `None` when equal.
    pub fn first_diff_coord(&self, a: &IndexVector, b: &IndexVector) -> Option<(u32, u32)> {
        let k = self.k;
        a.coords
            .iter()
            .zip(&b.coords)
            .position(|(x, y)| x != y)
            .map(|i| (i as u32 / k + 1, i as u32 % k + 1))
    }

    /// Builds an index vector from explicit coordinates.
    pub fn index_from_coords(&self, coords: &[u32]) -> Result<IndexVector, ConstructionError> {
        if coords.len() != self.coords_len() || coords.iter().any(|&c| c as u64 >= self.m) {
            return Err(ConstructionError::Bounds);
        }
        Ok(IndexVector { coords: coords.to_vec() })
    }
}

/// An element of `I`: `t*k` coordinates in `[0, m-1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndexVector {
    coords: Vec<u32>,
}

impl IndexVector {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Coordinate `(block, pos)`, both 1-based.
    pub fn coord(&self, params: &ConstructionParams, block: u32, pos: u32) -> u32 {
        self.coords[((block - 1) * params.k + (pos - 1)) as usize]
    }

    /// `self + v` if every coordinate stays below `m`, else `None`.
    pub fn add_offset(&self, params: &ConstructionParams, v: &OffsetVector) -> Option<IndexVector> {
        let mut coords = self.coords.clone();
        for &(idx, val) in &v.support {
            let s = coords[idx] + val;
            if s as u64 >= params.m {
                return None;
            }
            coords[idx] = s;
        }
        Some(IndexVector { coords })
    }

    /// `self - v` if every coordinate stays non-negative, else `None`.
    pub fn sub_offset(&self, params: &ConstructionParams, v: &OffsetVector) -> Option<IndexVector> {
        debug_assert_eq!(self.coords.len(), params.coords_len());
        let mut coords = self.coords.clone();
        for &(idx, val) in &v.support {
            if coords[idx] < val {
                return None;
            }
            coords[idx] -= val;
        }
        Some(IndexVector { coords })
    }
}

/// The fixed injective encoding from `[1,k]^r` to `[1, k^r]`:
/// `1 + sum (j_i - 1) * k^(r-i)`. The empty prefix encodes to 1.
pub fn angle(prefix: &[u32], k: u32) -> Result<u64, ConstructionError> {
    let mut acc = 0u64;
    for &j in prefix {
        if j < 1 || j > k {
            return Err(ConstructionError::Bounds);
        }
        acc = acc * k as u64 + (j - 1) as u64;
    }
    Ok(acc + 1)
}

/// An eligible offset `v[j_1, ..., j_t]`: zero outside its `t`-coordinate
/// support, with block `r` carrying the angle of the length-(r-1) prefix at
/// position `j_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetVector {
    j: Vec<u32>,
    /// `(flat coordinate index, value)` pairs, ascending by index.
    support: Vec<(usize, u32)>,
}

impl OffsetVector {
    pub fn tuple(&self) -> &[u32] {
        &self.j
    }

    /// Full realized coordinate vector (mostly zeros).
    pub fn coords(&self, params: &ConstructionParams) -> Vec<u32> {
        let mut coords = vec![0u32; params.coords_len()];
        for &(idx, val) in &self.support {
            coords[idx] = val;
        }
        coords
    }

    /// Rank of the realized vector; since offsets add without carries when
    /// in bounds, `rank(a + v) = rank(a) + rank_delta(v)`.
    pub fn rank_delta(&self, params: &ConstructionParams) -> u64 {
        let len = params.coords_len();
        self.support
            .iter()
            .map(|&(idx, val)| val as u64 * params.m.pow((len - 1 - idx) as u32))
            .sum()
    }
}

/// Builds the offset `v[j_1, ..., j_t]`.
pub fn make_offset(
    params: &ConstructionParams,
    j: &[u32],
) -> Result<OffsetVector, ConstructionError> {
    if j.len() != params.t as usize || j.iter().any(|&x| x < 1 || x > params.k) {
        return Err(ConstructionError::Bounds);
    }
    let mut support = Vec::with_capacity(params.t as usize);
    for r in 1..=params.t {
        let val = angle(&j[..(r - 1) as usize], params.k)?;
        debug_assert!(val < params.m);
        let idx = ((r - 1) * params.k + (j[(r - 1) as usize] - 1)) as usize;
        support.push((idx, val as u32));
    }
    Ok(OffsetVector { j: j.to_vec(), support })
}

/// The eligible set S: all `k^t` offsets, lexicographic by tuple.
pub fn enumerate_s(params: &ConstructionParams) -> Vec<OffsetVector> {
    let t = params.t as usize;
    let k = params.k;
    let mut out = Vec::with_capacity(params.m as usize);
    let mut j = vec![1u32; t];
    loop {
        out.push(make_offset(params, &j).expect("tuple in range"));
        // odometer over [1, k]^t
        let mut pos = t;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if j[pos] < k {
                j[pos] += 1;
                break;
            }
            j[pos] = 1;
        }
    }
}

/// Materializes `A_t` as a sparse matrix with 1-based indices:
/// entry `(rank(a)+1, rank(b)+1)` is present iff `b - a` is eligible.
pub fn build_construction(
    params: &ConstructionParams,
    cap: u64,
) -> Result<SparseMatrix, ConstructionError> {
    if params.n > cap {
        return Err(ConstructionError::ResourceCap { n: params.n, cap });
    }
    let n = params.n;
    let mut offsets = enumerate_s(params);
    offsets.sort_by_key(|v| v.rank_delta(params));
    let deltas: Vec<u64> = offsets.iter().map(|v| v.rank_delta(params)).collect();

    let len = params.coords_len();
    let m_minus_1 = (params.m - 1) as u32;
    let mut coords = vec![0u32; len];
    let mut entries = Vec::new();
    for row_rank in 0..n {
        for (v, &delta) in offsets.iter().zip(&deltas) {
            if v.support.iter().all(|&(idx, val)| coords[idx] + val <= m_minus_1) {
                entries.push((row_rank + 1, row_rank + delta + 1));
            }
        }
        // advance the odometer
        let mut i = len;
        while i > 0 {
            i -= 1;
            if coords[i] < m_minus_1 {
                coords[i] += 1;
                break;
            }
            coords[i] = 0;
        }
    }
    Ok(SparseMatrix::new(n, entries).expect("construction emits sorted in-range entries"))
}

/// Closed-form weight of `A_t`:
/// `sum over j in [k]^t of m^(t(k-1)) * prod_r (m - angle(j_1..j_{r-1}))`.
///
/// With `n` capped to 64 bits the sum is below `n * k^t < 2^96`, so a
/// checked 128-bit accumulator cannot overflow.
pub fn exact_weight_formula(params: &ConstructionParams) -> u128 {
    let m = params.m as u128;
    let free_coords = params.t * (params.k - 1);
    let free_factor = m.checked_pow(free_coords).expect("m^(t(k-1)) <= n");
    let mut total: u128 = 0;
    let t = params.t as usize;
    let mut j = vec![1u32; t];
    loop {
        let mut prod = free_factor;
        for r in 1..=t {
            let a = angle(&j[..r - 1], params.k).expect("tuple in range") as u128;
            prod = prod.checked_mul(m - a).expect("term <= n");
        }
        total = total.checked_add(prod).expect("weight < 2^96");
        let mut pos = t;
        loop {
            if pos == 0 {
                return total;
            }
            pos -= 1;
            if j[pos] < params.k {
                j[pos] += 1;
                break;
            }
            j[pos] = 1;
        }
    }
}

/// Outcome of the density bound check: `weight >= (1 - 1/(k-1)) * n * k^t`,
/// kept as the exact rational `bound_numer / bound_denom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityCheck {
    pub weight: u128,
    pub bound_numer: u128,
    pub bound_denom: u64,
    pub pass: bool,
}

pub fn density_bound_check(params: &ConstructionParams) -> DensityCheck {
    let weight = exact_weight_formula(params);
    let n = params.n as u128;
    let kt = params.m as u128;
    // (1 - 1/(k-1)) * n * k^t  ==  n * k^t * (k-2) / (k-1); zero for k = 2.
    let bound_numer = n * kt * (params.k as u128 - 2);
    let bound_denom = (params.k - 1) as u64;
    let pass = weight * bound_denom as u128 >= bound_numer;
    DensityCheck { weight, bound_numer, bound_denom, pass }
}

fn check_t(t: u32) -> Result<(), ConstructionError> {
    if !(2..=(u32::MAX - 1) / 2).contains(&t) {
        return Err(ConstructionError::Bounds);
    }
    Ok(())
}

/// The 2t x (2t+1) pattern `X_t` with `4t` 1s: its first and last rows with
/// the first column removed form `P_t`, its second and last columns form
/// `Q_t`, and one extra 1 sits at `(2t, 1)`.
pub fn gen_xt(t: u32) -> Result<Pattern, ConstructionError> {
    check_t(t)?;
    let rows = 2 * t;
    let cols = 2 * t + 1;
    let mut ones = Vec::with_capacity(4 * t as usize);
    for c in (2..=2 * t).step_by(2) {
        ones.push((1, c));
    }
    ones.push((1, cols));
    for c in (1..=2 * t - 1).step_by(2) {
        ones.push((rows, c));
    }
    ones.push((rows, cols));
    for r in (3..=2 * t - 1).step_by(2) {
        ones.push((r, 2));
    }
    for r in (2..=2 * t - 2).step_by(2) {
        ones.push((r, cols));
    }
    Ok(Pattern::from_points(rows, cols, ones).expect("in bounds"))
}

/// The 2 x 2t alternating pattern `P_t`: rows 1 and 2t of `X_t` restricted
/// to columns 2..=2t+1.
pub fn gen_pt(t: u32) -> Result<Pattern, ConstructionError> {
    check_t(t)?;
    let cols = 2 * t;
    let mut ones = Vec::with_capacity(2 * t as usize + 1);
    for c in (1..=2 * t - 1).step_by(2) {
        ones.push((1, c));
    }
    ones.push((1, cols));
    for c in (2..=2 * t - 2).step_by(2) {
        ones.push((2, c));
    }
    ones.push((2, cols));
    Ok(Pattern::from_points(2, cols, ones).expect("in bounds"))
}

/// The 2t x 2 pattern `Q_t`: reflection of `P_t` across the minor diagonal;
/// equals columns 2 and 2t+1 of `X_t`.
pub fn gen_qt(t: u32) -> Result<Pattern, ConstructionError> {
    Ok(gen_pt(t)?.transform(crate::pattern::Transform::AntiTranspose))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn params(t: u32, k: u32) -> ConstructionParams {
        ConstructionParams::new(t, k).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(ConstructionParams::new(1, 2).is_err());
        assert!(ConstructionParams::new(2, 1).is_err());
        let p = params(2, 2);
        assert_eq!((p.m(), p.n()), (4, 256));
        assert_eq!(params(2, 3).n(), 531_441);
        assert_eq!(params(3, 2).n(), 262_144);
        // k^(t^2 k) = 4^36 = 2^72 overflows u64
        assert_eq!(
            ConstructionParams::new(3, 4),
            Err(ConstructionError::Overflow { t: 3, k: 4 })
        );
    }

    #[test]
    fn angle_examples() {
        assert_eq!(angle(&[], 7).unwrap(), 1);
        // (2-1)*9 + (1-1)*3 + 3 = 12
        assert_eq!(angle(&[2, 1, 3], 3).unwrap(), 12);
        assert_eq!(angle(&[1, 1, 1, 1], 5).unwrap(), 1);
        assert_eq!(angle(&[4, 3], 3), Err(ConstructionError::Bounds));
        // injective on [k]^len with range [1, k^len]
        let k = 3;
        let mut seen = BTreeSet::new();
        for a in 1..=k {
            for b in 1..=k {
                let v = angle(&[a, b], k).unwrap();
                assert!((1..=9).contains(&v));
                assert!(seen.insert(v));
            }
        }
    }

    #[test]
    fn offset_examples() {
        let p = params(2, 2);
        let v = make_offset(&p, &[1, 2]).unwrap();
        assert_eq!(v.coords(&p), &[1, 0, 0, 1]);
        let v = make_offset(&p, &[2, 1]).unwrap();
        assert_eq!(v.coords(&p), &[0, 1, 2, 0]);
        assert!(make_offset(&p, &[0, 1]).is_err());
        assert!(make_offset(&p, &[1]).is_err());
    }

    #[test]
    fn eligible_set_sizes_and_distinctness() {
        for (t, k) in [(2, 2), (2, 3), (3, 2)] {
            let p = params(t, k);
            let s = enumerate_s(&p);
            assert_eq!(s.len() as u64, p.m());
            let realized: BTreeSet<Vec<u32>> = s.iter().map(|v| v.coords(&p)).collect();
            assert_eq!(realized.len(), s.len(), "offsets must be pairwise distinct");
        }
    }

    #[test]
    fn rank_unrank_bijection() {
        let p = params(2, 2);
        assert_eq!(p.index_unrank(0).unwrap().coords(), &[0, 0, 0, 0]);
        assert_eq!(p.index_unrank(1).unwrap().coords(), &[0, 0, 0, 1]);
        assert_eq!(p.index_unrank(64).unwrap().coords(), &[1, 0, 0, 0]);
        for r in 0..p.n() {
            assert_eq!(p.index_rank(&p.index_unrank(r).unwrap()), r);
        }
        // rank order = lexicographic order
        let a = p.index_unrank(13).unwrap();
        let b = p.index_unrank(14).unwrap();
        assert!(a.coords() < b.coords());
        assert!(p.index_unrank(p.n()).is_err());
    }

    #[test]
    fn type_of_blocks() {
        let p = params(2, 4);
        let a = p.index_from_coords(&[0, 1, 0, 0, 2, 3, 0, 0]).unwrap();
        let b = p.index_from_coords(&[0, 1, 0, 0, 5, 3, 0, 0]).unwrap();
        assert_eq!(p.type_of(&a, &b).unwrap(), 2);
        let c = p.index_from_coords(&[1, 1, 0, 0, 2, 3, 0, 0]).unwrap();
        assert_eq!(p.type_of(&a, &c).unwrap(), 1);
        assert_eq!(p.type_of(&a, &a), Err(ConstructionError::TypeUndefined));
        assert_eq!(p.first_diff_coord(&a, &b), Some((2, 1)));
    }

    #[test]
    fn weights_match_enumeration_oracle() {
        // Brute-force oracle: count all (a, v) pairs with a + v in bounds.
        for (t, k, expect) in [(2u32, 2u32, 480u128)] {
            let p = params(t, k);
            let s = enumerate_s(&p);
            let mut count = 0u128;
            for r in 0..p.n() {
                let a = p.index_unrank(r).unwrap();
                for v in &s {
                    if a.add_offset(&p, v).is_some() {
                        count += 1;
                    }
                }
            }
            assert_eq!(count, expect);
            assert_eq!(exact_weight_formula(&p), expect);
            let built = build_construction(&p, DEFAULT_BUILD_CAP).unwrap();
            assert_eq!(built.weight() as u128, expect);
        }
    }

    #[test]
    fn max_line_weight_is_kt() {
        let p = params(2, 2);
        let a = build_construction(&p, DEFAULT_BUILD_CAP).unwrap();
        let mut row_counts = alloc::collections::BTreeMap::new();
        let mut col_counts = alloc::collections::BTreeMap::new();
        for &(r, c) in a.entries() {
            *row_counts.entry(r).or_insert(0u64) += 1;
            *col_counts.entry(c).or_insert(0u64) += 1;
        }
        assert!(row_counts.values().all(|&x| x <= p.m()));
        assert!(col_counts.values().all(|&x| x <= p.m()));
    }

    #[test]
    fn build_cap_refusal() {
        let p = params(2, 3);
        assert_eq!(
            build_construction(&p, 1000),
            Err(ConstructionError::ResourceCap { n: 531_441, cap: 1000 })
        );
    }

    #[test]
    fn density_bound() {
        let c = density_bound_check(&params(2, 3));
        assert_eq!(c.weight, 3_306_744);
        // bound = 4.5 * 531441 = 2391484.5 = 4782969 / 2
        assert_eq!(c.bound_numer, 4_782_969);
        assert_eq!(c.bound_denom, 2);
        assert!(c.pass);
        let c2 = density_bound_check(&params(2, 2));
        assert_eq!(c2.bound_numer, 0);
        assert!(c2.pass);
        // weight <= n * k^t always
        for (t, k) in [(2, 2), (2, 3), (3, 2)] {
            let p = params(t, k);
            assert!(exact_weight_formula(&p) <= p.n() as u128 * p.m() as u128);
        }
    }

    #[test]
    fn xt_family_shapes() {
        for t in 2..=6u32 {
            let x = gen_xt(t).unwrap();
            assert_eq!((x.rows(), x.cols()), (2 * t, 2 * t + 1));
            assert_eq!(x.weight(), 4 * t as u64, "X_{t} must have 4t ones");
            let pt = gen_pt(t).unwrap();
            assert_eq!((pt.rows(), pt.cols()), (2, 2 * t));
            let qt = gen_qt(t).unwrap();
            assert_eq!((qt.rows(), qt.cols()), (2 * t, 2));

            // P_t = rows {1, 2t} of X_t restricted to columns 2..=2t+1.
            let expect_pt: Vec<(u32, u32)> = x
                .ones()
                .iter()
                .filter(|&&(r, c)| (r == 1 || r == 2 * t) && c >= 2)
                .map(|&(r, c)| (if r == 1 { 1 } else { 2 }, c - 1))
                .collect();
            assert_eq!(pt, Pattern::from_points(2, 2 * t, expect_pt).unwrap());

            // Q_t = columns {2, 2t+1} of X_t.
            let expect_qt: Vec<(u32, u32)> = x
                .ones()
                .iter()
                .filter(|&&(_, c)| c == 2 || c == 2 * t + 1)
                .map(|&(r, c)| (r, if c == 2 { 1 } else { 2 }))
                .collect();
            assert_eq!(qt, Pattern::from_points(2 * t, 2, expect_qt).unwrap());

            // Removing the P_t rows and Q_t columns leaves exactly (2t, 1).
            let rest: Vec<(u32, u32)> = x
                .ones()
                .iter()
                .copied()
                .filter(|&(r, c)| !((r == 1 || r == 2 * t) && c >= 2) && c != 2 && c != 2 * t + 1)
                .collect();
            assert_eq!(rest, vec![(2 * t, 1)]);
        }
        assert!(gen_xt(1).is_err());
        assert!(gen_pt(0).is_err());
    }

    #[test]
    fn x2_coordinates_golden() {
        let x = gen_xt(2).unwrap();
        assert_eq!(
            x.ones(),
            &[(1, 2), (1, 4), (1, 5), (2, 5), (3, 2), (4, 1), (4, 3), (4, 5)]
        );
        let p2 = gen_pt(2).unwrap();
        assert_eq!(p2.ones(), &[(1, 1), (1, 3), (1, 4), (2, 2), (2, 4)]);
        let q2 = gen_qt(2).unwrap();
        assert_eq!(q2.ones(), &[(1, 1), (1, 2), (2, 2), (3, 1), (4, 2)]);
    }
}
