//! Exact arithmetic on partitions and dominant weights: conjugation,
//! complements in a box, column counts and Schur-module dimensions.
//!
//! Weights are immutable after validation, so everything here is safe to
//! share across threads.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A dominant weight: a finite non-increasing sequence of integers.
///
/// Equality is exact (a weight of length `n` labels a representation of
/// `GL_n`, so trailing zeros matter).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(Self { entries })
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.entries.last().copied()
    }

    pub fn max_entry(&self) -> Option<i64> {
        self.entries.first().copied()
    }

    /// Pads with trailing zeros to length `n`.  Padding a weight whose last
    /// entry is negative would break dominance and is rejected.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if self.len() > n {
            return Err(Error::LengthMismatch { expected: n, got: self.len() });
        }
        if self.len() < n {
            if let Some(last) = self.min_entry() {
                if last < 0 {
                    let mut e = self.entries.clone();
                    e.resize(n, 0);
                    return Err(Error::NotDominant(e));
                }
            }
        }
        let mut entries = self.entries.clone();
        entries.resize(n, 0);
        Ok(Self { entries })
    }

    /// Adds `t` to every entry (twisting by a power of the determinant).
    pub fn shifted(&self, t: i64) -> Self {
        Self { entries: self.entries.iter().map(|&x| x + t).collect() }
    }

    /// The dual labeling `(-w_n, …, -w_1)`: `S_w V ≅ S_{w*} V^*`.
    pub fn reversed_negated(&self) -> Self {
        Self { entries: self.entries.iter().rev().map(|&x| -x).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A partition: a dominant weight with non-negative entries.
///
/// Trailing zeros are stored as given but ignored by `Eq`/`Ord`/`Hash`,
/// so box-indexed partitions compare equal across paddings.
#[derive(Clone, Debug)]
pub struct Partition {
    inner: Weight,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NegativePart(parts));
        }
        Ok(Self { inner: Weight::new(parts)? })
    }

    pub fn empty() -> Self {
        Self { inner: Weight::empty() }
    }

    pub fn parts(&self) -> &[i64] {
        self.inner.entries()
    }

    /// Parts with trailing zeros stripped.
    pub fn trimmed(&self) -> &[i64] {
        let e = self.inner.entries();
        let end = e.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        &e[..end]
    }

    pub fn num_parts(&self) -> usize {
        self.trimmed().len()
    }

    /// The number of boxes `|ν|`.
    pub fn size(&self) -> i64 {
        self.inner.sum()
    }

    pub fn first(&self) -> i64 {
        self.inner.max_entry().unwrap_or(0)
    }

    pub fn weight(&self) -> &Weight {
        &self.inner
    }

    pub fn into_weight(self) -> Weight {
        self.inner
    }

    /// Pads (the trimmed parts) with zeros to exactly `n` parts.
    pub fn padded(&self, n: usize) -> Result<Self> {
        let t = self.trimmed();
        if t.len() > n {
            return Err(Error::LengthMismatch { expected: n, got: t.len() });
        }
        let mut parts = t.to_vec();
        parts.resize(n, 0);
        Ok(Self { inner: Weight { entries: parts } })
    }

    /// Does the diagram fit in a `rows × cols` box?
    pub fn fits_in_box(&self, rows: usize, cols: i64) -> bool {
        self.num_parts() <= rows && self.first() <= cols
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Partition {}

impl std::hash::Hash for Partition {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl TryFrom<Weight> for Partition {
    type Error = Error;

    fn try_from(w: Weight) -> Result<Self> {
        if w.entries().iter().any(|&x| x < 0) {
            return Err(Error::NegativePart(w.entries().to_vec()));
        }
        Ok(Self { inner: w })
    }
}

/// The conjugate partition: `p'_k = #{j : p_j ≥ k}` for `k = 1..p_1`.
pub fn conjugate(p: &Partition) -> Partition {
    let t = p.trimmed();
    let parts: Vec<i64> =
        (1..=p.first()).map(|k| t.iter().filter(|&&x| x >= k).count() as i64).collect();
    Partition::new(parts).expect("conjugate of a partition is a partition")
}

/// The column count `ν'_k = #{j : ν_j ≥ k}` for a dominant weight and any
/// integer `k`.
pub fn nu_prime(nu: &Weight, k: i64) -> usize {
    nu.entries().iter().filter(|&&x| x >= k).count()
}

/// The complement `μ_i = e − ν_{g−i}` of a dominant weight in the strip of
/// width `e`; involutive, and maps `[−1, e+1]` entries to themselves.
pub fn complement_in_box(nu: &Weight, e: i64) -> Weight {
    let rev: Vec<i64> = nu.entries().iter().rev().map(|&x| e - x).collect();
    Weight::new(rev).expect("complement of a dominant weight is dominant")
}

/// The dimension of the irreducible `GL_n`-representation of highest
/// weight `w` (padded with trailing zeros to length `n`):
/// `∏_{i<j} (w_i − w_j + j − i)/(j − i)`.
///
/// The value is invariant under adding a constant to every entry, and the
/// empty weight with `n = 0` has dimension 1.
pub fn weyl_dim(w: &Weight, n: usize) -> Result<BigInt> {
    let padded = w.padded(n)?;
    let x = padded.entries();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 1..n {
        for i in 0..j {
            num *= BigInt::from(x[i] - x[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "Weyl product must divide exactly");
    Ok(q)
}

/// All partitions with at most `rows` parts, each at most `cols`, padded to
/// `rows` parts, in lexicographically decreasing order.
pub fn enumerate_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(remaining: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(cur.clone()).expect("box entries are a partition"));
            return;
        }
        let mut v = bound;
        while v >= 0 {
            cur.push(v);
            rec(remaining - 1, v, cur, out);
            cur.pop();
            v -= 1;
        }
    }
    let mut out = Vec::new();
    rec(rows, cols as i64, &mut Vec::with_capacity(rows), &mut out);
    out
}

/// Binomial coefficient as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w(entries: &[i64]) -> Weight {
        Weight::new(entries.to_vec()).unwrap()
    }

    /// Brute-force count of semistandard tableaux of the given shape with
    /// entries in 1..=n; independent of the Weyl product formula.
    fn ssyt_count(shape: &[i64], n: usize) -> u64 {
        fn rec(shape: &[i64], n: i64, grid: &mut Vec<Vec<i64>>, r: usize, c: usize) -> u64 {
            if r == shape.len() {
                return 1;
            }
            if c == shape[r] as usize {
                return rec(shape, n, grid, r + 1, 0);
            }
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(grid[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(grid[r - 1][c] + 1);
            }
            let mut total = 0;
            for v in lo..=n {
                grid[r][c] = v;
                total += rec(shape, n, grid, r, c + 1);
            }
            total
        }
        let mut grid = shape.iter().map(|&len| vec![0i64; len as usize]).collect();
        rec(shape, n as i64, &mut grid, 0, 0)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p(&[2, 0])), p(&[1, 1]));
    }

    #[test]
    fn conjugate_is_involutive_in_boxes() {
        for rows in 0..=6 {
            for cols in 0..=6 {
                for part in enumerate_in_box(rows, cols) {
                    assert_eq!(conjugate(&conjugate(&part)), part);
                }
            }
        }
    }

    #[test]
    fn partition_rejects_negative_entries() {
        assert!(matches!(Partition::new(vec![2, -1]), Err(Error::NegativePart(_))));
        assert!(matches!(Weight::new(vec![1, 2]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn trailing_zeros_are_ignored_by_partition_eq() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let mut h1 = DefaultHasher::new();
        let mut h2 = DefaultHasher::new();
        p(&[2, 1, 0, 0]).hash(&mut h1);
        p(&[2, 1]).hash(&mut h2);
        assert_eq!(h1.finish(), h2.finish());
    }

    #[test]
    fn nu_prime_examples() {
        assert_eq!(nu_prime(&w(&[2]), 1), 1);
        assert_eq!(nu_prime(&w(&[2, 2, 1]), 2), 2);
        assert_eq!(nu_prime(&w(&[0, 0]), 0), 2);
        // weakly decreasing in k
        let nu = w(&[3, 1, 0, -1]);
        for k in -3..5 {
            assert!(nu_prime(&nu, k) >= nu_prime(&nu, k + 1));
        }
        assert_eq!(nu_prime(&nu, -1), 4);
    }

    #[test]
    fn nu_prime_matches_conjugate_column() {
        for part in enumerate_in_box(4, 4) {
            let conj = conjugate(&part);
            for k in 1..=5i64 {
                let col = conj.parts().get((k - 1) as usize).copied().unwrap_or(0);
                assert_eq!(nu_prime(part.weight(), k) as i64, col);
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_in_box(&w(&[2, 0]), 2), w(&[2, 0]));
        assert_eq!(complement_in_box(&w(&[1, 0]), 2), w(&[2, 1]));
        assert_eq!(complement_in_box(&w(&[2]), 2), w(&[0]));
    }

    #[test]
    fn complement_is_involutive_and_stays_in_range() {
        for e in 1..=4i64 {
            for len in 1..=3usize {
                // all dominant weights with entries in [-1, e+1]
                for part in enumerate_in_box(len, (e + 2) as usize) {
                    let nu = part.padded(len).unwrap().weight().shifted(-1);
                    let mu = complement_in_box(&nu, e);
                    assert!(mu.entries().iter().all(|&x| -1 <= x && x <= e + 1));
                    assert_eq!(complement_in_box(&mu, e), nu);
                }
            }
        }
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&w(&[0, 0]), 2).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(&w(&[2, 0, 0, 0]), 4).unwrap(), BigInt::from(10));
        assert_eq!(weyl_dim(&w(&[1, 0, 0, -1]), 4).unwrap(), BigInt::from(15));
        // rectangular determinant power
        for e in 1..=5 {
            let rect = vec![(e as i64) - 1; e];
            assert_eq!(weyl_dim(&w(&rect), e).unwrap(), BigInt::from(1));
        }
        assert_eq!(weyl_dim(&Weight::empty(), 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn weyl_dim_rejects_bad_input() {
        assert!(weyl_dim(&w(&[1, 0]), 1).is_err());
        // padding a weight with a negative tail is not dominant
        assert!(weyl_dim(&w(&[0, -1]), 3).is_err());
        assert!(weyl_dim(&w(&[0, -1]), 2).is_ok());
    }

    #[test]
    fn weyl_dim_is_shift_invariant() {
        for part in enumerate_in_box(3, 3) {
            let base = part.padded(3).unwrap();
            let d = weyl_dim(base.weight(), 3).unwrap();
            for t in -3..=3 {
                assert_eq!(weyl_dim(&base.weight().shifted(t), 3).unwrap(), d);
            }
        }
    }

    #[test]
    fn weyl_dim_of_exterior_powers_is_binomial() {
        for n in 0..=8usize {
            for k in 0..=n {
                let mut entries = vec![1i64; k];
                entries.resize(n, 0);
                assert_eq!(weyl_dim(&w(&entries), n).unwrap(), binomial(n as u64, k as u64));
            }
        }
    }

    #[test]
    fn weyl_dim_matches_tableau_count() {
        // independent brute-force oracle on small shapes
        for part in enumerate_in_box(3, 3) {
            let shape = part.trimmed().to_vec();
            let wt = Weight::new(shape.clone()).unwrap();
            for n in shape.len()..=4 {
                assert_eq!(weyl_dim(&wt, n).unwrap(), BigInt::from(ssyt_count(&shape, n)));
            }
        }
        // the shifted example: (1,0,0,-1) ~ (2,1,1,0)
        assert_eq!(ssyt_count(&[2, 1, 1], 4), 15);
    }

    #[test]
    fn enumerate_in_box_counts_and_order() {
        for r in 0..=7u64 {
            for c in 0..=7u64 {
                let all = enumerate_in_box(r as usize, c as usize);
                assert_eq!(BigInt::from(all.len()), binomial(r + c, r));
                // lexicographically decreasing on padded entries
                for pair in all.windows(2) {
                    assert!(pair[0].parts() > pair[1].parts());
                }
            }
        }
        let rows1 = enumerate_in_box(1, 2);
        assert_eq!(rows1, vec![p(&[2]), p(&[1]), p(&[0])]);
        assert_eq!(enumerate_in_box(0, 5), vec![Partition::empty()]);
        assert_eq!(enumerate_in_box(2, 2).len(), 6);
    }
}
