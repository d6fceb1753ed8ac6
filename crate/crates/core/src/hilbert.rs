//! Truncated bigraded integer series: the Hilbert series of `A/I` and of
//! the universal ring `C` by direct representation-theoretic summation,
//! and Euler-characteristic verification of the term data against them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complexes::{BaseRing, GradedComplex};
use crate::partitions::{binomial, enumerate_in_box, weyl_dim, Partition, Weight};
use crate::{validate_eg, Error, Result};

const CAP: i64 = i64::MAX / 4;

/// The truncation region a series is exact on: `d1_min ≤ d1 ≤ d1_max`,
/// `0 ≤ d2 ≤ d2_max`, `d1 + d2 ≤ total_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub d1_min: i64,
    pub d1_max: i64,
    pub d2_max: i64,
    pub total_max: i64,
}

impl Region {
    /// Total-degree cap `d1 + d2 ≤ d` with non-negative `d1` (the A-side
    /// truncation policy).
    pub fn total(d: i64) -> Region {
        Region { d1_min: 0, d1_max: d, d2_max: d, total_max: d }
    }

    /// Box truncation, Laurent in `d1` (the C-side truncation policy).
    pub fn boxed(d1_min: i64, d1_max: i64, d2_max: i64) -> Region {
        Region { d1_min, d1_max, d2_max, total_max: CAP }
    }

    pub fn all() -> Region {
        Region { d1_min: -CAP, d1_max: CAP, d2_max: CAP, total_max: CAP }
    }

    pub fn contains(&self, d1: i64, d2: i64) -> bool {
        d2 >= 0
            && d2 <= self.d2_max
            && d1 >= self.d1_min
            && d1 <= self.d1_max
            && d1 + d2 <= self.total_max
    }

    pub fn intersect(&self, other: &Region) -> Region {
        Region {
            d1_min: self.d1_min.max(other.d1_min),
            d1_max: self.d1_max.min(other.d1_max),
            d2_max: self.d2_max.min(other.d2_max),
            total_max: self.total_max.min(other.total_max),
        }
    }

    /// All lattice points of a finite region, row-major in `(d1, d2)`.
    pub fn points(&self) -> Vec<(i64, i64)> {
        assert!(self.d1_max < CAP && self.d2_max < CAP, "region must be finite");
        let mut out = Vec::new();
        for d1 in self.d1_min..=self.d1_max {
            for d2 in 0..=self.d2_max.min(self.total_max.saturating_sub(d1)) {
                out.push((d1, d2));
            }
        }
        out
    }
}

/// A bigraded integer series, held as exact coefficients within a
/// truncation region.  Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: BTreeMap<(i64, i64), BigInt>,
    region: Region,
}

impl BiSeries {
    pub fn zero(region: Region) -> BiSeries {
        BiSeries { coeffs: BTreeMap::new(), region }
    }

    pub fn from_entries<I>(region: Region, entries: I) -> BiSeries
    where
        I: IntoIterator<Item = ((i64, i64), BigInt)>,
    {
        let mut coeffs: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for ((d1, d2), v) in entries {
            if region.contains(d1, d2) && !v.is_zero() {
                let slot = coeffs.entry((d1, d2)).or_default();
                *slot += v;
                if slot.is_zero() {
                    coeffs.remove(&(d1, d2));
                }
            }
        }
        BiSeries { coeffs, region }
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn coeff(&self, d1: i64, d2: i64) -> BigInt {
        self.coeffs.get(&(d1, d2)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn restricted(&self, region: Region) -> BiSeries {
        BiSeries::from_entries(
            region,
            self.coeffs.iter().map(|(&k, v)| (k, v.clone())),
        )
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let region = self.region.intersect(&other.region);
        BiSeries::from_entries(
            region,
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(&k, v)| (k, v.clone())),
        )
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, -v.clone())).collect(),
            region: self.region,
        }
    }

    pub fn sub(&self, other: &BiSeries) -> BiSeries {
        self.add(&other.neg())
    }

    /// Truncated product: the full convolution of the stored coefficients,
    /// restricted to `target`.  Exact as long as both factors are exact on
    /// the points their convolution draws from.
    pub fn mul(&self, other: &BiSeries, target: Region) -> BiSeries {
        let mut acc: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for (&(a1, a2), u) in &self.coeffs {
            for (&(b1, b2), v) in &other.coeffs {
                let (d1, d2) = (a1 + b1, a2 + b2);
                if target.contains(d1, d2) {
                    *acc.entry((d1, d2)).or_default() += u * v;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        BiSeries { coeffs: acc, region: target }
    }

    /// JSON map `{"[d1,d2]": "coeff"}` with decimal-string values.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(&(d1, d2), v)| (format!("[{d1},{d2}]"), v.to_string().into()))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Aligned text grid; `.` marks points outside the truncation region.
    pub fn to_text_grid(&self) -> String {
        let r = self.region;
        let width = self
            .coeffs
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(r.d2_max.to_string().len())
            + 1;
        let mut out = String::new();
        out.push_str(&format!("{:>6} |", "d1\\d2"));
        for d2 in 0..=r.d2_max {
            out.push_str(&format!("{d2:>width$}"));
        }
        out.push('\n');
        for d1 in r.d1_min..=r.d1_max {
            out.push_str(&format!("{d1:>6} |"));
            for d2 in 0..=r.d2_max {
                if r.contains(d1, d2) {
                    out.push_str(&format!("{:>width$}", self.coeff(d1, d2).to_string()));
                } else {
                    out.push_str(&format!("{:>width$}", "."));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `dim Sym_d` of a polynomial ring in `m` variables.
fn sym_coeff(d: i64, m: usize) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    if m == 0 {
        return if d == 0 { BigInt::from(1) } else { BigInt::zero() };
    }
    binomial((d + m as i64 - 1) as u64, (m - 1) as u64)
}

/// The Hilbert series of the free base ring with `m1` variables in bidegree
/// `(1,0)` and `m2` in `(0,1)`, on the given region.
fn free_base_series(m1: usize, m2: usize, region: Region) -> BiSeries {
    let entries = region.points().into_iter().filter_map(|(d1, d2)| {
        let c = sym_coeff(d1, m1) * sym_coeff(d2, m2);
        if c.is_zero() {
            None
        } else {
            Some(((d1, d2), c))
        }
    });
    BiSeries::from_entries(region, entries)
}

/// `H_A` for `A = K[φ, ψ]`: `(1−s)^{−ef} (1−t)^{−fg}` as exact binomials.
pub fn base_series_a(e: usize, g: usize, region: Region) -> BiSeries {
    let f = e + g;
    free_base_series(e * f, f * g, region)
}

/// The geometric series of the multiplier: `Σ_{t≥0} s^{−et} t^{gt}`.
pub fn geometric_a_series(e: usize, g: usize, d2_max: i64) -> BiSeries {
    let t_max = d2_max / g as i64;
    let region = Region::boxed(-(e as i64) * t_max, 0, d2_max);
    BiSeries::from_entries(
        region,
        (0..=t_max).map(|t| ((-(e as i64) * t, g as i64 * t), BigInt::from(1))),
    )
}

fn partitions_up_to(rows: usize, total: i64) -> Vec<Partition> {
    if total < 0 {
        return Vec::new();
    }
    enumerate_in_box(rows, total as usize)
        .into_iter()
        .filter(|p| p.size() <= total)
        .collect()
}

fn summand_dim(
    lam: &Partition,
    mu: &Partition,
    e: usize,
    g: usize,
) -> Result<BigInt> {
    let f = e + g;
    let lam = lam.padded(e)?;
    let mu = mu.padded(g - 1)?;
    let mut fw = mu.parts().to_vec();
    fw.push(0);
    fw.extend(lam.parts().iter().rev().map(|&x| -x));
    let f_weight = Weight::new(fw).expect("interleaved weight is dominant");
    Ok(weyl_dim(lam.weight(), e)?
        * weyl_dim(&f_weight, f)?
        * weyl_dim(mu.weight(), g)?)
}

/// The bigraded Hilbert series of `A/I`, summed over pairs `(λ, μ)` of
/// partitions with at most `e` and `g−1` parts: the summand
/// `S_λE ⊗ S_{(μ,0,−λ rev)}F ⊗ S_μG*` sits in bidegree `(|λ|, |μ|)`.
/// Exact for `d1 + d2 ≤ d`.
pub fn hilbert_ai(e: usize, g: usize, d: i64) -> Result<BiSeries> {
    validate_eg(e, g)?;
    if d < 0 {
        return Err(Error::InvalidParameter(format!("degree bound {d} is negative")));
    }
    let region = Region::total(d);
    let mut entries = Vec::new();
    for lam in partitions_up_to(e, d) {
        let ls = lam.size();
        for mu in partitions_up_to(g - 1, d - ls) {
            entries.push(((ls, mu.size()), summand_dim(&lam, &mu, e, g)?));
        }
    }
    Ok(BiSeries::from_entries(region, entries))
}

/// The truncation box used for series over `C` and `B`: `d2 ≤ d2_max`,
/// `−e·⌈d2_max/g⌉ ≤ d1 ≤ d2_max`.
pub fn c_region(e: usize, g: usize, d2_max: i64) -> Region {
    let t_max = (d2_max + g as i64 - 1) / g as i64;
    Region::boxed(-(e as i64) * t_max, d2_max, d2_max)
}

/// The bigraded Hilbert series of the universal ring `C`: the `A/I` sum
/// with an extra power `t ≥ 0` of the multiplier, shifting each summand by
/// `t·(−e, g)`.
pub fn hilbert_c(e: usize, g: usize, d2_max: i64) -> Result<BiSeries> {
    validate_eg(e, g)?;
    if d2_max < 0 {
        return Err(Error::InvalidParameter(format!(
            "degree bound {d2_max} is negative"
        )));
    }
    let region = c_region(e, g, d2_max);
    let t_max = d2_max / g as i64;
    let mut entries = Vec::new();
    for t in 0..=t_max {
        let shift = (-(e as i64) * t, g as i64 * t);
        for mu in partitions_up_to(g - 1, d2_max - shift.1) {
            for lam in partitions_up_to(e, region.d1_max - shift.0) {
                let point = (lam.size() + shift.0, mu.size() + shift.1);
                if region.contains(point.0, point.1) {
                    entries.push((point, summand_dim(&lam, &mu, e, g)?));
                }
            }
        }
    }
    Ok(BiSeries::from_entries(region, entries))
}

fn alternating_term_poly(c: &GradedComplex) -> BiSeries {
    BiSeries::from_entries(
        Region::all(),
        c.iter_terms().map(|t| {
            let sign = if t.hom_degree.rem_euclid(2) == 0 { 1 } else { -1 };
            ((-t.twist.0, -t.twist.1), BigInt::from(sign) * t.rank.clone())
        }),
    )
}

/// The Euler characteristic `Σ (−1)^i · rank · s^x t^y · H_base` of a
/// complex of twisted free modules.  Over `A` (and `Ā`) the result is exact
/// for `d1 + d2 ≤ d`; over `B` the base series additionally carries the
/// geometric factor of the multiplier and `d` caps `d2`.
pub fn euler_char(c: &GradedComplex, d: i64) -> Result<BiSeries> {
    if d < 0 {
        return Err(Error::InvalidParameter(format!("degree bound {d} is negative")));
    }
    let (e, g, f) = (c.e(), c.g(), c.f());
    let poly = alternating_term_poly(c);
    match c.base_ring() {
        BaseRing::A => {
            let region = Region::total(d);
            Ok(poly.mul(&free_base_series(e * f, f * g, region), region))
        }
        BaseRing::ABar => {
            let region = Region::total(d);
            Ok(poly.mul(&free_base_series(0, f * g, region), region))
        }
        BaseRing::B => {
            let region = c_region(e, g, d);
            let t_max = d / g as i64;
            let spread = (e as i64 - g as i64).max(0) * t_max;
            let dp = region.d1_max + region.d2_max + spread;
            let inner = Region::total(dp);
            let p = poly.mul(&free_base_series(e * f, f * g, inner), inner);
            Ok(p.mul(&geometric_a_series(e, g, d), region))
        }
    }
}

/// Per-bidegree comparison of the two Euler characteristics against the
/// direct Hilbert sums: `χ(F_•) = H_{A/I}` on the total-degree region and
/// `χ(G_•) = H_C` on the C-box.
#[derive(Clone, Debug)]
pub struct EulerReport {
    pub e: usize,
    pub g: usize,
    pub degree: i64,
    pub failures: Vec<String>,
    pub points_checked: usize,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_euler(e: usize, g: usize, d: i64) -> Result<EulerReport> {
    let mut failures = Vec::new();
    let mut points_checked = 0;

    let f_side = euler_char(&crate::complexes::f_terms_closed(e, g)?, d)?;
    let ai = hilbert_ai(e, g, d)?;
    for (d1, d2) in Region::total(d).points() {
        points_checked += 1;
        let (lhs, rhs) = (f_side.coeff(d1, d2), ai.coeff(d1, d2));
        if lhs != rhs {
            failures.push(format!(
                "chi(F)({d1},{d2}) = {lhs} but H_AI({d1},{d2}) = {rhs}"
            ));
        }
    }

    let g_side = euler_char(&crate::complexes::g_complex(e, g)?, d)?;
    let hc = hilbert_c(e, g, d)?;
    for (d1, d2) in c_region(e, g, d).points() {
        points_checked += 1;
        let (lhs, rhs) = (g_side.coeff(d1, d2), hc.coeff(d1, d2));
        if lhs != rhs {
            failures.push(format!(
                "chi(G)({d1},{d2}) = {lhs} but H_C({d1},{d2}) = {rhs}"
            ));
        }
    }

    Ok(EulerReport { e, g, degree: d, failures, points_checked })
}
