//! The term-level data model of the equivariant complexes: closed-form
//! generators for `F_•`, the family `t_ν`, the Eagon-Northcott
//! specializations and `G_•`; duality and structural checks; and the
//! support graph of the differential.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::bott::p_and_n;
use crate::partitions::{
    binomial, complement_in_box, conjugate, enumerate_in_box, nu_prime, weyl_dim, Partition,
    Weight,
};
use crate::{validate_eg, Error, Result};

/// The base ring a complex of free modules lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseRing {
    /// `A = K[φ, ψ]`, bigraded with `φ` in `(1,0)` and `ψ` in `(0,1)`.
    A,
    /// `Ā = Sym(F ⊗ G*)`, the `ψ`-only subring.
    ABar,
    /// `B = A[a]` with the multiplier `a` in bidegree `(−e, g)`.
    B,
}

impl BaseRing {
    pub fn tag(self) -> &'static str {
        match self {
            BaseRing::A => "A",
            BaseRing::ABar => "Abar",
            BaseRing::B => "B",
        }
    }

    /// Letter used for the complex in text output.
    pub fn term_prefix(self) -> &'static str {
        match self {
            BaseRing::A => "F",
            BaseRing::ABar => "t",
            BaseRing::B => "G",
        }
    }
}

/// Identifier of a term: the generating pair `(ν, k)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub nu: Vec<i64>,
    pub k: i64,
}

impl TermKey {
    /// DOT-friendly node name, e.g. `T_2_1_k0` for `ν = (2,1)`, `k = 0`.
    pub fn node_name(&self) -> String {
        let nu: Vec<String> = self.nu.iter().map(|x| x.to_string()).collect();
        format!("T_{}_k{}", nu.join("_"), self.k)
    }
}

impl fmt::Display for TermKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nu: Vec<String> = self.nu.iter().map(|x| x.to_string()).collect();
        write!(f, "T_{{({});{}}}", nu.join(","), self.k)
    }
}

/// One equivariant free summand `S_{e_weight}E ⊗ ∧^{n_ext}F ⊗ S_{g_weight}G*`
/// twisted by `twist`, sitting in homological degree `hom_degree`.
///
/// `nu`/`k` record the generating pair; `rank` is the product of the three
/// label dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeTerm {
    pub nu: Weight,
    pub k: i64,
    pub e_weight: Partition,
    pub n_ext: usize,
    pub g_weight: Weight,
    pub twist: (i64, i64),
    pub hom_degree: i64,
    pub rank: BigInt,
}

impl FreeTerm {
    /// Builds a term, padding the labels to the ambient lengths and
    /// computing the rank from them.
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        e: usize,
        g: usize,
        nu: Weight,
        k: i64,
        e_weight: Partition,
        n_ext: usize,
        g_weight: Weight,
        twist: (i64, i64),
        hom_degree: i64,
    ) -> Result<FreeTerm> {
        let f = e + g;
        if nu.len() != g - 1 {
            return Err(Error::LengthMismatch { expected: g - 1, got: nu.len() });
        }
        if g_weight.len() != g {
            return Err(Error::LengthMismatch { expected: g, got: g_weight.len() });
        }
        if n_ext > f {
            return Err(Error::InvalidParameter(format!(
                "exterior power {n_ext} exceeds f = {f}"
            )));
        }
        let e_weight = e_weight.padded(e)?;
        let rank = weyl_dim(e_weight.weight(), e)?
            * binomial(f as u64, n_ext as u64)
            * weyl_dim(&g_weight, g)?;
        Ok(FreeTerm { nu, k, e_weight, n_ext, g_weight, twist, hom_degree, rank })
    }

    pub fn key(&self) -> TermKey {
        TermKey { nu: self.nu.entries().to_vec(), k: self.k }
    }

    fn sort_key(&self) -> (i64, i64, Vec<i64>, i64) {
        (self.hom_degree, self.nu.sum(), self.nu.entries().to_vec(), self.k)
    }

    /// The `(a,b;c;d,e)` notation for `S_{(a,b)}E ⊗ ∧^cF ⊗ S_{(d,e)}G*`;
    /// the `E` part is omitted for terms over `Ā`.
    pub fn render_label(&self, with_e_part: bool) -> String {
        let join = |xs: &[i64]| {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        if with_e_part {
            format!(
                "({};{};{})",
                join(self.e_weight.parts()),
                self.n_ext,
                join(self.g_weight.entries())
            )
        } else {
            format!("({};{})", self.n_ext, join(self.g_weight.entries()))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nu": self.nu.entries(),
            "k": self.k,
            "e_weight": self.e_weight.parts(),
            "n_ext": self.n_ext,
            "g_weight": self.g_weight.entries(),
            "twist": [self.twist.0, self.twist.1],
            "hom_degree": self.hom_degree,
            "rank": self.rank.to_string(),
        })
    }
}

/// Key-independent term data: `(degree, e_weight, n_ext, g_weight, twist)`.
pub type TermData = (i64, Vec<i64>, usize, Vec<i64>, (i64, i64));

/// A complex of equivariant free modules, recorded term by term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    e: usize,
    f: usize,
    g: usize,
    base_ring: BaseRing,
    terms: BTreeMap<i64, Vec<FreeTerm>>,
}

impl GradedComplex {
    pub fn from_terms(
        e: usize,
        g: usize,
        base_ring: BaseRing,
        terms: Vec<FreeTerm>,
    ) -> Result<GradedComplex> {
        validate_eg(e, g)?;
        let mut seen = std::collections::HashSet::new();
        let mut buckets: BTreeMap<i64, Vec<FreeTerm>> = BTreeMap::new();
        for t in terms {
            if !seen.insert(t.key()) {
                return Err(Error::StructuralViolation(format!(
                    "duplicate generating pair {}",
                    t.key()
                )));
            }
            buckets.entry(t.hom_degree).or_default().push(t);
        }
        for bucket in buckets.values_mut() {
            bucket.sort_by_key(|t| t.sort_key());
        }
        Ok(GradedComplex { e, f: e + g, g, base_ring, terms: buckets })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn base_ring(&self) -> BaseRing {
        self.base_ring
    }

    pub fn with_base_ring(mut self, base_ring: BaseRing) -> GradedComplex {
        self.base_ring = base_ring;
        self
    }

    /// Homological degrees carrying at least one term, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn terms_at(&self, degree: i64) -> &[FreeTerm] {
        self.terms.get(&degree).map_or(&[], |v| v.as_slice())
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = &FreeTerm> {
        self.terms.values().flatten()
    }

    pub fn term_count(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn get(&self, key: &TermKey) -> Option<&FreeTerm> {
        self.terms_at(self.key_degree(key)?).iter().find(|t| &t.key() == key)
    }

    fn key_degree(&self, key: &TermKey) -> Option<i64> {
        // terms are bucketed by degree; scan is fine at these sizes
        self.terms
            .iter()
            .find(|(_, v)| v.iter().any(|t| &t.key() == key))
            .map(|(&d, _)| d)
    }

    pub fn total_rank(&self, degree: i64) -> BigInt {
        self.terms_at(degree).iter().map(|t| t.rank.clone()).sum()
    }

    /// Per-twist rank breakdown of one homological degree.
    pub fn rank_by_twist(&self, degree: i64) -> BTreeMap<(i64, i64), BigInt> {
        let mut out: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for t in self.terms_at(degree) {
            *out.entry(t.twist).or_default() += t.rank.clone();
        }
        out
    }

    /// The multiset of `(degree, labels, twist)` data, independent of the
    /// generating keys.  Two complexes with equal multisets carry the same
    /// terms even if they were produced by different routes.
    pub fn label_multiset(&self) -> Vec<TermData> {
        let mut out: Vec<_> = self
            .iter_terms()
            .map(|t| {
                (
                    t.hom_degree,
                    t.e_weight.parts().to_vec(),
                    t.n_ext,
                    t.g_weight.entries().to_vec(),
                    t.twist,
                )
            })
            .collect();
        out.sort();
        out
    }

    pub fn same_terms(&self, other: &GradedComplex) -> bool {
        (self.e, self.g) == (other.e, other.g)
            && self.label_multiset() == other.label_multiset()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.iter_terms().map(FreeTerm::to_json).collect();
        json!({
            "e": self.e,
            "g": self.g,
            "f": self.f,
            "base_ring": self.base_ring.tag(),
            "terms": terms,
        })
    }

    /// One line per term in canonical order, e.g. `F_5: (1,1;4;3,3) A(-2,-6)`.
    pub fn to_text(&self) -> String {
        let prefix = self.base_ring.term_prefix();
        let ring = self.base_ring.tag();
        let with_e = self.base_ring != BaseRing::ABar;
        let mut out = String::new();
        for t in self.iter_terms() {
            out.push_str(&format!(
                "{}_{}: {} {}({},{})\n",
                prefix,
                t.hom_degree,
                t.render_label(with_e),
                ring,
                t.twist.0,
                t.twist.1
            ));
        }
        out
    }
}

/// The label pair `(p(ν;k), N(ν;k))` of `t_{ν;k}`, or `None` when the
/// summand vanishes (`N` outside `[0, f]`; `N` is strictly increasing in
/// `k`, so the nonzero `k` form an interval).
pub fn t_label(nu: &Weight, k: i64, e: usize, g: usize) -> Result<Option<(Weight, i64)>> {
    let (p, n) = p_and_n(nu, k, g)?;
    let f = (e + g) as i64;
    Ok(if (0..=f).contains(&n) { Some((p, n)) } else { None })
}

/// The terms of the resolution `F_•` of `A/I`: one summand
/// `S_{ν'}E ⊗ ∧^{N(ν;k)}F ⊗ S_{p(ν;k)}G*` twisted by `(−|ν|, −|ν|−N)` in
/// degree `|ν| + k`, over all `ν ⊆ e^{g−1}` and `0 ≤ k ≤ e+1`.
pub fn f_terms_closed(e: usize, g: usize) -> Result<GradedComplex> {
    validate_eg(e, g)?;
    let mut terms = Vec::new();
    for nu in enumerate_in_box(g - 1, e) {
        let size = nu.size();
        let e_weight = conjugate(&nu);
        for k in 0..=(e as i64 + 1) {
            let Some((p, n)) = t_label(nu.weight(), k, e, g)? else { continue };
            terms.push(FreeTerm::build(
                e,
                g,
                nu.weight().clone(),
                k,
                e_weight.clone(),
                n as usize,
                p,
                (-size, -size - n),
                size + k,
            )?);
        }
    }
    GradedComplex::from_terms(e, g, BaseRing::A, terms)
}

/// The complex `t_ν` over `Ā`: `∧^{N(ν;k)}F ⊗ S_{p(ν;k)}G*` in position `k`
/// for every `k` with a nonzero summand.
pub fn t_terms_closed(nu: &Weight, e: usize, g: usize) -> Result<GradedComplex> {
    validate_eg(e, g)?;
    if nu.len() != g - 1 {
        return Err(Error::LengthMismatch { expected: g - 1, got: nu.len() });
    }
    let f = e + g;
    let mut terms = Vec::new();
    for k in -(g as i64)..=(f as i64) {
        let Some((p, n)) = t_label(nu, k, e, g)? else { continue };
        terms.push(FreeTerm::build(
            e,
            g,
            nu.clone(),
            k,
            Partition::empty(),
            n as usize,
            p,
            (0, -n),
            k,
        )?);
    }
    GradedComplex::from_terms(e, g, BaseRing::ABar, terms)
}

/// The Eagon-Northcott family member `C^i = t_{(i,…,i)}` for `−1 ≤ i ≤ e+1`.
pub fn eagon_northcott_terms(i: i64, e: usize, g: usize) -> Result<GradedComplex> {
    validate_eg(e, g)?;
    if !(-1..=(e as i64 + 1)).contains(&i) {
        return Err(Error::InvalidParameter(format!(
            "Eagon-Northcott index {i} outside [-1, {}]",
            e + 1
        )));
    }
    let nu = Weight::new(vec![i; g - 1]).expect("constant weight is dominant");
    t_terms_closed(&nu, e, g)
}

/// The sub-complex of `F_•` with `∧^0 F` labels: the `k = 0` terms
/// `S_{ν'}E ⊗ S_{(ν,0)}G*` in degree `|ν|`.
pub fn strand(e: usize, g: usize) -> Result<GradedComplex> {
    let full = f_terms_closed(e, g)?;
    let terms: Vec<FreeTerm> =
        full.iter_terms().filter(|t| t.n_ext == 0).cloned().collect();
    GradedComplex::from_terms(e, g, BaseRing::A, terms)
}

/// The terms of the resolution `G_•` of the universal ring `B/J`: the same
/// as `F_•` with `A` replaced by `B`.
pub fn g_complex(e: usize, g: usize) -> Result<GradedComplex> {
    Ok(f_terms_closed(e, g)?.with_base_ring(BaseRing::B))
}

/// Verifies the label-level duality `t_ν ≅ (t_μ)*[−e−1]` for
/// `μ = (e−ν_{g−1},…,e−ν_1)`: whenever `k + ℓ = e+1`, the summands
/// `t_{ν;k}` and `t_{μ;ℓ}` vanish together, and otherwise
/// `N(ν;k)+N(μ;ℓ) = f` and `p(ν;k)_i + p(μ;ℓ)_{g+1−i} = e+1`.
pub fn dual_check_t(nu: &Weight, e: usize, g: usize) -> Result<bool> {
    validate_eg(e, g)?;
    let mu = complement_in_box(nu, e as i64);
    let f = (e + g) as i64;
    for k in -2..=(e as i64 + 3) {
        let l = e as i64 + 1 - k;
        match (t_label(nu, k, e, g)?, t_label(&mu, l, e, g)?) {
            (None, None) => {}
            (Some((p1, n1)), Some((p2, n2))) => {
                if n1 + n2 != f {
                    return Ok(false);
                }
                let a = p1.entries();
                let b = p2.entries();
                for i in 0..g {
                    if a[i] + b[g - 1 - i] != e as i64 + 1 {
                        return Ok(false);
                    }
                }
            }
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Verifies that `(ν, k) ↔ (complement ν, e+1−k)` pairs the term in degree
/// `d` with an equal-rank term in degree `eg+1−d`, for every term of `F_•`.
pub fn self_duality_check(e: usize, g: usize) -> Result<bool> {
    let c = f_terms_closed(e, g)?;
    let top = (e * g + 1) as i64;
    for t in c.iter_terms() {
        let dual_nu = complement_in_box(&t.nu, e as i64);
        let dual_key = TermKey { nu: dual_nu.entries().to_vec(), k: e as i64 + 1 - t.k };
        let Some(dual) = c.get(&dual_key) else { return Ok(false) };
        if dual.hom_degree != top - t.hom_degree || dual.rank != t.rank {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The kind of a differential component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArrowKind {
    Phi,
    Psi,
    PsiPhi,
}

impl ArrowKind {
    pub fn tag(self) -> &'static str {
        match self {
            ArrowKind::Phi => "phi",
            ArrowKind::Psi => "psi",
            ArrowKind::PsiPhi => "psiphi",
        }
    }
}

/// One component of the differential, recorded at support level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffArrow {
    pub source: TermKey,
    pub target: TermKey,
    pub kind: ArrowKind,
    pub map_degree: (i64, i64),
}

/// The support of the differential of `F_•`: the ψ-components
/// `T_{ν;k} → T_{ν;k−1}`, the φ-components `T_{ν;k} → T_{ρ;ν_j}` with `ρ`
/// obtained from `ν` by replacing `ν_j` (`j = ν'_k`) with `k−1`, and the
/// (ψφ)-components `T_{ν;k} → T_{ν−ε_j;k}`.
pub fn diff_support(c: &GradedComplex) -> Result<Vec<DiffArrow>> {
    if c.base_ring() == BaseRing::ABar {
        return Err(Error::InvalidParameter(
            "differential support is defined for the F/G complexes".into(),
        ));
    }
    let e = c.e();
    let g = c.g();
    let mut arrows = Vec::new();
    let mut push = |c: &GradedComplex,
                    source: &FreeTerm,
                    target_key: TermKey,
                    kind: ArrowKind,
                    map_degree: (i64, i64)|
     -> Result<()> {
        let Some(target) = c.get(&target_key) else { return Ok(()) };
        if source.hom_degree - target.hom_degree != 1 {
            return Err(Error::StructuralViolation(format!(
                "arrow {} -> {} does not drop homological degree by 1",
                source.key(),
                target_key
            )));
        }
        let shift = (source.twist.0 - target.twist.0, source.twist.1 - target.twist.1);
        if shift != (-map_degree.0, -map_degree.1) {
            return Err(Error::StructuralViolation(format!(
                "arrow {} -> {} has twist shift {:?}, expected -{:?}",
                source.key(),
                target_key,
                shift,
                map_degree
            )));
        }
        if map_degree.0 < 0 || map_degree.1 < 0 || map_degree == (0, 0) {
            return Err(Error::StructuralViolation(format!(
                "arrow {} -> {} has non-minimal map degree {:?}",
                source.key(),
                target_key,
                map_degree
            )));
        }
        arrows.push(DiffArrow { source: source.key(), target: target_key, kind, map_degree });
        Ok(())
    };

    for t in c.iter_terms() {
        let nu = t.nu.entries();
        let k = t.k;

        // psi: drop k by one
        if k >= 1 {
            let n_here = t.n_ext as i64;
            if let Some((_, n_prev)) = t_label(&t.nu, k - 1, e, g)? {
                let key = TermKey { nu: nu.to_vec(), k: k - 1 };
                push(c, t, key, ArrowKind::Psi, (0, n_here - n_prev))?;
            }
        }

        // phi: replace nu_j (j = nu'_k) by k-1, jump to k' = nu_j
        let j = nu_prime(&t.nu, k);
        if k >= 1 && j >= 1 {
            let nu_j = nu[j - 1];
            let mut rho = nu.to_vec();
            rho[j - 1] = k - 1;
            let key = TermKey { nu: rho, k: nu_j };
            push(c, t, key, ArrowKind::Phi, (nu_j - k + 1, 0))?;
        }

        // psi-phi: remove one box from nu, keep k
        for j in 0..nu.len() {
            let is_corner = nu[j] >= 1 && (j + 1 == nu.len() || nu[j] > nu[j + 1]);
            if is_corner && nu[j] != k {
                let mut smaller = nu.to_vec();
                smaller[j] -= 1;
                let key = TermKey { nu: smaller, k };
                push(c, t, key, ArrowKind::PsiPhi, (1, 1))?;
            }
        }
    }
    arrows.sort_by(|a, b| {
        (&a.source, a.kind, &a.target).cmp(&(&b.source, b.kind, &b.target))
    });
    Ok(arrows)
}

/// Ordered term pairs that could carry a minimal differential by degree
/// reasons (homological drop 1, componentwise map degree ≥ 0 and ≠ (0,0))
/// but are not covered by any emitted arrow.  Reported without asserting
/// absence of a map.
pub fn diff_uncovered(
    c: &GradedComplex,
    arrows: &[DiffArrow],
) -> Vec<(TermKey, TermKey, (i64, i64))> {
    let covered: std::collections::HashSet<(TermKey, TermKey)> =
        arrows.iter().map(|a| (a.source.clone(), a.target.clone())).collect();
    let mut out = Vec::new();
    for s in c.iter_terms() {
        for t in c.terms_at(s.hom_degree - 1) {
            let md = (t.twist.0 - s.twist.0, t.twist.1 - s.twist.1);
            if md.0 >= 0 && md.1 >= 0 && md != (0, 0) {
                let pair = (s.key(), t.key());
                if !covered.contains(&pair) {
                    out.push((pair.0, pair.1, md));
                }
            }
        }
    }
    out.sort();
    out
}

/// Renders the differential-support graph in DOT format.
pub fn arrows_to_dot(c: &GradedComplex, arrows: &[DiffArrow]) -> String {
    let mut out = String::from("digraph diff_support {\n  rankdir=LR;\n");
    for t in c.iter_terms() {
        out.push_str(&format!(
            "  \"{}\" [label=\"{} deg={} ({},{})\"];\n",
            t.key().node_name(),
            t.key(),
            t.hom_degree,
            t.twist.0,
            t.twist.1
        ));
    }
    for a in arrows {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [kind={}];\n",
            a.source.node_name(),
            a.target.node_name(),
            a.kind.tag()
        ));
    }
    for (s, t, md) in diff_uncovered(c, arrows) {
        out.push_str(&format!(
            "  // degree-compatible, no documented kind: {} -> {} ({},{})\n",
            s.node_name(),
            t.node_name(),
            md.0,
            md.1
        ));
    }
    out.push_str("}\n");
    out
}

pub fn arrows_to_json(arrows: &[DiffArrow]) -> Value {
    let list: Vec<Value> = arrows
        .iter()
        .map(|a| {
            json!({
                "source": { "nu": a.source.nu, "k": a.source.k },
                "target": { "nu": a.target.nu, "k": a.target.k },
                "kind": a.kind.tag(),
                "map_degree": [a.map_degree.0, a.map_degree.1],
            })
        })
        .collect();
    Value::Array(list)
}

/// Result of the structural assertions on an `F`-type complex.
#[derive(Clone, Debug)]
pub struct StructuralReport {
    pub failures: Vec<String>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Asserts the global shape of `F_•` (or `G_•`): length `eg+1`, a single
/// rank-one top term labeled `(S_{(g−1)^e}E, ∧^f F, S_{(e+1)^g}G*)`, a
/// single untwisted rank-one term in degree 0, and pairwise-distinct
/// representation labels.
pub fn structural_checks(c: &GradedComplex) -> StructuralReport {
    let mut failures = Vec::new();
    let e = c.e();
    let g = c.g();
    let f = c.f();
    let expected_top = (e * g + 1) as i64;

    match c.top_degree() {
        Some(top) if top == expected_top => {
            let terms = c.terms_at(top);
            if terms.len() != 1 {
                failures.push(format!(
                    "top degree {top} holds {} terms, expected 1",
                    terms.len()
                ));
            } else {
                let t = &terms[0];
                let want_e = Partition::new(vec![(g - 1) as i64; e]).unwrap();
                let want_g = Weight::new(vec![(e + 1) as i64; g]).unwrap();
                if t.rank != BigInt::one() {
                    failures.push(format!("top term has rank {}, expected 1", t.rank));
                }
                if t.e_weight != want_e || t.n_ext != f || t.g_weight != want_g {
                    failures.push(format!(
                        "top term labels {} differ from ((g-1)^e; f; (e+1)^g)",
                        t.render_label(true)
                    ));
                }
            }
        }
        other => failures.push(format!(
            "top nonzero degree is {other:?}, expected {expected_top}"
        )),
    }

    if c.min_degree() != Some(0) {
        failures.push(format!("lowest degree is {:?}, expected 0", c.min_degree()));
    }
    let deg0 = c.terms_at(0);
    if deg0.len() != 1
        || deg0.first().map(|t| (t.rank.clone(), t.twist)) != Some((BigInt::one(), (0, 0)))
    {
        failures.push("degree 0 is not a single rank-1 untwisted term".into());
    }

    let mut labels = std::collections::HashSet::new();
    for t in c.iter_terms() {
        if t.hom_degree < 0 {
            failures.push(format!("term {} has negative degree", t.key()));
        }
        let label =
            (t.e_weight.trimmed().to_vec(), t.n_ext, t.g_weight.entries().to_vec());
        if !labels.insert(label) {
            failures.push(format!(
                "representation label {} occurs more than once",
                t.render_label(true)
            ));
        }
    }

    StructuralReport { failures }
}
