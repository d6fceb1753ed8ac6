//! Bott's algorithm on Grassmannian weights, and the direct-cohomology
//! oracle that recomputes resolution terms by running it over the Cauchy
//! summands of the exterior powers of `ξ = E⊗Q* ⊕ R⊗G*`.

use crate::complexes::{BaseRing, FreeTerm, GradedComplex};
use crate::partitions::{conjugate, enumerate_in_box, nu_prime, Partition, Weight};
use crate::{validate_eg, Error, Result};

/// Outcome of Bott's algorithm: either every cohomology group vanishes, or
/// exactly one `H^length` survives, carrying the Schur module of `weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottOutcome {
    Zero,
    Cohomology { length: usize, weight: Weight },
}

/// Bott's algorithm for `S_{q_part}Q ⊗ S_{r_part}R` on `Grass(r, n)`:
/// add `ρ = (n, n−1, …, 1)` to the concatenated weight; a repetition kills
/// all cohomology, otherwise sort decreasing and subtract `ρ`.  The
/// surviving degree is the number of inversions of the sorting permutation.
pub fn bott(q_part: &Weight, r_part: &Weight, n: usize, r: usize) -> Result<BottOutcome> {
    if r > n {
        return Err(Error::InvalidParameter(format!("r = {r} exceeds n = {n}")));
    }
    if q_part.len() != n - r {
        return Err(Error::LengthMismatch { expected: n - r, got: q_part.len() });
    }
    if r_part.len() != r {
        return Err(Error::LengthMismatch { expected: r, got: r_part.len() });
    }

    let mut shifted: Vec<i64> = Vec::with_capacity(n);
    shifted.extend_from_slice(q_part.entries());
    shifted.extend_from_slice(r_part.entries());
    for (i, x) in shifted.iter_mut().enumerate() {
        *x += (n - i) as i64;
    }

    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(BottOutcome::Zero);
    }

    let mut inversions = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }

    let entries: Vec<i64> =
        sorted.iter().enumerate().map(|(i, &x)| x - (n - i) as i64).collect();
    let weight = Weight::new(entries).expect("sorted-minus-rho weight is dominant");
    Ok(BottOutcome::Cohomology { length: inversions, weight })
}

/// One summand `S_{λ'}E ⊗ S_λQ* ⊗ S_μR ⊗ S_{μ'}G*` of `∧^{|λ|+|μ|}ξ`.
/// Summands with `λ ⊄ e^{g−1}` or `μ ⊄ g^{e+1}` vanish and are never
/// enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchySummand {
    pub lam: Partition,
    pub mu: Partition,
}

impl CauchySummand {
    pub fn exterior_degree(&self) -> i64 {
        self.lam.size() + self.mu.size()
    }

    /// Fiber dimension of the summand, for the Cauchy identity
    /// `Σ dim = C(rank ξ, n)`.
    pub fn fiber_dim(&self, e: usize, g: usize) -> Result<num_bigint::BigInt> {
        use crate::partitions::weyl_dim;
        Ok(weyl_dim(conjugate(&self.lam).weight(), e)?
            * weyl_dim(self.lam.weight(), g - 1)?
            * weyl_dim(self.mu.weight(), e + 1)?
            * weyl_dim(conjugate(&self.mu).weight(), g)?)
    }
}

/// All Cauchy summands of `∧•ξ`: `λ ⊆ e^{g−1}` paired with `μ ⊆ g^{e+1}`.
pub fn cauchy_summands(e: usize, g: usize) -> Result<Vec<CauchySummand>> {
    validate_eg(e, g)?;
    let lams = enumerate_in_box(g - 1, e);
    let mus = enumerate_in_box(e + 1, g);
    let mut out = Vec::with_capacity(lams.len() * mus.len());
    for lam in &lams {
        for mu in &mus {
            out.push(CauchySummand { lam: lam.clone(), mu: mu.clone() });
        }
    }
    Ok(out)
}

/// The dominant weight `p(ν;k) = (ν_1,…,ν_i, k, ν_{i+1}+1,…,ν_{g−1}+1)`
/// (where `i = ν'_k`) together with `N(ν;k) = g−1−ν'_k+k`.
///
/// `p(ν;k)` is also what Bott's algorithm returns on the sequence
/// `(ν_1,…,ν_{g−1}, N(ν;k))`.
pub fn p_and_n(nu: &Weight, k: i64, g: usize) -> Result<(Weight, i64)> {
    if g < 2 || nu.len() != g - 1 {
        return Err(Error::LengthMismatch { expected: g.saturating_sub(1), got: nu.len() });
    }
    let i = nu_prime(nu, k);
    let entries = nu.entries();
    let mut p = Vec::with_capacity(g);
    p.extend_from_slice(&entries[..i]);
    p.push(k);
    p.extend(entries[i..].iter().map(|&x| x + 1));
    let p = Weight::new(p).expect("p(nu;k) is dominant by construction");
    Ok((p, (g - 1 - i) as i64 + k))
}

/// Recomputes the terms of `F_•` by applying Bott's algorithm to the weight
/// `(−λ_{g−1},…,−λ_1, μ_1,…,μ_{e+1})` of each Cauchy summand on
/// `Grass(e+1, F)`.  Every surviving cohomology group must be an exterior
/// power `∧^s F`, and every term must match the `(p(ν;k), N(ν;k))`
/// parametrization; any mismatch is a hard error.
pub fn f_terms_via_bott(e: usize, g: usize) -> Result<GradedComplex> {
    validate_eg(e, g)?;
    let f = e + g;
    let mut terms = Vec::new();
    for summand in cauchy_summands(e, g)? {
        let lam = summand.lam.padded(g - 1)?;
        let mu = summand.mu.padded(e + 1)?;
        let q_part = lam.weight().reversed_negated();
        let outcome = bott(&q_part, mu.weight(), f, e + 1)?;
        let BottOutcome::Cohomology { length: j, weight } = outcome else {
            continue;
        };

        if weight.entries().iter().any(|&x| x != 0 && x != 1) {
            return Err(Error::StructuralViolation(format!(
                "cohomology weight {weight} of the summand (λ={}, μ={}) is not of \
                 exterior-power type",
                lam, mu
            )));
        }
        let n_ext = weight.sum();
        let hom = summand.exterior_degree() - j as i64;
        let k = hom - lam.size();

        let (p, n_closed) = p_and_n(lam.weight(), k, g)?;
        let g_weight = conjugate(&mu).padded(g)?.into_weight();
        let twist = (-lam.size(), -mu.size());
        if hom < 0
            || n_closed != n_ext
            || g_weight != p
            || mu.size() != lam.size() + n_closed
        {
            return Err(Error::StructuralViolation(format!(
                "summand (λ={lam}, μ={mu}) produced H^{j} = ∧^{n_ext}F ⊗ S_{g_weight}G* \
                 in degree {hom}, which does not match (p, N)(ν={lam}; k={k})"
            )));
        }

        terms.push(FreeTerm::build(
            e,
            g,
            lam.weight().clone(),
            k,
            conjugate(&lam),
            n_ext as usize,
            g_weight,
            twist,
            hom,
        )?);
    }
    GradedComplex::from_terms(e, g, BaseRing::A, terms)
}

/// Recomputes the terms of `t_ν` by applying Bott's algorithm to the weight
/// `(−i, −ν_{g−1},…,−ν_1)` on `Grass(g−1, G)` for `0 ≤ i ≤ f`: an `H^0`
/// outcome lands in position `i`, an `H^s` outcome in position `i−s`.
pub fn t_terms_via_bott(nu: &Partition, e: usize, g: usize) -> Result<GradedComplex> {
    validate_eg(e, g)?;
    if !nu.fits_in_box(g - 1, e as i64) {
        return Err(Error::InvalidParameter(format!(
            "nu = {nu} does not fit in the box {e}^{}",
            g - 1
        )));
    }
    let f = e + g;
    let nu = nu.padded(g - 1)?;
    let r_part = nu.weight().reversed_negated();
    let mut terms = Vec::new();
    for i in 0..=(f as i64) {
        let q_part = Weight::new(vec![-i]).expect("singleton weight");
        match bott(&q_part, &r_part, g, g - 1)? {
            BottOutcome::Zero => {}
            BottOutcome::Cohomology { length: s, weight } => {
                // S_w G = S_{w*} G* for the reversed negated labeling
                let g_weight = weight.reversed_negated();
                let position = i - s as i64;
                terms.push(FreeTerm::build(
                    e,
                    g,
                    nu.weight().clone(),
                    position,
                    Partition::empty(),
                    i as usize,
                    g_weight,
                    (0, -i),
                    position,
                )?);
            }
        }
    }
    GradedComplex::from_terms(e, g, BaseRing::ABar, terms)
}
