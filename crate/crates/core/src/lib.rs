//! Exact, equivariant term bookkeeping for a family of minimal free
//! resolutions over bigraded polynomial rings.
//!
//! The library computes the representation labels, twists, homological
//! degrees and ranks of the resolution `F_•` of the bigraded ring `A/I`
//! (relations `ψφ = 0` and the maximal minors of `ψ`), of the complexes
//! `t_ν` resolving a family of maximal Cohen-Macaulay modules over the
//! determinantal ring (the Eagon-Northcott complexes are the `ν = (i,…,i)`
//! members), and of the resolution `G_•` of the universal ring `B/J`,
//! whose terms agree with those of `F_•`.
//!
//! Two independent routes produce the same data: Bott's algorithm applied
//! to the Cauchy summands of `∧•ξ` ([`bott`]), and closed-form generators
//! driven by the `(p(ν;k), N(ν;k))` parametrization ([`complexes`]).  The
//! [`hilbert`] module certifies the term data against exact bigraded
//! Hilbert series via Euler characteristics.

pub mod bott;
pub mod complexes;
mod error;
pub mod hilbert;
pub mod partitions;

pub use error::{Error, Result};

/// Checks the ambient dimension conventions `e ≥ 1`, `g ≥ 2`.
pub(crate) fn validate_eg(e: usize, g: usize) -> Result<()> {
    if e < 1 {
        return Err(Error::InvalidParameter(format!("e must be >= 1, got {e}")));
    }
    if g < 2 {
        return Err(Error::InvalidParameter(format!("g must be >= 2, got {g}")));
    }
    Ok(())
}
