//! Randomized algebra laws for the truncated bigraded series, plus a few
//! cross-module property sweeps that are cheap enough to run always.

use num_bigint::BigInt;
use proptest::prelude::*;

use equires::hilbert::{BiSeries, Region};

fn arb_series() -> impl Strategy<Value = BiSeries> {
    // small supports in the positive quadrant; Total(8) is downward closed,
    // so truncated products are exact and the ring laws must hold on the nose
    prop::collection::vec(((0i64..5, 0i64..5), -20i64..20), 0..6).prop_map(|entries| {
        BiSeries::from_entries(
            Region::total(8),
            entries.into_iter().map(|(k, v)| (k, BigInt::from(v))),
        )
    })
}

proptest! {
    #[test]
    fn mul_is_commutative(a in arb_series(), b in arb_series()) {
        let r = Region::total(8);
        prop_assert_eq!(a.mul(&b, r), b.mul(&a, r));
    }

    #[test]
    fn mul_is_associative(a in arb_series(), b in arb_series(), c in arb_series()) {
        let r = Region::total(8);
        prop_assert_eq!(a.mul(&b, r).mul(&c, r), a.mul(&b.mul(&c, r), r));
    }

    #[test]
    fn mul_distributes_over_add(a in arb_series(), b in arb_series(), c in arb_series()) {
        let r = Region::total(8);
        prop_assert_eq!(
            a.mul(&b.add(&c), r),
            a.mul(&b, r).add(&a.mul(&c, r))
        );
    }

    #[test]
    fn sub_of_self_is_zero(a in arb_series()) {
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn coefficients_outside_the_region_are_never_stored(a in arb_series(), b in arb_series()) {
        let r = Region::total(4);
        let p = a.mul(&b, r);
        prop_assert!(p.iter().all(|(&(d1, d2), _)| r.contains(d1, d2)));
    }
}

#[test]
fn conjugate_is_an_involution_up_to_6x6() {
    use equires::partitions::{conjugate, enumerate_in_box};
    for rows in 0..=6 {
        for cols in 0..=6 {
            for p in enumerate_in_box(rows, cols) {
                assert_eq!(conjugate(&conjugate(&p)), p);
            }
        }
    }
}

#[test]
fn complement_pairing_mirrors_term_counts() {
    use equires::complexes::f_terms_closed;
    for (e, g) in [(1, 2), (2, 2), (2, 3), (3, 3), (1, 5)] {
        let c = f_terms_closed(e, g).unwrap();
        let top = (e * g + 1) as i64;
        for d in 0..=top {
            assert_eq!(c.terms_at(d).len(), c.terms_at(top - d).len(), "({e},{g}) deg {d}");
        }
    }
}

#[test]
fn strand_degrees_are_the_box_sizes() {
    use equires::complexes::strand;
    use equires::partitions::enumerate_in_box;
    for (e, g) in [(2, 2), (2, 3), (3, 3)] {
        let s = strand(e, g).unwrap();
        let mut got: Vec<i64> = s.iter_terms().map(|t| t.hom_degree).collect();
        got.sort();
        let mut want: Vec<i64> =
            enumerate_in_box(g - 1, e).into_iter().map(|nu| nu.size()).collect();
        want.sort();
        assert_eq!(got, want);
    }
}
