mod common;

use common::*;
use hawaii_core::algebra::int;
use hawaii_core::hawaii::*;
use hawaii_core::sturm::real_root_count;
use hawaii_core::{Poly, Rational};
use proptest::prelude::*;

/// Rational real roots with multiplicities times irreducible quadratics.
fn structured(max_real: usize, max_quads: usize) -> impl Strategy<Value = Poly> {
    (
        prop::collection::vec((rational(4), 1u32..=3), 0..=max_real),
        prop::collection::vec(quadratic_no_real_roots(), 0..=max_quads),
        prop_oneof![-3i64..=-1, 1i64..=3],
    )
        .prop_filter_map("nonconstant", |(roots, quads, c)| {
            let p = quads.iter().fold(from_root_data(&roots), |acc, q| &acc * q).scale(&int(c));
            (!p.is_constant()).then_some(p)
        })
}

proptest! {
    #[test]
    fn polynomial_identities(p in nonconstant(10, 9), s in rational(6)) {
        let r = check_identities(&p, &s);
        prop_assert!(r.all_hold(), "{:?}", r);
    }

    #[test]
    fn hawaii_inequality(p in structured(4, 3)) {
        let r = check_hawaii(&p).unwrap();
        prop_assert!(r.hawaii_holds, "{:?}", r);
        prop_assert_eq!(r.nonreal_count_2m, r.degree - r.real_zero_count_with_mult);
    }

    #[test]
    fn laguerre_never_adds_nonreal_zeros(p in structured(4, 3), s in rational(8)) {
        let ps = laguerre_derivative(&p, &s);
        prop_assert!(count_nonreal(&ps).unwrap() <= count_nonreal(&p).unwrap());
    }

    #[test]
    fn inversion_round_trip(p in nonzero(9, 9), s in nonzero_rational(6)) {
        prop_assert_eq!(invert_laguerre(&laguerre_derivative(&p, &s), &s).unwrap(), p);
    }

    #[test]
    fn multiplicity_lift_round_trip(
        lambda in rational(3),
        r in 1u32..=3,
        g in structured(2, 1),
        s in nonzero_rational(4),
    ) {
        prop_assume!(g.eval(&lambda) != int(0));
        let ps = &Poly::linear(&lambda).pow(r + 1) * &g;
        let p = invert_laguerre(&ps, &s).unwrap();
        prop_assume!(p.eval(&lambda) != int(0));
        prop_assert_eq!(q_zero_order(&p, &lambda).unwrap(), r as usize);
        let c = verify_sigma_correspondence(&p, &lambda).unwrap();
        prop_assert_eq!(&c.sigma, &s);
        prop_assert_eq!(c.outcome, Outcome::Verified);
    }

    #[test]
    fn equality_under_global_negativity(p in structured(3, 2), s in rational(4)) {
        let r = verify_craven_equality(&p, &s).unwrap();
        prop_assert!(!r.outcome.is_violation(), "{:?}", r);
    }

    #[test]
    fn negativity_matches_reduced_numerator(p in structured(4, 2), s in rational(4)) {
        let ps = laguerre_derivative(&p, &s);
        prop_assume!(!ps.is_constant());
        let num = q_reduced(&ps).unwrap().numerator().clone();
        let no_real_zeros = num.is_constant() || real_root_count(&num).unwrap() == 0;
        prop_assert_eq!(check_global_negativity(&ps).unwrap(), no_real_zeros);
        prop_assert!(num.lead_sign() < 0);
    }

    #[test]
    fn lower_bound_for_any_sigma(p in structured(4, 3), s in rational(8)) {
        let ps = laguerre_derivative(&p, &s);
        let z = count_real_zeros_q(&p).unwrap();
        prop_assert!(z + count_nonreal(&ps).unwrap() >= count_nonreal(&p).unwrap());
    }

    #[test]
    fn lead_of_f_closed_form(p in nonconstant(10, 9)) {
        let n = p.degree().unwrap();
        let a = p.lead().unwrap().clone();
        let expected: Rational = -(&a * &a) * int(n as i64);
        prop_assert_eq!(f_numerator(&p).unwrap().lead().cloned(), Some(expected));
    }

    #[test]
    fn index_identity(p in structured(3, 2), s in rational(4)) {
        let r = index_identity_check(&p, &s).unwrap();
        prop_assert_eq!(&r.outcome, &Outcome::Verified, "{:?}", r);
    }

    #[test]
    fn multiplicity_lift_at_rational_points(p in structured(3, 2), s in nonzero_rational(4), lambda in rational(4)) {
        let r = verify_multiplicity_lift(&p, &s, &lambda).unwrap();
        prop_assert!(!r.outcome.is_violation(), "{:?}", r);
    }

    #[test]
    fn sandwich_lower_side(p in structured(3, 2), s in rational(4)) {
        let r = verify_sandwich(&p, &s).unwrap();
        prop_assert!(!r.outcome.is_violation(), "{:?}", r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sigma_scan_lower_bound(p in structured(2, 2)) {
        prop_assume!(p.degree() >= Some(2));
        let scan = sigma_scan(&p).unwrap();
        prop_assert!(scan.cells_consistent());
        prop_assert_eq!(scan.min_2m_sigma_star % 2, 0);
        let r = verify_lower_bound(&p).unwrap();
        prop_assert_eq!(&r.outcome, &Outcome::Verified, "{:?}", r);
    }
}
