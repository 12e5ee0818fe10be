mod common;

use common::*;
use hawaii_core::algebra::{int, ratio, squarefree_part};
use hawaii_core::hawaii::count_nonreal;
use hawaii_core::sturm::{
    count_real_roots, distinct_real_root_count, isolate_real_roots, ExtendedRational, RootLocation, SturmChain,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn chain_counts_match_isolation(p in nonconstant(8, 12)) {
        let sf = squarefree_part(&p).unwrap();
        let chain = SturmChain::of(&sf).unwrap();
        let v = chain.variations_at(&ExtendedRational::NegInfinity) - chain.variations_at(&ExtendedRational::PosInfinity);
        let iso = isolate_real_roots(&p).unwrap();
        prop_assert_eq!(v, iso.len());
        prop_assert_eq!(distinct_real_root_count(&p).unwrap(), iso.len());
        let total: u32 = iso.iter().map(|r| r.multiplicity).sum();
        let with_mult = count_real_roots(&p, &ExtendedRational::NegInfinity, &ExtendedRational::PosInfinity, true).unwrap();
        prop_assert_eq!(total as usize, with_mult);
    }

    #[test]
    fn nonreal_count_is_even(p in nonconstant(9, 12)) {
        prop_assert_eq!(count_nonreal(&p).unwrap() % 2, 0);
    }

    #[test]
    fn isolation_is_sound(
        roots in prop::collection::vec((rational(5), 1u32..=3), 0..4),
        tail in nonconstant(4, 6),
    ) {
        let p = &from_root_data(&roots) * &tail;
        let sf = squarefree_part(&p).unwrap();
        let iso = isolate_real_roots(&p).unwrap();
        for w in iso.windows(2) {
            prop_assert!(w[0].upper() <= w[1].lower());
            prop_assert!(w[0].exact_value() != w[1].exact_value() || w[0].exact_value().is_none());
        }
        for r in &iso {
            match &r.location {
                RootLocation::Exact(x) => prop_assert_eq!(p.root_order(x), Some(r.multiplicity as usize)),
                RootLocation::Interval { lo, hi } => {
                    prop_assert!(lo < hi);
                    prop_assert!(sf.sign_at(lo) * sf.sign_at(hi) < 0);
                    if r.multiplicity % 2 == 1 {
                        prop_assert!(p.sign_at(lo) * p.sign_at(hi) < 0);
                    }
                }
            }
        }
        for (x, m) in &roots {
            let hit = iso.iter().find(|r| r.exact_value() == Some(x)).expect("rational root reported exactly");
            prop_assert!(hit.multiplicity >= *m);
        }
    }

    #[test]
    fn refinement_keeps_root(p in nonconstant(7, 10)) {
        let sf = squarefree_part(&p).unwrap();
        let eps = ratio(1, 1000);
        for mut r in isolate_real_roots(&p).unwrap() {
            let before = r.clone();
            r.refine(&sf, &eps);
            prop_assert_eq!(r.multiplicity, before.multiplicity);
            prop_assert!(r.lower() >= before.lower() && r.upper() <= before.upper());
            match &r.location {
                RootLocation::Exact(x) => prop_assert_eq!(sf.eval(x), int(0)),
                RootLocation::Interval { lo, hi } => {
                    prop_assert!(hi - lo < eps);
                    prop_assert!(sf.sign_at(lo) * sf.sign_at(hi) < 0);
                }
            }
        }
    }
}
