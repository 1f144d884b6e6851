mod common;

use proptest::prelude::*;

use common::factor;
use segre::beilinson::{builtin, chern_convergence, e1_table};
use segre::chow::chi;
use segre::cohomology::cohom;
use segre::flag::{chi_flag, cohom_flag, FlagBundle};
use segre::report::all_pass;
use segre::{parse, BoxTerm, BundleExpr, Cohom, Error};

fn term(kinds: u8) -> impl Strategy<Value = BoxTerm> {
    (0..kinds, 0..kinds, -6i64..=3, -6i64..=3, 1u64..=3).prop_map(|(l, r, s, t, k)| BoxTerm {
        left: factor(l, s),
        right: factor(r, t),
        multiplicity: k,
    })
}

/// Sums over {O, Ω, S²Ω}.
fn expr() -> impl Strategy<Value = BundleExpr> {
    prop::collection::vec(term(3), 1..=3).prop_map(BundleExpr::from_terms)
}

/// Sums over {O, Ω}, whose restrictions to F are computed exactly.
fn small_expr() -> impl Strategy<Value = BundleExpr> {
    prop::collection::vec(term(2), 1..=2).prop_map(BundleExpr::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn euler_characteristic_is_alternating_sum(e in expr()) {
        prop_assert_eq!(chi(&e).unwrap(), cohom(&e).unwrap().euler());
    }

    #[test]
    fn serre_duality(e in expr()) {
        let h = cohom(&e).unwrap().0;
        let d = cohom(&e.dual().twist(-3, -3)).unwrap().0;
        prop_assert_eq!(h, [d[4], d[3], d[2], d[1], d[0]]);
    }

    #[test]
    fn dual_is_an_involution(e in expr()) {
        prop_assert_eq!(e.dual().dual(), e);
    }

    #[test]
    fn rank_is_multiplicative(e in expr(), f in expr()) {
        match e.tensor(&f) {
            Ok(p) => prop_assert_eq!(p.rank().unwrap(), e.rank().unwrap() * f.rank().unwrap()),
            Err(Error::OutsideFactorSet(_)) => {}
            Err(other) => prop_assert!(false, "{}", other),
        }
    }

    #[test]
    fn printing_round_trips(e in expr()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn cohomology_is_additive(e in expr(), f in expr()) {
        let sum = cohom(&e).unwrap() + cohom(&f).unwrap();
        prop_assert_eq!(cohom(&(e + f)).unwrap(), sum);
    }

    #[test]
    fn twisting_composes(e in expr(), a in -2i64..=2, b in -2i64..=2) {
        prop_assert_eq!(e.twist(a, b).twist(-a, -b), e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restriction_euler_characteristic(e in small_expr()) {
        let f = FlagBundle::res(e.clone());
        match cohom_flag(&f) {
            Ok(h) => {
                prop_assert_eq!(h.euler(), chi(&e).unwrap() - chi(&e.twist(-1, -1)).unwrap());
                prop_assert_eq!(h.euler(), chi_flag(&f).unwrap());
            }
            Err(Error::Indeterminate(_)) => {}
            Err(other) => prop_assert!(false, "{}", other),
        }
    }

    #[test]
    fn tables_converge(e in small_expr()) {
        for name in ["col13", "col15-fixed"] {
            let t = e1_table(&e, &builtin(name).unwrap()).unwrap();
            prop_assert!(all_pass(&chern_convergence(&t).unwrap()), "{} over {}", e, name);
        }
    }

    #[test]
    fn tables_are_additive(e in small_expr(), f in small_expr()) {
        let c = builtin("col13t").unwrap();
        let (te, tf, tef) = (e1_table(&e, &c).unwrap(), e1_table(&f, &c).unwrap(), e1_table(&(e + f), &c).unwrap());
        for ((x, y), z) in te.cells.iter().zip(&tf.cells).zip(&tef.cells) {
            prop_assert_eq!(z.dim, Some(x.dim.unwrap() + y.dim.unwrap()));
        }
    }
}

#[test]
fn cohom_vectors_add_componentwise() {
    assert_eq!(Cohom([1, 2, 0, 0, 0]) + Cohom([0, 1, 1, 0, 0]), Cohom([1, 3, 1, 0, 0]));
}
