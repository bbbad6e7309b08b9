mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use common::Exp;
use polyshift::polymatroid::{
    check_strong_exchange, check_symmetric_exchange, is_polymatroidal, principal_borel, strong_exchange_ideal,
    transversal_product, veronese,
};
use polyshift::primes::{ass, colon_prime, localize, v_number, MonomialPrime};
use polyshift::resolution::{
    betti, depth_quotient, has_linear_resolution, hs, koszul_tor, lex_linear_quotients, reg_koszul, Field,
};
use polyshift::{Error, Monomial, MonomialIdeal};

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=5)
            .prop_map(move |gens| MonomialIdeal::from_exponents(n, gens).expect("valid"))
            .prop_filter("proper nonzero ideal", |i| !i.is_zero() && !i.is_unit())
    })
}

/// Polymatroidal instances built by construction: Veronese type, principal
/// Borel, transversal products, times a monomial.
fn polymatroidal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=4).prop_flat_map(|n| {
        prop_oneof![
            (prop::collection::vec(0u32..=2, n), 1u32..=3)
                .prop_filter_map("sum a >= d", move |(a, d)| veronese(&a, d).ok()),
            prop::collection::vec(0u32..=2, n)
                .prop_filter_map("nonconstant", |u| principal_borel(&Monomial::new(u)).ok()),
            prop::collection::vec(prop::collection::btree_set(0usize..n, 1..=n), 1..=2).prop_filter_map(
                "valid primes",
                move |ps| transversal_product(n, &ps.into_iter().map(|p| p.into_iter().collect()).collect::<Vec<_>>()).ok()
            ),
            (prop::collection::vec(0u32..=1, n), prop::collection::vec(0u32..=2, n), 1u32..=3).prop_filter_map(
                "valid",
                |(u, a, d)| strong_exchange_ideal(&Monomial::new(u), &a, d).ok()
            ),
        ]
        .prop_filter("nonzero, a few generators", |i| !i.is_zero() && !i.is_unit() && i.num_gens() <= 15)
    })
}

fn multigraded(i: &MonomialIdeal) -> BTreeMap<(usize, Exp), u64> {
    koszul_tor(i, Field::RATIONALS)
        .expect("koszul")
        .entries()
        .iter()
        .map(|((k, a), v)| ((*k, a.clone()), *v))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn koszul_matches_brute_force_tor(i in ideal_strategy()) {
        let n = i.n();
        prop_assert_eq!(multigraded(&i), common::betti_table(n, &i.exponents()));
        let over_f2 = koszul_tor(&i, Field::new(2).unwrap()).unwrap();
        prop_assert_eq!(over_f2.totals(), common::betti_totals(n, &i.exponents()));
    }

    #[test]
    fn shift_ideals_match_tor_when_linear_quotients_exist(i in ideal_strategy()) {
        let n = i.n();
        let oracle = common::shift_ideals(n, &i.exponents());
        for (k, expected) in oracle.iter().enumerate() {
            match hs(&i, k) {
                Ok(h) => prop_assert_eq!(&common::gens_set(&h), expected, "HS_{}", k),
                Err(Error::NoLinearQuotients) => {}
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }

    #[test]
    fn ass_matches_witness_sweep(i in ideal_strategy()) {
        let n = i.n();
        let lib = ass(&i).unwrap();
        let oracle = common::ass(n, &i.exponents());
        let primes: BTreeSet<Vec<usize>> = lib.primes().map(|p| p.vars().to_vec()).collect();
        prop_assert_eq!(&primes, &oracle.keys().cloned().collect::<BTreeSet<_>>());
        for (p, w) in lib.witnesses() {
            let found = colon_prime(&i, w);
            prop_assert_eq!(found.as_ref(), Some(p));
        }
        prop_assert_eq!(v_number(&i).ok(), oracle.values().copied().min());
        // m ∈ Ass iff depth 0
        let m = (0..n).collect::<Vec<_>>();
        prop_assert_eq!(oracle.contains_key(&m), depth_quotient(&i).unwrap() == 0);
        prop_assert_eq!(depth_quotient(&i).unwrap(), common::depth_quotient(n, &i.exponents()));
    }

    #[test]
    fn polymatroidal_ideals_have_linear_quotients(i in polymatroidal_strategy()) {
        let n = i.n();
        prop_assert!(is_polymatroidal(&i));
        prop_assert!(common::is_polymatroidal(&i.exponents()));
        prop_assert!(check_symmetric_exchange(&i).unwrap());
        let lq = lex_linear_quotients(&i, None).unwrap();
        prop_assert_eq!(lq.betti_numbers(), common::betti_totals(n, &i.exponents()));
        prop_assert_eq!(betti(&i).unwrap(), common::betti_totals(n, &i.exponents()));
        prop_assert!(has_linear_resolution(&i).unwrap());
        prop_assert_eq!(reg_koszul(&i, Field::RATIONALS).unwrap(), i.alpha().unwrap());
        prop_assert_eq!(Some(i.alpha().unwrap()), common::regularity(n, &i.exponents()));
    }

    #[test]
    fn polymatroidal_closure(a in polymatroidal_strategy(), b in polymatroidal_strategy(), cap in prop::collection::vec(0u32..=3, 4)) {
        prop_assume!(a.n() == b.n());
        let n = a.n();
        let prod = a.product(&b).unwrap();
        prop_assert!(is_polymatroidal(&prod));
        prop_assert!(common::is_polymatroidal(&prod.exponents()));
        let r = a.restriction(&cap[..n]).unwrap();
        if !r.is_zero() {
            prop_assert!(common::is_polymatroidal(&r.exponents()));
        }
        let m = a.mul_maximal();
        prop_assert!(common::is_polymatroidal(&m.exponents()));
    }

    #[test]
    fn localization_sets_outside_variables_to_one(i in ideal_strategy(), vars in prop::collection::btree_set(0usize..4, 1..=4)) {
        let n = i.n();
        let vars: Vec<usize> = vars.into_iter().filter(|&v| v < n).collect();
        prop_assume!(!vars.is_empty());
        let p = MonomialPrime::new(vars.clone());
        let local = localize(&i, &p).unwrap();
        let expected: Vec<Exp> = i
            .exponents()
            .iter()
            .map(|g| (0..n).map(|j| if vars.contains(&j) { g[j] } else { 0 }).collect())
            .collect();
        prop_assert_eq!(common::gens_set(&local), common::minimalize(&expected));
    }
}

#[test]
fn strong_exchange_characterization() {
    let v = veronese(&[2, 1, 1], 2).unwrap();
    assert!(check_strong_exchange(&v).unwrap());
    // (x1,x2)(x3,x4) is polymatroidal but lacks the strong exchange property
    let t = transversal_product(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    assert!(is_polymatroidal(&t));
    assert!(!check_strong_exchange(&t).unwrap());
}

#[test]
fn non_linear_quotient_ideal_is_refused() {
    // x1x2, x3x4 has no linear quotients; hs must refuse rather than guess
    let i = MonomialIdeal::from_exponents(4, vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
    assert!(matches!(hs(&i, 1), Err(Error::NoLinearQuotients)));
    let tor = koszul_tor(&i, Field::RATIONALS).unwrap().hs_ideal(1);
    assert_eq!(common::gens_set(&tor), [vec![1, 1, 1, 1]].into_iter().collect());
}
