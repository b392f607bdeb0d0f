mod common;

use common::*;
use matdet::determinacy::expected_height;
use matdet::jets::jet_loewy;
use matdet::{Ideal, Space};
use proptest::prelude::*;

fn monomial_ideal(r: &matdet::Ring, exps: &[(u32, u32)]) -> Ideal {
    let raws: Vec<RawPoly> = exps.iter().map(|&(a, b)| vec![(vec![a, b], 1)]).collect();
    ideal(r, &raws)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn saturation_grows_and_is_idempotent(
        i in prop::collection::vec(raw_poly_in(2, 1, 3, 3), 1..3),
        j in prop::collection::vec(raw_poly_in(2, 1, 2, 2), 1..3),
    ) {
        let r = ring_gf(2);
        let (i, j) = (ideal(&r, &i), ideal(&r, &j));
        let (s, _) = i.saturate(&j).unwrap();
        prop_assert!(subset(&i, &s));
        let (s2, _) = s.saturate(&j).unwrap();
        prop_assert!(s2.equals(&s).unwrap());
    }

    #[test]
    fn loewy_is_antitone(
        a in prop::collection::vec((0u32..5, 0u32..5), 1..4),
        b in prop::collection::vec((0u32..5, 0u32..5), 0..3),
    ) {
        let r = ring_gf(2);
        let mut gens = a.clone();
        gens.extend([(6, 0), (0, 6)]);
        let i = monomial_ideal(&r, &gens);
        gens.extend(b);
        let j = monomial_ideal(&r, &gens);
        prop_assert!(i.loewy_length().unwrap() >= j.loewy_length().unwrap());
        let ll = i.loewy_length().unwrap();
        prop_assert_eq!(jet_loewy(&i, ll + 1), Some(ll));
    }

    #[test]
    fn quotient_laws(
        i in prop::collection::vec((0u32..4, 0u32..4), 1..4),
        j in prop::collection::vec((0u32..3, 0u32..3), 1..3),
        k in prop::collection::vec((0u32..3, 0u32..3), 1..3),
    ) {
        let r = ring_gf(2);
        let (i, j, k) = (monomial_ideal(&r, &i), monomial_ideal(&r, &j), monomial_ideal(&r, &k));
        let ij = i.quotient(&j).unwrap();
        prop_assert!(subset(&i, &ij));
        let lhs = ij.quotient(&k).unwrap();
        let rhs = i.quotient(&j.product(&k).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn minors_height_bound(seed in any::<u64>(), p in 1usize..=3, m in 1usize..=2, extra in 0usize..=1) {
        let n = m + extra;
        let a = matrix(p, m, n, 2, seed);
        for j in 1..=m {
            let h = a.minors(j as i64).unwrap().height().unwrap();
            prop_assert!(h <= expected_height(Space::Full, m, n, j, p));
        }
    }
}
