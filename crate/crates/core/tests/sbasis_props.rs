mod common;

use common::*;
use matdet::jets::jet_ideal_span;
use matdet::sbasis::{std_basis, syzygies};
use matdet::{Ideal, ModuleElem, Monomial, Polynomial};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn std_basis_is_idempotent(gens in prop::collection::vec(raw_poly_in(2, 1, 3, 3), 1..4)) {
        let r = ring_gf(2);
        let i = ideal(&r, &gens);
        let once = std_basis(&r, i.gens()).unwrap().polys();
        let twice = std_basis(&r, &once).unwrap().polys();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn combinations_are_members(
        gens in prop::collection::vec(raw_poly_in(2, 1, 3, 3), 1..4),
        coeffs in prop::collection::vec(raw_poly(2, 2, 3), 3),
    ) {
        let r = ring_gf(2);
        let i = ideal(&r, &gens);
        let mut f = Polynomial::zero(&r);
        for (g, c) in i.gens().iter().zip(&coeffs) {
            f = &f + &(g * &build(&r, c));
        }
        prop_assert!(i.contains(&f).unwrap());
        prop_assert!(std_basis(&r, i.gens()).unwrap().reduce_poly(&f).is_zero());
    }

    #[test]
    fn syzygies_vanish(gens in prop::collection::vec(raw_poly_in(2, 1, 3, 3), 1..4)) {
        let r = ring_gf(2);
        let i = ideal(&r, &gens);
        let elems: Vec<ModuleElem> = i.gens().iter().map(|g| ModuleElem::from_polys(&r, std::slice::from_ref(g))).collect();
        for s in syzygies(&r, &elems).unwrap() {
            let mut sum = Polynomial::zero(&r);
            for (k, g) in i.gens().iter().enumerate() {
                sum = &sum + &(&s.component(k) * g);
            }
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn colength_matches_jets(gens in prop::collection::vec(raw_poly_in(2, 1, 3, 3), 1..4)) {
        let r = ring_gf(2);
        let i = Ideal::new(&r, [ideal(&r, &gens).gens(), &[build(&r, &vec![(vec![5, 0], 1)]), build(&r, &vec![(vec![0, 5], 1)])]].concat());
        let ll = i.loewy_length().unwrap();
        let span = jet_ideal_span(&i, ll + 1);
        let total = (0..=ll).map(|d| d as usize + 1).sum::<usize>();
        let sb = i.std_basis().unwrap();
        let standard = (0..ll)
            .flat_map(|d| Monomial::all_of_degree(2, d))
            .filter(|m| !sb.leading_divides(0, m))
            .count();
        prop_assert_eq!(standard, total - span.rank());
    }
}
