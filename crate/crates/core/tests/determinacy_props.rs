mod common;

use common::*;
use matdet::determinacy::{
    briancon_skoda_check, congr_bounds, glr_bounds, jacobian, radical_support_glr, sing, sing_matrix,
    t1_ann, verdict,
};
use matdet::random::RandomSource;
use matdet::{
    Decision, DerivationSet, GroupBase, GroupSpec, Ideal, Multiplier, PolyMatrix, Polynomial, RadicalOptions,
    Space,
};
use proptest::prelude::*;

fn t1(base: GroupBase, a: &PolyMatrix) -> Ideal {
    t1_ann(GroupSpec::new(base), a).unwrap()
}

fn max_der(a: &PolyMatrix) -> DerivationSet {
    DerivationSet::new(a.ring(), Multiplier::Max)
}

/// Compares radicals on the punctured spectrum: the `m`-primary parts and
/// the unit ideal are both saturated away.
fn radicals_off_origin(a: &Ideal, b: &Ideal) -> Decision {
    let m = Ideal::max_ideal(a.ring());
    let a = a.saturate(&m).unwrap().0;
    let b = b.saturate(&m).unwrap().0;
    radicals(&a, &b)
}

fn radicals(a: &Ideal, b: &Ideal) -> Decision {
    let opts = RadicalOptions {
        rabinowitsch: true,
        ..RadicalOptions::default()
    };
    a.radicals_equal(b, &opts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exactness(seed in any::<u64>(), p in 1usize..=2, m in 1usize..=2, extra in 0usize..=1) {
        let a = matrix(p, m, m + extra, 2, seed);
        let jac = jacobian(&a, &max_der(&a)).unwrap();
        prop_assert!(t1(GroupBase::Aut, &a).equals(&jac.ann_coker().unwrap()).unwrap());
        if m == 1 {
            let s = sing(&a.minors(1).unwrap(), a.cols(), &max_der(&a)).unwrap();
            prop_assert!(t1(GroupBase::CGlr, &a).equals(&s).unwrap());
        }
    }

    #[test]
    fn glr_sandwich_and_radical(seed in any::<u64>(), p in 1usize..=2, m in 1usize..=2, extra in 0usize..=1) {
        let a = matrix(p, m, m + extra, 2, seed);
        let exact = t1(GroupBase::CGlr, &a);
        let (lower, upper) = glr_bounds(&a).unwrap();
        prop_assert!(subset(&lower, &exact));
        prop_assert!(subset(&exact, &upper));
        prop_assert_ne!(radicals_off_origin(&exact, &radical_support_glr(&a).unwrap()), Decision::No);
    }

    #[test]
    fn congr_sandwich(seed in any::<u64>(), p in 1usize..=2, m in 1usize..=3, skew in any::<bool>()) {
        let mut src = RandomSource::new(&ring_gf(p), seed);
        let a = if skew { src.skew(m, 1, 2, 2) } else { src.symmetric(m, 1, 2, 2, Space::Symmetric) };
        let exact = t1(GroupBase::CGcongr, &a);
        let (lower, upper) = congr_bounds(&a).unwrap();
        prop_assert!(subset(&lower, &exact));
        prop_assert!(subset(&exact, &upper));
        prop_assert_ne!(radicals_off_origin(&exact, &upper), Decision::No);
    }

    #[test]
    fn radical_support_differs_at_the_origin(seed in any::<u64>()) {
        let ring = ring_gf(1);
        let x = Polynomial::var(&ring, 0);
        let u = RandomSource::new(&ring, seed).poly(0, 2, 3);
        let f = x.try_mul(&Polynomial::one(&ring).try_add(&x.try_mul(&u).unwrap()).unwrap()).unwrap();
        let a = PolyMatrix::new(&ring, 1, 1, vec![f], Space::Full).unwrap();
        prop_assert!(t1(GroupBase::CGlr, &a).equals(&Ideal::max_ideal(&ring)).unwrap());
        prop_assert!(radical_support_glr(&a).unwrap().is_unit().unwrap());
    }

    #[test]
    fn sing_between_fitting_ideals(seed in any::<u64>(), p in 1usize..=2, m in 1usize..=2, extra in 0usize..=1) {
        let a = matrix(p, m, m + extra, 2, seed);
        let n = a.cols();
        for r in 0..m {
            let next = a.minors(r as i64 + 1).unwrap();
            let s = sing(&next, (m - r) * (n - r), &DerivationSet::new(a.ring(), Multiplier::Unit)).unwrap();
            prop_assert!(subset(&next, &s));
            prop_assert!(subset(&s, &a.minors(r as i64).unwrap()));
        }
    }

    #[test]
    fn sing_ignores_generator_choice(
        gens in prop::collection::vec(raw_poly_in(2, 1, 3, 3), 1..3),
        mix in prop::collection::vec(raw_poly(2, 1, 2), 1..3),
        r in 1usize..=2,
    ) {
        let ring = ring_gf(2);
        let j = ideal(&ring, &gens);
        prop_assume!(!j.is_zero());
        let d = DerivationSet::new(&ring, Multiplier::Unit);
        let base = j.minimal_gens().unwrap().gens().to_vec();
        prop_assume!(r <= base.len());
        let mut extended = base.clone();
        for c in &mix {
            let c = build(&ring, c);
            let g = base.iter().fold(Polynomial::zero(&ring), |acc, f| acc.try_add(&c.try_mul(f).unwrap()).unwrap());
            extended.push(g);
        }
        let s0 = sing_matrix(&base, &d).unwrap().ann_coker_j(r as i64).unwrap();
        let s1 = sing_matrix(&extended, &d).unwrap().ann_coker_j(r as i64).unwrap();
        prop_assert!(s0.equals(&s1).unwrap());
    }

    #[test]
    fn sing_radical_matches_jacobian_minors(
        gens in prop::collection::vec(raw_poly_in(2, 1, 3, 3), 1..3),
        r in 1usize..=2,
    ) {
        let ring = ring_gf(2);
        let j = ideal(&ring, &gens);
        prop_assume!(!j.is_zero());
        let d = DerivationSet::new(&ring, Multiplier::Unit);
        let base = j.minimal_gens().unwrap().gens().to_vec();
        let rows: Vec<Vec<Polynomial>> = base.iter().map(|f| d.apply(f).unwrap()).collect();
        let cols = rows[0].len();
        let jac = PolyMatrix::new(&ring, rows.len(), cols, rows.concat(), Space::Full).unwrap();
        let rhs = j.sum(&jac.minors(r as i64).unwrap()).unwrap();
        prop_assert_ne!(radicals(&sing(&j, r, &d).unwrap(), &rhs), Decision::No);
    }

    #[test]
    fn orbit_invariance(seed in any::<u64>(), m in 1usize..=2, extra in 0usize..=1) {
        let a = matrix(2, m, m + extra, 2, seed);
        let mut src = RandomSource::new(a.ring(), seed.wrapping_add(1));
        let u = src.unimodular(m, 1);
        let v = src.unimodular(m + extra, 1);
        let b = u.mul(&a).and_then(|x| x.mul(&v)).unwrap();
        prop_assert!(t1(GroupBase::Glr, &a).equals(&t1(GroupBase::Glr, &b)).unwrap());
    }

    #[test]
    fn subgroup_monotonicity(seed in any::<u64>(), m in 1usize..=2, extra in 0usize..=1) {
        let a = matrix(2, m, m + extra, 2, seed);
        let gr = t1(GroupBase::Gr, &a);
        let cgr = t1(GroupBase::CGr, &a);
        prop_assert!(subset(&gr, &cgr));
        prop_assert!(subset(&cgr, &t1(GroupBase::CGlr, &a)));
    }

    #[test]
    fn order_bounds_are_ordered(seed in any::<u64>(), base in prop::sample::select(vec![GroupBase::Glr, GroupBase::CGlr, GroupBase::Gr])) {
        let a = matrix(2, 1, 2, 2, seed);
        if let matdet::Verdict::FinitelyDetermined { lo, hi } = verdict(GroupSpec::new(base), &a).unwrap().verdict {
            prop_assert!(lo <= hi);
        }
    }

    #[test]
    fn identity_block_splits_off(seed in any::<u64>(), m in 1usize..=2) {
        let a = matrix(2, m, m + 1, 2, seed);
        let big = PolyMatrix::identity(a.ring(), 1).block_diag(&a);
        prop_assert!(t1(GroupBase::CGlr, &a).equals(&t1(GroupBase::CGlr, &big)).unwrap());
        prop_assert!(t1(GroupBase::Glr, &a).equals(&t1(GroupBase::Glr, &big)).unwrap());
    }

    #[test]
    fn small_dimension_equivalence(seed in any::<u64>()) {
        let a = matrix(1, 1, 2, 3, seed);
        let lr = verdict(GroupSpec::new(GroupBase::CGlr), &a).unwrap().verdict;
        let r = verdict(GroupSpec::new(GroupBase::Gr), &a).unwrap().verdict;
        prop_assert_eq!(lr.label(), r.label());
    }

    #[test]
    fn briancon_skoda(seed in any::<u64>()) {
        let f = RandomSource::new(&ring_gf(2), seed).nonzero_poly(2, 5, 4);
        prop_assert!(briancon_skoda_check(&f).unwrap());
    }
}
