//! Randomized run of the invariant properties.

use matdet::determinacy::{briancon_skoda_check, glr_bounds, jacobian, sing, t1_ann, verdict};
use matdet::jets::JetAlgebra;
use matdet::random::RandomSource;
use matdet::{
    DerivationSet, GroupBase, GroupSpec, Ideal, Multiplier, PolyMatrix, Polynomial, Result, Ring, Verdict,
};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

pub const CASES: usize = 8;

type Property = fn(&mut RandomSource) -> Result<bool>;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("print_parse_round_trip", print_parse),
    ("ann_coker_chain", ann_coker_chain),
    ("aut_exactness", aut_exactness),
    ("one_row_exactness", one_row_exactness),
    ("glr_sandwich", glr_sandwich),
    ("sing_sandwich", sing_sandwich),
    ("orbit_invariance", orbit_invariance),
    ("subgroup_monotonicity", subgroup_monotonicity),
    ("order_bounds_ordered", order_bounds_ordered),
    ("jet_oracle_agreement", jet_oracle),
    ("briancon_skoda", briancon_skoda),
];

fn small_matrix(src: &mut RandomSource) -> PolyMatrix {
    let m = src.range(1, 2);
    let n = src.range(m, 2);
    src.matrix(m, n, 1, 2, 2, 0.2)
}

fn t1(base: GroupBase, a: &PolyMatrix) -> Result<Ideal> {
    t1_ann(GroupSpec::new(base), a)
}

fn print_parse(src: &mut RandomSource) -> Result<bool> {
    let f = src.poly(0, 4, 5);
    let g = Polynomial::parse(src.ring(), &f.to_string())?;
    Ok(g == f && g.to_string() == f.to_string())
}

fn ann_coker_chain(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    let m = a.rows() as i64;
    let ann = a.ann_coker()?;
    let im = a.minors(m)?;
    let mut ok = ann.contains_ideal(&im)? && im.contains_ideal(&ann.power(m as u32)?)?;
    for j in 0..m {
        ok &= a.minors(j + 1)?.contains_ideal(&ann.product(&a.minors(j)?)?)?;
        let aj = a.ann_coker_j(j + 1)?;
        ok &= a.minors(j + 1)?.quotient(&a.minors(j)?)?.contains_ideal(&aj)?;
    }
    Ok(ok)
}

fn aut_exactness(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    let jac = jacobian(&a, &DerivationSet::new(a.ring(), Multiplier::Max))?;
    t1(GroupBase::Aut, &a)?.equals(&jac.ann_coker()?)
}

fn one_row_exactness(src: &mut RandomSource) -> Result<bool> {
    let n = src.range(1, 3);
    let a = src.matrix(1, n, 1, 2, 2, 0.2);
    let s = sing(&a.minors(1)?, n, &DerivationSet::new(a.ring(), Multiplier::Max))?;
    t1(GroupBase::CGlr, &a)?.equals(&s)
}

fn glr_sandwich(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    let exact = t1(GroupBase::CGlr, &a)?;
    let (lower, upper) = glr_bounds(&a)?;
    Ok(exact.contains_ideal(&lower)? && upper.contains_ideal(&exact)?)
}

fn sing_sandwich(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    let (m, n) = (a.rows(), a.cols());
    let d = DerivationSet::new(a.ring(), Multiplier::Unit);
    let mut ok = true;
    for r in 0..m {
        let next = a.minors(r as i64 + 1)?;
        let s = sing(&next, (m - r) * (n - r), &d)?;
        ok &= s.contains_ideal(&next)? && a.minors(r as i64)?.contains_ideal(&s)?;
    }
    Ok(ok)
}

fn orbit_invariance(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    let u = src.unimodular(a.rows(), 1);
    let v = src.unimodular(a.cols(), 1);
    let b = u.mul(&a)?.mul(&v)?;
    t1(GroupBase::Glr, &a)?.equals(&t1(GroupBase::Glr, &b)?)
}

fn subgroup_monotonicity(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    let cgr = t1(GroupBase::CGr, &a)?;
    Ok(cgr.contains_ideal(&t1(GroupBase::Gr, &a)?)? && t1(GroupBase::CGlr, &a)?.contains_ideal(&cgr)?)
}

fn order_bounds_ordered(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    Ok(match verdict(GroupSpec::new(GroupBase::CGlr), &a)?.verdict {
        Verdict::FinitelyDetermined { lo, hi } => lo <= hi,
        _ => true,
    })
}

fn jet_oracle(src: &mut RandomSource) -> Result<bool> {
    let a = small_matrix(src);
    let i = t1(GroupBase::CGlr, &a)?;
    let Some(ll) = i.contains_power_of_max()? else {
        return Ok(true);
    };
    let alg = JetAlgebra::new(a.ring(), ll + 2);
    let span = alg.ideal_span(i.gens());
    let mut ok = alg.loewy(&span) == Some(ll);
    for mono in alg.basis() {
        let f = Polynomial::monomial(a.ring(), mono.clone(), a.ring().field().one());
        ok &= alg.membership(&f, &span) == i.contains(&f)?;
    }
    Ok(ok)
}

fn briancon_skoda(src: &mut RandomSource) -> Result<bool> {
    let f = src.nonzero_poly(2, 5, 4);
    briancon_skoda_check(&f)
}

/// Runs every property on `CASES` random inputs drawn from `seed`.
pub fn run(ring: &Ring, seed: u64) -> CliResult<Value> {
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (k, (name, prop)) in PROPERTIES.iter().enumerate() {
        let mut src = RandomSource::new(ring, seed.wrapping_mul(1000).wrapping_add(k as u64));
        let (mut passed, mut failed) = (0, 0);
        let mut errors = Vec::new();
        for _ in 0..CASES {
            match prop(&mut src) {
                Ok(true) => passed += 1,
                Ok(false) => failed += 1,
                Err(e @ matdet::Error::BudgetExceeded { .. }) => return Err(CliError::Engine(e)),
                Err(e) => {
                    failed += 1;
                    errors.push(e.to_string());
                }
            }
        }
        all_ok &= failed == 0;
        rows.push(json!({"name": name, "passed": passed, "failed": failed, "ok": failed == 0, "errors": errors}));
    }
    Ok(json!({"seed": seed, "cases_per_property": CASES, "properties": rows, "all_ok": all_ok}))
}
