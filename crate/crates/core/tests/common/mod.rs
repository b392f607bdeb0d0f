#![allow(dead_code)]

use proptest::prelude::*;

use matdet::random::RandomSource;
use matdet::{Field, Ideal, Monomial, PolyMatrix, Polynomial, Ring, RingCtx};

pub const GF: u32 = 32003;

pub fn gf() -> Field {
    Field::prime(GF).unwrap()
}

pub fn ring_gf(p: usize) -> Ring {
    RingCtx::local_numbered(p, gf()).unwrap()
}

pub fn ring_qq(p: usize) -> Ring {
    RingCtx::local_numbered(p, Field::Rational).unwrap()
}

/// Exponent vectors and small integer coefficients.
pub type RawPoly = Vec<(Vec<u32>, i64)>;

pub fn raw_poly(p: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, p), -6i64..=6), 0..=max_terms)
}

/// Like `raw_poly` but every term has degree at least `lo`.
pub fn raw_poly_in(p: usize, lo: u32, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    raw_poly(p, max_exp, max_terms).prop_map(move |t| {
        t.into_iter()
            .filter(|(e, _)| e.iter().sum::<u32>() >= lo)
            .collect()
    })
}

pub fn build(r: &Ring, raw: &RawPoly) -> Polynomial {
    let field = r.field();
    let pairs = raw
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(e).unwrap(), field.from_i64(*c)))
        .collect();
    Polynomial::from_terms(r, pairs)
}

pub fn ideal(r: &Ring, raws: &[RawPoly]) -> Ideal {
    Ideal::new(r, raws.iter().map(|t| build(r, t)).collect())
}

/// Random matrix over GF(32003) with entries in `m`.
pub fn matrix(p: usize, rows: usize, cols: usize, hi: u32, seed: u64) -> PolyMatrix {
    RandomSource::new(&ring_gf(p), seed).matrix(rows, cols, 1, hi, 2, 0.2)
}

pub fn monomial_poly(r: &Ring, m: &Monomial) -> Polynomial {
    Polynomial::monomial(r, m.clone(), r.field().one())
}

pub fn subset(a: &Ideal, b: &Ideal) -> bool {
    b.contains_ideal(a).unwrap()
}
