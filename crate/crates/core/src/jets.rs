//! Truncated-jet oracle: ideals and modules modulo `m^D` as finite-dimensional
//! linear algebra over the coefficient field.
//!
//! Answers concern `I + m^D`. They agree with the exact answers once
//! `m^D ⊆ I`; before that a negative membership answer is still sound.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{Field, FieldElem};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::sbasis::ModuleElem;

/// `R/m^D` with the monomial basis of degree `< D`, sorted by degree and then
/// descending lexicographically.
pub struct JetAlgebra {
    ring: Ring,
    d: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl JetAlgebra {
    pub fn new(ring: &Ring, d: u32) -> JetAlgebra {
        assert!(d >= 1, "truncation degree must be positive");
        assert!(
            ring.order().aux_count() == 0,
            "jets are defined for the local ring only"
        );
        let mut basis = Vec::new();
        for deg in 0..d {
            basis.extend(Monomial::all_of_degree(ring.nvars(), deg));
        }
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        JetAlgebra {
            ring: ring.clone(),
            d,
            basis,
            index,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Coefficient vector of `f mod m^D`.
    pub fn project(&self, f: &Polynomial) -> Vec<FieldElem> {
        let mut v = vec![self.ring.field().zero(); self.dim()];
        for (m, c) in f.terms() {
            if let Some(&i) = self.index.get(m) {
                v[i] = c.clone();
            }
        }
        v
    }

    /// Polynomial with the given coefficient vector.
    pub fn lift(&self, v: &[FieldElem]) -> Polynomial {
        let pairs = v
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, pairs)
    }

    fn monomial_multiples(&self, f: &Polynomial) -> Vec<Polynomial> {
        let Some(ord) = f.order() else {
            return Vec::new();
        };
        self.basis
            .iter()
            .filter(|m| m.degree() + ord < self.d)
            .map(|m| f.mul_monomial(m).truncate(self.d))
            .collect()
    }

    /// The image of `(I + m^D)/m^D`.
    pub fn ideal_span(&self, gens: &[Polynomial]) -> JetMatrix {
        let mut e = JetMatrix::new(self.ring.field(), self.dim());
        for g in gens {
            for h in self.monomial_multiples(g) {
                e.insert(&self.project(&h));
            }
        }
        e
    }

    /// The image of `(M + m^D R^s)/m^D R^s` in `(R/m^D)^s`, coordinates
    /// component-major.
    fn module_span(&self, rank: usize, cols: &[ModuleElem]) -> JetMatrix {
        let b = self.dim();
        let mut e = JetMatrix::new(self.ring.field(), rank * b);
        for c in cols {
            let comps = c.components();
            let Some(ord) = comps.iter().filter_map(|p| p.order()).min() else {
                continue;
            };
            for m in self.basis.iter().filter(|m| m.degree() + ord < self.d) {
                let mut v = Vec::with_capacity(rank * b);
                for p in &comps {
                    v.extend(self.project(&p.mul_monomial(m)));
                }
                e.insert(&v);
            }
        }
        e
    }

    /// `ann(coker)` of the module generated by `cols ⊂ R^rank`, computed
    /// in `R/m^D`: the `f` with `f·e_i ∈ M + m^D R^rank` for every `i`.
    pub fn ann_coker(&self, rank: usize, cols: &[ModuleElem]) -> JetMatrix {
        let b = self.dim();
        let span = self.module_span(rank, cols);
        let field = self.ring.field();
        // Rows [residual(b_k e_1) .. residual(b_k e_s) | e_k]; combinations whose
        // residual part vanishes are exactly the annihilating jets.
        let w = rank * b;
        let mut elim = JetMatrix::new(field, rank * w);
        let mut null = JetMatrix::new(field, b);
        for k in 0..b {
            let mut v = Vec::with_capacity(rank * w + b);
            for i in 0..rank {
                let mut unit = vec![field.zero(); w];
                unit[i * b + k] = field.one();
                v.extend(span.residual(&unit));
            }
            v.extend((0..b).map(|j| if j == k { field.one() } else { field.zero() }));
            if let Some(tail) = elim.insert_augmented(v, rank * w) {
                null.insert(&tail);
            }
        }
        null
    }

    /// `f ∈ I + m^D`.
    pub fn membership(&self, f: &Polynomial, span: &JetMatrix) -> bool {
        span.contains(&self.project(f))
    }

    /// The least `N < D` with `m^N ⊆ I + m^D`, or `None` if there is none.
    pub fn loewy(&self, span: &JetMatrix) -> Option<u32> {
        let mut n = self.d;
        while n > 0 {
            let all = self
                .basis
                .iter()
                .enumerate()
                .filter(|(_, m)| m.degree() == n - 1)
                .all(|(i, _)| span.contains_unit(i));
            if !all {
                break;
            }
            n -= 1;
        }
        if n < self.d {
            Some(n)
        } else {
            None
        }
    }
}

/// Convenience wrappers matching the ideal-level operations.
pub fn jet_ideal_span(ideal: &Ideal, d: u32) -> JetMatrix {
    JetAlgebra::new(ideal.ring(), d).ideal_span(ideal.gens())
}

pub fn jet_membership(f: &Polynomial, ideal: &Ideal, d: u32) -> bool {
    let j = JetAlgebra::new(ideal.ring(), d);
    let span = j.ideal_span(ideal.gens());
    j.membership(f, &span)
}

pub fn jet_loewy(ideal: &Ideal, d: u32) -> Option<u32> {
    let j = JetAlgebra::new(ideal.ring(), d);
    let span = j.ideal_span(ideal.gens());
    j.loewy(&span)
}

pub fn jet_ann_coker(ring: &Ring, rank: usize, cols: &[ModuleElem], d: u32) -> JetMatrix {
    JetAlgebra::new(ring, d).ann_coker(rank, cols)
}

trait Arith {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a - c·b`.
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_elem(&self, a: &FieldElem) -> Self::E;
    fn to_elem(&self, a: &Self::E) -> FieldElem;
}

#[derive(Clone, Copy)]
struct ModP(u64);

impl Arith for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        (a + self.0 - c * b % self.0) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, *a % self.0, self.0 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.0;
            }
            b = b * b % self.0;
            e >>= 1;
        }
        r
    }
    fn from_elem(&self, a: &FieldElem) -> u64 {
        match a {
            FieldElem::Fp { v, .. } => *v as u64,
            FieldElem::Q(_) => unreachable!("rational entry in a prime-field matrix"),
        }
    }
    fn to_elem(&self, a: &u64) -> FieldElem {
        FieldElem::Fp {
            v: *a as u32,
            p: self.0 as u32,
        }
    }
}

#[derive(Clone, Copy)]
struct Rat;

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        a - c * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_elem(&self, a: &FieldElem) -> BigRational {
        match a {
            FieldElem::Q(q) => q.clone(),
            FieldElem::Fp { .. } => unreachable!("prime-field entry in a rational matrix"),
        }
    }
    fn to_elem(&self, a: &BigRational) -> FieldElem {
        FieldElem::Q(a.clone())
    }
}

/// Rows in semi-echelon form: each stored row has a unit pivot and is zero at
/// the pivots of all earlier rows, so reducing in insertion order is exact.
#[derive(Clone)]
struct Echelon<A: Arith> {
    a: A,
    ncols: usize,
    rows: Vec<Vec<A::E>>,
    pivots: Vec<usize>,
}

impl<A: Arith> Echelon<A> {
    fn reduce(&self, v: &mut [A::E], limit: usize) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if p >= limit || self.a.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for j in p..v.len() {
                if !self.a.is_zero(&row[j]) {
                    v[j] = self.a.sub_mul(&v[j], &c, &row[j]);
                }
            }
        }
    }

    /// Reduces `v`, pivoting only inside `0..limit`. Returns the reduced row
    /// when its first `limit` entries vanish, otherwise stores it.
    fn insert_limited(&mut self, mut v: Vec<A::E>, limit: usize) -> Option<Vec<A::E>> {
        self.reduce(&mut v, limit);
        match (0..limit).find(|&j| !self.a.is_zero(&v[j])) {
            None => Some(v),
            Some(p) => {
                let inv = self.a.inv(&v[p]);
                for x in v.iter_mut().skip(p) {
                    if !self.a.is_zero(x) {
                        *x = self.a.mul(x, &inv);
                    }
                }
                self.rows.push(v);
                self.pivots.push(p);
                None
            }
        }
    }
}

#[derive(Clone)]
enum Inner {
    P(Echelon<ModP>),
    Q(Echelon<Rat>),
}

/// A subspace of `k^n` given by a semi-echelon basis.
#[derive(Clone)]
pub struct JetMatrix {
    inner: Inner,
}

macro_rules! dispatch {
    ($self:expr, $e:ident => $body:expr) => {
        match &$self.inner {
            Inner::P($e) => $body,
            Inner::Q($e) => $body,
        }
    };
}

impl JetMatrix {
    pub fn new(field: Field, ncols: usize) -> JetMatrix {
        let inner = match field {
            Field::Prime(p) => Inner::P(Echelon {
                a: ModP(p as u64),
                ncols,
                rows: Vec::new(),
                pivots: Vec::new(),
            }),
            Field::Rational => Inner::Q(Echelon {
                a: Rat,
                ncols,
                rows: Vec::new(),
                pivots: Vec::new(),
            }),
        };
        JetMatrix { inner }
    }

    pub fn ncols(&self) -> usize {
        dispatch!(self, e => e.ncols)
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        dispatch!(self, e => e.rows.len())
    }

    /// Adds a vector; returns whether the span grew.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        let n = self.ncols();
        assert_eq!(v.len(), n, "vector length mismatch");
        match &mut self.inner {
            Inner::P(e) => {
                let row = v.iter().map(|x| e.a.from_elem(x)).collect();
                e.insert_limited(row, n).is_none()
            }
            Inner::Q(e) => {
                let row = v.iter().map(|x| e.a.from_elem(x)).collect();
                e.insert_limited(row, n).is_none()
            }
        }
    }

    /// Inserts `v` pivoting only in the first `limit` coordinates; when those
    /// reduce to zero returns the remaining coordinates instead.
    fn insert_augmented(&mut self, v: Vec<FieldElem>, limit: usize) -> Option<Vec<FieldElem>> {
        match &mut self.inner {
            Inner::P(e) => {
                let row = v.iter().map(|x| e.a.from_elem(x)).collect();
                let a = e.a;
                e.insert_limited(row, limit)
                    .map(|r| r[limit..].iter().map(|x| a.to_elem(x)).collect())
            }
            Inner::Q(e) => {
                let row = v.iter().map(|x| e.a.from_elem(x)).collect();
                let a = e.a;
                e.insert_limited(row, limit)
                    .map(|r| r[limit..].iter().map(|x| a.to_elem(x)).collect())
            }
        }
    }

    /// `v` reduced against the span: zero exactly for members.
    pub fn residual(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        dispatch!(self, e => {
            let mut row: Vec<_> = v.iter().map(|x| e.a.from_elem(x)).collect();
            e.reduce(&mut row, e.ncols);
            row.iter().map(|x| e.a.to_elem(x)).collect()
        })
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.residual(v).iter().all(|x| x.is_zero())
    }

    /// Whether the `i`-th coordinate vector lies in the span.
    pub fn contains_unit(&self, i: usize) -> bool {
        dispatch!(self, e => {
            let mut row = vec![e.a.zero(); e.ncols];
            row[i] = e.a.one();
            e.reduce(&mut row, e.ncols);
            row.iter().all(|x| e.a.is_zero(x))
        })
    }

    /// Basis vectors of the span.
    pub fn rows(&self) -> Vec<Vec<FieldElem>> {
        dispatch!(self, e => e
            .rows
            .iter()
            .map(|r| r.iter().map(|x| e.a.to_elem(x)).collect())
            .collect())
    }

    pub fn same_span(&self, other: &JetMatrix) -> bool {
        self.rank() == other.rank() && other.rows().iter().all(|r| self.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{PolyMatrix, Space};
    use crate::ring::RingCtx;

    fn ring(vars: &[&str]) -> Ring {
        RingCtx::local(vars, Field::Rational).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn projection() {
        let r = ring(&["x", "y"]);
        let j = JetAlgebra::new(&r, 3);
        assert_eq!(j.dim(), 6);
        assert!(j.project(&p(&r, "x^3")).iter().all(|c| c.is_zero()));
        let v = j.project(&p(&r, "1 + x"));
        assert!(v[0].is_one() && v[1].is_one());
        assert!(v[2..].iter().all(|c| c.is_zero()));
        let f = p(&r, "1 + x - y^2");
        let g = p(&r, "x*y + 3*y");
        assert_eq!(j.lift(&j.project(&(&f * &g))), (&j.lift(&j.project(&f)) * &j.lift(&j.project(&g))).truncate(3));
    }

    #[test]
    fn spans() {
        let r = ring(&["x", "y"]);
        let j = JetAlgebra::new(&r, 2);
        let m = j.ideal_span(Ideal::max_ideal(&r).gens());
        assert_eq!(m.rank(), 2);
        assert!(!m.contains_unit(0));
        let whole = j.ideal_span(&[Polynomial::one(&r)]);
        assert_eq!(whole.rank(), j.dim());
        // multiples of x^2 + y^3 below degree 4: itself, x^3, x^2*y
        let h = JetAlgebra::new(&r, 4).ideal_span(&[p(&r, "x^2 + y^3")]);
        assert_eq!(h.rank(), 3);
    }

    #[test]
    fn loewy_and_membership() {
        let r = ring(&["x", "y"]);
        assert_eq!(jet_loewy(&Ideal::max_power(&r, 3), 5), Some(3));
        assert_eq!(jet_loewy(&Ideal::parse(&r, &["x"]).unwrap(), 5), None);
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        assert!(!jet_membership(&p(&r, "y^2"), &i, 5));
        assert!(jet_membership(&p(&r, "x^2 + x*y^3"), &i, 5));
    }

    #[test]
    fn annihilator_of_diagonal() {
        let r = ring(&["x", "y"]);
        let a = PolyMatrix::parse(&r, "x, 0; 0, x^2", Space::Full).unwrap();
        let ann = jet_ann_coker(&r, 2, &a.columns(), 5);
        let expect = jet_ideal_span(&Ideal::parse(&r, &["x^2"]).unwrap(), 5);
        assert!(ann.same_span(&expect));
    }

    #[test]
    fn prime_field_path() {
        let r = RingCtx::local(&["x", "y"], Field::prime(32003).unwrap()).unwrap();
        let i = Ideal::parse(&r, &["x^2 - y^3", "x*y"]).unwrap();
        assert_eq!(jet_loewy(&i, 7), Some(i.loewy_length().unwrap()));
    }
}
