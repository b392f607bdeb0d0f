//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::terms::{self, Term};

/// A polynomial in the ring's variables. Terms are kept sorted descending
/// under the ring's monomial order, so the first term is the leading term.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: FieldElem) -> Polynomial {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Polynomial {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn monomial(ring: &Ring, mono: Monomial, c: FieldElem) -> Polynomial {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                comp: 0,
                mono,
                coeff: c,
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from unsorted `(monomial, coefficient)` pairs.
    pub fn from_terms(ring: &Ring, pairs: Vec<(Monomial, FieldElem)>) -> Polynomial {
        let terms = pairs
            .into_iter()
            .map(|(mono, coeff)| Term {
                comp: 0,
                mono,
                coeff,
            })
            .collect();
        Polynomial {
            ring: ring.clone(),
            terms: terms::normalize(&ring.order(), terms),
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.iter().all(|t| t.comp == 0 && !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(ring, text)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter().map(|t| (&t.mono, &t.coeff))
    }

    pub(crate) fn raw_terms(&self) -> &[Term] {
        &self.terms
    }

    /// The maximal term under the ring's order.
    pub fn leading_term(&self) -> Result<(Monomial, FieldElem)> {
        self.terms
            .first()
            .map(|t| (t.mono.clone(), t.coeff.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Total degree of `f` minus the degree of its leading monomial.
    pub fn ecart(&self) -> Result<u32> {
        let lead = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        Ok(terms::max_degree(&self.terms) - lead.mono.degree())
    }

    pub fn total_degree(&self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(terms::max_degree(&self.terms))
        }
    }

    /// Lowest degree of a term: the `m`-adic order.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    /// Coefficient of the constant term.
    pub fn constant_coeff(&self) -> FieldElem {
        self.terms
            .iter()
            .find(|t| t.mono.is_one())
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn coeff_of(&self, m: &Monomial) -> FieldElem {
        self.terms
            .iter()
            .find(|t| &t.mono == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Vanishes at the origin.
    pub fn in_max_ideal(&self) -> bool {
        self.constant_coeff().is_zero()
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let one = self.ring.field().one();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: terms::add_scaled(&self.ring.order(), &self.terms, &one, None, &other.terms),
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let m1 = self.ring.field().from_i64(-1);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: terms::add_scaled(&self.ring.order(), &self.terms, &m1, None, &other.terms),
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                prods.push(Term {
                    comp: 0,
                    mono: a.mono.try_mul(&b.mono)?,
                    coeff: a.coeff.mul(&b.coeff),
                });
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: terms::normalize(&self.ring.order(), prods),
        })
    }

    pub fn neg(&self) -> Polynomial {
        let m1 = self.ring.field().from_i64(-1);
        self.scale(&m1)
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: terms::scale(&self.terms, c, None),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let one = self.ring.field().one();
        Polynomial {
            ring: self.ring.clone(),
            terms: terms::scale(&self.terms, &one, Some(m)),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let f = self.ring.field();
        let pairs = self
            .terms
            .iter()
            .filter_map(|t| {
                t.mono
                    .derivative_of(i)
                    .map(|(e, m)| (m, t.coeff.mul(&f.from_i64(e as i64))))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial::from_terms(&self.ring, pairs)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(&t.coeff.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Drops all terms of total degree `≥ d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|t| t.mono.degree() < d)
                .cloned()
                .collect(),
        }
    }

    /// Re-expresses this polynomial in a ring with the same variables but a
    /// different order or budget.
    pub fn to_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let pairs = self
            .terms
            .iter()
            .map(|t| (t.mono.clone(), t.coeff.clone()))
            .collect();
        Ok(Polynomial::from_terms(ring, pairs))
    }

    /// Embeds into a ring with `extra` auxiliary variables prepended.
    pub fn lift_to_aux(&self, ring: &Ring, extra: usize) -> Polynomial {
        let pairs = self
            .terms
            .iter()
            .map(|t| (t.mono.prepend_vars(extra), t.coeff.clone()))
            .collect();
        Polynomial::from_terms(ring, pairs)
    }

    /// Restricts from an auxiliary-variable ring; `None` if an aux variable occurs.
    pub fn drop_aux(&self, ring: &Ring, extra: usize) -> Option<Polynomial> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            pairs.push((t.mono.drop_leading_vars(extra)?, t.coeff.clone()));
        }
        Some(Polynomial::from_terms(ring, pairs))
    }

    /// Substitutes polynomials for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let ring = images.first().map(|p| p.ring.clone()).unwrap_or(self.ring.clone());
        let mut acc = Polynomial::zero(&ring);
        for t in &self.terms {
            let mut term = Polynomial::constant(&ring, t.coeff.clone());
            for (i, e) in t.mono.exponents().enumerate() {
                if e > 0 {
                    term = term.try_mul(&images[i].pow(e)?)?;
                }
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Writes a monomial as `x^2*y`; empty string for 1.
pub(crate) fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exponents().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

/// Appends `c*m` in sign-separated form (`" + "`, `" - "`) to `out`.
pub(crate) fn write_term(out: &mut String, first: bool, c: &FieldElem, mono: &str) {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if mono.is_empty() {
        out.push_str(&abs.to_string());
    } else if abs.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&abs.to_string());
        out.push('*');
        out.push_str(mono);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let mono = format_monomial(self.ring.vars(), &t.mono);
            write_term(&mut out, k == 0, &t.coeff, &mono);
        }
        write!(f, "{out}")
    }
}

/// Orders polynomials by their leading monomials (descending), then printed form.
pub fn cmp_by_leading(a: &Polynomial, b: &Polynomial) -> Ordering {
    let order = a.ring.order();
    match (a.terms.first(), b.terms.first()) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
        (Some(x), Some(y)) => order
            .compare(&y.mono, &x.mono)
            .then_with(|| a.to_string().cmp(&b.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::ring::RingCtx;

    fn ring(vars: &[&str]) -> Ring {
        RingCtx::local(vars, Field::Rational).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["x", "y"]);
        let f = &p(&r, "x+y") * &p(&r, "x-y");
        assert_eq!(f, p(&r, "x^2-y^2"));
        assert!((&f * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn determinant_shape_of_worked_example() {
        let r = ring(&["x1", "x2"]);
        let f = &p(&r, "x2 - x1^2") * &p(&r, "x2 + x1^2");
        assert_eq!(f, p(&r, "x2^2 - x1^4"));
    }

    #[test]
    fn leading_terms_follow_order() {
        let r = ring(&["x"]);
        let (m, c) = p(&r, "1 + x").leading_term().unwrap();
        assert!(m.is_one() && c.is_one());

        let g = RingCtx::new(&["x", "y"], Field::Rational, MonomialOrder::GlobalDegRevLex).unwrap();
        let (m, _) = p(&g, "x^2*y + x^3").leading_term().unwrap();
        assert_eq!(m, Monomial::from_exponents(&[3, 0]).unwrap());

        let r2 = ring(&["x1", "x2"]);
        let (m, c) = p(&r2, "x2^2 - x1^5").leading_term().unwrap();
        assert_eq!(m, Monomial::from_exponents(&[0, 2]).unwrap());
        assert!(c.is_one());
        assert!(Polynomial::zero(&r2).leading_term().is_err());
    }

    #[test]
    fn ecart_values() {
        let r = ring(&["x"]);
        assert_eq!(p(&r, "x").ecart().unwrap(), 0);
        assert_eq!(p(&r, "x + x^3").ecart().unwrap(), 2);
        assert_eq!(p(&r, "1 + x").ecart().unwrap(), 1);
        assert!(Polynomial::zero(&r).ecart().is_err());
    }

    #[test]
    fn derivative_and_pow() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "x^3 + x*y").derivative(0), p(&r, "3*x^2 + y"));
        assert_eq!(p(&r, "x+y").pow(2).unwrap(), p(&r, "x^2 + 2*x*y + y^2"));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = ring(&["x"]);
        let b = ring(&["y"]);
        assert_eq!(
            Polynomial::var(&a, 0).try_add(&Polynomial::var(&b, 0)),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn printing() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "y^2 - 2*x + 3/4").to_string(), "3/4 - 2*x + y^2");
        assert_eq!(p(&r, "-x*y").to_string(), "-x*y");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
