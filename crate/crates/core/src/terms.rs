//! Sorted sparse term lists shared by polynomials and module elements.
//!
//! Terms are kept strictly descending under the position-over-term order:
//! a smaller component index is larger, ties broken by the monomial order.

use std::cmp::Ordering;

use crate::field::FieldElem;
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: FieldElem,
}

#[inline]
pub fn cmp_pos(order: &MonomialOrder, ac: usize, am: &Monomial, bc: usize, bm: &Monomial) -> Ordering {
    bc.cmp(&ac).then_with(|| order.compare(am, bm))
}

#[inline]
pub fn cmp_terms(order: &MonomialOrder, a: &Term, b: &Term) -> Ordering {
    cmp_pos(order, a.comp, &a.mono, b.comp, &b.mono)
}

/// Sorts descending and merges equal positions, dropping zeros.
pub fn normalize(order: &MonomialOrder, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| cmp_terms(order, b, a));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(last) = out.last_mut() {
            if last.comp == t.comp && last.mono == t.mono {
                last.coeff = last.coeff.add(&t.coeff);
                continue;
            }
        }
        out.push(t);
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

/// `a + c·m·b` for sorted inputs.
pub fn add_scaled(
    order: &MonomialOrder,
    a: &[Term],
    c: &FieldElem,
    m: Option<&Monomial>,
    b: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |t: &Term| -> Monomial {
        match m {
            Some(m) => t.mono.mul(m),
            None => t.mono.clone(),
        }
    };
    let mut bj: Option<Monomial> = b.first().map(shifted);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), bj.as_ref()) {
            (Some(at), Some(bm)) => cmp_pos(order, at.comp, &at.mono, b[j].comp, bm),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    comp: b[j].comp,
                    mono: bj.take().unwrap(),
                    coeff: b[j].coeff.mul(c),
                });
                j += 1;
                bj = b.get(j).map(shifted);
            }
            Ordering::Equal => {
                let s = a[i].coeff.add(&b[j].coeff.mul(c));
                if !s.is_zero() {
                    out.push(Term {
                        comp: a[i].comp,
                        mono: bj.take().unwrap(),
                        coeff: s,
                    });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(shifted);
            }
        }
    }
    out
}

/// `c·m·a`; order-preserving since monomial orders are multiplicative.
pub fn scale(a: &[Term], c: &FieldElem, m: Option<&Monomial>) -> Vec<Term> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter()
        .map(|t| Term {
            comp: t.comp,
            mono: match m {
                Some(m) => t.mono.mul(m),
                None => t.mono.clone(),
            },
            coeff: t.coeff.mul(c),
        })
        .collect()
}

/// Maximal total degree of the terms.
pub fn max_degree(a: &[Term]) -> u32 {
    a.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
}
