//! Exponent vectors and the monomial orders used by the standard-basis engine.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub const MAX_EXPONENT: u32 = u16::MAX as u32;

/// A monomial `x^a` as an exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Monomial> {
        let mut v = SmallVec::with_capacity(exps.len());
        let mut deg = 0u32;
        for &e in exps {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow { max: MAX_EXPONENT });
            }
            v.push(e as u16);
            deg += e;
        }
        Ok(Monomial { exps: v, deg })
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            let s = *a as u32 + *b as u32;
            if s > MAX_EXPONENT {
                return Err(Error::ExponentOverflow { max: MAX_EXPONENT });
            }
            exps.push(s as u16);
        }
        Ok(Monomial {
            exps,
            deg: self.deg + other.deg,
        })
    }

    /// Product; panics on exponent overflow. Use [`Monomial::try_mul`] at API boundaries.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| b - a)
            .collect();
        Monomial {
            exps,
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable if this is a pure power `x_i^e`, `e ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Divides out one factor of `x_i`; returns the exponent it had.
    pub fn derivative_of(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        m.deg -= 1;
        Some((e as u32, m))
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
    }

    /// Same monomial in a ring with `extra` new variables prepended.
    pub fn prepend_vars(&self, extra: usize) -> Monomial {
        let mut exps: SmallVec<[u16; 8]> = SmallVec::from_elem(0, extra);
        exps.extend_from_slice(&self.exps);
        Monomial { exps, deg: self.deg }
    }

    /// Drops the first `count` variables, which must not occur.
    pub fn drop_leading_vars(&self, count: usize) -> Option<Monomial> {
        if self.exps[..count].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial {
            exps: SmallVec::from_slice(&self.exps[count..]),
            deg: self.deg,
        })
    }

    /// All monomials in `nvars` variables of total degree exactly `deg`,
    /// in descending lexicographic order of exponent vectors.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::from_exponents(cur).expect("degree within cap"));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, deg, &mut cur, &mut out);
        out
    }
}

/// A monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Negative degree reverse lexicographic: `1` is the largest monomial.
    LocalDegRevLex,
    /// Degree reverse lexicographic, a well-order.
    GlobalDegRevLex,
    /// The first `aux` variables compared by global degrevlex, ties broken
    /// by the local degrevlex order on the remaining variables.
    Block { aux: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::LocalDegRevLex => b.deg.cmp(&a.deg).then_with(|| revlex(&a.exps, &b.exps)),
            MonomialOrder::GlobalDegRevLex => a.deg.cmp(&b.deg).then_with(|| revlex(&a.exps, &b.exps)),
            MonomialOrder::Block { aux } => {
                let (aa, am) = a.exps.split_at(aux);
                let (ba, bm) = b.exps.split_at(aux);
                let da: u32 = aa.iter().map(|&e| e as u32).sum();
                let db: u32 = ba.iter().map(|&e| e as u32).sum();
                da.cmp(&db)
                    .then_with(|| revlex(aa, ba))
                    .then_with(|| (b.deg - db).cmp(&(a.deg - da)))
                    .then_with(|| revlex(am, bm))
            }
        }
    }

    /// Whether every monomial is `≤ 1`, so that leading-ideal combinatorics
    /// describe the localization at the origin.
    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::LocalDegRevLex)
    }

    pub fn aux_count(&self) -> usize {
        match *self {
            MonomialOrder::Block { aux } => aux,
            _ => 0,
        }
    }
}

/// Reverse-lexicographic tie-break: the monomial with the smaller exponent in
/// the last differing variable is larger.
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::LocalDegRevLex => write!(f, "ds"),
            MonomialOrder::GlobalDegRevLex => write!(f, "dp"),
            MonomialOrder::Block { aux } => write!(f, "(dp({aux}),ds)"),
        }
    }
}
