//! Coefficient fields: exact rationals and prime fields GF(p).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which coefficient field a ring is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// GF(p) for a prime p < 2^31.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElem::Fp {
                v: v.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Q(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                FieldElem::Fp {
                    v: r.to_u32().expect("residue fits in u32"),
                    p,
                }
            }
        }
    }

    /// `num / den` as a field element; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElem> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.from_bigint(num);
        Ok(n.mul(&d.inv()?))
    }

    pub fn characteristic(&self) -> u32 {
        match *self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GFp:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a coefficient field. Rationals are kept normalized with a
/// positive denominator; residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Q(q) => q.is_zero(),
            FieldElem::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Q(q) => q.is_one(),
            FieldElem::Fp { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElem::Q(_) => Field::Rational,
            FieldElem::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a + b),
            (FieldElem::Fp { v: a, p }, FieldElem::Fp { v: b, .. }) => {
                let s = *a as u64 + *b as u64;
                FieldElem::Fp {
                    v: (s % *p as u64) as u32,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Q(a) => FieldElem::Q(-a),
            FieldElem::Fp { v, p } => FieldElem::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a * b),
            (FieldElem::Fp { v: a, p }, FieldElem::Fp { v: b, .. }) => FieldElem::Fp {
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Q(a) => FieldElem::Q(a.recip()),
            FieldElem::Fp { v, p } => FieldElem::Fp {
                v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&other.inv()?))
    }

    /// Whether the printed form should carry a leading minus sign.
    ///
    /// GF(p) residues print in the symmetric range `(-p/2, p/2]`.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Q(q) => q.is_negative(),
            FieldElem::Fp { v, p } => *v > p / 2,
        }
    }

    pub fn abs(&self) -> FieldElem {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElem::Fp { v, p } => {
                if *v > p / 2 {
                    write!(f, "-{}", p - v)
                } else {
                    write!(f, "{v}")
                }
            }
        }
    }
}
