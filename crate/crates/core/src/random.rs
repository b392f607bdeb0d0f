//! Seeded random polynomials and matrices for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElem};
use crate::matrix::{PolyMatrix, Space};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Deterministic generator over a fixed ring.
pub struct RandomSource {
    ring: Ring,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(ring: &Ring, seed: u64) -> RandomSource {
        RandomSource {
            ring: ring.clone(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// Nonzero scalar; small integers over ℚ, uniform residues over GF(p).
    pub fn scalar(&mut self) -> FieldElem {
        let field = self.ring.field();
        match field {
            Field::Rational => {
                let v = self.rng.gen_range(1..=9i64);
                field.from_i64(if self.rng.gen_bool(0.5) { v } else { -v })
            }
            Field::Prime(p) => field.from_i64(self.rng.gen_range(1..p as i64)),
        }
    }

    /// Random monomial of total degree in `lo..=hi` in the main variables.
    pub fn monomial(&mut self, lo: u32, hi: u32) -> Monomial {
        let p = self.ring.dim();
        let aux = self.ring.order().aux_count();
        let d = self.rng.gen_range(lo..=hi);
        let mut exps = vec![0u32; p];
        for _ in 0..d {
            exps[self.rng.gen_range(0..p)] += 1;
        }
        Monomial::from_exponents(&exps)
            .expect("degree within cap")
            .prepend_vars(aux)
    }

    /// Sum of up to `terms` random terms of degree in `lo..=hi`.
    pub fn poly(&mut self, lo: u32, hi: u32, terms: usize) -> Polynomial {
        let k = self.rng.gen_range(1..=terms.max(1));
        let pairs = (0..k).map(|_| (self.monomial(lo, hi), self.scalar())).collect();
        Polynomial::from_terms(&self.ring, pairs)
    }

    /// Random polynomial in `m^lo`, nonzero.
    pub fn nonzero_poly(&mut self, lo: u32, hi: u32, terms: usize) -> Polynomial {
        loop {
            let f = self.poly(lo, hi, terms);
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// `rows × cols` matrix; each entry is zero with probability `zero_prob`.
    pub fn matrix(&mut self, rows: usize, cols: usize, lo: u32, hi: u32, terms: usize, zero_prob: f64) -> PolyMatrix {
        let entries = (0..rows * cols)
            .map(|_| {
                if self.rng.gen_bool(zero_prob) {
                    Polynomial::zero(&self.ring)
                } else {
                    self.nonzero_poly(lo, hi, terms)
                }
            })
            .collect();
        PolyMatrix::new(&self.ring, rows, cols, entries, Space::Full).expect("shape is consistent")
    }

    /// Symmetric `m × m` matrix tagged with `space`.
    pub fn symmetric(&mut self, m: usize, lo: u32, hi: u32, terms: usize, space: Space) -> PolyMatrix {
        let mut e = vec![Polynomial::zero(&self.ring); m * m];
        for i in 0..m {
            for j in i..m {
                let f = self.nonzero_poly(lo, hi, terms);
                e[j * m + i] = f.clone();
                e[i * m + j] = f;
            }
        }
        PolyMatrix::new(&self.ring, m, m, e, space).expect("symmetric by construction")
    }

    /// Skew-symmetric `m × m` matrix.
    pub fn skew(&mut self, m: usize, lo: u32, hi: u32, terms: usize) -> PolyMatrix {
        let mut e = vec![Polynomial::zero(&self.ring); m * m];
        for i in 0..m {
            for j in i + 1..m {
                let f = self.nonzero_poly(lo, hi, terms);
                e[j * m + i] = f.neg();
                e[i * m + j] = f;
            }
        }
        PolyMatrix::new(&self.ring, m, m, e, Space::SkewSymmetric).expect("skew by construction")
    }

    /// Invertible `n × n` matrix `L·D·U`: unit triangular factors with
    /// polynomial entries and a diagonal of nonzero scalars.
    pub fn unimodular(&mut self, n: usize, hi: u32) -> PolyMatrix {
        let ring = self.ring.clone();
        let mut lower = PolyMatrix::identity(&ring, n).entries().to_vec();
        let mut upper = lower.clone();
        let mut diag = Vec::with_capacity(n);
        for i in 0..n {
            diag.push(Polynomial::constant(&ring, self.scalar()));
            for j in 0..i {
                lower[i * n + j] = self.poly(0, hi, 2);
                upper[j * n + i] = self.poly(0, hi, 2);
            }
        }
        let l = PolyMatrix::new(&ring, n, n, lower, Space::Full).expect("square");
        let u = PolyMatrix::new(&ring, n, n, upper, Space::Full).expect("square");
        let d = PolyMatrix::diag(&ring, &diag);
        l.mul(&d).and_then(|x| x.mul(&u)).expect("same ring")
    }
}
