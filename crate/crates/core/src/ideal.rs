//! Ideals of the local ring and their calculus.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::sbasis::{self, ModuleElem, SBasis};
use crate::terms::{self, Term};

/// Outcome of a radical-membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalAnswer {
    /// `f^N ∈ I`; `None` when the certificate does not record `N`.
    Yes(Option<u32>),
    No,
    Unknown,
}

/// Three-valued answer for composite radical questions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadicalOptions {
    /// Largest power tried.
    pub power_bound: u32,
    /// Also try `1 ∈ I + (1 - t·f)` over `k[x]_(x)[t]`.
    pub rabinowitsch: bool,
}

impl Default for RadicalOptions {
    fn default() -> Self {
        RadicalOptions {
            power_bound: 16,
            rabinowitsch: false,
        }
    }
}

/// An ideal given by generators, with its standard basis computed on demand.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    sb: OnceLock<std::result::Result<SBasis, Error>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            sb: OnceLock::new(),
        }
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let g = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, g))
    }

    fn from_sbasis(sb: SBasis) -> Ideal {
        let ring = sb.ring().clone();
        let gens = sb.polys();
        let cell = OnceLock::new();
        let _ = cell.set(Ok(sb));
        Ideal {
            ring,
            gens,
            sb: cell,
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// The maximal ideal generated by the main variables.
    pub fn max_ideal(ring: &Ring) -> Ideal {
        Self::max_power(ring, 1)
    }

    /// `m^k`.
    pub fn max_power(ring: &Ring, k: u32) -> Ideal {
        let aux = ring.order().aux_count();
        let one = ring.field().one();
        let gens = Monomial::all_of_degree(ring.dim(), k)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m.prepend_vars(aux), one.clone()))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn std_basis(&self) -> Result<&SBasis> {
        self.sb
            .get_or_init(|| sbasis::std_basis(&self.ring, &self.gens))
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether `I = R`.
    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| !g.in_max_ideal()) && self.ring.order().is_local() {
            return Ok(true);
        }
        Ok(self.std_basis()?.is_whole())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if !self.ring.same_ring(f.ring()) {
            return Err(Error::RingMismatch);
        }
        self.std_basis()?.contains_poly(f)
    }

    /// Mora normal form of `f`; zero exactly for members.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.std_basis()?.reduce_poly(f))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.try_mul(b)?);
            }
        }
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
            acc = acc.minimal_gens_cheap();
        }
        Ok(acc)
    }

    /// Drops generators that are constant multiples of earlier ones or zero.
    fn minimal_gens_cheap(self) -> Ideal {
        let mut seen: Vec<Polynomial> = Vec::new();
        for g in self.gens {
            let m = g.monic();
            if !seen.contains(&m) {
                seen.push(m);
            }
        }
        Ideal::new(&self.ring, seen)
    }

    /// `f·I`.
    pub fn scale(&self, f: &Polynomial) -> Result<Ideal> {
        let g = self
            .gens
            .iter()
            .map(|g| g.try_mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, g))
    }

    /// `I ∩ J` from the module generated by `(f_i, f_i)` and `(g_j, 0)`:
    /// its elements with vanishing first component carry `I ∩ J` in the second.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        if let Some(g) = self.ring.global_twin() {
            let r = self.to_ring(&g)?.intersect(&other.to_ring(&g)?)?;
            return r.to_ring(&self.ring)?.compacted();
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(ModuleElem::from_polys(&self.ring, &[f.clone(), f.clone()]));
        }
        for g in &other.gens {
            gens.push(ModuleElem::basis_multiple(&self.ring, 2, 0, g));
        }
        let elim = sbasis::eliminate_components(&self.ring, 2, &gens, 1)?;
        Ideal::new(&self.ring, elim.iter().map(|e| e.component(0)).collect()).compacted()
    }

    /// `I : g` from the module generated by `(f_i, 0)` and `(g, 1)`.
    pub fn quotient_elem(&self, g: &Polynomial) -> Result<Ideal> {
        if self.contains(g)? {
            return Ok(Ideal::unit(&self.ring));
        }
        if self.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if let Some(r) = self.ring.global_twin() {
            let q = self.to_ring(&r)?.quotient_elem(&g.to_ring(&r)?)?;
            return q.to_ring(&self.ring)?.compacted();
        }
        let mut gens: Vec<ModuleElem> = self
            .gens
            .iter()
            .map(|f| ModuleElem::basis_multiple(&self.ring, 2, 0, f))
            .collect();
        gens.push(ModuleElem::from_polys(
            &self.ring,
            &[g.clone(), Polynomial::one(&self.ring)],
        ));
        let elim = sbasis::eliminate_components(&self.ring, 2, &gens, 1)?;
        Ideal::new(&self.ring, elim.iter().map(|e| e.component(0)).collect()).compacted()
    }

    /// `I : J = ∩_g (I : g)` over the generators `g` of `J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.gens {
            let q = self.quotient_elem(g)?;
            acc = acc.intersect(&q)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// `Sat_J(I)` and the number of quotients taken until the ideal stopped
    /// growing or became `R`.
    pub fn saturate(&self, j: &Ideal) -> Result<(Ideal, usize)> {
        self.check(j)?;
        let mut cur = self.clone();
        let mut count = 0;
        loop {
            let next = cur.quotient(j)?;
            count += 1;
            if next.is_unit()? || cur.contains_ideal(&next)? {
                return Ok((next, count));
            }
            cur = next;
        }
    }

    /// The same generators over a ring with the same variables and field.
    pub(crate) fn to_ring(&self, ring: &Ring) -> Result<Ideal> {
        let gens = self.gens.iter().map(|f| f.to_ring(ring)).collect::<Result<_>>()?;
        Ok(Ideal::new(ring, gens))
    }

    /// The same ideal with tail terms of degree `≥ N` dropped when
    /// `m^N ⊆ I` can be read off the leading monomials.
    pub(crate) fn compacted(self) -> Result<Ideal> {
        if !self.ring.order().is_local() || self.ring.order().aux_count() > 0 {
            return Ok(self);
        }
        match self.cofiniteness_witness()? {
            Some(0) => Ok(Ideal::unit(&self.ring)),
            Some(n) => {
                let gens = reduced_cofinite(self.std_basis()?, n);
                Ok(Ideal::new(&self.ring, gens))
            }
            None => Ok(self),
        }
    }

    /// `Some(ll(I))` if `m^N ⊆ I` for some `N`, else `None`.
    pub fn contains_power_of_max(&self) -> Result<Option<u32>> {
        match self.cofiniteness_witness()? {
            None => Ok(None),
            Some(w) => Ok(Some(self.loewy_from(w)?)),
        }
    }

    /// An `N` with `m^N ⊆ I` read off the pure powers among the leading
    /// monomials, or `None` if some variable has no pure power there.
    fn cofiniteness_witness(&self) -> Result<Option<u32>> {
        if self.is_zero() {
            return Ok(None);
        }
        let sb = self.std_basis()?;
        let aux = self.ring.order().aux_count();
        let p = self.ring.dim();
        let mut best = vec![u32::MAX; p];
        for (_, m) in sb.leading() {
            if m.is_one() {
                return Ok(Some(0));
            }
            if let Some(i) = m.pure_power_var() {
                if i >= aux {
                    let e = m.exponent(i);
                    best[i - aux] = best[i - aux].min(e);
                }
            }
        }
        if best.iter().any(|&e| e == u32::MAX) {
            return Ok(None);
        }
        Ok(Some(best.iter().map(|e| e - 1).sum::<u32>() + 1))
    }

    fn max_power_contained(&self, n: u32) -> Result<bool> {
        let sb = self.std_basis()?;
        let aux = self.ring.order().aux_count();
        let one = self.ring.field().one();
        for m in Monomial::all_of_degree(self.ring.dim(), n) {
            let f = Polynomial::monomial(&self.ring, m.prepend_vars(aux), one.clone());
            if !sb.contains_poly(&f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn loewy_from(&self, witness: u32) -> Result<u32> {
        let mut n = witness;
        while n > 0 && self.max_power_contained(n - 1)? {
            n -= 1;
        }
        Ok(n)
    }

    /// `min{N : m^N ⊆ I}`.
    pub fn loewy_length(&self) -> Result<u32> {
        self.contains_power_of_max()?.ok_or(Error::NotCofinite)
    }

    /// Krull dimension of `R/I`; `-1` for the unit ideal.
    pub fn dim_local(&self) -> Result<i64> {
        let p = self.ring.dim();
        if self.is_zero() {
            return Ok(p as i64);
        }
        let aux = self.ring.order().aux_count();
        let supports: Vec<u64> = self
            .std_basis()?
            .leading()
            .iter()
            .map(|(_, m)| m.support() >> aux)
            .collect();
        if supports.iter().any(|&s| s == 0) {
            return Ok(-1);
        }
        let mut best = 0i64;
        for subset in 0u64..(1u64 << p) {
            let size = subset.count_ones() as i64;
            if size > best && supports.iter().all(|s| s & !subset != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// `p - dim(R/I)`; the unit ideal is reported as `p`.
    pub fn height(&self) -> Result<usize> {
        let p = self.ring.dim() as i64;
        let d = self.dim_local()?;
        Ok(if d < 0 { p as usize } else { (p - d) as usize })
    }

    /// Semi-decides `f ∈ √I`.
    pub fn radical_member(&self, f: &Polynomial, opts: &RadicalOptions) -> Result<RadicalAnswer> {
        if f.is_zero() {
            return Ok(RadicalAnswer::Yes(Some(1)));
        }
        let sb = self.std_basis()?;
        if sb.is_whole() {
            return Ok(RadicalAnswer::Yes(Some(1)));
        }
        if self.ring.order().is_local() && !f.in_max_ideal() {
            // A unit is never in the radical of a proper ideal.
            return Ok(RadicalAnswer::No);
        }
        let ll = self.contains_power_of_max()?;
        let bound = match ll {
            Some(l) => opts.power_bound.max(l),
            None => opts.power_bound,
        };
        // h_N is a weak normal form of f^N up to a unit, so f^N ∈ I iff h_N = 0.
        let mut h = sb.reduce_poly(f);
        for n in 1..=bound {
            if h.is_zero() {
                return Ok(RadicalAnswer::Yes(Some(n)));
            }
            if n < bound {
                h = sb.reduce_poly(&h.try_mul(f)?);
            }
        }
        if ll.is_some() {
            // f ∈ m and m^ll ⊆ I, so f^ll ∈ I and the loop has returned.
            unreachable!("cofinite ideal with f in m must reach yes");
        }
        if opts.rabinowitsch {
            return self.rabinowitsch(f);
        }
        Ok(RadicalAnswer::Unknown)
    }

    /// Decides `f ∈ √I` by testing `1 ∈ I + (1 - t·f)` in `k[x]_(x)[t]`.
    pub fn rabinowitsch(&self, f: &Polynomial) -> Result<RadicalAnswer> {
        if self.ring.order().aux_count() != 0 {
            return Err(Error::InvalidRing("ring already has auxiliary variables".into()));
        }
        let t_name = fresh_name(&self.ring, "t");
        let big = self.ring.with_aux_vars(&[t_name.as_str()])?;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.lift_to_aux(&big, 1)).collect();
        let t = Polynomial::var(&big, 0);
        let tf = t.try_mul(&f.lift_to_aux(&big, 1))?;
        gens.push(Polynomial::one(&big).try_sub(&tf)?);
        let sb = sbasis::std_basis(&big, &gens)?;
        Ok(if sb.is_whole() {
            RadicalAnswer::Yes(None)
        } else {
            RadicalAnswer::No
        })
    }

    /// `√I = √J`, as far as membership resolves.
    pub fn radicals_equal(&self, other: &Ideal, opts: &RadicalOptions) -> Result<Decision> {
        self.check(other)?;
        let mut unknown = false;
        for (a, b) in [(self, other), (other, self)] {
            for g in &a.gens {
                match b.radical_member(g, opts)? {
                    RadicalAnswer::Yes(_) => {}
                    RadicalAnswer::No => return Ok(Decision::No),
                    RadicalAnswer::Unknown => unknown = true,
                }
            }
        }
        Ok(if unknown { Decision::Unknown } else { Decision::Yes })
    }

    /// An irredundant, hence minimal, generating subset of the generators.
    pub fn minimal_gens(&self) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = self.clone().minimal_gens_cheap().gens;
        let mut i = 0;
        while i < gens.len() && gens.len() > 1 {
            let rest: Vec<Polynomial> = gens
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let sub = Ideal::new(&self.ring, rest.clone());
            if sub.contains(&gens[i])? {
                gens = rest;
            } else {
                i += 1;
            }
        }
        let mut out = Ideal::new(&self.ring, gens);
        if let Some(Ok(sb)) = self.sb.get() {
            out.sb = OnceLock::from(Ok(sb.clone()));
        }
        Ok(out)
    }

    /// The ideal presented by its standard basis.
    pub fn standardized(&self) -> Result<Ideal> {
        Ok(Ideal::from_sbasis(self.std_basis()?.clone()))
    }

    /// Canonical monic generators, sorted by printed form.
    ///
    /// Cofinite ideals get their unique reduced basis in `R/m^ll`: every tail
    /// term is a standard monomial. Otherwise the minimal standard basis is used.
    pub fn canonical_gens(&self) -> Result<Vec<Polynomial>> {
        let sb = self.std_basis()?;
        if sb.is_whole() {
            return Ok(vec![Polynomial::one(&self.ring)]);
        }
        let mut out = match (self.ring.order().is_local(), self.contains_power_of_max()?) {
            (true, Some(ll)) => reduced_cofinite(sb, ll),
            _ => sb.polys(),
        };
        out.sort_by_key(|p| p.to_string());
        Ok(out)
    }

    /// Canonical generators as strings.
    pub fn canonical_strings(&self) -> Result<Vec<String>> {
        Ok(self.canonical_gens()?.iter().map(|p| p.to_string()).collect())
    }
}

/// Leading-term-only reduced basis of a cofinite ideal, computed in `R/m^ll`.
fn reduced_cofinite(sb: &SBasis, ll: u32) -> Vec<Polynomial> {
    let ring = sb.ring();
    let order = ring.order();
    let basis = sb.polys();
    let truncated: Vec<Vec<Term>> = basis
        .iter()
        .map(|p| {
            let mut t = p.raw_terms().to_vec();
            let lead = t.remove(0);
            t.retain(|s| s.mono.degree() < ll);
            t.insert(0, lead);
            t
        })
        .collect();
    let mut out = Vec::new();
    for g in &truncated {
        if g.is_empty() {
            continue;
        }
        let lead = g[0].clone();
        let mut tail: Vec<Term> = g[1..].to_vec();
        let mut kept: Vec<Term> = vec![lead];
        while let Some(t) = tail.first().cloned() {
            let reducer = truncated
                .iter()
                .find(|h| !h.is_empty() && h[0].mono.divides(&t.mono));
            match reducer {
                None => {
                    kept.push(t);
                    tail.remove(0);
                }
                Some(h) => {
                    let q = h[0].mono.quotient_of(&t.mono);
                    let c = t.coeff.div(&h[0].coeff).expect("nonzero").neg();
                    tail = terms::add_scaled(&order, &tail, &c, Some(&q), h);
                    tail.retain(|s| s.mono.degree() < ll);
                }
            }
        }
        out.push(Polynomial::from_sorted_terms(ring, kept).monic());
    }
    out
}

fn fresh_name(ring: &Ring, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while ring.var_index(&name).is_some() {
        k += 1;
        name = format!("{base}_{k}");
    }
    name
}

/// `I_1 ∩ ... ∩ I_k`, stopping early at the zero ideal; `R` for an empty list.
pub fn intersect_all(ring: &Ring, ideals: &[Ideal]) -> Result<Ideal> {
    let mut acc = Ideal::unit(ring);
    for i in ideals {
        acc = acc.intersect(i)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::RingCtx;

    fn ring(vars: &[&str]) -> Ring {
        RingCtx::local(vars, Field::Rational).unwrap()
    }

    fn id(r: &Ring, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y"]);
        assert!(id(&r, &["x^2"]).quotient(&id(&r, &["x"])).unwrap().equals(&id(&r, &["x"])).unwrap());
        let i = id(&r, &["x^2", "x*y + y^3"]);
        assert!(i.quotient(&Ideal::unit(&r)).unwrap().equals(&i).unwrap());
        let q = id(&r, &["x^2", "x*y"]).quotient(&id(&r, &["x", "y"])).unwrap();
        assert!(q.equals(&id(&r, &["x"])).unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y"]);
        let m = Ideal::max_ideal(&r);
        let (s, n) = id(&r, &["x^2", "x*y"]).saturate(&m).unwrap();
        assert!(s.equals(&id(&r, &["x"])).unwrap());
        assert_eq!(n, 2);
        let (s, n) = Ideal::max_power(&r, 5).saturate(&m).unwrap();
        assert!(s.is_unit().unwrap());
        assert_eq!(n, 5);
        let i = id(&r, &["x^3 + y^4"]);
        let (s, n) = i.saturate(&Ideal::unit(&r)).unwrap();
        assert!(s.equals(&i).unwrap());
        assert_eq!(n, 1);
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let i = id(&r, &["x"]).intersect(&id(&r, &["y"])).unwrap();
        assert!(i.equals(&id(&r, &["x*y"])).unwrap());
        let i = id(&r, &["x^2", "y"]).intersect(&id(&r, &["x", "y^2"])).unwrap();
        assert!(i.equals(&id(&r, &["x^2", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn cofiniteness_and_loewy() {
        let r = ring(&["x", "y"]);
        assert_eq!(id(&r, &["x", "y"]).contains_power_of_max().unwrap(), Some(1));
        assert_eq!(id(&r, &["x"]).contains_power_of_max().unwrap(), None);
        assert_eq!(id(&r, &["x^2", "y^3", "x*y"]).contains_power_of_max().unwrap(), Some(3));
        for k in 1..5 {
            assert_eq!(Ideal::max_power(&r, k).loewy_length().unwrap(), k);
        }
        let mi = Ideal::max_ideal(&r).product(&id(&r, &["x^2", "y^2"])).unwrap();
        assert_eq!(mi.loewy_length().unwrap(), 3);
        assert_eq!(Ideal::unit(&r).loewy_length().unwrap(), 0);
        assert_eq!(id(&r, &["x"]).loewy_length(), Err(Error::NotCofinite));
    }

    #[test]
    fn dimension_and_height() {
        let r = ring(&["x", "y"]);
        assert_eq!(id(&r, &["x"]).dim_local().unwrap(), 1);
        assert_eq!(id(&r, &["x"]).height().unwrap(), 1);
        let r2 = ring(&["x1", "x2"]);
        let h = id(&r2, &["x2^2 - x1^5"]);
        assert_eq!((h.dim_local().unwrap(), h.height().unwrap()), (1, 1));
        let m = Ideal::max_ideal(&r);
        assert_eq!((m.dim_local().unwrap(), m.height().unwrap()), (0, 2));
        assert_eq!(Ideal::zero(&r).height().unwrap(), 0);
    }

    #[test]
    fn radical_membership() {
        let r = ring(&["x", "y"]);
        let o = RadicalOptions::default();
        assert_eq!(id(&r, &["x^2"]).radical_member(&p(&r, "x"), &o).unwrap(), RadicalAnswer::Yes(Some(2)));
        assert_eq!(id(&r, &["x"]).radical_member(&p(&r, "y"), &o).unwrap(), RadicalAnswer::Unknown);
        let r2 = ring(&["x1", "x2"]);
        let i = id(&r2, &["x2", "x1^2", "x1^3"]);
        assert_eq!(i.radical_member(&p(&r2, "x1"), &o).unwrap(), RadicalAnswer::Yes(Some(2)));
        assert_eq!(i.radical_member(&p(&r2, "1 + x1"), &o).unwrap(), RadicalAnswer::No);
    }

    #[test]
    fn rabinowitsch_decides_both_ways() {
        let r = ring(&["x", "y"]);
        let o = RadicalOptions {
            power_bound: 2,
            rabinowitsch: true,
        };
        assert_eq!(id(&r, &["x"]).radical_member(&p(&r, "y"), &o).unwrap(), RadicalAnswer::No);
        assert_eq!(
            id(&r, &["x^5 + x^4*y"]).radical_member(&p(&r, "x^2 + x*y"), &o).unwrap(),
            RadicalAnswer::Yes(None)
        );
        assert_eq!(
            id(&r, &["x^5 + x^4*y"]).radical_member(&p(&r, "x"), &o).unwrap(),
            RadicalAnswer::No
        );
    }

    #[test]
    fn radical_equality() {
        let r = ring(&["x", "y"]);
        let o = RadicalOptions::default();
        assert_eq!(id(&r, &["x^2"]).radicals_equal(&id(&r, &["x^3"]), &o).unwrap(), Decision::Yes);
        assert_ne!(id(&r, &["x"]).radicals_equal(&id(&r, &["y"]), &o).unwrap(), Decision::Yes);
        let r2 = ring(&["x1", "x2"]);
        assert_eq!(
            id(&r2, &["x2", "x1^2", "x1^3"]).radicals_equal(&id(&r2, &["x1", "x2"]), &o).unwrap(),
            Decision::Yes
        );
    }

    #[test]
    fn canonical_form_is_reduced() {
        let r = ring(&["x1", "x2"]);
        let i = id(&r, &["x2 + x1^3", "x1^2"]);
        assert_eq!(i.canonical_strings().unwrap(), vec!["x1^2", "x2"]);
        let j = id(&r, &["x2 - 3*x1 + x1^2", "x1^3", "x1*x2"]);
        let c = j.canonical_strings().unwrap();
        assert!(Ideal::parse(&r, &c.iter().map(|s| s.as_str()).collect::<Vec<_>>())
            .unwrap()
            .equals(&j)
            .unwrap());
    }

    #[test]
    fn minimal_generators() {
        let r = ring(&["x", "y"]);
        let i = id(&r, &["x", "x + x^2", "y", "x*y"]);
        assert_eq!(i.minimal_gens().unwrap().gens().len(), 2);
    }
}
