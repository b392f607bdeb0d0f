//! Standard bases in the localization at the origin.
//!
//! Bases are completed with Lazard's homogenization method (Buchberger by
//! degree with the Gebauer–Möller criteria); membership uses Mora's weak
//! normal form against the finished basis. Module elements
//! use the position-over-term order, which makes component elimination a
//! matter of filtering the basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::terms::{self, Term};

/// An element of the free module `R^rank`.
#[derive(Clone)]
pub struct ModuleElem {
    ring: Ring,
    rank: usize,
    terms: Vec<Term>,
}

impl PartialEq for ModuleElem {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl Eq for ModuleElem {}

impl fmt::Debug for ModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleElem({self})")
    }
}

impl ModuleElem {
    pub fn zero(ring: &Ring, rank: usize) -> ModuleElem {
        ModuleElem {
            ring: ring.clone(),
            rank,
            terms: Vec::new(),
        }
    }

    /// The vector whose `i`-th component is `polys[i]`.
    pub fn from_polys(ring: &Ring, polys: &[Polynomial]) -> ModuleElem {
        let mut out = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            out.extend(p.raw_terms().iter().map(|t| Term {
                comp: i,
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            }));
        }
        ModuleElem {
            ring: ring.clone(),
            rank: polys.len(),
            terms: terms::normalize(&ring.order(), out),
        }
    }

    /// `f·e_i`.
    pub fn basis_multiple(ring: &Ring, rank: usize, i: usize, f: &Polynomial) -> ModuleElem {
        ModuleElem {
            ring: ring.clone(),
            rank,
            terms: f
                .raw_terms()
                .iter()
                .map(|t| Term {
                    comp: i,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub fn unit(ring: &Ring, rank: usize, i: usize) -> ModuleElem {
        Self::basis_multiple(ring, rank, i, &Polynomial::one(ring))
    }

    pub(crate) fn from_terms(ring: &Ring, rank: usize, terms: Vec<Term>) -> ModuleElem {
        ModuleElem {
            ring: ring.clone(),
            rank,
            terms: terms::normalize(&ring.order(), terms),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The same vector over a ring with the same variables and field.
    pub(crate) fn to_ring(&self, ring: &Ring) -> ModuleElem {
        ModuleElem::from_terms(ring, self.rank, self.terms.clone())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn raw_terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn component(&self, i: usize) -> Polynomial {
        let ts = self
            .terms
            .iter()
            .filter(|t| t.comp == i)
            .map(|t| Term {
                comp: 0,
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            })
            .collect();
        Polynomial::from_sorted_terms(&self.ring, ts)
    }

    pub fn components(&self) -> Vec<Polynomial> {
        (0..self.rank).map(|i| self.component(i)).collect()
    }

    /// Leading component index and monomial.
    pub fn leading(&self) -> Option<(usize, &Monomial)> {
        self.terms.first().map(|t| (t.comp, &t.mono))
    }

    pub fn try_add(&self, other: &ModuleElem) -> Result<ModuleElem> {
        if !self.ring.same_ring(&other.ring) || self.rank != other.rank {
            return Err(Error::RingMismatch);
        }
        let one = self.ring.field().one();
        Ok(ModuleElem {
            ring: self.ring.clone(),
            rank: self.rank,
            terms: terms::add_scaled(&self.ring.order(), &self.terms, &one, None, &other.terms),
        })
    }

    pub fn scale_poly(&self, f: &Polynomial) -> ModuleElem {
        let order = self.ring.order();
        let mut acc: Vec<Term> = Vec::new();
        for t in f.raw_terms() {
            acc = terms::add_scaled(&order, &acc, &t.coeff, Some(&t.mono), &self.terms);
        }
        ModuleElem {
            ring: self.ring.clone(),
            rank: self.rank,
            terms: acc,
        }
    }

    /// Same vector in `R^new_rank`, components shifted up by `offset`.
    pub fn embed(&self, new_rank: usize, offset: usize) -> ModuleElem {
        ModuleElem {
            ring: self.ring.clone(),
            rank: new_rank,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp + offset,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for ModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone)]
struct Elem {
    terms: Vec<Term>,
    ecart: u32,
    /// Degree of the homogenization this element was produced in.
    sugar: u32,
}

impl Elem {
    fn new(terms: Vec<Term>) -> Elem {
        let top = terms::max_degree(&terms);
        let ecart = top - terms[0].mono.degree();
        Elem {
            terms,
            ecart,
            sugar: top,
        }
    }

    fn with_sugar(terms: Vec<Term>, sugar: u32) -> Elem {
        let mut e = Elem::new(terms);
        e.sugar = e.sugar.max(sugar);
        e
    }

    fn lead(&self) -> &Term {
        &self.terms[0]
    }

    /// Exponent of the homogenizing variable in the leading term.
    fn room(&self) -> u32 {
        self.sugar - self.lead().mono.degree()
    }
}

fn ecart_of(h: &[Term]) -> u32 {
    terms::max_degree(h) - h[0].mono.degree()
}

/// Mora's weak normal form of `f` with respect to `basis`.
const MORA_STEPS: usize = 400;

fn nf_mora(ring: &Ring, f: Vec<Term>, basis: &[Elem]) -> Vec<Term> {
    nf_mora_capped(ring, f, basis, usize::MAX).expect("uncapped")
}

/// Mora's normal form, giving up after `cap` reduction steps.
fn nf_mora_capped(ring: &Ring, f: Vec<Term>, basis: &[Elem], cap: usize) -> Option<Vec<Term>> {
    let order = ring.order();
    let mut h = f;
    let mut extra: Vec<Elem> = Vec::new();
    for _ in 0..cap {
        let Some(lead) = h.first() else { return Some(h) };
        let mut best: Option<&Elem> = None;
        for e in basis.iter().chain(extra.iter()) {
            let l = e.lead();
            if l.comp == lead.comp
                && l.mono.divides(&lead.mono)
                && best.map_or(true, |b| e.ecart < b.ecart)
            {
                best = Some(e);
                if e.ecart == 0 {
                    break;
                }
            }
        }
        let Some(g) = best else { return Some(h) };
        let eh = ecart_of(&h);
        let gl = g.lead();
        let m = gl.mono.quotient_of(&lead.mono);
        let c = lead.coeff.div(&gl.coeff).expect("nonzero").neg();
        let push = g.ecart > eh;
        let next = terms::add_scaled(&order, &h, &c, Some(&m), &g.terms);
        if push {
            extra.push(Elem::new(h));
        }
        h = next;
    }
    None
}

/// Leading term reduction of `h` inside the homogeneous component of degree
/// `sugar`: a reducer is admissible only if its homogenized leading term
/// divides that of `h`.
fn nf_homogeneous(ring: &Ring, f: Vec<Term>, sugar: u32, basis: &[Elem]) -> Vec<Term> {
    let order = ring.order();
    let mut h = f;
    loop {
        let Some(lead) = h.first() else { return h };
        let room = sugar - lead.mono.degree();
        let g = basis.iter().filter(|e| {
            let l = e.lead();
            l.comp == lead.comp && e.room() <= room && l.mono.divides(&lead.mono)
        });
        let Some(g) = g.min_by_key(|e| e.terms.len()) else { return h };
        let gl = g.lead();
        let m = gl.mono.quotient_of(&lead.mono);
        let c = lead.coeff.div(&gl.coeff).expect("nonzero").neg();
        h = terms::add_scaled(&order, &h, &c, Some(&m), &g.terms);
    }
}

/// Homogenized leading monomial: the monomial and the exponent of the
/// homogenizing variable.
#[derive(Clone, PartialEq, Eq)]
struct HMono {
    mono: Monomial,
    room: u32,
}

impl HMono {
    fn divides(&self, other: &HMono) -> bool {
        self.room <= other.room && self.mono.divides(&other.mono)
    }

    fn lcm(&self, other: &HMono) -> HMono {
        HMono {
            mono: self.mono.lcm(&other.mono),
            room: self.room.max(other.room),
        }
    }

    fn degree(&self) -> u32 {
        self.mono.degree() + self.room
    }
}

enum Task {
    Pair { i: usize, j: usize, lcm: HMono },
    Gen(Vec<Term>),
}

impl Task {
    fn sugar(&self) -> u32 {
        match self {
            Task::Pair { lcm, .. } => lcm.degree(),
            Task::Gen(t) => terms::max_degree(t),
        }
    }
}

/// Lazard's method: Buchberger's algorithm on the homogenizations, by
/// increasing degree, under the order that compares degrees first and then
/// the local order of the dehomogenized monomials. Every element is stored
/// dehomogenized together with its degree; the dehomogenized basis is a
/// standard basis.
struct Engine<'a> {
    ring: &'a Ring,
    basis: Vec<Elem>,
    tasks: Vec<Task>,
    product_criterion: bool,
    budget: Option<u64>,
    used: u64,
}

impl<'a> Engine<'a> {
    fn hlead(&self, i: usize) -> HMono {
        let e = &self.basis[i];
        HMono {
            mono: e.lead().mono.clone(),
            room: e.room(),
        }
    }

    fn spoly(&self, i: usize, j: usize, lcm: &HMono) -> Vec<Term> {
        let order = self.ring.order();
        let a = &self.basis[i];
        let b = &self.basis[j];
        let ma = a.lead().mono.quotient_of(&lcm.mono);
        let mb = b.lead().mono.quotient_of(&lcm.mono);
        let ca = a.lead().coeff.inv().expect("nonzero");
        let cb = b.lead().coeff.inv().expect("nonzero").neg();
        let left = terms::scale(&a.terms, &ca, Some(&ma));
        terms::add_scaled(&order, &left, &cb, Some(&mb), &b.terms)
    }

    /// Inserts a nonzero element and updates the pair set with the
    /// Gebauer–Möller criteria on homogenized leading terms.
    fn insert(&mut self, h: Vec<Term>, sugar: u32) {
        let t = self.basis.len();
        self.basis.push(Elem::with_sugar(h, sugar));
        let comp = self.basis[t].lead().comp;
        let hl = self.hlead(t);
        let mut cands: Vec<(usize, HMono, bool)> = Vec::new();
        for i in 0..t {
            if self.basis[i].lead().comp != comp {
                continue;
            }
            let gl = self.hlead(i);
            let coprime = self.product_criterion
                && gl.mono.is_coprime(&hl.mono)
                && (gl.room == 0 || hl.room == 0);
            cands.push((i, gl.lcm(&hl), coprime));
        }
        // Chain criterion on the new pairs.
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let (la, lb) = (&cands[a].1, &cands[b].1);
                if lb.divides(la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // Old pairs made redundant by the new leading term.
        let leads: Vec<HMono> = (0..t).map(|i| self.hlead(i)).collect();
        let basis = &self.basis;
        self.tasks.retain(|task| {
            let Task::Pair { i, j, lcm } = task else { return true };
            if basis[*i].lead().comp != comp || !hl.divides(lcm) {
                return true;
            }
            leads[*i].lcm(&hl) == *lcm || leads[*j].lcm(&hl) == *lcm
        });
        for (k, (i, lcm, coprime)) in cands.into_iter().enumerate() {
            if keep[k] && !coprime {
                self.tasks.push(Task::Pair { i, j: t, lcm });
            }
        }
    }

    fn next_task(&mut self) -> Option<Task> {
        let key = |t: &Task| match t {
            Task::Gen(_) => (t.sugar(), 0, 0, 0),
            Task::Pair { i, j, .. } => (t.sugar(), 1, *j, *i),
        };
        let k = (0..self.tasks.len()).min_by_key(|&k| key(&self.tasks[k]))?;
        Some(self.tasks.swap_remove(k))
    }

    fn complete(&mut self) -> Result<()> {
        while let Some(task) = self.next_task() {
            let sugar = task.sugar();
            let s = match task {
                Task::Gen(g) => g,
                Task::Pair { i, j, lcm } => {
                    self.used += 1;
                    if let Some(b) = self.budget {
                        if self.used > b {
                            return Err(Error::BudgetExceeded { budget: b });
                        }
                    }
                    self.spoly(i, j, &lcm)
                }
            };
            let h = nf_homogeneous(self.ring, s, sugar, &self.basis);
            if !h.is_empty() {
                self.insert(h, sugar);
            }
        }
        Ok(())
    }
}

/// Drops elements whose leading term is divisible by another's, makes the
/// rest monic and sorts them descending by leading term.
fn minimize(ring: &Ring, b: &[Elem]) -> Vec<Elem> {
    let order = ring.order();
    let mut keep = Vec::new();
    for (i, e) in b.iter().enumerate() {
        let l = e.lead();
        let redundant = b.iter().enumerate().any(|(j, f)| {
            let fl = f.lead();
            j != i && fl.comp == l.comp && fl.mono.divides(&l.mono) && (fl.mono != l.mono || j < i)
        });
        if !redundant {
            let inv = l.coeff.inv().expect("nonzero");
            keep.push(Elem::new(terms::scale(&e.terms, &inv, None)));
        }
    }
    keep.sort_by(|a, b| terms::cmp_terms(&order, b.lead(), a.lead()));
    keep
}

/// A minimal standard basis of a submodule of `R^rank`, sorted descending by
/// leading term, every element monic.
#[derive(Clone)]
pub struct SBasis {
    ring: Ring,
    rank: usize,
    elems: Vec<Elem>,
    /// Homogeneous Gröbner basis the minimal basis was extracted from.
    full: Vec<Elem>,
}

impl fmt::Debug for SBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elems().iter()).finish()
    }
}

impl SBasis {
    pub fn compute(ring: &Ring, rank: usize, gens: &[ModuleElem]) -> Result<SBasis> {
        let empty = SBasis {
            ring: ring.clone(),
            rank,
            elems: Vec::new(),
            full: Vec::new(),
        };
        empty.extend(rank, gens)
    }

    /// Standard basis of this module plus `gens`, viewed in `R^rank`
    /// (`rank` at least the current rank). Pairs among existing elements are
    /// not revisited.
    pub fn extend(&self, rank: usize, gens: &[ModuleElem]) -> Result<SBasis> {
        assert!(rank >= self.rank, "extension cannot shrink the rank");
        for g in gens {
            if !g.ring.same_ring(&self.ring) || g.rank > rank {
                return Err(Error::RingMismatch);
            }
        }
        let mut eng = Engine {
            ring: &self.ring,
            basis: self.full.clone(),
            tasks: gens
                .iter()
                .filter(|g| !g.is_zero())
                .map(|g| Task::Gen(g.terms.clone()))
                .collect(),
            product_criterion: rank == 1,
            budget: self.ring.spair_budget(),
            used: 0,
        };
        eng.complete()?;
        Ok(SBasis {
            ring: self.ring.clone(),
            rank,
            elems: minimize(&self.ring, &eng.basis),
            full: eng.basis,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> Vec<ModuleElem> {
        self.elems
            .iter()
            .map(|e| ModuleElem {
                ring: self.ring.clone(),
                rank: self.rank,
                terms: e.terms.clone(),
            })
            .collect()
    }

    /// Generators as polynomials; only meaningful for rank one.
    pub fn polys(&self) -> Vec<Polynomial> {
        self.elems
            .iter()
            .map(|e| Polynomial::from_sorted_terms(&self.ring, e.terms.clone()))
            .collect()
    }

    /// Leading `(component, monomial)` of each element.
    pub fn leading(&self) -> Vec<(usize, Monomial)> {
        self.elems
            .iter()
            .map(|e| (e.lead().comp, e.lead().mono.clone()))
            .collect()
    }

    /// Whether the module is all of `R^rank`.
    pub fn is_whole(&self) -> bool {
        let mut seen = vec![false; self.rank];
        for e in &self.elems {
            if e.lead().mono.is_one() {
                seen[e.lead().comp] = true;
            }
        }
        seen.iter().all(|&b| b)
    }

    pub fn reduce(&self, f: &ModuleElem) -> ModuleElem {
        ModuleElem {
            ring: self.ring.clone(),
            rank: self.rank.max(f.rank),
            terms: nf_mora(&self.ring, f.terms.clone(), &self.elems),
        }
    }

    pub fn reduce_poly(&self, f: &Polynomial) -> Polynomial {
        let t = nf_mora(&self.ring, f.raw_terms().to_vec(), &self.elems);
        Polynomial::from_sorted_terms(&self.ring, t)
    }

    /// Membership by Mora's normal form; when that runs long, by comparing
    /// the leading modules of the basis with and without `f`.
    pub fn contains(&self, f: &ModuleElem) -> Result<bool> {
        if let Some(h) = nf_mora_capped(&self.ring, f.terms.clone(), &self.elems, MORA_STEPS) {
            return Ok(h.is_empty());
        }
        let ext = self.extend(self.rank.max(f.rank), std::slice::from_ref(f))?;
        Ok(ext.leading().iter().all(|(c, m)| self.leading_divides(*c, m)))
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        self.contains(&ModuleElem::from_polys(&self.ring, std::slice::from_ref(f)))
    }

    /// Whether some leading term divides `x^mono` in component `comp`.
    pub fn leading_divides(&self, comp: usize, mono: &Monomial) -> bool {
        self.elems
            .iter()
            .any(|e| e.lead().comp == comp && e.lead().mono.divides(mono))
    }

    /// Elements lying in the last `rank - k` components, shifted down by `k`.
    pub fn eliminated(&self, k: usize) -> Vec<ModuleElem> {
        self.elems
            .iter()
            .filter(|e| e.lead().comp >= k)
            .map(|e| ModuleElem {
                ring: self.ring.clone(),
                rank: self.rank - k,
                terms: e
                    .terms
                    .iter()
                    .map(|t| Term {
                        comp: t.comp - k,
                        mono: t.mono.clone(),
                        coeff: t.coeff.clone(),
                    })
                    .collect(),
            })
            .collect()
    }
}

/// Mora weak normal form of `f` with respect to an arbitrary list of
/// generators (not necessarily a standard basis).
pub fn mora_nf(f: &ModuleElem, gens: &[ModuleElem]) -> ModuleElem {
    let basis: Vec<Elem> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Elem::new(g.terms.clone()))
        .collect();
    ModuleElem {
        ring: f.ring.clone(),
        rank: f.rank,
        terms: nf_mora(&f.ring, f.terms.clone(), &basis),
    }
}

/// Standard basis of the ideal generated by `gens`.
pub fn std_basis(ring: &Ring, gens: &[Polynomial]) -> Result<SBasis> {
    let m: Vec<ModuleElem> = gens
        .iter()
        .map(|g| ModuleElem::basis_multiple(ring, 1, 0, g))
        .collect();
    SBasis::compute(ring, 1, &m)
}

/// Generators of the intersection of the submodule generated by `gens` with
/// `0^k ⊕ R^(rank-k)`, as elements of `R^(rank-k)`.
pub fn eliminate_components(ring: &Ring, rank: usize, gens: &[ModuleElem], k: usize) -> Result<Vec<ModuleElem>> {
    if k > rank {
        return Err(Error::OutOfRange(format!("cannot eliminate {k} of {rank} components")));
    }
    Ok(SBasis::compute(ring, rank, gens)?.eliminated(k))
}

/// Generators of the syzygy module of `gens ⊂ R^s` as elements of `R^t`.
pub fn syzygies(ring: &Ring, gens: &[ModuleElem]) -> Result<Vec<ModuleElem>> {
    let t = gens.len();
    let s = gens.iter().map(|g| g.rank).max().unwrap_or(0);
    let aug: Vec<ModuleElem> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms = g.embed(s + t, 0).terms;
            terms.push(Term {
                comp: s + i,
                mono: Monomial::one(ring.nvars()),
                coeff: ring.field().one(),
            });
            ModuleElem::from_terms(ring, s + t, terms)
        })
        .collect();
    eliminate_components(ring, s + t, &aug, s)
}

/// Contraction of the ideal generated by `gens` to the main variables of a
/// block-ordered ring: standard-basis elements free of the first `aux_count`
/// variables.
pub fn eliminate(gens: &[Polynomial], aux_count: usize) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let aux = ring.order().aux_count();
    if aux == 0 {
        return Err(Error::NotBlockOrder);
    }
    if aux_count != aux {
        return Err(Error::OutOfRange(format!(
            "ring has {aux} auxiliary variables, asked to eliminate {aux_count}"
        )));
    }
    let sb = std_basis(&ring, gens)?;
    Ok(sb
        .polys()
        .into_iter()
        .filter(|p| p.terms().all(|(m, _)| (0..aux).all(|i| m.exponent(i) == 0)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::RingCtx;

    fn ring(vars: &[&str]) -> Ring {
        RingCtx::local(vars, Field::Rational).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn ps(r: &Ring, ss: &[&str]) -> Vec<Polynomial> {
        ss.iter().map(|s| p(r, s)).collect()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn unit_multiple_membership() {
        let r = ring(&["x"]);
        let f = ModuleElem::from_polys(&r, &[p(&r, "x")]);
        let g = ModuleElem::from_polys(&r, &[p(&r, "x + x^2")]);
        assert!(mora_nf(&f, &[g.clone()]).is_zero());
        assert!(mora_nf(&g, &[g.clone()]).is_zero());
    }

    #[test]
    fn non_member_stays() {
        let r = ring(&["x", "y"]);
        let sb = std_basis(&r, &ps(&r, &["x^2", "x*y"])).unwrap();
        let y2 = p(&r, "y^2");
        assert_eq!(sb.reduce_poly(&y2), y2);
        assert!(!sb.contains_poly(&y2).unwrap());
    }

    #[test]
    fn basic_bases() {
        let r = ring(&["x", "y"]);
        let sb = std_basis(&r, &ps(&r, &["x", "y"])).unwrap();
        assert_eq!(sb.polys(), ps(&r, &["x", "y"]));
        let sb = std_basis(&r, &ps(&r, &["x + x^2", "x"])).unwrap();
        assert_eq!(sb.len(), 1);
        assert_eq!(sb.leading()[0].1, mono(&[1, 0]));
        let sb = std_basis(&r, &ps(&r, &["1 + x"])).unwrap();
        assert!(sb.is_whole());
    }

    #[test]
    fn leading_ideal_of_tangent_cone_example() {
        let r = ring(&["x", "y"]);
        let sb = std_basis(&r, &ps(&r, &["x^2 + y^3", "y^2"])).unwrap();
        let mut lead: Vec<Monomial> = sb.leading().into_iter().map(|(_, m)| m).collect();
        lead.sort_by_key(|m| m.exponents().collect::<Vec<_>>());
        assert_eq!(lead, vec![mono(&[0, 2]), mono(&[2, 0])]);
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"]);
        let gens = vec![
            ModuleElem::from_polys(&r, &[p(&r, "x")]),
            ModuleElem::from_polys(&r, &[p(&r, "y")]),
        ];
        let syz = syzygies(&r, &gens).unwrap();
        assert_eq!(syz.len(), 1);
        let comps = syz[0].components();
        let lin = &(&comps[0] * &p(&r, "x")) + &(&comps[1] * &p(&r, "y"));
        assert!(lin.is_zero());
        assert_eq!(comps[0].monic(), p(&r, "y"));
    }

    #[test]
    fn trivial_syzygies() {
        let r = ring(&["x", "y"]);
        assert!(syzygies(&r, &[ModuleElem::unit(&r, 1, 0)]).unwrap().is_empty());
        let cols = vec![
            ModuleElem::from_polys(&r, &ps(&r, &["x", "y"])),
            ModuleElem::from_polys(&r, &ps(&r, &["y", "x"])),
        ];
        assert!(syzygies(&r, &cols).unwrap().is_empty());
    }

    #[test]
    fn block_elimination() {
        let base = ring(&["x"]);
        let r = base.with_aux_vars(&["t"]).unwrap();
        assert!(eliminate(&ps(&r, &["t - x"]), 1).unwrap().is_empty());
        let one = eliminate(&ps(&r, &["t*x - 1", "x"]), 1).unwrap();
        assert_eq!(one, ps(&r, &["1"]));
        let sq = eliminate(&ps(&r, &["t - x", "t^2"]), 1).unwrap();
        assert_eq!(sq, ps(&r, &["x^2"]));
        assert_eq!(eliminate(&ps(&base, &["x"]), 1), Err(Error::NotBlockOrder));
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring(&["x", "y", "z"]).with_spair_budget(Some(1));
        let res = std_basis(&r, &ps(&r, &["x*y + z^4", "x*z + y^4", "y*z + x^4"]));
        assert_eq!(res.unwrap_err(), Error::BudgetExceeded { budget: 1 });
    }

    #[test]
    fn extension_matches_fresh_computation() {
        let r = ring(&["x", "y"]);
        let a = std_basis(&r, &ps(&r, &["x^3", "y^4"])).unwrap();
        let g = ModuleElem::from_polys(&r, &[p(&r, "x*y + y^3")]);
        let ext = a.extend(1, &[g]).unwrap();
        let fresh = std_basis(&r, &ps(&r, &["x^3", "y^4", "x*y + y^3"])).unwrap();
        assert_eq!(ext.leading(), fresh.leading());
    }
}
