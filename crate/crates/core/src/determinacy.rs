//! Jacobians, singular-locus ideals, tangent modules to group orbits and
//! finite-determinacy verdicts.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::{self, Ideal};
use crate::jets::JetMatrix;
use crate::matrix::{ann_coker_of, PolyMatrix, Space};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::sbasis::ModuleElem;

/// The ideal `F` in `Der_k(R, F) = F·Der_k(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Multiplier {
    Unit,
    Max,
    MaxSquared,
}

impl Multiplier {
    fn degree(self) -> u32 {
        match self {
            Multiplier::Unit => 0,
            Multiplier::Max => 1,
            Multiplier::MaxSquared => 2,
        }
    }
}

/// `F·Der_k(R)` for `F ∈ {R, m, m²}`, generated by `g·∂_l` with `g` a
/// monomial generator of `F`.
#[derive(Clone, Debug)]
pub struct DerivationSet {
    ring: Ring,
    multiplier: Multiplier,
}

impl DerivationSet {
    pub fn new(ring: &Ring, multiplier: Multiplier) -> DerivationSet {
        DerivationSet {
            ring: ring.clone(),
            multiplier,
        }
    }

    pub fn multiplier(&self) -> Multiplier {
        self.multiplier
    }

    /// Rank of `Der_k(R)` as a free module.
    pub fn rank(&self) -> usize {
        self.ring.dim()
    }

    /// Pairs `(g, l)` standing for `g·∂_l`, `g` major.
    pub fn generators(&self) -> Vec<(Polynomial, usize)> {
        let aux = self.ring.order().aux_count();
        let p = self.ring.dim();
        let mut out = Vec::new();
        for m in Monomial::all_of_degree(p, self.multiplier.degree()) {
            let g = Polynomial::monomial(&self.ring, m.prepend_vars(aux), self.ring.field().one());
            for l in 0..p {
                out.push((g.clone(), aux + l));
            }
        }
        out
    }

    /// `(D f)` for every generator `D`.
    pub fn apply(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        self.generators()
            .iter()
            .map(|(g, l)| g.try_mul(&f.derivative(*l)))
            .collect()
    }
}

/// Positions `(i, j)` used as coordinates of the deformation space.
///
/// Symmetric matrices use the upper triangle `i ≤ j`, skew ones `i < j`;
/// off-diagonal coordinates are not doubled.
pub fn space_coordinates(space: Space, rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let keep = match space {
                Space::Full => true,
                Space::Symmetric => i <= j,
                Space::SkewSymmetric => i < j,
            };
            if keep {
                out.push((i, j));
            }
        }
    }
    out
}

fn flatten<F>(ring: &Ring, coords: &[(usize, usize)], f: F) -> ModuleElem
where
    F: Fn(usize, usize) -> Polynomial,
{
    let polys: Vec<Polynomial> = coords.iter().map(|&(i, j)| f(i, j)).collect();
    if polys.is_empty() {
        return ModuleElem::zero(ring, 0);
    }
    ModuleElem::from_polys(ring, &polys)
}

/// `Jac^(F)(A)`: one row per deformation coordinate of `A`, one column per
/// generator `g·∂_l` of `D`.
pub fn jacobian(a: &PolyMatrix, d: &DerivationSet) -> Result<PolyMatrix> {
    let ring = a.ring();
    let coords = space_coordinates(a.space(), a.rows(), a.cols());
    let gens = d.generators();
    let mut entries = Vec::with_capacity(coords.len() * gens.len());
    for &(i, j) in &coords {
        let e = a.get(i, j);
        for (g, l) in &gens {
            entries.push(g.try_mul(&e.derivative(*l))?);
        }
    }
    PolyMatrix::new(ring, coords.len(), gens.len(), entries, Space::Full)
}

/// The presentation matrix of `R^N / (J·R^N + D(f_1..f_N))`.
///
/// Row block `i` carries `(f_1..f_N)` in its own group of `N` columns; the
/// trailing columns are `(D f_1, .., D f_N)ᵀ`.
pub fn sing_matrix(gens: &[Polynomial], d: &DerivationSet) -> Result<PolyMatrix> {
    let ring = d.ring.clone();
    let n = gens.len();
    let ders: Vec<Vec<Polynomial>> = gens.iter().map(|f| d.apply(f)).collect::<Result<_>>()?;
    let nd = d.generators().len();
    let cols = n * n + nd;
    let mut entries = vec![Polynomial::zero(&ring); n * cols];
    for i in 0..n {
        for k in 0..n {
            entries[i * cols + i * n + k] = gens[k].clone();
        }
        for (c, v) in ders[i].iter().enumerate() {
            entries[i * cols + n * n + c] = v.clone();
        }
    }
    PolyMatrix::new(&ring, n, cols, entries, Space::Full)
}

/// `Sing_r(J)`, the singular-locus ideal of `J` relative to `D`: `ann_r` of
/// the presentation built on a minimal generating set.
///
/// With `N` minimal generators and `r > N` the result is `J`: padding the
/// generators to `N' ≥ r` splits off copies of `R/J`. For `r ≤ N` no height
/// shortcut is taken; `Sing_2((xy, xz)) = (x)` although the height is 1.
pub fn sing(j: &Ideal, r: usize, d: &DerivationSet) -> Result<Ideal> {
    if r == 0 {
        return Ok(Ideal::unit(j.ring()));
    }
    if j.is_zero() {
        return Ok(j.clone());
    }
    let gens = j.minimal_gens()?;
    let m = sing_matrix(gens.gens(), d)?;
    if r > m.rows() {
        return Ok(j.clone());
    }
    m.ann_coker_j(r as i64)
}

/// Base group of the action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupBase {
    Gl,
    Gr,
    Glr,
    Gcongr,
    Aut,
    CGl,
    CGr,
    CGlr,
    CGcongr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Linear {
    None,
    Left,
    Right,
    Both,
    Congruence,
}

impl GroupBase {
    pub const ALL: [GroupBase; 9] = [
        GroupBase::Gl,
        GroupBase::Gr,
        GroupBase::Glr,
        GroupBase::Gcongr,
        GroupBase::Aut,
        GroupBase::CGl,
        GroupBase::CGr,
        GroupBase::CGlr,
        GroupBase::CGcongr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupBase::Gl => "gl",
            GroupBase::Gr => "gr",
            GroupBase::Glr => "glr",
            GroupBase::Gcongr => "gcongr",
            GroupBase::Aut => "aut",
            GroupBase::CGl => "cgl",
            GroupBase::CGr => "cgr",
            GroupBase::CGlr => "cglr",
            GroupBase::CGcongr => "cgcongr",
        }
    }

    /// Whether the group contains the coordinate changes `Aut_k(R)`.
    pub fn has_aut(self) -> bool {
        matches!(
            self,
            GroupBase::Aut | GroupBase::CGl | GroupBase::CGr | GroupBase::CGlr | GroupBase::CGcongr
        )
    }

    pub fn is_congruence(self) -> bool {
        matches!(self, GroupBase::Gcongr | GroupBase::CGcongr)
    }

    fn linear(self) -> Linear {
        match self {
            GroupBase::Aut => Linear::None,
            GroupBase::Gl | GroupBase::CGl => Linear::Left,
            GroupBase::Gr | GroupBase::CGr => Linear::Right,
            GroupBase::Glr | GroupBase::CGlr => Linear::Both,
            GroupBase::Gcongr | GroupBase::CGcongr => Linear::Congruence,
        }
    }
}

impl fmt::Display for GroupBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupBase> {
        let lower = s.to_ascii_lowercase();
        GroupBase::ALL
            .iter()
            .copied()
            .find(|g| g.name() == lower)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown group {s:?}"),
            })
    }
}

/// A group acting on the deformation space, optionally restricted to the
/// subgroup `G^(m)` of elements trivial modulo `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub base: GroupBase,
    pub filtered: bool,
}

impl GroupSpec {
    pub fn new(base: GroupBase) -> GroupSpec {
        GroupSpec { base, filtered: false }
    }

    pub fn filtered(base: GroupBase) -> GroupSpec {
        GroupSpec { base, filtered: true }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.filtered {
            write!(f, "{}^(m)", self.base)
        } else {
            write!(f, "{}", self.base)
        }
    }
}

/// Origin of a tangent-module column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    LinearLeft,
    LinearRight,
    Congruence,
    Derivation,
}

/// Generators of `T_(GA, A)` inside the deformation space `R^rank`.
#[derive(Clone, Debug)]
pub struct TangentModule {
    ring: Ring,
    rank: usize,
    columns: Vec<ModuleElem>,
    kinds: Vec<ColumnKind>,
}

impl TangentModule {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn columns(&self) -> &[ModuleElem] {
        &self.columns
    }

    pub fn kinds(&self) -> &[ColumnKind] {
        &self.kinds
    }

    /// `ann(R^rank / T)`.
    pub fn ann(&self) -> Result<Ideal> {
        if self.rank == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        ann_coker_of(&self.ring, self.rank, &self.columns)
    }
}

fn incompatible(group: GroupSpec, space: Space, reason: &str) -> Error {
    Error::IncompatibleGroup {
        group: group.to_string(),
        space: space.to_string(),
        reason: reason.to_string(),
    }
}

fn check_compatible(group: GroupSpec, a: &PolyMatrix) -> Result<()> {
    if group.base.is_congruence() && a.rows() != a.cols() {
        return Err(incompatible(group, a.space(), "congruence needs a square matrix"));
    }
    if a.space() != Space::Full && !(group.base.is_congruence() || group.base == GroupBase::Aut) {
        return Err(incompatible(
            group,
            a.space(),
            "only congruence and coordinate changes preserve (skew-)symmetry",
        ));
    }
    Ok(())
}

/// Generators of the tangent module to the orbit `G·A`.
pub fn tangent_matrix(group: GroupSpec, a: &PolyMatrix) -> Result<TangentModule> {
    check_compatible(group, a)?;
    let ring = a.ring().clone();
    let (m, n) = (a.rows(), a.cols());
    let coords = space_coordinates(a.space(), m, n);
    let zero = Polynomial::zero(&ring);
    let mut linear: Vec<(ModuleElem, ColumnKind)> = Vec::new();
    let lin = group.base.linear();
    if matches!(lin, Linear::Left | Linear::Both) {
        for s in 0..m {
            for t in 0..m {
                let col = flatten(&ring, &coords, |i, j| if i == s { a.get(t, j).clone() } else { zero.clone() });
                linear.push((col, ColumnKind::LinearLeft));
            }
        }
    }
    if matches!(lin, Linear::Right | Linear::Both) {
        for c in 0..n {
            for d in 0..n {
                let col = flatten(&ring, &coords, |i, j| if j == d { a.get(i, c).clone() } else { zero.clone() });
                linear.push((col, ColumnKind::LinearRight));
            }
        }
    }
    if lin == Linear::Congruence {
        // E_st·A + A·E_stᵀ
        for s in 0..m {
            for t in 0..m {
                let col = flatten(&ring, &coords, |i, j| {
                    let mut v = zero.clone();
                    if i == s {
                        v = &v + a.get(t, j);
                    }
                    if j == s {
                        v = &v + a.get(i, t);
                    }
                    v
                });
                linear.push((col, ColumnKind::Congruence));
            }
        }
    }
    let mut columns = Vec::new();
    let mut kinds = Vec::new();
    let aux = ring.order().aux_count();
    for (col, kind) in linear {
        if group.filtered {
            for k in 0..ring.dim() {
                columns.push(col.scale_poly(&Polynomial::var(&ring, aux + k)));
                kinds.push(kind);
            }
        } else {
            columns.push(col);
            kinds.push(kind);
        }
    }
    if group.base.has_aut() {
        let mult = if group.filtered { Multiplier::MaxSquared } else { Multiplier::Max };
        for (g, l) in DerivationSet::new(&ring, mult).generators() {
            let col = flatten(&ring, &coords, |i, j| &g * &a.get(i, j).derivative(l));
            columns.push(col);
            kinds.push(ColumnKind::Derivation);
        }
    }
    Ok(TangentModule {
        ring,
        rank: coords.len(),
        columns,
        kinds,
    })
}

/// `ann(T¹_(Σ, G, A))`.
pub fn t1_ann(group: GroupSpec, a: &PolyMatrix) -> Result<Ideal> {
    tangent_matrix(group, a)?.ann()
}

fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `∩_j Sat_{I_j}(Sing_{r(j)}(I_{j+1}))` over the given `j`.
fn sing_intersection<F>(a: &PolyMatrix, js: &[usize], rank_of: F, mult: Multiplier) -> Result<Ideal>
where
    F: Fn(usize) -> usize,
{
    let ring = a.ring();
    let d = DerivationSet::new(ring, mult);
    let mut factors = Vec::with_capacity(js.len());
    for &j in js {
        let ij = a.minors(j as i64)?;
        let next = a.minors(j as i64 + 1)?;
        let s = sing(&next, rank_of(j), &d)?;
        factors.push(s.saturate(&ij)?.0);
    }
    ideal::intersect_all(ring, &factors)
}

fn full_with_rows_le_cols(a: &PolyMatrix) -> Result<PolyMatrix> {
    let a = a.with_space(Space::Full)?;
    Ok(if a.rows() > a.cols() { a.transpose() } else { a })
}

/// `ann.coker(A) + ann.coker(Jac^(m)(A))`.
fn lower_bound(a: &PolyMatrix, full: &PolyMatrix) -> Result<Ideal> {
    if space_coordinates(a.space(), a.rows(), a.cols()).is_empty() {
        return Ok(Ideal::unit(a.ring()));
    }
    let jac = jacobian(a, &DerivationSet::new(a.ring(), Multiplier::Max))?;
    full.ann_coker()?.sum(&jac.ann_coker()?)
}

/// Lower and upper ideals sandwiching `ann(T¹)` for `𝒢_lr`:
/// `L = ann.coker(A) + ann.coker(Jac^(m)(A))` and
/// `U = ∩_{j<m} Sat_{I_j}(Sing^(m)_{(m-j)(n-j)}(I_{j+1}))`.
pub fn glr_bounds(a: &PolyMatrix) -> Result<(Ideal, Ideal)> {
    let a = full_with_rows_le_cols(a)?;
    let (m, n) = (a.rows(), a.cols());
    let lower = lower_bound(&a, &a)?;
    let js: Vec<usize> = (0..m).collect();
    let upper = sing_intersection(&a, &js, |j| (m - j) * (n - j), Multiplier::Max)?;
    Ok((lower, upper))
}

/// `∩_{j<m} Sat_{I_j}(Sing_{(m-j)(n-j)}(I_{j+1}))` with all derivations. Its
/// radical agrees with that of `ann(T¹)` for `𝒢_lr` away from the closed
/// point: for `A = (x)` over `k[x]` the former is `R`, the latter `(x)`.
pub fn radical_support_glr(a: &PolyMatrix) -> Result<Ideal> {
    let a = full_with_rows_le_cols(a)?;
    let (m, n) = (a.rows(), a.cols());
    let js: Vec<usize> = (0..m).collect();
    sing_intersection(&a, &js, |j| (m - j) * (n - j), Multiplier::Unit)
}

/// Bounds for `𝒢_congr` on (skew-)symmetric matrices. The upper ideal uses
/// `Sing_{C(m-j+1,2)}` for symmetric and even `j` with `Sing_{C(m-j,2)}` for
/// skew-symmetric matrices; away from the closed point its radical is that of
/// `ann(T¹)`.
pub fn congr_bounds(a: &PolyMatrix) -> Result<(Ideal, Ideal)> {
    let group = GroupSpec::new(GroupBase::CGcongr);
    let m = a.rows();
    let (js, offset): (Vec<usize>, usize) = match a.space() {
        Space::Full => {
            return Err(incompatible(group, Space::Full, "no finite bounds exist for full matrices"));
        }
        Space::Symmetric => ((0..m).collect(), 1),
        Space::SkewSymmetric => ((0..m).step_by(2).collect(), 0),
    };
    let full = a.with_space(Space::Full)?;
    let lower = lower_bound(a, &full)?;
    let upper = sing_intersection(&full, &js, |j| binomial2(m - j + offset), Multiplier::Unit)?;
    Ok((lower, upper))
}

/// Expected height of `I_j(A)` for a generic `A` in the deformation space.
pub fn expected_height(space: Space, rows: usize, cols: usize, j: usize, p: usize) -> usize {
    let e = match space {
        Space::Full => (rows + 1 - j) * (cols + 1 - j),
        Space::Symmetric => binomial2(rows + 2 - j),
        Space::SkewSymmetric => binomial2(rows - 2 * ((j - 1) / 2)),
    };
    e.min(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightRow {
    pub j: usize,
    pub height: usize,
    pub expected: usize,
    pub ok: bool,
}

/// `height(I_j(A))` against the generic value for `1 ≤ j ≤ min(m, n)`.
pub fn expected_heights_check(a: &PolyMatrix) -> Result<Vec<HeightRow>> {
    let p = a.ring().dim();
    let mut out = Vec::new();
    for j in 1..=a.rows().min(a.cols()) {
        let height = a.minors(j as i64)?.height()?;
        let expected = expected_height(a.space(), a.rows(), a.cols(), j, p);
        out.push(HeightRow {
            j,
            height,
            expected,
            ok: height >= expected,
        });
    }
    Ok(out)
}

fn bounds_from(group: GroupSpec, a: &PolyMatrix, ann: &Ideal) -> Result<(u32, u32)> {
    let ll = ann.contains_power_of_max()?.ok_or(Error::NotCofinite)?;
    let fine = if group.base == GroupBase::Aut {
        jacobian(a, &DerivationSet::new(a.ring(), Multiplier::MaxSquared))?.ann_coker()?
    } else {
        t1_ann(GroupSpec::filtered(group.base), a)?
    };
    let ll_fine = fine.contains_power_of_max()?.ok_or(Error::NotCofinite)?;
    Ok((ll.saturating_sub(1), ll_fine.saturating_sub(1)))
}

/// `(ll(ann T¹_G) − 1, ll(ann T¹_{G^(m)}) − 1)`, clamped at zero.
pub fn order_bounds(group: GroupSpec, a: &PolyMatrix) -> Result<(u32, u32)> {
    let base = GroupSpec::new(group.base);
    let ann = t1_ann(base, a)?;
    bounds_from(base, a, &ann)
}

/// For a one-row `A = (f_1..f_n)`: the entries vanish at the origin and have
/// linearly independent linear parts.
pub fn entries_extend_to_coordinates(a: &PolyMatrix) -> bool {
    if !a.entries_in_max_ideal() {
        return false;
    }
    let ring = a.ring();
    let aux = ring.order().aux_count();
    let p = ring.dim();
    let mut lin = JetMatrix::new(ring.field(), p);
    for f in a.entries() {
        let v: Vec<_> = (0..p)
            .map(|k| f.coeff_of(&Monomial::var(ring.nvars(), aux + k)))
            .collect();
        if !lin.insert(&v) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    FinitelyDetermined { lo: u32, hi: u32 },
    NotFinitelyDetermined { reason: String },
    Unknown { reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::FinitelyDetermined { .. } => "finitely-determined",
            Verdict::NotFinitelyDetermined { .. } => "not-finitely-determined",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Verdict::FinitelyDetermined { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::FinitelyDetermined { lo, hi } => write!(f, "finitely-determined, order in [{lo}, {hi}]"),
            Verdict::NotFinitelyDetermined { reason } => write!(f, "not-finitely-determined: {reason}"),
            Verdict::Unknown { reason } => write!(f, "unknown: {reason}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DeterminacyReport {
    pub group: GroupSpec,
    pub space: Space,
    pub rows: usize,
    pub cols: usize,
    pub p: usize,
    pub heights: Vec<HeightRow>,
    pub lower: Option<Ideal>,
    pub exact: Option<Ideal>,
    pub upper: Option<Ideal>,
    /// `L ⊆ exact ⊆ U`, checked generator by generator.
    pub sandwich: Option<bool>,
    /// `ll(exact)` when the exact annihilator is cofinite.
    pub loewy: Option<u32>,
    pub verdict: Verdict,
}

fn not_fd(reason: impl Into<String>) -> Verdict {
    Verdict::NotFinitelyDetermined { reason: reason.into() }
}

fn failed_heights(rows: &[HeightRow]) -> Vec<String> {
    rows.iter()
        .filter(|h| !h.ok)
        .map(|h| format!("height I_{} = {} < {}", h.j, h.height, h.expected))
        .collect()
}

/// Runs the full analysis of `A` under `group`. A failed expected height
/// settles the verdict without computing `ann(T¹)` whenever the group lies in
/// `𝒢_lr` (full matrices) or in `𝒢_congr` (symmetric matrices).
pub fn verdict(group: GroupSpec, a: &PolyMatrix) -> Result<DeterminacyReport> {
    check_compatible(group, a)?;
    let p = a.ring().dim();
    let (m, n) = (a.rows(), a.cols());
    let mut report = DeterminacyReport {
        group,
        space: a.space(),
        rows: m,
        cols: n,
        p,
        heights: Vec::new(),
        lower: None,
        exact: None,
        upper: None,
        sandwich: None,
        loewy: None,
        verdict: Verdict::Unknown { reason: String::new() },
    };
    let budget = |e: Error| match e {
        Error::BudgetExceeded { budget } => Ok(Verdict::Unknown {
            reason: format!("S-pair budget of {budget} exceeded"),
        }),
        other => Err(other),
    };
    match expected_heights_check(a) {
        Ok(h) => report.heights = h,
        Err(e) => {
            report.verdict = budget(e)?;
            return Ok(report);
        }
    }
    let height_certifies = match a.space() {
        Space::Full => true,
        Space::Symmetric => group.base.is_congruence() || group.base == GroupBase::Aut,
        Space::SkewSymmetric => false,
    };
    let failed = failed_heights(&report.heights);
    if height_certifies && !failed.is_empty() && a.entries_in_max_ideal() {
        report.verdict = not_fd(failed.join(", "));
        return Ok(report);
    }
    if group.base == GroupBase::CGcongr && a.space() == Space::Full && p < m / 2 {
        report.verdict = not_fd(format!("rank Der_k(R) = {p} < floor(m/2) = {}", m / 2));
        return Ok(report);
    }
    if group.base == GroupBase::Aut && m == 1 && n > 1 && !entries_extend_to_coordinates(a) {
        report.verdict = not_fd("the entries are not part of a minimal generating set of m");
        return Ok(report);
    }
    let exact = match t1_ann(group, a) {
        Ok(e) => e,
        Err(e) => {
            report.verdict = budget(e)?;
            return Ok(report);
        }
    };
    let bounds = match (group.base, a.space()) {
        (GroupBase::CGlr, _) if !group.filtered => Some(glr_bounds(a)),
        (GroupBase::CGcongr, Space::Symmetric) if !group.filtered => Some(congr_bounds(a)),
        _ => None,
    };
    if let Some(b) = bounds {
        match b {
            Ok((lower, upper)) => {
                let ok = exact.contains_ideal(&lower)? && upper.contains_ideal(&exact)?;
                report.sandwich = Some(ok);
                report.lower = Some(lower);
                report.upper = Some(upper);
            }
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let ll = exact.contains_power_of_max()?;
    report.loewy = ll;
    report.verdict = match ll {
        Some(l) if group.filtered => Verdict::FinitelyDetermined {
            lo: l.saturating_sub(1),
            hi: l.saturating_sub(1),
        },
        Some(_) => match bounds_from(group, a, &exact) {
            Ok((lo, hi)) => Verdict::FinitelyDetermined { lo, hi },
            Err(e) => budget(e)?,
        },
        None => {
            if failed.is_empty() {
                not_fd("ann(T^1) contains no power of m")
            } else {
                not_fd(format!("ann(T^1) contains no power of m; {}", failed.join(", ")))
            }
        }
    };
    report.exact = Some(exact);
    Ok(report)
}

/// Whether `f^p ∈ (∂_1 f, .., ∂_p f)`.
pub fn briancon_skoda_check(f: &Polynomial) -> Result<bool> {
    if !f.in_max_ideal() {
        return Err(Error::OutOfRange("the function must vanish at the origin".into()));
    }
    let ring = f.ring();
    let aux = ring.order().aux_count();
    let p = ring.dim();
    let jac = Ideal::new(ring, (0..p).map(|l| f.derivative(aux + l)).collect());
    jac.contains(&f.pow(p as u32)?)
}
