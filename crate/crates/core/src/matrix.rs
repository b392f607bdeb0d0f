//! Polynomial matrices, determinantal ideals and annihilators of cokernels.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::{self, Ideal};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::sbasis::{ModuleElem, SBasis};

/// Deformation space a matrix lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Full,
    Symmetric,
    SkewSymmetric,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Full => "full",
            Space::Symmetric => "sym",
            Space::SkewSymmetric => "skew",
        })
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Space> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(Space::Full),
            "sym" | "symmetric" => Ok(Space::Symmetric),
            "skew" | "skew-symmetric" | "skewsymmetric" => Ok(Space::SkewSymmetric),
            _ => Err(Error::InvalidMatrix(format!("unknown space {s:?}"))),
        }
    }
}

/// An `m×n` matrix over the ring, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    space: Space,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix({self})")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>, space: Space) -> Result<PolyMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("matrix must have at least one row and column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !e.ring().same_ring(ring)) {
            return Err(Error::RingMismatch);
        }
        let a = PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
            space,
        };
        a.validate_space()?;
        Ok(a)
    }

    fn validate_space(&self) -> Result<()> {
        if self.space == Space::Full {
            return Ok(());
        }
        if self.rows != self.cols {
            return Err(Error::InvalidMatrix(format!("{} matrix must be square", self.space)));
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                let (a, b) = (self.get(i, j), self.get(j, i));
                let ok = match self.space {
                    Space::Symmetric => a == b,
                    _ => (a + b).is_zero() && (i != j || a.is_zero()),
                };
                if !ok {
                    return Err(Error::InvalidMatrix(format!(
                        "entries ({},{}) and ({},{}) violate the {} structure",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1,
                        self.space
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds a matrix from rows of polynomial strings.
    pub fn from_strs<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>], space: Space) -> Result<PolyMatrix> {
        let m = rows.len();
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(m * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for s in row {
                entries.push(Polynomial::parse(ring, s.as_ref())?);
            }
        }
        PolyMatrix::new(ring, m, n, entries, space)
    }

    /// Parses `"a, b; c, d"`: rows separated by `;`, entries by `,`.
    pub fn parse(ring: &Ring, text: &str, space: Space) -> Result<PolyMatrix> {
        let rows: Vec<Vec<&str>> = text
            .split(';')
            .map(|r| r.split(',').map(str::trim).collect())
            .collect();
        PolyMatrix::from_strs(ring, &rows, space)
    }

    pub fn identity(ring: &Ring, n: usize) -> PolyMatrix {
        let mut e = vec![Polynomial::zero(ring); n * n];
        for i in 0..n {
            e[i * n + i] = Polynomial::one(ring);
        }
        PolyMatrix::new(ring, n, n, e, Space::Full).expect("identity is valid")
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::new(ring, rows, cols, vec![Polynomial::zero(ring); rows * cols], Space::Full)
            .expect("zero matrix is valid")
    }

    pub fn diag(ring: &Ring, d: &[Polynomial]) -> PolyMatrix {
        let n = d.len();
        let mut e = vec![Polynomial::zero(ring); n * n];
        for (i, x) in d.iter().enumerate() {
            e[i * n + i] = x.clone();
        }
        PolyMatrix::new(ring, n, n, e, Space::Full).expect("diagonal matrix is valid")
    }

    /// Same entries, different space tag (validated).
    pub fn with_space(&self, space: Space) -> Result<PolyMatrix> {
        PolyMatrix::new(&self.ring, self.rows, self.cols, self.entries.clone(), space)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut e = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                e.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries: e,
            space: self.space,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidMatrix(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut e = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.try_add(&self.get(i, k).try_mul(other.get(k, j))?)?;
                }
                e.push(acc);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, e, Space::Full)
    }

    /// `A ⊕ B`.
    pub fn block_diag(&self, other: &PolyMatrix) -> PolyMatrix {
        let (m, n) = (self.rows + other.rows, self.cols + other.cols);
        let mut e = vec![Polynomial::zero(&self.ring); m * n];
        for i in 0..self.rows {
            for j in 0..self.cols {
                e[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                e[(self.rows + i) * n + self.cols + j] = other.get(i, j).clone();
            }
        }
        PolyMatrix::new(&self.ring, m, n, e, Space::Full).expect("block sum is valid")
    }

    /// Columns as elements of `R^rows`.
    pub fn columns(&self) -> Vec<ModuleElem> {
        (0..self.cols)
            .map(|j| {
                let col: Vec<Polynomial> = (0..self.rows).map(|i| self.get(i, j).clone()).collect();
                ModuleElem::from_polys(&self.ring, &col)
            })
            .collect()
    }

    /// Whether every entry vanishes at the origin.
    pub fn entries_in_max_ideal(&self) -> bool {
        self.entries.iter().all(|e| e.in_max_ideal())
    }

    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::InvalidMatrix("determinant of a non-square matrix".into()));
        }
        let mut memo = HashMap::new();
        let all = (1u64 << self.rows) - 1;
        self.minor(all, all, &mut memo)
    }

    /// Determinant of the submatrix on the given row and column bitmasks
    /// (equal popcount), by Laplace expansion along its first row.
    fn minor(&self, rows: u64, cols: u64, memo: &mut HashMap<(u64, u64), Polynomial>) -> Result<Polynomial> {
        if rows == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if let Some(p) = memo.get(&(rows, cols)) {
            return Ok(p.clone());
        }
        let r0 = rows.trailing_zeros() as usize;
        let rest = rows & !(1u64 << r0);
        let mut acc = Polynomial::zero(&self.ring);
        let mut k = 0;
        for c in 0..self.cols {
            if cols & (1u64 << c) == 0 {
                continue;
            }
            let a = self.get(r0, c);
            if !a.is_zero() {
                let sub = self.minor(rest, cols & !(1u64 << c), memo)?;
                let term = a.try_mul(&sub)?;
                acc = if k % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
            }
            k += 1;
        }
        memo.insert((rows, cols), acc.clone());
        Ok(acc)
    }

    /// The ideal `I_j(A)` of `j×j` minors; `I_0 = R` and `I_j = 0` past the size.
    pub fn minors(&self, j: i64) -> Result<Ideal> {
        if j < 0 {
            return Err(Error::OutOfRange(format!("minor size {j} is negative")));
        }
        let j = j as usize;
        if j == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        if j > self.rows.min(self.cols) {
            return Ok(Ideal::zero(&self.ring));
        }
        let mut memo = HashMap::new();
        let mut gens = Vec::new();
        for rs in subsets(self.rows, j) {
            let rmask = mask(&rs);
            for cs in subsets(self.cols, j) {
                let d = self.minor(rmask, mask(&cs), &mut memo)?;
                if !d.is_zero() {
                    gens.push(d);
                }
            }
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `ann(coker A) = {f : f·R^m ⊆ Im A}`.
    pub fn ann_coker(&self) -> Result<Ideal> {
        ann_coker_of(&self.ring, self.rows, &self.columns())
    }

    /// The map `E ⊗ Λ^{r-1}F → Λ^r F`, `a ⊗ w ↦ A(a) ∧ w`, in wedge bases.
    ///
    /// Rows are the `r`-subsets of the rows of `A` in lexicographic order;
    /// columns are pairs (column `a` of `A`, `(r-1)`-subset `S`), `a` major.
    /// The entry in row `S ∪ {i}` is `(-1)^{#{s ∈ S : s < i}} A_{i,a}`.
    pub fn exterior_power_map(&self, r: usize) -> Result<PolyMatrix> {
        if r < 1 || r > self.rows {
            return Err(Error::OutOfRange(format!(
                "exterior power {r} outside 1..={}",
                self.rows
            )));
        }
        let row_sets = subsets(self.rows, r);
        let index: HashMap<u64, usize> = row_sets.iter().enumerate().map(|(k, s)| (mask(s), k)).collect();
        let col_sets = subsets(self.rows, r - 1);
        let ncols = self.cols * col_sets.len();
        let nrows = row_sets.len();
        let mut e = vec![Polynomial::zero(&self.ring); nrows * ncols];
        for a in 0..self.cols {
            for (k, s) in col_sets.iter().enumerate() {
                let col = a * col_sets.len() + k;
                let sm = mask(s);
                for i in 0..self.rows {
                    if sm & (1u64 << i) != 0 {
                        continue;
                    }
                    let entry = self.get(i, a);
                    if entry.is_zero() {
                        continue;
                    }
                    let below = s.iter().filter(|&&x| x < i).count();
                    let row = index[&(sm | (1u64 << i))];
                    e[row * ncols + col] = if below % 2 == 0 { entry.clone() } else { entry.neg() };
                }
            }
        }
        PolyMatrix::new(&self.ring, nrows, ncols, e, Space::Full)
    }

    /// `ann.coker_j(A) = ann.coker(φ_{m+1-j})`; `R` for `j ≤ 0`, zero for `j > m`.
    pub fn ann_coker_j(&self, j: i64) -> Result<Ideal> {
        if j <= 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        if j as usize > self.rows {
            return Ok(Ideal::zero(&self.ring));
        }
        let r = self.rows + 1 - j as usize;
        if r == 1 {
            return self.ann_coker();
        }
        self.exterior_power_map(r)?.ann_coker()
    }
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Annihilator of `R^rank / ⟨cols⟩`, as `∩_i (⟨cols⟩ : e_i)`.
///
/// The standard basis of the column module is computed once and extended by
/// `e_i + e_rank` for each `i`; the last component of the eliminated basis is
/// the quotient ideal. Over the local ring the computation runs in the
/// polynomial ring and is localized afterwards.
pub fn ann_coker_of(ring: &Ring, rank: usize, cols: &[ModuleElem]) -> Result<Ideal> {
    if let Some(g) = ring.global_twin() {
        let cols: Vec<ModuleElem> = cols.iter().map(|c| c.to_ring(&g)).collect();
        return ann_coker_of(&g, rank, &cols)?.to_ring(ring)?.compacted();
    }
    let mut uniq: Vec<ModuleElem> = Vec::new();
    for c in cols {
        if c.is_zero() {
            continue;
        }
        let lead_inv = c.raw_terms()[0].coeff.inv()?;
        let m = c.scale_poly(&Polynomial::constant(ring, lead_inv));
        if !uniq.contains(&m) {
            uniq.push(m);
        }
    }
    if uniq.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    let embedded: Vec<ModuleElem> = uniq.iter().map(|c| c.embed(rank + 1, 0)).collect();
    let base = SBasis::compute(ring, rank + 1, &embedded)?;
    let mut quotients = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut t = ModuleElem::unit(ring, rank + 1, i).raw_terms().to_vec();
        t.extend(ModuleElem::unit(ring, rank + 1, rank).raw_terms().iter().cloned());
        if base.contains(&ModuleElem::unit(ring, rank + 1, i))? {
            continue;
        }
        let v = ModuleElem::from_terms(ring, rank + 1, t);
        let sb = base.extend(rank + 1, &[v])?;
        let gens: Vec<Polynomial> = sb.eliminated(rank).iter().map(|e| e.component(0)).collect();
        let q = Ideal::new(ring, gens).compacted()?;
        if q.is_zero() {
            return Ok(q);
        }
        quotients.push(q);
    }
    ideal::intersect_all(ring, &quotients)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::RingCtx;

    fn ring(vars: &[&str]) -> Ring {
        RingCtx::local(vars, Field::Rational).unwrap()
    }

    fn mat(r: &Ring, s: &str) -> PolyMatrix {
        PolyMatrix::parse(r, s, Space::Full).unwrap()
    }

    fn id(r: &Ring, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn minors_of_worked_example() {
        let r = ring(&["x1", "x2"]);
        let a = mat(&r, "x2, x1^2; x1^3, x2");
        assert!(a.minors(2).unwrap().equals(&id(&r, &["x2^2 - x1^5"])).unwrap());
        assert!(a.minors(3).unwrap().is_zero());
        assert!(a.minors(0).unwrap().is_unit().unwrap());
        assert!(PolyMatrix::identity(&r, 2).minors(2).unwrap().is_unit().unwrap());
        assert!(a.minors(-1).is_err());
    }

    #[test]
    fn ann_coker_examples() {
        let r = ring(&["x", "y"]);
        assert!(mat(&r, "x, y").ann_coker().unwrap().equals(&id(&r, &["x", "y"])).unwrap());
        assert!(mat(&r, "x, 0; 0, x^2").ann_coker().unwrap().equals(&id(&r, &["x^2"])).unwrap());
        assert!(mat(&r, "1, 0; 0, x").ann_coker().unwrap().equals(&id(&r, &["x"])).unwrap());
        assert!(PolyMatrix::zero(&r, 2, 2).ann_coker().unwrap().is_zero());
    }

    #[test]
    fn exterior_powers() {
        let r = ring(&["x", "y"]);
        let a = mat(&r, "x, y; y^2, x");
        assert_eq!(a.exterior_power_map(1).unwrap(), a);
        let d = mat(&r, "x, 0; 0, x^2");
        let phi = d.exterior_power_map(2).unwrap();
        assert_eq!((phi.rows(), phi.cols()), (1, 4));
        // φ_2 of diag(x, x^2) has entries x and -x^2: its image is (x) = I_1.
        assert!(phi.ann_coker().unwrap().equals(&id(&r, &["x"])).unwrap());
        assert!(d.minors(2).unwrap().equals(&id(&r, &["x^3"])).unwrap());
        assert!(a.exterior_power_map(3).is_err());
    }

    #[test]
    fn generalized_annihilators_of_divisibility_chain() {
        let r = ring(&["x"]);
        let d = mat(&r, "x, 0, 0; 0, x^2, 0; 0, 0, x^3");
        assert!(d.ann_coker_j(1).unwrap().equals(&id(&r, &["x"])).unwrap());
        assert!(d.ann_coker_j(2).unwrap().equals(&id(&r, &["x^2"])).unwrap());
        assert!(d.ann_coker_j(3).unwrap().equals(&id(&r, &["x^3"])).unwrap());
        assert!(d.ann_coker_j(0).unwrap().is_unit().unwrap());
        assert!(d.ann_coker_j(4).unwrap().is_zero());
    }

    #[test]
    fn structure_validation() {
        let r = ring(&["x", "y"]);
        assert!(PolyMatrix::parse(&r, "x, y; y, x", Space::Symmetric).is_ok());
        assert!(PolyMatrix::parse(&r, "x, y; x, x", Space::Symmetric).is_err());
        assert!(PolyMatrix::parse(&r, "0, y; -y, 0", Space::SkewSymmetric).is_ok());
        assert!(PolyMatrix::parse(&r, "x, y; -y, 0", Space::SkewSymmetric).is_err());
        assert!(PolyMatrix::parse(&r, "x, y; y", Space::Full).is_err());
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(3, 2)[0], vec![0, 1]);
        assert!(subsets(2, 3).is_empty());
    }
}
