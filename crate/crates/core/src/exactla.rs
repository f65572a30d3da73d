//! Exact rational dense linear algebra.
//!
//! Everything downstream (stress spaces, Artinian reductions, homology ranks)
//! reduces to row reduction over `Q`. Entries are [`Rational`]s in lowest
//! terms; there is no floating point anywhere in this module.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always normalized (lowest terms, positive
/// denominator).
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes as `"p/q"`, including `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row);
        }
        QMatrix { rows: n, cols, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { left: self.cols, right: other.rows });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { left: self.cols, right: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(QMatrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn rank(&self) -> usize {
        if let Some(r) = integer_rank(self) {
            return r;
        }
        rref(self).rank
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub reduced: QMatrix,
}

/// Reduced row-echelon form. The pivot in each column is the first remaining
/// row with a nonzero entry there; over `Q` the result is unique regardless.
pub fn rref(m: &QMatrix) -> Rref {
    let cols = m.cols;
    let mut rows = m.row_vecs();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip();
        for x in rows[rank].iter_mut().skip(c) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[rank][j].is_zero()).collect();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j] -= &factor * &pivot_row[j];
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }
    let reduced = QMatrix::from_rows(cols, rows);
    Rref { rank, pivot_cols, reduced }
}

/// Incrementally maintained reduced echelon basis of a row space.
///
/// Rows are kept fully reduced against each other, so [`EchelonBasis::reduce`]
/// is a normal form modulo the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    // (pivot column, row with 1 at pivot and 0 at every other pivot column)
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` in place modulo the current span.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
    }

    /// Inserts `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let support: Vec<usize> = (0..self.cols).filter(|&j| !v[j].is_zero()).collect();
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for &j in &support {
                row[j] -= &factor * &v[j];
            }
        }
        self.rows.push((p, v));
        true
    }

    /// Current basis rows, in insertion order.
    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        p.sort_unstable();
        p
    }

    /// The canonical RREF matrix of the span.
    pub fn to_matrix(&self) -> QMatrix {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        QMatrix::from_rows(self.cols, rows.into_iter().map(|(_, r)| r).collect())
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { ambient_dim: self.cols, basis: self.to_matrix() }
    }
}

/// A linear subspace of `Q^ambient_dim`, stored by its canonical RREF basis so
/// that equality of subspaces is equality of basis matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: QMatrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: QMatrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: QMatrix::identity(ambient_dim) }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &QMatrix) -> Self {
        let r = rref(m);
        let rows: Vec<Vec<Rational>> = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Subspace { ambient_dim: m.cols(), basis: QMatrix::from_rows(m.cols(), rows) }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut eb = EchelonBasis::new(ambient_dim);
        for v in vectors {
            eb.insert(v);
            if eb.is_full() {
                break;
            }
        }
        eb.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        let mut eb = self.echelon();
        !eb.insert(v.to_vec())
    }

    pub(crate) fn echelon(&self) -> EchelonBasis {
        let mut eb = EchelonBasis::new(self.ambient_dim);
        for r in 0..self.basis.rows() {
            let row = self.basis.row(r).to_vec();
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            eb.rows.push((p, row));
        }
        eb
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        Ok(())
    }
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel_basis(m: &QMatrix) -> Subspace {
    let r = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivot_cols {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (k, &p) in r.pivot_cols.iter().enumerate() {
            v[p] = -r.reduced[(k, f)].clone();
        }
        v
    });
    Subspace::span(n, vectors)
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.check(b)?;
    Ok(a.basis == b.basis)
}

/// Whether `b ⊆ a`.
pub fn subspace_contains(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.check(b)?;
    let mut eb = a.echelon();
    Ok(b.basis_vectors().into_iter().all(|v| !eb.insert(v)))
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check(b)?;
    let mut eb = a.echelon();
    for v in b.basis_vectors() {
        eb.insert(v);
    }
    Ok(eb.into_subspace())
}

/// Rank over `Q` of an integer matrix by fraction-free sparse elimination.
/// Returns `None` if some entry is not an `i64` integer or an intermediate
/// value overflows; callers then fall back to rational elimination.
pub fn integer_rank(m: &QMatrix) -> Option<usize> {
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut row = Vec::new();
        for (c, x) in m.row(r).iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !x.is_integer() {
                return None;
            }
            row.push((c as u32, x.numer().to_i64()?));
        }
        rows.push(row);
    }
    sparse_integer_rank(m.cols(), rows)
}

/// Sparse rows are `(column, value)` pairs sorted by column.
pub fn sparse_integer_rank(cols: usize, rows: Vec<Vec<(u32, i64)>>) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<(u32, i64)>>> = vec![None; cols];
    let mut rank = 0;
    for mut row in rows {
        while let Some(&(lead, _)) = row.first() {
            match &pivots[lead as usize] {
                Some(p) => row = eliminate(&row, p)?,
                None => {
                    pivots[lead as usize] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

// row <- a*row - b*pivot with a = pivot lead, b = row lead; then made primitive.
fn eliminate(row: &[(u32, i64)], pivot: &[(u32, i64)]) -> Option<Vec<(u32, i64)>> {
    let a = pivot[0].1;
    let b = row[0].1;
    let g = a.gcd(&b);
    let (a, b) = (a / g, b / g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let (c, v) = match (row.get(i), pivot.get(j)) {
            (Some(&(cr, vr)), Some(&(cp, vp))) if cr == cp => {
                i += 1;
                j += 1;
                (cr, a.checked_mul(vr)?.checked_sub(b.checked_mul(vp)?)?)
            }
            (Some(&(cr, vr)), Some(&(cp, _))) if cr < cp => {
                i += 1;
                (cr, a.checked_mul(vr)?)
            }
            (Some(&(cr, vr)), None) => {
                i += 1;
                (cr, a.checked_mul(vr)?)
            }
            (_, Some(&(cp, vp))) => {
                j += 1;
                (cp, b.checked_mul(vp)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    let g = out.iter().fold(0i64, |g, &(_, v)| g.gcd(&v));
    if g > 1 {
        for (_, v) in out.iter_mut() {
            *v /= g;
        }
    }
    Some(out)
}

/// Solves `a x = b` for square invertible `a`; `None` if `a` is singular.
pub fn solve(a: &QMatrix, b: &QMatrix) -> Option<QMatrix> {
    let n = a.rows();
    if a.cols() != n || b.rows() != n {
        return None;
    }
    let rows = (0..n)
        .map(|r| a.row(r).iter().chain(b.row(r)).cloned().collect())
        .collect();
    let r = rref(&QMatrix::from_rows(n + b.cols(), rows));
    if r.pivot_cols.iter().take(n).copied().ne(0..n) || r.rank != n {
        return None;
    }
    let rows = (0..n).map(|i| r.reduced.row(i)[n..].to_vec()).collect();
    Some(QMatrix::from_rows(b.cols(), rows))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

/// Clears denominators: the smallest positive integer multiple of `v` with
/// integer entries, divided by the gcd of its entries.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_small_system() {
        let a = QMatrix::from_i64(&[&[2, 1], &[1, 3]]);
        let b = QMatrix::from_i64(&[&[3], &[5]]);
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
        assert!(solve(&QMatrix::from_i64(&[&[1, 2], &[2, 4]]), &b).is_none());
    }

    #[test]
    fn rref_identity() {
        let r = rref(&QMatrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.reduced, QMatrix::identity(2));
    }

    #[test]
    fn rref_zero() {
        let z = QMatrix::zeros(3, 3);
        let r = rref(&z);
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
        assert_eq!(r.reduced, z);
    }

    #[test]
    fn rref_dependent_rows() {
        let r = rref(&QMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.reduced, QMatrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&QMatrix::identity(3)).dim(), 0);
        assert_eq!(kernel_basis(&QMatrix::zeros(1, 3)).dim(), 3);
        let m = QMatrix::from_i64(&[&[1, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn subspace_ops() {
        let e1 = Subspace::span(2, vec![vec![rat(1), rat(0)]]);
        let e1x2 = Subspace::span(2, vec![vec![rat(2), rat(0)]]);
        let e2 = Subspace::span(2, vec![vec![rat(0), rat(1)]]);
        assert!(subspace_equal(&e1, &e1).unwrap());
        assert!(subspace_equal(&e1, &e1x2).unwrap());
        let s = subspace_sum(&e1, &e2).unwrap();
        assert!(subspace_equal(&s, &Subspace::full(2)).unwrap());
        assert!(subspace_contains(&s, &e1).unwrap());
        assert!(subspace_contains(&s, &e2).unwrap());
        assert!(!subspace_contains(&e1, &e2).unwrap());
        assert!(matches!(
            subspace_equal(&e1, &Subspace::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5/1");
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn integer_rank_matches_rational() {
        let m = QMatrix::from_i64(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[1, 0, -1, 0], &[0, 0, 1, -1]]);
        assert_eq!(integer_rank(&m), Some(3));
        assert_eq!(rref(&m).rank, 3);
        let half = QMatrix::from_rows(1, vec![vec![ratio(1, 2)]]);
        assert_eq!(integer_rank(&half), None);
        assert_eq!(half.rank(), 1);
    }
}
