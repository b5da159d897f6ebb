//! Exact linear algebra over the rationals.
//!
//! Everything downstream (bracket tables, Hom spaces, derivation spaces,
//! locality certificates) reduces to the operations in this module, so all
//! arithmetic is exact `BigRational`; there is no floating point anywhere.
//! Subspaces are kept in reduced row echelon form, which makes equality of
//! row spaces a plain entry-wise comparison.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the canonical serialization: "p" or "p/q" with q > 0 after reduction.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::MalformedRational(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let n: BigInt = p.parse().map_err(|_| bad())?;
            let d: BigInt = q.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Canonical serialization: "p" when the denominator is 1, else "p/q".
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        MatrixQ {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    /// Flattens row-major into a single vector of length rows*cols.
    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols);
        MatrixQ { rows, cols, data }
    }

    pub fn transpose(&self) -> MatrixQ {
        let mut t = MatrixQ::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = MatrixQ::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rat) -> MatrixQ {
        let data = self.data.iter().map(|a| a * c).collect();
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Reduced row echelon form and rank. Pivot rule: scan columns left to
    /// right, take the first row (top to bottom in current order) with a
    /// nonzero entry, normalize the pivot to 1 and eliminate above and below.
    /// Zero rows sink to the bottom; the output shape equals the input shape.
    pub fn rref(&self) -> (MatrixQ, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let mut sel = None;
            for r in pivot_row..m.rows {
                if !m.at(r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != pivot_row {
                for j in 0..m.cols {
                    m.data.swap(sel * m.cols + j, pivot_row * m.cols + j);
                }
            }
            let inv = {
                let p = m.at(pivot_row, col).clone();
                p.recip()
            };
            for j in col..m.cols {
                let v = m.at(pivot_row, j).clone();
                if !v.is_zero() {
                    *m.at_mut(pivot_row, j) = v * &inv;
                }
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let f = m.at(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let p = m.at(pivot_row, j).clone();
                    if !p.is_zero() {
                        let cur = m.at(r, j).clone();
                        *m.at_mut(r, j) = cur - &f * p;
                    }
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }
}

fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|a| a.is_zero())
}

/// Incremental RREF accumulator. Rows are inserted one at a time and the
/// internal basis is kept in reduced row echelon form throughout, so the
/// rank is available at any point without reprocessing earlier rows. Large
/// constraint systems (derivation laws, locality constraints) are assembled
/// through this instead of materializing the full stacked matrix.
#[derive(Clone, Debug)]
pub struct RrefBuilder {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RrefBuilder {
    pub fn new(ambient: usize) -> Self {
        RrefBuilder {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Reduces `row` against the current basis without inserting it.
    pub fn reduce(&self, mut row: Vec<Rat>) -> Vec<Rat> {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..self.ambient {
                if !r[j].is_zero() {
                    let v = std::mem::replace(&mut row[j], Rat::zero());
                    row[j] = v - &f * &r[j];
                }
            }
        }
        row
    }

    /// Inserts a row into the span; returns true if it increased the rank.
    pub fn insert(&mut self, row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.ambient, "row length mismatch");
        let mut row = self.reduce(row);
        let Some(p) = row.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let inv = row[p].clone().recip();
        for a in row[p..].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        // Eliminate the new pivot column from existing rows.
        for r in self.rows.iter_mut() {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    let v = std::mem::replace(&mut r[j], Rat::zero());
                    r[j] = v - &f * &row[j];
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    pub fn contains(&self, row: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(row.to_vec()))
    }

    /// Canonical RREF basis, rows ordered by pivot column.
    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient: self.ambient,
            basis: MatrixQ::from_rows(self.ambient, self.rows),
        }
    }
}

/// A linear subspace of Q^ambient, represented by its unique RREF basis
/// (one vector per row, no zero rows). Two subspaces are equal iff their
/// bases are entry-wise equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: MatrixQ,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: MatrixQ::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: MatrixQ::identity(ambient),
        }
    }

    pub fn from_generators<I>(ambient: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let mut b = RrefBuilder::new(ambient);
        for g in gens {
            b.insert(g);
        }
        b.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.basis.rows()).map(move |i| self.basis.row(i))
    }

    /// Exact membership test: v lies in the row space iff it reduces to zero
    /// against the RREF basis (equivalently, stacking v does not raise rank).
    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace membership",
                expected: self.ambient,
                found: v.len(),
            });
        }
        let b = self.to_builder();
        Ok(b.contains(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn to_builder(&self) -> RrefBuilder {
        let mut pivots = Vec::with_capacity(self.dim());
        let mut rows = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let r = self.basis.row_vec(i);
            pivots.push(r.iter().position(|a| !a.is_zero()).expect("no zero rows"));
            rows.push(r);
        }
        RrefBuilder {
            ambient: self.ambient,
            rows,
            pivots,
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = self.to_builder();
        for i in 0..other.dim() {
            b.insert(other.basis.row_vec(i));
        }
        Ok(b.into_subspace())
    }

    /// a ∩ b, computed through annihilators: (a ∩ b)° = a° + b°.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// All functionals (coordinates in the dual basis) vanishing on the
    /// subspace; an order-reversing involution.
    pub fn annihilator(&self) -> Subspace {
        nullspace(&self.basis)
    }

    /// Pivot columns of the RREF basis, strictly increasing.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|a| !a.is_zero())
                    .expect("no zero rows")
            })
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient",
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }
}

/// Kernel of m as a subspace of Q^cols; dim = cols − rank(m).
pub fn nullspace(m: &MatrixQ) -> Subspace {
    let (r, rank) = m.rref();
    let mut pivot_of_col = vec![None; m.cols()];
    for i in 0..rank {
        let p = r.row(i).iter().position(|a| !a.is_zero()).unwrap();
        pivot_of_col[p] = Some(i);
    }
    let mut gens = Vec::new();
    for free in 0..m.cols() {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); m.cols()];
        v[free] = Rat::one();
        for (col, piv) in pivot_of_col.iter().enumerate() {
            if let Some(i) = piv {
                v[col] = -r.at(*i, free).clone();
            }
        }
        gens.push(v);
    }
    Subspace::from_generators(m.cols(), gens)
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    is_zero_vec(a)
}

/// Dot product; used for applying annihilator functionals.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// True when the rational is an integer; returns it as i64 when it fits.
pub fn as_integer(r: &Rat) -> Option<i64> {
    if !r.denom().is_one() {
        return None;
    }
    let n = r.numer();
    if n.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    i64::try_from(n.clone()).ok()
}
