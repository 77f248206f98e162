//! Dense exact matrices, row reduction, canonical subspaces and
//! characteristic polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Coordinate vector over a field; its length is the ambient dimension.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c * v`, skipping zero entries.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn add_vectors(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub_vectors(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Integer vector over `field`.
pub fn int_vector(field: FieldSpec, v: &[i64]) -> Vector {
    v.iter().map(|&x| field.int(x)).collect()
}

/// A dense row-major matrix over one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, entries }
    }

    /// Builds a matrix from row-major entries, checking shape and field.
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(format!("entry over {} in a matrix over {field}", bad.field())));
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row of length {} in a matrix with {cols} columns", r.len())));
            }
            entries.extend(r.iter().cloned());
        }
        Matrix::new(field, rows.len(), cols, entries)
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Result<Self> {
        if let Some(c) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch(format!("column of length {} in a matrix with {rows} rows", c.len())));
        }
        let cols = columns.len();
        let entries = (0..rows * cols).map(|idx| columns[idx % cols][idx / cols].clone()).collect();
        Matrix::new(field, rows, cols, entries)
    }

    /// Integer matrix, mostly for tests and catalog tables.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<Vector> = rows.iter().map(|r| int_vector(field, r)).collect();
        Matrix::from_rows(field, cols, &vecs).expect("rectangular integer table")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "field mismatch in Matrix::set");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_same(&self, other: &Matrix, what: &str) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{what}: {} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other, "matrix product")?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = &mut out.entries[i * other.cols..(i + 1) * other.cols];
                axpy(row, a, other.row(k));
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other, "matrix sum")?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum of different shapes".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: add_vectors(&self.entries, &other.entries),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&self.field.int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: scale_vector(c, &self.entries),
        }
    }

    /// `self + c * I`.
    pub fn shift(&self, c: &Scalar) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("shift of a non-square matrix".into()));
        }
        self.add(&Matrix::identity(self.field, self.rows).scale(c))
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other, "stack")?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("stacking matrices with different column counts".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> Matrix {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.into_matrix()
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Solution space of `self * v = 0`.
    pub fn kernel(&self) -> Subspace {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.kernel()
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, self.columns()).expect("columns have matrix height")
    }

    /// `(kernel, image)`; `dim kernel + dim image = cols`.
    pub fn kernel_image(&self) -> (Subspace, Subspace) {
        (self.kernel(), self.image())
    }

    /// Some `v` with `self * v = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut ech = Echelon::new(self.field, self.cols + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            ech.insert(row);
        }
        let mut x = zero_vector(self.field, self.cols);
        for (pivot, row) in &ech.rows {
            if *pivot == self.cols {
                return None;
            }
            x[*pivot] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a: Vec<Vector> = self.row_vectors();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det = det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = -(&a[r][c] * &inv);
                let (top, bottom) = a.split_at_mut(r);
                axpy(&mut bottom[0][c..], &f, &top[c][c..]);
            }
        }
        Ok(det)
    }

    /// Characteristic polynomial `det(t I - self)`, coefficients in ascending
    /// degree order (index `k` holds the coefficient of `t^k`; the last entry is 1).
    ///
    /// Uses Berkowitz's division-free algorithm, so it is valid over every
    /// commutative ring and in particular in small characteristic.
    pub fn char_poly(&self) -> Result<Vec<Scalar>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let field = self.field;
        // Descending coefficient vector of the leading r x r block.
        let mut poly: Vector = vec![field.one()];
        for r in 0..n {
            // Block [[A, s], [row, a]] with A the leading r x r block.
            let a = self.get(r, r);
            let s: Vector = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vector = (0..r).map(|j| self.get(r, j).clone()).collect();
            // Toeplitz column: 1, -a, -row*s, -row*A*s, ..., -row*A^{r-1}*s
            let mut col: Vector = Vec::with_capacity(r + 2);
            col.push(field.one());
            col.push(-a);
            let mut v = s;
            for _ in 0..r {
                let dot = row.iter().zip(&v).fold(field.zero(), |acc, (x, y)| acc + x * y);
                col.push(-dot);
                v = (0..r)
                    .map(|i| (0..r).fold(field.zero(), |acc, j| acc + self.get(i, j) * &v[j]))
                    .collect();
            }
            let mut next = zero_vector(field, r + 2);
            for (i, out) in next.iter_mut().enumerate() {
                for (j, p) in poly.iter().enumerate() {
                    if i >= j {
                        *out += &(&col[i - j] * p);
                    }
                }
            }
            poly = next;
        }
        poly.reverse();
        Ok(poly)
    }
}

/// Incremental reduced row echelon form.
///
/// Rows are kept fully reduced and sorted by pivot column, so inserting a
/// vector costs one pass over the current basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    cols: usize,
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = -v[*p].clone();
                axpy(&mut v, &f, row);
            }
        }
        v
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        if self.rows.len() == self.cols {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let f = -row[pivot].clone();
                axpy(row, &f, &v);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v.to_vec()))
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn into_matrix(self) -> Matrix {
        let vecs: Vec<Vector> = self.rows.into_iter().map(|(_, r)| r).collect();
        Matrix::from_rows(self.field, self.cols, &vecs).expect("echelon rows have uniform length")
    }

    /// Null space of the accumulated rows.
    pub fn kernel(&self) -> Subspace {
        let pivots = self.pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = unit_vector(self.field, self.cols, free);
            for (p, row) in &self.rows {
                v[*p] = -row[free].clone();
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, basis).expect("kernel vectors have ambient length")
    }
}

/// A subspace of `field^ambient_dim` stored by its canonical RREF basis.
///
/// Two subspaces are equal exactly when their bases are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient_dim, self.basis)
    }
}

impl Subspace {
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut ech = Echelon::new(field, ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient_dim}",
                    v.len()
                )));
            }
            if let Some(bad) = v.iter().find(|s| s.field() != field) {
                return Err(Error::FieldMismatch(format!("vector entry over {} in a space over {field}", bad.field())));
            }
            ech.insert(v);
        }
        Ok(Subspace {
            ambient_dim,
            basis: ech.into_matrix(),
        })
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace {
            ambient_dim: m.cols(),
            basis: m.rref(),
        }
    }

    /// Accepts a matrix only if it already is a canonical basis.
    pub fn from_basis(basis: Matrix) -> Result<Self> {
        let s = Subspace::row_space(&basis);
        if s.basis != basis {
            return Err(Error::Parse("subspace basis is not in reduced row echelon form".into()));
        }
        Ok(s)
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: FieldSpec, ambient_dim: usize, indices: &[usize]) -> Self {
        Subspace::span(field, ambient_dim, indices.iter().map(|&i| unit_vector(field, ambient_dim, i)))
            .expect("indices within ambient dimension")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| self.basis.row(i).iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
            .collect()
    }

    fn echelon(&self) -> Echelon {
        Echelon {
            field: self.field(),
            cols: self.ambient_dim,
            rows: self.pivots().into_iter().zip(self.basis_vectors()).collect(),
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && self.echelon().contains(v)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        // With an RREF basis the coordinate on row i is the entry at its pivot.
        Some(self.pivots().into_iter().map(|p| v[p].clone()).collect())
    }

    /// Standard basis vectors at the non-pivot columns; they span a complement.
    pub fn complement_basis(&self) -> Vec<Vector> {
        let pivots = self.pivots();
        (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .map(|c| unit_vector(self.field(), self.ambient_dim, c))
            .collect()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of {} and {} dimensional spaces",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!("subspaces over {} and {}", self.field(), other.field())));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut ech = self.echelon();
        for v in other.basis_vectors() {
            ech.insert(v);
        }
        Ok(Subspace {
            ambient_dim: self.ambient_dim,
            basis: ech.into_matrix(),
        })
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        // (a, b) with a*S + b*T = 0 gives the intersection vectors a*S.
        let stacked = self.basis.stack(&other.basis)?;
        let left_kernel = stacked.transpose().kernel();
        let k = self.dim();
        let vectors = left_kernel.basis_vectors().into_iter().map(|coef| {
            let mut v = zero_vector(self.field(), self.ambient_dim);
            for (c, row) in coef[..k].iter().zip(self.basis_vectors()) {
                axpy(&mut v, c, &row);
            }
            v
        });
        Subspace::span(self.field(), self.ambient_dim, vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// Image of this subspace under the linear map `m` (acting on columns).
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch("map does not act on this space".into()));
        }
        Subspace::span(self.field(), m.rows(), self.basis_vectors().iter().map(|v| m.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_examples() {
        let m = Matrix::from_ints(Q, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), Matrix::from_ints(Q, &[&[1, 2]]));
        let id = Matrix::identity(Q, 3);
        assert_eq!(id.rref(), id);
        let f2 = FieldSpec::prime(2).unwrap();
        let m = Matrix::from_ints(f2, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.rref(), Matrix::from_ints(f2, &[&[1, 1]]));
    }

    #[test]
    fn kernel_image_examples() {
        let m = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        let (k, i) = m.kernel_image();
        assert_eq!(k, Subspace::span(Q, 2, [int_vector(Q, &[1, -1])]).unwrap());
        assert_eq!(i, Subspace::span(Q, 2, [int_vector(Q, &[1, 1])]).unwrap());

        let z = Matrix::zeros(Q, 2, 2);
        let (k, i) = z.kernel_image();
        assert!(k.is_full());
        assert!(i.is_zero());

        let d = Matrix::from_ints(Q, &[&[0, 0], &[0, -1]]);
        let (k, i) = d.kernel_image();
        assert_eq!(k, Subspace::coordinate(Q, 2, &[0]));
        assert_eq!(i, Subspace::coordinate(Q, 2, &[1]));
    }

    #[test]
    fn sum_and_intersection_examples() {
        let e1 = Subspace::coordinate(Q, 3, &[0]);
        let e2 = Subspace::coordinate(Q, 3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate(Q, 3, &[0, 1]));
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.intersect(&e1).unwrap(), e1);

        let a = Subspace::span(Q, 2, [int_vector(Q, &[1, 1])]).unwrap();
        let b = Subspace::span(Q, 2, [int_vector(Q, &[1, -1])]).unwrap();
        assert!(a.sum(&b).unwrap().is_full());

        let s = Subspace::coordinate(Q, 3, &[0, 1]);
        let t = Subspace::coordinate(Q, 3, &[1, 2]);
        assert_eq!(s.intersect(&t).unwrap(), Subspace::coordinate(Q, 3, &[1]));

        assert!(matches!(e1.sum(&Subspace::zero(Q, 2)), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn char_poly_examples() {
        let d = Matrix::from_ints(Q, &[&[0, 0], &[0, -1]]);
        assert_eq!(d.char_poly().unwrap(), int_vector(Q, &[0, 1, 1]));
        let z = Matrix::zeros(Q, 4, 4);
        assert_eq!(z.char_poly().unwrap(), int_vector(Q, &[0, 0, 0, 0, 1]));
        let rot = Matrix::from_ints(Q, &[&[0, 1], &[-1, 0]]);
        assert_eq!(rot.char_poly().unwrap(), int_vector(Q, &[1, 0, 1]));
        assert!(Matrix::zeros(Q, 2, 3).char_poly().is_err());
        assert_eq!(Matrix::zeros(Q, 0, 0).char_poly().unwrap(), int_vector(Q, &[1]));
    }

    #[test]
    fn solve_and_det() {
        let m = Matrix::from_ints(Q, &[&[2, 1], &[1, 3]]);
        assert_eq!(m.det().unwrap(), Q.int(5));
        let x = m.solve(&int_vector(Q, &[3, 4])).unwrap();
        assert_eq!(m.mul_vec(&x), int_vector(Q, &[3, 4]));
        let sing = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&int_vector(Q, &[1, 0])).is_none());
    }

    #[test]
    fn coordinates_use_pivots() {
        let s = Subspace::span(Q, 3, [int_vector(Q, &[1, 2, 0]), int_vector(Q, &[0, 1, 1])]).unwrap();
        let v = int_vector(Q, &[2, 5, 1]);
        let c = s.coordinates(&v).unwrap();
        let mut back = zero_vector(Q, 3);
        for (ci, row) in c.iter().zip(s.basis_vectors()) {
            axpy(&mut back, ci, &row);
        }
        assert_eq!(back, v);
        assert!(s.coordinates(&int_vector(Q, &[0, 0, 1])).is_none());
    }
}
