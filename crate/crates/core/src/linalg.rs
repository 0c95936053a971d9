//! Dense exact linear algebra over [`FieldValue`] entries.
//!
//! Everything here is decided exactly: determinants distinguish zero from
//! nonzero with no tolerance, and system solving classifies the solution
//! set as unique, affine (particular solution plus kernel basis), or
//! inconsistent. Determinants over the rationals clear denominators and run
//! fraction-free Bareiss elimination on integers to keep intermediates
//! small; row reduction is plain Gauss-Jordan with exact division.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{Field, FieldError, FieldValue};

/// Error raised by matrix construction or an operation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinalgError {
    /// A square-only operation was applied to a rectangular matrix.
    NotSquare,
    /// Operand shapes do not line up.
    DimensionMismatch,
    /// Inversion of a matrix with determinant zero.
    Singular,
    /// An entry does not belong to the matrix's field.
    Field(FieldError),
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare => write!(f, "matrix is not square"),
            LinalgError::DimensionMismatch => write!(f, "dimension mismatch"),
            LinalgError::Singular => write!(f, "matrix is singular"),
            LinalgError::Field(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LinalgError {}

impl From<FieldError> for LinalgError {
    fn from(e: FieldError) -> Self {
        LinalgError::Field(e)
    }
}

/// Classification of the solution set of a linear problem.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolveOutcome<T> {
    /// Exactly one solution.
    Unique(T),
    /// Infinitely many solutions: a particular one (free variables set to
    /// zero) plus the canonical kernel basis.
    Affine { particular: T, kernel: Vec<T> },
    /// No solution; the ranks witness the contradiction.
    Inconsistent { rank: usize, augmented_rank: usize },
}

/// Row-major dense matrix with all entries in one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<FieldValue>,
}

/// Result of reduction to reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    /// Builds a matrix from row-major entries, checking that every entry
    /// belongs to `field`.
    pub fn new(
        field: Field,
        rows: usize,
        cols: usize,
        entries: Vec<FieldValue>,
    ) -> Result<Matrix, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch);
        }
        if entries.iter().any(|v| v.field() != field) {
            return Err(LinalgError::Field(FieldError::MixedFields));
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix entry by entry; the closure must stay in `field`.
    pub fn from_fn<F>(field: Field, rows: usize, cols: usize, mut f: F) -> Result<Matrix, LinalgError>
    where
        F: FnMut(usize, usize) -> FieldValue,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix::new(field, rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at `(r, c)`. Panics when out of range.
    pub fn entry(&self, r: usize, c: usize) -> &FieldValue {
        assert!(r < self.rows && c < self.cols, "entry index out of range");
        &self.entries[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, value: FieldValue) {
        debug_assert!(value.field() == self.field);
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[FieldValue] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch);
        }
        if self.field != rhs.field {
            return Err(LinalgError::Field(FieldError::MixedFields));
        }
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = fe(fe(a.mul(b)).add(out.entry(i, j)));
                    out.set(i, j, t);
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[FieldValue]) -> Result<Vec<FieldValue>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        check_vector_field(self.field, v)?;
        let mut out = vec![self.field.zero(); self.rows];
        for (r, acc) in out.iter_mut().enumerate() {
            for (c, x) in v.iter().enumerate() {
                let a = self.entry(r, c);
                if a.is_zero() || x.is_zero() {
                    continue;
                }
                *acc = fe(acc.add(&fe(a.mul(x))));
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form with pivot columns; the reduction is exact
    /// and the result unique, so downstream outputs are deterministic.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pivot_row) = (r..m.rows).find(|&i| !m.entry(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            let inv = fe(m.entry(r, c).inv());
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.entry(i, c).is_zero() {
                    let factor = m.entry(i, c).clone();
                    m.sub_scaled_row(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Exact determinant.
    ///
    /// Over the rationals the matrix is scaled row by row to integers and
    /// eliminated fraction-free (Bareiss); over GF(p) ordinary elimination
    /// in the field is already exact.
    pub fn det(&self) -> Result<FieldValue, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare);
        }
        if self.rows == 0 {
            return Ok(self.field.one());
        }
        if self.field.is_rational() {
            Ok(self.det_rational())
        } else {
            Ok(self.det_gf())
        }
    }

    fn det_rational(&self) -> FieldValue {
        let n = self.rows;
        let mut scaled: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut denominator = BigInt::one();
        for r in 0..n {
            let row: Vec<&BigRational> = (0..n)
                .map(|c| self.entry(r, c).as_rational().expect("rational entry"))
                .collect();
            let common = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            denominator *= &common;
            scaled.push(
                row.iter()
                    .map(|x| x.numer() * (&common / x.denom()))
                    .collect(),
            );
        }
        let det = bareiss_det(scaled);
        FieldValue::from_rational(BigRational::new(det, denominator))
    }

    fn det_gf(&self) -> FieldValue {
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for k in 0..n {
            let Some(pivot_row) = (k..n).find(|&i| !m.entry(i, k).is_zero()) else {
                return self.field.zero();
            };
            if pivot_row != k {
                m.swap_rows(k, pivot_row);
                det = det.neg();
            }
            let pivot = m.entry(k, k).clone();
            det = fe(det.mul(&pivot));
            let pivot_inv = fe(pivot.inv());
            for i in k + 1..n {
                if !m.entry(i, k).is_zero() {
                    let factor = fe(m.entry(i, k).mul(&pivot_inv));
                    m.sub_scaled_row(i, k, &factor);
                }
            }
        }
        det
    }

    /// Canonical basis of the right null space: one vector per free
    /// column, with that free variable set to one and the others to zero.
    pub fn kernel(&self) -> Vec<Vec<FieldValue>> {
        let ech = self.rref();
        kernel_from_rref(&ech.matrix, &ech.pivots, self.cols, self.field)
    }

    /// Solves `self * x = rhs`, classifying the solution set.
    ///
    /// The particular solution sets every free variable to zero and the
    /// kernel basis is the canonical one, so outputs are deterministic.
    pub fn solve(&self, rhs: &[FieldValue]) -> Result<SolveOutcome<Vec<FieldValue>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch);
        }
        check_vector_field(self.field, rhs)?;
        let mut augmented = Matrix::zero(self.field, self.rows, self.cols + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                augmented.set(r, c, self.entry(r, c).clone());
            }
            augmented.set(r, self.cols, b.clone());
        }
        let ech = augmented.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(SolveOutcome::Inconsistent {
                rank: ech.pivots.len() - 1,
                augmented_rank: ech.pivots.len(),
            });
        }
        let rank = ech.pivots.len();
        let mut particular = vec![self.field.zero(); self.cols];
        for (row, &col) in ech.pivots.iter().enumerate() {
            particular[col] = ech.matrix.entry(row, self.cols).clone();
        }
        if rank == self.cols {
            Ok(SolveOutcome::Unique(particular))
        } else {
            let kernel = kernel_from_rref(&ech.matrix, &ech.pivots, self.cols, self.field);
            Ok(SolveOutcome::Affine { particular, kernel })
        }
    }

    /// Exact inverse, or `Singular` when the determinant is zero.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare);
        }
        let n = self.rows;
        let mut augmented = Matrix::zero(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                augmented.set(r, c, self.entry(r, c).clone());
            }
            augmented.set(r, n + r, self.field.one());
        }
        let ech = augmented.rref();
        if ech.pivots.len() < n || ech.pivots.iter().any(|&c| c >= n) {
            return Err(LinalgError::Singular);
        }
        let mut out = Matrix::zero(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, ech.matrix.entry(r, n + c).clone());
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &FieldValue) {
        for c in 0..self.cols {
            let v = fe(self.entry(r, c).mul(factor));
            self.set(r, c, v);
        }
    }

    /// `row[i] -= factor * row[source]`
    fn sub_scaled_row(&mut self, i: usize, source: usize, factor: &FieldValue) {
        for c in 0..self.cols {
            let s = self.entry(source, c);
            if s.is_zero() {
                continue;
            }
            let v = fe(self.entry(i, c).sub(&fe(s.mul(factor))));
            self.set(i, c, v);
        }
    }
}

/// Unwraps a field operation that cannot fail on same-field operands;
/// matrix construction guarantees uniformity.
fn fe(r: Result<FieldValue, FieldError>) -> FieldValue {
    r.expect("matrix entries share one field")
}

fn check_vector_field(field: Field, v: &[FieldValue]) -> Result<(), LinalgError> {
    if v.iter().any(|x| x.field() != field) {
        return Err(LinalgError::Field(FieldError::MixedFields));
    }
    Ok(())
}

fn kernel_from_rref(
    reduced: &Matrix,
    pivots: &[usize],
    cols: usize,
    field: Field,
) -> Vec<Vec<FieldValue>> {
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = reduced.entry(row, free).neg();
        }
        basis.push(v);
    }
    basis
}

/// Fraction-free Bareiss elimination over the integers; every interior
/// division is exact by the Sylvester identity.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut negated = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            negated = !negated;
        }
        let pivot_row = m[k].clone();
        let pivot = pivot_row[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            let lead = row[k].clone();
            for j in k + 1..n {
                let t = &pivot * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&t % &prev).is_zero());
                row[j] = t / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}
