//! Algebras presented by structure constants, and their elements.
//!
//! An algebra of dimension n over a field F is a bilinear product on F^n,
//! fixed by the constants `B^k_ij` in `e_i * e_j = sum_k B^k_ij e_k`. No
//! constraint beyond well-formedness is imposed on the constants: the
//! product may be noncommutative and nonassociative. Structural properties
//! (associativity, commutativity, the unit element) are detected from the
//! constants on demand and cached.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBool;
use once_cell::race::OnceBox;

use crate::field::{Field, FieldValue};
use crate::linalg::{Matrix, SolveOutcome};

/// Error raised by algebra construction or element arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlgebraError {
    /// Dimension zero is not a valid algebra.
    InvalidDimension,
    /// A structure-constant or basis index is outside `[0, dim)`.
    IndexOutOfRange { index: usize, dim: usize },
    /// The same `(i, j, k)` triple was given twice.
    DuplicateTriple { i: usize, j: usize, k: usize },
    /// A scalar does not belong to the algebra's field.
    BadField,
    /// Basis names are missing, repeated, or not identifiers.
    BadBasisNames(String),
    /// Elements of two different algebras were combined.
    MixedAlgebras,
    /// A coordinate vector has the wrong length.
    DimensionMismatch { expected: usize, got: usize },
    /// The builtin catalog has no algebra of this name.
    UnknownBuiltin(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::InvalidDimension => write!(f, "algebra dimension must be at least 1"),
            AlgebraError::IndexOutOfRange { index, dim } => {
                write!(f, "index {index} out of range for dimension {dim}")
            }
            AlgebraError::DuplicateTriple { i, j, k } => {
                write!(f, "duplicate structure constant for ({i}, {j}, {k})")
            }
            AlgebraError::BadField => write!(f, "scalar belongs to a different field"),
            AlgebraError::BadBasisNames(msg) => write!(f, "bad basis names: {msg}"),
            AlgebraError::MixedAlgebras => write!(f, "elements belong to different algebras"),
            AlgebraError::DimensionMismatch { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            AlgebraError::UnknownBuiltin(name) => write!(f, "unknown builtin algebra `{name}`"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AlgebraError {}

struct AlgebraInner {
    dim: usize,
    field: Field,
    basis_names: Vec<String>,
    /// `(i, j, k) -> B^k_ij`, nonzero entries only.
    constants: BTreeMap<(usize, usize, usize), FieldValue>,
    associative: OnceBool,
    commutative: OnceBool,
    /// Coordinates of the two-sided unit, if any. Stored as bare
    /// coordinates rather than an element to avoid an Arc cycle.
    unit_coords: OnceBox<Option<Vec<FieldValue>>>,
}

/// A finite-dimensional algebra presented by structure constants.
///
/// Cheap to clone (a shared handle). Immutable after construction except
/// for the lazily computed property caches, which are idempotent
/// compute-then-publish cells, so concurrent use is safe.
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<AlgebraInner>,
}

impl Algebra {
    /// Validates and builds an algebra from structure-constant triples.
    ///
    /// Zero-valued constants are dropped; repeating a triple is an error
    /// even if one of the copies is zero. When `basis_names` is `None`
    /// the default names `e0..e{n-1}` are used.
    pub fn new(
        field: Field,
        dim: usize,
        constants: impl IntoIterator<Item = ((usize, usize, usize), FieldValue)>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Algebra, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::InvalidDimension);
        }
        let names = match basis_names {
            Some(names) => {
                if names.len() != dim {
                    return Err(AlgebraError::BadBasisNames(format!(
                        "expected {dim} names, got {}",
                        names.len()
                    )));
                }
                for name in &names {
                    if !is_identifier(name) {
                        return Err(AlgebraError::BadBasisNames(format!(
                            "`{name}` is not an identifier"
                        )));
                    }
                }
                for (a, name) in names.iter().enumerate() {
                    if names[..a].contains(name) {
                        return Err(AlgebraError::BadBasisNames(format!("`{name}` repeats")));
                    }
                }
                names
            }
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        let mut map = BTreeMap::new();
        for ((i, j, k), value) in constants {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index, dim });
                }
            }
            if value.field() != field {
                return Err(AlgebraError::BadField);
            }
            let is_zero = value.is_zero();
            if map.insert((i, j, k), value).is_some() {
                return Err(AlgebraError::DuplicateTriple { i, j, k });
            }
            if is_zero {
                map.remove(&(i, j, k));
            }
        }
        Ok(Algebra {
            inner: Arc::new(AlgebraInner {
                dim,
                field,
                basis_names: names,
                constants: map,
                associative: OnceBool::new(),
                commutative: OnceBool::new(),
                unit_coords: OnceBox::new(),
            }),
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn basis_names(&self) -> &[String] {
        &self.inner.basis_names
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.inner.basis_names[i]
    }

    /// The stored (nonzero) structure constant `B^k_ij`, if any.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Option<&FieldValue> {
        self.inner.constants.get(&(i, j, k))
    }

    /// Iterates the nonzero structure constants in index order.
    pub fn constants(&self) -> impl Iterator<Item = (&(usize, usize, usize), &FieldValue)> {
        self.inner.constants.iter()
    }

    /// Two handles denote the same algebra when they share storage or have
    /// identical field, dimension, and structure constants.
    pub fn same_algebra(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.dim == other.inner.dim
                && self.inner.constants == other.inner.constants)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: vec![self.field().zero(); self.dim()],
        }
    }

    /// The basis element `e_i`. Panics when `i >= dim`.
    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        assert!(i < self.dim(), "basis index out of range");
        let mut coords = vec![self.field().zero(); self.dim()];
        coords[i] = self.field().one();
        AlgebraElement { algebra: self.clone(), coords }
    }

    /// Wraps a coordinate vector as an element of this algebra.
    pub fn element(&self, coords: Vec<FieldValue>) -> Result<AlgebraElement, AlgebraError> {
        if coords.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        if coords.iter().any(|c| c.field() != self.field()) {
            return Err(AlgebraError::BadField);
        }
        Ok(AlgebraElement { algebra: self.clone(), coords })
    }

    /// Convenience: element with integer coordinates.
    pub fn element_from_integers(&self, coords: &[i64]) -> Result<AlgebraElement, AlgebraError> {
        self.element(coords.iter().map(|&n| self.field().from_integer(n)).collect())
    }

    /// True iff `(e_i e_j) e_k = e_i (e_j e_k)` for all basis triples;
    /// trilinearity makes the basis check sufficient. Cached.
    pub fn is_associative(&self) -> bool {
        self.inner.associative.get_or_init(|| {
            let n = self.dim();
            for i in 0..n {
                let ei = self.basis_element(i);
                for j in 0..n {
                    let ej = self.basis_element(j);
                    let ij = ei.mul(&ej).expect("same algebra");
                    for k in 0..n {
                        let ek = self.basis_element(k);
                        let left = ij.mul(&ek).expect("same algebra");
                        let right = ei
                            .mul(&ej.mul(&ek).expect("same algebra"))
                            .expect("same algebra");
                        if left != right {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }

    /// True iff `e_i e_j = e_j e_i` for all basis pairs. Cached.
    pub fn is_commutative(&self) -> bool {
        self.inner.commutative.get_or_init(|| {
            let n = self.dim();
            for i in 0..n {
                for j in i + 1..n {
                    let ei = self.basis_element(i);
                    let ej = self.basis_element(j);
                    if ei.mul(&ej).expect("same algebra") != ej.mul(&ei).expect("same algebra") {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// The two-sided unit, found by solving `u e_j = e_j` and
    /// `e_j u = e_j` for the coordinates of `u`. Cached; `None` when the
    /// stacked system is inconsistent.
    pub fn unit(&self) -> Option<AlgebraElement> {
        let coords = self
            .inner
            .unit_coords
            .get_or_init(|| Box::new(self.compute_unit_coords()));
        coords.as_ref().map(|c| AlgebraElement {
            algebra: self.clone(),
            coords: c.clone(),
        })
    }

    fn compute_unit_coords(&self) -> Option<Vec<FieldValue>> {
        let n = self.dim();
        let field = self.field();
        // 2n^2 stacked constraints in the n unknown coordinates of u:
        // rows j*n+k demand (u e_j)^k = delta^k_j, rows n^2+j*n+k demand
        // (e_j u)^k = delta^k_j.
        let mut m = Matrix::zero(field, 2 * n * n, n);
        for (&(i, j, k), value) in self.constants() {
            // (u e_j)^k gains B^k_ij u^i
            let row = j * n + k;
            let updated = m.entry(row, i).add(value).expect("same field");
            m.set(row, i, updated);
            // (e_i u)^k gains B^k_ij u^j
            let row = n * n + i * n + k;
            let updated = m.entry(row, j).add(value).expect("same field");
            m.set(row, j, updated);
        }
        let mut rhs = vec![field.zero(); 2 * n * n];
        for j in 0..n {
            rhs[j * n + j] = field.one();
            rhs[n * n + j * n + j] = field.one();
        }
        match m.solve(&rhs).expect("consistent dimensions") {
            SolveOutcome::Unique(u) => Some(u),
            // Any solution is a two-sided unit, and two-sided units
            // coincide, so an affine outcome cannot actually offer a
            // second distinct solution.
            SolveOutcome::Affine { particular, .. } => Some(particular),
            SolveOutcome::Inconsistent { .. } => None,
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra {{ dim: {}, field: {}, constants: {} }}",
            self.dim(),
            self.field(),
            self.inner.constants.len()
        )
    }
}

/// An element of an [`Algebra`]: a coordinate vector tied to its algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement {
    algebra: Algebra,
    coords: Vec<FieldValue>,
}

impl AlgebraElement {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[FieldValue] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &FieldValue {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FieldValue::is_zero)
    }

    fn check_same(&self, rhs: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.algebra.same_algebra(&rhs.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::MixedAlgebras)
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_same(rhs)?;
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a.add(b).expect("same field"))
            .collect();
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(FieldValue::neg).collect(),
        }
    }

    /// Scalar action of the base field.
    pub fn scale(&self, scalar: &FieldValue) -> Result<AlgebraElement, AlgebraError> {
        if scalar.field() != self.algebra.field() {
            return Err(AlgebraError::BadField);
        }
        let coords = self
            .coords
            .iter()
            .map(|c| c.mul(scalar).expect("same field"))
            .collect();
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    /// The algebra product: `(ab)^k = B^k_ij a^i b^j`.
    pub fn mul(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_same(rhs)?;
        let mut coords = vec![self.algebra.field().zero(); self.algebra.dim()];
        for (&(i, j, k), value) in self.algebra.constants() {
            let a = &self.coords[i];
            if a.is_zero() {
                continue;
            }
            let b = &rhs.coords[j];
            if b.is_zero() {
                continue;
            }
            let term = value.mul(a).and_then(|t| t.mul(b)).expect("same field");
            coords[k] = coords[k].add(&term).expect("same field");
        }
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    /// Matrix of left multiplication by this element:
    /// `(L_a)^k_j = B^k_ij a^i`, so `coords(a x) = L_a coords(x)`.
    pub fn left_mul_matrix(&self) -> Matrix {
        let n = self.algebra.dim();
        let mut m = Matrix::zero(self.algebra.field(), n, n);
        for (&(i, j, k), value) in self.algebra.constants() {
            let a = &self.coords[i];
            if a.is_zero() {
                continue;
            }
            let updated = m
                .entry(k, j)
                .add(&value.mul(a).expect("same field"))
                .expect("same field");
            m.set(k, j, updated);
        }
        m
    }

    /// Matrix of right multiplication: `(R_a)^k_i = B^k_ij a^j`, so
    /// `coords(x a) = R_a coords(x)`.
    pub fn right_mul_matrix(&self) -> Matrix {
        let n = self.algebra.dim();
        let mut m = Matrix::zero(self.algebra.field(), n, n);
        for (&(i, j, k), value) in self.algebra.constants() {
            let a = &self.coords[j];
            if a.is_zero() {
                continue;
            }
            let updated = m
                .entry(k, i)
                .add(&value.mul(a).expect("same field"))
                .expect("same field");
            m.set(k, i, updated);
        }
        m
    }
}

/// Canonical form: nonzero terms as `coeff*name` (bare `name` for
/// coefficient one) joined by ` + `; the zero element prints as `0`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", self.algebra.basis_name(i))?;
            } else {
                write!(f, "{}*{}", c, self.algebra.basis_name(i))?;
            }
        }
        Ok(())
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
