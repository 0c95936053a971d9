//! Sandwich operators on an algebra and the linear equations they define.
//!
//! An operator expression is a finite sum of sandwich terms
//! `x -> (a x) b` or `x -> a (x b)`; the two groupings coincide exactly
//! when the algebra is associative. Over the base field the expression is
//! an ordinary linear map, so `expr(x) = b` reduces to an n-by-n system
//! whose solution set is classified exactly: unique when the operator
//! determinant is nonzero, affine when `b` lies in the column span,
//! inconsistent otherwise.
//!
//! For associative algebras a bijective expression can be inverted *inside
//! the same calculus*: [`OperatorExpression::inverse_tensor`] returns
//! coefficients `c^{pq}` with `x = sum c^{pq} (e_p b) e_q`, found by
//! solving an n^2-by-n^2 entrywise system against the inverted operator
//! matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, AlgebraElement};
use crate::field::FieldValue;
use crate::linalg::{Matrix, SolveOutcome};

/// Error raised by operator construction or solving.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OperatorError {
    /// Coefficients or operands from different algebras.
    MixedAlgebras,
    /// An operator expression needs at least one term.
    EmptyExpression,
    /// The operation needs a unit element and the algebra has none.
    NoUnit,
    /// Tensor-form inversion is defined for associative algebras only.
    NonassociativeUnsupported,
    /// The operator matrix has determinant zero, so no inverse exists.
    Singular,
    /// The inverse exists but is not a sum of sandwich operators.
    NotRepresentable,
    /// A tensor coefficient grid has the wrong size.
    DimensionMismatch,
    /// A scalar belongs to a different field than the algebra's.
    BadField,
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::MixedAlgebras => write!(f, "operands belong to different algebras"),
            OperatorError::EmptyExpression => write!(f, "operator expression has no terms"),
            OperatorError::NoUnit => write!(f, "algebra has no unit element"),
            OperatorError::NonassociativeUnsupported => {
                write!(f, "tensor inversion requires an associative algebra")
            }
            OperatorError::Singular => write!(f, "operator is singular"),
            OperatorError::NotRepresentable => {
                write!(f, "inverse is not a sum of sandwich operators")
            }
            OperatorError::DimensionMismatch => write!(f, "coefficient grid has the wrong size"),
            OperatorError::BadField => write!(f, "scalar belongs to a different field"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OperatorError {}

/// Parenthesization of a sandwich term; the choice only matters in a
/// nonassociative algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grouping {
    /// `(left * x) * right`
    LeftFirst,
    /// `left * (x * right)`
    RightFirst,
}

/// One sandwich term `x -> left * x * right` with an explicit grouping.
#[derive(Clone, PartialEq, Debug)]
pub struct SandwichTerm {
    left: AlgebraElement,
    right: AlgebraElement,
    grouping: Grouping,
}

impl SandwichTerm {
    pub fn new(
        left: AlgebraElement,
        right: AlgebraElement,
        grouping: Grouping,
    ) -> Result<SandwichTerm, OperatorError> {
        if !left.algebra().same_algebra(right.algebra()) {
            return Err(OperatorError::MixedAlgebras);
        }
        Ok(SandwichTerm { left, right, grouping })
    }

    pub fn left(&self) -> &AlgebraElement {
        &self.left
    }

    pub fn right(&self) -> &AlgebraElement {
        &self.right
    }

    pub fn grouping(&self) -> Grouping {
        self.grouping
    }

    fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        match self.grouping {
            Grouping::LeftFirst => self
                .left
                .mul(x)
                .and_then(|t| t.mul(&self.right))
                .expect("same algebra"),
            Grouping::RightFirst => x
                .mul(&self.right)
                .and_then(|t| self.left.mul(&t))
                .expect("same algebra"),
        }
    }

    /// Matrix of the term as a composition of regular representations:
    /// `R_right L_left` for left-first grouping, `L_left R_right` for
    /// right-first.
    fn matrix(&self) -> Matrix {
        let l = self.left.left_mul_matrix();
        let r = self.right.right_mul_matrix();
        match self.grouping {
            Grouping::LeftFirst => r.mul(&l).expect("same dimensions"),
            Grouping::RightFirst => l.mul(&r).expect("same dimensions"),
        }
    }
}

/// A sum of sandwich terms over one algebra, acting linearly on it.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorExpression {
    algebra: Algebra,
    terms: Vec<SandwichTerm>,
}

impl OperatorExpression {
    pub fn new(terms: Vec<SandwichTerm>) -> Result<OperatorExpression, OperatorError> {
        let Some(first) = terms.first() else {
            return Err(OperatorError::EmptyExpression);
        };
        let algebra = first.left.algebra().clone();
        if !terms
            .iter()
            .all(|t| t.left.algebra().same_algebra(&algebra))
        {
            return Err(OperatorError::MixedAlgebras);
        }
        Ok(OperatorExpression { algebra, terms })
    }

    /// Shorthand for the single-term expression `x -> left * x * right`.
    pub fn sandwich(
        left: AlgebraElement,
        right: AlgebraElement,
        grouping: Grouping,
    ) -> Result<OperatorExpression, OperatorError> {
        OperatorExpression::new(vec![SandwichTerm::new(left, right, grouping)?])
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn terms(&self) -> &[SandwichTerm] {
        &self.terms
    }

    /// Evaluates the expression on `x` by direct element multiplication.
    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement, OperatorError> {
        if !x.algebra().same_algebra(&self.algebra) {
            return Err(OperatorError::MixedAlgebras);
        }
        let mut acc = self.algebra.zero();
        for term in &self.terms {
            acc = acc.add(&term.apply(x)).expect("same algebra");
        }
        Ok(acc)
    }

    /// The n-by-n matrix M with `coords(expr(x)) = M coords(x)`, built by
    /// contracting structure constants through the regular
    /// representations (not by evaluating the expression on the basis).
    pub fn matrix(&self) -> Matrix {
        let mut acc = Matrix::zero(self.algebra.field(), self.algebra.dim(), self.algebra.dim());
        for term in &self.terms {
            acc = acc.add(&term.matrix()).expect("same dimensions");
        }
        acc
    }

    /// Solves `expr(x) = b` and classifies the solution set.
    pub fn solve(&self, b: &AlgebraElement) -> Result<SolveOutcome<AlgebraElement>, OperatorError> {
        if !b.algebra().same_algebra(&self.algebra) {
            return Err(OperatorError::MixedAlgebras);
        }
        let outcome = self
            .matrix()
            .solve(b.coords())
            .expect("consistent dimensions");
        Ok(self.wrap_outcome(outcome))
    }

    fn wrap_outcome(&self, outcome: SolveOutcome<Vec<FieldValue>>) -> SolveOutcome<AlgebraElement> {
        let wrap = |coords: Vec<FieldValue>| {
            self.algebra
                .element(coords)
                .expect("solver output has the right shape")
        };
        match outcome {
            SolveOutcome::Unique(x) => SolveOutcome::Unique(wrap(x)),
            SolveOutcome::Affine { particular, kernel } => SolveOutcome::Affine {
                particular: wrap(particular),
                kernel: kernel.into_iter().map(wrap).collect(),
            },
            SolveOutcome::Inconsistent { rank, augmented_rank } => {
                SolveOutcome::Inconsistent { rank, augmented_rank }
            }
        }
    }

    /// Inverts a bijective expression inside the sandwich calculus.
    ///
    /// Requires an associative algebra and a nonzero operator determinant.
    /// The returned coefficients satisfy
    /// `sum_{p,q} c^{pq} (e_p expr(x)) e_q = x` for all x; free
    /// coefficients are canonicalized to zero so the output is
    /// deterministic even when the sandwich representation is not unique.
    pub fn inverse_tensor(&self) -> Result<TensorOperator, OperatorError> {
        if !self.algebra.is_associative() {
            return Err(OperatorError::NonassociativeUnsupported);
        }
        let n = self.algebra.dim();
        let inverse = self
            .matrix()
            .inverse()
            .map_err(|_| OperatorError::Singular)?;
        // Entrywise system: sum_{p,q} c^{pq} S_pq = inverse, where S_pq is
        // the matrix of x -> (e_p x) e_q. Unknowns indexed p*n+q, equations
        // indexed k*n+j over matrix entries (k, j).
        let field = self.algebra.field();
        let mut system = Matrix::zero(field, n * n, n * n);
        for p in 0..n {
            let l = self.algebra.basis_element(p).left_mul_matrix();
            for q in 0..n {
                let r = self.algebra.basis_element(q).right_mul_matrix();
                let s = r.mul(&l).expect("same dimensions");
                for k in 0..n {
                    for j in 0..n {
                        system.set(k * n + j, p * n + q, s.entry(k, j).clone());
                    }
                }
            }
        }
        let mut rhs = Vec::with_capacity(n * n);
        for k in 0..n {
            for j in 0..n {
                rhs.push(inverse.entry(k, j).clone());
            }
        }
        let coefficients = match system.solve(&rhs).expect("consistent dimensions") {
            SolveOutcome::Unique(c) => c,
            SolveOutcome::Affine { particular, .. } => particular,
            SolveOutcome::Inconsistent { .. } => return Err(OperatorError::NotRepresentable),
        };
        TensorOperator::new(&self.algebra, coefficients)
    }
}

/// A linear map in standard sandwich form: coefficients `c^{pq}` encoding
/// `b -> sum_{p,q} c^{pq} (e_p b) e_q` (left-first grouping fixed by
/// convention).
#[derive(Clone, PartialEq, Debug)]
pub struct TensorOperator {
    algebra: Algebra,
    /// Row-major n-by-n grid; `coefficients[p*n + q]` is `c^{pq}`.
    coefficients: Vec<FieldValue>,
}

impl TensorOperator {
    pub fn new(
        algebra: &Algebra,
        coefficients: Vec<FieldValue>,
    ) -> Result<TensorOperator, OperatorError> {
        let n = algebra.dim();
        if coefficients.len() != n * n {
            return Err(OperatorError::DimensionMismatch);
        }
        if coefficients.iter().any(|c| c.field() != algebra.field()) {
            return Err(OperatorError::BadField);
        }
        Ok(TensorOperator {
            algebra: algebra.clone(),
            coefficients,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coefficient(&self, p: usize, q: usize) -> &FieldValue {
        &self.coefficients[p * self.algebra.dim() + q]
    }

    /// Nonzero coefficients in row-major order.
    pub fn nonzero_coefficients(&self) -> impl Iterator<Item = (usize, usize, &FieldValue)> {
        let n = self.algebra.dim();
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / n, idx % n, c))
    }

    /// Evaluates `sum_{p,q} c^{pq} (e_p b) e_q` by element arithmetic.
    pub fn apply(&self, b: &AlgebraElement) -> Result<AlgebraElement, OperatorError> {
        if !b.algebra().same_algebra(&self.algebra) {
            return Err(OperatorError::MixedAlgebras);
        }
        let n = self.algebra.dim();
        let mut acc = self.algebra.zero();
        for p in 0..n {
            if (0..n).all(|q| self.coefficient(p, q).is_zero()) {
                continue;
            }
            let left = self.algebra.basis_element(p).mul(b).expect("same algebra");
            for q in 0..n {
                let c = self.coefficient(p, q);
                if c.is_zero() {
                    continue;
                }
                let term = left
                    .mul(&self.algebra.basis_element(q))
                    .and_then(|t| t.scale(c))
                    .expect("same algebra");
                acc = acc.add(&term).expect("same algebra");
            }
        }
        Ok(acc)
    }

    /// Matrix of the operator via the contraction
    /// `sum_{p,q} c^{pq} R_{e_q} L_{e_p}`.
    pub fn matrix(&self) -> Matrix {
        let n = self.algebra.dim();
        let field = self.algebra.field();
        let mut acc = Matrix::zero(field, n, n);
        for (p, q, c) in self.nonzero_coefficients() {
            let l = self.algebra.basis_element(p).left_mul_matrix();
            let r = self.algebra.basis_element(q).right_mul_matrix();
            let s = r.mul(&l).expect("same dimensions");
            let scaled = Matrix::from_fn(field, n, n, |i, j| {
                s.entry(i, j).mul(c).expect("same field")
            })
            .expect("same field");
            acc = acc.add(&scaled).expect("same dimensions");
        }
        acc
    }
}

/// An element has a right inverse exactly when its left-multiplication
/// matrix is nonsingular.
pub fn is_right_invertible(a: &AlgebraElement) -> bool {
    !a.left_mul_matrix()
        .det()
        .expect("square matrix")
        .is_zero()
}

/// Solves `a * x = unit`. `Ok(None)` when no (unique) right inverse
/// exists; `NoUnit` when the algebra has no unit element.
pub fn right_inverse(a: &AlgebraElement) -> Result<Option<AlgebraElement>, OperatorError> {
    let unit = a.algebra().unit().ok_or(OperatorError::NoUnit)?;
    match a
        .left_mul_matrix()
        .solve(unit.coords())
        .expect("consistent dimensions")
    {
        SolveOutcome::Unique(x) => Ok(Some(
            a.algebra().element(x).expect("solver output has the right shape"),
        )),
        _ => Ok(None),
    }
}

/// Solves `a x - x a = unit` as a plain two-term sandwich equation.
pub fn commutator_unit_solve(
    a: &AlgebraElement,
) -> Result<SolveOutcome<AlgebraElement>, OperatorError> {
    let unit = a.algebra().unit().ok_or(OperatorError::NoUnit)?;
    let expr = OperatorExpression::new(vec![
        SandwichTerm::new(a.clone(), unit.clone(), Grouping::LeftFirst)?,
        SandwichTerm::new(unit.neg(), a.clone(), Grouping::LeftFirst)?,
    ])?;
    expr.solve(&unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{builtin, matrix_algebra};
    use crate::field::Field;
    use alloc::vec::Vec;

    fn q() -> Field {
        Field::rational()
    }

    fn quat() -> Algebra {
        builtin("quaternions", q()).unwrap()
    }

    fn sandwich(
        alg: &Algebra,
        left: &[i64],
        right: &[i64],
        grouping: Grouping,
    ) -> OperatorExpression {
        OperatorExpression::sandwich(
            alg.element_from_integers(left).unwrap(),
            alg.element_from_integers(right).unwrap(),
            grouping,
        )
        .unwrap()
    }

    #[test]
    fn identity_sandwich_matrix() {
        let h = quat();
        let u = h.unit().unwrap();
        let expr =
            OperatorExpression::sandwich(u.clone(), u.clone(), Grouping::LeftFirst).unwrap();
        assert_eq!(expr.matrix(), Matrix::identity(q(), 4));
    }

    #[test]
    fn left_sandwich_in_matrix_algebra_is_block_form() {
        // x -> a x (right coefficient = unit) has the block matrix a^p_s I_2.
        let m2 = matrix_algebra(2, q()).unwrap();
        let a = m2.element_from_integers(&[1, 2, 3, 4]).unwrap();
        let expr = OperatorExpression::sandwich(
            a.clone(),
            m2.unit().unwrap(),
            Grouping::LeftFirst,
        )
        .unwrap();
        assert_eq!(expr.matrix(), a.left_mul_matrix());
        let expected = Matrix::from_fn(q(), 4, 4, |row, col| {
            let (p, t) = (row / 2, row % 2);
            let (s, t2) = (col / 2, col % 2);
            if t == t2 {
                q().from_integer([1, 2, 3, 4][p * 2 + s])
            } else {
                q().zero()
            }
        })
        .unwrap();
        assert_eq!(expr.matrix(), expected);
    }

    #[test]
    fn octonion_groupings_differ_and_match_direct_products() {
        let o = builtin("octonions", q()).unwrap();
        let left = sandwich(&o, &[0, 1, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 0, 0],
            Grouping::LeftFirst);
        let right = sandwich(&o, &[0, 1, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 0, 0],
            Grouping::RightFirst);
        assert_ne!(left.matrix(), right.matrix());
        // each column equals the term evaluated on the basis vector by
        // explicit products
        for expr in [&left, &right] {
            let m = expr.matrix();
            for j in 0..8 {
                let direct = expr.apply(&o.basis_element(j)).unwrap();
                for k in 0..8 {
                    assert_eq!(m.entry(k, j), &direct.coords()[k]);
                }
            }
        }
    }

    #[test]
    fn groupings_coincide_when_associative() {
        let m2 = matrix_algebra(2, q()).unwrap();
        let l = sandwich(&m2, &[1, 2, 0, 1], &[3, 0, 1, 1], Grouping::LeftFirst);
        let r = sandwich(&m2, &[1, 2, 0, 1], &[3, 0, 1, 1], Grouping::RightFirst);
        assert_eq!(l.matrix(), r.matrix());
    }

    #[test]
    fn commutator_with_quaternion_is_inconsistent() {
        let h = quat();
        let a = h.element_from_integers(&[1, 2, 0, 0]).unwrap(); // 1 + 2i
        let outcome = commutator_unit_solve(&a).unwrap();
        assert!(matches!(outcome, SolveOutcome::Inconsistent { .. }));
    }

    #[test]
    fn sandwich_solve_unique() {
        // i * x * i = 1 has the unique solution x = -1.
        let h = quat();
        let expr = sandwich(&h, &[0, 1, 0, 0], &[0, 1, 0, 0], Grouping::LeftFirst);
        let b = h.element_from_integers(&[1, 0, 0, 0]).unwrap();
        let outcome = expr.solve(&b).unwrap();
        let expected = h.element_from_integers(&[-1, 0, 0, 0]).unwrap();
        assert_eq!(outcome, SolveOutcome::Unique(expected.clone()));
        // substitute back through direct multiplication
        assert_eq!(expr.apply(&expected).unwrap(), b);
    }

    #[test]
    fn commutator_in_commutative_algebra_is_zero_operator() {
        let c = builtin("complex", q()).unwrap();
        let a = c.element_from_integers(&[3, 5]).unwrap();
        let u = c.unit().unwrap();
        let expr = OperatorExpression::new(vec![
            SandwichTerm::new(a.clone(), u.clone(), Grouping::LeftFirst).unwrap(),
            SandwichTerm::new(u.neg(), a.clone(), Grouping::LeftFirst).unwrap(),
        ])
        .unwrap();
        let outcome = expr.solve(&c.zero()).unwrap();
        let SolveOutcome::Affine { particular, kernel } = outcome else {
            panic!("expected affine outcome");
        };
        assert!(particular.is_zero());
        assert_eq!(kernel.len(), 2);
        assert_eq!(kernel[0], c.basis_element(0));
        assert_eq!(kernel[1], c.basis_element(1));
    }

    #[test]
    fn inverse_tensor_of_identity_sandwich() {
        let h = quat();
        let u = h.unit().unwrap();
        let expr = OperatorExpression::sandwich(u.clone(), u, Grouping::LeftFirst).unwrap();
        let t = expr.inverse_tensor().unwrap();
        for p in 0..4 {
            for q_idx in 0..4 {
                if (p, q_idx) == (0, 0) {
                    assert!(t.coefficient(p, q_idx).is_one());
                } else {
                    assert!(t.coefficient(p, q_idx).is_zero());
                }
            }
        }
    }

    #[test]
    fn inverse_tensor_of_left_multiplication_by_i() {
        // Inverting x -> i x gives multiplication by -i: the single
        // coefficient c^{10} = -1.
        let h = quat();
        let expr = sandwich(&h, &[0, 1, 0, 0], &[1, 0, 0, 0], Grouping::LeftFirst);
        let t = expr.inverse_tensor().unwrap();
        for p in 0..4 {
            for q_idx in 0..4 {
                let c = t.coefficient(p, q_idx);
                if (p, q_idx) == (1, 0) {
                    assert_eq!(c, &q().from_integer(-1));
                } else {
                    assert!(c.is_zero());
                }
            }
        }
        // round trip on every basis vector: t(expr(e_m)) = e_m
        for m in 0..4 {
            let e = h.basis_element(m);
            assert_eq!(t.apply(&expr.apply(&e).unwrap()).unwrap(), e);
        }
        // and the matrices compose to the identity (L_{-i} L_i = I)
        assert_eq!(
            t.matrix().mul(&expr.matrix()).unwrap(),
            Matrix::identity(q(), 4)
        );
    }

    #[test]
    fn inverse_tensor_applied_to_basis_product() {
        // For t inverting x -> i x: t(k) = -i * k = j.
        let h = quat();
        let expr = sandwich(&h, &[0, 1, 0, 0], &[1, 0, 0, 0], Grouping::LeftFirst);
        let t = expr.inverse_tensor().unwrap();
        let k = h.basis_element(3);
        let minus_i = h.element_from_integers(&[0, -1, 0, 0]).unwrap();
        assert_eq!(t.apply(&k).unwrap(), minus_i.mul(&k).unwrap());
        assert_eq!(t.apply(&k).unwrap(), h.basis_element(2));
    }

    #[test]
    fn inverse_tensor_singular_operator() {
        // x -> e^0_0 x e^0_0 keeps only one matrix entry: singular.
        let m2 = matrix_algebra(2, q()).unwrap();
        let expr = sandwich(&m2, &[1, 0, 0, 0], &[1, 0, 0, 0], Grouping::LeftFirst);
        assert_eq!(expr.inverse_tensor(), Err(OperatorError::Singular));
    }

    #[test]
    fn inverse_tensor_rejects_nonassociative() {
        let o = builtin("octonions", q()).unwrap();
        let u = o.unit().unwrap();
        let expr = OperatorExpression::sandwich(u.clone(), u, Grouping::LeftFirst).unwrap();
        assert_eq!(
            expr.inverse_tensor(),
            Err(OperatorError::NonassociativeUnsupported)
        );
    }

    #[test]
    fn tensor_apply_identity_and_zero() {
        let h = quat();
        let n = h.dim();
        let mut id_coeffs = vec![q().zero(); n * n];
        id_coeffs[0] = q().one(); // c^{00}: b -> (1 b) 1
        let id = TensorOperator::new(&h, id_coeffs).unwrap();
        let zero = TensorOperator::new(&h, vec![q().zero(); n * n]).unwrap();
        let b = h.element_from_integers(&[2, -1, 7, 3]).unwrap();
        assert_eq!(id.apply(&b).unwrap(), b);
        assert!(zero.apply(&b).unwrap().is_zero());
    }

    #[test]
    fn tensor_apply_agrees_with_contracted_matrix() {
        let h = quat();
        let coeffs: Vec<FieldValue> =
            (0..16).map(|n| q().from_integer((n as i64 % 5) - 2)).collect();
        let t = TensorOperator::new(&h, coeffs).unwrap();
        let m = t.matrix();
        let b = h.element_from_integers(&[1, -2, 3, 4]).unwrap();
        assert_eq!(
            m.apply(b.coords()).unwrap(),
            t.apply(&b).unwrap().coords().to_vec()
        );
    }

    #[test]
    fn right_invertibility_in_matrix_algebra() {
        let m2 = matrix_algebra(2, q()).unwrap();
        // e^0_0 is a singular matrix: no right inverse
        let a = m2.basis_element(0);
        assert!(!is_right_invertible(&a));
        assert_eq!(right_inverse(&a).unwrap(), None);
    }

    #[test]
    fn right_inverse_of_quaternion() {
        let h = quat();
        let a = h.element_from_integers(&[1, 1, 0, 0]).unwrap(); // 1 + i
        assert!(is_right_invertible(&a));
        let x = right_inverse(&a).unwrap().unwrap();
        let expected = h
            .element(vec![
                q().parse("1/2").unwrap(),
                q().parse("-1/2").unwrap(),
                q().zero(),
                q().zero(),
            ])
            .unwrap();
        assert_eq!(x, expected);
        assert_eq!(a.mul(&x).unwrap(), h.unit().unwrap());
    }

    #[test]
    fn zero_element_not_right_invertible() {
        let h = quat();
        assert!(!is_right_invertible(&h.zero()));
        assert_eq!(right_inverse(&h.zero()).unwrap(), None);
    }

    #[test]
    fn right_inverse_needs_unit() {
        // dim-1 zero-product algebra has no unit
        let a = Algebra::new(q(), 1, vec![], None).unwrap();
        let x = a.element_from_integers(&[1]).unwrap();
        assert_eq!(right_inverse(&x), Err(OperatorError::NoUnit));
        assert_eq!(commutator_unit_solve(&x), Err(OperatorError::NoUnit));
    }

    #[test]
    fn commutator_solvable_in_characteristic_two() {
        // In 2x2 matrices over GF(2) the equation a x - x a = 1 has
        // solutions for some a; cross-check the solver against exhaustive
        // search over all 16 elements.
        let gf2 = Field::gf(2).unwrap();
        let m2 = matrix_algebra(2, gf2).unwrap();
        let unit = m2.unit().unwrap();
        let a = m2.basis_element(1); // e^0_1, nilpotent
        let all: Vec<AlgebraElement> = (0..16)
            .map(|bits: i64| {
                m2.element_from_integers(&[bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1])
                    .unwrap()
            })
            .collect();
        let brute: Vec<&AlgebraElement> = all
            .iter()
            .filter(|x| {
                a.mul(x).unwrap().sub(&x.mul(&a).unwrap()).unwrap() == unit
            })
            .collect();
        assert!(!brute.is_empty());
        let outcome = commutator_unit_solve(&a).unwrap();
        match outcome {
            SolveOutcome::Unique(x) => {
                assert_eq!(brute.len(), 1);
                assert_eq!(&x, brute[0]);
            }
            SolveOutcome::Affine { particular, kernel } => {
                assert_eq!(brute.len(), 1 << kernel.len());
                assert!(brute.contains(&&particular));
            }
            SolveOutcome::Inconsistent { .. } => panic!("solver disagrees with brute force"),
        }
    }

    #[test]
    fn degenerate_zero_coefficient_term_allowed() {
        let h = quat();
        let zero = h.zero();
        let u = h.unit().unwrap();
        let expr = OperatorExpression::new(vec![
            SandwichTerm::new(zero, u.clone(), Grouping::LeftFirst).unwrap(),
            SandwichTerm::new(u.clone(), u, Grouping::LeftFirst).unwrap(),
        ])
        .unwrap();
        assert_eq!(expr.matrix(), Matrix::identity(q(), 4));
    }

    #[test]
    fn empty_expression_rejected() {
        assert_eq!(
            OperatorExpression::new(Vec::new()).unwrap_err(),
            OperatorError::EmptyExpression
        );
    }
}
