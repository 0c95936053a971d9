//! Exact solver for linear sandwich equations in finite-dimensional
//! algebras.
//!
//! An algebra is given by its structure constants over an exact scalar
//! field (the rationals or GF(p)). Linear equations of the form
//! `sum_s a_{s0} x a_{s1} = b` -- where the unknown is multiplied on both
//! sides, with an explicit grouping when the product is nonassociative --
//! reduce to ordinary linear systems over the field. Because all
//! arithmetic is exact, the solution set is classified reliably as
//! unique, affine, or empty: the determinant tests behind these
//! classifications cannot be decided in floating point.
//!
//! Modules:
//!
//! - [`field`]: arbitrary-precision rationals and GF(p) scalars.
//! - [`linalg`]: dense exact linear algebra (RREF, Bareiss determinants,
//!   kernels, system classification).
//! - [`algebra`]: structure-constant algebras, elements, regular
//!   representations, property detection.
//! - [`builtins`]: catalog of classical algebras (complex, dual,
//!   quaternions, octonions, matrix algebras).
//! - [`operator`]: sandwich operator expressions, equation solving,
//!   tensor-form inversion, element invertibility.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature for embedded use.
//!
//! ```
//! use alg_core::{builtin, Field, Grouping, OperatorExpression, SolveOutcome};
//!
//! // solve i*x*i = 1 in the quaternions
//! let h = builtin("quaternions", Field::rational()).unwrap();
//! let i = h.basis_element(1);
//! let expr = OperatorExpression::sandwich(i.clone(), i, Grouping::LeftFirst).unwrap();
//! let b = h.unit().unwrap();
//! let minus_one = h.element_from_integers(&[-1, 0, 0, 0]).unwrap();
//! match expr.solve(&b).unwrap() {
//!     SolveOutcome::Unique(x) => assert_eq!(x, minus_one),
//!     _ => unreachable!(),
//! }
//!
//! // and invert the operator as a sandwich sum again
//! let tensor = expr.inverse_tensor().unwrap();
//! assert_eq!(tensor.apply(&b).unwrap(), minus_one);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod builtins;
pub mod field;
pub mod linalg;
pub mod operator;

pub use algebra::{Algebra, AlgebraElement, AlgebraError};
pub use builtins::{builtin, matrix_algebra};
pub use field::{Field, FieldError, FieldValue};
pub use linalg::{Echelon, LinalgError, Matrix, SolveOutcome};
pub use operator::{
    commutator_unit_solve, is_right_invertible, right_inverse, Grouping, OperatorError,
    OperatorExpression, SandwichTerm, TensorOperator,
};
