//! Catalog of classical algebras over a chosen scalar field.
//!
//! Available names: `rational`, `complex`, `dual`, `quaternions`,
//! `octonions`, and `matrix <m>`. All tables use integer structure
//! constants, so every catalog entry can be instantiated over the
//! rationals or over any GF(p).

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::{Algebra, AlgebraError};
use crate::field::{Field, FieldValue};

/// Oriented lines of the Fano plane fixing the octonion product, in the
/// convention obtained by doubling the quaternions: `e_a e_b = e_c` for
/// each `(a, b, c)` and its cyclic shifts, with odd permutations negated.
const OCTONION_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
    (2, 5, 7),
    (3, 6, 5),
    (1, 7, 6),
];

/// Looks up a catalog algebra by name, e.g. `quaternions` or `matrix 3`.
pub fn builtin(name: &str, field: Field) -> Result<Algebra, AlgebraError> {
    let tokens: Vec<&str> = name.split_whitespace().collect();
    match tokens.as_slice() {
        ["rational"] => imaginary_unit_algebra(1, &[], field),
        ["complex"] => imaginary_unit_algebra(2, &[], field),
        ["quaternions"] => imaginary_unit_algebra(4, &[(1, 2, 3)], field),
        ["octonions"] => imaginary_unit_algebra(8, &OCTONION_TRIPLES, field),
        ["dual"] => dual_numbers(field),
        ["matrix", m] => {
            let m: usize = m
                .parse()
                .map_err(|_| AlgebraError::UnknownBuiltin(name.to_string()))?;
            matrix_algebra(m, field)
        }
        _ => Err(AlgebraError::UnknownBuiltin(name.to_string())),
    }
}

/// Algebra with unit `e0` and imaginary units `e1..` squaring to `-e0`,
/// multiplied along the given oriented triples. Dimension 1 yields the
/// base field, 2 the complex numbers, 4 (with `(1,2,3)`) the quaternions,
/// 8 (with the Fano lines) the octonions.
fn imaginary_unit_algebra(
    dim: usize,
    triples: &[(usize, usize, usize)],
    field: Field,
) -> Result<Algebra, AlgebraError> {
    let one = field.one();
    let minus_one = one.neg();
    let mut constants: Vec<((usize, usize, usize), FieldValue)> = Vec::new();
    constants.push(((0, 0, 0), one.clone()));
    for t in 1..dim {
        constants.push(((0, t, t), one.clone()));
        constants.push(((t, 0, t), one.clone()));
        constants.push(((t, t, 0), minus_one.clone()));
    }
    for &(a, b, c) in triples {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            constants.push(((x, y, z), one.clone()));
            constants.push(((y, x, z), minus_one.clone()));
        }
    }
    Algebra::new(field, dim, constants, None)
}

/// Dual numbers: `e1 * e1 = 0`.
fn dual_numbers(field: Field) -> Result<Algebra, AlgebraError> {
    let one = field.one();
    Algebra::new(
        field,
        2,
        [
            ((0, 0, 0), one.clone()),
            ((0, 1, 1), one.clone()),
            ((1, 0, 1), one),
        ],
        None,
    )
}

/// The algebra of m-by-m matrices, dimension m^2.
///
/// Basis elements are the matrix units `e^p_q` (single one in row p,
/// column q) ordered row-major, index `p*m + q`; the product rule is
/// `e^p_q e^s_t = delta_q^s e^p_t`. With this ordering the left regular
/// representation of `a` is the block matrix with `(p, s)` block
/// `a^p_s I_m`.
pub fn matrix_algebra(m: usize, field: Field) -> Result<Algebra, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::InvalidDimension);
    }
    let one = field.one();
    let mut constants = Vec::with_capacity(m * m * m);
    for p in 0..m {
        for q in 0..m {
            for t in 0..m {
                constants.push(((p * m + q, q * m + t, p * m + t), one.clone()));
            }
        }
    }
    Algebra::new(field, m * m, constants, None)
}
