//! Exact scalar arithmetic for the two supported fields: the rationals
//! and prime fields GF(p).
//!
//! Every value carries its field with it and values from different fields
//! never combine; mixing them is an error, not a coercion. Rationals are
//! kept canonical (reduced, positive denominator) and GF(p) residues are
//! kept in `[0, p)`, so equality of values is plain structural equality.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Error raised by scalar construction or arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldError {
    /// Two operands belong to different fields.
    MixedFields,
    /// Inversion of zero, or a literal with denominator zero.
    DivisionByZero,
    /// A GF(p) field was requested with a composite or trivial modulus.
    NotPrime(u64),
    /// A scalar or field descriptor does not match the expected grammar.
    Parse(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::MixedFields => write!(f, "operands belong to different fields"),
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::Parse(msg) => write!(f, "{msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FieldError {}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum FieldKind {
    Rational,
    Gf(u64),
}

/// A scalar field descriptor: the rationals, or GF(p) for a prime p.
///
/// The modulus is validated once here; values built through a `Field`
/// can therefore trust it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Field(FieldKind);

impl Field {
    /// The field of rational numbers.
    pub fn rational() -> Field {
        Field(FieldKind::Rational)
    }

    /// The prime field GF(p). Fails with `NotPrime` for composite p.
    pub fn gf(p: u64) -> Result<Field, FieldError> {
        if is_prime_u64(p) {
            Ok(Field(FieldKind::Gf(p)))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Parses a field descriptor: `rational` or `gf <p>`.
    pub fn parse_descriptor(text: &str) -> Result<Field, FieldError> {
        let tokens: alloc::vec::Vec<&str> = text.split_whitespace().collect();
        match tokens.as_slice() {
            ["rational"] => Ok(Field::rational()),
            ["gf", p] => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| FieldError::Parse(format!("bad modulus `{p}`")))?;
                Field::gf(p)
            }
            _ => Err(FieldError::Parse(format!("unknown field `{text}`"))),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.0 == FieldKind::Rational
    }

    /// The modulus for GF(p), `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            FieldKind::Rational => None,
            FieldKind::Gf(p) => Some(p),
        }
    }

    pub fn zero(&self) -> FieldValue {
        match self.0 {
            FieldKind::Rational => FieldValue(ValueKind::Rational(BigRational::zero())),
            FieldKind::Gf(p) => FieldValue(ValueKind::Mod { modulus: p, residue: 0 }),
        }
    }

    pub fn one(&self) -> FieldValue {
        match self.0 {
            FieldKind::Rational => FieldValue(ValueKind::Rational(BigRational::one())),
            FieldKind::Gf(p) => FieldValue(ValueKind::Mod { modulus: p, residue: 1 % p }),
        }
    }

    /// Embeds a machine integer into the field.
    pub fn from_integer(&self, n: i64) -> FieldValue {
        match self.0 {
            FieldKind::Rational => {
                FieldValue(ValueKind::Rational(BigRational::from_integer(BigInt::from(n))))
            }
            FieldKind::Gf(p) => {
                let r = (BigInt::from(n)).mod_floor(&BigInt::from(p));
                let (_, digits) = r.to_u64_digits();
                let residue = digits.first().copied().unwrap_or(0);
                FieldValue(ValueKind::Mod { modulus: p, residue })
            }
        }
    }

    /// Parses a scalar literal `[-]digits[/digits]` into this field.
    ///
    /// Over GF(p) the numerator and denominator are reduced mod p first;
    /// a denominator divisible by p is a division by zero.
    pub fn parse(&self, text: &str) -> Result<FieldValue, FieldError> {
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let numer = parse_integer_literal(num_text)?;
        let denom = match den_text {
            Some(d) => {
                if d.starts_with('-') {
                    return Err(FieldError::Parse(format!("bad scalar `{text}`")));
                }
                parse_integer_literal(d)?
            }
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self.0 {
            FieldKind::Rational => Ok(FieldValue(ValueKind::Rational(BigRational::new(
                numer, denom,
            )))),
            FieldKind::Gf(p) => {
                let n = big_mod_u64(&numer, p);
                let d = big_mod_u64(&denom, p);
                if d == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                let residue = mul_mod(n, inv_mod(d, p), p);
                Ok(FieldValue(ValueKind::Mod { modulus: p, residue }))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Gf(p) => write!(f, "gf {p}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum ValueKind {
    Rational(BigRational),
    Mod { modulus: u64, residue: u64 },
}

/// An exact scalar bound to its field.
///
/// Stored canonically: rationals reduced with positive denominator,
/// GF(p) residues in `[0, p)`. Equal values have identical representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldValue(ValueKind);

impl FieldValue {
    pub fn field(&self) -> Field {
        match &self.0 {
            ValueKind::Rational(_) => Field::rational(),
            ValueKind::Mod { modulus, .. } => Field(FieldKind::Gf(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            ValueKind::Rational(r) => r.is_zero(),
            ValueKind::Mod { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            ValueKind::Rational(r) => r.is_one(),
            ValueKind::Mod { residue, .. } => *residue == 1,
        }
    }

    pub fn add(&self, rhs: &FieldValue) -> Result<FieldValue, FieldError> {
        match (&self.0, &rhs.0) {
            (ValueKind::Rational(a), ValueKind::Rational(b)) => {
                Ok(FieldValue(ValueKind::Rational(a + b)))
            }
            (
                ValueKind::Mod { modulus: p, residue: a },
                ValueKind::Mod { modulus: q, residue: b },
            ) if p == q => Ok(FieldValue(ValueKind::Mod {
                modulus: *p,
                residue: ((*a as u128 + *b as u128) % *p as u128) as u64,
            })),
            _ => Err(FieldError::MixedFields),
        }
    }

    pub fn sub(&self, rhs: &FieldValue) -> Result<FieldValue, FieldError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &FieldValue) -> Result<FieldValue, FieldError> {
        match (&self.0, &rhs.0) {
            (ValueKind::Rational(a), ValueKind::Rational(b)) => {
                Ok(FieldValue(ValueKind::Rational(a * b)))
            }
            (
                ValueKind::Mod { modulus: p, residue: a },
                ValueKind::Mod { modulus: q, residue: b },
            ) if p == q => Ok(FieldValue(ValueKind::Mod {
                modulus: *p,
                residue: mul_mod(*a, *b, *p),
            })),
            _ => Err(FieldError::MixedFields),
        }
    }

    pub fn div(&self, rhs: &FieldValue) -> Result<FieldValue, FieldError> {
        if self.field() != rhs.field() {
            return Err(FieldError::MixedFields);
        }
        self.mul(&rhs.inv()?)
    }

    pub fn neg(&self) -> FieldValue {
        match &self.0 {
            ValueKind::Rational(r) => FieldValue(ValueKind::Rational(-r)),
            ValueKind::Mod { modulus: p, residue: a } => FieldValue(ValueKind::Mod {
                modulus: *p,
                residue: if *a == 0 { 0 } else { p - a },
            }),
        }
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<FieldValue, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match &self.0 {
            ValueKind::Rational(r) => Ok(FieldValue(ValueKind::Rational(r.recip()))),
            ValueKind::Mod { modulus: p, residue: a } => Ok(FieldValue(ValueKind::Mod {
                modulus: *p,
                residue: inv_mod(*a, *p),
            })),
        }
    }

    pub(crate) fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            ValueKind::Rational(r) => Some(r),
            ValueKind::Mod { .. } => None,
        }
    }

    pub(crate) fn from_rational(r: BigRational) -> FieldValue {
        FieldValue(ValueKind::Rational(r))
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            // Ratio prints `p/q`, or just `p` when the denominator is one.
            ValueKind::Rational(r) => write!(f, "{r}"),
            ValueKind::Mod { residue, .. } => write!(f, "{residue}"),
        }
    }
}

fn parse_integer_literal(text: &str) -> Result<BigInt, FieldError> {
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FieldError::Parse(format!("bad integer literal `{text}`")));
    }
    let n = BigInt::parse_bytes(digits.as_bytes(), 10)
        .ok_or_else(|| FieldError::Parse(format!("bad integer literal `{text}`")))?;
    Ok(if negative { -n } else { n })
}

fn big_mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Extended Euclid; `a` must be in `[1, p)` with p prime.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin, valid for the full u64 range.
fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'next: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'next;
            }
        }
        return false;
    }
    true
}
