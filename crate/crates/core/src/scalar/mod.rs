//! Exact ground fields.
//!
//! Every structure in this crate is generic over a [`Field`]. Three families
//! are provided: the rationals ([`Rational`]), prime fields ([`Fp`]) and
//! cyclotomic fields ([`Cyclotomic`]). There is no floating point anywhere.

mod cyclotomic;
mod prime;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use prime::{is_prime, Fp};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("no primitive {order}-th root of unity in {field}")]
    NoRootOfUnity { field: FieldSpec, order: u64 },
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// The ground field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    Cyclotomic(u64),
}

impl FieldSpec {
    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::PrimeField(_))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "f{p}"),
            FieldSpec::Cyclotomic(n) => write!(f, "zeta{n}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    /// Accepts `q`, `f<p>` and `zeta<n>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| ScalarError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = t.strip_prefix("zeta") {
            let n: u64 = rest.parse().map_err(|_| bad("expected zeta<n>"))?;
            if n == 0 {
                return Err(bad("cyclotomic order must be positive"));
            }
            return Ok(FieldSpec::Cyclotomic(n));
        }
        if let Some(rest) = t.strip_prefix('f') {
            let p: u64 = rest.parse().map_err(|_| bad("expected f<p>"))?;
            if !is_prime(p) {
                return Err(bad("modulus is not prime"));
            }
            return Ok(FieldSpec::PrimeField(p));
        }
        Err(bad("expected q, f<p> or zeta<n>"))
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = ScalarError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        value.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(value: FieldSpec) -> Self {
        value.to_string()
    }
}

/// An exact field with canonical element representations.
///
/// Equality is structural: two elements are equal iff their canonical forms
/// coincide.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn spec() -> FieldSpec;

    fn from_i64(value: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Parses the scalar text syntax of this field.
    fn parse_scalar(text: &str) -> Result<Self, ScalarError>;

    /// Number of elements for finite fields.
    fn order() -> Option<u64> {
        None
    }

    /// The `index`-th element in the canonical enumeration of a finite field
    /// (`0, 1, 2, ...` as residues). Panics for infinite fields.
    fn nth_element(index: u64) -> Self {
        let _ = index;
        panic!("{} is not a finite field", Self::spec())
    }

    /// A primitive `n`-th root of unity.
    fn primitive_root_of_unity(n: u64) -> Result<Self, ScalarError>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let inv = rhs.inverse().ok_or(ScalarError::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base.clone();
            }
            base = base.clone() * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order, or `None` for zero or an element of infinite order
    /// (only roots of unity up to `bound` are detected).
    fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc *= self.clone();
        }
        None
    }
}

/// Checks that `F` matches the field a document declares.
pub fn expect_field<F: Field>(declared: FieldSpec) -> Result<(), ScalarError> {
    if declared == F::spec() {
        Ok(())
    } else {
        Err(ScalarError::FieldMismatch {
            expected: F::spec(),
            found: declared,
        })
    }
}

/// Splits `"a/b"` or `"a"` into a numerator and denominator string.
pub(crate) fn split_fraction(text: &str) -> (&str, Option<&str>) {
    match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text.trim(), None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_round_trip() {
        for s in ["q", "f5", "f7", "zeta3", "zeta12"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("f6".parse::<FieldSpec>().is_err());
        assert!("zeta0".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let err = expect_field::<Fp<5>>(FieldSpec::PrimeField(7)).unwrap_err();
        assert!(matches!(err, ScalarError::FieldMismatch { .. }));
        expect_field::<Fp<5>>(FieldSpec::PrimeField(5)).unwrap();
    }
}
