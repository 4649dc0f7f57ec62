use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{split_fraction, Field, FieldSpec, ScalarError};

/// Arbitrary-precision rational numbers, always stored as a reduced fraction.
pub type Rational = BigRational;

fn parse_int(text: &str, original: &str) -> Result<BigInt, ScalarError> {
    text.parse::<BigInt>().map_err(|_| ScalarError::Parse {
        text: original.to_string(),
        reason: "not an integer".into(),
    })
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational, ScalarError> {
    let (num, den) = split_fraction(text);
    let num = parse_int(num, text)?;
    match den {
        None => Ok(BigRational::from_integer(num)),
        Some(den) => {
            let den = parse_int(den, text)?;
            if den.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(BigRational::new(num, den))
        }
    }
}

impl Field for BigRational {
    fn spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(value.into())
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarError> {
        parse_rational(text)
    }

    fn primitive_root_of_unity(n: u64) -> Result<Self, ScalarError> {
        match n {
            1 => Ok(Self::one()),
            2 => Ok(-Self::one()),
            _ => Err(ScalarError::NoRootOfUnity {
                field: FieldSpec::Rationals,
                order: n,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        Rational::parse_scalar(s).unwrap()
    }

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("2/4").to_string(), "1/2");
        assert_eq!(q("-6/3").to_string(), "-2");
        assert_eq!(q("3/4").checked_div(&q("0")), Err(ScalarError::DivisionByZero));
        assert_eq!(q("3/4").checked_div(&q("3/2")).unwrap(), q("1/2"));
    }

    #[test]
    fn parse_errors() {
        assert!(Rational::parse_scalar("x").is_err());
        assert_eq!(Rational::parse_scalar("1/0"), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Rational::primitive_root_of_unity(2).unwrap(), q("-1"));
        assert!(matches!(
            Rational::primitive_root_of_unity(3),
            Err(ScalarError::NoRootOfUnity { .. })
        ));
    }
}
