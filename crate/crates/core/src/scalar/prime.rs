use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{split_fraction, Field, FieldSpec, ScalarError};

pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues modulo the prime `P`, stored as the least non-negative residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(value: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn mul_mod(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(Self::mul_mod(self.0, rhs.0))
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

fn parse_i128(text: &str, original: &str) -> Result<i128, ScalarError> {
    text.parse::<i128>().map_err(|_| ScalarError::Parse {
        text: original.to_string(),
        reason: "not an integer".into(),
    })
}

impl<const P: u64> Field for Fp<P> {
    fn spec() -> FieldSpec {
        FieldSpec::PrimeField(P)
    }

    fn from_i64(value: i64) -> Self {
        Fp::new(value)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        let egcd = (self.0 as i128).extended_gcd(&(P as i128));
        Some(Fp(egcd.x.rem_euclid(P as i128) as u64))
    }

    /// Integers (optionally signed) and, for convenience, `a/b` with `b`
    /// invertible modulo `P`.
    fn parse_scalar(text: &str) -> Result<Self, ScalarError> {
        let (num, den) = split_fraction(text);
        let reduce = |v: i128| Fp(v.rem_euclid(P as i128) as u64);
        let num = reduce(parse_i128(num, text)?);
        match den {
            None => Ok(num),
            Some(den) => num.checked_div(&reduce(parse_i128(den, text)?)),
        }
    }

    fn order() -> Option<u64> {
        Some(P)
    }

    fn nth_element(index: u64) -> Self {
        assert!(index < P, "index {index} out of range for f{P}");
        Fp(index)
    }

    /// The smallest residue of exact multiplicative order `n`.
    fn primitive_root_of_unity(n: u64) -> Result<Self, ScalarError> {
        let none = ScalarError::NoRootOfUnity {
            field: Self::spec(),
            order: n,
        };
        if n == 0 || !(P - 1).is_multiple_of(n) {
            return Err(none);
        }
        (1..P)
            .map(Fp)
            .find(|a| a.pow(n).is_one() && (1..n).all(|m| !a.pow(m).is_one()))
            .ok_or(none)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F5 = Fp<5>;
    type F7 = Fp<7>;

    #[test]
    fn modular_arithmetic() {
        assert_eq!(F5::new(3) * F5::new(4), F5::new(2));
        assert_eq!(F5::new(-1), F5::new(4));
        assert_eq!(F5::new(2).inverse(), Some(F5::new(3)));
        assert_eq!(F5::zero().inverse(), None);
        assert_eq!(F5::parse_scalar("1/2").unwrap(), F5::new(3));
        assert_eq!(F5::parse_scalar("-7").unwrap(), F5::new(3));
        assert_eq!(F5::parse_scalar("1/5"), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn cube_root_of_unity_mod_seven() {
        // exhaustive: residues of exact order 3 modulo 7
        let order3: Vec<u64> = (1..7)
            .filter(|a| {
                let p = |e: u32| (*a as u64).pow(e) % 7;
                p(3) == 1 && p(1) != 1 && p(2) != 1
            })
            .collect();
        assert_eq!(order3, vec![2, 4]);
        assert_eq!(F7::primitive_root_of_unity(3).unwrap(), F7::new(2));
        assert!(F7::primitive_root_of_unity(4).is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
    }
}
