use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::parse_rational;
use super::{Field, FieldSpec, ScalarError};

pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // both monic, coefficients low degree first
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn compute_cyclotomic(n: u64) -> Vec<i64> {
    // x^n - 1 = prod_{d | n} Phi_d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let poly = Arc::new(compute_cyclotomic(n));
    cache.write().unwrap().insert(n, poly.clone());
    poly
}

/// Elements of the cyclotomic field Q(ζ_N), stored as polynomials in `z`
/// of degree below φ(N), reduced modulo Φ_N after every product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<const N: u64> {
    coeffs: Vec<BigRational>,
}

impl<const N: u64> Cyclotomic<N> {
    const VALID: () = assert!(N >= 1, "cyclotomic order must be positive");

    pub fn degree() -> usize {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        euler_phi(N) as usize
    }

    /// Reduces an arbitrary-length polynomial modulo Φ_N.
    pub fn from_poly(mut poly: Vec<BigRational>) -> Self {
        let deg = Self::degree();
        let phi = cyclotomic_polynomial(N);
        while poly.len() > deg {
            let top = poly.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = poly.len() - deg;
            for (i, &c) in phi.iter().take(deg).enumerate() {
                if c != 0 {
                    poly[shift + i] -= top.clone() * BigRational::from_integer(c.into());
                }
            }
        }
        poly.resize(deg, BigRational::zero());
        Cyclotomic { coeffs: poly }
    }

    pub fn from_rational(value: BigRational) -> Self {
        Self::from_poly(vec![value])
    }

    /// The generator `z`, a primitive N-th root of unity.
    pub fn zeta() -> Self {
        let mut poly = vec![BigRational::zero(); 2];
        poly[1] = BigRational::one();
        Self::from_poly(poly)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn solve_inverse(&self) -> Option<Self> {
        // columns of the multiplication-by-self matrix are self * z^j
        let d = Self::degree();
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); d + 1]; d];
        let mut basis = Self::one();
        for j in 0..d {
            let col = self.clone() * basis.clone();
            for (i, row) in rows.iter_mut().enumerate() {
                row[j] = col.coeffs[i].clone();
            }
            basis *= Self::zeta();
        }
        rows[0][d] = BigRational::one();
        for c in 0..d {
            let pivot = (c..d).find(|&r| !rows[r][c].is_zero())?;
            rows.swap(c, pivot);
            let inv = rows[c][c].recip();
            for v in rows[c].iter_mut() {
                *v *= inv.clone();
            }
            for r in 0..d {
                if r != c && !rows[r][c].is_zero() {
                    let factor = rows[r][c].clone();
                    for k in c..=d {
                        let delta = factor.clone() * rows[c][k].clone();
                        rows[r][k] -= delta;
                    }
                }
            }
        }
        Some(Cyclotomic {
            coeffs: rows.into_iter().map(|r| r[d].clone()).collect(),
        })
    }
}

impl<const N: u64> fmt::Display for Cyclotomic<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let monomial = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                monomial
            } else if (-c.clone()).is_one() {
                format!("-{monomial}")
            } else {
                format!("{c}*{monomial}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{t}")?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

impl<const N: u64> fmt::Debug for Cyclotomic<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<const N: u64> Add for Cyclotomic<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<const N: u64> AddAssign for Cyclotomic<N> {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl<const N: u64> Sub for Cyclotomic<N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<const N: u64> SubAssign for Cyclotomic<N> {
    fn sub_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
    }
}

impl<const N: u64> Neg for Cyclotomic<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<const N: u64> Mul for Cyclotomic<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = Self::degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a.clone() * b.clone();
                }
            }
        }
        Self::from_poly(prod)
    }
}

impl<const N: u64> MulAssign for Cyclotomic<N> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.clone() * rhs;
    }
}

impl<const N: u64> Div for Cyclotomic<N> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in cyclotomic field")
    }
}

impl<const N: u64> Zero for Cyclotomic<N> {
    fn zero() -> Self {
        Cyclotomic {
            coeffs: vec![BigRational::zero(); Self::degree()],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<const N: u64> One for Cyclotomic<N> {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
}

fn parse_term(term: &str, original: &str) -> Result<(usize, BigRational), ScalarError> {
    let bad = |reason: &str| ScalarError::Parse {
        text: original.to_string(),
        reason: reason.to_string(),
    };
    let (sign, body) = match term.strip_prefix('-') {
        Some(rest) => (-BigRational::one(), rest),
        None => (BigRational::one(), term.strip_prefix('+').unwrap_or(term)),
    };
    if body.is_empty() {
        return Err(bad("empty term"));
    }
    let Some(zpos) = body.find('z') else {
        return Ok((0, sign * parse_rational(body)?));
    };
    let (coef, mono) = body.split_at(zpos);
    let coef = match coef.strip_suffix('*') {
        Some(c) => parse_rational(c)?,
        None if coef.is_empty() => BigRational::one(),
        None => return Err(bad("expected '*' before z")),
    };
    let power = match mono.strip_prefix('z').unwrap() {
        "" => 1,
        rest => rest
            .strip_prefix('^')
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(|| bad("bad exponent"))?,
    };
    Ok((power, sign * coef))
}

impl<const N: u64> Field for Cyclotomic<N> {
    fn spec() -> FieldSpec {
        FieldSpec::Cyclotomic(N)
    }

    fn from_i64(value: i64) -> Self {
        Self::from_rational(BigRational::from_integer(value.into()))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            self.solve_inverse()
        }
    }

    /// Syntax: `c0 + c1*z + c2*z^2 ...` with rational coefficients.
    fn parse_scalar(text: &str) -> Result<Self, ScalarError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ScalarError::Parse {
                text: text.to_string(),
                reason: "empty".into(),
            });
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' && bytes[i - 1] != b'*' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut poly = vec![BigRational::zero(); Self::degree()];
        for term in terms {
            let (power, coef) = parse_term(term, text)?;
            if poly.len() <= power {
                poly.resize(power + 1, BigRational::zero());
            }
            poly[power] += coef;
        }
        Ok(Self::from_poly(poly))
    }

    /// For `n | lcm(2, N)`; the root is a power of `z` (or of `-z` when `N`
    /// is odd and only `2N` is divisible by `n`).
    fn primitive_root_of_unity(n: u64) -> Result<Self, ScalarError> {
        if n >= 1 && N.is_multiple_of(n) {
            return Ok(Self::zeta().pow(N / n));
        }
        if n >= 1 && N % 2 == 1 && (2 * N).is_multiple_of(n) {
            return Ok((-Self::zeta()).pow(2 * N / n));
        }
        Err(ScalarError::NoRootOfUnity {
            field: Self::spec(),
            order: n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z3 = Cyclotomic<3>;

    fn c3(s: &str) -> Z3 {
        Z3::parse_scalar(s).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn zeta_squared_reduces() {
        let z = Z3::zeta();
        assert_eq!(z.clone() * z.clone(), c3("-1 - z"));
        assert_eq!((z.clone() * z.clone()).to_string(), "-1 - z");
        assert!(z.pow(3).is_one());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(c3("1/2*z + 3").to_string(), "3 + 1/2*z");
        assert_eq!(c3("z^2"), c3("-1-z"));
        assert_eq!(c3("-z").to_string(), "-z");
        assert!(Z3::parse_scalar("2*y").is_err());
        assert!(Z3::parse_scalar("").is_err());
    }

    #[test]
    fn inverse_of_zeta_plus_two() {
        let a = c3("2 + z");
        let inv = a.inverse().unwrap();
        assert!((a * inv).is_one());
        assert!(Z3::zero().inverse().is_none());
    }

    #[test]
    fn roots() {
        assert_eq!(Z3::primitive_root_of_unity(3).unwrap(), Z3::zeta());
        let r6 = Z3::primitive_root_of_unity(6).unwrap();
        assert_eq!(r6.multiplicative_order(20), Some(6));
        assert!(Z3::primitive_root_of_unity(4).is_err());
        let i = Cyclotomic::<4>::primitive_root_of_unity(4).unwrap();
        assert_eq!(i.multiplicative_order(10), Some(4));
    }
}

