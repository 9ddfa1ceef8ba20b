//! Dense univariate polynomials over arbitrary-precision signed integers.
//!
//! Every generating polynomial in this crate has degree at most `n` for the
//! desk-scale `n` we enumerate, so a dense coefficient vector is the right
//! representation. Coefficients are `BigInt`: values like `B_n(1) = 2^n n!`
//! overflow fixed-width integers almost immediately, and exactness is the
//! whole point of the verification harness.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Errors from the partial polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("reversal degree {requested} is below polynomial degree {actual}")]
    DegreeTooLarge { requested: usize, actual: usize },
    #[error("odd coefficient present at index {0}")]
    OddCoefficientPresent(usize),
    #[error("inexact division: coefficient at index {0} is not divisible")]
    InexactDivision(usize),
}

/// Substitutions used by the type-A/type-B identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subst {
    /// `p(t) -> p(-t)`
    NegT,
    /// `p(t) -> p(t^2)`
    TSquared,
}

/// A polynomial in one variable `t` with exact integer coefficients.
///
/// Canonical form: the coefficient vector carries no trailing zeros, and the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor for tests and tables.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn substitute(&self, kind: Subst) -> Self {
        match kind {
            Subst::NegT => Self::from_coeffs(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                    .collect(),
            ),
            Subst::TSquared => {
                let mut out = vec![BigInt::zero(); self.coeffs.len().saturating_mul(2)];
                for (i, c) in self.coeffs.iter().enumerate() {
                    out[2 * i] = c.clone();
                }
                Self::from_coeffs(out)
            }
        }
    }

    /// `t^d * p(1/t)`: coefficient `k` moves to index `d - k`.
    pub fn reverse(&self, d: usize) -> Result<Self, PolyError> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(deg) if deg > d => Err(PolyError::DegreeTooLarge {
                requested: d,
                actual: deg,
            }),
            Some(_) => {
                let mut out = vec![BigInt::zero(); d + 1];
                for (k, c) in self.coeffs.iter().enumerate() {
                    out[d - k] = c.clone();
                }
                Ok(Self::from_coeffs(out))
            }
        }
    }

    /// Extracts `q` with `q_k = p_{2k}`, rejecting any nonzero odd-index
    /// coefficient.
    pub fn even_part(&self) -> Result<Self, PolyError> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 && !c.is_zero() {
                return Err(PolyError::OddCoefficientPresent(i));
            }
        }
        Ok(Self::from_coeffs(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// Coefficientwise exact quotient by `c`.
    pub fn exact_div_int(&self, c: &BigInt) -> Result<Self, PolyError> {
        assert!(!c.is_zero(), "division by zero");
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            if (a % c).is_zero() {
                out.push(a / c);
            } else {
                return Err(PolyError::InexactDivision(i));
            }
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients as decimal strings, ascending powers.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(strings: &[String]) -> Option<Self> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            coeffs.push(s.parse::<BigInt>().ok()?);
        }
        Some(Self::from_coeffs(coeffs))
    }

    /// Display form `[1, 6, 1]` used by the CLI.
    pub fn bracketed(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// `p` is palindromic for degree parameter `d` when `t^d p(1/t) = p`.
    pub fn is_palindromic(&self, d: usize) -> bool {
        self.reverse(d).map(|r| r == *self).unwrap_or(false)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracketed())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracketed())
    }
}

// Serialized as an array of decimal strings so downstream consumers never
// truncate coefficients to 64 bits.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        Self::from_decimal_strings(&strings)
            .ok_or_else(|| D::Error::custom("invalid decimal coefficient"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn mul_binomial_square() {
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn add_with_scale() {
        // B_2 - 4 t A_1 = D_2
        let b2 = p(&[1, 6, 1]);
        let d2 = b2.add(&p(&[0, 1]).scale_i64(-4));
        assert_eq!(d2, p(&[1, 2, 1]));
    }

    #[test]
    fn zero_annihilates() {
        assert_eq!(IntPolynomial::zero().mul(&p(&[1, 5])), IntPolynomial::zero());
    }

    #[test]
    fn pow_cases() {
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[-1, 1]).pow(2), p(&[1, -2, 1]));
        assert_eq!(p(&[0, 1]).pow(4), p(&[0, 0, 0, 0, 1]));
        assert_eq!(IntPolynomial::zero().pow(0), IntPolynomial::one());
    }

    #[test]
    fn substitute_cases() {
        assert_eq!(p(&[1, 4, 1]).substitute(Subst::NegT), p(&[1, -4, 1]));
        assert_eq!(p(&[1, 6, 1]).substitute(Subst::TSquared), p(&[1, 0, 6, 0, 1]));
        assert_eq!(
            IntPolynomial::zero().substitute(Subst::NegT),
            IntPolynomial::zero()
        );
    }

    #[test]
    fn reverse_cases() {
        assert_eq!(p(&[0, 4, 4]).reverse(3).unwrap(), p(&[0, 4, 4]));
        assert_eq!(p(&[0, 6, 2]).reverse(3).unwrap(), p(&[0, 2, 6]));
        assert_eq!(p(&[1]).reverse(0).unwrap(), p(&[1]));
        assert!(matches!(
            p(&[1, 1, 1]).reverse(1),
            Err(PolyError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn even_part_cases() {
        assert_eq!(p(&[2, 0, 12, 0, 2]).even_part().unwrap(), p(&[2, 12, 2]));
        assert_eq!(p(&[6]).even_part().unwrap(), p(&[6]));
        assert_eq!(
            p(&[0, 1]).even_part(),
            Err(PolyError::OddCoefficientPresent(1))
        );
    }

    #[test]
    fn exact_div_cases() {
        let two = BigInt::from(2);
        assert_eq!(p(&[2, 12, 2]).exact_div_int(&two).unwrap(), p(&[1, 6, 1]));
        assert_eq!(
            IntPolynomial::zero().exact_div_int(&BigInt::from(7)).unwrap(),
            IntPolynomial::zero()
        );
        assert_eq!(
            p(&[4, 1]).exact_div_int(&two),
            Err(PolyError::InexactDivision(1))
        );
    }

    #[test]
    fn eval_cases() {
        let one = BigInt::from(1);
        assert_eq!(p(&[1, 6, 1]).eval_int(&one), BigInt::from(8));
        assert_eq!(p(&[1, 4, 1]).eval_int(&one), BigInt::from(6));
        assert_eq!(
            IntPolynomial::zero().eval_int(&BigInt::from(5)),
            BigInt::zero()
        );
    }

    #[test]
    fn canonical_trims_trailing_zeros() {
        let q = IntPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[1, 2]).sub(&p(&[0, 2])), p(&[1]));
    }

    #[test]
    fn json_round_trip_uses_strings() {
        let q = p(&[1, -23, 0, 7]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"["1","-23","0","7"]"#);
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }
}
