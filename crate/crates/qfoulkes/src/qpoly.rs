//! Dense univariate polynomials in `q` with arbitrary-precision rational
//! coefficients. All arithmetic is exact.
//!
//! Provides the ring operations, the q-integers `[k]_q` and q-factorials
//! `[n]_q!`, exact division (in particular the divided difference by
//! `1 - q`), evaluation, and the positivity predicate used for
//! Schur-positivity checks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// Polynomial in `q`; `coeffs[k]` is the coefficient of `q^k`, with no
/// trailing zeros stored (the zero polynomial has an empty vector).
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// n! as an exact rational, for scalar use in dimension formulas.
pub fn factorial(n: u32) -> BigRational {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    BigRational::from(f)
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn q() -> Self {
        QPoly::monomial(1, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly { coeffs: vec![c] }.normalized()
    }

    pub fn monomial(k: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        QPoly { coeffs }.normalized()
    }

    /// Integer coefficients in ascending degree; handy for frozen test values.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
        .normalized()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `q -> q^k`, spacing out the coefficients.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QPoly { coeffs }
    }

    pub fn eval(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn eval_at_zero(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    /// True iff every coefficient is a nonnegative integer.
    pub fn is_natural(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Exact quotient `r` with `(1 - q) r = self`.
    /// Errors when `self(1) != 0`, i.e. `1 - q` does not divide.
    pub fn divide_by_one_minus_q(&self) -> Result<QPoly> {
        let at_one = self.eval_at_one();
        if !at_one.is_zero() {
            return Err(Error::NotDivisible(at_one.to_string()));
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        // self = (1-q) r  =>  r_k = self_k + r_{k-1}, with the top cancelling.
        let mut out = vec![BigRational::zero(); self.coeffs.len() - 1];
        let mut carry = BigRational::zero();
        for k in 0..self.coeffs.len() - 1 {
            carry = &self.coeffs[k] + &carry;
            out[k] = carry.clone();
        }
        Ok(QPoly::from_coeffs(out))
    }

    /// Exact polynomial division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let (dn, dd) = (self.coeffs.len(), divisor.coeffs.len());
        if dn < dd {
            return Err(Error::InexactDivision(format!(
                "degree {} < degree {}",
                dn - 1,
                dd - 1
            )));
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); dn - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] / lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let v = &c * d;
                    rem[k + i] -= v;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!(
                "{} does not divide {}",
                divisor, self
            )));
        }
        Ok(QPoly::from_coeffs(quot))
    }
}

/// The q-integer `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_int(k: u32) -> QPoly {
    assert!(k >= 1);
    QPoly::from_coeffs(vec![BigRational::one(); k as usize])
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: u32) -> QPoly {
    let mut acc = QPoly::one();
    for k in 1..=n {
        acc = &acc * &q_int(k);
    }
    acc
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    /// Text form like `1 + 2*q + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = mag.is_one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_examples() {
        let p = &q_int(2) * &q_int(3);
        assert_eq!(p, QPoly::from_ints(&[1, 2, 2, 1]));
        assert_eq!(p, q_factorial(3));
        let q = QPoly::from_ints(&[3, -1, 2]);
        assert!((&q + &(-&q)).is_zero());
        assert!((&QPoly::zero() * &q).is_zero());
    }

    #[test]
    fn q_int_and_factorial() {
        assert_eq!(q_int(3), QPoly::from_ints(&[1, 1, 1]));
        assert_eq!(q_factorial(0), QPoly::one());
        assert_eq!(q_factorial(3), QPoly::from_ints(&[1, 2, 2, 1]));
        for n in 0..=12u32 {
            assert_eq!(q_factorial(n).eval_at_one(), factorial(n));
        }
    }

    #[test]
    fn divided_difference_examples() {
        let p = QPoly::from_ints(&[1, 0, 0, -1]); // 1 - q^3
        assert_eq!(p.divide_by_one_minus_q().unwrap(), q_int(3));
        assert!(QPoly::zero().divide_by_one_minus_q().unwrap().is_zero());
        let p = QPoly::from_ints(&[0, 1, -1]); // q - q^2
        assert_eq!(p.divide_by_one_minus_q().unwrap(), QPoly::from_ints(&[0, 1]));
        assert!(QPoly::from_ints(&[1, 1]).divide_by_one_minus_q().is_err());
    }

    #[test]
    fn eval_and_naturality() {
        assert_eq!(q_int(3).eval(&rat(1)), rat(3));
        assert!(QPoly::from_ints(&[1, 2]).is_natural());
        assert!(!QPoly::from_ints(&[1, -1, 1]).is_natural());
        assert!(!QPoly::constant(rat_frac(1, 2)).is_natural());
    }

    #[test]
    fn exact_division() {
        let f = &q_factorial(4) * &QPoly::from_ints(&[2, 1]);
        assert_eq!(f.div_exact(&q_factorial(4)).unwrap(), QPoly::from_ints(&[2, 1]));
        assert!(q_int(3).div_exact(&q_int(2)).is_err());
        // [6]_q = [2]_q [3]_{q^2}
        assert_eq!(
            q_int(6).div_exact(&q_int(2)).unwrap(),
            q_int(3).stretch(2)
        );
    }

    #[test]
    fn stretch_substitutes_power() {
        let p = QPoly::from_ints(&[1, 2, 3]);
        assert_eq!(p.stretch(2), QPoly::from_ints(&[1, 0, 2, 0, 3]));
        assert_eq!(p.stretch(1), p);
    }

    #[test]
    fn display_form() {
        let p = QPoly::from_ints(&[1, 2, 0, 1]);
        assert_eq!(p.to_string(), "1 + 2*q + q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_ints(&[0, -1]).to_string(), "-q");
    }
}
