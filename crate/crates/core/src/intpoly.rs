//! Univariate integer polynomials in `t`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::from_coeffs(vec![BigInt::one()])
    }

    /// `t`.
    pub fn t() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn monomial(k: BigInt, deg: usize) -> Self {
        let mut c = vec![BigInt::zero(); deg + 1];
        c[deg] = k;
        IntPoly::from_coeffs(c)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
    }

    /// Exact division by `t - 0`, i.e. by `t`. Requires a zero constant term.
    pub fn div_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(IntPoly::from_coeffs(self.coeffs[1..].to_vec()))
    }

    /// True when (-1)^{d-k} c_k ≥ 0 for every `k`, with `d` the degree.
    pub fn is_alternating(&self) -> bool {
        let Some(d) = self.degree() else { return true };
        (0..=d).all(|k| {
            let c = &self.coeffs[k];
            if (d - k) % 2 == 0 {
                !c.is_negative()
            } else {
                !c.is_positive()
            }
        })
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match k {
                0 => None,
                1 => Some(alloc::string::String::from("t")),
                _ => Some(alloc::format!("t^{k}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_eval() {
        let p = IntPoly::from_i64s(&[3, -2, 1]);
        assert_eq!(p.to_string(), "t^2 - 2*t + 3");
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(6));
        assert_eq!(IntPoly::from_i64s(&[0, 2, -3, 1]).to_string(), "t^3 - 3*t^2 + 2*t");
        assert_eq!(IntPoly::from_i64s(&[-1]).to_string(), "-1");
        assert!(p.is_alternating());
        assert!(IntPoly::from_i64s(&[0, 2, -3, 1]).is_alternating());
        assert!(!IntPoly::from_i64s(&[1, 1]).is_alternating());
    }

    #[test]
    fn arithmetic() {
        let t = IntPoly::t();
        let k3 = &(&t * &(&t - &IntPoly::one())) * &(&t - &IntPoly::from_i64s(&[2]));
        assert_eq!(k3, IntPoly::from_i64s(&[0, 2, -3, 1]));
        assert_eq!(k3.div_t().unwrap(), IntPoly::from_i64s(&[2, -3, 1]));
    }
}
