use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial with unbounded integer coefficients, ascending degree. The
/// leading coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BigPoly {
    #[serde(with = "crate::decimal::vec")]
    coeffs: Vec<BigInt>,
}

impl BigPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BigPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        BigPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        BigPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BigPoly::from_i64(&[1])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        BigPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &BigPoly) -> BigPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        BigPoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &BigPoly) -> BigPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        BigPoly::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &BigPoly) -> BigPoly {
        if self.is_zero() || other.is_zero() {
            return BigPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        BigPoly::new(c)
    }

    pub fn scale(&self, k: &BigInt) -> BigPoly {
        BigPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> BigPoly {
        if self.is_zero() {
            return BigPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        BigPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division over the integers; errors if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &BigPoly) -> Result<BigPoly> {
        let (q, r) = self.div_rem_integral(divisor)?;
        if !r.is_zero() {
            return Err(Error::Polynomial("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Division where every quotient coefficient must be an integer.
    fn div_rem_integral(&self, divisor: &BigPoly) -> Result<(BigPoly, BigPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Polynomial("division by zero polynomial".into()))?;
        let lead = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((BigPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Polynomial("non-integral quotient".into()));
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &qk * c;
            }
            q[k] = qk;
        }
        Ok((BigPoly::new(q), BigPoly::new(rem)))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &BigPoly) -> BigPoly {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading().expect("nonzero");
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().expect("nonzero").clone();
            let mut c: Vec<BigInt> = r.coeffs.iter().map(|x| x * lb).collect();
            for (i, bc) in b.coeffs.iter().enumerate() {
                c[dr - db + i] -= &lr * bc;
            }
            r = BigPoly::new(c);
        }
        r
    }

    /// Primitive gcd over the integers (positive leading coefficient).
    pub fn gcd(&self, other: &BigPoly) -> BigPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Least common multiple of two monic polynomials, monic.
    pub fn lcm_monic(&self, other: &BigPoly) -> Result<BigPoly> {
        if !self.is_monic() || !other.is_monic() {
            return Err(Error::Polynomial("lcm_monic needs monic inputs".into()));
        }
        let g = self.gcd(other);
        self.div_exact(&g).map(|q| q.mul(other))
    }

    /// `p(x) = x^k q(x)` with `q(0) != 0`; a pure power `x^d` reduces to
    /// `(x, d - 1)`.
    pub fn strip_x_factor(&self) -> Result<(BigPoly, usize)> {
        let d = self
            .degree()
            .ok_or_else(|| Error::Polynomial("cannot strip powers of x from zero".into()))?;
        let k = self.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
        if k == d && d > 0 {
            return Ok((BigPoly::monomial(1).scale(&self.coeffs[d]), d - 1));
        }
        Ok((BigPoly::new(self.coeffs[k..].to_vec()), k))
    }
}

/// Ascending-term form, e.g. `-8+4 x+4 x^2+x^3`.
impl fmt::Display for BigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag} ")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> BigPoly {
        BigPoly::from_i64(c)
    }

    #[test]
    fn strip_examples() {
        let full = p(&[0, 0, 0, 0, 0, 0, 0, 0, 0, -8, 4, 4, 2, -2, -2, 1]);
        let (q, k) = full.strip_x_factor().unwrap();
        assert_eq!(q, p(&[-8, 4, 4, 2, -2, -2, 1]));
        assert_eq!(k, 9);
        assert_eq!(p(&[-1, 1]).strip_x_factor().unwrap(), (p(&[-1, 1]), 0));
        assert_eq!(p(&[0, 0, 0, 1]).strip_x_factor().unwrap(), (p(&[0, 1]), 2));
        assert!(BigPoly::zero().strip_x_factor().is_err());
    }

    #[test]
    fn display_matches_ascending_style() {
        let q = p(&[-8, 4, 4, 2, -2, -2, 1]);
        assert_eq!(q.to_string(), "-8+4 x+4 x^2+2 x^3-2 x^4-2 x^5+x^6");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-x+x^3");
        assert_eq!(BigPoly::zero().to_string(), "0");
    }

    #[test]
    fn gcd_and_lcm() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let l = a.lcm_monic(&b).unwrap();
        assert_eq!(l, p(&[-1, 1]).mul(&p(&[2, 1])).mul(&p(&[-3, 1])));
        assert_eq!(a.gcd(&a), a);
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-2, 1, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])).unwrap(), p(&[2, 1]));
        assert!(a.div_exact(&p(&[1, 2])).is_err());
    }
}
