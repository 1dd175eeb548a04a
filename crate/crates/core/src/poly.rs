//! Dense univariate polynomials over an exact ring. The variable is t; by
//! convention the Hecke parameter is q = t^2, so t plays the role of q^(1/2).

use crate::ring::{Conj, Field, Ring};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Polynomial { coeffs: vec![c] }.normalized()
    }

    pub fn one() -> Self {
        Polynomial::constant(T::one())
    }

    /// The variable t.
    pub fn var() -> Self {
        Polynomial {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial { coeffs }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Polynomial { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> T {
        self.coeffs.get(deg).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, s: &T) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
        .normalized()
    }
}

impl<T: Field> Polynomial<T> {
    /// Synthetic division by (t - r); returns (quotient, remainder).
    pub fn div_linear(&self, r: &T) -> (Self, T) {
        if self.is_zero() {
            return (Polynomial::zero(), T::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for k in (0..n).rev() {
            let val = self.coeffs[k].clone() + carry.clone() * r.clone();
            if k == 0 {
                return (Polynomial::from_coeffs(q), val);
            }
            q[k - 1] = val.clone();
            carry = val;
        }
        unreachable!()
    }

    /// Split off linear factors at the given candidate roots; returns the
    /// multiplicities found (in candidate order) and the remaining cofactor.
    pub fn factor_at_roots(&self, candidates: &[T]) -> (Vec<(T, usize)>, Self) {
        let mut rest = self.clone();
        let mut found = Vec::new();
        for r in candidates {
            let mut mult = 0usize;
            loop {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (q, rem) = rest.div_linear(r);
                if rem.is_zero() {
                    rest = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                found.push((r.clone(), mult));
            }
        }
        (found, rest)
    }
}

impl<T: Ring + Conj> Conj for Polynomial<T> {
    fn conj(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }
}

impl<T: Ring> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            coeffs.push(a + b);
        }
        Polynomial { coeffs }.normalized()
    }
}

impl<T: Ring> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Polynomial<T>) -> Polynomial<T> {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[j + k] = coeffs[j + k].clone() + a.clone() * b.clone();
            }
        }
        Polynomial { coeffs }.normalized()
    }
}

impl<T: Ring> num_traits::Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl<T: Ring> num_traits::One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<T: Ring> Ring for Polynomial<T> {
    fn from_int(n: i64) -> Self {
        Polynomial::constant(T::from_int(n))
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{deg}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    type P = Polynomial<Scalar>;

    #[test]
    fn arithmetic_and_eval() {
        // (t - 1)(t - 2) = t^2 - 3t + 2
        let p = (P::var() - P::constant(Scalar::from_int(1)))
            * (P::var() - P::constant(Scalar::from_int(2)));
        assert_eq!(p.coeff(0), Scalar::from_int(2));
        assert_eq!(p.coeff(1), Scalar::from_int(-3));
        assert_eq!(p.coeff(2), Scalar::from_int(1));
        assert!(p.eval(&Scalar::from_int(2)).is_zero());
        assert_eq!(p.eval(&Scalar::from_int(3)), Scalar::from_int(2));
    }

    #[test]
    fn linear_factoring() {
        let p = (P::var() - P::constant(Scalar::from_int(1)))
            * (P::var() - P::constant(Scalar::from_int(2)))
            * (P::var() - P::constant(Scalar::from_int(2)));
        let (factors, rest) = p.factor_at_roots(&[Scalar::from_int(1), Scalar::from_int(2)]);
        assert_eq!(factors[0], (Scalar::from_int(1), 1));
        assert_eq!(factors[1], (Scalar::from_int(2), 2));
        assert!(rest.degree() == Some(0));
    }

    #[test]
    fn no_trailing_zeros() {
        let p = P::from_coeffs(vec![Scalar::from_int(1), Scalar::zero(), Scalar::zero()]);
        assert_eq!(p.degree(), Some(0));
        let q = p.clone() - p;
        assert!(q.is_zero());
        assert_eq!(q.coeffs().len(), 0);
    }
}
