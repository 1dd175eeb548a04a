//! Minimal algebraic traits the generic matrix/polynomial code is written
//! against. `Scalar` is the only field; polynomials are a ring.

use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc + one.clone();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

/// Entrywise conjugation (identity on real rings, complex conjugation on
/// scalars, coefficientwise on polynomials).
pub trait Conj {
    fn conj(&self) -> Self;
}

pub trait Field: Ring {
    /// Multiplicative inverse; None for zero.
    fn try_inv(&self) -> Option<Self>
    where
        Self: Sized;
}

impl Ring for crate::scalar::Scalar {
    fn from_int(n: i64) -> Self {
        crate::scalar::Scalar::from_int(n)
    }
}

impl Conj for crate::scalar::Scalar {
    fn conj(&self) -> Self {
        crate::scalar::Scalar::conj(self)
    }
}

impl Field for crate::scalar::Scalar {
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}
