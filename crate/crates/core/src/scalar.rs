//! Exact scalars: elements of the cyclotomic field Q(z) with z a primitive
//! 24th root of unity, represented on the power basis 1, z, ..., z^7 modulo
//! z^8 = z^4 - 1.
//!
//! The field contains i = z^6, the cube roots of unity (z^8) and the roots
//! of unity of every order dividing 24, which covers every character value
//! produced by the shipped groups. Values that matter for reports are
//! Gaussian rationals and are serialized as "p/q" or "p/q+r/s*i".

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

pub const DEG: usize = 8;

/// z^k reduced to the power basis; entries are always in {-1, 0, 1}.
fn pow_vec(k: usize) -> [i64; DEG] {
    let k = k % 24;
    let mut v = [0i64; DEG];
    if k < 8 {
        v[k] = 1;
    } else if k < 12 {
        v[k - 4] = 1;
        v[k - 8] = -1;
    } else {
        let inner = pow_vec(k - 12);
        for j in 0..DEG {
            v[j] = -inner[j];
        }
    }
    v
}

/// An exact element of Q(z24).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    c: [BigRational; DEG],
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            c: Default::default(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut s = Scalar::zero();
        s.c[0] = BigRational::from_integer(BigInt::from(n));
        s
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut s = Scalar::zero();
        s.c[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        s
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut s = Scalar::zero();
        s.c[0] = q;
        s
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        let mut s = Scalar::zero();
        s.c[0] = re;
        s.c[6] = im;
        s
    }

    pub fn i() -> Self {
        let mut s = Scalar::zero();
        s.c[6] = BigRational::one();
        s
    }

    /// A primitive n-th root of unity, for n dividing 24.
    pub fn root_of_unity(n: u64) -> Result<Self, ScalarError> {
        if n == 0 || 24 % n != 0 {
            return Err(ScalarError::UnsupportedRootOrder(n));
        }
        let mut s = Scalar::zero();
        let v = pow_vec((24 / n) as usize);
        for j in 0..DEG {
            s.c[j] = BigRational::from_integer(BigInt::from(v[j]));
        }
        Ok(s)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|q| q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|q| q.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|q| q.is_zero())
    }

    pub fn is_gaussian(&self) -> bool {
        (1..DEG).all(|j| j == 6 || self.c[j].is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// (re, im) when the value lies in Q(i).
    pub fn gaussian_parts(&self) -> Option<(BigRational, BigRational)> {
        if self.is_gaussian() {
            Some((self.c[0].clone(), self.c[6].clone()))
        } else {
            None
        }
    }

    pub fn is_nonneg_rational(&self) -> bool {
        self.as_rational().map(|q| !q.is_negative()).unwrap_or(false)
    }

    /// Complex conjugation, z -> z^-1.
    pub fn conj(&self) -> Self {
        let mut out = Scalar::zero();
        for j in 0..DEG {
            if self.c[j].is_zero() {
                continue;
            }
            let v = pow_vec((24 - j) % 24);
            for (k, &e) in v.iter().enumerate() {
                match e {
                    1 => out.c[k] += &self.c[j],
                    -1 => out.c[k] -= &self.c[j],
                    _ => {}
                }
            }
        }
        out
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Scalar::from_rational(self.c[0].recip()));
        }
        if let Some((re, im)) = self.gaussian_parts() {
            let n = &re * &re + &im * &im;
            return Some(Scalar::gaussian(&re / &n, -(&im / &n)));
        }
        self.inv_general()
    }

    /// Solve (mult-by-self) x = 1 over the power basis.
    fn inv_general(&self) -> Option<Self> {
        // column k of m is self * z^k
        let mut m = vec![vec![BigRational::zero(); DEG]; DEG];
        for k in 0..DEG {
            for j in 0..DEG {
                if self.c[j].is_zero() {
                    continue;
                }
                let v = pow_vec(j + k);
                for (row, &e) in v.iter().enumerate() {
                    match e {
                        1 => m[row][k] += &self.c[j],
                        -1 => m[row][k] -= &self.c[j],
                        _ => {}
                    }
                }
            }
        }
        let mut rhs = vec![BigRational::zero(); DEG];
        rhs[0] = BigRational::one();
        solve_rational(&mut m, &mut rhs)?;
        let mut out = Scalar::zero();
        out.c.clone_from_slice(&rhs);
        Some(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn solve_rational(m: &mut [Vec<BigRational>], rhs: &mut [BigRational]) -> Option<()> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = m[col][col].clone();
        for j in col..n {
            m[col][j] = &m[col][j] / &p;
        }
        rhs[col] = &rhs[col] / &p;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in col..n {
                let sub = &f * &m[col][j];
                m[r][j] = &m[r][j] - sub;
            }
            let sub = &f * &rhs[col];
            rhs[r] = &rhs[r] - sub;
        }
    }
    Some(())
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("no primitive root of unity of order {0} in Q(z24)")]
    UnsupportedRootOrder(u64),
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((re, im)) = self.gaussian_parts() {
            if im.is_zero() {
                return write!(f, "{re}");
            }
            if im.is_negative() {
                return write!(f, "{re}-{}*i", -im);
            }
            return write!(f, "{re}+{im}*i");
        }
        // not Gaussian: fall back to the power-basis expansion
        let mut first = true;
        for (j, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if q.is_negative() { "-" } else { "+" })?;
            } else if q.is_negative() {
                write!(f, "-")?;
            }
            let a = q.abs();
            if j == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "z24^{j}")?;
            } else {
                write!(f, "{a}*z24^{j}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ScalarError::Parse(s.to_string());
        let parse_rat = |t: &str| -> Result<BigRational, ScalarError> {
            let t = t.trim();
            if let Some((n, d)) = t.split_once('/') {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            } else {
                let n: BigInt = t.parse().map_err(|_| bad())?;
                Ok(BigRational::from_integer(n))
            }
        };
        if let Some(im_str) = s.strip_suffix("*i") {
            // split at the sign separating re and im; skip a leading sign
            let body = im_str;
            let mut split_at = None;
            for (idx, ch) in body.char_indices().skip(1) {
                if (ch == '+' || ch == '-') && !matches!(&body[idx - 1..idx], "/" | "e") {
                    split_at = Some(idx);
                }
            }
            if let Some(idx) = split_at {
                let re = parse_rat(&body[..idx])?;
                let sign = if body[idx..].starts_with('-') { -1 } else { 1 };
                let im = parse_rat(&body[idx + 1..])? * BigRational::from_integer(BigInt::from(sign));
                return Ok(Scalar::gaussian(re, im));
            }
            let im = parse_rat(body)?;
            return Ok(Scalar::gaussian(BigRational::zero(), im));
        }
        if s == "i" {
            return Ok(Scalar::i());
        }
        Ok(Scalar::from_rational(parse_rat(s)?))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl<'a> Add<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        for j in 0..DEG {
            if !rhs.c[j].is_zero() {
                out.c[j] += &rhs.c[j];
            }
        }
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for j in 0..DEG {
            if !rhs.c[j].is_zero() {
                self.c[j] += &rhs.c[j];
            }
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl<'a> Sub<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        for j in 0..DEG {
            if !rhs.c[j].is_zero() {
                out.c[j] -= &rhs.c[j];
            }
        }
        out
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = Scalar::zero();
        for j in 0..DEG {
            if !self.c[j].is_zero() {
                out.c[j] = -self.c[j].clone();
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for j in 0..DEG {
            if self.c[j].is_zero() {
                continue;
            }
            for k in 0..DEG {
                if rhs.c[k].is_zero() {
                    continue;
                }
                let prod = &self.c[j] * &rhs.c[k];
                let v = pow_vec(j + k);
                for (row, &e) in v.iter().enumerate() {
                    match e {
                        1 => out.c[row] += &prod,
                        -1 => out.c[row] -= &prod,
                        _ => {}
                    }
                }
            }
        }
        out
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        &self * &inv
    }
}

impl num_traits::Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl num_traits::One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squares_to_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn omega_cubes_to_one() {
        let w = Scalar::root_of_unity(3).unwrap();
        assert!(!w.is_one());
        assert!(w.pow(3).is_one());
        // 1 + w + w^2 = 0
        let sum = &(&Scalar::one() + &w) + &w.pow(2);
        assert!(sum.is_zero());
    }

    #[test]
    fn sqrt2_from_z24() {
        // z^3 + z^-3 = 2 cos(pi/4) = sqrt 2
        let z3 = Scalar::root_of_unity(8).unwrap();
        let s = &z3 + &z3.conj();
        assert_eq!(&s * &s, Scalar::from_int(2));
        assert!(s.is_real());
    }

    #[test]
    fn conj_is_involution_and_multiplicative() {
        let z = Scalar::root_of_unity(24).unwrap();
        let a = &z.pow(5) + &Scalar::from_ratio(3, 7);
        let b = &z.pow(11) - &Scalar::i();
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn general_inverse() {
        let z = Scalar::root_of_unity(24).unwrap();
        let a = &z.pow(7) + &Scalar::from_int(2);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn display_round_trip() {
        for s in [
            Scalar::from_ratio(-1, 2),
            Scalar::from_int(3),
            Scalar::gaussian(
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::new(BigInt::from(-3), BigInt::from(4)),
            ),
            Scalar::i(),
        ] {
            let text = s.to_string();
            let back: Scalar = text.parse().unwrap();
            assert_eq!(back, s, "round trip of {text}");
        }
    }

    #[test]
    fn root_order_must_divide_24() {
        assert!(Scalar::root_of_unity(5).is_err());
        assert!(Scalar::root_of_unity(24).is_ok());
    }
}
