//! Scalars of the form `a + b sqrt(2)` with `a, b` in `Q(q)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::ratfunc::Degree;
use super::RatFunc;
use crate::error::{Error, Result};

/// `a + b sqrt(2)`; real arithmetic, so no conjugation is involved in inner products.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Sqrt2Scalar {
    pub a: RatFunc,
    pub b: RatFunc,
}

/// An element `a + b sqrt(2)` of `Q(sqrt 2)`: the value of a [`Sqrt2Scalar`] at `q = infinity`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Sqrt2Rational {
    pub a: BigRational,
    pub b: BigRational,
}

impl Sqrt2Rational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Sqrt2Rational { a, b }
    }

    pub fn integer(a: i64) -> Self {
        Sqrt2Rational { a: BigRational::from_integer(a.into()), b: BigRational::zero() }
    }

    pub fn sqrt2_times(b: i64) -> Self {
        Sqrt2Rational { a: BigRational::zero(), b: BigRational::from_integer(b.into()) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => write!(f, "{} + {}*sqrt2", self.a, self.b),
        }
    }
}

impl fmt::Debug for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Sqrt2Scalar {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        Sqrt2Scalar { a, b }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(RatFunc::one())
    }

    /// `sqrt(2)` itself.
    pub fn sqrt2() -> Self {
        Sqrt2Scalar { a: RatFunc::zero(), b: RatFunc::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Multiplicative inverse via `(a - b sqrt2) / (a^2 - 2 b^2)`; the norm
    /// vanishes only at zero because `sqrt 2` is irrational.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &(&self.a * &self.a) - &(&RatFunc::from(2) * &(&self.b * &self.b));
        let ninv = norm.inv()?;
        Ok(Sqrt2Scalar { a: &self.a * &ninv, b: -(&self.b * &ninv) })
    }

    /// Coefficientwise `q -> q^{-1}`; `sqrt 2` is fixed.
    pub fn bar(&self) -> Self {
        Sqrt2Scalar { a: self.a.bar(), b: self.b.bar() }
    }

    /// Leading terms of `a` and `b` cannot cancel, so the degree is the larger one.
    pub fn degree(&self) -> Degree {
        self.a.degree().max(self.b.degree())
    }

    pub fn lc(&self) -> Sqrt2Rational {
        let d = self.degree();
        let pick = |x: &RatFunc| if x.degree() == d { x.lc() } else { BigRational::zero() };
        Sqrt2Rational { a: pick(&self.a), b: pick(&self.b) }
    }

    pub fn ev_infinity(&self) -> Result<Sqrt2Rational> {
        Ok(Sqrt2Rational { a: self.a.ev_infinity()?, b: self.b.ev_infinity()? })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Sqrt2Scalar { a: &self.a * c, b: &self.b * c }
    }
}

impl From<RatFunc> for Sqrt2Scalar {
    fn from(a: RatFunc) -> Self {
        Sqrt2Scalar { a, b: RatFunc::zero() }
    }
}

impl From<i64> for Sqrt2Scalar {
    fn from(c: i64) -> Self {
        Self::from(RatFunc::from(c))
    }
}

impl Add for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn add(self, rhs: &Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn sub(self, rhs: &Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn mul(self, rhs: &Sqrt2Scalar) -> Sqrt2Scalar {
        let two = RatFunc::from(2);
        Sqrt2Scalar {
            a: &(&self.a * &rhs.a) + &(&two * &(&self.b * &rhs.b)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Neg for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn neg(self) -> Sqrt2Scalar {
        Sqrt2Scalar { a: -&self.a, b: -&self.b }
    }
}

impl fmt::Display for Sqrt2Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "[{}] + [{}]*sqrt2", self.a, self.b)
        }
    }
}

impl fmt::Debug for Sqrt2Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sqrt2Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::Laurent;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Sqrt2Scalar::sqrt2();
        assert_eq!(&s * &s, Sqrt2Scalar::from(2));
    }

    #[test]
    fn inverse_round_trip() {
        let x = Sqrt2Scalar::new(RatFunc::from(Laurent::from_terms([(1, 1), (0, 3)])), RatFunc::from(-2));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Sqrt2Scalar::one());
        assert!(Sqrt2Scalar::zero().inv().is_err());
    }

    #[test]
    fn degree_and_evaluation() {
        let x = Sqrt2Scalar::new(RatFunc::q_pow(-1), RatFunc::from(3));
        assert_eq!(x.degree(), Some(0));
        assert_eq!(x.ev_infinity().unwrap(), Sqrt2Rational::sqrt2_times(3));
        let y = Sqrt2Scalar::new(RatFunc::q_pow(2), RatFunc::from(3));
        assert!(y.ev_infinity().is_err());
    }
}
