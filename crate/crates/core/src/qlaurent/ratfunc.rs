//! Rational functions in `q` over the rationals, with the leading-term
//! calculus at `q = infinity`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Laurent;
use crate::error::{Error, Result};

/// Degree at infinity: `None` encodes `-infinity` (the zero function).
pub type Degree = Option<i64>;

/// An element of `Q(q)` stored as `numerator / denominator`.
///
/// Canonical form: the denominator is a primitive-up-to-shared-content
/// polynomial with nonzero constant term and positive leading coefficient;
/// numerator and denominator are coprime in `Q[q]` and their integer contents
/// are coprime. Any power of `q` lives in the numerator. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

/// Pseudo-remainder of `a` by `b`, both polynomials (low exponent 0).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn primitive_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let c = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !c.is_zero() && !c.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &c;
        }
    }
    v
}

/// Primitive gcd in `Z[q]` of two polynomials with nonzero constant terms.
fn poly_gcd(a: &Laurent, b: &Laurent) -> Laurent {
    let (_, ac) = a.dense();
    let (_, bc) = b.dense();
    let (mut x, mut y) = if ac.len() >= bc.len() {
        (primitive_vec(ac.to_vec()), primitive_vec(bc.to_vec()))
    } else {
        (primitive_vec(bc.to_vec()), primitive_vec(ac.to_vec()))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            return Laurent::one();
        }
        let r = primitive_vec(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    let g = Laurent::from_dense(0, x);
    if g.leading_coeff().is_negative() {
        -g
    } else {
        g
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        Self::from(Laurent::one())
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from(Laurent::q_pow(k))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(Laurent::from(r.numer().clone()), Laurent::from(r.denom().clone()))
            .expect("rational denominators are nonzero")
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Laurent, den: Laurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = num.low_degree().unwrap() - den.low_degree().unwrap();
        let mut n = num.shift(-num.low_degree().unwrap());
        let mut d = den.shift(-den.low_degree().unwrap());
        if d.degree() != Some(0) {
            let g = poly_gcd(&n, &d);
            if !g.is_one() {
                n = n.div_exact(&g).expect("gcd divides numerator");
                d = d.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let c = n.content().gcd(&d.content());
        let sign = if d.leading_coeff().is_negative() { -BigInt::one() } else { BigInt::one() };
        let factor = c * &sign;
        if !factor.is_one() {
            let (nl, nc) = n.dense();
            n = Laurent::from_dense(nl, nc.iter().map(|x| x / &factor).collect());
            let (dl, dc) = d.dense();
            d = Laurent::from_dense(dl, dc.iter().map(|x| x / &factor).collect());
        }
        RatFunc { num: n.shift(shift), den: d }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is a unit of `Z[q, q^-1]`.
    pub fn as_laurent(&self) -> Option<Laurent> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Degree at infinity: `deg(num) - deg(den)`, `None` for zero.
    pub fn degree(&self) -> Degree {
        Some(self.num.degree()? - self.den.degree().unwrap())
    }

    /// Leading coefficient at infinity (zero for zero).
    pub fn lc(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(self.num.leading_coeff(), self.den.leading_coeff())
    }

    /// Leading term `lc * q^deg` as a rational function.
    pub fn lt(&self) -> RatFunc {
        match self.degree() {
            None => Self::zero(),
            Some(d) => &Self::from_rational(&self.lc()) * &Self::q_pow(d),
        }
    }

    /// `(deg, lc, lt)` in one call.
    pub fn deg_lc_lt(&self) -> (Degree, BigRational, RatFunc) {
        (self.degree(), self.lc(), self.lt())
    }

    /// True when the function is regular at `q = infinity`.
    pub fn in_k_infinity(&self) -> bool {
        self.degree().is_none_or(|d| d <= 0)
    }

    /// Constant term of the expansion in `q^{-1}`.
    pub fn ev_infinity(&self) -> Result<BigRational> {
        match self.degree() {
            None => Ok(BigRational::zero()),
            Some(d) if d > 0 => Err(Error::NotInLattice { degree: d }),
            Some(0) => Ok(self.lc()),
            Some(_) => Ok(BigRational::zero()),
        }
    }

    /// Exact value at `q = 1`, if the denominator does not vanish there.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let d = self.den.eval_at_one();
        (!d.is_zero()).then(|| BigRational::new(self.num.eval_at_one(), d))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Laurent> for RatFunc {
    fn from(p: Laurent) -> Self {
        RatFunc::canonical(p, Laurent::one())
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from(Laurent::constant(c))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: Laurent::one() };
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::inv`] for a fallible version.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::canonical(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
