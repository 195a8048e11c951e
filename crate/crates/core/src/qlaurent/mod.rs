//! Exact arithmetic in `Z[q, q^-1]`, `Q(q)` and `Q(q)(sqrt 2)`.

mod laurent;
mod qnum;
mod ratfunc;
mod sqrt2;

pub use laurent::Laurent;
pub use qnum::{q_binomial, q_brace, q_factorial, q_int};
pub use ratfunc::{Degree, RatFunc};
pub use sqrt2::{Sqrt2Rational, Sqrt2Scalar};

/// `q -> q^{-1}` on any of the scalar types.
pub trait Bar {
    fn bar(&self) -> Self;
}

impl Bar for Laurent {
    fn bar(&self) -> Self {
        Laurent::bar(self)
    }
}

impl Bar for RatFunc {
    fn bar(&self) -> Self {
        RatFunc::bar(self)
    }
}

impl Bar for Sqrt2Scalar {
    fn bar(&self) -> Self {
        Sqrt2Scalar::bar(self)
    }
}

pub fn bar<T: Bar>(x: &T) -> T {
    x.bar()
}
