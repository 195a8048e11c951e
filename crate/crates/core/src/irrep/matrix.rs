//! Dense square matrices over exact scalar rings.

use std::fmt;

use crate::qlaurent::{Bar, RatFunc, Sqrt2Scalar};

/// The ring operations the matrix code needs.
pub trait Ring: Clone + PartialEq + fmt::Debug + Bar {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for Sqrt2Scalar {
    fn zero() -> Self {
        Sqrt2Scalar::zero()
    }
    fn one() -> Self {
        Sqrt2Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Sqrt2Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// Row-major `dim x dim` matrix acting on column vectors; column `k` is the image of basis vector `k`.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.dim + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, T::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, T::sub)
    }

    fn zip(&self, o: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        Matrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn bar(&self) -> Self {
        self.map(Bar::bar)
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        (0..self.dim).map(|i| (0..self.dim).fold(T::zero(), |acc, j| acc.add(&self.get(i, j).mul(&v[j])))).collect()
    }

    /// `[x, y]_s = xy - s yx`.
    pub fn bracket(&self, o: &Self, s: &T) -> Self {
        self.mul(o).sub(&o.mul(self).scale(s))
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.data.chunks(self.dim.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_brackets() {
        let a = Matrix::diagonal(vec![RatFunc::q_pow(1), RatFunc::from(2)]);
        let mut b = Matrix::<RatFunc>::zeros(2);
        b.set(0, 1, RatFunc::one());
        assert_eq!(a.mul(&Matrix::identity(2)), a);
        // [a, b]_1 = (q - 2) E_12
        let c = a.bracket(&b, &RatFunc::one());
        assert_eq!(*c.get(0, 1), &RatFunc::q_pow(1) - &RatFunc::from(2));
        assert_eq!(b.transpose().apply(&[RatFunc::one(), RatFunc::zero()]), vec![RatFunc::zero(), RatFunc::one()]);
        assert_eq!(a.bar().bar(), a);
    }
}
