//! The irreducible `so_3`-type module `V(nu)` of the rank-two coideal, on
//! the basis `Y^(k) v` for `k in [0, 2 nu]`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::idivided::{idivided_matrices, idivided_sequence, qi, Parity};
use super::matrix::Matrix;
use crate::error::Result;
use crate::qlaurent::{q_binomial, q_brace, RatFunc, Sqrt2Rational, Sqrt2Scalar};

fn brace(a: i64) -> RatFunc {
    RatFunc::from(q_brace(a))
}

/// Operators of `V(nu)`; every matrix is over `Q(q)`.
#[derive(Clone, Debug)]
pub struct Rank2Module {
    pub nu: u32,
}

impl Rank2Module {
    pub fn new(nu: u32) -> Self {
        Rank2Module { nu }
    }

    pub fn dim(&self) -> usize {
        2 * self.nu as usize + 1
    }

    fn nu_i(&self) -> i64 {
        self.nu as i64
    }

    fn diag(&self, f: impl Fn(i64) -> RatFunc) -> Matrix<RatFunc> {
        Matrix::diagonal((0..self.dim() as i64).map(|k| f(self.nu_i() - k)).collect())
    }

    /// `l` acts by `q^{nu-k}`.
    pub fn act_l(&self) -> Matrix<RatFunc> {
        self.diag(RatFunc::q_pow)
    }

    /// `B_1` acts by `[nu-k]`.
    pub fn act_b1(&self) -> Matrix<RatFunc> {
        self.diag(qi)
    }

    /// `{l; s}` acts by `q^{s+nu-k} + q^{-s-(nu-k)}`.
    pub fn act_l_brace(&self, s: i64) -> Matrix<RatFunc> {
        self.diag(|w| brace(w + s))
    }

    /// `Y Y^(k) v = [k+1] Y^(k+1) v`, truncated at `2 nu`.
    pub fn act_y(&self) -> Matrix<RatFunc> {
        let mut m = Matrix::zeros(self.dim());
        for k in 0..self.dim() - 1 {
            m.set(k + 1, k, qi(k as i64 + 1));
        }
        m
    }

    /// `X Y^(k) v = [2 nu - k + 1] Y^(k-1) v`.
    pub fn act_x(&self) -> Matrix<RatFunc> {
        let mut m = Matrix::zeros(self.dim());
        for k in 1..self.dim() {
            m.set(k - 1, k, qi(2 * self.nu_i() - k as i64 + 1));
        }
        m
    }

    /// `B_2 = (X + Y) {l;0}^{-1}`.
    pub fn act_b2(&self) -> Matrix<RatFunc> {
        let inv = self.diag(|w| brace(w).inv().expect("{a} is never zero"));
        self.act_x().add(&self.act_y()).mul(&inv)
    }

    /// `B_{2,p}^(k)` from its closed form.
    pub fn idivided_b2(&self, k: u32, p: Parity) -> Matrix<RatFunc> {
        idivided_matrices(&self.act_b2(), k, p).pop().expect("sequence is nonempty")
    }

    /// `B_{2,p}^(k) u` for `k = 0..=max_k`.
    pub fn idivided_b2_on(&self, u: &ModuleVector, max_k: u32, p: Parity) -> Vec<ModuleVector> {
        let b2 = self.act_b2();
        idivided_sequence(
            max_k,
            p,
            u.clone(),
            |x, a| {
                let bx = x.apply(&b2);
                if a == 0 {
                    bx
                } else {
                    bx.add(&x.scale(&Sqrt2Scalar::from(-qi(a))))
                }
            },
            |x, c| x.scale(&Sqrt2Scalar::from(c.clone())),
        )
    }

    /// `(Y^(k1) v, Y^(k2) v)`: zero off the diagonal, `[2nu, k] {nu} / {nu-k}` on it.
    pub fn gram(&self, k1: usize, k2: usize) -> RatFunc {
        if k1 != k2 {
            return RatFunc::zero();
        }
        let nu = self.nu_i();
        let k = k1 as i64;
        let num = &RatFunc::from(q_binomial(2 * self.nu, k1 as u32, 1)) * &brace(nu);
        &num * &brace(nu - k).inv().expect("{a} is never zero")
    }

    pub fn gram_diagonal(&self) -> Vec<RatFunc> {
        (0..self.dim()).map(|k| self.gram(k, k)).collect()
    }

    /// `deg(Y^(k) v) = ((2nu - k) k + nu - |nu - k|) / 2`.
    pub fn degree_of_basis(&self, k: usize) -> i64 {
        let nu = self.nu_i();
        let k = k as i64;
        ((2 * nu - k) * k + nu - (nu - k).abs()) / 2
    }

    /// Normalizer `c_k` with `Y~^k v = c_k Y^(k) v`.
    pub fn normalizer(&self, k: usize) -> Sqrt2Scalar {
        let nu = self.nu_i();
        let k = k as i64;
        let prod = |upto: i64| {
            (0..upto).fold(RatFunc::one(), |acc, j| &acc * &brace(nu - j).inv().expect("{a} is never zero"))
        };
        if nu == 0 {
            Sqrt2Scalar::one()
        } else if k < nu {
            prod(k).into()
        } else if k == nu {
            Sqrt2Scalar::new(RatFunc::zero(), prod(nu))
        } else {
            prod(2 * nu - k).into()
        }
    }

    pub fn basis_vector(&self, k: usize) -> ModuleVector {
        let mut coeffs = vec![Sqrt2Scalar::zero(); self.dim()];
        coeffs[k] = Sqrt2Scalar::one();
        ModuleVector { nu: self.nu, coeffs }
    }

    pub fn inner(&self, u: &ModuleVector, v: &ModuleVector) -> Sqrt2Scalar {
        let g = self.gram_diagonal();
        u.coeffs.iter().zip(&v.coeffs).zip(&g).fold(Sqrt2Scalar::zero(), |acc, ((a, b), gk)| &acc + &(a * b).scale(gk))
    }

    /// Coordinates of `v` at `q = infinity` in the basis `Y~^k b_nu`.
    pub fn ev_infty_vector(&self, v: &ModuleVector) -> Result<Vec<Sqrt2Rational>> {
        v.coeffs.iter().enumerate().map(|(k, a)| (a * &self.normalizer(k).inv()?).ev_infinity()).collect()
    }

    /// `v + Y^(2nu) v` (`sign = 1`) or `v - Y^(2nu) v` (`sign = -1`).
    pub fn seed(&self, sign: i64) -> ModuleVector {
        let mut coeffs = vec![Sqrt2Scalar::zero(); self.dim()];
        coeffs[0] = &coeffs[0] + &Sqrt2Scalar::one();
        let last = self.dim() - 1;
        coeffs[last] = &coeffs[last] + &Sqrt2Scalar::from(sign);
        ModuleVector { nu: self.nu, coeffs }
    }

    /// `B_{2,p(nu)}^(k) (v + Y^(2nu) v)` for `plus`, `B_{2,q(nu)}^(k) (v - Y^(2nu) v)` otherwise.
    pub fn candidate(&self, plus: bool, k: u32) -> ModuleVector {
        let p = Parity::of(self.nu_i());
        let (parity, sign) = if plus { (p, 1) } else { (p.flip(), -1) };
        self.idivided_b2_on(&self.seed(sign), k, parity).pop().expect("sequence is nonempty")
    }

    /// Expected `q = infinity` image of a candidate: `Y~^k + Y~^{2nu-k}` (plus) or
    /// `Y~^k - Y~^{2nu-k}` (minus), where the middle plus node is `sqrt2 Y~^nu` for `nu > 0`.
    pub fn expected_ev(&self, plus: bool, k: usize) -> Vec<Sqrt2Rational> {
        let mut out = vec![Sqrt2Rational::default(); self.dim()];
        let nu = self.nu as usize;
        let one = BigRational::one();
        if k == nu && plus {
            out[k] = if nu == 0 { Sqrt2Rational::integer(2) } else { Sqrt2Rational::new(BigRational::zero(), one) };
            return out;
        }
        out[k] = Sqrt2Rational::new(one.clone(), BigRational::zero());
        out[2 * nu - k] = Sqrt2Rational::new(if plus { one } else { -one }, BigRational::zero());
        out
    }
}

/// A vector of `V(nu)` in the basis `Y^(k) v`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector {
    pub nu: u32,
    pub coeffs: Vec<Sqrt2Scalar>,
}

impl ModuleVector {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Sqrt2Scalar::is_zero)
    }

    pub fn apply(&self, m: &Matrix<RatFunc>) -> ModuleVector {
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|i| {
                (0..n).fold(Sqrt2Scalar::zero(), |acc, j| {
                    let e = m.get(i, j);
                    if e.is_zero() {
                        acc
                    } else {
                        &acc + &self.coeffs[j].scale(e)
                    }
                })
            })
            .collect();
        ModuleVector { nu: self.nu, coeffs }
    }

    pub fn scale(&self, c: &Sqrt2Scalar) -> ModuleVector {
        ModuleVector { nu: self.nu, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, o: &ModuleVector) -> ModuleVector {
        ModuleVector { nu: self.nu, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    /// The bar involution: coefficients go to `q -> q^{-1}`, basis vectors stay fixed.
    pub fn bar_vector(&self) -> ModuleVector {
        ModuleVector { nu: self.nu, coeffs: self.coeffs.iter().map(Sqrt2Scalar::bar).collect() }
    }
}
