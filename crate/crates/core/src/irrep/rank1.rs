//! The `(l+1)`-dimensional module `V(l)` restricted to the rank-one
//! coideal generated by `B = F + q^{-1} E K^{-1}`.
//!
//! `V(l)` is built from its `U_q(sl_2)` weight basis `v_0, ..., v_l`, so the
//! iDivided-power basis and the recursion are checked against an honest action.

use serde::Serialize;

use super::idivided::{idivided_matrices, qi, root_product_matrix, Parity};
use super::matrix::Matrix;
use super::Check;
use crate::qlaurent::RatFunc;

#[derive(Clone, Debug)]
pub struct Rank1Module {
    pub l: u32,
    /// `B` on the weight basis.
    pub b: Matrix<RatFunc>,
    /// Column `k` is `B_{p(l)}^(k) v_0` in the weight basis.
    pub divided_basis: Matrix<RatFunc>,
    /// `B` on the iDivided-power basis, read off the recursion.
    pub b_recursive: Matrix<RatFunc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Rank1Report {
    pub l: u32,
    pub checks: Vec<Check>,
}

impl Rank1Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl Rank1Module {
    pub fn new(l: u32) -> Self {
        let dim = l as usize + 1;
        let li = l as i64;
        let mut b = Matrix::zeros(dim);
        for j in 0..dim {
            let ji = j as i64;
            if j + 1 < dim {
                b.set(j + 1, j, qi(ji + 1));
            }
            if j > 0 {
                b.set(j - 1, j, &RatFunc::q_pow(2 * ji - li - 1) * &qi(li - ji + 1));
            }
        }
        let p = Parity::of(li);
        let mut divided_basis = Matrix::zeros(dim);
        for (k, op) in idivided_matrices(&b, l, p).iter().enumerate() {
            for r in 0..dim {
                divided_basis.set(r, k, op.get(r, 0).clone());
            }
        }
        let mut b_recursive = Matrix::zeros(dim);
        for k in 0..dim {
            let ki = k as i64;
            if k + 1 < dim {
                b_recursive.set(k + 1, k, qi(ki + 1));
            }
            if k > 0 && Parity::of(ki) == p {
                b_recursive.set(k - 1, k, qi(ki));
            }
        }
        Rank1Module { l, b, divided_basis, b_recursive }
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.l as i64)
    }

    /// `B_{p(l)}^(k)` as an operator on `V(l)`.
    pub fn idivided(&self, k: u32) -> Matrix<RatFunc> {
        idivided_matrices(&self.b, k, self.parity()).pop().expect("sequence is nonempty")
    }

    /// The eigenvalue exponents `a in [-l, l]` with `a = l mod 2`.
    pub fn expected_spectrum(&self) -> Vec<i64> {
        let l = self.l as i64;
        (-l..=l).step_by(2).collect()
    }

    pub fn verify(&self) -> Rank1Report {
        let l = self.l;
        let dim = l as usize + 1;
        let mut checks = Vec::new();
        let bv = |name: &str, pass: bool| Check { name: name.into(), k: None, pass };

        checks.push(bv("annihilation", self.idivided(l + 1).is_zero()));

        let spectrum = self.expected_spectrum();
        let full = root_product_matrix(spectrum.iter().copied(), &self.b);
        checks.push(bv("minimal_polynomial", full.is_zero()));
        for (i, a) in spectrum.iter().enumerate() {
            let others = spectrum.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x);
            let partial = root_product_matrix(others, &self.b);
            checks.push(Check { name: "eigenvalue_present".into(), k: Some(*a), pass: !partial.is_zero() });
        }

        let w = &self.divided_basis;
        let unitriangular = (0..dim).all(|r| {
            (0..dim).all(|c| {
                let x = w.get(r, c);
                if r == c {
                    x.is_one()
                } else if r > c {
                    x.is_zero()
                } else {
                    true
                }
            })
        });
        checks.push(bv("divided_basis", unitriangular));
        checks.push(bv("recursion_action", self.b.mul(w) == w.mul(&self.b_recursive)));
        Rank1Report { l, checks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irrep::matrix::Ring;

    #[test]
    fn small_cases() {
        let m = Rank1Module::new(0);
        assert!(m.b.is_zero());
        let m = Rank1Module::new(1);
        assert_eq!(m.expected_spectrum(), vec![-1, 1]);
        // det(B) = -1 and tr(B) = 0 on the 2-dim module
        let det = m.b.get(0, 0).mul(m.b.get(1, 1)).sub(&m.b.get(0, 1).mul(m.b.get(1, 0)));
        assert_eq!(det, RatFunc::from(-1));
        assert_eq!(Rank1Module::new(2).expected_spectrum(), vec![-2, 0, 2]);
        for l in 0..5 {
            let r = Rank1Module::new(l).verify();
            assert!(r.passed(), "{r:?}");
        }
    }
}
