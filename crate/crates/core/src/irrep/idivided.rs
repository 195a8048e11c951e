//! iDivided powers `B_p^(k)` as polynomials in `B` over `Q(q)`.

use serde::Serialize;

use super::matrix::Matrix;
use crate::qlaurent::{q_factorial, q_int, RatFunc};

/// Parity label `p` of an idivided power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

pub(crate) fn qi(k: i64) -> RatFunc {
    RatFunc::from(q_int(k, 1))
}

/// Coefficients of a polynomial in `B`, lowest degree first.
pub type BPoly = Vec<RatFunc>;

fn times_linear(p: &BPoly, root: &RatFunc) -> BPoly {
    let mut out = vec![RatFunc::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] = &out[i + 1] + c;
        out[i] = &out[i] - &(c * root);
    }
    out
}

fn trim(mut p: BPoly) -> BPoly {
    while p.last().is_some_and(RatFunc::is_zero) {
        p.pop();
    }
    p
}

/// `prod_{a in roots} (B - [a])`.
pub fn root_product(roots: impl IntoIterator<Item = i64>) -> BPoly {
    roots.into_iter().fold(vec![RatFunc::one()], |p, a| times_linear(&p, &qi(a)))
}

/// The closed-form definition of `B_p^(k)`, with `B^(0) = 1` for both parities.
pub fn idivided_poly(k: u32, p: Parity) -> BPoly {
    if k == 0 {
        return vec![RatFunc::one()];
    }
    let a = (k / 2) as i64;
    let roots: Vec<i64> = match (p, k % 2) {
        (Parity::Even, 0) => std::iter::once(0).chain((-a + 1..a).map(|b| 2 * b)).collect(),
        (Parity::Even, _) => (-a..=a).map(|b| 2 * b).collect(),
        (Parity::Odd, 0) => (-a + 1..=a).map(|b| 2 * b - 1).collect(),
        (Parity::Odd, _) => std::iter::once(0).chain((-a + 1..=a).map(|b| 2 * b - 1)).collect(),
    };
    let inv = RatFunc::from(q_factorial(k, 1)).inv().expect("q-factorials are nonzero");
    root_product(roots).iter().map(|c| c * &inv).collect()
}

/// `B_p^(0..=max_k)` generated by `B B^(k) = [k+1] B^(k+1) + delta_{p,p(k)} [k] B^(k-1)`.
pub fn idivided_polys_by_recursion(max_k: u32, p: Parity) -> Vec<BPoly> {
    let mut out: Vec<BPoly> = vec![vec![RatFunc::one()]];
    for k in 0..max_k {
        let cur = &out[k as usize];
        let mut next: BPoly = std::iter::once(RatFunc::zero()).chain(cur.iter().cloned()).collect();
        if Parity::of(k as i64) == p && k > 0 {
            let prev = &out[k as usize - 1];
            let c = qi(k as i64);
            for (i, x) in prev.iter().enumerate() {
                next[i] = &next[i] - &(x * &c);
            }
        }
        let inv = qi(k as i64 + 1).inv().expect("[k+1] is nonzero");
        out.push(trim(next.iter().map(|x| x * &inv).collect()));
    }
    out
}

/// Closed forms `B_p^(k) x` for `k = 0..=max_k`, built from the factored numerators.
///
/// Consecutive numerators differ by a factor `B` or `(B - [c])(B + [c])`, so
/// each step costs one or two applications of `b_minus(x, a) = (B - [a]) x`.
pub fn idivided_sequence<T: Clone>(
    max_k: u32,
    p: Parity,
    start: T,
    b_minus: impl Fn(&T, i64) -> T,
    scale: impl Fn(&T, &RatFunc) -> T,
) -> Vec<T> {
    let mut num = vec![start];
    for k in 1..=max_k as i64 {
        let simple = match p {
            Parity::Even => k == 1 || k % 2 == 0,
            Parity::Odd => k % 2 == 1,
        };
        let next = if simple {
            b_minus(&num[k as usize - 1], 0)
        } else {
            let c = k - 1;
            b_minus(&b_minus(&num[k as usize - 2], c), -c)
        };
        num.push(next);
    }
    num.iter()
        .enumerate()
        .map(|(k, x)| {
            let f = RatFunc::from(q_factorial(k as u32, 1)).inv().expect("q-factorials are nonzero");
            scale(x, &f)
        })
        .collect()
}

/// Matrices of the closed forms `B_p^(0..=max_k)`.
pub fn idivided_matrices(b: &Matrix<RatFunc>, max_k: u32, p: Parity) -> Vec<Matrix<RatFunc>> {
    let id = Matrix::identity(b.dim());
    idivided_sequence(
        max_k,
        p,
        id,
        |x, a| {
            let bx = b.mul(x);
            if a == 0 {
                bx
            } else {
                bx.sub(&x.scale(&qi(a)))
            }
        },
        |x, c| x.scale(c),
    )
}

/// `prod_{a in roots} (B - [a])` as a matrix, one factor at a time.
pub fn root_product_matrix(roots: impl IntoIterator<Item = i64>, b: &Matrix<RatFunc>) -> Matrix<RatFunc> {
    roots.into_iter().fold(Matrix::identity(b.dim()), |acc, a| b.mul(&acc).sub(&acc.scale(&qi(a))))
}

/// `p(B)` by Horner's rule.
pub fn eval_matrix_poly(p: &BPoly, b: &Matrix<RatFunc>) -> Matrix<RatFunc> {
    let n = b.dim();
    let mut acc = Matrix::zeros(n);
    for c in p.iter().rev() {
        acc = b.mul(&acc).add(&Matrix::identity(n).scale(c));
    }
    acc
}

/// Matrices `B_p^(0..=max_k)` from the recursion applied to a matrix `B`.
pub fn idivided_matrices_by_recursion(b: &Matrix<RatFunc>, max_k: u32, p: Parity) -> Vec<Matrix<RatFunc>> {
    let n = b.dim();
    let mut out = vec![Matrix::identity(n)];
    for k in 0..max_k {
        let mut next = b.mul(&out[k as usize]);
        if Parity::of(k as i64) == p && k > 0 {
            next = next.sub(&out[k as usize - 1].scale(&qi(k as i64)));
        }
        out.push(next.scale(&qi(k as i64 + 1).inv().expect("[k+1] is nonzero")));
    }
    out
}

/// Whether `B * B^(k) = [k+1] B^(k+1) + delta [k] B^(k-1)` holds for the closed forms, `k < max_k`.
pub fn recursion_holds(max_k: u32, p: Parity) -> Vec<(u32, bool)> {
    let polys: Vec<BPoly> = (0..=max_k).map(|k| idivided_poly(k, p)).collect();
    (0..max_k)
        .map(|k| {
            let lhs: BPoly = std::iter::once(RatFunc::zero()).chain(polys[k as usize].iter().cloned()).collect();
            let mut rhs: BPoly = polys[k as usize + 1].iter().map(|c| c * &qi(k as i64 + 1)).collect();
            if Parity::of(k as i64) == p && k > 0 {
                rhs.resize(rhs.len().max(polys[k as usize - 1].len()), RatFunc::zero());
                for (i, c) in polys[k as usize - 1].iter().enumerate() {
                    rhs[i] = &rhs[i] + &(c * &qi(k as i64));
                }
            }
            (k, trim(lhs) == trim(rhs))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_powers() {
        for p in [Parity::Even, Parity::Odd] {
            assert_eq!(idivided_poly(0, p), vec![RatFunc::one()]);
            assert_eq!(idivided_poly(1, p), vec![RatFunc::zero(), RatFunc::one()]);
        }
        // B_odd^(2) = (B - 1)(B + 1) / [2]
        let inv2 = qi(2).inv().unwrap();
        assert_eq!(idivided_poly(2, Parity::Odd), vec![-&inv2, RatFunc::zero(), inv2.clone()]);
        assert_eq!(idivided_poly(2, Parity::Even), vec![RatFunc::zero(), RatFunc::zero(), inv2]);
    }

    #[test]
    fn factored_sequence_matches_polynomials() {
        // with B = x acting on polynomials the sequence reproduces the closed forms
        for p in [Parity::Even, Parity::Odd] {
            let seq = idivided_sequence(
                9,
                p,
                vec![RatFunc::one()],
                |x: &BPoly, a| trim(times_linear(x, &qi(a))),
                |x, c| x.iter().map(|e| e * c).collect(),
            );
            for (k, poly) in seq.iter().enumerate() {
                assert_eq!(poly, &idivided_poly(k as u32, p), "k={k} p={p:?}");
            }
        }
    }

    #[test]
    fn recursion_matches_closed_form() {
        for p in [Parity::Even, Parity::Odd] {
            assert!(recursion_holds(8, p).iter().all(|&(_, ok)| ok));
            let rec = idivided_polys_by_recursion(8, p);
            for (k, poly) in rec.iter().enumerate() {
                assert_eq!(poly, &idivided_poly(k as u32, p), "k={k} p={p:?}");
            }
        }
    }
}
