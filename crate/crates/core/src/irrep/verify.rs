//! Exact checks of the based-module structure of `V(nu)` and of the
//! `B~_1`, `B~_2` graphs on `L(nu) / q^{-1} L(nu)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::idivided::{idivided_matrices, idivided_matrices_by_recursion, qi, BPoly, Parity};
use super::matrix::Matrix;
use super::rank2::{ModuleVector, Rank2Module};
use super::Check;
use crate::qlaurent::{RatFunc, Sqrt2Rational, Sqrt2Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub nu: u32,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn push(&mut self, name: &str, k: Option<i64>, pass: bool) {
        self.checks.push(Check { name: name.into(), k, pass });
    }
}

/// `p(B) v` by Horner's rule on the vector.
pub fn apply_poly(p: &BPoly, b: &Matrix<RatFunc>, v: &ModuleVector) -> ModuleVector {
    let mut acc = v.scale(&Sqrt2Scalar::zero());
    for c in p.iter().rev() {
        acc = acc.apply(b).add(&v.scale(&Sqrt2Scalar::from(c.clone())));
    }
    acc
}

fn sqrt2_dot(a: &[Sqrt2Rational], b: &[Sqrt2Rational]) -> Sqrt2Rational {
    let mut out = Sqrt2Rational::default();
    for (x, y) in a.iter().zip(b) {
        out.a += &x.a * &y.a + (&x.b * &y.b) * num_rational::BigRational::from_integer(2.into());
        out.b += &x.a * &y.b + &x.b * &y.a;
    }
    out
}

/// A vertex of the `q = infinity` graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Node {
    /// `Y~^k b + Y~^{2nu-k} b` for `k < nu`, `sqrt2 Y~^nu b` for `k = nu`.
    Plus(u32),
    /// `Y~^k b - Y~^{2nu-k} b`, `k < nu`.
    Minus(u32),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Plus(k) => write!(f, "+{k}"),
            Node::Minus(k) => write!(f, "-{k}"),
        }
    }
}

/// Targets of `B~_1` and `B~_2` on every node; `None` means zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BTildeGraph {
    pub nu: u32,
    pub b1: BTreeMap<Node, Option<Node>>,
    pub b2: BTreeMap<Node, Option<Node>>,
}

impl BTildeGraph {
    /// Undirected edges `(i, from, to)` with `from <= to`.
    pub fn edges(&self) -> Vec<(u8, Node, Node)> {
        let mut out = Vec::new();
        for (i, map) in [(1u8, &self.b1), (2, &self.b2)] {
            for (&a, &b) in map {
                if let Some(b) = b {
                    if a <= b {
                        out.push((i, a, b));
                    }
                }
            }
        }
        out
    }
}

fn nodes(nu: u32) -> Vec<Node> {
    (0..=nu).map(Node::Plus).chain((0..nu).map(Node::Minus)).collect()
}

/// The graph predicted by the case formulas for `B~_1`, `B~_2` on `L(nu)` at infinity.
pub fn predicted_btilde_graph(nu: u32) -> BTildeGraph {
    let n = nu as i64;
    let mut b1 = BTreeMap::new();
    let mut b2 = BTreeMap::new();
    let plus = |k: i64| (0..=n).contains(&k).then_some(Node::Plus(k as u32));
    let minus = |k: i64| (0..n).contains(&k).then_some(Node::Minus(k as u32));
    for node in nodes(nu) {
        match node {
            Node::Plus(k) => {
                let k = k as i64;
                b1.insert(node, if k < n { minus(k) } else { None });
                let d = n - k;
                let t = if d == 0 {
                    plus(n - 1)
                } else if d == 1 {
                    plus(n)
                } else if d % 2 == 0 {
                    plus(k - 1)
                } else {
                    plus(k + 1)
                };
                b2.insert(node, t);
            }
            Node::Minus(k) => {
                let k = k as i64;
                b1.insert(node, plus(k));
                b2.insert(node, if (n - k) % 2 == 0 { minus(k + 1) } else { minus(k - 1) });
            }
        }
    }
    BTildeGraph { nu, b1, b2 }
}

/// Computation of `B~_1`, `B~_2` on the actual candidate vectors of `V(nu)`.
pub struct BTildeComputer {
    module: Rank2Module,
    gram: Vec<RatFunc>,
    /// `(sign(a), eigenvector, its squared norm)` for each `B_2`-eigenvalue `[a]`.
    eigen: Vec<(i64, Vec<RatFunc>, RatFunc)>,
}

impl BTildeComputer {
    /// Fails if the tridiagonal eigenvector recursion is inconsistent.
    pub fn new(nu: u32) -> Option<Self> {
        let module = Rank2Module::new(nu);
        let b2 = module.act_b2();
        let gram = module.gram_diagonal();
        let dim = module.dim();
        let mut eigen = Vec::new();
        for a in -(nu as i64)..=nu as i64 {
            let lam = qi(a);
            let mut v = vec![RatFunc::one()];
            for k in 0..dim - 1 {
                let mut r = &lam * &v[k];
                if k > 0 {
                    r = &r - &(b2.get(k, k - 1) * &v[k - 1]);
                }
                v.push(&r / b2.get(k, k + 1));
            }
            let last = dim - 1;
            let lhs = if last > 0 { b2.get(last, last - 1) * &v[last - 1] } else { RatFunc::zero() };
            if lhs != &lam * &v[last] {
                return None;
            }
            let norm = v.iter().zip(&gram).fold(RatFunc::zero(), |acc, (x, g)| &acc + &(&(x * x) * g));
            eigen.push((a.signum(), v, norm));
        }
        Some(BTildeComputer { module, gram, eigen })
    }

    pub fn b1(&self, u: &ModuleVector) -> ModuleVector {
        let nu = self.module.nu as i64;
        let coeffs =
            u.coeffs.iter().enumerate().map(|(k, c)| c.scale(&RatFunc::from((nu - k as i64).signum()))).collect();
        ModuleVector { nu: u.nu, coeffs }
    }

    pub fn b2(&self, u: &ModuleVector) -> ModuleVector {
        let mut out = u.scale(&Sqrt2Scalar::zero());
        for (sign, v, norm) in &self.eigen {
            if *sign == 0 {
                continue;
            }
            let pairing = u
                .coeffs
                .iter()
                .zip(v.iter().zip(&self.gram))
                .fold(Sqrt2Scalar::zero(), |acc, (c, (x, g))| &acc + &c.scale(&(x * g)));
            let coef = pairing.scale(&(&RatFunc::from(*sign) / norm));
            let proj = ModuleVector { nu: u.nu, coeffs: v.iter().map(|x| coef.scale(x)).collect() };
            out = out.add(&proj);
        }
        out
    }

    /// The graph obtained from the candidates `B_{2,p}^(k) (v +- Y^(2nu) v)`.
    pub fn graph(&self) -> Option<BTildeGraph> {
        let m = &self.module;
        let nu = m.nu;
        let lookup: Vec<(Node, Vec<Sqrt2Rational>)> = nodes(nu)
            .into_iter()
            .map(|node| match node {
                Node::Plus(k) => (node, m.expected_ev(true, k as usize)),
                Node::Minus(k) => (node, m.expected_ev(false, k as usize)),
            })
            .collect();
        let classify = |w: &ModuleVector| -> Option<Option<Node>> {
            let ev = m.ev_infty_vector(w).ok()?;
            if ev.iter().all(Sqrt2Rational::is_zero) {
                return Some(None);
            }
            lookup.iter().find(|(_, e)| *e == ev).map(|(n, _)| Some(*n))
        };
        let mut b1 = BTreeMap::new();
        let mut b2 = BTreeMap::new();
        for node in nodes(nu) {
            let u = match node {
                Node::Plus(k) => m.candidate(true, k),
                Node::Minus(k) => m.candidate(false, k),
            };
            b1.insert(node, classify(&self.b1(&u))?);
            b2.insert(node, classify(&self.b2(&u))?);
        }
        Some(BTildeGraph { nu, b1, b2 })
    }

    /// `(B_2 u, w) = (u, B_2 w)` for the diagonal Gram form.
    pub fn b2_self_adjoint(&self) -> bool {
        let b2 = self.module.act_b2();
        let g = Matrix::diagonal(self.gram.clone());
        b2.transpose().mul(&g) == g.mul(&b2)
    }
}

/// Runs every structural check on `V(nu)`.
pub fn verify_based_structure(nu: u32) -> Report {
    let m = Rank2Module::new(nu);
    let dim = m.dim();
    let b2 = m.act_b2();
    let p = Parity::of(nu as i64);
    let mut r = Report { nu, checks: Vec::new() };
    let cap = 2 * nu + 2;

    let plus_seq = m.idivided_b2_on(&m.seed(1), cap, p);
    let minus_seq = m.idivided_b2_on(&m.seed(-1), cap, p.flip());
    for k in nu + 1..=cap {
        r.push("vanishing_plus", Some(k as i64), plus_seq[k as usize].is_zero());
    }
    for k in nu..=cap {
        r.push("vanishing_minus", Some(k as i64), minus_seq[k as usize].is_zero());
    }

    let cands: Vec<(bool, u32, &ModuleVector)> = (0..=nu)
        .map(|k| (true, k, &plus_seq[k as usize]))
        .chain((0..nu).map(|k| (false, k, &minus_seq[k as usize])))
        .collect();
    let mut evs = Vec::new();
    for (plus, k, v) in &cands {
        let tag = if *plus { "plus" } else { "minus" };
        r.push(&format!("bar_invariant_{tag}"), Some(*k as i64), v.bar_vector() == **v);
        let expected = m.expected_ev(*plus, *k as usize);
        let ev = m.ev_infty_vector(v);
        r.push(&format!("ev_infinity_{tag}"), Some(*k as i64), ev.as_ref().is_ok_and(|e| *e == expected));
        evs.push(expected);
    }
    for (i, (plus, k, u)) in cands.iter().enumerate() {
        let tag = if *plus { "plus" } else { "minus" };
        let ok = cands
            .iter()
            .enumerate()
            .all(|(j, (_, _, w))| m.inner(u, w).ev_infinity().is_ok_and(|x| x == sqrt2_dot(&evs[i], &evs[j])));
        r.push(&format!("almost_orthonormal_{tag}"), Some(*k as i64), ok);
    }

    for par in [Parity::Even, Parity::Odd] {
        let rec = idivided_matrices_by_recursion(&b2, cap, par);
        let direct = idivided_matrices(&b2, cap, par);
        let tag = match par {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        for (k, (a, b)) in rec.iter().zip(&direct).enumerate() {
            r.push(&format!("idivided_recursion_{tag}"), Some(k as i64), a == b);
        }
    }

    let x = m.act_x();
    let y = m.act_y();
    let g = Matrix::diagonal(m.gram_diagonal());
    let inv0 =
        Matrix::diagonal((0..dim).map(|k| m.act_l_brace(0).get(k, k).inv().expect("{a} is never zero")).collect());
    let adj = y.mul(&m.act_l_brace(-1)).mul(&inv0);
    r.push("adjoint_identity", None, x.transpose().mul(&g) == g.mul(&adj));
    r.push("b1_bar_invariant", None, m.act_b1().bar() == m.act_b1());
    r.push("b2_bar_invariant", None, b2.bar() == b2);
    r.push("degree_duality", None, (0..dim).all(|k| m.degree_of_basis(k) == m.degree_of_basis(dim - 1 - k)));
    r.push("gram_degree", None, (0..dim).all(|k| m.gram(k, k).degree() == Some(2 * m.degree_of_basis(k))));
    let normalized = (0..dim).all(|k| {
        let c = m.normalizer(k);
        (&c * &c).scale(&m.gram(k, k)).ev_infinity().is_ok_and(|x| x == Sqrt2Rational::integer(1))
    });
    r.push("normalizer_unit_norm", None, normalized);

    match BTildeComputer::new(nu) {
        None => r.push("b2_eigenvectors", None, false),
        Some(bt) => {
            r.push("b2_eigenvectors", None, true);
            r.push("b2_self_adjoint", None, bt.b2_self_adjoint());
            r.push("btilde_graph", None, bt.graph() == Some(predicted_btilde_graph(nu)));
        }
    }
    r
}

/// `[B_1,[B_1,B_2]_q]_{q^-1} = B_2` and `[B_2,[B_2,B_1]_q]_{q^-1} = B_1` on `V(nu)`.
pub fn check_defining_relations(nu: u32) -> Report {
    let m = Rank2Module::new(nu);
    let b1 = m.act_b1();
    let b2 = m.act_b2();
    let q = RatFunc::q_pow(1);
    let qinv = RatFunc::q_pow(-1);
    let mut r = Report { nu, checks: Vec::new() };
    r.push("relation_b1_b1_b2", None, b1.bracket(&b1.bracket(&b2, &q), &qinv) == b2);
    r.push("relation_b2_b2_b1", None, b2.bracket(&b2.bracket(&b1, &q), &qinv) == b1);
    r
}
