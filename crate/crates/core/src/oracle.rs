//! Character-theoretic reference for the `sl_n -> so_n` branching.
//!
//! Restricting along the odd nodes, a crystal vertex contributes the
//! exponent `(<h_1,wt>, <h_3,wt>, ...)` to the `so_n` character. Irreducible
//! `so_n` characters come from the Weyl character formula, and the
//! restriction is split by peeling off dominance-maximal weights.
//! All exponents are doubled so the half-integral `rho` of type `B` stays integral.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::branching::{BranchTable, KWeight};
use crate::crystal::{build_crystal, CrystalGraph, DominantWeight};
use crate::error::{Error, Result};

/// Root system of `so_n`: `B_m` for odd `n = 2m+1`, `D_m` for even `n = 2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SoType {
    B,
    D,
}

impl SoType {
    pub fn for_n(n: usize) -> Self {
        if n % 2 == 1 {
            SoType::B
        } else {
            SoType::D
        }
    }

    /// `rho` in doubled coordinates.
    pub fn doubled_rho(self, m: usize) -> Vec<i64> {
        match self {
            SoType::B => (0..m).map(|i| 2 * (m - i) as i64 - 1).collect(),
            SoType::D => (0..m).map(|i| 2 * (m - 1 - i) as i64).collect(),
        }
    }

    /// Positive roots as coefficient vectors.
    pub fn positive_roots(self, m: usize) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                for s in [-1, 1] {
                    let mut r = vec![0; m];
                    r[i] = 1;
                    r[j] = s;
                    out.push(r);
                }
            }
            if self == SoType::B {
                let mut r = vec![0; m];
                r[i] = 1;
                out.push(r);
            }
        }
        out
    }
}

/// A signed permutation acting by `(w x)_i = sign_i * x_{perm_i}`.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
    pub det: i64,
}

impl WeylElement {
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| s * x[p]).collect()
    }
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// All elements of `W(B_m)` (signed permutations) or `W(D_m)` (even sign changes).
pub fn weyl_group(ty: SoType, m: usize) -> Vec<WeylElement> {
    let mut out = Vec::new();
    for perm in (0..m).permutations(m) {
        let ps = perm_sign(&perm);
        for mask in 0u32..(1 << m) {
            let minus = mask.count_ones();
            if ty == SoType::D && minus % 2 == 1 {
                continue;
            }
            let signs = (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let det = if minus % 2 == 1 { -ps } else { ps };
            out.push(WeylElement { perm: perm.clone(), signs, det });
        }
    }
    out
}

/// Finite sum of `c * e^{x}` with doubled exponent vectors `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterPoly {
    pub m: usize,
    pub terms: BTreeMap<Vec<i64>, i64>,
}

impl CharacterPoly {
    pub fn new(m: usize) -> Self {
        CharacterPoly { m, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exp.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    fn add_scaled(&mut self, other: &CharacterPoly, c: i64) {
        for (k, v) in &other.terms {
            *self.terms.entry(k.clone()).or_insert(0) += c * v;
        }
        self.terms.retain(|_, v| *v != 0);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Value at `e^x = 1`, i.e. the dimension of the represented module.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `sum_w det(w) e^{w mu}`.
    pub fn alternant(ty: SoType, mu: &[i64]) -> Self {
        let mut p = CharacterPoly::new(mu.len());
        for w in weyl_group(ty, mu.len()) {
            *p.terms.entry(w.apply(mu)).or_insert(0) += w.det;
        }
        p.terms.retain(|_, v| *v != 0);
        p
    }

    pub fn mul(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut out = CharacterPoly::new(self.m);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(s, t)| s + t).collect();
                *out.terms.entry(e).or_insert(0) += x * y;
            }
        }
        out.terms.retain(|_, v| *v != 0);
        out
    }

    /// Exact quotient by lexicographic long division; errors if a remainder would remain.
    pub fn div_exact(&self, d: &CharacterPoly) -> Result<CharacterPoly> {
        let (dmax, dc) = d.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        let mut q = CharacterPoly::new(self.m);
        if self.is_zero() {
            return Ok(q);
        }
        let nmin = self.terms.keys().next().unwrap();
        let dmin = d.terms.keys().next().unwrap();
        let floor: Vec<i64> = nmin.iter().zip(dmin).map(|(a, b)| a - b).collect();
        let mut r = self.clone();
        while let Some((rmax, rc)) = r.terms.iter().next_back() {
            let e: Vec<i64> = rmax.iter().zip(dmax).map(|(a, b)| a - b).collect();
            let (c, rem) = rc.div_rem(dc);
            if rem != 0 || e < floor {
                return Err(Error::Inconsistency("Weyl denominator does not divide".into()));
            }
            let mut t = CharacterPoly::new(self.m);
            t.terms.insert(e.clone(), c);
            r.add_scaled(&t.mul(d), -1);
            q.terms.insert(e, c);
        }
        Ok(q)
    }
}

/// Restriction of `V(lambda)` to the odd-node torus, from a built crystal.
pub fn xk_character_of(g: &CrystalGraph) -> CharacterPoly {
    let m = g.n() / 2;
    let mut p = CharacterPoly::new(m);
    for wt in &g.wt {
        let e: Vec<i64> = (0..m).map(|i| 2 * wt[2 * i] as i64).collect();
        *p.terms.entry(e).or_insert(0) += 1;
    }
    p
}

pub fn xk_character(lambda: &DominantWeight, budget: usize) -> Result<CharacterPoly> {
    Ok(xk_character_of(&build_crystal(lambda, budget)?))
}

fn check_type(nu: &KWeight, ty: SoType) -> Result<()> {
    if nu.m() == 0 || (ty == SoType::D && nu.m() < 2) {
        return Err(Error::InvalidWeight(format!("{ty:?}_{} is not supported", nu.m())));
    }
    if !nu.is_dominant(ty) {
        return Err(Error::InvalidWeight(format!("{nu} is not dominant for type {ty:?}")));
    }
    Ok(())
}

/// Weyl character of the irreducible `so_n`-module `V(nu)`.
pub fn so_irreducible_character(nu: &KWeight, ty: SoType) -> Result<CharacterPoly> {
    check_type(nu, ty)?;
    let rho = ty.doubled_rho(nu.m());
    let shifted: Vec<i64> = nu.doubled().iter().zip(&rho).map(|(a, b)| a + b).collect();
    CharacterPoly::alternant(ty, &shifted).div_exact(&CharacterPoly::alternant(ty, &rho))
}

/// Whether `a - b` is a nonnegative integer combination of simple roots.
/// Both arguments are doubled exponent vectors.
pub fn dominates(ty: SoType, a: &[i64], b: &[i64]) -> bool {
    let mut d = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if (x - y) % 2 != 0 {
            return false;
        }
        d.push((x - y) / 2);
    }
    let m = d.len();
    let partial: Vec<i64> = d
        .iter()
        .scan(0, |s, x| {
            *s += x;
            Some(*s)
        })
        .collect();
    match ty {
        SoType::B => partial.iter().all(|&c| c >= 0),
        SoType::D => {
            if m < 2 {
                return d.iter().all(|&x| x == 0);
            }
            let s = partial[m - 2];
            let (lo, hi) = (s - d[m - 1], s + d[m - 1]);
            partial[..m - 2].iter().all(|&c| c >= 0) && lo >= 0 && hi >= 0 && lo % 2 == 0
        }
    }
}

fn is_dominant_doubled(ty: SoType, e: &[i64]) -> bool {
    e.iter().all(|x| x % 2 == 0) && KWeight::new(e.iter().map(|x| x / 2).collect()).is_dominant(ty)
}

/// Splits `V(lambda)|_{so_n}` into irreducibles by repeatedly removing the
/// character of the lexicographically largest dominant weight.
pub fn decompose(lambda: &DominantWeight, budget: usize) -> Result<BranchTable> {
    let g = build_crystal(lambda, budget)?;
    decompose_character(lambda, &xk_character_of(&g))
}

pub fn decompose_character(lambda: &DominantWeight, ch: &CharacterPoly) -> Result<BranchTable> {
    let n = lambda.n();
    let mut table = BranchTable::new(lambda.clone());
    if n == 2 {
        // so_2 is abelian: every weight space is its own irreducible
        for (e, &c) in &ch.terms {
            if e[0] % 2 != 0 || c <= 0 {
                return Err(Error::Inconsistency(format!("so_2 term {c} e^{e:?} is not a weight")));
            }
            table.insert(KWeight::new(vec![e[0] / 2]), c as u64);
        }
        return Ok(table);
    }
    let ty = SoType::for_n(n);
    let mut residual = ch.clone();
    let mut steps = 0usize;
    while !residual.is_zero() {
        steps += 1;
        if steps > ch.terms.len() + 1 {
            return Err(Error::Inconsistency("decomposition does not terminate".into()));
        }
        let (top, c) = residual
            .terms
            .iter()
            .rev()
            .find(|(e, _)| is_dominant_doubled(ty, e))
            .map(|(e, c)| (e.clone(), *c))
            .ok_or_else(|| Error::Inconsistency("residual has no dominant term".into()))?;
        if residual.terms.keys().any(|e| e != &top && is_dominant_doubled(ty, e) && dominates(ty, e, &top)) {
            return Err(Error::Inconsistency("lexicographic pick is not dominance-maximal".into()));
        }
        if c <= 0 {
            return Err(Error::Inconsistency(format!("negative multiplicity {c}")));
        }
        let nu = KWeight::new(top.iter().map(|x| x / 2).collect());
        let chi = so_irreducible_character(&nu, ty)?;
        if chi.coeff(&top) != 1 || chi.terms.keys().any(|e| !dominates(ty, &top, e)) {
            return Err(Error::Inconsistency(format!("character of {nu} is not bounded by its highest weight")));
        }
        residual.add_scaled(&chi, -c);
        table.insert(nu, c as u64);
    }
    Ok(table)
}

/// Weyl dimension of `V(nu)` for `so_n`.
pub fn dim_so(nu: &KWeight, ty: SoType) -> Result<u64> {
    check_type(nu, ty)?;
    let rho = ty.doubled_rho(nu.m());
    let lam: Vec<i64> = nu.doubled().iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for r in ty.positive_roots(nu.m()) {
        let dot = |v: &[i64]| v.iter().zip(&r).map(|(a, b)| a * b).sum::<i64>();
        num *= dot(&lam);
        den *= dot(&rho);
    }
    ratio_to_u64(num, den)
}

/// Weyl dimension of the `sl_n`-module `V(lambda)`.
pub fn dim_sl(lambda: &DominantWeight) -> u64 {
    let c = lambda.coords();
    let n = lambda.n();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            let s: i64 = c[i..j].iter().map(|&x| x as i64).sum();
            num *= s + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    ratio_to_u64(num, den).expect("type A dimension is integral")
}

/// Every dominant `lambda` for `sl_n` with `dim V(lambda) <= max_dim`, in lexicographic order.
///
/// Dimension grows strictly in each coordinate, so the search prunes per coordinate.
pub fn weights_with_dim_at_most(n: usize, max_dim: u64) -> Vec<DominantWeight> {
    fn go(n: usize, max_dim: u64, prefix: &mut Vec<u32>, out: &mut Vec<DominantWeight>) {
        if prefix.len() == n - 1 {
            out.push(DominantWeight::new(n, prefix.clone()).expect("length checked"));
            return;
        }
        let mut c = 0;
        loop {
            prefix.push(c);
            let mut probe = prefix.clone();
            probe.resize(n - 1, 0);
            let ok = dim_sl(&DominantWeight::new(n, probe).expect("length checked")) <= max_dim;
            if ok {
                go(n, max_dim, prefix, out);
            }
            prefix.pop();
            if !ok {
                break;
            }
            c += 1;
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        go(n, max_dim, &mut Vec::new(), &mut out);
    }
    out
}

fn ratio_to_u64(num: BigInt, den: BigInt) -> Result<u64> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Inconsistency("dimension formula is not integral".into()));
    }
    q.to_u64().ok_or_else(|| Error::Inconsistency("dimension overflows u64".into()))
}
