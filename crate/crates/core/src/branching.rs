//! Branching multiplicities `[lambda : nu]` for `sl_n -> so_n`, read off
//! the crystal `B(lambda)` through the odd-node degrees and `B~` rounds.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::crystal::{build_crystal, CrystalGraph, CrystalVertex, DominantWeight};
use crate::error::{Error, Result};
use crate::iota::{b_tilde_power, b_tilde_power_at, deg, deg_at};
use crate::oracle::{dim_so, SoType};

/// An integral `so_n` weight `(nu^(1), ..., nu^(m))` in epsilon coordinates, `m = n / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KWeight {
    coords: Vec<i64>,
}

impl KWeight {
    pub fn new(coords: Vec<i64>) -> Self {
        KWeight { coords }
    }

    pub fn zero(m: usize) -> Self {
        KWeight { coords: vec![0; m] }
    }

    pub fn m(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn doubled(&self) -> Vec<i64> {
        self.coords.iter().map(|x| 2 * x).collect()
    }

    pub fn abs(&self) -> Vec<u32> {
        self.coords.iter().map(|x| x.unsigned_abs() as u32).collect()
    }

    /// `nu^(1) >= ... >= nu^(m) >= 0` for `B`; `nu^(1) >= ... >= nu^(m-1) >= |nu^(m)|` for `D`.
    pub fn is_dominant(&self, ty: SoType) -> bool {
        let c = &self.coords;
        let Some(&last) = c.last() else { return true };
        let head_ok = c.windows(2).take(c.len().saturating_sub(2)).all(|w| w[0] >= w[1]);
        match ty {
            SoType::B => c.windows(2).all(|w| w[0] >= w[1]) && last >= 0,
            SoType::D if c.len() == 1 => true,
            SoType::D => head_ok && c[c.len() - 2] >= last.abs(),
        }
    }

    /// `nu` with its last coordinate negated.
    pub fn flip_last(&self) -> Self {
        let mut c = self.coords.clone();
        if let Some(x) = c.last_mut() {
            *x = -*x;
        }
        KWeight { coords: c }
    }
}

impl fmt::Display for KWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for KWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// The decomposition `V(lambda)|_{so_n} = sum_nu [lambda:nu] V(nu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchTable {
    pub lambda: DominantWeight,
    entries: BTreeMap<KWeight, u64>,
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    nu: &'a KWeight,
    multiplicity: u64,
    dim: u64,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    n: usize,
    lambda: &'a [u32],
    dim: u64,
    entries: Vec<JsonEntry<'a>>,
}

impl BranchTable {
    pub fn new(lambda: DominantWeight) -> Self {
        BranchTable { lambda, entries: BTreeMap::new() }
    }

    /// Records a multiplicity; zero entries are dropped.
    pub fn insert(&mut self, nu: KWeight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(nu).or_insert(0) += mult;
        }
    }

    pub fn entries(&self) -> &BTreeMap<KWeight, u64> {
        &self.entries
    }

    pub fn get(&self, nu: &KWeight) -> u64 {
        self.entries.get(nu).copied().unwrap_or(0)
    }

    /// Entries in lexicographically descending order of `nu`.
    pub fn sorted(&self) -> impl Iterator<Item = (&KWeight, u64)> {
        self.entries.iter().rev().map(|(k, v)| (k, *v))
    }

    /// `sum_nu [lambda:nu] dim V(nu)`.
    pub fn total_dim(&self) -> Result<u64> {
        self.sorted().map(|(nu, c)| Ok(c * so_dim(self.lambda.n(), nu)?)).sum()
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (nu, c) in self.sorted() {
            for x in nu.coords() {
                s.push_str(&x.to_string());
                s.push('\t');
            }
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Result<String> {
        let entries = self
            .sorted()
            .map(|(nu, multiplicity)| Ok(JsonEntry { nu, multiplicity, dim: so_dim(self.lambda.n(), nu)? }))
            .collect::<Result<Vec<_>>>()?;
        let doc = JsonTable {
            n: self.lambda.n(),
            lambda: self.lambda.coords(),
            dim: crate::oracle::dim_sl(&self.lambda),
            entries,
        };
        Ok(serde_json::to_string_pretty(&doc).expect("table serializes"))
    }
}

/// `dim V(nu)` for `so_n`; every irreducible of the abelian `so_2` is a line.
pub fn so_dim(n: usize, nu: &KWeight) -> Result<u64> {
    if n == 2 {
        Ok(1)
    } else {
        dim_so(nu, SoType::for_n(n))
    }
}

fn check_nu(n: usize, nu: &KWeight) -> Result<()> {
    if nu.m() != n / 2 {
        return Err(Error::InvalidWeight(format!("so_{n} weights need {} coordinates, got {}", n / 2, nu.m())));
    }
    if !nu.is_dominant(SoType::for_n(n)) {
        return Err(Error::InvalidWeight(format!("{nu} is not dominant for so_{n}")));
    }
    Ok(())
}

/// Upper bound of the even nodes that must have degree zero.
fn even_nodes(n: usize) -> usize {
    let m = n / 2;
    if n.is_multiple_of(2) {
        m - 1
    } else {
        m
    }
}

/// The three conditions selecting the vertices counted by `[lambda:nu]`,
/// given closures for `deg_i` and for `deg_{2i+1}` after the `B~` rounds.
fn predicate_with(
    n: usize,
    nu: &KWeight,
    deg_of: impl Fn(usize) -> u32,
    round_then_deg: impl Fn(usize, u32) -> Option<u32>,
) -> bool {
    let m = n / 2;
    let a = nu.abs();
    (1..=m).all(|i| deg_of(2 * i - 1) == a[i - 1])
        && (1..=even_nodes(n)).all(|i| deg_of(2 * i) == 0)
        && (1..m).all(|i| round_then_deg(i, a[i]) == Some(0))
}

/// Whether a vertex word is counted for `nu`.
pub fn branch_predicate(b: &CrystalVertex, nu: &KWeight, n: usize) -> bool {
    predicate_with(n, nu, |i| deg(i, b), |i, t| b_tilde_power((2 * i, 2 * i - 1), t, b).map(|c| deg(2 * i + 1, &c)))
}

/// Graph version of [`branch_predicate`] on vertex `v`.
pub fn branch_predicate_at(g: &CrystalGraph, v: usize, nu: &KWeight) -> bool {
    predicate_with(
        g.n(),
        nu,
        |i| deg_at(g, i, v),
        |i, t| b_tilde_power_at(g, (2 * i, 2 * i - 1), t, v).map(|c| deg_at(g, 2 * i + 1, c)),
    )
}

/// `(deg_1, deg_3, ..., deg_{2m-1})` of vertex `v`.
pub fn odd_profile(g: &CrystalGraph, v: usize) -> Vec<u32> {
    (1..=g.n() / 2).map(|i| deg_at(g, 2 * i - 1, v)).collect()
}

/// Number of vertices with each odd-node degree profile.
pub fn profile_counts(g: &CrystalGraph) -> BTreeMap<Vec<u32>, usize> {
    let mut out = BTreeMap::new();
    for v in 0..g.len() {
        *out.entry(odd_profile(g, v)).or_insert(0) += 1;
    }
    out
}

fn halves(n: usize, nu: &KWeight) -> bool {
    n.is_multiple_of(2) && nu.coords().last().is_some_and(|&x| x != 0)
}

fn finish_count(n: usize, nu: &KWeight, raw: usize) -> Result<u64> {
    if halves(n, nu) {
        if raw % 2 == 1 {
            return Err(Error::Inconsistency(format!("odd raw count {raw} for {nu}")));
        }
        Ok((raw / 2) as u64)
    } else {
        Ok(raw as u64)
    }
}

/// Raw predicate count for `nu` over the built crystal, before any halving.
pub fn raw_count(g: &CrystalGraph, nu: &KWeight) -> usize {
    (0..g.len()).filter(|&v| branch_predicate_at(g, v, nu)).count()
}

pub fn multiplicity_in(g: &CrystalGraph, nu: &KWeight) -> Result<u64> {
    check_nu(g.n(), nu)?;
    finish_count(g.n(), nu, raw_count(g, nu))
}

pub fn branch_multiplicity(lambda: &DominantWeight, nu: &KWeight, budget: usize) -> Result<u64> {
    check_nu(lambda.n(), nu)?;
    let g = build_crystal(lambda, budget)?;
    multiplicity_in(&g, nu)
}

/// Full table from the crystal, candidates taken from the occurring degree profiles.
pub fn branch_table_of(g: &CrystalGraph) -> Result<BranchTable> {
    let n = g.n();
    let ty = SoType::for_n(n);
    let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.len() {
        groups.entry(odd_profile(g, v)).or_default().push(v);
    }
    let mut table = BranchTable::new(g.lambda.clone());
    for (profile, members) in groups {
        let nu = KWeight::new(profile.iter().map(|&x| x as i64).collect());
        if !nu.is_dominant(ty) {
            continue;
        }
        let raw = members.iter().filter(|&&v| branch_predicate_at(g, v, &nu)).count();
        let mult = finish_count(n, &nu, raw)?;
        if halves(n, &nu) {
            table.insert(nu.flip_last(), mult);
        }
        table.insert(nu, mult);
    }
    Ok(table)
}

/// `so_2` case: the `sl_2`-string of length `l` restricts to the weights `l, l-2, ..., -l`.
pub fn rank_one_table(lambda: &DominantWeight) -> BranchTable {
    let l = lambda.coords()[0] as i64;
    let mut table = BranchTable::new(lambda.clone());
    for k in (-l..=l).step_by(2) {
        table.insert(KWeight::new(vec![k]), 1);
    }
    table
}

pub fn branch_table(lambda: &DominantWeight, budget: usize) -> Result<BranchTable> {
    if lambda.n() == 2 {
        return Ok(rank_one_table(lambda));
    }
    branch_table_of(&build_crystal(lambda, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::DEFAULT_BUDGET;

    fn kw(c: &[i64]) -> KWeight {
        KWeight::new(c.to_vec())
    }

    fn dw(n: usize, c: &[u32]) -> DominantWeight {
        DominantWeight::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn dominance_of_k_weights() {
        assert!(kw(&[2, 1]).is_dominant(SoType::B));
        assert!(!kw(&[1, -1]).is_dominant(SoType::B));
        assert!(kw(&[1, -1]).is_dominant(SoType::D));
        assert!(!kw(&[1, 2]).is_dominant(SoType::D));
        assert!(kw(&[2, 2, -2]).is_dominant(SoType::D));
        assert!(!kw(&[2, 1, -2]).is_dominant(SoType::D));
        assert!(!kw(&[1, 2, 0]).is_dominant(SoType::D));
    }

    #[test]
    fn predicate_examples() {
        assert!(branch_predicate(&CrystalVertex(vec![]), &kw(&[0]), 3));
        assert!(!branch_predicate(&CrystalVertex(vec![3]), &kw(&[1]), 3));
        assert!(branch_predicate(&CrystalVertex(vec![1]), &kw(&[1]), 3));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(branch_multiplicity(&dw(3, &[1, 1]), &kw(&[2]), DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(branch_multiplicity(&dw(3, &[1, 1]), &kw(&[1]), DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(branch_multiplicity(&dw(4, &[0, 1, 0]), &kw(&[1, 1]), DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(branch_multiplicity(&dw(4, &[0, 1, 0]), &kw(&[1, -1]), DEFAULT_BUDGET).unwrap(), 1);
        assert!(branch_multiplicity(&dw(4, &[0, 1, 0]), &kw(&[1]), DEFAULT_BUDGET).is_err());
        assert!(branch_multiplicity(&dw(3, &[1, 1]), &kw(&[-1]), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn table_examples() {
        let t = branch_table(&dw(3, &[0, 0]), DEFAULT_BUDGET).unwrap();
        assert_eq!(t.entries(), &BTreeMap::from([(kw(&[0]), 1)]));
        let t = branch_table(&dw(3, &[1, 1]), DEFAULT_BUDGET).unwrap();
        assert_eq!(t.entries(), &BTreeMap::from([(kw(&[1]), 1), (kw(&[2]), 1)]));
        assert_eq!(t.to_tsv(), "2\t1\n1\t1\n");
        let t = branch_table(&dw(4, &[1, 0, 0]), DEFAULT_BUDGET).unwrap();
        assert_eq!(t.entries(), &BTreeMap::from([(kw(&[1, 0]), 1)]));
        assert_eq!(t.total_dim().unwrap(), 4);
    }

    #[test]
    fn rank_one_agrees_with_general_rule() {
        for l in 0..8 {
            let lam = dw(2, &[l]);
            let g = build_crystal(&lam, DEFAULT_BUDGET).unwrap();
            assert_eq!(branch_table_of(&g).unwrap(), rank_one_table(&lam));
        }
    }

    #[test]
    fn json_output() {
        let t = branch_table(&dw(3, &[1, 1]), DEFAULT_BUDGET).unwrap();
        let v: serde_json::Value = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(v["dim"], 8);
        assert_eq!(v["entries"][0]["nu"], serde_json::json!([2]));
        assert_eq!(v["entries"][0]["dim"], 5);
    }
}
