//! Breadth-first enumeration of `B(lambda)` from its highest-weight word.

use std::collections::{HashMap, VecDeque};

use super::{e_tilde, f_tilde, highest_word, strings, weight, CrystalVertex, DominantWeight};
use crate::error::{Error, Result};

/// Vertex cap used when no budget is given.
pub const DEFAULT_BUDGET: usize = 200_000;

/// The crystal graph with cached string data. Vertex 0 is the highest-weight word.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub lambda: DominantWeight,
    pub vertices: Vec<CrystalVertex>,
    /// `wt[v][i-1] = <h_i, wt(v)>`.
    pub wt: Vec<Vec<i32>>,
    pub phi: Vec<Vec<u32>>,
    pub eps: Vec<Vec<u32>>,
    /// `f[v][i-1]` is the target of the `i`-arrow out of `v`.
    pub f: Vec<Vec<Option<usize>>>,
    pub e: Vec<Vec<Option<usize>>>,
    index: HashMap<CrystalVertex, usize>,
}

impl CrystalGraph {
    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, b: &CrystalVertex) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// All `(i, from, to)` arrows, ordered by source then colour.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (v, row) in self.f.iter().enumerate() {
            for (k, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    out.push((k + 1, v, *t));
                }
            }
        }
        out
    }
}

/// Enumerates `B(lambda)` by applying every `F~_i` until closure.
///
/// Fails with [`Error::BudgetExceeded`] as soon as more than `budget`
/// vertices have been discovered.
pub fn build_crystal(lambda: &DominantWeight, budget: usize) -> Result<CrystalGraph> {
    let n = lambda.n();
    let top = highest_word(lambda);
    let mut index = HashMap::new();
    let mut vertices = vec![top.clone()];
    index.insert(top, 0usize);
    let mut f: Vec<Vec<Option<usize>>> = vec![vec![None; n - 1]];
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for i in 1..n {
            let Some(next) = f_tilde(i, &vertices[v]) else { continue };
            let t = match index.get(&next) {
                Some(&t) => t,
                None => {
                    if vertices.len() >= budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    let t = vertices.len();
                    index.insert(next.clone(), t);
                    vertices.push(next);
                    f.push(vec![None; n - 1]);
                    queue.push_back(t);
                    t
                }
            };
            f[v][i - 1] = Some(t);
        }
    }
    let mut e = vec![vec![None; n - 1]; vertices.len()];
    for (v, row) in f.iter().enumerate() {
        for (k, t) in row.iter().enumerate() {
            if let Some(t) = *t {
                e[t][k] = Some(v);
            }
        }
    }
    let mut phi = Vec::with_capacity(vertices.len());
    let mut eps = Vec::with_capacity(vertices.len());
    let mut wt = Vec::with_capacity(vertices.len());
    for b in &vertices {
        let s: Vec<_> = (1..n).map(|i| strings(i, b)).collect();
        phi.push(s.iter().map(|s| s.phi).collect());
        eps.push(s.iter().map(|s| s.eps).collect());
        wt.push(weight(n, b));
    }
    debug_assert!(vertices
        .iter()
        .enumerate()
        .all(|(v, b)| (1..n).all(|i| { e_tilde(i, b).map(|x| index[&x]) == e[v][i - 1] })));
    Ok(CrystalGraph { lambda: lambda.clone(), vertices, wt, phi, eps, f, e, index })
}
