//! The modified operators `B~_i` and degrees `deg_i` on crystal vertices.
//!
//! `deg_i(b)` is `eps_i(b)` when `phi_i(b)` is even and `eps_i(b) + 1` when it
//! is odd. `B~_i` is `E~_i` on even `phi_i` and `F~_i` on odd `phi_i`; it
//! pairs up the vertices of each `i`-string and kills exactly the degree-0 one.

use crate::crystal::{e_tilde, eps, f_tilde, phi, strings, CrystalGraph, CrystalVertex};

fn deg_from(phi: u32, eps: u32) -> u32 {
    if phi.is_multiple_of(2) {
        eps
    } else {
        eps + 1
    }
}

pub fn deg(i: usize, b: &CrystalVertex) -> u32 {
    let s = strings(i, b);
    deg_from(s.phi, s.eps)
}

pub fn b_tilde(i: usize, b: &CrystalVertex) -> Option<CrystalVertex> {
    if strings(i, b).phi.is_multiple_of(2) {
        e_tilde(i, b)
    } else {
        f_tilde(i, b)
    }
}

/// `(B~_j B~_k)^t b`: each round applies `B~_k` first, then `B~_j`.
pub fn b_tilde_power(pair: (usize, usize), t: u32, b: &CrystalVertex) -> Option<CrystalVertex> {
    let (j, k) = pair;
    let mut cur = b.clone();
    for _ in 0..t {
        cur = b_tilde(k, &cur)?;
        cur = b_tilde(j, &cur)?;
    }
    Some(cur)
}

/// `deg_i` of vertex `v` from the cached string data.
pub fn deg_at(g: &CrystalGraph, i: usize, v: usize) -> u32 {
    deg_from(g.phi[v][i - 1], g.eps[v][i - 1])
}

/// `B~_i` of vertex `v` as a vertex index, using the cached arrows.
pub fn b_tilde_at(g: &CrystalGraph, i: usize, v: usize) -> Option<usize> {
    if g.phi[v][i - 1].is_multiple_of(2) {
        g.e[v][i - 1]
    } else {
        g.f[v][i - 1]
    }
}

/// Graph version of [`b_tilde_power`].
pub fn b_tilde_power_at(g: &CrystalGraph, pair: (usize, usize), t: u32, v: usize) -> Option<usize> {
    let (j, k) = pair;
    let mut cur = v;
    for _ in 0..t {
        cur = b_tilde_at(g, k, cur)?;
        cur = b_tilde_at(g, j, cur)?;
    }
    Some(cur)
}

/// `(deg_1, B~_1)` of `b (x) u` predicted from the data of `b` and of the
/// natural-crystal word `u`, by the three-case rule for `n = 2`.
pub fn tensor_rule_prediction(b: &CrystalVertex, u: &CrystalVertex) -> (u32, Option<CrystalVertex>) {
    let d = deg(1, b);
    let (ph, ep) = (phi(1, u), eps(1, u));
    if d > ph {
        (d - ph + ep, b_tilde(1, b).map(|x| x.tensor(u)))
    } else if (ph - d).is_multiple_of(2) {
        (ep, e_tilde(1, u).map(|y| b.tensor(&y)))
    } else {
        (ep + 1, f_tilde(1, u).map(|y| b.tensor(&y)))
    }
}

/// Whether the computed `deg_1` and `B~_1` of `b (x) u` match [`tensor_rule_prediction`].
pub fn tensor_rule_holds(b: &CrystalVertex, u: &CrystalVertex) -> bool {
    let bu = b.tensor(u);
    tensor_rule_prediction(b, u) == (deg(1, &bu), b_tilde(1, &bu))
}
