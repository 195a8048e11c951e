//! Type-A crystals `B(lambda)` realized on words in the letters `1..=n`.
//!
//! A word `b_1 b_2 ... b_N` stands for the tensor product
//! `u_{b_1} (x) u_{b_2} (x) ... (x) u_{b_N}` of natural-crystal vertices, with
//! position 1 the leftmost factor. Kashiwara operators act through the
//! tensor rule in [`tensor_stats`]: `F~_i` acts on the right factor exactly
//! when `eps_i(left) < phi_i(right)`.

mod export;
mod graph;

pub use export::{export_graph, ExportFormat};
pub use graph::{build_crystal, CrystalGraph, DEFAULT_BUDGET};

use serde::Serialize;

use crate::error::{Error, Result};

/// A dominant `sl_n` weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DominantWeight {
    n: usize,
    coords: Vec<u32>,
}

impl DominantWeight {
    pub fn new(n: usize, coords: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidWeight(format!("rank parameter n must be at least 2, got {n}")));
        }
        if coords.len() != n - 1 {
            return Err(Error::InvalidWeight(format!(
                "sl_{n} weights need {} coordinates, got {}",
                n - 1,
                coords.len()
            )));
        }
        Ok(DominantWeight { n, coords })
    }

    /// Parses signed input, rejecting negative coordinates.
    pub fn from_signed(n: usize, coords: &[i64]) -> Result<Self> {
        let c = coords
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::InvalidWeight(format!("coordinate {x} is not dominant"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, c)
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight { n, coords: vec![0; n - 1] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Partition with `row_i = sum_{j >= i} lambda_j`, zero rows dropped.
    pub fn shape(&self) -> Vec<u32> {
        let mut rows = Vec::with_capacity(self.coords.len());
        let mut acc = 0;
        for &c in self.coords.iter().rev() {
            acc += c;
            rows.push(acc);
        }
        rows.reverse();
        rows.retain(|&r| r > 0);
        rows
    }

    /// Number of boxes, `sum_i i * lambda_i`.
    pub fn size(&self) -> usize {
        self.shape().iter().map(|&r| r as usize).sum()
    }
}

/// An element of `B(lambda)` as a word of letters in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CrystalVertex(pub Vec<u8>);

impl CrystalVertex {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The tensor product `self (x) other`.
    pub fn tensor(&self, other: &CrystalVertex) -> CrystalVertex {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        CrystalVertex(w)
    }

    /// Splits the word into tableau rows of the given shape.
    ///
    /// Words are row readings taken from the bottom row up, so the last
    /// `shape[0]` letters form the top row.
    pub fn to_tableau(&self, shape: &[u32]) -> Option<Vec<Vec<u8>>> {
        if shape.iter().map(|&r| r as usize).sum::<usize>() != self.0.len() {
            return None;
        }
        let mut rows = Vec::with_capacity(shape.len());
        let mut end = self.0.len();
        for &r in shape {
            let start = end - r as usize;
            rows.push(self.0[start..end].to_vec());
            end = start;
        }
        Some(rows)
    }

    pub fn label(&self) -> String {
        self.0.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("")
    }
}

/// Whether a filling is semistandard (rows weakly increase, columns strictly).
pub fn is_semistandard(rows: &[Vec<u8>]) -> bool {
    rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
        && rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo > hi))
}

/// The word of the superstandard tableau (row `r` filled with `r`), read
/// bottom row first. It is the unique vertex killed by every `E~_i`.
pub fn highest_word(lambda: &DominantWeight) -> CrystalVertex {
    let shape = lambda.shape();
    let mut w = Vec::with_capacity(lambda.size());
    for (r, &len) in shape.iter().enumerate().rev() {
        w.extend(std::iter::repeat_n((r + 1) as u8, len as usize));
    }
    let v = CrystalVertex(w);
    debug_assert!((1..lambda.n()).all(|i| eps(i, &v) == 0));
    v
}

/// Which tensor factor a Kashiwara operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// String data of a single factor: `(phi_i, eps_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Strings {
    pub phi: u32,
    pub eps: u32,
}

/// Result of the tensor rule for `b1 (x) b2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorStats {
    pub f_side: Side,
    pub e_side: Side,
    pub phi: u32,
    pub eps: u32,
}

/// The tensor product rule on `b1 (x) b2` given the `i`-strings of each factor.
pub fn tensor_stats(b1: Strings, b2: Strings) -> TensorStats {
    let f_side = if b1.eps < b2.phi { Side::Right } else { Side::Left };
    let e_side = if b1.eps <= b2.phi { Side::Right } else { Side::Left };
    TensorStats {
        f_side,
        e_side,
        phi: b1.phi + b2.phi.saturating_sub(b1.eps),
        eps: b2.eps + b1.eps.saturating_sub(b2.phi),
    }
}

fn letter_strings(i: usize, letter: u8) -> Strings {
    let l = letter as usize;
    Strings { phi: (l == i) as u32, eps: (l == i + 1) as u32 }
}

/// Strings of every prefix: `out[j]` is for the first `j` letters.
fn prefix_strings(i: usize, word: &[u8]) -> Vec<Strings> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut acc = Strings::default();
    out.push(acc);
    for &l in word {
        let t = tensor_stats(acc, letter_strings(i, l));
        acc = Strings { phi: t.phi, eps: t.eps };
        out.push(acc);
    }
    out
}

/// `(phi_i, eps_i)` of a word.
pub fn strings(i: usize, b: &CrystalVertex) -> Strings {
    *prefix_strings(i, &b.0).last().unwrap()
}

pub fn phi(i: usize, b: &CrystalVertex) -> u32 {
    strings(i, b).phi
}

pub fn eps(i: usize, b: &CrystalVertex) -> u32 {
    strings(i, b).eps
}

/// `<h_i, wt(b)>` for `i = 1..n-1`: letters `i` minus letters `i+1`.
pub fn weight(n: usize, b: &CrystalVertex) -> Vec<i32> {
    let mut counts = vec![0i32; n + 2];
    for &l in &b.0 {
        counts[l as usize] += 1;
    }
    (1..n).map(|i| counts[i] - counts[i + 1]).collect()
}

/// Walks `word = prefix (x) last` from the right, descending into the prefix
/// while the tensor rule sends the operator left.
fn acting_position(i: usize, word: &[u8], raising: bool) -> Option<usize> {
    let prefixes = prefix_strings(i, word);
    for j in (0..word.len()).rev() {
        let t = tensor_stats(prefixes[j], letter_strings(i, word[j]));
        let side = if raising { t.e_side } else { t.f_side };
        if side == Side::Right {
            let s = letter_strings(i, word[j]);
            let live = if raising { s.eps > 0 } else { s.phi > 0 };
            return live.then_some(j);
        }
    }
    None
}

/// `F~_i b`, or `None` when `phi_i(b) = 0`.
pub fn f_tilde(i: usize, b: &CrystalVertex) -> Option<CrystalVertex> {
    let j = acting_position(i, &b.0, false)?;
    let mut w = b.0.clone();
    w[j] += 1;
    Some(CrystalVertex(w))
}

/// `E~_i b`, or `None` when `eps_i(b) = 0`.
pub fn e_tilde(i: usize, b: &CrystalVertex) -> Option<CrystalVertex> {
    let j = acting_position(i, &b.0, true)?;
    let mut w = b.0.clone();
    w[j] -= 1;
    Some(CrystalVertex(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[u8]) -> CrystalVertex {
        CrystalVertex(s.to_vec())
    }

    #[test]
    fn shapes() {
        assert_eq!(DominantWeight::new(3, vec![1, 1]).unwrap().shape(), vec![2, 1]);
        assert_eq!(DominantWeight::new(4, vec![1, 0, 0]).unwrap().shape(), vec![1]);
        assert_eq!(DominantWeight::new(3, vec![0, 2]).unwrap().shape(), vec![2, 2]);
        assert!(DominantWeight::new(3, vec![0, 0]).unwrap().shape().is_empty());
    }

    #[test]
    fn invalid_weights() {
        assert!(DominantWeight::new(3, vec![1]).is_err());
        assert!(DominantWeight::new(1, vec![]).is_err());
        assert!(DominantWeight::from_signed(3, &[1, -1]).is_err());
    }

    #[test]
    fn highest_words() {
        let hw = highest_word(&DominantWeight::new(3, vec![1, 1]).unwrap());
        assert_eq!(hw.to_tableau(&[2, 1]).unwrap(), vec![vec![1, 1], vec![2]]);
        assert_eq!(highest_word(&DominantWeight::new(2, vec![3]).unwrap()), w(&[1, 1, 1]));
        let col = highest_word(&DominantWeight::new(4, vec![0, 1, 0]).unwrap());
        assert_eq!(col.to_tableau(&[1, 1]).unwrap(), vec![vec![1], vec![2]]);
        for lam in [vec![1, 1], vec![2, 0], vec![0, 3], vec![2, 1]] {
            let l = DominantWeight::new(3, lam).unwrap();
            let hw = highest_word(&l);
            assert!((1..3).all(|i| e_tilde(i, &hw).is_none()));
            assert_eq!(weight(3, &hw), l.coords().iter().map(|&c| c as i32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn natural_crystal() {
        assert_eq!(f_tilde(1, &w(&[1])), Some(w(&[2])));
        assert_eq!(e_tilde(1, &w(&[1])), None);
        assert_eq!(e_tilde(1, &w(&[2])), Some(w(&[1])));
        assert_eq!(f_tilde(2, &w(&[1])), None);
        assert_eq!((phi(1, &w(&[1])), eps(1, &w(&[1]))), (1, 0));
        assert_eq!(phi(1, &w(&[2])), 0);
    }

    #[test]
    fn two_letter_convention() {
        // eps_1(u1) = 0 < phi_1(u1) = 1, so the first F~_1 changes the right letter.
        let once = f_tilde(1, &w(&[1, 1])).unwrap();
        assert_eq!(once, w(&[1, 2]));
        // Now eps_1(u1) = 0 is not < phi_1(u2) = 0, so the left letter changes.
        assert_eq!(f_tilde(1, &once), Some(w(&[2, 2])));
        assert_eq!(f_tilde(1, &w(&[2, 2])), None);
    }

    #[test]
    fn tensor_rule_examples() {
        let t = tensor_stats(Strings { phi: 0, eps: 0 }, Strings { phi: 2, eps: 0 });
        assert_eq!(t.f_side, Side::Right);
        let t = tensor_stats(Strings { phi: 1, eps: 0 }, Strings { phi: 1, eps: 0 });
        assert_eq!(t.phi, 2);
        let t = tensor_stats(Strings { phi: 0, eps: 3 }, Strings { phi: 1, eps: 0 });
        assert_eq!(t.eps, 2);
        // ties: F goes left, E goes right
        let t = tensor_stats(Strings { phi: 0, eps: 1 }, Strings { phi: 1, eps: 0 });
        assert_eq!((t.f_side, t.e_side), (Side::Left, Side::Right));
    }

    #[test]
    fn semistandard_check() {
        assert!(is_semistandard(&[vec![1, 1], vec![2]]));
        assert!(!is_semistandard(&[vec![1, 1], vec![1]]));
        assert!(!is_semistandard(&[vec![2, 1]]));
    }
}
