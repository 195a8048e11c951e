//! Exact realizations of the rank-one module `V(l)` and the rank-two
//! (`n = 3`) module `V(nu)`, with iDivided powers, the Gram form, the bar
//! involution, `q = infinity` evaluation and the `B~` graphs.

pub mod idivided;
pub mod matrix;
pub mod rank1;
pub mod rank2;
pub mod verify;

use serde::Serialize;

pub use idivided::{
    idivided_matrices, idivided_poly, idivided_polys_by_recursion, idivided_sequence, recursion_holds, BPoly, Parity,
};
pub use matrix::{Matrix, Ring};
pub use rank1::{Rank1Module, Rank1Report};
pub use rank2::{ModuleVector, Rank2Module};
pub use verify::{
    check_defining_relations, predicted_btilde_graph, verify_based_structure, BTildeComputer, BTildeGraph, Node, Report,
};

/// One named verification outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub k: Option<i64>,
    pub pass: bool,
}
