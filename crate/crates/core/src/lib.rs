//! Branching multiplicities of `sl_n`-crystals restricted to `so_n`, computed
//! from the parity-twisted string data `deg_i` / `B~_i` on type-A crystals,
//! together with an independent Weyl-character oracle and exact symbolic
//! checks of the rank-one and rank-two iquantum modules.

pub mod branching;
pub mod crystal;
pub mod error;
pub mod iota;
pub mod irrep;
pub mod oracle;
pub mod qlaurent;

pub use error::{Error, Result};
