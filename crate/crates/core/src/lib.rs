pub mod catalog;
pub mod cli;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod perm;
pub mod sums;
pub mod symmetry;

pub use catalog::{build_named, predict_d};

pub use error::{Error, Result};
pub use group::{PermGroup, StabilizerChain};
pub use perm::{Parity, Permutation};
