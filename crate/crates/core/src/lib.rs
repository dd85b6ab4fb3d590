//! Exact computer algebra for combinatorial bases of the polynomial ring:
//! symmetric functions, quasisymmetric functions, and full polynomial bases,
//! with structure constants obtained by inverting poset-triangular transition
//! matrices and every pipeline checked against independent brute-force
//! oracles.

pub mod bridge;
pub mod composition;
pub mod diagram;
pub mod symfn;
pub mod error;
pub mod hall_littlewood;
pub mod permutation;
pub mod oracle;
pub mod plethysm;
pub mod poly;
pub mod polybases;
pub mod poset;
pub mod qsym;
pub mod rational;
pub mod transition;

pub use composition::{Partition, StrongComposition, WeakComposition};
pub use error::{Error, Result};
pub use permutation::Permutation;
pub use poly::SparsePoly;
pub use poset::Poset;
pub use rational::{Int, Rat};
pub use transition::TransitionMatrix;
