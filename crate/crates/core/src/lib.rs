//! Complex Hadamard matrices with duality and multi-unitarity structure:
//! construction, verification and numerical search.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod butson;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod matcore;
pub mod measures;
pub mod rearrange;
pub mod search;

pub use error::{Error, Result};
pub use matcore::{CMatrix, Tolerance, C64};
pub use measures::{chi, entropy_triple, EntropyTriple, Target};
pub use rearrange::{partial_transpose, reshuffle, Bipartition, TensorShape};
