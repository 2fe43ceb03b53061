//! Exact representation-theoretic computations for the stable Albanese
//! homology of `IA_n` and `IO_n`.
//!
//! - [`combinatorics`]: partitions, Specht dimensions, LR coefficients, characters.
//! - [`schur`]: two-alphabet Schur calculus for mixed tensor representations.
//! - [`albanese`]: the graded pieces `W_i`, `W^O_i` and their dimension polynomials.
//! - [`prop`]: forest-structure counts for the wheeled PROPs.
//! - [`linalg`]: exact sparse rank and kernels, shared by the oracles.

pub mod albanese;
pub mod cancel;
pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod prop;
pub mod schur;

pub use albanese::{albanese_w, AlbaneseHomology, Variant};
pub use cancel::CancelToken;
pub use combinatorics::{Bipartition, Partition};
pub use error::{Error, Result};
pub use schur::{Decomposition, DimensionPolynomial};
