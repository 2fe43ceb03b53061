//! Exact linear-algebra oracles for `GL(n, Z)` tensor representations.
//!
//! Everything here works with explicit integer matrices on tensor words and
//! is meant to cross-check the symbolic results of `albanese-core` at small
//! ranks.

pub mod character;
pub mod omega;
pub mod rep;
pub mod words;

use albanese_core::{CancelToken, Result};

pub use character::{character, character_decompose, Character, RepExpr};
pub use omega::{omega_matrix, omega_prime_verify, ExactLinearMap, OmegaPrimeReport};
pub use rep::{build_rep, invariant_dim, traceless_dim, ExactTensorRep};

/// Size limits and cancellation for oracle computations.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Largest tensor space for which full action matrices are built.
    pub dense_cap: usize,
    /// Largest tensor space handled by the orbit and sparse routes.
    pub sparse_cap: usize,
    pub cancel: Option<CancelToken>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { dense_cap: 20_000, sparse_cap: 1 << 20, cancel: None }
    }
}

impl OracleConfig {
    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    pub fn checkpoint(&self) -> Result<()> {
        self.cancel.as_ref().map_or(Ok(()), CancelToken::check)
    }
}
