//! Free groups, IA-automorphisms and the first Johnson homomorphism.

pub mod endo;
pub mod tau;
pub mod word;

pub use endo::{apply_endo, is_ia, magnus_generators, FreeEndomorphism};
pub use tau::{johnson_tau, pairing_eval, tau_span_dim, CocycleTable, JohnsonValue, TensorIndex};
pub use word::{reduce_word, FreeWord};
