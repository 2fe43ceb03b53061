//! Partitions, bipartitions, Specht dimensions, Littlewood–Richardson
//! coefficients and symmetric-group characters.

mod character;
mod lr;
mod partition;

use std::fmt;
use std::str::FromStr;

pub use character::symmetric_group_character;
pub use lr::{lr_coefficient, lr_product};
pub use partition::{partitions_of, specht_dim, Partition};

use crate::error::{Error, Result};

/// A pair `(λ, μ)` labelling the irreducible `V_{λ,μ}`: `λ` is the covariant
/// part, `μ` the contravariant part.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub covariant: Partition,
    pub contravariant: Partition,
}

impl Bipartition {
    pub fn new(covariant: Partition, contravariant: Partition) -> Self {
        Bipartition { covariant, contravariant }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    /// Combined length `l(λ) + l(μ)`: the smallest rank at which `V_{λ,μ}` is nonzero.
    pub fn length(&self) -> usize {
        self.covariant.len() + self.contravariant.len()
    }

    /// `(|λ|, |μ|)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.covariant.size(), self.contravariant.size())
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.covariant, self.contravariant)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V[{self}]")
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Parses `"λ|μ"`, e.g. `"1,1|1"` or `"1|0"`. A bare partition means `μ = ()`.
    fn from_str(s: &str) -> Result<Self> {
        let (cov, contra) = match s.split_once('|') {
            Some((a, b)) => (a, b),
            None => (s, "0"),
        };
        Ok(Bipartition::new(cov.parse()?, contra.parse()?))
    }
}
