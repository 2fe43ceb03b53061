use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinatorics::{Bipartition, Partition};

use super::dim_irrep;

/// A finite direct sum `⊕ V_{λ,μ}^{⊕ m}` of stable irreducibles, with an
/// optional homological-degree tag.
///
/// Terms are kept in canonical order (covariant partition first, then
/// contravariant, both decreasing lexicographic). Equality compares the terms
/// only; the grade tag is metadata.
#[derive(Clone, Default)]
pub struct Decomposition {
    terms: BTreeMap<Bipartition, BigUint>,
    grade: Option<usize>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    /// The trivial representation `V_{(),()}`.
    pub fn unit() -> Self {
        Self::single(Bipartition::trivial())
    }

    pub fn single(b: Bipartition) -> Self {
        let mut d = Self::new();
        d.add_term(b, 1u32);
        d
    }

    pub fn from_terms<I, M>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Bipartition, M)>,
        M: Into<BigUint>,
    {
        let mut d = Self::new();
        for (b, m) in terms {
            d.add_term(b, m);
        }
        d
    }

    pub fn add_term(&mut self, b: Bipartition, mult: impl Into<BigUint>) {
        let mult = mult.into();
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(b).or_default() += mult;
    }

    pub fn with_grade(mut self, grade: usize) -> Self {
        self.grade = Some(grade);
        self
    }

    pub fn grade(&self) -> Option<usize> {
        self.grade
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bipartition, &BigUint)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, b: &Bipartition) -> BigUint {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    /// Number of distinct irreducible types.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total multiplicity `Σ m`.
    pub fn total_multiplicity(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn total_dim_at(&self, n: usize) -> BigUint {
        self.terms
            .iter()
            .map(|(b, m)| dim_irrep(b, n) * m)
            .sum()
    }

    /// Largest `l(λ) + l(μ)` over the terms; 0 when empty.
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Bipartition::length).max().unwrap_or(0)
    }

    /// Largest `|λ| + |μ|` over the terms; 0 when empty.
    pub fn max_total_size(&self) -> usize {
        self.terms
            .keys()
            .map(|b| b.covariant.size() + b.contravariant.size())
            .max()
            .unwrap_or(0)
    }

    /// Distinct `(|λ|, |μ|)` pairs occurring, in increasing order.
    pub fn size_support(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.terms.keys().map(Bipartition::sizes).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The sub-sum of terms with `(|λ|, |μ|) = (a, b)`.
    pub fn restrict_sizes(&self, a: usize, b: usize) -> Decomposition {
        self.filter(|bp| bp.sizes() == (a, b))
    }

    pub fn filter(&self, mut keep: impl FnMut(&Bipartition) -> bool) -> Decomposition {
        Decomposition {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, m)| (b.clone(), m.clone()))
                .collect(),
            grade: self.grade,
        }
    }

    pub fn scaled(&self, factor: &BigUint) -> Decomposition {
        if factor.is_zero() {
            return Decomposition { terms: BTreeMap::new(), grade: self.grade };
        }
        Decomposition {
            terms: self.terms.iter().map(|(b, m)| (b.clone(), m * factor)).collect(),
            grade: self.grade,
        }
    }

    /// Convenience constructor from `(covariant, contravariant, multiplicity)` slices.
    pub fn from_parts(terms: &[(&[usize], &[usize], u64)]) -> Self {
        Self::from_terms(terms.iter().map(|(l, m, k)| {
            (
                Bipartition::new(
                    Partition::new(l.to_vec()).expect("valid partition literal"),
                    Partition::new(m.to_vec()).expect("valid partition literal"),
                ),
                BigUint::from(*k),
            )
        }))
    }
}

impl PartialEq for Decomposition {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Decomposition {}

impl AddAssign<&Decomposition> for Decomposition {
    fn add_assign(&mut self, rhs: &Decomposition) {
        for (b, m) in &rhs.terms {
            *self.terms.entry(b.clone()).or_default() += m;
        }
    }
}

impl Add<&Decomposition> for Decomposition {
    type Output = Decomposition;

    fn add(mut self, rhs: &Decomposition) -> Decomposition {
        self += rhs;
        self
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m == BigUint::from(1u32) {
                write!(f, "V[{b}]")?;
            } else {
                write!(f, "{m}·V[{b}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
