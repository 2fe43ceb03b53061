use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition stored as its positive parts in weakly decreasing order.
///
/// The ordering is *decreasing lexicographic*: `(3) < (2,1) < (1,1,1)` as far as
/// [`Ord`] is concerned, so sorted collections and `BTreeMap` keys iterate from
/// the lexicographically largest partition down.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Rows (0-based) where a box can be added keeping a partition.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i) < self.part(i - 1))
            .collect()
    }

    /// Rows (0-based) whose last box can be removed keeping a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    pub fn with_box_added(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition::new(parts).expect("box added at an addable row")
    }

    pub fn with_box_removed(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        Partition::new(parts).expect("box removed at a removable row")
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j - 1) + (conj.part(j) - i - 1) + 1);
            }
        }
        hooks
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical text form: `"2,1"`, with `"0"` (or an empty string)
    /// for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) && parts.len() > 1 {
            return Err(Error::invalid(format!("zero part inside partition {s:?}")));
        }
        Partition::new(parts)
    }
}

/// Number of standard Young tableaux of shape `shape`, by the hook length formula.
pub fn specht_dim(shape: &Partition) -> BigUint {
    let n = shape.size();
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= k;
    }
    let den = shape
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    num / den
}

/// All partitions of `k` with at most `max_length` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(k: usize, max_length: Option<usize>) -> Vec<Partition> {
    let max_len = max_length.unwrap_or(k);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(k, k, max_len, &mut current, &mut out);
    out
}

fn fill(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted_unchecked(cur.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Counts standard tableaux by removing the largest entry from a corner, recursively.
    fn count_syt(shape: &Partition) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        shape
            .removable_rows()
            .into_iter()
            .map(|r| count_syt(&shape.with_box_removed(r)))
            .sum()
    }

    #[test]
    fn specht_dims_small_shapes() {
        assert_eq!(specht_dim(&Partition::empty()), BigUint::from(1u32));
        for k in 0..7 {
            assert_eq!(specht_dim(&Partition::row(k)), BigUint::from(1u32));
        }
        assert_eq!(count_syt(&p(&[2, 1])), 2);
        assert_eq!(count_syt(&p(&[3, 1])), 3);
        assert_eq!(specht_dim(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(specht_dim(&p(&[3, 1])), BigUint::from(3u32));
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for k in 0..=8 {
            for shape in partitions_of(k, None) {
                assert_eq!(specht_dim(&shape), BigUint::from(count_syt(&shape)), "{shape:?}");
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        let mut fact = BigUint::one();
        for k in 0..=8usize {
            if k > 0 {
                fact *= k;
            }
            let total: BigUint = partitions_of(k, None)
                .iter()
                .map(|l| {
                    let d = specht_dim(l);
                    &d * &d
                })
                .sum();
            assert_eq!(total, fact, "k = {k}");
        }
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions_of(0, None), vec![Partition::empty()]);
        assert_eq!(partitions_of(3, None), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(4, Some(2)), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        let mut sorted = partitions_of(6, None);
        sorted.sort();
        assert_eq!(sorted, partitions_of(6, None));
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[2, 1]).to_string(), "2,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_and_containment() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert!(p(&[2, 1]).contains(&p(&[1, 1])));
        assert!(!p(&[1, 1, 1]).contains(&p(&[2])));
    }
}
