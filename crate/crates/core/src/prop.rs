//! Forest structures for the non-unital wheeled PROP generated by the
//! commutative operad, and the dimension counts derived from them.
//!
//! A structure on inputs `1..=a` with `b` outputs assigns to output `j` a tree
//! block of at least two inputs and groups the remaining inputs into wheels.
//! Tree blocks carry the sign representation and wheels are one-dimensional,
//! so dimensions are plain structure counts.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::albanese::{albanese_w, Variant};
use crate::error::Result;
use crate::schur::{decompose_mixed_tensor, mixed_contraction_count, multiplicity_pairing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForestStructure {
    /// `tree_blocks[j]` feeds output `j + 1`; inputs sorted ascending.
    pub tree_blocks: Vec<Vec<usize>>,
    /// Sorted by smallest element; inputs sorted ascending.
    pub wheel_blocks: Vec<Vec<usize>>,
}

impl ForestStructure {
    pub fn inputs(&self) -> usize {
        self.tree_blocks.iter().chain(&self.wheel_blocks).map(Vec::len).sum()
    }

    pub fn outputs(&self) -> usize {
        self.tree_blocks.len()
    }

    pub fn degree(&self) -> usize {
        self.tree_blocks.iter().map(|t| t.len() - 1).sum::<usize>()
            + self.wheel_blocks.iter().map(Vec::len).sum::<usize>()
    }
}

impl fmt::Display for ForestStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = |b: &Vec<usize>| b.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let trees: Vec<_> = self.tree_blocks.iter().map(block).collect();
        let wheels: Vec<_> = self.wheel_blocks.iter().map(block).collect();
        write!(f, "trees[{}] wheels[{}]", trees.join(" "), wheels.join(" "))
    }
}

/// All structures on `a` inputs and `b` outputs, in a fixed order.
pub fn enumerate_structures(a: usize, b: usize) -> Vec<ForestStructure> {
    let mut out = Vec::new();
    let all: Vec<usize> = (1..=a).collect();
    let mut trees = Vec::new();
    place_trees(&all, b, &mut trees, &mut out);
    out
}

fn place_trees(rest: &[usize], b: usize, trees: &mut Vec<Vec<usize>>, out: &mut Vec<ForestStructure>) {
    if trees.len() == b {
        for wheels in set_partitions(rest) {
            out.push(ForestStructure { tree_blocks: trees.clone(), wheel_blocks: wheels });
        }
        return;
    }
    let m = rest.len();
    // Each remaining tree needs two inputs.
    if m < 2 * (b - trees.len()) {
        return;
    }
    for mask in 1u64..(1u64 << m) {
        if mask.count_ones() < 2 {
            continue;
        }
        let (chosen, left): (Vec<usize>, Vec<usize>) = {
            let mut c = Vec::new();
            let mut l = Vec::new();
            for (k, &x) in rest.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    c.push(x);
                } else {
                    l.push(x);
                }
            }
            (c, l)
        };
        trees.push(chosen);
        place_trees(&left, b, trees, out);
        trees.pop();
    }
}

fn set_partitions(elems: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, tail)) = elems.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for part in set_partitions(tail) {
        let mut alone = vec![vec![first]];
        alone.extend(part.iter().cloned());
        out.push(alone);
        for k in 0..part.len() {
            let mut joined = part.clone();
            joined[k].insert(0, first);
            joined.sort();
            out.push(joined);
        }
    }
    out
}

fn bell(n: usize) -> BigUint {
    // Bell triangle.
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![row.last().cloned().expect("nonempty row")];
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Ordered sequences of `b` disjoint blocks of size ≥ 2 covering `m` points.
fn ordered_tree_blocks(m: usize, b: usize) -> BigUint {
    let mut table = vec![vec![BigUint::zero(); b + 1]; m + 1];
    table[0][0] = BigUint::one();
    for k in 1..=b {
        for mm in 2..=m {
            let mut acc = BigUint::zero();
            for s in 2..=mm {
                if !table[mm - s][k - 1].is_zero() {
                    acc += binomial(BigUint::from(mm), BigUint::from(s)) * &table[mm - s][k - 1];
                }
            }
            table[mm][k] = acc;
        }
    }
    table[m][b].clone()
}

/// `dim C(a, b)` for the non-unital wheeled PROP, concentrated in degree `a − b`.
pub fn count_nonunital_prop(a: usize, b: usize) -> BigUint {
    (0..=a)
        .map(|m| binomial(BigUint::from(a), BigUint::from(m)) * ordered_tree_blocks(m, b) * bell(a - m))
        .sum()
}

/// `Σ_c C(p,c) C(q,c) c! · count_nonunital_prop(p−c, q−c)`, in degree `p − q`.
pub fn count_wheeled_prop(p: usize, q: usize) -> BigUint {
    (0..=p.min(q))
        .map(|c| mixed_contraction_count(p, q, c) * count_nonunital_prop(p - c, q - c))
        .sum()
}

/// Stable `H^*(Aut(F_n), H^{p,q})`: nonzero only in degree `p − q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableAutCohomology {
    pub p: usize,
    pub q: usize,
    /// `p − q`; negative means the cohomology vanishes in every degree.
    pub degree: i64,
    pub dimension: BigUint,
    /// Smallest `n` from which the value is asserted.
    pub stable_from: usize,
}

impl StableAutCohomology {
    pub fn dim_in_degree(&self, j: i64) -> BigUint {
        if j == self.degree {
            self.dimension.clone()
        } else {
            BigUint::zero()
        }
    }
}

/// `min(max(3i+4, p+q), 2i+p+q+3)` with `i = p − q`.
pub fn stable_range(p: usize, q: usize) -> usize {
    let i = p.saturating_sub(q);
    (3 * i + 4).max(p + q).min(2 * i + p + q + 3)
}

pub fn stable_aut_cohomology_dim(p: usize, q: usize) -> StableAutCohomology {
    let degree = p as i64 - q as i64;
    let dimension = if degree < 0 { BigUint::zero() } else { count_wheeled_prop(p, q) };
    StableAutCohomology { p, q, degree, dimension, stable_from: stable_range(p, q) }
}

/// Whether the multiplicity pairing of `W_{p−q}` against `H^{p,q}` matches
/// `count_wheeled_prop(p, q)`.
pub fn cross_check_invariants(p: usize, q: usize) -> Result<bool> {
    if p < q {
        return Err(crate::Error::invalid(format!("cross check needs p ≥ q, got p={p} q={q}")));
    }
    let w = albanese_w(p - q, Variant::Full)?;
    let rep_route = multiplicity_pairing(&w.decomposition, &decompose_mixed_tensor(p, q));
    Ok(rep_route == count_wheeled_prop(p, q))
}
