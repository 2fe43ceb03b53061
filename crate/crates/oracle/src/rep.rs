//! Explicit tensor representations of `GL(n, Z)` and their invariants.

use std::collections::HashMap;

use albanese_core::linalg::{exact_rank, kernel_basis, SparseMatrix};
use albanese_core::{Error, Result};
use num_rational::BigRational;

use crate::words::{Slot, WordSpace};
use crate::OracleConfig;

/// An integer matrix in `GL(n, Z)` with its inverse transpose, both stored by
/// columns as sparse `(row, value)` lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlGenerator {
    pub name: &'static str,
    pub n: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
    pub dual_columns: Vec<Vec<(usize, i64)>>,
}

impl GlGenerator {
    fn column_image(&self, slot: Slot, i: usize) -> &[(usize, i64)] {
        match slot {
            Slot::Co => &self.columns[i],
            Slot::Contra => &self.dual_columns[i],
        }
    }

    /// `ρ(g) e_word` expanded in the word basis.
    pub fn apply(&self, space: &WordSpace, word: &[usize]) -> Vec<(usize, i64)> {
        let mut acc: Vec<(usize, i64)> = vec![(0, 1)];
        for (k, &i) in word.iter().enumerate() {
            let img = self.column_image(space.slots[k], i);
            let mut next = Vec::with_capacity(acc.len() * img.len());
            for &(idx, c) in &acc {
                for &(j, v) in img {
                    next.push((idx * space.n + j, c * v));
                }
            }
            acc = next;
        }
        acc
    }

    /// The defining `n × n` matrix, rows first.
    pub fn dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r][c] = v;
            }
        }
        m
    }
}

fn permutation(name: &'static str, n: usize, image: impl Fn(usize) -> usize) -> GlGenerator {
    let columns: Vec<Vec<(usize, i64)>> = (0..n).map(|i| vec![(image(i), 1)]).collect();
    GlGenerator { name, n, dual_columns: columns.clone(), columns }
}

/// The n-cycle, the transposition `(1 2)`, the transvection `I + E_12` and
/// `diag(−1, 1, …, 1)`. For `n = 1` only the sign matrix remains.
pub fn gl_generators(n: usize) -> Vec<GlGenerator> {
    let mut sign = permutation("sign", n, |i| i);
    sign.columns[0] = vec![(0, -1)];
    sign.dual_columns[0] = vec![(0, -1)];
    if n < 2 {
        return vec![sign];
    }
    let cycle = permutation("cycle", n, |i| (i + 1) % n);
    let swap = permutation("swap12", n, |i| match i {
        0 => 1,
        1 => 0,
        _ => i,
    });
    let transvection = transvection(n);
    vec![cycle, swap, transvection, sign]
}

/// `t = I + E_12`: `e_2 ↦ e_1 + e_2` on `H`, `e_1* ↦ e_1* − e_2*` on `H*`.
pub fn transvection(n: usize) -> GlGenerator {
    assert!(n >= 2, "transvection needs n ≥ 2");
    let mut columns: Vec<Vec<(usize, i64)>> = (0..n).map(|i| vec![(i, 1)]).collect();
    columns[1] = vec![(0, 1), (1, 1)];
    let mut dual_columns: Vec<Vec<(usize, i64)>> = (0..n).map(|i| vec![(i, 1)]).collect();
    dual_columns[0] = vec![(0, 1), (1, -1)];
    GlGenerator { name: "transvection", n, columns, dual_columns }
}

/// `H^{p,q}` (or any slot pattern) with explicit generator actions.
#[derive(Clone, Debug)]
pub struct ExactTensorRep {
    pub space: WordSpace,
    pub generators: Vec<GlGenerator>,
}

impl ExactTensorRep {
    pub fn n(&self) -> usize {
        self.space.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `ρ(g)` as a sparse matrix with rows indexed by output words.
    pub fn action_matrix(&self, g: &GlGenerator) -> SparseMatrix {
        self.shifted_action(g, 0).transpose_square(self.dim())
    }

    /// Rows of `(ρ(g) − shift·I)ᵀ`: row `k` is the image of word `k` minus
    /// `shift` copies of it.
    fn shifted_action(&self, g: &GlGenerator, shift: i64) -> ByColumns {
        let d = self.dim();
        let cols = (0..d)
            .map(|k| {
                let mut img = g.apply(&self.space, &self.space.decode(k));
                if shift != 0 {
                    img.push((k, -shift));
                }
                img
            })
            .collect();
        ByColumns(cols)
    }

    /// Rows of `ρ(g) − I` for every generator, stacked.
    pub fn invariance_constraints(&self) -> SparseMatrix {
        let d = self.dim();
        let mut m = SparseMatrix::new(d);
        for g in &self.generators {
            m.extend(&self.shifted_action(g, 1).transpose_square(d));
        }
        m
    }

    /// Rows of every contraction `c_{k,l}` pairing a `Co` slot with a `Contra`
    /// slot, restricted to the slot ranges given. Each contraction lands in its
    /// own copy of the smaller word space.
    pub fn contraction_constraints(&self, groups: &[std::ops::Range<usize>]) -> SparseMatrix {
        let d = self.dim();
        let mut rows: HashMap<(usize, usize, usize), Vec<(usize, i64)>> = HashMap::new();
        let pairs = contraction_pairs(&self.space, groups);
        for k in 0..d {
            let w = self.space.decode(k);
            for &(a, b) in &pairs {
                if w[a] == w[b] {
                    let reduced: Vec<usize> =
                        w.iter().enumerate().filter(|&(i, _)| i != a && i != b).map(|(_, &x)| x).collect();
                    let target = self.space.without(a, b).encode(&reduced);
                    rows.entry((a, b, target)).or_default().push((k, 1));
                }
            }
        }
        let mut keys: Vec<_> = rows.keys().copied().collect();
        keys.sort_unstable();
        let mut m = SparseMatrix::new(d);
        for key in keys {
            m.push_row(rows.remove(&key).expect("key present"));
        }
        m
    }
}

struct ByColumns(Vec<Vec<(usize, i64)>>);

impl ByColumns {
    fn transpose_square(self, d: usize) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); d];
        for (c, col) in self.0.into_iter().enumerate() {
            for (r, v) in col {
                rows[r].push((c, v));
            }
        }
        let mut m = SparseMatrix::new(d);
        for r in rows {
            m.push_row(r);
        }
        m
    }
}

/// `(Co, Contra)` slot pairs lying in the same group.
pub(crate) fn contraction_pairs(space: &WordSpace, groups: &[std::ops::Range<usize>]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for g in groups {
        for a in g.clone() {
            for b in g.clone() {
                if space.slots[a] == Slot::Co && space.slots[b] == Slot::Contra {
                    pairs.push((a, b));
                }
            }
        }
    }
    pairs
}

/// `H^{p,q}` at rank `n` with the standard generator actions.
pub fn build_rep(n: usize, p: usize, q: usize, config: &OracleConfig) -> Result<ExactTensorRep> {
    build_rep_on(WordSpace::mixed(n, p, q), config)
}

pub fn build_rep_on(space: WordSpace, config: &OracleConfig) -> Result<ExactTensorRep> {
    if space.n < 1 {
        return Err(Error::invalid("rank n must be at least 1"));
    }
    space.ensure_within(config.dense_cap)?;
    let generators = gl_generators(space.n);
    Ok(ExactTensorRep { space, generators })
}

/// Dimension of the joint fixed space of all generators, by exact rank.
pub fn invariant_dim(rep: &ExactTensorRep, config: &OracleConfig) -> Result<usize> {
    let m = rep.invariance_constraints();
    let (r, _) = exact_rank(&m, config.cancel.as_ref())?;
    Ok(rep.dim() - r)
}

/// Invariants inside the joint kernel of the contractions within each group.
pub fn traceless_invariant_dim(
    rep: &ExactTensorRep,
    groups: &[std::ops::Range<usize>],
    config: &OracleConfig,
) -> Result<usize> {
    let mut m = rep.invariance_constraints();
    m.extend(&rep.contraction_constraints(groups));
    let (r, _) = exact_rank(&m, config.cancel.as_ref())?;
    Ok(rep.dim() - r)
}

/// A basis of the traceless part `T_{p,q}` of `H^{p,q}`.
#[derive(Clone, Debug)]
pub struct TracelessSubspace {
    pub space: WordSpace,
    pub basis: Vec<Vec<BigRational>>,
}

impl TracelessSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Contraction-kernel basis of `T_{p,q}`.
pub fn traceless_subspace(n: usize, p: usize, q: usize, config: &OracleConfig) -> Result<TracelessSubspace> {
    let rep = build_rep(n, p, q, config)?;
    let c = rep.contraction_constraints(&[0..p + q]);
    config.checkpoint()?;
    Ok(TracelessSubspace { basis: kernel_basis(&c), space: rep.space })
}

/// `dim T_{p,q}` by rank alone, without materializing a basis.
pub fn traceless_dim(n: usize, p: usize, q: usize, config: &OracleConfig) -> Result<usize> {
    let rep = build_rep(n, p, q, config)?;
    let c = rep.contraction_constraints(&[0..p + q]);
    let (r, _) = exact_rank(&c, config.cancel.as_ref())?;
    Ok(rep.dim() - r)
}
