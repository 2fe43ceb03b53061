//! The maps `Ω: Q[S_{p+q}] → [H^{p,q} ⊗ H^{q,p}]^{GL}` and `Ω′`, and invariant
//! dimensions of traceless tensor products.
//!
//! Two routes are provided. The *orbit* route works in the basis of orbit sums
//! of even slot patterns, which spans the invariants of the signed permutation
//! matrices; only the transvection and the contractions remain as linear
//! constraints. The *direct* route builds every generator action on the full
//! word basis and is kept for small spaces as an independent check.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::Range;

use albanese_core::linalg::{exact_rank, SparseMatrix};
use albanese_core::{Error, Result};

use crate::rep::{build_rep_on, contraction_pairs, transvection};
use crate::words::{even_patterns, Slot, SlotPattern, WordSpace};
use crate::OracleConfig;

/// Permutations of `0..m` in lexicographic order, as image vectors.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Slots of `H^{p,q} ⊗ H^{q,p}`: `[Co p][Contra q] | [Co q][Contra p]`.
pub fn omega_space(n: usize, p: usize, q: usize) -> WordSpace {
    WordSpace::from_blocks(n, &[(Slot::Co, p), (Slot::Contra, q), (Slot::Co, q), (Slot::Contra, p)])
}

fn cov_pos(p: usize, q: usize, m: usize) -> usize {
    if m < p {
        m
    } else {
        q + m
    }
}

fn contra_pos(p: usize, q: usize, j: usize) -> usize {
    if j < q {
        p + j
    } else {
        p + q + j
    }
}

/// Slot pairs forced equal in `Ω(σ)`: covariant index `m` meets contravariant
/// slot `σ(m)`.
pub fn omega_pairs(p: usize, q: usize, sigma: &[usize]) -> Vec<(usize, usize)> {
    sigma.iter().enumerate().map(|(m, &j)| (cov_pos(p, q, m), contra_pos(p, q, j))).collect()
}

/// Whether `Ω(σ)` pairs every slot of the first factor with the second, so it
/// survives the projection to `T_{p,q} ⊗ T_{q,p}`.
pub fn is_cross_pairing(p: usize, q: usize, sigma: &[usize]) -> bool {
    sigma.iter().enumerate().all(|(m, &j)| (m < p) == (j >= q))
}

/// The `p!·q!` permutations with `σ({1..p}) = {q+1..q+p}`.
pub fn cross_permutations(p: usize, q: usize) -> Vec<Vec<usize>> {
    permutations(p + q).into_iter().filter(|s| is_cross_pairing(p, q, s)).collect()
}

/// An exact linear map with integer entries over a common positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactLinearMap {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    /// Rows index the codomain.
    pub matrix: SparseMatrix,
    pub denominator: u64,
}

impl ExactLinearMap {
    /// One `row col numerator/denominator` line per nonzero entry.
    pub fn to_triplets(&self) -> String {
        let mut s = String::new();
        for (r, row) in self.matrix.rows().iter().enumerate() {
            for &(c, v) in row {
                writeln!(s, "{r} {c} {v}/{}", self.denominator).expect("writing to a String");
            }
        }
        s
    }

    pub fn rank(&self, config: &OracleConfig) -> Result<usize> {
        Ok(exact_rank(&self.matrix, config.cancel.as_ref())?.0)
    }
}

/// The matrix of `Ω` on the basis `S_{p+q}` (lexicographic), rows indexed by
/// words of `H^{p,q} ⊗ H^{q,p}`. Empty rows are kept so row indices are words.
pub fn omega_matrix(n: usize, p: usize, q: usize, config: &OracleConfig) -> Result<ExactLinearMap> {
    let space = omega_space(n, p, q);
    let rows_dim = space.ensure_within(config.sparse_cap)?;
    let perms = permutations(p + q);
    let free = WordSpace::from_blocks(n, &[(Slot::Co, p + q)]);
    let free_dim = free.ensure_within(config.sparse_cap)?;
    let mut by_row: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
    for (c, sigma) in perms.iter().enumerate() {
        config.checkpoint()?;
        for k in 0..free_dim {
            let idx = free.decode(k);
            let mut w = vec![0; space.len()];
            for (m, &j) in sigma.iter().enumerate() {
                w[cov_pos(p, q, m)] = idx[m];
                w[contra_pos(p, q, j)] = idx[m];
            }
            by_row.entry(space.encode(&w)).or_default().push((c, 1));
        }
    }
    let mut rows = vec![Vec::new(); rows_dim];
    for (k, mut r) in by_row {
        r.sort_unstable();
        rows[k] = r;
    }
    let matrix = SparseMatrix::from_rows(perms.len(), rows);
    Ok(ExactLinearMap { domain_dim: perms.len(), codomain_dim: rows_dim, matrix, denominator: 1 })
}

/// The invariant space of a tensor space in orbit-sum coordinates, with the
/// remaining linear constraints as one row per orbit.
struct OrbitSystem {
    patterns: Vec<SlotPattern>,
    /// Row `P`: coordinates of `(t − I)O_P` and of every contraction of `O_P`.
    rows: Vec<Vec<(usize, i64)>>,
    ncols: usize,
}

impl OrbitSystem {
    fn build(space: &WordSpace, groups: &[Range<usize>], config: &OracleConfig) -> Result<Self> {
        let n = space.n;
        let dim = space.ensure_within(config.sparse_cap)?;
        let patterns = even_patterns(space.len(), n);
        let pairs = contraction_pairs(space, groups);
        let reduced_dim = if space.len() >= 2 { space.without(0, 1).dim() } else { 0 };
        let t = (n >= 2).then(|| transvection(n));
        let mut rows = Vec::with_capacity(patterns.len());
        for pat in &patterns {
            config.checkpoint()?;
            let mut acc: HashMap<usize, i64> = HashMap::new();
            let words = pat.words(n);
            if let Some(t) = &t {
                for w in &words {
                    for (k, v) in t.apply(space, w) {
                        *acc.entry(k).or_insert(0) += v;
                    }
                    *acc.entry(space.encode(w)).or_insert(0) -= 1;
                }
            }
            for (c, &(a, b)) in pairs.iter().enumerate() {
                if !pat.same_block(a, b) {
                    continue;
                }
                let target = space.without(a, b);
                let offset = dim + c * reduced_dim;
                for w in &words {
                    let reduced: Vec<usize> =
                        w.iter().enumerate().filter(|&(i, _)| i != a && i != b).map(|(_, &x)| x).collect();
                    *acc.entry(offset + target.encode(&reduced)).or_insert(0) += 1;
                }
            }
            let mut row: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
            row.sort_unstable();
            rows.push(row);
        }
        Ok(OrbitSystem { patterns, rows, ncols: dim + pairs.len() * reduced_dim })
    }

    /// Rank of the constraint rows, optionally with extra columns appended
    /// after the constraint columns.
    fn rank_with(&self, extra: Option<&[Vec<(usize, i64)>]>, config: &OracleConfig) -> Result<usize> {
        let width = extra.map_or(0, |e| e.iter().flatten().map(|&(c, _)| c + 1).max().unwrap_or(0));
        let mut m = SparseMatrix::new(self.ncols + width);
        for (i, row) in self.rows.iter().enumerate() {
            let mut r = row.clone();
            if let Some(e) = extra {
                r.extend(e[i].iter().map(|&(c, v)| (self.ncols + c, v)));
            }
            m.push_row(r);
        }
        Ok(exact_rank(&m, config.cancel.as_ref())?.0)
    }

    fn constrained_dim(&self, config: &OracleConfig) -> Result<usize> {
        Ok(self.patterns.len() - self.rank_with(None, config)?)
    }

    /// Extra columns `Y[P][σ] = ⟨O_P, Ω(σ)⟩` for the given permutations.
    fn pairing_columns(&self, n: usize, p: usize, q: usize, sigmas: &[Vec<usize>]) -> Vec<Vec<(usize, i64)>> {
        let pairs: Vec<_> = sigmas.iter().map(|s| omega_pairs(p, q, s)).collect();
        self.patterns
            .iter()
            .map(|pat| {
                let size = pat.orbit_size(n) as i64;
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(_, pr)| pat.coarsens(pr))
                    .map(|(c, _)| (c, size))
                    .collect()
            })
            .collect()
    }
}

/// `dim [H^{p,q}]^{GL(n,Z)}` through orbit sums.
pub fn invariant_dim_orbit(n: usize, p: usize, q: usize, config: &OracleConfig) -> Result<usize> {
    OrbitSystem::build(&WordSpace::mixed(n, p, q), &[], config)?.constrained_dim(config)
}

fn require_rank(n: usize, need: usize, what: &str) -> Result<()> {
    if n < need {
        return Err(Error::invalid(format!("{what} is only asserted for n ≥ {need}, got n = {n}")));
    }
    Ok(())
}

/// `dim [T_{p,q} ⊗ T_{r,s}]^{GL(n,Z)}`, expected `p!·q!` when `(r,s) = (q,p)`
/// and 0 otherwise.
pub fn cross_traceless_invariant_dim(
    n: usize,
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    config: &OracleConfig,
) -> Result<usize> {
    require_rank(n, (p + q).max(r + s), "the traceless invariant count")?;
    let space =
        WordSpace::from_blocks(n, &[(Slot::Co, p), (Slot::Contra, q), (Slot::Co, r), (Slot::Contra, s)]);
    let groups = [0..p + q, p + q..p + q + r + s];
    OrbitSystem::build(&space, &groups, config)?.constrained_dim(config)
}

/// Same count on the full word basis with every generator; small spaces only.
pub fn cross_traceless_invariant_dim_direct(
    n: usize,
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    config: &OracleConfig,
) -> Result<usize> {
    require_rank(n, (p + q).max(r + s), "the traceless invariant count")?;
    let space =
        WordSpace::from_blocks(n, &[(Slot::Co, p), (Slot::Contra, q), (Slot::Co, r), (Slot::Contra, s)]);
    let rep = build_rep_on(space, config)?;
    crate::rep::traceless_invariant_dim(&rep, &[0..p + q, p + q..p + q + r + s], config)
}

/// Outcome of the `Ω′` checks at one `(n, p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPrimeReport {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// `p!·q!`.
    pub expected: usize,
    /// `dim [T_{p,q} ⊗ T_{q,p}]^{GL(n,Z)}`.
    pub invariant_dim: usize,
    /// Rank of `pr ∘ Ω` on the `p!·q!` cross-pairing permutations.
    pub omega_prime_rank: usize,
    /// Whether `pr ∘ Ω(σ) = 0` for every other permutation.
    pub others_vanish: bool,
    /// Rank of `Ω` itself on all of `S_{p+q}`.
    pub omega_rank: usize,
    /// `dim [H^{p,q} ⊗ H^{q,p}]^{GL(n,Z)}`, which `Ω` should fill.
    pub full_invariant_dim: usize,
}

impl OmegaPrimeReport {
    pub fn passed(&self) -> bool {
        self.invariant_dim == self.expected
            && self.omega_prime_rank == self.expected
            && self.others_vanish
            && self.omega_rank == self.full_invariant_dim
    }
}

/// Checks that `Ω′` is injective onto `[T_{p,q} ⊗ T_{q,p}]^{GL(n,Z)}` and that
/// this space has dimension `p!·q!`.
///
/// `pr` is the orthogonal projection onto the contraction kernel, which is
/// `GL(n)`-equivariant. Writing `A` for the constraints cutting out
/// `K = [T_{p,q} ⊗ T_{q,p}]^{GL}` inside the orbit-sum span and `Y` for the
/// pairings `⟨O_P, Ω(σ)⟩`, `rank(pr ∘ Ω′) = rank [A | Y] − rank A`.
pub fn omega_prime_verify(n: usize, p: usize, q: usize, config: &OracleConfig) -> Result<OmegaPrimeReport> {
    require_rank(n, p + q, "the Ω′ isomorphism")?;
    let space = omega_space(n, p, q);
    let groups = [0..p + q, p + q..2 * (p + q)];
    let sys = OrbitSystem::build(&space, &groups, config)?;
    let base = sys.rank_with(None, config)?;
    let invariant_dim = sys.patterns.len() - base;

    let all = permutations(p + q);
    let (cross, others): (Vec<_>, Vec<_>) = all.iter().cloned().partition(|s| is_cross_pairing(p, q, s));
    let y_cross = sys.pairing_columns(n, p, q, &cross);
    let omega_prime_rank = sys.rank_with(Some(&y_cross), config)? - base;
    let y_others = sys.pairing_columns(n, p, q, &others);
    let others_vanish = others.is_empty() || sys.rank_with(Some(&y_others), config)? == base;

    // Ω in orbit coordinates: Ω(σ) = Σ_{P ⊒ pairs(σ)} O_P.
    let full = OrbitSystem::build(&space, &[], config)?;
    let full_invariant_dim = full.constrained_dim(config)?;
    let mut om = SparseMatrix::new(full.patterns.len());
    for s in &all {
        let pairs = omega_pairs(p, q, s);
        om.push_row(full.patterns.iter().enumerate().filter(|(_, pat)| pat.coarsens(&pairs)).map(|(c, _)| (c, 1)));
    }
    let omega_rank = exact_rank(&om, config.cancel.as_ref())?.0;

    Ok(OmegaPrimeReport {
        n,
        p,
        q,
        expected: factorial(p) * factorial(q),
        invariant_dim,
        omega_prime_rank,
        others_vanish,
        omega_rank,
        full_invariant_dim,
    })
}

/// The same rank of `pr ∘ Ω′` on the full word basis; small spaces only.
pub fn omega_prime_rank_direct(n: usize, p: usize, q: usize, config: &OracleConfig) -> Result<usize> {
    require_rank(n, p + q, "the Ω′ isomorphism")?;
    let space = omega_space(n, p, q);
    let rep = build_rep_on(space.clone(), config)?;
    let mut a = rep.invariance_constraints();
    a.extend(&rep.contraction_constraints(&[0..p + q, p + q..2 * (p + q)]));
    let base = exact_rank(&a, config.cancel.as_ref())?.0;
    let omega = omega_matrix(n, p, q, config)?;
    let cross: Vec<usize> = permutations(p + q)
        .iter()
        .enumerate()
        .filter(|(_, s)| is_cross_pairing(p, q, s))
        .map(|(c, _)| c)
        .collect();
    // Rows of Yᵀ: the vectors Ω(σ) in word coordinates.
    let mut cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); cross.len()];
    for (w, row) in omega.matrix.rows().iter().enumerate() {
        for &(c, v) in row {
            if let Some(k) = cross.iter().position(|&x| x == c) {
                cols[k].push((w, v));
            }
        }
    }
    for c in cols {
        a.push_row(c);
    }
    Ok(exact_rank(&a, config.cancel.as_ref())?.0 - base)
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}
