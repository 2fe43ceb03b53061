//! Torus characters of representations built from `H` and `H*`, and their
//! decomposition into irreducible `GL(n)` characters by peeling off highest
//! weights.
//!
//! Everything here is computed from weight lists: the character of a Schur
//! functor applied to a representation with weights `w_1, …, w_d` is the sum,
//! over semistandard tableaux with entries in `1..=d`, of the corresponding
//! weight sums. Nothing goes through symmetric-function identities.

use std::collections::{BTreeMap, HashMap};

use albanese_core::combinatorics::{Bipartition, Partition};
use albanese_core::{Decomposition, Error, Result};
use num_bigint::BigUint;

/// Largest rank supported by the character oracle.
pub const MAX_CHARACTER_RANK: usize = 5;
/// Guard on the number of tableaux enumerated for one Schur functor.
pub const MAX_TABLEAU_LETTERS: usize = 4096;

/// A construction over `H` and `H*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepExpr {
    Trivial,
    Standard,
    Dual,
    Irrep(Bipartition),
    Sum(Box<RepExpr>, Box<RepExpr>),
    Tensor(Box<RepExpr>, Box<RepExpr>),
    Sym(usize, Box<RepExpr>),
    Wedge(usize, Box<RepExpr>),
    /// The Schur functor `S_ν` applied to a representation.
    Schur(Partition, Box<RepExpr>),
}

impl RepExpr {
    pub fn sum(a: RepExpr, b: RepExpr) -> RepExpr {
        RepExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: RepExpr, b: RepExpr) -> RepExpr {
        RepExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sym(k: usize, a: RepExpr) -> RepExpr {
        RepExpr::Sym(k, Box::new(a))
    }

    pub fn wedge(k: usize, a: RepExpr) -> RepExpr {
        RepExpr::Wedge(k, Box::new(a))
    }

    pub fn schur(nu: Partition, a: RepExpr) -> RepExpr {
        RepExpr::Schur(nu, Box::new(a))
    }

    /// `H^{⊗p} ⊗ (H*)^{⊗q}`.
    pub fn mixed_tensor(p: usize, q: usize) -> RepExpr {
        let mut e = RepExpr::Trivial;
        for _ in 0..p {
            e = RepExpr::tensor(e, RepExpr::Standard);
        }
        for _ in 0..q {
            e = RepExpr::tensor(e, RepExpr::Dual);
        }
        e
    }
}

/// A Laurent polynomial in `n` variables with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub n: usize,
    pub terms: BTreeMap<Vec<i32>, i64>,
}

impl Character {
    fn zero(n: usize) -> Self {
        Character { n, terms: BTreeMap::new() }
    }

    fn one(n: usize) -> Self {
        let mut c = Self::zero(n);
        c.terms.insert(vec![0; n], 1);
        c
    }

    fn add_term(&mut self, w: Vec<i32>, c: i64) {
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    fn mul(&self, other: &Character) -> Character {
        let mut acc: HashMap<Vec<i32>, i64> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let w: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(w).or_insert(0) += ca * cb;
            }
        }
        Character { n: self.n, terms: acc.into_iter().filter(|&(_, c)| c != 0).collect() }
    }

    /// Value at the identity.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Weights repeated by multiplicity; fails on negative coefficients.
    fn weights(&self) -> Result<Vec<Vec<i32>>> {
        let mut out = Vec::new();
        for (w, &c) in &self.terms {
            if c < 0 {
                return Err(Error::internal(format!("weight {w:?} has negative multiplicity {c}")));
            }
            for _ in 0..c {
                out.push(w.clone());
            }
        }
        Ok(out)
    }
}

/// `Σ_T Π weights` over semistandard tableaux of `shape` with entries indexing
/// `letters`.
fn schur_functor(shape: &Partition, letters: &[Vec<i32>], n: usize) -> Result<Character> {
    if letters.len() > MAX_TABLEAU_LETTERS {
        return Err(Error::capacity(format!(
            "Schur functor on a representation of dimension {} exceeds the tableau guard",
            letters.len()
        )));
    }
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut acc: HashMap<Vec<i32>, i64> = HashMap::new();
    let mut weight = vec![0i32; n];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        letters: &[Vec<i32>],
        weight: &mut Vec<i32>,
        acc: &mut HashMap<Vec<i32>, i64>,
    ) {
        if k == cells.len() {
            *acc.entry(weight.clone()).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..letters.len() {
            grid[r][c] = v;
            for (x, y) in weight.iter_mut().zip(&letters[v]) {
                *x += y;
            }
            go(k + 1, cells, grid, letters, weight, acc);
            for (x, y) in weight.iter_mut().zip(&letters[v]) {
                *x -= y;
            }
        }
    }
    go(0, &cells, &mut grid, letters, &mut weight, &mut acc);
    Ok(Character { n, terms: acc.into_iter().filter(|&(_, c)| c != 0).collect() })
}

fn unit_weights(n: usize, sign: i32) -> Vec<Vec<i32>> {
    (0..n)
        .map(|i| {
            let mut w = vec![0; n];
            w[i] = sign;
            w
        })
        .collect()
}

/// Highest weight `(λ_1, …, λ_l, 0, …, 0, −μ_m, …, −μ_1)`; `None` when
/// `l(λ) + l(μ) > n`.
pub fn highest_weight(b: &Bipartition, n: usize) -> Option<Vec<i32>> {
    if b.length() > n {
        return None;
    }
    let mut w = vec![0i32; n];
    for (i, &x) in b.covariant.parts().iter().enumerate() {
        w[i] = x as i32;
    }
    for (j, &x) in b.contravariant.parts().iter().enumerate() {
        w[n - 1 - j] = -(x as i32);
    }
    Some(w)
}

fn bipartition_of_weight(w: &[i32]) -> Result<Bipartition> {
    if !w.windows(2).all(|p| p[0] >= p[1]) {
        return Err(Error::internal(format!("top weight {w:?} is not dominant")));
    }
    let cov: Vec<usize> = w.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
    let contra: Vec<usize> = w.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as usize).collect();
    Ok(Bipartition::new(Partition::new(cov)?, Partition::new(contra)?))
}

/// Weyl character of `V_{λ,μ}` at rank `n`, as `s_{w + c}(x) · det^{−c}`.
pub fn irreducible_character(b: &Bipartition, n: usize) -> Result<Character> {
    let Some(w) = highest_weight(b, n) else {
        return Ok(Character::zero(n));
    };
    let shift = w.iter().copied().min().unwrap_or(0).min(0);
    let shape: Vec<usize> = w.iter().map(|&x| (x - shift) as usize).collect();
    let s = schur_functor(&Partition::new(shape)?, &unit_weights(n, 1), n)?;
    Ok(Character {
        n,
        terms: s.terms.into_iter().map(|(k, c)| (k.into_iter().map(|x| x + shift).collect(), c)).collect(),
    })
}

pub fn character(expr: &RepExpr, n: usize) -> Result<Character> {
    Ok(match expr {
        RepExpr::Trivial => Character::one(n),
        RepExpr::Standard => unit_weights(n, 1).into_iter().fold(Character::zero(n), |mut c, w| {
            c.add_term(w, 1);
            c
        }),
        RepExpr::Dual => unit_weights(n, -1).into_iter().fold(Character::zero(n), |mut c, w| {
            c.add_term(w, 1);
            c
        }),
        RepExpr::Irrep(b) => irreducible_character(b, n)?,
        RepExpr::Sum(a, b) => character(a, n)?.add(&character(b, n)?),
        RepExpr::Tensor(a, b) => character(a, n)?.mul(&character(b, n)?),
        RepExpr::Sym(k, a) => schur_functor(&Partition::row(*k), &character(a, n)?.weights()?, n)?,
        RepExpr::Wedge(k, a) => schur_functor(&Partition::column(*k), &character(a, n)?.weights()?, n)?,
        RepExpr::Schur(nu, a) => schur_functor(nu, &character(a, n)?.weights()?, n)?,
    })
}

/// Irreducible decomposition of `expr` at rank `n ≤ 5`.
pub fn character_decompose(expr: &RepExpr, n: usize) -> Result<Decomposition> {
    if n == 0 || n > MAX_CHARACTER_RANK {
        return Err(Error::invalid(format!("character work needs 1 ≤ n ≤ {MAX_CHARACTER_RANK}, got {n}")));
    }
    decompose_character(character(expr, n)?)
}

pub fn decompose_character(mut ch: Character) -> Result<Decomposition> {
    let n = ch.n;
    let mut out = Decomposition::new();
    while let Some((top, &mult)) = ch.terms.iter().next_back() {
        if mult < 0 {
            return Err(Error::internal(format!("character remainder has negative top term at {top:?}")));
        }
        let b = bipartition_of_weight(top)?;
        let irr = irreducible_character(&b, n)?;
        for (w, c) in &irr.terms {
            ch.add_term(w.clone(), -c * mult);
        }
        out.add_term(b, BigUint::from(mult as u64));
    }
    Ok(out)
}
