//! Exact rank and kernel computations for sparse integer matrices.
//!
//! Small matrices go through fraction-free Bareiss elimination over `BigInt`.
//! Larger ones are ranked modulo two 62-bit primes, which must agree; on
//! disagreement a third prime decides, and an unresolved split is an internal
//! error.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cancel::CancelToken;
use crate::error::{Error, Result};

/// Matrices with at most this many entries (`rows · cols`) use Bareiss.
pub const BAREISS_ENTRY_LIMIT: usize = 40_000;

/// `2^62 − 57`, `2^62 − 87`, `2^62 − 117`.
pub const PRIMES: [u64; 3] = [
    (1u64 << 62) - 57,
    (1u64 << 62) - 87,
    (1u64 << 62) - 117,
];

/// Row-sparse integer matrix. Each row is sorted by column with no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged dense matrix");
            m.push_row(r.iter().enumerate().map(|(j, &v)| (j, v)));
        }
        m
    }

    /// Adds a row given as `(column, value)` pairs in any order; repeated
    /// columns are summed. All-zero rows are dropped.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (j, v) in entries {
            assert!(j < self.ncols, "column {j} out of range {}", self.ncols);
            *acc.entry(j).or_insert(0) += v;
        }
        let row: Vec<_> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    /// Builds a matrix keeping every row, including empty ones, so row
    /// indices stay meaningful. Rows must be sorted and free of zeros.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<(usize, i64)>>) -> Self {
        for r in &rows {
            assert!(r.windows(2).all(|w| w[0].0 < w[1].0), "row not sorted");
            assert!(r.iter().all(|&(j, v)| j < ncols && v != 0), "bad row entry");
        }
        SparseMatrix { ncols, rows }
    }

    pub fn extend(&mut self, other: &SparseMatrix) {
        assert_eq!(self.ncols, other.ncols, "column count mismatch");
        self.rows.extend(other.rows.iter().cloned());
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                cols[j].push((i, v));
            }
        }
        SparseMatrix { ncols: self.rows.len(), rows: cols.into_iter().filter(|c| !c.is_empty()).collect() }
    }

    fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); self.ncols];
                for &(j, v) in r {
                    d[j] = BigInt::from(v);
                }
                d
            })
            .collect()
    }
}

fn checkpoint(cancel: Option<&CancelToken>) -> Result<()> {
    cancel.map_or(Ok(()), CancelToken::check)
}

/// Fraction-free Gaussian elimination; exact for any size but dense.
pub fn rank_bareiss(m: &SparseMatrix) -> usize {
    let mut a = m.to_dense();
    let rows = a.len();
    let cols = m.ncols;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn to_mod(v: i64, p: u64) -> u64 {
    let r = (v as i128).rem_euclid(p as i128);
    r as u64
}

/// Rank over `Z/p` by online sparse elimination. Duplicate rows are skipped.
pub fn rank_mod_p(m: &SparseMatrix, p: u64, cancel: Option<&CancelToken>) -> Result<usize> {
    let mut seen: HashSet<&[(usize, i64)]> = HashSet::new();
    // Pivot rows keyed by leading column, each normalized to leading 1.
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for (k, row) in m.rows.iter().enumerate() {
        if k % 256 == 0 {
            checkpoint(cancel)?;
        }
        if !seen.insert(row.as_slice()) {
            continue;
        }
        let mut cur: Vec<(usize, u64)> =
            row.iter().map(|&(j, v)| (j, to_mod(v, p))).filter(|&(_, v)| v != 0).collect();
        loop {
            let Some(&(lead, lv)) = cur.first() else {
                break;
            };
            match pivots.get(&lead) {
                Some(piv) => cur = axpy(&cur, p - lv, piv, p),
                None => {
                    let inv = pow_mod(lv, p - 2, p);
                    let normed = cur.iter().map(|&(j, v)| (j, mul_mod(v, inv, p))).collect();
                    pivots.insert(lead, normed);
                    break;
                }
            }
        }
        if pivots.len() == m.ncols {
            break;
        }
    }
    Ok(pivots.len())
}

/// `x + s·y` over `Z/p` for sorted sparse vectors.
fn axpy(x: &[(usize, u64)], s: u64, y: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            let v = mul_mod(s, y[j].1, p);
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = (x[i].1 + mul_mod(s, y[j].1, p)) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Which elimination produced a rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankRoute {
    Bareiss,
    Modular { primes_used: usize },
}

/// Exact rank with the size-dependent policy described in the module docs.
pub fn exact_rank(m: &SparseMatrix, cancel: Option<&CancelToken>) -> Result<(usize, RankRoute)> {
    if m.nrows().saturating_mul(m.ncols()) <= BAREISS_ENTRY_LIMIT {
        checkpoint(cancel)?;
        return Ok((rank_bareiss(m), RankRoute::Bareiss));
    }
    let (r1, r2) = std::thread::scope(|s| {
        let h = s.spawn(|| rank_mod_p(m, PRIMES[1], cancel));
        let r1 = rank_mod_p(m, PRIMES[0], cancel);
        (r1, h.join().expect("rank worker panicked"))
    });
    let (r1, r2) = (r1?, r2?);
    if r1 == r2 {
        return Ok((r1, RankRoute::Modular { primes_used: 2 }));
    }
    // A modular rank can only drop below the true rank, never exceed it.
    let r3 = rank_mod_p(m, PRIMES[2], cancel)?;
    let hi = r1.max(r2);
    if r3 == hi {
        Ok((hi, RankRoute::Modular { primes_used: 3 }))
    } else {
        Err(Error::internal(format!("modular ranks disagree: {r1}, {r2}, {r3}")))
    }
}

pub fn rank(m: &SparseMatrix) -> Result<usize> {
    exact_rank(m, None).map(|(r, _)| r)
}

/// A basis of `{x : M x = 0}` over `Q`, from the reduced row echelon form.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<BigRational>> {
    let ncols = m.ncols;
    let mut pivots: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
    for row in &m.rows {
        let mut cur = vec![BigRational::zero(); ncols];
        for &(j, v) in row {
            cur[j] = BigRational::from_integer(v.into());
        }
        for (&c, prow) in &pivots {
            if !cur[c].is_zero() {
                let f = cur[c].clone();
                for (x, y) in cur.iter_mut().zip(prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let Some(lead) = cur.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = cur[lead].recip();
        for x in cur.iter_mut() {
            *x *= &inv;
        }
        for prow in pivots.values_mut() {
            if !prow[lead].is_zero() {
                let f = prow[lead].clone();
                for (x, y) in prow.iter_mut().zip(&cur) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.insert(lead, cur);
    }
    (0..ncols)
        .filter(|c| !pivots.contains_key(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); ncols];
            v[free] = BigRational::one();
            for (&c, prow) in &pivots {
                v[c] = -prow[free].clone();
            }
            v
        })
        .collect()
}

/// Clears denominators and divides by the content, so the first nonzero entry
/// is positive.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) { -1 } else { 1 };
    ints.into_iter().map(|x| x / &g * sign).collect()
}
