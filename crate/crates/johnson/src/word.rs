//! Reduced words in the free group `F_n`.

use std::fmt;

use albanese_core::{Error, Result};

/// A freely reduced word. Letters are signed, 1-based generator indices:
/// `3` is `x3` and `-3` is `x3^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    n: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(n: usize) -> Self {
        FreeWord { n, letters: Vec::new() }
    }

    pub fn generator(n: usize, a: usize) -> Result<Self> {
        reduce_word(n, &[a as i32])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord { n: self.n, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &FreeWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::invalid(format!("cannot multiply words of ranks {} and {}", self.n, other.n)));
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord { n: self.n, letters })
    }

    /// Exponent sums, i.e. the image in `H = Z^n`.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0; self.n];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// Parses caret notation such as `"x1 x2^-1 x1"`; `"1"` or an empty string
    /// is the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let body = tok.strip_prefix('x').ok_or_else(|| Error::invalid(format!("bad letter {tok:?}")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i32>().map_err(|_| Error::invalid(format!("bad exponent in {tok:?}")))?),
                None => (body, 1),
            };
            let a: i32 = idx.parse().map_err(|_| Error::invalid(format!("bad generator index in {tok:?}")))?;
            if a <= 0 {
                return Err(Error::invalid(format!("generator index must be positive in {tok:?}")));
            }
            raw.extend(std::iter::repeat_n(a * exp.signum(), exp.unsigned_abs() as usize));
        }
        reduce_word(n, &raw)
    }
}

fn push_reduced(letters: &mut Vec<i32>, l: i32) {
    if letters.last() == Some(&-l) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// Freely reduces a raw sequence of signed 1-based generator indices.
pub fn reduce_word(n: usize, raw: &[i32]) -> Result<FreeWord> {
    let mut letters = Vec::with_capacity(raw.len());
    for &l in raw {
        if l == 0 || l.unsigned_abs() as usize > n {
            return Err(Error::invalid(format!("letter {l} is outside rank {n}")));
        }
        push_reduced(&mut letters, l);
    }
    Ok(FreeWord { n, letters })
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}
