//! Endomorphisms of `F_n` given by generator images.

use std::collections::BTreeMap;

use albanese_core::{Error, Result};

use crate::word::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeEndomorphism {
    n: usize,
    images: Vec<FreeWord>,
}

impl FreeEndomorphism {
    pub fn identity(n: usize) -> Self {
        FreeEndomorphism { n, images: (1..=n).map(|a| FreeWord::generator(n, a).expect("in range")).collect() }
    }

    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let n = images.len();
        if let Some(w) = images.iter().find(|w| w.rank() != n) {
            return Err(Error::invalid(format!("image {w} has rank {} in an endomorphism of rank {n}", w.rank())));
        }
        Ok(FreeEndomorphism { n, images })
    }

    /// The identity except on `x_a`.
    pub fn with_image(n: usize, a: usize, image: FreeWord) -> Result<Self> {
        if a == 0 || a > n {
            return Err(Error::invalid(format!("generator x{a} outside rank {n}")));
        }
        let mut f = Self::identity(n);
        f.images[a - 1] = image;
        Self::new(f.images)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn image(&self, a: usize) -> &FreeWord {
        &self.images[a - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Parses `{"x1": "x2 x1 x2^-1", ...}`; generators not listed are fixed.
    pub fn from_json(n: usize, text: &str) -> Result<Self> {
        let map: BTreeMap<String, String> =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("endomorphism JSON: {e}")))?;
        let mut f = Self::identity(n);
        for (key, value) in map {
            let a: usize = key
                .strip_prefix('x')
                .and_then(|s| s.parse().ok())
                .filter(|&a| (1..=n).contains(&a))
                .ok_or_else(|| Error::invalid(format!("bad generator key {key:?} for rank {n}")))?;
            f.images[a - 1] = FreeWord::parse(n, &value)?;
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, String> =
            self.images.iter().enumerate().map(|(k, w)| (format!("x{}", k + 1), w.to_string())).collect();
        serde_json::to_string(&map).expect("string map serializes")
    }

    /// `f ∘ g`.
    pub fn compose(&self, g: &FreeEndomorphism) -> Result<Self> {
        let images = g.images.iter().map(|w| apply_endo(self, w)).collect::<Result<_>>()?;
        Self::new(images)
    }

    /// Column `a` holds the exponent sums of `f(x_a)`.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let cols: Vec<Vec<i64>> = self.images.iter().map(FreeWord::abelianize).collect();
        (0..self.n).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
    }
}

/// Substitutes generator images into `w` and reduces.
pub fn apply_endo(f: &FreeEndomorphism, w: &FreeWord) -> Result<FreeWord> {
    if f.n != w.rank() {
        return Err(Error::invalid(format!("endomorphism of rank {} applied to a word of rank {}", f.n, w.rank())));
    }
    let mut out = FreeWord::identity(f.n);
    for &l in w.letters() {
        let img = &f.images[l.unsigned_abs() as usize - 1];
        out = if l > 0 { out.mul(img)? } else { out.mul(&img.inverse())? };
    }
    Ok(out)
}

/// Whether `f` acts trivially on `H = F_n^{ab}`.
pub fn is_ia(f: &FreeEndomorphism) -> bool {
    f.abelianization().iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(r == c)))
}

/// `K_{a,b}: x_a ↦ x_b x_a x_b⁻¹` for `a ≠ b`, then `K_{a,b,c}: x_a ↦ x_a [x_b, x_c]`
/// for `b < c` with `a ∉ {b, c}`.
pub fn magnus_generators(n: usize) -> Result<Vec<FreeEndomorphism>> {
    if n < 3 {
        return Err(Error::invalid(format!("Magnus generators need n ≥ 3, got {n}")));
    }
    let mut out = Vec::new();
    for a in 1..=n {
        for b in (1..=n).filter(|&b| b != a) {
            out.push(conjugation(n, a, b)?);
        }
    }
    for a in 1..=n {
        for b in (1..=n).filter(|&b| b != a) {
            for c in (b + 1..=n).filter(|&c| c != a) {
                out.push(commutator_twist(n, a, b, c)?);
            }
        }
    }
    Ok(out)
}

/// `K_{a,b}`.
pub fn conjugation(n: usize, a: usize, b: usize) -> Result<FreeEndomorphism> {
    let (a_, b_) = (a as i32, b as i32);
    FreeEndomorphism::with_image(n, a, crate::word::reduce_word(n, &[b_, a_, -b_])?)
}

/// `K_{a,b,c}`.
pub fn commutator_twist(n: usize, a: usize, b: usize, c: usize) -> Result<FreeEndomorphism> {
    let (a_, b_, c_) = (a as i32, b as i32, c as i32);
    FreeEndomorphism::with_image(n, a, crate::word::reduce_word(n, &[a_, b_, c_, -b_, -c_])?)
}
