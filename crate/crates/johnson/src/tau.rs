//! The Johnson homomorphism `τ: IA_n → Hom(H, ∧²H)` and its pairing with `H^{1,2}`.

use std::collections::BTreeMap;
use std::fmt;

use albanese_core::linalg::{exact_rank, SparseMatrix};
use albanese_core::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::endo::{is_ia, magnus_generators, FreeEndomorphism};
use crate::word::FreeWord;

/// An element of `Hom(H, ∧²H)`: for each `e_a`, integer coefficients on
/// `e_b ∧ e_c` with `b < c` (all indices 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JohnsonValue {
    n: usize,
    images: Vec<BTreeMap<(usize, usize), i64>>,
}

impl JohnsonValue {
    pub fn zero(n: usize) -> Self {
        JohnsonValue { n, images: vec![BTreeMap::new(); n] }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Adds `coef · e_b ∧ e_c` to the image of `e_a`, normalizing to `b < c`.
    pub fn add_wedge(&mut self, a: usize, b: usize, c: usize, coef: i64) {
        if b == c || coef == 0 {
            return;
        }
        let (key, coef) = if b < c { ((b, c), coef) } else { ((c, b), -coef) };
        let slot = self.images[a - 1].entry(key).or_insert(0);
        *slot += coef;
        if *slot == 0 {
            self.images[a - 1].remove(&key);
        }
    }

    /// Coefficient of `e_b ∧ e_c` in the image of `e_a`, for any order of `b, c`.
    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> i64 {
        match b.cmp(&c) {
            std::cmp::Ordering::Less => self.images[a - 1].get(&(b, c)).copied().unwrap_or(0),
            std::cmp::Ordering::Greater => -self.images[a - 1].get(&(c, b)).copied().unwrap_or(0),
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(BTreeMap::is_empty)
    }

    /// `(a, b, c, coef)` with `b < c`, in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        self.images.iter().enumerate().flat_map(|(k, m)| m.iter().map(move |(&(b, c), &v)| (k + 1, b, c, v)))
    }

    pub fn add(&self, other: &JohnsonValue) -> JohnsonValue {
        let mut out = self.clone();
        for (a, b, c, v) in other.terms() {
            out.add_wedge(a, b, c, v);
        }
        out
    }

    pub fn scaled(&self, k: i64) -> JohnsonValue {
        let mut out = JohnsonValue::zero(self.n);
        for (a, b, c, v) in self.terms() {
            out.add_wedge(a, b, c, k * v);
        }
        out
    }

    /// Coordinates in the basis `e_a^* ⊗ e_b ∧ e_c`, ordered by `a` then `(b, c)`.
    pub fn to_vector(&self) -> Vec<(usize, i64)> {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        self.terms().map(|(a, b, c, v)| ((a - 1) * pairs + pair_index(self.n, b, c), v)).collect()
    }
}

fn pair_index(n: usize, b: usize, c: usize) -> usize {
    // Pairs (b, c) with b < c in lexicographic order, 1-based.
    (b - 1) * (2 * n - b) / 2 + (c - b - 1)
}

impl fmt::Display for JohnsonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, m) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "e{} -> ", k + 1)?;
            if m.is_empty() {
                write!(f, "0")?;
            }
            for (t, (&(b, c), &v)) in m.iter().enumerate() {
                let sign = if v < 0 { "-" } else if t > 0 { "+" } else { "" };
                let mag = v.unsigned_abs();
                if mag == 1 {
                    write!(f, "{sign}e{b}^e{c}")?;
                } else {
                    write!(f, "{sign}{mag}e{b}^e{c}")?;
                }
            }
        }
        Ok(())
    }
}

/// Class of a commutator-subgroup word in `∧²H`, from the degree-2 Magnus
/// coefficients: `m_{bc} = Σ ε_i ε_j` over occurrences `i < j` of `x_b`, `x_c`.
pub fn wedge_class(w: &FreeWord) -> Result<BTreeMap<(usize, usize), i64>> {
    if w.abelianize().iter().any(|&v| v != 0) {
        return Err(Error::invalid(format!("word {w} is not in the commutator subgroup")));
    }
    let n = w.rank();
    // running[b] = signed count of x_b seen so far
    let mut running = vec![0i64; n + 1];
    let mut out = BTreeMap::new();
    for &l in w.letters() {
        let c = l.unsigned_abs() as usize;
        let eps = l.signum() as i64;
        for b in 1..c {
            if running[b] != 0 {
                *out.entry((b, c)).or_insert(0) += running[b] * eps;
            }
        }
        running[c] += eps;
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// `τ(f)(e_a) = [f(x_a) x_a⁻¹] ∈ ∧²H`.
pub fn johnson_tau(f: &FreeEndomorphism) -> Result<JohnsonValue> {
    if !is_ia(f) {
        return Err(Error::invalid("the Johnson homomorphism is defined on IA endomorphisms only"));
    }
    let n = f.rank();
    let mut out = JohnsonValue::zero(n);
    for a in 1..=n {
        let w = f.image(a).mul(&FreeWord::generator(n, a)?.inverse())?;
        for ((b, c), v) in wedge_class(&w)? {
            out.add_wedge(a, b, c, v);
        }
    }
    Ok(out)
}

/// Rank of `{τ(g) : g ∈ magnus_generators(n)}` in `Hom(H, ∧²H)`.
pub fn tau_span_dim(n: usize) -> Result<usize> {
    let gens = magnus_generators(n)?;
    let mut m = SparseMatrix::new(n * n * (n - 1) / 2);
    for g in &gens {
        let mut v = johnson_tau(g)?.to_vector();
        v.sort_unstable();
        m.push_row(v);
    }
    Ok(exact_rank(&m, None)?.0)
}

/// The basis element `e_i ⊗ e_j^* ⊗ e_k^*` of `H^{1,2}` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// A `Hom(H, ∧²H)`-valued function on a finite list of endomorphisms.
#[derive(Clone, Debug, Default)]
pub struct CocycleTable {
    entries: Vec<(FreeEndomorphism, JohnsonValue)>,
}

impl CocycleTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `τ` on the given IA endomorphisms.
    pub fn johnson(domain: &[FreeEndomorphism]) -> Result<Self> {
        let entries = domain.iter().map(|g| Ok((g.clone(), johnson_tau(g)?))).collect::<Result<_>>()?;
        Ok(CocycleTable { entries })
    }

    pub fn insert(&mut self, g: FreeEndomorphism, value: JohnsonValue) {
        match self.entries.iter_mut().find(|(h, _)| *h == g) {
            Some(e) => e.1 = value,
            None => self.entries.push((g, value)),
        }
    }

    pub fn get(&self, g: &FreeEndomorphism) -> Option<&JohnsonValue> {
        self.entries.iter().find(|(h, _)| h == g).map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `⟨c(g), e_i ⊗ e_j^* ⊗ e_k^*⟩`.
///
/// `c(g)` is read in `H^* ⊗ H ⊗ H` through `e_b ∧ e_c = e_b ⊗ e_c − e_c ⊗ e_b`,
/// and the pairing with `H^{1,2}` is nested: `e_j^* ⊗ e_k^*` meets
/// `e_k ⊗ e_j`. The result is the coefficient of `e_k ⊗ e_j` in `c(g)(e_i)`.
pub fn pairing_eval(c: &CocycleTable, g: &FreeEndomorphism, x: TensorIndex) -> Result<BigRational> {
    let value = c.get(g).ok_or_else(|| Error::invalid("endomorphism is not in the domain of the cocycle"))?;
    let n = value.rank();
    if [x.i, x.j, x.k].iter().any(|&t| t == 0 || t > n) {
        return Err(Error::invalid(format!("index word ({}; {}, {}) outside rank {n}", x.i, x.j, x.k)));
    }
    Ok(BigRational::from_integer(BigInt::from(value.coefficient(x.i, x.k, x.j))))
}

/// Linear extension of [`pairing_eval`] to combinations of basis elements.
pub fn pairing_eval_combination(
    c: &CocycleTable,
    g: &FreeEndomorphism,
    x: &[(BigRational, TensorIndex)],
) -> Result<BigRational> {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    for (coef, idx) in x {
        acc += coef * pairing_eval(c, g, *idx)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::{commutator_twist, conjugation};

    #[test]
    fn tau_of_named_generators() {
        let k12 = johnson_tau(&conjugation(3, 1, 2).unwrap()).unwrap();
        // e2 ∧ e1 = −e1 ∧ e2
        assert_eq!(k12.coefficient(1, 1, 2), -1);
        assert_eq!(k12.coefficient(1, 2, 1), 1);
        assert_eq!(k12.terms().count(), 1);
        assert_eq!(k12.to_string(), "e1 -> -e1^e2; e2 -> 0; e3 -> 0");
        let k123 = johnson_tau(&commutator_twist(3, 1, 2, 3).unwrap()).unwrap();
        assert_eq!(k123.terms().collect::<Vec<_>>(), vec![(1, 2, 3, 1)]);
        assert!(johnson_tau(&FreeEndomorphism::identity(3)).unwrap().is_zero());
    }

    #[test]
    fn non_ia_is_rejected() {
        let t = FreeEndomorphism::with_image(3, 1, FreeWord::parse(3, "x1 x2").unwrap()).unwrap();
        assert!(johnson_tau(&t).is_err());
        assert!(wedge_class(&FreeWord::parse(3, "x1").unwrap()).is_err());
    }

    #[test]
    fn span_dims() {
        assert_eq!(tau_span_dim(3).unwrap(), 9);
        assert_eq!(tau_span_dim(4).unwrap(), 24);
        assert_eq!(tau_span_dim(5).unwrap(), 50);
    }

    #[test]
    fn pair_indices_are_dense() {
        let n = 5;
        let idx: Vec<usize> = (1..=n).flat_map(|b| (b + 1..=n).map(move |c| pair_index(n, b, c))).collect();
        assert_eq!(idx, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn pairing_example() {
        let k12 = conjugation(3, 1, 2).unwrap();
        let table = CocycleTable::johnson(&[k12.clone(), FreeEndomorphism::identity(3)]).unwrap();
        let v = pairing_eval(&table, &k12, TensorIndex { i: 1, j: 2, k: 1 }).unwrap();
        assert_eq!(v, BigRational::from_integer((-1).into()));
        let id = FreeEndomorphism::identity(3);
        assert_eq!(pairing_eval(&table, &id, TensorIndex { i: 1, j: 2, k: 1 }).unwrap(), BigRational::from_integer(0.into()));
        let other = conjugation(3, 2, 1).unwrap();
        assert!(pairing_eval(&table, &other, TensorIndex { i: 1, j: 2, k: 1 }).is_err());
        assert!(pairing_eval(&table, &k12, TensorIndex { i: 4, j: 2, k: 1 }).is_err());
    }
}
