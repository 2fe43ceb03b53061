//! Stable Albanese homology of `IA_n` and `IO_n` as graded-symmetric algebras
//! on `U_i = Hom(H, ∧^{i+1} H)`, restricted to their traceless parts.
//!
//! Every generator of `U_*` is either a *corolla* of degree `l`, shape
//! `V_{1^{l+1},1}`, or a *wheel* of degree `l`, shape `V_{1^l,0}`. A graded
//! piece `W_i` is the sum, over multisets of generators of total degree `i`, of
//! the traceless product of the graded-symmetric powers of each generator type.
//! Outputs are valid for `n ≥ 3i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{partitions_of, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::schur::{
    dim_polynomial, evaluate_at_rank, graded_symmetric_power, tensor_by_standard, traceless_product,
    Decomposition, DimensionPolynomial,
};

/// `IA_n` (full) or `IO_n` (outer).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Full,
    Outer,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::Outer => "outer",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "outer" => Ok(Variant::Outer),
            other => Err(Error::invalid(format!("unknown variant {other:?} (expected full|outer)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Degree `l`, shape `V_{1^{l+1},1}`.
    Corolla(usize),
    /// Degree `l`, shape `V_{1^l,0}`.
    Wheel(usize),
}

impl Generator {
    pub fn degree(self) -> usize {
        match self {
            Generator::Corolla(l) | Generator::Wheel(l) => l,
        }
    }

    pub fn shape(self) -> Bipartition {
        match self {
            Generator::Corolla(l) => Bipartition::new(Partition::column(l + 1), Partition::row(1)),
            Generator::Wheel(l) => Bipartition::new(Partition::column(l), Partition::empty()),
        }
    }

    fn allowed(self, variant: Variant) -> bool {
        !(variant == Variant::Outer && self == Generator::Wheel(1))
    }
}

/// A multiset of generators, stored as generator → multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GeneratorMultiset {
    counts: BTreeMap<Generator, usize>,
}

impl GeneratorMultiset {
    pub fn counts(&self) -> &BTreeMap<Generator, usize> {
        &self.counts
    }

    pub fn total_degree(&self) -> usize {
        self.counts.iter().map(|(g, k)| g.degree() * k).sum()
    }

    /// `a = Σ (l+1) over corollas + Σ l over wheels`.
    pub fn covariant_size(&self) -> usize {
        self.counts.iter().map(|(g, k)| g.shape().covariant.size() * k).sum()
    }

    /// `b` = number of corollas.
    pub fn contravariant_size(&self) -> usize {
        self.counts
            .iter()
            .filter(|(g, _)| matches!(g, Generator::Corolla(_)))
            .map(|(_, k)| k)
            .sum()
    }

    pub fn is_singleton(&self) -> bool {
        self.counts.values().sum::<usize>() == 1
    }

    /// Traceless product over generator types of their graded-symmetric powers.
    pub fn contribution(&self) -> Result<Decomposition> {
        let mut acc = Decomposition::unit();
        for (&g, &k) in &self.counts {
            let power = graded_symmetric_power(&g.shape(), g.degree(), k)?;
            acc = traceless_product(&acc, &power);
        }
        Ok(acc)
    }
}

/// Every generator multiset of total degree `i`, in a fixed order.
pub fn generator_multisets(i: usize, variant: Variant) -> Vec<GeneratorMultiset> {
    let types: Vec<Generator> = (1..=i)
        .flat_map(|l| [Generator::Corolla(l), Generator::Wheel(l)])
        .filter(|g| g.allowed(variant))
        .collect();
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    choose(&types, i, &mut current, &mut out);
    out
}

fn choose(
    types: &[Generator],
    rest: usize,
    cur: &mut BTreeMap<Generator, usize>,
    out: &mut Vec<GeneratorMultiset>,
) {
    if rest == 0 {
        out.push(GeneratorMultiset { counts: cur.clone() });
        return;
    }
    let Some((&g, tail)) = types.split_first() else {
        return;
    };
    for k in (0..=rest / g.degree()).rev() {
        if k > 0 {
            cur.insert(g, k);
        }
        choose(tail, rest - k * g.degree(), cur, out);
        cur.remove(&g);
    }
}

/// `U_i = Hom(H, ∧^{i+1} H) = V_{1^{i+1},1} ⊕ V_{1^i,0}`, tagged with degree `i`.
pub fn generator_u(i: usize) -> Result<Decomposition> {
    if i < 1 {
        return Err(Error::invalid("U_i is defined for i ≥ 1"));
    }
    Ok(Decomposition::from_terms([
        (Generator::Corolla(i).shape(), BigUint::from(1u32)),
        (Generator::Wheel(i).shape(), BigUint::from(1u32)),
    ])
    .with_grade(i))
}

/// `U^O_1 = V_{1^2,1}` and `U^O_i = U_i` for `i ≥ 2`.
pub fn generator_u_out(i: usize) -> Result<Decomposition> {
    match i {
        0 => Err(Error::invalid("U^O_i is defined for i ≥ 1")),
        1 => Ok(Decomposition::single(Generator::Corolla(1).shape()).with_grade(1)),
        _ => generator_u(i),
    }
}

/// A stable graded piece `W_i` or `W^O_i` with its validity threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlbaneseHomology {
    pub degree: usize,
    pub variant: Variant,
    pub decomposition: Decomposition,
}

impl AlbaneseHomology {
    /// Smallest rank at which the decomposition is asserted: `3i`.
    pub fn stable_from(&self) -> usize {
        3 * self.degree
    }

    /// Terms surviving at rank `n`. Below `3i` the stable answer is not
    /// asserted, so `allow_unstable` must be set explicitly.
    pub fn at_rank(&self, n: usize, allow_unstable: bool) -> Result<Decomposition> {
        if n < self.stable_from() && !allow_unstable {
            return Err(Error::invalid(format!(
                "rank {n} is below the stable range n ≥ {} for degree {}",
                self.stable_from(),
                self.degree
            )));
        }
        Ok(evaluate_at_rank(&self.decomposition, n))
    }
}

type WKey = (usize, Variant);

fn w_memo() -> &'static RwLock<HashMap<WKey, Decomposition>> {
    static MEMO: OnceLock<RwLock<HashMap<WKey, Decomposition>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `W_i` (variant full) or `W^O_i` (variant outer).
pub fn albanese_w(i: usize, variant: Variant) -> Result<AlbaneseHomology> {
    let key = (i, variant);
    let cached = w_memo().read().expect("albanese memo poisoned").get(&key).cloned();
    let decomposition = match cached {
        Some(d) => d,
        None => {
            let mut total = Decomposition::new();
            for m in generator_multisets(i, variant) {
                total += &m.contribution()?;
            }
            let total = total.with_grade(i);
            w_memo()
                .write()
                .expect("albanese memo poisoned")
                .insert(key, total.clone());
            total
        }
    };
    Ok(AlbaneseHomology { degree: i, variant, decomposition })
}

/// The `(|λ|, |μ|)` pairs occurring in `W_i`.
pub fn constituent_support(i: usize) -> Result<Vec<(usize, usize)>> {
    Ok(albanese_w(i, Variant::Full)?.decomposition.size_support())
}

/// Whether `W_i = W^O_i ⊕ (W^O_{i−1} ⊗ H)` holds as multisets of irreducibles.
pub fn verify_io_splitting(i: usize) -> Result<bool> {
    if i < 1 {
        return Err(Error::invalid("splitting is stated for i ≥ 1"));
    }
    let full = albanese_w(i, Variant::Full)?.decomposition;
    let outer = albanese_w(i, Variant::Outer)?.decomposition;
    let lower = albanese_w(i - 1, Variant::Outer)?.decomposition;
    Ok(full == outer + &tensor_by_standard(&lower))
}

/// Dimension polynomial of `W_i` or `W^O_i`, valid for `n ≥ 3i`.
pub fn albanese_dim_polynomial(i: usize, variant: Variant) -> Result<DimensionPolynomial> {
    let w = albanese_w(i, variant)?;
    Ok(dim_polynomial(&w.decomposition).with_threshold(w.stable_from()))
}

/// A dimension formula that holds only under a stated hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjecturalDimension {
    pub polynomial: DimensionPolynomial,
    pub hypothesis: &'static str,
}

impl ConjecturalDimension {
    pub fn is_conjectural(&self) -> bool {
        true
    }
}

pub const ALGEBRAICITY_HYPOTHESIS: &str =
    "conditional on H^i(IA_n, Q) being an algebraic GL(n, Q)-representation for n >> i";

/// Number of monomials of degree `l` in generators `z_j` of degree `4j`.
pub fn z_monomial_count(l: usize) -> usize {
    if l % 4 != 0 {
        0
    } else {
        partitions_of(l / 4, None).len()
    }
}

/// `Σ_{k+l=i} dim W_k · #{monomials of degree l in z_1, z_2, …}`.
pub fn conjectural_cohomology_dim(i: usize) -> Result<ConjecturalDimension> {
    let mut total = DimensionPolynomial::zero(0);
    for k in 0..=i {
        let m = z_monomial_count(i - k);
        if m == 0 {
            continue;
        }
        let pk = albanese_dim_polynomial(k, Variant::Full)?;
        total = &total + &pk.scaled(&BigRational::from_integer(BigInt::from(m)));
    }
    Ok(ConjecturalDimension {
        polynomial: total.with_threshold(3 * i),
        hypothesis: ALGEBRAICITY_HYPOTHESIS,
    })
}

/// The part of `W_i` coming from single generators; equals `U_i`.
pub fn primitive_part(i: usize) -> Result<Decomposition> {
    if i < 1 {
        return Err(Error::invalid("primitive part is taken in degrees i ≥ 1"));
    }
    let mut out = Decomposition::new();
    for m in generator_multisets(i, Variant::Full).into_iter().filter(GeneratorMultiset::is_singleton) {
        out += &m.contribution()?;
    }
    Ok(out.with_grade(i))
}

/// Total dimension of `W_i` at rank `n`, zero-checked against the polynomial.
pub fn albanese_dim_at(i: usize, variant: Variant, n: usize) -> Result<BigUint> {
    let w = albanese_w(i, variant)?;
    let d = w.at_rank(n, true)?.total_dim_at(n);
    debug_assert!(n < w.stable_from() || !d.is_zero() || w.decomposition.is_empty() || n == 0);
    Ok(d)
}
