//! Schur-function plethysm through the power-sum basis.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cancel::CancelToken;
use crate::combinatorics::{partitions_of, symmetric_group_character, Partition};
use crate::error::{Error, Result};

/// Default bound on `|outer|·|inner|`.
pub const DEFAULT_PLETHYSM_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct PlethysmConfig {
    pub size_cap: usize,
    pub cancel: Option<CancelToken>,
}

impl Default for PlethysmConfig {
    fn default() -> Self {
        PlethysmConfig { size_cap: DEFAULT_PLETHYSM_CAP, cancel: None }
    }
}

impl PlethysmConfig {
    fn checkpoint(&self) -> Result<()> {
        match &self.cancel {
            Some(c) => c.check(),
            None => Ok(()),
        }
    }
}

type PowerSum = BTreeMap<Partition, BigRational>;

/// `z_ρ = Π_i i^{m_i} m_i!`, the centralizer order of cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let parts = rho.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut m = 0usize;
        while i < parts.len() && parts[i] == v {
            m += 1;
            i += 1;
            z *= v;
            z *= m;
        }
    }
    z
}

fn schur_to_power_sum(shape: &Partition) -> Result<PowerSum> {
    let mut out = PowerSum::new();
    for rho in partitions_of(shape.size(), None) {
        let chi = symmetric_group_character(shape, &rho)?;
        if chi.is_zero() {
            continue;
        }
        let z = BigInt::from(centralizer_order(&rho));
        out.insert(rho, BigRational::new(chi, z));
    }
    Ok(out)
}

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("merged parts are sorted")
}

fn multiply(a: &PowerSum, b: &PowerSum) -> PowerSum {
    let mut out = PowerSum::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            *out.entry(merge_parts(pa, pb)).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `p_r[f]`: scale every part of every power-sum index by `r`.
fn adams(f: &PowerSum, r: usize) -> PowerSum {
    f.iter()
        .map(|(rho, c)| {
            let parts = rho.parts().iter().map(|&x| x * r).collect();
            (Partition::new(parts).expect("scaled parts stay sorted"), c.clone())
        })
        .collect()
}

/// Exact Schur expansion of `s_outer[s_inner]`.
pub fn plethysm_schur(outer: &Partition, inner: &Partition) -> Result<BTreeMap<Partition, BigUint>> {
    plethysm_schur_with(outer, inner, &PlethysmConfig::default())
}

pub fn plethysm_schur_with(
    outer: &Partition,
    inner: &Partition,
    config: &PlethysmConfig,
) -> Result<BTreeMap<Partition, BigUint>> {
    let total = outer.size() * inner.size();
    if total > config.size_cap {
        return Err(Error::capacity(format!(
            "plethysm s_{outer:?}[s_{inner:?}] has degree {total} above the cap {}",
            config.size_cap
        )));
    }
    if outer.is_empty() {
        return Ok(BTreeMap::from([(Partition::empty(), BigUint::one())]));
    }
    if inner.is_empty() {
        // s_ν[1] is 1 for one-row ν and 0 otherwise.
        return Ok(if outer.len() == 1 {
            BTreeMap::from([(Partition::empty(), BigUint::one())])
        } else {
            BTreeMap::new()
        });
    }

    let inner_ps = schur_to_power_sum(inner)?;
    let mut adams_cache: BTreeMap<usize, PowerSum> = BTreeMap::new();
    let mut composed = PowerSum::new();
    for rho in partitions_of(outer.size(), None) {
        config.checkpoint()?;
        let chi = symmetric_group_character(outer, &rho)?;
        if chi.is_zero() {
            continue;
        }
        let coeff = BigRational::new(chi, BigInt::from(centralizer_order(&rho)));
        let mut product = PowerSum::from([(Partition::empty(), BigRational::one())]);
        for &r in rho.parts() {
            let factor = adams_cache.entry(r).or_insert_with(|| adams(&inner_ps, r));
            product = multiply(&product, factor);
        }
        for (tau, c) in product {
            *composed.entry(tau).or_insert_with(BigRational::zero) += &coeff * c;
        }
    }
    composed.retain(|_, c| !c.is_zero());

    // p_τ = Σ_ν χ^ν(τ) s_ν
    let mut out = BTreeMap::new();
    for nu in partitions_of(total, None) {
        config.checkpoint()?;
        let mut c = BigRational::zero();
        for (tau, coeff) in &composed {
            let chi = symmetric_group_character(&nu, tau)?;
            if !chi.is_zero() {
                c += coeff * BigRational::from_integer(chi);
            }
        }
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() || c.is_negative() {
            return Err(Error::internal(format!(
                "plethysm coefficient of s_{nu:?} in s_{outer:?}[s_{inner:?}] is {c}"
            )));
        }
        let c = c.to_integer().to_biguint().expect("nonnegative");
        out.insert(nu, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn expansion(terms: &[(&[usize], u32)]) -> BTreeMap<Partition, BigUint> {
        terms.iter().map(|(l, c)| (p(l), BigUint::from(*c))).collect()
    }

    #[test]
    fn trivial_plethysms() {
        assert_eq!(plethysm_schur(&p(&[2]), &p(&[1])).unwrap(), expansion(&[(&[2], 1)]));
        assert_eq!(plethysm_schur(&p(&[1, 1]), &p(&[1])).unwrap(), expansion(&[(&[1, 1], 1)]));
    }

    #[test]
    fn squares_of_exterior_square() {
        assert_eq!(
            plethysm_schur(&p(&[2]), &p(&[1, 1])).unwrap(),
            expansion(&[(&[2, 2], 1), (&[1, 1, 1, 1], 1)])
        );
        assert_eq!(plethysm_schur(&p(&[1, 1]), &p(&[1, 1])).unwrap(), expansion(&[(&[2, 1, 1], 1)]));
    }

    #[test]
    fn h3_of_h2() {
        // h3[h2] = s6 + s42 + s222
        assert_eq!(
            plethysm_schur(&p(&[3]), &p(&[2])).unwrap(),
            expansion(&[(&[6], 1), (&[4, 2], 1), (&[2, 2, 2], 1)])
        );
    }

    #[test]
    fn cap_and_cancellation() {
        let cfg = PlethysmConfig { size_cap: 6, cancel: None };
        assert!(matches!(
            plethysm_schur_with(&p(&[3]), &p(&[3]), &cfg),
            Err(Error::Capacity(_))
        ));
        let token = CancelToken::new();
        token.cancel();
        let cfg = PlethysmConfig { size_cap: 20, cancel: Some(token) };
        assert_eq!(plethysm_schur_with(&p(&[2]), &p(&[2]), &cfg), Err(Error::Cancelled));
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(centralizer_order(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(centralizer_order(&p(&[2, 2])), BigUint::from(8u32));
        assert_eq!(centralizer_order(&Partition::empty()), BigUint::from(1u32));
    }
}
