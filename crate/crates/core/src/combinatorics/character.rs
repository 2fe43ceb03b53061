use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};

fn memo() -> &'static RwLock<HashMap<(Partition, Partition), BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Irreducible character `χ^λ` of the symmetric group evaluated on cycle type `ρ`
/// (Murnaghan–Nakayama rule, rim hooks removed via beta-numbers).
pub fn symmetric_group_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::invalid(format!(
            "character size mismatch: |{lambda}| = {} but |{rho}| = {}",
            lambda.size(),
            rho.size()
        )));
    }
    Ok(mn(lambda, rho.parts()))
}

fn mn(lambda: &Partition, rho: &[usize]) -> BigInt {
    if rho.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), Partition::from_sorted_unchecked(rho.to_vec()));
    if let Some(v) = memo().read().expect("character memo poisoned").get(&key) {
        return v.clone();
    }

    let r = rho[0];
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = next.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        let smaller = Partition::new(parts).expect("rim hook removal keeps a partition");
        let term = mn(&smaller, &rho[1..]);
        if crossed % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }

    memo()
        .write()
        .expect("character memo poisoned")
        .insert(key, total.clone());
    total
}
