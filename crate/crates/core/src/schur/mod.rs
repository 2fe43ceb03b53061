//! Two-alphabet Schur calculus for stable mixed tensor representations of
//! `GL(n)`: a term `V_{λ,μ}` is carried by the character `s_λ(x)s_μ(y)`, so
//! traceless products and graded-symmetric powers become Littlewood–Richardson
//! and plethysm computations on each alphabet.

mod decomposition;
mod plethysm;
mod polynomial;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::One;

pub use decomposition::Decomposition;
pub use plethysm::{
    centralizer_order, plethysm_schur, plethysm_schur_with, PlethysmConfig, DEFAULT_PLETHYSM_CAP,
};
pub use polynomial::DimensionPolynomial;

use crate::combinatorics::{lr_product, partitions_of, specht_dim, Bipartition};
use crate::error::{Error, Result};

/// `V_{λ,μ} ⊗̃ V_{ξ,η}` extended bilinearly: Littlewood–Richardson on each side,
/// no contraction terms.
pub fn traceless_product(d1: &Decomposition, d2: &Decomposition) -> Decomposition {
    let mut out = Decomposition::new();
    for (b1, m1) in d1.terms() {
        for (b2, m2) in d2.terms() {
            let mult = m1 * m2;
            let cov = lr_product(&b1.covariant, &b2.covariant);
            let contra = lr_product(&b1.contravariant, &b2.contravariant);
            for (nu, c1) in &cov {
                for (kappa, c2) in &contra {
                    out.add_term(Bipartition::new(nu.clone(), kappa.clone()), &mult * (c1 * c2));
                }
            }
        }
    }
    out
}

/// Graded-symmetric `k`-th power of a single generator `V_{λ,μ}` of homological
/// degree `degree`, keeping only the traceless part.
///
/// Even degree uses `h_k[f(x)g(y)] = Σ_ν s_ν[f](x) s_ν[g](y)`, odd degree uses
/// `e_k[f(x)g(y)] = Σ_ν s_ν[f](x) s_ν'[g](y)`. The contravariant part of the
/// generator must have at most one box.
pub fn graded_symmetric_power(gen: &Bipartition, degree: usize, k: usize) -> Result<Decomposition> {
    graded_symmetric_power_with(gen, degree, k, &PlethysmConfig::default())
}

pub fn graded_symmetric_power_with(
    gen: &Bipartition,
    degree: usize,
    k: usize,
    config: &PlethysmConfig,
) -> Result<Decomposition> {
    if gen.contravariant.size() > 1 {
        return Err(Error::invalid(format!(
            "graded symmetric powers need a contravariant part with at most one box, got {gen}"
        )));
    }
    if k == 0 {
        return Ok(Decomposition::unit());
    }
    let odd = degree % 2 == 1;
    let mut out = Decomposition::new();
    for nu in partitions_of(k, None) {
        let partner = if odd { nu.conjugate() } else { nu.clone() };
        let contra = plethysm_schur_with(&partner, &gen.contravariant, config)?;
        if contra.is_empty() {
            continue;
        }
        let cov = plethysm_schur_with(&nu, &gen.covariant, config)?;
        for (kappa, c1) in &cov {
            for (eta, c2) in &contra {
                out.add_term(Bipartition::new(kappa.clone(), eta.clone()), c1 * c2);
            }
        }
    }
    Ok(out)
}

/// Koike decomposition of the traceless part `T_{p,q}`:
/// `V_{λ,μ}` with multiplicity `dim S^λ · dim S^μ` for `λ ⊢ p`, `μ ⊢ q`.
pub fn decompose_traceless(p: usize, q: usize) -> Decomposition {
    let mut out = Decomposition::new();
    for lambda in partitions_of(p, None) {
        let dl = specht_dim(&lambda);
        for mu in partitions_of(q, None) {
            let dm = specht_dim(&mu);
            out.add_term(Bipartition::new(lambda.clone(), mu), &dl * dm);
        }
    }
    out
}

/// Stable decomposition of `H^{p,q} = H^{⊗p} ⊗ (H*)^{⊗q}` as
/// `⊕_c T_{p−c,q−c}^{⊕ C(p,c) C(q,c) c!}`.
pub fn decompose_mixed_tensor(p: usize, q: usize) -> Decomposition {
    let mut out = Decomposition::new();
    for c in 0..=p.min(q) {
        let outer = mixed_contraction_count(p, q, c);
        out += &decompose_traceless(p - c, q - c).scaled(&outer);
    }
    out
}

/// `C(p,c)·C(q,c)·c!`: the number of ways to choose `c` disjoint contraction pairs.
pub fn mixed_contraction_count(p: usize, q: usize, c: usize) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=c {
        f *= k;
    }
    binomial(BigUint::from(p), BigUint::from(c)) * binomial(BigUint::from(q), BigUint::from(c)) * f
}

/// Full (contracting) tensor product with the standard representation `H`.
pub fn tensor_by_standard(d: &Decomposition) -> Decomposition {
    let mut out = Decomposition::new();
    for (b, m) in d.terms() {
        for row in b.covariant.addable_rows() {
            out.add_term(Bipartition::new(b.covariant.with_box_added(row), b.contravariant.clone()), m.clone());
        }
        for row in b.contravariant.removable_rows() {
            out.add_term(Bipartition::new(b.covariant.clone(), b.contravariant.with_box_removed(row)), m.clone());
        }
    }
    out
}

/// Dimension of `V_{λ,μ}` as a `GL(n)`-representation: zero when
/// `l(λ) + l(μ) > n`, otherwise the Weyl product over the highest weight
/// `(λ_1, …, λ_l, 0, …, 0, −μ_m, …, −μ_1)`.
pub fn dim_irrep(b: &Bipartition, n: usize) -> BigUint {
    if b.length() > n {
        return BigUint::ZERO;
    }
    let mut w = vec![0i64; n];
    for (i, &x) in b.covariant.parts().iter().enumerate() {
        w[i] = x as i64;
    }
    for (j, &x) in b.contravariant.parts().iter().enumerate() {
        w[n - 1 - j] = -(x as i64);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= w[i] - w[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    (num / den).to_biguint().expect("Weyl dimension of a dominant weight is positive")
}

/// The dimension polynomial of `d`, interpolated at ranks
/// `threshold, …, threshold + deg` where `threshold = max l(λ)+l(μ)` and
/// `deg = max |λ|+|μ|`.
pub fn dim_polynomial(d: &Decomposition) -> DimensionPolynomial {
    let threshold = d.max_length();
    let deg = d.max_total_size();
    let points: Vec<(i64, BigInt)> = (threshold..=threshold + deg)
        .map(|n| (n as i64, BigInt::from(d.total_dim_at(n))))
        .collect();
    DimensionPolynomial::interpolate(&points, threshold)
}

/// Drops every term that vanishes at rank `n`.
pub fn evaluate_at_rank(d: &Decomposition, n: usize) -> Decomposition {
    d.filter(|b| b.length() <= n)
}

/// `Σ_{(λ,μ)} mult_{d1}(λ,μ) · mult_{d2}(λ,μ)`, the stable dimension of
/// `[(d1)* ⊗ d2]^{GL}` by Schur's lemma.
pub fn multiplicity_pairing(d1: &Decomposition, d2: &Decomposition) -> BigUint {
    d1.terms().map(|(b, m)| m * d2.multiplicity(b)).sum()
}

/// `Σ mult(λ,μ)·dim S^λ·dim S^μ` over the terms with `(|λ|,|μ|) = (a,b)`:
/// the dimension of the `S_a × S_b`-module whose isotypic multiplicities are
/// those of `d`.
pub fn symmetric_group_dimension(d: &Decomposition, a: usize, b: usize) -> BigUint {
    d.restrict_sizes(a, b)
        .terms()
        .map(|(bp, m)| m * specht_dim(&bp.covariant) * specht_dim(&bp.contravariant))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use num_traits::ToPrimitive;

    fn small(v: &BigUint) -> u64 {
        v.to_u64().expect("value fits in u64")
    }

    fn bp(cov: &[usize], contra: &[usize]) -> Bipartition {
        Bipartition::new(Partition::new(cov.to_vec()).unwrap(), Partition::new(contra.to_vec()).unwrap())
    }

    fn d(terms: &[(&[usize], &[usize], u64)]) -> Decomposition {
        Decomposition::from_parts(terms)
    }

    #[test]
    fn traceless_product_examples() {
        assert_eq!(
            traceless_product(&d(&[(&[1], &[], 1)]), &d(&[(&[], &[1], 1)])),
            d(&[(&[1], &[1], 1)])
        );
        assert_eq!(
            traceless_product(&d(&[(&[1, 1], &[1], 1)]), &d(&[(&[1], &[], 1)])),
            d(&[(&[2, 1], &[1], 1), (&[1, 1, 1], &[1], 1)])
        );
        let x = d(&[(&[2, 1], &[1], 2), (&[1], &[], 1)]);
        assert_eq!(traceless_product(&x, &Decomposition::unit()), x);
    }

    #[test]
    fn graded_powers_of_small_generators() {
        assert_eq!(graded_symmetric_power(&bp(&[1], &[]), 1, 2).unwrap(), d(&[(&[1, 1], &[], 1)]));
        assert_eq!(
            graded_symmetric_power(&bp(&[1, 1], &[1]), 1, 2).unwrap(),
            d(&[(&[2, 2], &[1, 1], 1), (&[1, 1, 1, 1], &[1, 1], 1), (&[2, 1, 1], &[2], 1)])
        );
        assert_eq!(
            graded_symmetric_power(&bp(&[1, 1], &[]), 2, 2).unwrap(),
            d(&[(&[2, 2], &[], 1), (&[1, 1, 1, 1], &[], 1)])
        );
        assert_eq!(graded_symmetric_power(&bp(&[1, 1], &[1]), 1, 0).unwrap(), Decomposition::unit());
        assert!(matches!(
            graded_symmetric_power(&bp(&[1], &[2]), 1, 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn graded_power_sizes_scale_with_k() {
        for (gen, deg) in [(bp(&[1, 1], &[1]), 1), (bp(&[1, 1, 1], &[1]), 2), (bp(&[1, 1], &[]), 2)] {
            for k in 0..=3 {
                let out = graded_symmetric_power(&gen, deg, k).unwrap();
                for (b, _) in out.terms() {
                    assert_eq!(b.covariant.size(), k * gen.covariant.size());
                    assert_eq!(b.contravariant.size(), k * gen.contravariant.size());
                }
            }
        }
    }

    #[test]
    fn koike_decompositions() {
        assert_eq!(decompose_traceless(1, 1), d(&[(&[1], &[1], 1)]));
        assert_eq!(decompose_traceless(2, 1), d(&[(&[2], &[1], 1), (&[1, 1], &[1], 1)]));
        assert_eq!(decompose_traceless(0, 0), Decomposition::unit());
        assert_eq!(decompose_mixed_tensor(1, 1), d(&[(&[1], &[1], 1), (&[], &[], 1)]));
        assert_eq!(
            decompose_mixed_tensor(2, 1),
            d(&[(&[2], &[1], 1), (&[1, 1], &[1], 1), (&[1], &[], 2)])
        );
        assert_eq!(decompose_mixed_tensor(3, 0), decompose_traceless(3, 0));
    }

    #[test]
    fn mixed_tensor_size_bookkeeping() {
        for p in 0..=4 {
            for q in 0..=3 {
                for (b, _) in decompose_traceless(p, q).terms() {
                    assert_eq!(b.sizes(), (p, q));
                }
                for (b, _) in decompose_mixed_tensor(p, q).terms() {
                    let (a, c) = b.sizes();
                    assert_eq!(a as i64 - c as i64, p as i64 - q as i64);
                    assert!(a <= p);
                }
            }
        }
    }

    #[test]
    fn mixed_tensor_dimensions_are_powers() {
        for n in 0..=4usize {
            for p in 0..=6usize {
                for q in 0..=6 - p {
                    let dim = evaluate_at_rank(&decompose_mixed_tensor(p, q), n).total_dim_at(n);
                    if n >= p + q {
                        assert_eq!(dim, BigUint::from(n).pow((p + q) as u32), "n={n} p={p} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_with_standard() {
        assert_eq!(tensor_by_standard(&d(&[(&[], &[1], 1)])), d(&[(&[1], &[1], 1), (&[], &[], 1)]));
        assert_eq!(
            tensor_by_standard(&d(&[(&[1, 1], &[1], 1)])),
            d(&[(&[2, 1], &[1], 1), (&[1, 1, 1], &[1], 1), (&[1, 1], &[], 1)])
        );
        assert_eq!(tensor_by_standard(&Decomposition::unit()), d(&[(&[1], &[], 1)]));
        // 6 · 3 = 15 + 0 + 3 at n = 3
        let out = tensor_by_standard(&d(&[(&[1, 1], &[1], 1)]));
        assert_eq!(evaluate_at_rank(&out, 3).total_dim_at(3), BigUint::from(18u32));
    }

    #[test]
    fn weyl_dimensions() {
        for n in 2..8usize {
            assert_eq!(dim_irrep(&bp(&[1], &[1]), n), BigUint::from(n * n - 1));
            // Hom(H, ∧²H) minus the trace copy of H
            assert_eq!(dim_irrep(&bp(&[1, 1], &[1]), n) + n, BigUint::from(n * n * (n - 1) / 2));
        }
        assert_eq!(dim_irrep(&bp(&[1, 1], &[1]), 3), BigUint::from(6u32));
        assert_eq!(dim_irrep(&bp(&[1, 1], &[1]), 4), BigUint::from(20u32));
        assert_eq!(dim_irrep(&bp(&[1, 1, 1], &[1]), 3), BigUint::ZERO);
        assert_eq!(dim_irrep(&Bipartition::trivial(), 0), BigUint::one());
    }

    #[test]
    fn dimension_polynomials() {
        let h = dim_polynomial(&d(&[(&[1], &[], 1)]));
        assert_eq!(h, DimensionPolynomial::from_ratios(&[(0, 1), (1, 1)], 1));
        let u1 = dim_polynomial(&d(&[(&[1, 1], &[1], 1), (&[1], &[], 1)]));
        assert_eq!(u1, DimensionPolynomial::from_ratios(&[(0, 1), (0, 1), (-1, 2), (1, 2)], 3));
        let one = dim_polynomial(&Decomposition::unit());
        assert_eq!(one, DimensionPolynomial::constant(1, 0));
        let x = d(&[(&[2, 2], &[1, 1], 1), (&[2, 1, 1], &[2], 3), (&[1], &[], 2)]);
        let poly = dim_polynomial(&x);
        for n in poly.threshold()..poly.threshold() + 3 {
            assert_eq!(poly.evaluate_integer(n as i64).unwrap(), BigInt::from(x.total_dim_at(n)));
        }
    }

    #[test]
    fn rank_truncation() {
        let w1 = d(&[(&[1, 1], &[1], 1), (&[1], &[], 1)]);
        assert_eq!(evaluate_at_rank(&w1, 2), d(&[(&[1], &[], 1)]));
        assert_eq!(evaluate_at_rank(&w1, 3), w1);
        assert!(evaluate_at_rank(&Decomposition::new(), 4).is_empty());
    }

    #[test]
    fn pairings() {
        for p in 0..=3 {
            for q in 0..=3 {
                let t = decompose_traceless(p, q);
                let expected: u64 = (1..=p as u64).product::<u64>() * (1..=q as u64).product::<u64>();
                assert_eq!(small(&multiplicity_pairing(&t, &t)), expected);
            }
        }
        let w1 = d(&[(&[1, 1], &[1], 1), (&[1], &[], 1)]);
        assert_eq!(small(&multiplicity_pairing(&w1, &decompose_mixed_tensor(2, 1))), 3);
        assert_eq!(small(&multiplicity_pairing(&w1, &Decomposition::new())), 0);
    }
}
