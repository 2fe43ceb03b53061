use albanese_core::combinatorics::{lr_coefficient, lr_product, partitions_of, specht_dim, Bipartition, Partition};
use albanese_core::prop::{count_nonunital_prop, enumerate_structures};
use albanese_core::schur::{
    decompose_mixed_tensor, dim_irrep, dim_polynomial, evaluate_at_rank, traceless_product, Decomposition,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|k| {
        let all = partitions_of(k, None);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn bipartition(max_size: usize) -> impl Strategy<Value = Bipartition> {
    (partition(max_size), partition(max_size)).prop_map(|(l, m)| Bipartition::new(l, m))
}

fn decomposition() -> impl Strategy<Value = Decomposition> {
    prop::collection::vec((bipartition(2), 1u32..4), 0..4)
        .prop_map(|terms| Decomposition::from_terms(terms.into_iter().map(|(b, m)| (b, BigUint::from(m)))))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(9)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(specht_dim(&p.conjugate()), specht_dim(&p));
    }

    #[test]
    fn lr_is_symmetric(a in partition(4), b in partition(4)) {
        prop_assert_eq!(lr_product(&a, &b), lr_product(&b, &a));
        for (nu, c) in lr_product(&a, &b) {
            prop_assert_eq!(lr_coefficient(&b, &a, &nu), c);
        }
    }

    #[test]
    fn lr_respects_specht_dimensions(a in partition(4), b in partition(4)) {
        // Induction from S_a × S_b: Σ c·f^ν = C(a+b, a)·f^λ·f^ξ.
        let lhs: BigUint = lr_product(&a, &b).iter().map(|(nu, c)| specht_dim(nu) * *c).sum();
        let binom = num_integer::binomial(BigUint::from(a.size() + b.size()), BigUint::from(a.size()));
        prop_assert_eq!(lhs, binom * specht_dim(&a) * specht_dim(&b));
    }

    #[test]
    fn traceless_product_is_commutative(x in decomposition(), y in decomposition()) {
        prop_assert_eq!(traceless_product(&x, &y), traceless_product(&y, &x));
    }

    #[test]
    fn traceless_dimensions_multiply_at_large_rank(x in bipartition(2), y in bipartition(2)) {
        // Traceless products add no contraction terms, so the dimension of the
        // product at rank n counts only the traceless part of the tensor product.
        let prod = traceless_product(&Decomposition::single(x.clone()), &Decomposition::single(y.clone()));
        for (b, _) in prod.terms() {
            prop_assert_eq!(b.sizes(), (x.sizes().0 + y.sizes().0, x.sizes().1 + y.sizes().1));
        }
        if x.contravariant.is_empty() && y.contravariant.is_empty() || x.covariant.is_empty() && y.covariant.is_empty() {
            let n = 8;
            prop_assert_eq!(prod.total_dim_at(n), dim_irrep(&x, n) * dim_irrep(&y, n));
        }
    }

    #[test]
    fn dimension_polynomials_interpolate(x in decomposition(), extra in 0usize..3) {
        let poly = dim_polynomial(&x);
        let n = poly.threshold() + extra + 2;
        prop_assert_eq!(poly.evaluate_integer(n as i64).unwrap(), BigInt::from(x.total_dim_at(n)));
    }

    #[test]
    fn rank_truncation_drops_only_vanishing_terms(x in decomposition(), n in 0usize..6) {
        let t = evaluate_at_rank(&x, n);
        prop_assert_eq!(t.total_dim_at(n), x.total_dim_at(n));
        for (b, _) in t.terms() {
            prop_assert!(!dim_irrep(b, n).is_zero());
        }
    }

    #[test]
    fn forest_degrees(a in 0usize..7, b in 0usize..3) {
        let all = enumerate_structures(a, b);
        prop_assert_eq!(BigUint::from(all.len()), count_nonunital_prop(a, b));
        for s in all {
            prop_assert_eq!(s.degree(), a - b.min(a));
        }
        if b > 0 && a < 2 * b {
            prop_assert!(count_nonunital_prop(a, b).is_zero());
        }
    }
}

#[test]
fn specht_squares_sum_to_factorial() {
    for p in 0..=8usize {
        let total: BigUint = partitions_of(p, None).iter().map(|l| specht_dim(l).pow(2)).sum();
        let fact: BigUint = (1..=p).map(BigUint::from).product();
        assert_eq!(total, fact);
    }
}

#[test]
fn mixed_tensor_dimensions_after_truncation() {
    for n in 0..=4usize {
        for p in 0..=6usize {
            for q in 0..=6 - p {
                let got = evaluate_at_rank(&decompose_mixed_tensor(p, q), n).total_dim_at(n);
                let power = BigUint::from(n).pow((p + q) as u32);
                // Truncating the stable decomposition is exact once n ≥ p+q−1,
                // and always for pure tensors (Schur–Weyl duality).
                if p * q == 0 || n + 1 >= p + q {
                    assert_eq!(got, power, "n={n} p={p} q={q}");
                } else {
                    assert!(got >= power, "n={n} p={p} q={q}: truncation can only overcount");
                }
            }
        }
    }
}
