//! The ten acceptance criteria, checked exactly as stated. Prints one
//! PASS/FAIL line per criterion.
//!
//! Criterion 9 is false as literally stated below the rank `p+q−1` (the stable
//! decomposition of `H^{p,q}` overcounts there), so it is expected to FAIL.
//! The run still asserts that it fails only in that range. Every other
//! criterion must pass.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use albanese_core::albanese::{
    albanese_dim_polynomial, conjectural_cohomology_dim, constituent_support, verify_io_splitting,
};
use albanese_core::combinatorics::partitions_of;
use albanese_core::prop::{count_nonunital_prop, count_wheeled_prop};
use albanese_core::schur::{
    decompose_mixed_tensor, decompose_traceless, evaluate_at_rank, graded_symmetric_power, multiplicity_pairing,
    plethysm_schur, symmetric_group_dimension,
};
use albanese_core::{albanese_w, Bipartition, Decomposition, Partition, Variant};
use albanese_johnson::tau_span_dim;
use albanese_oracle::character::{character_decompose, RepExpr};
use albanese_oracle::omega::{cross_traceless_invariant_dim, omega_prime_verify};
use albanese_oracle::rep::traceless_dim;
use albanese_oracle::OracleConfig;
use num_bigint::BigUint;
use num_rational::BigRational;

/// Criteria whose literal statement is known to be false.
const EXPECTED_FAILURES: &[usize] = &[9];

struct Verdict {
    passed: bool,
    detail: String,
    /// For an expected failure: whether it failed exactly as analysed.
    failure_understood: bool,
}

fn pass_if(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into(), failure_understood: false }
}

fn fact(k: usize) -> usize {
    (1..=k).product()
}

fn coeffs(v: &[(i64, i64)]) -> Vec<BigRational> {
    v.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect()
}

fn criterion_1() -> Verdict {
    let cfg = OracleConfig::default();
    let mut notes = Vec::new();
    let mut ok = true;
    for (n, p, q) in [(2, 1, 1), (3, 2, 1), (4, 2, 2)] {
        let r = omega_prime_verify(n, p, q, &cfg).expect("omega check runs");
        let want = fact(p) * fact(q);
        ok &= r.invariant_dim == want && r.omega_prime_rank == want && r.passed();
        notes.push(format!("({n},{p},{q}) dim {} rank {}", r.invariant_dim, r.omega_prime_rank));
    }
    for (n, p, q, r, s) in [(3, 1, 0, 1, 0), (4, 2, 1, 2, 1), (4, 1, 1, 2, 0), (4, 2, 2, 1, 1), (4, 2, 0, 2, 0), (3, 1, 0, 0, 1), (4, 2, 1, 1, 2)] {
        let got = cross_traceless_invariant_dim(n, p, q, r, s, &cfg).expect("cross count runs");
        let want = if p == s && q == r { fact(p) * fact(q) } else { 0 };
        ok &= got == want;
        if got != want {
            notes.push(format!("cross ({p},{q},{r},{s}) at n={n}: {got} != {want}"));
        }
    }
    pass_if(ok, notes.join("; "))
}

fn criterion_2() -> Verdict {
    let mut ok = true;
    let mut notes = Vec::new();
    for (p, q, want) in [(1usize, 0usize, 1u32), (2, 1, 3)] {
        let prop = count_wheeled_prop(p, q);
        let rep = multiplicity_pairing(&albanese_w(p - q, Variant::Full).unwrap().decomposition, &decompose_mixed_tensor(p, q));
        ok &= prop == BigUint::from(want) && rep == prop;
        notes.push(format!("({p},{q}): prop {prop}, pairing {rep}"));
    }
    pass_if(ok, notes.join("; "))
}

fn criterion_3() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in 0..=3usize {
        for p in q..=(q + 3).min(6) {
            let w = albanese_w(p - q, Variant::Full).unwrap().decomposition;
            let lhs = multiplicity_pairing(&w, &decompose_mixed_tensor(p, q));
            let rhs = count_wheeled_prop(p, q);
            checked += 1;
            if lhs != rhs {
                bad.push(format!("({p},{q}) {lhs} != {rhs}"));
            }
        }
    }
    let proof_instances = [(2, 1), (4, 2), (6, 3)].iter().all(|&(p, q)| {
        multiplicity_pairing(&albanese_w(p - q, Variant::Full).unwrap().decomposition, &decompose_mixed_tensor(p, q))
            == count_wheeled_prop(p, q)
    });
    pass_if(bad.is_empty() && proof_instances, format!("{checked} pairs checked {}", bad.join(", ")))
}

fn criterion_4() -> Verdict {
    let w1 = albanese_w(1, Variant::Full).unwrap().decomposition;
    let expected = Decomposition::from_parts(&[(&[1, 1], &[1], 1), (&[1], &[], 1)]);
    let shape = w1.terms().eq(expected.terms());
    let poly = albanese_dim_polynomial(1, Variant::Full).unwrap();
    // T^2 (T - 1) / 2
    let poly_ok = poly.coefficients() == coeffs(&[(0, 1), (0, 1), (-1, 2), (1, 2)]).as_slice();
    let s3 = tau_span_dim(3).unwrap();
    let s4 = tau_span_dim(4).unwrap();
    pass_if(shape && poly_ok && s3 == 9 && s4 == 24, format!("W_1 ok {shape}, P_1 = {poly}, span {s3}, {s4}"))
}

fn criterion_5() -> Verdict {
    let all = (1..=4).all(|i| verify_io_splitting(i).unwrap());
    pass_if(all, "i = 1..4")
}

fn criterion_6() -> Verdict {
    let degrees: Vec<Option<usize>> =
        (1..=3).map(|i| albanese_dim_polynomial(i, Variant::Outer).unwrap().degree()).collect();
    let deg_ok = degrees == vec![Some(3), Some(6), Some(9)];
    let p1 = albanese_dim_polynomial(1, Variant::Outer).unwrap();
    // T (T + 1) (T - 2) / 2 = (T^3 - T^2 - 2T) / 2
    let p1_ok = p1.coefficients() == coeffs(&[(0, 1), (-1, 1), (-1, 2), (1, 2)]).as_slice();
    pass_if(deg_ok && p1_ok, format!("degrees {degrees:?}, P^O_1 = {p1}"))
}

fn criterion_7() -> Verdict {
    let mut ok = true;
    for i in 1..=4usize {
        let w = albanese_w(i, Variant::Full).unwrap().decomposition;
        ok &= w.terms().all(|(b, _)| {
            let (a, c) = b.sizes();
            (i..=2 * i).contains(&a) && c <= i
        });
        for (a, b) in constituent_support(i).unwrap() {
            ok &= symmetric_group_dimension(&w, a, b) == count_nonunital_prop(a, b);
        }
        for b in 0..=i + 1 {
            ok &= symmetric_group_dimension(&w, b + i, b) == count_nonunital_prop(b + i, b);
        }
    }
    pass_if(ok, "i = 1..4")
}

fn criterion_8() -> Verdict {
    let n = 5;
    let mut cases = 0;
    let mut bad = Vec::new();
    for outer_size in 1..=8usize {
        for inner_size in 1..=8 / outer_size {
            for outer in partitions_of(outer_size, None) {
                for inner in partitions_of(inner_size, None) {
                    let calc = Decomposition::from_terms(
                        plethysm_schur(&outer, &inner)
                            .unwrap()
                            .into_iter()
                            .filter(|(nu, _)| nu.len() <= n)
                            .map(|(nu, m)| (Bipartition::new(nu, Partition::empty()), m)),
                    );
                    let expr = RepExpr::schur(outer.clone(), RepExpr::schur(inner.clone(), RepExpr::Standard));
                    let oracle = character_decompose(&expr, n).unwrap();
                    cases += 1;
                    if !calc.terms().eq(oracle.terms()) {
                        bad.push(format!("s_{outer}[s_{inner}]"));
                    }
                }
            }
        }
    }
    let named = {
        let h2e2 = plethysm_schur(&Partition::row(2), &Partition::column(2)).unwrap();
        let e2e2 = plethysm_schur(&Partition::column(2), &Partition::column(2)).unwrap();
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        h2e2.keys().cloned().collect::<Vec<_>>() == vec![p(&[2, 2]), p(&[1, 1, 1, 1])]
            && h2e2.values().all(|m| *m == BigUint::from(1u32))
            && e2e2.keys().cloned().collect::<Vec<_>>() == vec![p(&[2, 1, 1])]
            && e2e2.values().all(|m| *m == BigUint::from(1u32))
    };
    for (gen, degree, max_k) in [("1|0", 0, 4), ("1|0", 1, 4), ("1,1|0", 1, 4), ("2|0", 2, 4), ("1|1", 1, 2), ("1|1", 2, 2)] {
        let b: Bipartition = gen.parse().unwrap();
        let (a, c) = b.sizes();
        for k in 0..=max_k {
            let inner = RepExpr::Irrep(b.clone());
            let expr = if degree % 2 == 0 { RepExpr::sym(k, inner) } else { RepExpr::wedge(k, inner) };
            let oracle = character_decompose(&expr, n).unwrap().restrict_sizes(k * a, k * c);
            let calc = evaluate_at_rank(&graded_symmetric_power(&b, degree, k).unwrap(), n);
            cases += 1;
            if !calc.terms().eq(oracle.terms()) {
                bad.push(format!("graded {gen} degree {degree} k={k}"));
            }
        }
    }
    pass_if(bad.is_empty() && named, format!("{cases} cases at n={n}, named {named} {}", bad.join(", ")))
}

fn criterion_9() -> Verdict {
    let mut failures = Vec::new();
    let mut understood = true;
    for n in 0..=4usize {
        for total in 0..=6usize {
            for p in 0..=total {
                let q = total - p;
                let got = decompose_mixed_tensor(p, q).total_dim_at(n);
                let want = BigUint::from(n).pow(total as u32);
                if got != want {
                    failures.push(format!("n={n} ({p},{q}) {got} != {want}"));
                    // the analysed range: mixed signature below rank p+q-1
                    understood &= p * q > 0 && n + 1 < p + q;
                }
            }
        }
    }
    let cfg = OracleConfig::default();
    let mut traceless_ok = true;
    for n in 1..=4usize {
        for p in 0..=n {
            for q in 0..=n - p {
                let exact = traceless_dim(n, p, q, &cfg).unwrap();
                traceless_ok &= BigUint::from(exact) == decompose_traceless(p, q).total_dim_at(n);
            }
        }
    }
    let detail = format!(
        "{} literal failures, first: {}; traceless dims match {traceless_ok}",
        failures.len(),
        failures.first().cloned().unwrap_or_default()
    );
    Verdict { passed: failures.is_empty() && traceless_ok, detail, failure_understood: understood && traceless_ok }
}

fn criterion_10() -> Verdict {
    let mut ok = true;
    for i in 0..=4usize {
        let c = conjectural_cohomology_dim(i).unwrap();
        let w = albanese_dim_polynomial(i, Variant::Full).unwrap();
        let mut want = w.coefficients().to_vec();
        if i == 4 {
            want[0] += BigRational::from_integer(1.into());
        }
        ok &= c.is_conjectural() && c.polynomial.coefficients() == want.as_slice();
    }
    pass_if(ok, "i = 0..4")
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Verdict, Duration); 10] = [
        (1, criterion_1, Duration::from_secs(120)),
        (2, criterion_2, Duration::from_secs(1)),
        (3, criterion_3, Duration::from_secs(120)),
        (4, criterion_4, Duration::from_secs(30)),
        (5, criterion_5, Duration::from_secs(60)),
        (6, criterion_6, Duration::from_secs(60)),
        (7, criterion_7, Duration::from_secs(60)),
        (8, criterion_8, Duration::from_secs(180)),
        (9, criterion_9, Duration::from_secs(120)),
        (10, criterion_10, Duration::from_secs(60)),
    ];
    let mut unexpected = 0;
    for (k, check, budget) in criteria {
        let start = Instant::now();
        let v = check();
        let took = start.elapsed();
        let in_time = took <= budget;
        let passed = v.passed && in_time;
        println!(
            "criterion {k}: {} ({:.2}s, budget {}s) {}",
            if passed { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs(),
            v.detail
        );
        let expected_failure = EXPECTED_FAILURES.contains(&k);
        if expected_failure {
            if passed || !v.failure_understood {
                println!("criterion {k}: outcome differs from the recorded analysis");
                unexpected += 1;
            }
        } else if !passed {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
