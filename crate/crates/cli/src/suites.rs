//! Verification suites run by `albanese verify`.

use albanese_core::albanese::verify_io_splitting;
use albanese_core::combinatorics::partitions_of;
use albanese_core::prop::{count_wheeled_prop, cross_check_invariants};
use albanese_core::schur::{evaluate_at_rank, graded_symmetric_power, plethysm_schur};
use albanese_core::{Bipartition, Decomposition, Partition};
use albanese_johnson::{johnson_tau, magnus_generators, pairing_eval, tau_span_dim, CocycleTable, TensorIndex};
use albanese_oracle::character::{character_decompose, RepExpr};
use albanese_oracle::omega::{cross_traceless_invariant_dim, omega_prime_verify};
use albanese_oracle::OracleConfig;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::error::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Omega,
    PropMatch,
    IoSplit,
    Johnson,
    Plethysm,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Omega => "omega",
            Suite::PropMatch => "prop-match",
            Suite::IoSplit => "io-split",
            Suite::Johnson => "johnson",
            Suite::Plethysm => "plethysm",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Omega, Suite::PropMatch, Suite::IoSplit, Suite::Johnson, Suite::Plethysm],
            s => vec![s],
        }
    }
}

/// Size caps for the suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCaps {
    pub prop_max_p: usize,
    pub prop_max_q: usize,
    pub io_max_degree: usize,
    /// Largest `|outer|·|inner|` in the plethysm suite.
    pub plethysm_max_size: usize,
    pub character_rank: usize,
}

impl Default for SuiteCaps {
    fn default() -> Self {
        SuiteCaps { prop_max_p: 6, prop_max_q: 3, io_max_degree: 4, plethysm_max_size: 8, character_rank: 5 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = Box<dyn Fn() -> CliResult<(bool, String)> + Send + Sync>;

struct Case {
    suite: Suite,
    name: String,
    check: Check,
}

fn case(suite: Suite, name: impl Into<String>, check: impl Fn() -> CliResult<(bool, String)> + Send + Sync + 'static) -> Case {
    Case { suite, name: name.into(), check: Box::new(check) }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn omega_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for (n, p, q) in [(2, 1, 1), (3, 2, 1), (4, 2, 2)] {
        out.push(case(Suite::Omega, format!("omega-prime n={n} p={p} q={q}"), move || {
            let r = omega_prime_verify(n, p, q, &OracleConfig::default())?;
            Ok((
                r.passed(),
                format!(
                    "invariant dim {}, rank {} (expected {}), others vanish {}, rank of Omega {} of {}",
                    r.invariant_dim, r.omega_prime_rank, r.expected, r.others_vanish, r.omega_rank, r.full_invariant_dim
                ),
            ))
        }));
    }
    for (n, p, q, r, s) in [(3, 1, 0, 0, 1), (3, 1, 0, 1, 0), (4, 2, 1, 1, 2), (3, 2, 1, 1, 2), (4, 2, 1, 2, 1), (4, 1, 1, 2, 0)] {
        out.push(case(Suite::Omega, format!("cross n={n} ({p},{q})x({r},{s})"), move || {
            let got = cross_traceless_invariant_dim(n, p, q, r, s, &OracleConfig::default())?;
            let want = if p == s && q == r { factorial(p) * factorial(q) } else { 0 };
            Ok((got == want, format!("dimension {got}, expected {want}")))
        }));
    }
    out
}

fn prop_cases(caps: &SuiteCaps) -> Vec<Case> {
    let mut out = Vec::new();
    for (p, q, want) in [(1usize, 0usize, 1u32), (2, 1, 3)] {
        out.push(case(Suite::PropMatch, format!("count p={p} q={q}"), move || {
            let got = count_wheeled_prop(p, q);
            Ok((got == BigUint::from(want), format!("count {got}, expected {want}")))
        }));
    }
    for q in 0..=caps.prop_max_q {
        for p in q..=caps.prop_max_p.min(q + 3) {
            out.push(case(Suite::PropMatch, format!("invariants p={p} q={q}"), move || {
                let ok = cross_check_invariants(p, q)?;
                Ok((ok, format!("wheeled count {}", count_wheeled_prop(p, q))))
            }));
        }
    }
    out
}

fn io_cases(caps: &SuiteCaps) -> Vec<Case> {
    (1..=caps.io_max_degree)
        .map(|i| {
            case(Suite::IoSplit, format!("splitting i={i}"), move || {
                Ok((verify_io_splitting(i)?, String::new()))
            })
        })
        .collect()
}

fn johnson_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for n in [3usize, 4] {
        out.push(case(Suite::Johnson, format!("span n={n}"), move || {
            let got = tau_span_dim(n)?;
            let want = n * n * (n - 1) / 2;
            Ok((got == want, format!("rank {got}, expected {want}")))
        }));
        out.push(case(Suite::Johnson, format!("additivity n={n}"), move || {
            let gens = magnus_generators(n)?;
            let taus = gens.iter().map(johnson_tau).collect::<Result<Vec<_>, _>>()?;
            let mut bad = 0;
            for (f, tf) in gens.iter().zip(&taus) {
                for (g, tg) in gens.iter().zip(&taus) {
                    if johnson_tau(&f.compose(g)?)? != tf.add(tg) {
                        bad += 1;
                    }
                }
            }
            Ok((bad == 0, format!("{bad} of {} pairs differ", gens.len() * gens.len())))
        }));
    }
    out.push(case(Suite::Johnson, "pairing K12", || {
        let gens = magnus_generators(3)?;
        let table = CocycleTable::johnson(&gens)?;
        let v = pairing_eval(&table, &gens[0], TensorIndex { i: 1, j: 2, k: 1 })?;
        Ok((v == num_bigint::BigInt::from(-1).into(), format!("value {v}")))
    }));
    out
}

fn same_terms(a: &Decomposition, b: &Decomposition) -> bool {
    a.terms().eq(b.terms())
}

fn plethysm_cases(caps: &SuiteCaps) -> Vec<Case> {
    let n = caps.character_rank;
    let mut out = Vec::new();
    for outer_size in 1..=caps.plethysm_max_size {
        for inner_size in 1..=caps.plethysm_max_size / outer_size {
            for outer in partitions_of(outer_size, None) {
                for inner in partitions_of(inner_size, None) {
                    let name = format!("s_{outer}[s_{inner}] n={n}");
                    let outer = outer.clone();
                    out.push(case(Suite::Plethysm, name, move || {
                        let calc: Decomposition = Decomposition::from_terms(
                            plethysm_schur(&outer, &inner)?
                                .into_iter()
                                .filter(|(nu, _)| nu.len() <= n)
                                .map(|(nu, m)| (Bipartition::new(nu, Partition::empty()), m)),
                        );
                        let expr = RepExpr::schur(outer.clone(), RepExpr::schur(inner.clone(), RepExpr::Standard));
                        let oracle = character_decompose(&expr, n)?;
                        Ok((same_terms(&calc, &oracle), format!("{} terms", calc.len())))
                    }));
                }
            }
        }
    }
    let graded: [(&str, usize, usize); 6] =
        [("1|0", 0, 4), ("1|0", 1, 4), ("1,1|0", 1, 4), ("2|0", 2, 4), ("1|1", 1, 2), ("1|1", 2, 2)];
    for (gen, degree, max_k) in graded {
        for k in 0..=max_k {
            out.push(case(Suite::Plethysm, format!("graded power {gen} degree {degree} k={k} n={n}"), move || {
                let b: Bipartition = gen.parse()?;
                let (a, c) = b.sizes();
                let inner = RepExpr::Irrep(b.clone());
                let expr = if degree % 2 == 0 { RepExpr::sym(k, inner) } else { RepExpr::wedge(k, inner) };
                let oracle = character_decompose(&expr, n)?.restrict_sizes(k * a, k * c);
                let calc = evaluate_at_rank(&graded_symmetric_power(&b, degree, k)?, n);
                Ok((same_terms(&calc, &oracle), format!("{} terms", calc.len())))
            }));
        }
    }
    out
}

fn cases_for(suite: Suite, caps: &SuiteCaps) -> Vec<Case> {
    match suite {
        Suite::Omega => omega_cases(),
        Suite::PropMatch => prop_cases(caps),
        Suite::IoSplit => io_cases(caps),
        Suite::Johnson => johnson_cases(),
        Suite::Plethysm => plethysm_cases(caps),
        Suite::All => unreachable!("expanded by members"),
    }
}

/// Runs every case of `suite` on at most `workers` threads. Each case is
/// cached on its own, so reruns only recompute what is missing.
pub fn run_suite(suite: Suite, caps: &SuiteCaps, workers: usize, cache: &Cache) -> CliResult<Vec<CaseResult>> {
    let cases: Vec<Case> = suite.members().into_iter().flat_map(|s| cases_for(s, caps)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| crate::error::CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let results = pool.install(|| {
        cases
            .par_iter()
            .map(|c| {
                let key = (c.suite.name(), &c.name, caps);
                let run = || -> Result<CaseResult, std::convert::Infallible> {
                    let (passed, detail) = match (c.check)() {
                        Ok(v) => v,
                        Err(e) => (false, e.to_string()),
                    };
                    Ok(CaseResult { suite: c.suite.name().to_string(), name: c.name.clone(), passed, detail })
                };
                let (r, _) = match cache.get_or_compute("verify-case", &key, run) {
                    Ok(v) => v,
                    Err(never) => match never {},
                };
                r
            })
            .collect()
    });
    Ok(results)
}
