//! Command implementations producing result envelopes.

use std::collections::BTreeMap;
use std::time::Instant;

use albanese_core::albanese::{albanese_dim_polynomial, conjectural_cohomology_dim};
use albanese_core::prop::{count_wheeled_prop, stable_aut_cohomology_dim};
use albanese_core::schur::{decompose_mixed_tensor, evaluate_at_rank, multiplicity_pairing};
use albanese_core::{albanese_w, Bipartition, Error, Variant};
use albanese_johnson::{is_ia, johnson_tau, magnus_generators, tau_span_dim, FreeEndomorphism, JohnsonValue};
use albanese_oracle::omega::{cross_traceless_invariant_dim, invariant_dim_orbit, omega_matrix, omega_prime_verify};
use albanese_oracle::rep::{build_rep, invariant_dim};
use albanese_oracle::words::WordSpace;
use albanese_oracle::OracleConfig;
use serde_json::{json, Value};

use crate::cache::{default_cache_dir, Cache};
use crate::cli::{AutArgs, Cli, Command, DimsArgs, DimsTarget, InvariantsArgs, JohnsonArgs, OmegaArgs, VerifyArgs, WArgs};
use crate::envelope::{big, polynomial_json, terms_json, Envelope, Outcome, Provenance, Query, Timing};
use crate::error::{CliError, CliResult, Status};
use crate::suites::{run_suite, SuiteCaps};

/// Largest `p + q` accepted by `aut`.
pub const MAX_AUT_SIZE: usize = 12;
/// Largest rank accepted by `johnson`.
pub const MAX_JOHNSON_RANK: usize = 10;

type Args = BTreeMap<String, Value>;

fn args(pairs: &[(&str, Value)]) -> Args {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub fn cache_for(cli: &Cli) -> Cache {
    if !cli.cache {
        return Cache::disabled();
    }
    Cache::at(cli.cache_dir.clone().unwrap_or_else(default_cache_dir))
}

pub fn workers_for(cli: &Cli) -> usize {
    cli.workers
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8))
        .max(1)
}

/// Runs a command; the status is `Failed` when a verdict is negative.
pub fn run(cli: &Cli) -> CliResult<(Envelope, Status)> {
    let start = Instant::now();
    let cache = cache_for(cli);
    let (command, args, outcome, cache_state) = match &cli.command {
        Command::Verify(v) => {
            let (a, o) = verify(cli, v, &cache)?;
            let state = if cache.is_enabled() { "per-case" } else { "off" };
            ("verify", a, o, state)
        }
        other => {
            let (name, a, compute): (&str, Args, Box<dyn FnOnce() -> CliResult<Outcome>>) = match other {
                Command::W(w) => ("w", w_args(w), Box::new(move || cmd_w(cli, w))),
                Command::Aut(x) => ("aut", args(&[("p", json!(x.p)), ("q", json!(x.q))]), Box::new(move || cmd_aut(cli, x))),
                Command::Dims(d) => ("dims", dims_args(d), Box::new(move || cmd_dims(cli, d))),
                Command::Invariants(x) => ("invariants", invariants_args(x), Box::new(move || cmd_invariants(x))),
                Command::Johnson(j) => ("johnson", johnson_args(j)?, Box::new(move || cmd_johnson(j))),
                Command::Omega(o) => {
                    let a = args(&[("n", json!(o.n)), ("p", json!(o.p)), ("q", json!(o.q))]);
                    let outcome = cmd_omega(o)?;
                    return Ok(finish("omega", a, outcome, "off", start));
                }
                Command::Verify(_) => unreachable!("handled above"),
            };
            let (o, hit) = cache.get_or_compute(name, &a, compute)?;
            let state = match (cache.is_enabled(), hit) {
                (false, _) => "off",
                (true, true) => "hit",
                (true, false) => "miss",
            };
            (name, a, o, state)
        }
    };
    Ok(finish(command, args, outcome, cache_state, start))
}

fn finish(command: &str, args: Args, outcome: Outcome, cache: &str, start: Instant) -> (Envelope, Status) {
    let status = if outcome.verdict == Some(false) { Status::Failed } else { Status::Ok };
    let env = Envelope {
        query: Query { command: command.to_string(), args },
        result: outcome.result,
        provenance: outcome.provenance,
        timing: Timing { elapsed_ms: start.elapsed().as_millis() as u64, cache: cache.to_string() },
    };
    (env, status)
}

fn check_degree(cli: &Cli, degree: usize) -> CliResult<()> {
    if degree > cli.max_degree {
        return Err(Error::capacity(format!("degree {degree} exceeds the configured maximum {}", cli.max_degree)).into());
    }
    Ok(())
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Full => "full",
        Variant::Outer => "outer",
    }
}

fn w_args(w: &WArgs) -> Args {
    args(&[
        ("degree", json!(w.degree)),
        ("variant", json!(variant_name(w.variant.into()))),
        ("rank", json!(w.rank)),
        ("unstable", json!(w.unstable)),
    ])
}

fn below_stable_range(n: usize, from: usize, allowed: bool) -> CliResult<()> {
    if allowed {
        Ok(())
    } else {
        Err(CliError::Usage(format!("rank {n} is below the stable range n >= {from}; pass --unstable to evaluate anyway")))
    }
}

fn cmd_w(cli: &Cli, w: &WArgs) -> CliResult<Outcome> {
    check_degree(cli, w.degree)?;
    let variant: Variant = w.variant.into();
    let hom = albanese_w(w.degree, variant)?;
    let poly = albanese_dim_polynomial(w.degree, variant)?;
    let mut result = json!({
        "degree": w.degree,
        "variant": variant_name(variant),
        "stable_term_count": hom.decomposition.len(),
        "polynomial": polynomial_json(&poly),
    });
    let mut warnings = Vec::new();
    match w.rank {
        Some(n) => {
            if n < hom.stable_from() {
                below_stable_range(n, hom.stable_from(), w.unstable)?;
                warnings.push(format!(
                    "unstable: rank {n} is below the stable range n >= {}; the truncated stable decomposition is shown",
                    hom.stable_from()
                ));
            }
            let cut = hom.at_rank(n, true)?;
            result["rank"] = json!(n);
            result["term_count"] = json!(cut.len());
            result["terms"] = terms_json(&cut, Some(n));
            result["total_dim"] = big(&cut.total_dim_at(n));
        }
        None => {
            result["term_count"] = json!(hom.decomposition.len());
            result["terms"] = terms_json(&hom.decomposition, None);
        }
    }
    Ok(Outcome {
        result,
        provenance: Provenance {
            route: "generator-multisets+traceless-littlewood-richardson".into(),
            valid_from_rank: Some(hom.stable_from()),
            warnings,
            ..Default::default()
        },
        verdict: None,
    })
}

fn cmd_aut(cli: &Cli, a: &AutArgs) -> CliResult<Outcome> {
    let (p, q) = (a.p, a.q);
    if p + q > MAX_AUT_SIZE {
        return Err(Error::capacity(format!("p + q = {} exceeds the cap {MAX_AUT_SIZE}", p + q)).into());
    }
    let s = stable_aut_cohomology_dim(p, q);
    let mut result = json!({
        "p": p,
        "q": q,
        "degree": s.degree,
        "dimension": big(&s.dimension),
        "stable_range": s.stable_from,
        "stable_range_expression": "min(max(3i+4, p+q), 2i+p+q+3), i = p-q",
    });
    let verdict = if p >= q {
        check_degree(cli, p - q)?;
        let prop = count_wheeled_prop(p, q);
        let rep = multiplicity_pairing(&albanese_w(p - q, Variant::Full)?.decomposition, &decompose_mixed_tensor(p, q));
        let agree = prop == rep;
        result["prop_route"] = big(&prop);
        result["representation_route"] = big(&rep);
        result["routes_agree"] = json!(agree);
        Some(agree)
    } else {
        result["note"] = json!("p < q: the stable cohomology vanishes in every degree");
        None
    };
    Ok(Outcome {
        result,
        provenance: Provenance {
            route: "wheeled-prop-count+multiplicity-pairing".into(),
            valid_from_rank: Some(s.stable_from),
            ..Default::default()
        },
        verdict,
    })
}

fn dims_target_name(t: DimsTarget) -> &'static str {
    match t {
        DimsTarget::W => "w",
        DimsTarget::WOuter => "w-outer",
        DimsTarget::HConj => "h-conj",
    }
}

fn dims_args(d: &DimsArgs) -> Args {
    args(&[("target", json!(dims_target_name(d.target))), ("degree", json!(d.degree)), ("rank", json!(d.rank)), ("unstable", json!(d.unstable))])
}

fn cmd_dims(cli: &Cli, d: &DimsArgs) -> CliResult<Outcome> {
    check_degree(cli, d.degree)?;
    let w_poly = albanese_dim_polynomial(d.degree, Variant::Full)?;
    let (poly, conjectural, hypothesis) = match d.target {
        DimsTarget::W => (w_poly.clone(), false, None),
        DimsTarget::WOuter => (albanese_dim_polynomial(d.degree, Variant::Outer)?, false, None),
        DimsTarget::HConj => {
            let c = conjectural_cohomology_dim(d.degree)?;
            let flag = c.is_conjectural();
            (c.polynomial, flag, Some(c.hypothesis.to_string()))
        }
    };
    let mut result = json!({
        "target": dims_target_name(d.target),
        "degree": d.degree,
        "polynomial": polynomial_json(&poly),
        "conjectural": conjectural,
    });
    if d.target == DimsTarget::HConj {
        let diff = &poly + &w_poly.scaled(&num_rational::BigRational::from_integer((-1).into()));
        result["excess_over_w"] = json!(diff.to_string());
    }
    let mut warnings = Vec::new();
    if let Some(n) = d.rank {
        if n < poly.threshold() {
            below_stable_range(n, poly.threshold(), d.unstable)?;
            warnings.push(format!("unstable: rank {n} is below the validity threshold {}", poly.threshold()));
        }
        result["rank"] = json!(n);
        result["value_at_rank"] = json!(poly.evaluate(n as i64).to_string());
    }
    Ok(Outcome {
        result,
        provenance: Provenance {
            route: "weyl-dimension-interpolation".into(),
            valid_from_rank: Some(poly.threshold()),
            conjectural,
            hypothesis,
            warnings,
        },
        verdict: None,
    })
}

fn invariants_args(x: &InvariantsArgs) -> Args {
    args(&[("n", json!(x.n)), ("p", json!(x.p)), ("q", json!(x.q)), ("r", json!(x.r)), ("s", json!(x.s))])
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn cmd_invariants(x: &InvariantsArgs) -> CliResult<Outcome> {
    let cfg = OracleConfig::default();
    if x.n == 0 {
        return Err(Error::invalid("rank n must be at least 1").into());
    }
    let (result, route, valid_from) = match (x.r, x.s) {
        (Some(r), Some(s)) => {
            let dim = cross_traceless_invariant_dim(x.n, x.p, x.q, r, s, &cfg)?;
            let lemma = if x.p == s && x.q == r { factorial(x.p) * factorial(x.q) } else { 0 };
            (
                json!({"space": format!("T_{{{},{}}} (x) T_{{{},{}}}", x.p, x.q, r, s), "dimension": dim, "lemma_value": lemma}),
                "orbit-sums+exact-rank",
                (x.p + x.q).max(r + s),
            )
        }
        _ => {
            let space = WordSpace::mixed(x.n, x.p, x.q);
            let (dim, route) = if space.checked_dim().is_some_and(|d| d <= cfg.dense_cap) {
                (invariant_dim(&build_rep(x.n, x.p, x.q, &cfg)?, &cfg)?, "generator-actions+exact-rank")
            } else {
                (invariant_dim_orbit(x.n, x.p, x.q, &cfg)?, "orbit-sums+exact-rank")
            };
            let stable = decompose_mixed_tensor(x.p, x.q).multiplicity(&Bipartition::trivial());
            (
                json!({"space": format!("H^{{{},{}}}", x.p, x.q), "dimension": dim, "stable_value": big(&stable)}),
                route,
                x.p + x.q,
            )
        }
    };
    Ok(Outcome {
        result,
        provenance: Provenance { route: route.into(), valid_from_rank: Some(valid_from), ..Default::default() },
        verdict: None,
    })
}

fn johnson_args(j: &JohnsonArgs) -> CliResult<Args> {
    // normalize the endomorphism so equivalent spellings share a cache entry
    let endo = match &j.endo {
        Some(text) => Some(FreeEndomorphism::from_json(j.n, text)?.to_json()),
        None => None,
    };
    Ok(args(&[("n", json!(j.n)), ("span", json!(j.span)), ("endo", json!(endo))]))
}

fn tau_json(t: &JohnsonValue) -> Value {
    json!({
        "text": t.to_string(),
        "terms": t.terms().map(|(a, b, c, v)| json!({"input": a, "wedge": [b, c], "coefficient": v})).collect::<Vec<_>>(),
    })
}

fn cmd_johnson(j: &JohnsonArgs) -> CliResult<Outcome> {
    if j.n > MAX_JOHNSON_RANK {
        return Err(Error::capacity(format!("rank {} exceeds the cap {MAX_JOHNSON_RANK}", j.n)).into());
    }
    let result = if j.span {
        let dim = tau_span_dim(j.n)?;
        json!({"n": j.n, "span_dim": dim, "hom_dim": j.n * j.n * (j.n - 1) / 2})
    } else if let Some(text) = &j.endo {
        let f = FreeEndomorphism::from_json(j.n, text)?;
        if !is_ia(&f) {
            return Err(Error::invalid("endomorphism does not act trivially on H, so tau is undefined").into());
        }
        json!({"n": j.n, "endomorphism": serde_json::from_str::<Value>(&f.to_json()).expect("valid json"), "tau": tau_json(&johnson_tau(&f)?)})
    } else {
        let gens = magnus_generators(j.n)?;
        let rows = gens
            .iter()
            .map(|g| {
                Ok(json!({
                    "endomorphism": serde_json::from_str::<Value>(&g.to_json()).expect("valid json"),
                    "tau": tau_json(&johnson_tau(g)?),
                }))
            })
            .collect::<CliResult<Vec<_>>>()?;
        json!({"n": j.n, "generator_count": rows.len(), "generators": rows})
    };
    Ok(Outcome {
        result,
        provenance: Provenance { route: "magnus-pair-counting".into(), ..Default::default() },
        verdict: None,
    })
}

fn cmd_omega(o: &OmegaArgs) -> CliResult<Outcome> {
    let cfg = OracleConfig::default();
    let report = omega_prime_verify(o.n, o.p, o.q, &cfg)?;
    let mut result = json!({
        "n": o.n,
        "p": o.p,
        "q": o.q,
        "expected": report.expected,
        "invariant_dim": report.invariant_dim,
        "omega_prime_rank": report.omega_prime_rank,
        "others_vanish": report.others_vanish,
        "omega_rank": report.omega_rank,
        "full_invariant_dim": report.full_invariant_dim,
        "passed": report.passed(),
    });
    if let Some(path) = &o.dump {
        let m = omega_matrix(o.n, o.p, o.q, &cfg)?;
        std::fs::write(path, m.to_triplets())?;
        result["dump"] = json!({"rows": m.codomain_dim, "cols": m.domain_dim, "nonzeros": m.matrix.nnz()});
    }
    Ok(Outcome {
        result,
        provenance: Provenance {
            route: "orbit-sums+exact-rank".into(),
            valid_from_rank: Some(o.p + o.q),
            ..Default::default()
        },
        verdict: Some(report.passed()),
    })
}

fn verify(cli: &Cli, v: &VerifyArgs, cache: &Cache) -> CliResult<(Args, Outcome)> {
    let caps = SuiteCaps {
        prop_max_p: v.prop_max_p,
        prop_max_q: v.prop_max_q,
        io_max_degree: v.io_max_degree,
        plethysm_max_size: v.plethysm_max_size,
        character_rank: v.character_rank,
    };
    if caps.io_max_degree > cli.max_degree || caps.prop_max_p.saturating_sub(caps.prop_max_q) > cli.max_degree {
        return Err(Error::capacity("suite degree exceeds the configured maximum").into());
    }
    let a = args(&[("suite", json!(v.suite.name())), ("caps", serde_json::to_value(&caps).expect("caps serialize"))]);
    let cases = run_suite(v.suite, &caps, workers_for(cli), cache)?;
    let failures: Vec<String> = cases.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    let passed = failures.is_empty();
    let result = json!({
        "suite": v.suite.name(),
        "passed": passed,
        "case_count": cases.len(),
        "failures": failures,
        "cases": cases,
    });
    let outcome = Outcome {
        result,
        provenance: Provenance { route: "suite".into(), ..Default::default() },
        verdict: Some(passed),
    };
    Ok((a, outcome))
}

impl From<CliError> for Outcome {
    fn from(e: CliError) -> Self {
        Outcome { result: json!({"error": e.to_string()}), provenance: Provenance::default(), verdict: Some(false) }
    }
}

/// Drops terms absent at rank `n`; exposed for the TSV tests.
pub fn truncated(d: &albanese_core::Decomposition, n: usize) -> albanese_core::Decomposition {
    evaluate_at_rank(d, n)
}
