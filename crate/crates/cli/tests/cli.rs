use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn albanese(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_albanese"))
        .args(args)
        .env_remove("ALBANESE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = albanese(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn envelope_has_the_four_sections_in_order() {
    let out = albanese(&["w", "--degree", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let pos: Vec<usize> = ["\"query\"", "\"result\"", "\"provenance\"", "\"timing\""]
        .iter()
        .map(|k| text.find(k).expect(k))
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["query"]["command"], "w");
    assert_eq!(v["timing"]["cache"], "off");
    assert_eq!(v["provenance"]["conjectural"], false);
}

#[test]
fn w_degree_one() {
    let v = json(&["w", "--degree", "1"]);
    let terms = v["result"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!((terms[0]["lambda"].as_str(), terms[0]["mu"].as_str()), (Some("1,1"), Some("1")));
    assert_eq!((terms[1]["lambda"].as_str(), terms[1]["mu"].as_str()), (Some("1"), Some("0")));
    assert_eq!(v["result"]["polynomial"]["text"], "1/2*T^3 - 1/2*T^2");

    let outer = json(&["w", "--degree", "1", "--variant", "outer"]);
    assert_eq!(outer["result"]["terms"].as_array().unwrap().len(), 1);
}

#[test]
fn rank_truncation_drops_long_constituents() {
    let v = json(&["w", "--degree", "2", "--rank", "4", "--unstable"]);
    let full = json(&["w", "--degree", "2"]);
    let terms = v["result"]["terms"].as_array().unwrap();
    assert!(terms.len() < full["result"]["terms"].as_array().unwrap().len());
    for t in terms {
        let len = |s: &str| if s == "0" { 0 } else { s.split(',').count() };
        assert!(len(t["lambda"].as_str().unwrap()) + len(t["mu"].as_str().unwrap()) <= 4);
    }
}

#[test]
fn below_the_stable_range_needs_the_unstable_flag() {
    assert_eq!(albanese(&["w", "--degree", "2", "--rank", "3"]).status.code(), Some(1));
    assert_eq!(albanese(&["dims", "--target", "w", "--degree", "2", "--rank", "5"]).status.code(), Some(1));
    let v = json(&["w", "--degree", "2", "--rank", "3", "--unstable"]);
    assert!(v["provenance"]["warnings"][0].as_str().unwrap().starts_with("unstable"));
    let v = json(&["w", "--degree", "2", "--rank", "6"]);
    assert!(v["provenance"]["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn aut_cohomology_examples() {
    for (p, q, degree, dim) in [("1", "0", 1, 1), ("2", "1", 1, 3), ("2", "2", 0, 2)] {
        let v = json(&["aut", "--p", p, "--q", q]);
        assert_eq!(v["result"]["degree"], degree, "({p},{q})");
        assert_eq!(v["result"]["dimension"], dim, "({p},{q})");
        assert_eq!(v["result"]["routes_agree"], true);
    }
    let v = json(&["aut", "--p", "0", "--q", "1"]);
    assert_eq!(v["result"]["dimension"], 0);
}

#[test]
fn conjectural_dimensions_are_flagged() {
    let v = json(&["dims", "--target", "h-conj", "--degree", "4"]);
    assert_eq!(v["provenance"]["conjectural"], true);
    assert!(v["provenance"]["hypothesis"].is_string());
    assert_eq!(v["result"]["excess_over_w"], "1");
    let w = json(&["dims", "--target", "w", "--degree", "3"]);
    assert_eq!(w["provenance"]["conjectural"], false);
}

#[test]
fn invariants_and_johnson() {
    let v = json(&["invariants", "--n", "3", "--p", "2", "--q", "1", "--r", "1", "--s", "2"]);
    assert_eq!(v["result"]["dimension"], 2);
    let v = json(&["johnson", "--n", "3", "--span"]);
    assert_eq!(v["result"]["span_dim"], 9);
    let v = json(&["johnson", "--n", "3", "--endo", r#"{"x1": "x1 x2 x3 x2^-1 x3^-1"}"#]);
    assert_eq!(v["result"]["tau"]["text"], "e1 -> e2^e3; e2 -> 0; e3 -> 0");
}

#[test]
fn omega_dump_writes_triplets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("omega.txt");
    let v = json(&["omega", "--n", "2", "--p", "1", "--q", "1", "--dump", path.to_str().unwrap()]);
    assert_eq!(v["result"]["passed"], true);
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len() as u64, v["result"]["dump"]["nonzeros"].as_u64().unwrap());
    for line in lines {
        let f: Vec<&str> = line.split(' ').collect();
        assert_eq!(f.len(), 3, "{line}");
        assert!(f[2].contains('/'));
    }
}

#[test]
fn verification_suites_pass() {
    for suite in ["omega", "io-split", "prop-match", "johnson"] {
        let out = albanese(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [&["w", "--degree", "3"][..], &["verify", "--suite", "prop-match", "--workers", "3"][..]] {
        let a = without_timing(json(args));
        let b = without_timing(json(args));
        assert_eq!(a, b, "{args:?}");
    }
}

fn cached(dir: &Path, args: &[&str]) -> Value {
    let mut full = vec!["--cache", "--cache-dir", dir.to_str().unwrap()];
    full.extend_from_slice(args);
    json(&full)
}

#[test]
fn cache_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["w", "--degree", "4"][..], &["aut", "--p", "3", "--q", "1"][..], &["verify", "--suite", "io-split"][..]] {
        let plain = without_timing(json(args));
        let first = cached(dir.path(), args);
        let second = cached(dir.path(), args);
        if args[0] != "verify" {
            assert_eq!(first["timing"]["cache"], "miss");
            assert_eq!(second["timing"]["cache"], "hit");
        }
        assert_eq!(without_timing(first), plain);
        assert_eq!(without_timing(second), plain);
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn exit_codes() {
    assert_eq!(albanese(&["w", "--degree", "6"]).status.code(), Some(3));
    assert_eq!(albanese(&["w", "--degree", "6", "--max-degree", "4"]).status.code(), Some(3));
    assert_eq!(albanese(&["w", "--bogus"]).status.code(), Some(1));
    assert_eq!(albanese(&["johnson", "--n", "3", "--endo", "{not json"]).status.code(), Some(1));
    assert_eq!(albanese(&["--help"]).status.code(), Some(0));
}

#[test]
fn tsv_output() {
    let out = albanese(&["--format", "tsv", "w", "--degree", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "lambda\tmu\tmultiplicity\n1,1\t1\t1\n1\t0\t1\n");
    let out = albanese(&["--format", "tsv", "aut", "--p", "2", "--q", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "dimension\t3"), "{text}");
}
