mod common;

use std::process::Command;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rotsym::boolfn::{Budget, Interpretation, RSFunctionSpec, WeightSequence};
use rotsym::cli::{parse_spec, render, run, run_pipeline, OutputFormat, RunConfig};
use rotsym::linalg::{minimal_polynomial, BigPoly, MinPolyMethod};
use rotsym::recursion::{initial_conditions, propagate, verify_recursion, RecursionSpec};
use rotsym::rules::{build_rules_matrix, MatrixBudget};

fn derive(spec: &RSFunctionSpec) -> RecursionSpec {
    let r = build_rules_matrix(spec, MatrixBudget::default()).unwrap();
    let p = minimal_polynomial(r.matrix(), MinPolyMethod::Auto, 1).unwrap();
    RecursionSpec::from_polynomial(&p.strip_x_factor().unwrap().0, spec.max_top() + 1).unwrap()
}

#[test]
fn recursion_round_trip_on_battery() {
    let budget = Budget::default();
    for s in BATTERY.iter().chain(&["1,2,3", "1,2,6;1,2;1,6"]) {
        let spec: RSFunctionSpec = s.parse().unwrap();
        let rec = derive(&spec);
        assert!(rec.order() as u32 + spec.max_top() <= 24);
        let rep = verify_recursion(&spec, &rec, spec.max_top(), 24, Interpretation::FullSum, budget).unwrap();
        assert!(rep.holds_from_valid_from, "{s}: {:?}", rep.nonzero);
        assert!(rep.holds_from.unwrap() <= rec.valid_from);
    }
}

#[test]
fn back_substitution_against_oracle() {
    for s in BATTERY.iter().chain(&["1,2,3"]) {
        let spec: RSFunctionSpec = s.parse().unwrap();
        let rec = derive(&spec);
        let init = initial_conditions(&spec, &rec, Interpretation::FullSum, Budget::default()).unwrap();
        let seq = propagate(&rec, &init, rec.order() + 5).unwrap();
        assert_eq!(seq.values[..rec.order()], init.values[..]);
        for (i, w) in seq.values.iter().enumerate() {
            let n = seq.start_n + i as u32;
            if n <= 16 {
                assert_eq!(*w, BigInt::from(brute_weight(&spec, n, Interpretation::FullSum)), "{s} n={n}");
            }
        }
    }
}

#[test]
fn pruning_keeps_the_recursion() {
    for s in BATTERY.iter().chain(&["1,2,3", "1,5"]) {
        let spec: RSFunctionSpec = s.parse().unwrap();
        let r = build_rules_matrix(&spec, MatrixBudget::default()).unwrap();
        let raw = minimal_polynomial(&r.raw_matrix(), MinPolyMethod::Auto, 1).unwrap();
        let pruned = minimal_polynomial(r.matrix(), MinPolyMethod::Auto, 1).unwrap();
        let raw_q = raw.strip_x_factor().unwrap().0;
        let pruned_q = pruned.strip_x_factor().unwrap().0;
        // Both reduced polynomials annihilate the full-sum weights.
        for q in [&raw_q, &pruned_q] {
            let rec = RecursionSpec::from_polynomial(q, spec.max_top() + 1).unwrap();
            let rep = verify_recursion(&spec, &rec, spec.max_top(), 22, Interpretation::FullSum, Budget::default()).unwrap();
            assert!(rep.holds_from_valid_from, "{s}");
        }
    }
}

#[test]
fn convention_lock_doubles() {
    let rec = RecursionSpec::from_polynomial(&BigPoly::from_i64(&[-2, 1]), 1).unwrap();
    let init = WeightSequence::new(1, vec![BigInt::from(1)]).unwrap();
    let seq = propagate(&rec, &init, 40).unwrap();
    for w in seq.values.windows(2) {
        assert_eq!(&w[0] * 2, w[1]);
    }
}

fn config(s: &str) -> RunConfig {
    let mut c = RunConfig::new(parse_spec(s).unwrap());
    c.weights_count = Some(10);
    c.verify = Some(18);
    c.format = OutputFormat::Json;
    c
}

#[test]
fn json_is_deterministic_and_seed_independent() {
    for s in ["1,2,3", "1,2;1,3", "1,2,6;1,2;1,6", "1"] {
        let c = config(s);
        let a = run(&c);
        assert_eq!(a, run(&c));
        assert_eq!(a.1, 0);
        for method in [MinPolyMethod::VectorLcm, MinPolyMethod::Modular] {
            let mut c2 = c.clone();
            c2.method = method;
            c2.seed = 12345;
            let r1 = run_pipeline(&c).unwrap();
            let r2 = run_pipeline(&c2).unwrap();
            assert_eq!(r1.minimal_polynomial, r2.minimal_polynomial, "{s}");
        }
        let v: serde_json::Value = serde_json::from_str(&a.0).unwrap();
        assert_eq!(v["spec"], s);
    }
}

#[test]
fn json_arrays_are_ascending() {
    let r = run_pipeline(&config("1,2,6;1,2;1,6")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&render(&r, OutputFormat::Json)).unwrap();
    let q: Vec<&str> = v["reduced_polynomial"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(q, ["-8", "4", "4", "2", "-2", "-2", "1"]);
    assert_eq!(v["weights"][3]["method"], "short-replaced");
    assert_eq!(v["weights"][6]["method"], "propagated");
    assert_eq!(v["x_multiplicity"], 9);
}

#[test]
fn dump_matrix_writes_sorted_triplets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    let mut c = RunConfig::new(parse_spec("1,2,3").unwrap());
    c.dump_matrix = Some(path.clone());
    assert_eq!(run(&c).1, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<(usize, usize, i64)> = text
        .lines()
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
    assert!(rows.contains(&(3, 3, 2)));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rotsym");
    let out = Command::new(bin).args(["1,2,3", "--weights", "8"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("{1,4,6,18,36,80,172,360}") || text.contains("{4,6,18,36,80,172,360,760}"), "{text}");
    let out = Command::new(bin).arg("2,3").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("beginning with 1"));
    let out = Command::new(bin).args(["1,2", "--verify", "29"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin).args(["1,2", "--format", "json", "--verify"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verification"]["n_hi"], 22);
}

proptest! {
    #[test]
    fn spec_text_round_trips(gens in prop::collection::btree_set(prop::collection::btree_set(2u32..20, 1..4), 1..4)) {
        let text: Vec<String> = gens
            .iter()
            .map(|g| std::iter::once(1).chain(g.iter().copied()).map(|i| i.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        let spec = parse_spec(&text.join(";")).unwrap();
        prop_assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec.clone());
        prop_assert_eq!(spec.to_string(), text.join(";"));
    }
}
