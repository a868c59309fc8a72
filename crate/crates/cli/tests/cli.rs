use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};
use unifock::partition::{Multipartition, Partition};
use unifock_cli::json::{parse_block, parse_config, parse_fock_vector, parse_weight};
use unifock_cli::json as enc;

fn unifock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unifock"))
        .args(args)
        .env_remove("UNIFOCK_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = unifock(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    unifock(args).status.code().expect("exit code")
}

fn scratch(name: &str, content: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn documented_examples() {
    assert_eq!(ok_json(&["cuspidals", "--n", "3"]), json!(["2,1"]));
    let b = ok_json(&["block", "--lambda", "4,1", "--e", "3"]);
    assert_eq!(b["core_partition"], json!([1, 1]));
    assert_eq!(b["w"], json!(1));
    assert_eq!(
        ok_json(&["hecke", "--lambda", "-", "--e", "3"]),
        json!({"t": 0, "Q_exponents": [-1, 0], "quadratic_exponent": 2})
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["hecke", "--lambda", "2", "--e", "3"]), 1);
    assert_eq!(code(&["weak-cuspidals", "--n", "4", "--e", "4"]), 1);
    assert_eq!(code(&["blocks", "--n", "40", "--e", "3"]), 1);
    assert_eq!(code(&["block", "--lambda", "1,2", "--e", "3"]), 2);
    assert_eq!(code(&["block", "--lambda", "2,0", "--e", "3"]), 2);
    assert_eq!(code(&["block", "--lambda", "2", "--e", "2"]), 2);
    assert_eq!(code(&["crystal", "--e", "3", "--t", "0", "--max-n", "2", "--format", "svg"]), 2);
    assert_eq!(code(&["orbit", "--block1", "{", "--block2", "{}", "--e", "3"]), 2);
    assert_eq!(code(&["heis", "--op", "b", "--index", "1", "--vector", "/nonexistent/vector.json"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn degree_cap_is_configurable() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_unifock"))
            .args(["weak-cuspidals", "--n", "5", "--e", "3"])
            .env("UNIFOCK_MAX_DEGREE", cap)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("4"), Some(1));
    assert_eq!(run("5"), Some(0));
}

#[test]
fn block_and_weight_round_trip() {
    for lam in ["-", "1", "4,1", "3,3,2", "5,2,2,1"] {
        for e in ["3", "4", "5"] {
            let b = ok_json(&["block", "--lambda", lam, "--e", e]);
            let parsed = parse_block(&b, e.parse().unwrap()).unwrap();
            assert_eq!(enc::block(&parsed), b);
            let w = ok_json(&["weight", "--lambda", lam, "--e", e]);
            assert_eq!(enc::weight(&parse_weight(&w).unwrap()), w);
        }
    }
}

#[test]
fn blocks_partition_the_characters() {
    let blocks = ok_json(&["blocks", "--n", "6", "--e", "3"]);
    let mut seen = BTreeSet::new();
    for b in blocks.as_array().unwrap() {
        for c in b["characters"].as_array().unwrap() {
            let lam = c.as_str().unwrap();
            assert!(seen.insert(lam.to_string()));
            let own = ok_json(&["block", "--lambda", lam, "--e", "3"]);
            assert_eq!(own["core"], b["core"]);
            assert_eq!(own["w"], b["w"]);
        }
    }
    assert_eq!(seen.len(), 11);
}

#[test]
fn orbit_and_good() {
    let b1 = r#"{"core":[1,0,-1],"w":0}"#;
    let b2 = r#"{"core":[0,1,-1],"w":0}"#;
    let v = ok_json(&["orbit", "--block1", b1, "--block2", b2, "--e", "3"]);
    assert_eq!(v["weyl_equivalent"], v["criterion_value"]);
    let g = ok_json(&["good", "--block", r#"{"core":[2,-1,-1],"w":1}"#, "--e", "3", "--find"]);
    assert_eq!(g["weyl_equivalent"], json!(true));
    let rep = serde_json::to_string(&g["representative"]).unwrap();
    assert_eq!(ok_json(&["good", "--block", &rep, "--e", "3"])["good"], json!(true));
    assert_eq!(code(&["good", "--block", r#"{"core":[1,0,0],"w":0}"#, "--e", "3"]), 2);
}

#[test]
fn series_output() {
    let s = ok_json(&["series", "--lambda", "3,2,1", "--e", "3"]);
    assert_eq!(s["ordinary"]["t"], json!(3));
    assert_eq!(s["ordinary"]["quotient"], json!([[], []]));
    assert!(ok_json(&["series", "--lambda", "3,2,1", "--e", "4"])["weak"].is_null());
}

#[test]
fn hw_dims_weights_round_trip() {
    for flag in [None, Some("--heisenberg")] {
        let mut args = vec!["hw-dims", "--e", "3", "--t", "1", "--n", "4"];
        args.extend(flag);
        let v = ok_json(&args);
        assert_eq!(enc::config(&parse_config(&v["config"]).unwrap()), v["config"]);
        let mut total = 0;
        for entry in v["per_weight"].as_array().unwrap() {
            assert_eq!(enc::weight(&parse_weight(&entry["weight"]).unwrap()), entry["weight"]);
            total += entry["dim"].as_u64().unwrap();
        }
        assert_eq!(v["total"].as_u64(), Some(total));
    }
}

#[test]
fn heisenberg_on_a_file_vector() {
    let vacuum = ok_json(&["hw-dims", "--e", "3", "--t", "0", "--n", "0"]);
    let doc = json!({"config": vacuum["config"], "terms": [{"mu": [[], []], "coeff": "1/1"}]});
    let path = scratch("vacuum.json", &doc.to_string());
    let path = path.to_str().unwrap();
    let up = ok_json(&["heis", "--op", "b", "--index", "1", "--vector", path]);
    let x = parse_fock_vector(&up).unwrap();
    assert_eq!(enc::fock_vector(&x), up);
    assert!(!up["terms"].as_array().unwrap().is_empty());
    for term in up["terms"].as_array().unwrap() {
        let mu: usize = term["mu"].as_array().unwrap().iter().flat_map(|c| c.as_array().unwrap()).map(|x| x.as_u64().unwrap() as usize).sum();
        assert_eq!(mu, 3);
    }
    let up_path = scratch("b1_vacuum.json", &up.to_string());
    let down = ok_json(&["heis", "--op", "bstar", "--index", "1", "--vector", up_path.to_str().unwrap()]);
    let down = parse_fock_vector(&down).unwrap();
    assert_eq!(down.terms().len(), 1);
    assert_eq!(ok_json(&["heis", "--op", "bstar", "--index", "1", "--vector", path])["terms"], json!([]));
    let a = ok_json(&["heis", "--op", "a", "--nu", "1", "--vector", path]);
    assert_eq!(a, up);
    assert_eq!(code(&["heis", "--op", "a", "--index", "1", "--vector", path]), 2);
    let bad = scratch("bad.json", r#"{"config": {"e": 3}, "terms": []}"#);
    assert_eq!(code(&["heis", "--op", "b", "--index", "1", "--vector", bad.to_str().unwrap()]), 2);
}

type GraphShape = (Vec<(Value, u64)>, BTreeSet<(u64, i64, u64)>);

fn parse_label(label: &str) -> Value {
    match label.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(inner) => {
            let comps: Vec<Partition> = inner.split(" | ").map(|c| c.parse().unwrap()).collect();
            enc::multipartition(&Multipartition::new(comps))
        }
        None => enc::partition(&label.parse().unwrap()),
    }
}

/// Reads the emitted DOT back into the JSON graph shape.
fn dot_to_graph(dot: &str) -> GraphShape {
    let mut lines = dot.lines();
    assert!(lines.next().unwrap().starts_with("digraph "));
    let mut vertices = Vec::new();
    let mut edges = BTreeSet::new();
    for line in lines {
        let line = line.trim();
        if line == "}" {
            continue;
        }
        let body = line.strip_suffix("];").expect("statement");
        let (head, attr) = body.split_once(" [label=\"").unwrap();
        let attr = attr.strip_suffix('"').unwrap();
        match head.split_once(" -> ") {
            Some((a, b)) => {
                let a = a.trim_start_matches('v').parse().unwrap();
                let b = b.trim_start_matches('v').parse().unwrap();
                edges.insert((a, attr.parse().unwrap(), b));
            }
            None => {
                assert_eq!(head, format!("v{}", vertices.len()));
                let (label, n) = attr.split_once("\\nn=").unwrap();
                vertices.push((parse_label(label), n.parse().unwrap()));
            }
        }
    }
    assert_eq!(dot.matches('{').count(), 1);
    assert!(dot.ends_with("}\n"));
    (vertices, edges)
}

fn json_graph(v: &Value) -> GraphShape {
    let vertices = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["label"].clone(), x["degree"].as_u64().unwrap()))
        .collect();
    let edges = v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["source"].as_u64().unwrap(), x["i"].as_i64().unwrap(), x["target"].as_u64().unwrap()))
        .collect();
    (vertices, edges)
}

#[test]
fn dot_matches_json() {
    let cases: [&[&str]; 4] = [
        &["crystal", "--e", "3", "--t", "0", "--max-n", "4"],
        &["crystal", "--e", "4", "--t", "1", "--max-n", "3"],
        &["branching", "--e", "3", "--max-n", "7"],
        &["branching", "--e", "5", "--max-n", "6"],
    ];
    for args in cases {
        let v = ok_json(args);
        let mut dot_args = args.to_vec();
        dot_args.extend(["--format", "dot"]);
        let out = unifock(&dot_args);
        assert_eq!(out.status.code(), Some(0));
        let dot = String::from_utf8(out.stdout).unwrap();
        let (jv, je) = json_graph(&v);
        assert!(!je.is_empty(), "{args:?}");
        for (label, n) in &jv {
            let size: u64 = match label.as_array().unwrap().first() {
                Some(Value::Array(_)) => label.as_array().unwrap().iter().flat_map(|c| c.as_array().unwrap()).map(|x| x.as_u64().unwrap()).sum(),
                _ => label.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum(),
            };
            assert_eq!(size, *n);
        }
        assert_eq!(dot_to_graph(&dot), (jv, je), "{args:?}");
    }
}

#[test]
fn reruns_are_byte_identical() {
    let cases: [&[&str]; 6] = [
        &["blocks", "--n", "8", "--e", "4"],
        &["crystal", "--e", "3", "--t", "1", "--max-n", "4", "--format", "dot"],
        &["branching", "--e", "3", "--max-n", "6"],
        &["hw-dims", "--e", "4", "--t", "0", "--n", "5", "--heisenberg"],
        &["weak-cuspidals", "--n", "7", "--e", "3"],
        &["core-quotient", "--lambda", "5,3,3,1", "--d", "-2", "--l", "4"],
    ];
    for args in cases {
        let a = unifock(args);
        let b = unifock(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
