use std::path::{Path, PathBuf};
use std::process::Command;

use clap::Parser;
use serde_json::Value;

use synaptica::verify::Hooks;
use synaptica::{execute, Cli, Output};
use synaptica_core::synaptic::{self, Decomposition};
use synaptica_core::{SymMatrix, SynapticElement};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    run_with(args, None, Hooks::default())
}

fn run_with(args: &[&str], tol: Option<&str>, hooks: Hooks) -> Output {
    let cli = Cli::try_parse_from(std::iter::once("synaptica").chain(args.iter().copied()))
        .expect("valid arguments");
    execute(&cli, tol, hooks)
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).expect("json report")
}

fn law<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["laws"]
        .as_array()
        .unwrap()
        .iter()
        .find(|l| l["law"] == name)
        .expect("law listed")
}

#[test]
fn valid_chain_exits_zero() {
    let out = run(&["check", fixture("chain3.json").to_str().unwrap()]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let r = json(&out);
    let doc = &r["documents"][0];
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["laws"].as_array().unwrap().len(), 5);
    assert_eq!(doc["properties"]["orthosupplement"]["h"], "h");
}

#[test]
fn broken_associativity_reports_a_triple() {
    let out = run(&["check", fixture("broken_assoc.json").to_str().unwrap()]);
    assert_eq!(out.status, 1);
    let r = json(&out);
    let assoc = law(&r["documents"][0], "associativity");
    assert_eq!(assoc["passed"], false);
    assert_eq!(assoc["witness"].as_array().unwrap().len(), 3);
    assert_eq!(law(&r["documents"][0], "commutativity")["passed"], true);
}

#[test]
fn malformed_and_unknown_inputs_exit_two() {
    let dir = std::env::temp_dir().join(format!("synaptica-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"kind\": \"effect_algebra\", \"elements\": [").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]).status, 2);
    let unknown = dir.join("unknown.json");
    std::fs::write(&unknown, r#"{"kind": "group", "elements": []}"#).unwrap();
    assert_eq!(run(&["check", unknown.to_str().unwrap()]).status, 2);
    let shape = dir.join("shape.json");
    std::fs::write(
        &shape,
        r#"{"kind": "sym_matrix", "n": 2, "entries": [1, 2, 3]}"#,
    )
    .unwrap();
    assert_eq!(run(&["check", shape.to_str().unwrap()]).status, 2);
    let asym = dir.join("asym.json");
    std::fs::write(
        &asym,
        r#"{"kind": "sym_matrix", "n": 2, "entries": [1, 2, 3, 4]}"#,
    )
    .unwrap();
    assert_eq!(run(&["check", asym.to_str().unwrap()]).status, 1);
    assert_eq!(
        run(&["check", dir.join("missing.json").to_str().unwrap()]).status,
        2
    );
    assert_eq!(
        run(&[
            "check",
            "--kind",
            "group",
            fixture("r3.json").to_str().unwrap()
        ])
        .status,
        2
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ortholattice_check_lists_every_law() {
    let out = run(&["check", fixture("mo2.json").to_str().unwrap()]);
    assert_eq!(out.status, 0);
    let doc = &json(&out)["documents"][0];
    assert_eq!(doc["laws"].as_array().unwrap().len(), 7);
    assert_eq!(doc["properties"]["classification"]["orthomodular"], true);
    assert_eq!(doc["properties"]["classification"]["distributive"], false);
}

#[test]
fn spectral_diagonal_example() {
    let out = run(&[
        "spectral",
        fixture("matrices.json").to_str().unwrap(),
        "--label",
        "d",
    ]);
    assert_eq!(out.status, 0);
    let e = &json(&out)["elements"][0];
    let spectrum: Vec<f64> = e["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["value"].as_f64().unwrap())
        .collect();
    assert_eq!(spectrum, vec![-2.0, 1.0]);
    assert_eq!(e["lower"], -2.0);
    assert_eq!(e["upper"], 1.0);
    assert_eq!(e["abs"], serde_json::json!([1.0, 0.0, 0.0, 2.0]));
    assert!(e["residual"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn spectral_identity_and_unknown_label() {
    let out = run(&[
        "spectral",
        fixture("matrices.json").to_str().unwrap(),
        "--label",
        "id",
    ]);
    let e = &json(&out)["elements"][0];
    assert_eq!(e["spectrum"].as_array().unwrap().len(), 1);
    assert_eq!(e["spectrum"][0]["value"], 1.0);
    assert_eq!(e["spectrum"][0]["multiplicity"], 3);
    let out = run(&[
        "spectral",
        fixture("matrices.json").to_str().unwrap(),
        "--label",
        "nope",
    ]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("unknown label"));
}

#[test]
fn spectral_random_five_by_five() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let a = synaptica_core::sample::random_symmetric(&mut rng, 5, 1.0);
    let dir = std::env::temp_dir().join(format!("synaptica-spectral-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.json");
    let doc =
        serde_json::json!({"kind": "sym_matrix", "label": "a", "n": 5, "entries": a.entries()});
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = run(&["spectral", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    let e = &json(&out)["elements"][0];
    assert!(e["residual"].as_f64().unwrap() <= 1e-9);
    assert_eq!(e["eigenprojections"].as_array().unwrap().len(), 5);
}

#[test]
fn states_vertex_counts() {
    let out = run(&[
        "states",
        "--extremal",
        fixture("mo2.json").to_str().unwrap(),
    ]);
    let doc = &json(&out)["documents"][0];
    assert_eq!(doc["vertex_count"], 4);
    assert_eq!(doc["dimension"], 2);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 4);
    let out = run(&[
        "states",
        "--extremal",
        fixture("boolean2.json").to_str().unwrap(),
    ]);
    let doc = &json(&out)["documents"][0];
    assert_eq!(doc["vertex_count"], 2);
    let first = &doc["vertices"][0];
    assert!(first
        .as_object()
        .unwrap()
        .values()
        .all(|v| v == "0" || v == "1"));
}

#[test]
fn states_of_r3_are_coordinate_evaluations() {
    let out = run(&["states", "--extremal", fixture("r3.json").to_str().unwrap()]);
    assert_eq!(out.status, 0);
    let r = json(&out);
    let doc = &r["documents"][0];
    assert_eq!(doc["vertex_count"], 3);
    let mut points = Vec::new();
    for v in doc["vertices"].as_array().unwrap() {
        let f = &v["flags"];
        assert_eq!(f["multiplicative"], true);
        assert_eq!(f["sharp"], true);
        assert_eq!(f["vertex"], true);
        points.push(f["point_evaluation"].as_str().unwrap().to_string());
    }
    points.sort();
    assert_eq!(points, ["x", "y", "z"]);
    let interior = &r["documents"][1]["flags"];
    assert_eq!(interior["vertex"], false);
    assert_eq!(interior["multiplicative"], false);
    assert_eq!(interior["agree"], true);
}

#[test]
fn stateless_effect_algebra_reports_a_certificate() {
    let out = run(&["check", fixture("stateless.json").to_str().unwrap()]);
    assert_eq!(out.status, 0, "the fixture is a valid effect algebra");
    let out = run(&["states", fixture("stateless.json").to_str().unwrap()]);
    assert_eq!(out.status, 0);
    let doc = &json(&out)["documents"][0];
    assert_eq!(doc["states"], "no states");
    assert_eq!(doc["certificate"]["verified"], true);
}

#[test]
fn state_documents_are_checked() {
    let out = run(&[
        "check",
        "--kind",
        "state",
        fixture("matrices.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status, 0);
    let doc = &json(&out)["documents"][0];
    assert_eq!(law(doc, "unit trace")["passed"], true);
}

#[test]
fn pretty_output_is_text() {
    let out = run(&[
        "check",
        "--pretty",
        fixture("chain3.json").to_str().unwrap(),
    ]);
    assert!(out.stdout.starts_with("command: check\n"));
    let out = run(&["verify", "posets", "--pretty"]);
    assert!(out.stdout.lines().next().unwrap().starts_with("suite"));
    assert!(out.stdout.ends_with("overall: PASS\n"));
}

#[test]
fn verify_unknown_suite_exits_two() {
    assert_eq!(run(&["verify", "groups"]).status, 2);
}

fn sign_bug(a: &SymMatrix) -> Decomposition<SymMatrix> {
    let d = synaptic::decompose(a);
    Decomposition {
        neg: d.neg.scale(-1.0),
        ..d
    }
}

#[test]
fn injected_sign_bug_names_the_identity() {
    let out = run_with(
        &["verify", "synaptic"],
        None,
        Hooks {
            decompose: sign_bug,
        },
    );
    assert_eq!(out.status, 1);
    let r = json(&out);
    let failing: Vec<&str> = r["suites"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failing.contains(&"a = a+ - a-"), "{failing:?}");
}

#[test]
fn verify_stone_reports_round_trip_residuals() {
    let out = run(&["verify", "stone"]);
    assert_eq!(out.status, 0);
    let r = json(&out);
    let psi = r["suites"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "psi round-trip residual")
        .unwrap();
    assert!(psi["worst_residual"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn report_tolerance_comes_from_the_environment() {
    let strict = run_with(&["verify", "synaptic"], Some("1e-30"), Hooks::default());
    assert_eq!(strict.status, 1);
    assert_eq!(
        run_with(&["verify", "synaptic"], Some("abc"), Hooks::default()).status,
        2
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_synaptica");
    let ok = Command::new(bin)
        .args(["check", fixture("chain3.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin)
        .args(["check", fixture("broken_assoc.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
