use std::process::{Command, Output};

use partmorse::complex::PartitionComplex;
use partmorse::morse::{parse_matching_dump, validate_matching};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partmorse"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn verify_four_passes() {
    let out = run(&["verify", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn matching_certificates_and_dump() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    let out = run(&["matching", "--n", "4", "--dump-matching", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["isAcyclic"], true);
    assert_eq!(v["isMatching"], true);
    assert_eq!(v["criticalCounts"], serde_json::json!([1, 6]));
    assert!(v["equivariantUnder"].is_string());
    let k = PartitionComplex::partition_nerve(4).unwrap();
    let m = parse_matching_dump(&k, &std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(validate_matching(&k, &m).unwrap().is_valid());
    assert_eq!(m.critical_cells().len(), 7);
}

#[test]
fn cyclic_quotient_torsion() {
    let out = run(&["homology", "--n", "5", "--group", "(1 2 3 4 5)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(json(&out)["homology"][1]["torsion"], serde_json::json!([5]));
}

#[test]
fn full_stabilizer_quotient() {
    let out = run(&["quotient", "--n", "5", "--group", "(2 3),(2 3 4 5)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["criticalCells"].as_array().unwrap().len(), 2);
    assert_eq!(v["wedgeCount"], 1);
}

#[test]
fn invalid_configurations_exit_2() {
    assert_eq!(run(&["complex", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "--n", "4", "--group", "(1 9)"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "--n", "4", "--group", "(1 2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["report", "--n", "5"][..],
        &["quotient", "--n", "4", "--format", "csv"][..],
        &["homology", "--n", "5", "--format", "text", "--max-dim", "1"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["report", "--n", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let levels = v.as_array().unwrap();
    assert_eq!(levels.len(), 3);
    assert_eq!(levels[2]["cardinalityCn"], 24);
    assert_eq!(levels[2]["orbitData"], serde_json::json!({"orbits": 1, "stabilizerOrder": 1}));
    assert_eq!(levels[2]["certificates"]["criticalSetMatches"], true);
}

#[test]
fn text_homology_with_max_dim() {
    let out = run(&["homology", "--n", "4", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "H~0 = 0\nH~1 = Z^6\n");
    let out = run(&["homology", "--n", "5", "--format", "csv", "--max-dim", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "dim,betti,torsion\n0,0,\n1,0,\n");
}
