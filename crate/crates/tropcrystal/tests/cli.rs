//! The binary end to end: exit codes, output formats, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropcrystal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn dot_graph_has_one_source() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("g.json");
    let o = run(&["graph", "--family", "C", "--rank", "2", "--depth", "4", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let g: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(g["schema"], "tropcrystal.graph/1");
    let nodes = g["nodes"].as_array().unwrap();
    let sources: Vec<_> = nodes.iter().filter(|n| n["eps"].as_array().unwrap().iter().all(|e| e == 0)).collect();
    assert_eq!(sources.len(), 1);
    let mut targets: Vec<_> = g["edges"].as_array().unwrap().iter().map(|e| e["to"].as_u64().unwrap()).collect();
    targets.sort();
    targets.dedup();
    assert_eq!(targets.len() + 1, nodes.len(), "every node but the source is reached");

    let dot = stdout(&run(&["graph", "--family", "C", "--rank", "2", "--depth", "4"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), g["edges"].as_array().unwrap().len());
}

#[test]
fn depth_zero_is_a_single_node() {
    for r in ["potential", "polyhedral", "tensor"] {
        let dot = stdout(&run(&["graph", "--family", "G", "--rank", "2", "--depth", "0", "--realization", r]));
        assert_eq!(dot.matches("[label=").count(), 1, "{r}");
        assert!(!dot.contains("->"));
    }
}

#[test]
fn realizations_give_the_same_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let mut sizes = Vec::new();
    for r in ["potential", "polyhedral", "tensor"] {
        let p = dir.path().join(format!("{r}.json"));
        let o = run(&["graph", "--family", "B", "--rank", "2", "--depth", "5", "--realization", r, "--json", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let g: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
        sizes.push((g["nodes"].as_array().unwrap().len(), g["edges"].as_array().unwrap().len()));
    }
    assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{sizes:?}");
}

#[test]
fn highest_weight_component_has_the_right_size() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("b.json");
    // the 7-dimensional G2 module and the 6-dimensional B(Λ_1) of C3
    for (f, n, w, dim) in [("G", "2", "0,1", 7), ("C", "3", "1,0,0", 6), ("A", "2", "1,1", 8)] {
        let o = run(&["graph", "--family", f, "--rank", n, "--realization", "highest-weight", "--weight", w, "--depth", "30", "--json", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let g: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(g["nodes"].as_array().unwrap().len(), dim, "{f}{n} {w}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["graph", "--family", "X", "--rank", "2"][..],
        &["graph", "--family", "A", "--rank", "0"],
        &["graph", "--family", "E", "--rank", "5"],
        &["potential", "--family", "A", "--rank", "2", "--word", "12"],
        &["braid", "--family", "A", "--rank", "2", "--word", "121", "--to", "212", "--point", "1,2"],
        &["verify", "nonsense"],
        &["connect", "--family", "E", "--rank", "6"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn verify_suites_pass() {
    let o = run(&["verify", "catalog-vs-oracle", "--family", "A", "--rank", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS catalog-vs-oracle"));
    let o = run(&["verify", "ks", "--family", "G", "--rank", "2", "--depth", "5"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run(&["verify", "trails", "--family", "E", "--rank", "8"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("E8 lowest term"));
}

#[test]
fn corrupted_transition_fixture_fails_the_braid_suite() {
    let good = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../tropcrystal-core/fixtures/rank2_transitions.txt")).unwrap();
    let bad = good.replacen("num1 = c[2]*c[3]^2*c[4]\n", "num1 = c[2]*c[3]^2\n", 1);
    assert_ne!(good, bad);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.txt");
    std::fs::write(&p, bad).unwrap();
    let o = run(&["verify", "braid", "--family", "C", "--rank", "2", "--samples", "300", "--fixture", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("C2 [1, 2, 1, 2]→[2, 1, 2, 1] inverse: FAIL"), "{out}");
    assert!(out.contains("FAIL braid"));

    let good_path = dir.path().join("good.txt");
    std::fs::write(&good_path, good).unwrap();
    let o = run(&["verify", "braid", "--family", "C", "--rank", "2", "--samples", "300", "--fixture", good_path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn g2_potential_has_fourteen_terms() {
    let out = stdout(&run(&["potential", "--family", "G", "--rank", "2", "--emit", "laurent"]));
    assert!(out.contains("terms: 14"), "{out}");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["potential", "--family", "G", "--rank", "2", "--emit", "both", "--json"]))).unwrap();
    assert_eq!(v["terms"], 14);
    assert_eq!(v["partial"], false);
    let t: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["potential", "--family", "A", "--rank", "2", "--emit", "tropical"]))).unwrap();
    assert_eq!(t["tropical"], serde_json::json!([[0, 0, 1], [0, 1, -1], [1, 0, 0]]));
    // the same from the matrix model
    let o = run(&["potential", "--family", "G", "--rank", "2", "--source", "oracle", "--json"]);
    let w: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["laurent"], w["laurent"]);
}

#[test]
fn exceptional_potential_is_marked_partial() {
    let o = run(&["potential", "--family", "E", "--rank", "8", "--emit", "both"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("partial"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["potential", "--family", "F", "--rank", "4", "--json"]))).unwrap();
    assert_eq!(v["partial"], true);
    assert_eq!(v["source"], "lowest-terms-partial");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["verify", "geometric", "--family", "A", "--rank", "2", "--samples", "5", "--json"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v[0]["schema"], "tropcrystal.report/1");
    let g = ["graph", "--family", "A", "--rank", "3", "--depth", "3", "--realization", "tensor"];
    assert_eq!(stdout(&run(&g)), stdout(&run(&g)));
    // a different seed changes the samples but not the verdict
    let o = run(&["--seed", "7", "verify", "geometric", "--family", "A", "--rank", "2", "--samples", "5", "--json"]);
    assert_eq!(code(&o), 0);
    assert_ne!(stdout(&o), a);
}

#[test]
fn braid_transports_and_returns() {
    let out = stdout(&run(&["braid", "--family", "C", "--rank", "2", "--word", "1212", "--to", "2121", "--point", "1,0,-2,1"]));
    let last = out.lines().rev().nth(1).unwrap();
    let moved = last.split_whitespace().nth(1).unwrap();
    let back = stdout(&run(&["braid", "--family", "C", "--rank", "2", "--word", "2121", "--to", "1212", "--point", moved]));
    assert!(back.lines().rev().nth(1).unwrap().starts_with("1212  1,0,-2,1"), "{back}");
    // A3: two moves apart
    let o = run(&["braid", "--family", "A", "--rank", "3", "--word", "123121", "--to", "321323", "--point", "0,1,-1,2,0,3"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().next_back().unwrap().starts_with("moves: "));
}

#[test]
fn connect_reports_rank_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("out.json");
    let o = run(&["connect", "--family", "A", "--rank", "2", "--box", "2", "--pairs", "10", "--json", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["params"]["pairs"], 10);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert_eq!(checks[3]["detail"]["connected"], 10);
    // a budget too small to finish is inconclusive, not a failure
    let o = run(&["connect", "--family", "C", "--rank", "2", "--box", "2", "--pairs", "10", "--budget", "3"]);
    assert_eq!(code(&o), 3, "{}", stdout(&o));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
}
