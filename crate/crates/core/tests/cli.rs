use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn cyclespec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclespec"))
        .env_remove("CYCLESPEC_LOG")
        .args(args)
        .output()
        .expect("binary runs")
}

fn payload(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "stdout must be one JSON document: {text}");
    serde_json::from_str(&text).unwrap()
}

fn write_k9(dir: &Path) -> PathBuf {
    let edges: Vec<[usize; 2]> = (0..9).flat_map(|u| (u + 1..9).map(move |v| [u, v])).collect();
    let path = dir.join("k9.json");
    std::fs::write(&path, serde_json::json!({ "n": 9, "edges": edges }).to_string()).unwrap();
    path
}

#[test]
fn iota_of_networkx_petersen() {
    let out = cyclespec(&["iota", "--input", fixture("petersen_nx.g6").to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = payload(&out);
    assert_eq!(v["value"], "5/2");
    assert_eq!(v["mode"], "exact");
}

#[test]
fn long_form_graph6_header() {
    let out = cyclespec(&["alpha", "--input", fixture("two_edges_64.g6").to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = payload(&out);
    assert_eq!(v["n"], 64);
    assert_eq!(v["value"], 62);
}

#[test]
fn recip_on_k9_passes() {
    let dir = tempfile::tempdir().unwrap();
    let k9 = write_k9(dir.path());
    let out = cyclespec(&["check", "--theorem", "recip", "--input", k9.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = payload(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["l_odd"], "248/315");
}

#[test]
fn usage_errors_exit_one() {
    let out = cyclespec(&["iota", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    let out = cyclespec(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_input_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"n\": 3,\n \"edges\": [[0,1],]}").unwrap();
    let out = cyclespec(&["spectrum", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn run_log_records_input_hash() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("runs.jsonl");
    let input = fixture("petersen_nx.g6");
    for _ in 0..2 {
        let out = Command::new(env!("CARGO_BIN_EXE_cyclespec"))
            .env("CYCLESPEC_LOG", &log)
            .args(["--seed", "11", "spectrum", "--input", input.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    let text = std::fs::read_to_string(&log).unwrap();
    let records: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 2);
    let hash = hex::encode(Sha256::digest(std::fs::read(&input).unwrap()));
    for r in &records {
        assert_eq!(r["input_hash"], hash.as_str());
        assert_eq!(r["seed"], 11);
        assert_eq!(r["status"], "pass");
        assert_eq!(r["payload"]["lengths"], serde_json::json!([5, 6, 8, 9]));
    }
    assert_eq!(records[0]["payload"], records[1]["payload"]);
}

#[test]
fn replays_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let k9 = write_k9(dir.path());
    let petersen = fixture("petersen_nx.g6");
    let commands: Vec<Vec<&str>> = vec![
        vec!["--seed", "5", "gen", "--family", "random-triangle-free", "--n", "20", "--edge-budget", "400"],
        vec!["posa", "--input", petersen.to_str().unwrap()],
        vec!["theta", "--input", petersen.to_str().unwrap(), "--k", "1"],
        vec!["check", "--theorem", "lengths", "--input", k9.to_str().unwrap(), "--sequence", "pow3"],
        vec!["bounds", "--sequence", "primes", "--n", "1000000"],
    ];
    for cmd in commands {
        let a = cyclespec(&cmd);
        let b = cyclespec(&cmd);
        assert!(a.status.success(), "{cmd:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{cmd:?}");
    }
    let s1 = payload(&cyclespec(&["--seed", "1", "gen", "--family", "random-triangle-free", "--n", "20", "--edge-budget", "400"]));
    let s2 = payload(&cyclespec(&["--seed", "2", "gen", "--family", "random-triangle-free", "--n", "20", "--edge-budget", "400"]));
    assert_ne!(s1["graph6"], s2["graph6"]);
}

#[test]
fn gen_writes_readable_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("k62.g6");
    let out = cyclespec(&["gen", "--family", "kneser", "--n", "6", "--r", "2", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = payload(&out);
    assert_eq!(v["n"], 15);
    assert_eq!(v["m"], 45);
    let iota = payload(&cyclespec(&["iota", "--input", out_path.to_str().unwrap()]));
    assert_eq!(iota["value"], "3");
}

#[test]
fn config_limits_apply() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"limits":{"spectrum_n":8}}"#).unwrap();
    let input = fixture("petersen_nx.g6");
    let v = payload(&cyclespec(&["--config", cfg.to_str().unwrap(), "spectrum", "--input", input.to_str().unwrap()]));
    assert_eq!(v["lengths"], serde_json::json!([5, 6, 8, 9]));
    std::fs::write(&cfg, r#"{"limits":{"spectrum":8}}"#).unwrap();
    let out = cyclespec(&["--config", cfg.to_str().unwrap(), "spectrum", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn forced_pipeline_and_obstruction() {
    let dir = tempfile::tempdir().unwrap();
    let wheel = dir.path().join("wheel.json");
    std::fs::write(&wheel, r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[3,4]]}"#).unwrap();
    let v = payload(&cyclespec(&["check", "--theorem", "general", "--input", wheel.to_str().unwrap(), "--k", "1", "--forced"]));
    assert_eq!(v["status"], "vacuous");
    assert!(v["pipeline"]["run_length"].as_u64().unwrap() >= 3);
    let c6 = dir.path().join("c6.json");
    std::fs::write(&c6, r#"{"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}"#).unwrap();
    let v = payload(&cyclespec(&["check", "--theorem", "long", "--input", c6.to_str().unwrap(), "--k", "1", "--forced"]));
    assert_eq!(v["pipeline"]["obstruction"], "bipartite host");
    let v = payload(&cyclespec(&["consecutive", "--input", wheel.to_str().unwrap(), "--v", "0", "--layer", "1"]));
    assert_eq!(v["lengths"], serde_json::json!([3, 4, 5]));
}

#[test]
fn help_goes_to_stdout() {
    let out = cyclespec(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("suite"));
}
