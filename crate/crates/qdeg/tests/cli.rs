use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdeg")).args(args).output().expect("run qdeg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

#[test]
fn expand_to_schur_csv() {
    let o = qdeg(&["expand", "--P", "3,1", "--basis", "s", "--csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "shape,coefficient\n\"3,1\",1\n\"2,2\",1\n\"2,1,1\",1\n");
}

#[test]
fn expand_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s31.txt");
    let o = qdeg(&["expand", "--s", "3,1", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    assert_eq!(fs::read_to_string(out).unwrap().trim(), "s(3,1) = F{1} + F{2} + F{3}");
}

#[test]
fn product_csv() {
    let o = qdeg(&["product", "2", "2", "--csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "gamma,delta,epsilon,coefficient\n2,2,4,1\n2,2,\"3,1\",2\n");
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let o = qdeg(&["graph", "--sst", "3,1", "--queer", "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("vertices=8 edges=10"));
    let text = fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches(" -- ").count(), 10);
    assert_eq!(text.lines().filter(|l| l.contains("[label=") && !l.contains(" -- ")).count(), 8);
}

#[test]
fn json_graph_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("g.json");
    assert!(qdeg(&["graph", "--sst", "3,2", "--queer", "--json", json.to_str().unwrap()]).status.success());
    let o = qdeg(&["verify", "--file", json.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict: PASS"));
}

#[test]
fn verify_rejects_the_bad_pairing() {
    let o = qdeg(&["verify", "--file", &fixture("rejected-31.json")]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("verdict: FAIL"));
    assert!(s.contains("[queer (i), i=2]") && s.contains("2P(2,1)"), "{s}");
}

#[test]
fn verify_negative_files() {
    let cases = [
        ("fixed-point.json", "fixed-point-free"),
        ("cover-classes.json", "malformed"),
        ("cover-lift.json", "needs 3 edges"),
    ];
    for (file, cue) in cases {
        let o = qdeg(&["verify", "--file", &fixture(file)]);
        assert_eq!(o.status.code(), Some(1), "{file}");
        assert!(stdout(&o).contains(cue), "{file}: {}", stdout(&o));
    }
    assert!(qdeg(&["verify", "--file", &fixture("union-31.json")]).status.success());
}

#[test]
fn size_guard() {
    let o = qdeg(&["tableaux", "--sst", "13"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--allow-large"));
    assert!(qdeg(&["--allow-large", "expand", "--P", "13"]).status.success());
}

#[test]
fn tableaux_json() {
    let o = qdeg(&["tableaux", "--sst", "2,1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 2);
    assert_eq!(list[0]["shape"], serde_json::json!([2, 1]));
}

#[test]
fn search_unique_finds_one_pairing() {
    let o = qdeg(&["search-unique", "--P", "3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("1 candidate(s)"));
    assert!(s.contains("123 -- 213") && s.contains("312 -- 321"));
}

#[test]
fn repro_single_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    let o = qdeg(&["repro", "--only", "11", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(out).unwrap();
    assert!(text.starts_with("[PASS] 11"), "{text}");
}
