use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use additive_spanner::generate::path;
use additive_spanner::report::BENCH_COLUMNS;
use additive_spanner::{generate_gnm, Graph};

fn spanner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spanner")).args(args).output().unwrap()
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, g.to_edge_list_string()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_path_in_mode_4() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(dir.path(), "p5.txt", &path(5));
    let out = dir.path().join("h.txt");
    let report = dir.path().join("r.json");
    let o = spanner(&["build", "--input", s(&input), "--output", s(&out), "--report", s(&report)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let h: Graph = std::fs::read_to_string(&out).unwrap().parse().unwrap();
    assert_eq!(h.edge_count(), 4);

    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["result"]["additive_stretch"], 4);
    assert_eq!(json["verification"]["passed"], true);
    assert_eq!(json["verification"]["report"]["max_excess"], 0);

    let o = spanner(&["verify", "--input", s(&input), "--spanner", s(&out), "--mode", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn build_mode_5_without_shortcut() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate_gnm(100, 600, 1).unwrap();
    let input = write_graph(dir.path(), "g.txt", &g);
    let report = dir.path().join("r.json");
    let o = spanner(&["build", "--input", s(&input), "--mode", "5", "--no-shortcut", "--report", s(&report)]);
    assert_eq!(o.status.code(), Some(0));
    let h: Graph = String::from_utf8(o.stdout).unwrap().parse().unwrap();
    assert!(h.edge_count() <= g.edge_count());
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(json["result"]["shortcut_fired"], false);
    assert_eq!(json["verification"]["k"], 5);
    assert_eq!(json["verification"]["passed"], true);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [("bad.txt", "0 1\n1 x\n"), ("range.txt", "p 3 1\n0 5\n"), ("three.txt", "0 1 2\n")] {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        let o = spanner(&["build", "--input", s(&p)]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(!o.stderr.is_empty());
    }
    let o = spanner(&["build", "--input", s(&dir.path().join("missing.txt"))]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(spanner(&["build"]).status.code(), Some(2));
    assert_eq!(spanner(&["gen", "--n", "4", "--m", "7"]).status.code(), Some(2));
    let p = write_graph(dir.path(), "ok.txt", &path(3));
    assert_eq!(spanner(&["build", "--input", s(&p), "--f-threshold", "0"]).status.code(), Some(2));
}

#[test]
fn gen_is_byte_stable() {
    let a = spanner(&["gen", "--n", "100", "--m", "300", "--seed", "42"]);
    let b = spanner(&["gen", "--n", "100", "--m", "300", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let g: Graph = String::from_utf8(a.stdout.clone()).unwrap().parse().unwrap();
    assert_eq!(g, generate_gnm(100, 300, 42).unwrap());
    let c = spanner(&["gen", "--n", "100", "--m", "300", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout);
}

fn bench_rows(args: &[&str]) -> Vec<Vec<String>> {
    let o = spanner(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), BENCH_COLUMNS);
    r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect()
}

#[test]
fn bench_ladders() {
    let rows = bench_rows(&["bench", "--sizes", "128,256,512", "--verify"]);
    assert_eq!(rows.len(), 3);
    for (row, n) in rows.iter().zip(["128", "256", "512"]) {
        assert_eq!(row[0], n);
        assert_eq!(row[2], "4");
        assert_eq!(row[10], "true");
        let spanner_edges: usize = row[3].parse().unwrap();
        let m: usize = row[1].parse().unwrap();
        assert!(spanner_edges <= m);
    }
    let rows = bench_rows(&["bench", "--sizes", "64", "--mode", "5"]);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][10], "skipped");
    assert!(bench_rows(&["bench", "--sizes"]).is_empty());
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "c6.txt", &additive_spanner::generate::cycle(6));
    let h = dir.path().join("h.txt");
    std::fs::write(&h, "p 6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    assert_eq!(spanner(&["verify", "--input", s(&g), "--spanner", s(&h), "--mode", "4"]).status.code(), Some(0));
    let o = spanner(&["verify", "--input", s(&g), "--spanner", s(&h), "--mode", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["report"]["max_excess"], 4);

    std::fs::write(&h, "p 6 1\n0 3\n").unwrap();
    let o = spanner(&["verify", "--input", s(&g), "--spanner", s(&h)]);
    assert_eq!(o.status.code(), Some(2), "a non-subgraph is an input error");
}

#[test]
fn set_size_violation_exits_3() {
    // A perfect matching with every vertex heavy needs one dominator per
    // edge: 500 of them, well above the bound for n = 1000.
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::from_edges(1000, (0..500).map(|i| (2 * i, 2 * i + 1))).unwrap();
    let input = write_graph(dir.path(), "matching.txt", &g);
    let o = spanner(&[
        "build", "--input", s(&input), "--mode", "5", "--no-shortcut",
        "--heavy-threshold", "1", "--elim-threshold", "1e9",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("S1"));
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(dir.path(), "g.txt", &generate_gnm(200, 4000, 5).unwrap());
    let run = |t: &str| spanner(&["--threads", t, "build", "--input", s(&input), "--no-verify"]).stdout;
    assert_eq!(run("1"), run("8"));
}
