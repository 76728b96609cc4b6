mod common;

use common::*;
use serde_json::json;

fn p(path: &std::path::Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn solve_exit_codes_and_schema() {
    let dir = tempfile::tempdir().unwrap();
    let outcome = schema("outcome.schema.json");

    let g = write(dir.path(), "p4.txt", &path_file(4));
    let l = write(dir.path(), "l4.json", &full_lists(4));
    let out = run(&["solve", p(&g), p(&l), "--t", "8", "--s", "2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert!(outcome.is_valid(&v));
    assert_eq!(v["status"], "COLORED");
    let colors: Vec<u64> = (0..4).map(|i| v["coloring"][i.to_string()].as_u64().unwrap()).collect();
    assert!(colors.windows(2).all(|w| w[0] != w[1]));

    let g = write(dir.path(), "k4.txt", K4);
    let out = run(&["solve", p(&g), p(&l), "--t", "8", "--s", "2"]);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert!(outcome.is_valid(&v));
    assert_eq!(v, json!({"status": "UNCOLORABLE", "explanation_k4": [0, 1, 2, 3]}));

    let g = write(dir.path(), "p8.txt", &path_file(8));
    let l = write(dir.path(), "l8.json", &full_lists(8));
    let out = run(&["solve", p(&g), p(&l), "--t", "8", "--s", "2"]);
    assert_eq!(code(&out), 2);
    let v = stdout_json(&out);
    assert!(outcome.is_valid(&v));
    assert_eq!(v["certificate"], json!({"kind": "induced_path", "path": [0, 1, 2, 3, 4, 5, 6, 7]}));
}

#[test]
fn solve_writes_out_file_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "6 4\n0 1\n1 2\n3 4\n4 5\n");
    let l = write(dir.path(), "l.json", &full_lists(6));
    let out_path = dir.path().join("out.json");
    let trace_path = dir.path().join("trace.json");
    let out = run(&[
        "solve",
        p(&g),
        p(&l),
        "--t",
        "5",
        "--s",
        "2",
        "--out",
        p(&out_path),
        "--trace",
        p(&trace_path),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["status"], "COLORED");

    let trace: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&trace_path).unwrap()).unwrap();
    assert!(schema("trace.schema.json").is_valid(&trace));
    let traces = trace.as_array().unwrap();
    assert_eq!(traces.len(), 2);
    assert_eq!(traces[1]["root"], 3);
    assert_eq!(traces[1]["layers"][0]["S"], json!([3]));
    assert_eq!(traces[1]["layers"][0]["B"], json!([4]));
    assert_eq!(traces[1]["layers"][0]["W"], json!([5]));
}

#[test]
fn input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.txt", &path_file(3));
    let partial = write(dir.path(), "partial.json", r#"{"lists": {"0": [1], "1": [2]}}"#);
    let out = run(&["solve", p(&g), p(&partial), "--t", "4", "--s", "2"]);
    assert_eq!(code(&out), 65);
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing list for vertex 2"));

    let bad = write(dir.path(), "bad.txt", "3 2\n0 1\n1 1\n");
    let l = write(dir.path(), "l.json", &full_lists(3));
    let out = run(&["solve", p(&bad), p(&l), "--t", "4", "--s", "2"]);
    assert_eq!(code(&out), 65);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let colors = write(dir.path(), "c.json", r#"{"lists": {"0": [1], "1": [4], "2": [2]}}"#);
    assert_eq!(code(&run(&["solve", p(&g), p(&colors), "--t", "4", "--s", "2"])), 65);

    let missing = dir.path().join("nope.txt");
    assert_eq!(code(&run(&["solve", p(&missing), p(&l), "--t", "4", "--s", "2"])), 66);

    assert_eq!(code(&run(&["solve", p(&g), p(&l), "--t", "0", "--s", "2"])), 64);
    assert_eq!(code(&run(&["solve", p(&g)])), 64);
    assert_eq!(code(&run(&["frobnicate"])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn dimacs_input() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k4.col", "c K4\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    let l = write(dir.path(), "l.json", &full_lists(4));
    assert_eq!(code(&run(&["solve", p(&g), p(&l), "--t", "8", "--s", "2"])), 1);
}

#[test]
fn check_reports_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", C5);
    let out = run(&["check", p(&c5), "--t", "4", "--s", "2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["induced_path"], json!([0, 1, 2, 3]));
    assert_eq!(v["k4"], serde_json::Value::Null);

    let k4 = write(dir.path(), "k4.txt", K4);
    let v = stdout_json(&run(&["check", p(&k4), "--t", "4", "--s", "2"]));
    assert_eq!(v["k4"], json!([0, 1, 2, 3]));

    let one = write(dir.path(), "one.txt", "1 0\n");
    let v = stdout_json(&run(&["check", p(&one), "--t", "2", "--s", "1"]));
    assert_eq!(v["induced_path"], serde_json::Value::Null);
    assert_eq!(v["sdk"], serde_json::Value::Null);
    assert_eq!(v["k4"], serde_json::Value::Null);

    let big = write(dir.path(), "big.txt", &path_file(25));
    let out = run(&["check", p(&big), "--t", "4", "--s", "2"]);
    assert_eq!(code(&out), 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains("limited to 24"));
}

#[test]
fn gen_outputs_and_seed_policy() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let l = dir.path().join("l.json");
    let out = run(&[
        "gen", "--kind", "random", "--n", "5", "--p", "0.5", "--seed", "42", "--lists", "random",
        "--lists-seed", "1", "--graph-out", p(&g), "--lists-out", p(&l),
    ]);
    assert_eq!(code(&out), 0);
    let golden = include_str!("../../core/tests/golden/gnp_5_0.5_42.txt");
    assert_eq!(std::fs::read_to_string(&g).unwrap(), golden);
    let lists: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&l).unwrap()).unwrap();
    assert!(schema("lists.schema.json").is_valid(&lists));
    assert_eq!(lists["lists"].as_object().unwrap().len(), 5);

    let out = run(&["gen", "--kind", "random", "--n", "5", "--p", "0.5", "--graph-out", p(&g), "--lists-out", p(&l)]);
    assert_eq!(code(&out), 64);
    let out = run(&["gen", "--kind", "path", "--n", "5", "--lists", "adversarial", "--graph-out", p(&g), "--lists-out", p(&l)]);
    assert_eq!(code(&out), 64);

    let out = run(&[
        "gen", "--kind", "promise", "--n", "10", "--t", "8", "--s", "3", "--seed", "7", "--graph-out", p(&g),
        "--lists-out", p(&l),
    ]);
    assert_eq!(code(&out), 0);
    let check = run(&["check", p(&g), "--t", "8", "--s", "3"]);
    let v = stdout_json(&check);
    assert_eq!(v["induced_path"], serde_json::Value::Null);
    assert_eq!(v["sdk"], serde_json::Value::Null);
}

#[test]
fn bench_csv() {
    let out = run(&["bench", "--family", "grid", "--sizes", "50,100", "--t", "6", "--s", "2", "--reps", "2"]);
    assert_eq!(code(&out), 0);
    let csv = String::from_utf8(out.stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("family,n,m,rep,phase,millis,|S|"));
    assert_eq!(lines.count(), 2 * 2 * 4);
    let out = run(&["bench", "--family", "promise", "--sizes", "8", "--t", "6", "--s", "2"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn oracle_agrees_on_examples() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text, n, t) in [("p4", path_file(4), 4, "8"), ("k4", K4.to_string(), 4, "8"), ("p8", path_file(8), 8, "8"), ("c5", C5.to_string(), 5, "4")] {
        let g = write(dir.path(), &format!("{name}.txt"), &text);
        let l = write(dir.path(), &format!("{name}.json"), &full_lists(n));
        let out = run(&["oracle", p(&g), p(&l), "--t", t, "--s", "2"]);
        assert_eq!(code(&out), 0, "{name}");
        assert_eq!(stdout_json(&out)["verdict"], "AGREE");
    }
}
