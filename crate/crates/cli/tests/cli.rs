use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use ga_core::graph::{parse_graph6, Graph};
use ga_core::indices;
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ga-toolkit"))
        .args(args)
        .env_remove("GA_TOOLKIT_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn write_file(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_path_from_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p3.txt", "# P3\nn 3\n0 1\n1 2\n");
    let out = run(&["compute", "--input", &file, "--format", "edgelist"], "");
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let records = json_lines(&out);
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert!((r["ga1"].as_f64().unwrap() - 1.885618).abs() < 1e-6);
    assert_eq!(r["m1"].as_f64(), Some(6.0));
    assert_eq!(r["m2"].as_f64(), Some(4.0));
    assert_eq!(r["n"].as_u64(), Some(3));
    assert_eq!(r["delta"].as_u64(), Some(1));
    assert_eq!(r["Delta"].as_u64(), Some(2));
    assert_eq!(r["is_regular"].as_bool(), Some(false));
    assert_eq!(r["r_alpha"].as_array().unwrap().len(), 6);
    assert!(stderr(&out).is_empty());
}

#[test]
fn compute_complete_graph_is_exact() {
    let out = run(&["compute"], "C~\n");
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["ga1"].as_f64(), Some(6.0));
}

#[test]
fn compute_output_round_trips_bit_for_bit() {
    let input = "I?h]@eOWG\nDQc\nE?~o\n";
    let out = run(&["compute", "--alphas", "-1.5,0.25,3"], input);
    assert_eq!(code(&out), 0);
    for (line, record) in input.lines().zip(json_lines(&out)) {
        let g: Graph = parse_graph6(line).unwrap();
        assert_eq!(
            record["ga1"].as_f64().unwrap().to_bits(),
            indices::ga1(&g).unwrap().to_bits()
        );
        assert_eq!(
            record["randic"].as_f64().unwrap().to_bits(),
            indices::randic(&g).to_bits()
        );
        assert_eq!(
            record["log_nk_star"].as_f64().unwrap().to_bits(),
            indices::log_nk_star(&g).to_bits()
        );
        for (entry, alpha) in record["r_alpha"]
            .as_array()
            .unwrap()
            .iter()
            .zip([-1.5, 0.25, 3.0])
        {
            let want = indices::general_randic(&g, alpha).unwrap();
            assert_eq!(entry["value"].as_f64().unwrap().to_bits(), want.to_bits());
        }
    }
}

#[test]
fn compute_csv_has_header_and_rows() {
    let out = run(&["compute", "--output", "csv"], "Bw\nC~\n");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("index,graph6,n,m,delta,Delta,is_regular,ga1"));
    assert!(lines[2].starts_with("2,C~,4,6,3,3,true,6,"));
}

#[test]
fn malformed_input_exits_2_with_line_number() {
    let out = run(&["compute", "--format", "edgelist"], "n 3\n0 1\n1 x\n");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());

    let out = run(&["compute"], "Bw\nFw\n");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let out = run(&["compute", "--input", "/nonexistent/graphs.g6"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn empty_edge_set_exits_3() {
    let out = run(&["compute"], "B?\n");
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("empty edge set"));
}

#[test]
fn check_complete_graph_is_tight() {
    let out = run(&["check"], "D~{\n");
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let record = &json_lines(&out)[0];
    let checks = record["checks"].as_array().unwrap();
    // 8 fixed families, 4 per alpha, t-mzz for the 3 positive alphas
    assert_eq!(checks.len(), 8 + 6 * 4 + 3);
    for c in checks {
        assert_eq!(c["holds"], Value::Bool(true));
        if c["expected_equality"] == "REGULAR" {
            assert_eq!(c["observed_equality_matches"], Value::Bool(true));
            assert!(c["tight_lower"] == Value::Bool(true) || c["lower"].is_null());
            assert!(c["tight_upper"] == Value::Bool(true) || c["upper"].is_null());
        }
    }
    assert!(record["dominance"]
        .as_array()
        .unwrap()
        .iter()
        .all(|d| d["holds"] == Value::Bool(true)));
}

#[test]
fn check_path_holds() {
    let out = run(&["check", "--output", "csv"], "Bg\n");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with(
        "index,graph6,theorem,alpha,side,bound,value,slack,holds,tight,in_class,status\n"
    ));
    assert!(text.lines().skip(1).all(|l| l.contains(",true,")));
}

#[test]
fn check_disconnected_exits_3() {
    let out = run(&["check"], "C`\n");
    assert_eq!(code(&out), 3);
    assert!(
        stderr(&out).contains("additive over components"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn sweep_exhaustive_six() {
    let out = run(&["sweep", "--n-max", "6"], "");
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report = &json_lines(&out)[0];
    assert_eq!(report["graph_count"].as_u64(), Some(142));
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn sweep_cap_exceeded_exits_2() {
    let out = run(&["sweep", "--n-max", "9"], "");
    assert_eq!(code(&out), 2);
    assert!(!stderr(&out).is_empty());
}

#[test]
fn sweep_random_is_deterministic_across_thread_counts() {
    let args = [
        "sweep", "--random", "--n", "20", "--p", "0.3", "--count", "40", "--seed", "9",
    ];
    let a = run(&args, "");
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ga-toolkit"));
    let b = cmd
        .args(args)
        .env("GA_TOOLKIT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_csv_rows() {
    let out = run(
        &["sweep", "--n-max", "3", "--output", "csv", "--alphas=1"],
        "",
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // 3 graphs; per graph: eq1 1 side, 6 two-sided, t-r 1, then t-z1, t-lb55, t-mzz
    // two-sided and t-nk3, cor-nk3 one-sided
    let per_graph = 1 + 6 * 2 + 1 + 3 * 2 + 2;
    assert_eq!(text.lines().count(), 1 + 3 * per_graph);
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        &["--alphas", "-1,0", "sweep", "--n-max", "4"][..],
        &["sweep", "--n-max", "4", "--tolerance", "-1"],
        &["sweep"],
        &["sweep", "--random", "--n", "5"],
        &["search", "--theorem", "t-z1", "--side", "lower", "--n", "5"],
        &["search", "--theorem", "t-r", "--side", "upper", "--n", "5"],
        &[
            "search",
            "--theorem",
            "bogus",
            "--side",
            "lower",
            "--n",
            "5",
        ],
    ] {
        let out = run(args, "");
        assert_eq!(code(&out), 2, "{args:?}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_ga-toolkit"))
        .args(["sweep", "--n-max", "3"])
        .env("GA_TOOLKIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn search_finds_equality_case_for_nk3() {
    let out = run(
        &[
            "search",
            "--theorem",
            "t-nk3",
            "--alpha",
            "1",
            "--side",
            "lower",
            "--n",
            "5",
            "--iterations",
            "2000",
            "--seed",
            "3",
        ],
        "",
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let record = &json_lines(&out)[0];
    let best = &record["best"];
    assert!(best["slack"].as_f64().unwrap().abs() <= 1e-9);
    let g = parse_graph6(best["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(g.n(), 5);
    assert!(g.degree_stats().edge_product_constant);
}

#[test]
fn search_csv_and_negative_alpha() {
    let out = run(
        &[
            "search",
            "--theorem",
            "t-z1",
            "--alpha",
            "-2",
            "--side",
            "upper",
            "--n",
            "6",
            "--iterations",
            "200",
            "--output",
            "csv",
        ],
        "",
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("t-z1,-2,upper,6,0,"));
}
