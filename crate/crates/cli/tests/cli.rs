use std::process::{Command, Output};

fn smobius(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smobius"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = smobius(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    smobius(args).status.code().expect("exited normally")
}

fn mu_column(csv: &str) -> Vec<i64> {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,mu,method"));
    lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn compute_examples() {
    assert_eq!(
        stdout(&["compute", "--gens", "2,3", "--x", "5"]),
        "x=5 mu=1 method=deddens\n"
    );
    assert_eq!(
        stdout(&["compute", "--arith", "22,5,2", "--x", "54", "--method", "even"]),
        "x=54 mu=2 method=even rep=[1,0,1]\n"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "compute", "--gens", "3,4,5", "--x", "-1", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v[0]["mu"], 0);
}

#[test]
fn compute_methods_agree() {
    for method in ["auto", "chains", "recursive", "arith", "even"] {
        let out = stdout(&[
            "compute", "--gens", "22,27,32", "--x", "54", "--method", method, "--format", "csv",
        ]);
        let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(row[..2], ["54", "2"], "method {method}");
    }
}

#[test]
fn range_examples() {
    let csv = stdout(&[
        "range", "--gens", "2,3", "--from", "0", "--to", "6", "--format", "csv",
    ]);
    assert_eq!(mu_column(&csv), vec![1, 0, -1, -1, 0, 1, 1]);
    assert!(!csv.contains('\r'));
    let csv = stdout(&["range", "--arith", "3,1,2", "--from", "0", "--to", "8"]);
    assert_eq!(mu_column(&csv), vec![1, 0, 0, -1, -1, -1, 0, 1, 2]);
    let csv = stdout(&["range", "--gens", "3,4,5", "--from", "0", "--to", "0"]);
    assert_eq!(csv, "x,mu,method\n0,1,arith\n");
}

#[test]
fn csv_and_json_agree() {
    let args = [
        "range", "--gens", "22,27,32", "--from", "-30", "--to", "700",
    ];
    let csv = stdout(&[&args[..], &["--format", "csv"]].concat());
    let json: Vec<serde_json::Value> =
        serde_json::from_str(&stdout(&[&args[..], &["--format", "json"]].concat())).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), json.len());
    for (row, rec) in rows.iter().zip(&json) {
        let expected = format!(
            "{},{},{}",
            rec["x"],
            rec["mu"],
            rec["method"].as_str().unwrap()
        );
        assert_eq!(*row, expected);
    }
}

#[test]
fn output_is_deterministic_across_jobs() {
    let base = [
        "range",
        "--gens",
        "6,7,8,9",
        "--from",
        "-5",
        "--to",
        "400",
        "--method",
        "recursive",
    ];
    let one = stdout(&[&base[..], &["--jobs", "1"]].concat());
    assert_eq!(one, stdout(&[&base[..], &["--jobs", "1"]].concat()));
    assert_eq!(one, stdout(&[&base[..], &["--jobs", "4"]].concat()));
    let t1 = stdout(&["table", "--q", "11", "--d", "5", "--format", "csv"]);
    assert_eq!(
        t1,
        stdout(&["table", "--q", "11", "--d", "5", "--format", "csv", "--jobs", "3"])
    );
}

#[test]
fn table_examples() {
    let csv = stdout(&[
        "table", "--q", "2", "--d", "1", "--rows", "2", "--format", "csv",
    ]);
    assert_eq!(csv, "x0,0,1\n0,1,-1\n1,-1,2\n");
    let csv = stdout(&[
        "table", "--q", "11", "--d", "5", "--rows", "3", "--format", "csv",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[1], "0,1,-1,0,0,0,0,0,0,0,0,0");
    assert_eq!(lines[2], "1,-1,2,-1,0,0,0,0,0,0,0,0");
    assert_eq!(lines[3], "2,0,-1,2,-1,0,0,0,0,0,0,0");
    let full = stdout(&["table", "--q", "11", "--d", "5", "--format", "csv"]);
    assert_eq!(full.lines().count(), 1 + 51);
    assert!(full.contains("\n27,2,-1,0,0,0,0,0,0,0,0,-1\n"));
    let text = stdout(&["table", "--q", "2", "--d", "1", "--rows", "2"]);
    assert!(text.lines().last().unwrap().ends_with("-1  2"));
}

#[test]
fn apery_examples() {
    assert_eq!(
        stdout(&["apery", "--arith", "3,1,2"]),
        "0\n4\n5\ni,element\n0,0\n1,4\n2,5\n"
    );
    assert_eq!(stdout(&["apery", "--gens", "2,3", "--mod", "2"]), "0\n3\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "apery", "--gens", "3,4,5", "--mod", "7", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 7);
    assert!(v.get("pairs").is_none());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&["table", "--q", "4", "--d", "2"]), 2);
    assert_eq!(exit_code(&["apery", "--gens", "3,4,5", "--mod", "2"]), 2);
    assert_eq!(
        exit_code(&["range", "--gens", "2,3", "--from", "5", "--to", "1"]),
        2
    );
    assert_eq!(exit_code(&["compute", "--gens", "4,6", "--x", "1"]), 2);
    assert_eq!(exit_code(&["compute", "--arith", "5,2,5", "--x", "1"]), 2);
    assert_eq!(exit_code(&["compute", "--arith", "5,2", "--x", "1"]), 2);
    assert_eq!(
        exit_code(&["compute", "--gens", "3,4,5", "--x", "1", "--method", "deddens"]),
        2
    );
    assert_eq!(
        exit_code(&["compute", "--gens", "2,3", "--x", "61", "--method", "chains"]),
        2
    );
    assert_eq!(
        exit_code(&["compute", "--gens", "2,3", "--arith", "3,1,2", "--x", "1"]),
        2
    );
    assert_eq!(exit_code(&["compute", "--x", "1"]), 2);
}

#[test]
fn overflow_exits_three() {
    assert_eq!(
        exit_code(&[
            "compute",
            "--gens",
            "3,4,5",
            "--x",
            "1000",
            "--method",
            "recursive"
        ]),
        3
    );
}

#[test]
fn check_suites() {
    let out = stdout(&["check", "--suite", "table"]);
    assert!(out.starts_with("PASS table"), "{out}");
    assert!(stdout(&["check", "--suite", "deddens"]).starts_with("PASS deddens"));
    let all = stdout(&["check", "--suite", "all", "--bound", "tiny", "--jobs", "2"]);
    assert_eq!(all.lines().count(), 9);
    assert!(all.lines().all(|l| l.starts_with("PASS ")), "{all}");
}
