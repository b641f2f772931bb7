//! End-to-end runs of the `iquantum` binary.

use std::process::{Command, Output};

fn iquantum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iquantum"))
        .args(args)
        .env_remove("IQUANTUM_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn passing_suite_exits_zero() {
    let o = iquantum(&["verify", "mult-odd", "--max", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("mult-odd (bound 4, varsigma generic)"));
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = iquantum(&[
        "verify",
        "chi",
        "--max",
        "3",
        "--varsigma",
        "q-inverse",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "parameters", "suite", "wall_time_s"]);
    assert_eq!(v["suite"], "chi");
    assert_eq!(v["parameters"]["bound"], 3);
    assert_eq!(v["parameters"]["varsigma"], "q-inverse");
    for c in v["checks"].as_array().unwrap() {
        assert!(c["id"].is_string() && c["params"].is_object());
        assert_eq!(c["pass"], true);
        assert!(c.get("witness").is_none());
    }
}

#[test]
fn json_to_stdout_for_all() {
    let o = iquantum(&["verify", "all", "--max", "2", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let o = iquantum(&["verify", "comult-even", "--max", "3", "--json", "-"]);
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v.as_object_mut().unwrap().remove("wall_time_s");
        v
    };
    assert_eq!(run(), run());
    let table = || stdout(&iquantum(&["table", "--family", "odd", "--max", "6"]));
    assert_eq!(table(), table());
}

#[test]
fn unknown_suite_is_an_error() {
    let o = iquantum(&["verify", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown suite `bogus`"));
}

#[test]
fn bad_bound_is_an_error() {
    assert_eq!(iquantum(&["verify", "chi", "--max", "0"]).status.code(), Some(2));
}

#[test]
fn ceiling_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_iquantum"))
        .args(["verify", "mult-even", "--max", "5"])
        .env("IQUANTUM_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bound 5 exceeds the resource ceiling 4"));
    assert_eq!(
        iquantum(&["table", "--family", "ev", "--max", "25"]).status.code(),
        Some(2)
    );
}

#[test]
fn csv_table() {
    let o = iquantum(&["table", "--family", "ev", "--max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,m,n,l,coefficient,integral,positive"));
    assert!(text.lines().any(|l| l == "ev,2,1,1,v + q^2*v,true,true"));
    assert!(text.lines().any(|l| l == "ev,1,1,0,q^-1 + q,true,true"));
    let trivial = stdout(&iquantum(&["table", "--family", "odd", "--max", "0"]));
    assert_eq!(
        trivial,
        "family,m,n,l,coefficient,integral,positive\nodd,0,0,0,1,true,true\n"
    );
}

#[test]
fn json_table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = iquantum(&[
        "table",
        "--family",
        "ev",
        "--max",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["family"], "ev");
    let rows = v["rows"].as_array().unwrap();
    assert!(rows
        .iter()
        .any(|r| r["m"] == 1 && r["n"] == 1 && r["l"] == 0 && r["coefficient"] == "q^-1 + q"));
}

#[test]
fn expansions() {
    let o = iquantum(&["expand", "idp", "--family", "ev", "--n", "0", "--basis", "pbw"]);
    assert_eq!(stdout(&o), "1\n");
    let comult = |form: &str| {
        stdout(&iquantum(&[
            "expand", "comult", "--family", "odd", "--n", "3", "--form", form,
        ]))
    };
    let theorem = comult("theorem");
    assert!(theorem.contains('⊗'));
    assert_eq!(theorem, comult("direct"));
    assert_eq!(theorem, comult("fhy"));
    assert_eq!(
        stdout(&iquantum(&["expand", "comult", "--family", "ev", "--n", "0"])),
        "1⊗1\n"
    );
}

#[test]
fn negative_degree_is_an_error() {
    let o = iquantum(&["expand", "idp", "--family", "odd", "--n=-2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("negative input -2"));
}
