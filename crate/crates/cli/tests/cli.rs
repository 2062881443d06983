use std::process::{Command, Output};

use ev_core::parse_ratzeta;
use ev_lattice::persist::from_json;
use ev_lattice::{build, LatticeBox};
use serde_json::Value;

fn ev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ev"))
        .args(args)
        .output()
        .expect("run ev")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let o = ev(&["compute", "t", "-k", "0", "-1", "-1", "0"]);
    assert!(o.status.success());
    let seed = parse_ratzeta("-2*z^2*(z - 1)*(z + 1)^2*(2*z + 1) / (z + 2)^2").unwrap();
    assert_eq!(stdout(&o), format!("{seed}\n"));

    let o = ev(&["compute", "T", "-n", "0", "-k", "-2", "1", "0", "0"]);
    assert_eq!(stdout(&o).trim_end(), ev_cli::suites::T0_EXAMPLE_CANONICAL);

    let o = ev(&["compute", "Y", "-k", "2"]);
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn json_compute() {
    let o = ev(&["--format", "json", "compute", "t", "-k", "1", "-1", "0", "0"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "1");
    assert_eq!(v["k"], serde_json::json!([1, -1, 0, 0]));
}

#[test]
fn exit_codes() {
    assert_eq!(ev(&["compute", "t", "-k", "1", "0", "0", "0"]).status.code(), Some(2));
    assert_eq!(ev(&["compute", "t", "-k", "1", "0"]).status.code(), Some(2));
    assert_eq!(ev(&["compute", "nothing"]).status.code(), Some(2));
    assert_eq!(ev(&["compute", "family", "nothing", "-n", "1"]).status.code(), Some(2));
    assert_eq!(ev(&["compute", "T", "-n", "9", "-k", "0", "0", "0", "0"]).status.code(), Some(4));
    assert_eq!(ev(&["lattice", "build", "--box", "0"]).status.code(), Some(2));
    assert_eq!(
        ev(&["num", "verify", "--suite", "tz", "--tau", "0", "1.1", "--digits", "10"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_repeatable() {
    for args in [
        &["compute", "T", "-n", "2", "-k", "1", "1", "0", "0"][..],
        &["--format", "json", "lattice", "build", "--box", "1"][..],
        &["--format", "json", "num", "verify", "--suite", "span", "--tau", "0.3", "0.9", "--digits", "40"][..],
    ] {
        let a = ev(args);
        let b = ev(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn lattice_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("box1.json");
    let p = path.to_str().unwrap();
    let o = ev(&["--format", "json", "--out", p, "lattice", "build", "--box", "1"]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let loaded = from_json(&text).unwrap();
    assert_eq!(loaded, build(LatticeBox::cube(1)).unwrap());
    let again = ev(&["--format", "json", "lattice", "load", p]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn painleve_commands() {
    let o = ev(&["pvi", "verify-evi", "-l", "1", "-1", "0", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = ev(&["--format", "json", "pvi", "factor-match", "-l", "-1", "-2", "3", "-1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    let o = ev(&["pvi", "q", "-l", "0", "0", "0", "0"]);
    let q = parse_ratzeta("z*(z + 2) / (2*z + 1)").unwrap();
    assert_eq!(stdout(&o), format!("{q}\n"));
}

fn num_residual(suite: &str, digits: &str) -> f64 {
    let o = ev(&["--format", "json", "num", "verify", "--suite", suite, "--tau", "0", "1.1", "--digits", digits]);
    assert!(o.status.success(), "{suite} {digits}");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], suite);
    assert_eq!(v["digits"], digits.parse::<u64>().unwrap());
    assert_eq!(v["tau"], serde_json::json!(["0", "1.1"]));
    assert_eq!(v["pass"], true);
    v["residual"].as_f64().unwrap()
}

#[test]
fn numeric_suites_tighten_with_digits() {
    for suite in ["tz", "tep", "qd"] {
        let r60 = num_residual(suite, "60");
        let r100 = num_residual(suite, "100");
        assert!(r100 < r60, "{suite}: {r100:e} vs {r60:e}");
    }
}
