use std::process::{Command, Output};

use pimenov_core::{from_json, parse};

fn pimenov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pimenov")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn invert_prints_the_inverse() {
    let o = pimenov(&["invert", "-n", "3", "2+i1-i2*i3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/2 - 1/4*i1 + 1/4*i2*i3 - 1/4*i1*i2*i3\n");
}

#[test]
fn invert_rejects_zero_real_part() {
    let o = pimenov(&["invert", "-n", "3", "i1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("not invertible: real part is zero"));
}

#[test]
fn divide_reports_solutions_and_failures() {
    let o = pimenov(&["divide", "-n", "2", "i2", "i2+i1*i2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("particular: 1 + i1\nkernel: [i2, i1*i2]\n"), "{out}");

    let o = pimenov(&["divide", "-n", "2", "i1*i2", "i1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "no solution\n");

    let o = pimenov(&["divide", "-n", "2", "i1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn prime_verdicts() {
    let o = pimenov(&["prime", "-n", "4", "i1*i2+i1*i3+i2*i4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "prime (path pattern)\n");

    let o = pimenov(&["prime", "-n", "6", "i1*i2+i3*i4+i5*i6"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("decided only up to 4"));

    let o = pimenov(&["prime", "-n", "4", "i1*i2+i1*i3+2*i2*i4+i3*i4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("decomposable-over-extension"));
}

#[test]
fn factor_prints_field() {
    let o = pimenov(&["factor", "-n", "4", "i1*i2+i3*i4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "(i1 + 1/2*i2 + i3 - 1/2*i4) * (i1 + 1/2*i2 - i3 + 1/2*i4)\nfield: rational\n"
    );
    let o = pimenov(&["factor", "-n", "4", "i1*i2+i1*i3+2*i2*i4+i3*i4"]);
    assert!(stdout(&o).ends_with("field: sqrt(2)\n"));
}

#[test]
fn parse_errors_point_at_the_problem() {
    let o = pimenov(&["normalize", "-n", "4", "i1 + i5"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("position 6"), "{err}");
    assert!(err.contains("\n  i1 + i5\n        ^"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pimenov(&["invert", "i1"]).status.code(), Some(2));
    assert_eq!(pimenov(&["invert", "-n", "0", "1"]).status.code(), Some(2));
    assert_eq!(pimenov(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pimenov(&["normalize", "-n", "2", "(1+1*sqrt(2))*i1"]).status.code(), Some(2));
}

#[test]
fn json_output_round_trips() {
    for (args, n) in [
        (&["invert", "-n", "3", "2+i1-i2*i3"][..], 3),
        (&["normalize", "-n", "4", "--", "-1/2*i4 + i1*i2 + 3"][..], 4),
        (&["mul", "-n", "3", "1+i1", "i2-i3"][..], 3),
    ] {
        let text = pimenov(args);
        let json_args = [&args[..1], &["--output", "json"][..], &args[1..]].concat();
        let json = pimenov(&json_args);
        assert_eq!(json.status.code(), Some(0), "{json_args:?}");
        let x = from_json(stdout(&json).trim()).unwrap();
        assert_eq!(x, parse(stdout(&text).trim(), n).unwrap());
    }
    let o = pimenov(&["factor", "-n", "4", "--output", "json", "i1*i2+i1*i3+2*i2*i4+i3*i4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["field"], "sqrt(2)");
    assert_eq!(v["verified"], true);
    let factors: Vec<_> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| pimenov_core::expr::from_json_value(f.clone()).unwrap())
        .collect();
    let product = factors[0].mul(&factors[1]).unwrap();
    assert_eq!(product, parse("i1*i2+i1*i3+2*i2*i4+i3*i4", 4).unwrap());
}

#[test]
fn batch_input_from_file() {
    let dir = std::env::temp_dir().join(format!("pimenov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("exprs.txt");
    std::fs::write(&path, "1 + i1\n\ni1\n2\n").unwrap();
    let o = pimenov(&["invert", "-n", "2", "--file", path.to_str().unwrap()]);
    // the middle expression fails, the others still print
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "1 - i1\n1/2\n");
    assert!(stderr(&o).contains("not invertible"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["factor", "-n", "4", "--output", "json", "i1*i2*i3 + i2*i3*i4 + 3*i1*i2*i3*i4"];
    let a = pimenov(&args);
    let b = pimenov(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn classifier_check_and_random() {
    let o = pimenov(&["check", "--grid=1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("instances: 63\n") && out.contains("discrepancies: 0\n"), "{out}");
    let o = pimenov(&["check", "--grid=1", "--output", "json"]);
    assert!(stdout(&o).is_empty());

    let a = pimenov(&["random", "-n", "5", "--seed", "7"]);
    assert_eq!(a.stdout, pimenov(&["random", "-n", "5", "--seed", "7"]).stdout);
    let o = pimenov(&["random", "-n", "2", "--seed", "1", "--profile", "homogeneous:2"]);
    assert!(stdout(&o).trim().ends_with("i1*i2"));
}
