use std::path::PathBuf;
use std::process::{Command, Output};

fn fsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

/// Rows of a CSV without quoting, as maps from header to field.
fn rows(text: &str) -> Vec<Vec<(String, String)>> {
    let mut lines = text.lines();
    let header: Vec<String> = lines.next().unwrap().split(',').map(String::from).collect();
    lines
        .map(|l| header.iter().cloned().zip(l.split(',').map(String::from)).collect())
        .collect()
}

fn field<'a>(row: &'a [(String, String)], key: &str) -> &'a str {
    &row.iter().find(|(k, _)| k == key).unwrap().1
}

fn num(row: &[(String, String)], key: &str) -> f64 {
    field(row, key).parse().unwrap()
}

#[test]
fn symbols_pass_for_dimensions_one_to_eight() {
    let out = fsq(&["verify", "symbols", "--n", "1..8"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["pass"], true);
    let cases = r["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 16);
    for c in cases {
        assert!(c["residual"].as_f64().unwrap() < 1e-12);
    }
}

#[test]
fn dirac_passes_in_dimension_two() {
    let out = fsq(&["verify", "dirac", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let out = fsq(&["verify", "all", "--tol-scale", "1e-30", "--points", "1", "--n", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["suite"], "all");
    assert_eq!(r["pass"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fsq(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(fsq(&["verify", "forms", "--n", "0"]).status.code(), Some(2));
    assert_eq!(fsq(&["verify", "forms", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(fsq(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fsq(&["dump", "Sinv", "--n", "3", "--s", "1,2"]).status.code(), Some(2));
}

#[test]
fn report_schema_and_determinism() {
    let a = fsq(&["verify", "forms", "--n", "2", "--points", "50", "--seed", "7"]);
    let b = fsq(&["verify", "forms", "--n", "2", "--points", "50", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let r = report(&a);
    for key in ["suite", "version", "config", "cases", "pass"] {
        assert!(r.get(key).is_some(), "{key}");
    }
    assert_eq!(r["config"]["seed"], 7);
    for key in ["name", "n", "point", "residual", "tol", "pass"] {
        assert!(r["cases"][0].get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_writes_csv_to_a_file() {
    let path: PathBuf = std::env::temp_dir().join(format!("fsq-cli-{}.csv", std::process::id()));
    let out = fsq(&["verify", "constants", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("suite,name,n,point,residual,tol,pass"));
    assert!(text.lines().count() > 8);
}

#[test]
fn dump_sinv_has_one_row_per_grid_point() {
    let out = fsq(&["dump", "Sinv", "--n", "3", "--s", "2,0,0,0", "--grid-line", "x0", "--points", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n,side,form,s0,s1,s2,s3,x0,x1,x2,x3,blade,re,im"));
    let rows = rows(&text);
    assert_eq!(rows.len(), 11);
    for r in &rows {
        // real s and x: S^-1 = 1/(s - x)
        assert!((num(r, "re") - 1.0 / (2.0 - num(r, "x0"))).abs() < 1e-14);
    }
}

#[test]
fn dump_fn_in_dimension_two_is_imaginary() {
    let out = fsq(&["dump", "Fn", "--n", "2", "--points", "5"]);
    assert_eq!(out.status.code(), Some(0));
    for r in rows(&stdout(&out)) {
        // γ₂ = iπ/2 and k_{3/2}(2, x₀) = (2 - x₀)^{-2}
        let x0 = num(&r, "x0");
        assert_eq!(num(&r, "re"), 0.0);
        let expect = std::f64::consts::FRAC_PI_2 / (2.0 - x0).powi(2);
        assert!((num(&r, "im") - expect).abs() < 1e-14 * expect);
    }
}

#[test]
fn klambda_at_one_matches_sinv() {
    let args = ["--n", "3", "--s", "1.5,0.2,-0.3,0.4", "--x", "0,0.1,0.2,0", "--grid-line", "x2", "--side", "both"];
    let k = fsq(&[&["dump", "klambda", "--lambda", "1"], &args[..]].concat());
    let s = fsq(&[&["dump", "Sinv"], &args[..]].concat());
    let (k, s) = (rows(&stdout(&k)), rows(&stdout(&s)));
    assert_eq!(k.len(), s.len());
    for (a, b) in k.iter().zip(&s) {
        assert_eq!(field(a, "blade"), field(b, "blade"));
        assert!((num(a, "re") - num(b, "re")).abs() < 1e-14);
    }
}

#[test]
fn dump_reports_singular_rows_and_continues() {
    let out = fsq(&["dump", "Sinv", "--n", "2", "--s", "0.5,0,0", "--points", "3", "--range", "0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = rows(&stdout(&out));
    assert!(field(&rows[1], "blade").starts_with("ERR:"));
    assert_eq!(rows.len(), 3);
}

#[test]
fn fsq_map_square_in_dimension_three() {
    let out = fsq(&["fsq-map", "z^2", "--n", "3", "--points", "5", "--side", "both"]);
    assert_eq!(out.status.code(), Some(0));
    for r in rows(&stdout(&out)) {
        if field(&r, "blade") == "1" {
            assert!((num(&r, "re") + 4.0).abs() < 1e-8);
        } else {
            assert!(num(&r, "re").abs() < 1e-8);
        }
    }
}

#[test]
fn fsq_map_cube_in_dimension_three() {
    let out = fsq(&["fsq-map", "z^3", "--n", "3", "--x", "0.1,0,0.2,0", "--grid-line", "x1", "--points", "5"]);
    assert_eq!(out.status.code(), Some(0));
    for r in rows(&stdout(&out)) {
        let expect = match field(&r, "blade") {
            "1" => -12.0 * num(&r, "x0"),
            "e1" => -4.0 * num(&r, "x1"),
            "e2" => -4.0 * num(&r, "x2"),
            "e3" => -4.0 * num(&r, "x3"),
            _ => 0.0,
        };
        assert!((num(&r, "re") - expect).abs() < 1e-8);
    }
}

#[test]
fn fsq_map_output_is_monogenic_in_dimension_two() {
    let out = fsq(&["fsq-map", "z^2", "--n", "2", "--points", "5", "--side", "both", "--range", "-0.4,0.4"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = rows(&stdout(&out));
    assert!(!rows.is_empty());
    for r in rows {
        assert!(num(&r, "dirac_residual") < 1e-5);
    }
}

#[test]
fn fsq_map_json_and_point_errors() {
    let out = fsq(&["fsq-map", "exp", "--n", "2", "--points", "3", "--range", "0,3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let samples = doc["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 3);
    assert!(samples[2]["value"].get("Err").is_some());
}
