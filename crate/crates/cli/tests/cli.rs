use std::process::{Command, Output};

use rug::Float;
use serde_json::Value;
use zetafam_cli::truncate_decimal;
use zetafam_core::lambert::{zeta_ref, PrecisionCtx};

fn zetafam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetafam"))
        .args(args)
        .env_remove("ZETA_DEFAULT_DIGITS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    let o = zetafam(&v);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn seq_prints_the_integer() {
    let o = zetafam(&["seq", "a", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "119");
}

#[test]
fn k1_suite_passes_at_80_digits() {
    let v = json(&["verify", "--suite", "k1", "--digits", "80"]);
    assert_eq!(v["passed"], 6);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["schema"], 1);
}

#[test]
fn compute_matches_the_eta_reference() {
    for (k, d) in [(3, 60), (5, 60), (7, 40), (9, 80), (11, 30)] {
        let o = zetafam(&["compute", "--k", &k.to_string(), "--digits", &d.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        let c = PrecisionCtx::new(d + 20).unwrap();
        let r: Float = zeta_ref(k, &c).unwrap();
        assert_eq!(stdout(&o), truncate_decimal(&r, d), "k={k}");
    }
}

#[test]
fn every_family_gives_the_same_digits() {
    let want = stdout(&zetafam(&["compute", "--k", "5", "--digits", "40"]));
    for f in ["A", "B", "C", "D", "auto"] {
        let o = zetafam(&["compute", "--k", "5", "--digits", "40", "--family", f]);
        assert_eq!(stdout(&o), want, "{f}");
    }
}

#[test]
fn more_digits_extend_the_prefix() {
    let short = stdout(&zetafam(&["compute", "--k", "13", "--digits", "50"]));
    let long = stdout(&zetafam(&["compute", "--k", "13", "--digits", "70"]));
    assert_eq!(long.len(), short.len() + 20);
    assert!(long.starts_with(&short));
}

#[test]
fn output_is_deterministic() {
    let a = zetafam(&["compute", "--k", "9", "--digits", "45"]);
    let b = zetafam(&["compute", "--k", "9", "--digits", "45"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_sets_the_default_precision() {
    let o = Command::new(env!("CARGO_BIN_EXE_zetafam"))
        .args(["compute", "--k", "3"])
        .env("ZETA_DEFAULT_DIGITS", "25")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1.2020569031595942853997381");
    let plain = stdout(&zetafam(&["compute", "--k", "3"]));
    assert_eq!(plain.len(), 52);
    let o = Command::new(env!("CARGO_BIN_EXE_zetafam"))
        .args(["compute", "--k", "3"])
        .env("ZETA_DEFAULT_DIGITS", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["compute", "--k", "4"],
        vec!["compute", "--k", "1"],
        vec!["compute", "--k", "7", "--family", "D"],
        vec!["compute", "--k", "5", "--family", "R"],
        vec!["compute", "--k", "5", "--digits", "9"],
        vec!["seq", "nope", "2"],
        vec!["coeffs", "--family", "Z", "--k", "3"],
        vec!["bench", "--k", "6"],
        vec!["frobnicate"],
    ] {
        let o = zetafam(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(zetafam(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_reports_have_the_common_shape() {
    let v = json(&["compute", "--k", "7", "--digits", "20"]);
    assert_eq!(v["command"][1], "compute");
    assert_eq!(v["results"]["method"], "R");
    assert_eq!(v["results"]["value"], "1.00834927738192282683");
    assert!(v["timings_ms"]["compute"].is_number());

    let v = json(&["coeffs", "--family", "A", "--k", "3"]);
    assert_eq!(v["results"]["pi_coeff"], "29/1980");

    let v = json(&["bench", "--k", "5", "--digits", "30", "--reps", "1"]);
    let rows = v["results"]["rows"].as_array().unwrap();
    let picked: Vec<&str> = rows
        .iter()
        .filter(|r| r["preferred"] == true)
        .map(|r| r["method"].as_str().unwrap())
        .collect();
    assert_eq!(picked, ["D"]);
    let base = rows.iter().find(|r| r["method"] == "base").unwrap();
    assert_eq!(base["predicted_cost"], "3/2");
}

#[test]
fn bench_prefers_ramanujan_for_4n_minus_1() {
    let v = json(&["bench", "--k", "7,11", "--digits", "30", "--reps", "1"]);
    for r in v["results"]["rows"].as_array().unwrap() {
        assert_eq!(r["preferred"] == true, r["method"] == "R", "{r}");
    }
}

#[test]
fn export_writes_a_loadable_file() {
    let dir = std::env::temp_dir().join(format!("zetafam-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.json");
    let o = zetafam(&["export", "--path", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 49);
    let o = zetafam(&["export", "--path", dir.join("missing/x.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn modular_suite_passes() {
    let v = json(&["verify", "--suite", "modular", "--digits", "30"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"], 111);
}
