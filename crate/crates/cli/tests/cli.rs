use std::path::{Path, PathBuf};
use std::process::Command;

use cartier::zoo::Example;
use cartier::{Field, Fp, Rational};
use cartier_cli::{decode, encode, parse_file, run, structure_suite, to_json, Structure};
use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cartier(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cartier").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err, false);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn jordan_value() -> Value {
    let r = cartier(&["example", "jordan"]);
    assert_eq!(r.code, 0);
    serde_json::from_str(&r.stdout).unwrap()
}

fn write_value(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p
}

fn round_trip<F: Field>(ex: Example<F>) {
    let k = ex.build().unwrap();
    let text = to_json(&encode(&Structure::Crossed(k)));
    let decoded = decode::<F>(&parse_file(&text).unwrap()).unwrap();
    assert_eq!(decoded.kind(), "crossed");
    assert_eq!(to_json(&encode(&decoded)), text, "{}", ex.name());
    assert!(structure_suite(&decoded).all_pass(), "{}", ex.name());
}

#[test]
fn zoo_outputs_round_trip() {
    round_trip(Example::<Rational>::Jordan);
    round_trip(Example::<Rational>::SuperJordan);
    for g in 0..4 {
        round_trip(Example::<Rational>::laistrygonian(g));
        round_trip(Example::<Fp<5>>::laistrygonian(g));
    }
    round_trip(Example::Laistrygonian {
        big_g: 2,
        chi_gh: Rational::parse_scalar("-3").unwrap(),
    });
    round_trip(Example::<Fp<3>>::SuperJordan);
}

#[test]
fn example_then_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    for (args, name) in [
        (vec!["example", "laistrygonian", "--G", "3"], "l3.json"),
        (vec!["example", "superjordan", "--field", "Fp:7"], "sj7.json"),
        (vec!["example", "laistrygonian", "--G", "2", "--chi-gh", "-1/2"], "lchi.json"),
    ] {
        let p = dir.path().join(name);
        let mut a = args.clone();
        a.extend(["-o", path_str(&p)]);
        assert_eq!(cartier(&a).code, 0);
        let r = cartier(&["verify", path_str(&p)]);
        assert_eq!(r.code, 0, "{}", r.stdout);
        assert!(r.stdout.contains("checks passed over"));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cartier");
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("l3.json");
    let s = Command::new(bin)
        .args(["example", "laistrygonian", "--G", "3", "-o", path_str(&p)])
        .status()
        .unwrap();
    assert_eq!(s.code(), Some(0));
    let o = Command::new(bin).args(["verify", path_str(&p)]).env("NO_COLOR", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(!String::from_utf8_lossy(&o.stdout).contains('\x1b'));
    let o = Command::new(bin).arg("verify").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn mutated_jordan_action_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = jordan_value();
    v["maps"]["alpha"]["entries"]
        .as_array_mut()
        .unwrap()
        .push(json!(["x1", ["s", "x1"], "1"]));
    let p = write_value(dir.path(), "bad.json", &v);
    let r = cartier(&["verify", path_str(&p), "--report", "json"]);
    assert_eq!(r.code, 1);
    let report: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(report["all_pass"], json!(false));
    let failed = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["axiom"] == "bialgebra_compatibility")
        .unwrap();
    assert_eq!(failed["status"], "FAIL");
    assert_eq!(failed["witness"]["input"], "x1⊗x2");
    assert_eq!(
        failed["witness"]["residual"],
        json!([
            {"basis": "x1⊗x2", "coefficient": "1"},
            {"basis": "x2⊗x1", "coefficient": "-1"}
        ])
    );

    let r = cartier(&["verify", path_str(&p), "--axioms", "lie"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

fn expect_input_error(dir: &Path, name: &str, contents: &str, code: &str) {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    let r = cartier(&["verify", path_str(&p)]);
    assert_eq!(r.code, 2, "{name}: {}", r.stdout);
    assert!(
        r.stderr.starts_with(&format!("error[{code}]")),
        "{name}: {}",
        r.stderr
    );
}

#[test]
fn malformed_inputs_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let base = jordan_value();

    let mut v = base.clone();
    v["maps"]["delta"]["entries"] = json!([[["x1", "x1"], "x1", "1"]]);
    expect_input_error(d, "degree.json", &v.to_string(), "degree-violation");

    let mut v = base.clone();
    v["maps"]["alpha"]["entries"][0][2] = json!("1/0");
    expect_input_error(d, "scalar.json", &v.to_string(), "malformed-scalar");

    expect_input_error(d, "empty.json", "", "syntax");
    expect_input_error(d, "truncated.json", "{\"format_version\": 1,", "syntax");

    let mut v = base.clone();
    v["colour"] = json!(1);
    expect_input_error(d, "unknown.json", &v.to_string(), "schema");

    let mut v = base.clone();
    v["maps"]["alpha"]["entries"][0][0] = json!("x9");
    expect_input_error(d, "dangling.json", &v.to_string(), "dangling-label");

    let mut v = base.clone();
    v["field"] = json!("Fp:9");
    expect_input_error(d, "field.json", &v.to_string(), "unsupported-field");

    let mut v = base;
    v["tau"] = json!([["1", "0"]]);
    expect_input_error(d, "tau.json", &v.to_string(), "schema");

    let r = cartier(&["verify", path_str(&d.join("missing.json"))]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error[io]"));
}

#[test]
fn example_argument_errors() {
    assert_eq!(cartier(&["example", "laistrygonian"]).code, 2);
    assert_eq!(cartier(&["example", "jordan", "--G", "2"]).code, 2);
    assert_eq!(cartier(&["example", "laistrygonian", "--G", "1", "--field", "Fp:2"]).code, 2);
    let r = cartier(&["example", "laistrygonian", "--G", "1", "--chi-gh", "0"]);
    assert_eq!(r.code, 2);
    let r = cartier(&["example", "laistrygonian", "--G", "1", "--chi-gh", "x"]);
    assert!(r.stderr.starts_with("error[malformed-scalar]"));
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = cartier(&["example", "laistrygonian", "--G", "2"]).stdout;
    let b = cartier(&["example", "laistrygonian", "--G", "2"]).stdout;
    assert_eq!(a, b);
    let p = dir.path().join("l2.json");
    std::fs::write(&p, &a).unwrap();
    let r1 = cartier(&["verify", path_str(&p), "--report", "json"]);
    let r2 = cartier(&["verify", path_str(&p), "--report", "json"]);
    assert_eq!(r1.stdout, r2.stdout);
    assert_eq!(r1.code, 0);
}

#[test]
fn bisum_and_decompose_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let k = d.join("sj.json");
    let g = d.join("g.json");
    let back = d.join("back.json");
    assert_eq!(cartier(&["example", "superjordan", "-o", path_str(&k)]).code, 0);
    let r = cartier(&["bisum", path_str(&k), "-o", path_str(&g)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(cartier(&["verify", path_str(&g)]).code, 0);
    let r = cartier(&["decompose", path_str(&g), "-o", path_str(&back)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("reassembled_bracket"));
    assert_eq!(cartier(&["verify", path_str(&back)]).code, 0);

    assert_eq!(cartier(&["bisum", path_str(&g), "-o", path_str(&back)]).code, 2);
    assert_eq!(cartier(&["decompose", path_str(&k), "-o", path_str(&back)]).code, 2);

    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&g).unwrap()).unwrap();
    v["maps"]["gamma"]["entries"] = json!([]);
    let broken = write_value(d, "broken.json", &v);
    let r = cartier(&["decompose", path_str(&broken), "-o", path_str(&back)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("FAIL [decomposition] πγ = id"), "{}", r.stdout);
}

#[test]
fn rejected_bisum_reports_failures() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = jordan_value();
    v["maps"]["lambda"]["entries"] = json!([[["s", "x1"], "x1", "1"], [["s", "x2"], "x2", "2"]]);
    let p = write_value(dir.path(), "bad.json", &v);
    let out = dir.path().join("g.json");
    let r = cartier(&["bisum", path_str(&p), "-o", path_str(&out)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("FAIL"));
    assert!(!out.exists());
}
