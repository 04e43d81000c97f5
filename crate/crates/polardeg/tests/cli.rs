mod common;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn polardeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polardeg"))
        .args(args)
        .env_remove("POLARDEG_STEP_BUDGET")
        .output()
        .unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn corpus(name: &str) -> String {
    common::corpus_path(name).display().to_string()
}

fn input_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> String {
    f.path().display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn decompose_matches_golden_output() {
    for name in ["conic_tangent_line", "nodal_cubic", "triangle", "scroll"] {
        let o = polardeg(&["decompose", "-f", &corpus(name), "--json"]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&o), golden(&format!("decompose_{name}.json")), "{name}");
    }
    let o = polardeg(&["decompose", "-f", &corpus("conic_tangent_line")]);
    assert_eq!(stdout(&o), golden("decompose_conic_tangent_line.txt"));
}

#[test]
fn golden_values_agree_with_independent_counts() {
    // plane curves: pol = (d - 1)^2 - sum of Milnor numbers; alpha from the
    // intersection multiplicity of the line with the curve minus one
    for (name, pol, alpha) in [("conic_tangent_line", 1, 1), ("nodal_cubic", 3, 2), ("triangle", 1, 0)] {
        let v: Value = serde_json::from_str(&golden(&format!("decompose_{name}.json"))).unwrap();
        assert_eq!(v["pol"], json!(pol), "{name}");
        assert_eq!(v["alpha"], json!(alpha), "{name}");
        assert_eq!(v["beta_aff"].as_u64().unwrap() + v["beta_inf"].as_u64().unwrap(), pol - alpha, "{name}");
    }
    let v: Value = serde_json::from_str(&golden("decompose_conic_tangent_line.json")).unwrap();
    assert_eq!(v["special_points"], json!([[0, 1, 0]]));
}

#[test]
fn gordan_noether_example() {
    let o = polardeg(&["pol", "-f", &corpus("gordan_noether"), "--json"]);
    assert_eq!(stdout(&o), golden("pol_gordan_noether.json"));
    assert_eq!(json_of(&o)["pol"], json!(0));
    let o = polardeg(&["special-points", "-f", &corpus("gordan_noether"), "--json"]);
    assert_eq!(stdout(&o), golden("special_points_gordan_noether.json"));
    let v = json_of(&o);
    assert_eq!(v["special_points"], json!([]));
    assert_eq!(v["cone"], json!(false));
    let o = polardeg(&["is-cone", "-f", &corpus("gordan_noether"), "--json"]);
    assert_eq!(json_of(&o)["cone"], json!(false));
}

#[test]
fn cones_are_recognised() {
    let f = input_file("vars: x y z\nf: x^2 + y^2\n");
    let v = json_of(&polardeg(&["is-cone", "-f", &path(&f), "--json"]));
    assert_eq!(v["cone"], json!(true));
    assert_eq!(v["apex_space"], json!([[0, 0, 1]]));
    let v = json_of(&polardeg(&["pol", "-f", &path(&f), "--json"]));
    assert_eq!(v["pol"], json!(0));
}

#[test]
fn output_is_deterministic() {
    let file = corpus("cusp_at_infinity");
    for args in [
        vec!["decompose", "-f", &file, "--json"],
        vec!["decompose", "-f", &file],
        vec!["special-points", "-f", &file, "--json"],
        vec!["pol", "-f", &file, "--seed", "99"],
    ] {
        let a = polardeg(&args);
        let b = polardeg(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn timings_go_to_stderr_only() {
    let file = corpus("conic_tangent_line");
    let plain = polardeg(&["decompose", "-f", &file, "--json"]);
    let timed = polardeg(&["decompose", "-f", &file, "--json", "--timings"]);
    assert_eq!(plain.stdout, timed.stdout);
    assert!(plain.stderr.is_empty());
    assert!(!timed.stderr.is_empty());
}

#[test]
fn squarefree_reduction_is_flagged() {
    let f = input_file("vars: x y z\nf: x^2*y^2*z\n");
    let v = json_of(&polardeg(&["pol", "-f", &path(&f), "--json"]));
    assert_eq!(v["reduced"], json!(true));
    assert_eq!(v["pol"], json!(1));
}

#[test]
fn non_admissible_hyperplane_exits_2() {
    // for the cusp and x = 0 the polar locus contains the whole line y = 0
    let f = input_file("vars: x y z\nf: y^2*z - x^3\n");
    let o = polardeg(&["admissible", "-f", &path(&f), "--hyperplane", "x", "--json"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert_eq!(json_of(&o)["admissible"], json!(false));
    let o = polardeg(&["decompose", "-f", &path(&f), "--hyperplane", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hyperplane_inside_the_hypersurface_exits_2() {
    let o = polardeg(&["decompose", "-f", &corpus("conic_tangent_line"), "--hyperplane", "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn input_errors_exit_5() {
    let bad: &[&str] = &[
        "vars: x y z\nf: x^2 + y\n",
        "vars: x y z\nf: x^2 + q^2\n",
        "vars: x y z\nf: 3\n",
        "vars: x\nf: x^2\n",
        "vars: x y z\nf: x*y - z^2\nf: x\n",
        "vars: x y z\nf: x*y - z^2\ncolour: red\n",
        "vars: x y z\nf: x*y - z^2\nhyperplane: x*y\n",
        "vars: x y z\nf: (x + y\n",
    ];
    for text in bad {
        let f = input_file(text);
        let o = polardeg(&["decompose", "-f", &path(&f), "--hyperplane", "z"]);
        assert_eq!(o.status.code(), Some(5), "{text:?}");
        assert!(!o.stderr.is_empty());
    }
    let missing: PathBuf = std::env::temp_dir().join("polardeg-no-such-file.txt");
    let o = polardeg(&["pol", "-f", &missing.display().to_string()]);
    assert_eq!(o.status.code(), Some(5));
    let o = polardeg(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(5));
    let o = polardeg(&["decompose", "-f", &corpus("conic"), "--hyperplane", "x + "]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn exhausted_step_budget_exits_4() {
    let o = Command::new(env!("CARGO_BIN_EXE_polardeg"))
        .args(["decompose", "-f", &corpus("scroll"), "--json"])
        .env("POLARDEG_STEP_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert!(o.stdout.is_empty());
}
