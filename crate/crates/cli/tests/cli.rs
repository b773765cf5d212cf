use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use verma_tensor::GaussianRational;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verma-tensor")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn decompose_matches_goldens() {
    let out = run(&["decompose", "--mu1", "0", "--mu2", "0", "--cutoff", "3", "--verify", "--json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), golden("decompose_0_0.json"));
    let out = run(&["decompose", "--mu1", "i", "--mu2", "-i", "--cutoff", "3", "--verify", "--json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), golden("decompose_i_neg_i.json"));
}

#[test]
fn rc_and_homdim_match_goldens() {
    let out = run(&["rc", "--lam1", "1", "--lam2", "1", "--lam3", "4", "--json"]);
    assert_eq!(stdout(&out), golden("rc_1_1_4.json"));
    let out = run(&["homdim", "--lam1", "0", "--lam2", "0", "--lam3", "2", "--cutoff", "4", "--json"]);
    assert_eq!(stdout(&out), golden("homdim_0_0_2.json"));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["decompose", "--mu1", "1", "--mu2", "3", "--cutoff", "6", "--verify", "--json", "--dump-matrices"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn json_scalars_round_trip() {
    let out = run(&[
        "decompose",
        "--mu1",
        "-1/2+i",
        "--mu2",
        "3/2",
        "--cutoff",
        "5",
        "--verify",
        "--json",
        "--dump-matrices",
    ]);
    assert!(out.status.success());
    fn walk(v: &Value, n: &mut usize) {
        match v {
            Value::String(s) if s.parse::<GaussianRational>().is_ok() => {
                assert_eq!(s.parse::<GaussianRational>().unwrap().to_string(), *s);
                *n += 1;
            }
            Value::Array(xs) => xs.iter().for_each(|x| walk(x, n)),
            Value::Object(m) => m.values().for_each(|x| walk(x, n)),
            _ => {}
        }
    }
    let mut n = 0;
    walk(&json(&out), &mut n);
    assert!(n > 50);
}

#[test]
fn verify_flag_only_annotates() {
    let plain = json(&run(&["decompose", "--mu1", "5", "--mu2", "-1", "--cutoff", "8", "--json"]));
    let checked = json(&run(&["decompose", "--mu1", "5", "--mu2", "-1", "--cutoff", "8", "--verify", "--json"]));
    assert_eq!(plain["results"]["summands"], checked["results"]["summands"]);
    assert_eq!(plain["results"]["fusion_sets"], checked["results"]["fusion_sets"]);
    assert_eq!(plain["oracle_verified"], false);
    assert_eq!(checked["oracle_verified"], true);
}

#[test]
fn text_output_examples() {
    let out = run(&["decompose", "--mu1", "0", "--mu2", "0", "--cutoff", "4"]);
    assert!(stdout(&out).contains("summands: M(0) ⊕ M(-2) ⊕ M(-4) ⊕ M(-6) ⊕ M(-8) ⊕ ..."));
    let out = run(&["decompose", "--mu1", "1/2", "--mu2", "0", "--cutoff", "3"]);
    assert!(stdout(&out).contains("summands: M(1/2) ⊕ M(-3/2) ⊕ M(-7/2) ⊕ M(-11/2) ⊕ ..."));
    let out = run(&["decompose", "--mu1", "i", "--mu2", "-i", "--cutoff", "6", "--verify"]);
    let text = stdout(&out);
    assert!(text.contains("summands: P(-2) ⊕ M(-4)"));
    assert!(text.contains("{0, -2}: P(-2), singular vectors 1 at 0 and 1 at -2, Casimir not semisimple, agrees"));
}

#[test]
fn rc_examples() {
    let v = json(&run(&["rc", "--lam1", "0", "--lam2", "0", "--lam3", "2", "--json"]));
    assert_eq!(v["results"]["coeffs"], serde_json::json!(["0", "0"]));
    assert_eq!(v["results"]["is_zero"], true);
    let v = json(&run(&["rc", "--lam1", "1", "--lam2", "1", "--lam3", "2", "--json"]));
    assert_eq!(v["results"]["coeffs"], serde_json::json!(["1"]));
    assert_eq!(v["results"]["is_zero"], false);
}

#[test]
fn rc_applies_to_polynomial_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    let g = dir.path().join("g.json");
    fs::write(&f, r#"["0", "0", "1"]"#).unwrap();
    fs::write(&g, r#"["0", "1"]"#).unwrap();
    let out = run(&[
        "rc",
        "--lam1",
        "1",
        "--lam2",
        "1",
        "--lam3",
        "4",
        "--apply",
        f.to_str().unwrap(),
        g.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["results"]["applied"], serde_json::json!(["0", "0", "1"]));

    fs::write(&g, "not json").unwrap();
    let out =
        run(&["rc", "--lam1", "1", "--lam2", "1", "--lam3", "4", "--apply", f.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn homdim_examples() {
    for (l1, l2, l3, dim) in [("0", "0", "2", 2), ("1", "1", "2", 1), ("1", "1", "4", 1)] {
        let v = json(&run(&["homdim", "--lam1", l1, "--lam2", l2, "--lam3", l3, "--cutoff", "8", "--json"]));
        assert_eq!(v["results"]["hom_dimension"], dim, "({l1},{l2},{l3})");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["decompose", "--mu1", "1/0", "--mu2", "0"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--mu1", "x", "--mu2", "0"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--mu1", "0", "--mu2", "0", "--cutoff", "65"]).status.code(), Some(2));
    assert_eq!(
        run(&["decompose", "--mu1", "0", "--mu2", "0", "--cutoff", "65", "--max-cutoff", "80"]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["decompose", "--mu1", "5", "--mu2", "-1", "--cutoff", "3"]).status.code(), Some(3));
    assert_eq!(run(&["rc", "--lam1", "1", "--lam2", "1", "--lam3", "3"]).status.code(), Some(3));
    assert_eq!(run(&["homdim", "--lam1", "1", "--lam2", "1", "--lam3", "3"]).status.code(), Some(3));
    assert_eq!(
        run(&["homdim", "--lam1", "-1", "--lam2", "-3", "--lam3", "20", "--cutoff", "4"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["verify", "--grid", "/nonexistent/grid.txt"]).status.code(), Some(2));
}

#[test]
fn verify_default_grid_passes_in_parallel() {
    let out = run(&["verify", "--parallel", "4", "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["oracle_verified"], true);
    let serial = run(&["verify", "--json"]);
    assert_eq!(serial.stdout, out.stdout);
}

#[test]
fn verify_grid_files() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.txt");
    fs::write(&grid, "# example\niso,0,0,i,-i\ndecompose,i,-i\ncg,2,1,3\nmultiplicity,-1,-3,-2\nduality,0,0\n")
        .unwrap();
    let out = run(&["verify", "--grid", grid.to_str().unwrap(), "--list"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("iso(0, 0, i, -i): hypothesis false, isomorphic false"));

    fs::write(&grid, "").unwrap();
    let out = run(&["verify", "--grid", grid.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));

    fs::write(&grid, "decompose,0\n").unwrap();
    assert_eq!(run(&["verify", "--grid", grid.to_str().unwrap()]).status.code(), Some(2));

    fs::write(&grid, "cg,-1,1,1\n").unwrap();
    assert_eq!(run(&["verify", "--grid", grid.to_str().unwrap()]).status.code(), Some(3));
}
