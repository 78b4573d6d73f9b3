use std::path::PathBuf;
use std::process::{Command, Output};

fn algebra(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../algebras")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcenter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn analyze_reports_witness_and_socle() {
    let o = run(&["analyze", algebra("firstexample_i.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("dim A = 27"));
    assert!(out.contains("p1: J(Z(A)) is an ideal: false (witness x1^2 times"));
    assert!(out.contains("p2: soc(Z(A)) is an ideal: true"));
    assert!(out.contains("soc(Z(A)) = span{x1^2x2^2x3, x1^2x2x3^2, x1x2^2x3^2, x1^2x2^2x3^2}"));
}

#[test]
fn machine_report_for_the_ground_field() {
    let o = run(&[
        "analyze",
        algebra("field.toml").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["name"], "field");
    assert_eq!(v["dims"]["A"], 1);
    for p in ["p1", "p2", "p3"] {
        assert_eq!(v["verdicts"][p], true);
    }
    assert_eq!(v["claims"].as_array().unwrap().len(), 3);
}

#[test]
fn non_associative_table_is_rejected_with_triple() {
    let o = run(&["analyze", algebra("nonassociative.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 5"), "{err}");
    assert!(err.contains("(e1*e1)*e1"), "{err}");
}

#[test]
fn syntax_errors_are_line_anchored() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(
        &dir,
        "bad.toml",
        "name = \"x\"\nfield = { kind = \"prime\", p = 3 }\ndim = = 2\n",
    );
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn missing_radical_strategy_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let text = "name = \"dual2\"\nfield = { kind = \"prime\", p = 2 }\n\n\
                [presentation.structure_constants]\ndim = 2\n\
                products = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]\n";
    let p = write_temp(&dir, "dual2.toml", text);
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("radical unavailable"), "{err}");
    assert!(err.contains("local_codim1"), "{err}");

    let hinted = text.replace("\n\n", "\nradical_hint = \"local_codim1\"\n\n");
    let p = write_temp(&dir, "dual2_hinted.toml", &hinted);
    assert_eq!(run(&["analyze", p.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn paper_suite_case_filter() {
    let o = run(&["paper-suite", "--case", "dim12_sharp"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    let (summary, claims) = lines.split_last().unwrap();
    assert!(summary.ends_with(", 0 failed"));
    assert!(claims.iter().all(|l| l.starts_with("PASS dim12_sharp.")));

    let o = run(&["paper-suite", "--case", "nonexistent"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown case"));
}

#[test]
fn construct_trivial_extension_carries_the_form() {
    let dir = tempfile::tempdir().unwrap();
    let src = algebra("dual_numbers_trivext.toml");
    let out = dir.path().join("t.toml");
    let o = run(&["construct", src.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("dim = 4"));
    assert!(text.contains(r#"symmetrizing_form = ["0", "0", "1", "0"]"#), "{text}");

    let direct = run(&["analyze", src.to_str().unwrap(), "--format", "machine"]);
    let explicit = run(&["analyze", out.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(direct.stdout, explicit.stdout);
    let direct = run(&["analyze", src.to_str().unwrap()]);
    let explicit = run(&["analyze", out.to_str().unwrap()]);
    assert_eq!(stdout(&direct), stdout(&explicit));
}

#[test]
fn construct_round_trips_larger_constructions() {
    let dir = tempfile::tempdir().unwrap();
    for name in [
        "mat2_dual_numbers.toml",
        "counterexample_b_quotient.toml",
        "soc20_trivext.toml",
    ] {
        let src = algebra(name);
        let out = dir.path().join(name);
        let o = run(&["construct", src.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        let direct = run(&["analyze", src.to_str().unwrap()]);
        let explicit = run(&["analyze", out.to_str().unwrap()]);
        assert_eq!(stdout(&direct), stdout(&explicit), "{name}");
    }
}

#[test]
fn construct_tensor_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"name = "t"
field = { kind = "prime", p = 5 }

[presentation.tensor.left.presentation.skew_truncated]
bounds = [2]

[presentation.tensor.right.presentation.skew_truncated]
bounds = [3]
"#;
    let src = write_temp(&dir, "t.toml", text);
    let out = dir.path().join("out.toml");
    let o = run(&["construct", src.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(std::fs::read_to_string(&out).unwrap().contains("dim = 6"));
}

#[test]
fn quotient_by_non_ideal_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"name = "q"
field = { kind = "prime", p = 3 }

[presentation.quotient]
ideal = ["E"]

[presentation.quotient.base]
radical_hint = "semisimple"

[presentation.quotient.base.presentation.matrix_generators]
size = 2
generators = [{ name = "E", rows = ["1.", ".."] }, { name = "U", rows = [".1", ".."] }, { name = "L", rows = ["..", "1."] }]
"#;
    let src = write_temp(&dir, "q.toml", text);
    let out = dir.path().join("out.toml");
    let o = run(&["construct", src.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 4") && err.contains("not a two-sided ideal"), "{err}");
    assert!(!out.exists());
}

#[test]
fn thread_cap_is_validated() {
    let path = algebra("field.toml");
    let ok = Command::new(env!("CARGO_BIN_EXE_symcenter"))
        .args(["analyze", path.to_str().unwrap()])
        .env("SYMCENTER_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_symcenter"))
        .args(["analyze", path.to_str().unwrap()])
        .env("SYMCENTER_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn analyze_output_is_deterministic() {
    let path = algebra("soc20_trivext.toml");
    let a = run(&["analyze", path.to_str().unwrap(), "--format", "machine"]);
    let b = run(&["analyze", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
