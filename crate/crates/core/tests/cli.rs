use std::path::Path;
use std::process::{Command, Output};

use coorbit::cli::{Config, ReportDocument};
use coorbit::io::write_operator;

fn coorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coorbit")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn report(out: &Output) -> ReportDocument {
    ReportDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn sample_config_identity_is_bounded() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "wh.conf", "# identity on the Gabor lattice\nn=16\nrepresentation1=wh\noperator=identity\ndirection=one-to-p\np=1\n");
    let out = coorbit(&["certify", "--config", &cfg]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = report(&out);
    assert_eq!(doc.command, "certify");
    let r = &doc.reports[0];
    assert!(r.consistent());
    // identity kernel is the Gram matrix; its 1->1 criterion is the largest column mass
    let s = r.sandwich.as_ref().unwrap();
    assert!((r.criterion_value - s.window_constant).abs() <= 1e-10 * r.criterion_value);
}

#[test]
fn certify_output_is_byte_identical_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("r.json");
    let cfg = write_config(dir.path(), "c.conf", &format!("n=8\noperator=random\ndirection=all-p\nout={}\n", out_path.display()));
    let mut seen = Vec::new();
    for threads in ["1", "3"] {
        let status = Command::new(env!("CARGO_BIN_EXE_coorbit"))
            .env("COORBIT_NUM_THREADS", threads)
            .args(["certify", "--config", &cfg, "--seed", "11"])
            .status()
            .unwrap();
        assert!(status.success());
        seen.push(std::fs::read(&out_path).unwrap());
    }
    assert_eq!(seen[0], seen[1]);
}

#[test]
fn report_round_trips_through_json() {
    let out = coorbit(&["certify", "--set", "n=8", "--set", "operator=random", "--p", "3", "--s1", "-1", "--s2", "0.5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let doc = report(&out);
    assert_eq!(doc.to_json().unwrap().trim_end(), text.trim_end());
}

#[test]
fn operator_file_is_read() {
    let dir = tempfile::tempdir().unwrap();
    let op = dir.path().join("a.txt");
    write_operator(&op, &coorbit::random::operator(8, 8, 3)).unwrap();
    let out = coorbit(&["certify", "--set", "n=8", "--operator", op.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn malformed_matrix_reports_position_and_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let op = dir.path().join("bad.txt");
    std::fs::write(&op, "# complex-matrix rows=2 cols=2\n1;0,0;0\n0;0,x;1\n").unwrap();
    let out = coorbit(&["certify", "--set", "n=2", "--operator", op.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column 5"), "{err}");
}

#[test]
fn missing_file_exits_3() {
    let out = coorbit(&["certify", "--operator", "/nonexistent/op.txt"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn validation_failures_exit_2() {
    assert_eq!(code(&coorbit(&["certify", "--set", "representation1=affine", "--set", "n=12"])), 2);
    assert_eq!(code(&coorbit(&["certify", "--p", "0.5"])), 2);
    assert_eq!(code(&coorbit(&["certify", "--set", "no_such_key=1"])), 2);
    assert_eq!(code(&coorbit(&["cross", "--set", "representation1=wh"])), 2);
}

#[test]
fn selftest_passes_and_detects_nan() {
    assert_eq!(code(&coorbit(&["selftest"])), 0);
    assert_eq!(code(&coorbit(&["selftest", "--set", "n=4"])), 0);
    assert_eq!(code(&coorbit(&["selftest", "--set", "representation1=affine", "--set", "n=32"])), 0);
    let bad = coorbit(&["selftest", "--set", "inject_nan=true"]);
    assert_eq!(code(&bad), 1);
    assert!(String::from_utf8_lossy(&bad.stdout).contains("window-finite"));
}

#[test]
fn cross_reports_both_directions() {
    for op in ["zero", "rank-one", "identity"] {
        let out = coorbit(&["cross", "--set", "n=8", "--set", "representation1=wh", "--set", "representation2=affine", "--set", &format!("operator={op}")]);
        assert_eq!(code(&out), 0, "{op}: {}", String::from_utf8_lossy(&out.stderr));
        let doc = report(&out);
        assert_eq!(doc.reports.len(), 2, "{op}");
        for r in &doc.reports {
            assert!(r.consistent(), "{op}");
            if op == "zero" {
                assert_eq!(r.criterion_value, 0.0);
            }
        }
    }
}

#[test]
fn norms_lists_kernel_table() {
    let out = coorbit(&["norms", "--set", "n=4", "--set", "operator=random"]);
    assert_eq!(code(&out), 0);
    let doc = report(&out);
    assert!(!doc.norm_tables.is_empty());
    assert!(doc.norm_tables[0].rows.iter().all(|r| r.value.is_finite()));
}

#[test]
fn config_api_matches_binary() {
    let mut map = std::collections::BTreeMap::new();
    map.insert("n".to_owned(), "8".to_owned());
    map.insert("operator".to_owned(), "identity".to_owned());
    let config = Config::from_map(&map).unwrap();
    let doc = coorbit::cli::run_certify(&config).unwrap();
    let out = coorbit(&["certify", "--set", "n=8", "--set", "operator=identity"]);
    assert_eq!(doc.to_json().unwrap().trim_end(), String::from_utf8(out.stdout).unwrap().trim_end());
}
