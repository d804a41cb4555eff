use std::path::PathBuf;
use std::process::Command;

use l1disc::cli::{exit, run};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn read_golden(name: &str) -> Vec<u8> {
    std::fs::read(golden(name)).unwrap()
}

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
fn l1disc(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("l1disc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scene_arg(name: &str) -> String {
    golden(name).to_string_lossy().into_owned()
}

#[test]
fn render_goldens() {
    for (scene, extra, expected) in [
        ("fig2.scene", None, "fig2.txt"),
        ("fig3.scene", None, "fig3.txt"),
        ("fig3.scene", Some("--boundaries"), "fig3_boundaries.txt"),
    ] {
        let s = scene_arg(scene);
        let mut args = vec!["render", "--scene", &s];
        args.extend(extra);
        let (code, out, _) = l1disc(&args);
        assert_eq!(code, exit::OK);
        assert_eq!(out.as_bytes(), read_golden(expected), "{scene} {extra:?}");
    }
}

#[test]
fn vector_and_pixmap_goldens() {
    let s = scene_arg("fig2.scene");
    let (code, out, _) = l1disc(&["render", "--scene", &s, "--format", "vector"]);
    assert_eq!(code, exit::OK);
    assert_eq!(out.as_bytes(), read_golden("fig2.svg"));

    let dir = tempfile::tempdir().unwrap();
    let ppm = dir.path().join("fig3.ppm");
    let s = scene_arg("fig3.scene");
    let p = ppm.to_string_lossy().into_owned();
    let (code, out, _) = l1disc(&["render", "--scene", &s, "--format", "pixmap", "--out", &p]);
    assert_eq!(code, exit::OK);
    assert!(out.is_empty());
    assert_eq!(std::fs::read(&ppm).unwrap(), read_golden("fig3.ppm"));
}

#[test]
fn render_is_deterministic_and_handles_empty_scene() {
    let s = scene_arg("fig3.scene");
    let first = l1disc(&["render", "--scene", &s, "--format", "vector"]);
    let second = l1disc(&["render", "--scene", &s, "--format", "vector"]);
    assert_eq!(first, second);
    let e = scene_arg("empty.scene");
    let (code, out, _) = l1disc(&["render", "--scene", &e]);
    assert_eq!((code, out.as_str()), (exit::OK, ""));
}

#[test]
fn render_rejects_tsv_and_unknown_labels() {
    let s = scene_arg("fig2.scene");
    assert_eq!(l1disc(&["render", "--scene", &s, "--format", "tsv"]).0, exit::USAGE);
    assert_eq!(l1disc(&["render", "--scene", &s, "A", "Z"]).0, exit::USAGE);
}

#[test]
fn render_honours_explicit_window() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.scene");
    std::fs::write(&path, "window 0 2 -1 1\nA 0 0 2\nB 2 0 2\n").unwrap();
    let p = path.to_string_lossy().into_owned();
    let (code, out, _) = l1disc(&["render", "--scene", &p]);
    assert_eq!(code, exit::OK);
    assert!(out.starts_with("1X2\nXXX\n1X2\n"), "{out}");
}

#[test]
fn metric_reports() {
    let s = scene_arg("fig2.scene");
    let (code, out, _) = l1disc(&["metric", "--scene", &s, "A", "B"]);
    assert_eq!(code, exit::OK);
    assert!(out.contains("m(A, B) = 16\n"));
    assert!(out.contains("regime = thm1+collinear\n"));
    assert!(out.contains("thm1: closed 16 | oracle 16 | ok\n"));
    assert!(out.contains("thm3: closed 16 | oracle 16 | ok\n"));

    let (_, out, _) = l1disc(&["metric", "--scene", &s, "A", "A"]);
    assert!(out.contains("m(A, A) = 0\n") && out.contains("d_H(A, A) = 0\n"));

    let d = scene_arg("disjoint.scene");
    let (_, out, _) = l1disc(&["metric", "--scene", &d, "A", "B"]);
    assert!(out.contains("m(A, B) = 10\n"));
    assert!(out.contains("d_H(A, B) = 18\n"));
    assert!(out.contains("closed forms: none applicable"));

    let f3 = scene_arg("fig3.scene");
    let (_, out, _) = l1disc(&["metric", "--scene", &f3, "A", "B"]);
    assert!(out.contains("thm2: closed 22 | oracle 22 | ok\n"));
    assert!(out.contains("corollary: closed -22 | oracle 22 | DISAGREES\n"));
}

#[test]
fn metric_unknown_label_is_usage_error() {
    let s = scene_arg("fig2.scene");
    let (code, _, err) = l1disc(&["metric", "--scene", &s, "A", "Q"]);
    assert_eq!(code, exit::USAGE);
    assert!(err.contains("\"Q\""));
    assert_eq!(l1disc(&["metric", "A", "B"]).0, exit::USAGE);
}

#[test]
fn scene_errors_have_distinct_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    };
    let dup = write("dup.scene", "A 0 0 1\nA 1 0 1\n");
    let neg = write("neg.scene", "A 0 0 -1\n");
    let bad = write("bad.scene", "A 0 zero 1\n");
    let missing = dir.path().join("missing.scene").to_string_lossy().into_owned();

    let (code, _, err) = l1disc(&["render", "--scene", &dup]);
    assert_eq!(code, exit::INVALID);
    assert!(err.contains("dup.scene:2:1: invalid scene: duplicate label"), "{err}");
    assert_eq!(l1disc(&["render", "--scene", &neg]).0, exit::INVALID);
    let (code, _, err) = l1disc(&["render", "--scene", &bad]);
    assert_eq!(code, exit::PARSE);
    assert!(err.contains("bad.scene:1:5: parse error"), "{err}");
    assert_eq!(l1disc(&["render", "--scene", &missing]).0, exit::IO);
}

#[test]
fn card_table() {
    let (code, out, _) = l1disc(&["card", "--disc", "3", "--disc", "100000", "--circle", "0"]);
    assert_eq!(code, exit::OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "kind | radius | closed form | enumerated | agreement");
    assert_eq!(lines[1], "disc | 3 | 25 | 25 | ok");
    assert_eq!(lines[2], "disc | 100000 | 20000200001 | skipped | skipped");
    assert!(lines[3].starts_with("circle | 0 | domain error:"));
    assert!(lines[3].ends_with("| 1 | n/a"));
}

#[test]
fn card_usage_and_validation() {
    assert_eq!(l1disc(&["card"]).0, exit::USAGE);
    assert_eq!(l1disc(&["card", "--disc", "-2"]).0, exit::INVALID);
    let (code, out, _) = l1disc(&["card", "--disc", "20", "--enum-cap", "10"]);
    assert_eq!(code, exit::OK);
    assert!(out.contains("disc | 20 | 841 | skipped | skipped"));
    assert_eq!(l1disc(&["bogus"]).0, exit::USAGE);
    assert_eq!(l1disc(&["--help"]).0, exit::OK);
}

#[test]
fn verify_small_tsv_golden() {
    let (code, out, _) = l1disc(&["verify", "--formulas", "thm2", "--max-radius", "3", "--max-offset", "4"]);
    assert_eq!(code, exit::DISAGREEMENT);
    assert_eq!(out.as_bytes(), read_golden("verify_thm2_small.tsv"));
}

#[test]
fn verify_zero_radius_checks_nothing() {
    let (code, out, _) = l1disc(&["verify", "--max-radius", "0"]);
    assert_eq!(code, exit::OK);
    assert!(out.contains(" pairs_checked=0 "), "{out}");
    assert!(out.ends_with("disagreements=0\n"));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.tsv");
    let p = path.to_string_lossy().into_owned();
    let (code, out, _) = l1disc(&[
        "verify", "--formulas", "thm1,thm3", "--max-radius", "4", "--max-offset", "8", "--out", &p,
    ]);
    assert_eq!(code, exit::OK);
    assert_eq!(out.lines().count(), 1);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "r1\tr2\tgamma\tdelta\tregime\toracle_m\tclosed_m\tformula\n"
    );
}

#[test]
fn verify_argument_errors() {
    assert_eq!(l1disc(&["verify", "--formulas", "thm9"]).0, exit::USAGE);
    assert_eq!(l1disc(&["verify", "--format", "ascii"]).0, exit::USAGE);
    assert_eq!(l1disc(&["verify", "--max-radius", "50", "--enum-cap", "10"]).0, exit::USAGE);
    let (code, _, _) = l1disc(&["verify", "--max-radius", "1", "--out", "/nonexistent/dir/x.tsv"]);
    assert_eq!(code, exit::IO);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_l1disc");
    let status = Command::new(bin).args(["card", "--disc", "3"]).status().unwrap();
    assert_eq!(status.code(), Some(exit::OK));
    let status = Command::new(bin)
        .args(["verify", "--formulas", "corollary", "--max-radius", "3", "--max-offset", "3"])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(exit::DISAGREEMENT));
    let status = Command::new(bin).arg("render").output().unwrap().status;
    assert_eq!(status.code(), Some(exit::USAGE));
}
