//! End-to-end tests of the `cislab` binary: artifacts, exit codes, determinism.

use std::fs;
use std::path::Path;
use std::process::Command;

use cislab::jobs::write_set_json;
use cislab::transversal::sets;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cislab"))
}

fn write_journe(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("journe.json");
    write_set_json(&path, sets::journe().pieces()).unwrap();
    path
}

#[test]
fn transversal_analyze_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_journe(dir.path());
    let output = dir.path().join("region.json");
    let status = bin()
        .args(["transversal-analyze", "--input"])
        .arg(&input)
        .arg("--output")
        .arg(&output)
        .status()
        .unwrap();
    assert!(status.success());
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(value["admissible"].as_array().unwrap().len(), 7);
    assert_eq!(value["nu"], 4);
}

#[test]
fn winding_emits_curve_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_journe(dir.path());
    let output = dir.path().join("winding.json");
    let csv = dir.path().join("curve.csv");
    let status = bin()
        .args(["winding", "--alpha", "3/10", "--samples", "16", "--input"])
        .arg(&input)
        .arg("--output")
        .arg(&output)
        .arg("--csv")
        .arg(&csv)
        .status()
        .unwrap();
    assert!(status.success());
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(value["index"], -1);
    assert_eq!(value["numeric_index"], -1);
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("piece_id,t,re,im\n"));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().count(), 1 + 16 * (16 + 1));
}

#[test]
fn validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad-set.json");
    fs::write(
        &input,
        r#"{"intervals":[{"lo":"0","hi":"1/2"},{"lo":"1/4","hi":"3/4"}]}"#,
    )
    .unwrap();
    let status = bin()
        .args(["transversal-analyze", "--input"])
        .arg(&input)
        .arg("--output")
        .arg(dir.path().join("out.json"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));

    // excluded shift: the symbol curve passes through the origin
    let journe = write_journe(dir.path());
    let status = bin()
        .args(["winding", "--alpha", "1/4", "--input"])
        .arg(&journe)
        .arg("--output")
        .arg(dir.path().join("w.json"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn spline_cis_and_zeros_reports() {
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("cis.json");
    let status = bin()
        .args(["spline-cis", "--m", "4", "--alpha", "0.3", "--output"])
        .arg(&output)
        .status()
        .unwrap();
    assert!(status.success());
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(value["verdict"], "CIS");

    let output = dir.path().join("zeros.json");
    let status = bin()
        .args(["zeros", "--m", "6", "--beta", "0.3", "--output"])
        .arg(&output)
        .status()
        .unwrap();
    assert!(status.success());
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(value["split"]["inside"], 3);
    assert_eq!(value["split"]["outside"], 2);
}

#[test]
fn toeplitz_sweep_csv_format() {
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("sweep.json");
    let csv = dir.path().join("cond.csv");
    let status = bin()
        .args([
            "toeplitz-sweep",
            "--m",
            "2",
            "--alpha",
            "0.3",
            "--sections",
            "8,16,32",
            "--grid",
            "256",
            "--jobs",
            "2",
            "--output",
        ])
        .arg(&output)
        .arg("--csv")
        .arg(&csv)
        .status()
        .unwrap();
    assert!(status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,singular_min,singular_max,cond"));
    assert_eq!(text.lines().count(), 4);
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(value["N"], serde_json::json!([8, 16, 32]));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("r1.json");
    let out2 = dir.path().join("r2.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args([
                "reconstruct",
                "--m",
                "3",
                "--alpha",
                "0.3",
                "--sections",
                "8,16",
                "--seed",
                "42",
                "--jobs",
                "2",
                "--output",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert_eq!(fs::read(&out1).unwrap(), fs::read(&out2).unwrap());
}
