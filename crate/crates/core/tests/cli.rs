use std::path::Path;
use std::process::{Command, Output};

fn horizons(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horizons"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .unwrap()
}

#[test]
fn fig2_svg_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig.svg");
    let o = horizons(&["fig2"], &out);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.contains("version=\"1.1\""));
    assert!(!dir.path().join("fig.csv").exists());
}

#[test]
fn format_both_writes_two_files() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("fig");
    let o = horizons(
        &[
            "fig3",
            "--radius",
            "2",
            "--resolution",
            "16",
            "--format",
            "both",
        ],
        &base,
    );
    assert!(o.status.success());
    let csv = std::fs::read_to_string(base.with_extension("csv")).unwrap();
    assert!(csv.starts_with('#'));
    assert!(csv.contains("label,polyline,vertex,x1,x2,t,u,v\n"));
    assert!(base.with_extension("svg").exists());
}

#[test]
fn cones_with_psi_list_and_projection() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.csv");
    let o = horizons(
        &[
            "cones",
            "--psi-list",
            "-1,0,2",
            "--proj",
            "0.5,0.1",
            "--format",
            "csv",
        ],
        &out,
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    let first = csv.lines().find(|l| l.starts_with("cone-psi")).unwrap();
    let f: Vec<f64> = first
        .split(',')
        .skip(3)
        .map(|s| s.parse().unwrap())
        .collect();
    assert!((f[3] - (f[1] - 0.5 * f[0])).abs() < 1e-12);
    assert!((f[4] - (f[2] - 0.1 * f[0])).abs() < 1e-12);
}

#[test]
fn seed_is_recorded_and_annotation_is_optional() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.svg");
    assert!(
        horizons(&["fig2", "--seed", "99", "--annotate-throat"], &out)
            .status
            .success()
    );
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.contains("seed 99"));
    assert!(svg.contains("class=\"annotation\""));
}

#[test]
fn validation_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.svg");
    for args in [
        &["fig9"][..],
        &["fig2", "--radius", "-1"],
        &["fig2", "--radius", "nan"],
        &["fig2", "--resolution", "2"],
        &["fig2", "--t-max", "0"],
        &["fig2", "--dim", "3"],
        &["fig2", "--format", "png"],
        &["fig2", "--proj", "0.3"],
    ] {
        let o = horizons(args, &out);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    assert!(!out.exists());
}

#[test]
fn unwritable_output_exits_with_1() {
    let o = horizons(&["fig2"], Path::new("/nonexistent-dir/x/out.svg"));
    assert_eq!(o.status.code(), Some(1));
}
