use std::path::Path;
use std::process::{Command, Output};

fn udk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_udk")).args(args).output().expect("spawn udk")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn generate_and_verify_grid() {
    let dir = tempfile::tempdir().unwrap();
    let g2 = dir.path().join("g2.udg");
    let o = udk(&["generate", "--construction", "grid", "--k", "2", "--out", p(&g2)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("n=179, e=498"));

    let o = udk(&["verify", p(&g2), "--k", "2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["n"].as_u64(), v["e"].as_u64()), (Some(179), Some(498)));
    assert_eq!(v["max_crossings_per_edge"], 2);

    // Not 1-plane: a verdict failure.
    assert_eq!(code(&udk(&["verify", p(&g2), "--k", "1"])), 1);
}

#[test]
fn bounds_table() {
    let o = udk(&["bounds", "--n", "179", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["u2_upper"], 708);
    assert_eq!(v["spiral_edges"], 498);
    let text = stdout(&udk(&["bounds", "--n", "179"]));
    assert!(text.contains("708") && text.contains("498"));
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(code(&udk(&["frobnicate"])), 2);
    assert_eq!(code(&udk(&["verify", "/nonexistent/x.udg"])), 2);
    assert_eq!(code(&udk(&["generate", "--construction", "grid", "--out", "/tmp/never.udg"])), 2);
    assert_eq!(code(&udk(&["bounds", "--n", "-3"])), 2);
}

#[test]
fn rook_rotation_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.udg");
    let o = udk(&[
        "generate", "--construction", "rook", "--theta-cos", "3/5", "--theta-sin", "4/5", "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0);
    let o = udk(&["generate", "--construction", "rook", "--theta-cos", "0,1/2", "--theta-sin", "1/2",
        "--out", p(&out)]);
    assert_eq!(code(&o), 0);
    let o = udk(&["generate", "--construction", "rook", "--theta-cos", "1/2", "--theta-sin", "1/2",
        "--out", p(&out)]);
    assert_eq!(code(&o), 1);
}

#[test]
fn analyze_audit_render() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.udg");
    assert_eq!(code(&udk(&["generate", "--construction", "dodecagon", "--out", p(&d)])), 0);
    let o = udk(&["analyze", p(&d), "--outer-metrics", "--small-cells", "--density-t", "3"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outer_metrics"]["perimeter"], "12");
    assert_eq!(v["density"][0]["holds"], true);
    for mode in ["exact", "greedy"] {
        let o = udk(&["audit", p(&d), "--mode", mode]);
        assert_eq!(code(&o), 0);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["ledger"]["passed"], true);
    }
    let svg = dir.path().join("d.svg");
    assert_eq!(code(&udk(&["render", p(&d), "--out", p(&svg), "--scale", "20"])), 0);
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
}

#[test]
fn batch_empty_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let o = udk(&["batch", "--dir", p(dir.path())]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["files"], 0);

    for (name, c) in [("a.udg", "rook"), ("b.udg", "dodecagon")] {
        let f = dir.path().join(name);
        assert_eq!(code(&udk(&["generate", "--construction", c, "--out", p(&f)])), 0);
    }
    let out = tempfile::tempdir().unwrap();
    let report = out.path().join("report.json");
    let o = udk(&["batch", "--dir", p(dir.path()), "--report", p(&report)]);
    assert_eq!(code(&o), 0);
    let first = std::fs::read(&report).unwrap();

    std::fs::write(dir.path().join("c.udg"), "{\"format\": \"udg-drawing/1\", \"vert").unwrap();
    let o = udk(&["batch", "--dir", p(dir.path())]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 1);
    assert_eq!(v["summary"]["passed"], 2);
    assert_eq!(v["files"][2]["path"], "c.udg");

    std::fs::remove_file(dir.path().join("c.udg")).unwrap();
    udk(&["batch", "--dir", p(dir.path()), "--report", p(&report)]);
    assert_eq!(std::fs::read(&report).unwrap(), first);
}
