use std::path::Path;
use std::process::{Command, Output};

use raocurve_cli::report::parse_text;
use serde_json::Value;

fn raocurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raocurve")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn construct(dir: &Path, catalog: &str, n: u32, d: u32, g: i64) -> String {
    let path = dir.join(format!("{catalog}-{n}-{d}-{g}.txt")).to_string_lossy().into_owned();
    let (n, d, g) = (n.to_string(), d.to_string(), g.to_string());
    let o = raocurve(&["construct", "--catalog", catalog, "--n", &n, "--d", &d, "--g", &g, "-o", &path]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn analyze(path: &str) -> Value {
    let o = raocurve(&["analyze", path]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn bounds_table_contains_rho() {
    let o = raocurve(&["bounds", "--n", "3", "--d", "5", "--g", "0"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let row = s.lines().find(|l| l.split_whitespace().next() == Some("2")).unwrap();
    assert_eq!(row.split_whitespace().nth(1), Some("3"), "{s}");
}

#[test]
fn example_curve_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct(dir.path(), "ex45", 3, 4, 0);
    let o = raocurve(&["verify", &p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "extremal");
    let v = analyze(&p);
    assert_eq!(v["verdict"], "extremal");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 1);
}

#[test]
fn nonextremal_witness() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct(dir.path(), "ex46", 4, 4, -1);
    let o = raocurve(&["verify", &p]);
    assert_eq!(o.status.code(), Some(1));
    let v = analyze(&p);
    assert_eq!(v["first_h1_failure"], 2);
    assert_eq!(v["verdict"], "not_extremal");
}

#[test]
fn analyze_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct(dir.path(), "ex45", 4, 5, 1);
    let a = raocurve(&["analyze", &p, "--seed", "7"]);
    let b = raocurve(&["analyze", &p, "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["gin"]["seeds"][0], 7);
}

#[test]
fn text_matches_json() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct(dir.path(), "ex45", 3, 5, 1);
    let json = analyze(&p);
    let o = raocurve(&["analyze", &p, "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(parse_text(&stdout(&o)).unwrap(), json);
}

#[test]
fn oracle_agrees_with_analyze() {
    let dir = tempfile::tempdir().unwrap();
    for (cat, n, d, g) in [("ex45", 3, 4, 0), ("ex45", 4, 6, 2), ("ex46", 4, 4, -2), ("rem64", 5, 3, -3)] {
        let p = construct(dir.path(), cat, n, d, g);
        let v = analyze(&p);
        let rows = v["cohomology"].as_array().unwrap();
        let top = rows.last().unwrap()["j"].as_i64().unwrap();
        let o = raocurve(&["oracle-hf", &p, "--max-deg", &top.to_string()]);
        assert!(o.status.success());
        let oracle: Vec<(i64, u64)> = stdout(&o)
            .lines()
            .map(|l| {
                let mut w = l.split_whitespace();
                (w.next().unwrap().parse().unwrap(), w.next().unwrap().parse().unwrap())
            })
            .collect();
        assert_eq!(oracle.len() as i64, top + 1);
        for r in rows {
            let j = r["j"].as_i64().unwrap();
            let hf = r["hf"].as_u64().unwrap();
            if j >= 0 {
                assert_eq!(oracle[j as usize], (j, hf), "{cat} {n} {d} {g}");
            } else {
                assert_eq!(hf, 0);
            }
        }
    }
}

#[test]
fn verify_exit_code_tracks_verdict_in_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let out_s = out.to_string_lossy().into_owned();
    let o = raocurve(&["sweep", "--n", "3:4", "--d", "3:5", "--a", "0:2", "-o", &out_s, "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let first = std::fs::read(&out).unwrap();
    let doc: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(doc["schema"], 1);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2 * 3 * 3);
    let mut last = (0, 0, -1);
    for r in reports {
        assert_eq!(r["verdict"], "extremal", "{}", r["point"]);
        let p = &r["point"];
        let key = (p["n"].as_i64().unwrap(), p["d"].as_i64().unwrap(), p["a"].as_i64().unwrap());
        assert!(key > last, "grid order");
        last = key;
        let (n, d, a) = key;
        let g = r["spec"]["g"].as_i64().unwrap();
        let f = construct(dir.path(), "ex45", n as u32, d as u32, g);
        assert_eq!(raocurve(&["verify", &f]).status.code(), Some(0), "{n} {d} {a}");
    }
    // same invocation with a different pool size is byte-identical
    let o = raocurve(&["sweep", "--n", "3:4", "--d", "3:5", "--a", "0:2", "-o", &out_s, "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), first);
}

#[test]
fn usage_errors() {
    assert_eq!(raocurve(&["bounds", "--n", "3"]).status.code(), Some(2));
    assert_eq!(raocurve(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(raocurve(&["bounds", "--n", "3", "--d", "4", "--g", "5"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.txt");
    std::fs::write(&p, "ring n=3 field=q\nx0*x1 + x2\n").unwrap();
    let o = raocurve(&["verify", &p.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn degenerate_input_is_not_extremal() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("plane.txt");
    std::fs::write(&p, "ring n=3 field=q\nx3\nx2^3 - x0*x1^2\n").unwrap();
    assert_eq!(raocurve(&["verify", &p.to_string_lossy()]).status.code(), Some(1));
}

#[test]
fn zp_file_matches_rational_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct(dir.path(), "ex45", 4, 4, -1);
    let text = std::fs::read_to_string(&p).unwrap().replace("field=q", "field=zp:32003");
    let z = dir.path().join("zp.txt");
    std::fs::write(&z, text).unwrap();
    let v = analyze(&z.to_string_lossy());
    assert_eq!(v["verdict"], "extremal");
}
