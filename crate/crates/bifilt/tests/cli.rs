use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn bifilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bifilt"))
        .args(args)
        .env_remove("BIFILT_THREADS")
        .output()
        .unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn version_has_build_hash() {
    let o = bifilt(&["--version"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("bifilt 0.1.0 ("), "{text}");
}

#[test]
fn rips_nerve_on_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tri.semifil");
    let o = bifilt(&[
        "rips-nerve",
        "--input",
        path_str(&data("tri.csv")),
        "--max-dim",
        "2",
        "--output",
        path_str(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("V ")).count(), 4);
    assert!(
        text.starts_with("SEMIFIL v1\ngrades: 0 2.8284271247461903\nscale_tag: none\nmax_dim: 2\n")
    );
    assert!(text.contains("V 3 b=1 d=inf merge=none simplex=0,1,2\n"));
}

#[test]
fn validate_doubled_c2() {
    let o = bifilt(&[
        "validate",
        "--input",
        path_str(&data("cocktail2.dist")),
        "--max-dim",
        "4",
        "--imax",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.ends_with("PASS\n"));
    assert!(!text.contains("XX"));
}

#[test]
fn validate_cech_and_max_points() {
    let o = bifilt(&[
        "validate",
        "--input",
        path_str(&data("square8.csv")),
        "--model",
        "cech",
        "--max-points",
        "5",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
}

#[test]
fn empty_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    let out = dir.path().join("x.semifil");
    let o = bifilt(&[
        "rips-nerve",
        "--input",
        path_str(&empty),
        "--output",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn parse_error_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "0,0\n1,oops\n").unwrap();
    let o = bifilt(&["stats", "--input", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2, column 3"), "{err}");
}

#[test]
fn triangle_violation_rejected_unless_allowed() {
    let dir = tempfile::tempdir().unwrap();
    let semi = dir.path().join("semi.dist");
    std::fs::write(&semi, "3\n1\n5\n1\n").unwrap();
    let o = bifilt(&["stats", "--input", path_str(&semi)]);
    assert_eq!(o.status.code(), Some(2));
    let o = bifilt(&["stats", "--input", path_str(&semi), "--allow-semimetric"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tampered_generators_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let semi = dir.path().join("c2.semifil");
    let o = bifilt(&[
        "rips-nerve",
        "--input",
        path_str(&data("cocktail2.dist")),
        "--output",
        path_str(&semi),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&semi).unwrap();
    let tampered = text.replacen("G depth=1", "G depth=2", 1);
    assert_ne!(text, tampered);
    std::fs::write(&semi, tampered).unwrap();
    let out = dir.path().join("c2.bifil");
    let o = bifilt(&[
        "bifiltrate",
        "--input",
        path_str(&semi),
        "--output",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("generator"));
}

#[test]
fn oracle_cap_exits_4() {
    let o = bifilt(&[
        "oracle",
        "--input",
        path_str(&data("square8.csv")),
        "--k",
        "1",
        "--t",
        "26",
        "--cell-cap",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn oracle_dump_lists_flags() {
    let o = bifilt(&[
        "oracle",
        "--input",
        path_str(&data("tri.csv")),
        "--k",
        "2",
        "--t",
        "1",
    ]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines.contains(&"[0,1] [0,1,2]"));
    assert!(lines.contains(&"[0,1,2]"));
}

#[test]
fn bifiltrate_exports_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let semi = dir.path().join("sq.semifil");
    let o = bifilt(&[
        "cech",
        "--input",
        path_str(&data("square8.csv")),
        "--max-dim",
        "3",
        "--output",
        path_str(&semi),
    ]);
    assert!(o.status.success());
    let out = dir.path().join("sq.bifil");
    let o = bifilt(&[
        "bifiltrate",
        "--input",
        path_str(&semi),
        "--output",
        path_str(&out),
        "--export",
        "scc",
        "--check",
        "2",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
    let scc = std::fs::read_to_string(dir.path().join("sq.bifil.scc")).unwrap();
    assert!(scc.starts_with("scc2020\n# axis k negated\n2\n"));
    let bifil = std::fs::read_to_string(&out).unwrap();
    let parsed = bifilt::format::parse_bifil(&bifil).unwrap();
    assert_eq!(bifilt::format::write_bifil(&parsed), bifil);
}

#[test]
fn polytope_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.semifil");
    let template = dir.path().join("t.csv");
    for p in ["1", "2", "inf", "3/2"] {
        let o = bifilt(&[
            "polytope",
            "--input",
            path_str(&data("square8.csv")),
            "--p",
            p,
            "--epsilon",
            "0.5",
            "--dump-template",
            path_str(&template),
            "--output",
            path_str(&out),
        ]);
        assert!(
            o.status.success(),
            "p={p}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let rows = std::fs::read_to_string(&template).unwrap();
        assert!(rows.lines().all(|l| l.split(' ').count() == 3));
    }
    let o = bifilt(&[
        "polytope",
        "--input",
        path_str(&data("square8.csv")),
        "--p",
        "2",
        "--exact-box",
        "--output",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = bifilt(&[
        "polytope",
        "--input",
        path_str(&data("square8.csv")),
        "--p",
        "inf",
        "--exact-box",
        "--output",
        path_str(&out),
    ]);
    assert!(o.status.success());
}

#[test]
fn stats_outputs() {
    let o = bifilt(&[
        "stats",
        "--input",
        path_str(&data("tri.csv")),
        "--kmax",
        "2",
    ]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("m_0                4\n"), "{text}");
    assert!(
        text.contains("nerve                  4         0         3         7\n"),
        "{text}"
    );
    let o = bifilt(&["stats", "--input", path_str(&data("tri.csv")), "--csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(
        text.starts_with("quantity,value\npoints,3\ngrades,2\nm_0,4\n"),
        "{text}"
    );
    assert!(text.contains("nerve.total,7\n"), "{text}");
    let o = bifilt(&[
        "stats",
        "--random-n",
        "20,40",
        "--radius",
        "0.2",
        "--seeds",
        "1,2",
    ]);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,r,seed,max_cliques,elapsed_ms");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("20,0.2,1,"));
}

#[test]
fn thread_cap_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_bifilt"))
        .args(["stats", "--input", path_str(&data("tri.csv"))])
        .env("BIFILT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
