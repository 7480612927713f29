//! Runs every example through cargo and checks the lines that matter.

use std::process::Command;

fn run_example(name: &str, args: &[&str]) -> String {
    let out = Command::new(env!("CARGO"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(["run", "-q", "--example", name, "--"])
        .args(args)
        .output()
        .expect("cargo runs");
    assert!(
        out.status.success(),
        "{name} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_tiles() {
    let out = run_example("enumerate_tiles", &[]);
    assert!(out.contains("rank 5: 325 candidates, 100 from families, 100 tile F2^5"));
    assert!(out.contains("rank 6: 57 candidates, 36 from families, 36 tile F2^6"));
}

#[test]
fn find_complement() {
    let out = run_example("find_complement", &[]);
    assert!(out.contains("verified: true"));
    assert!(out.contains("{e1+e2, e3+e4, e1+e3}: None"));
    assert!(out.contains("ball(7): |C| = 16, minimum distance 3"));
}

#[test]
fn canonical_form() {
    let out = run_example("canonical_form", &[]);
    assert!(out.contains("D2 -> D1 by"));
    assert!(out.contains("stabilizer 6, orbit 4, 4!/stabilizer = 4"));
}

#[test]
fn classify_rank() {
    let out = run_example("classify_rank", &[]);
    assert!(out.trim_end().ends_with("15 classes"));
    let detail = run_example("classify_rank", &["6"]);
    assert_eq!(
        detail.lines().filter(|l| l.starts_with("    r=6;")).count(),
        36
    );
}

#[test]
fn audit_catalog() {
    let out = run_example("audit_catalog", &[]);
    assert!(out.contains("labeled         193"));
    assert!(out.contains("distinct        192"));
    let md = run_example("audit_catalog", &["markdown"]);
    assert!(md.starts_with("# Catalog audit"));
}

#[test]
fn cycle_notation() {
    let out = run_example("cycle_notation", &[]);
    assert!(out.contains("(25)(35)   right-to-left (253)    left-to-right (235)"));
}
