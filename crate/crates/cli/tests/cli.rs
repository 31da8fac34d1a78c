use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_stringhom"));
    c.env_remove("STRINGHOM_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn hat_dimensions() {
    assert_eq!(json(&["homology", "hat", "--n", "3"])["dim_homology"], 4);
    assert_eq!(json(&["homology", "hat", "--n", "3"])["rank_boundary"], 1);
    assert_eq!(json(&["homology", "hat", "--signs", "iioo"])["dim_homology"], 0);
    assert_eq!(json(&["homology", "hat", "--n", "1"])["dim_homology"], 1);
}

#[test]
fn inf_stable_dimensions() {
    let stable = |n: &str, e: &str| json(&["homology", "inf", "--n", n, "--euler", e, "--trunc", "8"])["classes"][0]["stable_dimension"].clone();
    assert_eq!(stable("1", "0"), 1);
    assert_eq!(stable("1", "2"), 0);
    assert_eq!(stable("2", "1"), 1);
    assert_eq!(stable("2", "-1"), 1);
    let v = json(&["homology", "inf", "--n", "1", "--euler", "0", "--trunc", "8"]);
    let c = &v["classes"][0];
    assert_eq!((c["n"].clone(), c["euler"].clone(), c["bound"].clone(), c["stable"].clone()), (1.into(), 0.into(), 8.into(), true.into()));
    assert_eq!(c["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn quotient_and_sutures() {
    let q = json(&["quotient", "--n", "4"]);
    assert_eq!((q["catalan"].clone(), q["bypass_rank"].clone(), q["quotient_dim"].clone()), (14.into(), 6.into(), 8.into()));
    assert_eq!(json(&["sutures", "--n", "3"])["count"], 5);
}

#[test]
fn basis_accepts_leading_hyphen() {
    let v = json(&["basis", "--word", "-+"]);
    assert_eq!(v["n"], 3);
    assert_eq!(v["annihilation_check"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [&["homology", "hat", "--n", "4"][..], &["homology", "inf", "--n", "2", "--trunc", "5"], &["quotient", "--n", "4", "--format", "csv"]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn cache_hits_match_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    for args in [&["homology", "hat", "--n", "4"][..], &["homology", "inf", "--n", "2", "--trunc", "6"], &["quotient", "--n", "3"], &["sutures", "--n", "3"]] {
        let fresh = run(args).stdout;
        let mut with_cache: Vec<&str> = args.to_vec();
        with_cache.extend(["--cache-dir", cache]);
        let first = run(&with_cache).stdout;
        let files = fs::read_dir(cache).unwrap().count();
        let second = bin().args(&with_cache).arg("-v").output().unwrap();
        assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
        assert_eq!(fs::read_dir(cache).unwrap().count(), files);
        assert_eq!(first, fresh);
        assert_eq!(second.stdout, fresh);
    }
}

#[test]
fn environment_selects_cache_and_flag_wins() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let out = bin().env("STRINGHOM_CACHE", env_dir.path()).args(["homology", "hat", "--n", "2"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(fs::read_dir(env_dir.path()).unwrap().count(), 1);
    let out = bin()
        .env("STRINGHOM_CACHE", env_dir.path())
        .args(["homology", "hat", "--n", "3", "--cache-dir"])
        .arg(flag_dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(fs::read_dir(env_dir.path()).unwrap().count(), 1);
    assert_eq!(fs::read_dir(flag_dir.path()).unwrap().count(), 1);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["homology", "hat", "--n", "3", "--cache-dir", dir.path().to_str().unwrap()];
    let good = run(&args).stdout;
    let entry = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    fs::write(&entry, "{ truncated").unwrap();
    assert_eq!(run(&args).stdout, good);
}

#[test]
fn verify_passes_and_fault_is_caught() {
    assert!(run(&["verify", "--suite", "w-homotopy", "--signs", "iioo"]).status.success());
    assert!(run(&["verify", "--n", "3", "--trunc", "2", "--euler", "4"]).status.success());
    let out = run(&["verify", "--suite", "boundary-squared", "--n", "3", "--inject-fault", "flipped-crossing-test"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL boundary-squared"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["passed"] == false && c["counterexample"].is_string()));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["homology", "hat"][..],
        &["homology", "hat", "--n", "0"],
        &["homology", "hat", "--n", "2", "--signs", "ioio"],
        &["homology", "hat", "--signs", "iiox"],
        &["homology", "inf", "--n", "2", "--euler", "0"],
        &["homology", "inf", "--n", "1", "--trunc", "1"],
        &["homology", "inf", "--signs", "iioo"],
        &["basis", "--word", "+x"],
        &["verify", "--suite", "nonsense"],
        &["frobnicate"],
        &["homology", "hat", "--n", "2", "--format", "xml"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn export_writes_sparse_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let v = json(&["export", "--n", "3", "--out-dir", out]);
    assert_eq!(v["files"][0]["nonzeros"], 3);
    let m = read(dir.path(), "hat_boundary.txt");
    let lines: Vec<&str> = m.lines().collect();
    assert_eq!(lines[0], "6 6");
    assert_eq!(lines.len(), 4);
    let basis = read(dir.path(), "hat_basis.txt");
    assert_eq!(basis.lines().count(), 6);
    assert_eq!(basis.lines().next(), Some("0 [1,3,5]"));

    let one = tempfile::tempdir().unwrap();
    json(&["export", "--n", "1", "--out-dir", one.path().to_str().unwrap()]);
    assert_eq!(read(one.path(), "hat_boundary.txt"), "1 1\n");
}

#[test]
fn export_is_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        json(&["export", "--n", "4", "--euler", "-1", "--trunc", "3", "--out-dir", d.path().to_str().unwrap()]);
    }
    let names = ["hat_boundary.txt", "hat_basis.txt", "inf_boundary_e-1_m3.txt", "inf_basis_e-1_m3.txt"];
    for name in names {
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name}");
    }
    assert_eq!(fs::read_dir(a.path()).unwrap().count(), names.len());
    assert_eq!(read(a.path(), "inf_basis_e-1_m3.txt").lines().count(), 24 * 4);
}

#[test]
fn csv_has_fixed_columns() {
    let out = String::from_utf8(run(&["homology", "inf", "--n", "1", "--trunc", "6", "--format", "csv"]).stdout).unwrap();
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,euler,trunc,dim_m2,dim_m1,dim_m,quotient_m1,quotient_m,stable_dimension,stable,witnesses"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn jobs_flag_is_accepted() {
    assert_eq!(json(&["--jobs", "2", "homology", "hat", "--n", "5"])["dim_homology"], 16);
}
