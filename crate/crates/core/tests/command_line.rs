//! The installed binary: exit codes, byte-stable output, curve files and
//! the N_k cache.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_unisecant"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn shipped_curve_files_match_the_built_in_corpus() {
    for c in unisecant::fixtures::all_curves() {
        let loaded = unisecant::fixtures::CurveFile::load(&fixture(&c.name)).unwrap();
        assert_eq!(loaded.form, c.form, "{}", c.name);
        assert_eq!(loaded.flexes, c.flexes);
        assert_eq!(loaded.torsion, c.torsion);
    }
}

#[test]
fn unisecant_from_files() {
    let fermat = fixture("fermat");
    let (code, out) = run(&["unisecant", "--cubic", fermat.to_str().unwrap(), "--k", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""total":"297""#), "{out}");
    let sq = fixture("weierstrass-square");
    let (_, out) = run(&["unisecant", "--cubic", sq.to_str().unwrap()]);
    assert!(out.contains(r#""total":"306""#), "{out}");
}

#[test]
fn output_is_byte_stable() {
    let k9 = fixture("kubert9");
    let args = ["pencil-disc", "--cubic", k9.to_str().unwrap(), "--point", "0,0,1"];
    let (c1, a) = run(&args);
    let (c2, b) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(a.contains(r#""pattern":["9","1","1","1"]"#), "{a}");
}

#[test]
fn exit_codes() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let nodal = fixture("nodal-cubic");
    assert_eq!(run(&["flexes", "--curve", nodal.to_str().unwrap()]).0, 1);
    assert_eq!(run(&["flexes", "--curve", "/nonexistent.json"]).0, 2);
    assert_eq!(run(&["resolve", "--curve", nodal.to_str().unwrap(), "--point", "1,2"]).0, 2);
}

#[test]
fn tampered_claims_abort() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("kubert9")).unwrap();
    let bad = text.replace(r#""order": "9""#, r#""order": "7""#);
    assert_ne!(bad, text);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, bad).unwrap();
    let (code, out) = run(&["flexes", "--curve", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("fixture verification failed"), "{out}");
}

#[test]
fn nk_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nk.json");
    let c = cache.to_str().unwrap();
    let (code, first) = run(&["nk", "--max", "6", "--cache", c]);
    assert_eq!(code, 0);
    assert!(cache.exists());
    let (_, second) = run(&["nk", "--max", "6", "--cache", c]);
    assert_eq!(first, second);
    std::fs::write(&cache, "garbage").unwrap();
    let (code, third) = run(&["nk", "--max", "4", "--cache", c]);
    assert_eq!(code, 0);
    assert!(third.contains(r#"["4","620"]"#));
    // default location is the working directory
    let out = bin().current_dir(dir.path()).args(["nk", "--max", "3"]).output().unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("nk-cache.json").exists());
}

#[test]
fn remaining_subcommands() {
    let quartic = fixture("tricuspidal-quartic");
    let nodal = fixture("nodal-cubic");
    let q = quartic.to_str().unwrap();
    let n = nodal.to_str().unwrap();
    let (code, out) = run(&["genus", "--curve", q]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""genus":"0""#) && out.contains(r#""delta":"3""#), "{out}");
    let (_, out) = run(&["resolve", "--curve", n, "--point", "0,0,1"]);
    assert!(out.contains(r#""multiplicities":["2"]"#), "{out}");
    let (_, out) = run(&["intersect", "--curve", n, "--other", q]);
    assert!(out.contains(r#""total":"12""#), "{out}");
    let (_, out) = run(&["jinv", "--curve", fixture("fermat").to_str().unwrap()]);
    assert!(out.contains(r#""j":"0/1""#), "{out}");
    let (_, out) = run(&["bounds", "--deg-c", "3", "--deg-a", "5", "--curve", n]);
    assert!(out.contains(r#""genus_bound":"1/1""#) && out.contains(r#""holds":false"#), "{out}");
    let (code, out) = run(&["check-family", "--family", "fixture:moving-node"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""holds":true"#), "{out}");
    let (code, out) = run(&["torsion", "--k", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""by_level":{"1":"9","2":"27"}"#), "{out}");
    let (code, out) = run(&["selftest"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn family_files() {
    let dir = tempfile::tempdir().unwrap();
    let fam = unisecant::fixtures::moving_cusp_family();
    let doc = serde_json::json!({
        "t0": "0",
        "coeffs": fam.coeffs.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
    });
    let path = dir.path().join("family.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let (code, out) = run(&["check-family", "--family", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""holds":true"#), "{out}");
}
