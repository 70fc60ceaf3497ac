mod common;

use std::fs;

use common::{canonical, fixture, hopfcat, path_str};

#[test]
fn pair_groupoid_verifies_at_level_hopf() {
    let run = hopfcat(&["verify", path_str(&fixture("pair-2")), "--level", "hopf"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(run.stdout.ends_with("overall: PASS\n"));
}

#[test]
fn idempotent_candidate_fails_with_a_witness() {
    let run = hopfcat(&["verify", path_str(&fixture("idempotent-candidate-identity")), "--level", "hopf"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("antipode-left") && run.stdout.contains("basis [1]"), "{}", run.stdout);
}

#[test]
fn out_of_range_index_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hopfcat");
    let text = canonical("kz2").replace("mult * * * 1 1 0 1", "mult * * * 1 2 0 1");
    assert_ne!(text, canonical("kz2"));
    fs::write(&bad, text).unwrap();
    let run = hopfcat(&["verify", path_str(&bad)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line"), "{}", run.stderr);
}

#[test]
fn missing_file_and_kind_mismatch_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(hopfcat(&["verify", path_str(&dir.path().join("none"))]).code, 2);
    let out = dir.path().join("out");
    let run = hopfcat(&["transform", path_str(&fixture("kz2")), "undualize", path_str(&out)]);
    assert_eq!(run.code, 2);
    assert!(!out.exists());
}

#[test]
fn field_flag_must_match_the_header() {
    let run = hopfcat(&["verify", path_str(&fixture("kz2")), "--field", "fp:3", "-q"]);
    assert_eq!(run.code, 2);
    assert_eq!(hopfcat(&["verify", path_str(&fixture("kz2")), "--field", "q", "-q"]).code, 0);
}

#[test]
fn groupoids_linearize_over_the_requested_field() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c2.hopfcat");
    let run = hopfcat(&["transform", path_str(&fixture("cyclic-2")), "from-groupoid", path_str(&out), "--field", "fp:2", "-q"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(fs::read_to_string(&out).unwrap().contains("\nfield fp:2\n"));
    assert_eq!(hopfcat(&["verify", path_str(&out), "--field", "fp:2", "-q"]).code, 0);
}

#[test]
fn pair_groupoid_transforms_to_four_blocks_and_packs_to_dimension_four() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("p2.hopfcat");
    let packed = dir.path().join("p2.weak");
    assert_eq!(hopfcat(&["transform", path_str(&fixture("pair-2")), "from-groupoid", path_str(&cat), "-q"]).code, 0);
    let text = fs::read_to_string(&cat).unwrap();
    assert!(text.contains("kind hopf-category"));
    assert_eq!(text.lines().filter(|l| l.starts_with("dim ")).count(), 4);
    assert_eq!(hopfcat(&["transform", path_str(&cat), "pack", path_str(&packed), "-q"]).code, 0);
    let text = fs::read_to_string(&packed).unwrap();
    assert!(text.contains("kind weak-hopf") && text.contains("\ntotal-dim 4\n"));
    assert_eq!(hopfcat(&["verify", path_str(&packed), "-q"]).code, 0);
}

#[test]
fn transforms_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for op in ["dualize", "opposite", "coopposite", "opcop", "bimonoid", "pack"] {
        let a = dir.path().join(format!("{op}-a"));
        let b = dir.path().join(format!("{op}-b"));
        for out in [&a, &b] {
            let run = hopfcat(&["transform", path_str(&fixture("sweedler")), op, path_str(out), "-q"]);
            assert_eq!(run.code, 0, "{op}: {}", run.stderr);
        }
        assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap(), "{op}");
    }
}

#[test]
fn opcop_twice_is_the_identity_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let once = dir.path().join("once");
    let twice = dir.path().join("twice");
    assert_eq!(hopfcat(&["transform", path_str(&fixture("sweedler")), "opcop", path_str(&once), "-q"]).code, 0);
    assert_eq!(hopfcat(&["transform", path_str(&once), "opcop", path_str(&twice), "-q"]).code, 0);
    assert_eq!(fs::read(&twice).unwrap(), fs::read(fixture("sweedler")).unwrap());
}

#[test]
fn non_verifying_output_exits_3_without_writing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dual");
    let run = hopfcat(&["transform", path_str(&fixture("idempotent-candidate-kill-z")), "dualize", path_str(&out)]);
    assert_eq!(run.code, 3, "{}", run.stdout);
    assert!(!out.exists());
}

#[test]
fn report_files_mirror_the_items() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("kz3.jsonl");
    let run = hopfcat(&["verify", path_str(&fixture("kz3")), "--report", path_str(&report), "--seed", "5", "-q"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());
    let jsonl = fs::read_to_string(&report).unwrap();
    let text = fs::read_to_string(dir.path().join("kz3.jsonl.txt")).unwrap();
    let records: Vec<serde_json::Value> = jsonl.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len() + 2, text.lines().count());
    assert!(records.iter().all(|r| r["holds"] == true));
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("kz3.jsonl.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["seed"], 5);
    assert_eq!(manifest["exit_code"], 0);
    assert_eq!(manifest["inputs"][0]["kind"], "hopf-category");
    assert_eq!(manifest["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn manifest_digest_ignores_formatting() {
    let dir = tempfile::tempdir().unwrap();
    let messy = dir.path().join("messy.hopfcat");
    let text = canonical("kz2").replace("\nmult", "\n\n# comment\nmult");
    fs::write(&messy, text).unwrap();
    let digest = |path: &std::path::Path, name: &str| {
        let report = dir.path().join(name);
        assert_eq!(hopfcat(&["verify", path_str(path), "--report", path_str(&report), "-q"]).code, 0);
        let manifest = dir.path().join(format!("{name}.manifest.json"));
        let m: serde_json::Value = serde_json::from_str(&fs::read_to_string(manifest).unwrap()).unwrap();
        m["inputs"][0]["sha256"].as_str().unwrap().to_string()
    };
    assert_eq!(digest(&messy, "a"), digest(&fixture("kz2"), "b"));
}

#[test]
fn module_files_verify_against_their_base() {
    for name in ["kz2-mz", "sweedler-free"] {
        let run = hopfcat(&["verify", path_str(&fixture(name)), "-q"]);
        assert_eq!(run.code, 0, "{name}");
    }
    let run = hopfcat(&["analyze", path_str(&fixture("kz2-mz")), "coinvariants"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("coinvariants\nobject * dim "));
}

#[test]
fn bimonoid_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b");
    assert_eq!(hopfcat(&["transform", path_str(&fixture("sweedler")), "bimonoid", path_str(&b), "-q"]).code, 0);
    assert_eq!(hopfcat(&["verify", path_str(&b), "-q"]).code, 0);
}

#[test]
fn graded_files_verify() {
    for name in ["graded-z2-strong", "graded-z2-zero"] {
        assert_eq!(hopfcat(&["verify", path_str(&fixture(name)), "-q"]).code, 0, "{name}");
    }
}
