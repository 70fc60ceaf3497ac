#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use hopfcat::fixtures;
use hopfcat::format::{self, Document};
use hopfcat::fundamental::{randomized_free_module, HopfModuleData};
use hopfcat::Field;

pub const Q: Field = Field::Rational;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.hopfcat"))
}

/// Every shipped fixture file, by name, in canonical form.
pub fn fixture_documents() -> Vec<(String, Document)> {
    let mut out: Vec<(String, Document)> = vec![
        ("pair-2".into(), Document::Groupoid(fixtures::pair_groupoid(2))),
        ("pair-3".into(), Document::Groupoid(fixtures::pair_groupoid(3))),
        ("disjoint".into(), Document::Groupoid(fixtures::disjoint_groupoid())),
        ("cyclic-2".into(), Document::Groupoid(fixtures::cyclic_group(2))),
        ("graded-z2-strong".into(), Document::GradedHopf(fixtures::graded_z2(Q, false))),
        ("graded-z2-zero".into(), Document::GradedHopf(fixtures::graded_z2(Q, true))),
    ];
    let hopf = [
        ("kz2", fixtures::group_algebra(2, Q)),
        ("kz3", fixtures::group_algebra(3, Q)),
        ("sweedler", fixtures::sweedler(Q)),
    ];
    for (name, a) in &hopf {
        out.push((name.to_string(), Document::HopfCategory(a.clone())));
        out.push((format!("{name}-stripped"), Document::HopfCategory(a.strip_antipode())));
    }
    let idem = fixtures::idempotent_bialgebra(Q);
    out.push(("idempotent".into(), Document::HopfCategory(idem.clone())));
    for (name, s) in fixtures::idempotent_candidates(Q) {
        let cand = idem.clone().with_antipode(vec![s]).expect("shape");
        out.push((format!("idempotent-candidate-{name}"), Document::HopfCategory(cand)));
    }
    let kz2 = Arc::new(fixtures::group_algebra(2, Q));
    let mz = HopfModuleData::m_z(kz2, 0).expect("m_z");
    out.push(("kz2-mz".into(), Document::HopfModule { base: "kz2.hopfcat".into(), data: mz }));
    let sw = Arc::new(fixtures::sweedler(Q));
    let free = randomized_free_module(sw, 7).expect("free module");
    out.push(("sweedler-free".into(), Document::HopfModule { base: "sweedler.hopfcat".into(), data: free }));
    out
}

pub fn canonical(name: &str) -> String {
    let doc = fixture_documents().into_iter().find(|(n, _)| n == name).expect("known fixture").1;
    format::write(&doc)
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn hopfcat(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcat")).args(args).output().expect("spawn hopfcat");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}
