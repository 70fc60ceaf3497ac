use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::commands::Outcome;

/// Content hash of one canonicalized input.
#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub kind: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &Path, kind: &str, canonical: &str) -> Self {
        InputDigest {
            path: path.display().to_string(),
            kind: kind.to_string(),
            sha256: hex::encode(Sha256::digest(canonical.as_bytes())),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunManifest<'a> {
    pub command: &'a [String],
    pub inputs: &'a [InputDigest],
    pub seed: u64,
    pub report: String,
    pub report_text: String,
    pub exit_code: u8,
}

/// Write to a sibling temporary file, then rename over `path`.
pub fn atomic_write(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let name = path.file_name().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp = dir.join(format!(".{}.tmp-{}", name.to_string_lossy(), std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn write_report(path: &Path, argv: &[String], outcome: &Outcome, seed: u64) -> io::Result<()> {
    let text_path = sibling(path, ".txt");
    atomic_write(path, &outcome.report.to_jsonl())?;
    atomic_write(&text_path, &outcome.report.to_text())?;
    let manifest = RunManifest {
        command: argv,
        inputs: &outcome.inputs,
        seed,
        report: path.display().to_string(),
        report_text: text_path.display().to_string(),
        exit_code: outcome.exit,
    };
    let mut json = serde_json::to_string_pretty(&manifest).map_err(io::Error::other)?;
    json.push('\n');
    atomic_write(&sibling(path, ".manifest.json"), &json)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_of_the_canonical_text() {
        let d = InputDigest::new(Path::new("x"), "groupoid", "");
        assert_eq!(d.sha256, "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn sibling_appends() {
        assert_eq!(sibling(Path::new("a/r.jsonl"), ".txt"), PathBuf::from("a/r.jsonl.txt"));
    }
}
