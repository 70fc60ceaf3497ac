//! Shipped fixture files must equal the canonical serialization of the library
//! fixtures. Run with `HOPFCAT_BLESS=1` to regenerate them.

mod common;

use std::fs;

use common::{fixture, fixture_documents};
use hopfcat::format;

#[test]
fn shipped_fixtures_are_canonical() {
    let bless = std::env::var_os("HOPFCAT_BLESS").is_some();
    let mut stale = Vec::new();
    for (name, doc) in fixture_documents() {
        let text = format::write(&doc);
        let path = fixture(&name);
        if bless {
            fs::write(&path, &text).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(on_disk) if on_disk == text => {}
            _ => stale.push(name),
        }
    }
    assert!(stale.is_empty(), "stale fixtures (rerun with HOPFCAT_BLESS=1): {stale:?}");
}

#[test]
fn shipped_fixtures_reparse_to_the_same_document() {
    for (name, doc) in fixture_documents() {
        let read = format::read(&fixture(&name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(format::write(&read), format::write(&doc), "{name}");
    }
}
