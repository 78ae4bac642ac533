//! The committed fixture files must match the generator output.
//! Run with `UPDATE_FIXTURE=1` to rewrite them.

use std::path::PathBuf;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../bibliolens/fixtures")
}

#[test]
fn committed_fixtures_are_current() {
    let fx = bibliolens_fixture::build();
    let dir = fixture_dir();
    let update = std::env::var_os("UPDATE_FIXTURE").is_some();
    let mut stale = Vec::new();
    for (name, contents) in &fx.files {
        let path = dir.join(name);
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, contents).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(contents.as_str()) {
            stale.push(*name);
        }
    }
    assert!(
        stale.is_empty(),
        "stale fixtures {stale:?}; rerun with UPDATE_FIXTURE=1"
    );
}

#[test]
fn generation_is_deterministic() {
    let a = bibliolens_fixture::build();
    let b = bibliolens_fixture::build();
    assert_eq!(a.files, b.files);
}
