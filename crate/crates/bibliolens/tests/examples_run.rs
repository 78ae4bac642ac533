//! Every example builds and runs against the committed fixtures.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    let bin = PathBuf::from(env!("CARGO_BIN_EXE_bibliolens"));
    let dir = bin.parent().unwrap().join("examples");
    dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str, args: &[&str]) -> String {
    let path = example(name);
    assert!(path.exists(), "example {name} was not built at {}", path.display());
    let out = Command::new(&path).args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{name} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn corpus_overview() {
    let out = run("corpus_overview", &[]);
    assert!(out.contains("580 articles"));
    assert!(out.contains("1435 unique authors hold 2177 authorships"));
}

#[test]
fn lotka_fit() {
    let out = run("lotka_fit", &[]);
    assert!(out.contains("two-point fit: c = 2.4097"));
    assert!(out.contains("     2       204              205"));
}

#[test]
fn collaboration() {
    let out = run("collaboration", &[]);
    assert!(out.contains("all       56    524  0.9034"));
    assert!(out.contains("1982 home and 195 foreign authorships"));
}

#[test]
fn reference_profile() {
    let out = run("reference_profile", &[]);
    assert!(out.contains("all : 173 of 6958 (2.49%)"));
    assert!(out.contains("25 references in other languages across 19 titles"));
}

#[test]
fn bradford_zones_with_plot() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("bradford.svg");
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/journal_citations.csv");
    let out = run("bradford_zones", &[fixtures, "3", svg.to_str().unwrap()]);
    assert!(out.contains("zone 1:    43 journals   1990 citations"));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn half_life() {
    let out = run("half_life", &[]);
    assert!(out.contains("half-life: 9 years"));
    assert!(out.contains("up to 11 years:  4444 (63.87% of all)"));
    let from_corpus = run(
        "half_life",
        &[concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json")],
    );
    assert!(from_corpus.contains("6958 references"));
}

#[test]
fn impact_factor() {
    let out = run("impact_factor", &[]);
    for line in [
        "2006: 110/241 = 0.456",
        "2008: 75/204 = 0.367",
        "335/580 = 0.577",
        "East Asia: 258",
    ] {
        assert!(out.contains(line), "missing {line:?}");
    }
}

#[test]
fn content_stats() {
    let out = run("content_stats", &[]);
    assert!(out.contains("keywords per article: mean 3.3379"));
    assert!(out.contains("title words: mean 10.797"));
    assert!(out.contains("Malaysia 47"));
}

#[test]
fn full_report_formats() {
    let md = run("full_report", &[]);
    assert!(md.starts_with("### "));
    let json = run(
        "full_report",
        &[concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json"), "json"],
    );
    serde_json::from_str::<serde_json::Value>(&json).expect("json output parses");
}

#[test]
fn build_in_code() {
    let out = run("build_in_code", &[]);
    assert!(out.contains("a2: DiffCountries"));
    assert!(out.contains("C = 2/3 = 0.667"));
}
