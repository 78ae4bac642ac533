//! Shared helpers for the integration tests.
#![allow(dead_code)]

pub mod props;

use std::path::PathBuf;
use std::sync::OnceLock;

use bibliolens::{load_corpus, load_histogram, Corpus, Histogram, KeyKind};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| load_corpus(fixture("corpus.json")).expect("fixture corpus loads"))
}

pub fn productivity() -> Histogram {
    load_histogram(fixture("author_productivity.csv"), KeyKind::Integer).unwrap()
}

pub fn journals() -> Histogram {
    load_histogram(fixture("journal_citations.csv"), KeyKind::Text).unwrap()
}

pub fn reference_ages() -> Histogram {
    load_histogram(fixture("reference_ages.csv"), KeyKind::Text).unwrap()
}

/// Histogram whose bins follow a₁/nᶜ for n = 1..=max_n, rounded half-up.
pub fn power_law(a1: u64, c: f64, max_n: i64) -> Histogram {
    Histogram::from_pairs(
        "synthetic",
        (1..=max_n).map(|n| (n, (a1 as f64 / (n as f64).powf(c) + 0.5).floor() as u64)),
    )
}
