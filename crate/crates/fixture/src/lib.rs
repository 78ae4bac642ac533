//! Deterministic generator for the bibliolens reference corpus.
//!
//! The corpus is rebuilt from aggregate tables kept in `data/`. Where the
//! tables leave per-article detail open it is filled from seeded random
//! draws, so every run yields the same bytes. [`build`] returns the corpus
//! and the companion histogram files written to `crates/bibliolens/fixtures`.

use bibliolens::citation_profile::journal_frequency;
use bibliolens::corpus::{Article, Corpus};
use bibliolens::Histogram;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub mod authors;
pub mod data;
pub mod received;
pub mod refs;
pub mod text;

/// Each stage draws from its own stream so edits stay local.
const SEED_AUTHORS: u64 = 0x6d6a_6d01;
const SEED_TEXT: u64 = 0x6d6a_6d02;
const SEED_REFS: u64 = 0x6d6a_6d03;
const SEED_RECEIVED: u64 = 0x6d6a_6d04;

pub struct Fixture {
    pub corpus: Corpus,
    /// (file name, contents)
    pub files: Vec<(&'static str, String)>,
}

pub fn build_corpus() -> Corpus {
    let people = authors::build(&mut ChaCha8Rng::seed_from_u64(SEED_AUTHORS));
    let mut skel = people.articles.clone();
    // Articles in year order, the order within a year being the draw order.
    skel.sort_by_key(|s| s.year);
    let years: Vec<i32> = skel.iter().map(|s| s.year).collect();
    let sizes: Vec<usize> = skel.iter().map(|s| s.authors.len()).collect();
    let anonymous = skel
        .iter()
        .position(|s| s.authors.iter().any(|&a| people.authors[a].affiliation.is_none()))
        .expect("anonymous article");

    let content = text::build(&mut ChaCha8Rng::seed_from_u64(SEED_TEXT), &years, &sizes, anonymous);
    let mut references = refs::build(&mut ChaCha8Rng::seed_from_u64(SEED_REFS), &years).into_iter();
    let mut received = received::build(&mut ChaCha8Rng::seed_from_u64(SEED_RECEIVED), &years).into_iter();
    let mut keywords = content.keywords.into_iter();
    let mut titles = content.titles.into_iter();
    let mut funders = content.funders.into_iter();

    let mut serial = [0usize; 5];
    let articles = skel
        .iter()
        .zip(content.types)
        .map(|(s, article_type)| {
            let yi = data::year_index(s.year);
            serial[yi] += 1;
            Article {
                id: format!("mjm-{}-{:03}", s.year, serial[yi]),
                year: s.year,
                title: titles.next().unwrap(),
                article_type,
                keywords: keywords.next().unwrap(),
                authors: s.authors.iter().map(|&a| people.record(a)).collect(),
                references: references.next().unwrap(),
                received: received.next().unwrap(),
                funders: funders.next().unwrap(),
            }
        })
        .collect();
    Corpus {
        journal_name: data::JOURNAL.to_string(),
        year_start: data::YEARS[0],
        year_end: data::YEARS[4],
        articles,
    }
}

fn reference_ages_csv() -> String {
    let h = Histogram::from_pairs(
        "reference ages",
        data::rows(data::REFERENCE_AGES_TSV).map(|r| {
            let label = match r[0].trim() {
                "51 and above" => "51+".to_string(),
                other => other.to_string(),
            };
            (label, data::num(r[1]) as u64)
        }),
    );
    h.to_csv_string()
}

fn places_txt() -> String {
    let mut s = String::from("# place names counted in the keyword table\n");
    for (p, _) in data::PLACES {
        s.push_str(p);
        s.push('\n');
    }
    s
}

pub fn build() -> Fixture {
    let corpus = build_corpus();
    let productivity = Histogram::from_pairs("authors by papers", data::PRODUCTIVITY.iter().copied());
    let files = vec![
        ("corpus.json", corpus.to_json_string()),
        ("author_productivity.csv", productivity.to_csv_string()),
        ("journal_citations.csv", journal_frequency(&corpus).to_csv_string()),
        ("reference_ages.csv", reference_ages_csv()),
        ("regions.csv", received::regions_csv()),
        ("places.txt", places_txt()),
    ];
    Fixture { corpus, files }
}
