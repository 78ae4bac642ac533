//! Load a corpus file and print articles, authorships and authors per year.
//!
//!     cargo run --example corpus_overview [-- path/to/corpus.json]

use bibliolens::productivity::{articles_per_year, authorships_per_year};
use bibliolens::{load_corpus, unique_authors};

fn main() -> bibliolens::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json").to_string());
    let c = load_corpus(&path)?;
    println!(
        "{}: {} articles, {}..={}",
        c.journal_name,
        c.articles.len(),
        c.year_start,
        c.year_end
    );

    let articles = articles_per_year(&c);
    let authorships = authorships_per_year(&c);
    println!("year  articles  share%  authorships");
    for row in &articles.rows {
        println!(
            "{}  {:>8}  {:>6.2}  {:>11}",
            row.year,
            row.count,
            row.percent,
            authorships.get(row.year)
        );
    }
    println!("mean articles per year: {:.1}", articles.mean);

    let authors = unique_authors(&c)?;
    println!(
        "{} unique authors hold {} authorships",
        authors.len(),
        authors.values().sum::<u64>()
    );
    Ok(())
}
