//! Outgoing references: volume, formats, self-citation and languages.
//!
//!     cargo run --example reference_profile [-- corpus.json]

use bibliolens::citation_profile::{
    format_distribution, language_distribution, publication_year_matrix, references_per_year, refs_per_article_ranges,
    self_citation, DEFAULT_REF_EDGES,
};
use bibliolens::display::percent;
use bibliolens::load_corpus;

fn main() -> bibliolens::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json").to_string());
    let c = load_corpus(&path)?;

    let refs = references_per_year(&c);
    println!("references per year: {:?}", refs.counts.int_bins().collect::<Vec<_>>());

    let ranges = refs_per_article_ranges(&c, &DEFAULT_REF_EDGES)?;
    println!("\nreferences per article");
    for b in &ranges.buckets {
        println!("{:>7}: {}", b.label(), b.count);
    }

    let formats = format_distribution(&c);
    println!("\nformats");
    for (k, &v) in &formats.total {
        println!(
            "{:>18}: {v:>5} ({}%)",
            k.label(),
            percent(v, formats.grand_total, 2).unwrap_or_default()
        );
    }

    let s = self_citation(&c, &c.journal_name);
    println!("\nself-citation of {}", s.journal);
    for (y, r) in &s.per_year {
        println!(
            "{y}: {} of {} ({}%) in {} articles",
            r.self_citations,
            r.references,
            percent(r.self_citations, r.references, 2).unwrap_or_default(),
            r.citing_articles
        );
    }
    let t = s.total;
    println!(
        "all : {} of {} ({}%)",
        t.self_citations,
        t.references,
        percent(t.self_citations, t.references, 2).unwrap_or_default()
    );

    let langs = language_distribution(&c);
    println!(
        "\n{} references in other languages across {} titles",
        langs.non_default_total(),
        langs.non_default_titles()
    );

    // Everything published before 1990 shares one row.
    let m = publication_year_matrix(&c, Some(1990));
    println!("\nmost cited publication years");
    let mut rows: Vec<_> = m.row_totals.iter().collect();
    rows.sort_by(|a, b| b.1.cmp(a.1));
    for (y, n) in rows.into_iter().take(5) {
        let y = y.map_or("undated".to_string(), |y| y.to_string());
        println!("{y:>8}: {n}");
    }
    Ok(())
}
