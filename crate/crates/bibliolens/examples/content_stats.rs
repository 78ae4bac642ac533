//! Keywords, place names among them, title lengths and research funding.
//!
//!     cargo run --example content_stats [-- corpus.json [places.txt]]

use bibliolens::content::{funding_summary, keyword_frequency, keywords_per_article, load_places, title_word_stats};
use bibliolens::load_corpus;

fn main() -> bibliolens::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json").to_string());
    let places_path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/places.txt").to_string());
    let c = load_corpus(&path)?;
    let places = load_places(&places_path)?;

    let kw = keyword_frequency(&c, Some(&places));
    println!("{} distinct keywords, {} uses", kw.keywords.len(), kw.keywords.total());
    for (k, n) in kw.keywords.ranked().into_iter().take(5) {
        println!("  {k}: {n}");
    }
    if let Some(p) = &kw.places {
        let shown: Vec<String> = p.ranked().into_iter().map(|(k, n)| format!("{k} {n}")).collect();
        println!("place names: {}", shown.join(", "));
    }

    let per = keywords_per_article(&c);
    println!("\nkeywords per article: mean {:.4}", per.mean);

    let t = title_word_stats(&c);
    println!(
        "title words: mean {:.3}, shortest {:?}, longest {:?}, most common {:?} (words, articles)",
        t.mean, t.min, t.max, t.mode
    );

    let f = funding_summary(&c);
    println!("\nfunded originals");
    for (y, r) in &f.per_year {
        println!(
            "{y}: {} of {} ({:.1}%)",
            r.funded_originals,
            r.originals,
            100.0 * r.ratio()
        );
    }
    println!("{} funders named", f.funders.len());
    Ok(())
}
