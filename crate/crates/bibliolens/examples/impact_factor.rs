//! Received citations, journal impact factors and who cites the journal.
//!
//!     cargo run --example impact_factor [-- corpus.json [regions.csv]]

use bibliolens::display::{percent, ratio_truncated};
use bibliolens::impact::{
    aggregate_impact, citing_countries, impact_factor, impact_factor_series, received_summary, ImpactOptions, RegionMap,
};
use bibliolens::load_corpus;

fn main() -> bibliolens::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json").to_string());
    let regions = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/regions.csv").to_string());
    let c = load_corpus(&path)?;

    let r = received_summary(&c);
    for (y, row) in &r.per_year {
        println!(
            "{y}: {:>3} of {:>3} articles cited ({}%), {} citations",
            row.cited_articles,
            row.articles,
            percent(row.cited_articles, row.articles, 2).unwrap_or_default(),
            row.citations
        );
    }

    println!("\ntwo-year impact factors (truncated to 3 decimals)");
    for (y, f) in impact_factor_series(&c, 2, ImpactOptions::default())? {
        println!(
            "{y}: {}/{} = {}",
            f.a,
            f.b,
            ratio_truncated(f.a as u128, f.b as u128, 3).unwrap()
        );
    }
    let agg = aggregate_impact(&c, c.year_start, c.year_end, c.year_end + 1, ImpactOptions::default())?;
    println!(
        "all {} articles, cited in {}: {}/{} = {}",
        agg.b,
        agg.target_year,
        agg.a,
        agg.b,
        ratio_truncated(agg.a as u128, agg.b as u128, 3).unwrap()
    );
    println!("raw IF for 89/235 = {:.5}", impact_factor(89, 235)?);

    let map = RegionMap::load(&regions)?;
    let cc = citing_countries(&c, Some(&map));
    println!("\ntop citing countries");
    for (k, n) in cc.single.ranked().into_iter().take(5) {
        println!("{k:>16}: {n}");
    }
    if let Some(h) = &cc.regions {
        println!("top citing regions");
        for (k, n) in h.ranked().into_iter().take(3) {
            println!("{k:>16}: {n}");
        }
    }
    println!(
        "{} multi-country citations, {} without a country",
        cc.multi.values().sum::<u64>(),
        cc.no_country
    );
    Ok(())
}
