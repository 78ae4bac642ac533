//! Co-authorship patterns: degree of collaboration, collaboration classes
//! and the split between home and foreign authors.
//!
//!     cargo run --example collaboration [-- corpus.json [home-country]]

use bibliolens::collaboration::{
    coauthorship_histogram, collaboration_classes, country_pair_matrix, country_split, degree_of_collaboration,
};
use bibliolens::display::percent;
use bibliolens::load_corpus;

fn main() -> bibliolens::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json").to_string());
    let home = args.next().unwrap_or_else(|| "Malaysia".to_string());
    let c = load_corpus(&path)?;

    let d = degree_of_collaboration(&c)?;
    println!("year  single  multi  C");
    for (y, row) in &d.per_year {
        println!("{y}  {:>6}  {:>5}  {:.4}", row.ns, row.nm, row.c);
    }
    println!("all   {:>6}  {:>5}  {:.4}", d.total.ns, d.total.nm, d.total.c);

    let sizes = coauthorship_histogram(&c).total;
    let n = sizes.total();
    println!("\nauthors per article");
    for (k, v) in sizes.int_bins() {
        println!("{k:>3}: {v:>4} ({}%)", percent(v, n, 2).unwrap_or_default());
    }

    let classes = collaboration_classes(&c).total;
    println!(
        "\nsingle {}, same affiliation {}, different affiliations {}, different countries {}",
        classes.single, classes.same_affiliation, classes.diff_affiliation_same_country, classes.diff_countries
    );

    let split = country_split(&c, &home)?;
    let t = split.total;
    println!(
        "\n{home}: {} home and {} foreign authorships; {} purely home, {} mixed, {} purely foreign articles",
        t.home_authorships, t.foreign_authorships, t.purely_home, t.mixed, t.purely_foreign
    );
    println!("\ncountry sets across articles");
    for (set, n) in country_pair_matrix(&c) {
        println!("{n:>3}  {}", set.join(" + "));
    }
    Ok(())
}
