//! Render every table for a corpus as Markdown, CSV or JSON.
//!
//!     cargo run --example full_report [-- corpus.json [md|csv|json]]

use bibliolens::content::load_places;
use bibliolens::impact::RegionMap;
use bibliolens::load_corpus;
use bibliolens::report::sections::{full_report, Options};
use bibliolens::report::{render, Format};

fn main() -> bibliolens::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus.json").to_string());
    let format = args.next().and_then(|f| Format::parse(&f)).unwrap_or(Format::Md);
    let c = load_corpus(&path)?;

    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let opts = Options {
        places: Some(load_places(format!("{fixtures}/places.txt"))?),
        regions: Some(RegionMap::load(format!("{fixtures}/regions.csv"))?),
        ..Options::default()
    };
    let tables = full_report(&c, &opts)?;
    let text = render(&tables, format);
    // Rendering is deterministic: the same tables give the same bytes.
    assert_eq!(text, render(&tables, format));
    print!("{text}");
    eprintln!("{} tables", tables.len());
    Ok(())
}
