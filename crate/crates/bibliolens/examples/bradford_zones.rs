//! Bradford zones over a journal-frequency list, with an optional SVG plot.
//!
//!     cargo run --example bradford_zones [-- journal_citations.csv [zones] [plot.svg]]

use bibliolens::citation_profile::bradford_partition;
use bibliolens::report::line_chart;
use bibliolens::report::sections::bradford_chart;
use bibliolens::{load_histogram, KeyKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/journal_citations.csv").to_string());
    let k: usize = args.next().map_or(3, |s| s.parse().expect("zone count"));
    let freqs = load_histogram(&path, KeyKind::Text)?;

    let p = bradford_partition(&freqs, k)?;
    println!(
        "{} journals, {} citations, {k} zones",
        p.ranked.len(),
        p.total_citations
    );
    for (i, z) in p.zones.iter().enumerate() {
        println!(
            "zone {}: {:>5} journals  {:>5} citations  ratio {:.3}",
            i + 1,
            z.journal_count,
            z.citation_count,
            p.ratios[i]
        );
    }
    println!("multiplier b = {:.4}", p.b_estimate);
    println!("core journals:");
    for t in p.zones[0].titles.iter().take(5) {
        println!("  {t}");
    }

    if let Some(svg) = args.next() {
        std::fs::write(&svg, line_chart(&bradford_chart(&p)))?;
        println!("plot written to {svg}");
    }
    Ok(())
}
