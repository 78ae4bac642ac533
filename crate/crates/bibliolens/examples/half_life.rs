//! Age profile and half-life of cited references, from a labelled age
//! histogram ("Up to 1", "2", ..., "31 - 40", "51+", "Undated") or from a
//! corpus.
//!
//!     cargo run --example half_life [-- reference_ages.csv | corpus.json]

use bibliolens::citation_profile::{age_profile, AgeProfile};
use bibliolens::display::percent;
use bibliolens::{load_corpus, load_histogram, KeyKind};

fn main() -> bibliolens::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/reference_ages.csv").to_string());
    let p = if path.ends_with(".json") {
        age_profile(&load_corpus(&path)?)
    } else {
        AgeProfile::from_labelled(&load_histogram(&path, KeyKind::Text)?)?
    };

    let all = p.total();
    println!("{} references, {} dated, {} undated", all, p.dated, p.undated);
    for age in [5, 10, 11, 20] {
        let n = p.cumulative_at(age);
        println!(
            "up to {age:>2} years: {n:>5} ({}% of all)",
            percent(n, all, 2).unwrap_or_default()
        );
    }
    match (p.half_life_integer, p.half_life_interpolated) {
        (Some(h), Some(x)) => println!("half-life: {h} years (interpolated {x:.2})"),
        _ => println!("no dated references"),
    }
    Ok(())
}
