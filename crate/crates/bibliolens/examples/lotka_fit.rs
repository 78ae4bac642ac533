//! Fit Lotka's law to an author-productivity histogram.
//!
//! The input is a `key,count` CSV: papers per author, number of authors.
//!
//!     cargo run --example lotka_fit [-- author_productivity.csv]

use bibliolens::productivity::{lotka_c_three_decimal, lotka_fit_fixed, lotka_fit_lsq, lotka_fit_two_point};
use bibliolens::{load_histogram, KeyKind};

fn main() -> bibliolens::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/author_productivity.csv").to_string());
    let observed = load_histogram(&path, KeyKind::Integer)?;

    let fit = lotka_fit_two_point(&observed)?;
    println!("two-point fit: c = {:.4}", fit.c);
    println!(
        "with 3-decimal logarithms: c = {:.4}",
        lotka_c_three_decimal(observed.get(1i64), observed.get(2i64))
    );
    println!("least squares on log-log: c = {:.4}", lotka_fit_lsq(&observed)?.c);

    let at = lotka_fit_fixed(&observed, 2.4)?;
    println!("\npapers  observed  expected(c=2.4)");
    for (n, o) in observed.int_bins() {
        println!("{n:>6}  {o:>8}  {:>15}", at.expected.get(n));
    }
    println!(
        "max |o - e| = {}, chi-square = {:.3} over {} bins",
        at.max_abs_dev, at.chi_square, at.chi_square_bins
    );
    Ok(())
}
