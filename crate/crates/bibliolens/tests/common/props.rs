//! Property checks shared by the proptest suite and the acceptance run.

use bibliolens::citation_profile::bradford_partition;
use bibliolens::display::ratio_truncated;
use bibliolens::impact::{impact_factor, impact_factor_series, ImpactOptions};
use bibliolens::productivity::lotka_fit_two_point;
use bibliolens::{normalize_name, Corpus, Histogram, KeyKind};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::power_law;

pub type Check = Result<(), TestCaseError>;

/// (a1, c, largest n) for a synthetic power-law histogram.
pub fn lotka_inputs() -> impl Strategy<Value = (u64, f64, i64)> {
    (500u64..20_000, 1.5f64..3.5, 2i64..30)
}

/// The two-point fit recovers the generating exponent.
pub fn lotka_recovers((a1, c, max_n): (u64, f64, i64)) -> Check {
    let fit = lotka_fit_two_point(&power_law(a1, c, max_n)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!((fit.c - c).abs() <= 0.05, "a1 {} c {} fitted {}", a1, c, fit.c);
    prop_assert_eq!(fit.expected.get(1i64), a1);
    Ok(())
}

/// Citation counts per journal and a zone count that fits them.
pub fn bradford_inputs() -> impl Strategy<Value = (Vec<u64>, usize)> {
    (prop::collection::vec(1u64..500, 2..300), 2usize..6).prop_map(|(counts, k)| {
        let k = k.min(counts.len());
        (counts, k)
    })
}

/// Each zone boundary overshoots its share m·T/k by less than the largest count.
pub fn bradford_balanced((counts, k): (Vec<u64>, usize)) -> Check {
    let h = Histogram::from_pairs(
        "journals",
        counts.iter().enumerate().map(|(i, &n)| (format!("J{i:04}"), n)),
    );
    let b = bradford_partition(&h, k).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(b.zones.len(), k);
    let total: u64 = counts.iter().sum();
    let max = *counts.iter().max().unwrap() as i128;
    prop_assert_eq!(b.zones.iter().map(|z| z.citation_count).sum::<u64>(), total);
    prop_assert_eq!(b.zones.iter().map(|z| z.journal_count).sum::<usize>(), counts.len());
    let mut cum = 0i128;
    for (m, z) in b.zones.iter().enumerate().take(k - 1) {
        prop_assert!(z.journal_count > 0);
        cum += z.citation_count as i128;
        // cum − (m+1)·T/k scaled by k to stay in integers.
        let over = cum * k as i128 - (m as i128 + 1) * total as i128;
        prop_assert!(
            over >= 0 && over < max * k as i128,
            "zone {} overshoot {}/{}",
            m + 1,
            over,
            k
        );
    }
    prop_assert!(b.zones[k - 1].journal_count > 0);
    Ok(())
}

pub fn impact_inputs() -> impl Strategy<Value = (u64, u64, u64)> {
    (0u64..100_000, 1u64..100_000, 1u64..1000)
}

/// Scaling numerator and denominator together leaves the factor and its display unchanged.
pub fn impact_scale_invariant((a, b, s): (u64, u64, u64)) -> Check {
    prop_assert_eq!(impact_factor(a, b).unwrap(), impact_factor(a * s, b * s).unwrap());
    prop_assert_eq!(
        ratio_truncated(a as u128, b as u128, 3),
        ratio_truncated((a * s) as u128, (b * s) as u128, 3)
    );
    Ok(())
}

/// `copies` copies of every article, with fresh ids.
pub fn replicate(c: &Corpus, copies: usize) -> Corpus {
    let mut out = c.clone();
    out.articles = (0..copies)
        .flat_map(|k| {
            c.articles.iter().map(move |a| {
                let mut a = a.clone();
                a.id = format!("{}-{k}", a.id);
                a
            })
        })
        .collect();
    out
}

/// Replicating a corpus leaves every impact factor in the series unchanged.
pub fn corpus_impact_scale_invariant(c: &Corpus, copies: usize, window: u32) -> Check {
    let opts = ImpactOptions::default();
    let base = impact_factor_series(c, window, opts).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let scaled =
        impact_factor_series(&replicate(c, copies), window, opts).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(base.len(), scaled.len());
    for (y, f) in &base {
        let g = &scaled[y];
        prop_assert_eq!((g.a, g.b), (f.a * copies as u64, f.b * copies as u64));
        prop_assert_eq!(g.value, f.value);
    }
    Ok(())
}

/// Text keys with the characters CSV has to quote. The reader trims
/// fields, so keys start and end with a non-space.
pub fn text_histogram_inputs() -> impl Strategy<Value = Vec<(String, u64)>> {
    prop::collection::vec(
        ("[A-Za-z]([A-Za-z0-9 ,.\"'()&-]{0,30}[A-Za-z0-9.)])?", 0u64..10_000),
        0..50,
    )
}

/// Any printable keys, surrounding spaces included.
pub fn loose_histogram_inputs() -> impl Strategy<Value = Vec<(String, u64)>> {
    prop::collection::vec(("[ -~]{0,30}", 0u64..10_000), 0..50)
}

pub fn int_histogram_inputs() -> impl Strategy<Value = Vec<(i64, u64)>> {
    prop::collection::vec((-1000i64..1000, 0u64..10_000), 0..50)
}

fn round_trip(h: &Histogram, kind: KeyKind) -> Check {
    let text = h.to_csv_string();
    let back =
        Histogram::read_csv("round trip", text.as_bytes(), kind).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(back.iter().collect::<Vec<_>>(), h.iter().collect::<Vec<_>>());
    Ok(())
}

/// Writing then reading a histogram gives back the same bins.
pub fn text_histogram_round_trips(pairs: Vec<(String, u64)>) -> Check {
    round_trip(&Histogram::from_pairs("text", pairs), KeyKind::Text)
}

/// After one trip through CSV the written bytes no longer change.
pub fn histogram_csv_is_fixed_point(pairs: Vec<(String, u64)>) -> Check {
    let first = Histogram::from_pairs("loose", pairs).to_csv_string();
    let read = |t: &str| Histogram::read_csv("loose", t.as_bytes(), KeyKind::Text);
    let second = read(&first)
        .map_err(|e| TestCaseError::fail(e.to_string()))?
        .to_csv_string();
    let third = read(&second)
        .map_err(|e| TestCaseError::fail(e.to_string()))?
        .to_csv_string();
    prop_assert_eq!(second, third);
    Ok(())
}

pub fn int_histogram_round_trips(pairs: Vec<(i64, u64)>) -> Check {
    round_trip(&Histogram::from_pairs("int", pairs), KeyKind::Integer)
}

pub fn name_inputs() -> impl Strategy<Value = String> {
    prop_oneof!["[A-Za-z .,\\t-]{0,40}", any::<String>(),]
}

/// Normalizing a normalized name changes nothing.
pub fn name_idempotent(raw: String) -> Check {
    let once = normalize_name(&raw);
    prop_assert_eq!(normalize_name(&once), once);
    Ok(())
}
