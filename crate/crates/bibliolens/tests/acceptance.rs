//! One pass/fail line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use bibliolens::citation_profile::{bradford_partition, self_citation, AgeProfile};
use bibliolens::collaboration::degree_of_collaboration;
use bibliolens::content::{keywords_per_article, title_word_stats};
use bibliolens::display::{percent, ratio_truncated};
use bibliolens::impact::{aggregate_impact, impact_factor_for, ImpactOptions};
use bibliolens::productivity::{articles_per_year, authorships_per_year, lotka_fit_fixed, lotka_fit_two_point};
use bibliolens::unique_authors;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use common::props::*;
use common::{corpus, journals, productivity, reference_ages};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn lotka() -> Outcome {
    let start = Instant::now();
    let h = productivity();
    let fit = lotka_fit_two_point(&h).map_err(|e| e.to_string())?;
    let at_24 = lotka_fit_fixed(&h, 2.4).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected: Vec<u64> = at_24.expected.int_bins().map(|(_, n)| n).collect();
    let table = [1084, 205, 78, 39, 23, 15, 10, 7, 6, 4, 3, 3, 2, 2, 1];
    check(
        (2.40..=2.42).contains(&fit.c) && expected == table && elapsed < Duration::from_secs(1),
        format!("c = {:.4}, expected at 2.4 = {expected:?}, {elapsed:?}", fit.c),
    )
}

fn collaboration() -> Outcome {
    let d = degree_of_collaboration(corpus()).map_err(|e| e.to_string())?;
    let pct: Vec<String> = d
        .per_year
        .values()
        .map(|x| percent(x.nm, x.ns + x.nm, 2).unwrap())
        .collect();
    check(
        (d.total.c - 0.9034).abs() <= 1e-4 && pct == ["87.77", "87.25", "91.35", "93.00", "92.59"],
        format!("C = {:.4}, per year {}", d.total.c, pct.join("/")),
    )
}

fn impact() -> Outcome {
    let c = corpus();
    let opts = ImpactOptions::default();
    let mut shown = Vec::new();
    for year in [2006, 2007, 2008, 2009] {
        let f = impact_factor_for(c, year, 2, opts).map_err(|e| e.to_string())?;
        shown.push((f.a, f.b, ratio_truncated(f.a as u128, f.b as u128, 3).unwrap()));
    }
    let f = aggregate_impact(c, 2004, 2008, 2009, opts).map_err(|e| e.to_string())?;
    shown.push((f.a, f.b, ratio_truncated(f.a as u128, f.b as u128, 3).unwrap()));
    let want = [
        (89, 235, "0.378"),
        (75, 204, "0.367"),
        (127, 206, "0.616"),
        (110, 241, "0.456"),
        (335, 580, "0.577"),
    ];
    let ok = want
        .iter()
        .all(|(a, b, s)| shown.iter().any(|x| (x.0, x.1, x.2.as_str()) == (*a, *b, *s)));
    let text: Vec<String> = shown.iter().map(|(a, b, s)| format!("{a}/{b}={s}")).collect();
    check(ok, text.join(" "))
}

fn self_citations() -> Outcome {
    let c = corpus();
    let s = self_citation(c, &c.journal_name);
    let all = percent(s.total.self_citations, s.total.references, 2).unwrap();
    let y = s.per_year.get(&2004).copied().unwrap_or_default();
    let first = percent(y.self_citations, y.references, 2).unwrap_or_default();
    check(
        (s.total.self_citations, s.total.references) == (173, 6958) && all == "2.49" && first == "3.06",
        format!(
            "{}/{} = {all}%, 2004 = {first}%",
            s.total.self_citations, s.total.references
        ),
    )
}

fn bradford() -> Outcome {
    let b = bradford_partition(&journals(), 3).map_err(|e| e.to_string())?;
    let z: Vec<(usize, u64)> = b.zones.iter().map(|z| (z.journal_count, z.citation_count)).collect();
    let near = |got: usize, want: f64| (got as f64 - want).abs() <= 0.05 * want;
    check(
        z[0] == (43, 1990) && near(z[1].0, 210.0) && near(z[2].0, 1270.0),
        format!(
            "zones {} : {} : {} journals, zone 1 {} citations",
            z[0].0, z[1].0, z[2].0, z[0].1
        ),
    )
}

fn half_life() -> Outcome {
    let p = AgeProfile::from_labelled(&reference_ages()).map_err(|e| e.to_string())?;
    let cum = p.cumulative_at(11);
    let share = 100.0 * cum as f64 / p.total() as f64;
    check(
        cum == 4444 && (share - 63.87).abs() <= 0.01 && p.half_life_integer == Some(9),
        format!(
            "cumulative at 11 = {cum} ({share:.2}%), half-life {:?}",
            p.half_life_integer
        ),
    )
}

fn content() -> Outcome {
    let k = keywords_per_article(corpus());
    let t = title_word_stats(corpus());
    check(
        (k.mean - 3.3379).abs() < 5e-5 && (t.mean - 10.797).abs() < 5e-4 && t.mode == Some((9, 57)),
        format!("keywords {:.4}, title words {:.4}, mode {:?}", k.mean, t.mean, t.mode),
    )
}

fn productivity_counts() -> Outcome {
    let c = corpus();
    let arts: Vec<u64> = articles_per_year(c).rows.iter().map(|r| r.count).collect();
    let ships: Vec<u64> = authorships_per_year(c).int_bins().map(|(_, n)| n).collect();
    let unique = unique_authors(c).map_err(|e| e.to_string())?.len();
    let total: u64 = ships.iter().sum();
    check(
        arts == [139, 102, 104, 100, 135] && ships == [478, 367, 412, 352, 568] && unique == 1435 && total == 2177,
        format!("articles {arts:?}, authorships {ships:?}, {unique} authors, {total} authorships"),
    )
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn properties() -> Outcome {
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut note = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failed.push(format!("{name}: {e}"));
        }
    };
    note("lotka recovery", run(256, lotka_inputs(), lotka_recovers));
    note("bradford balance", run(1000, bradford_inputs(), bradford_balanced));
    note("impact scale", run(256, impact_inputs(), impact_scale_invariant));
    note(
        "corpus impact scale",
        run(8, (1usize..5, 1u32..4), |(n, w)| {
            corpus_impact_scale_invariant(corpus(), n, w)
        }),
    );
    note(
        "histogram round trip",
        run(256, text_histogram_inputs(), text_histogram_round_trips),
    );
    note(
        "integer histogram round trip",
        run(256, int_histogram_inputs(), int_histogram_round_trips),
    );
    note(
        "histogram fixed point",
        run(256, loose_histogram_inputs(), histogram_csv_is_fixed_point),
    );
    note("name idempotence", run(256, name_inputs(), name_idempotent));
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        failed.push(format!("took {elapsed:?}"));
    }
    if failed.is_empty() {
        Ok(format!("8 suites, 1000 Bradford lists, {elapsed:?}"))
    } else {
        Err(failed.join("; "))
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Lotka exponent and expected counts", lotka),
        ("degree of collaboration", collaboration),
        ("impact factors", impact),
        ("self-citation rate", self_citations),
        ("Bradford zones", bradford),
        ("reference age and half-life", half_life),
        ("keywords and title lengths", content),
        ("articles, authorships and authors", productivity_counts),
        ("property suites", properties),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
