//! Headline values on the committed reference corpus.

mod common;

use bibliolens::citation_profile::{
    age_profile, bradford_partition, journal_frequency, language_distribution, publication_year_matrix,
    references_per_year, self_citation, AgeProfile,
};
use bibliolens::collaboration::{
    affiliation_type_distribution, collaboration_classes, country_pair_matrix, country_split, degree_of_collaboration,
};
use bibliolens::content::{keyword_frequency, keywords_per_article, load_places, title_word_stats};
use bibliolens::display::{percent, ratio_truncated};
use bibliolens::impact::{
    aggregate_impact, citing_countries, impact_factor_series, received_summary, ImpactOptions, RegionMap,
};
use bibliolens::productivity::{
    articles_per_year, authorships_per_year, lotka_c_three_decimal, lotka_fit_fixed, lotka_fit_two_point,
};
use bibliolens::unique_authors;

use common::{corpus, fixture, journals, productivity, reference_ages};

const YEARS: [i32; 5] = [2004, 2005, 2006, 2007, 2008];

fn v(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn corpus_shape() {
    let c = corpus();
    c.validate().unwrap();
    let arts = articles_per_year(c);
    let counts: Vec<u64> = arts.rows.iter().map(|r| r.count).collect();
    assert_eq!(counts, [139, 102, 104, 100, 135]);
    assert_eq!(arts.total, 580);
    let ships = authorships_per_year(c);
    let per: Vec<u64> = YEARS.iter().map(|&y| ships.get(y as i64)).collect();
    assert_eq!(per, [478, 367, 412, 352, 568]);
    assert_eq!(ships.total(), 2177);
    assert_eq!(unique_authors(c).unwrap().len(), 1435);
}

#[test]
fn lotka_on_productivity_table() {
    let h = productivity();
    let fit = lotka_fit_two_point(&h).unwrap();
    assert!((2.40..=2.42).contains(&fit.c), "c = {}", fit.c);
    assert!((lotka_c_three_decimal(1084, 204) - 2.4086).abs() < 1e-3);
    let fixed = lotka_fit_fixed(&h, 2.4).unwrap();
    let expected: Vec<u64> = fixed.expected.int_bins().map(|(_, n)| n).collect();
    assert_eq!(expected, [1084, 205, 78, 39, 23, 15, 10, 7, 6, 4, 3, 3, 2, 2, 1]);
}

#[test]
fn degree_of_collaboration_values() {
    let d = degree_of_collaboration(corpus()).unwrap();
    assert_eq!((d.total.ns, d.total.nm), (56, 524));
    assert!((d.total.c - 0.9034).abs() < 1e-4);
    let pct: Vec<String> = d
        .per_year
        .values()
        .map(|x| percent(x.nm, x.ns + x.nm, 2).unwrap())
        .collect();
    assert_eq!(pct, ["87.77", "87.25", "91.35", "93.00", "92.59"]);
    let classes = collaboration_classes(corpus()).total;
    assert_eq!(classes.single, 56);
    assert_eq!(classes.total(), 580);
}

#[test]
fn country_structure() {
    let c = corpus();
    let split = country_split(c, "Malaysia").unwrap().total;
    assert_eq!((split.home_authorships, split.foreign_authorships), (1982, 195));
    assert_eq!((split.purely_home, split.mixed, split.purely_foreign), (511, 28, 41));
    let pairs = country_pair_matrix(c);
    assert_eq!(pairs.get(&v(&["Australia", "Malaysia"])), Some(&7));
    assert_eq!(pairs.get(&v(&["Australia", "Malaysia", "United States"])), Some(&1));
    let aff = affiliation_type_distribution(c, "Malaysia");
    let total_affs: u64 = aff.affiliations.values().map(|t| t.total()).sum();
    assert_eq!(total_affs, 173);
    assert_eq!(aff.unique_authors, 1435);
}

#[test]
fn references_and_self_citation() {
    let c = corpus();
    let refs = references_per_year(c);
    assert_eq!(refs.total, 6958);
    let s = self_citation(c, &c.journal_name);
    assert_eq!((s.total.self_citations, s.total.references), (173, 6958));
    assert_eq!(percent(173, 6958, 2).unwrap(), "2.49");
    let y = s.per_year[&2004];
    assert_eq!(percent(y.self_citations, y.references, 2).unwrap(), "3.06");
    let lang = language_distribution(c);
    assert_eq!((lang.non_default_total(), lang.non_default_titles()), (25, 19));
    let m = publication_year_matrix(c, Some(1950));
    assert_eq!(m.col_totals.values().sum::<u64>(), 6958);
}

#[test]
fn journal_list_and_bradford() {
    let h = journals();
    assert_eq!(h.ranked(), journal_frequency(corpus()).ranked());
    assert_eq!((h.len(), h.total()), (1521, 5927));
    assert_eq!(h.ranked()[0].1, 144);
    let b = bradford_partition(&h, 3).unwrap();
    let zones: Vec<(usize, u64)> = b.zones.iter().map(|z| (z.journal_count, z.citation_count)).collect();
    assert_eq!(zones[0], (43, 1990));
    assert_eq!((zones[1].0, zones[2].0), (204, 1274));
}

#[test]
fn reference_age_table() {
    let p = AgeProfile::from_labelled(&reference_ages()).unwrap();
    assert_eq!(p.total(), 6958);
    assert_eq!((p.dated, p.undated), (6905, 53));
    assert_eq!(p.cumulative_at(11), 4444);
    assert_eq!(percent(4444, 6958, 2).unwrap(), "63.87");
    assert_eq!(p.half_life_integer, Some(9));
    let from_corpus = age_profile(corpus());
    assert_eq!(from_corpus.total(), 6958);
}

#[test]
fn received_citations() {
    let c = corpus();
    let r = received_summary(c);
    assert_eq!(
        (r.total.cited_articles, r.total.articles, r.total.citations),
        (446, 580, 1164)
    );
    assert_eq!(percent(446, 580, 2).unwrap(), "76.90");
    let y = &r.per_year[&2004];
    assert_eq!((y.cited_articles, y.citations), (129, 452));

    let regions = RegionMap::load(fixture("regions.csv")).unwrap();
    let cc = citing_countries(c, Some(&regions));
    assert_eq!(cc.single.get("China"), 227);
    assert_eq!(cc.single.get("Malaysia"), 171);
    assert_eq!(cc.single.get("United States"), 123);
    assert_eq!(cc.multi.get(&v(&["Germany", "Luxembourg"])), Some(&3));
    let reg = cc.regions.unwrap();
    assert_eq!((reg.get("East Asia"), reg.get("Europe")), (258, 212));
}

#[test]
fn impact_factors() {
    let c = corpus();
    let series = impact_factor_series(c, 2, ImpactOptions::default()).unwrap();
    let shown: Vec<(u64, u64, String)> = series
        .values()
        .map(|f| (f.a, f.b, ratio_truncated(f.a as u128, f.b as u128, 3).unwrap()))
        .collect();
    assert!(shown.contains(&(89, 235, "0.378".into())));
    assert!(shown.contains(&(75, 204, "0.367".into())));
    assert!(shown.contains(&(127, 206, "0.616".into())));
    assert!(shown.contains(&(110, 241, "0.456".into())));
    let agg = aggregate_impact(c, 2004, 2008, 2009, ImpactOptions::default()).unwrap();
    assert_eq!((agg.a, agg.b), (335, 580));
    assert_eq!(ratio_truncated(335, 580, 3).unwrap(), "0.577");
}

#[test]
fn content_values() {
    let c = corpus();
    let k = keywords_per_article(c);
    assert!((k.mean - 3.3379).abs() < 5e-5, "{}", k.mean);
    let t = title_word_stats(c);
    assert!((t.mean - 10.797).abs() < 5e-4, "{}", t.mean);
    assert_eq!(t.mode, Some((9, 57)));
    let places = load_places(fixture("places.txt")).unwrap();
    let kw = keyword_frequency(c, Some(&places));
    assert_eq!(kw.keywords.get("Diabetes"), 28);
    assert_eq!(kw.places.unwrap().get("Malaysia"), 47);
}
