//! Builders turning analysis results into [`Table`]s. The CLI subcommands
//! and the full report share these, so a number shown by one is shown
//! identically by the other.

use std::collections::BTreeMap;

use super::{Cell, Table};
use crate::citation_profile::{
    AgeProfile, BradfordPartition, FormatTable, LanguageTable, PubYearMatrix, RangeTable, RefsPerYear, SelfCitation,
};
use crate::collaboration::{
    AffiliationDistribution, CoauthorTable, CollabClassTable, CollaborationSummary, CountrySplit, TypeCounts,
};
use crate::content::{CountStats, FundingSummary, TitleStats};
use crate::corpus::{AffiliationType, SourceType};
use crate::display;
use crate::histogram::Histogram;
use crate::impact::{CitingCountries, ImpactFactor, ReceivedSummary};
use crate::productivity::{lotka_c_three_decimal, AuthorCohort, LotkaFit, LotkaMethod, YearSeries};

/// Bins in key order with optional percentage column.
pub fn histogram_table(name: &str, title: &str, key_col: &str, h: &Histogram, percent: bool) -> Table {
    let cols: Vec<&str> = if percent {
        vec![key_col, "count", "percent"]
    } else {
        vec![key_col, "count"]
    };
    let mut t = Table::new(name, title, &cols);
    let total = h.total();
    for (k, n) in h.iter() {
        let mut r = vec![Cell::text(k.to_string()), Cell::int(n)];
        if percent {
            r.push(Cell::percent(n, total));
        }
        t.row(r);
    }
    t
}

/// Bins by descending count, optionally cut to the first `top`.
pub fn ranked_table(name: &str, title: &str, key_col: &str, h: &Histogram, top: Option<usize>) -> Table {
    let mut t = Table::new(name, title, &["rank", key_col, "count", "percent"]);
    let total = h.total();
    let ranked = h.ranked();
    let shown = top.unwrap_or(ranked.len()).min(ranked.len());
    for (i, (k, n)) in ranked.into_iter().take(shown).enumerate() {
        t.row(vec![
            Cell::int(i as i64 + 1),
            Cell::text(k.to_string()),
            Cell::int(n),
            Cell::percent(n, total),
        ]);
    }
    if shown < h.len() {
        t.note(format!("showing {shown} of {} entries; total count {total}", h.len()));
    }
    t
}

pub fn articles_per_year(s: &YearSeries) -> Table {
    let mut t = Table::new(
        "articles_per_year",
        "Articles per year",
        &["year", "articles", "percent", "cumulative percent"],
    );
    for r in &s.rows {
        t.row(vec![
            Cell::int(r.year),
            Cell::int(r.count),
            Cell::percent(r.count, s.total),
            Cell::percent(r.cumulative, s.total),
        ]);
    }
    t.row(vec![
        Cell::text("total"),
        Cell::int(s.total),
        Cell::percent(s.total, s.total),
        Cell::Empty,
    ]);
    t.note(format!("mean articles per year: {}", display::real(s.mean, 2)));
    t
}

pub fn authorships_per_year(articles: &YearSeries, authorships: &Histogram) -> Table {
    let mut t = Table::new(
        "authorships_per_year",
        "Authorships per year",
        &["year", "articles", "authorships", "percent"],
    );
    let total = authorships.total();
    for r in &articles.rows {
        let n = authorships.get(r.year);
        t.row(vec![
            Cell::int(r.year),
            Cell::int(r.count),
            Cell::int(n),
            Cell::percent(n, total),
        ]);
    }
    t.row(vec![
        Cell::text("total"),
        Cell::int(articles.total),
        Cell::int(total),
        Cell::percent(total, total),
    ]);
    t
}

pub fn lotka(fit: &LotkaFit) -> Table {
    let c_shown = display::real(fit.c, 4);
    let mut t = Table::new(
        "lotka",
        &format!("Authors with n publications, observed and expected (c = {c_shown})"),
        &["n", "observed a_n", "observed percent", "expected", "expected percent"],
    );
    let (to, te) = (fit.total_observed, fit.total_expected);
    for (n, o) in fit.observed.int_bins() {
        let e = fit.expected.get(n);
        t.row(vec![
            Cell::int(n),
            Cell::int(o),
            Cell::percent(o, to),
            Cell::int(e),
            Cell::percent(e, te),
        ]);
    }
    t.row(vec![
        Cell::text("total"),
        Cell::int(to),
        Cell::percent(to, to),
        Cell::int(te),
        Cell::percent(te, te),
    ]);
    t.note(format!("method: {}", fit.method.label()));
    t.note(format!("c = {}", display::real(fit.c, 6)));
    if fit.method == LotkaMethod::TwoPoint {
        let a2 = fit.observed.get(2i64);
        let pc = lotka_c_three_decimal(fit.a1, a2);
        t.note(format!(
            "c with 3-decimal logarithms = {} (shown as {})",
            display::real(pc, 4),
            display::real(pc, 1)
        ));
    }
    if fit.method == LotkaMethod::LeastSquares {
        t.note("least-squares log-log slope; an alternative to the classical two-point estimate");
    }
    t.note(format!("max |observed - expected| = {}", fit.max_abs_dev));
    t.note(format!(
        "chi-square over {} bins with expected >= 5 = {}",
        fit.chi_square_bins,
        display::real(fit.chi_square, 3)
    ));
    t
}

pub fn cohorts(groups: &[AuthorCohort]) -> Table {
    let mut t = Table::new(
        "core_authors",
        "Most productive authors",
        &["group", "cohort size", "articles", "author", "affiliation"],
    );
    for g in groups {
        for (name, aff) in &g.members {
            t.row(vec![
                Cell::int(g.rank_group as i64),
                Cell::int(g.members.len() as i64),
                Cell::int(g.paper_count),
                Cell::text(name),
                Cell::text(aff),
            ]);
        }
    }
    t
}

fn year_columns<'a>(lead: &'a str, years: &[i32], tail: &[&'a str]) -> Vec<String> {
    let mut cols = vec![lead.to_string()];
    cols.extend(years.iter().map(|y| y.to_string()));
    cols.extend(tail.iter().map(|s| s.to_string()));
    cols
}

fn table_with(name: &str, title: &str, cols: Vec<String>) -> Table {
    let refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    Table::new(name, title, &refs)
}

pub fn coauthorship(ct: &CoauthorTable) -> Table {
    let years: Vec<i32> = ct.per_year.keys().copied().collect();
    let mut t = table_with(
        "coauthorship",
        "Articles by number of authors",
        year_columns("authors", &years, &["total", "percent"]),
    );
    let total = ct.total.total();
    for (n, c) in ct.total.int_bins() {
        let mut r = vec![Cell::int(n)];
        r.extend(years.iter().map(|y| Cell::int(ct.per_year[y].get(n))));
        r.push(Cell::int(c));
        r.push(Cell::percent(c, total));
        t.row(r);
    }
    let mut r = vec![Cell::text("total")];
    r.extend(years.iter().map(|y| Cell::int(ct.per_year[y].total())));
    r.push(Cell::int(total));
    r.push(Cell::percent(total, total));
    t.row(r);
    t
}

pub fn degree(s: &CollaborationSummary) -> Table {
    let mut t = Table::new(
        "degree_of_collaboration",
        "Single and multi-authored articles per year",
        &["year", "single", "multi", "total", "C", "collaboration percent"],
    );
    let mut push = |label: Cell, d: &crate::collaboration::Degree| {
        t.row(vec![
            label,
            Cell::int(d.ns),
            Cell::int(d.nm),
            Cell::int(d.ns + d.nm),
            Cell::real(d.c, 4),
            Cell::percent(d.nm, d.ns + d.nm),
        ]);
    };
    for (y, d) in &s.per_year {
        push(Cell::int(*y), d);
    }
    push(Cell::text("total"), &s.total);
    t.note(format!(
        "degree of collaboration C = Nm/(Nm+Ns) = {}",
        display::real(s.total.c, 6)
    ));
    t
}

pub fn collab_classes(ct: &CollabClassTable) -> Table {
    let years: Vec<i32> = ct.per_year.keys().copied().collect();
    let mut t = table_with(
        "collaboration_classes",
        "Collaboration pattern",
        year_columns("pattern", &years, &["total", "percent"]),
    );
    let total = ct.total.total();
    type Pick = (&'static str, fn(&crate::collaboration::CollabClassCounts) -> u64);
    let pick: [Pick; 4] = [
        ("single", |c| c.single),
        ("same_affiliation", |c| c.same_affiliation),
        ("diff_affiliation_same_country", |c| c.diff_affiliation_same_country),
        ("diff_countries", |c| c.diff_countries),
    ];
    for (label, f) in pick {
        let mut r = vec![Cell::text(label)];
        r.extend(years.iter().map(|y| Cell::int(f(&ct.per_year[y]))));
        r.push(Cell::int(f(&ct.total)));
        r.push(Cell::percent(f(&ct.total), total));
        t.row(r);
    }
    t
}

pub fn country_split(s: &CountrySplit) -> Vec<Table> {
    let mut a = Table::new(
        "home_foreign_authorships",
        &format!("Authorships by affiliation country ({} and foreign)", s.home),
        &["year", "home", "foreign", "unknown", "total"],
    );
    let mut b = Table::new(
        "home_foreign_articles",
        &format!("Articles by author origin ({} and foreign)", s.home),
        &[
            "year",
            "purely home",
            "home with foreign",
            "purely foreign",
            "any foreign",
            "unknown",
        ],
    );
    let rows = s
        .per_year
        .iter()
        .map(|(y, c)| (Cell::int(*y), c))
        .chain([(Cell::text("total"), &s.total)]);
    for (label, c) in rows {
        a.row(vec![
            label.clone(),
            Cell::int(c.home_authorships),
            Cell::int(c.foreign_authorships),
            Cell::int(c.unknown_authorships),
            Cell::int(c.home_authorships + c.foreign_authorships + c.unknown_authorships),
        ]);
        b.row(vec![
            label,
            Cell::int(c.purely_home),
            Cell::int(c.mixed),
            Cell::int(c.purely_foreign),
            Cell::int(c.any_foreign()),
            Cell::int(c.unknown),
        ]);
    }
    let known = s.total.home_authorships + s.total.foreign_authorships;
    a.note(format!(
        "home share {} percent, foreign share {} percent",
        display::percent(s.total.home_authorships, known, 2).unwrap_or_default(),
        display::percent(s.total.foreign_authorships, known, 2).unwrap_or_default()
    ));

    let years: Vec<i32> = s.per_year.keys().copied().collect();
    let mut f = table_with(
        "foreign_countries",
        "Foreign contributing countries",
        year_columns(
            "country",
            &years,
            &["articles", "percent", "authorships", "authorship percent"],
        ),
    );
    let any = s.total.any_foreign();
    let fa = s.total.foreign_authorships;
    let mut order: Vec<(&String, u64)> = s
        .foreign_articles
        .iter()
        .map(|(c, m)| (c, m.values().sum::<u64>()))
        .collect();
    order.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(y.0)));
    for (country, n) in order {
        let per = &s.foreign_articles[country];
        let auth = s.foreign_authorships_by_country.get(country).copied().unwrap_or(0);
        let mut r = vec![Cell::text(country)];
        r.extend(years.iter().map(|y| Cell::int(per.get(y).copied().unwrap_or(0))));
        r.extend([
            Cell::int(n),
            Cell::percent(n, any),
            Cell::int(auth),
            Cell::percent(auth, fa),
        ]);
        f.row(r);
    }
    f.note("article percentages are shares of articles with any foreign author");

    let mixed = country_sets(
        "home_foreign_pairs",
        &format!("{} collaboration with foreign countries", s.home),
        &s.mixed_sets,
    );
    vec![a, b, f, mixed]
}

pub fn country_sets(name: &str, title: &str, m: &BTreeMap<Vec<String>, u64>) -> Table {
    let mut t = Table::new(name, title, &["countries", "articles"]);
    let mut v: Vec<(&Vec<String>, &u64)> = m.iter().collect();
    v.sort_by(|x, y| y.1.cmp(x.1).then_with(|| x.0.cmp(y.0)));
    for (set, n) in v {
        t.row(vec![Cell::text(set.join(" :: ")), Cell::int(*n)]);
    }
    t.row(vec![Cell::text("total"), Cell::int(m.values().sum::<u64>())]);
    t
}

fn type_table(name: &str, title: &str, what: &str, m: &BTreeMap<AffiliationType, TypeCounts>) -> Table {
    let mut t = Table::new(
        name,
        title,
        &[
            "type",
            &format!("home {what}"),
            &format!("foreign {what}"),
            "unknown country",
            "total",
            "percent",
        ],
    );
    let total: u64 = m.values().map(TypeCounts::total).sum();
    let zero = TypeCounts::default();
    for ty in AffiliationType::ALL {
        let c = m.get(&ty).unwrap_or(&zero);
        t.row(vec![
            Cell::text(ty.label()),
            Cell::int(c.home),
            Cell::int(c.foreign),
            Cell::int(c.unknown),
            Cell::int(c.total()),
            Cell::percent(c.total(), total),
        ]);
    }
    let sum = |f: fn(&TypeCounts) -> u64| m.values().map(f).sum::<u64>();
    t.row(vec![
        Cell::text("total"),
        Cell::int(sum(|c| c.home)),
        Cell::int(sum(|c| c.foreign)),
        Cell::int(sum(|c| c.unknown)),
        Cell::int(total),
        Cell::percent(total, total),
    ]);
    t
}

pub fn affiliation_types(d: &AffiliationDistribution, top: Option<usize>) -> Vec<Table> {
    vec![
        type_table(
            "affiliation_types",
            "Unique affiliations by type",
            "affiliations",
            &d.affiliations,
        ),
        type_table(
            "author_affiliation_types",
            "Unique authors by affiliation type",
            "authors",
            &d.authors,
        ),
        ranked_table(
            "authors_per_affiliation",
            "Authors per affiliation",
            "affiliation",
            &d.authors_per_affiliation,
            top,
        ),
    ]
}

pub fn refs_per_year(r: &RefsPerYear, articles: &YearSeries) -> Table {
    let mut t = Table::new(
        "references_per_year",
        "References per year",
        &["year", "articles", "references", "percent", "per article"],
    );
    for row in &articles.rows {
        let n = r.counts.get(row.year);
        t.row(vec![
            Cell::int(row.year),
            Cell::int(row.count),
            Cell::int(n),
            Cell::percent(n, r.total),
            Cell::real(
                if row.count == 0 {
                    0.0
                } else {
                    n as f64 / row.count as f64
                },
                2,
            ),
        ]);
    }
    t.row(vec![
        Cell::text("total"),
        Cell::int(r.articles),
        Cell::int(r.total),
        Cell::percent(r.total, r.total),
        Cell::real(r.mean, 2),
    ]);
    t.note(format!("mean references per article = {}", display::real(r.mean, 4)));
    t
}

pub fn ref_ranges(r: &RangeTable) -> Table {
    let mut t = Table::new(
        "reference_ranges",
        "Range of references per article",
        &["references", "articles", "percent"],
    );
    if r.below > 0 {
        t.row(vec![
            Cell::text("below first edge"),
            Cell::int(r.below),
            Cell::percent(r.below, r.articles),
        ]);
    }
    for b in &r.buckets {
        t.row(vec![
            Cell::text(b.label()),
            Cell::int(b.count),
            Cell::percent(b.count, r.articles),
        ]);
    }
    t.row(vec![
        Cell::text("total"),
        Cell::int(r.articles),
        Cell::percent(r.articles, r.articles),
    ]);
    t
}

pub fn formats(f: &FormatTable) -> Vec<Table> {
    let mut a = Table::new(
        "reference_formats",
        "Bibliographic format of references",
        &["format", "references", "percent"],
    );
    for (ty, n) in &f.total {
        a.row(vec![
            Cell::text(ty.label()),
            Cell::int(*n),
            Cell::percent(*n, f.grand_total),
        ]);
    }
    a.row(vec![
        Cell::text("total"),
        Cell::int(f.grand_total),
        Cell::percent(f.grand_total, f.grand_total),
    ]);

    let years: Vec<i32> = f.per_year.keys().copied().collect();
    let mut b = table_with(
        "reference_formats_per_year",
        "Format of references per year",
        year_columns("format", &years, &["total"]),
    );
    for ty in SourceType::ALL {
        let mut r = vec![Cell::text(ty.label())];
        r.extend(years.iter().map(|y| Cell::int(f.per_year[y][&ty])));
        r.push(Cell::int(f.total[&ty]));
        b.row(r);
    }
    let mut r = vec![Cell::text("total")];
    r.extend(years.iter().map(|y| Cell::int(f.per_year[y].values().sum::<u64>())));
    r.push(Cell::int(f.grand_total));
    b.row(r);
    vec![a, b]
}

pub fn ages(p: &AgeProfile) -> Table {
    let mut t = Table::new(
        "reference_ages",
        "Age of cited references",
        &["age", "references", "percent", "cumulative", "cumulative percent"],
    );
    let total = p.total();
    let mut cum = 0;
    for b in &p.bins {
        cum += b.count;
        t.row(vec![
            Cell::text(&b.label),
            Cell::int(b.count),
            Cell::percent(b.count, total),
            Cell::int(cum),
            Cell::percent(cum, total),
        ]);
    }
    t.row(vec![
        Cell::text("undated"),
        Cell::int(p.undated),
        Cell::percent(p.undated, total),
        Cell::Empty,
        Cell::Empty,
    ]);
    t.row(vec![
        Cell::text("total"),
        Cell::int(total),
        Cell::percent(total, total),
        Cell::Empty,
        Cell::Empty,
    ]);
    t.note("percentages are shares of all references, undated included");
    match (p.half_life_integer, p.half_life_interpolated) {
        (Some(h), Some(hi)) => {
            t.note(format!("half-life (dated references, n = {}) = {h} years", p.dated));
            t.note(format!("interpolated half-life = {} years", display::real(hi, 4)));
        }
        _ => t.note("half-life undefined: no dated references"),
    }
    t
}

/// (age upper bound, cumulative references) for a half-life plot.
pub fn age_curve(p: &AgeProfile) -> Vec<(f64, f64)> {
    let mut cum = 0;
    p.bins
        .iter()
        .map(|b| {
            cum += b.count;
            (b.hi.unwrap_or(b.lo) as f64, cum as f64)
        })
        .collect()
}

pub fn pub_year_matrix(m: &PubYearMatrix, floor: Option<i32>) -> Table {
    let years: Vec<i32> = m.col_totals.keys().rev().copied().collect();
    let mut t = table_with(
        "publication_year_matrix",
        "Publication year of references against citing year",
        year_columns("publication year", &years, &["total"]),
    );
    let mut rows: Vec<Option<i32>> = m.row_totals.keys().copied().filter(Option::is_some).collect();
    rows.reverse();
    if m.row_totals.contains_key(&None) {
        rows.push(None);
    }
    for p in rows {
        let label = match (p, floor) {
            (None, _) => "undated".to_string(),
            (Some(y), Some(f)) if y == f => format!("{y} and below"),
            (Some(y), _) => y.to_string(),
        };
        let mut r = vec![Cell::text(label)];
        r.extend(
            years
                .iter()
                .map(|y| Cell::int(m.cells.get(&(p, *y)).copied().unwrap_or(0))),
        );
        r.push(Cell::int(m.row_totals[&p]));
        t.row(r);
    }
    let mut r = vec![Cell::text("total")];
    r.extend(years.iter().map(|y| Cell::int(m.col_totals[y])));
    r.push(Cell::int(m.col_totals.values().sum::<u64>()));
    t.row(r);
    t
}

pub fn bradford(p: &BradfordPartition) -> Table {
    let mut t = Table::new(
        "bradford_zones",
        "Bradford zones",
        &["zone", "journals", "citations", "citation percent", "journal ratio"],
    );
    for (i, z) in p.zones.iter().enumerate() {
        t.row(vec![
            Cell::int(i as i64 + 1),
            Cell::int(z.journal_count as i64),
            Cell::int(z.citation_count),
            Cell::percent(z.citation_count, p.total_citations),
            Cell::real(p.ratios[i], 3),
        ]);
    }
    let nj: usize = p.zones.iter().map(|z| z.journal_count).sum();
    t.row(vec![
        Cell::text("total"),
        Cell::int(nj as i64),
        Cell::int(p.total_citations),
        Cell::percent(p.total_citations, p.total_citations),
        Cell::Empty,
    ]);
    let counts: Vec<String> = p.zones.iter().map(|z| z.journal_count.to_string()).collect();
    t.note(format!("journals per zone {}", counts.join(" : ")));
    t.note(format!("multiplier b = {}", display::real(p.b_estimate, 4)));
    t
}

pub fn self_citation(s: &SelfCitation) -> Table {
    let mut t = Table::new(
        "self_citation",
        &format!("Self-citation of {}", s.journal),
        &[
            "year",
            "references",
            "citing articles",
            "self-citations",
            "rate percent",
        ],
    );
    let rows = s
        .per_year
        .iter()
        .map(|(y, r)| (Cell::int(*y), r))
        .chain([(Cell::text("total"), &s.total)]);
    for (label, r) in rows {
        t.row(vec![
            label,
            Cell::int(r.references),
            Cell::int(r.citing_articles),
            Cell::int(r.self_citations),
            Cell::percent(r.self_citations, r.references),
        ]);
    }
    t
}

pub fn languages(l: &LanguageTable) -> Vec<Table> {
    let mut a = histogram_table(
        "reference_languages",
        "Language of references",
        "language",
        &l.by_language,
        true,
    );
    a.note(format!(
        "non-default languages: {} references across {} titles",
        l.non_default_total(),
        l.non_default_titles()
    ));
    let mut b = Table::new(
        "non_english_titles",
        "Titles in other languages",
        &["language", "title", "references"],
    );
    for (lang, titles) in &l.titles {
        for (title, n) in titles {
            b.row(vec![Cell::text(lang), Cell::text(title), Cell::int(*n)]);
        }
    }
    vec![a, b]
}

pub fn received(s: &ReceivedSummary) -> Table {
    let mut citing: Vec<i32> = s.total.by_citing_year.keys().copied().collect();
    citing.sort();
    let mut t = table_with(
        "received_citations",
        "Citations received by publication year",
        year_columns(
            "published",
            &citing,
            &["citations", "articles", "cited articles", "coverage percent"],
        ),
    );
    let rows = s
        .per_year
        .iter()
        .map(|(y, r)| (Cell::int(*y), r))
        .chain([(Cell::text("total"), &s.total)]);
    for (label, r) in rows {
        let mut row = vec![label];
        row.extend(
            citing
                .iter()
                .map(|y| Cell::int(r.by_citing_year.get(y).copied().unwrap_or(0))),
        );
        row.extend([
            Cell::int(r.citations),
            Cell::int(r.articles),
            Cell::int(r.cited_articles),
            Cell::percent(r.cited_articles, r.articles),
        ]);
        t.row(row);
    }
    t
}

pub fn citing_countries(cc: &CitingCountries, top: Option<usize>) -> Vec<Table> {
    let mut out = vec![ranked_table(
        "citing_countries",
        "Countries of citing authors",
        "country",
        &cc.single,
        top,
    )];
    out[0].note(format!("{} citations carry no country", cc.no_country));
    if let Some(r) = &cc.regions {
        out.push(ranked_table(
            "citing_regions",
            "Regions of citing authors",
            "region",
            r,
            None,
        ));
    }
    out.push(country_sets(
        "citing_country_sets",
        "Multi-country citing collaborations",
        &cc.multi,
    ));
    out
}

/// Impact factors; `truncate` selects floor-at-3-decimals display.
pub fn impact(rows: &[(String, ImpactFactor)], truncate: bool) -> Table {
    let mut t = Table::new(
        "impact_factor",
        "Impact factor",
        &["target", "A (citations)", "B (articles)", "IF"],
    );
    for (label, f) in rows {
        let shown = if truncate {
            display::ratio_truncated(f.a as u128, f.b as u128, 3)
        } else {
            display::ratio_half_up(f.a as u128, f.b as u128, 3)
        }
        .unwrap_or_default();
        t.row(vec![
            Cell::text(label),
            Cell::int(f.a),
            Cell::int(f.b),
            Cell::Real {
                value: f.value,
                display: shown,
            },
        ]);
    }
    t.note(if truncate {
        "IF shown truncated to 3 decimals"
    } else {
        "IF shown rounded half-up to 3 decimals"
    });
    t
}

pub fn count_stats(name: &str, title: &str, key_col: &str, s: &CountStats) -> Table {
    let mut t = histogram_table(name, title, key_col, &s.histogram, true);
    t.note(format!("mean = {}", display::real(s.mean, 4)));
    t
}

pub fn title_stats(s: &TitleStats) -> Table {
    let mut t = histogram_table("title_words", "Words per title", "words", &s.histogram, true);
    t.note(format!("mean = {}", display::real(s.mean, 4)));
    let pair = |p: Option<(i64, u64)>| {
        p.map(|(w, n)| format!("{w} words ({n} articles)"))
            .unwrap_or_else(|| "n/a".into())
    };
    t.note(format!("min = {}", pair(s.min)));
    t.note(format!("max = {}", pair(s.max)));
    t.note(format!("mode = {}", pair(s.mode)));
    t
}

pub fn funding(f: &FundingSummary) -> Vec<Table> {
    let years: Vec<i32> = f.per_year.keys().copied().collect();
    let mut a = table_with(
        "funders",
        "Research funders",
        year_columns("funder", &years, &["total"]),
    );
    let mut order: Vec<(&String, u64)> = f.funders.iter().map(|(k, m)| (k, m.values().sum::<u64>())).collect();
    order.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(y.0)));
    for (name, n) in order {
        let mut r = vec![Cell::text(name)];
        r.extend(
            years
                .iter()
                .map(|y| Cell::int(f.funders[name].get(y).copied().unwrap_or(0))),
        );
        r.push(Cell::int(n));
        a.row(r);
    }
    let mut b = Table::new(
        "funding_per_year",
        "Funded original articles per year",
        &["year", "original articles", "funded", "percent"],
    );
    let rows = f
        .per_year
        .iter()
        .map(|(y, r)| (Cell::int(*y), r))
        .chain([(Cell::text("total"), &f.total)]);
    for (label, r) in rows {
        b.row(vec![
            label,
            Cell::int(r.originals),
            Cell::int(r.funded_originals),
            Cell::percent(r.funded_originals, r.originals),
        ]);
    }
    vec![a, b]
}
