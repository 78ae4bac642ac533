//! Groups of tables per subcommand, and the full report built from them.

use super::{tables, Chart, Table};
use crate::citation_profile::{self as cp, AgeProfile, BradfordPartition, DEFAULT_REF_EDGES};
use crate::collaboration as co;
use crate::content as ct;
use crate::corpus::{unique_authors, Corpus};
use crate::error::Result;
use crate::histogram::Histogram;
use crate::impact::{self as im, ImpactFactor, ImpactOptions, RegionMap};
use crate::productivity as pr;

#[derive(Debug, Clone)]
pub struct Options {
    pub home: String,
    pub zones: usize,
    pub top: Option<usize>,
    pub min_count: u64,
    pub places: Option<Vec<String>>,
    pub regions: Option<RegionMap>,
    pub window: u32,
    pub truncate: bool,
    pub impact: ImpactOptions,
    pub year_floor: Option<i32>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            home: "Malaysia".into(),
            zones: 3,
            top: Some(20),
            min_count: 5,
            places: None,
            regions: None,
            window: 2,
            truncate: true,
            impact: ImpactOptions::default(),
            year_floor: None,
        }
    }
}

pub fn summary(c: &Corpus) -> Result<Vec<Table>> {
    let articles = pr::articles_per_year(c);
    let authorships = pr::authorships_per_year(c);
    let mut a = tables::articles_per_year(&articles);
    let authors = unique_authors(c)?;
    a.note(format!(
        "{} unique authors, {} authorships",
        authors.len(),
        authors.values().sum::<u64>()
    ));
    Ok(vec![a, tables::authorships_per_year(&articles, &authorships)])
}

pub fn lotka_from_histogram(observed: &Histogram, c: Option<f64>, lsq: bool) -> Result<Vec<Table>> {
    let fit = match (c, lsq) {
        (Some(c), _) => pr::lotka_fit_fixed(observed, c)?,
        (None, true) => pr::lotka_fit_lsq(observed)?,
        (None, false) => pr::lotka_fit_two_point(observed)?,
    };
    Ok(vec![tables::lotka(&fit)])
}

pub fn lotka(c: &Corpus, fixed: Option<f64>, lsq: bool, opts: &Options) -> Result<Vec<Table>> {
    let observed = pr::productivity_histogram(c)?;
    let mut out = lotka_from_histogram(&observed, fixed, lsq)?;
    if fixed.is_none() && !lsq {
        out.extend(lotka_from_histogram(&observed, Some(2.0), false)?);
        out.last_mut().expect("just pushed").name = "lotka_c2".into();
    }
    out.push(tables::cohorts(&pr::core_authors(c, opts.min_count)?));
    Ok(out)
}

pub fn collab(c: &Corpus, opts: &Options) -> Result<Vec<Table>> {
    let mut out = vec![
        tables::coauthorship(&co::coauthorship_histogram(c)),
        tables::degree(&co::degree_of_collaboration(c)?),
        tables::collab_classes(&co::collaboration_classes(c)),
    ];
    out.extend(tables::country_split(&co::country_split(c, &opts.home)?));
    out.push(tables::country_sets(
        "country_pairs",
        "Collaborations between different countries",
        &co::country_pair_matrix(c),
    ));
    out.extend(tables::affiliation_types(
        &co::affiliation_type_distribution(c, &opts.home),
        opts.top,
    ));
    Ok(out)
}

pub fn refs(c: &Corpus, opts: &Options) -> Result<Vec<Table>> {
    let articles = pr::articles_per_year(c);
    let mut out = vec![
        tables::refs_per_year(&cp::references_per_year(c), &articles),
        tables::ref_ranges(&cp::refs_per_article_ranges(c, &DEFAULT_REF_EDGES)?),
    ];
    out.extend(tables::formats(&cp::format_distribution(c)));
    out.push(tables::ages(&cp::age_profile(c)));
    out.push(tables::pub_year_matrix(
        &cp::publication_year_matrix(c, opts.year_floor),
        opts.year_floor,
    ));
    out.push(tables::ranked_table(
        "journal_frequency",
        "Journals referenced",
        "journal",
        &cp::journal_frequency(c),
        opts.top,
    ));
    out.push(tables::self_citation(&cp::self_citation(c, &c.journal_name)));
    out.extend(tables::languages(&cp::language_distribution(c)));
    Ok(out)
}

pub fn bradford_chart(p: &BradfordPartition) -> Chart {
    Chart {
        title: "Bradford curve".into(),
        x_label: "Journals Cumulative (log)".into(),
        y_label: "Cumulative citations".into(),
        points: p.curve(),
    }
}

pub fn bradford(freqs: &Histogram, opts: &Options) -> Result<(Vec<Table>, Chart)> {
    let p = cp::bradford_partition(freqs, opts.zones)?;
    Ok((vec![tables::bradford(&p)], bradford_chart(&p)))
}

pub fn halflife_chart(p: &AgeProfile) -> Chart {
    Chart {
        title: "Half-life of cited references".into(),
        x_label: "Age (years)".into(),
        y_label: "Cumulative citations".into(),
        points: tables::age_curve(p),
    }
}

pub fn halflife(p: &AgeProfile) -> (Vec<Table>, Chart) {
    (vec![tables::ages(p)], halflife_chart(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpactQuery {
    Series,
    Year(i32),
    Aggregate { start: i32, end: i32, citing: i32 },
}

pub fn impact_factors(c: &Corpus, q: ImpactQuery, opts: &Options) -> Result<Vec<(String, ImpactFactor)>> {
    Ok(match q {
        ImpactQuery::Series => im::impact_factor_series(c, opts.window, opts.impact)?
            .into_iter()
            .map(|(y, f)| (y.to_string(), f))
            .collect(),
        ImpactQuery::Year(y) => vec![(y.to_string(), im::impact_factor_for(c, y, opts.window, opts.impact)?)],
        ImpactQuery::Aggregate { start, end, citing } => vec![(
            format!("{start}-{end} cited in {citing}"),
            im::aggregate_impact(c, start, end, citing, opts.impact)?,
        )],
    })
}

pub fn impact(c: &Corpus, q: ImpactQuery, opts: &Options) -> Result<Vec<Table>> {
    let mut out = vec![
        tables::received(&im::received_summary(c)),
        tables::histogram_table(
            "citing_doc_types",
            "Types of citing documents",
            "type",
            &im::citing_doc_types(c),
            true,
        ),
    ];
    out.extend(tables::citing_countries(
        &im::citing_countries(c, opts.regions.as_ref()),
        opts.top,
    ));
    out.push(tables::impact(&impact_factors(c, q, opts)?, opts.truncate));
    Ok(out)
}

pub fn content(c: &Corpus, opts: &Options) -> Result<Vec<Table>> {
    let kw = ct::keyword_frequency(c, opts.places.as_deref());
    let mut out = vec![tables::ranked_table(
        "keywords",
        "Keywords",
        "keyword",
        &kw.keywords,
        opts.top,
    )];
    if let Some(p) = &kw.places {
        out.push(tables::ranked_table(
            "place_keywords",
            "Geographic keywords",
            "place",
            p,
            None,
        ));
    }
    out.push(tables::count_stats(
        "keywords_per_article",
        "Keywords per article",
        "keywords",
        &ct::keywords_per_article(c),
    ));
    out.push(tables::title_stats(&ct::title_word_stats(c)));
    out.extend(tables::funding(&ct::funding_summary(c)));
    Ok(out)
}

/// Every table for a corpus, in chapter order.
pub fn full_report(c: &Corpus, opts: &Options) -> Result<Vec<Table>> {
    let mut out = summary(c)?;
    out.extend(lotka(c, None, false, opts)?);
    out.extend(collab(c, opts)?);
    out.extend(content(c, opts)?);
    out.extend(refs(c, opts)?);
    out.extend(bradford(&cp::journal_frequency(c), opts)?.0);
    out.extend(impact(c, ImpactQuery::Series, opts)?);
    Ok(out)
}
