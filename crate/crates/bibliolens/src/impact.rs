//! Received citations and impact factors.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use crate::corpus::{ArticleType, Corpus};
use crate::error::{Error, Result};
use crate::histogram::Histogram;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReceivedRow {
    pub articles: u64,
    /// Articles cited at least once.
    pub cited_articles: u64,
    pub citations: u64,
    pub by_citing_year: BTreeMap<i32, u64>,
}

impl ReceivedRow {
    pub fn coverage(&self) -> f64 {
        if self.articles == 0 {
            0.0
        } else {
            self.cited_articles as f64 / self.articles as f64
        }
    }

    fn merge(&mut self, o: &ReceivedRow) {
        self.articles += o.articles;
        self.cited_articles += o.cited_articles;
        self.citations += o.citations;
        for (y, n) in &o.by_citing_year {
            *self.by_citing_year.entry(*y).or_default() += n;
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReceivedSummary {
    /// Keyed by publication year.
    pub per_year: BTreeMap<i32, ReceivedRow>,
    pub total: ReceivedRow,
}

pub fn received_summary(c: &Corpus) -> ReceivedSummary {
    let mut per_year: BTreeMap<i32, ReceivedRow> = BTreeMap::new();
    for a in &c.articles {
        let row = per_year.entry(a.year).or_default();
        row.articles += 1;
        row.cited_articles += (!a.received.is_empty()) as u64;
        row.citations += a.received.len() as u64;
        for r in &a.received {
            *row.by_citing_year.entry(r.citing_year).or_default() += 1;
        }
    }
    let mut total = ReceivedRow::default();
    per_year.values().for_each(|r| total.merge(r));
    ReceivedSummary { per_year, total }
}

pub fn citing_doc_types(c: &Corpus) -> Histogram {
    let mut h = Histogram::new("citing document types");
    for r in c.articles.iter().flat_map(|a| &a.received) {
        h.incr(r.doc_type.label());
    }
    h
}

/// Country → region lookup, read from a `country,region` CSV.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RegionMap(pub BTreeMap<String, String>);

impl RegionMap {
    pub fn read_csv<R: Read>(r: R) -> Result<RegionMap> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(r);
        let mut m = BTreeMap::new();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| {
                let line = e.position().map(|p| p.line()).unwrap_or(0);
                Error::schema(format!("region map line {line}"), e.to_string())
            })?;
            if rec.len() != 2 {
                let line = rec.position().map(|p| p.line()).unwrap_or(0);
                return Err(Error::schema(
                    format!("region map line {line}"),
                    "expected country,region",
                ));
            }
            m.insert(rec[0].to_string(), rec[1].to_string());
        }
        Ok(RegionMap(m))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<RegionMap> {
        let path = path.as_ref();
        let f = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        RegionMap::read_csv(f)
    }

    pub fn region(&self, country: &str) -> Option<&str> {
        self.0.get(country).map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CitingCountries {
    /// Citations whose authors come from a single country.
    pub single: Histogram,
    /// Multi-country citations keyed by sorted country set.
    pub multi: BTreeMap<Vec<String>, u64>,
    pub no_country: u64,
    /// Region rollup of `single`; countries missing from the map go under "Other".
    pub regions: Option<Histogram>,
}

pub fn citing_countries(c: &Corpus, regions: Option<&RegionMap>) -> CitingCountries {
    let mut single = Histogram::new("citing countries");
    let mut multi: BTreeMap<Vec<String>, u64> = BTreeMap::new();
    let mut no_country = 0;
    for r in c.articles.iter().flat_map(|a| &a.received) {
        let mut cs: Vec<String> = r.citing_countries.clone();
        cs.sort();
        cs.dedup();
        match cs.len() {
            0 => no_country += 1,
            1 => single.incr(cs.remove(0)),
            _ => *multi.entry(cs).or_default() += 1,
        }
    }
    let regions = regions.map(|map| {
        let mut h = Histogram::new("citing regions");
        for (k, n) in single.iter() {
            h.add(map.region(&k.to_string()).unwrap_or("Other"), n);
        }
        h
    });
    CitingCountries {
        single,
        multi,
        no_country,
        regions,
    }
}

/// IF = A / B.
pub fn impact_factor(a: u64, b: u64) -> Result<f64> {
    if b == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(a as f64 / b as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpactFactor {
    pub target_year: i32,
    /// Citations counted in the numerator.
    pub a: u64,
    /// Items published in the window.
    pub b: u64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ImpactOptions {
    /// Count only original articles in the denominator.
    pub originals_only: bool,
}

/// Citations received in `citing_year` by articles published in
/// `span_start..=span_end`, over the articles in that span.
pub fn aggregate_impact(
    c: &Corpus,
    span_start: i32,
    span_end: i32,
    citing_year: i32,
    opts: ImpactOptions,
) -> Result<ImpactFactor> {
    if span_start < c.year_start {
        return Err(Error::InsufficientYears {
            start: span_start,
            end: span_end,
            corpus_start: c.year_start,
        });
    }
    let mut a = 0;
    let mut b = 0;
    for art in c.articles.iter().filter(|x| (span_start..=span_end).contains(&x.year)) {
        a += art.received.iter().filter(|r| r.citing_year == citing_year).count() as u64;
        if !opts.originals_only || art.article_type == ArticleType::Original {
            b += 1;
        }
    }
    Ok(ImpactFactor {
        target_year: citing_year,
        a,
        b,
        value: impact_factor(a, b)?,
    })
}

/// The classical `window`-year impact factor for one target year.
pub fn impact_factor_for(c: &Corpus, target: i32, window: u32, opts: ImpactOptions) -> Result<ImpactFactor> {
    if window < 1 {
        return Err(Error::InvalidArgument("window must be at least 1".into()));
    }
    aggregate_impact(c, target - window as i32, target - 1, target, opts)
}

/// Impact factors for every target year whose window lies inside the corpus,
/// up to the year after the last publication year.
pub fn impact_factor_series(c: &Corpus, window: u32, opts: ImpactOptions) -> Result<BTreeMap<i32, ImpactFactor>> {
    if window < 1 {
        return Err(Error::InvalidArgument("window must be at least 1".into()));
    }
    let mut out = BTreeMap::new();
    for t in c.year_start + window as i32..=c.year_end + 1 {
        match impact_factor_for(c, t, window, opts) {
            Ok(f) => {
                out.insert(t, f);
            }
            Err(Error::ZeroDenominator) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
