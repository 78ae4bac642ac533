//! Article and author productivity, Lotka fitting, core-author cohorts.

use std::collections::{BTreeMap, HashMap};

use crate::corpus::{normalize_name, unique_authors, Corpus};
use crate::display;
use crate::error::{Error, Result};
use crate::histogram::Histogram;

#[derive(Debug, Clone, PartialEq)]
pub struct YearRow {
    pub year: i32,
    pub count: u64,
    pub percent: f64,
    pub cumulative: u64,
    pub cumulative_percent: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct YearSeries {
    pub counts: Histogram,
    pub rows: Vec<YearRow>,
    pub total: u64,
    /// Mean per year over the years that appear.
    pub mean: f64,
}

impl YearSeries {
    pub fn from_histogram(counts: Histogram) -> Self {
        let total = counts.total();
        let mut cum = 0;
        let rows: Vec<YearRow> = counts
            .int_bins()
            .map(|(y, n)| {
                cum += n;
                YearRow {
                    year: y as i32,
                    count: n,
                    percent: pct(n, total),
                    cumulative: cum,
                    cumulative_percent: pct(cum, total),
                }
            })
            .collect();
        let mean = if rows.is_empty() {
            0.0
        } else {
            total as f64 / rows.len() as f64
        };
        YearSeries {
            counts,
            rows,
            total,
            mean,
        }
    }
}

fn pct(n: u64, total: u64) -> f64 {
    if total == 0 {
        0.0
    } else {
        100.0 * n as f64 / total as f64
    }
}

pub fn articles_per_year(c: &Corpus) -> YearSeries {
    let mut h = Histogram::new("articles");
    for a in &c.articles {
        h.incr(a.year);
    }
    YearSeries::from_histogram(h)
}

/// Authorship slots per year.
pub fn authorships_per_year(c: &Corpus) -> Histogram {
    let mut h = Histogram::new("authorships");
    for a in &c.articles {
        if !a.authors.is_empty() {
            h.add(a.year, a.authors.len() as u64);
        }
    }
    h
}

/// Number of authors with n publications, a_n.
pub fn productivity_histogram(c: &Corpus) -> Result<Histogram> {
    let mut h = Histogram::new("authors by publication count");
    for n in unique_authors(c)?.values() {
        h.incr(*n as i64);
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LotkaMethod {
    /// c from the n=1 and n=2 bins.
    TwoPoint,
    /// c supplied by the caller.
    Fixed,
    /// Least-squares slope of ln a_n on ln n. Not the classical method.
    LeastSquares,
}

impl LotkaMethod {
    pub fn label(self) -> &'static str {
        match self {
            LotkaMethod::TwoPoint => "two-point",
            LotkaMethod::Fixed => "fixed",
            LotkaMethod::LeastSquares => "lsq",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LotkaFit {
    pub method: LotkaMethod,
    pub c: f64,
    pub a1: u64,
    pub observed: Histogram,
    pub expected: Histogram,
    pub max_abs_dev: u64,
    /// Σ (o−e)²/e over bins with e ≥ 5.
    pub chi_square: f64,
    pub chi_square_bins: usize,
    pub total_observed: u64,
    pub total_expected: u64,
}

impl LotkaFit {
    fn build(method: LotkaMethod, c: f64, observed: &Histogram) -> Result<LotkaFit> {
        let a1 = observed.get(1i64);
        if a1 == 0 {
            return Err(Error::MissingBin(1));
        }
        let ns: Vec<i64> = observed.int_bins().map(|(n, _)| n).filter(|n| *n >= 1).collect();
        let expected = lotka_expected(a1, c, &ns);
        let mut max_abs_dev = 0;
        let mut chi_square = 0.0;
        let mut chi_square_bins = 0;
        for &n in &ns {
            let o = observed.get(n);
            let e = expected.get(n);
            max_abs_dev = max_abs_dev.max(o.abs_diff(e));
            if e >= 5 {
                let d = o as f64 - e as f64;
                chi_square += d * d / e as f64;
                chi_square_bins += 1;
            }
        }
        let mut observed = observed.clone();
        observed.label = "observed".into();
        Ok(LotkaFit {
            method,
            c,
            a1,
            total_observed: observed.total(),
            total_expected: expected.total(),
            observed,
            expected,
            max_abs_dev,
            chi_square,
            chi_square_bins,
        })
    }
}

/// round-half-up(a1 / n^c) for each n.
pub fn lotka_expected(a1: u64, c: f64, ns: &[i64]) -> Histogram {
    let mut h = Histogram::new("expected");
    for &n in ns {
        let x = a1 as f64 / (n as f64).powf(c);
        h.add(n, (x + 0.5).floor() as u64);
    }
    h
}

/// Classical two-point estimate c = ln(a1/a2) / ln 2.
pub fn lotka_fit_two_point(observed: &Histogram) -> Result<LotkaFit> {
    let a1 = observed.get(1i64);
    let a2 = observed.get(2i64);
    if a1 == 0 {
        return Err(Error::MissingBin(1));
    }
    if a2 == 0 {
        return Err(Error::MissingBin(2));
    }
    let c = (a1 as f64 / a2 as f64).ln() / 2f64.ln();
    LotkaFit::build(LotkaMethod::TwoPoint, c, observed)
}

/// Expected counts under a fixed exponent.
pub fn lotka_fit_fixed(observed: &Histogram, c: f64) -> Result<LotkaFit> {
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidArgument(format!("exponent must be positive, got {c}")));
    }
    LotkaFit::build(LotkaMethod::Fixed, c, observed)
}

/// Inverse-square comparison, c = 2.
pub fn lotka_fit_c2(observed: &Histogram) -> Result<LotkaFit> {
    lotka_fit_fixed(observed, 2.0)
}

/// Least-squares fit of ln a_n = ln a1 − c ln n over non-empty bins.
/// Expected counts are anchored at the observed a1.
pub fn lotka_fit_lsq(observed: &Histogram) -> Result<LotkaFit> {
    let pts: Vec<(f64, f64)> = observed
        .int_bins()
        .filter(|(n, k)| *n >= 1 && *k > 0)
        .map(|(n, k)| ((n as f64).ln(), (k as f64).ln()))
        .collect();
    if observed.get(1i64) == 0 {
        return Err(Error::MissingBin(1));
    }
    if pts.len() < 2 {
        return Err(Error::MissingBin(2));
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let c = -sxy / sxx;
    LotkaFit::build(LotkaMethod::LeastSquares, c, observed)
}

/// The exponent as printed in hand calculations: the ratio a1/a2 rounded to
/// two decimals, both logarithms truncated to three.
pub fn lotka_c_three_decimal(a1: u64, a2: u64) -> f64 {
    let ratio = display::round_half_up(a1 as f64 / a2 as f64, 2);
    display::truncate(ratio.log10(), 3) / display::truncate(2f64.log10(), 3)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuthorCohort {
    pub rank_group: usize,
    pub paper_count: u64,
    /// (name, affiliation), sorted by name.
    pub members: Vec<(String, String)>,
}

/// Authors grouped by identical publication count, most productive first.
pub fn core_authors(c: &Corpus, min_count: u64) -> Result<Vec<AuthorCohort>> {
    if min_count < 1 {
        return Err(Error::InvalidArgument("min_count must be at least 1".into()));
    }
    let counts = unique_authors(c)?;
    let mut affs: HashMap<String, BTreeMap<&str, u64>> = HashMap::new();
    for a in &c.articles {
        for au in &a.authors {
            *affs
                .entry(normalize_name(&au.name))
                .or_default()
                .entry(au.affiliation.as_str())
                .or_insert(0) += 1;
        }
    }
    let mut by_count: BTreeMap<u64, Vec<(String, String)>> = BTreeMap::new();
    for (name, n) in counts {
        if n < min_count {
            continue;
        }
        // ties go to the lexicographically smallest affiliation
        let aff = affs
            .get(&name)
            .and_then(|m| {
                m.iter()
                    .max_by(|x, y| x.1.cmp(y.1).then_with(|| y.0.cmp(x.0)))
                    .map(|(a, _)| a.to_string())
            })
            .unwrap_or_default();
        by_count.entry(n).or_default().push((name, aff));
    }
    Ok(by_count
        .into_iter()
        .rev()
        .enumerate()
        .map(|(i, (paper_count, mut members))| {
            members.sort();
            AuthorCohort {
                rank_group: i + 1,
                paper_count,
                members,
            }
        })
        .collect())
}
