//! Keywords, title lengths and research funding.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use crate::corpus::{normalize_keyword, ArticleType, Corpus};
use crate::error::{Error, Result};
use crate::histogram::Histogram;

#[derive(Debug, Clone, PartialEq)]
pub struct KeywordTable {
    /// Keyword (most common written form) → occurrences.
    pub keywords: Histogram,
    /// Subset of `keywords` matching the place list, if one was given.
    pub places: Option<Histogram>,
}

/// Case-insensitive keyword counts, optionally with a place-name sublist.
pub fn keyword_frequency(c: &Corpus, places: Option<&[String]>) -> KeywordTable {
    let mut groups: HashMap<String, BTreeMap<&str, u64>> = HashMap::new();
    for a in &c.articles {
        for k in &a.keywords {
            let key = normalize_keyword(k);
            if !key.is_empty() {
                *groups.entry(key).or_default().entry(k.trim()).or_default() += 1;
            }
        }
    }
    let mut keywords = Histogram::new("keywords");
    let mut shown_by_key = HashMap::new();
    for (key, forms) in &groups {
        let shown = forms
            .iter()
            .max_by(|x, y| x.1.cmp(y.1).then_with(|| y.0.cmp(x.0)))
            .map(|(f, _)| f.to_string())
            .expect("group is never empty");
        keywords.add(shown.clone(), forms.values().sum());
        shown_by_key.insert(key.clone(), shown);
    }
    let places = places.map(|list| {
        let wanted: BTreeSet<String> = list.iter().map(|p| normalize_keyword(p)).collect();
        let mut h = Histogram::new("places");
        for (key, shown) in &shown_by_key {
            if wanted.contains(key) {
                h.add(shown.clone(), keywords.get(shown.as_str()));
            }
        }
        h
    });
    KeywordTable { keywords, places }
}

/// One place name per line; blank lines and `#` comments are ignored.
pub fn load_places(path: impl AsRef<Path>) -> Result<Vec<String>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(parse_places(&text))
}

pub fn parse_places(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountStats {
    pub histogram: Histogram,
    pub mean: f64,
}

/// Articles by number of keywords, zero included.
pub fn keywords_per_article(c: &Corpus) -> CountStats {
    let h = Histogram::from_pairs(
        "keywords per article",
        c.articles.iter().map(|a| (a.keywords.len() as i64, 1)),
    );
    CountStats {
        mean: h.mean_key(),
        histogram: h,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TitleStats {
    pub histogram: Histogram,
    pub mean: f64,
    /// (word count, articles)
    pub min: Option<(i64, u64)>,
    pub max: Option<(i64, u64)>,
    /// Most frequent word count; ties go to the shorter length.
    pub mode: Option<(i64, u64)>,
}

pub fn title_word_count(title: &str) -> usize {
    title.split_whitespace().count()
}

pub fn title_word_stats(c: &Corpus) -> TitleStats {
    let h = Histogram::from_pairs(
        "title words",
        c.articles.iter().map(|a| (title_word_count(&a.title) as i64, 1)),
    );
    let bins: Vec<(i64, u64)> = h.int_bins().collect();
    let mode = bins
        .iter()
        .copied()
        .fold(None, |best: Option<(i64, u64)>, x| match best {
            Some(b) if b.1 >= x.1 => Some(b),
            _ => Some(x),
        });
    TitleStats {
        mean: h.mean_key(),
        min: bins.first().copied(),
        max: bins.last().copied(),
        mode,
        histogram: h,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FundingRow {
    pub originals: u64,
    pub funded_originals: u64,
}

impl FundingRow {
    pub fn ratio(&self) -> f64 {
        if self.originals == 0 {
            0.0
        } else {
            self.funded_originals as f64 / self.originals as f64
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FundingSummary {
    /// Funder → year → articles acknowledging it.
    pub funders: BTreeMap<String, BTreeMap<i32, u64>>,
    pub per_year: BTreeMap<i32, FundingRow>,
    pub total: FundingRow,
}

pub fn funding_summary(c: &Corpus) -> FundingSummary {
    let mut funders: BTreeMap<String, BTreeMap<i32, u64>> = BTreeMap::new();
    let mut per_year: BTreeMap<i32, FundingRow> = BTreeMap::new();
    for a in &c.articles {
        let distinct: BTreeSet<&str> = a.funders.iter().map(|f| f.trim()).filter(|f| !f.is_empty()).collect();
        for f in &distinct {
            *funders.entry(f.to_string()).or_default().entry(a.year).or_default() += 1;
        }
        let row = per_year.entry(a.year).or_default();
        if a.article_type == ArticleType::Original {
            row.originals += 1;
            row.funded_originals += (!distinct.is_empty()) as u64;
        }
    }
    let mut total = FundingRow::default();
    for r in per_year.values() {
        total.originals += r.originals;
        total.funded_originals += r.funded_originals;
    }
    FundingSummary {
        funders,
        per_year,
        total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tests::{article, author, corpus};

    fn with(id: &str, title: &str, kws: &[&str], funders: &[&str]) -> crate::corpus::Article {
        let mut a = article(id, 2004, vec![author("X", "a", "M")]);
        a.title = title.into();
        a.keywords = kws.iter().map(|s| s.to_string()).collect();
        a.funders = funders.iter().map(|s| s.to_string()).collect();
        a
    }

    #[test]
    fn keyword_counts_fold_case() {
        let c = corpus(vec![
            with("1", "A B C", &["Diabetes", "Malaysia"], &[]),
            with("2", "A B", &["diabetes ", "Diabetes", "Penang"], &[]),
        ]);
        let places = parse_places("# states\nMalaysia\n\nPenang\nSabah\n");
        let t = keyword_frequency(&c, Some(&places));
        assert_eq!(t.keywords.get("Diabetes"), 3);
        let p = t.places.unwrap();
        assert_eq!(p.get("Malaysia"), 1);
        assert_eq!(p.total(), 2);
        assert!(keyword_frequency(&corpus(vec![]), None).keywords.is_empty());
    }

    #[test]
    fn per_article_and_titles() {
        let c = corpus(vec![with("1", "A B C", &["a", "b", "c", "d"], &[])]);
        assert_eq!(keywords_per_article(&c).mean, 4.0);
        let c = corpus(vec![with("1", "A  B\tC", &[], &[]), with("2", "One two", &[], &[])]);
        let t = title_word_stats(&c);
        assert_eq!(t.min, Some((2, 1)));
        assert_eq!(t.max, Some((3, 1)));
        assert_eq!(t.mode, Some((2, 1)));
        assert_eq!(t.mean, 2.5);
        assert_eq!(keywords_per_article(&c).histogram.get(0i64), 2);
    }

    #[test]
    fn funding() {
        let mut b = with("2", "t", &[], &["IRPA"]);
        b.article_type = ArticleType::CaseReport;
        let c = corpus(vec![
            with("1", "t", &[], &["IRPA", "IRPA"]),
            b,
            with("3", "t", &[], &[]),
        ]);
        let f = funding_summary(&c);
        assert_eq!(f.total.originals, 2);
        assert_eq!(f.total.funded_originals, 1);
        assert_eq!(f.funders["IRPA"][&2004], 2);
        assert_eq!(f.total.ratio(), 0.5);
        let none = funding_summary(&corpus(vec![with("1", "t", &[], &[])]));
        assert_eq!(none.total.ratio(), 0.0);
    }
}
