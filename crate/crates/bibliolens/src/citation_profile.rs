//! Outgoing references: counts, formats, ages, half-life, Bradford zones,
//! self-citation and languages.

use std::collections::{BTreeMap, HashMap};

use crate::corpus::{normalize_title, Corpus, SourceType, DEFAULT_LANGUAGE};
use crate::error::{Error, Result};
use crate::histogram::{Histogram, Key};

#[derive(Debug, Clone, PartialEq)]
pub struct RefsPerYear {
    pub counts: Histogram,
    pub articles: u64,
    pub total: u64,
    /// References per article over the whole corpus.
    pub mean: f64,
}

pub fn references_per_year(c: &Corpus) -> RefsPerYear {
    let mut counts = Histogram::new("references");
    for a in &c.articles {
        counts.add(a.year, a.references.len() as u64);
    }
    let total = counts.total();
    let articles = c.articles.len() as u64;
    RefsPerYear {
        counts,
        articles,
        total,
        mean: if articles == 0 {
            0.0
        } else {
            total as f64 / articles as f64
        },
    }
}

/// Lower edges of the default buckets: 0–10, 11–20, …, 81–90, 91+.
pub const DEFAULT_REF_EDGES: [u64; 10] = [0, 11, 21, 31, 41, 51, 61, 71, 81, 91];

#[derive(Debug, Clone, PartialEq)]
pub struct Bucket {
    pub lo: u64,
    /// Inclusive upper end; `None` for the open last bucket.
    pub hi: Option<u64>,
    pub count: u64,
}

impl Bucket {
    pub fn label(&self) -> String {
        match self.hi {
            Some(h) => format!("{}-{}", self.lo, h),
            None => format!("{}+", self.lo),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RangeTable {
    pub buckets: Vec<Bucket>,
    /// Articles with fewer references than the first edge.
    pub below: u64,
    pub articles: u64,
}

/// Articles bucketed by reference count. `edges` are the inclusive lower
/// ends of consecutive buckets; the last bucket is open.
pub fn refs_per_article_ranges(c: &Corpus, edges: &[u64]) -> Result<RangeTable> {
    if edges.is_empty() || edges.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadEdges);
    }
    let mut buckets: Vec<Bucket> = edges
        .iter()
        .enumerate()
        .map(|(i, &lo)| Bucket {
            lo,
            hi: edges.get(i + 1).map(|n| n - 1),
            count: 0,
        })
        .collect();
    let mut below = 0;
    for a in &c.articles {
        let n = a.references.len() as u64;
        match edges.iter().rposition(|&e| e <= n) {
            Some(i) => buckets[i].count += 1,
            None => below += 1,
        }
    }
    Ok(RangeTable {
        buckets,
        below,
        articles: c.articles.len() as u64,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FormatTable {
    pub total: BTreeMap<SourceType, u64>,
    pub per_year: BTreeMap<i32, BTreeMap<SourceType, u64>>,
    pub grand_total: u64,
}

pub fn format_distribution(c: &Corpus) -> FormatTable {
    let mut total: BTreeMap<SourceType, u64> = SourceType::ALL.iter().map(|t| (*t, 0)).collect();
    let mut per_year: BTreeMap<i32, BTreeMap<SourceType, u64>> = BTreeMap::new();
    for a in &c.articles {
        let row = per_year
            .entry(a.year)
            .or_insert_with(|| SourceType::ALL.iter().map(|t| (*t, 0)).collect());
        for r in &a.references {
            *total.get_mut(&r.source_type).expect("all types present") += 1;
            *row.get_mut(&r.source_type).expect("all types present") += 1;
        }
    }
    FormatTable {
        grand_total: total.values().sum(),
        total,
        per_year,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AgeBin {
    pub label: String,
    pub lo: i64,
    /// Inclusive upper age; `None` for an open-ended bin.
    pub hi: Option<i64>,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AgeProfile {
    pub bins: Vec<AgeBin>,
    pub undated: u64,
    pub dated: u64,
    /// Smallest age whose cumulative count reaches half the dated references.
    pub half_life_integer: Option<i64>,
    /// Linear interpolation inside the crossing bin.
    pub half_life_interpolated: Option<f64>,
}

impl AgeProfile {
    pub fn from_bins(mut bins: Vec<AgeBin>, undated: u64) -> Result<AgeProfile> {
        bins.sort_by_key(|b| b.lo);
        for w in bins.windows(2) {
            match w[0].hi {
                Some(h) if h < w[1].lo => {}
                _ => {
                    return Err(Error::schema(
                        format!("age bin {:?}", w[1].label),
                        format!("overlaps {:?}", w[0].label),
                    ))
                }
            }
        }
        let dated: u64 = bins.iter().map(|b| b.count).sum();
        let mut half_life_integer = None;
        let mut half_life_interpolated = None;
        if dated > 0 {
            let mut cum = 0u64;
            for b in &bins {
                let before = cum;
                cum += b.count;
                if 2 * cum >= dated {
                    let hi = b.hi.unwrap_or(b.lo);
                    let start = (b.lo - 1).max(0) as f64;
                    let frac = (dated as f64 / 2.0 - before as f64) / b.count as f64;
                    half_life_integer = Some(hi);
                    half_life_interpolated = Some(start + frac * (hi as f64 - start));
                    break;
                }
            }
        }
        Ok(AgeProfile {
            bins,
            undated,
            dated,
            half_life_integer,
            half_life_interpolated,
        })
    }

    /// Bins from an integer-keyed histogram, one age per key.
    pub fn from_histogram(ages: &Histogram, undated: u64) -> Result<AgeProfile> {
        let mut bins = Vec::new();
        for (k, n) in ages.iter() {
            let age = k
                .as_int()
                .ok_or_else(|| Error::schema(format!("age key {k:?}"), "expected an integer age"))?;
            if age < 0 {
                return Err(Error::schema(format!("age key {age}"), "negative age"));
            }
            bins.push(AgeBin {
                label: age.to_string(),
                lo: age,
                hi: Some(age),
                count: n,
            });
        }
        AgeProfile::from_bins(bins, undated)
    }

    /// Bins from a text-keyed table with labels such as `up to 1`, `7`,
    /// `31-40`, `51+` and `Undated`.
    pub fn from_labelled(h: &Histogram) -> Result<AgeProfile> {
        let mut bins = Vec::new();
        let mut undated = 0;
        for (k, n) in h.iter() {
            let label = k.to_string();
            let t = label.trim().to_lowercase();
            let bad = || Error::schema(format!("age key {label:?}"), "unrecognised age label");
            let int = |s: &str| s.trim().parse::<i64>().map_err(|_| bad());
            let (lo, hi) = if t == "undated" {
                undated += n;
                continue;
            } else if let Some(rest) = t.strip_prefix("up to") {
                (0, Some(int(rest)?))
            } else if let Some(rest) = t.strip_suffix('+') {
                (int(rest)?, None)
            } else if let Some((a, b)) = t.split_once('-') {
                (int(a)?, Some(int(b)?))
            } else {
                let a = int(&t)?;
                (a, Some(a))
            };
            bins.push(AgeBin {
                label,
                lo,
                hi,
                count: n,
            });
        }
        AgeProfile::from_bins(bins, undated)
    }

    /// Dated references no older than `age`.
    pub fn cumulative_at(&self, age: i64) -> u64 {
        self.bins
            .iter()
            .filter(|b| b.hi.is_some_and(|h| h <= age))
            .map(|b| b.count)
            .sum()
    }

    /// All references, dated or not.
    pub fn total(&self) -> u64 {
        self.dated + self.undated
    }

    /// Integer-keyed view (lower edge → count).
    pub fn ages_histogram(&self) -> Histogram {
        Histogram::from_pairs("ages", self.bins.iter().map(|b| (b.lo, b.count)))
    }
}

/// Age of each dated reference, citing year minus publication year, with
/// ages 0 and 1 sharing an "up to 1" bin.
pub fn age_profile(c: &Corpus) -> AgeProfile {
    let mut ages: BTreeMap<i64, u64> = BTreeMap::new();
    let mut undated = 0;
    for a in &c.articles {
        for r in &a.references {
            match r.pub_year {
                Some(y) => *ages.entry(((a.year - y) as i64).max(1)).or_default() += 1,
                None => undated += 1,
            }
        }
    }
    let bins = ages
        .into_iter()
        .map(|(age, n)| {
            if age == 1 {
                AgeBin {
                    label: "up to 1".into(),
                    lo: 0,
                    hi: Some(1),
                    count: n,
                }
            } else {
                AgeBin {
                    label: age.to_string(),
                    lo: age,
                    hi: Some(age),
                    count: n,
                }
            }
        })
        .collect();
    AgeProfile::from_bins(bins, undated).expect("bins from distinct ages never overlap")
}

#[derive(Debug, Clone, PartialEq)]
pub struct PubYearMatrix {
    /// (publication year or undated, citing year) → references.
    pub cells: BTreeMap<(Option<i32>, i32), u64>,
    pub row_totals: BTreeMap<Option<i32>, u64>,
    pub col_totals: BTreeMap<i32, u64>,
}

/// Publication year of references against the citing year. Publication
/// years below `floor` are folded into `floor`.
pub fn publication_year_matrix(c: &Corpus, floor: Option<i32>) -> PubYearMatrix {
    let mut cells: BTreeMap<(Option<i32>, i32), u64> = BTreeMap::new();
    for a in &c.articles {
        for r in &a.references {
            let py = match (r.pub_year, floor) {
                (Some(y), Some(f)) => Some(y.max(f)),
                (y, _) => y,
            };
            *cells.entry((py, a.year)).or_default() += 1;
        }
    }
    let mut row_totals: BTreeMap<Option<i32>, u64> = BTreeMap::new();
    let mut col_totals: BTreeMap<i32, u64> = BTreeMap::new();
    for (&(p, y), &n) in &cells {
        *row_totals.entry(p).or_default() += n;
        *col_totals.entry(y).or_default() += n;
    }
    PubYearMatrix {
        cells,
        row_totals,
        col_totals,
    }
}

fn is_self_title(title: &str, journal: &str) -> bool {
    normalize_title(title) == normalize_title(journal)
}

/// Cited journal titles, grouped by normalized title and shown in their most
/// common written form. Citations to the corpus journal itself are left out.
pub fn journal_frequency(c: &Corpus) -> Histogram {
    let mut groups: HashMap<String, BTreeMap<&str, u64>> = HashMap::new();
    for a in &c.articles {
        for r in &a.references {
            if let Some(t) = &r.journal_title {
                if !is_self_title(t, &c.journal_name) {
                    *groups
                        .entry(normalize_title(t))
                        .or_default()
                        .entry(t.trim())
                        .or_default() += 1;
                }
            }
        }
    }
    let mut h = Histogram::new("journals");
    for forms in groups.values() {
        let total: u64 = forms.values().sum();
        let shown = forms
            .iter()
            .max_by(|x, y| x.1.cmp(y.1).then_with(|| y.0.cmp(x.0)))
            .map(|(f, _)| f.to_string())
            .expect("group is never empty");
        h.add(shown, total);
    }
    h
}

#[derive(Debug, Clone, PartialEq)]
pub struct Zone {
    pub journal_count: usize,
    pub citation_count: u64,
    pub titles: Vec<Key>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BradfordPartition {
    pub zones: Vec<Zone>,
    pub total_citations: u64,
    /// Journal counts relative to zone 1.
    pub ratios: Vec<f64>,
    /// (n_k / n_1)^(1/(k−1)).
    pub b_estimate: f64,
    /// Input in rank order, zero counts dropped.
    pub ranked: Vec<(Key, u64)>,
}

/// Split a frequency list into `k` zones of roughly equal citation yield.
///
/// Walks the ranked list and closes zone m at the first journal that brings
/// the running total to at least m·T/k; that journal stays in zone m.
pub fn bradford_partition(freqs: &Histogram, k: usize) -> Result<BradfordPartition> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "zone count must be at least 2, got {k}"
        )));
    }
    let ranked: Vec<(Key, u64)> = freqs.ranked().into_iter().filter(|(_, n)| *n > 0).collect();
    if ranked.len() < k {
        return Err(Error::TooFewJournals {
            needed: k,
            got: ranked.len(),
        });
    }
    let total: u64 = ranked.iter().map(|(_, n)| n).sum();
    let kk = k as u128;
    let mut zones = Vec::with_capacity(k);
    let mut cur = Zone {
        journal_count: 0,
        citation_count: 0,
        titles: Vec::new(),
    };
    let mut cum: u128 = 0;
    for (title, n) in &ranked {
        cum += *n as u128;
        cur.journal_count += 1;
        cur.citation_count += n;
        cur.titles.push(title.clone());
        let m = zones.len() as u128 + 1;
        if m < kk && cum * kk >= m * total as u128 {
            zones.push(std::mem::replace(
                &mut cur,
                Zone {
                    journal_count: 0,
                    citation_count: 0,
                    titles: Vec::new(),
                },
            ));
        }
    }
    zones.push(cur);
    debug_assert_eq!(zones.len(), k);
    let n1 = zones[0].journal_count as f64;
    let ratios = zones.iter().map(|z| z.journal_count as f64 / n1).collect();
    let b_estimate = (zones[k - 1].journal_count as f64 / n1).powf(1.0 / (k as f64 - 1.0));
    Ok(BradfordPartition {
        zones,
        total_citations: total,
        ratios,
        b_estimate,
        ranked,
    })
}

impl BradfordPartition {
    /// (ln cumulative rank, cumulative citations) for a Bradford plot.
    pub fn curve(&self) -> Vec<(f64, f64)> {
        let mut cum = 0u64;
        self.ranked
            .iter()
            .enumerate()
            .map(|(i, (_, n))| {
                cum += n;
                (((i + 1) as f64).ln(), cum as f64)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SelfCitationRow {
    /// Articles citing the corpus journal at least once.
    pub citing_articles: u64,
    pub self_citations: u64,
    pub references: u64,
}

impl SelfCitationRow {
    pub fn rate(&self) -> f64 {
        if self.references == 0 {
            0.0
        } else {
            self.self_citations as f64 / self.references as f64
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfCitation {
    pub journal: String,
    pub total: SelfCitationRow,
    pub per_year: BTreeMap<i32, SelfCitationRow>,
}

pub fn self_citation(c: &Corpus, journal_name: &str) -> SelfCitation {
    let mut per_year: BTreeMap<i32, SelfCitationRow> = BTreeMap::new();
    for a in &c.articles {
        let row = per_year.entry(a.year).or_default();
        let n = a
            .references
            .iter()
            .filter(|r| {
                r.journal_title
                    .as_deref()
                    .is_some_and(|t| is_self_title(t, journal_name))
            })
            .count() as u64;
        row.references += a.references.len() as u64;
        row.self_citations += n;
        row.citing_articles += (n > 0) as u64;
    }
    let mut total = SelfCitationRow::default();
    for r in per_year.values() {
        total.citing_articles += r.citing_articles;
        total.self_citations += r.self_citations;
        total.references += r.references;
    }
    SelfCitation {
        journal: journal_name.to_string(),
        total,
        per_year,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LanguageTable {
    pub by_language: Histogram,
    /// Non-default languages → (title → references).
    pub titles: BTreeMap<String, BTreeMap<String, u64>>,
}

impl LanguageTable {
    pub fn non_default_total(&self) -> u64 {
        self.by_language.total() - self.by_language.get(DEFAULT_LANGUAGE)
    }

    pub fn non_default_titles(&self) -> usize {
        self.titles.values().map(|m| m.len()).sum()
    }
}

pub fn language_distribution(c: &Corpus) -> LanguageTable {
    let mut by_language = Histogram::new("languages");
    let mut titles: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
    for a in &c.articles {
        for r in &a.references {
            by_language.incr(r.language.as_str());
            if r.language != DEFAULT_LANGUAGE {
                let t = r
                    .journal_title
                    .clone()
                    .unwrap_or_else(|| format!("({})", r.source_type.label()));
                *titles.entry(r.language.clone()).or_default().entry(t).or_default() += 1;
            }
        }
    }
    LanguageTable { by_language, titles }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tests::{article, author, corpus};
    use crate::corpus::Reference;

    fn jref(title: &str, year: Option<i32>) -> Reference {
        Reference {
            source_type: SourceType::Journal,
            pub_year: year,
            journal_title: Some(title.into()),
            language: DEFAULT_LANGUAGE.into(),
        }
    }

    fn with_refs(id: &str, year: i32, refs: Vec<Reference>) -> crate::corpus::Article {
        let mut a = article(id, year, vec![author("X", "a", "M")]);
        a.references = refs;
        a
    }

    #[test]
    fn per_year_and_mean() {
        let c = corpus(vec![with_refs("1", 2004, vec![jref("A", Some(2000)); 7])]);
        let r = references_per_year(&c);
        assert_eq!(r.mean, 7.0);
        let c = corpus(vec![with_refs("1", 2004, vec![])]);
        assert_eq!(references_per_year(&c).mean, 0.0);
    }

    #[test]
    fn range_buckets() {
        let c = corpus(vec![
            with_refs("1", 2004, vec![jref("A", Some(2000)); 85]),
            with_refs("2", 2004, vec![jref("A", Some(2000)); 10]),
            with_refs("3", 2004, vec![jref("A", Some(2000)); 11]),
        ]);
        let t = refs_per_article_ranges(&c, &DEFAULT_REF_EDGES).unwrap();
        let by: BTreeMap<String, u64> = t.buckets.iter().map(|b| (b.label(), b.count)).collect();
        assert_eq!(by["81-90"], 1);
        assert_eq!(by["0-10"], 1);
        assert_eq!(by["11-20"], 1);
        assert_eq!(by["91+"], 0);
        assert!(matches!(refs_per_article_ranges(&c, &[0, 5, 5]), Err(Error::BadEdges)));
        assert!(matches!(refs_per_article_ranges(&c, &[]), Err(Error::BadEdges)));
    }

    #[test]
    fn half_life_single_bin() {
        let p = AgeProfile::from_histogram(&Histogram::from_pairs("a", [(5i64, 100)]), 0).unwrap();
        assert_eq!(p.half_life_integer, Some(5));
        assert_eq!(p.half_life_interpolated, Some(4.5));
    }

    #[test]
    fn labelled_ages() {
        let h = Histogram::from_pairs(
            "a",
            [
                ("up to 1", 10u64),
                ("2", 10),
                ("3", 20),
                ("31-40", 5),
                ("51+", 5),
                ("Undated", 3),
            ],
        );
        let p = AgeProfile::from_labelled(&h).unwrap();
        assert_eq!(p.undated, 3);
        assert_eq!(p.dated, 50);
        assert_eq!(p.cumulative_at(2), 20);
        assert_eq!(p.cumulative_at(40), 45);
        assert_eq!(p.half_life_integer, Some(3));
        assert_eq!(p.half_life_interpolated, Some(2.25));
        let bad = Histogram::from_pairs("a", [("1-5", 1u64), ("3", 1)]);
        assert!(AgeProfile::from_labelled(&bad).is_err());
    }

    #[test]
    fn ages_from_corpus_merge_zero_and_one() {
        let c = corpus(vec![with_refs(
            "1",
            2004,
            vec![
                jref("A", Some(2004)),
                jref("A", Some(2003)),
                jref("A", Some(2006)),
                jref("A", None),
            ],
        )]);
        let p = age_profile(&c);
        assert_eq!(p.bins.len(), 1);
        assert_eq!(p.bins[0].label, "up to 1");
        assert_eq!(p.bins[0].count, 3);
        assert_eq!(p.undated, 1);
    }

    #[test]
    fn matrix_marginals() {
        let c = corpus(vec![with_refs(
            "1",
            2004,
            vec![jref("A", Some(2000)), jref("A", Some(1930))],
        )]);
        let m = publication_year_matrix(&c, Some(1949));
        assert_eq!(m.cells[&(Some(2000), 2004)], 1);
        assert_eq!(m.row_totals[&Some(1949)], 1);
        assert_eq!(m.col_totals[&2004], 2);
    }

    #[test]
    fn journal_ranking_groups_forms() {
        let mut c = corpus(vec![with_refs(
            "1",
            2004,
            vec![
                jref("Lancet", None),
                jref("lancet.", None),
                jref("Lancet", None),
                jref("BMJ", None),
                jref("Test  J", None),
            ],
        )]);
        c.journal_name = "Test J".into();
        let r = journal_frequency(&c).ranked();
        assert_eq!(r[0], (Key::from("Lancet"), 3));
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn bradford_small_cases() {
        let h = Histogram::from_pairs("j", [("A", 6u64), ("B", 3), ("C", 2), ("D", 1)]);
        let p = bradford_partition(&h, 3).unwrap();
        let sizes: Vec<usize> = p.zones.iter().map(|z| z.journal_count).collect();
        assert_eq!(sizes, [1, 1, 2]);
        let h = Histogram::from_pairs("j", [("A", 4u64), ("B", 4), ("C", 4)]);
        let p = bradford_partition(&h, 3).unwrap();
        assert_eq!(p.b_estimate, 1.0);
        let h = Histogram::from_pairs("j", [("A", 4u64), ("B", 4)]);
        assert!(matches!(bradford_partition(&h, 3), Err(Error::TooFewJournals { .. })));
    }

    #[test]
    fn self_cites() {
        let c = corpus(vec![
            with_refs("1", 2004, vec![jref("Test J.", None), jref("Other", None)]),
            with_refs("2", 2005, vec![jref("Other", None)]),
        ]);
        let s = self_citation(&c, "Test J");
        assert_eq!(s.total.self_citations, 1);
        assert_eq!(s.total.citing_articles, 1);
        assert_eq!(s.total.rate(), 1.0 / 3.0);
        assert_eq!(s.per_year[&2005].rate(), 0.0);
    }

    #[test]
    fn languages() {
        let mut r = jref("Zhonghua", Some(2001));
        r.language = "Chinese".into();
        let c = corpus(vec![with_refs("1", 2004, vec![r.clone(), r, jref("A", None)])]);
        let l = language_distribution(&c);
        assert_eq!(l.non_default_total(), 2);
        assert_eq!(l.non_default_titles(), 1);
        assert_eq!(l.by_language.get("English"), 1);
    }
}
