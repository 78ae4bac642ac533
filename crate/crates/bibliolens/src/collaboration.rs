//! Co-authorship, degree of collaboration, country and affiliation breakdowns.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::corpus::{normalize_name, AffiliationType, Article, AuthorRecord, Corpus};
use crate::error::{Error, Result};
use crate::histogram::Histogram;

/// Articles by number of listed authors, overall and per year.
/// Articles without authors are left out.
#[derive(Debug, Clone, PartialEq)]
pub struct CoauthorTable {
    pub total: Histogram,
    pub per_year: BTreeMap<i32, Histogram>,
}

pub fn coauthorship_histogram(c: &Corpus) -> CoauthorTable {
    let mut total = Histogram::new("articles by author count");
    let mut per_year: BTreeMap<i32, Histogram> = BTreeMap::new();
    for a in c.articles.iter().filter(|a| !a.authors.is_empty()) {
        let n = a.authors.len() as i64;
        total.incr(n);
        per_year
            .entry(a.year)
            .or_insert_with(|| Histogram::new(a.year.to_string()))
            .incr(n);
    }
    CoauthorTable { total, per_year }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Degree {
    pub ns: u64,
    pub nm: u64,
    pub c: f64,
}

impl Degree {
    pub fn new(ns: u64, nm: u64) -> Self {
        let t = ns + nm;
        let c = if t == 0 { 0.0 } else { nm as f64 / t as f64 };
        Degree { ns, nm, c }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CollaborationSummary {
    pub total: Degree,
    pub per_year: BTreeMap<i32, Degree>,
}

/// C = Nm / (Nm + Ns).
pub fn degree_of_collaboration(c: &Corpus) -> Result<CollaborationSummary> {
    let mut per: BTreeMap<i32, (u64, u64)> = BTreeMap::new();
    for a in c.articles.iter().filter(|a| !a.authors.is_empty()) {
        let e = per.entry(a.year).or_default();
        if a.authors.len() == 1 {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    if per.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let ns = per.values().map(|v| v.0).sum();
    let nm = per.values().map(|v| v.1).sum();
    Ok(CollaborationSummary {
        total: Degree::new(ns, nm),
        per_year: per.into_iter().map(|(y, (s, m))| (y, Degree::new(s, m))).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CollabClass {
    Single,
    SameAffiliation,
    DiffAffiliationSameCountry,
    DiffCountries,
}

impl CollabClass {
    pub fn label(self) -> &'static str {
        match self {
            CollabClass::Single => "single",
            CollabClass::SameAffiliation => "same_affiliation",
            CollabClass::DiffAffiliationSameCountry => "diff_affiliation_same_country",
            CollabClass::DiffCountries => "diff_countries",
        }
    }
}

/// Distinct countries on an article, leaving out "unknown".
pub fn article_countries(a: &Article) -> BTreeSet<String> {
    a.authors
        .iter()
        .filter(|au| au.has_known_country())
        .map(|au| au.country.clone())
        .collect()
}

pub fn classify_collaboration(a: &Article) -> Result<CollabClass> {
    match a.authors.len() {
        0 => Err(Error::NoAuthors(a.id.clone())),
        1 => Ok(CollabClass::Single),
        _ => {
            let affs: BTreeSet<String> = a.authors.iter().map(|au| normalize_name(&au.affiliation)).collect();
            if affs.len() == 1 {
                Ok(CollabClass::SameAffiliation)
            } else if article_countries(a).len() >= 2 {
                Ok(CollabClass::DiffCountries)
            } else {
                Ok(CollabClass::DiffAffiliationSameCountry)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CollabClassCounts {
    pub single: u64,
    pub same_affiliation: u64,
    pub diff_affiliation_same_country: u64,
    pub diff_countries: u64,
}

impl CollabClassCounts {
    fn add(&mut self, k: CollabClass) {
        match k {
            CollabClass::Single => self.single += 1,
            CollabClass::SameAffiliation => self.same_affiliation += 1,
            CollabClass::DiffAffiliationSameCountry => self.diff_affiliation_same_country += 1,
            CollabClass::DiffCountries => self.diff_countries += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.single + self.same_affiliation + self.diff_affiliation_same_country + self.diff_countries
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CollabClassTable {
    pub total: CollabClassCounts,
    pub per_year: BTreeMap<i32, CollabClassCounts>,
}

/// Class counts over the authored articles of a corpus.
pub fn collaboration_classes(c: &Corpus) -> CollabClassTable {
    let mut total = CollabClassCounts::default();
    let mut per_year: BTreeMap<i32, CollabClassCounts> = BTreeMap::new();
    for a in &c.articles {
        if let Ok(k) = classify_collaboration(a) {
            total.add(k);
            per_year.entry(a.year).or_default().add(k);
        }
    }
    CollabClassTable { total, per_year }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomeClass {
    PurelyHome,
    Mixed,
    PurelyForeign,
    /// No author with a known country.
    Unknown,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SplitCounts {
    pub home_authorships: u64,
    pub foreign_authorships: u64,
    pub unknown_authorships: u64,
    pub purely_home: u64,
    pub mixed: u64,
    pub purely_foreign: u64,
    pub unknown: u64,
}

impl SplitCounts {
    fn merge(&mut self, o: &SplitCounts) {
        self.home_authorships += o.home_authorships;
        self.foreign_authorships += o.foreign_authorships;
        self.unknown_authorships += o.unknown_authorships;
        self.purely_home += o.purely_home;
        self.mixed += o.mixed;
        self.purely_foreign += o.purely_foreign;
        self.unknown += o.unknown;
    }

    /// Articles with at least one foreign author.
    pub fn any_foreign(&self) -> u64 {
        self.mixed + self.purely_foreign
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountrySplit {
    pub home: String,
    pub total: SplitCounts,
    pub per_year: BTreeMap<i32, SplitCounts>,
    /// Country sets of mixed articles (home included) → article count.
    pub mixed_sets: BTreeMap<Vec<String>, u64>,
    /// Foreign country → articles it appears on, per year.
    pub foreign_articles: BTreeMap<String, BTreeMap<i32, u64>>,
    /// Foreign country → authorship count.
    pub foreign_authorships_by_country: BTreeMap<String, u64>,
}

pub fn home_class(a: &Article, home: &str) -> HomeClass {
    let cs = article_countries(a);
    let has_home = cs.contains(home);
    match (cs.is_empty(), has_home, cs.len()) {
        (true, _, _) => HomeClass::Unknown,
        (false, true, 1) => HomeClass::PurelyHome,
        (false, true, _) => HomeClass::Mixed,
        (false, false, _) => HomeClass::PurelyForeign,
    }
}

/// Home/foreign split of authorships and articles.
pub fn country_split(c: &Corpus, home: &str) -> Result<CountrySplit> {
    if home.trim().is_empty() {
        return Err(Error::InvalidArgument("home country is empty".into()));
    }
    let mut per_year: BTreeMap<i32, SplitCounts> = BTreeMap::new();
    let mut mixed_sets: BTreeMap<Vec<String>, u64> = BTreeMap::new();
    let mut foreign_articles: BTreeMap<String, BTreeMap<i32, u64>> = BTreeMap::new();
    let mut by_country: BTreeMap<String, u64> = BTreeMap::new();
    for a in c.articles.iter().filter(|a| !a.authors.is_empty()) {
        let s = per_year.entry(a.year).or_default();
        for au in &a.authors {
            if !au.has_known_country() {
                s.unknown_authorships += 1;
            } else if au.country == home {
                s.home_authorships += 1;
            } else {
                s.foreign_authorships += 1;
                *by_country.entry(au.country.clone()).or_default() += 1;
            }
        }
        let class = home_class(a, home);
        match class {
            HomeClass::PurelyHome => s.purely_home += 1,
            HomeClass::Mixed => s.mixed += 1,
            HomeClass::PurelyForeign => s.purely_foreign += 1,
            HomeClass::Unknown => s.unknown += 1,
        }
        let cs = article_countries(a);
        if class == HomeClass::Mixed {
            *mixed_sets.entry(cs.iter().cloned().collect()).or_default() += 1;
        }
        for f in cs.iter().filter(|x| x.as_str() != home) {
            *foreign_articles
                .entry(f.clone())
                .or_default()
                .entry(a.year)
                .or_default() += 1;
        }
    }
    let mut total = SplitCounts::default();
    per_year.values().for_each(|s| total.merge(s));
    Ok(CountrySplit {
        home: home.to_string(),
        total,
        per_year,
        mixed_sets,
        foreign_articles,
        foreign_authorships_by_country: by_country,
    })
}

/// Sorted country set → number of articles, for articles spanning ≥ 2 countries.
pub fn country_pair_matrix(c: &Corpus) -> BTreeMap<Vec<String>, u64> {
    let mut m = BTreeMap::new();
    for a in &c.articles {
        let cs = article_countries(a);
        if cs.len() >= 2 {
            *m.entry(cs.into_iter().collect()).or_default() += 1;
        }
    }
    m
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TypeCounts {
    pub home: u64,
    pub foreign: u64,
    pub unknown: u64,
}

impl TypeCounts {
    pub fn total(&self) -> u64 {
        self.home + self.foreign + self.unknown
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AffiliationDistribution {
    pub affiliations: BTreeMap<AffiliationType, TypeCounts>,
    pub authors: BTreeMap<AffiliationType, TypeCounts>,
    pub unique_affiliations: u64,
    pub unique_authors: u64,
    /// Unique authors per affiliation, keyed by normalized affiliation.
    pub authors_per_affiliation: Histogram,
}

fn modal<'a, T: Ord + Clone + 'a>(items: impl Iterator<Item = T>) -> Option<T> {
    let mut m: BTreeMap<T, u64> = BTreeMap::new();
    for x in items {
        *m.entry(x).or_default() += 1;
    }
    // ties → smallest key
    m.into_iter()
        .fold(None, |best: Option<(T, u64)>, (k, n)| match best {
            Some((bk, bn)) if bn >= n => Some((bk, bn)),
            _ => Some((k, n)),
        })
        .map(|(k, _)| k)
}

fn side(country: &str, home: &str) -> fn(&mut TypeCounts) {
    if country.eq_ignore_ascii_case("unknown") {
        |t| t.unknown += 1
    } else if country == home {
        |t| t.home += 1
    } else {
        |t| t.foreign += 1
    }
}

/// Unique affiliations and unique authors per affiliation type.
///
/// Each affiliation and each author takes its most frequent record. Empty
/// affiliation strings are not counted as affiliations.
pub fn affiliation_type_distribution(c: &Corpus, home: &str) -> AffiliationDistribution {
    let mut aff_records: HashMap<String, Vec<(AffiliationType, String)>> = HashMap::new();
    let mut author_records: HashMap<String, Vec<&AuthorRecord>> = HashMap::new();
    for a in &c.articles {
        for au in &a.authors {
            let key = normalize_name(&au.affiliation);
            if !key.is_empty() {
                aff_records
                    .entry(key)
                    .or_default()
                    .push((au.affiliation_type, au.country.clone()));
            }
            author_records.entry(normalize_name(&au.name)).or_default().push(au);
        }
    }
    let mut affiliations: BTreeMap<AffiliationType, TypeCounts> = BTreeMap::new();
    for recs in aff_records.values() {
        if let Some((t, country)) = modal(recs.iter().cloned()) {
            side(&country, home)(affiliations.entry(t).or_default());
        }
    }
    let mut authors: BTreeMap<AffiliationType, TypeCounts> = BTreeMap::new();
    let mut per_aff = Histogram::new("authors per affiliation");
    for recs in author_records.values() {
        let pick = modal(
            recs.iter()
                .map(|r| (normalize_name(&r.affiliation), r.affiliation_type, r.country.as_str())),
        );
        if let Some((aff, t, country)) = pick {
            side(country, home)(authors.entry(t).or_default());
            if !aff.is_empty() {
                per_aff.incr(aff);
            }
        }
    }
    AffiliationDistribution {
        unique_affiliations: aff_records.len() as u64,
        unique_authors: author_records.len() as u64,
        affiliations,
        authors,
        authors_per_affiliation: per_aff,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tests::{article, author, corpus};

    #[test]
    fn coauthor_bins() {
        let c = corpus(vec![article(
            "1",
            2004,
            (0..15).map(|i| author(&format!("A{i}"), "x", "M")).collect(),
        )]);
        let t = coauthorship_histogram(&c);
        assert_eq!(t.total.get(15i64), 1);
        assert_eq!(t.total.len(), 1);
        assert!(coauthorship_histogram(&corpus(vec![])).total.is_empty());
    }

    #[test]
    fn degree_values() {
        let d = Degree::new(17, 122);
        assert!((d.c - 122.0 / 139.0).abs() < 1e-15);
        let c = corpus(vec![
            article("1", 2004, vec![author("X", "a", "M")]),
            article("2", 2005, vec![author("Y", "a", "M")]),
        ]);
        assert_eq!(degree_of_collaboration(&c).unwrap().total.c, 0.0);
        assert!(matches!(
            degree_of_collaboration(&corpus(vec![])),
            Err(Error::EmptyCorpus)
        ));
    }

    #[test]
    fn classes() {
        let same = article(
            "1",
            2004,
            vec![author("X", "Uni A", "MY"), author("Y", "uni  a.", "MY")],
        );
        assert_eq!(classify_collaboration(&same).unwrap(), CollabClass::SameAffiliation);
        let intl = article(
            "2",
            2004,
            vec![author("X", "A", "Malaysia"), author("Y", "B", "Australia")],
        );
        assert_eq!(classify_collaboration(&intl).unwrap(), CollabClass::DiffCountries);
        let local = article("3", 2004, vec![author("X", "A", "MY"), author("Y", "B", "MY")]);
        assert_eq!(
            classify_collaboration(&local).unwrap(),
            CollabClass::DiffAffiliationSameCountry
        );
        let unk = article("4", 2004, vec![author("X", "A", "MY"), author("Y", "B", "unknown")]);
        assert_eq!(
            classify_collaboration(&unk).unwrap(),
            CollabClass::DiffAffiliationSameCountry
        );
        let none = article("5", 2004, vec![]);
        assert!(matches!(classify_collaboration(&none), Err(Error::NoAuthors(_))));
    }

    #[test]
    fn split_and_pairs() {
        let c = corpus(vec![
            article(
                "1",
                2004,
                vec![author("X", "A", "Malaysia"), author("Y", "B", "Australia")],
            ),
            article(
                "2",
                2004,
                vec![author("Z", "A", "Malaysia"), author("W", "C", "Australia")],
            ),
            article("3", 2005, vec![author("V", "D", "India")]),
            article("4", 2005, vec![author("U", "A", "Malaysia")]),
            article("5", 2005, vec![author("T", "?", "unknown")]),
        ]);
        let s = country_split(&c, "Malaysia").unwrap();
        assert_eq!(s.total.home_authorships, 3);
        assert_eq!(s.total.foreign_authorships, 3);
        assert_eq!(s.total.unknown_authorships, 1);
        assert_eq!((s.total.purely_home, s.total.mixed, s.total.purely_foreign), (1, 2, 1));
        assert_eq!(s.total.unknown, 1);
        let key = vec!["Australia".to_string(), "Malaysia".to_string()];
        assert_eq!(s.mixed_sets[&key], 2);
        assert_eq!(country_pair_matrix(&c)[&key], 2);
        assert_eq!(s.foreign_articles["India"][&2005], 1);
    }

    #[test]
    fn affiliation_types() {
        let mut a = author("X", "Klinik Q", "Malaysia");
        a.affiliation_type = AffiliationType::Clinic;
        let d = affiliation_type_distribution(&corpus(vec![article("1", 2004, vec![a])]), "Malaysia");
        assert_eq!(d.affiliations[&AffiliationType::Clinic].home, 1);
        assert_eq!(d.authors[&AffiliationType::Clinic].home, 1);
        assert_eq!(d.unique_affiliations, 1);
    }
}
