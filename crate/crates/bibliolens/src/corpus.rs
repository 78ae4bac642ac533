//! Corpus data model, JSON ingestion and validation.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    #[serde(rename = "journal")]
    pub journal_name: String,
    pub year_start: i32,
    pub year_end: i32,
    pub articles: Vec<Article>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArticleType {
    Original,
    Cme,
    CaseReport,
    ShortCommunication,
    Correspondence,
    Editorial,
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Article {
    pub id: String,
    pub year: i32,
    pub title: String,
    #[serde(rename = "type")]
    pub article_type: ArticleType,
    #[serde(default)]
    pub keywords: Vec<String>,
    #[serde(default)]
    pub authors: Vec<AuthorRecord>,
    #[serde(default)]
    pub references: Vec<Reference>,
    #[serde(default)]
    pub received: Vec<ReceivedCitation>,
    #[serde(default)]
    pub funders: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AffiliationType {
    Hospital,
    HigherInstitution,
    GovernmentAgency,
    MedicalCenter,
    Clinic,
    PrivateOrg,
    InternationalOrg,
    Unknown,
}

impl AffiliationType {
    pub const ALL: [AffiliationType; 8] = [
        AffiliationType::Hospital,
        AffiliationType::HigherInstitution,
        AffiliationType::GovernmentAgency,
        AffiliationType::MedicalCenter,
        AffiliationType::Clinic,
        AffiliationType::PrivateOrg,
        AffiliationType::InternationalOrg,
        AffiliationType::Unknown,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AffiliationType::Hospital => "hospital",
            AffiliationType::HigherInstitution => "higher_institution",
            AffiliationType::GovernmentAgency => "government_agency",
            AffiliationType::MedicalCenter => "medical_center",
            AffiliationType::Clinic => "clinic",
            AffiliationType::PrivateOrg => "private_org",
            AffiliationType::InternationalOrg => "international_org",
            AffiliationType::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuthorRecord {
    pub name: String,
    pub affiliation: String,
    pub affiliation_type: AffiliationType,
    pub country: String,
}

impl AuthorRecord {
    pub fn has_known_country(&self) -> bool {
        !self.country.eq_ignore_ascii_case("unknown")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceType {
    Journal,
    Book,
    Conference,
    Web,
    Government,
    InternationalOrg,
    Thesis,
    Newspaper,
    Other,
}

impl SourceType {
    pub const ALL: [SourceType; 9] = [
        SourceType::Journal,
        SourceType::Book,
        SourceType::Conference,
        SourceType::Web,
        SourceType::Government,
        SourceType::InternationalOrg,
        SourceType::Thesis,
        SourceType::Newspaper,
        SourceType::Other,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SourceType::Journal => "journal",
            SourceType::Book => "book",
            SourceType::Conference => "conference",
            SourceType::Web => "web",
            SourceType::Government => "government",
            SourceType::InternationalOrg => "international_org",
            SourceType::Thesis => "thesis",
            SourceType::Newspaper => "newspaper",
            SourceType::Other => "other",
        }
    }
}

pub const DEFAULT_LANGUAGE: &str = "English";

fn default_language() -> String {
    DEFAULT_LANGUAGE.to_string()
}

fn is_default_language(s: &str) -> bool {
    s == DEFAULT_LANGUAGE
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reference {
    pub source_type: SourceType,
    /// `None` marks an undated reference.
    pub pub_year: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub journal_title: Option<String>,
    #[serde(default = "default_language", skip_serializing_if = "is_default_language")]
    pub language: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocType {
    JournalArticle,
    Thesis,
    Book,
    Conference,
    Government,
    Other,
}

impl DocType {
    pub fn label(self) -> &'static str {
        match self {
            DocType::JournalArticle => "journal_article",
            DocType::Thesis => "thesis",
            DocType::Book => "book",
            DocType::Conference => "conference",
            DocType::Government => "government",
            DocType::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReceivedCitation {
    pub citing_year: i32,
    pub doc_type: DocType,
    #[serde(default)]
    pub citing_countries: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citing_source: Option<String>,
    #[serde(default)]
    pub is_self: bool,
}

/// Trim, collapse internal whitespace, uppercase, strip terminal periods.
pub fn normalize_name(raw: &str) -> String {
    let upper = raw.to_uppercase();
    let joined = upper.split_whitespace().collect::<Vec<_>>().join(" ");
    joined
        .trim_end_matches(|c: char| c == '.' || c.is_whitespace())
        .to_string()
}

/// Case-fold, collapse whitespace, strip trailing periods.
pub fn normalize_title(raw: &str) -> String {
    let lower = raw.to_lowercase();
    let joined = lower.split_whitespace().collect::<Vec<_>>().join(" ");
    joined
        .trim_end_matches(|c: char| c == '.' || c.is_whitespace())
        .to_string()
}

/// Trim and case-fold.
pub fn normalize_keyword(raw: &str) -> String {
    raw.trim().to_lowercase()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnknownKeys {
    #[default]
    Reject,
    Warn,
}

#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    pub unknown_keys: UnknownKeys,
}

impl LoadOptions {
    pub fn lenient() -> Self {
        LoadOptions {
            unknown_keys: UnknownKeys::Warn,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub corpus: Corpus,
    pub warnings: Vec<String>,
}

const TOP_KEYS: &[&str] = &["journal", "year_start", "year_end", "articles"];
const ARTICLE_KEYS: &[&str] = &[
    "id",
    "year",
    "title",
    "type",
    "keywords",
    "authors",
    "references",
    "received",
    "funders",
];
const AUTHOR_KEYS: &[&str] = &["name", "affiliation", "affiliation_type", "country"];
const REFERENCE_KEYS: &[&str] = &["source_type", "pub_year", "journal_title", "language"];
const RECEIVED_KEYS: &[&str] = &[
    "citing_year",
    "doc_type",
    "citing_countries",
    "citing_source",
    "is_self",
];

fn check_keys(v: &Value, allowed: &[&str], locator: &str, found: &mut Vec<String>) {
    if let Value::Object(map) = v {
        for k in map.keys() {
            if !allowed.contains(&k.as_str()) {
                found.push(format!("{locator}: unknown key {k:?}"));
            }
        }
    }
}

fn each<'a>(v: &'a Value, key: &str) -> impl Iterator<Item = (usize, &'a Value)> {
    v.get(key).and_then(Value::as_array).into_iter().flatten().enumerate()
}

fn unknown_keys(root: &Value) -> Vec<String> {
    let mut found = Vec::new();
    check_keys(root, TOP_KEYS, "$", &mut found);
    for (i, a) in each(root, "articles") {
        let loc = format!("articles[{i}]");
        check_keys(a, ARTICLE_KEYS, &loc, &mut found);
        for (j, x) in each(a, "authors") {
            check_keys(x, AUTHOR_KEYS, &format!("{loc}.authors[{j}]"), &mut found);
        }
        for (j, x) in each(a, "references") {
            check_keys(x, REFERENCE_KEYS, &format!("{loc}.references[{j}]"), &mut found);
        }
        for (j, x) in each(a, "received") {
            check_keys(x, RECEIVED_KEYS, &format!("{loc}.received[{j}]"), &mut found);
        }
    }
    found
}

fn strip_unknown(v: &mut Value, allowed: &[&str]) {
    if let Value::Object(map) = v {
        map.retain(|k, _| allowed.contains(&k.as_str()));
    }
}

fn strip_all_unknown(root: &mut Value) {
    strip_unknown(root, TOP_KEYS);
    if let Some(arts) = root.get_mut("articles").and_then(Value::as_array_mut) {
        for a in arts {
            strip_unknown(a, ARTICLE_KEYS);
            for (key, allowed) in [
                ("authors", AUTHOR_KEYS),
                ("references", REFERENCE_KEYS),
                ("received", RECEIVED_KEYS),
            ] {
                if let Some(xs) = a.get_mut(key).and_then(Value::as_array_mut) {
                    xs.iter_mut().for_each(|x| strip_unknown(x, allowed));
                }
            }
        }
    }
}

impl Corpus {
    pub fn empty(journal_name: impl Into<String>, year_start: i32, year_end: i32) -> Self {
        Corpus {
            journal_name: journal_name.into(),
            year_start,
            year_end,
            articles: Vec::new(),
        }
    }

    /// Parse and validate corpus JSON text.
    pub fn from_json_str(text: &str, opts: &LoadOptions) -> Result<Loaded> {
        let mut root: Value = serde_json::from_str(text)
            .map_err(|e| Error::schema(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        let unknown = unknown_keys(&root);
        let mut warnings = Vec::new();
        if !unknown.is_empty() {
            match opts.unknown_keys {
                UnknownKeys::Reject => {
                    let first = &unknown[0];
                    let (loc, msg) = first.split_once(": ").unwrap_or(("$", first));
                    return Err(Error::schema(loc, msg));
                }
                UnknownKeys::Warn => {
                    for w in &unknown {
                        log::warn!("{w}");
                    }
                    warnings = unknown;
                    strip_all_unknown(&mut root);
                }
            }
        }

        let obj = root
            .as_object_mut()
            .ok_or_else(|| Error::schema("$", "top level must be an object"))?;
        let journal_name = match obj.get("journal") {
            Some(Value::String(s)) => s.clone(),
            _ => return Err(Error::schema("$.journal", "missing or not a string")),
        };
        let int_field = |k: &str| -> Result<i32> {
            obj.get(k)
                .and_then(Value::as_i64)
                .and_then(|n| i32::try_from(n).ok())
                .ok_or_else(|| Error::schema(format!("$.{k}"), "missing or not an integer"))
        };
        let year_start = int_field("year_start")?;
        let year_end = int_field("year_end")?;
        if year_end < year_start {
            return Err(Error::schema("$.year_end", "year_end precedes year_start"));
        }
        let raw_articles = match obj.remove("articles") {
            Some(Value::Array(a)) => a,
            _ => return Err(Error::schema("$.articles", "missing or not an array")),
        };

        let mut articles = Vec::with_capacity(raw_articles.len());
        for (i, v) in raw_articles.into_iter().enumerate() {
            let hint = v
                .get("id")
                .and_then(Value::as_str)
                .map(|s| format!("articles[{i}] (id {s:?})"))
                .unwrap_or_else(|| format!("articles[{i}]"));
            let a: Article = serde_json::from_value(v).map_err(|e| Error::schema(hint.clone(), e.to_string()))?;
            articles.push(a);
        }

        let mut corpus = Corpus {
            journal_name,
            year_start,
            year_end,
            articles,
        };
        corpus.normalize();
        corpus.validate()?;
        Ok(Loaded { corpus, warnings })
    }

    pub fn from_reader<R: Read>(mut r: R, opts: &LoadOptions) -> Result<Loaded> {
        let mut s = String::new();
        r.read_to_string(&mut s)
            .map_err(|e| Error::schema("input", e.to_string()))?;
        Corpus::from_json_str(&s, opts)
    }

    fn normalize(&mut self) {
        for a in &mut self.articles {
            for au in &mut a.authors {
                au.name = normalize_name(&au.name);
            }
        }
    }

    /// Check the structural invariants of the corpus.
    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for (i, a) in self.articles.iter().enumerate() {
            let loc = format!("articles[{i}] (id {:?})", a.id);
            if !seen.insert(a.id.as_str()) {
                return Err(Error::DuplicateId(a.id.clone()));
            }
            if a.year < self.year_start || a.year > self.year_end {
                return Err(Error::YearOutOfRange {
                    id: a.id.clone(),
                    year: a.year,
                    start: self.year_start,
                    end: self.year_end,
                });
            }
            if a.title.trim().is_empty() {
                return Err(Error::schema(loc, "title is empty"));
            }
            if a.authors.is_empty() && !matches!(a.article_type, ArticleType::Editorial | ArticleType::Other) {
                return Err(Error::schema(loc, "authors may be empty only for editorial/other"));
            }
            for (j, au) in a.authors.iter().enumerate() {
                if au.country.trim().is_empty() {
                    return Err(Error::schema(format!("{loc}.authors[{j}]"), "country is empty"));
                }
            }
            for (j, r) in a.references.iter().enumerate() {
                let is_journal = r.source_type == SourceType::Journal;
                if is_journal != r.journal_title.is_some() {
                    return Err(Error::schema(
                        format!("{loc}.references[{j}]"),
                        "journal_title must be present exactly when source_type is journal",
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("corpus serializes");
        s.push('\n');
        s
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(self.to_json_string().as_bytes())
    }

    pub fn years(&self) -> std::ops::RangeInclusive<i32> {
        self.year_start..=self.year_end
    }

    pub fn articles_in(&self, year: i32) -> impl Iterator<Item = &Article> {
        self.articles.iter().filter(move |a| a.year == year)
    }

    /// A copy restricted to one year, keeping the full year range.
    pub fn slice_year(&self, year: i32) -> Corpus {
        Corpus {
            journal_name: self.journal_name.clone(),
            year_start: self.year_start,
            year_end: self.year_end,
            articles: self.articles_in(year).cloned().collect(),
        }
    }

    pub fn authorship_count(&self) -> usize {
        self.articles.iter().map(|a| a.authors.len()).sum()
    }

    pub fn reference_count(&self) -> usize {
        self.articles.iter().map(|a| a.references.len()).sum()
    }
}

/// Load and validate a corpus file in strict mode.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus> {
    load_corpus_with(path, &LoadOptions::default()).map(|l| l.corpus)
}

pub fn load_corpus_with(path: impl AsRef<Path>, opts: &LoadOptions) -> Result<Loaded> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Corpus::from_json_str(&text, opts).map_err(|e| match e {
        Error::Schema { locator, message } => Error::Schema {
            locator: format!("{}: {locator}", path.display()),
            message,
        },
        other => other,
    })
}

/// Publication count per normalized author name.
pub fn unique_authors(c: &Corpus) -> Result<BTreeMap<String, u64>> {
    let mut out = BTreeMap::new();
    for a in &c.articles {
        let mut here = BTreeSet::new();
        for au in &a.authors {
            let name = normalize_name(&au.name);
            if !here.insert(name.clone()) {
                return Err(Error::DuplicateAuthorInArticle { id: a.id.clone(), name });
            }
            *out.entry(name).or_insert(0) += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn author(name: &str, aff: &str, country: &str) -> AuthorRecord {
        AuthorRecord {
            name: name.into(),
            affiliation: aff.into(),
            affiliation_type: AffiliationType::Hospital,
            country: country.into(),
        }
    }

    pub fn article(id: &str, year: i32, authors: Vec<AuthorRecord>) -> Article {
        Article {
            id: id.into(),
            year,
            title: format!("Title of {id}"),
            article_type: ArticleType::Original,
            keywords: vec![],
            authors,
            references: vec![],
            received: vec![],
            funders: vec![],
        }
    }

    pub fn corpus(articles: Vec<Article>) -> Corpus {
        Corpus {
            journal_name: "Test J".into(),
            year_start: 2004,
            year_end: 2008,
            articles,
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_name("Ruszymah  B.H.I."), "RUSZYMAH B.H.I");
        assert_eq!(normalize_name("RUSZYMAH B.H.I"), "RUSZYMAH B.H.I");
        assert_eq!(normalize_name(" chua, k.h "), "CHUA, K.H");
        assert_eq!(normalize_name(""), "");
        assert_eq!(normalize_name("A. ."), "A");
    }

    #[test]
    fn title_normalization() {
        assert_eq!(normalize_title("Med  J Malaysia."), "med j malaysia");
        assert_eq!(normalize_keyword("  Diabetes "), "diabetes");
    }

    #[test]
    fn empty_corpus_loads() {
        let l = Corpus::from_json_str(
            r#"{"journal":"J","year_start":2004,"year_end":2008,"articles":[]}"#,
            &LoadOptions::default(),
        )
        .unwrap();
        assert!(l.corpus.articles.is_empty());
    }

    const ONE: &str = r#"{"journal":"J","year_start":2004,"year_end":2008,"articles":[
      {"id":"A1","year":2005,"title":"T","type":"original",
       "authors":[{"name":" lee  k.","affiliation":"X","affiliation_type":"clinic","country":"Malaysia"}],
       "references":[{"source_type":"journal","pub_year":2001,"journal_title":"Lancet"},
                     {"source_type":"book","pub_year":null,"language":"Malay"}],
       "received":[{"citing_year":2007,"doc_type":"thesis","citing_countries":["China"],"is_self":false}],
       "keywords":["a"],"funders":[]}]}"#;

    #[test]
    fn parses_and_normalizes() {
        let c = Corpus::from_json_str(ONE, &LoadOptions::default()).unwrap().corpus;
        let a = &c.articles[0];
        assert_eq!(a.authors[0].name, "LEE K");
        assert_eq!(a.references[1].pub_year, None);
        assert_eq!(a.references[0].language, "English");
        assert_eq!(a.received[0].doc_type, DocType::Thesis);
    }

    #[test]
    fn round_trip() {
        let c = Corpus::from_json_str(ONE, &LoadOptions::default()).unwrap().corpus;
        let back = Corpus::from_json_str(&c.to_json_string(), &LoadOptions::default())
            .unwrap()
            .corpus;
        assert_eq!(c, back);
    }

    #[test]
    fn duplicate_id_rejected() {
        let text = r#"{"journal":"J","year_start":2004,"year_end":2008,"articles":[
          {"id":"A1","year":2005,"title":"T","type":"editorial"},
          {"id":"A1","year":2006,"title":"U","type":"editorial"}]}"#;
        let e = Corpus::from_json_str(text, &LoadOptions::default()).unwrap_err();
        assert!(matches!(e, Error::DuplicateId(ref s) if s == "A1"));
    }

    #[test]
    fn year_out_of_range() {
        let text = r#"{"journal":"J","year_start":2004,"year_end":2008,"articles":[
          {"id":"A1","year":2009,"title":"T","type":"editorial"}]}"#;
        let e = Corpus::from_json_str(text, &LoadOptions::default()).unwrap_err();
        assert!(matches!(e, Error::YearOutOfRange { year: 2009, .. }));
    }

    #[test]
    fn unknown_keys_strict_and_lenient() {
        let text = r#"{"journal":"J","year_start":2004,"year_end":2008,"extra":1,"articles":[
          {"id":"A1","year":2005,"title":"T","type":"editorial","doi":"x"}]}"#;
        let e = Corpus::from_json_str(text, &LoadOptions::default()).unwrap_err();
        assert!(matches!(e, Error::Schema { .. }), "{e}");
        let l = Corpus::from_json_str(text, &LoadOptions::lenient()).unwrap();
        assert_eq!(l.warnings.len(), 2);
        assert!(l.warnings[1].contains("articles[0]"));
    }

    #[test]
    fn syntax_error_has_line() {
        let e = Corpus::from_json_str("{\n\"journal\": }", &LoadOptions::default()).unwrap_err();
        match e {
            Error::Schema { locator, .. } => assert!(locator.starts_with("line 2"), "{locator}"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn bad_enum_names_record() {
        let text = r#"{"journal":"J","year_start":2004,"year_end":2008,"articles":[
          {"id":"Q","year":2005,"title":"T","type":"poem"}]}"#;
        match Corpus::from_json_str(text, &LoadOptions::default()).unwrap_err() {
            Error::Schema { locator, .. } => assert!(locator.contains("\"Q\""), "{locator}"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn authorless_original_rejected() {
        let text = r#"{"journal":"J","year_start":2004,"year_end":2008,"articles":[
          {"id":"Q","year":2005,"title":"T","type":"original"}]}"#;
        assert!(Corpus::from_json_str(text, &LoadOptions::default()).is_err());
    }

    #[test]
    fn journal_title_iff_journal() {
        let text = r#"{"journal":"J","year_start":2004,"year_end":2008,"articles":[
          {"id":"Q","year":2005,"title":"T","type":"editorial",
           "references":[{"source_type":"book","pub_year":1999,"journal_title":"X"}]}]}"#;
        assert!(Corpus::from_json_str(text, &LoadOptions::default()).is_err());
    }

    #[test]
    fn unique_author_counts() {
        let c = corpus(vec![
            article("1", 2004, vec![author("X", "a", "M"), author("Y", "a", "M")]),
            article("2", 2005, vec![author("X", "a", "M")]),
        ]);
        let u = unique_authors(&c).unwrap();
        assert_eq!(u["X"], 2);
        assert_eq!(u["Y"], 1);
        assert_eq!(u.values().sum::<u64>() as usize, c.authorship_count());
    }

    #[test]
    fn duplicate_author_in_article() {
        let c = corpus(vec![article(
            "1",
            2004,
            vec![author("X", "a", "M"), author("x.", "b", "M")],
        )]);
        assert!(matches!(
            unique_authors(&c),
            Err(Error::DuplicateAuthorInArticle { .. })
        ));
    }
}
