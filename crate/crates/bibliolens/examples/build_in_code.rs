//! Build a small corpus in code instead of loading a file, then run a few
//! analyses on it. Handy for checking an indicator by hand.
//!
//!     cargo run --example build_in_code

use bibliolens::collaboration::{classify_collaboration, degree_of_collaboration};
use bibliolens::corpus::{AffiliationType, Article, ArticleType, AuthorRecord, Corpus, Reference, SourceType};
use bibliolens::impact::impact_factor_for;
use bibliolens::{unique_authors, Histogram};

fn author(name: &str, affiliation: &str, country: &str) -> AuthorRecord {
    AuthorRecord {
        name: name.into(),
        affiliation: affiliation.into(),
        affiliation_type: AffiliationType::HigherInstitution,
        country: country.into(),
    }
}

fn article(id: &str, year: i32, authors: Vec<AuthorRecord>) -> Article {
    Article {
        id: id.into(),
        year,
        title: format!("Article {id}"),
        article_type: ArticleType::Original,
        keywords: vec!["Dengue".into()],
        authors,
        references: vec![Reference {
            source_type: SourceType::Journal,
            pub_year: Some(year - 3),
            journal_title: Some("Lancet".into()),
            language: "English".into(),
        }],
        received: Vec::new(),
        funders: Vec::new(),
    }
}

fn main() -> bibliolens::Result<()> {
    let mut c = Corpus::empty("Example Journal", 2020, 2022);
    c.articles
        .push(article("a1", 2020, vec![author("Tan K.L.", "UM", "Malaysia")]));
    c.articles.push(article(
        "a2",
        2020,
        vec![
            author("Tan K.L.", "UM", "Malaysia"),
            author("Smith J.", "Oxford", "United Kingdom"),
        ],
    ));
    c.articles.push(article(
        "a3",
        2021,
        vec![author("Lee S.", "USM", "Malaysia"), author("Wong A.", "UM", "Malaysia")],
    ));
    c.validate()?;

    for a in &c.articles {
        println!("{}: {:?}", a.id, classify_collaboration(a)?);
    }
    let d = degree_of_collaboration(&c)?;
    println!("C = {}/{} = {:.3}", d.total.nm, d.total.nm + d.total.ns, d.total.c);

    let authors = unique_authors(&c)?;
    let productivity = Histogram::from_pairs("authors by papers", authors.values().map(|&n| (n as i64, 1)));
    println!("authors by papers: {:?}", productivity.int_bins().collect::<Vec<_>>());

    c.articles[0].received.push(bibliolens::corpus::ReceivedCitation {
        citing_year: 2022,
        doc_type: bibliolens::corpus::DocType::JournalArticle,
        citing_countries: vec!["Japan".into()],
        citing_source: None,
        is_self: false,
    });
    let f = impact_factor_for(&c, 2022, 2, Default::default())?;
    println!("IF 2022 = {}/{} = {:.3}", f.a, f.b, f.value);
    println!("{}", c.to_json_string().lines().take(6).collect::<Vec<_>>().join("\n"));
    Ok(())
}
