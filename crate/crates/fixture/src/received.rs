//! Citations received by the journal's articles.

use bibliolens::corpus::{DocType, ReceivedCitation};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::data::{self, num, rows, YEARS};

fn alias(name: &str) -> String {
    let name = name.trim();
    data::COUNTRY_ALIASES
        .iter()
        .find(|a| a.0 == name)
        .map_or(name, |a| a.1)
        .to_string()
}

/// Country lists for every citation, shuffled: singles, collaborations and
/// citations without a country.
fn countries(rng: &mut ChaCha8Rng) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = Vec::new();
    for r in rows(data::CITING_COUNTRIES_TSV) {
        out.extend(std::iter::repeat_n(vec![r[1].trim().to_string()], num(r[2])));
    }
    for r in rows(data::CITING_COLLABORATIONS_TSV) {
        let list: Vec<String> = r[0].split(" and ").map(alias).collect();
        out.extend(std::iter::repeat_n(list, num(r[1])));
    }
    out.extend(std::iter::repeat_n(Vec::new(), data::NO_COUNTRY));
    out.shuffle(rng);
    out
}

pub fn build(rng: &mut ChaCha8Rng, years: &[i32]) -> Vec<Vec<ReceivedCitation>> {
    let mut docs: Vec<DocType> = data::DOC_TYPES
        .iter()
        .flat_map(|&(d, n)| std::iter::repeat_n(d, n))
        .collect();
    docs.shuffle(rng);
    let mut docs = docs.into_iter();
    let mut places = countries(rng).into_iter();
    let mut sources: Vec<String> = rows(data::CITING_SOURCES_TSV)
        .flat_map(|r| std::iter::repeat_n(r[0].trim().to_string(), num(r[1])))
        .collect();
    sources.shuffle(rng);
    let journal_articles = data::DOC_TYPES[0].1;
    assert!(sources.len() <= journal_articles);
    // Journal-article citations that name their source.
    let mut named: Vec<bool> = (0..journal_articles).map(|i| i < sources.len()).collect();
    named.shuffle(rng);
    let mut named = named.into_iter();
    let mut sources = sources.into_iter();

    let mut out: Vec<Vec<ReceivedCitation>> = vec![Vec::new(); years.len()];
    for (yi, &y) in YEARS.iter().enumerate() {
        let mut arts: Vec<usize> = (0..years.len()).filter(|&i| years[i] == y).collect();
        arts.shuffle(rng);
        let cited = &arts[..data::CITED_ARTICLES[yi]];
        let mut when: Vec<i32> = data::RECEIVED[yi]
            .iter()
            .flat_map(|&(cy, n)| std::iter::repeat_n(cy, n))
            .collect();
        when.shuffle(rng);
        for (k, cy) in when.into_iter().enumerate() {
            let i = if k < cited.len() {
                cited[k]
            } else {
                cited[rng.gen_range(0..cited.len())]
            };
            let doc_type = docs.next().expect("doc types cover every citation");
            let citing_source = if doc_type == DocType::JournalArticle && named.next() == Some(true) {
                sources.next()
            } else {
                None
            };
            out[i].push(ReceivedCitation {
                citing_year: cy,
                doc_type,
                citing_countries: places.next().expect("countries cover every citation"),
                is_self: citing_source.as_deref() == Some(data::SELF_SOURCE),
                citing_source,
            });
        }
    }
    assert!(docs.next().is_none() && places.next().is_none() && sources.next().is_none());
    for list in &mut out {
        list.sort_by_key(|r| r.citing_year);
    }
    out
}

/// `country,region` rows for the citing-country table.
pub fn regions_csv() -> String {
    let mut s = String::from("country,region\n");
    for r in rows(data::CITING_COUNTRIES_TSV) {
        s.push_str(&format!("{},{}\n", r[1].trim(), r[0].trim()));
    }
    s
}
