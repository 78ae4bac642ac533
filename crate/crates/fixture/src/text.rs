//! Article types, keywords, titles and funders.

use std::collections::{BTreeMap, HashSet};

use bibliolens::corpus::{normalize_keyword, ArticleType};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::data::{self, num, rows, YEARS};

/// Per-article content for the articles in skeleton order.
pub struct Content {
    pub types: Vec<ArticleType>,
    pub keywords: Vec<Vec<String>>,
    pub titles: Vec<String>,
    pub funders: Vec<Vec<String>>,
}

const FILLER: [&str; 40] = [
    "a",
    "study",
    "of",
    "the",
    "in",
    "among",
    "patients",
    "with",
    "and",
    "at",
    "report",
    "case",
    "outcome",
    "review",
    "hospital",
    "children",
    "adults",
    "clinical",
    "management",
    "factors",
    "associated",
    "prevalence",
    "experience",
    "analysis",
    "for",
    "rural",
    "urban",
    "community",
    "treatment",
    "on",
    "early",
    "evaluation",
    "use",
    "local",
    "population",
    "risk",
    "survey",
    "trial",
    "cohort",
    "series",
];

/// Expand `(value, articles)` pairs into a shuffled list of values.
fn deal(pairs: &[(usize, usize)], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = pairs.iter().flat_map(|&(k, n)| std::iter::repeat_n(k, n)).collect();
    v.shuffle(rng);
    v
}

/// `years[i]` and `sizes[i]` describe article `i`; `anonymous` is the index
/// of the article without a named author.
pub fn build(rng: &mut ChaCha8Rng, years: &[i32], sizes: &[usize], anonymous: usize) -> Content {
    let n = years.len();
    let types = article_types(rng, years, sizes, anonymous);

    // Keyword counts: zero for editorials and correspondence, the rest dealt.
    let mut counts = vec![0usize; n];
    let mut dealt = deal(&data::KEYWORDS_PER_ARTICLE[1..], rng).into_iter();
    for i in 0..n {
        if !matches!(types[i], ArticleType::Editorial | ArticleType::Correspondence) {
            counts[i] = dealt.next().expect("enough keyword counts");
        }
    }
    assert!(dealt.next().is_none(), "zero-keyword articles must match the table");
    let keywords = keywords(rng, &counts);

    let mut widths = deal(&data::TITLE_WORDS, rng).into_iter();
    let titles = (0..n)
        .map(|i| title(rng, widths.next().expect("enough titles"), &keywords[i]))
        .collect();
    assert!(widths.next().is_none());

    let funders = funders(rng, years, &types);
    Content {
        types,
        keywords,
        titles,
        funders,
    }
}

fn article_types(rng: &mut ChaCha8Rng, years: &[i32], sizes: &[usize], anonymous: usize) -> Vec<ArticleType> {
    let n = years.len();
    let mut types = vec![ArticleType::Other; n];
    let mut original = vec![false; n];
    for (yi, &y) in YEARS.iter().enumerate() {
        let mut multi: Vec<usize> = (0..n).filter(|&i| years[i] == y && sizes[i] > 1).collect();
        multi.shuffle(rng);
        for &i in &multi[..data::ORIGINALS[yi]] {
            original[i] = true;
            types[i] = ArticleType::Original;
        }
    }
    let zero = data::KEYWORDS_PER_ARTICLE[0].1;
    let mut rest: Vec<usize> = (0..n).filter(|&i| !original[i] && i != anonymous).collect();
    rest.shuffle(rng);
    rest.sort_by_key(|&i| sizes[i] > 1);
    let mut bare = vec![anonymous];
    bare.extend(rest.drain(..zero - 1));
    for i in bare {
        types[i] = if sizes[i] == 1 {
            ArticleType::Editorial
        } else {
            ArticleType::Correspondence
        };
    }
    let weighted = [
        (ArticleType::CaseReport, 6),
        (ArticleType::ShortCommunication, 2),
        (ArticleType::Cme, 1),
        (ArticleType::Other, 1),
    ];
    for i in rest {
        types[i] = weighted.choose_weighted(rng, |w| w.1).expect("weights are positive").0;
    }
    types
}

/// Spread the keyword list over articles so that no article repeats a
/// keyword: each keyword goes to the articles with the most free slots.
fn keywords(rng: &mut ChaCha8Rng, counts: &[usize]) -> Vec<Vec<String>> {
    let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let listed: Vec<(String, usize)> = rows(data::KEYWORDS_TSV)
        .map(|r| (r[0].trim().to_string(), num(r[1])))
        .collect();
    for extra in data::EXTRA_KEYWORDS {
        assert!(
            !listed
                .iter()
                .any(|(k, _)| normalize_keyword(k) == normalize_keyword(extra)),
            "{extra} is already listed"
        );
    }
    let all = listed
        .into_iter()
        .chain(data::PLACES.iter().map(|&(p, n)| (p.to_string(), n)))
        .chain(data::EXTRA_KEYWORDS.iter().map(|&k| (k.to_string(), 1)));
    for (k, c) in all {
        groups
            .entry(normalize_keyword(&k))
            .or_default()
            .extend(std::iter::repeat_n(k, c));
    }
    let mut groups: Vec<Vec<String>> = groups.into_values().collect();
    groups.shuffle(rng);
    groups.sort_by_key(|g| std::cmp::Reverse(g.len()));
    assert_eq!(groups.iter().map(Vec::len).sum::<usize>(), counts.iter().sum::<usize>());

    let mut free = counts.to_vec();
    let mut out: Vec<Vec<String>> = vec![Vec::new(); counts.len()];
    let mut order: Vec<usize> = (0..counts.len()).collect();
    for g in groups {
        order.shuffle(rng);
        order.sort_by_key(|&i| std::cmp::Reverse(free[i]));
        for (form, &i) in g.into_iter().zip(&order) {
            assert!(free[i] > 0, "keyword spread ran out of slots");
            free[i] -= 1;
            out[i].push(form);
        }
    }
    for k in &mut out {
        k.shuffle(rng);
    }
    out
}

fn title(rng: &mut ChaCha8Rng, width: usize, keywords: &[String]) -> String {
    let mut words: Vec<String> = keywords
        .iter()
        .flat_map(|k| k.split_whitespace())
        .map(str::to_lowercase)
        .collect();
    words.truncate(width.min(3));
    while words.len() < width {
        let pos = rng.gen_range(0..=words.len());
        words.insert(pos, FILLER.choose(rng).unwrap().to_string());
    }
    let mut s = words.join(" ");
    if let Some(c) = s.get(..1) {
        s.replace_range(..1, &c.to_uppercase());
    }
    s
}

fn funders(rng: &mut ChaCha8Rng, years: &[i32], types: &[ArticleType]) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new(); years.len()];
    let table: Vec<Vec<&str>> = rows(data::FUNDERS_TSV).collect();
    for (yi, &y) in YEARS.iter().enumerate() {
        let mut names: Vec<&str> = table
            .iter()
            .flat_map(|r| std::iter::repeat_n(r[0].trim(), num(r[1 + yi])))
            .collect();
        names.shuffle(rng);
        let mut originals: Vec<usize> = (0..years.len())
            .filter(|&i| years[i] == y && types[i] == ArticleType::Original)
            .collect();
        originals.shuffle(rng);
        let funded = &originals[..data::FUNDED[yi]];
        let (first, extra) = names.split_at(funded.len());
        for (&i, f) in funded.iter().zip(first) {
            out[i].push(f.to_string());
        }
        for f in extra {
            let i = *funded
                .iter()
                .find(|&&i| out[i].len() == 1 && out[i][0] != *f)
                .expect("an article for the second funder");
            out[i].push(f.to_string());
        }
    }
    for list in &out {
        assert_eq!(list.iter().collect::<HashSet<_>>().len(), list.len());
    }
    out
}
