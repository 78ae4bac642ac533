//! Outgoing references.

use bibliolens::corpus::{Reference, SourceType, DEFAULT_LANGUAGE};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::data::{self, num, rows, JOURNAL, YEARS};

/// Pre-1950 references are spread over this decade.
const EARLY: std::ops::Range<i32> = 1940..1950;

/// Reference counts per article, dealt from the range table so each year
/// reaches its total.
fn counts(rng: &mut ChaCha8Rng, years: &[i32]) -> Vec<usize> {
    let buckets: Vec<(usize, usize)> = data::REF_RANGES
        .iter()
        .flat_map(|&(lo, hi, n)| std::iter::repeat_n((lo, hi), n))
        .collect();
    assert_eq!(buckets.len(), years.len());
    let per_year: Vec<Vec<usize>> = YEARS
        .iter()
        .map(|&y| (0..years.len()).filter(|&i| years[i] == y).collect())
        .collect();
    let dealt = loop {
        let mut b = buckets.clone();
        b.shuffle(rng);
        let mut it = b.into_iter();
        let split: Vec<Vec<(usize, usize)>> = per_year
            .iter()
            .map(|arts| it.by_ref().take(arts.len()).collect())
            .collect();
        let fits = split.iter().zip(data::REFS_PER_YEAR).all(|(s, total)| {
            let lo: usize = s.iter().map(|b| b.0).sum();
            let hi: usize = s.iter().map(|b| b.1).sum();
            lo <= total && total <= hi
        });
        if fits {
            break split;
        }
    };
    let mut out = vec![0; years.len()];
    for ((arts, s), total) in per_year.iter().zip(dealt).zip(data::REFS_PER_YEAR) {
        let mut v: Vec<usize> = s.iter().map(|b| b.0).collect();
        let mut left = total - v.iter().sum::<usize>();
        while left > 0 {
            let j = rng.gen_range(0..v.len());
            if v[j] < s[j].1 {
                v[j] += 1;
                left -= 1;
            }
        }
        for (&i, n) in arts.iter().zip(v) {
            out[i] = n;
        }
    }
    out
}

/// Publication years cited in `yi`'s articles; `None` is undated.
fn pub_years(rng: &mut ChaCha8Rng, yi: usize) -> Vec<Option<i32>> {
    // Columns run from the latest citing year back.
    let col = 1 + (YEARS.len() - 1 - yi);
    let mut out = Vec::new();
    for r in rows(data::PUB_YEARS_TSV) {
        let n = num(r.get(col).copied().unwrap_or(""));
        for _ in 0..n {
            out.push(match r[0].trim() {
                "undated" => None,
                "1949-" => Some(rng.gen_range(EARLY)),
                y => Some(y.parse().expect("a year")),
            });
        }
    }
    out.shuffle(rng);
    out
}

/// Non-self journal titles for every year, in year order.
fn titles(rng: &mut ChaCha8Rng) -> Vec<Vec<String>> {
    let mut all: Vec<String> = data::journals()
        .into_iter()
        .flat_map(|(t, n)| std::iter::repeat_n(t, n as usize))
        .collect();
    all.shuffle(rng);
    let mut it = all.into_iter();
    let out: Vec<Vec<String>> = (0..YEARS.len())
        .map(|yi| {
            it.by_ref()
                .take(data::FORMATS_PER_YEAR[yi][0] - data::SELF_CITATIONS[yi])
                .collect()
        })
        .collect();
    assert!(it.next().is_none(), "journal list and formats disagree");
    out
}

fn reference(source_type: SourceType, pub_year: Option<i32>, title: Option<String>) -> Reference {
    let language = title
        .as_deref()
        .and_then(data::language_of)
        .unwrap_or(DEFAULT_LANGUAGE)
        .to_string();
    Reference {
        source_type,
        pub_year,
        journal_title: title,
        language,
    }
}

pub fn build(rng: &mut ChaCha8Rng, years: &[i32]) -> Vec<Vec<Reference>> {
    let counts = counts(rng, years);
    let mut titles = titles(rng);
    let mut out: Vec<Vec<Reference>> = vec![Vec::new(); years.len()];
    for (yi, &y) in YEARS.iter().enumerate() {
        let mut dates = pub_years(rng, yi).into_iter();
        let mut formats: Vec<SourceType> = data::FORMATS
            .iter()
            .zip(data::FORMATS_PER_YEAR[yi])
            .flat_map(|(&f, n)| std::iter::repeat_n(f, n))
            .collect();
        assert_eq!(formats.len(), data::REFS_PER_YEAR[yi]);
        formats.shuffle(rng);

        let mut own: Vec<Reference> = Vec::new();
        let mut other: Vec<Reference> = Vec::new();
        let mut names = std::mem::take(&mut titles[yi]).into_iter();
        for f in formats {
            let date = dates.next().expect("dates match formats");
            if f != SourceType::Journal {
                other.push(reference(f, date, None));
            } else if own.len() < data::SELF_CITATIONS[yi] {
                own.push(reference(f, date, Some(JOURNAL.to_string())));
            } else {
                other.push(reference(f, date, names.next()));
            }
        }
        assert!(dates.next().is_none() && names.next().is_none());

        // Self-citations sit in a fixed number of articles, at least one each.
        let arts: Vec<usize> = (0..years.len()).filter(|&i| years[i] == y).collect();
        let mut roomy: Vec<usize> = arts.iter().copied().filter(|&i| counts[i] >= 3).collect();
        roomy.shuffle(rng);
        let citing = &roomy[..data::SELF_CITING_ARTICLES[yi]];
        let mut own_n = vec![1usize; citing.len()];
        let mut left = own.len() - citing.len();
        while left > 0 {
            let j = rng.gen_range(0..citing.len());
            if own_n[j] < counts[citing[j]] {
                own_n[j] += 1;
                left -= 1;
            }
        }
        let mut own = own.into_iter();
        for (&i, n) in citing.iter().zip(own_n) {
            out[i].extend(own.by_ref().take(n));
        }
        let mut other = other.into_iter();
        for &i in &arts {
            let need = counts[i] - out[i].len();
            out[i].extend(other.by_ref().take(need));
            out[i].shuffle(rng);
        }
        assert!(other.next().is_none());
    }
    out
}
