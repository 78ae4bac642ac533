//! Authors, affiliations and the author lists of every article.

use std::collections::{BTreeMap, HashSet};

use bibliolens::corpus::{normalize_name, AffiliationType, AuthorRecord};
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::data::{self, num, rows, HOME, YEARS};

pub const ANONYMOUS: &str = "ANONYMOUS";

#[derive(Debug, Clone)]
pub struct Affiliation {
    pub name: String,
    pub country: String,
    pub kind: AffiliationType,
    pub authors: usize,
    patterns: Vec<String>,
}

impl Affiliation {
    pub fn is_home(&self) -> bool {
        self.country == HOME
    }

    /// Length of the longest pattern found in `text`.
    fn match_len(&self, text: &str) -> Option<usize> {
        let t = text.to_lowercase();
        self.patterns
            .iter()
            .filter(|p| t.contains(p.as_str()))
            .map(|p| p.len())
            .max()
    }
}

#[derive(Debug, Clone)]
pub struct Author {
    pub name: String,
    /// `None` for the anonymous author.
    pub affiliation: Option<usize>,
    pub papers: usize,
}

#[derive(Debug, Clone)]
struct Row {
    papers: usize,
    name: String,
    best: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Single,
    SameAffiliation,
    DiffAffiliation,
    /// Article involving a foreign affiliation; index into the design list.
    Foreign(usize),
}

#[derive(Debug, Clone)]
pub struct Skeleton {
    pub year: i32,
    pub kind: Kind,
    pub authors: Vec<usize>,
}

pub struct People {
    pub affiliations: Vec<Affiliation>,
    pub authors: Vec<Author>,
    pub articles: Vec<Skeleton>,
}

impl People {
    pub fn record(&self, author: usize) -> AuthorRecord {
        let a = &self.authors[author];
        match a.affiliation {
            Some(i) => {
                let aff = &self.affiliations[i];
                AuthorRecord {
                    name: a.name.clone(),
                    affiliation: aff.name.clone(),
                    affiliation_type: aff.kind,
                    country: aff.country.clone(),
                }
            }
            None => AuthorRecord {
                name: a.name.clone(),
                affiliation: String::new(),
                affiliation_type: AffiliationType::Unknown,
                country: HOME.to_string(),
            },
        }
    }
}

struct ForeignArticle {
    year: i32,
    /// (affiliation, authors); `None` draws home authors.
    parts: Vec<(Option<usize>, usize)>,
}

impl ForeignArticle {
    fn size(&self) -> usize {
        self.parts.iter().map(|p| p.1).sum()
    }
}

fn parse_affiliations() -> Vec<Affiliation> {
    rows(data::AFFILIATIONS_TSV)
        .map(|r| Affiliation {
            country: r[0].to_string(),
            kind: data::affiliation_type(r[1]),
            authors: num(r[2]),
            name: r[3].to_string(),
            patterns: r
                .get(4)
                .map(|p| p.split('|').filter(|s| !s.is_empty()).map(str::to_string).collect())
                .unwrap_or_default(),
        })
        .collect()
}

fn parse_foreign(affs: &[Affiliation]) -> Vec<ForeignArticle> {
    rows(data::FOREIGN_ARTICLES_TSV)
        .map(|r| {
            let parts = r[1]
                .split(';')
                .map(|p| {
                    let (name, n) = p.trim().rsplit_once('*').expect("name*count");
                    let aff = if name == HOME {
                        None
                    } else {
                        Some(
                            affs.iter()
                                .position(|a| a.name == name)
                                .unwrap_or_else(|| panic!("unknown affiliation {name:?}")),
                        )
                    };
                    (aff, num(n))
                })
                .collect();
            ForeignArticle {
                year: r[0].parse().unwrap(),
                parts,
            }
        })
        .collect()
}

/// The author list, with one count moved from 3 to 4 papers, homonyms told
/// apart, and the anonymous author appended.
fn parse_rows(affs: &[Affiliation]) -> Vec<Row> {
    let mut out: Vec<Row> = Vec::new();
    let mut seen = HashSet::new();
    let mut bumped = false;
    for r in rows(data::AUTHORS_TSV) {
        let mut papers = num(r[0]);
        if papers == 3 && !bumped {
            papers = 4;
            bumped = true;
        }
        let mut name = r[1].trim().to_string();
        if !seen.insert(normalize_name(&name)) {
            name.push_str(" (2)");
            assert!(seen.insert(normalize_name(&name)));
        }
        let text = r.get(2).copied().unwrap_or("");
        let best = affs
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.match_len(text).map(|l| (l, i)))
            .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)))
            .map(|(_, i)| i);
        out.push(Row { papers, name, best });
    }
    out.push(Row {
        papers: 1,
        name: ANONYMOUS.to_string(),
        best: None,
    });
    out
}

/// Paper counts for the authors of one foreign affiliation: everyone gets
/// one, extras go round-robin without exceeding the number of articles.
fn foreign_counts(authors: usize, usage: usize, articles: usize) -> Vec<usize> {
    assert!(
        authors <= usage && usage <= authors * articles,
        "affiliation used {usage} times in {articles} articles for {authors} authors"
    );
    let mut c = vec![1; authors];
    let mut extra = usage - authors;
    let mut i = 0;
    while extra > 0 {
        if c[i] < articles {
            c[i] += 1;
            extra -= 1;
        }
        i = (i + 1) % authors;
    }
    c.sort_unstable_by(|a, b| b.cmp(a));
    c
}

pub fn build(rng: &mut ChaCha8Rng) -> People {
    let affs = parse_affiliations();
    let design = parse_foreign(&affs);
    let rows = parse_rows(&affs);
    let mut taken = vec![false; rows.len()];
    let mut authors: Vec<Author> = Vec::new();

    // Foreign authors first: their counts are fixed by the design.
    for (ai, aff) in affs.iter().enumerate().filter(|(_, a)| !a.is_home()) {
        let parts: Vec<usize> = design
            .iter()
            .flat_map(|d| d.parts.iter())
            .filter(|p| p.0 == Some(ai))
            .map(|p| p.1)
            .collect();
        let usage: usize = parts.iter().sum();
        for papers in foreign_counts(aff.authors, usage, parts.len()) {
            let pick = |pred: &dyn Fn(&Row) -> bool| {
                rows.iter()
                    .enumerate()
                    .position(|(i, r)| !taken[i] && r.papers == papers && r.name != ANONYMOUS && pred(r))
            };
            let i = pick(&|r| r.best == Some(ai))
                .or_else(|| pick(&|r| r.best.is_none()))
                .or_else(|| pick(&|r| r.best.is_some_and(|b| affs[b].is_home()) && r.papers < 5))
                .unwrap_or_else(|| panic!("no author with {papers} papers left for {}", aff.name));
            taken[i] = true;
            authors.push(Author {
                name: rows[i].name.clone(),
                affiliation: Some(ai),
                papers,
            });
        }
    }

    // Home authors: matched rows keep their affiliation while it has room,
    // the rest fill the largest remaining capacity.
    let mut room: Vec<usize> = affs.iter().map(|a| if a.is_home() { a.authors } else { 0 }).collect();
    let mut order: Vec<usize> = (0..rows.len()).filter(|&i| !taken[i]).collect();
    order.sort_by(|&a, &b| rows[b].papers.cmp(&rows[a].papers).then(a.cmp(&b)));
    let mut pending = Vec::new();
    for &i in &order {
        let r = &rows[i];
        if r.name == ANONYMOUS {
            authors.push(Author {
                name: r.name.clone(),
                affiliation: None,
                papers: r.papers,
            });
            continue;
        }
        match r.best {
            Some(b) if room[b] > 0 => {
                room[b] -= 1;
                authors.push(Author {
                    name: r.name.clone(),
                    affiliation: Some(b),
                    papers: r.papers,
                });
            }
            _ => pending.push(i),
        }
    }
    for i in pending {
        let b = (0..affs.len())
            .max_by(|&x, &y| room[x].cmp(&room[y]).then(y.cmp(&x)))
            .unwrap();
        assert!(room[b] > 0, "home affiliations are full");
        room[b] -= 1;
        authors.push(Author {
            name: rows[i].name.clone(),
            affiliation: Some(b),
            papers: rows[i].papers,
        });
    }
    assert!(room.iter().all(|&r| r == 0));
    for a in &mut authors {
        a.name = normalize_name(&a.name);
    }

    let articles = assign(rng, &affs, &authors, &design);
    People {
        affiliations: affs,
        authors,
        articles,
    }
}

fn assign(rng: &mut ChaCha8Rng, affs: &[Affiliation], authors: &[Author], design: &[ForeignArticle]) -> Vec<Skeleton> {
    let mut left: Vec<usize> = authors.iter().map(|a| a.papers).collect();
    // Random tie-breaking among authors with equal remaining counts.
    let mut tie: Vec<usize> = (0..authors.len()).collect();
    tie.shuffle(rng);
    let mut rank = vec![0; authors.len()];
    for (r, &a) in tie.iter().enumerate() {
        rank[a] = r;
    }
    let by_aff: BTreeMap<usize, Vec<usize>> = authors.iter().enumerate().fold(BTreeMap::new(), |mut m, (i, a)| {
        if let Some(f) = a.affiliation {
            m.entry(f).or_insert_with(Vec::new).push(i);
        }
        m
    });
    let top = |left: &[usize], pool: &mut dyn Iterator<Item = usize>, k: usize, skip: &[usize]| -> Vec<usize> {
        let mut c: Vec<usize> = pool.filter(|&i| left[i] > 0 && !skip.contains(&i)).collect();
        c.sort_by(|&a, &b| left[b].cmp(&left[a]).then(rank[a].cmp(&rank[b])));
        assert!(c.len() >= k, "ran out of authors");
        c.truncate(k);
        c
    };

    let mut out: Vec<Skeleton> = Vec::new();
    // Home part of each foreign article, filled later.
    let mut home_parts: Vec<(usize, usize)> = Vec::new();
    for (di, d) in design.iter().enumerate() {
        let mut list = Vec::new();
        for &(aff, k) in &d.parts {
            match aff {
                Some(f) => {
                    let got = top(&left, &mut by_aff[&f].iter().copied(), k, &list);
                    for &g in &got {
                        left[g] -= 1;
                    }
                    list.extend(got);
                }
                None => home_parts.push((out.len(), k)),
            }
        }
        out.push(Skeleton {
            year: d.year,
            kind: Kind::Foreign(di),
            authors: list,
        });
    }

    // Home-only articles per year from what the foreign ones leave over.
    for (yi, &year) in YEARS.iter().enumerate() {
        let mut sizes: Vec<usize> = data::COAUTHORS[yi]
            .iter()
            .flat_map(|&(s, n)| std::iter::repeat_n(s, n))
            .collect();
        let mut classes = data::COLLAB_CLASSES[yi];
        for d in design.iter().filter(|d| d.year == year) {
            let s = d.size();
            let p = sizes
                .iter()
                .position(|&x| x == s)
                .unwrap_or_else(|| panic!("no {s}-author slot in {year}"));
            sizes.remove(p);
            let countries: HashSet<&str> = d
                .parts
                .iter()
                .map(|p| p.0.map_or(HOME, |f| affs[f].country.as_str()))
                .collect();
            let named: HashSet<usize> = d.parts.iter().filter_map(|p| p.0).collect();
            let c = if s == 1 {
                0
            } else if countries.len() > 1 {
                3
            } else if named.len() == 1 {
                1
            } else {
                2
            };
            classes[c] -= 1;
        }
        assert_eq!(classes[3], 0, "{year}: multi-country articles must all be designed");
        let singles = sizes.iter().filter(|&&s| s == 1).count();
        assert_eq!(singles, classes[0]);
        let mut multi: Vec<usize> = sizes.into_iter().filter(|&s| s > 1).collect();
        assert_eq!(multi.len(), classes[1] + classes[2]);
        multi.shuffle(rng);
        for _ in 0..singles {
            out.push(Skeleton {
                year,
                kind: Kind::Single,
                authors: vec![],
            });
        }
        for (i, s) in multi.into_iter().enumerate() {
            let kind = if i < classes[1] {
                Kind::SameAffiliation
            } else {
                Kind::DiffAffiliation
            };
            out.push(Skeleton {
                year,
                kind,
                authors: vec![0; s],
            });
        }
    }
    for s in out.iter_mut().filter(|s| s.kind == Kind::Single) {
        s.authors = vec![0];
    }

    let anonymous = authors.iter().position(|a| a.affiliation.is_none()).unwrap();
    let first_single = out.iter().position(|s| s.kind == Kind::Single).unwrap();
    out[first_single].authors = vec![anonymous];
    left[anonymous] -= 1;

    // Same-affiliation articles, largest first.
    let mut same: Vec<usize> = (0..out.len())
        .filter(|&i| out[i].kind == Kind::SameAffiliation)
        .collect();
    same.shuffle(rng);
    same.sort_by_key(|&i| std::cmp::Reverse(out[i].authors.len()));
    for i in same {
        let k = out[i].authors.len();
        let f = by_aff
            .iter()
            .filter(|(f, m)| affs[**f].is_home() && m.iter().filter(|&&a| left[a] > 0).count() >= k)
            .max_by(|x, y| {
                let sx: usize = x.1.iter().map(|&a| left[a]).sum();
                let sy: usize = y.1.iter().map(|&a| left[a]).sum();
                sx.cmp(&sy).then(y.0.cmp(x.0))
            })
            .map(|(f, _)| *f)
            .expect("an affiliation large enough");
        let got = top(&left, &mut by_aff[&f].iter().copied(), k, &[]);
        for &g in &got {
            left[g] -= 1;
        }
        out[i].authors = got;
    }

    // Everything else draws from all home authors, largest first.
    let home: Vec<usize> = (0..authors.len())
        .filter(|&i| authors[i].affiliation.is_some_and(|f| affs[f].is_home()))
        .collect();
    let mut rest: Vec<(usize, usize)> = (0..out.len())
        .filter(|&i| matches!(out[i].kind, Kind::DiffAffiliation) || (out[i].kind == Kind::Single && i != first_single))
        .map(|i| (i, out[i].authors.len()))
        .chain(home_parts.iter().copied())
        .collect();
    rest.shuffle(rng);
    rest.sort_by_key(|&(_, k)| std::cmp::Reverse(k));
    for (i, k) in rest {
        let fresh = !matches!(out[i].kind, Kind::Foreign(_));
        let mut got = top(
            &left,
            &mut home.iter().copied(),
            k,
            if fresh { &[] } else { &out[i].authors },
        );
        if out[i].kind == Kind::DiffAffiliation {
            let first = authors[got[0]].affiliation;
            if got.iter().all(|&g| authors[g].affiliation == first) {
                let other = top(
                    &left,
                    &mut home.iter().copied().filter(|&a| authors[a].affiliation != first),
                    1,
                    &[],
                );
                *got.last_mut().unwrap() = other[0];
            }
        }
        for &g in &got {
            left[g] -= 1;
        }
        if fresh {
            out[i].authors = got;
        } else {
            out[i].authors.extend(got);
        }
    }
    assert!(left.iter().all(|&l| l == 0), "unplaced authorships remain");

    for s in &mut out {
        s.authors.shuffle(rng);
    }
    check(affs, authors, &out);
    out
}

fn check(affs: &[Affiliation], authors: &[Author], articles: &[Skeleton]) {
    for (yi, &year) in YEARS.iter().enumerate() {
        let ys: Vec<&Skeleton> = articles.iter().filter(|s| s.year == year).collect();
        assert_eq!(ys.len(), data::ARTICLES[yi]);
        let total: usize = ys.iter().map(|s| s.authors.len()).sum();
        assert_eq!(total, data::AUTHORSHIPS[yi]);
        let is_home = |a: usize| authors[a].affiliation.is_none_or(|f| affs[f].is_home());
        let foreign: usize = ys.iter().flat_map(|s| &s.authors).filter(|&&a| !is_home(a)).count();
        assert_eq!((total - foreign, foreign), data::HOME_FOREIGN[yi], "{year}");
        let mut classes = (0, 0, 0);
        for s in &ys {
            let h = s.authors.iter().filter(|&&a| is_home(a)).count();
            if h == s.authors.len() {
                classes.0 += 1;
            } else if h > 0 {
                classes.1 += 1;
            } else {
                classes.2 += 1;
            }
            let set: HashSet<usize> = s.authors.iter().copied().collect();
            assert_eq!(set.len(), s.authors.len(), "duplicate author in an article");
        }
        assert_eq!(classes, data::HOME_CLASSES[yi], "{year}");
    }
}
