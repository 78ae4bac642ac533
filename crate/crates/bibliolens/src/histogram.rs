//! Frequency tables keyed by integer or text.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    Int(i64),
    Text(String),
}

impl Key {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            Key::Int(n) => Some(*n),
            Key::Text(_) => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            Key::Text(s) => Some(s),
            Key::Int(_) => None,
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Int(n) => write!(f, "{n}"),
            Key::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Key {
    fn from(n: i64) -> Self {
        Key::Int(n)
    }
}

impl From<i32> for Key {
    fn from(n: i32) -> Self {
        Key::Int(n as i64)
    }
}

impl From<&str> for Key {
    fn from(s: &str) -> Self {
        Key::Text(s.to_string())
    }
}

impl From<String> for Key {
    fn from(s: String) -> Self {
        Key::Text(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyKind {
    Integer,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Histogram {
    pub label: String,
    bins: BTreeMap<Key, u64>,
}

impl Histogram {
    pub fn new(label: impl Into<String>) -> Self {
        Histogram {
            label: label.into(),
            bins: BTreeMap::new(),
        }
    }

    /// Build from pairs; repeated keys are summed.
    pub fn from_pairs<K: Into<Key>>(label: impl Into<String>, pairs: impl IntoIterator<Item = (K, u64)>) -> Self {
        let mut h = Histogram::new(label);
        for (k, c) in pairs {
            h.add(k, c);
        }
        h
    }

    pub fn add(&mut self, key: impl Into<Key>, count: u64) {
        *self.bins.entry(key.into()).or_insert(0) += count;
    }

    pub fn incr(&mut self, key: impl Into<Key>) {
        self.add(key, 1);
    }

    pub fn get(&self, key: impl Into<Key>) -> u64 {
        self.bins.get(&key.into()).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.bins.values().sum()
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// Bins in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&Key, u64)> {
        self.bins.iter().map(|(k, c)| (k, *c))
    }

    /// Integer-keyed bins in key order; text keys are skipped.
    pub fn int_bins(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.bins.iter().filter_map(|(k, c)| k.as_int().map(|n| (n, *c)))
    }

    pub fn keys(&self) -> impl Iterator<Item = &Key> {
        self.bins.keys()
    }

    pub fn max_count(&self) -> Option<u64> {
        self.bins.values().copied().max()
    }

    /// Descending by count, ties by key order.
    pub fn ranked(&self) -> Vec<(Key, u64)> {
        let mut v: Vec<(Key, u64)> = self.bins.iter().map(|(k, c)| (k.clone(), *c)).collect();
        v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        v
    }

    /// Σ key × count over integer keys.
    pub fn weighted_sum(&self) -> i128 {
        self.int_bins().map(|(k, c)| k as i128 * c as i128).sum()
    }

    /// Mean of the integer keys weighted by count, or 0 for an empty histogram.
    pub fn mean_key(&self) -> f64 {
        let t = self.total();
        if t == 0 {
            0.0
        } else {
            self.weighted_sum() as f64 / t as f64
        }
    }

    /// Keep only bins satisfying `f`.
    pub fn filtered(&self, mut f: impl FnMut(&Key, u64) -> bool) -> Histogram {
        Histogram {
            label: self.label.clone(),
            bins: self
                .bins
                .iter()
                .filter(|(k, c)| f(k, **c))
                .map(|(k, c)| (k.clone(), *c))
                .collect(),
        }
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(w);
        let map = |e: csv::Error| Error::schema("csv output", e.to_string());
        wtr.write_record(["key", "count"]).map_err(map)?;
        for (k, c) in self.iter() {
            wtr.write_record([k.to_string(), c.to_string()]).map_err(map)?;
        }
        wtr.flush().map_err(|e| Error::schema("csv output", e.to_string()))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    /// Parse a `key,count` CSV. Repeated keys are summed.
    pub fn read_csv<R: Read>(label: &str, r: R, kind: KeyKind) -> Result<Histogram> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(r);
        let headers = rdr
            .headers()
            .map_err(|e| Error::schema(format!("{label}:1"), e.to_string()))?
            .clone();
        if headers.len() != 2 || &headers[0] != "key" || &headers[1] != "count" {
            return Err(Error::schema(
                format!("{label}:1"),
                format!(
                    "expected header \"key,count\", got {:?}",
                    headers.iter().collect::<Vec<_>>()
                ),
            ));
        }
        let mut h = Histogram::new(label);
        for rec in rdr.records() {
            let rec = rec.map_err(|e| {
                let line = e.position().map(|p| p.line()).unwrap_or(0);
                Error::schema(format!("{label}:{line}"), e.to_string())
            })?;
            let line = rec.position().map(|p| p.line()).unwrap_or(0);
            let loc = || format!("{label}:{line}");
            let key_raw = &rec[0];
            let count: i64 = rec[1]
                .parse()
                .map_err(|_| Error::schema(loc(), format!("count {:?} is not an integer", &rec[1])))?;
            if count < 0 {
                return Err(Error::NegativeCount {
                    key: key_raw.to_string(),
                    count,
                    line,
                });
            }
            let key = match kind {
                KeyKind::Integer => Key::Int(
                    key_raw
                        .parse()
                        .map_err(|_| Error::schema(loc(), format!("key {key_raw:?} is not an integer")))?,
                ),
                KeyKind::Text => Key::Text(key_raw.to_string()),
            };
            h.add(key, count as u64);
        }
        Ok(h)
    }
}

/// Read a histogram CSV from disk.
pub fn load_histogram(path: impl AsRef<Path>, kind: KeyKind) -> Result<Histogram> {
    let path = path.as_ref();
    let f = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Histogram::read_csv(&label, f, kind).map_err(|e| match e {
        Error::Schema { locator, message } => Error::Schema {
            locator: locator.replacen(&label, &path.display().to_string(), 1),
            message,
        },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_and_ranking() {
        let h = Histogram::from_pairs("j", [("B", 3), ("A", 3), ("C", 5)]);
        assert_eq!(h.total(), 11);
        let r: Vec<_> = h.ranked().into_iter().map(|(k, _)| k.to_string()).collect();
        assert_eq!(r, ["C", "A", "B"]);
    }

    #[test]
    fn csv_round_trip() {
        let h = Histogram::from_pairs("t", [(1i64, 1084), (2, 204), (19, 1)]);
        let s = h.to_csv_string();
        assert_eq!(s, "key,count\n1,1084\n2,204\n19,1\n");
        let back = Histogram::read_csv("t", s.as_bytes(), KeyKind::Integer).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn empty_body_gives_empty_histogram() {
        let h = Histogram::read_csv("e", "key,count\n".as_bytes(), KeyKind::Integer).unwrap();
        assert!(h.is_empty());
        assert_eq!(h.total(), 0);
        assert_eq!(h.to_csv_string(), "key,count\n");
    }

    #[test]
    fn rejects_negative_and_garbage() {
        let e = Histogram::read_csv("n", "key,count\n1,-3\n".as_bytes(), KeyKind::Integer).unwrap_err();
        assert!(matches!(e, Error::NegativeCount { count: -3, line: 2, .. }));
        let e = Histogram::read_csv("n", "key,count\nx,3\n".as_bytes(), KeyKind::Integer).unwrap_err();
        assert!(matches!(e, Error::Schema { .. }));
        let e = Histogram::read_csv("n", "k,c\n1,3\n".as_bytes(), KeyKind::Integer).unwrap_err();
        assert!(matches!(e, Error::Schema { .. }));
    }

    #[test]
    fn duplicate_keys_are_summed() {
        let h = Histogram::read_csv("d", "key,count\nEye,4\nEye,1\n".as_bytes(), KeyKind::Text).unwrap();
        assert_eq!(h.get("Eye"), 5);
    }

    #[test]
    fn quoted_text_keys() {
        let h = Histogram::read_csv("q", "key,count\n\"Lancet, The\",7\n".as_bytes(), KeyKind::Text).unwrap();
        assert_eq!(h.get("Lancet, The"), 7);
        assert!(h.to_csv_string().contains("\"Lancet, The\",7"));
    }
}
