//! Defaults read from a `key = value` file named by `BIBLIOLENS_CONFIG`.
//!
//! Recognised keys: `home`, `zones`, `format`, `window`, `top`,
//! `min_count`, `places`, `regions`, `year_floor`, `lenient`.
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "BIBLIOLENS_CONFIG";

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub home: String,
    pub zones: usize,
    pub format: Option<String>,
    pub window: u32,
    pub top: usize,
    pub min_count: u64,
    pub places: Option<PathBuf>,
    pub regions: Option<PathBuf>,
    pub year_floor: Option<i32>,
    pub lenient: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            home: "Malaysia".into(),
            zones: 3,
            format: None,
            window: 2,
            top: 20,
            min_count: 5,
            places: None,
            regions: None,
            year_floor: None,
            lenient: false,
        }
    }
}

fn parse_pairs(text: &str, origin: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::schema(format!("{origin}:{}", i + 1), "expected key = value"))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

impl Config {
    /// Parse config text. Relative paths resolve against `base`.
    pub fn parse(text: &str, origin: &str, base: Option<&Path>) -> Result<Config> {
        let mut c = Config::default();
        let resolve = |v: &str| -> PathBuf {
            let p = PathBuf::from(v);
            match base {
                Some(b) if p.is_relative() => b.join(p),
                _ => p,
            }
        };
        for (k, v) in parse_pairs(text, origin)? {
            let bad = || Error::schema(format!("{origin}: {k}"), format!("invalid value {v:?}"));
            match k.as_str() {
                "home" => c.home = v,
                "zones" => c.zones = v.parse().map_err(|_| bad())?,
                "format" => c.format = Some(v),
                "window" => c.window = v.parse().map_err(|_| bad())?,
                "top" => c.top = v.parse().map_err(|_| bad())?,
                "min_count" => c.min_count = v.parse().map_err(|_| bad())?,
                "places" => c.places = Some(resolve(&v)),
                "regions" => c.regions = Some(resolve(&v)),
                "year_floor" => c.year_floor = Some(v.parse().map_err(|_| bad())?),
                "lenient" => c.lenient = v.parse().map_err(|_| bad())?,
                _ => log::warn!("{origin}: ignoring unknown key {k:?}"),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Config::parse(&text, &path.display().to_string(), path.parent())
    }

    /// The file named by `BIBLIOLENS_CONFIG`, or built-in defaults.
    pub fn from_env() -> Result<Config> {
        match std::env::var_os(ENV_VAR) {
            Some(p) if !p.is_empty() => Config::load(Path::new(&p)),
            _ => Ok(Config::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_values() {
        let c = Config::parse(
            "# defaults\nhome = Singapore\nzones=4\nplaces = p.txt\nlenient = true\nmystery = 1\n",
            "cfg",
            Some(Path::new("/etc/x")),
        )
        .unwrap();
        assert_eq!(c.home, "Singapore");
        assert_eq!(c.zones, 4);
        assert_eq!(c.places, Some(PathBuf::from("/etc/x/p.txt")));
        assert!(c.lenient);
        assert_eq!(c.window, 2);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Config::parse("zones = many\n", "cfg", None).is_err());
        assert!(Config::parse("just words\n", "cfg", None).is_err());
    }
}
