//! The `bibliolens` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::citation_profile::{self as cp, AgeProfile};
use crate::config::Config;
use crate::content;
use crate::corpus::{load_corpus_with, unique_authors, Corpus, LoadOptions};
use crate::error::Error;
use crate::histogram::{load_histogram, KeyKind};
use crate::impact::{ImpactOptions, RegionMap};
use crate::report::sections::{self, ImpactQuery, Options};
use crate::report::{line_chart, render, series_csv, Chart, Format, Table};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bibliolens",
    version,
    about = "Bibliometric indicators for journal-article corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
struct Common {
    /// Corpus JSON or histogram CSV (chosen by extension)
    #[arg(value_name = "PATH")]
    path: Option<PathBuf>,
    #[arg(long = "input", value_name = "PATH", conflicts_with = "path")]
    input: Option<PathBuf>,
    /// Write results here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// csv, json or md; defaults to the --out extension, then md
    #[arg(long)]
    format: Option<String>,
    /// Reject unknown keys in corpus files (default)
    #[arg(long, conflicts_with = "lenient")]
    strict: bool,
    /// Warn about unknown keys instead of failing
    #[arg(long)]
    lenient: bool,
    /// Home country for collaboration splits
    #[arg(long)]
    home: Option<String>,
    /// Rows to show in ranked lists (0 for all)
    #[arg(long)]
    top: Option<usize>,
}

#[derive(Debug, Args)]
struct PlotArg {
    /// Also write an SVG chart here, with its data as a sibling .csv
    #[arg(long, value_name = "PATH.svg")]
    plot: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load and check a corpus or histogram file
    Validate(Common),
    /// Articles and authorships per year
    Summary(Common),
    /// Lotka's law fit on author productivity
    Lotka {
        #[command(flatten)]
        common: Common,
        /// Use a fixed exponent instead of fitting one
        #[arg(long = "c", value_name = "EXPONENT")]
        c: Option<f64>,
        /// two-point (classical) or lsq (log-log least squares)
        #[arg(long, default_value = "two-point")]
        method: String,
        /// Smallest publication count listed among core authors
        #[arg(long)]
        min_count: Option<u64>,
    },
    /// Co-authorship, degree of collaboration, countries and affiliations
    Collab(Common),
    /// Reference counts, formats, ages, journals, self-citation, languages
    Refs {
        #[command(flatten)]
        common: Common,
        /// Fold publication years below this into one row
        #[arg(long)]
        year_floor: Option<i32>,
    },
    /// Bradford zones over cited journals
    Bradford {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        zones: Option<usize>,
        #[command(flatten)]
        plot: PlotArg,
    },
    /// Age profile and half-life of references
    Halflife {
        #[command(flatten)]
        common: Common,
        /// Undated references, when the input histogram has no "Undated" row
        #[arg(long, default_value_t = 0)]
        undated: u64,
        #[command(flatten)]
        plot: PlotArg,
    },
    /// Received citations and impact factors
    Impact {
        #[command(flatten)]
        common: Common,
        /// Target year (or citing year with --aggregate)
        #[arg(long)]
        year: Option<i32>,
        /// Citation window in years
        #[arg(long)]
        window: Option<u32>,
        /// Publication span such as 2004..2008
        #[arg(long, value_name = "Y1..Y2")]
        aggregate: Option<String>,
        /// Truncate IF to 3 decimals (default)
        #[arg(long, conflicts_with = "round_display")]
        truncate_display: bool,
        /// Round IF half-up instead of truncating
        #[arg(long)]
        round_display: bool,
        /// Count only original articles in the denominator
        #[arg(long)]
        originals_only: bool,
        /// country,region CSV for the region rollup
        #[arg(long)]
        regions: Option<PathBuf>,
    },
    /// Keywords, title lengths and funding
    Content {
        #[command(flatten)]
        common: Common,
        /// Place names, one per line
        #[arg(long)]
        places: Option<PathBuf>,
    },
    /// Every table for a corpus
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        places: Option<PathBuf>,
        #[arg(long)]
        regions: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

enum Input {
    Corpus(Corpus),
    Histogram(PathBuf),
}

struct Ctx {
    cfg: Config,
    common: Common,
}

impl Ctx {
    fn input_path(&self) -> Res<&Path> {
        self.common
            .path
            .as_deref()
            .or(self.common.input.as_deref())
            .ok_or_else(|| Failure::Usage("an input file is required (positional or --input)".into()))
    }

    fn load_opts(&self) -> LoadOptions {
        if self.common.lenient || (self.cfg.lenient && !self.common.strict) {
            LoadOptions::lenient()
        } else {
            LoadOptions::default()
        }
    }

    fn input(&self) -> Res<Input> {
        let p = self.input_path()?;
        match p
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("json") => {
                let l = load_corpus_with(p, &self.load_opts())?;
                for w in &l.warnings {
                    eprintln!("warning: {w}");
                }
                Ok(Input::Corpus(l.corpus))
            }
            Some("csv") => Ok(Input::Histogram(p.to_path_buf())),
            _ => Err(Failure::Usage(format!(
                "cannot tell the input type of {}: use a .json corpus or a .csv histogram",
                p.display()
            ))),
        }
    }

    fn corpus(&self, cmd: &str) -> Res<Corpus> {
        match self.input()? {
            Input::Corpus(c) => Ok(c),
            Input::Histogram(_) => Err(Failure::Usage(format!("{cmd} needs a corpus JSON file"))),
        }
    }

    fn options(&self) -> Options {
        let top = self.common.top.unwrap_or(self.cfg.top);
        Options {
            home: self.common.home.clone().unwrap_or_else(|| self.cfg.home.clone()),
            zones: self.cfg.zones,
            top: if top == 0 { None } else { Some(top) },
            min_count: self.cfg.min_count,
            places: None,
            regions: None,
            window: self.cfg.window,
            truncate: true,
            impact: ImpactOptions::default(),
            year_floor: self.cfg.year_floor,
        }
    }

    fn format(&self) -> Res<Format> {
        let explicit = self.common.format.as_deref().or(self.cfg.format.as_deref());
        match explicit {
            Some(f) => Format::parse(f).ok_or_else(|| Failure::Usage(format!("unknown format {f:?}"))),
            None => Ok(self
                .common
                .out
                .as_deref()
                .and_then(Format::from_path)
                .unwrap_or(Format::Md)),
        }
    }

    fn emit(&self, tables: &[Table]) -> Res<()> {
        let text = render(tables, self.format()?);
        match &self.common.out {
            Some(p) => std::fs::write(p, text).map_err(|e| Failure::Lib(Error::io(p, e)))?,
            None => {
                let mut so = std::io::stdout().lock();
                so.write_all(text.as_bytes())
                    .map_err(|e| Failure::Lib(Error::io("<stdout>", e)))?;
            }
        }
        Ok(())
    }
}

fn write_plot(path: &Path, chart: &Chart) -> Res<()> {
    std::fs::write(path, line_chart(chart)).map_err(|e| Failure::Lib(Error::io(path, e)))?;
    let data = path.with_extension("csv");
    std::fs::write(&data, series_csv(chart)).map_err(|e| Failure::Lib(Error::io(&data, e)))?;
    Ok(())
}

fn parse_span(s: &str) -> Res<(i32, i32)> {
    let bad = || Failure::Usage(format!("--aggregate expects Y1..Y2, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i32 = a.trim().parse().map_err(|_| bad())?;
    let b: i32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if b < a {
        return Err(bad());
    }
    Ok((a, b))
}

fn places(opt: &Option<PathBuf>, cfg: &Config) -> Res<Option<Vec<String>>> {
    match opt.as_ref().or(cfg.places.as_ref()) {
        Some(p) => Ok(Some(content::load_places(p)?)),
        None => Ok(None),
    }
}

fn regions(opt: &Option<PathBuf>, cfg: &Config) -> Res<Option<RegionMap>> {
    match opt.as_ref().or(cfg.regions.as_ref()) {
        Some(p) => Ok(Some(RegionMap::load(p)?)),
        None => Ok(None),
    }
}

fn execute(cmd: Command, cfg: Config) -> Res<()> {
    let ctx = |common: Common| Ctx {
        cfg: cfg.clone(),
        common,
    };
    match cmd {
        Command::Validate(common) => {
            let x = ctx(common);
            match x.input()? {
                Input::Corpus(c) => {
                    unique_authors(&c)?;
                    println!("{} articles OK", c.articles.len());
                }
                Input::Histogram(p) => {
                    let h = load_histogram(&p, KeyKind::Text)?;
                    println!("{} bins OK (total {})", h.len(), h.total());
                }
            }
            Ok(())
        }
        Command::Summary(common) => {
            let x = ctx(common);
            let c = x.corpus("summary")?;
            x.emit(&sections::summary(&c)?)
        }
        Command::Lotka {
            common,
            c,
            method,
            min_count,
        } => {
            let x = ctx(common);
            let lsq = match method.as_str() {
                "two-point" => false,
                "lsq" => true,
                other => return Err(Failure::Usage(format!("unknown method {other:?}"))),
            };
            if let Some(v) = c {
                if v.is_nan() || v <= 0.0 {
                    return Err(Failure::Usage(format!("--c must be positive, got {v}")));
                }
            }
            let tables = match x.input()? {
                Input::Corpus(corpus) => {
                    let mut o = x.options();
                    o.min_count = min_count.unwrap_or(o.min_count);
                    sections::lotka(&corpus, c, lsq, &o)?
                }
                Input::Histogram(p) => sections::lotka_from_histogram(&load_histogram(&p, KeyKind::Integer)?, c, lsq)?,
            };
            x.emit(&tables)
        }
        Command::Collab(common) => {
            let x = ctx(common);
            let c = x.corpus("collab")?;
            x.emit(&sections::collab(&c, &x.options())?)
        }
        Command::Refs { common, year_floor } => {
            let x = ctx(common);
            let c = x.corpus("refs")?;
            let mut o = x.options();
            o.year_floor = year_floor.or(o.year_floor);
            x.emit(&sections::refs(&c, &o)?)
        }
        Command::Bradford { common, zones, plot } => {
            let x = ctx(common);
            let mut o = x.options();
            o.zones = zones.unwrap_or(o.zones);
            let freqs = match x.input()? {
                Input::Corpus(c) => cp::journal_frequency(&c),
                Input::Histogram(p) => load_histogram(&p, KeyKind::Text)?,
            };
            let (tables, chart) = sections::bradford(&freqs, &o)?;
            if let Some(p) = &plot.plot {
                write_plot(p, &chart)?;
            }
            x.emit(&tables)
        }
        Command::Halflife { common, undated, plot } => {
            let x = ctx(common);
            let profile = match x.input()? {
                Input::Corpus(c) => cp::age_profile(&c),
                Input::Histogram(p) => {
                    let mut prof = AgeProfile::from_labelled(&load_histogram(&p, KeyKind::Text)?)?;
                    if undated > 0 {
                        prof = AgeProfile::from_bins(prof.bins, prof.undated + undated)?;
                    }
                    prof
                }
            };
            let (tables, chart) = sections::halflife(&profile);
            if let Some(p) = &plot.plot {
                write_plot(p, &chart)?;
            }
            x.emit(&tables)
        }
        Command::Impact {
            common,
            year,
            window,
            aggregate,
            truncate_display: _,
            round_display,
            originals_only,
            regions: reg,
        } => {
            let x = ctx(common);
            let c = x.corpus("impact")?;
            let mut o = x.options();
            o.window = window.unwrap_or(o.window);
            if o.window < 1 {
                return Err(Failure::Usage("--window must be at least 1".into()));
            }
            o.truncate = !round_display;
            o.impact.originals_only = originals_only;
            o.regions = regions(&reg, &x.cfg)?;
            let q = match (aggregate, year) {
                (Some(span), y) => {
                    let (start, end) = parse_span(&span)?;
                    ImpactQuery::Aggregate {
                        start,
                        end,
                        citing: y.unwrap_or(end + 1),
                    }
                }
                (None, Some(y)) => ImpactQuery::Year(y),
                (None, None) => ImpactQuery::Series,
            };
            x.emit(&sections::impact(&c, q, &o)?)
        }
        Command::Content { common, places: pl } => {
            let x = ctx(common);
            let c = x.corpus("content")?;
            let mut o = x.options();
            o.places = places(&pl, &x.cfg)?;
            x.emit(&sections::content(&c, &o)?)
        }
        Command::Report {
            common,
            places: pl,
            regions: reg,
        } => {
            let x = ctx(common);
            let c = x.corpus("report")?;
            let mut o = x.options();
            o.places = places(&pl, &x.cfg)?;
            o.regions = regions(&reg, &x.cfg)?;
            x.emit(&sections::full_report(&c, &o)?)
        }
    }
}

/// Run the command line with `argv` (program name first). Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match Config::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, cfg) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                EXIT_SCHEMA
            } else {
                EXIT_PRECONDITION
            }
        }
    }
}
