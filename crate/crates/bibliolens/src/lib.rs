//! Bibliometric indicators for journal-article corpora.
//!
//! Load a [`Corpus`] from JSON (or a [`Histogram`] from a `key,count` CSV)
//! and run the analyses in [`productivity`], [`collaboration`],
//! [`citation_profile`], [`impact`] and [`content`]. The [`report`] module
//! renders results as CSV, JSON or Markdown, and [`cli`] wires everything
//! to the `bibliolens` command.

pub mod citation_profile;
pub mod cli;
pub mod collaboration;
pub mod config;
pub mod content;
pub mod corpus;
pub mod display;
pub mod error;
pub mod histogram;
pub mod impact;
pub mod productivity;
pub mod report;

pub use corpus::{load_corpus, normalize_name, unique_authors, Corpus};
pub use error::{Error, Result};
pub use histogram::{load_histogram, Histogram, Key, KeyKind};
