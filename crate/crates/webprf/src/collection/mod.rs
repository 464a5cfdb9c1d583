//! Test-collection artifacts: topics, qrels, corpus documents, run files.
//!
//! Parsers are single-pass and single-threaded per stream; everything they
//! produce is immutable and safe to share across threads. The TREC text
//! formats round-trip bit-exactly through their writers.

mod corpus;
mod qrels;
mod run;
mod topics;

pub use corpus::{parse_corpus, CorpusReader, Document};
pub use qrels::{parse_qrels, write_qrels, Qrels};
pub use run::{format_trec_score, parse_run, write_run, Run, RunEntry, MAX_TOPIC_ENTRIES};
pub use topics::{parse_topics, Topic, TopicFormat};

use std::cmp::Ordering;
use std::io;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CollectionError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("topic parse error at byte {offset} ({parsed} topics parsed): {reason}")]
    TopicSyntax {
        offset: usize,
        parsed: usize,
        reason: String,
    },
    #[error("duplicate topic id {0:?}")]
    DuplicateTopic(String),
    #[error("qrels line {line}: {reason}")]
    QrelsSyntax { line: usize, reason: String },
    #[error("run line {line}: {reason}")]
    RunSyntax { line: usize, reason: String },
    #[error("run topic {topic:?}: {reason}")]
    RunInvalid { topic: String, reason: String },
    #[error("corpus line {line}: {reason}")]
    CorpusSyntax { line: usize, reason: String },
}

/// How a topic is turned into a web query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QueryFormulation {
    /// Topic title only (`t`).
    TitleOnly,
    /// Topic title and description (`td`).
    TitleAndDescription,
}

impl QueryFormulation {
    /// Renders the query: the title, or title + single space + description.
    pub fn render(&self, topic: &Topic) -> String {
        self.render_with(topic, " ")
    }

    /// Same as [`render`](Self::render) with a configurable delimiter.
    pub fn render_with(&self, topic: &Topic, delimiter: &str) -> String {
        match self {
            QueryFormulation::TitleOnly => topic.title.clone(),
            QueryFormulation::TitleAndDescription => {
                if topic.description.is_empty() {
                    topic.title.clone()
                } else {
                    format!("{}{}{}", topic.title, delimiter, topic.description)
                }
            }
        }
    }

    /// The short code used in run tags: `t` or `td`.
    pub fn code(&self) -> &'static str {
        match self {
            QueryFormulation::TitleOnly => "t",
            QueryFormulation::TitleAndDescription => "td",
        }
    }
}

/// Orders topic ids numerically when both sides parse as unsigned integers,
/// lexicographically otherwise. Used everywhere files are emitted so output
/// order is stable and matches the usual TREC convention.
pub fn topic_id_order(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        _ => a.cmp(b),
    }
}
