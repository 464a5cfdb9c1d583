//! TREC run files: `qid Q0 docno rank score tag`.

use std::collections::{BTreeMap, HashSet};
use std::io::{BufRead, Write};

use super::{topic_id_order, CollectionError};

/// Cap on entries per topic; the final system run keeps at most this many.
pub const MAX_TOPIC_ENTRIES: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct RunEntry {
    pub doc_id: String,
    /// 1-based, contiguous within a topic.
    pub rank: u32,
    pub score: f64,
}

/// A ranked retrieval run: per topic, entries ordered by rank.
#[derive(Debug, Clone, PartialEq)]
pub struct Run {
    pub tag: String,
    topics: BTreeMap<String, Vec<RunEntry>>,
}

impl Run {
    pub fn new(tag: &str) -> Self {
        Run {
            tag: tag.to_string(),
            topics: BTreeMap::new(),
        }
    }

    /// Builds one topic's ranking from `(doc_id, score)` pairs already in
    /// final order; ranks are assigned 1..n. Validates all run invariants.
    pub fn push_scored<I>(&mut self, topic_id: &str, scored: I) -> Result<(), CollectionError>
    where
        I: IntoIterator<Item = (String, f64)>,
    {
        let entries: Vec<RunEntry> = scored
            .into_iter()
            .enumerate()
            .map(|(i, (doc_id, score))| RunEntry {
                doc_id,
                rank: (i + 1) as u32,
                score,
            })
            .collect();
        self.insert_topic(topic_id, entries)
    }

    /// Inserts pre-ranked entries after checking the invariants: ranks are
    /// exactly 1..n, scores non-increasing, no duplicate documents, at most
    /// [`MAX_TOPIC_ENTRIES`] entries.
    pub fn insert_topic(
        &mut self,
        topic_id: &str,
        entries: Vec<RunEntry>,
    ) -> Result<(), CollectionError> {
        let invalid = |reason: String| CollectionError::RunInvalid {
            topic: topic_id.to_string(),
            reason,
        };
        if entries.len() > MAX_TOPIC_ENTRIES {
            return Err(invalid(format!(
                "{} entries exceed the per-topic cap of {MAX_TOPIC_ENTRIES}",
                entries.len()
            )));
        }
        if self.topics.contains_key(topic_id) {
            return Err(invalid("topic already present in run".to_string()));
        }
        let mut seen = HashSet::new();
        for (i, entry) in entries.iter().enumerate() {
            if entry.rank as usize != i + 1 {
                return Err(invalid(format!(
                    "rank {} at position {} breaks the 1..n sequence",
                    entry.rank,
                    i + 1
                )));
            }
            if !entry.score.is_finite() {
                return Err(invalid(format!("non-finite score for {:?}", entry.doc_id)));
            }
            if i > 0 && entries[i - 1].score < entry.score {
                return Err(invalid(format!(
                    "score increases from rank {} to {}",
                    i,
                    i + 1
                )));
            }
            if !seen.insert(entry.doc_id.as_str()) {
                return Err(invalid(format!("duplicate document {:?}", entry.doc_id)));
            }
        }
        self.topics.insert(topic_id.to_string(), entries);
        Ok(())
    }

    pub fn topic(&self, topic_id: &str) -> Option<&[RunEntry]> {
        self.topics.get(topic_id).map(Vec::as_slice)
    }

    pub fn topic_ids(&self) -> impl Iterator<Item = &str> {
        self.topics.keys().map(String::as_str)
    }

    /// The ranked document ids of one topic, in rank order.
    pub fn doc_ids(&self, topic_id: &str) -> Vec<&str> {
        self.topic(topic_id)
            .map(|entries| entries.iter().map(|e| e.doc_id.as_str()).collect())
            .unwrap_or_default()
    }

    pub fn n_topics(&self) -> usize {
        self.topics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topics.is_empty()
    }
}

/// Serializes a score: the shortest exact decimal representation, zero-padded
/// to at least four decimal places. Parsing the result recovers the f64 bit
/// for bit.
pub fn format_trec_score(score: f64) -> String {
    let shortest = format!("{score}");
    match shortest.find('.') {
        Some(dot) if shortest.len() - dot - 1 >= 4 => shortest,
        _ => format!("{score:.4}"),
    }
}

/// Writes the 6-field TREC format, topics in ascending id order, entries in
/// rank order.
pub fn write_run<W: Write>(run: &Run, mut sink: W) -> Result<(), CollectionError> {
    let mut topic_ids: Vec<&str> = run.topic_ids().collect();
    topic_ids.sort_by(|a, b| topic_id_order(a, b));
    for topic_id in topic_ids {
        for entry in run.topic(topic_id).expect("listed topic exists") {
            writeln!(
                sink,
                "{topic_id} Q0 {} {} {} {}",
                entry.doc_id,
                entry.rank,
                format_trec_score(entry.score),
                run.tag
            )?;
        }
    }
    Ok(())
}

/// Parses the 6-field TREC format. Entries may appear in any order within
/// the file; per topic they are reordered by rank and then validated.
pub fn parse_run<R: BufRead>(reader: R) -> Result<Run, CollectionError> {
    let mut tag: Option<String> = None;
    let mut topics: BTreeMap<String, Vec<RunEntry>> = BTreeMap::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(CollectionError::RunSyntax {
                line: i + 1,
                reason: format!("expected 6 fields, got {}", fields.len()),
            });
        }
        let rank: u32 = fields[3].parse().map_err(|_| CollectionError::RunSyntax {
            line: i + 1,
            reason: format!("rank {:?} is not an integer", fields[3]),
        })?;
        let score: f64 = fields[4].parse().map_err(|_| CollectionError::RunSyntax {
            line: i + 1,
            reason: format!("score {:?} is not a number", fields[4]),
        })?;
        if tag.is_none() {
            tag = Some(fields[5].to_string());
        }
        topics.entry(fields[0].to_string()).or_default().push(RunEntry {
            doc_id: fields[2].to_string(),
            rank,
            score,
        });
    }
    let mut run = Run::new(tag.as_deref().unwrap_or(""));
    for (topic_id, mut entries) in topics {
        entries.sort_by_key(|e| e.rank);
        run.insert_topic(&topic_id, entries)?;
    }
    Ok(run)
}
