//! Relevance judgments in the 4-field TREC format: `qid 0 docno rel`.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::{topic_id_order, CollectionError};

/// Relevance grades per (topic, document). Unknown pairs are grade 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Qrels {
    by_topic: HashMap<String, HashMap<String, u32>>,
}

impl Qrels {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a judgment; a later duplicate pair overrides an earlier one.
    pub fn insert(&mut self, topic_id: &str, doc_id: &str, grade: u32) {
        self.by_topic
            .entry(topic_id.to_string())
            .or_default()
            .insert(doc_id.to_string(), grade);
    }

    pub fn grade(&self, topic_id: &str, doc_id: &str) -> u32 {
        self.by_topic
            .get(topic_id)
            .and_then(|docs| docs.get(doc_id))
            .copied()
            .unwrap_or(0)
    }

    pub fn topic(&self, topic_id: &str) -> Option<&HashMap<String, u32>> {
        self.by_topic.get(topic_id)
    }

    pub fn topic_ids(&self) -> impl Iterator<Item = &str> {
        self.by_topic.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.by_topic.is_empty()
    }

    /// Number of judged pairs across all topics.
    pub fn len(&self) -> usize {
        self.by_topic.values().map(HashMap::len).sum()
    }
}

/// Parses `topic_id 0 doc_id grade` lines; the second field is ignored.
pub fn parse_qrels<R: BufRead>(reader: R) -> Result<Qrels, CollectionError> {
    let mut qrels = Qrels::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(CollectionError::QrelsSyntax {
                line: i + 1,
                reason: format!("expected 4 fields, got {}", fields.len()),
            });
        }
        let grade: u32 = fields[3].parse().map_err(|_| CollectionError::QrelsSyntax {
            line: i + 1,
            reason: format!("grade {:?} is not a non-negative integer", fields[3]),
        })?;
        qrels.insert(fields[0], fields[2], grade);
    }
    Ok(qrels)
}

/// Writes qrels with topics in ascending id order and documents sorted
/// lexicographically, so output is deterministic and round-trips.
pub fn write_qrels<W: Write>(qrels: &Qrels, mut sink: W) -> Result<(), CollectionError> {
    let mut topic_ids: Vec<&str> = qrels.topic_ids().collect();
    topic_ids.sort_by(|a, b| topic_id_order(a, b));
    for topic_id in topic_ids {
        let docs = qrels.topic(topic_id).expect("listed topic exists");
        let mut doc_ids: Vec<&str> = docs.keys().map(String::as_str).collect();
        doc_ids.sort_unstable();
        for doc_id in doc_ids {
            writeln!(sink, "{topic_id} 0 {doc_id} {}", docs[doc_id])?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_defaults_to_zero() {
        let qrels = parse_qrels("341 0 d1 1\n".as_bytes()).unwrap();
        assert_eq!(qrels.grade("341", "d1"), 1);
        assert_eq!(qrels.grade("341", "unjudged"), 0);
        assert_eq!(qrels.grade("999", "d1"), 0);
    }

    #[test]
    fn later_duplicate_overrides() {
        let qrels = parse_qrels("341 0 d1 1\n341 0 d1 0\n".as_bytes()).unwrap();
        assert_eq!(qrels.grade("341", "d1"), 0);
        assert_eq!(qrels.len(), 1);
    }

    #[test]
    fn non_integer_grade_reports_line() {
        let err = parse_qrels("341 0 d1 x\n".as_bytes()).unwrap_err();
        assert!(matches!(err, CollectionError::QrelsSyntax { line: 1, .. }), "{err}");
    }

    #[test]
    fn negative_grade_rejected() {
        let err = parse_qrels("341 0 d1 -1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, CollectionError::QrelsSyntax { line: 1, .. }));
    }

    #[test]
    fn wrong_field_count_reports_line() {
        let err = parse_qrels("341 0 d1 1\n341 d1 1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, CollectionError::QrelsSyntax { line: 2, .. }));
    }

    #[test]
    fn round_trip() {
        let mut qrels = Qrels::new();
        qrels.insert("341", "d2", 2);
        qrels.insert("341", "d1", 0);
        qrels.insert("10", "d9", 1);
        let mut buf = Vec::new();
        write_qrels(&qrels, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        // numeric topic order: 10 before 341
        assert_eq!(text, "10 0 d9 1\n341 0 d1 0\n341 0 d2 2\n");
        assert_eq!(parse_qrels(&buf[..]).unwrap(), qrels);
    }
}
