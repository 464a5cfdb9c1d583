//! Normalized corpus documents: JSON lines of `{"doc_id": ..., "body": ...}`.
//!
//! Reading is streaming: one line is held at a time, so arbitrarily large
//! collections can be piped through without buffering the file.

use std::collections::HashSet;
use std::io::{BufRead, Lines};

use serde::{Deserialize, Serialize};

use super::CollectionError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub doc_id: String,
    /// May be empty; an empty body scores as an all-zero vector downstream.
    #[serde(default)]
    pub body: String,
}

/// Streaming corpus iterator; yields documents in file order and fails on
/// the first malformed line or repeated `doc_id`.
pub struct CorpusReader<R: BufRead> {
    lines: Lines<R>,
    lineno: usize,
    seen: HashSet<String>,
}

pub fn parse_corpus<R: BufRead>(reader: R) -> CorpusReader<R> {
    CorpusReader {
        lines: reader.lines(),
        lineno: 0,
        seen: HashSet::new(),
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<Document, CollectionError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => return Some(Err(e.into())),
            };
            self.lineno += 1;
            if line.trim().is_empty() {
                continue;
            }
            let doc: Document = match serde_json::from_str(&line) {
                Ok(doc) => doc,
                Err(e) => {
                    return Some(Err(CollectionError::CorpusSyntax {
                        line: self.lineno,
                        reason: e.to_string(),
                    }))
                }
            };
            if !self.seen.insert(doc.doc_id.clone()) {
                return Some(Err(CollectionError::CorpusSyntax {
                    line: self.lineno,
                    reason: format!("duplicate doc_id {:?}", doc.doc_id),
                }));
            }
            return Some(Ok(doc));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_in_order() {
        let src = "{\"doc_id\":\"d1\",\"body\":\"alpha\"}\n{\"doc_id\":\"d2\",\"body\":\"beta\"}\n";
        let docs: Vec<Document> = parse_corpus(src.as_bytes()).map(Result::unwrap).collect();
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[0].doc_id, "d1");
        assert_eq!(docs[1].body, "beta");
    }

    #[test]
    fn empty_body_is_fine() {
        let src = "{\"doc_id\":\"d1\",\"body\":\"\"}\n{\"doc_id\":\"d2\"}\n";
        let docs: Vec<Document> = parse_corpus(src.as_bytes()).map(Result::unwrap).collect();
        assert_eq!(docs[0].body, "");
        assert_eq!(docs[1].body, "");
    }

    #[test]
    fn duplicate_doc_id_errors_on_second_occurrence() {
        let src = "{\"doc_id\":\"d1\",\"body\":\"a\"}\n{\"doc_id\":\"d1\",\"body\":\"b\"}\n";
        let mut reader = parse_corpus(src.as_bytes());
        assert!(reader.next().unwrap().is_ok());
        let err = reader.next().unwrap().unwrap_err();
        assert!(matches!(err, CollectionError::CorpusSyntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn bad_json_reports_line() {
        let src = "{\"doc_id\":\"d1\",\"body\":\"a\"}\nnope\n";
        let mut reader = parse_corpus(src.as_bytes());
        reader.next();
        let err = reader.next().unwrap().unwrap_err();
        assert!(matches!(err, CollectionError::CorpusSyntax { line: 2, .. }));
    }
}
