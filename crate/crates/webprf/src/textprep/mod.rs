//! Text normalization: tokenize, drop stopwords, Porter-stem.
//!
//! All operations here are pure functions over their inputs, so they can be
//! called from any number of threads without coordination.

mod porter;

pub use porter::porter_stem;

use std::collections::HashSet;
use std::io::{self, BufRead};
use std::path::Path;

use thiserror::Error;

/// The bundled default stopword list (the 179-word English list shipped
/// with NLTK), overridable via [`StopwordList::from_reader`].
const DEFAULT_STOPWORDS: &str = include_str!("english_stopwords.txt");

/// An ordered sequence of normalized terms: lowercase, stemmed, stopword-free.
pub type TermSequence = Vec<String>;

#[derive(Debug, Error)]
pub enum StopwordError {
    #[error("stopword file: {0}")]
    Io(#[from] io::Error),
    #[error("stopword entry {0:?} on line {1} is not lowercase")]
    NotLowercase(String, usize),
}

/// A named set of lowercase stopwords, matched against unstemmed tokens.
#[derive(Debug, Clone)]
pub struct StopwordList {
    name: String,
    words: HashSet<String>,
}

impl StopwordList {
    /// The bundled 179-word English list.
    pub fn english() -> Self {
        Self::parse("english", DEFAULT_STOPWORDS).expect("bundled stopword list is valid")
    }

    /// An empty list (keeps every token).
    pub fn empty() -> Self {
        StopwordList {
            name: "none".to_string(),
            words: HashSet::new(),
        }
    }

    /// Reads a list in the one-word-per-line format; `#` starts a comment.
    pub fn from_reader<R: BufRead>(name: &str, reader: R) -> Result<Self, StopwordError> {
        let mut buf = String::new();
        let mut reader = reader;
        reader.read_to_string(&mut buf)?;
        Self::parse(name, &buf)
    }

    pub fn from_path(path: &Path) -> Result<Self, StopwordError> {
        let file = std::fs::File::open(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".to_string());
        Self::from_reader(&name, io::BufReader::new(file))
    }

    fn parse(name: &str, text: &str) -> Result<Self, StopwordError> {
        let mut words = HashSet::new();
        for (lineno, line) in text.lines().enumerate() {
            let entry = line.trim();
            if entry.is_empty() || entry.starts_with('#') {
                continue;
            }
            if entry.chars().any(|c| c.is_uppercase()) {
                return Err(StopwordError::NotLowercase(entry.to_string(), lineno + 1));
            }
            words.insert(entry.to_string());
        }
        Ok(StopwordList {
            name: name.to_string(),
            words,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(token)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

/// Splits text into lowercased maximal runs of Unicode letters and digits.
/// Everything else (punctuation, symbols, whitespace) separates tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in text.chars() {
        if ch.is_alphanumeric() {
            for lower in ch.to_lowercase() {
                current.push(lower);
            }
        } else if !current.is_empty() {
            tokens.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

/// tokenize -> drop stopwords (matched before stemming) -> Porter-stem.
pub fn preprocess(text: &str, stopwords: &StopwordList) -> TermSequence {
    tokenize(text)
        .into_iter()
        .filter(|token| !stopwords.contains(token))
        .map(|token| porter_stem(&token))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_splits_on_punctuation() {
        assert_eq!(
            tokenize("Airport security, 2018!"),
            vec!["airport", "security", "2018"]
        );
        assert_eq!(
            tokenize("state-of-the-art"),
            vec!["state", "of", "the", "art"]
        );
    }

    #[test]
    fn tokenize_empty() {
        assert!(tokenize("").is_empty());
        assert!(tokenize(" .,;! ").is_empty());
    }

    #[test]
    fn tokenize_unicode() {
        assert_eq!(tokenize("Köln café №1"), vec!["köln", "café", "1"]);
    }

    #[test]
    fn tokenize_distributes_over_space_concatenation() {
        let (a, b) = ("Hello, world!", "rank-biased overlap");
        let mut joined = tokenize(a);
        joined.extend(tokenize(b));
        assert_eq!(tokenize(&format!("{a} {b}")), joined);
    }

    #[test]
    fn bundled_list_has_179_words() {
        let list = StopwordList::english();
        assert_eq!(list.len(), 179);
        assert!(list.contains("the"));
        assert!(list.contains("wouldn't"));
        assert!(!list.contains("airport"));
    }

    #[test]
    fn preprocess_removes_stopwords_then_stems() {
        let stopwords = StopwordList::parse("test", "the\nof\n").unwrap();
        assert_eq!(
            preprocess("The running of the airports", &stopwords),
            vec!["run", "airport"]
        );
    }

    #[test]
    fn preprocess_all_stopwords_is_empty() {
        let stopwords = StopwordList::english();
        assert!(preprocess("the of and or", &stopwords).is_empty());
    }

    #[test]
    fn preprocess_keeps_numeric_tokens() {
        let stopwords = StopwordList::english();
        assert_eq!(preprocess("since 2018", &stopwords), vec!["sinc", "2018"]);
    }

    #[test]
    fn preprocess_is_deterministic() {
        let stopwords = StopwordList::english();
        let text = "Classifiers trained from scraped snippets rank documents.";
        assert_eq!(preprocess(text, &stopwords), preprocess(text, &stopwords));
    }

    #[test]
    fn preprocess_output_contains_no_stopword() {
        let stopwords = StopwordList::english();
        let text = "The classifiers are trained from the scraped snippets of other topics";
        for term in preprocess(text, &stopwords) {
            assert!(!stopwords.contains(&term), "stopword {term:?} survived");
        }
    }

    #[test]
    fn stemmer_idempotent_on_stopword_list() {
        let list = StopwordList::english();
        for word in list.iter() {
            let once = porter_stem(word);
            assert_eq!(porter_stem(&once), once, "not idempotent on {word:?}");
        }
    }

    #[test]
    fn stemmer_idempotent_on_fixture_corpus() {
        let stopwords = StopwordList::english();
        let fixtures = [
            "International airport security measures were tightened during 2018.",
            "Pseudo-relevance feedback retrieves documents from newswire collections.",
            "Scraped snippets form cost-efficient training data for routing profiles.",
            "The classifier ranks documents by their likelihood of being relevant.",
        ];
        for text in fixtures {
            for term in preprocess(text, &stopwords) {
                assert_eq!(porter_stem(&term), term, "not idempotent on {term:?}");
            }
        }
    }

    #[test]
    fn stopword_file_rejects_uppercase() {
        let err = StopwordList::parse("bad", "the\nBad\n").unwrap_err();
        assert!(matches!(err, StopwordError::NotLowercase(_, 2)));
    }

    #[test]
    fn stopword_file_allows_comments_and_blanks() {
        let list = StopwordList::parse("c", "# header\n\nthe\n  a  \n").unwrap();
        assert_eq!(list.len(), 2);
        assert!(list.contains("a"));
    }
}
