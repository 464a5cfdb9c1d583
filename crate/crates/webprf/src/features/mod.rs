//! tf-idf feature space fitted on scraped web texts.
//!
//! The vocabulary and document frequencies come from the web-side training
//! texts only; corpus documents are transformed with the same fitted model,
//! so both live in one shared feature space. Term frequency is sublinear
//! (`1 + ln c`) and idf is the smoothed `ln((1+N)/(1+df)) + 1`, which is
//! strictly positive. Non-empty transformed vectors are L2-normalized.

mod svmlight;
mod training;

pub use svmlight::{read_svmlight, write_svmlight};
pub use training::{assemble_training, AssembledTraining, LabeledSet};

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::textprep::TermSequence;

#[derive(Debug, Error)]
pub enum FeatureError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("cannot fit a model: all input sequences are empty")]
    AllSequencesEmpty,
    #[error("invalid sparse vector: {0}")]
    InvalidVector(String),
    #[error("svmlight line {line}: {reason}")]
    SvmlightSyntax { line: usize, reason: String },
    #[error("model file: {0}")]
    ModelFormat(String),
    #[error("training assembly needs at least two distinct topics, got {0}")]
    SingleTopic(usize),
}

/// Immutable sparse feature vector: strictly increasing indices, non-zero
/// finite weights.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SparseVector {
    entries: Vec<(u32, f64)>,
}

impl SparseVector {
    pub fn new(entries: Vec<(u32, f64)>) -> Result<Self, FeatureError> {
        for (i, &(index, weight)) in entries.iter().enumerate() {
            if weight == 0.0 || !weight.is_finite() {
                return Err(FeatureError::InvalidVector(format!(
                    "weight {weight} at feature {index}"
                )));
            }
            if i > 0 && entries[i - 1].0 >= index {
                return Err(FeatureError::InvalidVector(format!(
                    "indices not strictly increasing at feature {index}"
                )));
            }
        }
        Ok(SparseVector { entries })
    }

    /// The zero vector (empty pair list).
    pub fn zero() -> Self {
        SparseVector::default()
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn l2_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|&(_, w)| w * w)
            .sum::<f64>()
            .sqrt()
    }

    /// Dot product with a dense weight vector.
    pub fn dot(&self, dense: &[f64]) -> f64 {
        self.entries
            .iter()
            .map(|&(i, w)| w * dense[i as usize])
            .sum()
    }

    pub fn cosine(&self, other: &SparseVector) -> f64 {
        let (na, nb) = (self.l2_norm(), other.l2_norm());
        if na == 0.0 || nb == 0.0 {
            return 0.0;
        }
        let mut dot = 0.0;
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            match self.entries[i].0.cmp(&other.entries[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    dot += self.entries[i].1 * other.entries[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        dot / (na * nb)
    }

    pub fn max_index(&self) -> Option<u32> {
        self.entries.last().map(|&(i, _)| i)
    }
}

/// Fitted tf-idf term-document model.
#[derive(Debug, Clone, PartialEq)]
pub struct TermDocModel {
    terms: Vec<String>,
    vocabulary: HashMap<String, u32>,
    doc_freq: Vec<u32>,
    n_docs: usize,
    idf: Vec<f64>,
}

fn smoothed_idf(n_docs: usize, df: u32) -> f64 {
    ((1.0 + n_docs as f64) / (1.0 + df as f64)).ln() + 1.0
}

/// Fits vocabulary and idf over the given term sequences. Terms are indexed
/// in first-occurrence order; document frequency counts the sequences that
/// contain a term at least once. Empty sequences still count toward the
/// total document number.
pub fn fit(sequences: &[TermSequence]) -> Result<TermDocModel, FeatureError> {
    if sequences.iter().all(|s| s.is_empty()) {
        return Err(FeatureError::AllSequencesEmpty);
    }
    let mut terms: Vec<String> = Vec::new();
    let mut vocabulary: HashMap<String, u32> = HashMap::new();
    let mut doc_freq: Vec<u32> = Vec::new();
    let mut seen_in_doc: Vec<usize> = Vec::new(); // last doc that bumped each term

    for (doc_no, sequence) in sequences.iter().enumerate() {
        for term in sequence {
            let index = *vocabulary.entry(term.clone()).or_insert_with(|| {
                terms.push(term.clone());
                doc_freq.push(0);
                seen_in_doc.push(usize::MAX);
                (terms.len() - 1) as u32
            }) as usize;
            if seen_in_doc[index] != doc_no {
                seen_in_doc[index] = doc_no;
                doc_freq[index] += 1;
            }
        }
    }

    let n_docs = sequences.len();
    let idf = doc_freq.iter().map(|&df| smoothed_idf(n_docs, df)).collect();
    Ok(TermDocModel {
        terms,
        vocabulary,
        doc_freq,
        n_docs,
        idf,
    })
}

impl TermDocModel {
    pub fn vocab_size(&self) -> usize {
        self.terms.len()
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn index_of(&self, term: &str) -> Option<u32> {
        self.vocabulary.get(term).copied()
    }

    pub fn term(&self, index: u32) -> &str {
        &self.terms[index as usize]
    }

    pub fn doc_freq_of(&self, term: &str) -> Option<u32> {
        self.index_of(term).map(|i| self.doc_freq[i as usize])
    }

    pub fn idf_of(&self, term: &str) -> Option<f64> {
        self.index_of(term).map(|i| self.idf[i as usize])
    }

    /// Serializes the model: a JSON header line with `n_docs`, then one
    /// `{"term", "index", "df"}` line per vocabulary entry in index order.
    pub fn write<W: Write>(&self, mut sink: W) -> Result<(), FeatureError> {
        #[derive(Serialize)]
        struct Header {
            n_docs: usize,
            vocab_size: usize,
        }
        writeln!(
            sink,
            "{}",
            serde_json::to_string(&Header {
                n_docs: self.n_docs,
                vocab_size: self.terms.len()
            })
            .expect("header serializes")
        )?;
        #[derive(Serialize)]
        struct Row<'a> {
            term: &'a str,
            index: u32,
            df: u32,
        }
        for (i, term) in self.terms.iter().enumerate() {
            let row = Row {
                term,
                index: i as u32,
                df: self.doc_freq[i],
            };
            writeln!(sink, "{}", serde_json::to_string(&row).expect("row serializes"))?;
        }
        Ok(())
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self, FeatureError> {
        #[derive(Deserialize)]
        struct Header {
            n_docs: usize,
            vocab_size: usize,
        }
        #[derive(Deserialize)]
        struct Row {
            term: String,
            index: u32,
            df: u32,
        }
        let mut lines = reader.lines();
        let header: Header = match lines.next() {
            Some(line) => serde_json::from_str(&line?)
                .map_err(|e| FeatureError::ModelFormat(format!("header: {e}")))?,
            None => return Err(FeatureError::ModelFormat("empty model file".to_string())),
        };
        let mut terms = Vec::with_capacity(header.vocab_size);
        let mut vocabulary = HashMap::with_capacity(header.vocab_size);
        let mut doc_freq = Vec::with_capacity(header.vocab_size);
        for (i, line) in lines.enumerate() {
            let row: Row = serde_json::from_str(&line?)
                .map_err(|e| FeatureError::ModelFormat(format!("row {}: {e}", i + 1)))?;
            if row.index as usize != i {
                return Err(FeatureError::ModelFormat(format!(
                    "row {} has index {}, expected contiguous order",
                    i + 1,
                    row.index
                )));
            }
            if row.df == 0 || row.df as usize > header.n_docs {
                return Err(FeatureError::ModelFormat(format!(
                    "df {} for {:?} outside 1..={}",
                    row.df, row.term, header.n_docs
                )));
            }
            vocabulary.insert(row.term.clone(), row.index);
            terms.push(row.term);
            doc_freq.push(row.df);
        }
        if terms.len() != header.vocab_size {
            return Err(FeatureError::ModelFormat(format!(
                "expected {} vocabulary rows, found {}",
                header.vocab_size,
                terms.len()
            )));
        }
        let idf = doc_freq
            .iter()
            .map(|&df| smoothed_idf(header.n_docs, df))
            .collect();
        Ok(TermDocModel {
            terms,
            vocabulary,
            doc_freq,
            n_docs: header.n_docs,
            idf,
        })
    }
}

/// Transforms a term sequence into an L2-normalized tf-idf vector. Terms
/// outside the fitted vocabulary are ignored; a sequence with no vocabulary
/// overlap yields the zero vector.
pub fn transform(model: &TermDocModel, terms: &[String]) -> SparseVector {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for term in terms {
        if let Some(index) = model.index_of(term) {
            *counts.entry(index).or_insert(0) += 1;
        }
    }
    if counts.is_empty() {
        return SparseVector::zero();
    }
    let mut entries: Vec<(u32, f64)> = counts
        .into_iter()
        .map(|(index, count)| {
            let tf = 1.0 + (count as f64).ln();
            (index, tf * model.idf[index as usize])
        })
        .collect();
    entries.sort_unstable_by_key(|&(i, _)| i);
    let norm = entries.iter().map(|&(_, w)| w * w).sum::<f64>().sqrt();
    for entry in &mut entries {
        entry.1 /= norm;
    }
    SparseVector { entries }
}
