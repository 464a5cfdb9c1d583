//! Web-enriched pseudo-relevance-feedback retrieval, end to end.
//!
//! The pipeline turns search-engine result pages (SERPs) into per-topic
//! routing classifiers and ranked TREC runs:
//!
//! 1. [`serp`] — acquire SERP snapshots (live or from JSONL archives) and
//!    assemble per-topic training texts from snippets or full page text.
//! 2. [`textprep`] — tokenize, drop stopwords, Porter-stem.
//! 3. [`features`] — fit a tf-idf term-document model on the web texts,
//!    vectorize texts and corpus documents, emit SVMlight training files.
//! 4. [`classifier`] — train one L2-regularized logistic-regression routing
//!    profile per topic.
//! 5. [`ranker`] — score every corpus document per topic, keep the top-k.
//! 6. [`metrics`] — effectiveness (nDCG, AP, P@k), reproducibility
//!    (KTU, RBO, RMSE, ER, DRI), significance tests, SERP drift analysis.
//!
//! [`collection`] parses and emits the surrounding test-collection artifacts
//! (topics, qrels, corpora, run files) and [`pipeline`] wires the stages into
//! one deterministic archive-to-run function.

pub mod classifier;
pub mod collection;
pub mod features;
pub mod metrics;
pub mod pipeline;
pub mod ranker;
pub mod serp;
pub mod textprep;

pub use classifier::{predict_probability, train, RoutingModel, TrainConfig};
pub use collection::{
    parse_corpus, parse_qrels, parse_run, parse_topics, write_run, Document, Qrels,
    QueryFormulation, Run, Topic, TopicFormat,
};
pub use features::{
    assemble_training, fit, transform, LabeledSet, SparseVector, TermDocModel,
};
pub use metrics::{MetricConfig, TopicScores};
pub use ranker::{rank_collection, RankerConfig};
pub use serp::{
    build_topic_texts, extract_page_text, url_intersection, Engine, SerpConfig, SerpMode,
    SerpRecord, SerpResult, TrainingText,
};
pub use textprep::{porter_stem, preprocess, tokenize, StopwordList, TermSequence};
