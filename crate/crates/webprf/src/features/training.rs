//! One-vs-rest training sets: a topic's own texts are its positives, every
//! other topic's texts are its negatives.

use crate::textprep::TermSequence;

use super::{transform, FeatureError, SparseVector, TermDocModel};

/// Per-topic labeled training set in the shared feature space.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSet {
    pub topic_id: String,
    /// Feature-space dimensionality (the fitted vocabulary size).
    pub dim: usize,
    pub positives: Vec<SparseVector>,
    pub negatives: Vec<SparseVector>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssembledTraining {
    /// One set per topic, in ascending topic-id order.
    pub sets: Vec<LabeledSet>,
    /// Texts whose transform produced the zero vector and were dropped.
    pub dropped_zero_texts: usize,
}

/// Builds one labeled set per topic from `(topic_id, terms)` items. Items
/// transforming to the zero vector are dropped (and counted); at least two
/// distinct topic ids are required, otherwise no negatives exist.
pub fn assemble_training(
    items: &[(String, TermSequence)],
    model: &TermDocModel,
) -> Result<AssembledTraining, FeatureError> {
    let mut topic_ids: Vec<&str> = items.iter().map(|(t, _)| t.as_str()).collect();
    topic_ids.sort_by(|a, b| crate::collection::topic_id_order(a, b));
    topic_ids.dedup();
    if topic_ids.len() < 2 {
        return Err(FeatureError::SingleTopic(topic_ids.len()));
    }

    let mut dropped = 0usize;
    let mut usable: Vec<(&str, SparseVector)> = Vec::with_capacity(items.len());
    for (topic_id, terms) in items {
        let vector = transform(model, terms);
        if vector.is_zero() {
            dropped += 1;
        } else {
            usable.push((topic_id.as_str(), vector));
        }
    }

    let sets = topic_ids
        .iter()
        .map(|&topic_id| {
            let (positives, negatives) = usable
                .iter()
                .partition::<Vec<_>, _>(|(owner, _)| *owner == topic_id);
            LabeledSet {
                topic_id: topic_id.to_string(),
                dim: model.vocab_size(),
                positives: positives.into_iter().map(|(_, v)| v.clone()).collect(),
                negatives: negatives.into_iter().map(|(_, v)| v.clone()).collect(),
            }
        })
        .collect();

    Ok(AssembledTraining {
        sets,
        dropped_zero_texts: dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::fit;

    fn item(topic: &str, words: &[&str]) -> (String, TermSequence) {
        (topic.to_string(), words.iter().map(|w| w.to_string()).collect())
    }

    fn fixture() -> Vec<(String, TermSequence)> {
        vec![
            item("1", &["alpha", "beta"]),
            item("1", &["alpha"]),
            item("2", &["gamma", "delta"]),
            item("2", &["gamma"]),
            item("3", &["epsilon", "zeta"]),
            item("3", &["zeta"]),
        ]
    }

    #[test]
    fn one_vs_rest_counts() {
        let items = fixture();
        let model = fit(&items.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>()).unwrap();
        let assembled = assemble_training(&items, &model).unwrap();
        assert_eq!(assembled.sets.len(), 3);
        for set in &assembled.sets {
            assert_eq!(set.positives.len(), 2, "topic {}", set.topic_id);
            assert_eq!(set.negatives.len(), 4, "topic {}", set.topic_id);
            assert_eq!(set.dim, model.vocab_size());
        }
        assert_eq!(assembled.dropped_zero_texts, 0);
    }

    #[test]
    fn counting_identity_over_usable_texts() {
        let items = fixture();
        let model = fit(&items.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>()).unwrap();
        let assembled = assemble_training(&items, &model).unwrap();
        let usable = items.len() - assembled.dropped_zero_texts;
        let total: usize = assembled
            .sets
            .iter()
            .map(|s| s.positives.len() + s.negatives.len())
            .sum();
        assert_eq!(total, assembled.sets.len() * usable);
    }

    #[test]
    fn zero_vector_texts_dropped_with_count() {
        let mut items = fixture();
        items.push(item("1", &["out", "of", "vocabulary"]));
        // fit on the original six only, so the added text is all-OOV
        let model = fit(&fixture().iter().map(|(_, s)| s.clone()).collect::<Vec<_>>()).unwrap();
        let assembled = assemble_training(&items, &model).unwrap();
        assert_eq!(assembled.dropped_zero_texts, 1);
        let set1 = assembled.sets.iter().find(|s| s.topic_id == "1").unwrap();
        assert_eq!(set1.positives.len(), 2);
    }

    #[test]
    fn positives_only_from_own_topic() {
        let items = fixture();
        let model = fit(&items.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>()).unwrap();
        let assembled = assemble_training(&items, &model).unwrap();
        let set2 = assembled.sets.iter().find(|s| s.topic_id == "2").unwrap();
        let gamma = model.index_of("gamma").unwrap();
        for positive in &set2.positives {
            assert!(positive.entries().iter().any(|&(i, _)| i == gamma));
        }
    }

    #[test]
    fn single_topic_is_an_error() {
        let items = vec![item("1", &["alpha"]), item("1", &["beta"])];
        let model = fit(&items.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>()).unwrap();
        assert!(matches!(
            assemble_training(&items, &model),
            Err(FeatureError::SingleTopic(1))
        ));
    }
}
