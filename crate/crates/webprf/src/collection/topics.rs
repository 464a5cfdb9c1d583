//! Topic parsing: TREC SGML `<top>` blocks and JSON lines.

use std::collections::HashSet;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use super::CollectionError;

/// A search topic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Topic {
    pub id: String,
    pub title: String,
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub narrative: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopicFormat {
    TrecSgml,
    JsonLines,
}

/// Parses a topic file in the declared format. Topics come back in input
/// order with whitespace-trimmed fields; duplicate ids are an error.
pub fn parse_topics<R: BufRead>(
    mut reader: R,
    format: TopicFormat,
) -> Result<Vec<Topic>, CollectionError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    let topics = match format {
        TopicFormat::TrecSgml => parse_sgml(&text)?,
        TopicFormat::JsonLines => parse_jsonl(&text)?,
    };
    let mut seen = HashSet::new();
    for topic in &topics {
        if !seen.insert(topic.id.clone()) {
            return Err(CollectionError::DuplicateTopic(topic.id.clone()));
        }
    }
    Ok(topics)
}

fn parse_jsonl(text: &str) -> Result<Vec<Topic>, CollectionError> {
    let mut topics = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut topic: Topic =
            serde_json::from_str(line).map_err(|e| CollectionError::TopicSyntax {
                offset: 0,
                parsed: topics.len(),
                reason: format!("line {}: {e}", i + 1),
            })?;
        topic.id = topic.id.trim().to_string();
        topic.title = topic.title.trim().to_string();
        topic.description = topic.description.trim().to_string();
        topic.narrative = topic.narrative.map(|n| n.trim().to_string());
        validate(&topic, 0, topics.len())?;
        topics.push(topic);
    }
    Ok(topics)
}

/// Tags recognized inside a `<top>` block. Field content runs until the next
/// recognized tag (closing tags are optional in the classic files).
const FIELD_TAGS: &[&str] = &["<num>", "<title>", "<desc>", "<narr>", "<smry>"];

fn parse_sgml(text: &str) -> Result<Vec<Topic>, CollectionError> {
    let mut topics = Vec::new();
    let mut pos = 0;
    while let Some(rel) = text[pos..].find("<top>") {
        let block_start = pos + rel;
        let body_start = block_start + "<top>".len();
        let body_end = text[body_start..].find("</top>").map(|i| body_start + i).ok_or(
            CollectionError::TopicSyntax {
                offset: block_start,
                parsed: topics.len(),
                reason: "unterminated <top> block".to_string(),
            },
        )?;
        let block = &text[body_start..body_end];
        let topic = parse_block(block, block_start, topics.len())?;
        validate(&topic, block_start, topics.len())?;
        topics.push(topic);
        pos = body_end + "</top>".len();
    }
    Ok(topics)
}

fn parse_block(block: &str, offset: usize, parsed: usize) -> Result<Topic, CollectionError> {
    let field = |tag: &str| -> Option<String> {
        let start = block.find(tag)? + tag.len();
        // content ends at the next recognized tag, opening or closing
        let mut end = block.len();
        for t in FIELD_TAGS {
            for probe in [t.to_string(), format!("</{}", &t[1..])] {
                if let Some(i) = block[start..].find(&probe) {
                    end = end.min(start + i);
                }
            }
        }
        Some(block[start..end].trim().to_string())
    };

    let num = field("<num>").ok_or_else(|| CollectionError::TopicSyntax {
        offset,
        parsed,
        reason: "missing <num>".to_string(),
    })?;
    let title = field("<title>").ok_or_else(|| CollectionError::TopicSyntax {
        offset,
        parsed,
        reason: "missing <title>".to_string(),
    })?;
    let desc = field("<desc>").unwrap_or_default();
    let narr = field("<narr>");

    Ok(Topic {
        id: strip_label(&num, &["Number:"]),
        title: strip_label(&title, &["Topic:"]),
        description: strip_label(&desc, &["Description:"]),
        narrative: narr.map(|n| strip_label(&n, &["Narrative:"])),
    })
}

fn strip_label(value: &str, labels: &[&str]) -> String {
    let mut v = value.trim();
    for label in labels {
        if let Some(rest) = v.strip_prefix(label) {
            v = rest.trim_start();
        }
    }
    v.to_string()
}

fn validate(topic: &Topic, offset: usize, parsed: usize) -> Result<(), CollectionError> {
    if topic.id.is_empty() {
        return Err(CollectionError::TopicSyntax {
            offset,
            parsed,
            reason: "empty topic id".to_string(),
        });
    }
    if topic.title.is_empty() {
        return Err(CollectionError::TopicSyntax {
            offset,
            parsed,
            reason: format!("topic {:?} has an empty title", topic.id),
        });
    }
    Ok(())
}
