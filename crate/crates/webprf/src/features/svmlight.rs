//! SVMlight text format: `label index:value ...` with 1-based ascending
//! feature indices. Weights are written in their shortest exact decimal
//! form, so files round-trip without loss.

use std::io::{BufRead, Write};

use super::{FeatureError, LabeledSet, SparseVector};

/// Writes a labeled set, positives (`+1`) first, then negatives (`-1`),
/// each in their stored order.
pub fn write_svmlight<W: Write>(set: &LabeledSet, mut sink: W) -> Result<(), FeatureError> {
    let mut write = |label: &str, vector: &SparseVector| -> Result<(), FeatureError> {
        let mut line = String::from(label);
        for &(index, weight) in vector.entries() {
            line.push_str(&format!(" {}:{}", index + 1, weight));
        }
        writeln!(sink, "{line}")?;
        Ok(())
    };
    for vector in &set.positives {
        write("+1", vector)?;
    }
    for vector in &set.negatives {
        write("-1", vector)?;
    }
    Ok(())
}

/// Reads labeled vectors; the boolean is `true` for positives. Trailing
/// `#` comments are ignored.
pub fn read_svmlight<R: BufRead>(reader: R) -> Result<Vec<(bool, SparseVector)>, FeatureError> {
    let mut samples = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let data = line.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let syntax = |reason: String| FeatureError::SvmlightSyntax {
            line: i + 1,
            reason,
        };
        let mut fields = data.split_whitespace();
        let label = match fields.next() {
            Some("+1") | Some("1") => true,
            Some("-1") => false,
            Some(other) => return Err(syntax(format!("unsupported label {other:?}"))),
            None => unreachable!("non-empty line has a first field"),
        };
        let mut entries = Vec::new();
        for field in fields {
            let (index, value) = field
                .split_once(':')
                .ok_or_else(|| syntax(format!("feature {field:?} is not index:value")))?;
            let index: u32 = index
                .parse()
                .map_err(|_| syntax(format!("index {index:?} is not an integer")))?;
            if index == 0 {
                return Err(syntax("feature indices are 1-based".to_string()));
            }
            let value: f64 = value
                .parse()
                .map_err(|_| syntax(format!("value {value:?} is not a number")))?;
            entries.push((index - 1, value));
        }
        let vector = SparseVector::new(entries).map_err(|e| syntax(e.to_string()))?;
        samples.push((label, vector));
    }
    Ok(samples)
}
