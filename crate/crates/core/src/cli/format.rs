//! Covering text format.
//!
//! ```text
//! # comment
//! universe: 1 2 3 4
//! 1 2 3
//! 1 2
//! 3 4
//! 4
//! ```
//!
//! Lines whose first non-blank character is `#` are comments; blank lines
//! are ignored. An optional `universe:` line, which must precede every block,
//! declares the labels in order. Every other line is one block of
//! whitespace-separated labels. Without a declaration the universe is the
//! union of the blocks, ordered by first appearance.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::covering::{Covering, Universe};
use crate::error::{Error, Result};
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct ParsedCovering {
    pub covering: Covering,
    /// Line numbers of blocks that repeat an earlier block and were dropped.
    pub duplicate_lines: Vec<usize>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_covering(text: &str) -> Result<ParsedCovering> {
    let mut declared: Option<(usize, Vec<String>)> = None;
    let mut blocks: Vec<(usize, Vec<String>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("universe:") {
            if declared.is_some() {
                return Err(parse_error(line_no, "universe declared twice"));
            }
            if !blocks.is_empty() {
                return Err(parse_error(
                    line_no,
                    "universe must be declared before any block",
                ));
            }
            let labels: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
            if labels.is_empty() {
                return Err(parse_error(
                    line_no,
                    "universe declaration lists no elements",
                ));
            }
            declared = Some((line_no, labels));
            continue;
        }
        blocks.push((
            line_no,
            line.split_whitespace().map(str::to_owned).collect(),
        ));
    }

    if blocks.is_empty() {
        return Err(parse_error(text.lines().count().max(1), "no blocks found"));
    }

    let (universe_line, labels) = match declared {
        Some((line, labels)) => (line, labels),
        None => {
            let mut seen = HashSet::new();
            let labels = blocks
                .iter()
                .flat_map(|(_, b)| b.iter())
                .filter(|l| seen.insert(l.as_str()))
                .cloned()
                .collect();
            (blocks[0].0, labels)
        }
    };
    let universe = Universe::new(labels).map_err(|e| parse_error(universe_line, e.to_string()))?;
    let n = universe.len();

    let mut sets = Vec::with_capacity(blocks.len());
    let mut first_seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut duplicate_lines = Vec::new();
    for (line_no, labels) in &blocks {
        let mut set = ElementSet::empty(n);
        for label in labels {
            let x = universe
                .index_of(label)
                .ok_or_else(|| parse_error(*line_no, format!("unknown element `{label}`")))?;
            set.insert(x);
        }
        if first_seen.insert(set.to_vec(), *line_no).is_some() {
            duplicate_lines.push(*line_no);
        }
        sets.push(set);
    }

    let covering = Covering::new(Arc::new(universe), sets).map_err(|e| match e {
        Error::NotACovering { .. } => parse_error(universe_line, e.to_string()),
        other => other,
    })?;
    Ok(ParsedCovering {
        covering,
        duplicate_lines,
    })
}

/// Canonical text: the universe line, then blocks in canonical order.
pub fn print_covering(c: &Covering) -> String {
    let mut out = String::from("universe: ");
    out.push_str(&c.universe().labels().join(" "));
    out.push('\n');
    for block in c.to_labels() {
        out.push_str(&block.join(" "));
        out.push('\n');
    }
    out
}
