//! The line-oriented poset format and its JSON mirror.
//!
//! ```text
//! # name: ex-easy
//! # any other comment
//! elements 0 1 2 3 4
//! 0 < 2
//! 1 < 3
//! ```
//!
//! Comment lines of the form `# key: value` are kept as metadata, with
//! `name` stored separately. Other comments are ignored.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use fintop::FinitePoset;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    #[serde(default)]
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

fn is_label(token: &str) -> bool {
    !token.is_empty() && !token.contains('<') && !token.contains(char::is_whitespace)
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn metadata_entry(comment: &str) -> Option<(&str, &str)> {
    let (key, value) = comment.split_once(':')?;
    let key = key.trim();
    (!key.is_empty() && !key.contains(char::is_whitespace)).then(|| (key, value.trim()))
}

pub fn parse_poset(text: &str) -> Result<PosetDocument> {
    let mut doc = PosetDocument::default();
    let mut declared: Option<HashSet<String>> = None;
    let mut seen_covers = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((key, value)) = metadata_entry(comment) {
                if key == "name" {
                    doc.name = value.to_string();
                } else {
                    doc.metadata.insert(key.to_string(), value.to_string());
                }
            }
            continue;
        }
        let Some(labels) = &declared else {
            let mut tokens = line.split_whitespace();
            if tokens.next() != Some("elements") {
                return Err(syntax(line_no, "expected `elements <label>...`"));
            }
            let mut set = HashSet::new();
            for token in tokens {
                if !is_label(token) {
                    return Err(syntax(line_no, format!("invalid label `{token}`")));
                }
                if !set.insert(token.to_string()) {
                    return Err(syntax(line_no, format!("duplicate label `{token}`")));
                }
                doc.elements.push(token.to_string());
            }
            declared = Some(set);
            continue;
        };
        let (lower, upper) = line
            .split_once('<')
            .ok_or_else(|| syntax(line_no, "expected `<label> < <label>`"))?;
        let (lower, upper) = (lower.trim(), upper.trim());
        if !is_label(lower) || !is_label(upper) {
            return Err(syntax(line_no, "expected `<label> < <label>`"));
        }
        for label in [lower, upper] {
            if !labels.contains(label) {
                return Err(Error::UnknownLabel { line: line_no, label: label.to_string() });
            }
        }
        let pair = (lower.to_string(), upper.to_string());
        if seen_covers.insert(pair.clone()) {
            doc.covers.push(pair);
        }
    }
    if declared.is_none() {
        return Err(syntax(text.lines().count().max(1), "missing `elements` line"));
    }
    Ok(doc)
}

pub fn serialize_poset(doc: &PosetDocument) -> String {
    let mut out = String::new();
    if !doc.name.is_empty() {
        out.push_str(&format!("# name: {}\n", doc.name));
    }
    for (key, value) in &doc.metadata {
        out.push_str(&format!("# {key}: {value}\n"));
    }
    out.push_str("elements");
    for label in &doc.elements {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for (a, b) in &doc.covers {
        out.push_str(&format!("{a} < {b}\n"));
    }
    out
}

pub fn parse_json(text: &str) -> Result<PosetDocument> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_json(doc: &PosetDocument) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}

impl PosetDocument {
    pub fn from_poset(name: &str, p: &FinitePoset) -> Self {
        PosetDocument {
            name: name.to_string(),
            elements: p.labels().to_vec(),
            covers: p
                .covers()
                .iter()
                .map(|&(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
                .collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn to_poset(&self) -> Result<FinitePoset> {
        Ok(FinitePoset::new(&self.elements, &self.covers)?)
    }
}

/// A catalog space as a document; `params` as for [`fintop::catalog::by_name`].
pub fn generate(name: &str, params: &[usize]) -> Result<PosetDocument> {
    let p = fintop::catalog::by_name(name, params)?;
    let mut full = name.to_string();
    for v in params {
        full.push_str(&format!(" {v}"));
    }
    Ok(PosetDocument::from_poset(&full, &p))
}

/// Reads either format; JSON is recognised by a leading `{`.
pub fn load(path: &Path) -> Result<PosetDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    if text.trim_start().starts_with('{') {
        parse_json(&text)
    } else {
        parse_poset(&text)
    }
}
