//! Finite sets as sorted, deduplicated element vectors.

use super::element::{parse_element, Element};
use crate::error::{CatError, Result};
use std::fmt;
use std::sync::Arc;

/// A finite set. Elements are stored in the canonical `Element` order with
/// no duplicates; the `Arc` makes clones cheap since sets are threaded
/// through every construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet {
    elems: Arc<Vec<Element>>,
}

impl FinSet {
    pub fn new(mut elems: Vec<Element>) -> Self {
        elems.sort();
        elems.dedup();
        FinSet {
            elems: Arc::new(elems),
        }
    }

    pub fn empty() -> Self {
        FinSet::new(Vec::new())
    }

    /// The one-element set containing `*`.
    pub fn singleton_unit() -> Self {
        FinSet::new(vec![Element::Unit])
    }

    /// `{a0, a1, ...}` with `n` atoms named from `prefix`.
    pub fn atoms(prefix: &str, n: usize) -> Self {
        FinSet::new((0..n).map(|i| Element::atom(format!("{prefix}{i}"))).collect())
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Self {
        FinSet::new(labels.iter().map(|l| Element::atom(l.as_ref())).collect())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elems.iter()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elems
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elems.binary_search(e).is_ok()
    }

    /// Index of `e` in the canonical order.
    pub fn index_of(&self, e: &Element) -> Result<usize> {
        self.elems
            .binary_search(e)
            .map_err(|_| CatError::structural(format!("element {e} not in carrier {self}")))
    }

    pub fn get(&self, i: usize) -> &Element {
        &self.elems[i]
    }

    pub fn is_subset_of(&self, other: &FinSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// Serializes the set in its canonical order.
    pub fn to_canonical_string(&self) -> String {
        let mut s = String::from("{");
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                s.push(';');
                s.push(' ');
            }
            s.push_str(&e.to_string());
        }
        s.push('}');
        s
    }

    /// Parses the output of [`FinSet::to_canonical_string`].
    pub fn parse(input: &str) -> Result<FinSet> {
        let inner = input
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| CatError::structural("finset text must be brace-delimited"))?;
        let mut elems = Vec::new();
        let trimmed = inner.trim();
        if !trimmed.is_empty() {
            for part in split_top_level(trimmed, ';') {
                elems.push(parse_element(part.trim())?);
            }
        }
        Ok(FinSet::new(elems))
    }
}

/// Splits on `sep` at bracket depth zero.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}
