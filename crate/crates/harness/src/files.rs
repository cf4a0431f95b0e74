//! JSON formats for R-trees and finite automata.
//!
//! ```json
//! {"states": ["L", "D"], "initial": "L", "live": ["L"],
//!  "delta": {"L": {"00": "L", "01": "D", "10": "D", "11": "L"},
//!            "D": {"00": "D", "01": "D", "10": "D", "11": "D"}}}
//! ```
//!
//! Automata use the same layout with `"alphabet": k`, `"accepting"` instead of
//! `"live"`, and lists of successor names keyed by letter digits.

use std::collections::BTreeMap;
use std::path::Path;

use omega_core::regular::FiniteAutomaton;
use omega_core::rtree::{RTreePresentation, PAIR_LETTERS};
use omega_core::word::Alphabet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown state name {0:?}")]
    UnknownState(String),
    #[error("state {state:?} lacks a transition on {letter:?}")]
    MissingTransition { state: String, letter: String },
    #[error("state {state:?} has a transition on unknown letter {letter:?}")]
    UnknownLetter { state: String, letter: String },
    #[error(transparent)]
    Invalid(#[from] omega_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RTreeFile {
    pub states: Vec<String>,
    pub initial: String,
    pub live: Vec<String>,
    pub delta: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonFile {
    pub alphabet: u8,
    pub states: Vec<String>,
    pub initial: String,
    pub accepting: Vec<String>,
    pub delta: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

fn lookup(states: &[String], name: &str) -> Result<usize, FileError> {
    states
        .iter()
        .position(|s| s == name)
        .ok_or_else(|| FileError::UnknownState(name.to_owned()))
}

/// Resolves each letter of `row` against `letters`, rejecting extras.
fn row_entries<'a, T>(
    state: &str,
    row: Option<&'a BTreeMap<String, T>>,
    letters: &[String],
) -> Result<Vec<Option<&'a T>>, FileError> {
    if let Some(row) = row {
        if let Some(bad) = row.keys().find(|k| !letters.contains(k)) {
            return Err(FileError::UnknownLetter {
                state: state.to_owned(),
                letter: bad.clone(),
            });
        }
    }
    Ok(letters.iter().map(|l| row.and_then(|r| r.get(l))).collect())
}

impl RTreeFile {
    pub fn build(&self) -> Result<RTreePresentation, FileError> {
        if let Some(k) = self.delta.keys().find(|k| !self.states.contains(k)) {
            return Err(FileError::UnknownState(k.clone()));
        }
        let letters: Vec<String> = PAIR_LETTERS.iter().map(|s| s.to_string()).collect();
        let mut delta = Vec::with_capacity(self.states.len());
        for q in &self.states {
            let entries = row_entries(q, self.delta.get(q), &letters)?;
            let mut row = [0; 4];
            for (k, e) in entries.into_iter().enumerate() {
                let target = e.ok_or_else(|| FileError::MissingTransition {
                    state: q.clone(),
                    letter: letters[k].clone(),
                })?;
                row[k] = lookup(&self.states, target)?;
            }
            delta.push(row);
        }
        let live = self
            .live
            .iter()
            .map(|s| lookup(&self.states, s))
            .collect::<Result<_, _>>()?;
        Ok(RTreePresentation::new(
            self.states.clone(),
            lookup(&self.states, &self.initial)?,
            live,
            delta,
        )?)
    }

    pub fn from_tree(r: &RTreePresentation) -> Self {
        let names = r.names().to_vec();
        let delta = (0..r.state_count())
            .map(|q| {
                let row = r
                    .transitions(q)
                    .iter()
                    .zip(PAIR_LETTERS)
                    .map(|(&p, l)| (l.to_owned(), names[p].clone()))
                    .collect();
                (names[q].clone(), row)
            })
            .collect();
        RTreeFile {
            live: (0..r.state_count())
                .filter(|&q| r.is_live(q))
                .map(|q| names[q].clone())
                .collect(),
            initial: names[r.initial()].clone(),
            states: names,
            delta,
        }
    }
}

impl AutomatonFile {
    pub fn build(&self) -> Result<FiniteAutomaton, FileError> {
        if let Some(k) = self.delta.keys().find(|k| !self.states.contains(k)) {
            return Err(FileError::UnknownState(k.clone()));
        }
        let alphabet = Alphabet::new(self.alphabet)?;
        let letters: Vec<String> = (0..self.alphabet).map(|a| a.to_string()).collect();
        let mut delta = Vec::with_capacity(self.states.len());
        for q in &self.states {
            let entries = row_entries(q, self.delta.get(q), &letters)?;
            let row = entries
                .into_iter()
                .map(|e| {
                    e.map_or(Ok(Vec::new()), |names| {
                        names.iter().map(|s| lookup(&self.states, s)).collect()
                    })
                })
                .collect::<Result<_, _>>()?;
            delta.push(row);
        }
        let accepting = self
            .accepting
            .iter()
            .map(|s| lookup(&self.states, s))
            .collect::<Result<_, _>>()?;
        Ok(FiniteAutomaton::new(
            alphabet,
            lookup(&self.states, &self.initial)?,
            accepting,
            delta,
        )?)
    }
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// `full`, `diag`, or a path to an R-tree file.
pub fn load_rtree(spec: &str) -> Result<RTreePresentation, FileError> {
    if let Some(r) = RTreePresentation::builtin(spec) {
        return Ok(r);
    }
    serde_json::from_str::<RTreeFile>(&read(Path::new(spec))?)?.build()
}

pub fn load_automaton(path: &Path) -> Result<FiniteAutomaton, FileError> {
    serde_json::from_str::<AutomatonFile>(&read(path)?)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_trees_round_trip() {
        for r in [RTreePresentation::full(), RTreePresentation::diag()] {
            let file = RTreeFile::from_tree(&r);
            let text = serde_json::to_string(&file).unwrap();
            let back: RTreeFile = serde_json::from_str(&text).unwrap();
            assert_eq!(back.build().unwrap(), r);
        }
    }

    #[test]
    fn rejects_non_prefix_closed() {
        let text = r#"{"states":["L","D"],"initial":"L","live":["L"],
            "delta":{"L":{"00":"L","01":"D","10":"D","11":"L"},
                     "D":{"00":"L","01":"D","10":"D","11":"D"}}}"#;
        let file: RTreeFile = serde_json::from_str(text).unwrap();
        assert!(matches!(file.build(), Err(FileError::Invalid(_))));
    }

    #[test]
    fn rejects_incomplete_rows() {
        let text = r#"{"states":["L"],"initial":"L","live":["L"],"delta":{"L":{"00":"L"}}}"#;
        let file: RTreeFile = serde_json::from_str(text).unwrap();
        assert!(matches!(file.build(), Err(FileError::MissingTransition { .. })));
        let text = r#"{"states":["L"],"initial":"X","live":["L"],"delta":{}}"#;
        let file: RTreeFile = serde_json::from_str(text).unwrap();
        assert!(file.build().is_err());
    }

    #[test]
    fn automaton_file() {
        // 0*1
        let text = r#"{"alphabet":2,"states":["a","b"],"initial":"a","accepting":["b"],
            "delta":{"a":{"0":["a"],"1":["b"]}}}"#;
        let file: AutomatonFile = serde_json::from_str(text).unwrap();
        let a = file.build().unwrap();
        let w = |s| omega_core::word::FiniteWord::from_digits(Alphabet::BINARY, s).unwrap();
        assert!(a.accepts(&w("001")));
        assert!(!a.accepts(&w("0010")));
        let bad = r#"{"alphabet":2,"states":["a"],"initial":"a","accepting":[],"delta":{"a":{"2":["a"]}}}"#;
        let file: AutomatonFile = serde_json::from_str(bad).unwrap();
        assert!(matches!(file.build(), Err(FileError::UnknownLetter { .. })));
    }
}
