//! JSON and DOT encodings of DFAs, and the CSV table of tableau counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use stx_core::tableaux::{count_rtf, count_rtf_pinned, predicted_complexity};
use stx_core::Dfa;

use crate::error::Result;

/// On-disk shape of a DFA. `delta[q][a]` is the successor of `q` on `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaJson {
    pub letter_count: usize,
    pub state_count: usize,
    pub initial: usize,
    pub finals: Vec<usize>,
    pub delta: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub letter_labels: Option<Vec<String>>,
}

impl From<&Dfa> for DfaJson {
    fn from(d: &Dfa) -> Self {
        DfaJson {
            letter_count: d.letter_count(),
            state_count: d.state_count(),
            initial: d.initial(),
            finals: d.finals().collect(),
            delta: (0..d.state_count()).map(|q| d.row(q).to_vec()).collect(),
            letter_labels: d.letter_labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<DfaJson> for Dfa {
    type Error = crate::error::CliError;

    fn try_from(j: DfaJson) -> Result<Dfa> {
        if j.delta.len() != j.state_count {
            return Err(stx_core::Error::InvalidDfa(format!(
                "delta has {} rows for {} states",
                j.delta.len(),
                j.state_count
            ))
            .into());
        }
        if let Some((q, row)) = j
            .delta
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != j.letter_count)
        {
            return Err(stx_core::Error::InvalidDfa(format!(
                "row {q} has {} entries for {} letters",
                row.len(),
                j.letter_count
            ))
            .into());
        }
        let delta = j.delta.into_iter().flatten().collect();
        let dfa = Dfa::new(j.letter_count, j.state_count, j.initial, j.finals, delta)?;
        Ok(match j.letter_labels {
            Some(labels) => dfa.with_labels(labels)?,
            None => dfa,
        })
    }
}

pub fn export_json(d: &Dfa) -> Result<String> {
    Ok(serde_json::to_string_pretty(&DfaJson::from(d))?)
}

/// Parses a DFA; syntax errors carry line and column.
pub fn import_json(text: &str) -> Result<Dfa> {
    let j: DfaJson = serde_json::from_str(text)?;
    Dfa::try_from(j)
}

/// Graphviz rendering with states named `0, 1, …`.
pub fn export_dot(d: &Dfa) -> String {
    let names: Vec<String> = (0..d.state_count()).map(|q| q.to_string()).collect();
    export_dot_named(d, "dfa", &names)
}

/// Graphviz rendering with caller-supplied state names. Parallel edges are
/// merged into one edge listing all of their letters.
pub fn export_dot_named(d: &Dfa, graph: &str, names: &[String]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(graph));
    out.push_str("  rankdir=LR;\n  start [shape=point];\n");
    for q in 0..d.state_count() {
        let shape = if d.is_final(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let name = names.get(q).map_or_else(|| q.to_string(), Clone::clone);
        let _ = writeln!(out, "  q{q} [shape={shape}, label=\"{}\"];", escape(&name));
    }
    let _ = writeln!(out, "  start -> q{};", d.initial());
    for q in 0..d.state_count() {
        let mut edges: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (a, &r) in d.row(q).iter().enumerate() {
            edges.entry(r as usize).or_default().push(d.letter_label(a));
        }
        for (r, letters) in edges {
            let _ = writeln!(
                out,
                "  q{q} -> q{r} [label=\"{}\"];",
                escape(&letters.join(","))
            );
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One line of the count table. `predicted` is empty when either size is 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaRow {
    pub n1: usize,
    pub n2: usize,
    pub alpha: u128,
    pub alpha_pinned: u128,
    pub predicted: Option<u128>,
}

pub fn alpha_rows(max: usize) -> Result<Vec<AlphaRow>> {
    let mut rows = Vec::with_capacity((max + 1) * (max + 1));
    for n1 in 0..=max {
        for n2 in 0..=max {
            let predicted = if n1 > 0 && n2 > 0 {
                Some(predicted_complexity(n1, n2)?)
            } else {
                None
            };
            rows.push(AlphaRow {
                n1,
                n2,
                alpha: count_rtf(n1, n2)?,
                alpha_pinned: count_rtf_pinned(n1, n2)?,
                predicted,
            });
        }
    }
    Ok(rows)
}

pub fn write_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
