//! Reconstructions of the worked example and the three small drawings, with
//! every drawn transition written out so they can be checked mechanically.

use stx_core::modifiers::{star_modifier, Materialize};
use stx_core::monsters::monster1;
use stx_core::{Dfa, Limits};

use crate::error::Result;

/// `from --letters--> to`, all names as they appear in the drawing.
#[derive(Debug, Clone, Copy)]
pub struct Edge {
    pub from: &'static str,
    pub letters: &'static [&'static str],
    pub to: &'static str,
}

const fn e(from: &'static str, letters: &'static [&'static str], to: &'static str) -> Edge {
    Edge { from, letters, to }
}

/// A built automaton next to what the drawing shows.
#[derive(Debug, Clone)]
pub struct Figure {
    pub name: &'static str,
    pub dfa: Dfa,
    pub state_names: Vec<String>,
    pub initial: &'static str,
    pub finals: &'static [&'static str],
    pub edges: &'static [Edge],
}

const EXAMPLE1_EDGES: &[Edge] = &[
    e("0", &["[0 1]", "[0 0]"], "0"),
    e("0", &["[1 1]", "[1 0]"], "1"),
    e("1", &["[0 1]", "[1 1]"], "1"),
    e("1", &["[0 0]", "[1 0]"], "0"),
];

const FIGURE1_EDGES: &[Edge] = &[
    e("∅", &["[0 1]", "[0 0]"], "{0}"),
    e("∅", &["[1 1]", "[1 0]"], "{0,1}"),
    e("{0}", &["[0 1]", "[0 0]"], "{0}"),
    e("{0}", &["[1 1]", "[1 0]"], "{0,1}"),
    e("{1}", &["[1 0]", "[0 0]"], "{0}"),
    e("{1}", &["[1 1]", "[0 1]"], "{0,1}"),
    e("{0,1}", &["[1 0]", "[0 1]", "[1 1]"], "{0,1}"),
    e("{0,1}", &["[0 0]"], "{0}"),
];

const FIGURE2_EDGES: &[Edge] = &[
    e("0", &["a"], "0"),
    e("0", &["b"], "1"),
    e("1", &["a", "b"], "1"),
];

const FIGURE3_EDGES: &[Edge] = &[
    e("∅", &["a"], "{0}"),
    e("∅", &["b"], "{0,1}"),
    e("{0}", &["a"], "{0}"),
    e("{0}", &["b"], "{0,1}"),
    e("{1}", &["a", "b"], "{0,1}"),
    e("{0,1}", &["a", "b"], "{0,1}"),
];

const STAR_FINALS: &[&str] = &["∅", "{1}", "{0,1}"];

/// `∅`, `{0}`, `{0,1}`, … for a subset bitmask.
pub fn subset_name(mask: u64) -> String {
    if mask == 0 {
        return "∅".to_owned();
    }
    let members: Vec<String> = (0..64)
        .filter(|&q| mask >> q & 1 == 1)
        .map(|q: u32| q.to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

fn plain_names(d: &Dfa) -> Vec<String> {
    (0..d.state_count()).map(|q| q.to_string()).collect()
}

fn two_state_monster() -> Result<Dfa> {
    Ok(monster1(2, &[1], &Limits::default())?)
}

/// The 2-state 1-monster with final state 1.
pub fn example1() -> Result<Figure> {
    let dfa = two_state_monster()?;
    Ok(Figure {
        name: "example1",
        state_names: plain_names(&dfa),
        dfa,
        initial: "0",
        finals: &["1"],
        edges: EXAMPLE1_EDGES,
    })
}

/// Star of the 2-state monster, every subset materialized.
pub fn figure1() -> Result<Figure> {
    let star = star_modifier(&two_state_monster()?, Materialize::All, &Limits::default())?;
    Ok(Figure {
        name: "figure1",
        state_names: star.states.iter().map(|&m| subset_name(m)).collect(),
        dfa: star.dfa,
        initial: "∅",
        finals: STAR_FINALS,
        edges: FIGURE1_EDGES,
    })
}

/// The DFA `C` over `{a, b}`: the monster read through `a ↦ [0 1]`, `b ↦ [1 1]`.
pub fn c_automaton() -> Result<Dfa> {
    let mon = two_state_monster()?;
    let index = |label: &str| {
        (0..mon.letter_count())
            .find(|&a| mon.letter_label(a) == label)
            .expect("monster letter present")
    };
    let phi = [index("[0 1]"), index("[1 1]")];
    Ok(mon
        .preimage_by_renaming(&phi)?
        .with_labels(vec!["a".into(), "b".into()])?)
}

pub fn figure2() -> Result<Figure> {
    let dfa = c_automaton()?;
    Ok(Figure {
        name: "figure2",
        state_names: plain_names(&dfa),
        dfa,
        initial: "0",
        finals: &["1"],
        edges: FIGURE2_EDGES,
    })
}

/// Star of `C`, every subset materialized.
pub fn figure3() -> Result<Figure> {
    let star = star_modifier(&c_automaton()?, Materialize::All, &Limits::default())?;
    Ok(Figure {
        name: "figure3",
        state_names: star.states.iter().map(|&m| subset_name(m)).collect(),
        dfa: star.dfa,
        initial: "∅",
        finals: STAR_FINALS,
        edges: FIGURE3_EDGES,
    })
}

pub fn all_figures() -> Result<Vec<Figure>> {
    Ok(vec![example1()?, figure1()?, figure2()?, figure3()?])
}

impl Figure {
    fn state(&self, name: &str) -> Option<usize> {
        self.state_names.iter().position(|n| n == name)
    }

    fn letter(&self, label: &str) -> Option<usize> {
        (0..self.dfa.letter_count()).find(|&a| self.dfa.letter_label(a) == label)
    }

    /// Number of individual facts checked: one per drawn letter on an edge,
    /// one per state for finality, one for the initial state.
    pub fn fact_count(&self) -> usize {
        self.edges.iter().map(|e| e.letters.len()).sum::<usize>() + self.state_names.len() + 1
    }

    /// Every disagreement between the built automaton and the drawing.
    /// Also reports transitions the drawing leaves out.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        let d = &self.dfa;
        let mut covered = vec![false; d.state_count() * d.letter_count()];
        match self.state(self.initial) {
            Some(q) if q == d.initial() => {}
            _ => out.push(format!(
                "{}: initial state is not {}",
                self.name, self.initial
            )),
        }
        for (q, name) in self.state_names.iter().enumerate() {
            let drawn = self.finals.contains(&name.as_str());
            if d.is_final(q) != drawn {
                out.push(format!(
                    "{}: state {name} final={} but drawn final={drawn}",
                    self.name,
                    d.is_final(q)
                ));
            }
        }
        for edge in self.edges {
            let (Some(p), Some(r)) = (self.state(edge.from), self.state(edge.to)) else {
                out.push(format!(
                    "{}: unknown state in {} -> {}",
                    self.name, edge.from, edge.to
                ));
                continue;
            };
            for &label in edge.letters {
                let Some(a) = self.letter(label) else {
                    out.push(format!("{}: unknown letter {label}", self.name));
                    continue;
                };
                covered[p * d.letter_count() + a] = true;
                let got = d.next(p, a);
                if got != r {
                    out.push(format!(
                        "{}: {} --{label}--> {} expected, built {}",
                        self.name, edge.from, edge.to, self.state_names[got]
                    ));
                }
            }
        }
        for (i, _) in covered.iter().enumerate().filter(|(_, &c)| !c) {
            let (q, a) = (i / d.letter_count(), i % d.letter_count());
            out.push(format!(
                "{}: transition {} --{}--> is not drawn",
                self.name,
                self.state_names[q],
                d.letter_label(a)
            ));
        }
        out
    }
}
