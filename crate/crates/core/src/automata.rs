//! Complete deterministic automata over abstract letter indices.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::error::{Error, Result};

/// A complete DFA with dense states `0..state_count` and letters `0..letter_count`.
///
/// The transition table is stored row-major by state: the successor of `q`
/// on letter `a` is `delta[q * letter_count + a]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    letter_count: usize,
    state_count: usize,
    initial: usize,
    finals: Vec<bool>,
    delta: Vec<u32>,
    letter_labels: Option<Vec<String>>,
}

/// The Nerode equivalence of a DFA, as a class index per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerodePartition {
    pub class_of: Vec<usize>,
    pub class_count: usize,
}

impl NerodePartition {
    pub fn same_class(&self, p: usize, q: usize) -> bool {
        self.class_of[p] == self.class_of[q]
    }
}

type Pair = (u32, u32);

impl Dfa {
    /// Validates and builds a DFA. `delta` is row-major by state.
    pub fn new<F>(
        letter_count: usize,
        state_count: usize,
        initial: usize,
        finals: F,
        delta: Vec<u32>,
    ) -> Result<Self>
    where
        F: IntoIterator<Item = usize>,
    {
        if letter_count == 0 {
            return Err(Error::InvalidDfa("alphabet must not be empty".into()));
        }
        if state_count == 0 {
            return Err(Error::InvalidDfa("state set must not be empty".into()));
        }
        if state_count > u32::MAX as usize {
            return Err(Error::InvalidDfa("too many states".into()));
        }
        if initial >= state_count {
            return Err(Error::StateOutOfRange {
                state: initial,
                size: state_count,
            });
        }
        if delta.len() != state_count * letter_count {
            return Err(Error::InvalidDfa(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                state_count * letter_count
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&q| q as usize >= state_count) {
            return Err(Error::StateOutOfRange {
                state: bad as usize,
                size: state_count,
            });
        }
        let mut final_flags = alloc::vec![false; state_count];
        for f in finals {
            if f >= state_count {
                return Err(Error::StateOutOfRange {
                    state: f,
                    size: state_count,
                });
            }
            final_flags[f] = true;
        }
        Ok(Dfa {
            letter_count,
            state_count,
            initial,
            finals: final_flags,
            delta,
            letter_labels: None,
        })
    }

    /// Attaches display labels, one per letter.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.letter_count {
            return Err(Error::InvalidDfa(format!(
                "{} labels for {} letters",
                labels.len(),
                self.letter_count
            )));
        }
        self.letter_labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.letter_labels = None;
        self
    }

    pub fn letter_count(&self) -> usize {
        self.letter_count
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    /// Final states in increasing order.
    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q))
    }

    pub fn final_flags(&self) -> &[bool] {
        &self.finals
    }

    pub fn letter_labels(&self) -> Option<&[String]> {
        self.letter_labels.as_deref()
    }

    /// Label of letter `a`, falling back to its index.
    pub fn letter_label(&self, a: usize) -> String {
        match &self.letter_labels {
            Some(labels) => labels[a].clone(),
            None => format!("{a}"),
        }
    }

    /// The raw row-major transition table.
    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    /// Successors of `q`, indexed by letter.
    pub fn row(&self, q: usize) -> &[u32] {
        &self.delta[q * self.letter_count..(q + 1) * self.letter_count]
    }

    #[inline]
    pub fn next(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.letter_count + a] as usize
    }

    /// The transition function `δ^a` as an image sequence over all states.
    pub fn letter_action(&self, a: usize) -> Vec<u32> {
        (0..self.state_count)
            .map(|q| self.delta[q * self.letter_count + a])
            .collect()
    }

    /// Extended transition function from the initial state.
    pub fn run(&self, word: &[usize]) -> Result<usize> {
        self.run_from(self.initial, word)
    }

    pub fn run_from(&self, mut q: usize, word: &[usize]) -> Result<usize> {
        for &a in word {
            if a >= self.letter_count {
                return Err(Error::LetterOutOfRange {
                    letter: a,
                    size: self.letter_count,
                });
            }
            q = self.next(q, a);
        }
        Ok(q)
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        Ok(self.is_final(self.run(word)?))
    }

    /// Restriction to the states reachable from the initial state.
    ///
    /// New states are numbered in breadth-first discovery order (letters in
    /// increasing order); the returned map sends each old state to its new
    /// index, or `None` when unreachable.
    pub fn accessible_part(&self) -> (Dfa, Vec<Option<usize>>) {
        let mut remap: Vec<Option<usize>> = alloc::vec![None; self.state_count];
        let mut order = Vec::new();
        remap[self.initial] = Some(0);
        order.push(self.initial);
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for &r in self.row(q) {
                let r = r as usize;
                if remap[r].is_none() {
                    remap[r] = Some(order.len());
                    order.push(r);
                }
            }
        }
        let mut delta = Vec::with_capacity(order.len() * self.letter_count);
        for &q in &order {
            delta.extend(
                self.row(q)
                    .iter()
                    .map(|&r| remap[r as usize].unwrap() as u32),
            );
        }
        let finals: Vec<bool> = order.iter().map(|&q| self.finals[q]).collect();
        let dfa = Dfa {
            letter_count: self.letter_count,
            state_count: order.len(),
            initial: 0,
            finals,
            delta,
            letter_labels: self.letter_labels.clone(),
        };
        (dfa, remap)
    }

    /// Nerode equivalence by Moore partition refinement.
    ///
    /// Classes start as {non-final, final} and are split by the signature
    /// `(class(q), class(δ(q,a)) for every a)` until the class count stops
    /// growing. Class indices follow the first state of each class. The
    /// relation is computed over all states, accessible or not.
    pub fn nerode_partition(&self) -> NerodePartition {
        let n = self.state_count;
        let k = self.letter_count;
        let mut class_of: Vec<u32> = alloc::vec![0; n];
        let mut class_count = {
            let mut ids = [u32::MAX; 2];
            let mut count = 0u32;
            for q in 0..n {
                let slot = &mut ids[self.finals[q] as usize];
                if *slot == u32::MAX {
                    *slot = count;
                    count += 1;
                }
                class_of[q] = *slot;
            }
            count as usize
        };
        let mut signatures: Vec<u32> = alloc::vec![0; n * (k + 1)];
        loop {
            for q in 0..n {
                let sig = &mut signatures[q * (k + 1)..(q + 1) * (k + 1)];
                sig[0] = class_of[q];
                for (slot, &r) in sig[1..].iter_mut().zip(self.row(q)) {
                    *slot = class_of[r as usize];
                }
            }
            let mut ids: HashMap<&[u32], u32> = HashMap::with_capacity(class_count * 2);
            let mut next: Vec<u32> = Vec::with_capacity(n);
            for q in 0..n {
                let sig = &signatures[q * (k + 1)..(q + 1) * (k + 1)];
                let fresh = ids.len() as u32;
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            let refined = ids.len();
            drop(ids);
            class_of = next;
            if refined == class_count {
                break;
            }
            class_count = refined;
        }
        NerodePartition {
            class_of: class_of.into_iter().map(|c| c as usize).collect(),
            class_count,
        }
    }

    /// The minimal DFA: Nerode quotient of the accessible part.
    ///
    /// States of the result are numbered by first occurrence of their class in
    /// breadth-first order, so the initial state is always 0.
    pub fn minimize(&self) -> Dfa {
        let (acc, _) = self.accessible_part();
        let partition = acc.nerode_partition();
        acc.quotient(&partition)
    }

    /// Quotient by a congruence given as a partition. The partition must be
    /// compatible with the transitions and with finality.
    pub fn quotient(&self, partition: &NerodePartition) -> Dfa {
        let c = partition.class_count;
        let k = self.letter_count;
        let mut delta = alloc::vec![0u32; c * k];
        let mut finals = alloc::vec![false; c];
        let mut filled = alloc::vec![false; c];
        for q in 0..self.state_count {
            let cq = partition.class_of[q];
            if filled[cq] {
                continue;
            }
            filled[cq] = true;
            finals[cq] = self.finals[q];
            for (a, &r) in self.row(q).iter().enumerate() {
                delta[cq * k + a] = partition.class_of[r as usize] as u32;
            }
        }
        Dfa {
            letter_count: k,
            state_count: c,
            initial: partition.class_of[self.initial],
            finals,
            delta,
            letter_labels: self.letter_labels.clone(),
        }
    }

    /// Language equality, by a synchronized breadth-first walk over pairs of
    /// states looking for a pair that disagrees on finality.
    pub fn is_equivalent(&self, other: &Dfa) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    /// A shortest word accepted by exactly one of the two automata, if any.
    pub fn distinguishing_word(&self, other: &Dfa) -> Result<Option<Vec<usize>>> {
        if self.letter_count != other.letter_count {
            return Err(Error::AlphabetMismatch {
                left: self.letter_count,
                right: other.letter_count,
            });
        }
        let start = (self.initial as u32, other.initial as u32);
        // pair -> (parent pair, letter)
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if self.finals[p as usize] != other.finals[q as usize] {
                let mut word = Vec::new();
                let mut cur = (p, q);
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    word.push(*a);
                    cur = *prev;
                }
                word.reverse();
                return Ok(Some(word));
            }
            for a in 0..self.letter_count {
                let succ = (
                    self.delta[p as usize * self.letter_count + a],
                    other.delta[q as usize * other.letter_count + a],
                );
                if let hashbrown::hash_map::Entry::Vacant(slot) = parent.entry(succ) {
                    slot.insert(Some(((p, q), a)));
                    queue.push_back(succ);
                }
            }
        }
        Ok(None)
    }

    /// Automaton for `φ⁻¹(L(self))` where `phi[b]` is the old letter renamed
    /// to the new letter `b`. States, initial state and finals are unchanged.
    pub fn preimage_by_renaming(&self, phi: &[usize]) -> Result<Dfa> {
        if phi.is_empty() {
            return Err(Error::InvalidDfa(
                "renaming must have at least one letter".into(),
            ));
        }
        if let Some(&bad) = phi.iter().find(|&&a| a >= self.letter_count) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                size: self.letter_count,
            });
        }
        let m = phi.len();
        let mut delta = Vec::with_capacity(self.state_count * m);
        for q in 0..self.state_count {
            let row = self.row(q);
            delta.extend(phi.iter().map(|&a| row[a]));
        }
        Ok(Dfa {
            letter_count: m,
            state_count: self.state_count,
            initial: self.initial,
            finals: self.finals.clone(),
            delta,
            letter_labels: self
                .letter_labels
                .as_ref()
                .map(|labels| phi.iter().map(|&a| labels[a].clone()).collect()),
        })
    }

    /// Number of distinct letter actions. Letters with equal columns are
    /// interchangeable for every language-level question.
    pub fn distinct_actions(&self) -> usize {
        let set: HashSet<Vec<u32>> = (0..self.letter_count)
            .map(|a| self.letter_action(a))
            .collect();
        set.len()
    }
}
