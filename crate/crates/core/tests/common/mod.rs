#![allow(dead_code)]

use proptest::prelude::*;
use stx_core::Dfa;

/// A random complete DFA with `1..=max_states` states over exactly `letters` letters.
pub fn dfa_over(letters: usize, max_states: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(move |n| {
        (
            0..n,
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(0..n as u32, n * letters),
        )
            .prop_map(move |(initial, finals, delta)| {
                let finals = finals
                    .iter()
                    .enumerate()
                    .filter(|(_, &f)| f)
                    .map(|(q, _)| q);
                Dfa::new(letters, n, initial, finals, delta).unwrap()
            })
    })
}

/// A random DFA with up to `max_states` states and up to `max_letters` letters.
pub fn dfa(max_states: usize, max_letters: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_letters).prop_flat_map(move |k| dfa_over(k, max_states))
}

/// A DFA together with a renaming from `1..=max_new` new letters onto its alphabet.
pub fn dfa_and_renaming(
    max_states: usize,
    max_letters: usize,
    max_new: usize,
) -> impl Strategy<Value = (Dfa, Vec<usize>)> {
    dfa(max_states, max_letters).prop_flat_map(move |d| {
        let k = d.letter_count();
        (Just(d), proptest::collection::vec(0..k, 1..=max_new))
    })
}

/// Two DFAs over one alphabet plus a renaming onto it.
pub fn dfa_pair_and_renaming(
    max_states: usize,
    max_letters: usize,
    max_new: usize,
) -> impl Strategy<Value = (Dfa, Dfa, Vec<usize>)> {
    (1..=max_letters).prop_flat_map(move |k| {
        (
            dfa_over(k, max_states),
            dfa_over(k, max_states),
            proptest::collection::vec(0..k, 1..=max_new),
        )
    })
}

/// Membership in `L(a)*` by dynamic programming over split points of `word`.
pub fn star_member(a: &Dfa, word: &[usize]) -> bool {
    let mut reach = vec![false; word.len() + 1];
    reach[0] = true;
    for end in 1..=word.len() {
        reach[end] = (0..end).any(|start| reach[start] && a.accepts(&word[start..end]).unwrap());
    }
    reach[word.len()]
}
