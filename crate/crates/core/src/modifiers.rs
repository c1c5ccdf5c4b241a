//! Modifiers: constructions on DFAs that only look at the operands' state
//! configurations `(Q, i, F)` and, per letter, at that letter's transition
//! functions.
//!
//! The [`Modifier`] trait encodes that restriction in its signatures: the
//! configuration is derived from [`StateConfig`]s alone, and
//! [`Modifier::step`] only receives the letter's actions. [`apply`] turns a
//! modifier and its operands into a concrete [`Dfa`].
//!
//! Subset states are `u64` bitmasks. For StX, cell `(x, y)` of `Q1 × Q2` is
//! bit `x * n2 + y`, which is also the row-major index of `(x, y)` in the
//! fully materialized Xor product, so [`stx`] and [`stx_composed`] agree
//! state for state.

use alloc::vec::Vec;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// The state configuration `(Q, i, F)` of a DFA, with `Q = 0..state_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateConfig {
    pub state_count: usize,
    pub initial: usize,
    pub finals: Vec<bool>,
}

impl StateConfig {
    pub fn of(dfa: &Dfa) -> Self {
        StateConfig {
            state_count: dfa.state_count(),
            initial: dfa.initial(),
            finals: dfa.final_flags().to_vec(),
        }
    }

    fn final_mask(&self) -> Result<u64> {
        if self.state_count > 64 {
            return Err(Error::LimitExceeded {
                what: "subset width",
                required: self.state_count as u128,
                limit: 64,
            });
        }
        Ok(self
            .finals
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .fold(0u64, |m, (q, _)| m | 1 << q))
    }
}

/// A k-ary construction on DFAs over a common alphabet.
pub trait Modifier {
    type State: Clone + Eq + Hash;
    /// Whatever the modifier precomputes from the operands' state configurations.
    type Config;

    fn arity(&self) -> usize;

    fn configure(&self, operands: &[StateConfig]) -> Result<Self::Config>;

    fn initial(&self, config: &Self::Config) -> Self::State;

    fn is_final(&self, config: &Self::Config, state: &Self::State) -> bool;

    /// Successor of `state` on a letter whose action on operand `j` is
    /// `actions[j]` (an image sequence over that operand's states).
    fn step(&self, config: &Self::Config, state: &Self::State, actions: &[&[u32]]) -> Self::State;

    /// The full state set, in canonical order.
    fn all_states(&self, config: &Self::Config, limits: &Limits) -> Result<Vec<Self::State>>;
}

/// Which states of a modified automaton get materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Materialize {
    /// Forward closure from the initial state, numbered in breadth-first order.
    Accessible,
    /// Every state, numbered in the modifier's canonical order.
    All,
}

/// A modified automaton together with the meaning of each of its states.
#[derive(Debug, Clone)]
pub struct Modified<S> {
    pub dfa: Dfa,
    pub states: Vec<S>,
}

impl<S: Eq + Hash + Clone> Modified<S> {
    /// Index of a construction state, if it was materialized.
    pub fn index_of(&self, state: &S) -> Option<usize> {
        self.states.iter().position(|s| s == state)
    }

    pub fn index_map(&self) -> HashMap<S, usize> {
        self.states
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect()
    }
}

/// Builds `modifier(operands…)`.
pub fn apply<M: Modifier>(
    modifier: &M,
    operands: &[&Dfa],
    mode: Materialize,
    limits: &Limits,
) -> Result<Modified<M::State>> {
    if operands.len() != modifier.arity() {
        return Err(Error::InvalidParameter(alloc::format!(
            "modifier takes {} operands, got {}",
            modifier.arity(),
            operands.len()
        )));
    }
    let letters = operands[0].letter_count();
    if let Some(bad) = operands.iter().find(|d| d.letter_count() != letters) {
        return Err(Error::AlphabetMismatch {
            left: letters,
            right: bad.letter_count(),
        });
    }
    let configs: Vec<StateConfig> = operands.iter().map(|d| StateConfig::of(d)).collect();
    let config = modifier.configure(&configs)?;

    // actions[a * k + j] = action of letter a on operand j
    let actions: Vec<Vec<u32>> = (0..letters)
        .flat_map(|a| operands.iter().map(move |d| d.letter_action(a)))
        .collect();
    let k = operands.len();
    let letter_actions = |a: usize| -> Vec<&[u32]> {
        actions[a * k..(a + 1) * k]
            .iter()
            .map(Vec::as_slice)
            .collect()
    };

    let mut index: HashMap<M::State, u32> = HashMap::new();
    let mut states: Vec<M::State> = Vec::new();
    let mut delta: Vec<u32> = Vec::new();
    let initial = modifier.initial(&config);

    match mode {
        Materialize::All => {
            states = modifier.all_states(&config, limits)?;
            limits.check_cells((states.len() as u128).saturating_mul(letters as u128))?;
            for (i, s) in states.iter().enumerate() {
                index.insert(s.clone(), i as u32);
            }
            delta.reserve(states.len() * letters);
            let per_letter: Vec<Vec<&[u32]>> = (0..letters).map(letter_actions).collect();
            for s in &states {
                for acts in &per_letter {
                    let next = modifier.step(&config, s, acts);
                    let Some(&j) = index.get(&next) else {
                        return Err(Error::InvalidParameter(
                            "modifier stepped outside its declared state set".into(),
                        ));
                    };
                    delta.push(j);
                }
            }
        }
        Materialize::Accessible => {
            let per_letter: Vec<Vec<&[u32]>> = (0..letters).map(letter_actions).collect();
            index.insert(initial.clone(), 0);
            states.push(initial.clone());
            let mut head = 0;
            while head < states.len() {
                let s = states[head].clone();
                head += 1;
                for acts in &per_letter {
                    let next = modifier.step(&config, &s, acts);
                    let fresh = states.len() as u32;
                    let j = *index.entry(next.clone()).or_insert_with(|| {
                        states.push(next);
                        fresh
                    });
                    delta.push(j);
                }
                limits.check_states(states.len() as u128)?;
                limits.check_cells((states.len() as u128).saturating_mul(letters as u128))?;
            }
        }
    }

    let init = index[&initial] as usize;
    let finals: Vec<usize> = states
        .iter()
        .enumerate()
        .filter(|(_, s)| modifier.is_final(&config, s))
        .map(|(i, _)| i)
        .collect();
    let mut dfa = Dfa::new(letters, states.len(), init, finals, delta)?;
    if let Some(labels) = operands[0].letter_labels() {
        dfa = dfa.with_labels(labels.to_vec())?;
    }
    Ok(Modified { dfa, states })
}

/// Star: subsets of `Q`, initial `∅`, finals `{E | E ∩ F ≠ ∅} ∪ {∅}`.
///
/// On `∅` a letter `a` leads to `{δ^a(i)}` when `δ^a(i) ∉ F` and to
/// `{δ^a(i), i}` otherwise; on `E ≠ ∅` it leads to `δ^a(E)`, with `i` added
/// when `δ^a(E)` meets `F`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Star;

#[derive(Debug, Clone)]
pub struct StarConfig {
    state_count: usize,
    initial: usize,
    final_mask: u64,
}

impl Modifier for Star {
    type State = u64;
    type Config = StarConfig;

    fn arity(&self) -> usize {
        1
    }

    fn configure(&self, operands: &[StateConfig]) -> Result<StarConfig> {
        let op = &operands[0];
        Ok(StarConfig {
            state_count: op.state_count,
            initial: op.initial,
            final_mask: op.final_mask()?,
        })
    }

    fn initial(&self, _: &StarConfig) -> u64 {
        0
    }

    fn is_final(&self, config: &StarConfig, &state: &u64) -> bool {
        state == 0 || state & config.final_mask != 0
    }

    fn step(&self, config: &StarConfig, &state: &u64, actions: &[&[u32]]) -> u64 {
        let act = actions[0];
        let init = 1u64 << config.initial;
        if state == 0 {
            let p = 1u64 << act[config.initial];
            if p & config.final_mask == 0 {
                p
            } else {
                p | init
            }
        } else {
            let image = image_of(state, act);
            if image & config.final_mask == 0 {
                image
            } else {
                image | init
            }
        }
    }

    fn all_states(&self, config: &StarConfig, limits: &Limits) -> Result<Vec<u64>> {
        all_subsets(config.state_count, limits)
    }
}

/// Xor: product `Q1 × Q2`, finals `F1 × (Q2 ∖ F2) ∪ (Q1 ∖ F1) × F2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Xor;

#[derive(Debug, Clone)]
pub struct XorConfig {
    sizes: (usize, usize),
    initial: (u32, u32),
    finals: (Vec<bool>, Vec<bool>),
}

impl Modifier for Xor {
    type State = (u32, u32);
    type Config = XorConfig;

    fn arity(&self) -> usize {
        2
    }

    fn configure(&self, operands: &[StateConfig]) -> Result<XorConfig> {
        let (a, b) = (&operands[0], &operands[1]);
        Ok(XorConfig {
            sizes: (a.state_count, b.state_count),
            initial: (a.initial as u32, b.initial as u32),
            finals: (a.finals.clone(), b.finals.clone()),
        })
    }

    fn initial(&self, config: &XorConfig) -> (u32, u32) {
        config.initial
    }

    fn is_final(&self, config: &XorConfig, &(p, q): &(u32, u32)) -> bool {
        config.finals.0[p as usize] != config.finals.1[q as usize]
    }

    fn step(&self, _: &XorConfig, &(p, q): &(u32, u32), actions: &[&[u32]]) -> (u32, u32) {
        (actions[0][p as usize], actions[1][q as usize])
    }

    /// Row-major: `(p, q)` has index `p * n2 + q`.
    fn all_states(&self, config: &XorConfig, limits: &Limits) -> Result<Vec<(u32, u32)>> {
        let (n1, n2) = config.sizes;
        limits.check_states((n1 as u128) * (n2 as u128))?;
        Ok((0..n1 as u32)
            .flat_map(|p| (0..n2 as u32).map(move |q| (p, q)))
            .collect())
    }
}

/// StX = Star ∘ Xor, written directly on subsets of `Q1 × Q2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Stx;

#[derive(Debug, Clone)]
pub struct StxConfig {
    n1: usize,
    n2: usize,
    initial_cell: u64,
    initial_pair: (usize, usize),
    zone: u64,
}

impl StxConfig {
    #[inline]
    fn bit(&self, x: usize, y: usize) -> u64 {
        1u64 << (x * self.n2 + y)
    }

    /// The final zone `(F1 × Q2) ⊕ (Q1 × F2)` as a cell mask.
    pub fn zone(&self) -> u64 {
        self.zone
    }
}

impl Modifier for Stx {
    type State = u64;
    type Config = StxConfig;

    fn arity(&self) -> usize {
        2
    }

    fn configure(&self, operands: &[StateConfig]) -> Result<StxConfig> {
        let (a, b) = (&operands[0], &operands[1]);
        let (n1, n2) = (a.state_count, b.state_count);
        if n1 * n2 > 64 {
            return Err(Error::LimitExceeded {
                what: "subset width",
                required: (n1 * n2) as u128,
                limit: 64,
            });
        }
        let mut zone = 0u64;
        for x in 0..n1 {
            for y in 0..n2 {
                if a.finals[x] != b.finals[y] {
                    zone |= 1 << (x * n2 + y);
                }
            }
        }
        Ok(StxConfig {
            n1,
            n2,
            initial_cell: 1 << (a.initial * n2 + b.initial),
            initial_pair: (a.initial, b.initial),
            zone,
        })
    }

    fn initial(&self, _: &StxConfig) -> u64 {
        0
    }

    fn is_final(&self, config: &StxConfig, &state: &u64) -> bool {
        state == 0 || state & config.zone != 0
    }

    fn step(&self, c: &StxConfig, &state: &u64, actions: &[&[u32]]) -> u64 {
        let (f, g) = (actions[0], actions[1]);
        if state == 0 {
            let (i1, i2) = c.initial_pair;
            let p = c.bit(f[i1] as usize, g[i2] as usize);
            if p & c.zone == 0 {
                p
            } else {
                p | c.initial_cell
            }
        } else {
            let mut image = 0u64;
            let mut rest = state;
            while rest != 0 {
                let cell = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= c.bit(f[cell / c.n2] as usize, g[cell % c.n2] as usize);
            }
            if image & c.zone == 0 {
                image
            } else {
                image | c.initial_cell
            }
        }
    }

    fn all_states(&self, config: &StxConfig, limits: &Limits) -> Result<Vec<u64>> {
        all_subsets(config.n1 * config.n2, limits)
    }
}

fn image_of(set: u64, act: &[u32]) -> u64 {
    let mut image = 0u64;
    let mut rest = set;
    while rest != 0 {
        let q = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        image |= 1u64 << act[q];
    }
    image
}

fn all_subsets(width: usize, limits: &Limits) -> Result<Vec<u64>> {
    if width >= 64 {
        return Err(Error::LimitExceeded {
            what: "state",
            required: u128::MAX,
            limit: limits.max_states,
        });
    }
    let count = 1u128 << width;
    limits.check_states(count)?;
    Ok((0..count as u64).collect())
}

/// `Star(a)`.
pub fn star_modifier(a: &Dfa, mode: Materialize, limits: &Limits) -> Result<Modified<u64>> {
    apply(&Star, &[a], mode, limits)
}

/// `Xor(a, b)`.
pub fn xor_modifier(
    a: &Dfa,
    b: &Dfa,
    mode: Materialize,
    limits: &Limits,
) -> Result<Modified<(u32, u32)>> {
    apply(&Xor, &[a, b], mode, limits)
}

/// `StX(a, b)` by the direct formula on subsets of `Q1 × Q2`.
pub fn stx(a: &Dfa, b: &Dfa, mode: Materialize, limits: &Limits) -> Result<Modified<u64>> {
    apply(&Stx, &[a, b], mode, limits)
}

/// `StX(a, b)` as `Star(Xor(a, b))`, with the Xor product fully materialized
/// in row-major order so that subset bits coincide with [`stx`]'s cells.
pub fn stx_composed(a: &Dfa, b: &Dfa, mode: Materialize, limits: &Limits) -> Result<Modified<u64>> {
    let product = xor_modifier(a, b, Materialize::All, limits)?;
    star_modifier(&product.dfa, mode, limits)
}

/// Checks `L(m(φ⁻¹ A1, …, φ⁻¹ Ak)) = φ⁻¹(L(m(A1, …, Ak)))` for one renaming.
pub fn check_1_uniformity<M: Modifier>(
    modifier: &M,
    operands: &[&Dfa],
    phi: &[usize],
    limits: &Limits,
) -> Result<bool> {
    let renamed: Vec<Dfa> = operands
        .iter()
        .map(|d| d.preimage_by_renaming(phi))
        .collect::<Result<_>>()?;
    let renamed_refs: Vec<&Dfa> = renamed.iter().collect();
    let lhs = apply(modifier, &renamed_refs, Materialize::Accessible, limits)?.dfa;
    let rhs = apply(modifier, operands, Materialize::Accessible, limits)?
        .dfa
        .preimage_by_renaming(phi)?;
    lhs.is_equivalent(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monsters::monster1;

    fn mon2() -> Dfa {
        monster1(2, &[1], &Limits::default()).unwrap()
    }

    fn accepts_all(letters: usize) -> Dfa {
        Dfa::new(letters, 1, 0, [0], alloc::vec![0; letters]).unwrap()
    }

    #[test]
    fn star_of_example_monster() {
        let star = star_modifier(&mon2(), Materialize::All, &Limits::default()).unwrap();
        assert_eq!(star.dfa.state_count(), 4);
        // {1} is drawn but unreachable: i joins every set that meets F
        let reachable = star_modifier(&mon2(), Materialize::Accessible, &Limits::default());
        assert_eq!(reachable.unwrap().states, [0, 0b01, 0b11]);
        let idx = star.index_map();
        // letters: 0=[0 0], 1=[0 1], 2=[1 0], 3=[1 1]
        let both = idx[&0b11];
        assert_eq!(star.states[star.dfa.next(both, 0)], 0b01);
        assert_eq!(star.states[star.dfa.next(idx[&0], 3)], 0b11);
        assert!(star.dfa.is_final(idx[&0]));
        assert!(!star.dfa.is_final(idx[&0b01]));
    }

    #[test]
    fn star_accepts_epsilon_and_sigma_star() {
        let star =
            star_modifier(&accepts_all(3), Materialize::Accessible, &Limits::default()).unwrap();
        assert!(star.dfa.accepts(&[]).unwrap());
        assert!(star.dfa.is_equivalent(&accepts_all(3)).unwrap());
        let none = Dfa::new(2, 1, 0, [], alloc::vec![0, 0]).unwrap();
        let star = star_modifier(&none, Materialize::All, &Limits::default()).unwrap();
        assert!(star.dfa.accepts(&[]).unwrap());
        assert!(!star.dfa.accepts(&[0]).unwrap());
    }

    #[test]
    fn xor_identities() {
        let m = mon2();
        let self_xor = xor_modifier(&m, &m, Materialize::All, &Limits::default()).unwrap();
        assert_eq!(self_xor.dfa.minimize().finals().count(), 0);
        let empty = Dfa::new(4, 1, 0, [], alloc::vec![0; 4]).unwrap();
        let with_empty =
            xor_modifier(&m, &empty, Materialize::Accessible, &Limits::default()).unwrap();
        assert!(with_empty.dfa.is_equivalent(&m).unwrap());
    }

    #[test]
    fn xor_rejects_mismatched_alphabets() {
        let err = xor_modifier(
            &mon2(),
            &accepts_all(3),
            Materialize::All,
            &Limits::default(),
        );
        assert_eq!(
            err.unwrap_err(),
            Error::AlphabetMismatch { left: 4, right: 3 }
        );
    }

    #[test]
    fn xor_finals_predicate_is_exact() {
        let a = Dfa::new(1, 3, 0, [1, 2], alloc::vec![1, 2, 0]).unwrap();
        let b = Dfa::new(1, 2, 0, [0], alloc::vec![1, 0]).unwrap();
        let x = xor_modifier(&a, &b, Materialize::All, &Limits::default()).unwrap();
        for (i, &(p, q)) in x.states.iter().enumerate() {
            assert_eq!(i, p as usize * 2 + q as usize);
            assert_eq!(
                x.dfa.is_final(i),
                a.is_final(p as usize) ^ b.is_final(q as usize)
            );
        }
    }

    #[test]
    fn stx_direct_equals_composed_on_small_operands() {
        let a = mon2();
        let b = monster1(2, &[0], &Limits::default()).unwrap();
        let direct = stx(&a, &b, Materialize::All, &Limits::default()).unwrap();
        let composed = stx_composed(&a, &b, Materialize::All, &Limits::default()).unwrap();
        assert_eq!(direct.states, composed.states);
        assert_eq!(direct.dfa.delta(), composed.dfa.delta());
        assert_eq!(direct.dfa.final_flags(), composed.dfa.final_flags());
        assert!(direct.dfa.accepts(&[]).unwrap());
    }

    #[test]
    fn identity_renaming_is_uniform() {
        let phi: Vec<usize> = (0..4).collect();
        assert!(check_1_uniformity(&Star, &[&mon2()], &phi, &Limits::default()).unwrap());
    }

    #[test]
    fn caps_are_enforced() {
        let tight = Limits {
            max_states: 2,
            ..Limits::default()
        };
        assert!(star_modifier(&mon2(), Materialize::Accessible, &tight)
            .unwrap_err()
            .is_limit());
        assert!(star_modifier(&mon2(), Materialize::All, &tight)
            .unwrap_err()
            .is_limit());
    }
}
