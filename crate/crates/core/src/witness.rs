//! The bounded-alphabet witness: 17 letters acting on the two machines of
//! the `({n1-1}, {0})` monster, and measurements comparing minimal StX sizes
//! against the tableau count.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::modifiers::{stx, Materialize};
use crate::monsters::{monster2, MonsterSpec, PairLetter};
use crate::tableaux::predicted_complexity;
use crate::transforms::Transformation;

/// Number of letters in the bounded alphabet, whatever the sizes.
pub const SIGMA_PRIME_LEN: usize = 17;

/// The 17-letter alphabet Σ′ for sizes `(n1, n2)`, in its fixed order.
///
/// For small sizes some letters degenerate to `(𝟙, 𝟙)` or coincide; they
/// are kept so letter positions never move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPrime {
    pub n1: usize,
    pub n2: usize,
    pub letters: Vec<PairLetter>,
}

/// Human-readable names of the Σ′ letters, in order.
pub const SIGMA_PRIME_NAMES: [&str; SIGMA_PRIME_LEN] = [
    "((0,…,n1-2),1)",
    "((1,…,n1-2),1)",
    "(1,(1,…,n2-2))",
    "((1,…,n1-1),1)",
    "(1,(1,…,n2-1))",
    "((0,n1-1),1)",
    "(1,(0,n2-1))",
    "((0,1),(0,1))",
    "((0,1),1)",
    "(1,(0,1))",
    "((n1-2,n1-1),1)",
    "(1→0,1)",
    "(1,1→0)",
    "(n1-2→n1-1,1)",
    "(1,n2-2→n2-1)",
    "(n1-1→0,1)",
    "(1,n2-1→0)",
];

pub fn sigma_prime(n1: usize, n2: usize) -> Result<SigmaPrime> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "bounded alphabet needs n1, n2 >= 2, got ({n1}, {n2})"
        )));
    }
    let id1 = Transformation::identity(n1)?;
    let id2 = Transformation::identity(n2)?;
    let range = |a: usize, b: usize| -> Vec<usize> { (a..b).collect() };
    let left = |t: Transformation| PairLetter::new(t, id2.clone());
    let right = |t: Transformation| PairLetter::new(id1.clone(), t);
    let letters = alloc::vec![
        left(Transformation::cycle(n1, &range(0, n1 - 1))?),
        left(Transformation::cycle(n1, &range(1, n1 - 1))?),
        right(Transformation::cycle(n2, &range(1, n2 - 1))?),
        left(Transformation::cycle(n1, &range(1, n1))?),
        right(Transformation::cycle(n2, &range(1, n2))?),
        left(Transformation::cycle(n1, &[0, n1 - 1])?),
        right(Transformation::cycle(n2, &[0, n2 - 1])?),
        PairLetter::new(
            Transformation::cycle(n1, &[0, 1])?,
            Transformation::cycle(n2, &[0, 1])?,
        ),
        left(Transformation::cycle(n1, &[0, 1])?),
        right(Transformation::cycle(n2, &[0, 1])?),
        left(Transformation::cycle(n1, &[n1 - 2, n1 - 1])?),
        left(Transformation::point_map(n1, 1, 0)?),
        right(Transformation::point_map(n2, 1, 0)?),
        left(Transformation::point_map(n1, n1 - 2, n1 - 1)?),
        right(Transformation::point_map(n2, n2 - 2, n2 - 1)?),
        left(Transformation::point_map(n1, n1 - 1, 0)?),
        right(Transformation::point_map(n2, n2 - 1, 0)?),
    ];
    debug_assert_eq!(letters.len(), SIGMA_PRIME_LEN);
    Ok(SigmaPrime { n1, n2, letters })
}

impl SigmaPrime {
    /// Positions of the letters in the full 2-monster alphabet.
    pub fn monster_indices(&self) -> Result<Vec<usize>> {
        let spec = MonsterSpec::pair(self.n1, self.n2, &[], &[])?;
        self.letters
            .iter()
            .map(|l| crate::monsters::letter_index(&spec, l))
            .collect()
    }
}

/// `(B1, B2)`: the machines of the `({n1-1}, {0})` 2-monster with their
/// alphabet restricted to Σ′, letter `a` being the `a`-th letter of Σ′.
pub fn witness_pair(n1: usize, n2: usize) -> Result<(Dfa, Dfa)> {
    let sigma = sigma_prime(n1, n2)?;
    let labels: Vec<_> = sigma.letters.iter().map(|l| l.to_string()).collect();
    let build = |n: usize, finals: usize, coord: fn(&PairLetter) -> &Transformation| {
        let mut delta = Vec::with_capacity(n * SIGMA_PRIME_LEN);
        for q in 0..n {
            delta.extend(sigma.letters.iter().map(|l| coord(l).images()[q]));
        }
        Dfa::new(SIGMA_PRIME_LEN, n, 0, [finals], delta)?.with_labels(labels.clone())
    };
    let b1 = build(n1, n1 - 1, |l| &l.first)?;
    let b2 = build(n2, 0, |l| &l.second)?;
    Ok((b1, b2))
}

fn subset_states(n1: usize, n2: usize) -> u128 {
    let width = (n1 * n2) as u32;
    if width >= 128 {
        u128::MAX
    } else {
        1u128 << width
    }
}

/// Fails with a limit error when the full-monster StX at `(n1, n2)` is
/// beyond the caps: `n1^n1·n2^n2` letters, `2^(n1·n2)` states, and their
/// product as the transition table.
pub fn check_full_monster_caps(n1: usize, n2: usize, limits: &Limits) -> Result<()> {
    let letters = MonsterSpec::pair(n1, n2, &[], &[])?.letter_count();
    let states = subset_states(n1, n2);
    limits.check_letters(letters)?;
    limits.check_states(states)?;
    limits.check_cells(states.saturating_mul(letters))
}

/// Fails with a limit error when `2^(n1·n2)` exceeds the state cap.
pub fn check_witness_caps(n1: usize, n2: usize, limits: &Limits) -> Result<()> {
    limits.check_states(subset_states(n1, n2))
}

/// Minimal size of StX applied to the full 2-monster with finals `(f1, f2)`.
pub fn measure_full_monster(
    n1: usize,
    n2: usize,
    f1: &[usize],
    f2: &[usize],
    limits: &Limits,
) -> Result<usize> {
    check_full_monster_caps(n1, n2, limits)?;
    let spec = MonsterSpec::pair(n1, n2, f1, f2)?;
    let (a, b) = monster2(&spec, limits)?;
    let built = stx(&a, &b, Materialize::Accessible, limits)?;
    Ok(built.dfa.minimize().state_count())
}

/// Minimal size of StX applied to the bounded-alphabet witness.
pub fn measure_witness(n1: usize, n2: usize, limits: &Limits) -> Result<usize> {
    check_witness_caps(n1, n2, limits)?;
    let (b1, b2) = witness_pair(n1, n2)?;
    let built = stx(&b1, &b2, Materialize::Accessible, limits)?;
    Ok(built.dfa.minimize().state_count())
}

/// Outcome of comparing a measured minimal size to the tableau count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessCheck {
    pub n1: usize,
    pub n2: usize,
    pub measured: usize,
    pub predicted: u128,
}

impl WitnessCheck {
    pub fn equal(&self) -> bool {
        self.measured as u128 == self.predicted
    }
}

/// Measures the witness at `(n1, n2)` and records the predicted count next to it.
pub fn verify_witness(n1: usize, n2: usize, limits: &Limits) -> Result<WitnessCheck> {
    let measured = measure_witness(n1, n2, limits)?;
    Ok(WitnessCheck {
        n1,
        n2,
        measured,
        predicted: predicted_complexity(n1, n2)?,
    })
}
