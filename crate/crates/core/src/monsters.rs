//! Monsters: automata whose alphabet is every (tuple of) transformation(s).
//!
//! A k-monster over sizes `(n1, …, nk)` is a family of k DFAs sharing the
//! alphabet `⟦n1⟧^⟦n1⟧ × … × ⟦nk⟧^⟦nk⟧`; machine `j` has states `⟦nj⟧`,
//! initial state 0, and reads a letter by applying its `j`-th coordinate.
//!
//! Letters are ordered lexicographically over the coordinates' image
//! sequences, first coordinate most significant, so a letter's index is the
//! mixed-radix number formed by the coordinates' [`Transformation::rank`]s.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::transforms::Transformation;

/// Sizes and final sets of a k-monster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonsterSpec {
    sizes: Vec<usize>,
    finals: Vec<Vec<usize>>,
}

impl MonsterSpec {
    /// Final sets are deduplicated and sorted.
    pub fn new(sizes: Vec<usize>, finals: Vec<Vec<usize>>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidMonster("arity must be at least 1".into()));
        }
        if sizes.len() != finals.len() {
            return Err(Error::InvalidMonster(format!(
                "{} sizes but {} final sets",
                sizes.len(),
                finals.len()
            )));
        }
        let mut clean = Vec::with_capacity(finals.len());
        for (&n, f) in sizes.iter().zip(finals) {
            if n == 0 {
                return Err(Error::EmptyDomain);
            }
            let mut f = f;
            f.sort_unstable();
            f.dedup();
            if let Some(&bad) = f.iter().find(|&&q| q >= n) {
                return Err(Error::StateOutOfRange {
                    state: bad,
                    size: n,
                });
            }
            clean.push(f);
        }
        Ok(MonsterSpec {
            sizes,
            finals: clean,
        })
    }

    /// Two machines described by `((n1, n2), (f1, f2))`.
    pub fn pair(n1: usize, n2: usize, f1: &[usize], f2: &[usize]) -> Result<Self> {
        Self::new(alloc::vec![n1, n2], alloc::vec![f1.to_vec(), f2.to_vec()])
    }

    pub fn arity(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn finals(&self) -> &[Vec<usize>] {
        &self.finals
    }

    /// Alphabet size `Π nj^nj` (saturating).
    pub fn letter_count(&self) -> u128 {
        self.sizes.iter().fold(1u128, |acc, &n| {
            acc.saturating_mul(Transformation::count(n))
        })
    }

    /// Index of a tuple of transformations in the canonical letter order.
    pub fn tuple_index(&self, tuple: &[Transformation]) -> Result<usize> {
        if tuple.len() != self.arity() {
            return Err(Error::InvalidMonster(format!(
                "letter has {} coordinates, monster has arity {}",
                tuple.len(),
                self.arity()
            )));
        }
        let mut index: u128 = 0;
        for (t, &n) in tuple.iter().zip(&self.sizes) {
            if t.size() != n {
                return Err(Error::SizeMismatch {
                    left: t.size(),
                    right: n,
                });
            }
            index = index
                .saturating_mul(Transformation::count(n))
                .saturating_add(t.rank());
        }
        usize::try_from(index).map_err(|_| Error::LimitExceeded {
            what: "letter index",
            required: index,
            limit: usize::MAX as u128,
        })
    }
}

/// A letter of a 2-monster: one transformation per machine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairLetter {
    pub first: Transformation,
    pub second: Transformation,
}

impl PairLetter {
    pub fn new(first: Transformation, second: Transformation) -> Self {
        PairLetter { first, second }
    }

    /// `(𝟙, 𝟙)` on `⟦n1⟧ × ⟦n2⟧`.
    pub fn identity(n1: usize, n2: usize) -> Result<Self> {
        Ok(PairLetter {
            first: Transformation::identity(n1)?,
            second: Transformation::identity(n2)?,
        })
    }

    /// Coordinatewise action on a cell: `(x, y) ↦ (f(x), g(y))`.
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.first.apply(x), self.second.apply(y))
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.first.size(), self.second.size())
    }
}

/// Renders as `([images1],[images2])`.
impl core::fmt::Display for PairLetter {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Index of `pair` in the canonical alphabet of a 2-monster with `spec`'s sizes.
pub fn letter_index(spec: &MonsterSpec, pair: &PairLetter) -> Result<usize> {
    if spec.arity() != 2 {
        return Err(Error::InvalidMonster(
            "pair letters need a 2-monster".into(),
        ));
    }
    spec.tuple_index(&[pair.first.clone(), pair.second.clone()])
}

/// The 2-monster alphabet `⟦n1⟧^⟦n1⟧ × ⟦n2⟧^⟦n2⟧` in canonical order.
pub fn pair_letters(n1: usize, n2: usize, limits: &Limits) -> Result<Vec<PairLetter>> {
    let spec = MonsterSpec::pair(n1, n2, &[], &[])?;
    limits.check_letters(spec.letter_count())?;
    let left = Transformation::enumerate_all(n1, &Limits::unbounded())?;
    let right = Transformation::enumerate_all(n2, &Limits::unbounded())?;
    let mut out = Vec::with_capacity(left.len() * right.len());
    for f in &left {
        for g in &right {
            out.push(PairLetter::new(f.clone(), g.clone()));
        }
    }
    Ok(out)
}

/// The 1-monster `Mon_n^F`.
pub fn monster1(n: usize, finals: &[usize], limits: &Limits) -> Result<Dfa> {
    let spec = MonsterSpec::new(alloc::vec![n], alloc::vec![finals.to_vec()])?;
    Ok(monster(&spec, limits)?.pop().unwrap())
}

/// The two machines of a 2-monster, sharing one alphabet.
pub fn monster2(spec: &MonsterSpec, limits: &Limits) -> Result<(Dfa, Dfa)> {
    if spec.arity() != 2 {
        return Err(Error::InvalidMonster(format!(
            "expected arity 2, got {}",
            spec.arity()
        )));
    }
    let mut machines = monster(spec, limits)?;
    let second = machines.pop().unwrap();
    let first = machines.pop().unwrap();
    Ok((first, second))
}

/// The machines of a k-monster, in coordinate order.
pub fn monster(spec: &MonsterSpec, limits: &Limits) -> Result<Vec<Dfa>> {
    let total = spec.letter_count();
    limits.check_letters(total)?;
    let max_size = *spec.sizes.iter().max().unwrap() as u128;
    limits.check_cells(total.saturating_mul(max_size))?;
    let total = total as usize;

    let coordinates: Vec<Vec<Transformation>> = spec
        .sizes
        .iter()
        .map(|&n| Transformation::enumerate_all(n, &Limits::unbounded()))
        .collect::<Result<_>>()?;
    // stride of coordinate j in the mixed-radix letter index
    let mut strides = alloc::vec![1usize; spec.arity()];
    for j in (0..spec.arity().saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * coordinates[j + 1].len();
    }
    let coordinate_of = |letter: usize, j: usize| -> &Transformation {
        &coordinates[j][(letter / strides[j]) % coordinates[j].len()]
    };

    let labels: Vec<String> = (0..total)
        .map(|letter| {
            if spec.arity() == 1 {
                coordinate_of(letter, 0).to_string()
            } else {
                let parts: Vec<String> = (0..spec.arity())
                    .map(|j| coordinate_of(letter, j).to_string())
                    .collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();

    let mut machines = Vec::with_capacity(spec.arity());
    for (j, &n) in spec.sizes.iter().enumerate() {
        let mut delta = Vec::with_capacity(n * total);
        for q in 0..n {
            delta.extend((0..total).map(|letter| coordinate_of(letter, j).images()[q]));
        }
        let dfa = Dfa::new(total, n, 0, spec.finals[j].iter().copied(), delta)?
            .with_labels(labels.clone())?;
        machines.push(dfa);
    }
    Ok(machines)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[u32]) -> Transformation {
        Transformation::from_images(images.iter().copied()).unwrap()
    }

    #[test]
    fn example_monster() {
        let m = monster1(2, &[1], &Limits::default()).unwrap();
        assert_eq!(m.letter_count(), 4);
        assert_eq!(m.state_count(), 2);
        assert_eq!(m.finals().collect::<Vec<_>>(), [1]);
        let labels = m.letter_labels().unwrap();
        assert_eq!(labels, ["[0 0]", "[0 1]", "[1 0]", "[1 1]"]);
        // 0 -> 1 exactly on [1 1] and [1 0]
        let to_one: Vec<_> = (0..4).filter(|&a| m.next(0, a) == 1).collect();
        assert_eq!(to_one, [2, 3]);
        assert_eq!(m.nerode_partition().class_count, 2);
    }

    #[test]
    fn trivial_monster() {
        let m = monster1(1, &[0], &Limits::default()).unwrap();
        assert_eq!((m.state_count(), m.letter_count()), (1, 1));
        assert!(m.accepts(&[]).unwrap());
    }

    #[test]
    fn pair_monster_sizes() {
        let spec = MonsterSpec::pair(2, 2, &[1], &[0]).unwrap();
        let (a, b) = monster2(&spec, &Limits::default()).unwrap();
        assert_eq!((a.letter_count(), b.letter_count()), (16, 16));
        assert_eq!(a.letter_labels(), b.letter_labels());
        let spec = MonsterSpec::pair(3, 3, &[2], &[0]).unwrap();
        let (a, _) = monster2(&spec, &Limits::default()).unwrap();
        assert_eq!(a.letter_count(), 729);
    }

    #[test]
    fn projection_onto_first_coordinate() {
        let spec = MonsterSpec::pair(2, 2, &[1], &[0]).unwrap();
        let (a, _) = monster2(&spec, &Limits::default()).unwrap();
        let single = monster1(2, &[1], &Limits::default()).unwrap();
        let id = Transformation::identity(2).unwrap();
        for f in Transformation::enumerate_all(2, &Limits::default()).unwrap() {
            let pair = PairLetter::new(f.clone(), id.clone());
            let idx = letter_index(&spec, &pair).unwrap();
            for q in 0..2 {
                assert_eq!(a.next(q, idx), single.next(q, f.rank() as usize));
            }
        }
    }

    #[test]
    fn letter_index_rank_matches_scan() {
        let spec = MonsterSpec::pair(2, 3, &[], &[]).unwrap();
        let letters = pair_letters(2, 3, &Limits::default()).unwrap();
        assert_eq!(letters.len(), 4 * 27);
        for (i, l) in letters.iter().enumerate() {
            assert_eq!(letter_index(&spec, l).unwrap(), i);
        }
        let swap = PairLetter::new(t(&[1, 0]), t(&[1, 0]));
        let spec22 = MonsterSpec::pair(2, 2, &[], &[]).unwrap();
        let scanned = pair_letters(2, 2, &Limits::default())
            .unwrap()
            .iter()
            .position(|l| *l == swap)
            .unwrap();
        assert_eq!(letter_index(&spec22, &swap).unwrap(), scanned);
        assert_eq!(scanned, 2 * 4 + 2);
        assert_eq!(
            letter_index(&spec22, &PairLetter::identity(2, 2).unwrap()).unwrap(),
            4 + 1
        );
        assert!(letter_index(&spec22, &PairLetter::identity(2, 3).unwrap()).is_err());
    }

    #[test]
    fn spec_validation_and_caps() {
        assert!(MonsterSpec::pair(2, 2, &[2], &[]).is_err());
        assert!(MonsterSpec::new(alloc::vec![], alloc::vec![]).is_err());
        assert!(MonsterSpec::new(alloc::vec![2], alloc::vec![]).is_err());
        let spec = MonsterSpec::pair(3, 3, &[2], &[0]).unwrap();
        let tight = Limits {
            max_letters: 100,
            ..Limits::default()
        };
        assert!(monster2(&spec, &tight).unwrap_err().is_limit());
    }

    #[test]
    fn three_monster() {
        let spec = MonsterSpec::new(
            alloc::vec![1, 2, 2],
            alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![0]],
        )
        .unwrap();
        let machines = monster(&spec, &Limits::default()).unwrap();
        assert_eq!(machines.len(), 3);
        assert!(machines.iter().all(|m| m.letter_count() == 16));
        assert_eq!(machines[0].letter_labels().unwrap()[5], "([0],[0 1],[0 1])");
    }
}
