//! Tableaux: subsets of `⟦n1⟧ × ⟦n2⟧` seen as boolean matrices of crosses.
//!
//! These are the states of the StX construction on a 2-monster. A tableau
//! is stored as a `u64` with cell `(x, y)` at bit `x * n2 + y`, the same
//! encoding [`crate::modifiers::Stx`] uses for its subset states.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::automata::NerodePartition;
use crate::error::{Error, Result};
use crate::monsters::PairLetter;

/// Above this many cells the counts switch from bitmask enumeration to the
/// row-profile recurrence.
pub const EXHAUSTIVE_CELLS: usize = 20;

/// Largest number of right-triangle-free tableaux [`count_constrained`] will walk.
pub const ENUMERATION_BUDGET: u128 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    n1: usize,
    n2: usize,
    cells: u64,
}

impl Tableau {
    pub fn empty(n1: usize, n2: usize) -> Result<Self> {
        Self::from_bits(n1, n2, 0)
    }

    pub fn from_bits(n1: usize, n2: usize, cells: u64) -> Result<Self> {
        let width = n1 * n2;
        if width > 64 {
            return Err(Error::LimitExceeded {
                what: "tableau cells",
                required: width as u128,
                limit: 64,
            });
        }
        if width < 64 && cells >> width != 0 {
            return Err(Error::InvalidParameter(alloc::format!(
                "bits beyond a {n1}x{n2} tableau"
            )));
        }
        Ok(Tableau { n1, n2, cells })
    }

    pub fn from_cells(n1: usize, n2: usize, cells: &[(usize, usize)]) -> Result<Self> {
        let mut t = Self::empty(n1, n2)?;
        for &(x, y) in cells {
            t = t.with(x, y)?;
        }
        Ok(t)
    }

    /// The tableau with one more cross at `(x, y)`.
    pub fn with(mut self, x: usize, y: usize) -> Result<Self> {
        self.check_cell(x, y)?;
        self.cells |= self.bit(x, y);
        Ok(self)
    }

    pub fn without(mut self, x: usize, y: usize) -> Result<Self> {
        self.check_cell(x, y)?;
        self.cells &= !self.bit(x, y);
        Ok(self)
    }

    fn check_cell(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.n1 {
            return Err(Error::StateOutOfRange {
                state: x,
                size: self.n1,
            });
        }
        if y >= self.n2 {
            return Err(Error::StateOutOfRange {
                state: y,
                size: self.n2,
            });
        }
        Ok(())
    }

    #[inline]
    fn bit(&self, x: usize, y: usize) -> u64 {
        1u64 << (x * self.n2 + y)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    pub fn bits(&self) -> u64 {
        self.cells
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.n1 && y < self.n2 && self.cells & self.bit(x, y) != 0
    }

    /// Number of crosses.
    pub fn count(&self) -> u32 {
        self.cells.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.cells == 0
    }

    pub fn is_subset(&self, other: &Tableau) -> bool {
        self.cells & !other.cells == 0
    }

    /// Row `x` as a column mask.
    pub fn row(&self, x: usize) -> u64 {
        let mask = if self.n2 >= 64 {
            u64::MAX
        } else {
            (1u64 << self.n2) - 1
        };
        (self.cells >> (x * self.n2)) & mask
    }

    fn from_rows(n1: usize, n2: usize, rows: &[u64]) -> Tableau {
        let cells = rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (x, &r)| acc | r << (x * n2));
        Tableau { n1, n2, cells }
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut rest = self.cells;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some((c / self.n2, c % self.n2))
        })
    }

    /// `(f, g)(T) = {(f(x), g(y)) | (x, y) ∈ T}`.
    pub fn act(&self, letter: &PairLetter) -> Result<Tableau> {
        if letter.sizes() != (self.n1, self.n2) {
            return Err(Error::DimensionMismatch {
                left: (self.n1, self.n2),
                right: letter.sizes(),
            });
        }
        let cells = self
            .cells()
            .map(|(x, y)| letter.apply(x, y))
            .fold(0u64, |acc, (x, y)| acc | self.bit(x, y));
        Ok(Tableau { cells, ..*self })
    }

    /// Grid with the final zone marked: `×` cross outside the zone, `⊗`
    /// cross inside it, `░` empty zone cell, `·` empty cell.
    pub fn render_with_zone(&self, zone: &FinalZone) -> Result<String> {
        check_dims(self, zone)?;
        let mut out = String::new();
        for x in 0..self.n1 {
            for y in 0..self.n2 {
                if y > 0 {
                    out.push(' ');
                }
                out.push(match (self.contains(x, y), zone.contains(x, y)) {
                    (true, true) => '⊗',
                    (true, false) => '×',
                    (false, true) => '░',
                    (false, false) => '·',
                });
            }
            out.push('\n');
        }
        Ok(out)
    }
}

/// Grid of `×` (cross) and `·` (empty), one line per row.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.n1 {
            for y in 0..self.n2 {
                if y > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.contains(x, y) { "×" } else { "·" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The cells `(F1 × ⟦n2⟧) ⊕ (⟦n1⟧ × F2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalZone {
    n1: usize,
    n2: usize,
    f1: Vec<usize>,
    f2: Vec<usize>,
    zone: u64,
}

impl FinalZone {
    pub fn new(n1: usize, n2: usize, f1: &[usize], f2: &[usize]) -> Result<Self> {
        let probe = Tableau::empty(n1, n2)?;
        let mut in1 = alloc::vec![false; n1];
        let mut in2 = alloc::vec![false; n2];
        for &x in f1 {
            if x >= n1 {
                return Err(Error::StateOutOfRange { state: x, size: n1 });
            }
            in1[x] = true;
        }
        for &y in f2 {
            if y >= n2 {
                return Err(Error::StateOutOfRange { state: y, size: n2 });
            }
            in2[y] = true;
        }
        let mut zone = 0u64;
        for (x, &fx) in in1.iter().enumerate() {
            for (y, &fy) in in2.iter().enumerate() {
                if fx != fy {
                    zone |= probe.bit(x, y);
                }
            }
        }
        let collect = |flags: &[bool]| -> Vec<usize> {
            flags
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect()
        };
        Ok(FinalZone {
            n1,
            n2,
            f1: collect(&in1),
            f2: collect(&in2),
            zone,
        })
    }

    /// The zone of `({n1-1}, {0})`, the final sets of the witness monster.
    pub fn witness(n1: usize, n2: usize) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::EmptyDomain);
        }
        Self::new(n1, n2, &[n1 - 1], &[0])
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    pub fn f1(&self) -> &[usize] {
        &self.f1
    }

    pub fn f2(&self) -> &[usize] {
        &self.f2
    }

    pub fn mask(&self) -> u64 {
        self.zone
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.n1 && y < self.n2 && self.zone & (1u64 << (x * self.n2 + y)) != 0
    }
}

fn check_dims(t: &Tableau, z: &FinalZone) -> Result<()> {
    if t.dims() != z.dims() {
        return Err(Error::DimensionMismatch {
            left: t.dims(),
            right: z.dims(),
        });
    }
    Ok(())
}

/// True iff `t` has a cross in the final zone. The empty tableau is never
/// final here; its finality as the Star start state is the modifier's business.
pub fn is_final(t: &Tableau, z: &FinalZone) -> Result<bool> {
    check_dims(t, z)?;
    Ok(t.cells & z.zone != 0)
}

/// A cross in the final zone implies a cross at `(0, 0)`.
///
/// For the `({n1-1}, {0})` zone these are exactly the accessible states of
/// StX on the 2-monster.
pub fn is_accessible_state(t: &Tableau, z: &FinalZone) -> Result<bool> {
    Ok(!is_final(t, z)? || t.contains(0, 0))
}

/// Some rectangle `x ≠ x'`, `y ≠ y'` has exactly three corners in `t`.
pub fn has_right_triangle(t: &Tableau) -> bool {
    let (n1, n2) = t.dims();
    for x in 0..n1 {
        for xx in (x + 1)..n1 {
            for y in 0..n2 {
                for yy in (y + 1)..n2 {
                    let corners = [(x, y), (x, yy), (xx, y), (xx, yy)]
                        .iter()
                        .filter(|&&(a, b)| t.contains(a, b))
                        .count();
                    if corners == 3 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Every two rows are identical or disjoint.
pub fn rows_equal_or_disjoint(t: &Tableau) -> bool {
    let rows: Vec<u64> = (0..t.n1).map(|x| t.row(x)).collect();
    rows_compatible(&rows)
}

fn rows_compatible(rows: &[u64]) -> bool {
    rows.iter()
        .enumerate()
        .all(|(i, &r)| rows[i + 1..].iter().all(|&s| r == s || r & s == 0))
}

/// The least right-triangle-free tableau containing `t`.
///
/// Closing under "`(i,j), (i',j), (i,j')` present ⇒ add `(i',j')`" amounts to
/// merging any two rows that share a column.
pub fn saturate(t: &Tableau) -> Tableau {
    let mut rows: Vec<u64> = (0..t.n1).map(|x| t.row(x)).collect();
    loop {
        let mut changed = false;
        for i in 0..rows.len() {
            for j in 0..rows.len() {
                if i != j && rows[i] & rows[j] != 0 && rows[i] != rows[j] {
                    let union = rows[i] | rows[j];
                    rows[i] = union;
                    rows[j] = union;
                    changed = true;
                }
            }
        }
        if !changed {
            return Tableau::from_rows(t.n1, t.n2, &rows);
        }
    }
}

/// Tableaux `t'` with `t → t'`: one cross added by a single closure step.
pub fn arrow_successors(t: &Tableau) -> Vec<Tableau> {
    let mut out: Vec<Tableau> = Vec::new();
    for x in 0..t.n1 {
        for xx in 0..t.n1 {
            if x == xx || t.row(x) & t.row(xx) == 0 {
                continue;
            }
            // row xx may take any column of row x
            let mut missing = t.row(x) & !t.row(xx);
            while missing != 0 {
                let y = missing.trailing_zeros() as usize;
                missing &= missing - 1;
                let next = Tableau {
                    cells: t.cells | t.bit(xx, y),
                    ..*t
                };
                if !out.contains(&next) {
                    out.push(next);
                }
            }
        }
    }
    out
}

/// Groups states (given as tableau bitmasks) by their saturation.
pub fn partition_by_saturation(n1: usize, n2: usize, states: &[u64]) -> Result<NerodePartition> {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut class_of = Vec::with_capacity(states.len());
    for &bits in states {
        let sat = saturate(&Tableau::from_bits(n1, n2, bits)?).bits();
        let fresh = ids.len();
        class_of.push(*ids.entry(sat).or_insert(fresh));
    }
    Ok(NerodePartition {
        class_of,
        class_count: ids.len(),
    })
}

/// α_{x,y}: right-triangle-free tableaux of size `x × y`.
pub fn count_rtf(x: usize, y: usize) -> Result<u128> {
    if x * y <= EXHAUSTIVE_CELLS {
        count_rtf_exhaustive(x, y, false)
    } else {
        count_rtf_profiles(x, y, false)
    }
}

/// α'_{x,y}: right-triangle-free tableaux of size `x × y` with a cross at `(0, 0)`.
pub fn count_rtf_pinned(x: usize, y: usize) -> Result<u128> {
    if x * y <= EXHAUSTIVE_CELLS {
        count_rtf_exhaustive(x, y, true)
    } else {
        count_rtf_profiles(x, y, true)
    }
}

/// Counts by walking every bitmask. Limited to [`EXHAUSTIVE_CELLS`] cells.
pub fn count_rtf_exhaustive(x: usize, y: usize, pinned: bool) -> Result<u128> {
    let width = x * y;
    if width > EXHAUSTIVE_CELLS {
        return Err(Error::LimitExceeded {
            what: "exhaustive tableau cells",
            required: width as u128,
            limit: EXHAUSTIVE_CELLS as u128,
        });
    }
    if pinned && width == 0 {
        return Ok(0);
    }
    let row_mask = (1u64 << y) - 1;
    let mut rows = alloc::vec![0u64; x];
    let mut count = 0u128;
    for cells in 0..(1u64 << width) {
        if pinned && cells & 1 == 0 {
            continue;
        }
        for (i, r) in rows.iter_mut().enumerate() {
            *r = (cells >> (i * y)) & row_mask;
        }
        if rows_compatible(&rows) {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts by the row-profile recurrence.
///
/// Rows are equal or disjoint, so a right-triangle-free tableau is a list of
/// rows each of which is empty, a repeat of an earlier nonempty row, or a
/// fresh nonempty set of columns no earlier row uses. The recurrence tracks
/// `(distinct nonempty rows, columns used)`. When pinned, row 0 is forced to
/// be fresh and to contain column 0.
pub fn count_rtf_profiles(x: usize, y: usize, pinned: bool) -> Result<u128> {
    let overflow = || Error::LimitExceeded {
        what: "tableau count",
        required: u128::MAX,
        limit: u128::MAX,
    };
    let binom = binomials(y);
    // ways[k][u]
    let mut ways = alloc::vec![alloc::vec![0u128; y + 1]; y + 1];
    let mut rows_left = x;
    if pinned {
        if x == 0 || y == 0 {
            return Ok(0);
        }
        for s in 1..=y {
            ways[1][s] = binom[y - 1][s - 1];
        }
        rows_left -= 1;
    } else {
        ways[0][0] = 1;
    }
    for _ in 0..rows_left {
        let mut next = alloc::vec![alloc::vec![0u128; y + 1]; y + 1];
        for k in 0..=y {
            for u in 0..=y {
                let w = ways[k][u];
                if w == 0 {
                    continue;
                }
                // empty row or a repeat of one of the k types
                let stay = w.checked_mul(k as u128 + 1).ok_or_else(overflow)?;
                next[k][u] = next[k][u].checked_add(stay).ok_or_else(overflow)?;
                for s in 1..=(y - u) {
                    let fresh = w.checked_mul(binom[y - u][s]).ok_or_else(overflow)?;
                    next[k + 1][u + s] =
                        next[k + 1][u + s].checked_add(fresh).ok_or_else(overflow)?;
                }
            }
        }
        ways = next;
    }
    ways.iter()
        .flatten()
        .try_fold(0u128, |acc, &w| acc.checked_add(w))
        .ok_or_else(overflow)
}

fn binomials(n: usize) -> Vec<Vec<u128>> {
    let mut c = alloc::vec![alloc::vec![0u128; n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=i {
            c[i][j] = c[i - 1][j - 1] + if j < i { c[i - 1][j] } else { 0 };
        }
    }
    c
}

/// `2 α_{n1-1, n2-1} + α'_{n1, n2}`.
pub fn predicted_complexity(n1: usize, n2: usize) -> Result<u128> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::EmptyDomain);
    }
    let alpha = count_rtf(n1 - 1, n2 - 1)?;
    let pinned = count_rtf_pinned(n1, n2)?;
    alpha
        .checked_mul(2)
        .and_then(|a| a.checked_add(pinned))
        .ok_or(Error::LimitExceeded {
            what: "tableau count",
            required: u128::MAX,
            limit: u128::MAX,
        })
}

/// Every right-triangle-free `n1 × n2` tableau, generated row by row.
pub fn rtf_tableaux(n1: usize, n2: usize) -> Result<Vec<Tableau>> {
    Tableau::empty(n1, n2)?;
    let total = count_rtf(n1, n2)?;
    if total > ENUMERATION_BUDGET {
        return Err(Error::LimitExceeded {
            what: "tableau enumeration",
            required: total,
            limit: ENUMERATION_BUDGET,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut rows = alloc::vec![0u64; n1];
    let full = if n2 >= 64 { u64::MAX } else { (1u64 << n2) - 1 };
    extend_rows(n1, n2, full, 0, 0, &mut Vec::new(), &mut rows, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_rows(
    n1: usize,
    n2: usize,
    full: u64,
    row: usize,
    used: u64,
    types: &mut Vec<u64>,
    rows: &mut [u64],
    out: &mut Vec<Tableau>,
) {
    if row == n1 {
        out.push(Tableau::from_rows(n1, n2, rows));
        return;
    }
    rows[row] = 0;
    extend_rows(n1, n2, full, row + 1, used, types, rows, out);
    for i in 0..types.len() {
        rows[row] = types[i];
        extend_rows(n1, n2, full, row + 1, used, types, rows, out);
    }
    // nonempty subsets of the unused columns
    let free = full & !used;
    let mut sub = free;
    while sub != 0 {
        rows[row] = sub;
        types.push(sub);
        extend_rows(n1, n2, full, row + 1, used | sub, types, rows, out);
        types.pop();
        sub = (sub - 1) & free;
    }
}

/// 𝒯_{F1,F2}: right-triangle-free tableaux where a cross in the final zone
/// implies a cross at `(0, 0)`.
pub fn count_constrained(z: &FinalZone) -> Result<u128> {
    let (n1, n2) = z.dims();
    let mut count = 0u128;
    for t in rtf_tableaux(n1, n2)? {
        if is_accessible_state(&t, z)? {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::Transformation;
    use alloc::string::ToString;

    fn tab(n1: usize, n2: usize, cells: &[(usize, usize)]) -> Tableau {
        Tableau::from_cells(n1, n2, cells).unwrap()
    }

    #[test]
    fn zone_membership() {
        let z = FinalZone::witness(3, 4).unwrap();
        assert!(z.contains(0, 0));
        assert!(!z.contains(2, 0));
        assert!(z.contains(2, 3));
        assert!(!z.contains(1, 2));
        assert!(!is_final(&Tableau::empty(3, 4).unwrap(), &z).unwrap());
        assert!(is_final(&tab(3, 4, &[(0, 0)]), &FinalZone::witness(3, 3).unwrap()).is_err());
        assert!(FinalZone::new(2, 2, &[2], &[]).is_err());
        assert!(FinalZone::new(2, 2, &[], &[2]).is_err());
    }

    #[test]
    fn accessibility_predicate() {
        let z = FinalZone::witness(2, 2).unwrap();
        assert!(is_accessible_state(&Tableau::empty(2, 2).unwrap(), &z).unwrap());
        assert!(is_accessible_state(&tab(2, 2, &[(0, 1)]), &z).unwrap());
        assert!(is_accessible_state(&tab(2, 2, &[(0, 0)]), &z).unwrap());
        assert!(is_accessible_state(&tab(2, 2, &[(1, 0)]), &z).unwrap());
        assert!(!is_accessible_state(&tab(2, 2, &[(1, 1)]), &z).unwrap());
        assert!(is_accessible_state(&tab(2, 2, &[(1, 1), (0, 0)]), &z).unwrap());
    }

    #[test]
    fn right_triangles() {
        assert!(has_right_triangle(&tab(2, 2, &[(0, 0), (0, 1), (1, 0)])));
        assert!(!has_right_triangle(&tab(2, 2, &[(0, 0), (1, 1)])));
        assert!(!has_right_triangle(&tab(3, 3, &[(0, 2), (2, 1)])));
        assert!(!rows_equal_or_disjoint(&tab(
            2,
            2,
            &[(0, 0), (1, 0), (1, 1)]
        )));
        assert!(rows_equal_or_disjoint(&Tableau::empty(3, 3).unwrap()));
    }

    #[test]
    fn saturation() {
        let t = tab(2, 2, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(saturate(&t), tab(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]));
        let free = tab(3, 3, &[(0, 0), (1, 0), (2, 2)]);
        assert_eq!(saturate(&free), free);
        // chain merging through three rows
        let chain = tab(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]);
        assert_eq!(saturate(&chain).count(), 9);
    }

    #[test]
    fn arrows_add_single_crosses() {
        let t = tab(2, 2, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(
            arrow_successors(&t),
            [tab(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)])]
        );
        assert!(arrow_successors(&tab(2, 2, &[(0, 0), (1, 1)])).is_empty());
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_rtf(1, 1).unwrap(), 2);
        assert_eq!(count_rtf(0, 0).unwrap(), 1);
        assert_eq!(count_rtf(0, 3).unwrap(), 1);
        assert_eq!(count_rtf_pinned(2, 2).unwrap(), 5);
        assert_eq!(count_rtf_pinned(0, 2).unwrap(), 0);
        assert_eq!(predicted_complexity(2, 2).unwrap(), 9);
        assert!(predicted_complexity(0, 2).is_err());
        assert!(count_rtf_exhaustive(5, 5, false).is_err());
    }

    #[test]
    fn enumerated_tableaux_are_rtf_and_complete() {
        let all = rtf_tableaux(3, 3).unwrap();
        assert_eq!(all.len() as u128, count_rtf(3, 3).unwrap());
        assert!(all.iter().all(|t| !has_right_triangle(t)));
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn constrained_count_with_empty_final_set() {
        let z = FinalZone::new(2, 2, &[], &[0]).unwrap();
        let expected = rtf_tableaux(2, 2)
            .unwrap()
            .iter()
            .filter(|t| (t.bits() & z.mask() == 0) || t.contains(0, 0))
            .count() as u128;
        assert_eq!(count_constrained(&z).unwrap(), expected);
    }

    #[test]
    fn letter_action_and_rendering() {
        let swap = Transformation::cycle(2, &[0, 1]).unwrap();
        let letter = PairLetter::new(swap.clone(), swap);
        let t = tab(2, 2, &[(0, 0)]);
        assert_eq!(t.act(&letter).unwrap(), tab(2, 2, &[(1, 1)]));
        assert_eq!(t.to_string(), "× ·\n· ·\n");
        let z = FinalZone::witness(2, 2).unwrap();
        assert_eq!(t.render_with_zone(&z).unwrap(), "⊗ ·\n· ░\n");
        assert!(t.act(&PairLetter::identity(3, 2).unwrap()).is_err());
    }
}
