//! Total transformations of `⟦n⟧ = {0, …, n-1}`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::limits::{saturating_pow, Limits};

/// A total map of `⟦n⟧` into itself, stored as its image sequence.
///
/// The image sequence is also the canonical encoding: equality, hashing and
/// ordering all go through it, so transformations can key maps directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<u32>,
}

impl Transformation {
    /// Builds a transformation from its images; `images[q]` is the image of `q`.
    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: TryInto<u32>,
    {
        let images: Vec<u32> = images
            .into_iter()
            .map(|x| x.try_into().unwrap_or(u32::MAX))
            .collect();
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        if let Some(&bad) = images.iter().find(|&&x| x as usize >= n) {
            return Err(Error::StateOutOfRange {
                state: bad as usize,
                size: n,
            });
        }
        Ok(Transformation { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        Ok(Transformation {
            images: (0..n as u32).collect(),
        })
    }

    /// Cyclic permutation `support[0] ↦ support[1] ↦ … ↦ support[0]`, fixing
    /// every other state. Supports of length 0 or 1 give the identity.
    pub fn cycle(n: usize, support: &[usize]) -> Result<Self> {
        let mut t = Self::identity(n)?;
        let mut seen = alloc::vec![false; n];
        for &s in support {
            if s >= n {
                return Err(Error::StateOutOfRange { state: s, size: n });
            }
            if seen[s] {
                return Err(Error::DuplicateSupport(s));
            }
            seen[s] = true;
        }
        for (i, &s) in support.iter().enumerate() {
            t.images[s] = support[(i + 1) % support.len()] as u32;
        }
        Ok(t)
    }

    /// Sends `from` to `to` and fixes every other state.
    pub fn point_map(n: usize, from: usize, to: usize) -> Result<Self> {
        let mut t = Self::identity(n)?;
        for s in [from, to] {
            if s >= n {
                return Err(Error::StateOutOfRange { state: s, size: n });
            }
        }
        t.images[from] = to as u32;
        Ok(t)
    }

    /// Domain size `n`.
    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of `q`. Panics if `q` is outside the domain.
    #[inline]
    pub fn apply(&self, q: usize) -> usize {
        self.images[q] as usize
    }

    /// `outer ∘ inner`: apply `inner` first.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if outer.size() != inner.size() {
            return Err(Error::SizeMismatch {
                left: outer.size(),
                right: inner.size(),
            });
        }
        Ok(Transformation {
            images: inner
                .images
                .iter()
                .map(|&q| outer.images[q as usize])
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(q, &x)| q as u32 == x)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = alloc::vec![false; self.size()];
        self.images
            .iter()
            .all(|&x| !core::mem::replace(&mut hit[x as usize], true))
    }

    /// Position of `self` in [`Transformation::enumerate_all`]: the images read
    /// as a base-`n` numeral, most significant digit first.
    pub fn rank(&self) -> u128 {
        let n = self.size() as u128;
        self.images.iter().fold(0u128, |acc, &x| {
            acc.saturating_mul(n).saturating_add(x as u128)
        })
    }

    /// Number of transformations of `⟦n⟧`, i.e. `n^n` (saturating).
    pub fn count(n: usize) -> u128 {
        saturating_pow(n as u128, n as u32)
    }

    /// All `n^n` transformations in lexicographic order of their images.
    pub fn enumerate_all(n: usize, limits: &Limits) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        limits.check_letters(Self::count(n))?;
        let total = Self::count(n) as usize;
        let mut out = Vec::with_capacity(total);
        let mut images = alloc::vec![0u32; n];
        loop {
            out.push(Transformation {
                images: images.clone(),
            });
            // odometer increment, last position fastest
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                images[pos] += 1;
                if images[pos] as usize == n {
                    images[pos] = 0;
                } else {
                    break;
                }
            }
        }
    }
}

/// Renders as `[i0 i1 … i(n-1)]`.
impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn t(images: &[u32]) -> Transformation {
        Transformation::from_images(images.iter().copied()).unwrap()
    }

    #[test]
    fn identity_cases() {
        assert_eq!(Transformation::identity(3).unwrap().images(), &[0, 1, 2]);
        assert_eq!(Transformation::identity(1).unwrap().images(), &[0]);
        assert_eq!(Transformation::identity(4).unwrap().apply(2), 2);
        assert_eq!(Transformation::identity(0), Err(Error::EmptyDomain));
    }

    #[test]
    fn cycles() {
        assert_eq!(
            Transformation::cycle(4, &[0, 1, 2]).unwrap(),
            t(&[1, 2, 0, 3])
        );
        assert_eq!(Transformation::cycle(3, &[1]).unwrap(), t(&[0, 1, 2]));
        assert_eq!(Transformation::cycle(2, &[0, 1]).unwrap(), t(&[1, 0]));
        assert_eq!(Transformation::cycle(3, &[]).unwrap(), t(&[0, 1, 2]));
        assert_eq!(
            Transformation::cycle(3, &[0, 1, 0]),
            Err(Error::DuplicateSupport(0))
        );
        assert_eq!(
            Transformation::cycle(3, &[0, 3]),
            Err(Error::StateOutOfRange { state: 3, size: 3 })
        );
    }

    #[test]
    fn point_maps() {
        assert_eq!(Transformation::point_map(3, 2, 0).unwrap(), t(&[0, 1, 0]));
        assert!(Transformation::point_map(3, 1, 1).unwrap().is_identity());
        assert_eq!(Transformation::point_map(2, 1, 0).unwrap(), t(&[0, 0]));
        assert!(Transformation::point_map(2, 2, 0).is_err());
        assert!(Transformation::point_map(2, 0, 2).is_err());
        assert!(!Transformation::point_map(4, 3, 1).unwrap().is_injective());
    }

    #[test]
    fn composition() {
        let c = Transformation::cycle(3, &[0, 1, 2]).unwrap();
        let id = Transformation::identity(3).unwrap();
        assert_eq!(Transformation::compose(&id, &c).unwrap(), c);
        let swap = Transformation::cycle(2, &[0, 1]).unwrap();
        assert!(Transformation::compose(&swap, &swap).unwrap().is_identity());
        // 0 -> 1 -> 1, 1 -> 2 -> 0, 2 -> 0 -> 0
        let p = Transformation::point_map(3, 2, 0).unwrap();
        assert_eq!(Transformation::compose(&p, &c).unwrap(), t(&[1, 0, 0]));
        assert_eq!(
            Transformation::compose(&swap, &c),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn enumeration_order_and_rank() {
        let limits = Limits::default();
        assert_eq!(
            Transformation::enumerate_all(1, &limits).unwrap(),
            [t(&[0])]
        );
        assert_eq!(
            Transformation::enumerate_all(2, &limits).unwrap(),
            [t(&[0, 0]), t(&[0, 1]), t(&[1, 0]), t(&[1, 1])]
        );
        let all3 = Transformation::enumerate_all(3, &limits).unwrap();
        assert_eq!(all3.len(), 27);
        for (i, x) in all3.iter().enumerate() {
            assert_eq!(x.rank(), i as u128);
        }
        let tight = Limits {
            max_letters: 26,
            ..Limits::default()
        };
        assert!(Transformation::enumerate_all(3, &tight)
            .unwrap_err()
            .is_limit());
    }

    #[test]
    fn rendering() {
        assert_eq!(t(&[1, 0, 2]).to_string(), "[1 0 2]");
        assert!(Transformation::from_images([0u32, 2]).is_err());
    }
}
