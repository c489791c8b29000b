//! Permutations of `{1..n}` stored in image-array form.
//!
//! Points are 0-based internally; everything that reaches a user (rendering,
//! parsing, error messages) uses 1-based labels.

use std::fmt;

use crate::error::{GroupError, Result};

/// A bijection of `{1..n}`. Ordering is lexicographic on the image array,
/// which gives every group a canonical element order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::InvalidPermutation("degree must be positive".into()));
        }
        if n > u16::MAX as usize {
            return Err(GroupError::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {} repeated or out of range for degree {n}",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from 1-based images as written in two-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(GroupError::InvalidPermutation("points are 1-based".into()));
        }
        Self::from_images(images.iter().map(|x| x - 1).collect())
    }

    /// Builds a permutation from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(GroupError::InvalidPermutation(format!("point {p} outside 1..{degree}")));
                }
                if touched[p - 1] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {p} repeated across cycles"
                    )));
                }
                touched[p - 1] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// 0-based image array.
    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    /// Composition without the degree check; callers guarantee equal degrees.
    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Self { images: inv.into() }
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &Self) -> Self {
        // (s x s⁻¹)(s(i)) = s(x(i))
        let mut out = vec![0u16; self.degree()];
        for i in 0..self.degree() {
            out[self.images[i] as usize] = self.images[x.images[i] as usize];
        }
        Self { images: out.into() }
    }

    /// Pads with fixed points up to `degree`.
    pub fn extend_to(&self, degree: usize) -> Result<Self> {
        if degree < self.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: degree,
            });
        }
        let mut images: Vec<u16> = self.images.to_vec();
        images.extend(self.degree() as u16..degree as u16);
        Ok(Self { images: images.into() })
    }

    /// Largest moved point (1-based), or 0 for the identity.
    pub fn largest_moved_point(&self) -> usize {
        (0..self.degree())
            .rev()
            .find(|&i| self.apply(i) != i)
            .map_or(0, |i| i + 1)
    }

    pub fn order(&self) -> usize {
        let mut lcm = 1usize;
        for len in self.cycle_lengths() {
            lcm = num_integer_lcm(lcm, len);
        }
        lcm
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().filter(|l| l % 2 == 0).count() % 2 == 0
    }

    fn cycle_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles().into_iter().map(|c| c.len())
    }

    /// Disjoint cycles of length ≥ 2, 1-based, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }
}

fn num_integer_lcm(a: usize, b: usize) -> usize {
    fn gcd(mut a: usize, mut b: usize) -> usize {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    a / gcd(a, b) * b
}

/// Canonical cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}
