//! Permutations of `{0, .., n-1}`.
//!
//! Points are 0-based in the Rust API. Cycle notation (parsing and
//! `Display`) is 1-based, so `(1,2,3)` moves the points 0, 1 and 2.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}` stored as its image sequence.
///
/// Ordering is lexicographic on the image sequence, which is the canonical
/// element order used everywhere in the crate. The identity is the minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::BoundExceeded {
                what: "degree",
                value: n,
                limit: u16::MAX as usize,
            });
        }
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n || seen[p] {
                return Err(Error::Invalid(format!(
                    "image sequence {:?} is not a bijection",
                    images
                )));
            }
            seen[p] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|p| p as u16).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u16>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&p| p as usize).collect()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation of the given degree from disjoint-or-not cycles
    /// of 0-based points. Cycles are composed left to right as written.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut img: Vec<usize> = (0..degree).collect();
            let mut used = vec![false; degree];
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Parse(format!(
                        "point {} exceeds degree {}",
                        p + 1,
                        degree
                    )));
                }
                if used[p] {
                    return Err(Error::Parse(format!("point {} repeated in a cycle", p + 1)));
                }
                used[p] = true;
                img[p] = cycle[(i + 1) % cycle.len()];
            }
            let c = Permutation::from_images(img)?;
            acc = &acc * &c;
        }
        Ok(acc)
    }

    /// Parses 1-based cycle notation such as `"(1,2,3)(4,5)"` or `"()"`.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        Permutation::from_cycles(degree, &cycles)
    }

    /// Parses cycle notation, taking the degree from the largest point.
    pub fn parse_auto(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(1);
        Permutation::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&p| p as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut out = vec![0u16; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[p as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// True when all cycles, fixed points included, have the same length,
    /// i.e. the cyclic group generated acts semiregularly.
    pub fn is_semiregular(&self) -> bool {
        if self.is_identity() {
            return true;
        }
        let cycles = self.cycles();
        let len = cycles[0].len();
        cycles.iter().all(|c| c.len() == len) && len * cycles.len() == self.degree()
    }

    /// Extends to a larger degree, fixing the new points.
    pub fn extend(&self, degree: usize) -> Self {
        assert!(degree >= self.degree());
        let mut img = self.images.to_vec();
        img.extend(self.degree() as u16..degree as u16);
        Permutation {
            images: img.into_boxed_slice(),
        }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "()" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {:?}", s)))?;
        let end = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {:?}", s)))?;
        let inner = &body[..end];
        rest = &body[end + 1..];
        if inner.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for tok in inner.split(',') {
            let p: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad point {:?} in {:?}", tok, s)))?;
            if p == 0 {
                return Err(Error::Parse("points are 1-based".into()));
            }
            cycle.push(p - 1);
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
