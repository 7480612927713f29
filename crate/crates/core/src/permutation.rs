//! Coordinate permutations and cycle notation.
//!
//! A permutation acts on vectors by `e_i -> e_{pi(i)}`. Products are written
//! right to left: `p.compose(&q)` applies `q` first.

use std::fmt;

use crate::error::{Error, Result};

/// Largest degree expressible in cycle notation (single digits 1-7).
pub const MAX_CYCLE_DIGIT: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// Zero-based images: `images[i] = pi(i + 1) - 1`.
    images: Vec<u8>,
}

/// How a product of several cycles is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionOrder {
    /// The rightmost cycle acts first.
    RightToLeft,
    /// The leftmost cycle acts first.
    LeftToRight,
}

impl Permutation {
    pub fn identity(degree: u32) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// From 1-based images: `images[i - 1] = pi(i)`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        if n > 64 {
            return Err(Error::dimension(format!("degree {n} exceeds 64")));
        }
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img as usize > n || seen[img as usize - 1] {
                return Err(Error::parse(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[img as usize - 1] = true;
            zero_based.push((img - 1) as u8);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: &[u8]) -> Self {
        Permutation {
            images: images.to_vec(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// `pi(i)` for 1-based `i`.
    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize - 1] as u32 + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&i| i as u32 + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::dimension(format!(
                "cannot compose permutations of degree {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        })
    }

    /// Moves coordinate `i` of `bits` to coordinate `pi(i)`.
    #[inline]
    pub fn apply_bits(&self, bits: u64) -> u64 {
        permute_bits(&self.images, bits)
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// element, ordered by that element. Elements are 1-based.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.images[i] as usize;
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Parses cycle notation, composing right to left.
    pub fn parse_cycles(text: &str, degree: u32) -> Result<Permutation> {
        parse_cycles_with(text, degree, CompositionOrder::RightToLeft)
    }
}

#[inline]
pub(crate) fn permute_bits(images: &[u8], bits: u64) -> u64 {
    let mut out = 0u64;
    let mut rest = bits;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << images[i];
    }
    out
}

/// Disjoint cycle notation; the identity formats as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for i in cycle {
                write!(f, "{i}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn format_cycles(p: &Permutation) -> String {
    p.to_string()
}

pub fn parse_cycles(text: &str, degree: u32) -> Result<Permutation> {
    parse_cycles_with(text, degree, CompositionOrder::RightToLeft)
}

/// Parses `cycle*` where `cycle := '(' digit+ ')'`. The empty string and
/// `()` are the identity. Cycles may share elements; `order` fixes how the
/// product is read.
pub fn parse_cycles_with(text: &str, degree: u32, order: CompositionOrder) -> Result<Permutation> {
    if degree > 64 {
        return Err(Error::dimension(format!("degree {degree} exceeds 64")));
    }
    let mut result = Permutation::identity(degree);
    if text.is_empty() || text == "()" {
        return Ok(result);
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(Error::parse(format!(
                "expected '(' at offset {pos} in {text:?}"
            )));
        }
        pos += 1;
        let mut cycle = Vec::new();
        while pos < bytes.len() && bytes[pos] != b')' {
            let c = bytes[pos];
            if !(b'1'..=b'7').contains(&c) {
                return Err(Error::parse(format!(
                    "unexpected {:?} at offset {pos} in {text:?}",
                    c as char
                )));
            }
            let digit = (c - b'0') as u32;
            if digit > degree {
                return Err(Error::parse(format!(
                    "{digit} exceeds degree {degree} in {text:?}"
                )));
            }
            if cycle.contains(&digit) {
                return Err(Error::parse(format!(
                    "{digit} repeated within a cycle in {text:?}"
                )));
            }
            cycle.push(digit);
            pos += 1;
        }
        if pos == bytes.len() {
            return Err(Error::parse(format!("unterminated cycle in {text:?}")));
        }
        if cycle.is_empty() {
            return Err(Error::parse(format!("empty cycle in {text:?}")));
        }
        pos += 1;
        cycles.push(cycle);
    }

    for cycle in &cycles {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for (k, &from) in cycle.iter().enumerate() {
            let to = cycle[(k + 1) % cycle.len()];
            images[from as usize - 1] = (to - 1) as u8;
        }
        let c = Permutation { images };
        result = match order {
            // (a)(b)(c) = a ∘ b ∘ c; scanning left to right, append on the right.
            CompositionOrder::RightToLeft => result.compose(&c)?,
            CompositionOrder::LeftToRight => c.compose(&result)?,
        };
    }
    Ok(result)
}

/// Advances `images` to the next permutation in lexicographic order.
/// Returns `false` (leaving the slice sorted ascending) after the last one.
pub(crate) fn next_permutation(images: &mut [u8]) -> bool {
    let n = images.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && images[i - 1] >= images[i] {
        i -= 1;
    }
    if i == 0 {
        images.reverse();
        return false;
    }
    let mut j = n - 1;
    while images[j] <= images[i - 1] {
        j -= 1;
    }
    images.swap(i - 1, j);
    images[i..].reverse();
    true
}

/// All permutations of the given degree, in lexicographic order of their
/// image sequences (identity first).
pub fn all_permutations(degree: u32) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<u8>> = Some((0..degree as u8).collect());
    std::iter::from_fn(move || {
        let images = current.take()?;
        let mut next = images.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Permutation { images })
    })
}
