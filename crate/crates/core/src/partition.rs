//! Integer partitions and Young diagrams in a rectangular box.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered by weight first and then reverse-lexicographically
/// on their parts, so `(2)` comes before `(1,1)`. This is the order used for
/// every basis listing in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a weakly decreasing sequence that may carry
    /// trailing zeros, as produced by padded exponent vectors.
    pub fn from_padded(parts: &[u32]) -> Result<Self> {
        let end = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        Partition::new(parts[..end].to_vec())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-row partition `(k)`, or the empty partition for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Partition::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Parts padded with zeros to length `len`. Panics if `len` is too short.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.len(), "cannot pad {self} to length {len}");
        let mut v = self.0.clone();
        v.resize(len, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition(
            (1..=cols)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() as usize <= cols
    }

    /// Adds one box to each of the first `r` rows.
    pub fn add_full_column(&self, r: usize) -> Result<Partition> {
        if self.len() > r {
            return Err(Error::TooLong {
                partition: self.clone(),
                max: r,
            });
        }
        Ok(Partition(self.padded(r).into_iter().map(|p| p + 1).collect()))
    }

    /// Removes the first column, i.e. subtracts one from every part.
    pub fn remove_full_column(&self) -> Partition {
        Partition(self.0.iter().filter(|&&p| p > 1).map(|p| p - 1).collect())
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of equal weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        (0..n).all(|i| {
            a += self.part(i);
            b += other.part(i);
            a >= b
        })
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Convenience constructor for literal partitions in tests and examples.
///
/// Panics on invalid input.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// All partitions with at most `rows` parts and largest part at most `cols`,
/// sorted by weight and then reverse-lexicographically.
pub fn enumerate_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    fill_box(rows, cols as u32, &mut current, &mut out);
    out.sort();
    out
}

fn fill_box(rows: usize, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition(current.clone()));
    if current.len() == rows {
        return;
    }
    for p in 1..=max_part {
        current.push(p);
        fill_box(rows, p, current, out);
        current.pop();
    }
}

/// All partitions of `weight` with at most `max_len` parts, each part at most
/// `max_part`, in decreasing reverse-lexicographic order (largest first).
pub fn partitions_of(weight: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn go(rem: u32, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            go(rem - p, max_len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
