//! Integer partitions and their basic combinatorics.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers;
//! trailing zeros are stripped on construction, so two sequences differing
//! only in trailing zeros are the same value.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` compares part by part, treating a missing part as 0,
/// which is the usual lexicographic order on partitions.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Fails with [`Error::MalformedPartition`] if the sequence increases
    /// anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::MalformedPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Internal constructor for sequences already known to be valid.
    pub(crate) fn from_valid(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part_at(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Componentwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// The transposed diagram: the j-th part of the conjugate counts the
    /// parts of `self` that are at least j+1.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part_at(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_valid(parts)
    }

    /// Number of distinct part values.
    pub fn distinct_part_count(&self) -> usize {
        self.distinct_runs().len()
    }

    /// Distinct part values with their multiplicities, largest value first.
    pub fn distinct_runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match runs.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => runs.push((p, 1)),
            }
        }
        runs
    }

    /// True for (l, l-1, ..., 2, 1) with l >= 1.
    pub fn is_staircase(&self) -> bool {
        !self.is_empty()
            && self
                .parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p == self.parts.len() - i)
    }

    /// All partitions contained in `self`, in descending lexicographic order.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut acc = Vec::new();
        sub_rec(&self.parts, usize::MAX, &mut acc, &mut out);
        out
    }
}

fn sub_rec(bound: &[usize], prev: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
    match bound.split_first() {
        None => out.push(Partition::from_valid(acc.clone())),
        Some((&b, rest)) => {
            let hi = b.min(prev);
            for v in (0..=hi).rev() {
                acc.push(v);
                sub_rec(rest, v, acc, out);
                acc.pop();
            }
        }
    }
}

/// All partitions of weight `n`.
pub fn partitions_of_weight(n: usize) -> Vec<Partition> {
    partitions_of_weight_bounded(n, n, n)
}

/// All partitions of weight `n` with at most `max_len` parts, each at most `max_part`.
pub fn partitions_of_weight_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    weight_rec(n, max_part, max_len, &mut acc, &mut out);
    out
}

fn weight_rec(
    n: usize,
    max_part: usize,
    rows_left: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if n == 0 {
        out.push(Partition::from_valid(acc.clone()));
        return;
    }
    if rows_left == 0 || max_part == 0 || n > max_part * rows_left {
        return;
    }
    for v in (1..=max_part.min(n)).rev() {
        acc.push(v);
        weight_rec(n - v, v, rows_left - 1, acc, out);
        acc.pop();
    }
}

/// All partitions fitting in a `cols` x `rows` box.
pub fn partitions_in_box(cols: usize, rows: usize) -> Vec<Partition> {
    Partition::from_valid(vec![cols; rows]).sub_partitions()
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated non-negative integers; the empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedPartition(format!("bad token {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
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
        write!(f, "{self}")
    }
}
