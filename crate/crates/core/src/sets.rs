//! Descent sets and cyclic descent sets.
//!
//! Both carry the ambient length `n` and a sorted list of 1-based members.
//! The text form is the ascending comma-separated member list, e.g. `2,3,5`;
//! the empty set is the empty string.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `{1, ..., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DescentSet {
    n: usize,
    members: Vec<usize>,
}

/// A subset of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicDescentSet {
    n: usize,
    members: Vec<usize>,
}

fn normalize(mut members: Vec<usize>, bound: usize, what: &str) -> Result<Vec<usize>> {
    members.sort_unstable();
    members.dedup();
    if let Some(&bad) = members.iter().find(|&&m| m == 0 || m > bound) {
        return Err(Error::InvalidDescentSet(format!(
            "{what} member {bad} outside 1..={bound}"
        )));
    }
    Ok(members)
}

fn parse_members(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidDescentSet(format!("bad member {part:?}")))
        })
        .collect()
}

fn write_members(f: &mut fmt::Formatter<'_>, members: &[usize]) -> fmt::Result {
    for (i, m) in members.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{m}")?;
    }
    Ok(())
}

impl DescentSet {
    pub fn new(n: usize, members: Vec<usize>) -> Result<Self> {
        let members = normalize(members, n.saturating_sub(1), "descent")?;
        Ok(Self { n, members })
    }

    /// Members must already be sorted, distinct and within range.
    pub(crate) fn from_sorted(n: usize, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|&m| m >= 1 && m < n));
        Self { n, members }
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::new(n, parse_members(text)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True if some `i, i+1, i+2` are all members.
    pub fn has_three_consecutive(&self) -> bool {
        self.members
            .windows(3)
            .any(|w| w[1] == w[0] + 1 && w[2] == w[1] + 1)
    }
}

impl CyclicDescentSet {
    pub fn new(n: usize, members: Vec<usize>) -> Result<Self> {
        let members = normalize(members, n, "cyclic descent")?;
        Ok(Self { n, members })
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::new(n, parse_members(text)?)
    }

    /// Extends `des` by `n` when `wraps` holds.
    pub fn extend(des: &DescentSet, wraps: bool) -> Self {
        let mut members = des.members.clone();
        if wraps {
            members.push(des.n);
        }
        Self { n: des.n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The members lying in `{1, ..., n-1}`.
    pub fn restrict(&self) -> DescentSet {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| m < self.n)
            .collect();
        DescentSet::from_sorted(self.n, members)
    }

    /// Adds `by` to every member modulo `n`, keeping representatives in `1..=n`.
    pub fn rotate(&self, by: usize) -> Self {
        if self.n == 0 {
            return self.clone();
        }
        let mut members: Vec<usize> = self
            .members
            .iter()
            .map(|&m| (m - 1 + by) % self.n + 1)
            .collect();
        members.sort_unstable();
        Self { n: self.n, members }
    }

    /// `∅ ⊊ self ⊊ {1..n}`.
    pub fn is_non_escher(&self) -> bool {
        !self.members.is_empty() && self.members.len() < self.n
    }

    /// True if three cyclically consecutive residues are all members.
    pub fn has_three_cyclically_consecutive(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return false;
        }
        (1..=n).any(|i| {
            let next = |j: usize| j % n + 1;
            self.contains(i) && self.contains(next(i)) && self.contains(next(next(i)))
        })
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_members(f, &self.members)
    }
}

impl fmt::Display for CyclicDescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_members(f, &self.members)
    }
}
