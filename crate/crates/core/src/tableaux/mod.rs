//! Skew shapes and standard Young tableaux.
//!
//! Rows and columns are 1-based with row 1 on top. Entries increase along rows
//! (left to right) and down columns.
//!
//! Text forms:
//! * shape: `outer/inner` with comma-separated parts, e.g. `5,5,4/4,4`; a
//!   straight shape may omit `/inner`.
//! * tableau: rows separated by `|`, cells by `,`, cells of the inner shape
//!   written `.`, e.g. `.,.,1,4,7|2,3,6,8|5,9`.
//! * compact tableau: the same with the `.` cells dropped, e.g. `2,5|3,6|1,4`.
//!   Reading it back needs the shape; for strip shapes the row lengths
//!   determine it (see [`SkewTableau::parse_strip`]).

mod enumerate;
mod jdt;
mod promotion;
mod strip;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::DescentSet;

pub use enumerate::{
    enumerate_syt, for_each_syt, partitions_with_at_most, skew_shapes, skew_shapes_in_box,
};
pub use jdt::{jdt_slide, rectify, rectify_with, CornerPolicy};
pub use promotion::promotion;
pub use strip::{cyclic_descent_set_3row, gamma, gamma_inverse, gamma_tilde};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `outer / inner`. `inner` is stored padded with zeros to the length of
/// `outer`, and `outer` carries no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

fn is_partition(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

fn trim_zeros(mut parts: Vec<usize>) -> Vec<usize> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

impl SkewShape {
    pub fn new(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self> {
        let outer = trim_zeros(outer);
        let mut inner = trim_zeros(inner);
        if !is_partition(&outer) || !is_partition(&inner) {
            return Err(Error::InvalidShape(
                "parts must be weakly decreasing".into(),
            ));
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(i, o)| i > o) {
            return Err(Error::InvalidShape(
                "inner shape is not contained in outer".into(),
            ));
        }
        inner.resize(outer.len(), 0);
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Vec<usize>) -> Result<Self> {
        Self::new(outer, Vec::new())
    }

    /// `(n-k, n-k, n-2k) / (n-2k, n-2k)` for `0 <= k <= n/2`.
    pub fn strip(n: usize, k: usize) -> Result<Self> {
        if 2 * k > n {
            return Err(Error::InvalidShape(format!(
                "strip needs 2k <= n, got n={n} k={k}"
            )));
        }
        Self::new(vec![n - k, n - k, n - 2 * k], vec![n - 2 * k, n - 2 * k])
    }

    /// `Some((n, k))` when the shape is `strip(n, k)`.
    pub fn as_strip(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..=n / 2)
            .find(|&k| Self::strip(n, k).as_ref() == Ok(self))
            .map(|k| (n, k))
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Inner parts without trailing zeros.
    pub fn inner(&self) -> &[usize] {
        let len = self.inner.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        &self.inner[..len]
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns `first..=last` of row `row` (1-based); empty when `first > last`.
    pub fn row_span(&self, row: usize) -> (usize, usize) {
        match row
            .checked_sub(1)
            .and_then(|r| self.outer.get(r).map(|&o| (r, o)))
        {
            Some((r, o)) => (self.inner[r] + 1, o),
            None => (1, 0),
        }
    }

    pub fn row_len(&self, row: usize) -> usize {
        let (first, last) = self.row_span(row);
        (last + 1).saturating_sub(first)
    }

    pub fn size(&self) -> usize {
        self.outer.iter().zip(&self.inner).map(|(o, i)| o - i).sum()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&i| i == 0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        let (first, last) = self.row_span(cell.row);
        cell.col >= first && cell.col <= last
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.num_rows()).flat_map(move |row| {
            let (first, last) = self.row_span(row);
            (first..=last).map(move |col| Cell { row, col })
        })
    }

    /// Cells of the inner shape with no inner cell to the east or south,
    /// top to bottom.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (0..self.inner.len())
            .filter(|&r| {
                self.inner[r] > 0
                    && self
                        .inner
                        .get(r + 1)
                        .map_or(true, |&below| below < self.inner[r])
            })
            .map(|r| Cell {
                row: r + 1,
                col: self.inner[r],
            })
            .collect()
    }

    pub(crate) fn inner_padded(&self) -> &[usize] {
        &self.inner
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.outer)?;
        let inner = self.inner();
        if !inner.is_empty() {
            f.write_str("/")?;
            write_parts(f, inner)?;
        }
        Ok(())
    }
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::InvalidShape(format!("bad part {p:?}")))
        })
        .collect()
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
        Self::new(parse_parts(outer)?, parse_parts(inner)?)
    }
}

/// A standard filling of a skew shape with `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: SkewShape,
    /// `rows[r]` lists the entries of row `r + 1` from left to right.
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Checks that `rows` fits `shape` and is standard.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.len() > shape.num_rows() && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if rows.len() > shape.num_rows() {
            return Err(Error::InvalidTableau("more rows than the shape".into()));
        }
        rows.resize(shape.num_rows(), Vec::new());
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r + 1) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, shape {shape} needs {}",
                    r + 1,
                    row.len(),
                    shape.row_len(r + 1)
                )));
            }
        }
        let t = Self { shape, rows };
        t.check_standard()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        let t = Self { shape, rows };
        debug_assert!(t.check_standard().is_ok(), "nonstandard tableau {t}");
        t
    }

    fn check_standard(&self) -> Result<()> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &v in row {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTableau(format!(
                        "entries must be a permutation of 1..={n}"
                    )));
                }
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("row entries must increase".into()));
            }
        }
        for cell in self.shape.cells() {
            let below = Cell::new(cell.row + 1, cell.col);
            if let (Some(a), Some(b)) = (self.entry(cell), self.entry(below)) {
                if a >= b {
                    return Err(Error::InvalidTableau(format!(
                        "column entries must increase at {cell}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains(cell) {
            return None;
        }
        let (first, _) = self.shape.row_span(cell.row);
        Some(self.rows[cell.row - 1][cell.col - first])
    }

    /// The cell holding `value`.
    pub fn position(&self, value: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&v| v == value).map(|i| {
                let (first, _) = self.shape.row_span(r + 1);
                Cell::new(r + 1, first + i)
            })
        })
    }

    /// `row_of[v]` is the row holding `v`; index 0 is unused.
    pub fn row_index(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r + 1;
            }
        }
        row_of
    }

    /// `{i : i + 1 lies in a lower row than i}`.
    pub fn descent_set(&self) -> DescentSet {
        let row_of = self.row_index();
        let n = self.size();
        let members = (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect();
        DescentSet::from_sorted(n, members)
    }

    /// Parses the dotted text form; the shape is read off the dots and row
    /// lengths.
    pub fn parse(text: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in text.trim().split('|') {
            let mut dots = 0;
            let mut row = Vec::new();
            for token in line.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                if token == "." {
                    if !row.is_empty() {
                        return Err(Error::InvalidTableau("'.' after an entry".into()));
                    }
                    dots += 1;
                } else {
                    row.push(parse_entry(token)?);
                }
            }
            outer.push(dots + row.len());
            inner.push(dots);
            rows.push(row);
        }
        if text.trim().is_empty() {
            return Self::new(SkewShape::straight(Vec::new())?, Vec::new());
        }
        Self::new(SkewShape::new(outer, inner)?, rows)
    }

    /// Parses the compact form (no `.` cells) against a known shape.
    pub fn parse_compact(shape: SkewShape, text: &str) -> Result<Self> {
        Self::new(shape, parse_compact_rows(text)?)
    }

    /// Parses the compact form of a tableau on `strip(n, k)`: rows 1 and 2
    /// hold `k` entries each, row 3 holds the remaining `n - 2k`.
    pub fn parse_strip(text: &str) -> Result<Self> {
        let mut rows = parse_compact_rows(text)?;
        if rows.len() > 3 {
            return Err(Error::InvalidTableau(
                "a strip tableau has at most three rows".into(),
            ));
        }
        rows.resize(3, Vec::new());
        if rows[0].len() != rows[1].len() {
            return Err(Error::InvalidTableau(
                "rows 1 and 2 of a strip tableau must have equal length".into(),
            ));
        }
        let k = rows[0].len();
        let n = 2 * k + rows[2].len();
        Self::new(SkewShape::strip(n, k)?, rows)
    }

    /// Dotted form when the text contains `.`, compact strip form otherwise.
    pub fn parse_strip_or_full(text: &str) -> Result<Self> {
        if text.contains('.') {
            Self::parse(text)
        } else {
            Self::parse_strip(text)
        }
    }

    /// The text form without `.` cells; trailing empty rows are dropped.
    pub fn to_compact_string(&self) -> String {
        let mut rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        while rows.last().is_some_and(String::is_empty) {
            rows.pop();
        }
        rows.join("|")
    }
}

fn parse_entry(token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::InvalidTableau(format!("bad entry {token:?}")))
}

fn parse_compact_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.trim()
        .split('|')
        .map(|line| {
            line.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(parse_entry)
                .collect()
        })
        .collect()
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("|")?;
            }
            let dots = self.shape.inner_padded()[r];
            let cells = std::iter::repeat(".".to_string())
                .take(dots)
                .chain(row.iter().map(usize::to_string));
            f.write_str(&cells.collect::<Vec<_>>().join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SkewTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for SkewTableau {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Self::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_text() {
        let s: SkewShape = "5,5,4/4,4".parse().unwrap();
        assert_eq!(s, SkewShape::strip(6, 1).unwrap());
        assert_eq!(s.to_string(), "5,5,4/4,4");
        assert_eq!(s.size(), 6);
        assert_eq!(s.as_strip(), Some((6, 1)));
        assert_eq!("3,2".parse::<SkewShape>().unwrap().to_string(), "3,2");
        assert_eq!(SkewShape::strip(4, 2).unwrap().to_string(), "2,2");
        assert_eq!(SkewShape::strip(3, 0).unwrap().to_string(), "3,3,3/3,3");
        assert!("2,3".parse::<SkewShape>().is_err());
        assert!("2,2/3".parse::<SkewShape>().is_err());
        assert!("2/1,1".parse::<SkewShape>().is_err());
        assert!(SkewShape::strip(3, 2).is_err());
    }

    #[test]
    fn inner_corners() {
        let s: SkewShape = "5,4,3,1/3,3,1".parse().unwrap();
        assert_eq!(s.inner_corners(), vec![Cell::new(2, 3), Cell::new(3, 1)]);
        assert!(SkewShape::straight(vec![3])
            .unwrap()
            .inner_corners()
            .is_empty());
    }

    #[test]
    fn worked_tableau_descents() {
        let t = SkewTableau::parse(".,.,1,4,7|2,3,6,8|5,9").unwrap();
        assert_eq!(t.shape().to_string(), "5,4,2/2");
        assert_eq!(t.descent_set().to_string(), "1,4,7,8");
        assert_eq!(t.to_string(), ".,.,1,4,7|2,3,6,8|5,9");
        assert_eq!(t.to_compact_string(), "1,4,7|2,3,6,8|5,9");
        assert_eq!(t.position(5), Some(Cell::new(3, 1)));
        assert_eq!(t.entry(Cell::new(1, 3)), Some(1));
        assert_eq!(t.entry(Cell::new(1, 2)), None);
    }

    #[test]
    fn trivial_descents() {
        assert!(SkewTableau::parse("1,2,3")
            .unwrap()
            .descent_set()
            .is_empty());
        assert_eq!(
            SkewTableau::parse("1|2|3")
                .unwrap()
                .descent_set()
                .to_string(),
            "1,2"
        );
    }

    #[test]
    fn rejects_nonstandard() {
        assert!(SkewTableau::parse("2,1").is_err());
        assert!(SkewTableau::parse("1,3|2,4").is_ok());
        assert!(SkewTableau::parse("1,4|2,3").is_err());
        assert!(SkewTableau::parse("2,4|1,3").is_err());
        assert!(SkewTableau::parse("1,2|4").is_err());
        assert!(SkewTableau::parse("1,.|2").is_err());
        assert!(SkewTableau::parse_strip("1,4|2|3").is_err());
    }

    #[test]
    fn strip_forms() {
        let t = SkewTableau::parse_strip("2,5|3,6|1,4").unwrap();
        assert_eq!(t.shape().to_string(), "4,4,2/2,2");
        assert_eq!(t.to_string(), ".,.,2,5|.,.,3,6|1,4");
        assert_eq!(SkewTableau::parse_strip_or_full(&t.to_string()).unwrap(), t);
        let k0 = SkewTableau::parse_strip("||1,2,3").unwrap();
        assert_eq!(k0.shape().as_strip(), Some((3, 0)));
        assert_eq!(k0.to_compact_string(), "||1,2,3");
        let ud = SkewTableau::parse_strip("1|2").unwrap();
        assert_eq!(ud.to_compact_string(), "1|2");
        assert_eq!(SkewTableau::parse_strip("").unwrap().size(), 0);
    }
}
