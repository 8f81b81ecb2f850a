//! Text drawings of paths.
//!
//! Each step occupies one column. Row `r` (counted from the bottom) is the band
//! between heights `r` and `r + 1`: a `U` leaving height `h` draws `/` in row
//! `h`, a `D` leaving height `h` draws `\` in row `h - 1`, and an `L` at height
//! `h` draws `_` in row `h`. Trailing blanks are trimmed from each line.

use super::{MotzkinPath, Step};
use crate::error::{Error, Result};

pub fn render_ascii(path: &MotzkinPath) -> String {
    if path.is_empty() {
        return String::new();
    }
    let heights = path.heights();
    let marks: Vec<(usize, char)> = path
        .steps()
        .iter()
        .zip(&heights)
        .map(|(&step, &h)| match step {
            Step::U => (h, '/'),
            Step::D => (h - 1, '\\'),
            Step::L => (h, '_'),
        })
        .collect();
    let rows = marks.iter().map(|&(row, _)| row + 1).max().unwrap_or(1);
    let mut grid = vec![vec![' '; path.len()]; rows];
    for (col, &(row, ch)) in marks.iter().enumerate() {
        grid[row][col] = ch;
    }
    grid.iter()
        .rev()
        .map(|line| line.iter().collect::<String>().trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Reads a drawing produced by [`render_ascii`].
pub fn read_ascii(text: &str) -> Result<MotzkinPath> {
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    let width = lines.iter().map(Vec::len).max().unwrap_or(0);
    let rows = lines.len();
    let mut steps = Vec::with_capacity(width);
    let mut height = 0usize;
    for col in 0..width {
        let marks: Vec<(usize, char)> = lines
            .iter()
            .enumerate()
            .filter_map(|(i, line)| match line.get(col) {
                Some(&c) if c != ' ' => Some((rows - 1 - i, c)),
                _ => None,
            })
            .collect();
        let [(row, ch)] = marks[..] else {
            return Err(Error::MalformedDrawing(format!(
                "column {} has {} marks",
                col + 1,
                marks.len()
            )));
        };
        let (step, expected_row) = match ch {
            '/' => (Step::U, Some(height)),
            '\\' => (Step::D, height.checked_sub(1)),
            '_' => (Step::L, Some(height)),
            other => {
                return Err(Error::MalformedDrawing(format!(
                    "unexpected {other:?} in column {}",
                    col + 1
                )))
            }
        };
        if expected_row != Some(row) {
            return Err(Error::MalformedDrawing(format!(
                "column {} is disconnected from the previous step",
                col + 1
            )));
        }
        match step {
            Step::U => height += 1,
            Step::D => height -= 1,
            Step::L => {}
        }
        steps.push(step);
    }
    MotzkinPath::new(steps)
}
