//! Jeu de taquin slides and rectification.

use super::{Cell, SkewShape, SkewTableau};
use crate::error::{Error, Result};

/// Which inner corner [`rectify_with`] slides into next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CornerPolicy {
    /// The corner in the lowest row.
    #[default]
    BottomMost,
    /// The corner in the highest row.
    TopMost,
}

/// Dense 0-based grid of a tableau; `None` marks inner cells and the hole.
pub(crate) struct Grid {
    pub(crate) outer: Vec<usize>,
    pub(crate) inner: Vec<usize>,
    pub(crate) cells: Vec<Vec<Option<usize>>>,
}

impl Grid {
    pub(crate) fn new(t: &SkewTableau) -> Self {
        let outer = t.shape().outer().to_vec();
        let inner = t.shape().inner_padded().to_vec();
        let cells = t
            .rows()
            .iter()
            .zip(&inner)
            .map(|(row, &skip)| {
                std::iter::repeat(None)
                    .take(skip)
                    .chain(row.iter().copied().map(Some))
                    .collect()
            })
            .collect();
        Self {
            outer,
            inner,
            cells,
        }
    }

    pub(crate) fn in_skew(&self, r: usize, c: usize) -> bool {
        r < self.outer.len() && c >= self.inner[r] && c < self.outer[r]
    }

    pub(crate) fn into_tableau(self) -> SkewTableau {
        let shape = SkewShape::new(self.outer.clone(), self.inner.clone())
            .expect("slides keep the shape valid");
        let rows = (0..shape.num_rows())
            .map(|r| {
                self.cells[r][self.inner[r]..self.outer[r]]
                    .iter()
                    .map(|v| v.expect("skew cells are filled"))
                    .collect()
            })
            .collect();
        SkewTableau::from_rows_unchecked(shape, rows)
    }
}

/// One forward slide into the inner corner `corner`: the hole repeatedly
/// takes the smaller of its east and south neighbours until it reaches an
/// outer corner, where it is removed.
pub fn jdt_slide(t: &SkewTableau, corner: Cell) -> Result<SkewTableau> {
    if !t.shape().inner_corners().contains(&corner) {
        return Err(Error::NotAnInnerCorner {
            row: corner.row,
            col: corner.col,
        });
    }
    let mut g = Grid::new(t);
    let (mut r, mut c) = (corner.row - 1, corner.col - 1);
    g.inner[r] -= 1;
    loop {
        let east = g
            .in_skew(r, c + 1)
            .then(|| (g.cells[r][c + 1].unwrap(), r, c + 1));
        let south = g
            .in_skew(r + 1, c)
            .then(|| (g.cells[r + 1][c].unwrap(), r + 1, c));
        let next = match (east, south) {
            (Some(e), Some(s)) => Some(if e.0 < s.0 { e } else { s }),
            (e, s) => e.or(s),
        };
        let Some((value, nr, nc)) = next else { break };
        g.cells[r][c] = Some(value);
        g.cells[nr][nc] = None;
        (r, c) = (nr, nc);
    }
    debug_assert_eq!(c + 1, g.outer[r]);
    g.outer[r] -= 1;
    g.cells[r].truncate(g.outer[r]);
    Ok(g.into_tableau())
}

/// Rectifies with [`CornerPolicy::BottomMost`].
pub fn rectify(t: &SkewTableau) -> SkewTableau {
    rectify_with(t, CornerPolicy::BottomMost)
}

/// Slides until the inner shape is empty, picking corners by `policy`.
pub fn rectify_with(t: &SkewTableau, policy: CornerPolicy) -> SkewTableau {
    let mut cur = t.clone();
    loop {
        let corners = cur.shape().inner_corners();
        let corner = match policy {
            CornerPolicy::BottomMost => corners.last(),
            CornerPolicy::TopMost => corners.first(),
        };
        let Some(&corner) = corner else { return cur };
        cur = jdt_slide(&cur, corner).expect("corner taken from inner_corners");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_slide() {
        let t = SkewTableau::parse(".,1|2").unwrap();
        let s = jdt_slide(&t, Cell::new(1, 1)).unwrap();
        assert_eq!(s.to_string(), "1|2");
        assert_eq!(s.shape().to_string(), "1,1");
        assert_eq!(s.descent_set(), t.descent_set());
    }

    #[test]
    fn slide_prefers_smaller_neighbour() {
        // Hole at (1,1); east holds 2, south holds 1: the 1 moves up.
        let t = SkewTableau::parse(".,2|1,3").unwrap();
        let s = jdt_slide(&t, Cell::new(1, 1)).unwrap();
        assert_eq!(s.to_string(), "1,2|3");
    }

    #[test]
    fn not_a_corner() {
        let t = SkewTableau::parse("1,2|3").unwrap();
        assert_eq!(
            jdt_slide(&t, Cell::new(1, 1)),
            Err(Error::NotAnInnerCorner { row: 1, col: 1 })
        );
        let skew = SkewTableau::parse(".,.,1|.,2|3").unwrap();
        assert!(jdt_slide(&skew, Cell::new(1, 1)).is_err());
        assert!(jdt_slide(&skew, Cell::new(1, 2)).is_ok());
        assert!(jdt_slide(&skew, Cell::new(2, 1)).is_ok());
    }

    #[test]
    fn rectify_straight_is_identity() {
        let t = SkewTableau::parse("1,3,4|2,5").unwrap();
        assert_eq!(rectify(&t), t);
    }

    #[test]
    fn rectify_worked_tableau() {
        let t = SkewTableau::parse(".,.,1,4,7|2,3,6,8|5,9").unwrap();
        let r = rectify(&t);
        assert!(r.shape().is_straight());
        assert_eq!(r.descent_set(), t.descent_set());
        assert_eq!(r, rectify_with(&t, CornerPolicy::TopMost));
    }
}
