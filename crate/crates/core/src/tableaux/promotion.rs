use super::jdt::Grid;
use super::SkewTableau;

/// Schützenberger promotion: add 1 to every entry modulo `n` (so `n`
/// becomes 1), then move the 1 north-west, each time swapping it with the
/// larger of its northern and western neighbours inside the shape.
pub fn promotion(t: &SkewTableau) -> SkewTableau {
    let n = t.size();
    if n == 0 {
        return t.clone();
    }
    let mut g = Grid::new(t);
    let (mut r, mut c) = (0, 0);
    for (i, row) in g.cells.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if let Some(v) = cell {
                *v = *v % n + 1;
                if *v == 1 {
                    (r, c) = (i, j);
                }
            }
        }
    }
    loop {
        let north = (r > 0 && g.in_skew(r - 1, c)).then(|| (g.cells[r - 1][c].unwrap(), r - 1, c));
        let west = (c > 0 && g.in_skew(r, c - 1)).then(|| (g.cells[r][c - 1].unwrap(), r, c - 1));
        let next = match (north, west) {
            (Some(a), Some(b)) => Some(if a.0 > b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        let Some((value, nr, nc)) = next else { break };
        g.cells[r][c] = Some(value);
        g.cells[nr][nc] = Some(1);
        (r, c) = (nr, nc);
    }
    g.into_tableau()
}
