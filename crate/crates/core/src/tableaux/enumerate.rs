use super::{SkewShape, SkewTableau};

/// Calls `visit` on every standard filling of `shape`.
///
/// Values are placed in increasing order; value `v` may go at the left end of
/// the unfilled part of a row when the cell above it is filled or lies
/// outside the shape. Rows are tried top to bottom, which fixes the order.
pub fn for_each_syt(shape: &SkewShape, mut visit: impl FnMut(&SkewTableau)) {
    let num_rows = shape.num_rows();
    let inner = shape.inner_padded().to_vec();
    let lens: Vec<usize> = (1..=num_rows).map(|r| shape.row_len(r)).collect();
    let mut rows: Vec<Vec<usize>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    fill(shape, &inner, &lens, &mut rows, 1, shape.size(), &mut visit);
}

fn fill(
    shape: &SkewShape,
    inner: &[usize],
    lens: &[usize],
    rows: &mut Vec<Vec<usize>>,
    value: usize,
    n: usize,
    visit: &mut impl FnMut(&SkewTableau),
) {
    if value > n {
        visit(&SkewTableau::from_rows_unchecked(
            shape.clone(),
            rows.clone(),
        ));
        return;
    }
    for r in 0..rows.len() {
        let filled = rows[r].len();
        if filled == lens[r] {
            continue;
        }
        // 1-based column of the next free cell in row r.
        let col = inner[r] + filled + 1;
        let above_ok = r == 0 || col <= inner[r - 1] || col <= inner[r - 1] + rows[r - 1].len();
        if above_ok {
            rows[r].push(value);
            fill(shape, inner, lens, rows, value + 1, n, visit);
            rows[r].pop();
        }
    }
}

/// Every standard Young tableau of `shape`.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    for_each_syt(shape, |t| out.push(t.clone()));
    out
}

/// Partitions of `n` with at most `max_parts` parts, in reverse lexicographic
/// order.
pub fn partitions_with_at_most(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(
        rest: usize,
        cap: usize,
        parts_left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Partitions contained in `outer` (padded with zeros), of total size `size`.
fn subpartitions(outer: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(
        outer: &[usize],
        row: usize,
        cap: usize,
        rest: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if row == outer.len() {
            return;
        }
        let room: usize = outer[row..].iter().map(|&o| o.min(cap)).sum();
        if room < rest {
            return;
        }
        for p in (1..=outer[row].min(cap).min(rest)).rev() {
            cur.push(p);
            go(outer, row + 1, p, rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 0, usize::MAX, size, &mut Vec::new(), &mut out);
    out
}

/// Skew shapes `λ/μ` with `|λ/μ| = cells` and `|λ| <= max_outer`.
pub fn skew_shapes(cells: usize, max_outer: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for size in cells..=max_outer.max(cells) {
        for outer in partitions_with_at_most(size, size) {
            for inner in subpartitions(&outer, size - cells) {
                out.push(SkewShape::new(outer.clone(), inner).expect("inner fits in outer"));
            }
        }
    }
    out
}

/// Skew shapes `λ/μ` with `|λ/μ| = cells` and `λ` inside a `rows x cols` box.
pub fn skew_shapes_in_box(cells: usize, rows: usize, cols: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    let full = vec![cols; rows];
    for size in cells..=rows * cols {
        for outer in subpartitions(&full, size) {
            for inner in subpartitions(&outer, size - cells) {
                out.push(SkewShape::new(outer.clone(), inner).expect("inner fits in outer"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hook length formula, an independent count for straight shapes.
    fn hook_count(shape: &[usize]) -> u128 {
        let n: usize = shape.iter().sum();
        let conj: Vec<usize> = (0..shape.first().copied().unwrap_or(0))
            .map(|c| shape.iter().filter(|&&p| p > c).count())
            .collect();
        let mut hooks: u128 = 1;
        for (r, &len) in shape.iter().enumerate() {
            for (c, &height) in conj.iter().enumerate().take(len) {
                hooks *= ((len - c - 1) + (height - r - 1) + 1) as u128;
            }
        }
        (1..=n as u128).product::<u128>() / hooks
    }

    #[test]
    fn counts_match_hook_formula() {
        for n in 0..=9 {
            for lambda in partitions_with_at_most(n, n) {
                let shape = SkewShape::straight(lambda.clone()).unwrap();
                assert_eq!(
                    enumerate_syt(&shape).len() as u128,
                    hook_count(&lambda),
                    "{lambda:?}"
                );
            }
        }
    }

    #[test]
    fn small_shapes() {
        assert_eq!(
            enumerate_syt(&SkewShape::straight(vec![1]).unwrap()).len(),
            1
        );
        assert_eq!(
            enumerate_syt(&SkewShape::straight(vec![]).unwrap()).len(),
            1
        );
        // A 2-cell column beside a 4-cell row: C(6,2) fillings.
        assert_eq!(enumerate_syt(&SkewShape::strip(6, 1).unwrap()).len(), 15);
        // (2,1)/(1): two disconnected cells.
        assert_eq!(enumerate_syt(&"2,1/1".parse().unwrap()).len(), 2);
    }

    #[test]
    fn all_distinct_and_standard() {
        let shape: SkewShape = "4,3,2/2,1".parse().unwrap();
        let all = enumerate_syt(&shape);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        for t in &all {
            assert!(SkewTableau::new(shape.clone(), t.rows().to_vec()).is_ok());
        }
    }

    #[test]
    fn partition_lists() {
        assert_eq!(
            partitions_with_at_most(4, 2),
            vec![vec![4], vec![3, 1], vec![2, 2]]
        );
        assert_eq!(partitions_with_at_most(0, 3), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn skew_shape_families() {
        // λ/μ with one cell and |λ| <= 2: (1), (2)/(1), (1,1)/(1).
        assert_eq!(skew_shapes(1, 2).len(), 3);
        for shape in skew_shapes(3, 6) {
            assert_eq!(shape.size(), 3);
            assert!(shape.outer().iter().sum::<usize>() <= 6);
        }
        // Every λ/μ inside a 2x2 box with two cells.
        let boxed = skew_shapes_in_box(2, 2, 2);
        let shown: Vec<String> = boxed.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["2", "1,1", "2,1/1", "2,2/2", "2,2/1,1"]);
    }
}
