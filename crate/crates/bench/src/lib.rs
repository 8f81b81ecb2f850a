//! Fixtures shared by the benchmarks.

use motzkin_core::paths::enumerate_paths;
use motzkin_core::tableaux::{enumerate_syt, SkewShape};
use motzkin_core::{MotzkinPath, SkewTableau};

/// `M*_n`: every path of length `n` except `L^n`.
pub fn nonlevel_paths(n: usize) -> Vec<MotzkinPath> {
    enumerate_paths(n).filter(|m| !m.is_all_level()).collect()
}

/// Every tableau on every strip shape of size `n`.
pub fn strip_tableaux(n: usize) -> Vec<SkewTableau> {
    (0..=n / 2)
        .flat_map(|k| enumerate_syt(&SkewShape::strip(n, k).expect("2k <= n")))
        .collect()
}
