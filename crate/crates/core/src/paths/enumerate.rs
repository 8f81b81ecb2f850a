use super::{MotzkinPath, Step};
use crate::error::{Error, Result};

/// Letters in the order used for enumeration (`'D' < 'L' < 'U'`).
const ALPHABETICAL: [Step; 3] = [Step::D, Step::L, Step::U];

/// Lazily yields Motzkin paths of length `n` in alphabetical order of their
/// step strings, optionally restricted to a fixed number of level steps.
#[derive(Debug, Clone)]
pub struct PathEnumerator {
    n: usize,
    horizontal: Option<usize>,
    steps: Vec<Step>,
    height: i64,
    levels: usize,
    started: bool,
    done: bool,
}

impl PathEnumerator {
    pub fn new(n: usize) -> Self {
        Self::with_horizontal(n, None)
    }

    pub fn with_horizontal(n: usize, horizontal: Option<usize>) -> Self {
        Self {
            n,
            horizontal,
            steps: Vec::with_capacity(n),
            height: 0,
            levels: 0,
            started: false,
            done: false,
        }
    }

    /// Whether the current prefix extends to a complete path.
    fn completable(&self) -> bool {
        if self.height < 0 {
            return false;
        }
        let remaining = (self.n - self.steps.len()) as i64;
        if self.height > remaining {
            return false;
        }
        match self.horizontal {
            None => true,
            Some(k) => {
                let Some(levels_left) = k.checked_sub(self.levels) else {
                    return false;
                };
                let free = remaining - self.height - levels_left as i64;
                free >= 0 && free % 2 == 0
            }
        }
    }

    fn push(&mut self, step: Step) {
        self.steps.push(step);
        self.height += step.delta();
        if step == Step::L {
            self.levels += 1;
        }
    }

    fn pop(&mut self) -> Option<Step> {
        let step = self.steps.pop()?;
        self.height -= step.delta();
        if step == Step::L {
            self.levels -= 1;
        }
        Some(step)
    }

    /// Extends a completable prefix with the alphabetically least completion.
    fn fill(&mut self) {
        while self.steps.len() < self.n {
            let mut placed = false;
            for step in ALPHABETICAL {
                self.push(step);
                if self.completable() {
                    placed = true;
                    break;
                }
                self.pop();
            }
            debug_assert!(placed);
        }
    }

    fn current(&self) -> MotzkinPath {
        MotzkinPath::from_steps_unchecked(self.steps.clone())
    }
}

impl Iterator for PathEnumerator {
    type Item = MotzkinPath;

    fn next(&mut self) -> Option<MotzkinPath> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.completable() {
                self.done = true;
                return None;
            }
            self.fill();
            return Some(self.current());
        }
        while let Some(last) = self.pop() {
            let rank = ALPHABETICAL.iter().position(|&s| s == last).unwrap();
            for &step in &ALPHABETICAL[rank + 1..] {
                self.push(step);
                if self.completable() {
                    self.fill();
                    return Some(self.current());
                }
                self.pop();
            }
        }
        self.done = true;
        None
    }
}

/// All Motzkin paths of length `n`, in alphabetical order of step strings.
pub fn enumerate_paths(n: usize) -> PathEnumerator {
    PathEnumerator::new(n)
}

/// Paths of length `n` with exactly `k` level steps (`M_{n,k}`).
pub fn enumerate_paths_fixed_horizontal(n: usize, k: usize) -> PathEnumerator {
    PathEnumerator::with_horizontal(n, Some(k))
}

/// The `n`-th Motzkin number from `m_n = m_{n-1} + Σ m_i m_{n-2-i}`.
pub fn motzkin_number(n: usize) -> Result<u128> {
    let mut m: Vec<u128> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let value = if j < 2 {
            1
        } else {
            let mut acc = m[j - 1];
            for i in 0..=j - 2 {
                let term = m[i]
                    .checked_mul(m[j - 2 - i])
                    .ok_or(Error::Overflow("motzkin number"))?;
                acc = acc
                    .checked_add(term)
                    .ok_or(Error::Overflow("motzkin number"))?;
            }
            acc
        };
        m.push(value);
    }
    Ok(m[n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(it: impl Iterator<Item = MotzkinPath>) -> Vec<String> {
        it.map(|p| p.to_string()).collect()
    }

    /// Filters all `3^n` words; independent of the enumerator.
    fn brute_force(n: usize) -> Vec<String> {
        let mut out = Vec::new();
        for code in 0..3usize.pow(n as u32) {
            let mut c = code;
            let mut word = vec!['D'; n];
            for slot in word.iter_mut().rev() {
                *slot = ['D', 'L', 'U'][c % 3];
                c /= 3;
            }
            let word: String = word.into_iter().collect();
            if MotzkinPath::parse(&word).is_ok() {
                out.push(word);
            }
        }
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(strings(enumerate_paths(0)), vec![""]);
        assert_eq!(
            strings(enumerate_paths(3)),
            vec!["LLL", "LUD", "UDL", "ULD"]
        );
        assert_eq!(
            strings(enumerate_paths_fixed_horizontal(4, 4)),
            vec!["LLLL"]
        );
        assert_eq!(
            strings(enumerate_paths_fixed_horizontal(4, 0)),
            vec!["UDUD", "UUDD"]
        );
        assert!(strings(enumerate_paths_fixed_horizontal(5, 0)).is_empty());
        assert!(strings(enumerate_paths_fixed_horizontal(3, 4)).is_empty());
    }

    #[test]
    fn matches_brute_force() {
        for n in 0..=9 {
            assert_eq!(strings(enumerate_paths(n)), brute_force(n), "n={n}");
        }
        let filtered: Vec<String> = brute_force(6)
            .into_iter()
            .filter(|w| w.matches('L').count() == 2)
            .collect();
        // C(6,2) placements of the level steps times Catalan(2) Dyck words.
        assert_eq!(filtered.len(), 30);
        assert_eq!(strings(enumerate_paths_fixed_horizontal(6, 2)), filtered);
    }

    #[test]
    fn horizontal_classes_partition() {
        for n in 0..=10 {
            let total: usize = (0..=n)
                .map(|k| enumerate_paths_fixed_horizontal(n, k).count())
                .sum();
            assert_eq!(total, enumerate_paths(n).count());
        }
    }

    #[test]
    fn restartable() {
        let e = enumerate_paths(5);
        assert_eq!(e.clone().count(), e.count());
    }

    #[test]
    fn motzkin_values() {
        let expected = [1u128, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188];
        for (n, &m) in expected.iter().enumerate() {
            assert_eq!(motzkin_number(n).unwrap(), m);
            assert_eq!(enumerate_paths(n).count() as u128, m);
        }
    }

    #[test]
    fn motzkin_overflow_reported() {
        assert!(motzkin_number(60).is_ok());
        assert_eq!(motzkin_number(200), Err(Error::Overflow("motzkin number")));
    }
}
