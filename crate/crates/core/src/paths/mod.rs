//! Motzkin paths, their descent statistics under the three admissible step
//! orders, and the bijections that shift cyclic descents.
//!
//! Public indices are 1-based: step `i` is the `i`-th character of the path
//! string, and descent sets are subsets of `{1, ..., n-1}`.

mod ascii;
mod enumerate;
mod shift;
mod transport;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{CyclicDescentSet, DescentSet};

pub use ascii::{read_ascii, render_ascii};
pub use enumerate::{
    enumerate_paths, enumerate_paths_fixed_horizontal, motzkin_number, PathEnumerator,
};
pub use shift::{rho, rho_hat, rho_hat_inverse, rho_inverse, shift, shift_inverse};
pub use transport::{phi, phi_inverse, phi_prime, phi_prime_inverse};

/// A single step: up `(1,1)`, down `(1,-1)` or level `(1,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    L,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::U, Step::D, Step::L];

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::L => 'L',
        }
    }

    /// Accepts either case.
    pub fn from_char(ch: char) -> Option<Step> {
        match ch.to_ascii_uppercase() {
            'U' => Some(Step::U),
            'D' => Some(Step::D),
            'L' => Some(Step::L),
            _ => None,
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::L => 0,
        }
    }
}

/// One of the three total orders on step types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepOrder {
    /// `U > D > L`
    #[serde(rename = "UDL")]
    Udl,
    /// `U > L > D`
    #[serde(rename = "ULD")]
    Uld,
    /// `L > U > D`
    #[serde(rename = "LUD")]
    Lud,
}

impl StepOrder {
    pub const ALL: [StepOrder; 3] = [StepOrder::Udl, StepOrder::Uld, StepOrder::Lud];

    /// Rank of `step`; larger means higher in the order.
    pub fn rank(self, step: Step) -> u8 {
        match (self, step) {
            (StepOrder::Udl, Step::U) => 2,
            (StepOrder::Udl, Step::D) => 1,
            (StepOrder::Udl, Step::L) => 0,
            (StepOrder::Uld, Step::U) => 2,
            (StepOrder::Uld, Step::L) => 1,
            (StepOrder::Uld, Step::D) => 0,
            (StepOrder::Lud, Step::L) => 2,
            (StepOrder::Lud, Step::U) => 1,
            (StepOrder::Lud, Step::D) => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StepOrder::Udl => "UDL",
            StepOrder::Uld => "ULD",
            StepOrder::Lud => "LUD",
        }
    }
}

impl fmt::Display for StepOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StepOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "UDL" => Ok(StepOrder::Udl),
            "ULD" => Ok(StepOrder::Uld),
            "LUD" => Ok(StepOrder::Lud),
            _ => Err(Error::InvalidOrder(s.to_string())),
        }
    }
}

/// A lattice path from `(0,0)` to `(n,0)` with steps `U`, `D`, `L` that never
/// passes below the x-axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, step) in steps.iter().enumerate() {
            height += step.delta();
            if height < 0 {
                return Err(Error::NotAPath { index: i + 1 });
            }
        }
        if height != 0 {
            return Err(Error::NotAPath { index: steps.len() });
        }
        Ok(Self { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok(), "invalid path {steps:?}");
        Self { steps }
    }

    /// Parses a word over `{U, D, L}` (either case).
    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(index, ch)| Step::from_char(ch).ok_or(Error::InvalidCharacter { ch, index }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn all_level(n: usize) -> Self {
        Self {
            steps: vec![Step::L; n],
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Number of level steps, `|M|_L`.
    pub fn horizontal_count(&self) -> usize {
        self.count(Step::L)
    }

    /// `L^n`, including the empty path.
    pub fn is_all_level(&self) -> bool {
        self.steps.iter().all(|&s| s == Step::L)
    }

    /// Heights of the `n + 1` lattice points visited.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0i64;
        out.push(0);
        for s in &self.steps {
            h += s.delta();
            out.push(h as usize);
        }
        out
    }

    /// 0-based positions of `D` steps ending on the axis.
    pub(crate) fn return_positions(&self) -> Vec<usize> {
        let mut h = 0i64;
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            h += s.delta();
            if *s == Step::D && h == 0 {
                out.push(i);
            }
        }
        out
    }

    /// 0-based positions of `U` steps starting on the axis.
    pub(crate) fn start_positions(&self) -> Vec<usize> {
        let mut h = 0i64;
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            if *s == Step::U && h == 0 {
                out.push(i);
            }
            h += s.delta();
        }
        out
    }

    /// 1-based indices of the returns.
    pub fn returns(&self) -> Vec<usize> {
        self.return_positions().into_iter().map(|i| i + 1).collect()
    }

    /// 1-based indices of the starts.
    pub fn starts(&self) -> Vec<usize> {
        self.start_positions().into_iter().map(|i| i + 1).collect()
    }

    /// `i` is a descent when step `i` ranks above step `i+1` under `order`.
    pub fn descent_set(&self, order: StepOrder) -> DescentSet {
        let members = self
            .steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| order.rank(w[0]) > order.rank(w[1]))
            .map(|(i, _)| i + 1)
            .collect();
        DescentSet::from_sorted(self.steps.len(), members)
    }

    /// Cyclic extension of [`descent_set`](Self::descent_set) for `order`.
    ///
    /// Fails with [`Error::AllLevelPath`] on `L^n` (including the empty path).
    pub fn cyclic_descent_set(&self, order: StepOrder) -> Result<CyclicDescentSet> {
        if self.is_all_level() {
            return Err(Error::AllLevelPath);
        }
        let wraps = match order {
            StepOrder::Udl => self.wraps_udl(),
            StepOrder::Uld => self.wraps_uld(),
            StepOrder::Lud => return phi_prime(self).cyclic_descent_set(StepOrder::Uld),
        };
        Ok(CyclicDescentSet::extend(&self.descent_set(order), wraps))
    }

    fn wraps_udl(&self) -> bool {
        let (first, last) = (self.steps[0], self.steps[self.steps.len() - 1]);
        last == Step::D
            && match first {
                Step::L => true,
                Step::U => self.return_positions().len() == 1,
                Step::D => unreachable!("path cannot start with D"),
            }
    }

    fn wraps_uld(&self) -> bool {
        let returns = self.return_positions();
        // Not all-level, so at least one return exists; a return is never step 1.
        let before = |r: usize| self.steps[r - 1];
        match self.steps[0] {
            Step::L => before(*returns.last().unwrap()) != Step::L,
            Step::U => returns.len() == 1 && before(returns[0]) != Step::L,
            Step::D => unreachable!("path cannot start with D"),
        }
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for MotzkinPath {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MotzkinPath {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Self::parse(&text).map_err(serde::de::Error::custom)
    }
}
