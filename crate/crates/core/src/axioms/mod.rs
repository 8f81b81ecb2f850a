//! Exhaustive verification of cyclic descent extensions and the supporting
//! identities, with structured reports.

mod report;
mod suite;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Display;
use std::hash::Hash;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::{
    enumerate_paths, enumerate_paths_fixed_horizontal, motzkin_number, phi, phi_prime, rho, shift,
    MotzkinPath, StepOrder,
};
use crate::sets::{CyclicDescentSet, DescentSet};
use crate::tableaux::{
    cyclic_descent_set_3row, enumerate_syt, gamma, partitions_with_at_most, promotion, SkewShape,
    SkewTableau,
};

pub use report::{reports_from_document, reports_to_document, Failure, VerificationReport};
pub use suite::{
    check_slide_order_independence, run_all, run_suite, slide_order_shapes, Suite, ALL_OPERATIONS,
    SLIDE_OUTER_BOUND,
};

/// A descent map with a candidate cyclic extension `(cDes, shift)`.
pub trait CyclicAction {
    type Item: Clone + Eq + Hash + Display;

    fn descents(&self, item: &Self::Item) -> DescentSet;
    fn cyclic_descents(&self, item: &Self::Item) -> Result<CyclicDescentSet>;
    fn shift(&self, item: &Self::Item) -> Result<Self::Item>;
}

/// Path statistics under one step order, shifted by [`shift`].
#[derive(Debug, Clone, Copy)]
pub struct PathAction(pub StepOrder);

impl CyclicAction for PathAction {
    type Item = MotzkinPath;

    fn descents(&self, item: &MotzkinPath) -> DescentSet {
        item.descent_set(self.0)
    }

    fn cyclic_descents(&self, item: &MotzkinPath) -> Result<CyclicDescentSet> {
        item.cyclic_descent_set(self.0)
    }

    fn shift(&self, item: &MotzkinPath) -> Result<MotzkinPath> {
        shift(item, self.0)
    }
}

/// Strip-shape tableaux with the three-row cyclic descent set and promotion.
#[derive(Debug, Clone, Copy)]
pub struct PromotionAction;

impl CyclicAction for PromotionAction {
    type Item = SkewTableau;

    fn descents(&self, item: &SkewTableau) -> DescentSet {
        item.descent_set()
    }

    fn cyclic_descents(&self, item: &SkewTableau) -> Result<CyclicDescentSet> {
        cyclic_descent_set_3row(item)
    }

    fn shift(&self, item: &SkewTableau) -> Result<SkewTableau> {
        Ok(promotion(item))
    }
}

/// Checks extension, equivariance and non-Escher on every element of
/// `domain`, and that the shift permutes `domain`.
pub fn check_cyclic_extension<A: CyclicAction>(
    suite: &str,
    action: &A,
    n: usize,
    domain: &[A::Item],
) -> Result<VerificationReport> {
    if domain.is_empty() {
        return Err(Error::DomainEmpty);
    }
    let started = Instant::now();
    let mut report = VerificationReport::new(suite, n, n);
    let members: HashSet<&A::Item> = domain.iter().collect();
    let mut preimages: HashMap<A::Item, &A::Item> = HashMap::with_capacity(domain.len());
    for item in domain {
        report.cases_checked += 1;
        let witness = item.to_string();
        let cdes = match action.cyclic_descents(item) {
            Ok(c) => c,
            Err(e) => {
                report.fail("cdes-defined", &witness, "a cyclic descent set", e);
                continue;
            }
        };
        let des = action.descents(item);
        if cdes.restrict() != des {
            report.fail("extension", &witness, &des, cdes.restrict());
        }
        if !cdes.is_non_escher() {
            report.fail(
                "non-escher",
                &witness,
                format!("proper nonempty subset of 1..={n}"),
                &cdes,
            );
        }
        let image = match action.shift(item) {
            Ok(image) => image,
            Err(e) => {
                report.fail("shift-defined", &witness, "an image", e);
                continue;
            }
        };
        if !members.contains(&image) {
            report.fail("closure", &witness, "image inside the domain", &image);
            continue;
        }
        if let Some(other) = preimages.insert(image.clone(), item) {
            report.fail(
                "bijection",
                &witness,
                "distinct images",
                format!("same image as {other}"),
            );
        }
        match action.cyclic_descents(&image) {
            Ok(after) if after == cdes.rotate(1) => {}
            Ok(after) => report.fail("equivariance", &witness, cdes.rotate(1), after),
            Err(e) => report.fail("equivariance", &witness, cdes.rotate(1), e),
        }
    }
    report.param("n", n);
    Ok(report.finish(started))
}

/// The multiset `{cDes(M) : M in M_{n,k}}` is invariant under `+1 mod n`,
/// and each member is non-Escher. `L^n` is left out of the domain.
pub fn check_rotation_multiset(n: usize, k: usize, order: StepOrder) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("rotation-multiset", n, n);
    report.param("k", k);
    report.param("order", order);
    let mut counts: HashMap<CyclicDescentSet, u64> = HashMap::new();
    for m in enumerate_paths_fixed_horizontal(n, k).filter(|m| !m.is_all_level()) {
        report.cases_checked += 1;
        match m.cyclic_descent_set(order) {
            Ok(c) => {
                if !c.is_non_escher() {
                    report.fail(
                        "non-escher",
                        &m,
                        format!("proper nonempty subset of 1..={n}"),
                        &c,
                    );
                }
                *counts.entry(c).or_default() += 1;
            }
            Err(e) => report.fail("cdes-defined", &m, "a cyclic descent set", e),
        }
    }
    let mut sets: Vec<_> = counts.keys().cloned().collect();
    sets.sort();
    for set in sets {
        let here = counts[&set];
        let rotated = counts.get(&set.rotate(1)).copied().unwrap_or(0);
        if here != rotated {
            report.fail("rotation", set.to_string(), here, rotated);
        }
    }
    report.finish(started)
}

/// Multiplicities of descent sets over `M_n` for one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionTable {
    pub n: usize,
    pub order: StepOrder,
    #[serde(serialize_with = "keys_as_text")]
    pub counts: BTreeMap<DescentSet, u64>,
}

fn keys_as_text<S: serde::Serializer>(
    counts: &BTreeMap<DescentSet, u64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_map(counts.iter().map(|(k, v)| (k.to_string(), v)))
}

impl DistributionTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

pub fn descent_distribution(n: usize, order: StepOrder) -> DistributionTable {
    let mut counts = BTreeMap::new();
    for m in enumerate_paths(n) {
        *counts.entry(m.descent_set(order)).or_default() += 1;
    }
    DistributionTable { n, order, counts }
}

/// The three descent distributions agree, and `phi`, `phi_prime` carry
/// descents between orders pointwise.
pub fn check_equidistribution(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("equidistribution", n, n);
    for m in enumerate_paths(n) {
        report.cases_checked += 1;
        let (uld, lud) = (m.descent_set(StepOrder::Uld), m.descent_set(StepOrder::Lud));
        let via_phi = phi(&m).descent_set(StepOrder::Udl);
        if uld != via_phi {
            report.fail("phi-transport", &m, &uld, &via_phi);
        }
        let via_phi_prime = phi_prime(&m).descent_set(StepOrder::Uld);
        if lud != via_phi_prime {
            report.fail("phi-prime-transport", &m, &lud, &via_phi_prime);
        }
    }
    let base = descent_distribution(n, StepOrder::Udl);
    let expected_total = motzkin_number(n).map(|v| v as u64).unwrap_or(u64::MAX);
    for order in StepOrder::ALL {
        let table = descent_distribution(n, order);
        if table.total() != expected_total {
            report.fail("table-total", order, expected_total, table.total());
        }
        if table.counts != base.counts {
            report.fail(
                "equidistribution",
                order,
                "same table as UDL",
                "tables differ",
            );
        }
    }
    report.param("distinct_descent_sets", base.counts.len());
    report.finish(started)
}

/// `promotion(gamma(M)) = gamma(rho(M))` on `M*_n`.
pub fn check_commutation(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("commutation", n, n);
    for m in enumerate_paths(n).filter(|m| !m.is_all_level()) {
        report.cases_checked += 1;
        let lhs = promotion(&gamma(&m));
        let rhs = gamma(&rho(&m).expect("nonlevel path"));
        if lhs != rhs {
            report.fail("pro-gamma", &m, &rhs, &lhs);
        }
    }
    report.finish(started)
}

/// Straight standard tableaux with `n` cells and at most three rows.
pub fn three_row_straight_tableaux(n: usize) -> Vec<SkewTableau> {
    partitions_with_at_most(n, 3)
        .into_iter()
        .flat_map(|lambda| enumerate_syt(&SkewShape::straight(lambda).expect("partition")))
        .collect()
}

/// `|M_n| = m_n = Σ_k |SYT(strip(n,k))| = |SYT, ≤ 3 rows, n cells|`.
pub fn check_counts(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("counts", n, n);
    report.cases_checked = 1;
    let paths = enumerate_paths(n).count() as u128;
    let strips: u128 = (0..=n / 2)
        .map(|k| enumerate_syt(&SkewShape::strip(n, k).expect("2k <= n")).len() as u128)
        .sum();
    let straight = three_row_straight_tableaux(n).len() as u128;
    match motzkin_number(n) {
        Ok(m) => {
            report.param("motzkin", m);
            for (label, value) in [
                ("paths", paths),
                ("strip-tableaux", strips),
                ("three-row-tableaux", straight),
            ] {
                if value != m {
                    report.fail("count", label, m, value);
                }
            }
        }
        Err(e) => report.fail("count", "motzkin", "a value", e),
    }
    report.param("paths", paths);
    report.param("strip_tableaux", strips);
    report.param("three_row_tableaux", straight);
    report.finish(started)
}

/// An orbit of a shift together with the cyclic descent set of each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord<T> {
    pub elements: Vec<T>,
    pub cdes_sequence: Vec<CyclicDescentSet>,
}

impl<T> OrbitRecord<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Each cyclic descent set is the previous one shifted by `+1 mod n`.
    pub fn rotates_by_one(&self) -> bool {
        let len = self.cdes_sequence.len();
        (0..len).all(|i| self.cdes_sequence[(i + 1) % len] == self.cdes_sequence[i].rotate(1))
    }
}

/// Iterates the shift from `start` until it returns.
///
/// Fails with [`Error::NonClosure`] if an element leaves `family` (when one is
/// given) or if no return happens within `family.len()` (or `2^24`) steps.
pub fn orbit<A: CyclicAction>(
    action: &A,
    start: &A::Item,
    family: Option<&HashSet<A::Item>>,
) -> Result<OrbitRecord<A::Item>> {
    let limit = family.map_or(1 << 24, HashSet::len);
    let mut elements = vec![start.clone()];
    let mut cdes_sequence = vec![action.cyclic_descents(start)?];
    loop {
        let next = action.shift(elements.last().unwrap())?;
        if next == *start {
            return Ok(OrbitRecord {
                elements,
                cdes_sequence,
            });
        }
        if family.is_some_and(|f| !f.contains(&next)) || elements.len() >= limit {
            return Err(Error::NonClosure(next.to_string()));
        }
        cdes_sequence.push(action.cyclic_descents(&next)?);
        elements.push(next);
    }
}
