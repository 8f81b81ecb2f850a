//! Named suites over ranges of `n`, evaluated in parallel per `n`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    check_commutation, check_counts, check_cyclic_extension, check_equidistribution,
    check_rotation_multiset, orbit, three_row_straight_tableaux, PathAction, PromotionAction,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::paths::{
    enumerate_paths, enumerate_paths_fixed_horizontal, phi, phi_inverse, phi_prime,
    phi_prime_inverse, read_ascii, render_ascii, rho, rho_hat, rho_hat_inverse, rho_inverse, shift,
    shift_inverse, MotzkinPath, Step, StepOrder,
};
use crate::sets::{CyclicDescentSet, DescentSet};
use crate::tableaux::{
    cyclic_descent_set_3row, enumerate_syt, gamma, gamma_inverse, gamma_tilde, jdt_slide,
    promotion, rectify, rectify_with, skew_shapes, skew_shapes_in_box, CornerPolicy, SkewShape,
    SkewTableau,
};

/// Largest outer size in the slide-order family; shapes inside a 4x4 box are
/// added on top.
pub const SLIDE_OUTER_BOUND: usize = 12;

/// Operations the suites exercise; `all` covers every one of them.
pub const ALL_OPERATIONS: &[&str] = &[
    "parse_path",
    "render_path",
    "render_ascii",
    "read_ascii",
    "descent_set",
    "cyclic_descent_set",
    "enumerate_paths",
    "motzkin_number",
    "phi",
    "phi_inverse",
    "phi_prime",
    "phi_prime_inverse",
    "rho",
    "rho_inverse",
    "rho_hat",
    "rho_hat_inverse",
    "shift",
    "shift_inverse",
    "parse_set",
    "render_set",
    "gamma",
    "gamma_inverse",
    "gamma_tilde",
    "jdt_slide",
    "rectify",
    "promotion",
    "cyclic_descent_set_3row",
    "enumerate_syt",
    "parse_tableau",
    "render_tableau",
    "check_cyclic_extension",
    "check_rotation_multiset",
    "descent_distribution",
    "check_equidistribution",
    "check_commutation",
    "check_counts",
    "orbit",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Cyclic extension axioms for paths (all orders) and promotion.
    Axioms,
    /// Descent transport and equal distributions across orders.
    Equidist,
    /// `pro∘Γ = Γ∘ρ`.
    Commutation,
    /// Path and tableau counts against the Motzkin recurrence.
    Counts,
    /// Inverses, conjugation and text round trips for the path maps.
    Bijections,
    /// Γ, Γ̃, rectification and slide-order independence.
    Tableaux,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Axioms,
        Suite::Equidist,
        Suite::Commutation,
        Suite::Counts,
        Suite::Bijections,
        Suite::Tableaux,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Equidist => "equidist",
            Suite::Commutation => "commutation",
            Suite::Counts => "counts",
            Suite::Bijections => "bijections",
            Suite::Tableaux => "tableaux",
        }
    }

    fn operations(self) -> &'static [&'static str] {
        match self {
            Suite::Axioms => &[
                "enumerate_paths",
                "descent_set",
                "cyclic_descent_set",
                "shift",
                "rho",
                "rho_hat",
                "phi_prime",
                "phi_prime_inverse",
                "promotion",
                "cyclic_descent_set_3row",
                "enumerate_syt",
                "check_cyclic_extension",
                "check_rotation_multiset",
                "orbit",
                "render_path",
                "render_tableau",
            ],
            Suite::Equidist => &[
                "enumerate_paths",
                "descent_set",
                "phi",
                "phi_prime",
                "descent_distribution",
                "check_equidistribution",
                "motzkin_number",
            ],
            Suite::Commutation => &["gamma", "promotion", "rho", "check_commutation"],
            Suite::Counts => &[
                "enumerate_paths",
                "motzkin_number",
                "enumerate_syt",
                "check_counts",
            ],
            Suite::Bijections => &[
                "parse_path",
                "render_path",
                "render_ascii",
                "read_ascii",
                "phi",
                "phi_inverse",
                "phi_prime",
                "phi_prime_inverse",
                "rho",
                "rho_inverse",
                "rho_hat",
                "rho_hat_inverse",
                "shift",
                "shift_inverse",
                "parse_set",
                "render_set",
            ],
            Suite::Tableaux => &[
                "gamma",
                "gamma_inverse",
                "gamma_tilde",
                "jdt_slide",
                "rectify",
                "promotion",
                "cyclic_descent_set_3row",
                "enumerate_syt",
                "parse_tableau",
                "render_tableau",
            ],
        }
    }

    fn run_at(self, n: usize) -> VerificationReport {
        match self {
            Suite::Axioms => axioms_at(n),
            Suite::Equidist => check_equidistribution(n),
            Suite::Commutation => check_commutation(n),
            Suite::Counts => check_counts(n),
            Suite::Bijections => bijections_at(n),
            Suite::Tableaux => tableaux_at(n),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Runs one suite for every `n` in `n_min..=n_max`.
///
/// Per-`n` parameters are joined in `n` order, so `counts` over `0..=4`
/// carries `motzkin = 1,1,2,4,9`.
pub fn run_suite(suite: Suite, n_min: usize, n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let parts: Vec<VerificationReport> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| suite.run_at(n))
        .collect();
    let mut report = VerificationReport::new(suite.as_str(), n_min, n_max);
    let mut joined: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for mut part in parts {
        for (key, value) in std::mem::take(&mut part.parameters) {
            joined.entry(key).or_default().push(value);
        }
        report.absorb(part);
    }
    for (key, values) in joined {
        report.param(&key, values.join(","));
    }
    report.operations = suite.operations().iter().map(|s| s.to_string()).collect();
    report.finish(started)
}

pub fn run_all(n_min: usize, n_max: usize) -> Vec<VerificationReport> {
    Suite::ALL
        .iter()
        .map(|&suite| run_suite(suite, n_min, n_max))
        .collect()
}

fn nonlevel(n: usize) -> impl Iterator<Item = MotzkinPath> {
    enumerate_paths(n).filter(|m| !m.is_all_level())
}

fn escher_note(n: usize) -> String {
    format!("n={n}: the only non-level path UD has cDes = {{1,2}}, which is Escher; recorded as expected failure")
}

fn axioms_at(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("axioms", n, n);
    if n < 2 {
        report.notes.push(format!(
            "n={n}: no non-level paths and no strip tableaux with k > 0; vacuous"
        ));
        return report.finish(started);
    }
    for order in StepOrder::ALL {
        let label = format!("paths {order}");
        let action = PathAction(order);
        for k in (n % 2..n).step_by(2) {
            let domain: Vec<_> = enumerate_paths_fixed_horizontal(n, k).collect();
            let sub = check_cyclic_extension("axioms", &action, n, &domain).expect("n - k is even");
            absorb_labeled(&mut report, sub, &label);
            absorb_labeled(
                &mut report,
                check_rotation_multiset(n, k, order),
                &format!("{label} multiset"),
            );
        }
        if n >= 3 {
            for m in nonlevel(n) {
                report.cases_checked += 1;
                let c = m.cyclic_descent_set(order).expect("nonlevel");
                if c.has_three_cyclically_consecutive() {
                    report.fail(
                        &format!("{label}: three-consecutive"),
                        &m,
                        "no run of three",
                        &c,
                    );
                }
            }
        }
    }
    for k in 1..=n / 2 {
        let domain = enumerate_syt(&SkewShape::strip(n, k).expect("2k <= n"));
        let sub = check_cyclic_extension("axioms", &PromotionAction, n, &domain).expect("k >= 1");
        absorb_labeled(&mut report, sub, "promotion");
        if n >= 3 {
            check_orbits(&mut report, n, domain);
        }
    }
    if n == 2 {
        report.expect_failures("non-escher");
        report.notes.push(escher_note(n));
    }
    report.finish(started)
}

/// Orbits of promotion partition the family, have length dividing `n`, and
/// rotate `cDes` by one at each step.
fn check_orbits(report: &mut VerificationReport, n: usize, domain: Vec<SkewTableau>) {
    let family: HashSet<SkewTableau> = domain.into_iter().collect();
    let mut seen: HashSet<SkewTableau> = HashSet::with_capacity(family.len());
    let mut starts: Vec<&SkewTableau> = family.iter().collect();
    starts.sort();
    for start in starts {
        if seen.contains(start) {
            continue;
        }
        report.cases_checked += 1;
        match orbit(&PromotionAction, start, Some(&family)) {
            Ok(o) => {
                if n % o.len() != 0 {
                    report.fail(
                        "promotion: orbit-length",
                        start.to_compact_string(),
                        format!("a divisor of {n}"),
                        o.len(),
                    );
                }
                if !o.rotates_by_one() {
                    report.fail(
                        "promotion: orbit-rotation",
                        start.to_compact_string(),
                        "cDes rotates by one",
                        "it does not",
                    );
                }
                seen.extend(o.elements);
            }
            Err(e) => report.fail(
                "promotion: orbit",
                start.to_compact_string(),
                "a closed orbit",
                e,
            ),
        }
    }
}

fn absorb_labeled(report: &mut VerificationReport, mut sub: VerificationReport, label: &str) {
    for f in &mut sub.failures {
        f.check = format!("{label}: {}", f.check);
    }
    report.absorb(sub);
}

fn bijections_at(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("bijections", n, n);
    for m in enumerate_paths(n) {
        report.cases_checked += 1;
        let text = m.to_string();
        if MotzkinPath::parse(&text).as_ref() != Ok(&m) {
            report.fail("path-text", &m, &text, "different path");
        }
        let drawing = render_ascii(&m);
        if n > 0 && read_ascii(&drawing).as_ref() != Ok(&m) {
            report.fail("path-ascii", &m, &text, drawing.replace('\n', "\\n"));
        }
        for order in StepOrder::ALL {
            let des = m.descent_set(order);
            let back = DescentSet::parse(n, &des.to_string());
            if back.as_ref() != Ok(&des) {
                report.fail("set-text", &m, &des, format!("{back:?}"));
            }
        }
        for (name, forward, backward) in [
            (
                "phi",
                phi as fn(&MotzkinPath) -> MotzkinPath,
                phi_inverse as fn(&MotzkinPath) -> MotzkinPath,
            ),
            ("phi_prime", phi_prime, phi_prime_inverse),
        ] {
            let image = forward(&m);
            check_path_image(&mut report, name, &m, &image);
            if backward(&image) != m {
                report.fail(&format!("{name}-inverse"), &m, &m, backward(&image));
            }
        }
    }
    for order in StepOrder::ALL {
        let mut images = HashSet::new();
        for m in nonlevel(n) {
            report.cases_checked += 1;
            let image = shift(&m, order).expect("nonlevel");
            check_path_image(&mut report, &format!("shift {order}"), &m, &image);
            if shift_inverse(&image, order).as_ref() != Ok(&m) {
                report.fail(
                    &format!("shift {order}: inverse"),
                    &m,
                    &m,
                    format!("{:?}", shift_inverse(&image, order)),
                );
            }
            let c = m.cyclic_descent_set(order).expect("nonlevel");
            if CyclicDescentSet::parse(n, &c.to_string()).as_ref() != Ok(&c) {
                report.fail("set-text", &m, &c, "did not round-trip");
            }
            images.insert(image);
        }
        let domain = nonlevel(n).count();
        if images.len() != domain {
            report.fail(
                &format!("shift {order}: bijection"),
                n,
                domain,
                images.len(),
            );
        }
    }
    for m in nonlevel(n) {
        report.cases_checked += 1;
        let r = rho(&m).expect("nonlevel");
        let h = rho_hat(&m).expect("nonlevel");
        if rho_inverse(&r).as_ref() != Ok(&m) {
            report.fail("rho-inverse", &m, &m, format!("{:?}", rho_inverse(&r)));
        }
        if rho_hat_inverse(&h).as_ref() != Ok(&m) {
            report.fail(
                "rho-hat-inverse",
                &m,
                &m,
                format!("{:?}", rho_hat_inverse(&h)),
            );
        }
        let conjugated = phi(&rho_hat(&phi_inverse(&m)).expect("phi keeps nonlevel"));
        if conjugated != r {
            report.fail("rho-conjugation", &m, &r, &conjugated);
        }
    }
    report.finish(started)
}

/// The image is a valid path with the same step counts.
fn check_path_image(
    report: &mut VerificationReport,
    name: &str,
    m: &MotzkinPath,
    image: &MotzkinPath,
) {
    if MotzkinPath::new(image.steps().to_vec()).is_err() {
        report.fail(&format!("{name}: valid"), m, "a Motzkin path", image);
    }
    for step in Step::ALL {
        if image.count(step) != m.count(step) {
            report.fail(
                &format!("{name}: step-count"),
                m,
                m.count(step),
                image.count(step),
            );
        }
    }
}

fn tableaux_at(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("tableaux", n, n);
    let mut rectified = HashSet::new();
    for m in enumerate_paths(n) {
        report.cases_checked += 1;
        let t = gamma(&m);
        let des = m.descent_set(StepOrder::Udl);
        if t.descent_set() != des {
            report.fail("gamma-des", &m, &des, t.descent_set());
        }
        if gamma_inverse(&t).as_ref() != Ok(&m) {
            report.fail("gamma-inverse", &m, &m, format!("{:?}", gamma_inverse(&t)));
        }
        check_tableau_text(&mut report, &t);
        let straight = gamma_tilde(&m);
        if straight != rectify(&t) {
            report.fail("gamma-tilde", &m, rectify(&t), &straight);
        }
        if !straight.shape().is_straight() || straight.shape().num_rows() > 3 {
            report.fail(
                "gamma-tilde-shape",
                &m,
                "straight, at most 3 rows",
                straight.shape(),
            );
        }
        if straight.descent_set() != des {
            report.fail("rectify-des", &m, &des, straight.descent_set());
        }
        let top = rectify_with(&t, CornerPolicy::TopMost);
        if top != straight {
            report.fail("slide-order", &t, &straight, &top);
        }
        check_tableau_text(&mut report, &straight);
        rectified.insert(straight);
        if !m.is_all_level() {
            let want = m.cyclic_descent_set(StepOrder::Udl).expect("nonlevel");
            match cyclic_descent_set_3row(&t) {
                Ok(c) if c == want => {}
                got => report.fail("cdes-transport", &m, &want, format!("{got:?}")),
            }
            let p = promotion(&t);
            if SkewTableau::new(p.shape().clone(), p.rows().to_vec()).is_err() {
                report.fail("promotion-standard", &t, "a standard tableau", &p);
            }
        }
    }
    let target: HashSet<SkewTableau> = three_row_straight_tableaux(n).into_iter().collect();
    if rectified != target {
        report.fail("gamma-tilde-bijection", n, target.len(), rectified.len());
    }
    if n <= 10 {
        let mut slides = check_slide_order_independence(n);
        slides.parameters.clear();
        report.absorb(slides);
    } else {
        report.notes.push(format!(
            "n={n}: slide-order family check runs only up to 10 cells"
        ));
    }
    report.finish(started)
}

/// Skew shapes with `cells` cells in the slide-order family.
pub fn slide_order_shapes(cells: usize) -> Vec<SkewShape> {
    let mut shapes = skew_shapes(cells, SLIDE_OUTER_BOUND);
    let known: HashSet<SkewShape> = shapes.iter().cloned().collect();
    shapes.extend(
        skew_shapes_in_box(cells, 4, 4)
            .into_iter()
            .filter(|s| !known.contains(s)),
    );
    shapes
}

/// Every tableau on the slide-order family with `cells` cells rectifies to the
/// same tableau under both corner policies, and slides keep descents.
pub fn check_slide_order_independence(cells: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("slide-order", cells, cells);
    let shapes = slide_order_shapes(cells);
    report.param("shapes", shapes.len());
    for shape in shapes {
        for t in enumerate_syt(&shape) {
            report.cases_checked += 1;
            let bottom = rectify(&t);
            let top = rectify_with(&t, CornerPolicy::TopMost);
            if bottom != top {
                report.fail("slide-order", &t, &bottom, &top);
            }
            if bottom.descent_set() != t.descent_set() {
                report.fail("rectify-des", &t, t.descent_set(), bottom.descent_set());
            }
            if let Some(&corner) = shape.inner_corners().first() {
                match jdt_slide(&t, corner) {
                    Ok(s) if s.descent_set() == t.descent_set() => {}
                    got => report.fail("slide-des", &t, t.descent_set(), format!("{got:?}")),
                }
            }
        }
    }
    report.finish(started)
}

fn check_tableau_text(report: &mut VerificationReport, t: &SkewTableau) {
    let full = t.to_string();
    if SkewTableau::parse(&full).as_ref() != Ok(t) {
        report.fail("tableau-text", t, &full, "did not round-trip");
    }
    if SkewTableau::parse_compact(t.shape().clone(), &t.to_compact_string()).as_ref() != Ok(t) {
        report.fail(
            "tableau-compact-text",
            t,
            t.to_compact_string(),
            "did not round-trip",
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        for report in run_all(3, 7) {
            assert!(report.passed, "{}: {:?}", report.suite, report.failures);
            assert!(report.cases_checked > 0);
        }
    }

    #[test]
    fn escher_case_is_expected() {
        let r = run_suite(Suite::Axioms, 2, 2);
        assert!(r.passed);
        assert!(r.expected_failures.iter().any(|f| f.witness == "UD"));
        assert_eq!(r.notes.len(), 1);
        let vacuous = run_suite(Suite::Axioms, 0, 1);
        assert!(vacuous.passed);
        assert_eq!(vacuous.notes.len(), 2);
    }

    #[test]
    fn counts_parameters() {
        let r = run_suite(Suite::Counts, 0, 10);
        assert!(r.passed);
        assert_eq!(r.parameters["motzkin"], "1,1,2,4,9,21,51,127,323,835,2188");
    }

    #[test]
    fn deterministic_reports() {
        let mut a = run_suite(Suite::Bijections, 2, 6);
        let mut b = run_suite(Suite::Bijections, 2, 6);
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a.to_document(), b.to_document());
    }

    #[test]
    fn operation_coverage() {
        let covered: HashSet<&str> = Suite::ALL
            .iter()
            .flat_map(|s| s.operations().iter().copied())
            .collect();
        for op in ALL_OPERATIONS {
            assert!(covered.contains(op), "{op}");
        }
        assert_eq!(covered.len(), ALL_OPERATIONS.len());
    }

    #[test]
    fn suite_names() {
        for suite in Suite::ALL {
            assert_eq!(suite.as_str().parse::<Suite>().unwrap(), suite);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
