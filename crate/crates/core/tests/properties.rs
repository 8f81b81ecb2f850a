use motzkin_core::paths::{
    phi, phi_inverse, phi_prime, phi_prime_inverse, read_ascii, render_ascii, rho, rho_hat, shift,
    shift_inverse,
};
use motzkin_core::tableaux::{
    cyclic_descent_set_3row, gamma, gamma_inverse, jdt_slide, promotion, rectify, rectify_with,
    CornerPolicy,
};
use motzkin_core::{
    CyclicDescentSet, DescentSet, MotzkinPath, SkewShape, SkewTableau, Step, StepOrder,
};
use proptest::prelude::*;

/// Turns arbitrary choices into a valid path: at each position pick among the
/// steps that still allow a return to height zero.
fn path_from_choices(choices: &[u8]) -> MotzkinPath {
    let n = choices.len();
    let mut height = 0usize;
    let mut steps = Vec::with_capacity(n);
    for (i, &c) in choices.iter().enumerate() {
        let left = n - i - 1;
        let mut allowed = Vec::with_capacity(3);
        if height < left {
            allowed.push(Step::U);
        }
        if height > 0 {
            allowed.push(Step::D);
        }
        if height <= left {
            allowed.push(Step::L);
        }
        let step = allowed[c as usize % allowed.len()];
        match step {
            Step::U => height += 1,
            Step::D => height -= 1,
            Step::L => {}
        }
        steps.push(step);
    }
    MotzkinPath::new(steps).unwrap()
}

fn paths(max: usize) -> impl Strategy<Value = MotzkinPath> {
    prop::collection::vec(any::<u8>(), 0..=max).prop_map(|c| path_from_choices(&c))
}

fn nonlevel_paths(max: usize) -> impl Strategy<Value = MotzkinPath> {
    paths(max).prop_filter("needs a U step", |m| !m.is_all_level())
}

fn orders() -> impl Strategy<Value = StepOrder> {
    prop::sample::select(StepOrder::ALL.to_vec())
}

/// Random skew shape with at most `max_cells` cells and a random standard
/// filling, built by adding one addable cell at a time.
fn skew_tableaux(max_cells: usize) -> impl Strategy<Value = SkewTableau> {
    (
        prop::collection::vec(1usize..=6, 1..=5),
        prop::collection::vec(0usize..=6, 0..=5),
        prop::collection::vec(any::<u16>(), max_cells),
    )
        .prop_filter_map(
            "shape too large or empty",
            move |(mut outer, raw_inner, picks)| {
                outer.sort_unstable_by(|a, b| b.cmp(a));
                let mut inner: Vec<usize> = raw_inner
                    .iter()
                    .zip(&outer)
                    .map(|(&i, &o)| i.min(o))
                    .collect();
                for i in 1..inner.len() {
                    inner[i] = inner[i].min(inner[i - 1]);
                }
                let shape = SkewShape::new(outer, inner).ok()?;
                if shape.size() == 0 || shape.size() > max_cells {
                    return None;
                }
                Some(random_filling(&shape, &picks))
            },
        )
}

fn random_filling(shape: &SkewShape, picks: &[u16]) -> SkewTableau {
    let outer = shape.outer();
    let inner: Vec<usize> = (0..outer.len())
        .map(|r| shape.inner().get(r).copied().unwrap_or(0))
        .collect();
    let mut filled = inner.clone();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); outer.len()];
    for value in 1..=shape.size() {
        let addable: Vec<usize> = (0..outer.len())
            .filter(|&r| filled[r] < outer[r] && (r == 0 || filled[r - 1] > filled[r]))
            .collect();
        let r = addable[picks[value - 1] as usize % addable.len()];
        filled[r] += 1;
        rows[r].push(value);
    }
    SkewTableau::new(shape.clone(), rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn path_text_round_trips(m in paths(40)) {
        prop_assert_eq!(MotzkinPath::parse(&m.to_string()).unwrap(), m.clone());
        if !m.is_empty() {
            prop_assert_eq!(read_ascii(&render_ascii(&m)).unwrap(), m);
        }
    }

    #[test]
    fn descents_never_three_in_a_row(m in paths(40), order in orders()) {
        prop_assert!(!m.descent_set(order).has_three_consecutive());
    }

    #[test]
    fn cyclic_extension_axioms(m in nonlevel_paths(40), order in orders()) {
        let n = m.len();
        let c = m.cyclic_descent_set(order).unwrap();
        prop_assert_eq!(c.restrict(), m.descent_set(order));
        let image = shift(&m, order).unwrap();
        prop_assert_eq!(image.cyclic_descent_set(order).unwrap(), c.rotate(1));
        prop_assert_eq!(shift_inverse(&image, order).unwrap(), m.clone());
        if n >= 3 {
            prop_assert!(c.is_non_escher());
            prop_assert!(!c.has_three_cyclically_consecutive());
        }
    }

    #[test]
    fn level_paths_have_no_cyclic_descents(n in 0usize..30, order in orders()) {
        prop_assert!(MotzkinPath::all_level(n).cyclic_descent_set(order).is_err());
    }

    #[test]
    fn transports(m in paths(40)) {
        prop_assert_eq!(phi_inverse(&phi(&m)), m.clone());
        prop_assert_eq!(phi_prime_inverse(&phi_prime(&m)), m.clone());
        prop_assert_eq!(m.descent_set(StepOrder::Uld), phi(&m).descent_set(StepOrder::Udl));
        prop_assert_eq!(m.descent_set(StepOrder::Lud), phi_prime(&m).descent_set(StepOrder::Uld));
    }

    #[test]
    fn shifts_keep_level_steps(m in nonlevel_paths(40)) {
        prop_assert_eq!(rho(&m).unwrap().count(Step::L), m.count(Step::L));
        prop_assert_eq!(rho_hat(&m).unwrap().count(Step::L), m.count(Step::L));
        prop_assert_eq!(phi(&rho_hat(&phi_inverse(&m)).unwrap()), rho(&m).unwrap());
    }

    #[test]
    fn gamma_properties(m in nonlevel_paths(30)) {
        let t = gamma(&m);
        prop_assert_eq!(t.descent_set(), m.descent_set(StepOrder::Udl));
        prop_assert_eq!(gamma_inverse(&t).unwrap(), m.clone());
        prop_assert_eq!(cyclic_descent_set_3row(&t).unwrap(), m.cyclic_descent_set(StepOrder::Udl).unwrap());
        prop_assert_eq!(promotion(&t), gamma(&rho(&m).unwrap()));
        prop_assert_eq!(SkewTableau::parse_strip(&t.to_compact_string()).unwrap(), t);
    }

    #[test]
    fn promotion_has_order_n(m in nonlevel_paths(16)) {
        let t = gamma(&m);
        let mut p = t.clone();
        for _ in 0..m.len() {
            p = promotion(&p);
        }
        prop_assert_eq!(p, t);
    }

    #[test]
    fn rectification(t in skew_tableaux(12)) {
        let r = rectify(&t);
        prop_assert!(r.shape().is_straight());
        prop_assert!(SkewTableau::new(r.shape().clone(), r.rows().to_vec()).is_ok());
        prop_assert_eq!(r.descent_set(), t.descent_set());
        prop_assert_eq!(rectify_with(&t, CornerPolicy::TopMost), r);
        for corner in t.shape().inner_corners() {
            let s = jdt_slide(&t, corner).unwrap();
            prop_assert_eq!(s.descent_set(), t.descent_set());
            prop_assert_eq!(s.size(), t.size());
        }
    }

    #[test]
    fn tableau_text_round_trips(t in skew_tableaux(12)) {
        prop_assert_eq!(SkewTableau::parse(&t.to_string()).unwrap(), t.clone());
        prop_assert_eq!(t.to_string().parse::<SkewTableau>().unwrap(), t.clone());
        let p = promotion(&t);
        prop_assert!(SkewTableau::new(p.shape().clone(), p.rows().to_vec()).is_ok());
    }

    #[test]
    fn set_round_trips(n in 1usize..30, bits in any::<u32>(), by in 0usize..60) {
        let members: Vec<usize> = (1..=n).filter(|i| bits >> (i - 1) & 1 == 1).collect();
        let c = CyclicDescentSet::new(n, members.clone()).unwrap();
        prop_assert_eq!(CyclicDescentSet::parse(n, &c.to_string()).unwrap(), c.clone());
        prop_assert_eq!(c.rotate(by).rotate(n - by % n), c.clone());
        prop_assert_eq!(c.rotate(n), c.clone());
        let d = c.restrict();
        prop_assert_eq!(DescentSet::parse(n, &d.to_string()).unwrap(), d.clone());
        prop_assert_eq!(CyclicDescentSet::extend(&d, c.contains(n)), c);
    }
}
