//! Descent-transporting bijections between the step orders.
//!
//! `phi` keeps every `U` in place; inside each maximal `U`-free block it turns
//! each `LD` descent into `DL` in place and reverses the descent-free stretches
//! between them (`D^a L^b -> L^b D^a`). It sends `U>L>D` descents to `U>D>L`
//! descents. `phi_prime` does the same with `D` fixed, `LU -> UL` and
//! `U^a L^b -> L^b U^a`, sending `L>U>D` descents to `U>L>D` descents.

use super::{MotzkinPath, Step};

/// Rewrites each block between occurrences of `fixed`: every adjacent
/// `(first, second)` pair becomes `(second, first)` and the stretches between
/// such pairs are reversed.
fn rewrite_blocks(path: &MotzkinPath, fixed: Step, first: Step, second: Step) -> MotzkinPath {
    let steps = path.steps();
    let mut out = Vec::with_capacity(steps.len());
    let mut stretch: Vec<Step> = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        let s = steps[i];
        if s == fixed {
            out.extend(stretch.drain(..).rev());
            out.push(s);
            i += 1;
        } else if s == first && steps.get(i + 1) == Some(&second) {
            out.extend(stretch.drain(..).rev());
            out.push(second);
            out.push(first);
            i += 2;
        } else {
            stretch.push(s);
            i += 1;
        }
    }
    out.extend(stretch.drain(..).rev());
    MotzkinPath::from_steps_unchecked(out)
}

/// `Des_{ULD}(M) = Des_{UDL}(phi(M))`.
pub fn phi(path: &MotzkinPath) -> MotzkinPath {
    rewrite_blocks(path, Step::U, Step::L, Step::D)
}

pub fn phi_inverse(path: &MotzkinPath) -> MotzkinPath {
    rewrite_blocks(path, Step::U, Step::D, Step::L)
}

/// `Des_{LUD}(M) = Des_{ULD}(phi_prime(M))`.
pub fn phi_prime(path: &MotzkinPath) -> MotzkinPath {
    rewrite_blocks(path, Step::D, Step::L, Step::U)
}

pub fn phi_prime_inverse(path: &MotzkinPath) -> MotzkinPath {
    rewrite_blocks(path, Step::D, Step::U, Step::L)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_paths, StepOrder};

    fn chain(f: fn(&MotzkinPath) -> MotzkinPath, start: &str, len: usize) -> Vec<String> {
        let mut cur = MotzkinPath::parse(start).unwrap();
        let mut out = vec![cur.to_string()];
        for _ in 0..len {
            cur = f(&cur);
            out.push(cur.to_string());
        }
        out
    }

    #[test]
    fn phi_chain() {
        assert_eq!(
            chain(phi, "UUDDLLL", 5),
            ["UUDDLLL", "UULLLDD", "UULLDLD", "UULDLDL", "UUDLDLL", "UUDDLLL"]
        );
    }

    #[test]
    fn phi_prime_chain() {
        assert_eq!(
            chain(phi_prime, "UULLLDD", 5),
            ["UULLLDD", "LLLUUDD", "LLULUDD", "LULULDD", "ULULLDD", "UULLLDD"]
        );
    }

    #[test]
    fn fixed_points() {
        let lll = MotzkinPath::parse("LLL").unwrap();
        assert_eq!(phi(&lll), lll);
        let udud = MotzkinPath::parse("UDUD").unwrap();
        assert_eq!(phi_prime(&udud), udud);
    }

    #[test]
    fn inverses_and_transport() {
        for n in 0..=10 {
            for m in enumerate_paths(n) {
                let (a, b) = (phi(&m), phi_prime(&m));
                assert_eq!(phi_inverse(&a), m);
                assert_eq!(phi(&phi_inverse(&m)), m);
                assert_eq!(phi_prime_inverse(&b), m);
                assert_eq!(phi_prime(&phi_prime_inverse(&m)), m);
                assert_eq!(m.descent_set(StepOrder::Uld), a.descent_set(StepOrder::Udl));
                assert_eq!(m.descent_set(StepOrder::Lud), b.descent_set(StepOrder::Uld));
                for s in Step::ALL {
                    assert_eq!(a.count(s), m.count(s));
                    assert_eq!(b.count(s), m.count(s));
                }
            }
        }
    }
}
