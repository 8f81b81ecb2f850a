//! Bijections on `M*_n = M_n \ {L^n}` that rotate cyclic descent sets by one.

use super::transport::{phi, phi_inverse, phi_prime, phi_prime_inverse};
use super::{MotzkinPath, Step, StepOrder};
use crate::error::{Error, Result};

fn ensure_shiftable(path: &MotzkinPath) -> Result<()> {
    if path.is_all_level() {
        Err(Error::AllLevelPath)
    } else {
        Ok(())
    }
}

fn trailing_levels(steps: &[Step]) -> usize {
    steps.iter().rev().take_while(|&&s| s == Step::L).count()
}

fn leading_levels(steps: &[Step]) -> usize {
    steps.iter().take_while(|&&s| s == Step::L).count()
}

fn levels(out: &mut Vec<Step>, count: usize) {
    out.extend(std::iter::repeat(Step::L).take(count));
}

/// The shift for `U>D>L`.
///
/// `P L -> L P`; otherwise `P U P' D -> U P D P'` where `U` is the final start.
pub fn rho(path: &MotzkinPath) -> Result<MotzkinPath> {
    ensure_shiftable(path)?;
    let s = path.steps();
    let n = s.len();
    let mut out = Vec::with_capacity(n);
    if s[n - 1] == Step::L {
        out.push(Step::L);
        out.extend_from_slice(&s[..n - 1]);
    } else {
        let start = *path
            .start_positions()
            .last()
            .expect("nonlevel path has a start");
        out.push(Step::U);
        out.extend_from_slice(&s[..start]);
        out.push(Step::D);
        out.extend_from_slice(&s[start + 1..n - 1]);
    }
    Ok(MotzkinPath::from_steps_unchecked(out))
}

/// `L P -> P L`; otherwise `U P D P' -> P U P' D` where `D` is the first return.
pub fn rho_inverse(path: &MotzkinPath) -> Result<MotzkinPath> {
    ensure_shiftable(path)?;
    let s = path.steps();
    let mut out = Vec::with_capacity(s.len());
    if s[0] == Step::L {
        out.extend_from_slice(&s[1..]);
        out.push(Step::L);
    } else {
        let ret = path.return_positions()[0];
        out.extend_from_slice(&s[1..ret]);
        out.push(Step::U);
        out.extend_from_slice(&s[ret + 1..]);
        out.push(Step::D);
    }
    Ok(MotzkinPath::from_steps_unchecked(out))
}

/// The shift for `U>L>D`, by cases on the step before the last return.
///
/// Everything after the last return is a run `L^j`.
///
/// * `U`: `P L^i U D L^j`, `P` empty or ending in `D`.
///   `j = 0` gives `U P D L^i`, otherwise `U P L^{i+1} D L^{j-1}`.
/// * `L`: `P L^i D L^j`, `i >= 1`, `P` not ending in `L`.
///   `j = 0` gives `L P D L^{i-1}`, otherwise `L P L^i D L^{j-1}`.
/// * `D`: `P L^i U L^k P' D L^j` with `U` the final start and `P'` starting
///   with `U`. `k = 0` gives `U P D L^i P' L^j`, otherwise
///   `U P L^{i+1} D L^{k-1} P' L^j`.
pub fn rho_hat(path: &MotzkinPath) -> Result<MotzkinPath> {
    ensure_shiftable(path)?;
    let s = path.steps();
    let n = s.len();
    let last_return = *path
        .return_positions()
        .last()
        .expect("nonlevel path has a return");
    let j = n - 1 - last_return;
    let mut out = Vec::with_capacity(n);
    match s[last_return - 1] {
        Step::U => {
            let prefix = &s[..last_return - 1];
            let i = trailing_levels(prefix);
            let p = &prefix[..prefix.len() - i];
            out.push(Step::U);
            out.extend_from_slice(p);
            if j == 0 {
                out.push(Step::D);
                levels(&mut out, i);
            } else {
                levels(&mut out, i + 1);
                out.push(Step::D);
                levels(&mut out, j - 1);
            }
        }
        Step::L => {
            let prefix = &s[..last_return];
            let i = trailing_levels(prefix);
            let p = &prefix[..prefix.len() - i];
            out.push(Step::L);
            out.extend_from_slice(p);
            if j == 0 {
                out.push(Step::D);
                levels(&mut out, i - 1);
            } else {
                levels(&mut out, i);
                out.push(Step::D);
                levels(&mut out, j - 1);
            }
        }
        Step::D => {
            let start = *path
                .start_positions()
                .last()
                .expect("nonlevel path has a start");
            let prefix = &s[..start];
            let i = trailing_levels(prefix);
            let p = &prefix[..prefix.len() - i];
            let inner = &s[start + 1..last_return];
            let k = leading_levels(inner);
            let p_inner = &inner[k..];
            out.push(Step::U);
            out.extend_from_slice(p);
            if k == 0 {
                out.push(Step::D);
                levels(&mut out, i);
            } else {
                levels(&mut out, i + 1);
                out.push(Step::D);
                levels(&mut out, k - 1);
            }
            out.extend_from_slice(p_inner);
            levels(&mut out, j);
        }
    }
    Ok(MotzkinPath::from_steps_unchecked(out))
}

/// `phi^{-1} ∘ rho^{-1} ∘ phi`.
pub fn rho_hat_inverse(path: &MotzkinPath) -> Result<MotzkinPath> {
    ensure_shiftable(path)?;
    Ok(phi_inverse(&rho_inverse(&phi(path))?))
}

/// The shift paired with the cyclic descent set of `order`.
pub fn shift(path: &MotzkinPath, order: StepOrder) -> Result<MotzkinPath> {
    match order {
        StepOrder::Udl => rho(path),
        StepOrder::Uld => rho_hat(path),
        StepOrder::Lud => {
            ensure_shiftable(path)?;
            Ok(phi_prime_inverse(&rho_hat(&phi_prime(path))?))
        }
    }
}

pub fn shift_inverse(path: &MotzkinPath, order: StepOrder) -> Result<MotzkinPath> {
    match order {
        StepOrder::Udl => rho_inverse(path),
        StepOrder::Uld => rho_hat_inverse(path),
        StepOrder::Lud => {
            ensure_shiftable(path)?;
            Ok(phi_prime_inverse(&rho_hat_inverse(&phi_prime(path))?))
        }
    }
}
