//! Truncated expansion of summand families and the strategy dispatcher.

use num_traits::Zero;

use super::fine::{recognize_fine, FineForm};
use super::{Character, HypergeometricTerm, Length, WValue};
use crate::algebra::rational::to_i64;
use crate::algebra::{int, Rational};
use crate::error::{QError, Result};
use crate::qseries::QSeries;

/// How a term is expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Termwise summation; the q-exponent grows without bound.
    Direct,
    /// A Fine partial-fraction recurrence handles a q-order-0 ratio.
    FineShift(FineForm),
    /// The summand becomes geometric past a cutoff and the tail is summed
    /// in closed form.
    GeometricTail,
}

fn directly_summable(t: &HypergeometricTerm) -> bool {
    let z = Rational::zero();
    t.q_exp.c2 > z || (t.q_exp.c2.is_zero() && t.q_exp.c1 > z)
}

/// The q-order of the `n`-th summand. Finite Pochhammer factors have
/// arguments of nonnegative q-order and so contribute nothing.
pub fn term_min_qorder(t: &HypergeometricTerm, n: i64) -> Result<i64> {
    t.q_exp.eval_int(n)
}

/// Loop cap for termwise summation at a given order.
fn cap_for(order: i64) -> i64 {
    4 * order.abs() + 256
}

/// Termwise summation; requires a growing q-exponent.
pub fn term_expand(t: &HypergeometricTerm, order: i64, w: &WValue) -> Result<QSeries> {
    t.validate()?;
    if !directly_summable(t) {
        return Err(QError::NotFormallySummable(format!(
            "q-exponent {} does not tend to infinity",
            t.q_exp
        )));
    }
    let mut acc = QSeries::zero(order);
    let ord = int(order);
    let mut n = t.n_start;
    loop {
        let q = t.q_exp.eval(n);
        if q > ord && t.q_exp.eval(n + 1) > q {
            break;
        }
        if n - t.n_start > cap_for(order) {
            return Err(QError::CapExceeded { n, cap: cap_for(order) });
        }
        if let Some(s) = t.summand(n, order, w)? {
            acc = acc.add(&s);
        }
        n += 1;
    }
    Ok(acc)
}

/// Geometric-ratio part `T` of a summand when `Q` is constant and every
/// finite factor stabilises.
fn tail_ratio(t: &HypergeometricTerm) -> Option<(Rational, i64, i64)> {
    if !t.q_exp.is_constant() || !t.sign_poly.is_linear() || !t.w_exp.is_linear() {
        return None;
    }
    if t.character != Character::Trivial {
        return None;
    }
    let s1 = to_i64(&t.sign_poly.c1)?;
    let l1 = to_i64(&t.w_exp.c1)?;
    let q0 = to_i64(&t.q_exp.c0)?;
    for f in &t.factors {
        if f.length == Length::Infinite {
            return None;
        }
    }
    let sign = if s1.rem_euclid(2) == 1 { int(-1) } else { int(1) };
    Some((&t.ratio * sign, l1, q0))
}

/// Sums the first `M` summands exactly and the rest as `s_M / (1 - T)`.
pub fn tail_expand(t: &HypergeometricTerm, order: i64, w: &WValue) -> Result<QSeries> {
    t.validate()?;
    let (tc, tw, q0) = tail_ratio(t)
        .ok_or_else(|| QError::NotFormallySummable("summand is not eventually geometric".into()))?;
    let mut m = t.n_start;
    for f in &t.factors {
        if let Length::Shift(d) = f.length {
            let need = order - q0 - f.arg_qexp + 1;
            let j = (need + f.base_pow - 1).div_euclid(f.base_pow);
            m = m.max(j - d).max(-d);
        }
    }
    let mut acc = QSeries::zero(order);
    for n in t.n_start..m {
        if let Some(s) = t.summand(n, order, w)? {
            acc = acc.add(&s);
        }
    }
    let last = t.summand(m, order, w)?.unwrap_or_else(|| QSeries::zero(order));
    let tail = super::divide_one_minus(&last, &tc, tw, 0, w)?;
    Ok(acc.add(&tail))
}

/// Picks the expansion method for a term.
pub fn strategy(t: &HypergeometricTerm) -> Result<Strategy> {
    if directly_summable(t) {
        return Ok(Strategy::Direct);
    }
    if let Some(f) = recognize_fine(t) {
        return Ok(Strategy::FineShift(f));
    }
    if tail_ratio(t).is_some() && (!t.ratio.is_zero()) {
        let ok = t.factors.iter().all(|f| f.arg_qexp >= 0);
        if ok {
            return Ok(Strategy::GeometricTail);
        }
    }
    Err(QError::NotFormallySummable(format!(
        "no expansion method applies (q-exponent {})",
        t.q_exp
    )))
}

/// Expands with whichever method [`strategy`] selects.
pub fn expand_term(t: &HypergeometricTerm, order: i64, w: &WValue) -> Result<QSeries> {
    t.validate()?;
    match strategy(t)? {
        Strategy::Direct => term_expand(t, order, w),
        Strategy::FineShift(f) => f.expand(order, w),
        Strategy::GeometricTail => tail_expand(t, order, w),
    }
}
