//! Fine's basic function `F(a, b; t) = sum_n (aq)_n / (bq)_n t^n` over a
//! general base `p = q^s`.
//!
//! When `t` has q-order 0 the series does not converge q-adically, so it is
//! evaluated through the functional equation
//! `F(a, b; t) = (1 - b)/(1 - t) + (b - a t p)/(1 - t) F(a, b; t p)`,
//! iterated until `t p^M` lies beyond the truncation.

use num_traits::{One, Zero};

use super::expand::term_expand;
use super::{divide_one_minus, Character, HypergeometricTerm, Length, Monomial, PochFactor, Position, QuadPoly, WValue};
use crate::algebra::rational::to_i64;
use crate::algebra::{int, Rational, RationalFunctionW};
use crate::error::{QError, Result};
use crate::qseries::QSeries;

fn check_args(a: &Monomial, b: &Monomial, t: &Monomial, base: i64) -> Result<()> {
    if base < 1 {
        return Err(QError::InvalidTerm("Fine base must be a positive power of q".into()));
    }
    if !a.is_zero() && a.q_exp + base < 0 {
        return Err(QError::NotFormallySummable("a p has negative q-order".into()));
    }
    if !b.is_zero() && b.q_exp < 0 {
        return Err(QError::NotFormallySummable("b has negative q-order".into()));
    }
    if t.q_exp < 0 {
        return Err(QError::NotFormallySummable("t has negative q-order".into()));
    }
    if t.is_one() {
        return Err(QError::DegenerateFactor("Fine function at t = 1".into()));
    }
    Ok(())
}

/// The summand family of `F(a, b; t)` in base `q^base`.
pub fn fine_term(a: &Monomial, b: &Monomial, t: &Monomial, base: i64) -> HypergeometricTerm {
    let mut term = HypergeometricTerm::new()
        .ratio(t.coeff.clone())
        .w(QuadPoly::linear(t.w_exp, 0))
        .q(QuadPoly::linear(t.q_exp, 0));
    if !a.is_zero() {
        term = term.factor(PochFactor::num(a.times_q(base), base, 0));
    }
    if !b.is_zero() {
        term = term.factor(PochFactor::den(b.times_q(base), base, 0));
    }
    term
}

/// Termwise summation; needs `t` of positive q-order.
pub fn fine_expand_direct(
    a: &Monomial,
    b: &Monomial,
    t: &Monomial,
    base: i64,
    order: i64,
    w: &WValue,
) -> Result<QSeries> {
    check_args(a, b, t, base)?;
    term_expand(&fine_term(a, b, t, base), order, w)
}

/// Evaluation through the shift recurrence; exact to `order` whenever the
/// arguments pass validation.
pub fn fine_expand_recurrence(
    a: &Monomial,
    b: &Monomial,
    t: &Monomial,
    base: i64,
    order: i64,
    w: &WValue,
) -> Result<QSeries> {
    check_args(a, b, t, base)?;
    let steps = ((order - t.q_exp + 1).max(0) + base - 1) / base;
    let mut p = QSeries::one(order);
    let mut acc = QSeries::zero(order);
    let bc = b.coefficient(w)?;
    let ac = a.mul(t);
    let acc_c = ac.coefficient(w)?;
    for m in 0..steps {
        let tq = t.q_exp + base * m;
        let head = divide_one_minus(&p.mul_one_minus(&bc, b.q_exp), &t.coeff, t.w_exp, tq, w)?;
        acc = acc.add(&head);
        let factor = QSeries::from_terms(
            [(b.q_exp, bc.clone()), (ac.q_exp + base * (m + 1), acc_c.neg())],
            order,
        );
        p = divide_one_minus(&p.mul(&factor), &t.coeff, t.w_exp, tq, w)?;
    }
    Ok(acc.add(&p))
}

/// `F(a, b; t)` in base `q^base`, choosing the summation route by the
/// q-order of `t`.
pub fn fine_expand(a: &Monomial, b: &Monomial, t: &Monomial, base: i64, order: i64, w: &WValue) -> Result<QSeries> {
    if t.q_exp >= 1 {
        fine_expand_direct(a, b, t, base, order, w)
    } else {
        fine_expand_recurrence(a, b, t, base, order, w)
    }
}

/// A summand family recognised as `C * prefactors * F(a, b; t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FineForm {
    pub prefactor: Monomial,
    /// Factors `1 - x` split off from `(x; p)_{n+1}`.
    pub split: Vec<(Monomial, Position)>,
    pub a: Monomial,
    pub b: Monomial,
    pub t: Monomial,
    pub base: i64,
}

impl FineForm {
    pub fn expand(&self, order: i64, w: &WValue) -> Result<QSeries> {
        let inner = order - self.prefactor.q_exp;
        let mut s = fine_expand(&self.a, &self.b, &self.t, self.base, inner, w)?;
        for (x, pos) in &self.split {
            s = match pos {
                Position::Numerator => s.mul_one_minus(&x.coefficient(w)?, x.q_exp),
                Position::Denominator => divide_one_minus(&s, &x.coeff, x.w_exp, x.q_exp, w)?,
            };
        }
        let c: RationalFunctionW = self.prefactor.coefficient(w)?;
        Ok(s.scale(&c).shift(self.prefactor.q_exp))
    }
}

fn int_linear(p: &QuadPoly) -> Option<(i64, i64)> {
    if !p.c2.is_zero() {
        return None;
    }
    Some((to_i64(&p.c1)?, to_i64(&p.c0)?))
}

/// Matches terms of the shape
/// `C (-1)^{s n} w^{l n} r^n (x; p)_{n+d} / (y; p)_{n+e}` with `d, e` in
/// `{0, 1}` and n-independent q-power.
pub(crate) fn recognize_fine(t: &HypergeometricTerm) -> Option<FineForm> {
    if t.n_start != 0 || t.character != Character::Trivial {
        return None;
    }
    let (s1, s0) = int_linear(&t.sign_poly)?;
    let (l1, l0) = int_linear(&t.w_exp)?;
    let (q1, q0) = int_linear(&t.q_exp)?;
    if q1 != 0 {
        return None;
    }
    let mut base = None;
    let mut num = None;
    let mut den = None;
    for f in &t.factors {
        let d = match f.length {
            Length::Shift(d) if d == 0 || d == 1 => d,
            _ => return None,
        };
        if f.base_sign != 1 || f.multiplicity != 1 {
            return None;
        }
        if *base.get_or_insert(f.base_pow) != f.base_pow {
            return None;
        }
        let slot = match f.position {
            Position::Numerator => &mut num,
            Position::Denominator => &mut den,
        };
        if slot.is_some() {
            return None;
        }
        *slot = Some((f.arg(), d, f.position));
    }
    let base = base.unwrap_or(1);
    let mut split = Vec::new();
    let mut pick = |slot: Option<(Monomial, i64, Position)>| -> Monomial {
        match slot {
            None => Monomial::zero(),
            Some((x, 1, pos)) => {
                split.push((x.clone(), pos));
                x
            }
            Some((x, _, _)) => x.times_q(-base),
        }
    };
    let a = pick(num);
    let b = pick(den);
    if !b.is_zero() && b.q_exp < 0 {
        return None;
    }
    let sign = if s0.rem_euclid(2) == 1 { -Rational::one() } else { Rational::one() };
    let tsign = if s1.rem_euclid(2) == 1 { int(-1) } else { int(1) };
    let tm = Monomial::new(&t.ratio * tsign, l1, 0);
    if tm.is_one() || tm.is_zero() {
        return None;
    }
    Some(FineForm {
        prefactor: Monomial::new(&t.coeff * sign, l0, q0),
        split,
        a,
        b,
        t: tm,
        base,
    })
}
