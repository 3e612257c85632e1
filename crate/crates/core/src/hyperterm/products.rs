//! Infinite products and the two bilateral sums (theta and Appell–Lerch).

use num_traits::{One, Zero};

use super::{divide_one_minus, Length, PochFactor, WValue};
use crate::algebra::rational::{pow_i, to_i64};
use crate::algebra::{int, Rational};
use crate::error::{QError, Result};
use crate::qseries::QSeries;

/// Product of infinite Pochhammer symbols, to order `order`.
pub fn poch_inf_expand(factors: &[PochFactor], order: i64, w: &WValue) -> Result<QSeries> {
    let mut s = QSeries::one(order);
    for f in factors {
        f.validate()?;
        if f.length != Length::Infinite {
            return Err(QError::InvalidTerm("poch_inf_expand takes infinite products only".into()));
        }
        if f.arg_qexp == 0 && f.arg_wexp == 0 && f.arg_const.is_one() {
            return Err(QError::DegenerateFactor("infinite product with argument 1".into()));
        }
        let mut j = 0;
        while f.arg_qexp + f.base_pow * j <= order {
            s = f.apply_index(&s, j, w)?;
            j += 1;
        }
    }
    Ok(s)
}

/// `sum_{n in Z} c^n w^{e n} q^{A n^2 + B n}` to order `order`.
pub fn theta_expand(c: &Rational, e: i64, a: &Rational, b: &Rational, order: i64, w: &WValue) -> Result<QSeries> {
    if *a <= Rational::zero() {
        return Err(QError::NotFormallySummable("theta series needs a positive quadratic coefficient".into()));
    }
    let exp = |n: i64| -> Rational { a * int(n) * int(n) + b * int(n) };
    let mut terms = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        loop {
            let x = exp(n);
            let next = exp(n + dir);
            if x > int(order) {
                if next > x {
                    break;
                }
            } else {
                let k = to_i64(&x).ok_or_else(|| {
                    QError::InvalidTerm(format!("theta exponent {x} at n = {n} is not an integer"))
                })?;
                terms.push((k, w.monomial(&pow_i(c, n)?, e * n)?));
            }
            n += dir;
        }
    }
    Ok(QSeries::from_terms(terms, order))
}

/// The two Appell–Lerch shapes
/// `sum_{n in Z} (-1)^n q^{(3n^2 + k n)/2} / (1 - w q^n)` with `k = 1`
/// (rank) or `k = 3` (g3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AppellKind {
    Rank,
    G3,
}

pub fn appell_lerch_expand(kind: AppellKind, order: i64, w: &WValue) -> Result<QSeries> {
    let k = match kind {
        AppellKind::Rank => 1,
        AppellKind::G3 => 3,
    };
    let e = |n: i64| (3 * n * n + k * n) / 2;
    let sign = |n: i64| if n % 2 == 0 { int(1) } else { int(-1) };
    let mut acc = divide_one_minus(&QSeries::one(order), &Rational::one(), 1, 0, w)?;
    let mut n = 1;
    while e(n) <= order {
        let head = QSeries::monomial(w.monomial(&sign(n), 0)?, e(n), order);
        acc = acc.add(&divide_one_minus(&head, &Rational::one(), 1, n, w)?);
        n += 1;
    }
    // 1/(1 - w q^{-m}) = -w^{-1} q^m / (1 - w^{-1} q^m)
    let mut m = 1;
    while e(-m) + m <= order {
        let head = QSeries::monomial(w.monomial(&-sign(m), -1)?, e(-m) + m, order);
        acc = acc.add(&divide_one_minus(&head, &Rational::one(), -1, m, w)?);
        m += 1;
    }
    Ok(acc)
}

