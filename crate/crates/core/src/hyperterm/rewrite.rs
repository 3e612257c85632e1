//! Symbolic rewrites of summand families: `q -> 1/q` and `w -> c w^k`.

use num_traits::{One, Signed, Zero};

use super::{HypergeometricTerm, Length, Monomial, Position, QuadPoly};
use crate::algebra::rational::{is_integer, pow_i, to_i64};
use crate::algebra::{int, Rational};
use crate::error::{QError, Result};

/// Rewrites a term under `q -> 1/q`.
///
/// Each finite factor is flipped with
/// `(x; e q^{-s})_L = (-x)^L e^{L(L-1)/2} q^{-s L(L-1)/2} (x^{-1}; e q^s)_L`,
/// after which the argument `x^{-1}` has its q-exponent restored by the
/// same substitution. Whether the result can be expanded is decided by
/// the expansion strategy, not here.
pub fn term_invert_q(t: &HypergeometricTerm) -> Result<HypergeometricTerm> {
    t.validate()?;
    let mut out = t.clone();
    out.q_exp = t.q_exp.scale(&-Rational::one());
    out.factors.clear();
    for f in &t.factors {
        let d = match f.length {
            Length::Shift(d) => d,
            Length::Infinite => {
                return Err(QError::NotInvertible("infinite Pochhammer product in a summand".into()));
            }
        };
        if f.arg_const.is_zero() {
            continue;
        }
        let mu = int(f.multiplicity as i64);
        let eps = match f.position {
            Position::Numerator => mu.clone(),
            Position::Denominator => -mu.clone(),
        };
        let c = f.arg_const.clone();
        let (e, k, s) = (f.arg_wexp, f.arg_qexp, f.base_pow);
        let l = QuadPoly::shifted_n(d);
        let tri = QuadPoly::shifted_triangular(d);
        // (-c)^L
        out.sign_poly = out.sign_poly.add(&l.scale(&mu));
        out.coeff *= pow_i(&c, to_i64(&(&eps * int(d))).unwrap_or(0))?;
        out.ratio *= pow_i(&c, to_i64(&eps).unwrap_or(0))?;
        // w^{eL}
        out.w_exp = out.w_exp.add(&l.scale(&(&eps * int(e))));
        // q^{-kL - sL(L-1)/2}
        out.q_exp = out.q_exp.add(&l.scale(&(&eps * int(-k))));
        out.q_exp = out.q_exp.add(&tri.scale(&(&eps * int(-s))));
        if f.base_sign < 0 {
            out.sign_poly = out.sign_poly.add(&tri.scale(&mu));
        }
        let mut g = f.clone();
        g.set_arg(Monomial::new(c.recip(), -e, k));
        out.factors.push(g);
    }
    Ok(out)
}

/// Rewrites a term under `w -> c w^k`.
pub fn term_substitute(t: &HypergeometricTerm, c: &Rational, k: i64) -> Result<HypergeometricTerm> {
    if c.is_zero() {
        return Err(QError::InvalidTerm("substitution w -> 0".into()));
    }
    let mut out = t.clone();
    for f in &mut out.factors {
        f.arg_const = &f.arg_const * pow_i(c, f.arg_wexp)?;
        f.arg_wexp *= k;
    }
    let lam = t.w_exp.clone();
    out.w_exp = lam.scale(&int(k));
    if c.abs().is_one() {
        if c.is_negative() {
            out.sign_poly = out.sign_poly.add(&lam);
        }
        return Ok(out);
    }
    if !lam.c2.is_zero() || !is_integer(&lam.c1) || !is_integer(&lam.c0) {
        return Err(QError::InvalidTerm(format!(
            "w -> {c} w^{k} needs an integral linear w-exponent, got {lam}"
        )));
    }
    out.coeff *= pow_i(c, to_i64(&lam.c0).unwrap_or(0))?;
    out.ratio *= pow_i(c, to_i64(&lam.c1).unwrap_or(0))?;
    Ok(out)
}
