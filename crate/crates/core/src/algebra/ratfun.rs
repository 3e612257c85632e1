//! The field Q(w) in canonical form.
//!
//! A value is stored as `num / den` with integer polynomials such that
//! `gcd(num, den) = 1`, the integer content of the pair is 1, and the lowest
//! nonzero coefficient of `den` is positive. Zero is `0 / 1`. Under these
//! rules two values are equal exactly when their representations are.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolyW;
use super::poly::ZPoly;
use super::rational::{parse_rational, Rational};
use crate::error::{QError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunctionW {
    num: ZPoly,
    den: ZPoly,
}

impl Default for RationalFunctionW {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunctionW {
    pub fn zero() -> Self {
        RationalFunctionW {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(&Rational::one())
    }

    pub fn w() -> Self {
        Self::monomial(&Rational::one(), 1)
    }

    pub fn constant(c: &Rational) -> Self {
        Self::canonical(
            ZPoly::constant(c.numer().clone()),
            ZPoly::constant(c.denom().clone()),
        )
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(&Rational::from_integer(BigInt::from(c)))
    }

    /// `c * w^e`, any integer `e`.
    pub fn monomial(c: &Rational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let k = e.unsigned_abs() as usize;
        let (n, d) = if e >= 0 {
            (
                ZPoly::monomial(c.numer().clone(), k),
                ZPoly::constant(c.denom().clone()),
            )
        } else {
            (
                ZPoly::constant(c.numer().clone()),
                ZPoly::monomial(c.denom().clone(), k),
            )
        };
        Self::canonical(n, d)
    }

    /// `1 - c w^e`
    pub fn one_minus(c: &Rational, e: i64) -> Self {
        Self::one().sub(&Self::monomial(c, e))
    }

    /// Builds the canonical form of `num / den` from integer polynomials.
    pub fn from_zpolys(num: ZPoly, den: ZPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    /// Canonical reduced fraction equal to `num / den`.
    pub fn normalize(num: &LaurentPolyW, den: &LaurentPolyW) -> Result<Self> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        let ((n, sn), vn) = laurent_to_zpoly(num);
        let ((d, sd), vd) = laurent_to_zpoly(den);
        // num / den = (n / sn) w^vn / ((d / sd) w^vd)
        let shift = vn - vd;
        let (n, d) = if shift >= 0 {
            (n.shift_up(shift as usize), d)
        } else {
            (n, d.shift_up((-shift) as usize))
        };
        let scale = sd / sn;
        Ok(Self::from_zpolys(n.scale(scale.numer()), d.scale(scale.denom()))?)
    }

    fn canonical(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        Self::fix_content(num, den)
    }

    /// Assumes `gcd(num, den) = 1` as polynomials.
    fn fix_content(mut num: ZPoly, mut den: ZPoly) -> Self {
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.lowest().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunctionW { num, den }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational when it does not depend on `w`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeffs().first().cloned().unwrap_or_else(BigInt::zero);
            Some(Rational::new(n, self.den.coeffs()[0].clone()))
        } else {
            None
        }
    }

    /// The value as a Laurent polynomial when the denominator is `c w^k`.
    pub fn as_laurent(&self) -> Option<LaurentPolyW> {
        if !self.den.is_monomial() {
            return None;
        }
        let k = self.den.valuation() as i64;
        let d = self.den.coeffs()[k as usize].clone();
        Some(LaurentPolyW::from_terms(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 - k, Rational::new(c.clone(), d.clone()))),
        ))
    }

    pub fn neg(&self) -> Self {
        RationalFunctionW {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = &self.num + &o.num;
            if self.den.is_one() {
                return Self::fix_content(n, self.den.clone());
            }
            return Self::canonical(n, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let (d1, d2) = (self.den.div_exact(&g), o.den.div_exact(&g));
        let n = &(&self.num * &d2) + &(&o.num * &d1);
        let d = &self.den * &d2;
        Self::canonical(n, d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n = &self.num.div_exact(&g1) * &o.num.div_exact(&g2);
        let d = &self.den.div_exact(&g2) * &o.den.div_exact(&g1);
        Self::fix_content(n, d)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::fix_content(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact value at `w = x`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(QError::Pole {
                denominator: render_zpoly(&self.den, &BigInt::one()),
                at: x.to_string(),
            });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Substitutes `w -> c * w^k` (`k != 0`, `c != 0`).
    pub fn substitute(&self, c: &Rational, k: i64) -> Result<Self> {
        if c.is_zero() || k == 0 {
            return Err(QError::InvalidTerm(format!(
                "w-substitution needs c != 0 and k != 0 (got c = {c}, k = {k})"
            )));
        }
        let image = |p: &ZPoly| -> Result<Self> {
            let mut acc = Self::zero();
            for (i, a) in p.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let ci = super::rational::pow_i(c, i as i64)?;
                acc = acc.add(&Self::monomial(&(ci * Rational::from_integer(a.clone())), k * i as i64));
            }
            Ok(acc)
        };
        image(&self.num)?.div(&image(&self.den)?)
    }
}

fn laurent_to_zpoly(p: &LaurentPolyW) -> ((ZPoly, Rational), i64) {
    // Returns (integer poly P, scale s) and valuation v with p = P * w^v / s.
    let v = p.min_exp().unwrap_or(0);
    let hi = p.max_exp().unwrap_or(0);
    let l = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut v_coeffs = vec![BigInt::zero(); (hi - v + 1) as usize];
    for (e, c) in p.terms() {
        v_coeffs[(e - v) as usize] = c.numer() * (&l / c.denom());
    }
    (
        (ZPoly::from_coeffs(v_coeffs), Rational::from_integer(l)),
        v,
    )
}

fn render_term(out: &mut String, first: bool, c: &Rational, k: usize) {
    let neg = c.is_negative();
    let mag = c.abs();
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    match (k, mag.is_one()) {
        (0, _) => out.push_str(&mag.to_string()),
        (1, true) => out.push('w'),
        (1, false) => out.push_str(&format!("{mag}*w")),
        (k, true) => out.push_str(&format!("w^{k}")),
        (k, false) => out.push_str(&format!("{mag}*w^{k}")),
    }
}

fn render_zpoly(p: &ZPoly, scale: &BigInt) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        render_term(&mut out, first, &Rational::new(c.clone(), scale.clone()), k);
        first = false;
    }
    out
}

/// Ascending-exponent rendering: `1/2 - w` when the denominator is a
/// constant, `(-1 + 2*w)/(1 - w)` otherwise.
impl fmt::Display for RationalFunctionW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", render_zpoly(&self.num, &self.den.coeffs()[0]))
        } else {
            write!(
                f,
                "({})/({})",
                render_zpoly(&self.num, &BigInt::one()),
                render_zpoly(&self.den, &BigInt::one())
            )
        }
    }
}

fn parse_poly(s: &str) -> Result<LaurentPolyW> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(QError::Parse("empty polynomial".into()));
    }
    let bytes = s.as_bytes();
    let mut pieces = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            pieces.push(&s[start..i]);
            start = i;
        }
    }
    pieces.push(&s[start..]);
    let mut p = LaurentPolyW::zero();
    for piece in pieces {
        let (sign, body) = match piece.as_bytes()[0] {
            b'-' => (-1, &piece[1..]),
            b'+' => (1, &piece[1..]),
            _ => (1, piece),
        };
        let (coef, wpart) = match body.find('w') {
            None => (body, None),
            Some(i) => {
                let c = body[..i].trim_end_matches('*');
                (c, Some(&body[i + 1..]))
            }
        };
        let c = if coef.is_empty() {
            Rational::one()
        } else {
            parse_rational(coef)?
        };
        let e = match wpart {
            None => 0,
            Some("") => 1,
            Some(x) => x
                .strip_prefix('^')
                .and_then(|x| x.parse::<i64>().ok())
                .ok_or_else(|| QError::Parse(format!("bad exponent in `{piece}`")))?,
        };
        p.add_term(e, if sign < 0 { -c } else { c });
    }
    Ok(p)
}

impl FromStr for RationalFunctionW {
    type Err = QError;

    /// Inverse of the `Display` rendering.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (n, d) = rest
                .split_once(")/(")
                .ok_or_else(|| QError::Parse(format!("expected `(num)/(den)`: `{s}`")))?;
            let d = d
                .strip_suffix(')')
                .ok_or_else(|| QError::Parse(format!("unbalanced parentheses: `{s}`")))?;
            Self::normalize(&parse_poly(n)?, &parse_poly(d)?)
        } else {
            Self::normalize(&parse_poly(s)?, &LaurentPolyW::one())
        }
    }
}
