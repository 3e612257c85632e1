//! Truncated Laurent series in `q` over Q(w) with a tracked validity order.
//!
//! A [`QSeries`] with order `N` asserts that the coefficient of every `q^k`
//! with `k <= N` is known exactly; nothing is claimed above `N`. Polynomials
//! in `q` can be represented with the sentinel order [`EXACT`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::RationalFunctionW;
use crate::error::{QError, Result};

type Rf = RationalFunctionW;

/// Order of a series known exactly in every degree.
pub const EXACT: i64 = i64::MAX / 4;

fn clamp_order(o: i64) -> i64 {
    if o >= EXACT / 2 {
        EXACT
    } else {
        o
    }
}

fn add_order(a: i64, b: i64) -> i64 {
    if a >= EXACT / 2 || b >= EXACT / 2 {
        EXACT
    } else {
        a + b
    }
}

/// Substitution applied at the series level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QSub {
    /// `q -> -q`
    Negate,
    /// `q -> q^m`, `m >= 1`
    Power(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    /// Exponent of `coeffs[0]`; equals the valuation when nonempty.
    start: i64,
    /// Trimmed on both ends.
    coeffs: Vec<Rf>,
    order: i64,
}

impl QSeries {
    pub fn zero(order: i64) -> Self {
        QSeries {
            start: 0,
            coeffs: Vec::new(),
            order: clamp_order(order),
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(Rf::one(), 0, order)
    }

    /// `c q^k`, truncated at `order`.
    pub fn monomial(c: Rf, k: i64, order: i64) -> Self {
        Self::from_dense(k, vec![c], order)
    }

    /// Builds from coefficients of `q^start, q^{start+1}, ...`; entries
    /// beyond `order` are dropped.
    pub fn from_dense(start: i64, mut coeffs: Vec<Rf>, order: i64) -> Self {
        let order = clamp_order(order);
        if order < EXACT {
            let keep = (order - start + 1).max(0) as usize;
            coeffs.truncate(keep);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        if lead == coeffs.len() {
            return Self::zero(order);
        }
        coeffs.drain(..lead);
        QSeries {
            start: start + lead as i64,
            coeffs,
            order,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rf)>>(terms: I, order: i64) -> Self {
        let mut t: Vec<(i64, Rf)> = terms.into_iter().collect();
        if t.is_empty() {
            return Self::zero(order);
        }
        t.sort_by_key(|(k, _)| *k);
        let lo = t[0].0;
        let hi = t[t.len() - 1].0;
        let mut dense = vec![Rf::zero(); (hi - lo + 1) as usize];
        for (k, c) in t {
            let slot = &mut dense[(k - lo) as usize];
            *slot = slot.add(&c);
        }
        Self::from_dense(lo, dense, order)
    }

    /// Integer coefficients, starting at `q^0`.
    pub fn from_ints(coeffs: &[i64], order: i64) -> Self {
        Self::from_dense(0, coeffs.iter().map(|&c| Rf::from_i64(c)).collect(), order)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= EXACT
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent that may carry a nonzero coefficient.
    pub fn min_order(&self) -> i64 {
        if self.coeffs.is_empty() {
            add_order(self.order, 1)
        } else {
            self.start
        }
    }

    /// Nonzero coefficients in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rf)> {
        let s = self.start;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (s + i as i64, c))
    }

    fn get(&self, k: i64) -> Option<&Rf> {
        if k < self.start {
            return None;
        }
        self.coeffs.get((k - self.start) as usize)
    }

    /// Exact coefficient of `q^k`.
    pub fn coeff(&self, k: i64) -> Result<Rf> {
        if k > self.order {
            return Err(QError::BeyondTruncation { k, order: self.order });
        }
        Ok(self.get(k).cloned().unwrap_or_default())
    }

    pub fn truncate(&self, n: i64) -> Self {
        Self::from_dense(self.start, self.coeffs.clone(), n.min(self.order))
    }

    pub fn with_order(mut self, n: i64) -> Self {
        if n < self.order {
            self = self.truncate(n);
        }
        self
    }

    pub fn neg(&self) -> Self {
        QSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(Rf::neg).collect(),
            order: self.order,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        if self.is_zero() {
            return o.truncate(order);
        }
        if o.is_zero() {
            return self.truncate(order);
        }
        let lo = self.start.min(o.start);
        let hi = (self.start + self.coeffs.len() as i64).max(o.start + o.coeffs.len() as i64) - 1;
        let hi = hi.min(order);
        if hi < lo {
            return Self::zero(order);
        }
        let dense = (lo..=hi)
            .map(|k| match (self.get(k), o.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Rf::zero(),
            })
            .collect();
        Self::from_dense(lo, dense, order)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rf) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        QSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
            order: self.order,
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            start: self.start + k,
            coeffs: self.coeffs.clone(),
            order: add_order(self.order, k),
        }
    }

    /// Cauchy product; every retained coefficient is exact.
    pub fn mul(&self, o: &Self) -> Self {
        let order = clamp_order(
            add_order(self.order, o.min_order()).min(add_order(o.order, self.min_order())),
        );
        if self.is_zero() || o.is_zero() {
            return Self::zero(order);
        }
        let start = self.start + o.start;
        let full = self.coeffs.len() + o.coeffs.len() - 1;
        let len = if order >= EXACT {
            full
        } else {
            ((order - start + 1).max(0) as usize).min(full)
        };
        let mut dense = vec![Rf::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    dense[i + j] = dense[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_dense(start, dense, order)
    }

    /// Multiplicative inverse of a unit Laurent series.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(QError::NotInvertible("series is zero to its order".into()));
        }
        if self.is_exact() {
            return Err(QError::NotInvertible(
                "inverse of a polynomial needs a finite truncation order".into(),
            ));
        }
        let v = self.start;
        let lead_inv = self.coeffs[0].inv()?;
        let order = self.order - 2 * v;
        let count = (self.order - v + 1).max(0) as usize;
        let mut b: Vec<Rf> = Vec::with_capacity(count);
        for m in 0..count {
            if m == 0 {
                b.push(lead_inv.clone());
                continue;
            }
            let mut acc = Rf::zero();
            for i in 1..=m.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[i];
                if !a.is_zero() && !b[m - i].is_zero() {
                    acc = acc.add(&a.mul(&b[m - i]));
                }
            }
            b.push(acc.mul(&lead_inv).neg());
        }
        Ok(Self::from_dense(-v, b, order))
    }

    pub fn substitute(&self, sub: QSub) -> Self {
        match sub {
            QSub::Negate => QSeries {
                start: self.start,
                coeffs: self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if (self.start + i as i64).rem_euclid(2) == 1 {
                            c.neg()
                        } else {
                            c.clone()
                        }
                    })
                    .collect(),
                order: self.order,
            },
            QSub::Power(m) => {
                let m = m.max(1) as i64;
                let order = if self.is_exact() {
                    EXACT
                } else {
                    m * self.order + (m - 1)
                };
                Self::from_terms(self.terms().map(|(k, c)| (m * k, c.clone())), order)
            }
        }
    }

    /// Multiply by `1 - m q^e` with `e >= 0`.
    pub fn mul_one_minus(&self, m: &Rf, e: i64) -> Self {
        assert!(e >= 0, "mul_one_minus needs a nonnegative exponent");
        if m.is_zero() || self.is_zero() {
            return self.clone();
        }
        if e == 0 {
            return self.scale(&Rf::one().sub(m));
        }
        let e = e as usize;
        let mut len = self.coeffs.len() + e;
        if !self.is_exact() {
            len = len.min((self.order - self.start + 1).max(0) as usize);
        }
        let dense = (0..len)
            .map(|i| {
                let base = self.coeffs.get(i).cloned().unwrap_or_default();
                if i >= e {
                    if let Some(prev) = self.coeffs.get(i - e) {
                        if !prev.is_zero() {
                            return base.sub(&m.mul(prev));
                        }
                    }
                }
                base
            })
            .collect();
        Self::from_dense(self.start, dense, self.order)
    }

    /// Divide by `1 - m q^e` with `e >= 0`.
    pub fn div_one_minus(&self, m: &Rf, e: i64) -> Result<Self> {
        assert!(e >= 0, "div_one_minus needs a nonnegative exponent");
        if m.is_zero() || self.is_zero() {
            return Ok(self.clone());
        }
        if e == 0 {
            let d = Rf::one().sub(m);
            if d.is_zero() {
                return Err(QError::DegenerateFactor(format!("1 - ({m}) vanishes")));
            }
            return Ok(self.scale(&d.inv()?));
        }
        if self.is_exact() {
            return Err(QError::NotInvertible(
                "geometric expansion needs a finite truncation order".into(),
            ));
        }
        let e = e as usize;
        let len = (self.order - self.start + 1).max(0) as usize;
        let mut dense: Vec<Rf> = Vec::with_capacity(len);
        for i in 0..len {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_default();
            if i >= e && !dense[i - e].is_zero() {
                c = c.add(&m.mul(&dense[i - e]));
            }
            dense.push(c);
        }
        Ok(Self::from_dense(self.start, dense, self.order))
    }

    /// First exponent `k <= n` where the two series differ, with both
    /// coefficients. Errors if either side is not known up to `n`.
    pub fn first_mismatch(&self, o: &Self, n: i64) -> Result<Option<(i64, Rf, Rf)>> {
        let have = self.order.min(o.order);
        if have < n {
            return Err(QError::BeyondTruncation { k: n, order: have });
        }
        let lo = self.min_order().min(o.min_order());
        for k in lo..=n {
            let (a, b) = (self.coeff(k)?, o.coeff(k)?);
            if a != b {
                return Ok(Some((k, a, b)));
            }
        }
        Ok(None)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order,
            "coefficients": self
                .terms()
                .map(|(k, c)| serde_json::json!({"k": k, "c": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let order = v
            .get("order")
            .and_then(|o| o.as_i64())
            .ok_or_else(|| QError::Parse("series JSON needs an integer `order`".into()))?;
        let arr = v
            .get("coefficients")
            .and_then(|a| a.as_array())
            .ok_or_else(|| QError::Parse("series JSON needs a `coefficients` array".into()))?;
        let mut terms = Vec::with_capacity(arr.len());
        for item in arr {
            let k = item
                .get("k")
                .and_then(|k| k.as_i64())
                .ok_or_else(|| QError::Parse("coefficient entry needs integer `k`".into()))?;
            let c = item
                .get("c")
                .and_then(|c| c.as_str())
                .ok_or_else(|| QError::Parse("coefficient entry needs string `c`".into()))?;
            terms.push((k, c.parse()?));
        }
        Ok(Self::from_terms(terms, order))
    }
}

/// `1 - q + (2 - w)*q^3 + O(q^5)`
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !s.contains(' ') => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let body = if body.contains(' ') && !body.starts_with('(') {
                format!("({body})")
            } else {
                body
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = body == "1";
            match (k, unit) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{body}*q")?,
                (k, true) => write!(f, "q^{k}")?,
                (k, false) => write!(f, "{body}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn w() -> Rf {
        Rf::w()
    }

    #[test]
    fn add_tracks_the_smaller_order() {
        let a = QSeries::from_ints(&[1, -1], 5);
        let b = QSeries::from_ints(&[0, 1], 5);
        assert_eq!(a.add(&b), QSeries::one(5));
        let c = QSeries::from_ints(&[0, 1], 3);
        assert_eq!(a.add(&c).order(), 3);
        assert_eq!(a.add(&QSeries::zero(EXACT)), a);
    }

    #[test]
    fn mul_examples() {
        let n = 6;
        let one_minus_q = QSeries::from_ints(&[1, -1], EXACT);
        let geo = QSeries::from_ints(&vec![1; n + 1], n as i64);
        assert_eq!(one_minus_q.mul(&geo), QSeries::one(n as i64));
        let q3 = QSeries::monomial(Rf::one(), 3, EXACT);
        let qm1 = QSeries::monomial(Rf::one(), -1, EXACT);
        assert_eq!(q3.mul(&qm1), QSeries::monomial(Rf::one(), 2, EXACT));
        let p = QSeries::from_dense(0, vec![Rf::one(), w()], EXACT);
        let m = QSeries::from_dense(0, vec![Rf::one(), w().neg()], EXACT);
        assert_eq!(
            p.mul(&m),
            QSeries::from_dense(0, vec![Rf::one(), Rf::zero(), w().mul(&w()).neg()], EXACT)
        );
    }

    #[test]
    fn invert_examples() {
        let a = QSeries::from_ints(&[1, -1], 6);
        assert_eq!(a.invert().unwrap(), QSeries::from_ints(&[1; 7], 6));
        let b = QSeries::from_ints(&[0, 1, -1], 6).invert().unwrap();
        assert_eq!(b.min_order(), -1);
        assert_eq!(b.coeff(-1).unwrap(), Rf::one());
        assert_eq!(b.coeff(3).unwrap(), Rf::one());
        assert_eq!(b.order(), 4);
        assert!(QSeries::zero(4).invert().is_err());
    }

    #[test]
    fn coeff_beyond_truncation() {
        let a = QSeries::one(3);
        assert_eq!(a.coeff(3).unwrap(), Rf::zero());
        assert_eq!(a.coeff(4), Err(QError::BeyondTruncation { k: 4, order: 3 }));
    }

    #[test]
    fn substitutions() {
        let a = QSeries::from_ints(&[1, 1, -2], EXACT);
        assert_eq!(a.substitute(QSub::Negate), QSeries::from_ints(&[1, -1, -2], EXACT));
        let b = QSeries::from_ints(&[1, -1], 4);
        let b2 = b.substitute(QSub::Power(2));
        assert_eq!(b2, QSeries::from_ints(&[1, 0, -1], 9));
    }

    #[test]
    fn geometric_helpers() {
        let one = QSeries::one(5);
        let g = one.div_one_minus(&Rf::from_i64(1), 1).unwrap();
        assert_eq!(g, QSeries::from_ints(&[1; 6], 5));
        assert_eq!(g.mul_one_minus(&Rf::from_i64(1), 1), one);
        assert!(one.div_one_minus(&Rf::one(), 0).is_err());
        let h = one.div_one_minus(&Rf::constant(&int(2)), 0).unwrap();
        assert_eq!(h.coeff(0).unwrap(), Rf::from_i64(-1));
    }

    #[test]
    fn json_round_trip() {
        let s = QSeries::from_dense(0, vec![Rf::one(), w(), Rf::zero(), "(1)/(1 - w)".parse().unwrap()], 7);
        let j = s.to_json();
        assert_eq!(QSeries::from_json(&j).unwrap(), s);
    }

    #[test]
    fn display() {
        let s = QSeries::from_ints(&[1, -1, 1, 0, 0, -1], 8);
        assert_eq!(s.to_string(), "1 - q + q^2 - q^5");
    }
}
