//! Dense univariate polynomials over the integers.
//!
//! These are the numerator and denominator carriers of [`RationalFunctionW`].
//! The gcd works on primitive parts so coefficient growth stays bounded by
//! the structural size of the inputs.
//!
//! [`RationalFunctionW`]: super::RationalFunctionW

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Coefficients in ascending degree; no trailing zeros, zero is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * w^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Exponent of the lowest nonzero term (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.valuation() == self.degree()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn lowest(&self) -> Option<&BigInt> {
        self.coeffs.get(self.valuation()).filter(|c| !c.is_zero())
    }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Multiply by `w^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs: v }
    }

    /// Divide by `w^k`; the caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        ZPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        let mut p = self.div_scalar(&c);
        if p.leading().is_some_and(|l| l.is_negative()) {
            p = -p;
        }
        p
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Pseudo-remainder of `self` by `b`, reduced to its primitive part at
    /// every step. Only meaningful up to a scalar, which is all gcd needs.
    fn prem_primitive(&self, b: &ZPoly) -> ZPoly {
        let db = b.degree();
        let lb = b.leading().expect("nonzero divisor").clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= db {
            let lr = r.leading().unwrap().clone();
            let shift = r.degree() - db;
            let g = lb.gcd(&lr);
            let (mr, mb) = (&lb / &g, &lr / &g);
            r = r.scale(&mr) - b.scale(&mb).shift_up(shift);
            r = r.primitive();
        }
        r
    }

    /// Primitive gcd (positive lowest coefficient). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive().normalize_sign();
        }
        if other.is_zero() {
            return self.primitive().normalize_sign();
        }
        let v = self.valuation().min(other.valuation());
        let a = self.shift_down(self.valuation());
        let b = other.shift_down(other.valuation());
        let core = if a.is_constant() || b.is_constant() {
            ZPoly::one()
        } else if a.primitive() == b.primitive() {
            a.primitive()
        } else {
            let (mut x, mut y) = if a.degree() >= b.degree() {
                (a.primitive(), b.primitive())
            } else {
                (b.primitive(), a.primitive())
            };
            while !y.is_zero() {
                let r = x.prem_primitive(&y);
                x = y;
                y = r;
            }
            x.primitive()
        };
        core.shift_up(v).normalize_sign()
    }

    fn normalize_sign(self) -> Self {
        if self.lowest().is_some_and(|c| c.is_negative()) {
            -self
        } else {
            self
        }
    }

    /// Exact division; panics if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &ZPoly) -> ZPoly {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if d.is_one() {
            return self.clone();
        }
        if self.is_zero() {
            return Self::zero();
        }
        if d.is_constant() {
            let c = &d.coeffs[0];
            return ZPoly {
                coeffs: self
                    .coeffs
                    .iter()
                    .map(|x| {
                        let (q, r) = x.div_rem(c);
                        assert!(r.is_zero(), "inexact scalar division");
                        q
                    })
                    .collect(),
            };
        }
        let dd = d.degree();
        let ld = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let n = self.degree();
        assert!(n >= dd, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(ld);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        ZPoly::from_coeffs(q)
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, o: &ZPoly) -> ZPoly {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        ZPoly::from_coeffs(v)
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, o: ZPoly) -> ZPoly {
        &self + &o
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, o: ZPoly) -> ZPoly {
        &self + &(-o)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        ZPoly::from_coeffs(v)
    }
}
