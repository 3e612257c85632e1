use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Sparse Laurent polynomial in `w`: exponent to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolyW {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolyW {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `p(w) -> p(w^{-1})`
    pub fn reflect(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, c.clone());
        }
        p
    }
}

impl fmt::Display for LaurentPolyW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "w")?,
                (1, false) => write!(f, "{mag}*w")?,
                (e, true) => write!(f, "w^{e}")?,
                (e, false) => write!(f, "{mag}*w^{e}")?,
            }
        }
        Ok(())
    }
}
