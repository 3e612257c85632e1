//! Named q-series, built from recipes over the hyperterm primitives.

pub mod build;
mod catalog;
mod eval;
mod mutate;

use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{Rational, RationalFunctionW};
use crate::hyperterm::{AppellKind, HypergeometricTerm, Monomial, PochFactor};
use crate::error::Result;
use crate::hyperterm::WValue;
use crate::qseries::{QSeries, QSub};

pub use catalog::Catalog;
pub use eval::Evaluator;

type Rf = RationalFunctionW;

/// How a series is assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `c(w) q^k`
    Mono(Rf, i64),
    Term(HypergeometricTerm),
    /// Product of infinite Pochhammer symbols.
    Product(Vec<PochFactor>),
    /// `sum_{n in Z} c^n w^{e n} q^{a n^2 + b n}`
    Theta { c: Rational, w_exp: i64, a: Rational, b: Rational },
    AppellLerch(AppellKind),
    /// `F(a, b; t)` in base `q^base`.
    Fine { a: Monomial, b: Monomial, t: Monomial, base: i64 },
    /// Another catalog entry.
    Named(String),
    /// The inner series at `q -> 1/q`, rewritten mechanically.
    Inverted(Box<Recipe>),
    /// `w -> c w^k`
    SubW { c: Rational, k: i64, inner: Box<Recipe> },
    SubQ { sub: QSub, inner: Box<Recipe> },
    /// Specialise `w` to a rational value.
    AtW { w: Rational, inner: Box<Recipe> },
    Sum(Vec<Recipe>),
    Prod(Vec<Recipe>),
    Scale(Rf, Box<Recipe>),
    Reciprocal(Box<Recipe>),
}

impl Recipe {
    pub fn named(name: &str) -> Recipe {
        Recipe::Named(name.to_string())
    }

    pub fn constant(c: Rf) -> Recipe {
        Recipe::Mono(c, 0)
    }

    /// `sum c_i q^{k_i}`
    pub fn poly(terms: Vec<(Rf, i64)>) -> Recipe {
        Recipe::Sum(terms.into_iter().map(|(c, k)| Recipe::Mono(c, k)).collect())
    }

    pub fn inverted(self) -> Recipe {
        Recipe::Inverted(Box::new(self))
    }

    pub fn sub_w(self, c: Rational, k: i64) -> Recipe {
        Recipe::SubW { c, k, inner: Box::new(self) }
    }

    pub fn sub_q(self, sub: QSub) -> Recipe {
        Recipe::SubQ { sub, inner: Box::new(self) }
    }

    pub fn at_w(self, w: Rational) -> Recipe {
        Recipe::AtW { w, inner: Box::new(self) }
    }

    pub fn scale(self, c: Rf) -> Recipe {
        Recipe::Scale(c, Box::new(self))
    }

    pub fn recip(self) -> Recipe {
        Recipe::Reciprocal(Box::new(self))
    }

    pub fn neg(self) -> Recipe {
        self.scale(Rf::from_i64(-1))
    }

    pub fn theta(c: Rational, w_exp: i64, a: Rational, b: Rational) -> Recipe {
        Recipe::Theta { c, w_exp, a, b }
    }

    /// Catalog names this recipe refers to, directly.
    pub fn references(&self, out: &mut Vec<String>) {
        match self {
            Recipe::Named(n) => out.push(n.clone()),
            Recipe::Inverted(r)
            | Recipe::SubW { inner: r, .. }
            | Recipe::SubQ { inner: r, .. }
            | Recipe::AtW { inner: r, .. }
            | Recipe::Scale(_, r)
            | Recipe::Reciprocal(r) => r.references(out),
            Recipe::Sum(rs) | Recipe::Prod(rs) => rs.iter().for_each(|r| r.references(out)),
            _ => {}
        }
    }
}

/// The w-interpretation an entry is declared for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WMode {
    Symbolic,
    NumericOnly,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub anchor: String,
    pub w_mode: WMode,
    pub recipe: Recipe,
}

/// The built-in catalog, constructed once.
pub fn standard_catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::standard)
}

pub fn catalog_series(name: &str, w: &WValue, n: i64) -> Result<QSeries> {
    standard_catalog().series(name, w, n)
}

pub fn catalog_series_inverted(name: &str, w: &WValue, n: i64) -> Result<QSeries> {
    standard_catalog().series_inverted(name, w, n)
}

/// `R(w;q)`, the Dyson rank generating function.
pub fn rank_series(w: &WValue, n: i64) -> Result<QSeries> {
    catalog_series("R", w, n)
}

/// `O2(w;q)`, the overpartition rank generating function.
pub fn overpartition_rank_series(w: &WValue, n: i64) -> Result<QSeries> {
    catalog_series("O2", w, n)
}
