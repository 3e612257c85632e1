//! The built-in named functions.

use std::collections::BTreeMap;

use super::eval::Evaluator;
use super::mutate;
use super::build::*;
use super::{CatalogEntry, Recipe, WMode};
use crate::algebra::int;
use crate::error::{QError, Result};
use crate::hyperterm::{Character, HypergeometricTerm as Term, QuadPoly as Qp, WValue};
use crate::qseries::{QSeries, QSub};

pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: BTreeMap<String, usize>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::standard()
    }
}

impl Catalog {
    pub fn from_entries(entries: Vec<CatalogEntry>) -> Self {
        let index = entries.iter().enumerate().map(|(i, e)| (e.name.clone(), i)).collect();
        Catalog { entries, index }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.name.as_str())
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.index
            .get(name)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| QError::UnknownName(name.to_string()))
    }

    pub fn evaluator(&self) -> Evaluator<'_> {
        Evaluator::new(self)
    }

    /// `name(w; q)` to order `n`.
    pub fn series(&self, name: &str, w: &WValue, n: i64) -> Result<QSeries> {
        self.get(name)?;
        self.evaluator().eval(&Recipe::named(name), n, w)
    }

    /// `name(w; 1/q)` as a series in `q`, to order `n`.
    pub fn series_inverted(&self, name: &str, w: &WValue, n: i64) -> Result<QSeries> {
        self.get(name)?;
        let r = Recipe::named(name).inverted();
        self.evaluator().expandable(&r, 0).map_err(|e| unsupported(name, e))?;
        self.evaluator().eval(&r, n, w).map_err(|e| unsupported(name, e))
    }

    /// Regimes (`direct`, `inverted`) in which `name` can be expanded.
    pub fn regimes(&self, name: &str) -> Result<Vec<&'static str>> {
        let ev = self.evaluator();
        let mut out = Vec::new();
        if ev.expandable(&Recipe::named(name), 0).is_ok() {
            out.push("direct");
        }
        if ev.expandable(&Recipe::named(name).inverted(), 0).is_ok() {
            out.push("inverted");
        }
        Ok(out)
    }

    /// Number of sign sites in the recipe of `name`.
    pub fn sign_sites(&self, name: &str) -> Result<usize> {
        Ok(mutate::count(&self.get(name)?.recipe))
    }

    /// A copy with the `site`-th sign in `name` flipped.
    pub fn mutated(&self, name: &str, site: usize) -> Result<Catalog> {
        let i = *self.index.get(name).ok_or_else(|| QError::UnknownName(name.to_string()))?;
        let mut entries = self.entries.clone();
        if !mutate::flip(&mut entries[i].recipe, site) {
            return Err(QError::InvalidTerm(format!("`{name}` has no sign site {site}")));
        }
        Ok(Catalog::from_entries(entries))
    }

    /// Catalog entries whose recipes reach `name` through named references,
    /// including `name` itself.
    pub fn dependents(&self, name: &str) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| self.reaches(&e.name, name, 0))
            .map(|e| e.name.clone())
            .collect()
    }

    fn reaches(&self, from: &str, to: &str, depth: usize) -> bool {
        if from == to {
            return true;
        }
        if depth > 64 {
            return false;
        }
        let Ok(e) = self.get(from) else { return false };
        let mut refs = Vec::new();
        e.recipe.references(&mut refs);
        refs.iter().any(|r| self.reaches(r, to, depth + 1))
    }

    pub fn standard() -> Self {
        Catalog::from_entries(standard_entries())
    }
}

fn unsupported(name: &str, e: QError) -> QError {
    match e {
        QError::UnsupportedRegime { reason, .. } | QError::NotFormallySummable(reason) | QError::NotInvertible(reason) => {
            QError::UnsupportedRegime { name: name.to_string(), regime: "inverted".into(), reason }
        }
        other => other,
    }
}

fn entry(name: &str, anchor: &str, recipe: Recipe) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        anchor: anchor.to_string(),
        w_mode: WMode::Symbolic,
        recipe,
    }
}

/// `w^{-1} psi1(w; q) + 1`
fn psi1_shifted() -> Recipe {
    Recipe::Sum(vec![Recipe::named("psi1").scale(wp(-1)), Recipe::constant(c(1, 1))])
}

fn standard_entries() -> Vec<CatalogEntry> {
    let half = |a, b, cc| Qp::frac(a, b, cc, 2);
    vec![
        entry(
            "psi",
            "psi(q) = sum_{n>=0} (-12/n) q^{(n^2-1)/24}",
            term(Term::new().character(Character::KroneckerMinus12).q(Qp::frac(1, 0, -1, 24))),
        ),
        entry(
            "R",
            "R(w;q) = sum_{n>=0} q^{n^2} / ((wq)_n (w^{-1}q)_n)",
            term(Term::new().q(Qp::int(1, 0, 0)).factor(den(1, 1, 1, 1, 0)).factor(den(1, -1, 1, 1, 0))),
        ),
        entry(
            "f",
            "f(q) = sum_{n>=0} q^{n^2} / (-q)_n^2",
            term(Term::new().q(Qp::int(1, 0, 0)).factor(den(-1, 0, 1, 1, 0).times(2))),
        ),
        entry(
            "fstar",
            "f*(q) = 1 + sum_{n>=1} (-1)^{n+1} q^n / (-q)_n",
            Recipe::Sum(vec![
                Recipe::constant(c(1, 1)),
                term(Term::new().start(1).sign(Qp::linear(1, 1)).q(Qp::linear(1, 0)).factor(den(-1, 0, 1, 1, 0))),
            ]),
        ),
        entry(
            "S",
            "S(q) = (-q)_inf^{-2} sum_{n>=0} (-1)^n q^{n(n+1)/2}",
            Recipe::Prod(vec![
                Recipe::Product(vec![den_inf(-1, 0, 1, 1).times(2)]),
                term(Term::new().sign(Qp::linear(1, 0)).q(half(1, 1, 0))),
            ]),
        ),
        entry(
            "phi",
            "phi(q) = sum_{n>=0} q^{n^2} / (-q^2;q^2)_n",
            term(Term::new().q(Qp::int(1, 0, 0)).factor(den(-1, 0, 2, 2, 0))),
        ),
        entry(
            "T",
            "T(q) = (q^2;q^2)_inf^7 / ((q)_inf^3 (q^4;q^4)_inf^3)",
            Recipe::Product(vec![
                num_inf(1, 0, 2, 2).times(7),
                den_inf(1, 0, 1, 1).times(3),
                den_inf(1, 0, 4, 4).times(3),
            ]),
        ),
        entry(
            "g2",
            "g2(w;q) = sum_{n>=0} (-q)_n q^{n(n+1)/2} / (w, w^{-1}q)_{n+1}",
            term(
                Term::new()
                    .q(half(1, 1, 0))
                    .factor(num(-1, 0, 1, 1, 0))
                    .factor(den(1, 1, 0, 1, 1))
                    .factor(den(1, -1, 1, 1, 1)),
            ),
        ),
        entry(
            "g3",
            "g3(w;q) = sum_{n>=0} q^{n(n+1)} / (w, w^{-1}q)_{n+1}",
            term(Term::new().q(Qp::int(1, 1, 0)).factor(den(1, 1, 0, 1, 1)).factor(den(1, -1, 1, 1, 1))),
        ),
        entry(
            "K",
            "K(w;q) = sum_{n>=0} (-1)^n q^{n^2} (q;q^2)_n / (wq^2, w^{-1}q^2; q^2)_n",
            term(
                Term::new()
                    .sign(Qp::linear(1, 0))
                    .q(Qp::int(1, 0, 0))
                    .factor(num(1, 0, 1, 2, 0))
                    .factor(den(1, 1, 2, 2, 0))
                    .factor(den(1, -1, 2, 2, 0)),
            ),
        ),
        entry("g3_1", "g3_1(w;q) = g3(w;q)", Recipe::named("g3")),
        entry(
            "g3_2",
            "g3_2(w;q) = -w^{-1} + R(w;q) / (w(1-w))",
            Recipe::Sum(vec![
                Recipe::constant(cw(-1, 1, -1)),
                Recipe::named("R").scale(div(c(1, 1), wp(1).sub(&wp(2)))),
            ]),
        ),
        entry(
            "g3_3",
            "g3_3(w;q) = sum_{n>=0} w^{-n} q^n / (w)_{n+1}",
            term(Term::new().w(Qp::linear(-1, 0)).q(Qp::linear(1, 0)).factor(den(1, 1, 0, 1, 1))),
        ),
        entry(
            "psi1",
            "psi1(w;q) = -w - w^2 sum_{n>=0} (12/n) w^{(n-1)/2} q^{(n^2-1)/24}",
            Recipe::Sum(vec![
                Recipe::constant(cw(-1, 1, 1)),
                term(
                    Term::new()
                        .coeff(int(-1))
                        .character(Character::Kronecker12)
                        .w(Qp::frac(0, 1, 3, 2))
                        .q(Qp::frac(1, 0, -1, 24)),
                ),
            ]),
        ),
        entry(
            "psi2",
            "psi2(w;q) = sum_{n>=0} w^n q^{n(n+1)/2}",
            term(Term::new().w(Qp::linear(1, 0)).q(half(1, 1, 0))),
        ),
        entry(
            "S2",
            "S2(w;q) = w^2 psi2(-w^2;q) / (wq, w^{-1})_inf",
            Recipe::Prod(vec![
                Recipe::Product(vec![den_inf(1, 1, 1, 1), den_inf(1, -1, 0, 1)]).scale(wp(2)),
                Recipe::named("psi2").sub_w(int(-1), 2),
            ]),
        ),
        entry(
            "O2",
            "O2(w;q) = sum_{n>=0} (-1)_n q^{n(n+1)/2} / (wq, w^{-1}q)_n",
            term(
                Term::new()
                    .q(half(1, 1, 0))
                    .factor(num(-1, 0, 0, 1, 0))
                    .factor(den(1, 1, 1, 1, 0))
                    .factor(den(1, -1, 1, 1, 0)),
            ),
        ),
        entry("g2_1", "g2_1(w;q) = g2(w;q)", Recipe::named("g2")),
        entry(
            "g2_2",
            "g2_2(w;q) = (1+w) O2(w;q) / (2w(1-w)) - 1/(2w)",
            Recipe::Sum(vec![
                Recipe::named("O2").scale(div(c(1, 1).add(&wp(1)), cw(2, 1, 1).sub(&cw(2, 1, 2)))),
                Recipe::constant(cw(-1, 2, -1)),
            ]),
        ),
        entry(
            "g2_3",
            "g2_3(w;q) = -(1+w)/(2w^2) sum_{n>=0} (-wq)_n w^{-n} / (wq)_n - 1/(2w)",
            Recipe::Sum(vec![
                term(Term::new().w(Qp::linear(-1, 0)).factor(num(-1, 1, 1, 1, 0)).factor(den(1, 1, 1, 1, 0)))
                    .scale(div(c(-1, 1).sub(&wp(1)), cw(2, 1, 2))),
                Recipe::constant(cw(-1, 2, -1)),
            ]),
        ),
        entry(
            "psi3",
            "psi3(w;q) = sum_{n>=0} (-1)^{n+1} w^{2n+1} q^{n^2}",
            term(Term::new().sign(Qp::linear(1, 1)).w(Qp::linear(2, 1)).q(Qp::int(1, 0, 0))),
        ),
        entry(
            "psi4",
            "psi4(w;q) = sum_{n>=1} w^{3n-2} q^{(3n^2-n)/2} (1 - wq^n)",
            terms(vec![
                Term::new().start(1).w(Qp::linear(3, -2)).q(half(3, -1, 0)),
                Term::new().start(1).coeff(int(-1)).w(Qp::linear(3, -1)).q(half(3, 1, 0)),
            ]),
        ),
        entry(
            "S1",
            "S1(w;q) = (-q)_inf (w^{-1} psi1(w;q) + 1) / (-w^{-1}, -wq)_inf",
            Recipe::Prod(vec![
                Recipe::Product(vec![num_inf(-1, 0, 1, 1), den_inf(-1, -1, 0, 1), den_inf(-1, 1, 1, 1)]),
                psi1_shifted(),
            ]),
        ),
        entry(
            "S4",
            "S4(w;q) = (-q)_inf psi4(w;q) / (wq, w^{-1})_inf",
            Recipe::Prod(vec![
                Recipe::Product(vec![num_inf(-1, 0, 1, 1), den_inf(1, 1, 1, 1), den_inf(1, -1, 0, 1)]),
                Recipe::named("psi4"),
            ]),
        ),
        entry(
            "K1",
            "K1(w;q) = sum_{n>=1} (-1)^{n-1} q^{n^2} (q;q^2)_{n-1} / (wq, w^{-1}q; q^2)_n",
            term(
                Term::new()
                    .start(1)
                    .sign(Qp::linear(1, -1))
                    .q(Qp::int(1, 0, 0))
                    .factor(num(1, 0, 1, 2, -1))
                    .factor(den(1, 1, 1, 2, 0))
                    .factor(den(1, -1, 1, 2, 0)),
            ),
        ),
        entry(
            "kappa",
            "kappa(w;q) = sum_{n>=0} q^{n+1} w^{-n} (wq^2;q^2)_n / (wq;q^2)_{n+1}",
            term(
                Term::new()
                    .w(Qp::linear(-1, 0))
                    .q(Qp::linear(1, 1))
                    .factor(num(1, 1, 2, 2, 0))
                    .factor(den(1, 1, 1, 2, 1)),
            ),
        ),
        entry(
            "psi5",
            "psi5(w;q) = sum_{n>=0} (n/3) (-w)^{n-1} q^{(n^2-1)/3}",
            term(
                Term::new()
                    .character(Character::Legendre3)
                    .sign(Qp::linear(1, -1))
                    .w(Qp::linear(1, -1))
                    .q(Qp::frac(1, 0, -1, 3)),
            ),
        ),
        entry(
            "s1",
            "s1(w;q) = (q;q^2)_inf (w^{-1} psi1(w;q^2) + 1) / (w (wq, w^{-1}q; q^2)_inf)",
            Recipe::Prod(vec![
                Recipe::Product(vec![num_inf(1, 0, 1, 2), den_inf(1, 1, 1, 2), den_inf(1, -1, 1, 2)]).scale(wp(-1)),
                psi1_shifted().sub_q(QSub::Power(2)),
            ]),
        ),
        entry(
            "S5",
            "S5(w;q) = w (q;q^2)_inf psi5(w;q) / (wq^2, w^{-1}q^2; q^2)_inf",
            Recipe::Prod(vec![
                Recipe::Product(vec![num_inf(1, 0, 1, 2), den_inf(1, 1, 2, 2), den_inf(1, -1, 2, 2)]).scale(wp(1)),
                Recipe::named("psi5"),
            ]),
        ),
    ]
}

