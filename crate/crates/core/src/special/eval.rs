//! Recipe evaluation and the mechanical `q -> 1/q` rewrite of recipes.

use super::{Catalog, Recipe};
use crate::algebra::rational::pow_i;
use crate::error::{QError, Result};
use crate::hyperterm::{
    appell_lerch_expand, expand_term, fine_expand, poch_inf_expand, strategy, term_invert_q, theta_expand,
    WValue,
};
use crate::qseries::{QSeries, QSub};

/// Nesting bound for named references; guards against cyclic catalogs.
const MAX_DEPTH: usize = 64;

pub struct Evaluator<'a> {
    catalog: &'a Catalog,
}

impl<'a> Evaluator<'a> {
    pub fn new(catalog: &'a Catalog) -> Self {
        Evaluator { catalog }
    }

    /// Expands `r` to order `n`.
    pub fn eval(&self, r: &Recipe, n: i64, w: &WValue) -> Result<QSeries> {
        Ok(self.go(r, n, w, 0)?.with_order(n))
    }

    fn lookup(&self, name: &str, depth: usize) -> Result<&Recipe> {
        if depth > MAX_DEPTH {
            return Err(QError::InvalidTerm(format!("catalog references nest too deeply at `{name}`")));
        }
        Ok(&self.catalog.get(name)?.recipe)
    }

    fn go(&self, r: &Recipe, n: i64, w: &WValue, depth: usize) -> Result<QSeries> {
        match r {
            Recipe::Mono(c, k) => Ok(QSeries::monomial(w.eval(c)?, *k, n)),
            Recipe::Term(t) => expand_term(t, n, w),
            Recipe::Product(fs) => poch_inf_expand(fs, n, w),
            Recipe::Theta { c, w_exp, a, b } => theta_expand(c, *w_exp, a, b, n, w),
            Recipe::AppellLerch(kind) => appell_lerch_expand(*kind, n, w),
            Recipe::Fine { a, b, t, base } => fine_expand(a, b, t, *base, n, w),
            Recipe::Named(name) => self.go(self.lookup(name, depth)?, n, w, depth + 1),
            Recipe::Inverted(inner) => {
                let flipped = self.invert(inner, depth)?;
                self.go(&flipped, n, w, depth + 1)
            }
            Recipe::SubW { c, k, inner } => match w {
                WValue::Symbolic => {
                    let s = self.go(inner, n, w, depth + 1)?;
                    let terms = s
                        .terms()
                        .map(|(e, x)| Ok((e, x.substitute(c, *k)?)))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(QSeries::from_terms(terms, s.order()))
                }
                WValue::At(x) => {
                    let v = WValue::At(c * pow_i(x, *k)?);
                    self.go(inner, n, &v, depth + 1)
                }
            },
            Recipe::SubQ { sub, inner } => {
                let m = match sub {
                    QSub::Negate => n,
                    QSub::Power(m) => n.div_euclid((*m).max(1) as i64),
                };
                Ok(self.go(inner, m, w, depth + 1)?.substitute(*sub))
            }
            Recipe::AtW { w: x, inner } => self.go(inner, n, &WValue::At(x.clone()), depth + 1),
            Recipe::Sum(rs) => {
                let mut acc = QSeries::zero(n);
                for r in rs {
                    acc = acc.add(&self.go(r, n, w, depth + 1)?);
                }
                Ok(acc)
            }
            Recipe::Prod(rs) => self.product(rs, n, w, depth),
            Recipe::Scale(c, inner) => Ok(self.go(inner, n, w, depth + 1)?.scale(&w.eval(c)?)),
            Recipe::Reciprocal(inner) => {
                let mut s = self.go(inner, n, w, depth + 1)?.with_order(n);
                let v = s.min_order();
                if v > 0 && v <= n {
                    s = self.go(inner, n + 2 * v, w, depth + 1)?.with_order(n + 2 * v);
                }
                s.invert()
            }
        }
    }

    /// Multiplies factors, re-expanding any factor whose precision is eaten
    /// by negative valuations elsewhere.
    fn product(&self, rs: &[Recipe], n: i64, w: &WValue, depth: usize) -> Result<QSeries> {
        let mut parts = rs
            .iter()
            .map(|r| self.go(r, n, w, depth + 1))
            .collect::<Result<Vec<_>>>()?;
        let vals: Vec<i64> = parts.iter().map(|s| s.min_order().min(0)).collect();
        let total: i64 = vals.iter().sum();
        if total < 0 {
            for (i, r) in rs.iter().enumerate() {
                let need = n - (total - vals[i]);
                if need > n {
                    parts[i] = self.go(r, need, w, depth + 1)?;
                }
            }
        }
        let mut acc = QSeries::one(n);
        for p in &parts {
            acc = acc.mul(p);
        }
        Ok(acc)
    }

    /// Rewrites a recipe under `q -> 1/q`. Hypergeometric terms go through
    /// the Pochhammer inversion; products and bilateral sums have no
    /// expansion in that regime.
    pub fn invert(&self, r: &Recipe, depth: usize) -> Result<Recipe> {
        let rec = |x: &Recipe| self.invert(x, depth + 1).map(Box::new);
        Ok(match r {
            Recipe::Mono(c, k) => Recipe::Mono(c.clone(), -k),
            Recipe::Term(t) => Recipe::Term(term_invert_q(t)?),
            Recipe::Named(name) => self.invert(self.lookup(name, depth)?, depth + 1)?,
            Recipe::Inverted(inner) => (**inner).clone(),
            Recipe::SubW { c, k, inner } => Recipe::SubW { c: c.clone(), k: *k, inner: rec(inner)? },
            Recipe::SubQ { sub, inner } => Recipe::SubQ { sub: *sub, inner: rec(inner)? },
            Recipe::AtW { w, inner } => Recipe::AtW { w: w.clone(), inner: rec(inner)? },
            Recipe::Sum(rs) => Recipe::Sum(rs.iter().map(|x| self.invert(x, depth + 1)).collect::<Result<_>>()?),
            Recipe::Prod(rs) => Recipe::Prod(rs.iter().map(|x| self.invert(x, depth + 1)).collect::<Result<_>>()?),
            Recipe::Scale(c, inner) => Recipe::Scale(c.clone(), rec(inner)?),
            Recipe::Reciprocal(inner) => Recipe::Reciprocal(rec(inner)?),
            Recipe::Product(_) | Recipe::Theta { .. } | Recipe::AppellLerch(_) | Recipe::Fine { .. } => {
                return Err(QError::UnsupportedRegime {
                    name: describe(r),
                    regime: "inverted".into(),
                    reason: "infinite products and bilateral sums do not converge at 1/q".into(),
                })
            }
        })
    }

    /// Whether every term in `r` has an expansion method, without expanding.
    pub fn expandable(&self, r: &Recipe, depth: usize) -> Result<()> {
        match r {
            Recipe::Term(t) => strategy(t).map(|_| ()),
            Recipe::Named(name) => self.expandable(self.lookup(name, depth)?, depth + 1),
            Recipe::Inverted(inner) => self.expandable(&self.invert(inner, depth)?, depth + 1),
            Recipe::SubW { inner, .. }
            | Recipe::SubQ { inner, .. }
            | Recipe::AtW { inner, .. }
            | Recipe::Scale(_, inner)
            | Recipe::Reciprocal(inner) => self.expandable(inner, depth + 1),
            Recipe::Sum(rs) | Recipe::Prod(rs) => rs.iter().try_for_each(|x| self.expandable(x, depth + 1)),
            _ => Ok(()),
        }
    }
}

fn describe(r: &Recipe) -> String {
    match r {
        Recipe::Product(_) => "infinite product".into(),
        Recipe::Theta { .. } => "theta series".into(),
        Recipe::AppellLerch(_) => "Appell-Lerch sum".into(),
        Recipe::Fine { .. } => "Fine function".into(),
        _ => "recipe".into(),
    }
}

