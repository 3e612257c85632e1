//! Small constructors shared by the catalog and the identity registry.

use super::{Recipe, Rf};
use crate::algebra::{int, rat};
use crate::hyperterm::{HypergeometricTerm as Term, Monomial as M, PochFactor as P};

/// `w^k`
pub fn wp(k: i64) -> Rf {
    Rf::monomial(&int(1), k)
}

pub fn c(n: i64, d: i64) -> Rf {
    Rf::constant(&rat(n, d))
}

/// `c w^k`
pub fn cw(n: i64, d: i64, k: i64) -> Rf {
    Rf::monomial(&rat(n, d), k)
}

pub fn div(a: Rf, b: Rf) -> Rf {
    a.div(&b).expect("nonzero constant denominator")
}

pub fn term(t: Term) -> Recipe {
    Recipe::Term(t)
}

/// Sum of several summand families.
pub fn terms(ts: Vec<Term>) -> Recipe {
    Recipe::Sum(ts.into_iter().map(Recipe::Term).collect())
}

/// `(x; q^s)_{n+d}` in the denominator, `x = c w^e q^k`.
pub fn den(cn: i64, e: i64, k: i64, s: i64, d: i64) -> P {
    P::den(M::int(cn, e, k), s, d)
}

pub fn num(cn: i64, e: i64, k: i64, s: i64, d: i64) -> P {
    P::num(M::int(cn, e, k), s, d)
}

pub fn den_inf(cn: i64, e: i64, k: i64, s: i64) -> P {
    P::den_inf(M::int(cn, e, k), s)
}

pub fn num_inf(cn: i64, e: i64, k: i64, s: i64) -> P {
    P::num_inf(M::int(cn, e, k), s)
}

/// `(q; q)_inf`
pub fn euler_product() -> Recipe {
    Recipe::Product(vec![num_inf(1, 0, 1, 1)])
}


/// `sum n_i/d_i w^{k_i}` from `(n, d, k)` triples.
pub fn wpoly(terms: &[(i64, i64, i64)]) -> Rf {
    terms.iter().fold(Rf::zero(), |acc, &(n, d, k)| acc.add(&cw(n, d, k)))
}

/// `sum c_i w^{e_i} q^{k_i}` from `(c, e, k)` triples.
pub fn qpoly(terms: &[(i64, i64, i64)]) -> Recipe {
    Recipe::poly(terms.iter().map(|&(n, e, k)| (cw(n, 1, e), k)).collect())
}
