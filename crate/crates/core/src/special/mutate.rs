//! Single-sign mutations of recipes, used to check that the identity
//! registry actually constrains every catalog entry.
//!
//! Sites are visited in a fixed pre-order: monomial and scale
//! coefficients, term constants, Pochhammer argument constants, theta
//! ratios and Fine arguments.

use num_traits::Zero;

use super::Recipe;
use crate::hyperterm::PochFactor;

fn walk(r: &mut Recipe, next: &mut usize, target: usize) -> bool {
    let mut hit = |flag: &mut dyn FnMut()| {
        let here = *next == target;
        *next += 1;
        if here {
            flag();
        }
        here
    };
    let factors = |fs: &mut Vec<PochFactor>, hit: &mut dyn FnMut(&mut dyn FnMut()) -> bool| {
        for f in fs.iter_mut() {
            if !f.arg_const.is_zero() && hit(&mut || f.arg_const = -f.arg_const.clone()) {
                return true;
            }
        }
        false
    };
    match r {
        Recipe::Mono(c, _) => hit(&mut || *c = c.neg()),
        Recipe::Scale(c, inner) => hit(&mut || *c = c.neg()) || walk(inner, next, target),
        Recipe::Term(t) => {
            if hit(&mut || t.coeff = -t.coeff.clone()) {
                return true;
            }
            factors(&mut t.factors, &mut hit)
        }
        Recipe::Product(fs) => factors(fs, &mut hit),
        Recipe::Theta { c, .. } => hit(&mut || *c = -c.clone()),
        Recipe::Fine { a, b, t, .. } => {
            for m in [a, b, t] {
                if !m.coeff.is_zero() && hit(&mut || m.coeff = -m.coeff.clone()) {
                    return true;
                }
            }
            false
        }
        Recipe::AppellLerch(_) | Recipe::Named(_) => false,
        Recipe::Inverted(inner)
        | Recipe::SubW { inner, .. }
        | Recipe::SubQ { inner, .. }
        | Recipe::AtW { inner, .. }
        | Recipe::Reciprocal(inner) => walk(inner, next, target),
        Recipe::Sum(rs) | Recipe::Prod(rs) => rs.iter_mut().any(|x| walk(x, next, target)),
    }
}

/// Number of sign sites.
pub fn count(r: &Recipe) -> usize {
    let mut copy = r.clone();
    let mut n = 0;
    walk(&mut copy, &mut n, usize::MAX);
    n
}

/// Flips site `site`; false if there is no such site.
pub fn flip(r: &mut Recipe, site: usize) -> bool {
    let mut n = 0;
    walk(r, &mut n, site)
}
