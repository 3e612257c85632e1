//! Exact coefficient arithmetic: rationals, Laurent polynomials in `w`, and
//! the rational function field Q(w).

mod laurent;
mod poly;
mod ratfun;
pub mod rational;

pub use laurent::LaurentPolyW;
pub use poly::ZPoly;
pub use ratfun::RationalFunctionW;
pub use rational::{int, parse_rational, rat, Rational};
