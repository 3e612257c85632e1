//! Exact-arithmetic engine for truncated q-series over Q(w).
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: rationals, Laurent polynomials and the field Q(w);
//! - [`qseries`]: truncated Laurent series in `q` with tracked validity;
//! - [`hyperterm`]: q-hypergeometric summand families and their expansion,
//!   the `q -> 1/q` rewrite, Fine-shift resummation, products, and bilateral
//!   theta and Appell-Lerch sums;
//! - [`special`]: the named-function catalog;
//! - [`oracles`]: brute-force partition statistics and Kronecker symbols;
//! - [`verify`]: the identity registry and exact coefficient comparison.

pub mod algebra;
pub mod error;
pub mod hyperterm;
pub mod oracles;
pub mod qseries;
pub mod special;
pub mod verify;

pub use algebra::{LaurentPolyW, Rational, RationalFunctionW};
pub use error::{QError, Result};
pub use hyperterm::{expand_term, HypergeometricTerm, Monomial, PochFactor, WValue};
pub use qseries::{QSeries, QSub, EXACT};
pub use special::{Catalog, CatalogEntry, Recipe};
pub use verify::{Identity, Report, Status};
