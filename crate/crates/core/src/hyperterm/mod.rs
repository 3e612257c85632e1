//! q-hypergeometric summand families and the passes that act on them.
//!
//! A [`HypergeometricTerm`] describes `sum_{n >= n_start} s(n)` with
//!
//! ```text
//! s(n) = const * ratio^n * (-1)^{P(n)} * chi(n) * w^{L(n)} * q^{Q(n)}
//!        * prod (x_i; b_i)_{n + d_i}^{+-mult_i}
//! ```
//!
//! where `P`, `L`, `Q` are quadratic polynomials that are integer valued on
//! the support of `chi`, and each `(x; b)` is a q-Pochhammer symbol with a
//! monomial argument `x = c w^e q^k` and base `b = +-q^s`.

mod expand;
mod fine;
mod products;
mod rewrite;

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{pow_i, serde_rational, to_i64};
use crate::algebra::{int, Rational, RationalFunctionW};
use crate::error::{QError, Result};
use crate::oracles::kronecker;
use crate::qseries::QSeries;

pub use expand::{expand_term, strategy, tail_expand, term_expand, term_min_qorder, Strategy};
pub use fine::{fine_expand, fine_expand_direct, fine_expand_recurrence, FineForm};
pub use products::{appell_lerch_expand, poch_inf_expand, theta_expand, AppellKind};
pub use rewrite::{term_invert_q, term_substitute};

type Rf = RationalFunctionW;

/// How `w` is interpreted during an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum WValue {
    #[default]
    Symbolic,
    At(Rational),
}

impl WValue {
    /// `c * w^e` in this context.
    pub fn monomial(&self, c: &Rational, e: i64) -> Result<Rf> {
        match self {
            WValue::Symbolic => Ok(Rf::monomial(c, e)),
            WValue::At(x) => {
                if x.is_zero() && e < 0 {
                    return Err(QError::Pole {
                        denominator: format!("w^{}", -e),
                        at: "0".into(),
                    });
                }
                Ok(Rf::constant(&(c * pow_i(x, e)?)))
            }
        }
    }

    /// A q-free coefficient expressed in this context.
    pub fn eval(&self, r: &Rf) -> Result<Rf> {
        match self {
            WValue::Symbolic => Ok(r.clone()),
            WValue::At(x) => Ok(Rf::constant(&r.eval(x)?)),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, WValue::Symbolic)
    }
}

impl fmt::Display for WValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WValue::Symbolic => write!(f, "symbolic"),
            WValue::At(x) => write!(f, "{x}"),
        }
    }
}

/// `c * w^e * q^k`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub w_exp: i64,
    pub q_exp: i64,
}

impl Monomial {
    pub fn new(coeff: Rational, w_exp: i64, q_exp: i64) -> Self {
        Monomial { coeff, w_exp, q_exp }
    }

    pub fn int(c: i64, w_exp: i64, q_exp: i64) -> Self {
        Self::new(int(c), w_exp, q_exp)
    }

    pub fn zero() -> Self {
        Self::int(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// True when the monomial is the constant 1.
    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.w_exp == 0 && self.q_exp == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial::new(&self.coeff * &o.coeff, self.w_exp + o.w_exp, self.q_exp + o.q_exp)
    }

    pub fn times_q(&self, k: i64) -> Monomial {
        Monomial::new(self.coeff.clone(), self.w_exp, self.q_exp + k)
    }

    /// The q-free part in the given context.
    pub fn coefficient(&self, w: &WValue) -> Result<Rf> {
        w.monomial(&self.coeff, self.w_exp)
    }

    pub fn to_series(&self, w: &WValue, order: i64) -> Result<QSeries> {
        Ok(QSeries::monomial(self.coefficient(w)?, self.q_exp, order))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.w_exp != 0 {
            write!(f, "*w^{}", self.w_exp)?;
        }
        if self.q_exp != 0 {
            write!(f, "*q^{}", self.q_exp)?;
        }
        Ok(())
    }
}

/// `c2 n^2 + c1 n + c0` with rational coefficients; serialized as
/// `[c2, c1, c0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadPoly {
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
}

impl QuadPoly {
    pub fn new(c2: Rational, c1: Rational, c0: Rational) -> Self {
        QuadPoly { c2, c1, c0 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `(a n^2 + b n + c) / d`
    pub fn frac(a: i64, b: i64, c: i64, d: i64) -> Self {
        let d = int(d);
        QuadPoly::new(int(a) / &d, int(b) / &d, int(c) / &d)
    }

    pub fn int(a: i64, b: i64, c: i64) -> Self {
        Self::frac(a, b, c, 1)
    }

    /// `b n + c`
    pub fn linear(b: i64, c: i64) -> Self {
        Self::int(0, b, c)
    }

    pub fn constant(c: i64) -> Self {
        Self::int(0, 0, c)
    }

    pub fn eval(&self, n: i64) -> Rational {
        let n = int(n);
        &self.c2 * &n * &n + &self.c1 * &n + &self.c0
    }

    pub fn eval_int(&self, n: i64) -> Result<i64> {
        let v = self.eval(n);
        to_i64(&v).ok_or_else(|| {
            QError::InvalidTerm(format!("exponent polynomial {self} is not integral at n = {n} ({v})"))
        })
    }

    pub fn add(&self, o: &QuadPoly) -> QuadPoly {
        QuadPoly::new(&self.c2 + &o.c2, &self.c1 + &o.c1, &self.c0 + &o.c0)
    }

    pub fn scale(&self, s: &Rational) -> QuadPoly {
        QuadPoly::new(&self.c2 * s, &self.c1 * s, &self.c0 * s)
    }

    pub fn is_linear(&self) -> bool {
        self.c2.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.c2.is_zero() && self.c1.is_zero()
    }

    /// `(n + d)`
    pub fn shifted_n(d: i64) -> QuadPoly {
        Self::linear(1, d)
    }

    /// `(n + d)(n + d - 1) / 2`
    pub fn shifted_triangular(d: i64) -> QuadPoly {
        Self::frac(1, 2 * d - 1, d * (d - 1), 2)
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})n^2 + ({})n + ({})", self.c2, self.c1, self.c0)
    }
}

impl Serialize for QuadPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.c2.to_string(), self.c1.to_string(), self.c0.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b, c] = <[String; 3]>::deserialize(d)?;
        let p = |s: &str| crate::algebra::parse_rational(s).map_err(serde::de::Error::custom);
        Ok(QuadPoly::new(p(&a)?, p(&b)?, p(&c)?))
    }
}

/// Character applied to the summation index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Character {
    #[default]
    Trivial,
    /// `(12/n)`
    Kronecker12,
    /// `(-12/n)`
    KroneckerMinus12,
    /// `(n/3)`
    Legendre3,
}

impl Character {
    pub fn eval(self, n: i64) -> i32 {
        if n < 0 {
            return 0;
        }
        match self {
            Character::Trivial => 1,
            Character::Kronecker12 => kronecker(12, n as u64),
            Character::KroneckerMinus12 => kronecker(-12, n as u64),
            Character::Legendre3 => kronecker(n, 3),
        }
    }
}

/// Length of a finite Pochhammer product, `n + shift`, or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Length {
    Shift(i64),
    Infinite,
}

impl From<Length> for String {
    fn from(l: Length) -> String {
        match l {
            Length::Infinite => "inf".into(),
            Length::Shift(0) => "n".into(),
            Length::Shift(d) if d > 0 => format!("n+{d}"),
            Length::Shift(d) => format!("n{d}"),
        }
    }
}

impl TryFrom<String> for Length {
    type Error = String;
    fn try_from(s: String) -> std::result::Result<Self, String> {
        let t = s.replace(' ', "");
        if t == "inf" {
            return Ok(Length::Infinite);
        }
        let rest = t.strip_prefix('n').ok_or_else(|| format!("bad length `{s}`"))?;
        if rest.is_empty() {
            return Ok(Length::Shift(0));
        }
        let d = rest.trim_start_matches('+').parse::<i64>().map_err(|_| format!("bad length `{s}`"))?;
        Ok(Length::Shift(d))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Position {
    Numerator,
    Denominator,
}

/// `(c w^e q^k ; sign * q^s)_{length}` raised to `+-multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PochFactor {
    pub base_sign: i8,
    pub base_pow: i64,
    #[serde(with = "serde_rational")]
    pub arg_const: Rational,
    pub arg_wexp: i64,
    pub arg_qexp: i64,
    pub length: Length,
    pub position: Position,
    pub multiplicity: u32,
}

impl PochFactor {
    pub fn new(arg: Monomial, base_pow: i64, length: Length, position: Position) -> Self {
        PochFactor {
            base_sign: 1,
            base_pow,
            arg_const: arg.coeff,
            arg_wexp: arg.w_exp,
            arg_qexp: arg.q_exp,
            length,
            position,
            multiplicity: 1,
        }
    }

    /// `(arg; q^base)_{n+d}` in the numerator.
    pub fn num(arg: Monomial, base: i64, d: i64) -> Self {
        Self::new(arg, base, Length::Shift(d), Position::Numerator)
    }

    /// `(arg; q^base)_{n+d}` in the denominator.
    pub fn den(arg: Monomial, base: i64, d: i64) -> Self {
        Self::new(arg, base, Length::Shift(d), Position::Denominator)
    }

    /// `(arg; q^base)_inf` in the numerator.
    pub fn num_inf(arg: Monomial, base: i64) -> Self {
        Self::new(arg, base, Length::Infinite, Position::Numerator)
    }

    /// `(arg; q^base)_inf` in the denominator.
    pub fn den_inf(arg: Monomial, base: i64) -> Self {
        Self::new(arg, base, Length::Infinite, Position::Denominator)
    }

    pub fn times(mut self, m: u32) -> Self {
        self.multiplicity = m;
        self
    }

    pub fn arg(&self) -> Monomial {
        Monomial::new(self.arg_const.clone(), self.arg_wexp, self.arg_qexp)
    }

    pub fn set_arg(&mut self, m: Monomial) {
        self.arg_const = m.coeff;
        self.arg_wexp = m.w_exp;
        self.arg_qexp = m.q_exp;
    }

    fn validate(&self) -> Result<()> {
        if self.base_pow < 1 || !(self.base_sign == 1 || self.base_sign == -1) || self.multiplicity < 1 {
            return Err(QError::InvalidTerm(format!("malformed Pochhammer factor {self:?}")));
        }
        if self.arg_qexp < 0 {
            return Err(QError::InvalidTerm(format!(
                "Pochhammer argument with negative q-order in {self:?}"
            )));
        }
        Ok(())
    }

    /// Multiplies (numerator) or divides (denominator) `s` by the `j`-th
    /// factor `1 - arg * base^j`, skipping factors beyond the truncation.
    fn apply_index(&self, s: &QSeries, j: i64, w: &WValue) -> Result<QSeries> {
        let e = self.arg_qexp + self.base_pow * j;
        let sign = if self.base_sign < 0 && j % 2 == 1 { -1 } else { 1 };
        let c = &self.arg_const * int(sign);
        let mut out = s.clone();
        for _ in 0..self.multiplicity {
            out = match self.position {
                Position::Numerator => {
                    if e == 0 && c.is_one() && self.arg_wexp == 0 {
                        return Ok(QSeries::zero(s.order()));
                    }
                    out.mul_one_minus(&w.monomial(&c, self.arg_wexp)?, e)
                }
                Position::Denominator => divide_one_minus(&out, &c, self.arg_wexp, e, w)?,
            };
        }
        Ok(out)
    }
}

/// Divides by `1 - c w^we q^e`, reporting identically vanishing factors as
/// degenerate and factors that vanish only at the sampled `w` as poles.
pub(crate) fn divide_one_minus(s: &QSeries, c: &Rational, we: i64, e: i64, w: &WValue) -> Result<QSeries> {
    if e == 0 && c.is_one() && we == 0 {
        return Err(QError::DegenerateFactor("denominator factor (1 - 1) vanishes".into()));
    }
    let m = w.monomial(c, we)?;
    if e == 0 && m.is_one() {
        return Err(QError::Pole {
            denominator: format!("1 - {}", Monomial::new(c.clone(), we, 0)),
            at: w.to_string(),
        });
    }
    s.div_one_minus(&m, e)
}

/// One summand family; see the module documentation for the shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HypergeometricTerm {
    pub sign_poly: QuadPoly,
    #[serde(default)]
    pub character: Character,
    pub w_exp: QuadPoly,
    pub q_exp: QuadPoly,
    #[serde(rename = "const", with = "serde_rational")]
    pub coeff: Rational,
    #[serde(with = "serde_rational", default = "Rational::one")]
    pub ratio: Rational,
    #[serde(default)]
    pub factors: Vec<PochFactor>,
    #[serde(default)]
    pub n_start: i64,
}

impl Default for HypergeometricTerm {
    fn default() -> Self {
        HypergeometricTerm {
            sign_poly: QuadPoly::zero(),
            character: Character::Trivial,
            w_exp: QuadPoly::zero(),
            q_exp: QuadPoly::zero(),
            coeff: Rational::one(),
            ratio: Rational::one(),
            factors: Vec::new(),
            n_start: 0,
        }
    }
}

impl HypergeometricTerm {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sign(mut self, p: QuadPoly) -> Self {
        self.sign_poly = p;
        self
    }

    pub fn character(mut self, c: Character) -> Self {
        self.character = c;
        self
    }

    pub fn w(mut self, p: QuadPoly) -> Self {
        self.w_exp = p;
        self
    }

    pub fn q(mut self, p: QuadPoly) -> Self {
        self.q_exp = p;
        self
    }

    pub fn coeff(mut self, c: Rational) -> Self {
        self.coeff = c;
        self
    }

    pub fn ratio(mut self, r: Rational) -> Self {
        self.ratio = r;
        self
    }

    pub fn start(mut self, n: i64) -> Self {
        self.n_start = n;
        self
    }

    pub fn factor(mut self, f: PochFactor) -> Self {
        self.factors.push(f);
        self
    }

    /// Checks the structural invariants that do not depend on `n`.
    pub fn validate(&self) -> Result<()> {
        if self.n_start < 0 {
            return Err(QError::InvalidTerm("n_start must be nonnegative".into()));
        }
        for f in &self.factors {
            f.validate()?;
        }
        Ok(())
    }

    /// The `n`-th summand, expanded to `order`; `None` off the character's
    /// support.
    pub fn summand(&self, n: i64, order: i64, w: &WValue) -> Result<Option<QSeries>> {
        let chi = self.character.eval(n);
        if chi == 0 {
            return Ok(None);
        }
        let parity = self.sign_poly.eval_int(n)?.rem_euclid(2);
        let we = self.w_exp.eval_int(n)?;
        let qe = self.q_exp.eval_int(n)?;
        if qe > order {
            return Ok(Some(QSeries::zero(order)));
        }
        let sign = if parity == 1 { -chi } else { chi };
        let c = &self.coeff * pow_i(&self.ratio, n)? * int(sign as i64);
        let mut s = QSeries::monomial(w.monomial(&c, we)?, qe, order);
        for f in &self.factors {
            match f.length {
                Length::Shift(d) => {
                    let len = n + d;
                    if len < 0 {
                        return Err(QError::InvalidTerm(format!(
                            "negative Pochhammer length n{d:+} at n = {n}"
                        )));
                    }
                    for j in 0..len {
                        if f.arg_qexp + f.base_pow * j > order - qe {
                            break;
                        }
                        s = f.apply_index(&s, j, w)?;
                    }
                }
                Length::Infinite => {
                    let mut j = 0;
                    while f.arg_qexp + f.base_pow * j <= order - qe {
                        s = f.apply_index(&s, j, w)?;
                        j += 1;
                    }
                }
            }
        }
        Ok(Some(s))
    }
}
