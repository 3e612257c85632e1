//! The registered identities, in a fixed order.

use super::{Identity, Mode};
use crate::algebra::{int, rat, Rational};
use crate::hyperterm::{AppellKind, Character, HypergeometricTerm as Term, Monomial as M, PochFactor as P, QuadPoly as Qp};
use crate::qseries::QSub;
use crate::special::build::*;
use crate::special::Recipe;

fn n(name: &str) -> Recipe {
    Recipe::named(name)
}

fn sum(rs: Vec<Recipe>) -> Recipe {
    Recipe::Sum(rs)
}

fn prod(rs: Vec<Recipe>) -> Recipe {
    Recipe::Prod(rs)
}

fn half(a: i64, b: i64, c: i64) -> Qp {
    Qp::frac(a, b, c, 2)
}

fn sym(id: &'static str, anchor: &'static str, build: super::Builder) -> Identity {
    Identity { id, anchor, mode: Mode::Symbolic, extra_params: &[], build }
}

fn sampled(id: &'static str, anchor: &'static str, params: &'static [&'static str], build: super::Builder) -> Identity {
    Identity { id, anchor, mode: Mode::Sampled, extra_params: params, build }
}

fn mono(c: &Rational, e: i64, k: i64) -> M {
    M::new(c.clone(), e, k)
}

fn fine(a: M, b: M, t: M) -> Recipe {
    Recipe::Fine { a, b, t, base: 1 }
}

/// `1 - w`
fn one_minus_w() -> Recipe {
    qpoly(&[(1, 0, 0), (-1, 1, 0)])
}

/// `sum_{n>=0} (-1)^{sn} w^{3n+e0} q^{(3n^2+n)/2} (1 - w^2 q^{2n+1})` with
/// `w -> w^{sign}`.
fn false_theta(sign: i64, alternating: bool) -> Recipe {
    let s = if alternating { Qp::linear(1, 0) } else { Qp::zero() };
    sum(vec![
        term(Term::new().sign(s.clone()).w(Qp::linear(3 * sign, 0)).q(half(3, 1, 0))),
        term(Term::new().sign(s).coeff(int(-1)).w(Qp::linear(3 * sign, 2 * sign)).q(half(3, 5, 2))),
    ])
}

pub fn registry() -> Vec<Identity> {
    vec![
        sym("rogers-1.1", "sum_{n>=0} (-1)^n q^{n(n+1)/2} / (-q)_n = psi(q)", |_| {
            (term(Term::new().sign(Qp::linear(1, 0)).q(half(1, 1, 0)).factor(den(-1, 0, 1, 1, 0))), n("psi"))
        }),
        sym("false-theta-form", "psi(q) = sum_{n>=0} q^{n(3n+1)/2} (1 - q^{2n+1})", |_| {
            (n("psi"), false_theta(0, false))
        }),
        sym("durfee", "R(1;q) = 1/(q)_inf", |_| (n("R").at_w(int(1)), euler_product().recip())),
        sym("f-eq-fstar", "f(q) = f*(q)", |_| (n("f"), n("fstar"))),
        sym("fstar-inv", "f*(1/q) = 2 psi(q)", |_| (n("fstar").inverted(), n("psi").scale(c(2, 1)))),
        sym("f-inv", "f(1/q) = 2 psi(q) - S(q)", |_| {
            (n("f").inverted(), sum(vec![n("psi").scale(c(2, 1)), n("S").neg()]))
        }),
        sym("phi-inv", "phi(-1/q) = psi(q)", |_| (n("phi").sub_q(QSub::Negate).inverted(), n("psi"))),
        sym("mtc-phi-f", "2 phi(q) = f(-q) + T(q)", |_| {
            (n("phi").scale(c(2, 1)), sum(vec![n("f").sub_q(QSub::Negate), n("T")]))
        }),
        sampled(
            "fine-shift-2.1",
            "F(a,b;t) = (1-b)/(1-t) + (b-atq)/(1-t) F(a,b;tq), t = wq",
            &["a", "b"],
            |p| {
                let (a, b) = (&p[0], &p[1]);
                let one = Rational::from_integer(1.into());
                let lhs = fine(mono(a, 0, 0), mono(b, 0, 0), M::int(1, 1, 1));
                let rhs = prod(vec![
                    qpoly(&[(1, 0, 0), (-1, 1, 1)]).recip(),
                    sum(vec![
                        Recipe::constant(crate::RationalFunctionW::constant(&(&one - b))),
                        prod(vec![
                            Recipe::poly(vec![
                                (crate::RationalFunctionW::constant(b), 0),
                                (crate::RationalFunctionW::monomial(&-a, 1), 2),
                            ]),
                            fine(mono(a, 0, 0), mono(b, 0, 0), M::int(1, 1, 2)),
                        ]),
                    ]),
                ]);
                (lhs, rhs)
            },
        ),
        sampled(
            "rogers-fine-2.2",
            "F(a/q,b/q;t) = sum_{n>=0} (a, atq/b)_n b^n t^n q^{n^2-n} (1 - atq^{2n}) / ((b)_n (t)_{n+1}), a = Aq, b = Bq, t = w",
            &["A", "B"],
            |p| {
                let (a, b) = (&p[0], &p[1]);
                let lhs = fine(mono(a, 0, 0), mono(b, 0, 0), M::int(1, 1, 0));
                let base = Term::new()
                    .factor(P::num(mono(a, 0, 1), 1, 0))
                    .factor(P::num(mono(&(a / b), 1, 1), 1, 0))
                    .factor(P::den(mono(b, 0, 1), 1, 0))
                    .factor(den(1, 1, 0, 1, 1))
                    .ratio(b.clone());
                let rhs = sum(vec![
                    term(base.clone().w(Qp::linear(1, 0)).q(Qp::int(1, 0, 0))),
                    term(base.coeff(-a.clone()).w(Qp::linear(1, 1)).q(Qp::int(1, 2, 1))),
                ]);
                (lhs, rhs)
            },
        ),
        sampled(
            "fine-12.2",
            "(1-t) F(a,b;t) = sum_{n>=0} (b/a)_n (-at)^n q^{n(n+1)/2} / ((bq)_n (tq)_n), t = w",
            &["a", "b"],
            |p| {
                let (a, b) = (&p[0], &p[1]);
                let lhs = prod(vec![one_minus_w(), fine(mono(a, 0, 0), mono(b, 0, 0), M::int(1, 1, 0))]);
                let rhs = term(
                    Term::new()
                        .ratio(-a.clone())
                        .w(Qp::linear(1, 0))
                        .q(half(1, 1, 0))
                        .factor(P::num(mono(&(b / a), 0, 0), 1, 0))
                        .factor(P::den(mono(b, 0, 1), 1, 0))
                        .factor(den(1, 1, 1, 1, 0)),
                );
                (lhs, rhs)
            },
        ),
        sampled(
            "fine-12.3",
            "(1-t) F(0,b;t) = sum_{n>=0} (bt)^n q^{n^2} / ((bq)_n (tq)_n), t = w",
            &["b"],
            |p| {
                let b = &p[0];
                let lhs = prod(vec![one_minus_w(), fine(M::zero(), mono(b, 0, 0), M::int(1, 1, 0))]);
                let rhs = term(
                    Term::new()
                        .ratio(b.clone())
                        .w(Qp::linear(1, 0))
                        .q(Qp::int(1, 0, 0))
                        .factor(P::den(mono(b, 0, 1), 1, 0))
                        .factor(den(1, 1, 1, 1, 0)),
                );
                (lhs, rhs)
            },
        ),
        sym("fine-14.31", "(1-a) F(a,-a;a) = 1 + 2 sum_{n>=1} (-1)^n a^{2n} q^{n^2}, a = w", |_| {
            (
                prod(vec![one_minus_w(), fine(M::int(1, 1, 0), M::int(-1, 1, 0), M::int(1, 1, 0))]),
                sum(vec![
                    Recipe::constant(c(1, 1)),
                    term(Term::new().start(1).coeff(int(2)).sign(Qp::linear(1, 0)).w(Qp::linear(2, 0)).q(Qp::int(1, 0, 0))),
                ]),
            )
        }),
        sampled(
            "andrews-2.6",
            "sum_{n>=0} (B, -Abq)_n q^n / (-aq, -bq)_n = -a^{-1} (B, -Abq)_inf / (-aq, -bq)_inf sum_{m>=0} (A^{-1})_m (Aba^{-1}q)^m / (-Ba^{-1})_{m+1} + (1+a^{-1})(1+b) sum_{m>=0} (-a^{-1}q, -a^{-1}ABq)_m (-b)^m / (-Ba^{-1}, Aba^{-1}q)_{m+1}",
            &["A", "B", "a", "b"],
            |p| {
                let (aa, bb, a, b) = (&p[0], &p[1], &p[2], &p[3]);
                let one = Rational::from_integer(1.into());
                let rf = |x: Rational| crate::RationalFunctionW::constant(&x);
                let lhs = term(
                    Term::new()
                        .q(Qp::linear(1, 0))
                        .factor(P::num(mono(bb, 0, 0), 1, 0))
                        .factor(P::num(mono(&-(aa * b), 0, 1), 1, 0))
                        .factor(P::den(mono(&-a.clone(), 0, 1), 1, 0))
                        .factor(P::den(mono(&-b.clone(), 0, 1), 1, 0)),
                );
                let first = prod(vec![
                    Recipe::Product(vec![
                        P::num_inf(mono(bb, 0, 0), 1),
                        P::num_inf(mono(&-(aa * b), 0, 1), 1),
                        P::den_inf(mono(&-a.clone(), 0, 1), 1),
                        P::den_inf(mono(&-b.clone(), 0, 1), 1),
                    ]),
                    term(
                        Term::new()
                            .ratio(aa * b / a)
                            .q(Qp::linear(1, 0))
                            .factor(P::num(mono(&aa.recip(), 0, 0), 1, 0))
                            .factor(P::den(mono(&-(bb / a), 0, 0), 1, 1)),
                    ),
                ])
                .scale(rf(-a.recip()));
                let second = term(
                    Term::new()
                        .ratio(-b.clone())
                        .factor(P::num(mono(&-a.recip(), 0, 1), 1, 0))
                        .factor(P::num(mono(&-(aa * bb / a), 0, 1), 1, 0))
                        .factor(P::den(mono(&-(bb / a), 0, 0), 1, 1))
                        .factor(P::den(mono(&(aa * b / a), 0, 1), 1, 1)),
                )
                .scale(rf((&one + a.recip()) * (&one + b)));
                (lhs, sum(vec![first, second]))
            },
        ),
        sym(
            "ram-2.7",
            "sum_{n>=0} q^n / (-aq, -a^{-1}q)_n = (1+a) sum_{n>=0} a^{3n} q^{n(3n+1)/2} (1 - a^2 q^{2n+1}) - a / (-aq, -a^{-1}q)_inf sum_{n>=0} (-1)^n a^{2n} q^{n(n+1)/2}, a = w",
            |_| {
                let lhs = term(Term::new().q(Qp::linear(1, 0)).factor(den(-1, 1, 1, 1, 0)).factor(den(-1, -1, 1, 1, 0)));
                let rhs = sum(vec![
                    false_theta(1, false).scale(wpoly(&[(1, 1, 0), (1, 1, 1)])),
                    prod(vec![
                        Recipe::Product(vec![den_inf(-1, 1, 1, 1), den_inf(-1, -1, 1, 1)]),
                        term(Term::new().sign(Qp::linear(1, 0)).w(Qp::linear(2, 0)).q(half(1, 1, 0))),
                    ])
                    .scale(cw(-1, 1, 1)),
                ]);
                (lhs, rhs)
            },
        ),
        sym(
            "ram-2.8",
            "sum_{n>=0} (-1)^n a^{2n} q^{n(n+1)/2} / (-aq)_n = sum_{n>=0} a^{3n} q^{n(3n+1)/2} (1 - a^2 q^{2n+1}), a = w",
            |_| {
                let lhs = term(
                    Term::new().sign(Qp::linear(1, 0)).w(Qp::linear(2, 0)).q(half(1, 1, 0)).factor(den(-1, 1, 1, 1, 0)),
                );
                (lhs, false_theta(1, false))
            },
        ),
        sym(
            "ram-2.9",
            "(1+a^{-1}) sum_{n>=0} q^{2n+1} (q;q^2)_n / (-aq, -a^{-1}q; q^2)_{n+1} = sum_{n>=0} (-a)^n q^{n(n+1)/2} - (q)_inf sum_{n>=0} q^{3n^2+n} a^{3n} (1 - a^2 q^{4n+2}) / sum_{m in Z} q^{m^2} a^m, a = w",
            |_| {
                let lhs = term(
                    Term::new()
                        .q(Qp::linear(2, 1))
                        .factor(num(1, 0, 1, 2, 0))
                        .factor(den(-1, 1, 1, 2, 1))
                        .factor(den(-1, -1, 1, 2, 1)),
                )
                .scale(wpoly(&[(1, 1, 0), (1, 1, -1)]));
                let partial = sum(vec![
                    term(Term::new().w(Qp::linear(3, 0)).q(Qp::int(3, 1, 0))),
                    term(Term::new().coeff(int(-1)).w(Qp::linear(3, 2)).q(Qp::int(3, 5, 2))),
                ]);
                let rhs = sum(vec![
                    term(Term::new().sign(Qp::linear(1, 0)).w(Qp::linear(1, 0)).q(half(1, 1, 0))),
                    prod(vec![euler_product(), partial, Recipe::theta(int(1), 1, int(1), int(0)).recip()]).neg(),
                ]);
                (lhs, rhs)
            },
        ),
        sym("riden1", "R(w;q) = (1-w)/(q)_inf sum_{n in Z} (-1)^n q^{(3n^2+n)/2} / (1 - wq^n)", |_| {
            (
                n("R"),
                prod(vec![euler_product().recip(), Recipe::AppellLerch(AppellKind::Rank)]).scale(wpoly(&[(1, 1, 0), (-1, 1, 1)])),
            )
        }),
        sym("g3iden1", "g3(w;q) = 1/(q)_inf sum_{n in Z} (-1)^n q^{(3n^2+3n)/2} / (1 - wq^n)", |_| {
            (n("g3"), prod(vec![euler_product().recip(), Recipe::AppellLerch(AppellKind::G3)]))
        }),
        sym("pentagonal", "sum_{n in Z} (-1)^n q^{(3n^2+n)/2} = (q)_inf", |_| {
            (Recipe::theta(int(-1), 0, rat(3, 2), rat(1, 2)), euler_product())
        }),
        sym("thm3.1a", "g3_1(w;q) = g3_2(w;q)", |_| (n("g3_1"), n("g3_2"))),
        sym("thm3.1b", "g3_1(w;q) = g3_3(w;q)", |_| (n("g3_1"), n("g3_3"))),
        sym(
            "partialident",
            "sum_{n>=0} (-1)^n w^{-3n} q^{n(3n+1)/2} (1 - w^{-2} q^{2n+1}) = sum_{n>=0} (12/n) w^{(1-n)/2} q^{(n^2-1)/24}",
            |_| {
                (
                    false_theta(-1, true),
                    term(Term::new().character(Character::Kronecker12).w(Qp::frac(0, -1, 1, 2)).q(Qp::frac(1, 0, -1, 24))),
                )
            },
        ),
        sym("thm3.2a", "g3_2(w;1/q) = psi1(w^{-1};q) + S2(w^{-1};q)", |_| {
            (n("g3_2").inverted(), sum(vec![n("psi1").sub_w(int(1), -1), n("S2").sub_w(int(1), -1)]))
        }),
        sym("thm3.2b", "g3_3(w;1/q) = psi1(w^{-1};q)", |_| (n("g3_3").inverted(), n("psi1").sub_w(int(1), -1))),
        sym("psi1-spec", "psi1(-1;q) = 1 - psi(q)", |_| {
            (n("psi1").at_w(int(-1)), sum(vec![Recipe::constant(c(1, 1)), n("psi").neg()]))
        }),
        sym("s2-spec", "2 S2(-1;q) = S(q)", |_| (n("S2").at_w(int(-1)).scale(c(2, 1)), n("S"))),
        sym("g2-mcintosh", "g2_1(w;q) = g2_2(w;q)", |_| (n("g2_1"), n("g2_2"))),
        sym("thm4.1b", "g2_2(w;q) = g2_3(w;q)", |_| (n("g2_2"), n("g2_3"))),
        sym("thm4.2a", "g2_1(w;1/q) = -w^{-2} psi3(w;q) - w^{-1} + S4(w;q)", |_| {
            (
                n("g2_1").inverted(),
                sum(vec![n("psi3").scale(cw(-1, 1, -2)), Recipe::constant(cw(-1, 1, -1)), n("S4")]),
            )
        }),
        sym("thm4.2b", "g2_2(w;1/q) = psi3(w^{-1};q) + S1(-w^{-1};q)", |_| {
            (n("g2_2").inverted(), sum(vec![n("psi3").sub_w(int(1), -1), n("S1").sub_w(int(-1), -1)]))
        }),
        sym("thm4.2c", "g2_3(w;1/q) = psi3(w^{-1};q)", |_| (n("g2_3").inverted(), n("psi3").sub_w(int(1), -1))),
        sym(
            "secondg2id",
            "sum_{n>=0} (-1)_n q^n / (wq, w^{-1}q)_n = (w-1)/(w+1) sum_{n>=0} (-1)^n q^{n(n+1)/2} (-1)_n w^{-2n} / (w^{-2}q^2;q^2)_n + (-1)_inf / (w (wq, w^{-1}q)_inf) sum_{n>=0} (-1)^n q^{n(n+1)/2} w^{-2n} / (-w^{-1})_{n+1}",
            |_| {
                let lhs = term(
                    Term::new()
                        .q(Qp::linear(1, 0))
                        .factor(num(-1, 0, 0, 1, 0))
                        .factor(den(1, 1, 1, 1, 0))
                        .factor(den(1, -1, 1, 1, 0)),
                );
                let first = term(
                    Term::new()
                        .sign(Qp::linear(1, 0))
                        .w(Qp::linear(-2, 0))
                        .q(half(1, 1, 0))
                        .factor(num(-1, 0, 0, 1, 0))
                        .factor(den(1, -2, 2, 2, 0)),
                )
                .scale(div(wpoly(&[(-1, 1, 0), (1, 1, 1)]), wpoly(&[(1, 1, 0), (1, 1, 1)])));
                let second = prod(vec![
                    Recipe::Product(vec![num_inf(-1, 0, 0, 1), den_inf(1, 1, 1, 1), den_inf(1, -1, 1, 1)]),
                    term(
                        Term::new()
                            .sign(Qp::linear(1, 0))
                            .w(Qp::linear(-2, 0))
                            .q(half(1, 1, 0))
                            .factor(den(-1, -1, 0, 1, 1)),
                    ),
                ])
                .scale(wp(-1));
                (lhs, sum(vec![first, second]))
            },
        ),
        sym("psi4-rel", "psi4(w;q) = w^{-1} - w^{-2} + w^{-3} psi1(-w;q)", |_| {
            (
                n("psi4"),
                sum(vec![
                    Recipe::constant(wpoly(&[(1, 1, -1), (-1, 1, -2)])),
                    n("psi1").sub_w(int(-1), 1).scale(wp(-3)),
                ]),
            )
        }),
        sym(
            "psi3-theta",
            "psi3(w^{-1};q) + w^{-2} psi3(w;q) + w^{-1} = sum_{n in Z} (-1)^{n+1} w^{2n-1} q^{n^2}",
            |_| {
                (
                    sum(vec![
                        n("psi3").sub_w(int(1), -1),
                        n("psi3").scale(wp(-2)),
                        Recipe::constant(wp(-1)),
                    ]),
                    Recipe::theta(int(-1), 2, int(1), int(0)).scale(cw(-1, 1, -1)),
                )
            },
        ),
        sym("thm5.1a", "kappa(w;q) = K1(w;q)", |_| (n("kappa"), n("K1"))),
        sym(
            "thm5.1b",
            "K1(w;q) = -w/(1-w)^2 (K(w;q) - (q;q^2)_inf^3 (q^2;q^2)_inf / (wq, w^{-1}q)_inf)",
            |_| {
                let quotient = Recipe::Product(vec![
                    num_inf(1, 0, 1, 2).times(3),
                    num_inf(1, 0, 2, 2),
                    den_inf(1, 1, 1, 1),
                    den_inf(1, -1, 1, 1),
                ]);
                let k = cw(-1, 1, 1);
                let d = wpoly(&[(1, 1, 0), (-2, 1, 1), (1, 1, 2)]);
                (n("K1"), sum(vec![n("K"), quotient.neg()]).scale(div(k, d)))
            },
        ),
        sym("thm5.2a", "kappa(w;1/q) = psi2(w^{-1};q) / (1-w)", |_| {
            (n("kappa").inverted(), n("psi2").sub_w(int(1), -1).scale(div(c(1, 1), wpoly(&[(1, 1, 0), (-1, 1, 1)]))))
        }),
        sym("thm5.2b", "K1(w;1/q) = w/(w-1) (psi2(w;q) + s1(w;q))", |_| {
            (
                n("K1").inverted(),
                sum(vec![n("psi2"), n("s1")]).scale(div(wp(1), wpoly(&[(-1, 1, 0), (1, 1, 1)]))),
            )
        }),
        sym("thm5.2c", "K(w;1/q) = (1-w) psi2(w;q) + S5(w;q)", |_| {
            (n("K").inverted(), sum(vec![n("psi2").scale(wpoly(&[(1, 1, 0), (-1, 1, 1)])), n("S5")]))
        }),
        sym("jtp", "sum_{n in Z} (-1)^n w^n q^{n^2} = (q^2;q^2)_inf (wq;q^2)_inf (w^{-1}q;q^2)_inf", |_| {
            (
                Recipe::theta(int(-1), 1, int(1), int(0)),
                Recipe::Product(vec![num_inf(1, 0, 2, 2), num_inf(1, 1, 1, 2), num_inf(1, -1, 1, 2)]),
            )
        }),
        sym(
            "psi5-form",
            "sum_{n>=0} (-1)^n w^{3n} q^{3n^2+2n} (1 + wq^{2n+1}) = psi5(w;q)",
            |_| {
                (
                    sum(vec![
                        term(Term::new().sign(Qp::linear(1, 0)).w(Qp::linear(3, 0)).q(Qp::int(3, 2, 0))),
                        term(Term::new().sign(Qp::linear(1, 0)).w(Qp::linear(3, 1)).q(Qp::int(3, 4, 1))),
                    ]),
                    n("psi5"),
                )
            },
        ),
        sym("psi2-theta", "psi2(w;q) + w^{-1} psi2(w^{-1};q) = sum_{n in Z} w^n q^{n(n+1)/2}", |_| {
            (
                sum(vec![n("psi2"), n("psi2").sub_w(int(1), -1).scale(wp(-1))]),
                Recipe::theta(int(1), 1, rat(1, 2), rat(1, 2)),
            )
        }),
        sym("euler-qq2", "(q)_inf / (q^2;q^2)_inf = (q;q^2)_inf", |_| {
            (
                prod(vec![euler_product(), Recipe::Product(vec![den_inf(1, 0, 2, 2)])]),
                Recipe::Product(vec![num_inf(1, 0, 1, 2)]),
            )
        }),
    ]
}
