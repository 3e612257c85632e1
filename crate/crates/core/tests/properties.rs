use proptest::prelude::*;

use qmock_core::algebra::{rat, LaurentPolyW, Rational};
use qmock_core::hyperterm::{
    fine_expand_direct, fine_expand_recurrence, term_expand, term_invert_q, term_substitute, PochFactor, QuadPoly,
};
use qmock_core::special::rank_series;
use qmock_core::{HypergeometricTerm, Monomial, QSeries, RationalFunctionW, WValue};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    prop_oneof![(1i64..=4, 1i64..=3), (-4i64..=-1, 1i64..=3)].prop_map(|(n, d)| rat(n, d))
}

fn laurent() -> impl Strategy<Value = LaurentPolyW> {
    prop::collection::vec((-2i64..=3, small_rat()), 0..4).prop_map(LaurentPolyW::from_terms)
}

fn rf() -> impl Strategy<Value = RationalFunctionW> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| RationalFunctionW::normalize(&n, &d).ok())
}

fn nonzero_rf() -> impl Strategy<Value = RationalFunctionW> {
    rf().prop_filter("zero", |x| !x.is_zero())
}

fn finite_factor() -> impl Strategy<Value = PochFactor> {
    (nonzero_rat(), -1i64..=1, 0i64..=2, 1i64..=2, 0i64..=1, any::<bool>()).prop_map(|(c, e, k, s, d, neg)| {
        let mut f = PochFactor::num(Monomial::new(c, e, k), s, d);
        if neg {
            f.base_sign = -1;
        }
        f
    })
}

fn finite_term() -> impl Strategy<Value = HypergeometricTerm> {
    (
        prop::collection::vec(finite_factor(), 1..3),
        1i64..=2,
        -1i64..=1,
        0i64..=1,
        0i64..=2,
        nonzero_rat(),
    )
        .prop_map(|(fs, q2, we, sg, q1, c)| {
            let mut t = HypergeometricTerm::new()
                .sign(QuadPoly::linear(sg, 0))
                .w(QuadPoly::linear(we, 0))
                .q(QuadPoly::int(q2, q1, 0))
                .coeff(c);
            for f in fs {
                t = t.factor(f);
            }
            t
        })
}

/// Coefficient of `q^k` after `q -> 1/q`.
fn reflected(s: &QSeries) -> Vec<(i64, RationalFunctionW)> {
    let mut v: Vec<_> = s.terms().map(|(k, c)| (-k, c.clone())).collect();
    v.sort_by_key(|(k, _)| *k);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_addition_laws(a in rf(), b in rf(), c in rf()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert_eq!(a.add(&RationalFunctionW::zero()), a.clone());
    }

    #[test]
    fn field_multiplication_laws(a in rf(), b in rf(), c in rf()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&RationalFunctionW::one()), a.clone());
    }

    #[test]
    fn field_inverse(a in nonzero_rf(), b in nonzero_rf()) {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
    }

    #[test]
    fn canonical_form_survives_display(a in rf()) {
        let back: RationalFunctionW = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn randq_is_an_involution(t in finite_term()) {
        let back = term_invert_q(&term_invert_q(&t).unwrap()).unwrap();
        let w = WValue::Symbolic;
        prop_assert_eq!(term_expand(&back, 10, &w).unwrap(), term_expand(&t, 10, &w).unwrap());
    }

    #[test]
    fn randq_reflects_each_finite_summand(t in finite_term(), n in 0i64..=4) {
        // numerator-only finite summands are Laurent polynomials in q
        let w = WValue::Symbolic;
        let big = 200;
        let inv = term_invert_q(&t).unwrap();
        let s = t.summand(n, big, &w).unwrap().unwrap();
        let r = inv.summand(n, big, &w).unwrap().unwrap();
        let got: Vec<_> = r.terms().map(|(k, c)| (k, c.clone())).collect();
        prop_assert_eq!(got, reflected(&s));
    }

    #[test]
    fn substitution_commutes_with_expansion(t in finite_term(), c in nonzero_rat(), k in prop::sample::select(vec![-1i64, 1, 2])) {
        let w = WValue::Symbolic;
        let lhs = term_expand(&term_substitute(&t, &c, k).unwrap(), 10, &w).unwrap();
        let s = term_expand(&t, 10, &w).unwrap();
        let rhs = QSeries::from_terms(s.terms().map(|(e, x)| (e, x.substitute(&c, k).unwrap())), s.order());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fine_paths_agree(
        ac in small_rat(), ae in -1i64..=1, aq in 0i64..=1,
        bc in small_rat(), be in -1i64..=1, bq in 0i64..=1,
        tc in nonzero_rat(), te in -1i64..=1, tq in 1i64..=2,
        base in 1i64..=2,
    ) {
        let (a, b, t) = (Monomial::new(ac, ae, aq), Monomial::new(bc, be, bq), Monomial::new(tc, te, tq));
        let w = WValue::Symbolic;
        let x = fine_expand_direct(&a, &b, &t, base, 10, &w);
        let y = fine_expand_recurrence(&a, &b, &t, base, 10, &w);
        match (x, y) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "paths disagree on success: {:?} vs {:?}", x.is_ok(), y.is_ok()),
        }
    }

    #[test]
    fn rank_generating_function_is_symmetric(k in 0i64..=16) {
        let r = rank_series(&WValue::Symbolic, 16).unwrap();
        let c = r.coeff(k).unwrap();
        prop_assert_eq!(c.substitute(&rat(1, 1), -1).unwrap(), c);
    }
}
