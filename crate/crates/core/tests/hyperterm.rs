use qmock_core::algebra::{int, rat, LaurentPolyW};
use qmock_core::hyperterm::{
    appell_lerch_expand, fine_expand, poch_inf_expand, term_expand, term_invert_q, term_min_qorder, term_substitute,
    theta_expand, AppellKind, Character, QuadPoly as Qp,
};
use qmock_core::special::rank_series;
use qmock_core::{expand_term, HypergeometricTerm as Term, Monomial, PochFactor, QError, QSeries, RationalFunctionW, WValue};

const SYM: WValue = WValue::Symbolic;

fn m(c: i64, e: i64, k: i64) -> Monomial {
    Monomial::int(c, e, k)
}

fn ints(s: &QSeries, n: i64) -> Vec<i64> {
    (0..=n)
        .map(|k| {
            let c = s.coeff(k).unwrap().as_constant().unwrap();
            assert!(c.is_integer());
            i64::try_from(c.to_integer()).unwrap()
        })
        .collect()
}

fn f_term() -> Term {
    Term::new().q(Qp::int(1, 0, 0)).factor(PochFactor::den(m(-1, 0, 1), 1, 0).times(2))
}

fn g3_3_term() -> Term {
    Term::new().w(Qp::linear(-1, 0)).q(Qp::linear(1, 0)).factor(PochFactor::den(m(1, 1, 0), 1, 1))
}

fn laurent(terms: &[(i64, i64)]) -> RationalFunctionW {
    let p = LaurentPolyW::from_terms(terms.iter().map(|&(e, c)| (e, int(c))));
    RationalFunctionW::normalize(&p, &LaurentPolyW::one()).unwrap()
}

/// Plain integer series product, used as a reference for products.
fn naive_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0; a.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(a.len() - i) {
            c[i + j] += x * y;
        }
    }
    c
}

fn naive_inv(a: &[i64]) -> Vec<i64> {
    let mut b = vec![0; a.len()];
    b[0] = 1;
    for k in 1..a.len() {
        b[k] = -(1..=k).map(|j| a[j] * b[k - j]).sum::<i64>();
    }
    b
}

fn naive_poch(step: usize, len: usize) -> Vec<i64> {
    let mut r = vec![0; len];
    r[0] = 1;
    for j in (step..len).step_by(step) {
        let mut f = vec![0; len];
        f[0] = 1;
        f[j] = -1;
        r = naive_mul(&r, &f);
    }
    r
}

#[test]
fn min_qorder_is_the_summand_exponent() {
    assert_eq!(term_min_qorder(&f_term(), 3).unwrap(), 9);
    assert_eq!(term_min_qorder(&g3_3_term(), 4).unwrap(), 4);
    let g23 = Term::new()
        .w(Qp::linear(-1, 0))
        .factor(PochFactor::num(m(-1, 1, 1), 1, 0))
        .factor(PochFactor::den(m(1, 1, 1), 1, 0));
    for n in 0..6 {
        assert_eq!(term_min_qorder(&g23, n).unwrap(), 0);
    }
}

#[test]
fn f_expands_to_rank_parity_counts() {
    assert_eq!(ints(&term_expand(&f_term(), 4, &SYM).unwrap(), 4), [1, 1, -2, 3, -3]);
}

#[test]
fn false_theta_form_of_psi() {
    let psi = Term::new().character(Character::KroneckerMinus12).q(Qp::frac(1, 0, -1, 24));
    let want = [1, -1, 1, 0, 0, -1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 1];
    assert_eq!(ints(&term_expand(&psi, 15, &SYM).unwrap(), 15), want);
}

#[test]
fn g3_at_two_by_hand() {
    // n = 0 summand 1/((1-2)(1-q/2)) = -1 - q/2 - ...; n = 1 starts at q^2
    let g3 = Term::new()
        .q(Qp::int(1, 1, 0))
        .factor(PochFactor::den(m(1, 1, 0), 1, 1))
        .factor(PochFactor::den(m(1, -1, 1), 1, 1));
    let s = term_expand(&g3, 1, &WValue::At(int(2))).unwrap();
    assert_eq!(s.coeff(0).unwrap(), RationalFunctionW::from_i64(-1));
    assert_eq!(s.coeff(1).unwrap(), RationalFunctionW::constant(&rat(-1, 2)));
}

#[test]
fn divergent_family_is_rejected_by_direct_summation() {
    let g23 = Term::new()
        .w(Qp::linear(-1, 0))
        .factor(PochFactor::num(m(-1, 1, 1), 1, 0))
        .factor(PochFactor::den(m(1, 1, 1), 1, 0));
    assert!(matches!(term_expand(&g23, 5, &SYM), Err(QError::NotFormallySummable(_))));
    // the strategy layer resums it instead
    assert!(expand_term(&g23, 5, &SYM).is_ok());
}

#[test]
fn inverting_fstar_tail() {
    let tail = Term::new().start(1).sign(Qp::linear(1, 1)).q(Qp::linear(1, 0)).factor(PochFactor::den(m(-1, 0, 1), 1, 0));
    let want = Term::new()
        .start(1)
        .coeff(int(-1))
        .sign(Qp::linear(1, 0))
        .q(Qp::frac(1, -1, 0, 2))
        .factor(PochFactor::den(m(-1, 0, 1), 1, 0));
    let inv = term_invert_q(&tail).unwrap();
    assert_eq!(expand_term(&inv, 14, &SYM).unwrap(), expand_term(&want, 14, &SYM).unwrap());
}

#[test]
fn inverting_f() {
    let want = Term::new().q(Qp::linear(1, 0)).factor(PochFactor::den(m(-1, 0, 1), 1, 0).times(2));
    let inv = term_invert_q(&f_term()).unwrap();
    assert_eq!(expand_term(&inv, 14, &SYM).unwrap(), expand_term(&want, 14, &SYM).unwrap());
}

#[test]
fn inverting_k() {
    let k = Term::new()
        .sign(Qp::linear(1, 0))
        .q(Qp::int(1, 0, 0))
        .factor(PochFactor::num(m(1, 0, 1), 2, 0))
        .factor(PochFactor::den(m(1, 1, 2), 2, 0))
        .factor(PochFactor::den(m(1, -1, 2), 2, 0));
    let want = Term::new()
        .q(Qp::linear(2, 0))
        .factor(PochFactor::num(m(1, 0, 1), 2, 0))
        .factor(PochFactor::den(m(1, 1, 2), 2, 0))
        .factor(PochFactor::den(m(1, -1, 2), 2, 0));
    let inv = term_invert_q(&k).unwrap();
    assert_eq!(expand_term(&inv, 10, &SYM).unwrap(), expand_term(&want, 10, &SYM).unwrap());
}

#[test]
fn infinite_factors_cannot_be_inverted() {
    let t = Term::new().q(Qp::int(1, 0, 0)).factor(PochFactor::den_inf(m(1, 0, 1), 1));
    assert!(matches!(term_invert_q(&t), Err(QError::NotInvertible(_))));
}

#[test]
fn substituting_minus_w_squared_into_psi2() {
    let psi2 = Term::new().w(Qp::linear(1, 0)).q(Qp::frac(1, 1, 0, 2));
    let want = Term::new().sign(Qp::linear(1, 0)).w(Qp::linear(2, 0)).q(Qp::frac(1, 1, 0, 2));
    let got = term_substitute(&psi2, &int(-1), 2).unwrap();
    assert_eq!(term_expand(&got, 15, &SYM).unwrap(), term_expand(&want, 15, &SYM).unwrap());
}

#[test]
fn reflecting_w_in_psi3() {
    let psi3 = Term::new().sign(Qp::linear(1, 1)).w(Qp::linear(2, 1)).q(Qp::int(1, 0, 0));
    let want = Term::new().sign(Qp::linear(1, 1)).w(Qp::linear(-2, -1)).q(Qp::int(1, 0, 0));
    let got = term_substitute(&psi3, &int(1), -1).unwrap();
    assert_eq!(term_expand(&got, 16, &SYM).unwrap(), term_expand(&want, 16, &SYM).unwrap());
    let twice = term_substitute(&got, &int(1), -1).unwrap();
    assert_eq!(term_expand(&twice, 16, &SYM).unwrap(), term_expand(&psi3, 16, &SYM).unwrap());
}

#[test]
fn rational_substitution_needs_linear_exponent() {
    let quad_w = Term::new().w(Qp::int(1, 0, 0)).q(Qp::int(1, 0, 0));
    assert!(term_substitute(&quad_w, &rat(1, 2), 1).is_err());
    assert!(term_substitute(&quad_w, &int(-1), 1).is_ok());
}

#[test]
fn euler_product() {
    let s = poch_inf_expand(&[PochFactor::num_inf(m(1, 0, 1), 1)], 7, &SYM).unwrap();
    assert_eq!(ints(&s, 7), [1, -1, -1, 0, 0, 1, 0, 1]);
}

#[test]
fn zeroth_factor_of_minus_one() {
    let a = poch_inf_expand(&[PochFactor::num_inf(m(-1, 0, 0), 1)], 12, &SYM).unwrap();
    let b = poch_inf_expand(&[PochFactor::num_inf(m(-1, 0, 1), 1)], 12, &SYM).unwrap();
    assert_eq!(a, b.scale(&RationalFunctionW::from_i64(2)));
}

#[test]
fn t_product_against_naive_arithmetic() {
    let len = 9;
    let mut want = vec![0; len];
    want[0] = 1;
    for _ in 0..7 {
        want = naive_mul(&want, &naive_poch(2, len));
    }
    for _ in 0..3 {
        want = naive_mul(&want, &naive_inv(&naive_poch(1, len)));
        want = naive_mul(&want, &naive_inv(&naive_poch(4, len)));
    }
    let t = poch_inf_expand(
        &[
            PochFactor::num_inf(m(1, 0, 2), 2).times(7),
            PochFactor::den_inf(m(1, 0, 1), 1).times(3),
            PochFactor::den_inf(m(1, 0, 4), 4).times(3),
        ],
        8,
        &SYM,
    )
    .unwrap();
    assert_eq!(ints(&t, 8), want);
    assert_eq!(&want[..5], [1, 3, 2, 1, 5]);
}

#[test]
fn degenerate_product_factor() {
    let r = poch_inf_expand(&[PochFactor::num_inf(m(1, 0, 0), 1)], 5, &SYM);
    assert!(matches!(r, Err(QError::DegenerateFactor(_))));
}

#[test]
fn pentagonal_theta_matches_product() {
    let th = theta_expand(&int(-1), 0, &rat(3, 2), &rat(1, 2), 30, &SYM).unwrap();
    let pr = poch_inf_expand(&[PochFactor::num_inf(m(1, 0, 1), 1)], 30, &SYM).unwrap();
    assert_eq!(th, pr);
    assert_eq!(ints(&th, 7), [1, -1, -1, 0, 0, 1, 0, 1]);
}

#[test]
fn jacobi_theta_in_w() {
    let s = theta_expand(&int(1), 1, &int(1), &int(0), 4, &SYM).unwrap();
    assert_eq!(s.coeff(0).unwrap(), RationalFunctionW::one());
    assert_eq!(s.coeff(1).unwrap(), laurent(&[(1, 1), (-1, 1)]));
    assert!(s.coeff(2).unwrap().is_zero());
    assert_eq!(s.coeff(4).unwrap(), laurent(&[(2, 1), (-2, 1)]));
}

#[test]
fn theta_needs_positive_quadratic_part() {
    assert!(matches!(theta_expand(&int(1), 0, &int(0), &int(1), 5, &SYM), Err(QError::NotFormallySummable(_))));
}

#[test]
fn appell_lerch_g3_kind_at_two() {
    let w = WValue::At(int(2));
    let g3 = Term::new()
        .q(Qp::int(1, 1, 0))
        .factor(PochFactor::den(m(1, 1, 0), 1, 1))
        .factor(PochFactor::den(m(1, -1, 1), 1, 1));
    let euler = poch_inf_expand(&[PochFactor::num_inf(m(1, 0, 1), 1)], 8, &w).unwrap();
    let lhs = euler.mul(&term_expand(&g3, 8, &w).unwrap());
    assert_eq!(lhs.truncate(8), appell_lerch_expand(AppellKind::G3, 8, &w).unwrap().truncate(8));
}

#[test]
fn appell_lerch_rank_kind_gives_rank_function() {
    let n = 12;
    let inv_euler = poch_inf_expand(&[PochFactor::den_inf(m(1, 0, 1), 1)], n, &SYM).unwrap();
    let one_minus_w = RationalFunctionW::one_minus(&int(1), 1);
    let got = inv_euler.mul(&appell_lerch_expand(AppellKind::Rank, n, &SYM).unwrap()).scale(&one_minus_w);
    assert_eq!(got.truncate(n), rank_series(&SYM, n).unwrap().truncate(n));
}

#[test]
fn fine_geometric() {
    let s = fine_expand(&Monomial::zero(), &Monomial::zero(), &m(1, 0, 1), 1, 3, &SYM).unwrap();
    assert_eq!(ints(&s, 3), [1, 1, 1, 1]);
}

#[test]
fn fine_against_g3_3() {
    let f = fine_expand(&Monomial::zero(), &m(1, 1, 0), &m(1, -1, 1), 1, 10, &SYM).unwrap();
    let g = term_expand(&g3_3_term(), 10, &SYM).unwrap();
    let one_minus_w = RationalFunctionW::one_minus(&int(1), 1);
    assert_eq!(f.truncate(10), g.scale(&one_minus_w).truncate(10));
}

#[test]
fn fine_zero_order_path_collapses_to_theta() {
    // (1 - a) F(a, -a; a) = 1 + 2 sum (-1)^n a^{2n} q^{n^2}, a = w
    let f = fine_expand(&m(1, 1, 0), &m(-1, 1, 0), &m(1, 1, 0), 1, 12, &SYM).unwrap();
    let lhs = f.scale(&RationalFunctionW::one_minus(&int(1), 1));
    let mut terms = vec![(0, RationalFunctionW::one())];
    for n in 1..=3i64 {
        let c = RationalFunctionW::monomial(&int(2 * if n % 2 == 0 { 1 } else { -1 }), 2 * n);
        terms.push((n * n, c));
    }
    assert_eq!(lhs.truncate(12), QSeries::from_terms(terms, 12));
}

#[test]
fn fine_at_unit_argument_is_degenerate() {
    let r = fine_expand(&m(1, 1, 0), &Monomial::zero(), &m(1, 0, 0), 1, 5, &SYM);
    assert!(matches!(r, Err(QError::DegenerateFactor(_))));
}
