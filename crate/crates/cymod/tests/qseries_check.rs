//! q-expansion engine checks: reference coefficients, the differential
//! systems solved in low dimension, eta/theta identities, and algebraic
//! properties of truncated series arithmetic.

use cymod::qseries::{QCtx, QSeries};
use cymod::verify;
use cymod::{rat, rint};

fn assert_suite(rep: cymod::Report) {
    assert!(rep.all_pass(), "\n{}", rep.render_text());
}

#[test]
fn reference_coefficients() {
    assert_suite(verify::qseries_golden());
}

#[test]
fn solution_and_identity_suite() {
    assert_suite(verify::qseries_suite(20));
}

#[test]
fn multiplication_is_commutative_and_associative() {
    let ctx = QCtx::new(20);
    let a = ctx.eta(1);
    let b = ctx.theta2();
    let c = ctx.theta3();
    assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
    assert_eq!(
        ctx.mul(&ctx.mul(&a, &b), &c),
        ctx.mul(&a, &ctx.mul(&b, &c))
    );
}

#[test]
fn inverse_is_a_right_inverse() {
    let ctx = QCtx::new(20);
    let t3 = ctx.theta3();
    let prod = ctx.mul(&t3, &ctx.inverse(&t3));
    assert!(ctx.eq_upto(&prod, &QSeries::one(), ctx.order - 1));
}

#[test]
fn theta_operator_satisfies_leibniz() {
    let ctx = QCtx::new(20);
    let a = ctx.theta2();
    let b = ctx.theta3();
    let lhs = ctx.theta_op(&ctx.mul(&a, &b));
    let rhs = ctx.add(
        &ctx.mul(&ctx.theta_op(&a), &b),
        &ctx.mul(&a, &ctx.theta_op(&b)),
    );
    assert!(ctx.eq_upto(&lhs, &rhs, ctx.order - 1));
}

#[test]
fn square_root_squares_back() {
    let ctx = QCtx::new(20);
    let f = ctx.mul(&ctx.theta3(), &ctx.theta3());
    let s = ctx.sqrt(&f, 1);
    assert!(ctx.eq_upto(&ctx.mul(&s, &s), &f, ctx.order - 1));
    assert!(ctx.eq_upto(&s, &ctx.theta3(), ctx.order - 1));
    let neg = ctx.sqrt(&f, -1);
    assert!(ctx.eq_upto(&ctx.scale(&neg, &rint(-1)), &ctx.theta3(), ctx.order - 1));
}

#[test]
fn eta_logarithmic_derivative_is_weight_two_eisenstein() {
    // q d/dq log eta = E2 / 24
    let ctx = QCtx::new(20);
    let eta = ctx.eta(1);
    let lhs = ctx.theta_op(&eta);
    let rhs = ctx.scale(&ctx.mul(&ctx.e2(), &eta), &rat(1, 24));
    assert!(ctx.eq_upto(&lhs, &rhs, ctx.order - 1));
}

#[test]
fn substitution_respects_products() {
    let ctx = QCtx::new(30);
    let a = ctx.theta2();
    let b = ctx.theta3();
    let lhs = ctx.subs_qpow(&ctx.mul(&a, &b), 3);
    let rhs = ctx.mul(&ctx.subs_qpow(&a, 3), &ctx.subs_qpow(&b, 3));
    assert!(ctx.eq_upto(&lhs, &rhs, 9));
}

#[test]
fn fractional_exponents_are_exact() {
    let ctx = QCtx::new(10);
    // eta starts at q^{1/24}, theta2 at q^{1/8}
    assert_eq!(ctx.eta(1).min_exp(), Some(1));
    assert_eq!(ctx.theta2().min_exp(), Some(3));
    assert_eq!(ctx.eta(3).min_exp(), Some(3));
    assert_eq!(ctx.eta(1).coeff(1), rint(1));
    assert_eq!(ctx.eta(1).coeff(25), rint(-1));
}
