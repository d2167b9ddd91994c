//! Exact truncated q-expansions on the (1/24)Z exponent lattice.
//!
//! A series is a sparse map from `24 * exponent` (an integer) to an exact
//! rational coefficient, truncated below a context-wide cap.  This grid makes
//! the eta function (leading exponent 1/24) and the half-integral theta
//! constants exact without any floating point.

use crate::{rat, rint, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sparse exact q-series; keys are exponents scaled by 24.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QSeries {
    pub c: BTreeMap<i64, Rat>,
}

impl QSeries {
    pub fn zero() -> QSeries {
        QSeries { c: BTreeMap::new() }
    }

    pub fn constant(v: Rat) -> QSeries {
        let mut c = BTreeMap::new();
        if !v.is_zero() {
            c.insert(0, v);
        }
        QSeries { c }
    }

    pub fn one() -> QSeries {
        QSeries::constant(Rat::one())
    }

    pub fn coeff(&self, e24: i64) -> Rat {
        self.c.get(&e24).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.c.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

/// Operation context: all results are truncated to exponents `< cap/24`.
pub struct QCtx {
    /// Truncation order in integer q-powers.
    pub order: usize,
    /// 24 * order.
    pub cap: i64,
}

impl QCtx {
    pub fn new(order: usize) -> QCtx {
        QCtx {
            order,
            cap: 24 * order as i64,
        }
    }

    fn trunc(&self, s: QSeries) -> QSeries {
        QSeries {
            c: s
                .c
                .into_iter()
                .filter(|(e, c)| *e < self.cap && !c.is_zero())
                .collect(),
        }
    }

    pub fn add(&self, a: &QSeries, b: &QSeries) -> QSeries {
        let mut out = a.c.clone();
        for (e, c) in &b.c {
            let v = out.entry(*e).or_insert_with(Rat::zero);
            *v += c.clone();
            if v.is_zero() {
                out.remove(e);
            }
        }
        self.trunc(QSeries { c: out })
    }

    pub fn sub(&self, a: &QSeries, b: &QSeries) -> QSeries {
        self.add(a, &self.scale(b, &rint(-1)))
    }

    pub fn scale(&self, a: &QSeries, k: &Rat) -> QSeries {
        if k.is_zero() {
            return QSeries::zero();
        }
        QSeries {
            c: a.c.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, a: &QSeries, b: &QSeries) -> QSeries {
        let mut out: BTreeMap<i64, Rat> = BTreeMap::new();
        for (e1, c1) in &a.c {
            for (e2, c2) in &b.c {
                let e = e1 + e2;
                if e < self.cap {
                    *out.entry(e).or_insert_with(Rat::zero) += c1 * c2;
                }
            }
        }
        self.trunc(QSeries { c: out })
    }

    pub fn pow(&self, a: &QSeries, k: usize) -> QSeries {
        let mut out = QSeries::one();
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    /// The operator q d/dq: multiply each coefficient by its exponent.
    pub fn theta_op(&self, a: &QSeries) -> QSeries {
        QSeries {
            c: a
                .c
                .iter()
                .filter(|(e, _)| **e != 0)
                .map(|(e, c)| (*e, c * rat(*e, 24)))
                .collect(),
        }
    }

    /// Substitute q -> q^m.
    pub fn subs_qpow(&self, a: &QSeries, m: i64) -> QSeries {
        self.trunc(QSeries {
            c: a.c.iter().map(|(e, c)| (e * m, c.clone())).collect(),
        })
    }

    /// Substitute q -> -q; requires integral exponents.
    pub fn subs_qneg(&self, a: &QSeries) -> QSeries {
        QSeries {
            c: a
                .c
                .iter()
                .map(|(e, c)| {
                    assert!(e % 24 == 0, "q -> -q needs integral exponents");
                    let s = if (e / 24) % 2 == 0 {
                        c.clone()
                    } else {
                        -c.clone()
                    };
                    (*e, s)
                })
                .collect(),
        }
    }

    /// Multiplicative inverse of a series with nonzero constant term, by
    /// coefficient recursion up the integer lattice.
    pub fn inverse(&self, a: &QSeries) -> QSeries {
        let e0 = a.min_exp().expect("inverse of zero series");
        assert!(e0 == 0 && !a.coeff(0).is_zero(), "inverse needs a unit constant term");
        let lead = a.coeff(0);
        let mut out: BTreeMap<i64, Rat> = BTreeMap::new();
        out.insert(0, lead.recip());
        for e in 1..self.cap {
            let mut acc = Rat::zero();
            for (ea, ca) in &a.c {
                if *ea > 0 && *ea <= e {
                    if let Some(prev) = out.get(&(e - ea)) {
                        acc += ca * prev;
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(e, -acc / lead.clone());
            }
        }
        self.trunc(QSeries { c: out })
    }

    /// Square root by Newton iteration `s <- s (1 + a/s^2) / 2`, with the
    /// leading exponent shifted out first.  Requires an even leading exponent
    /// and a perfect-square leading coefficient; `sign` picks the branch.
    pub fn sqrt(&self, a: &QSeries, sign: i64) -> QSeries {
        let e0 = a.min_exp().expect("sqrt of zero series");
        assert!(e0 % 2 == 0, "sqrt needs an even leading exponent");
        let lead = a.coeff(e0);
        assert!(lead.is_positive(), "sqrt needs a positive leading coefficient");
        let num = lead.numer().sqrt();
        let den = lead.denom().sqrt();
        assert!(
            Rat::new(num.clone() * num.clone(), den.clone() * den.clone()) == lead,
            "leading coefficient is not a perfect square"
        );
        let c0 = Rat::new(num, den) * rint(sign);
        let shift = |s: &QSeries, d: i64| QSeries {
            c: s.c.iter().map(|(e, c)| (e + d, c.clone())).collect(),
        };
        let mut s = QSeries {
            c: BTreeMap::from([(e0 / 2, c0)]),
        };
        for _ in 0..40 {
            let s2 = shift(&self.mul(&s, &s), -e0);
            let corr = self.mul(&shift(a, -e0), &self.inverse(&s2));
            let halfsum = self.scale(&self.add(&QSeries::one(), &corr), &rat(1, 2));
            let s_new = self.mul(&s, &halfsum);
            if s_new == s {
                break;
            }
            s = s_new;
        }
        s
    }

    /// Dedekind eta at q^m: `q^{m/24} prod_k (1 - q^{mk})`.
    pub fn eta(&self, m: i64) -> QSeries {
        let mut prod = QSeries::one();
        for k in 1..=(self.order as i64 + 1) {
            let f = QSeries {
                c: BTreeMap::from([(0, Rat::one()), (24 * k, rint(-1))]),
            };
            prod = self.mul(&prod, &f);
        }
        let shifted = QSeries {
            c: prod.c.iter().map(|(e, c)| (e + 1, c.clone())).collect(),
        };
        self.subs_qpow(&shifted, m)
    }

    /// Theta constant with characteristics (1/2, 0): coefficients 2 at
    /// exponents (2k+1)^2 / 8.
    pub fn theta2(&self) -> QSeries {
        let mut c = BTreeMap::new();
        let mut k: i64 = 0;
        loop {
            let e = 3 * (2 * k + 1) * (2 * k + 1);
            if e >= self.cap {
                break;
            }
            c.insert(e, rint(2));
            k += 1;
        }
        QSeries { c }
    }

    /// Theta constant: 1 + 2 sum q^{k^2/2}.
    pub fn theta3(&self) -> QSeries {
        let mut c = BTreeMap::from([(0, Rat::one())]);
        let mut k: i64 = 1;
        while 12 * k * k < self.cap {
            c.insert(12 * k * k, rint(2));
            k += 1;
        }
        QSeries { c }
    }

    /// Quasimodular Eisenstein series of weight 2.
    pub fn e2(&self) -> QSeries {
        let mut c = BTreeMap::from([(0, Rat::one())]);
        for k in 1..=(self.order as i64) {
            c.insert(24 * k, rint(-24 * sigma1(k)));
        }
        QSeries { c }
    }

    /// Equality of truncations: no differing coefficient below q^upto.
    pub fn eq_upto(&self, a: &QSeries, b: &QSeries, upto: usize) -> bool {
        let d = self.sub(a, b);
        d.c.keys().all(|e| *e >= 24 * upto as i64)
    }
}

/// Sum of divisors.
pub fn sigma1(k: i64) -> i64 {
    (1..=k).filter(|d| k % d == 0).sum()
}

/// Number of representations k = x^2 + 3 y^2 over the integers.
pub fn rep_count_x2_3y2(k: i64) -> i64 {
    let mut cnt = 0;
    let mut x = 0i64;
    while x * x <= k {
        let r = k - x * x;
        if r % 3 == 0 {
            let y2 = r / 3;
            let y = (y2 as f64).sqrt().round() as i64;
            for yy in [y - 1, y, y + 1] {
                if yy >= 0 && yy * yy == y2 {
                    cnt += if yy == 0 { 1 } else { 2 };
                    if x > 0 {
                        cnt += if yy == 0 { 1 } else { 2 };
                    }
                    break;
                }
            }
        }
        x += 1;
    }
    cnt
}

/// Sum of odd divisors.
pub fn sigma_odd(k: i64) -> i64 {
    (1..=k).step_by(2).filter(|d| k % d == 0).sum()
}

// ---------------------------------------------------------------------------
// Named constructions and verifiers
// ---------------------------------------------------------------------------

/// The three q-expansions solving the n=1 modular vector field:
/// `t1 = (1/3)(2 M(q) - M(-q))` with `M = theta3(q^2) theta3(q^6)`,
/// `t2 = (1/8)(E2(q) - 9 E2(q^3))`, `t3 = eta(q^3)^9 / eta(q)^3`.
pub fn n1_solution(ctx: &QCtx) -> (QSeries, QSeries, QSeries) {
    let th3_q2 = ctx.subs_qpow(&ctx.theta3(), 2);
    let th3_q6 = ctx.subs_qpow(&ctx.theta3(), 6);
    let m = ctx.mul(&th3_q2, &th3_q6);
    let m_neg = ctx.mul(&ctx.subs_qneg(&th3_q2), &ctx.subs_qneg(&th3_q6));
    let t1 = ctx.scale(&ctx.sub(&ctx.scale(&m, &rint(2)), &m_neg), &rat(1, 3));
    let t2 = ctx.scale(
        &ctx.sub(&ctx.e2(), &ctx.scale(&ctx.subs_qpow(&ctx.e2(), 3), &rint(9))),
        &rat(1, 8),
    );
    let t3 = eta_quotient_9_3(ctx);
    (t1, t2, t3)
}

/// `eta(q^3)^9 / eta(q)^3`, shifting the fractional leading exponents out
/// before inverting.
pub fn eta_quotient_9_3(ctx: &QCtx) -> QSeries {
    let e3 = ctx.pow(&ctx.eta(3), 9);
    let e1 = ctx.pow(&ctx.eta(1), 3);
    let m3 = e3.min_exp().unwrap();
    let m1 = e1.min_exp().unwrap();
    let shift = |s: &QSeries, d: i64| QSeries {
        c: s.c.iter().map(|(e, c)| (e + d, c.clone())).collect(),
    };
    let q = ctx.mul(&shift(&e3, -m3), &ctx.inverse(&shift(&e1, -m1)));
    shift(&q, m3 - m1)
}

/// Components of the n=1 modular vector field evaluated on series.
pub fn r1_rhs(ctx: &QCtx, t1: &QSeries, t2: &QSeries, t3: &QSeries) -> [QSeries; 3] {
    let t1cube_minus_t3 = ctx.sub(&ctx.pow(t1, 3), t3);
    [
        ctx.sub(
            &ctx.scale(&ctx.mul(t1, t2), &rint(-1)),
            &ctx.scale(&t1cube_minus_t3, &rint(9)),
        ),
        ctx.sub(
            &ctx.scale(&ctx.mul(t1, &t1cube_minus_t3), &rint(81)),
            &ctx.mul(t2, t2),
        ),
        ctx.scale(&ctx.mul(t2, t3), &rint(-3)),
    ]
}

/// Verify `3 theta(t_i) = R1_i` for the n=1 solution.
pub fn verify_r1_solution(order: usize) -> bool {
    let ctx = QCtx::new(order + 4);
    let upto = ctx.order - 2;
    let (t1, t2, t3) = n1_solution(&ctx);
    let rhs = r1_rhs(&ctx, &t1, &t2, &t3);
    [&t1, &t2, &t3]
        .iter()
        .zip(rhs.iter())
        .all(|(x, r)| ctx.eq_upto(&ctx.scale(&ctx.theta_op(x), &rint(3)), r, upto))
}

/// The four q-expansions solving the n=2 modular vector field:
/// `t1 = (6/10)(1/24)(theta3(q^2)^4 + theta2(q^2)^4)`,
/// `t2 = (4/10)(1/24)(E2(q) + 2 E2(q^2))`,
/// `t4 = (1/10^4) eta(q)^8 eta(q^2)^8`,
/// `t3 = +sqrt(4 (t1^4 - t4))`.
pub fn n2_solution(ctx: &QCtx) -> (QSeries, QSeries, QSeries, QSeries) {
    let v1 = ctx.scale(
        &ctx.add(
            &ctx.pow(&ctx.subs_qpow(&ctx.theta3(), 2), 4),
            &ctx.pow(&ctx.subs_qpow(&ctx.theta2(), 2), 4),
        ),
        &rat(1, 24),
    );
    let u1 = ctx.scale(&v1, &rat(6, 10));
    let u2 = ctx.scale(
        &ctx.add(&ctx.e2(), &ctx.scale(&ctx.subs_qpow(&ctx.e2(), 2), &rint(2))),
        &(rat(1, 24) * rat(4, 10)),
    );
    let u4 = ctx.scale(
        &ctx.mul(&ctx.pow(&ctx.eta(1), 8), &ctx.pow(&ctx.eta(2), 8)),
        &rat(1, 10000),
    );
    let inner = ctx.scale(&ctx.sub(&ctx.pow(&u1, 4), &u4), &rint(4));
    let u3 = ctx.sqrt(&inner, 1);
    (u1, u2, u3, u4)
}

/// Components of the n=2 modular vector field evaluated on series.
pub fn r2_rhs(
    ctx: &QCtx,
    t1: &QSeries,
    t2: &QSeries,
    t3: &QSeries,
    t4: &QSeries,
) -> [QSeries; 4] {
    [
        ctx.sub(t3, &ctx.mul(t1, t2)),
        ctx.add(
            &ctx.scale(&ctx.mul(t1, t1), &rint(2)),
            &ctx.scale(&ctx.mul(t2, t2), &rat(-1, 2)),
        ),
        ctx.add(
            &ctx.scale(&ctx.mul(t2, t3), &rint(-2)),
            &ctx.scale(&ctx.pow(t1, 3), &rint(8)),
        ),
        ctx.scale(&ctx.mul(t2, t4), &rint(-4)),
    ]
}

/// Verify `-(1/5) theta(t_i) = R2_i` for the n=2 solution.
pub fn verify_r2_solution(order: usize) -> bool {
    let ctx = QCtx::new(order + 4);
    let upto = ctx.order - 2;
    let (u1, u2, u3, u4) = n2_solution(&ctx);
    let rhs = r2_rhs(&ctx, &u1, &u2, &u3, &u4);
    [&u1, &u2, &u3, &u4]
        .iter()
        .zip(rhs.iter())
        .all(|(x, r)| ctx.eq_upto(&ctx.scale(&ctx.theta_op(x), &rat(-1, 5)), r, upto))
}

/// Verify the four eta/theta product identities for the n=1 solution:
/// the discriminant factorization, the level-9 eta relation, their
/// combination, and the doubled-argument theta representation of t1.
pub fn verify_eta_identities(order: usize) -> Vec<(String, bool)> {
    let ctx = QCtx::new(order + 4);
    let upto = ctx.order - 2;
    let (t1, _, t3) = n1_solution(&ctx);
    let delta = ctx.mul(&t3, &ctx.sub(&ctx.pow(&t1, 3), &t3));
    let eta1 = ctx.eta(1);
    let eta3 = ctx.eta(3);
    let eta9 = ctx.eta(9);
    let mut out = Vec::new();

    let rhs = ctx.scale(
        &ctx.mul(&ctx.pow(&eta1, 6), &ctx.pow(&eta3, 6)),
        &rat(1, 27),
    );
    out.push((
        "discriminant = (1/27) eta(q)^6 eta(q^3)^6".to_string(),
        ctx.eq_upto(&delta, &rhs, upto),
    ));

    let num = ctx.add(
        &ctx.pow(&eta1, 3),
        &ctx.scale(&ctx.pow(&eta9, 3), &rint(9)),
    );
    let lhs = ctx.mul(&ctx.scale(&t1, &rint(3)), &eta3);
    out.push((
        "3 t1 eta(q^3) = eta(q)^3 + 9 eta(q^9)^3".to_string(),
        ctx.eq_upto(&lhs, &num, upto),
    ));

    let lhs = ctx.mul(&ctx.pow(&t1, 2), &delta);
    let rhs = ctx.scale(
        &ctx.mul(
            &ctx.mul(&ctx.pow(&eta1, 6), &ctx.pow(&eta3, 4)),
            &ctx.pow(&num, 2),
        ),
        &rat(1, 243),
    );
    out.push((
        "t1^2 discriminant = (1/243) eta(q)^6 eta(q^3)^4 (eta(q)^3 + 9 eta(q^9)^3)^2".to_string(),
        ctx.eq_upto(&lhs, &rhs, upto),
    ));

    let th2q2 = ctx.subs_qpow(&ctx.theta2(), 2);
    let th2q6 = ctx.subs_qpow(&ctx.theta2(), 6);
    let th3q2 = ctx.subs_qpow(&ctx.theta3(), 2);
    let th3q6 = ctx.subs_qpow(&ctx.theta3(), 6);
    let alt = ctx.scale(
        &ctx.add(&ctx.mul(&th3q2, &th3q6), &ctx.mul(&th2q2, &th2q6)),
        &rat(1, 3),
    );
    out.push((
        "t1 = (1/3)(theta3(q^2) theta3(q^6) + theta2(q^2) theta2(q^6))".to_string(),
        ctx.eq_upto(&t1, &alt, upto),
    ));
    out
}

/// Verify the second-order differential equation satisfied by t1:
/// `2 y y'' - 4 (y')^2 = 12 eta(q)^6 eta(q^3)^6` with `y' = 3 theta(y)`
/// (equivalently, the order-2 self-bracket of t1 equals 324 times the
/// discriminant).
pub fn verify_ode(order: usize) -> bool {
    let ctx = QCtx::new(order + 4);
    let upto = ctx.order - 2;
    let (t1, _, _) = n1_solution(&ctx);
    let y = t1;
    let yd = ctx.scale(&ctx.theta_op(&y), &rint(3));
    let ydd = ctx.scale(&ctx.theta_op(&yd), &rint(3));
    let lhs = ctx.sub(
        &ctx.scale(&ctx.mul(&y, &ydd), &rint(2)),
        &ctx.scale(&ctx.mul(&yd, &yd), &rint(4)),
    );
    let rhs = ctx.scale(
        &ctx.mul(&ctx.pow(&ctx.eta(1), 6), &ctx.pow(&ctx.eta(3), 6)),
        &rint(12),
    );
    ctx.eq_upto(&lhs, &rhs, upto)
}

/// Exploration: coefficients of `3 t1` against the representation count of
/// `x^2 + 3 y^2`, and of the unscaled n=2 t1-series against the odd divisor
/// sum.  Returns (description, holds) pairs; these are observations, not
/// gates.
pub fn exploration_counts(order: usize) -> Vec<(String, bool)> {
    let ctx = QCtx::new(order + 4);
    let (t1, _, _) = n1_solution(&ctx);
    let t1x3 = ctx.scale(&t1, &rint(3));
    // 3 t1 = 2 M(q) - M(-q) with M = theta3(q^2) theta3(q^6), so the k-th
    // coefficient is (2 - (-1)^k) times the number of representations
    // k = x^2 + 3 y^2.
    let ok_rep = (0..30).all(|k| {
        let w = if k % 2 == 0 { 1 } else { 3 };
        t1x3.coeff(24 * k) == rint(w * rep_count_x2_3y2(k))
    });
    let v1 = ctx.scale(
        &ctx.add(
            &ctx.pow(&ctx.subs_qpow(&ctx.theta3(), 2), 4),
            &ctx.pow(&ctx.subs_qpow(&ctx.theta2(), 2), 4),
        ),
        &rat(1, 24),
    );
    let ok_odd = (1..30).all(|k| v1.coeff(24 * k) == rint(sigma_odd(k)));
    vec![
        (
            "coefficients of 3 t1 are parity-weighted counts of x^2 + 3 y^2 representations"
                .to_string(),
            ok_rep,
        ),
        (
            "unscaled n=2 theta combination has odd-divisor coefficients".to_string(),
            ok_odd,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_sqrt() {
        let ctx = QCtx::new(10);
        let a = QSeries {
            c: BTreeMap::from([(0, rint(1)), (24, rint(-1))]),
        };
        let inv = ctx.inverse(&a);
        // geometric series: all integer coefficients 1
        for k in 0..10 {
            assert_eq!(inv.coeff(24 * k), rint(1));
        }
        let sq = ctx.mul(&a, &a);
        let rt = ctx.sqrt(&sq, 1);
        assert!(ctx.eq_upto(&rt, &a, 9));
    }

    #[test]
    fn eta_leading_terms() {
        let ctx = QCtx::new(12);
        let e = ctx.eta(1);
        // q^{1/24}(1 - q - q^2 + q^5 + q^7 - ...)
        assert_eq!(e.coeff(1), rint(1));
        assert_eq!(e.coeff(25), rint(-1));
        assert_eq!(e.coeff(49), rint(-1));
        assert_eq!(e.coeff(73), rint(0));
        assert_eq!(e.coeff(121), rint(1));
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(sigma1(6), 12);
        assert_eq!(sigma_odd(6), 4); // 1 + 3
        assert_eq!(rep_count_x2_3y2(1), 2); // (+-1, 0)
        assert_eq!(rep_count_x2_3y2(3), 2); // (0, +-1)
        assert_eq!(rep_count_x2_3y2(4), 6); // (+-2,0) and (+-1,+-1)
    }
}
