//! Rankin-Cohen bracket algebra over a chart's coordinate ring.
//!
//! Brackets are taken with respect to a degree-2 derivation (the completed
//! field `D` by default, optionally the modular field `R`), with weights read
//! off the quasi-homogeneous grading.  The canonical variant replaces the
//! iterated derivative tower by the Serre-derivation tower twisted by the
//! weight-4 element `Lambda`.

use crate::chart::{Chart, Field};
use crate::fields;
use crate::{rat, rint, Int, Rat, Rf};
use num::{One, Zero};

/// Binomial coefficient by the falling-factorial product formula, valid for
/// negative upper argument.
pub fn binomial(top: i64, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= Rat::from(Int::from(top - i));
        acc /= Rat::from(Int::from(i + 1));
    }
    acc
}

/// Bracket context: the derivations and auxiliary data shared by all bracket
/// computations on one chart.  Fields are calibrated when the chart fixes a
/// published value of the normalization constant.
pub struct RcCtx<'a> {
    pub chart: &'a Chart,
    /// Modular vector field R.
    pub r: Field,
    /// Scaling field H.
    pub h: Field,
    /// Completed field D (the bracket derivation).
    pub d: Field,
    /// Weight-4 twist element of the canonical tower.
    pub lam: Rf,
    /// Serre-correction factor: 1 for n != 2, 1/2 for n = 2.
    pub phi_fac: Rat,
    pub t2: usize,
}

fn calibrate_field(chart: &Chart, f: &Field) -> Field {
    f.iter().map(|(&v, x)| (v, chart.calibrate(x))).collect()
}

impl<'a> RcCtx<'a> {
    pub fn new(chart: &'a Chart) -> Self {
        let r = fields::derive_r(chart);
        let h = fields::h_field(chart);
        let d = fields::d_field(chart, &r, &h);
        let lam = fields::lambda(chart, &r);
        let (r, h, d, lam) = if chart.cal.is_some() {
            (
                calibrate_field(chart, &r),
                calibrate_field(chart, &h),
                calibrate_field(chart, &d),
                chart.calibrate(&lam),
            )
        } else {
            (r, h, d, lam)
        };
        let phi_fac = if chart.n == 2 { rat(1, 2) } else { Rat::one() };
        let t2 = chart.t_id[2].expect("chart has no t2");
        RcCtx {
            chart,
            r,
            h,
            d,
            lam,
            phi_fac,
            t2,
        }
    }

    /// Apply a derivation (given componentwise on the free generators).
    pub fn apply(&self, der: &Field, f: &Rf) -> Rf {
        self.chart.apply_field_rf(der, f)
    }

    pub fn apply_d(&self, f: &Rf) -> Rf {
        self.apply(&self.d, f)
    }

    /// Quasi-homogeneous weight; None when not homogeneous.
    pub fn weight_of(&self, f: &Rf) -> Option<i64> {
        f.weighted_degree(&self.chart.weights)
    }

    /// Membership in the t2-free subring (the 2-CY forms): independence from
    /// t2 is representation-invariant, so test the derivative.
    pub fn is_two_cy(&self, f: &Rf) -> bool {
        f.derivative(self.t2).is_zero()
    }

    /// Rankin-Cohen bracket of order k via an arbitrary degree-2 derivation.
    pub fn bracket_via(&self, der: &Field, f: &Rf, r: i64, g: &Rf, s: i64, k: i64) -> Rf {
        let mut fd = vec![f.clone()];
        let mut gd = vec![g.clone()];
        for _ in 0..k {
            fd.push(self.apply(der, fd.last().unwrap()));
            gd.push(self.apply(der, gd.last().unwrap()));
        }
        self.combine(&fd, r, &gd, s, k)
    }

    /// Standard bracket: derivative tower by the completed field D.
    pub fn bracket(&self, f: &Rf, r: i64, g: &Rf, s: i64, k: i64) -> Rf {
        self.bracket_via(&self.d, f, r, g, s, k)
    }

    /// Bracket with weights inferred from the grading.
    pub fn bracket_auto(&self, f: &Rf, g: &Rf, k: i64) -> Option<Rf> {
        let r = self.weight_of(f)?;
        let s = self.weight_of(g)?;
        Some(self.bracket(f, r, g, s, k))
    }

    /// Serre derivation at weight r.
    pub fn serre(&self, f: &Rf, r: i64) -> Rf {
        let corr = Rf::from_var(self.chart.ring.nv(), self.t2)
            .mul(f)
            .mul_scalar(&(self.phi_fac.clone() * Rat::from(Int::from(r))));
        self.apply_d(f).add(&corr).reduce(&self.chart.ring.seeds)
    }

    /// Canonical derivative tower: f_(0) = f, f_(1) = serre(f, r),
    /// f_(j+1) = serre(f_(j), r + 2j) + j (j + r - 1) Lambda f_(j-1).
    pub fn canon_tower(&self, f: &Rf, r: i64, k: i64) -> Vec<Rf> {
        let mut tow = vec![f.clone(), self.serre(f, r)];
        for j in 1..k {
            let c = Rat::from(Int::from(j * (j + r - 1)));
            let next = self
                .serre(&tow[j as usize], r + 2 * j)
                .add(&self.lam.mul(&tow[(j - 1) as usize]).mul_scalar(&c))
                .reduce(&self.chart.ring.seeds);
            tow.push(next);
        }
        tow
    }

    /// Canonical bracket: the same binomial combination over the canonical
    /// towers of f and g.
    pub fn canon_bracket(&self, f: &Rf, r: i64, g: &Rf, s: i64, k: i64) -> Rf {
        if k == 0 {
            return f.mul(g).reduce(&self.chart.ring.seeds);
        }
        let fd = self.canon_tower(f, r, k);
        let gd = self.canon_tower(g, s, k);
        self.combine(&fd, r, &gd, s, k)
    }

    fn combine(&self, fd: &[Rf], r: i64, gd: &[Rf], s: i64, k: i64) -> Rf {
        let mut tot = Rf::zero(self.chart.ring.nv());
        for j in 0..=k {
            let i = k - j;
            let mut c = binomial(k + r - 1, i) * binomial(k + s - 1, j);
            if j % 2 == 1 {
                c = -c;
            }
            tot = tot.add(&fd[j as usize].mul(&gd[i as usize]).mul_scalar(&c));
        }
        tot.reduce(&self.chart.ring.seeds)
    }

    /// The eleven bracket identities, checked on one homogeneous triple.
    /// Returns (relation id, holds) pairs sorted by id.  Four identities are
    /// checked in corrected form (coefficient or order-index repairs); the
    /// ids carry a `-corrected` suffix to flag this.
    pub fn identity_battery(
        &self,
        f: &Rf,
        r: i64,
        g: &Rf,
        s: i64,
        h: &Rf,
        l: i64,
    ) -> Vec<(String, bool)> {
        let b = |f: &Rf, r: i64, g: &Rf, s: i64, k: i64| self.bracket(f, r, g, s, k);
        let w = |r: i64, s: i64, k: i64| r + s + 2 * k;
        let mut out: Vec<(String, bool)> = Vec::new();

        // rc01: antisymmetry [f,g]_k = (-1)^k [g,f]_k for k = 0..3.
        let mut ok = true;
        for k in 0..=3 {
            let lhs = b(f, r, g, s, k);
            let mut rhs = b(g, s, f, r, k);
            if k % 2 == 1 {
                rhs = rhs.neg();
            }
            ok &= lhs.equals(&rhs);
        }
        out.push(("rc01-antisymmetry".to_string(), ok));

        // rc02: zeroth bracket is associative.
        let lhs = b(&b(f, r, g, s, 0), w(r, s, 0), h, l, 0);
        let rhs = b(f, r, &b(g, s, h, l, 0), w(s, l, 0), 0);
        out.push(("rc02-product-associativity".to_string(), lhs.equals(&rhs)));

        // rc03: unit laws: [f,1]_0 = [1,f]_0 = f and [f,1]_k = [1,f]_k = 0.
        let one = Rf::one(self.chart.ring.nv());
        let mut ok = b(f, r, &one, 0, 0).equals(f) && b(&one, 0, f, r, 0).equals(f);
        for k in 1..=3 {
            ok &= b(f, r, &one, 0, k).is_zero() && b(&one, 0, f, r, k).is_zero();
        }
        out.push(("rc03-unit-laws".to_string(), ok));

        // rc04: cyclic sum of nested first brackets vanishes.
        let res = b(&b(f, r, g, s, 1), w(r, s, 1), h, l, 1)
            .add(&b(&b(g, s, h, l, 1), w(s, l, 1), f, r, 1))
            .add(&b(&b(h, l, f, r, 1), w(l, r, 1), g, s, 1));
        out.push(("rc04-first-bracket-jacobi".to_string(), res.is_zero()));

        // rc05: cyclic sum of [[.,.]_0, .]_1 vanishes.
        let res = b(&b(f, r, g, s, 0), w(r, s, 0), h, l, 1)
            .add(&b(&b(g, s, h, l, 0), w(s, l, 0), f, r, 1))
            .add(&b(&b(h, l, f, r, 0), w(l, r, 0), g, s, 1));
        out.push(("rc05-product-first-cyclic".to_string(), res.is_zero()));

        // rc06 (corrected weights l, r, s):
        // l[[f,g]_1,h]_0 + r[[g,h]_1,f]_0 + s[[h,f]_1,g]_0 = 0.
        let res = b(&b(f, r, g, s, 1), w(r, s, 1), h, l, 0)
            .mul_scalar(&rint(l))
            .add(&b(&b(g, s, h, l, 1), w(s, l, 1), f, r, 0).mul_scalar(&rint(r)))
            .add(&b(&b(h, l, f, r, 1), w(l, r, 1), g, s, 0).mul_scalar(&rint(s)));
        out.push(("rc06-weighted-first-cyclic-corrected".to_string(), res.is_zero()));

        // rc07 (corrected last order index 0):
        // [[f,g]_0,h]_1 = [[g,h]_1,f]_0 - [[h,f]_1,g]_0.
        let lhs = b(&b(f, r, g, s, 0), w(r, s, 0), h, l, 1);
        let rhs = b(&b(g, s, h, l, 1), w(s, l, 1), f, r, 0)
            .sub(&b(&b(h, l, f, r, 1), w(l, r, 1), g, s, 0));
        out.push(("rc07-product-first-expansion-corrected".to_string(), lhs.equals(&rhs)));

        // rc08 (corrected signs -s, +r):
        // (r+s+l)[[f,g]_1,h]_0 = -s[[g,h]_0,f]_1 + r[[h,f]_0,g]_1.
        let lhs = b(&b(f, r, g, s, 1), w(r, s, 1), h, l, 0).mul_scalar(&rint(r + s + l));
        let rhs = b(&b(g, s, h, l, 0), w(s, l, 0), f, r, 1)
            .mul_scalar(&rint(-s))
            .add(&b(&b(h, l, f, r, 0), w(l, r, 0), g, s, 1).mul_scalar(&rint(r)));
        out.push(("rc08-first-product-expansion-corrected".to_string(), lhs.equals(&rhs)));

        // rc09: (r+1)(s+1)[[f,g]_0,h]_2 = -l(l+1)[[f,g]_2,h]_0
        //       + (r+1)(r+s+1)[[g,h]_2,f]_0 + (s+1)(r+s+1)[[h,f]_2,g]_0.
        let lhs =
            b(&b(f, r, g, s, 0), w(r, s, 0), h, l, 2).mul_scalar(&rint((r + 1) * (s + 1)));
        let rhs = b(&b(f, r, g, s, 2), w(r, s, 2), h, l, 0)
            .mul_scalar(&rint(-l * (l + 1)))
            .add(
                &b(&b(g, s, h, l, 2), w(s, l, 2), f, r, 0)
                    .mul_scalar(&rint((r + 1) * (r + s + 1))),
            )
            .add(
                &b(&b(h, l, f, r, 2), w(l, r, 2), g, s, 0)
                    .mul_scalar(&rint((s + 1) * (r + s + 1))),
            );
        out.push(("rc09-product-second-expansion".to_string(), lhs.equals(&rhs)));

        // rc10 (corrected coefficient swap on the last two terms):
        // (r+s+l+1)(r+s+l+2)[[f,g]_2,h]_0 = -(r+1)(s+1)[[f,g]_0,h]_2
        //       + (s+1)(r+s+1)[[g,h]_0,f]_2 + (r+1)(r+s+1)[[h,f]_0,g]_2.
        let lhs = b(&b(f, r, g, s, 2), w(r, s, 2), h, l, 0)
            .mul_scalar(&rint((r + s + l + 1) * (r + s + l + 2)));
        let rhs = b(&b(f, r, g, s, 0), w(r, s, 0), h, l, 2)
            .mul_scalar(&rint(-(r + 1) * (s + 1)))
            .add(
                &b(&b(g, s, h, l, 0), w(s, l, 0), f, r, 2)
                    .mul_scalar(&rint((s + 1) * (r + s + 1))),
            )
            .add(
                &b(&b(h, l, f, r, 0), w(l, r, 0), g, s, 2)
                    .mul_scalar(&rint((r + 1) * (r + s + 1))),
            );
        out.push(("rc10-second-product-expansion-corrected".to_string(), lhs.equals(&rhs)));

        // rc11: [[f,g]_1,h]_1 = [[g,h]_0,f]_2 - [[h,f]_0,g]_2
        //       + [[g,h]_2,f]_0 - [[h,f]_2,g]_0.
        let lhs = b(&b(f, r, g, s, 1), w(r, s, 1), h, l, 1);
        let rhs = b(&b(g, s, h, l, 0), w(s, l, 0), f, r, 2)
            .sub(&b(&b(h, l, f, r, 0), w(l, r, 0), g, s, 2))
            .add(&b(&b(g, s, h, l, 2), w(s, l, 2), f, r, 0))
            .sub(&b(&b(h, l, f, r, 2), w(l, r, 2), g, s, 0));
        out.push(("rc11-first-first-expansion".to_string(), lhs.equals(&rhs)));

        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_product_formula() {
        assert_eq!(binomial(5, 2), rint(10));
        assert_eq!(binomial(-3, 2), rint(6)); // (-3)(-4)/2
        assert_eq!(binomial(-1, 3), rint(-1)); // (-1)(-2)(-3)/6
        assert_eq!(binomial(4, 0), rint(1));
        assert_eq!(binomial(2, 5), rint(0));
    }
}
