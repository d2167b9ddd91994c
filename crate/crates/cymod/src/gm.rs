//! Gauss-Manin connection data for the Dwork family: the connection matrix
//! pair `(B1, B2)` (coefficients of `dt1` and `dt_{n+2}`), the intersection
//! form `Omega` propagated from its anti-diagonal seed, and the constant
//! symplectic/symmetric pairing `Phi`.
//!
//! All three live over a chart ring that contains `t1`, the base coordinate
//! `t_{n+2}`, and the calibration constant `c_n` as variables.

use crate::matrix::Mat;
use crate::poly::Poly;
use crate::{rint, Rat, Rf};
use num::{BigInt, One, Zero};

/// Stirling number of the second kind S(r, s), as an exact rational.
pub fn stirling2(r: u32, s: u32) -> Rat {
    let mut acc = Rat::zero();
    for i in 0..=s {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = num::integer::binomial(BigInt::from(s), BigInt::from(i));
        let p = BigInt::from(s - i).pow(r);
        acc += Rat::from(c * p * BigInt::from(sign));
    }
    let mut fact = BigInt::one();
    for k in 2..=s {
        fact *= BigInt::from(k);
    }
    acc / Rat::from(fact)
}

/// Ids of the distinguished ring variables the connection data depends on.
#[derive(Clone, Copy, Debug)]
pub struct GmVars {
    pub t1: usize,
    pub tb: usize,
    pub cn: usize,
}

/// The Gauss-Manin matrix pair `(B1, B2)` for the n-fold family, written
/// over the `(t1, t_{n+2})` coordinates of the base.
pub fn gm_b(nv: usize, n: usize, v: GmVars) -> (Mat, Mat) {
    let nn = n + 1;
    let t1 = Poly::var(nv, v.t1);
    let tb = Poly::var(nv, v.tb);
    let mut b1 = Mat::zero(nv, nn, nn);
    let mut b2 = Mat::zero(nv, nn, nn);
    let np2tb = tb.mul_scalar(&rint(n as i64 + 2));
    for i in 1..=n {
        *b2.at_mut(i - 1, i - 1) = Rf::new(Poly::constant(nv, rint(-(i as i64))), np2tb.clone());
        *b1.at_mut(i - 1, i) = Rf::one(nv);
        *b2.at_mut(i - 1, i) = Rf::new(t1.neg(), np2tb.clone());
    }
    let disc = t1.pow(n as u32 + 2).sub(&tb);
    for j in 1..=n {
        let s2 = stirling2(n as u32 + 2, j as u32);
        *b1.at_mut(nn - 1, j - 1) = Rf::new(t1.pow(j as u32).mul_scalar(&-s2.clone()), disc.clone());
        *b2.at_mut(nn - 1, j - 1) = Rf::new(
            t1.pow(j as u32 + 1).mul_scalar(&s2),
            np2tb.mul(&disc),
        );
    }
    let s2 = stirling2(n as u32 + 2, n as u32 + 1);
    *b1.at_mut(nn - 1, nn - 1) = Rf::new(t1.pow(n as u32 + 1).mul_scalar(&-s2), disc.clone());
    let half_nn1 = Rat::new(BigInt::from(n * (n + 1)), BigInt::from(2));
    *b2.at_mut(nn - 1, nn - 1) = Rf::new(
        t1.pow(n as u32 + 2)
            .mul_scalar(&half_nn1)
            .add(&tb.mul_scalar(&rint(n as i64 + 1))),
        np2tb.mul(&disc),
    );
    (b1, b2)
}

/// Intersection form `Omega`: anti-diagonal seed proportional to
/// `c_n/(t1^{n+2} - t_{n+2})`, remaining entries propagated row by row with
/// `d/dt1` and the last column corrected through the bottom row of `B1`.
pub fn build_omega(nv: usize, n: usize, v: GmVars, b1: &Mat) -> Mat {
    let nn = n + 1;
    let t1 = Poly::var(nv, v.t1);
    let tb = Poly::var(nv, v.tb);
    let disc = t1.pow(n as u32 + 2).sub(&tb);
    let mut om = Mat::zero(nv, nn, nn);
    let lead = rint(-(n as i64 + 2)).pow(n as i32);
    let base_num = Poly::var(nv, v.cn).mul_scalar(&lead);
    for j in 1..=nn {
        let i2 = n + 2 - j;
        if (1..=nn).contains(&i2) {
            let sign = if (j - 1) % 2 == 0 { rint(1) } else { rint(-1) };
            *om.at_mut(j - 1, i2 - 1) = Rf::new(base_num.mul_scalar(&sign), disc.clone());
        }
    }
    // Entries are reduced by the discriminant after every step: the quotient
    // rule and cross-multiplied sums would otherwise pile up redundant
    // discriminant powers that grow geometrically with the row index.
    let seeds = [disc.clone()];
    for s in (n + 3)..=(2 * nn) {
        for j in (1..=nn.min(s - 2)).rev() {
            let i = s - j;
            if !(2..=nn).contains(&i) {
                continue;
            }
            let up = om.at(i - 2, j - 1).derivative(v.t1).reduce(&seeds);
            let val = if j < nn {
                up.sub(om.at(i - 2, j))
            } else {
                let mut corr = Rf::zero(nv);
                for k in 0..nn {
                    corr = corr
                        .add(&b1.at(nn - 1, k).mul(om.at(i - 2, k)))
                        .reduce(&seeds);
                }
                up.sub(&corr)
            };
            *om.at_mut(i - 1, j - 1) = val.reduce(&seeds);
        }
    }
    om
}

/// Constant pairing `Phi`: block `[[0, J], [-J, 0]]` for odd n (symplectic),
/// the anti-diagonal identity for even n (symmetric).
pub fn build_phi(nv: usize, n: usize) -> Mat {
    let nn = n + 1;
    let mut phi = Mat::zero(nv, nn, nn);
    if n % 2 == 1 {
        let m = (n + 1) / 2;
        for i in 1..=m {
            let j = m + (m + 1 - i);
            *phi.at_mut(i - 1, j - 1) = Rf::from_const(nv, rint(1));
            *phi.at_mut(j - 1, i - 1) = Rf::from_const(nv, rint(-1));
        }
    } else {
        for i in 1..=nn {
            *phi.at_mut(i - 1, nn - i) = Rf::from_const(nv, rint(1));
        }
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(5, 4), rint(10));
        assert_eq!(stirling2(5, 2), rint(15));
        assert_eq!(stirling2(7, 1), rint(1));
        assert_eq!(stirling2(4, 4), rint(1));
        assert_eq!(stirling2(3, 0), rint(0));
    }
}
