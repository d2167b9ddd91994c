//! Rational functions as quotients of sparse polynomials.
//!
//! Full multivariate gcd is deliberately avoided: after every arithmetic
//! operation the quotient is normalized by cancelling the joint monomial
//! content and the rational content of the denominator (which becomes an
//! integer-primitive polynomial with positive leading coefficient).  The few
//! non-monomial factors that actually occur in denominators in this theory
//! are known per chart ("seed" polynomials, e.g. the discriminant); callers
//! cancel those with [`Rf::reduce`] at the points where values are stored.
//!
//! Equality is decided exactly by cross-multiplication, so it never depends
//! on how far a representative happens to be reduced.

use crate::poly::{Mono, Poly};
use crate::Rat;
use num::One;

#[derive(Clone, Debug)]
pub struct Rf {
    pub num: Poly,
    pub den: Poly,
}

impl Rf {
    pub fn new(num: Poly, den: Poly) -> Rf {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = Rf { num, den };
        rf.normalize();
        rf
    }

    pub fn zero(nv: usize) -> Rf {
        Rf {
            num: Poly::zero(nv),
            den: Poly::one(nv),
        }
    }

    pub fn one(nv: usize) -> Rf {
        Rf::from_poly(Poly::one(nv))
    }

    pub fn from_poly(p: Poly) -> Rf {
        let nv = p.nv;
        let mut rf = Rf {
            num: p,
            den: Poly::one(nv),
        };
        rf.normalize();
        rf
    }

    pub fn from_var(nv: usize, v: usize) -> Rf {
        Rf::from_poly(Poly::var(nv, v))
    }

    pub fn from_const(nv: usize, c: Rat) -> Rf {
        Rf::from_poly(Poly::constant(nv, c))
    }

    pub fn nv(&self) -> usize {
        self.num.nv
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the denominator is 1 after normalization.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_constant() && self.den.as_constant().unwrap().is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_poly().and_then(Poly::as_constant)
    }

    fn normalize(&mut self) {
        assert!(!self.den.is_zero(), "zero denominator");
        if self.num.is_zero() {
            self.den = Poly::one(self.num.nv);
            return;
        }
        let g = self.num.mono_content().gcd(&self.den.mono_content());
        if !g.is_one() {
            self.num = self.num.div_mono(&g);
            self.den = self.den.div_mono(&g);
        }
        let c = self.den.content();
        if !c.is_one() {
            self.num = self.num.div_scalar(&c);
            self.den = self.den.div_scalar(&c);
        }
    }

    /// Cancel every seed polynomial that divides both numerator and
    /// denominator, as often as it does.
    pub fn reduce(&self, seeds: &[Poly]) -> Rf {
        let mut out = self.clone();
        if out.num.is_zero() {
            return out;
        }
        for s in seeds {
            if s.total_degree() == 0 {
                continue;
            }
            loop {
                if out.den.total_degree() < s.total_degree() {
                    break;
                }
                let dn = match out.den.try_div(s) {
                    Some(d) => d,
                    None => break,
                };
                let nn = match out.num.try_div(s) {
                    Some(n) => n,
                    None => break,
                };
                out.num = nn;
                out.den = dn;
            }
        }
        out.normalize();
        out
    }

    pub fn add(&self, other: &Rf) -> Rf {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Rf::new(self.num.add(&other.num), self.den.clone());
        }
        // When one denominator divides the other, only the smaller side needs
        // scaling; this keeps sums over a tower of seed powers at the maximal
        // power instead of the product of all of them.
        if let Some(q) = other.den.try_div(&self.den) {
            return Rf::new(self.num.mul(&q).add(&other.num), other.den.clone());
        }
        if let Some(q) = self.den.try_div(&other.den) {
            return Rf::new(self.num.add(&other.num.mul(&q)), self.den.clone());
        }
        Rf::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Rf) -> Rf {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Rf {
        Rf {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Rf) -> Rf {
        if self.is_zero() || other.is_zero() {
            return Rf::zero(self.nv());
        }
        Rf::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_scalar(&self, c: &Rat) -> Rf {
        Rf::new(self.num.mul_scalar(c), self.den.clone())
    }

    pub fn div(&self, other: &Rf) -> Rf {
        assert!(!other.is_zero(), "division by zero rational function");
        if self.is_zero() {
            return Rf::zero(self.nv());
        }
        Rf::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn recip(&self) -> Rf {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rf::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Rf {
        if k < 0 {
            return self.recip().pow(-k);
        }
        let mut out = Rf::one(self.nv());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact equality of values, independent of representatives.
    pub fn equals(&self, other: &Rf) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Partial derivative by the quotient rule.
    pub fn derivative(&self, v: usize) -> Rf {
        if self.num.is_zero() {
            return Rf::zero(self.nv());
        }
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return Rf::new(dn, self.den.clone());
        }
        Rf::new(
            dn.mul(&self.den).sub(&self.num.mul(&dd)),
            self.den.mul(&self.den),
        )
    }

    pub fn subst_const(&self, v: usize, value: &Rat) -> Rf {
        Rf::new(
            self.num.subst_const(v, value),
            self.den.subst_const(v, value),
        )
    }

    pub fn subst_poly(&self, v: usize, value: &Poly) -> Rf {
        Rf::new(self.num.subst_poly(v, value), self.den.subst_poly(v, value))
    }

    pub fn subst_rf(&self, v: usize, value: &Rf) -> Rf {
        let n = self.num.subst_rf(v, value);
        let d = self.den.subst_rf(v, value);
        n.div(&d)
    }

    pub fn rewrite_even_powers(&self, v: usize, rep: &Poly) -> Rf {
        Rf::new(
            self.num.rewrite_even_powers(v, rep),
            self.den.rewrite_even_powers(v, rep),
        )
    }

    /// Weighted degree of a quasi-homogeneous rational function:
    /// `Some(deg num - deg den)` when both parts are quasi-homogeneous,
    /// `None` otherwise.  Zero reports `Some(0)`.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        if self.is_zero() {
            return Some(0);
        }
        let sn = self.num.weighted_degrees(weights);
        let sd = self.den.weighted_degrees(weights);
        if sn.len() == 1 && sd.len() == 1 {
            Some(sn.first().unwrap() - sd.first().unwrap())
        } else {
            None
        }
    }
}

impl PartialEq for Rf {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for Rf {}

/// Joint monomial divisor of two monomials (free helper for callers).
pub fn mono_gcd(a: &Mono, b: &Mono) -> Mono {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rint;

    #[test]
    fn cross_multiplied_equality() {
        let nv = 2;
        let x = Poly::var(nv, 0);
        let y = Poly::var(nv, 1);
        // x/y == (x^2 + xy)/(xy + y^2)
        let a = Rf::new(x.clone(), y.clone());
        let b = Rf::new(
            x.pow(2).add(&x.mul(&y)),
            x.mul(&y).add(&y.pow(2)),
        );
        assert!(a.equals(&b));
        assert!(!a.equals(&Rf::from_poly(x)));
    }

    #[test]
    fn denominator_normalization() {
        let nv = 1;
        let x = Poly::var(nv, 0);
        // (2x) / (-4x^2) -> -(1/2)/x  with integer-primitive positive den
        let r = Rf::new(x.mul_scalar(&rint(2)), x.pow(2).mul_scalar(&rint(-4)));
        assert_eq!(r.den, Poly::var(nv, 0));
        assert_eq!(r.num, Poly::constant(nv, crate::rat(-1, 2)));
    }

    #[test]
    fn seed_reduction() {
        let nv = 2;
        let x = Poly::var(nv, 0);
        let y = Poly::var(nv, 1);
        let seed = x.pow(3).sub(&y); // x^3 - y
        let num = seed.mul(&x).mul_scalar(&rint(5));
        let den = seed.mul(&seed).mul(&y);
        let r = Rf { num, den };
        let red = r.reduce(std::slice::from_ref(&seed));
        assert!(red.equals(&r.clone()));
        assert_eq!(red.den, seed.mul(&y));
        // the quotient rule output reduces too
        let q = Rf::new(x.clone(), seed.clone()).derivative(0);
        let qr = q.reduce(std::slice::from_ref(&seed));
        assert!(qr.equals(&q));
    }
}
