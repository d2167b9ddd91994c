//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are exponent vectors ordered by graded lexicographic order:
//! higher total degree first, ties broken by comparing exponents of the
//! earliest (most significant) variable first.  Variable identity is an
//! index into a [`crate::ring::Ring`], which also owns display names.

use crate::{Rat, Rf};
use num::{BigInt, Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Exponent vector of one monomial.  Length always equals the ring size of
/// the polynomial that owns it.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn one(nv: usize) -> Self {
        Mono(vec![0; nv])
    }

    pub fn var(nv: usize, v: usize) -> Self {
        let mut e = vec![0; nv];
        e[v] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise division; `None` when any exponent would go negative.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u16>>>()
            .map(Mono)
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Weighted degree with the given per-variable weights.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.total_degree().cmp(&other.total_degree());
        if d != Ordering::Equal {
            return d;
        }
        // Graded lex tie-break: the first variable with differing exponent
        // decides; the monomial with the larger exponent there is larger.
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: monomial -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub nv: usize,
    pub terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(nv: usize) -> Self {
        Poly {
            nv,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nv: usize) -> Self {
        Poly::constant(nv, Rat::one())
    }

    pub fn constant(nv: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(nv), c);
        }
        Poly { nv, terms }
    }

    pub fn var(nv: usize, v: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(nv, v), Rat::one());
        Poly { nv, terms }
    }

    /// Single term c * x^mono.
    pub fn term(nv: usize, mono: Mono, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Poly { nv, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Mono::is_one)
    }

    /// The constant value, when `self` is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.0[v] > 0)
    }

    /// Leading (largest) monomial and coefficient in graded lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, mono: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nv, other.nv, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nv: self.nv,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nv, other.nv, "ring mismatch");
        let mut out = Poly::zero(self.nv);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nv);
        }
        Poly {
            nv: self.nv,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Mono) -> Poly {
        Poly {
            nv: self.nv,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nv);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Poly {
        let mut out = Poly::zero(self.nv);
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[v] = e - 1;
            out.add_term(m2, c * Rat::from(BigInt::from(e)));
        }
        out
    }

    /// GCD of all exponent vectors (the largest monomial dividing every term).
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Mono::one(self.nv),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Divide every term by `mono` (must divide all of them).
    pub fn div_mono(&self, mono: &Mono) -> Poly {
        Poly {
            nv: self.nv,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.div(mono).expect("monomial content division"), c.clone()))
                .collect(),
        }
    }

    /// Rational content: gcd of coefficient numerators over lcm of
    /// denominators, carrying the sign of the leading coefficient.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut gcd_num = BigInt::zero();
        let mut lcm_den = BigInt::one();
        for c in self.terms.values() {
            gcd_num = gcd_num.gcd(c.numer());
            lcm_den = lcm_den.lcm(c.denom());
        }
        let mut content = Rat::new(gcd_num, lcm_den);
        if self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        content
    }

    pub fn div_scalar(&self, c: &Rat) -> Poly {
        assert!(!c.is_zero(), "division by zero scalar");
        self.mul_scalar(&c.recip())
    }

    /// Exact polynomial division; `None` when `self` is not a multiple of `g`.
    pub fn try_div(&self, g: &Poly) -> Option<Poly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let (glm, glc) = g.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nv);
        while let Some((rlm, rlc)) = rem.leading() {
            let qm = rlm.div(glm)?;
            let qc = rlc / glc;
            let qterm = Poly::term(self.nv, qm, qc);
            rem = rem.sub(&qterm.mul(g));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    /// Substitute a rational constant for variable `v`.
    pub fn subst_const(&self, v: usize, value: &Rat) -> Poly {
        let mut out = Poly::zero(self.nv);
        for (m, c) in &self.terms {
            let e = m.0[v];
            let mut m2 = m.clone();
            m2.0[v] = 0;
            let mut coef = c.clone();
            for _ in 0..e {
                coef *= value;
            }
            out.add_term(m2, coef);
        }
        out
    }

    /// Substitute a polynomial for variable `v`.
    pub fn subst_poly(&self, v: usize, value: &Poly) -> Poly {
        debug_assert_eq!(self.nv, value.nv, "ring mismatch");
        // Group by the exponent of v and evaluate powers incrementally.
        let maxe = self.degree_in(v);
        let mut by_exp: Vec<Poly> = (0..=maxe as usize).map(|_| Poly::zero(self.nv)).collect();
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            let mut m2 = m.clone();
            m2.0[v] = 0;
            by_exp[e].add_term(m2, c.clone());
        }
        let mut out = Poly::zero(self.nv);
        let mut pw = Poly::one(self.nv);
        for (e, part) in by_exp.iter().enumerate() {
            if e > 0 {
                pw = pw.mul(value);
            }
            if !part.is_zero() {
                out = out.add(&part.mul(&pw));
            }
        }
        out
    }

    /// Substitute a rational function for variable `v` (Horner evaluation).
    pub fn subst_rf(&self, v: usize, value: &Rf) -> Rf {
        let maxe = self.degree_in(v);
        let mut by_exp: Vec<Poly> = (0..=maxe as usize).map(|_| Poly::zero(self.nv)).collect();
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            let mut m2 = m.clone();
            m2.0[v] = 0;
            by_exp[e].add_term(m2, c.clone());
        }
        let mut out = Rf::zero(self.nv);
        for part in by_exp.iter().rev() {
            out = out.mul(value).add(&Rf::from_poly(part.clone()));
        }
        out
    }

    /// Rewrite every power `v^p` with `p >= 2` as `v^(p mod 2) * rep^(p / 2)`.
    /// Used to transport squares of the extra even-n generator back into the
    /// published coordinates.
    pub fn rewrite_even_powers(&self, v: usize, rep: &Poly) -> Poly {
        let mut out = Poly::zero(self.nv);
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e < 2 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let mut m2 = m.clone();
            m2.0[v] = e % 2;
            let piece = Poly::term(self.nv, m2, c.clone()).mul(&rep.pow((e / 2) as u32));
            out = out.add(&piece);
        }
        out
    }

    /// The set of weighted degrees of the monomials (one element iff the
    /// polynomial is quasi-homogeneous for `weights`).
    pub fn weighted_degrees(&self, weights: &[i64]) -> std::collections::BTreeSet<i64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(weights))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    #[test]
    fn grlex_order_matches_contract() {
        // t1*t3 vs t2^2 at equal total degree: the earlier variable wins.
        let a = Mono(vec![1, 0, 1]);
        let b = Mono(vec![0, 2, 0]);
        assert!(a > b);
        // degree dominates
        let c = Mono(vec![4, 0, 0]);
        assert!(c > a);
    }

    #[test]
    fn exact_division_roundtrip() {
        let nv = 3;
        let f = Poly::var(nv, 0)
            .pow(3)
            .sub(&Poly::var(nv, 2))
            .mul(&Poly::var(nv, 1).add(&Poly::constant(nv, rat(2, 3))));
        let g = Poly::var(nv, 1).add(&Poly::constant(nv, rat(2, 3)));
        let q = f.try_div(&g).unwrap();
        assert_eq!(q, Poly::var(nv, 0).pow(3).sub(&Poly::var(nv, 2)));
        assert!(f
            .add(&Poly::one(nv))
            .try_div(&g)
            .is_none());
    }

    #[test]
    fn content_and_mono_content() {
        let nv = 2;
        // -6 x^2 y - 9 x y^2  ->  content -3 (leading negative), mono xy
        let f = Poly::term(nv, Mono(vec![2, 1]), rint(-6))
            .add(&Poly::term(nv, Mono(vec![1, 2]), rint(-9)));
        assert_eq!(f.content(), rint(-3));
        assert_eq!(f.mono_content(), Mono(vec![1, 1]));
    }
}
