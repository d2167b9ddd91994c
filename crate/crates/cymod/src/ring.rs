//! Variable tables: names, canonical ordering, display order, seed
//! polynomials for quotient reduction, plus the canonical text format
//! (printing and parsing) for polynomials and rational functions.
//!
//! The canonical term order is graded lex over the ring's variable order
//! (earlier variable = more significant in ties); terms print in descending
//! order, e.g. `81*t1^4 - 81*t1*t3 - t2^2`.

use crate::poly::{Mono, Poly};
use crate::{Int, Rat, Rf};
use num::{One, Signed};
use std::fmt::Write as _;

#[derive(Clone, Debug)]
pub struct Ring {
    /// Variable names; index in this list is the variable id and its
    /// significance rank for the term order (earlier = more significant).
    pub names: Vec<String>,
    /// Order in which variables print inside a monomial (purely cosmetic;
    /// defaults to id order).
    pub display_order: Vec<usize>,
    /// Non-monomial polynomials that may be cancelled from quotients.
    pub seeds: Vec<Poly>,
}

impl Ring {
    pub fn new(names: Vec<String>) -> Ring {
        let display_order = (0..names.len()).collect();
        Ring {
            names,
            display_order,
            seeds: Vec::new(),
        }
    }

    /// Ring with variables `t1..tk`, mainly for tests and examples.
    pub fn generic(k: usize) -> Ring {
        Ring::new((1..=k).map(|i| format!("t{i}")).collect())
    }

    pub fn nv(&self) -> usize {
        self.names.len()
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var_rf(&self, name: &str) -> Rf {
        Rf::from_var(self.nv(), self.var(name).unwrap_or_else(|| panic!("unknown variable {name}")))
    }

    pub fn var_poly(&self, name: &str) -> Poly {
        Poly::var(self.nv(), self.var(name).unwrap_or_else(|| panic!("unknown variable {name}")))
    }

    // ---------- formatting ----------

    fn fmt_coeff_mag(c: &Rat) -> String {
        let c = c.abs();
        if c.denom().is_one() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }

    fn fmt_mono(&self, m: &Mono) -> String {
        let mut s = String::new();
        for &v in &self.display_order {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.names[v]);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    pub fn fmt_poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (m, c) in p.terms.iter().rev() {
            let neg = c.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.fmt_mono(m);
            let mag = Self::fmt_coeff_mag(c);
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{mag}*{mono}");
            }
        }
        s
    }

    pub fn fmt_rf(&self, r: &Rf) -> String {
        match r.as_poly() {
            Some(p) => self.fmt_poly(p),
            None => {
                // The stored form keeps the denominator integer-primitive, so
                // any rational content sits in the numerator; move it back to
                // the denominator for display (t3^3/(625*...) rather than
                // 1/625*t3^3/(...)).
                let scale = crate::Rat::from(r.num.content().denom().clone());
                let (num_p, den_p) = if scale.is_one() {
                    (r.num.clone(), r.den.clone())
                } else {
                    (r.num.mul_scalar(&scale), r.den.mul_scalar(&scale))
                };
                let num = self.fmt_poly(&num_p);
                let den = self.fmt_poly(&den_p);
                let num_wrapped = if num_p.terms.len() > 1 {
                    format!("({num})")
                } else {
                    num
                };
                format!("{num_wrapped}/({den})")
            }
        }
    }

    // ---------- parsing ----------

    /// Parse the canonical text format (and ordinary arithmetic expressions
    /// over the ring's variables) into a rational function.
    pub fn parse(&self, src: &str) -> Result<Rf, String> {
        let mut p = Parser {
            ring: self,
            chars: src.chars().collect(),
            pos: 0,
        };
        let rf = p.parse_expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(format!(
                "unexpected trailing input at position {}: {:?}",
                p.pos,
                p.rest()
            ));
        }
        Ok(rf)
    }

    /// Parse a polynomial (errors when the expression has a denominator).
    pub fn parse_poly(&self, src: &str) -> Result<Poly, String> {
        let rf = self.parse(src)?;
        rf.as_poly()
            .cloned()
            .ok_or_else(|| format!("expression is not polynomial: {src}"))
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> String {
        self.chars[self.pos..].iter().collect()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn parse_expr(&mut self) -> Result<Rf, String> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.parse_term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Rf, String> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.parse_factor()?);
                }
                Some('/') => {
                    self.bump();
                    let rhs = self.parse_factor()?;
                    if rhs.is_zero() {
                        return Err("division by zero".to_string());
                    }
                    acc = acc.div(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Rf, String> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(self.parse_factor()?.neg())
            }
            Some('+') => {
                self.bump();
                self.parse_factor()
            }
            _ => {
                let base = self.parse_atom()?;
                if self.peek() == Some('^') {
                    self.bump();
                    let e = self.parse_uint()?;
                    Ok(base.pow(e as i64))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn parse_atom(&mut self) -> Result<Rf, String> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.parse_expr()?;
                match self.bump() {
                    Some(')') => Ok(inner),
                    _ => Err("expected ')'".to_string()),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.parse_uint_big()?;
                Ok(Rf::from_const(self.ring.nv(), Rat::from(v)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                self.skip_ws();
                while self.pos < self.chars.len() {
                    let ch = self.chars[self.pos];
                    if ch.is_alphanumeric() || ch == '_' {
                        name.push(ch);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                match self.ring.var(&name) {
                    Some(v) => Ok(Rf::from_var(self.ring.nv(), v)),
                    None => Err(format!("unknown variable {name}")),
                }
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }

    fn parse_uint(&mut self) -> Result<u32, String> {
        let v = self.parse_uint_big()?;
        v.to_string()
            .parse::<u32>()
            .map_err(|_| "exponent too large".to_string())
    }

    fn parse_uint_big(&mut self) -> Result<Int, String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err("expected a number".to_string());
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<Int>().map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rint;

    #[test]
    fn canonical_polynomial_text() {
        let ring = Ring::generic(3);
        // 81*t1^4 - 81*t1*t3 - t2^2 : descending graded lex
        let t1 = ring.var_poly("t1");
        let t2 = ring.var_poly("t2");
        let t3 = ring.var_poly("t3");
        let p = t1
            .pow(4)
            .mul_scalar(&rint(81))
            .sub(&t1.mul(&t3).mul_scalar(&rint(81)))
            .sub(&t2.pow(2));
        assert_eq!(ring.fmt_poly(&p), "81*t1^4 - 81*t1*t3 - t2^2");
        let back = ring.parse_poly("81*t1^4 - 81*t1*t3 - t2^2").unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rational_function_text_roundtrip() {
        let ring = Ring::generic(5);
        let r = ring.parse("t3^3/(625*(t1^5-t5))").unwrap();
        let s = ring.fmt_rf(&r);
        assert_eq!(s, "t3^3/(625*t1^5 - 625*t5)");
        let r2 = ring.parse(&s).unwrap();
        assert!(r.equals(&r2));
    }
}
