//! Dense matrices over the rational-function field.  All matrices in this
//! theory are small (at most (n+1) x (n+1) with n <= 8), so simple dense
//! algorithms are used throughout.

use crate::poly::Poly;
use crate::{Rat, Rf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub e: Vec<Rf>,
}

impl Mat {
    pub fn zero(nv: usize, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            e: vec![Rf::zero(nv); rows * cols],
        }
    }

    pub fn identity(nv: usize, nn: usize) -> Mat {
        let mut m = Mat::zero(nv, nn, nn);
        for i in 0..nn {
            *m.at_mut(i, i) = Rf::one(nv);
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Rf {
        &self.e[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rf {
        &mut self.e[i * self.cols + j]
    }

    pub fn nv(&self) -> usize {
        self.e[0].nv()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            e: self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            e: self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        self.map(Rf::neg)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let nv = self.nv();
        let mut out = Mat::zero(nv, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rf::zero(nv);
                for k in 0..self.cols {
                    let a = self.at(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    /// Matrix product with per-entry seed cancellation.
    pub fn mul_reduced(&self, other: &Mat, seeds: &[Poly]) -> Mat {
        self.mul(other).reduced(seeds)
    }

    pub fn mul_scalar(&self, c: &Rat) -> Mat {
        self.map(|x| x.mul_scalar(c))
    }

    pub fn mul_rf(&self, f: &Rf) -> Mat {
        self.map(|x| x.mul(f))
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.nv(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Rf) -> Rf) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().map(f).collect(),
        }
    }

    pub fn reduced(&self, seeds: &[Poly]) -> Mat {
        self.map(|x| x.reduce(seeds))
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Rf::is_zero)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.at(i, j).is_zero()))
    }

    /// Inverse of an invertible lower-triangular matrix by forward
    /// substitution, column by column.
    pub fn inverse_lower_triangular(&self, seeds: &[Poly]) -> Mat {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        assert!(self.is_lower_triangular(), "matrix is not lower triangular");
        let nn = self.rows;
        let nv = self.nv();
        let mut inv = Mat::zero(nv, nn, nn);
        for j in 0..nn {
            for i in j..nn {
                let diag = self.at(i, i);
                assert!(!diag.is_zero(), "singular triangular matrix");
                let val = if i == j {
                    diag.recip()
                } else {
                    let mut acc = Rf::zero(nv);
                    for k in j..i {
                        acc = acc.add(&self.at(i, k).mul(inv.at(k, j)));
                    }
                    acc.div(diag).neg()
                };
                *inv.at_mut(i, j) = val.reduce(seeds);
            }
        }
        inv
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn lower_triangular_inverse() {
        let nv = 3;
        let x = Rf::from_var(nv, 0);
        let y = Rf::from_var(nv, 1);
        let z = Rf::from_var(nv, 2);
        let mut l = Mat::identity(nv, 3);
        *l.at_mut(1, 0) = x.clone();
        *l.at_mut(1, 1) = y.clone();
        *l.at_mut(2, 0) = z.mul(&z);
        *l.at_mut(2, 1) = x.add(&y);
        *l.at_mut(2, 2) = y.mul(&z);
        let inv = l.inverse_lower_triangular(&[]);
        let prod = l.mul(&inv);
        assert_eq!(prod, Mat::identity(nv, 3));
        let prod2 = inv.mul(&l);
        assert_eq!(prod2, Mat::identity(nv, 3));
        let _ = Poly::one(nv);
    }
}
