//! Exact symbolic machinery for the enhanced moduli spaces of the Dwork
//! family of Calabi-Yau n-folds: moduli charts, Gauss-Manin connection data,
//! modular vector fields, Rankin-Cohen brackets, and q-expansion checks.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every claim the
//! crate verifies is an identity in a polynomial or rational-function ring,
//! or an equality of truncated q-series with exact coefficients.

pub mod chart;
pub mod fields;
pub mod gm;
pub mod matrix;
pub mod poly;
pub mod published;
pub mod qseries;
pub mod ratfun;
pub mod rc;
pub mod report;
pub mod ring;
pub mod sample;
pub mod verify;

pub use chart::Chart;
pub use matrix::Mat;
pub use poly::Poly;
pub use qseries::QSeries;
pub use ratfun::Rf;
pub use report::{Report, ReportItem, Status};
pub use ring::Ring;

/// Convenience alias used throughout: arbitrary-precision rational number.
pub type Rat = num::BigRational;
/// Arbitrary-precision integer.
pub type Int = num::BigInt;

/// Build a `Rat` from an integer pair, mostly for literals in code and tests.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Build an integer `Rat`.
pub fn rint(v: i64) -> Rat {
    Rat::from(Int::from(v))
}
