//! Reference values for the low-dimensional charts: solved chart matrices,
//! pairing data, couplings, vector-field components, scaling weights,
//! connection matrices, bracket tables, and q-expansion coefficients.
//!
//! These are the values the library is expected to reproduce from scratch;
//! the verification suites in [`crate::verify`] and the test harness compare
//! freshly computed objects against them.  Expression strings use `**` for
//! powers; [`parse_in`] converts and parses them in a chart's ring.

use crate::{Rf, Ring};

/// Parse a reference expression (with `**` powers) in the given ring.
pub fn parse_in(ring: &Ring, src: &str) -> Rf {
    ring.parse(&src.replace("**", "^"))
        .unwrap_or_else(|e| panic!("bad reference expression {src:?}: {e}"))
}

// ---------------------------------------------------------------------------
// chart data
// ---------------------------------------------------------------------------

/// Reference chart data for one dimension.
pub struct ChartGolden {
    pub n: usize,
    /// Solved chart matrix, calibrated, row by row.
    pub s: &'static [&'static [&'static str]],
    /// Dependent-slot solutions in solve order (symbolic `c_n`).
    pub dependents: &'static [&'static str],
    /// Pairing matrix in the derived basis (symbolic `c_n`).
    pub omega: &'static [&'static [&'static str]],
    /// Constant intersection form.
    pub phi: &'static [&'static [i64]],
    /// Couplings by band position, calibrated.
    pub yukawa: &'static [(usize, &'static str)],
}

pub const CHARTS: &[ChartGolden] = &[
    ChartGolden {
        n: 1,
        s: &[&["1", "0"], &["t2", "-9*(t1**3 - t3)"]],
        dependents: &["(-t1**3 + t3)/(3*c_n)"],
        omega: &[
            &["0", "-3*c_n/(t1**3 - t3)"],
            &["3*c_n/(t1**3 - t3)", "0"],
        ],
        phi: &[&[0, 1], &[-1, 0]],
        yukawa: &[(0, "1")],
    },
    ChartGolden {
        n: 2,
        s: &[
            &["1", "0", "0"],
            &["t2", "t3", "0"],
            &["-(4*t1**2 + t2**2)/2", "-8*t1**3 - t2*t3", "-t3**2"],
        ],
        dependents: &[
            "-t3**2",
            "(-8*c_n*t2*t3 + t1**3)/(8*c_n)",
            "(-16*c_n*t2**2 + t1**2)/(32*c_n)",
        ],
        omega: &[
            &["0", "0", "16*c_n/(t1**4 - t4)"],
            &[
                "0",
                "-16*c_n/(t1**4 - t4)",
                "32*c_n*t1**3/(t1**8 - 2*t1**4*t4 + t4**2)",
            ],
            &[
                "16*c_n/(t1**4 - t4)",
                "32*c_n*t1**3/(t1**8 - 2*t1**4*t4 + t4**2)",
                "(-80*c_n*t1**6 + 16*c_n*t1**2*t4)/(t1**12 - 3*t1**8*t4 + 3*t1**4*t4**2 - t4**3)",
            ],
        ],
        phi: &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]],
        yukawa: &[(0, "1"), (1, "-1")],
    },
    ChartGolden {
        n: 3,
        s: &[
            &["1", "0", "0", "0"],
            &["t2", "t3", "0", "0"],
            &["t4", "t6", "625*(t1**5 - t5)/t3", "0"],
            &[
                "t7",
                "-3125*t1**3 - t2*t6 + t3*t4",
                "-625*(t1**5*t2 + 5*t1**4*t3 - t2*t5)/t3",
                "-625*(t1**5 - t5)",
            ],
        ],
        dependents: &[
            "(-t1**5 + t5)/(125*c_n)",
            "(t1**5 - t5)/(125*c_n*t3)",
            "(-t1**5*t2 - 5*t1**4*t3 + t2*t5)/(125*c_n*t3)",
            "(-25*c_n*t2*t6 + 25*c_n*t3*t4 - t1**3)/(25*c_n)",
        ],
        omega: &[
            &["0", "0", "0", "-125*c_n/(t1**5 - t5)"],
            &[
                "0",
                "0",
                "125*c_n/(t1**5 - t5)",
                "-625*c_n*t1**4/(t1**10 - 2*t1**5*t5 + t5**2)",
            ],
            &[
                "0",
                "-125*c_n/(t1**5 - t5)",
                "0",
                "625*c_n*t1**3/(t1**10 - 2*t1**5*t5 + t5**2)",
            ],
            &[
                "125*c_n/(t1**5 - t5)",
                "625*c_n*t1**4/(t1**10 - 2*t1**5*t5 + t5**2)",
                "-625*c_n*t1**3/(t1**10 - 2*t1**5*t5 + t5**2)",
                "0",
            ],
        ],
        phi: &[
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
            &[0, -1, 0, 0],
            &[-1, 0, 0, 0],
        ],
        yukawa: &[(0, "1"), (1, "t3**3/(625*(t1**5 - t5))"), (2, "-1")],
    },
    ChartGolden {
        n: 4,
        s: &[
            &["1", "0", "0", "0", "0"],
            &["t2", "t3", "0", "0", "0"],
            &["t4", "t5", "t8", "0", "0"],
            &[
                "t7",
                "-(180*t1**4 + t5**2)/(2*t3)",
                "-(108*t1**5 + t5*t8)/t3",
                "-t8**2/t3",
                "0",
            ],
            &[
                "(36*t1**2 - 2*t2*t7 - t4**2)/2",
                "(180*t1**4*t2 + 720*t1**3*t3 + t2*t5**2 - 2*t3**2*t7 - 2*t3*t4*t5)/(2*t3)",
                "(108*t1**5*t2 + 720*t1**4*t3 + t2*t5*t8 - t3*t4*t8)/t3",
                "(324*t1**5*t3 + t2*t8**2)/t3",
                "t8**2",
            ],
        ],
        dependents: &[
            "t8**2",
            "-t8**2/t3",
            "(144*c_n*t2*t8**2 + t1**5*t3)/(144*c_n*t3)",
            "(-432*c_n*t5*t8 - t1**5)/(432*c_n*t3)",
            "(1296*c_n*t2*t5*t8 - 1296*c_n*t3*t4*t8 + 3*t1**5*t2 + 20*t1**4*t3)/(1296*c_n*t3)",
            "(-1296*c_n*t5**2 - 5*t1**4)/(2592*c_n*t3)",
            "(1296*c_n*t2*t5**2 - 2592*c_n*t3**2*t7 - 2592*c_n*t3*t4*t5 + 5*t1**4*t2 + 20*t1**3*t3)/(2592*c_n*t3)",
            "(-2592*c_n*t2*t7 - 1296*c_n*t4**2 + t1**2)/(2592*c_n)",
        ],
        omega: &[
            &["0", "0", "0", "0", "1296*c_n/(t1**6 - t6)"],
            &[
                "0",
                "0",
                "0",
                "-1296*c_n/(t1**6 - t6)",
                "11664*c_n*t1**5/(t1**12 - 2*t1**6*t6 + t6**2)",
            ],
            &[
                "0",
                "0",
                "1296*c_n/(t1**6 - t6)",
                "-3888*c_n*t1**5/(t1**12 - 2*t1**6*t6 + t6**2)",
                "(9072*c_n*t1**10 + 25920*c_n*t1**4*t6)/(t1**18 - 3*t1**12*t6 + 3*t1**6*t6**2 - t6**3)",
            ],
            &[
                "0",
                "-1296*c_n/(t1**6 - t6)",
                "-3888*c_n*t1**5/(t1**12 - 2*t1**6*t6 + t6**2)",
                "(18144*c_n*t1**10 - 6480*c_n*t1**4*t6)/(t1**18 - 3*t1**12*t6 + 3*t1**6*t6**2 - t6**3)",
                "(-72576*c_n*t1**15 - 45360*c_n*t1**9*t6 + 12960*c_n*t1**3*t6**2)/(t1**24 - 4*t1**18*t6 + 6*t1**12*t6**2 - 4*t1**6*t6**3 + t6**4)",
            ],
            &[
                "1296*c_n/(t1**6 - t6)",
                "11664*c_n*t1**5/(t1**12 - 2*t1**6*t6 + t6**2)",
                "(9072*c_n*t1**10 + 25920*c_n*t1**4*t6)/(t1**18 - 3*t1**12*t6 + 3*t1**6*t6**2 - t6**3)",
                "(-72576*c_n*t1**15 - 45360*c_n*t1**9*t6 + 12960*c_n*t1**3*t6**2)/(t1**24 - 4*t1**18*t6 + 6*t1**12*t6**2 - 4*t1**6*t6**3 + t6**4)",
                "(353808*c_n*t1**20 + 308448*c_n*t1**14*t6 + 281232*c_n*t1**8*t6**2 + 1296*c_n*t1**2*t6**3)/(t1**30 - 5*t1**24*t6 + 10*t1**18*t6**2 - 10*t1**12*t6**3 + 5*t1**6*t6**4 - t6**5)",
            ],
        ],
        phi: &[
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0],
        ],
        yukawa: &[
            (0, "1"),
            (1, "t3**2/t8"),
            (2, "-t3**2/t8"),
            (3, "-1"),
        ],
    },
];

// ---------------------------------------------------------------------------
// vector fields, weights, degree-zero functions
// ---------------------------------------------------------------------------

/// Reference field data for one dimension (calibrated, free coordinates).
pub struct FieldGolden {
    pub n: usize,
    /// Free generators in chart order.
    pub free: &'static [&'static str],
    /// Components of the modular vector field `R`, keyed by generator.
    pub r: &'static [(&'static str, &'static str)],
    /// Components of the Euler-type field `H`.
    pub h: &'static [(&'static str, &'static str)],
    /// Components of the lowering field `F`.
    pub f: &'static [(&'static str, &'static str)],
    /// Components of the corrected field `D`.
    pub d: &'static [(&'static str, &'static str)],
    /// Scaling weights of the free generators.
    pub weights: &'static [(&'static str, i64)],
    /// The weight-4 function pairing with the Serre-type derivation.
    pub lambda: &'static str,
}

pub const FIELDS: &[FieldGolden] = &[
    FieldGolden {
        n: 1,
        free: &["t1", "t2", "t3"],
        r: &[
            ("t1", "-9*t1**3 - t1*t2 + 9*t3"),
            ("t2", "81*t1**4 - 81*t1*t3 - t2**2"),
            ("t3", "-3*t2*t3"),
        ],
        h: &[("t1", "t1"), ("t2", "2*t2"), ("t3", "3*t3")],
        f: &[("t1", "0"), ("t2", "1"), ("t3", "0")],
        d: &[
            ("t1", "-9*t1**3 - t1*t2 + 9*t3"),
            ("t2", "81*t1**4 - 81*t1*t3 - t2**2"),
            ("t3", "-3*t2*t3"),
        ],
        weights: &[("t1", 1), ("t2", 2), ("t3", 3)],
        lambda: "-81*t1*(t1**3 - t3)",
    },
    FieldGolden {
        n: 2,
        free: &["t1", "t2", "t3"],
        r: &[
            ("t1", "-t1*t2 + t3"),
            ("t2", "(2*t1 - t2)*(2*t1 + t2)/2"),
            ("t3", "2*(4*t1**3 - t2*t3)"),
        ],
        h: &[("t1", "2*t1"), ("t2", "2*t2"), ("t3", "4*t3")],
        f: &[("t1", "0"), ("t2", "2"), ("t3", "0")],
        d: &[
            ("t1", "-t1*t2 + t3"),
            ("t2", "(2*t1 - t2)*(2*t1 + t2)/2"),
            ("t3", "2*(4*t1**3 - t2*t3)"),
        ],
        weights: &[("t1", 2), ("t2", 2), ("t3", 4)],
        lambda: "-t1**2",
    },
    FieldGolden {
        n: 3,
        free: &["t1", "t2", "t3", "t4", "t6", "t7", "t5"],
        r: &[
            ("t1", "-t1*t2 + t3"),
            (
                "t2",
                "-(625*t1**5*t2**2 - 625*t2**2*t5 - t3**3*t4)/(625*(t1**5 - t5))",
            ),
            (
                "t3",
                "-t3*(1875*t1**5*t2 - 1875*t2*t5 - t3**2*t6)/(625*(t1**5 - t5))",
            ),
            ("t4", "-t2*t4 - t7"),
            ("t6", "3125*t1**3 - t2*t6 - 2*t3*t4"),
            ("t7", "-625*t1*t3 - t2*t7"),
            ("t5", "-5*t2*t5"),
        ],
        h: &[
            ("t1", "t1"),
            ("t2", "2*t2"),
            ("t3", "3*t3"),
            ("t4", "0"),
            ("t6", "t6"),
            ("t7", "2*t7"),
            ("t5", "5*t5"),
        ],
        f: &[
            ("t1", "0"),
            ("t2", "1"),
            ("t3", "0"),
            ("t4", "0"),
            ("t6", "0"),
            ("t7", "-t4"),
            ("t5", "0"),
        ],
        d: &[
            ("t1", "-t1*t2 + t3"),
            (
                "t2",
                "-(625*t1**5*t2**2 - 625*t2**2*t5 - t3**3*t4)/(625*(t1**5 - t5))",
            ),
            (
                "t3",
                "-t3*(1875*t1**5*t2 - 1875*t2*t5 - t3**2*t6)/(625*(t1**5 - t5))",
            ),
            ("t4", "-t7"),
            ("t6", "3125*t1**3 - t2*t6 - 2*t3*t4"),
            ("t7", "-625*t1*t3 - 2*t2*t7"),
            ("t5", "-5*t2*t5"),
        ],
        weights: &[
            ("t1", 1),
            ("t2", 2),
            ("t3", 3),
            ("t4", 0),
            ("t6", 1),
            ("t7", 2),
            ("t5", 5),
        ],
        lambda: "-t3**3*t4/(625*(t1**5 - t5))",
    },
    FieldGolden {
        n: 4,
        free: &["t1", "t2", "t3", "t4", "t5", "t7", "t8"],
        r: &[
            ("t1", "-t1*t2 + t3"),
            ("t2", "-(t2**2*t8 - t3**2*t4)/t8"),
            ("t3", "-t3*(3*t2*t8 - t3*t5)/t8"),
            ("t4", "-(t2*t4*t8 + t3**2*t7)/t8"),
            (
                "t5",
                "(180*t1**4*t3 - 4*t2*t5*t8 - 2*t3*t4*t8 + t3*t5**2)/(2*t8)",
            ),
            ("t7", "-(6*t1 - t4)*(6*t1 + t4)/2"),
            ("t8", "3*(36*t1**5*t3 - t2*t8**2)/t8"),
        ],
        h: &[
            ("t1", "t1"),
            ("t2", "2*t2"),
            ("t3", "3*t3"),
            ("t4", "t4"),
            ("t5", "2*t5"),
            ("t7", "0"),
            ("t8", "3*t8"),
        ],
        f: &[
            ("t1", "0"),
            ("t2", "1"),
            ("t3", "0"),
            ("t4", "0"),
            ("t5", "0"),
            ("t7", "0"),
            ("t8", "0"),
        ],
        d: &[
            ("t1", "-t1*t2 + t3"),
            ("t2", "-(t2**2*t8 - t3**2*t4)/t8"),
            ("t3", "-t3*(3*t2*t8 - t3*t5)/t8"),
            ("t4", "-(t2*t4*t8 + t3**2*t7)/t8"),
            (
                "t5",
                "(180*t1**4*t3 - 4*t2*t5*t8 - 2*t3*t4*t8 + t3*t5**2)/(2*t8)",
            ),
            ("t7", "-(6*t1 - t4)*(6*t1 + t4)/2"),
            ("t8", "3*(36*t1**5*t3 - t2*t8**2)/t8"),
        ],
        weights: &[
            ("t1", 1),
            ("t2", 2),
            ("t3", 3),
            ("t4", 1),
            ("t5", 2),
            ("t7", 0),
            ("t8", 3),
        ],
        lambda: "-t3**2*t4/t8",
    },
];

/// Scaling weights of the free generators for n = 5.
pub const WEIGHTS_N5: &[(&str, i64)] = &[
    ("t1", 1),
    ("t2", 2),
    ("t3", 3),
    ("t4", 1),
    ("t5", 2),
    ("t6", 3),
    ("t7", 7),
    ("t8", 1),
    ("t9", 2),
    ("t10", 3),
    ("t11", 0),
    ("t12", 1),
    ("t13", 2),
];

// ---------------------------------------------------------------------------
// bracket tables
// ---------------------------------------------------------------------------

/// One reference bracket value; expressions in the chart's base coordinates
/// (which may use the eliminated `t_{n+2}`).
pub struct BracketGolden {
    pub n: usize,
    pub label: &'static str,
    pub f: &'static str,
    pub g: &'static str,
    pub k: u32,
    pub expect: &'static str,
}

pub const BRACKETS: &[BracketGolden] = &[
    // n = 1, discriminant t3*(t1^3 - t3)
    BracketGolden {
        n: 1,
        label: "[t1,t3]_1",
        f: "t1",
        g: "t3",
        k: 1,
        expect: "27*t3*(t1**3 - t3)",
    },
    BracketGolden {
        n: 1,
        label: "[t1,t3]_2",
        f: "t1",
        g: "t3",
        k: 2,
        expect: "729*t1**2*t3*(t1**3 - t3)",
    },
    BracketGolden {
        n: 1,
        label: "[t1,t1]_2",
        f: "t1",
        g: "t1",
        k: 2,
        expect: "324*t3*(t1**3 - t3)",
    },
    BracketGolden {
        n: 1,
        label: "[t3,t3]_2",
        f: "t3",
        g: "t3",
        k: 2,
        expect: "-2916*t1*t3*(t1**3 - t3)",
    },
    BracketGolden {
        n: 1,
        label: "[delta,delta]_2",
        f: "t3*(t1**3 - t3)",
        g: "t3*(t1**3 - t3)",
        k: 2,
        expect: "-5103*t1**4*t3**2*(t1**3 - t3)**2",
    },
    // n = 2, base coordinate t4, discriminant t4*(t1^4 - t4)
    BracketGolden {
        n: 2,
        label: "[t1,t4]_1",
        f: "t1",
        g: "t4",
        k: 1,
        expect: "-8*t3*t4",
    },
    BracketGolden {
        n: 2,
        label: "[t1,t4]_2",
        f: "t1",
        g: "t4",
        k: 2,
        expect: "192*t1**3*t4",
    },
    BracketGolden {
        n: 2,
        label: "[t1,t1]_2",
        f: "t1",
        g: "t1",
        k: 2,
        expect: "36*t4",
    },
    BracketGolden {
        n: 2,
        label: "[t4,t4]_2",
        f: "t4",
        g: "t4",
        k: 2,
        expect: "-576*t1**2*t4**2",
    },
    BracketGolden {
        n: 2,
        label: "[delta,delta]_2",
        f: "t4*(t1**4 - t4)",
        g: "t4*(t1**4 - t4)",
        k: 2,
        expect: "-1088*t1**2*t4**2*(t1**4 + 8*t4)*(t1**4 - t4)",
    },
    // n = 3, discriminant t5*(t1^5 - t5)
    BracketGolden {
        n: 3,
        label: "[t1,t5]_1",
        f: "t1",
        g: "t5",
        k: 1,
        expect: "-5*t3*t5",
    },
    BracketGolden {
        n: 3,
        label: "[t1,t5]_2",
        f: "t1",
        g: "t5",
        k: 2,
        expect: "(-4*t1*t3**3*t4*t5 + 3*t3**3*t5*t6)/(125*(t1**5 - t5))",
    },
    BracketGolden {
        n: 3,
        label: "[t1,t1]_2",
        f: "t1",
        g: "t1",
        k: 2,
        expect: "(-2500*t3**2*(t1**5 - t5) - 2*t1*t3**3*(t1*t4 - t6))/(625*(t1**5 - t5))",
    },
    BracketGolden {
        n: 3,
        label: "[t5,t5]_2",
        f: "t5",
        g: "t5",
        k: 2,
        expect: "-6*t3**3*t4*t5**2/(25*(t1**5 - t5))",
    },
    BracketGolden {
        n: 3,
        label: "[delta,delta]_2",
        f: "t5*(t1**5 - t5)",
        g: "t5*(t1**5 - t5)",
        k: 2,
        expect: "t3**2*t5**2/25*(t1**3*(-20625*t1**5 - 55000*t5 + 22*t1*t3*t6) - 44*t3*t4*(t1**5 - t5))",
    },
    // n = 4, base coordinate t6, discriminant t6*(t1^6 - t6)
    BracketGolden {
        n: 4,
        label: "[t1,t6]_1",
        f: "t1",
        g: "t6",
        k: 1,
        expect: "-6*t3*t6",
    },
    BracketGolden {
        n: 4,
        label: "[t1,t6]_2",
        f: "t1",
        g: "t6",
        k: 2,
        expect: "(-9*t1*t3**2*t4*t6*t8 + 7*t3**2*t5*t6*t8)/(12*(t1**6 - t6))",
    },
    BracketGolden {
        n: 4,
        label: "[t1,t1]_2",
        f: "t1",
        g: "t1",
        k: 2,
        expect: "(-72*t3**2*(t1**6 - t6) - t1*t3**2*t8*(t1*t4 - t5))/(18*(t1**6 - t6))",
    },
    BracketGolden {
        n: 4,
        label: "[t6,t6]_2",
        f: "t6",
        g: "t6",
        k: 2,
        expect: "-7*t3**2*t4*t6**2*t8/(t1**6 - t6)",
    },
    BracketGolden {
        n: 4,
        label: "[delta,delta]_2",
        f: "t6*(t1**6 - t6)",
        g: "t6*(t1**6 - t6)",
        k: 2,
        expect: "t3**2*t6**2*(t1**4*(-1404*t1**6 - 4680*t6 + 26*t1*t5*t8) - 52*t4*t8*(t1**6 - t6))",
    },
];

/// The n = 2 square relation: `[t1,t4]_1^2 = 256 t4^2 (t1^4 - t4)`.
pub const SQUARE_IDENTITY_N2: (&str, &str, &str) =
    ("t1", "t4", "256*t4**2*(t1**4 - t4)");

/// The n = 3 membership pair: the degree-1 bracket of `t4` with the
/// discriminant stays inside the subring free of `t2` when taken over the
/// Serre-compatible derivation, and leaves it over the `R`-derivation.
pub const MEMBERSHIP_PAIR_N3: (&str, &str, &str) =
    ("t4", "t5*(t1**5 - t5)", "10*t5*t7*(t1**5 - t5)");

// ---------------------------------------------------------------------------
// connection matrices (n = 3)
// ---------------------------------------------------------------------------

pub const CONN_R_N3: &[&[&str]] = &[
    &["0", "1", "0", "0"],
    &["0", "0", "t3**3/(625*(t1**5 - t5))", "0"],
    &["0", "0", "0", "-1"],
    &["0", "0", "0", "0"],
];

pub const CONN_D_N3: &[&[&str]] = &[
    &["0", "1", "0", "0"],
    &["0", "0", "t3**3/(625*(t1**5 - t5))", "0"],
    &["t2*t4", "0", "0", "-1"],
    &["-t2*(t2*t4 + t7)", "t2*t4", "0", "0"],
];

// ---------------------------------------------------------------------------
// q-expansion coefficients (exponent keys in 24ths of the nome power)
// ---------------------------------------------------------------------------

pub const QEXP_T1_N1: &[(i64, &str)] = &[
    (0, "1/3"),
    (24, "2"),
    (72, "2"),
    (96, "2"),
    (168, "4"),
    (216, "2"),
    (288, "2"),
    (312, "4"),
    (384, "2"),
    (456, "4"),
    (504, "4"),
    (600, "2"),
    (648, "2"),
];

pub const QEXP_T2_N1: &[(i64, &str)] = &[
    (0, "-1"),
    (24, "-3"),
    (48, "-9"),
    (72, "15"),
    (96, "-21"),
    (120, "-18"),
    (144, "45"),
    (168, "-24"),
    (192, "-45"),
    (216, "69"),
    (240, "-54"),
    (264, "-36"),
    (288, "105"),
];

pub const QEXP_T3_N1: &[(i64, &str)] = &[
    (24, "1"),
    (48, "3"),
    (72, "9"),
    (96, "13"),
    (120, "24"),
    (144, "27"),
    (168, "50"),
    (192, "51"),
    (216, "81"),
    (240, "72"),
    (264, "120"),
    (288, "117"),
    (312, "170"),
];

pub const QEXP_DELTA_N1: &[(i64, &str)] = &[
    (24, "1/27"),
    (48, "-2/9"),
    (72, "1/3"),
    (96, "4/27"),
    (120, "2/9"),
    (144, "-2"),
    (168, "-40/27"),
    (192, "56/9"),
    (216, "3"),
    (240, "-4/3"),
    (264, "-188/9"),
    (288, "4/3"),
    (312, "638/27"),
];

pub const QEXP_U1_N2: &[(i64, &str)] = &[
    (0, "1/40"),
    (24, "3/5"),
    (48, "3/5"),
    (72, "12/5"),
    (96, "3/5"),
    (120, "18/5"),
    (144, "12/5"),
    (168, "24/5"),
    (192, "3/5"),
    (216, "39/5"),
    (240, "18/5"),
    (264, "36/5"),
    (288, "12/5"),
];

pub const QEXP_U2_N2: &[(i64, &str)] = &[
    (0, "1/20"),
    (24, "-2/5"),
    (48, "-2"),
    (72, "-8/5"),
    (96, "-26/5"),
    (120, "-12/5"),
    (144, "-8"),
    (168, "-16/5"),
    (192, "-58/5"),
    (216, "-26/5"),
    (240, "-12"),
    (264, "-24/5"),
    (288, "-104/5"),
];

pub const QEXP_U3_N2: &[(i64, &str)] = &[
    (0, "1/800"),
    (24, "-1/10"),
    (48, "-1/2"),
    (72, "-14/5"),
    (96, "-37/10"),
    (120, "-63/5"),
    (144, "-14"),
    (168, "-172/5"),
    (192, "-293/10"),
    (216, "-757/10"),
    (240, "-63"),
    (264, "-666/5"),
    (288, "-518/5"),
];

pub const QEXP_U4_N2: &[(i64, &str)] = &[
    (24, "1/10000"),
    (48, "-1/1250"),
    (72, "3/2500"),
    (96, "4/625"),
    (120, "-21/1000"),
    (144, "-6/625"),
    (168, "127/1250"),
    (192, "-32/625"),
    (216, "-2043/10000"),
    (240, "21/125"),
    (264, "273/2500"),
    (288, "48/625"),
    (312, "691/5000"),
];

pub const QEXP_ETA6ETA6: &[(i64, &str)] = &[
    (24, "1"),
    (48, "-6"),
    (72, "9"),
    (96, "4"),
    (120, "6"),
    (144, "-54"),
    (168, "-40"),
    (192, "168"),
    (216, "81"),
    (240, "-36"),
    (264, "-564"),
    (288, "36"),
    (312, "638"),
];

pub const QEXP_THETA2: &[(i64, &str)] = &[
    (3, "2"),
    (27, "2"),
    (75, "2"),
    (147, "2"),
    (243, "2"),
    (363, "2"),
];

pub const QEXP_THETA3: &[(i64, &str)] = &[
    (0, "1"),
    (12, "2"),
    (48, "2"),
    (108, "2"),
    (192, "2"),
    (300, "2"),
];

pub const QEXP_E2: &[(i64, &str)] = &[
    (0, "1"),
    (24, "-24"),
    (48, "-72"),
    (72, "-96"),
    (96, "-168"),
    (120, "-144"),
];

pub const QEXP_ETA: &[(i64, &str)] = &[
    (1, "1"),
    (25, "-1"),
    (49, "-1"),
    (121, "1"),
    (169, "1"),
    (289, "-1"),
];
