//! Chart construction against stored reference data and structural
//! identities: slot placement, solved matrices, dependent solutions, the
//! pairing matrices, couplings, and constraint tangency.

use cymod::chart::placement;
use cymod::{fields, verify, Chart};

#[test]
fn reference_chart_n1() {
    let rep = verify::chart_published(1);
    assert!(rep.all_pass(), "{}", rep.render_text());
}

#[test]
fn reference_chart_n2() {
    let rep = verify::chart_published(2);
    assert!(rep.all_pass(), "{}", rep.render_text());
}

#[test]
fn reference_chart_n3() {
    let rep = verify::chart_published(3);
    assert!(rep.all_pass(), "{}", rep.render_text());
}

#[test]
fn reference_chart_n4() {
    let rep = verify::chart_published(4);
    assert!(rep.all_pass(), "{}", rep.render_text());
}

#[test]
fn placements_match_reference() {
    // independent slots and their generator indices
    let (indep, names, dep, extra) = placement(1);
    assert_eq!(indep, vec![(2, 1)]);
    assert_eq!(names, vec![2]);
    assert_eq!(dep, vec![(2, 2)]);
    assert_eq!(extra, None);

    let (indep, names, dep, extra) = placement(2);
    assert_eq!(indep, vec![(2, 1)]);
    assert_eq!(names, vec![2]);
    assert_eq!(dep, vec![(3, 3), (2, 2), (3, 2), (3, 1)]);
    assert_eq!(extra, Some((2, 2)));

    let (indep, names, dep, extra) = placement(3);
    assert_eq!(indep, vec![(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)]);
    assert_eq!(names, vec![2, 3, 4, 6, 7]);
    assert_eq!(dep, vec![(4, 4), (3, 3), (4, 3), (4, 2)]);
    assert_eq!(extra, None);

    let (indep, names, dep, extra) = placement(4);
    assert_eq!(indep, vec![(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)]);
    assert_eq!(names, vec![2, 3, 4, 5, 7]);
    assert_eq!(
        dep,
        vec![
            (5, 5),
            (4, 4),
            (3, 3),
            (5, 4),
            (4, 3),
            (5, 3),
            (4, 2),
            (5, 2),
            (5, 1)
        ]
    );
    assert_eq!(extra, Some((3, 3)));
}

#[test]
fn free_generator_order() {
    let names = |n: usize| -> Vec<String> {
        let c = Chart::build(n);
        c.free.iter().map(|&v| c.ring.names[v].clone()).collect()
    };
    assert_eq!(names(1), ["t1", "t2", "t3"]);
    assert_eq!(names(2), ["t1", "t2", "t3"]);
    assert_eq!(names(3), ["t1", "t2", "t3", "t4", "t6", "t7", "t5"]);
    assert_eq!(names(4), ["t1", "t2", "t3", "t4", "t5", "t7", "t8"]);
}

#[test]
fn pairing_residual_vanishes() {
    for n in 1..=4 {
        let chart = Chart::build(n);
        assert!(
            chart.pairing_residual().is_zero(),
            "pairing residual nonzero for n={n}"
        );
    }
}

#[test]
fn pairing_symmetry() {
    // the derived-basis pairing is (-1)^n-symmetric
    for n in 1..=4usize {
        let chart = Chart::build(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for i in 0..=n {
            for j in 0..=n {
                let lhs = chart.om.at(i, j);
                let rhs = chart.om.at(j, i).mul_scalar(&cymod::rint(sign));
                assert!(lhs.equals(&rhs), "asymmetry at {i},{j} for n={n}");
            }
        }
    }
}

#[test]
fn constraint_derivative_along_r() {
    for n in 1..=3 {
        let chart = Chart::build(n);
        let r = fields::derive_r(&chart);
        assert!(
            chart.constraint_derivative(&r).is_zero(),
            "R is not tangent to the constraint for n={n}"
        );
    }
}

#[test]
fn coupling_band_antisymmetry() {
    // Y Phi + Phi Y^T = 0: the coupling band is compatible with the
    // intersection form
    for n in 1..=4 {
        let chart = Chart::build(n);
        let y = chart.ymatrix();
        let lhs = y.mul(&chart.phi).add(&chart.phi.mul(&y.transpose()));
        assert!(lhs.is_zero(), "band/pairing compatibility fails for n={n}");
    }
}
