//! The derived vector fields, weights, and scalar data against the stored
//! reference values for every dimension that has them.

use cymod::verify;

fn assert_suite(rep: cymod::Report) {
    assert!(rep.all_pass(), "\n{}", rep.render_text());
}

#[test]
fn reference_fields_n1() {
    assert_suite(verify::fields_published(1));
}

#[test]
fn reference_fields_n2() {
    assert_suite(verify::fields_published(2));
}

#[test]
fn reference_fields_n3() {
    assert_suite(verify::fields_published(3));
}

#[test]
fn reference_fields_n4() {
    assert_suite(verify::fields_published(4));
}

#[test]
fn reference_weights_n5() {
    assert_suite(verify::weights_n5());
}

#[test]
fn sl2_relations_hold() {
    for n in 1..=6 {
        assert_suite(verify::sl2(n));
    }
}

#[test]
fn quasi_homogeneity_degree_two() {
    for n in 1..=6 {
        assert_suite(verify::homogeneity(n));
    }
}

#[test]
fn amsy_bracket_families() {
    for n in 3..=6 {
        assert_suite(verify::amsy(n));
    }
}

#[test]
fn serre_derivation_closure() {
    for n in 1..=6 {
        assert_suite(verify::serre(n));
    }
}
