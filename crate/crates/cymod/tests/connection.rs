//! Connection matrices of the derived fields: the banded Yukawa form for R,
//! the metric-transpose rule for the basis fields, and the stored reference
//! matrices at n = 3.

use cymod::verify;

fn assert_suite(rep: cymod::Report) {
    assert!(rep.all_pass(), "\n{}", rep.render_text());
}

#[test]
fn connection_n1() {
    assert_suite(verify::connection(1));
}

#[test]
fn connection_n2() {
    assert_suite(verify::connection(2));
}

#[test]
fn connection_n3() {
    assert_suite(verify::connection(3));
}

#[test]
fn connection_n4() {
    assert_suite(verify::connection(4));
}
