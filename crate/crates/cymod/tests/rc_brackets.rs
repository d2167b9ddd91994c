//! Rankin-Cohen bracket checks: the stored reference bracket values, the
//! squared first-bracket identity, membership of bracket values in the
//! t2-free subring, canonical-versus-direct agreement on random pairs, and
//! the algebraic identity battery on random triples.

use cymod::verify;

fn assert_suite(rep: cymod::Report) {
    assert!(rep.all_pass(), "\n{}", rep.render_text());
}

#[test]
fn reference_bracket_values() {
    assert_suite(verify::brackets());
}

#[test]
fn canonical_bracket_matches_direct() {
    for n in 1..=4 {
        assert_suite(verify::canonical_sample(n, 7, 8, 3));
    }
}

#[test]
fn identity_battery_on_random_triples() {
    for n in 1..=2 {
        assert_suite(verify::rc_identities_sample(n, 11, 5));
    }
}

#[test]
fn seed_change_keeps_identities_passing() {
    for seed in [1u64, 99, 123456789] {
        assert_suite(verify::canonical_sample(2, seed, 3, 2));
        assert_suite(verify::rc_identities_sample(1, seed, 2));
    }
}
