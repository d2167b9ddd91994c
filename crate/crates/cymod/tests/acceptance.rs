//! Acceptance battery: one test per acceptance criterion, each printing a
//! single pass/fail line.  Every check is exact (arbitrary-precision
//! rationals); the only tolerances are the stated runtime budgets.

use cymod::{published, verify, Chart, Report};
use std::time::Instant;

fn gate(idx: usize, label: &str, rep: &Report) {
    let ok = rep.all_pass();
    println!(
        "criterion {idx:02}: {} — {label}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {idx:02} failed:\n{}", rep.render_text());
}

fn gate_all(idx: usize, label: &str, reps: &[Report]) {
    let ok = reps.iter().all(Report::all_pass);
    println!(
        "criterion {idx:02}: {} — {label}",
        if ok { "PASS" } else { "FAIL" }
    );
    for rep in reps {
        assert!(rep.all_pass(), "criterion {idx:02} failed:\n{}", rep.render_text());
    }
}

#[test]
fn criterion_01_published_fields() {
    let mut reps = Vec::new();
    for n in 1..=4 {
        let t0 = Instant::now();
        let rep = verify::fields_published(n);
        let dt = t0.elapsed();
        assert!(
            dt.as_secs_f64() < 10.0,
            "field derivation for n={n} took {dt:?} (budget 10 s)"
        );
        reps.push(rep);
    }
    gate_all(
        1,
        "derived fields match the reference expressions for n = 1..4 (< 10 s per n)",
        &reps,
    );
}

#[test]
fn criterion_02_weights() {
    let mut reps = Vec::new();
    for n in 1..=4usize {
        let chart = Chart::build(n);
        let g = published::FIELDS.iter().find(|c| c.n == n).unwrap();
        let expect: std::collections::BTreeMap<String, i64> = g
            .weights
            .iter()
            .map(|&(k, v)| (k.to_string(), v))
            .collect();
        let mut rep = Report::new("weights");
        rep.n = Some(n);
        rep.push("generator weights", chart.weight_map() == expect);
        reps.push(rep.finish());
    }
    reps.push(verify::weights_n5());
    gate_all(2, "generator weights match the reference maps for n = 1..5", &reps);
}

#[test]
fn criterion_03_sl2_and_homogeneity() {
    let t0 = Instant::now();
    let mut reps = Vec::new();
    for n in 1..=6 {
        reps.push(verify::sl2(n));
        reps.push(verify::homogeneity(n));
    }
    let dt = t0.elapsed();
    assert!(
        dt.as_secs_f64() < 120.0,
        "sl2 + homogeneity for n = 1..6 took {dt:?} (budget 2 min)"
    );
    gate_all(
        3,
        "six sl2-type relations and degree-2 quasi-homogeneity hold for n = 1..6 (< 2 min)",
        &reps,
    );
}

#[test]
fn criterion_04_amsy_structure() {
    let reps: Vec<Report> = (3..=5).map(verify::amsy).collect();
    gate_all(4, "the full bracket family of the algebra basis holds for n = 3..5", &reps);
}

#[test]
fn criterion_05_serre_closure() {
    let reps: Vec<Report> = (1..=6).map(verify::serre).collect();
    gate_all(
        5,
        "the corrected derivation keeps every generator except t2 free of t2, n = 1..6",
        &reps,
    );
}

#[test]
fn criterion_06_bracket_tables() {
    gate(
        6,
        "all stored bracket values, the squared-bracket identity, and the n=3 membership pair",
        &verify::brackets(),
    );
}

#[test]
fn criterion_07_canonical_equals_direct() {
    let reps: Vec<Report> = (1..=4)
        .map(|n| verify::canonical_sample(n, 2024, 50, 4))
        .collect();
    gate_all(
        7,
        "canonical bracket = direct bracket for k <= 4 on 50 random pairs per n = 1..4, closure t2-free",
        &reps,
    );
}

#[test]
fn criterion_08_identity_battery() {
    let reps: Vec<Report> = (1..=2)
        .map(|n| verify::rc_identities_sample(n, 2024, 20))
        .collect();
    gate_all(
        8,
        "the bracket identity battery holds on 20 random homogeneous triples per n = 1, 2",
        &reps,
    );
}

#[test]
fn criterion_09_connection_matrices() {
    let reps: Vec<Report> = (1..=4).map(verify::connection).collect();
    gate_all(
        9,
        "stored connection matrices at n = 3 and the metric-transpose rule for n = 1..4",
        &reps,
    );
}

#[test]
fn criterion_10_qseries() {
    let t0 = Instant::now();
    let rep = verify::qseries_suite(50);
    let dt = t0.elapsed();
    assert!(
        dt.as_secs_f64() < 30.0,
        "q-series verifiers at order 50 took {dt:?} (budget 30 s)"
    );
    gate(
        10,
        "all four q-expansion verifiers pass at order 50 (< 30 s)",
        &rep,
    );
}

#[test]
fn criterion_11_large_n_invariants() {
    let mut reps = Vec::new();
    for n in 5..=6 {
        reps.push(verify::sl2(n));
        reps.push(verify::homogeneity(n));
        reps.push(verify::amsy(n));
        reps.push(verify::serre(n));
        reps.push(verify::chart_identities(n));
    }
    gate_all(
        11,
        "n = 5, 6: invariant suites plus the pairing identity and the constraint derivative",
        &reps,
    );
}

#[test]
fn criterion_12_exploration() {
    // Non-blocking by construction: exploration reports informational items
    // only, so this criterion gates solely on the suite completing.
    let rep = verify::exploration(2024);
    for item in &rep.items {
        if let Some(d) = &item.detail {
            println!("  note: {} — {}", item.relation_id, d);
        }
    }
    gate(
        12,
        "exploration report (negative-weight closure samples; depth-2 discriminant bracket at n = 5)",
        &rep,
    );
}
