//! Verification suites: each function rebuilds the objects it checks from
//! scratch and compares them against structural identities or the reference
//! values in [`crate::published`], returning a [`Report`].

use crate::chart::Field;
use crate::published::{self, parse_in};
use crate::rc::RcCtx;
use crate::report::Report;
use crate::sample::Sampler;
use crate::{fields, qseries, Chart, Mat, Rf};

fn mat_equals(a: &Mat, b: &Mat) -> bool {
    if a.rows != b.rows || a.cols != b.cols {
        return false;
    }
    for i in 0..a.rows {
        for j in 0..a.cols {
            if !a.at(i, j).equals(b.at(i, j)) {
                return false;
            }
        }
    }
    true
}

/// sl2 relations among `R`, `H`, `F`, `D`, `d/dt2`.
pub fn sl2(n: usize) -> Report {
    let chart = Chart::build(n);
    let mut rep = Report::new("sl2");
    rep.n = Some(n);
    for (id, ok) in fields::sl2_report(&chart) {
        rep.push(&id, ok);
    }
    rep.finish()
}

/// Quasi-homogeneity of degree 2 for the fields `R` and `D`.
pub fn homogeneity(n: usize) -> Report {
    let chart = Chart::build(n);
    let r = fields::derive_r(&chart);
    let h = fields::h_field(&chart);
    let d = fields::d_field(&chart, &r, &h);
    let mut rep = Report::new("homogeneity");
    rep.n = Some(n);
    match fields::check_quasi_homogeneous(&chart, &r, 2) {
        Ok(()) => rep.push("R is quasi-homogeneous of degree 2", true),
        Err(bad) => rep.push_detail("R is quasi-homogeneous of degree 2", false, &bad.join("; ")),
    }
    match fields::check_quasi_homogeneous(&chart, &d, 2) {
        Ok(()) => rep.push("D is quasi-homogeneous of degree 2", true),
        Err(bad) => rep.push_detail("D is quasi-homogeneous of degree 2", false, &bad.join("; ")),
    }
    rep.finish()
}

/// Bracket structure of `[R, .]` over the basis of the pairing-preserving
/// algebra.
pub fn amsy(n: usize) -> Report {
    let chart = Chart::build(n);
    let r = fields::derive_r(&chart);
    let mut rep = Report::new("amsy");
    rep.n = Some(n);
    for (id, ok) in fields::amsy_report(&chart, &r) {
        rep.push(&id, ok);
    }
    rep.finish()
}

/// Serre-type derivation closure: every corrected generator image is t2-free.
pub fn serre(n: usize) -> Report {
    let chart = Chart::build(n);
    let r = fields::derive_r(&chart);
    let h = fields::h_field(&chart);
    let d = fields::d_field(&chart, &r, &h);
    let mut rep = Report::new("serre");
    rep.n = Some(n);
    for (id, ok) in fields::serre_closure_report(&chart, &d) {
        rep.push(&id, ok);
    }
    rep.finish()
}

/// Chart-level identities: the solved matrix satisfies the pairing
/// constraint, and the modular field is tangent to the constraint variety.
pub fn chart_identities(n: usize) -> Report {
    let chart = Chart::build(n);
    let mut rep = Report::new("chart");
    rep.n = Some(n);
    rep.push(
        "S Omega S^T = Phi",
        chart.pairing_residual().is_zero(),
    );
    let r = fields::derive_r(&chart);
    rep.push(
        "constraint derivative along R vanishes",
        chart.constraint_derivative(&r).is_zero(),
    );
    rep.finish()
}

/// Compare a freshly built chart against the stored reference data
/// (n = 1..4): solved matrix, dependent solutions, pairing matrices, and
/// couplings.
pub fn chart_published(n: usize) -> Report {
    let chart = Chart::build(n);
    let g = published::CHARTS
        .iter()
        .find(|c| c.n == n)
        .expect("no reference chart for this n");
    let ring = &chart.ring;
    let mut rep = Report::new("chart-reference");
    rep.n = Some(n);

    let mut s_ok = true;
    for i in 0..=n {
        for j in 0..=n {
            let expect = parse_in(ring, g.s[i][j]);
            if !chart.calibrate(chart.s.at(i, j)).equals(&expect) {
                s_ok = false;
            }
        }
    }
    rep.push("solved chart matrix", s_ok);

    let mut dep_ok = chart.solved.len() == g.dependents.len();
    if dep_ok {
        for ((_, val), expect) in chart.solved.iter().zip(g.dependents) {
            if !val.equals(&parse_in(ring, expect)) {
                dep_ok = false;
            }
        }
    }
    rep.push("dependent-slot solutions", dep_ok);

    let mut om_ok = true;
    for i in 0..=n {
        for j in 0..=n {
            if !chart.om.at(i, j).equals(&parse_in(ring, g.omega[i][j])) {
                om_ok = false;
            }
        }
    }
    rep.push("pairing matrix in the derived basis", om_ok);

    let mut phi_ok = true;
    for i in 0..=n {
        for j in 0..=n {
            let expect = Rf::from_const(ring.nv(), crate::rint(g.phi[i][j]));
            if !chart.phi.at(i, j).equals(&expect) {
                phi_ok = false;
            }
        }
    }
    rep.push("constant intersection form", phi_ok);

    let y = chart.yukawa();
    let mut y_ok = y.len() == g.yukawa.len();
    for (idx, expect) in g.yukawa {
        match y.get(idx) {
            Some(v) if chart.calibrate(v).equals(&parse_in(ring, expect)) => {}
            _ => y_ok = false,
        }
    }
    rep.push("couplings", y_ok);

    rep.finish()
}

/// Compare freshly derived fields against the stored reference components
/// (n = 1..4): `R`, `H`, `F`, `D`, the weights, and the weight-4 function.
pub fn fields_published(n: usize) -> Report {
    let chart = Chart::build(n);
    let g = published::FIELDS
        .iter()
        .find(|c| c.n == n)
        .expect("no reference fields for this n");
    let ring = &chart.ring;
    let r = fields::derive_r(&chart);
    let h = fields::h_field(&chart);
    let f = fields::f_field(&chart);
    let d = fields::d_field(&chart, &r, &h);
    let mut rep = Report::new("field-reference");
    rep.n = Some(n);

    let check_field = |rep: &mut Report, id: &str, got: &Field, expect: &[(&str, &str)]| {
        let mut ok = true;
        let mut bad = Vec::new();
        for (name, src) in expect {
            let v = ring.var(name).unwrap_or_else(|| panic!("no generator {name}"));
            let gv = chart.calibrate(&fields::field_get(&chart, got, v));
            if !gv.equals(&parse_in(ring, src)) {
                ok = false;
                bad.push(format!("{name}: {}", ring.fmt_rf(&gv)));
            }
        }
        if ok {
            rep.push(id, true);
        } else {
            rep.push_detail(id, false, &bad.join("; "));
        }
    };
    check_field(&mut rep, "modular vector field R", &r, g.r);
    check_field(&mut rep, "scaling field H", &h, g.h);
    check_field(&mut rep, "lowering field F", &f, g.f);
    check_field(&mut rep, "corrected field D", &d, g.d);

    let wm = chart.weight_map();
    let expect_w: std::collections::BTreeMap<String, i64> = g
        .weights
        .iter()
        .map(|&(k, v)| (k.to_string(), v))
        .collect();
    rep.push("generator weights", wm == expect_w);

    let lam = chart.calibrate(&fields::lambda(&chart, &r));
    rep.push(
        "weight-4 tower function",
        lam.equals(&parse_in(ring, g.lambda)),
    );

    rep.finish()
}

/// Weights for n = 5 against the stored reference list.
pub fn weights_n5() -> Report {
    let chart = Chart::build(5);
    let wm = chart.weight_map();
    let expect: std::collections::BTreeMap<String, i64> = published::WEIGHTS_N5
        .iter()
        .map(|&(k, v)| (k.to_string(), v))
        .collect();
    let mut rep = Report::new("field-reference");
    rep.n = Some(5);
    rep.push("generator weights", wm == expect);
    rep.finish()
}

/// Connection matrices: the modular field reproduces the coupling band, the
/// algebra-basis fields reproduce the transposed basis elements, and for
/// n = 3 the stored `R`- and `D`-matrices are matched entry by entry.
pub fn connection(n: usize) -> Report {
    let chart = Chart::build(n);
    let r = fields::derive_r(&chart);
    let mut rep = Report::new("connection");
    rep.n = Some(n);

    rep.push(
        "connection of R is the coupling band",
        mat_equals(&chart.conn_matrix(&r), &chart.ymatrix()),
    );

    let m = if n % 2 == 1 { (n + 1) / 2 } else { n / 2 };
    let mut g_ok = true;
    for a in 1..=m {
        for b in a..=(2 * m + 1 - a) {
            let f = fields::derive_g_field(&chart, a, b);
            if !mat_equals(&chart.conn_matrix(&f), &chart.gmat(a, b).transpose()) {
                g_ok = false;
            }
        }
    }
    rep.push("connection of each basis field is the transposed basis element", g_ok);

    if n == 3 {
        let ring = &chart.ring;
        let ar = chart.conn_matrix(&r);
        let mut ok = true;
        for i in 0..4 {
            for j in 0..4 {
                if !chart
                    .calibrate(ar.at(i, j))
                    .equals(&parse_in(ring, published::CONN_R_N3[i][j]))
                {
                    ok = false;
                }
            }
        }
        rep.push("stored matrix for R (n=3)", ok);

        let h = fields::h_field(&chart);
        let d = fields::d_field(&chart, &r, &h);
        let ad = chart.conn_matrix(&d);
        let mut ok = true;
        for i in 0..4 {
            for j in 0..4 {
                if !chart
                    .calibrate(ad.at(i, j))
                    .equals(&parse_in(ring, published::CONN_D_N3[i][j]))
                {
                    ok = false;
                }
            }
        }
        rep.push("stored matrix for D (n=3)", ok);
    }

    rep.finish()
}

/// The reference bracket tables (n = 1..4) over the corrected derivation,
/// the n = 2 square relation, and the n = 3 membership pair.
pub fn brackets() -> Report {
    let mut rep = Report::new("brackets");
    for n in 1..=4usize {
        let chart = Chart::build(n);
        let ctx = RcCtx::new(&chart);
        for b in published::BRACKETS.iter().filter(|b| b.n == n) {
            let f = chart.to_internal(&parse_in(&chart.ring, b.f));
            let g = chart.to_internal(&parse_in(&chart.ring, b.g));
            let expect = chart.to_internal(&parse_in(&chart.ring, b.expect));
            let got = ctx.bracket_auto(&f, &g, b.k as i64);
            let ok = match got {
                Some(v) => v.equals(&expect),
                None => false,
            };
            rep.push(&format!("n{n} {}", b.label), ok);
        }
        if n == 2 {
            let (fs, gs, es) = published::SQUARE_IDENTITY_N2;
            let f = chart.to_internal(&parse_in(&chart.ring, fs));
            let g = chart.to_internal(&parse_in(&chart.ring, gs));
            let expect = chart.to_internal(&parse_in(&chart.ring, es));
            let ok = match ctx.bracket_auto(&f, &g, 1) {
                Some(v) => v.mul(&v).equals(&expect),
                None => false,
            };
            rep.push("n2 [t1,t4]_1^2 square relation", ok);
        }
        if n == 3 {
            let (fs, gs, es) = published::MEMBERSHIP_PAIR_N3;
            let f = parse_in(&chart.ring, fs);
            let g = parse_in(&chart.ring, gs);
            let expect = parse_in(&chart.ring, es);
            let r = fields::derive_r(&chart);
            let h = fields::h_field(&chart);
            let d = fields::d_field(&chart, &r, &h);
            let (rw, sw) = (
                ctx.weight_of(&f).expect("inhomogeneous"),
                ctx.weight_of(&g).expect("inhomogeneous"),
            );
            let via_d = ctx.bracket_via(&d, &f, rw, &g, sw, 1);
            rep.push(
                "n3 membership: degree-1 bracket over D",
                via_d.equals(&expect) && ctx.is_two_cy(&via_d),
            );
            let via_r = ctx.bracket_via(&r, &f, rw, &g, sw, 1);
            rep.push(
                "n3 membership: same bracket over R leaves the t2-free subring",
                !ctx.is_two_cy(&via_r),
            );
        }
    }
    rep.finish()
}

/// Canonical tower bracket equals the direct bracket for k <= `kmax` on
/// random t2-free homogeneous pairs of positive weight.
pub fn canonical_sample(n: usize, seed: u64, pairs: usize, kmax: i64) -> Report {
    let chart = Chart::build(n);
    let ctx = RcCtx::new(&chart);
    let mut smp = Sampler::new(seed);
    let mut rep = Report::new("canonical");
    rep.n = Some(n);
    rep.seed = Some(seed);
    let mut ok = true;
    let mut closed = true;
    let mut detail = String::new();
    for idx in 0..pairs {
        let ((f, r), (g, s)) = smp.pair(&chart);
        for k in 0..=kmax {
            let std = ctx.bracket(&f, r, &g, s, k);
            let canon = ctx.canon_bracket(&f, r, &g, s, k);
            if !std.equals(&canon) {
                ok = false;
                detail = format!("pair {idx} k={k} differs");
            }
            if !ctx.is_two_cy(&std) {
                closed = false;
            }
        }
    }
    if ok {
        rep.push(&format!("canonical = direct on {pairs} pairs, k <= {kmax}"), true);
    } else {
        rep.push_detail(
            &format!("canonical = direct on {pairs} pairs, k <= {kmax}"),
            false,
            &detail,
        );
    }
    rep.push("bracket values stay t2-free", closed);
    rep.finish()
}

/// The eleven algebraic bracket identities on random homogeneous triples.
pub fn rc_identities_sample(n: usize, seed: u64, triples: usize) -> Report {
    let chart = Chart::build(n);
    let ctx = RcCtx::new(&chart);
    let mut smp = Sampler::new(seed);
    let mut rep = Report::new("rc-identities");
    rep.n = Some(n);
    rep.seed = Some(seed);
    let mut fails: std::collections::BTreeMap<String, usize> = std::collections::BTreeMap::new();
    let mut ids: Vec<String> = Vec::new();
    for _ in 0..triples {
        let ((f, r), (g, s), (h, l)) = smp.triple(&chart);
        for (id, ok) in ctx.identity_battery(&f, r, &g, s, &h, l) {
            if ids.iter().all(|x| x != &id) {
                ids.push(id.clone());
            }
            if !ok {
                *fails.entry(id).or_insert(0) += 1;
            }
        }
    }
    for id in ids {
        match fails.get(&id) {
            None => rep.push(&format!("{id} on {triples} triples"), true),
            Some(c) => rep.push_detail(
                &format!("{id} on {triples} triples"),
                false,
                &format!("{c} failures"),
            ),
        }
    }
    rep.finish()
}

/// q-expansion suites: the two low-dimensional solutions, the eta/theta
/// identities, and the corrected differential equation.
pub fn qseries_suite(order: usize) -> Report {
    let mut rep = Report::new("qseries");
    rep.push("n=1 solution satisfies the field equations", qseries::verify_r1_solution(order));
    rep.push("n=2 solution satisfies the field equations", qseries::verify_r2_solution(order));
    for (id, ok) in qseries::verify_eta_identities(order) {
        rep.push(&id, ok);
    }
    rep.push(
        "discriminant differential equation",
        qseries::verify_ode(order),
    );
    rep.finish()
}

/// Frozen q-expansion coefficients for the stored reference series.
pub fn qseries_golden() -> Report {
    let ctx = qseries::QCtx::new(30);
    let mut rep = Report::new("qseries-reference");
    let check = |rep: &mut Report, id: &str, s: &qseries::QSeries, expect: &[(i64, &str)]| {
        let ok = expect.iter().all(|&(e, c)| {
            let want: crate::Rat = c.parse().expect("bad rational");
            s.coeff(e) == want
        });
        rep.push(id, ok);
    };
    let (t1, t2, t3) = qseries::n1_solution(&ctx);
    check(&mut rep, "n=1 t1 coefficients", &t1, published::QEXP_T1_N1);
    check(&mut rep, "n=1 t2 coefficients", &t2, published::QEXP_T2_N1);
    check(&mut rep, "n=1 t3 coefficients", &t3, published::QEXP_T3_N1);
    let delta = ctx.scale(
        &ctx.mul(&ctx.pow(&ctx.eta(1), 6), &ctx.pow(&ctx.eta(3), 6)),
        &crate::rat(1, 27),
    );
    check(&mut rep, "n=1 discriminant coefficients", &delta, published::QEXP_DELTA_N1);
    let (u1, u2, u3, u4) = qseries::n2_solution(&ctx);
    check(&mut rep, "n=2 u1 coefficients", &u1, published::QEXP_U1_N2);
    check(&mut rep, "n=2 u2 coefficients", &u2, published::QEXP_U2_N2);
    check(&mut rep, "n=2 u3 coefficients", &u3, published::QEXP_U3_N2);
    check(&mut rep, "n=2 u4 coefficients", &u4, published::QEXP_U4_N2);
    let e66 = ctx.mul(&ctx.pow(&ctx.eta(1), 6), &ctx.pow(&ctx.eta(3), 6));
    check(&mut rep, "eta^6(q) eta^6(q^3) coefficients", &e66, published::QEXP_ETA6ETA6);
    check(&mut rep, "theta2 coefficients", &ctx.theta2(), published::QEXP_THETA2);
    check(&mut rep, "theta3 coefficients", &ctx.theta3(), published::QEXP_THETA3);
    check(&mut rep, "E2 coefficients", &ctx.e2(), published::QEXP_E2);
    check(&mut rep, "eta coefficients", &ctx.eta(1), published::QEXP_ETA);
    rep.finish()
}

/// Non-blocking exploration: negative-weight bracket samples for n = 1..4
/// and the polynomiality question for the depth-2 discriminant bracket at
/// n = 5.  Every item is informational.
pub fn exploration(seed: u64) -> Report {
    let mut rep = Report::new("exploration");
    rep.seed = Some(seed);
    for n in 1..=4usize {
        let chart = Chart::build(n);
        let ctx = RcCtx::new(&chart);
        let mut smp = Sampler::new(seed ^ (n as u64));
        let mut closed = 0usize;
        let mut total = 0usize;
        for _ in 0..6 {
            // force one factor to weight <= 0 by dividing by a high-weight
            // generator power
            let (f, r) = smp.homogeneous(&chart);
            let (g0, s0) = smp.homogeneous(&chart);
            let lower = Rf::from_var(chart.ring.nv(), *chart.free.last().unwrap());
            let lw = chart.weights[*chart.free.last().unwrap()];
            let mut g = g0;
            let mut s = s0;
            while s > 0 {
                g = g.div(&lower);
                s -= lw;
            }
            for k in 1..=2i64 {
                let b = ctx.bracket(&f, r, &g, s, k);
                total += 1;
                if ctx.is_two_cy(&b) {
                    closed += 1;
                }
            }
        }
        rep.push_info(
            &format!("n{n} negative-weight bracket closure"),
            &format!("{closed}/{total} sampled brackets stayed t2-free"),
        );
    }
    {
        let chart = Chart::build(5);
        let ctx = RcCtx::new(&chart);
        let ring = &chart.ring;
        let delta = parse_in(ring, "t7*(t1**7 - t7)");
        let b = ctx.bracket(&delta, 14, &delta, 14, 2);
        let red = b.reduce(&ring.seeds);
        let poly = red.as_poly().is_some();
        rep.push_info(
            "n5 depth-2 discriminant bracket polynomiality",
            &format!(
                "polynomial: {poly}; denominator after reduction: {}",
                ring.fmt_poly(&red.den)
            ),
        );
    }
    rep.finish()
}

/// The aggregate suite: every stored-reference comparison plus the
/// randomized property suites at moderate sample counts.
pub fn golden(seed: u64) -> Report {
    let mut rep = Report::new("golden");
    rep.seed = Some(seed);
    let mut fold = |r: Report| {
        let prefix = match r.n {
            Some(n) => format!("{} n{}: ", r.suite, n),
            None => format!("{}: ", r.suite),
        };
        for item in r.items {
            rep.items.push(crate::report::ReportItem {
                relation_id: format!("{prefix}{}", item.relation_id),
                status: item.status,
                detail: item.detail,
            });
        }
    };
    for n in 1..=4 {
        fold(chart_published(n));
        fold(fields_published(n));
        fold(chart_identities(n));
        fold(connection(n));
        fold(sl2(n));
        fold(homogeneity(n));
        fold(serre(n));
    }
    fold(weights_n5());
    for n in 3..=4 {
        fold(amsy(n));
    }
    fold(brackets());
    for n in 1..=2 {
        fold(canonical_sample(n, seed, 8, 3));
        fold(rc_identities_sample(n, seed, 4));
    }
    fold(qseries_golden());
    fold(qseries_suite(20));
    rep.finish()
}
