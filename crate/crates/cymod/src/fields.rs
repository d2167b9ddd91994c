//! The distinguished vector fields on a chart: the modular field `R`
//! (Gauss-Manin matrix equal to the coupling band), the scaling field `H`,
//! the lowering field `F`, the completed field `D`, and the structure checks
//! built from them (sl2 triples, quasi-homogeneity, the algebra-bracket
//! structure over the coupling ring, Serre-derivation closure).

use crate::chart::{Chart, Field};
use crate::{rint, Rat, Rf};
use num::{One, ToPrimitive};
use std::collections::BTreeMap;

pub fn field_zero(chart: &Chart) -> Field {
    chart
        .free
        .iter()
        .map(|&v| (v, Rf::zero(chart.ring.nv())))
        .collect()
}

pub fn field_get<'a>(chart: &Chart, f: &'a Field, v: usize) -> Rf {
    f.get(&v).cloned().unwrap_or_else(|| Rf::zero(chart.ring.nv()))
}

pub fn field_add(chart: &Chart, a: &Field, b: &Field) -> Field {
    chart
        .free
        .iter()
        .map(|&v| (v, field_get(chart, a, v).add(&field_get(chart, b, v))))
        .collect()
}

pub fn field_sub(chart: &Chart, a: &Field, b: &Field) -> Field {
    chart
        .free
        .iter()
        .map(|&v| (v, field_get(chart, a, v).sub(&field_get(chart, b, v))))
        .collect()
}

pub fn field_scale(f: &Field, c: &Rat) -> Field {
    f.iter().map(|(&v, x)| (v, x.mul_scalar(c))).collect()
}

pub fn fields_equal(chart: &Chart, a: &Field, b: &Field) -> bool {
    chart
        .free
        .iter()
        .all(|&v| field_get(chart, a, v).equals(&field_get(chart, b, v)))
}

/// Lie bracket `[V, W]` componentwise over the free generators.
pub fn lie_bracket(chart: &Chart, v: &Field, w: &Field) -> Field {
    chart
        .free
        .iter()
        .map(|&u| {
            let wv = field_get(chart, w, u);
            let vv = field_get(chart, v, u);
            let c = chart
                .apply_field_rf(v, &wv)
                .sub(&chart.apply_field_rf(w, &vv))
                .reduce(&chart.ring.seeds);
            (u, c)
        })
        .collect()
}

/// The modular vector field: the unique field whose Gauss-Manin matrix is
/// the coupling band.
pub fn derive_r(chart: &Chart) -> Field {
    chart.derive_field(&chart.ymatrix(), false)
}

/// Field attached to a basis element of the pairing-preserving algebra.
pub fn derive_g_field(chart: &Chart, a: usize, b: usize) -> Field {
    chart.derive_field(&chart.gmat(a, b).transpose(), false)
}

/// Scaling field `H` (its components are `w_i t_i`).
pub fn h_field(chart: &Chart) -> Field {
    match chart.n {
        1 => field_scale(&derive_g_field(chart, 1, 1), &rint(-1)),
        2 => field_scale(&derive_g_field(chart, 1, 1), &rint(-2)),
        _ => field_sub(
            chart,
            &derive_g_field(chart, 2, 2),
            &derive_g_field(chart, 1, 1),
        ),
    }
}

/// Lowering field `F` of the sl2 triple `(R, H, F)`.
pub fn f_field(chart: &Chart) -> Field {
    match chart.n {
        1 => derive_g_field(chart, 1, 2),
        2 => field_scale(&derive_g_field(chart, 1, 2), &rint(2)),
        _ => derive_g_field(chart, 1, 2),
    }
}

/// Read the generator weights off the scaling field (H = sum w_i t_i d/dt_i)
/// and extend them to the whole ring: the calibration constant gets weight 0,
/// the eliminated base coordinate gets weight n+2, dependent placeholders get
/// the weight of their solved value.
pub fn compute_weights(chart: &Chart) -> Vec<i64> {
    let h = h_field(chart);
    let nv = chart.ring.nv();
    let mut w = vec![0i64; nv];
    for &v in &chart.free {
        let q = field_get(chart, &h, v).div(&Rf::from_var(nv, v));
        let c = q
            .as_constant()
            .unwrap_or_else(|| panic!("H is not diagonal at {}", chart.ring.names[v]));
        assert!(c.denom().is_one(), "non-integer weight at {}", chart.ring.names[v]);
        w[v] = c.numer().to_i64().expect("weight out of range");
    }
    if chart.te.is_some() {
        // the eliminated base coordinate t_{n+2} = t1^{n+2} - ... scales like
        // t1^{n+2}
        w[chart.tb] = (chart.n as i64 + 2) * w[chart.t1];
    }
    for (v, val) in &chart.solved {
        w[*v] = val.weighted_degree(&w).unwrap_or(0);
    }
    w
}

/// The completed field `D = R + t2 ([R, c d/dt2] - H)` with `c = 2` for
/// n = 2 and `c = 1` otherwise.
pub fn d_field(chart: &Chart, r: &Field, h: &Field) -> Field {
    let nv = chart.ring.nv();
    let t2 = chart.t_id[2].expect("chart has no t2");
    let sc = if chart.n == 2 { rint(2) } else { rint(1) };
    let mut ddt2 = field_zero(chart);
    ddt2.insert(t2, Rf::from_const(nv, sc));
    let br = lie_bracket(chart, r, &ddt2);
    let t2rf = Rf::from_var(nv, t2);
    chart
        .free
        .iter()
        .map(|&v| {
            let c = field_get(chart, r, v)
                .add(
                    &t2rf.mul(&field_get(chart, &br, v).sub(&field_get(chart, h, v))),
                )
                .reduce(&chart.ring.seeds);
            (v, c)
        })
        .collect()
}

/// Unit lowering direction used in the sl2 relation `[D, c d/dt2] = H`.
pub fn ddt2_field(chart: &Chart) -> Field {
    let t2 = chart.t_id[2].expect("chart has no t2");
    let sc = if chart.n == 2 { rint(2) } else { rint(1) };
    let mut f = field_zero(chart);
    f.insert(t2, Rf::from_const(chart.ring.nv(), sc));
    f
}

/// The weight-4 building block of the canonical bracket tower:
/// `-c R(t2) - c' t2^2` with `(c, c') = (1/2, 1/4)` for n = 2 and `(1, 1)`
/// otherwise.  It is t2-free and quasi-homogeneous of weight 4.
pub fn lambda(chart: &Chart, r: &Field) -> Rf {
    let nv = chart.ring.nv();
    let t2 = chart.t_id[2].expect("chart has no t2");
    let rt2 = field_get(chart, r, t2);
    let t2sq = Rf::from_var(nv, t2).pow(2);
    let (c, c2) = if chart.n == 2 {
        (crate::rat(-1, 2), crate::rat(-1, 4))
    } else {
        (rint(-1), rint(-1))
    };
    rt2.mul_scalar(&c)
        .add(&t2sq.mul_scalar(&c2))
        .reduce(&chart.ring.seeds)
}

/// Check quasi-homogeneity of a field: every nonzero component must be
/// quasi-homogeneous of weighted degree `w(v) + deg`.
pub fn check_quasi_homogeneous(chart: &Chart, f: &Field, deg: i64) -> Result<(), Vec<String>> {
    let mut bad = Vec::new();
    for &v in &chart.free {
        let comp = field_get(chart, f, v);
        if comp.is_zero() {
            continue;
        }
        match comp.weighted_degree(&chart.weights) {
            None => bad.push(format!(
                "component {} is not quasi-homogeneous",
                chart.ring.names[v]
            )),
            Some(d) => {
                if d - chart.weights[v] != deg {
                    bad.push(format!(
                        "component {} has degree {} instead of {}",
                        chart.ring.names[v],
                        d - chart.weights[v],
                        deg
                    ));
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// sl2-triple report: `[R,F] = H`, `[H,R] = 2R`, `[H,F] = -2F`,
/// `[D, c d/dt2] = H`, `[H,D] = 2D`, `[H, c d/dt2] = -2 c d/dt2`.
pub fn sl2_report(chart: &Chart) -> Vec<(String, bool)> {
    let r = derive_r(chart);
    let h = h_field(chart);
    let f = f_field(chart);
    let d = d_field(chart, &r, &h);
    let e2 = ddt2_field(chart);
    let two = |x: &Field| field_scale(x, &rint(2));
    vec![
        (
            "[R,F] = H".to_string(),
            fields_equal(chart, &lie_bracket(chart, &r, &f), &h),
        ),
        (
            "[H,R] = 2R".to_string(),
            fields_equal(chart, &lie_bracket(chart, &h, &r), &two(&r)),
        ),
        (
            "[H,F] = -2F".to_string(),
            fields_equal(chart, &lie_bracket(chart, &h, &f), &field_scale(&f, &rint(-2))),
        ),
        (
            "[D,d/dt2] = H".to_string(),
            fields_equal(chart, &lie_bracket(chart, &d, &e2), &h),
        ),
        (
            "[H,D] = 2D".to_string(),
            fields_equal(chart, &lie_bracket(chart, &h, &d), &two(&d)),
        ),
        (
            "[H,d/dt2] = -2 d/dt2".to_string(),
            fields_equal(
                chart,
                &lie_bracket(chart, &h, &e2),
                &field_scale(&e2, &rint(-2)),
            ),
        ),
    ]
}

/// Structure constants of `[R, R_g]` over the full basis of the
/// pairing-preserving algebra (the AMSY-type Lie-algebra structure):
/// diagonal elements reproduce `R, -R, 0`, off-diagonal brackets are the
/// stated coupling-weighted combinations of neighbouring basis fields.
pub fn amsy_report(chart: &Chart, r: &Field) -> Vec<(String, bool)> {
    let n = chart.n;
    let m = if n % 2 == 1 { (n + 1) / 2 } else { n / 2 };
    let vr: i64 = if n % 2 == 1 { 1 } else { 0 };
    let y = chart.yukawa();
    let mut rg: BTreeMap<(usize, usize), Field> = BTreeMap::new();
    for a in 1..=m {
        for b in a..=(2 * m + 1 - a) {
            rg.insert((a, b), derive_g_field(chart, a, b));
        }
    }
    let mut out = Vec::new();
    let mut push = |lab: String, got: &Field, expect: &Field| {
        out.push((lab, fields_equal(chart, got, expect)));
    };
    let zero = field_zero(chart);
    push(
        "[R, Rg(1,1)] = R".to_string(),
        &lie_bracket(chart, r, &rg[&(1, 1)]),
        r,
    );
    if m >= 2 {
        push(
            "[R, Rg(2,2)] = -R".to_string(),
            &lie_bracket(chart, r, &rg[&(2, 2)]),
            &field_scale(r, &rint(-1)),
        );
    }
    for a in 3..=m {
        push(
            format!("[R, Rg({a},{a})] = 0"),
            &lie_bracket(chart, r, &rg[&(a, a)]),
            &zero,
        );
    }
    for a in 1..=m {
        for b in (a + 1)..=(2 * m + 1 - a) {
            let br = lie_bracket(chart, r, &rg[&(a, b)]);
            let d2m = if a + b == 2 * m { 1 } else { 0 };
            let d2m1 = if a + b == 2 * m + 1 { 1 } else { 0 };
            let dm1 = if b == m + 1 { 1 } else { 0 };
            let ps1 = y[&(a - 1)].mul_scalar(&rint(1 + vr * d2m - d2m1));
            let ps2 = y
                .get(&(n + 1 - b))
                .cloned()
                .unwrap_or_else(|| Rf::zero(chart.ring.nv()))
                .mul_scalar(&rint(1 - 2 * vr * dm1));
            let t1f = rg.get(&(a + 1, b)).cloned().unwrap_or_else(|| zero.clone());
            let t2f = rg.get(&(a, b - 1)).cloned().unwrap_or_else(|| zero.clone());
            let expect: Field = chart
                .free
                .iter()
                .map(|&v| {
                    (
                        v,
                        ps1.mul(&field_get(chart, &t1f, v))
                            .add(&ps2.mul(&field_get(chart, &t2f, v)))
                            .reduce(&chart.ring.seeds),
                    )
                })
                .collect();
            push(format!("[R, Rg({a},{b})] coupling relation"), &br, &expect);
        }
    }
    out
}

/// Serre-derivation closure: for every free generator except t2, the value
/// `D t_j + (1 - n==2/2) w_j t2 t_j` must not involve t2.
pub fn serre_closure_report(chart: &Chart, d: &Field) -> Vec<(String, bool)> {
    let nv = chart.ring.nv();
    let t2 = chart.t_id[2].expect("chart has no t2");
    let t2rf = Rf::from_var(nv, t2);
    let fac = if chart.n == 2 {
        crate::rat(1, 2)
    } else {
        Rat::one()
    };
    let mut out = Vec::new();
    for &v in &chart.free {
        if v == t2 {
            continue;
        }
        let wv = Rat::from(crate::Int::from(chart.weights[v]));
        let got = field_get(chart, d, v)
            .add(
                &t2rf
                    .mul(&Rf::from_var(nv, v))
                    .mul_scalar(&(wv * fac.clone())),
            )
            .reduce(&chart.ring.seeds);
        let dz = got.derivative(t2);
        out.push((
            format!("serre({}) is t2-free", chart.ring.names[v]),
            dz.is_zero(),
        ));
    }
    out
}

/// Jacobi identity witness on three fields.
pub fn jacobi_residual(chart: &Chart, a: &Field, b: &Field, c: &Field) -> Field {
    let ab_c = lie_bracket(chart, &lie_bracket(chart, a, b), c);
    let bc_a = lie_bracket(chart, &lie_bracket(chart, b, c), a);
    let ca_b = lie_bracket(chart, &lie_bracket(chart, c, a), b);
    field_add(chart, &field_add(chart, &ab_c, &bc_a), &ca_b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_weights_and_h() {
        let chart = Chart::build(1);
        let wm = chart.weight_map();
        assert_eq!(wm["t1"], 1);
        assert_eq!(wm["t2"], 2);
        assert_eq!(wm["t3"], 3);
    }
}
