//! Enhanced moduli chart for the Dwork family of Calabi-Yau n-folds.
//!
//! The chart is a lower-triangular period-style matrix `S` whose independent
//! entries are the chart generators; the dependent entries are solved from
//! the pairing constraint `S * Omega * S^T = Phi`.  For even n the base
//! coordinate `t_{n+2}` is eliminated in favour of the extra generator `te`
//! sitting on the middle diagonal slot (`te^2` is proportional to
//! `t1^{n+2} - t_{n+2}`), so that all internal arithmetic happens in a plain
//! polynomial ring; the published coordinates are recovered on output.

use crate::gm::{build_omega, build_phi, gm_b, GmVars};
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::{fields, rat, rint, Rat, Rf};
use std::collections::BTreeMap;

/// A vector field, stored asid -> component over the chart's free generators.
pub type Field = BTreeMap<usize, Rf>;

/// Number of independent chart generators.
pub fn chart_dim(n: usize) -> usize {
    if n % 2 == 1 {
        (n + 1) * (n + 3) / 4 + 1
    } else {
        n * (n + 2) / 4 + 1
    }
}

/// Lower-triangular slot placement of the chart generators.
///
/// Returns `(indep_slots, indep_names, dep_slots_in_solve_order, extra_slot)`
/// where slots are 1-based `(row, col)` pairs and names are the `t`-indices
/// assigned to the independent slots (skipping `n+2`, which names the base
/// coordinate).
pub fn placement(
    n: usize,
) -> (
    Vec<(usize, usize)>,
    Vec<usize>,
    Vec<(usize, usize)>,
    Option<(usize, usize)>,
) {
    let mut indep = Vec::new();
    for i in 2..=(n + 1) {
        for j in 1..=i {
            let ok = if n % 2 == 1 {
                i + j <= n + 2
            } else {
                i + j < n + 2
            };
            if ok {
                indep.push((i, j));
            }
        }
    }
    let mut names = Vec::new();
    let mut k = 2;
    for _ in &indep {
        if k == n + 2 {
            k += 1;
        }
        names.push(k);
        k += 1;
    }
    let all: Vec<(usize, usize)> = (2..=(n + 1))
        .flat_map(|i| (1..=i).map(move |j| (i, j)))
        .collect();
    let dep: Vec<(usize, usize)> = all.iter().cloned().filter(|s| !indep.contains(s)).collect();
    let mut dep_diag: Vec<_> = dep.iter().cloned().filter(|s| s.0 == s.1).collect();
    dep_diag.sort_by_key(|s| std::cmp::Reverse(s.0));
    let mut dep_off: Vec<_> = dep.iter().cloned().filter(|s| s.0 != s.1).collect();
    dep_off.sort_by(|a, b| (b.1, a.0).cmp(&(a.1, b.0)));
    let extra = if n % 2 == 0 {
        Some(((n + 2) / 2, (n + 2) / 2))
    } else {
        None
    };
    dep_diag.extend(dep_off);
    (indep, names, dep_diag, extra)
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub n: usize,
    /// Number of independent generators.
    pub d: usize,
    pub ring: Ring,
    /// Ring id of `t_i`, indexed by `i` (entry 0 unused).
    pub t_id: Vec<Option<usize>>,
    pub t1: usize,
    /// Base coordinate `t_{n+2}`.
    pub tb: usize,
    /// Extra generator for even n (id of `te`).
    pub te: Option<usize>,
    pub cn: usize,
    /// Free generators in derivation order: `t1`, the named slots, then the
    /// base coordinate (odd n) or the extra generator (even n).
    pub free: Vec<usize>,
    /// Independent slots with their generator ids.
    pub indep: Vec<((usize, usize), usize)>,
    /// Dependent slots with their placeholder ids, in solve order.
    pub dep: Vec<((usize, usize), usize)>,
    pub extra_slot: Option<(usize, usize)>,
    /// `t_{n+2}` as a polynomial in the free generators (even n only).
    pub tb_expr: Option<Poly>,
    /// Solved dependent entries (fully flattened), in solve order.
    pub solved: Vec<(usize, Rf)>,
    /// Chart matrix with dependent placeholders still symbolic.
    pub s_raw: Mat,
    /// Chart matrix with dependents solved and `t_{n+2}` eliminated.
    pub s: Mat,
    pub b1: Mat,
    pub b2: Mat,
    pub om: Mat,
    pub phi: Mat,
    /// Weight of every ring variable (from the scaling field H; the
    /// calibration constant has weight 0).
    pub weights: Vec<i64>,
    /// Published calibration value of `c_n`, when the paper fixes one.
    pub cal: Option<Rat>,
}

/// Published calibration constants for low n.
pub fn calibration(n: usize) -> Option<Rat> {
    match n {
        1 => Some(rat(1, 27)),
        2 => Some(rat(-1, 64)),
        3 => Some(rat(1, 78125)),      // 5^-7
        4 => Some(rat(1, 46656)),      // 6^-6
        _ => None,
    }
}

impl Chart {
    pub fn build(n: usize) -> Chart {
        let mut chart = Chart::build_unweighted(n);
        let w = fields::compute_weights(&chart);
        chart.weights = w;
        chart
    }

    /// Build the chart without deriving the scaling weights (they stay 0).
    /// Useful when only the constraint-solving layer is needed.
    pub fn build_unweighted(n: usize) -> Chart {
        assert!((1..=8).contains(&n), "supported range is 1 <= n <= 8");
        let d = chart_dim(n);
        let (indep_slots, names, dep_slots, extra_slot) = placement(n);

        // ----- variable table -----
        // Highest t-index in play: named generators reach d (odd) and the
        // even-n extra generator takes the smallest unused index, at most
        // d + 1; the base coordinate sits at n + 2.
        let max_t = if n % 2 == 0 { (n + 2).max(d + 1) } else { d };
        // extra generator name: smallest unused t-index (even n)
        let te_index = if n % 2 == 0 {
            let mut used: Vec<usize> = names.clone();
            used.push(1);
            used.push(n + 2);
            let mut e = 1;
            while used.contains(&e) {
                e += 1;
            }
            Some(e)
        } else {
            None
        };
        // significance order: generators by ascending t-index, then the extra
        // generator, then dependent placeholders in solve order, then c_n
        let mut gen_indices: Vec<usize> = vec![1, n + 2];
        gen_indices.extend(&names);
        gen_indices.sort_unstable();
        let mut ring_names: Vec<String> = gen_indices.iter().map(|i| format!("t{i}")).collect();
        if let Some(e) = te_index {
            ring_names.push(format!("t{e}"));
        }
        let dep_named: Vec<((usize, usize), String)> = dep_slots
            .iter()
            .filter(|s| Some(**s) != extra_slot)
            .map(|&(i, j)| ((i, j), format!("s{i}_{j}")))
            .collect();
        ring_names.extend(dep_named.iter().map(|(_, s)| s.clone()));
        ring_names.push("c_n".to_string());
        let mut ring = Ring::new(ring_names);
        // display: t-variables in ascending index order
        let mut display: Vec<usize> = (1..=max_t)
            .filter_map(|i| ring.var(&format!("t{i}")))
            .collect();
        display.extend(dep_named.iter().map(|(_, s)| ring.var(s).unwrap()));
        display.push(ring.var("c_n").unwrap());
        ring.display_order = display;
        let nv = ring.nv();

        let mut t_id: Vec<Option<usize>> = vec![None; max_t + 1];
        for i in 1..=max_t {
            t_id[i] = ring.var(&format!("t{i}"));
        }
        let t1 = t_id[1].unwrap();
        let tb = t_id[n + 2].unwrap();
        let te = te_index.map(|e| t_id[e].unwrap());
        let cn = ring.var("c_n").unwrap();

        // seed: the discriminant-like factor, the one non-monomial factor
        // that appears in denominators across the construction
        let disc = Poly::var(nv, t1)
            .pow(n as u32 + 2)
            .sub(&Poly::var(nv, tb));
        ring.seeds = vec![disc.clone()];

        // ----- connection data over (t1, t_{n+2}) -----
        let gv = GmVars { t1, tb, cn };
        let (b1, b2) = gm_b(nv, n, gv);
        let om = build_omega(nv, n, gv, &b1);
        let phi = build_phi(nv, n);

        // ----- chart matrix with placeholders -----
        let mut s_raw = Mat::zero(nv, n + 1, n + 1);
        *s_raw.at_mut(0, 0) = Rf::one(nv);
        let indep: Vec<((usize, usize), usize)> = indep_slots
            .iter()
            .zip(&names)
            .map(|(&slot, &k)| (slot, t_id[k].unwrap()))
            .collect();
        for &((i, j), v) in &indep {
            *s_raw.at_mut(i - 1, j - 1) = Rf::from_var(nv, v);
        }
        let tb_expr = te.map(|te_id| {
            // rho = (-1)^{n/2} / (c_n (n+2)^n);  t_{n+2} = t1^{n+2} - te^2/rho
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            let coef = rint(sign * (n as i64 + 2).pow(n as u32));
            let te2 = Poly::var(nv, te_id)
                .pow(2)
                .mul(&Poly::var(nv, cn))
                .mul_scalar(&coef);
            Poly::var(nv, t1).pow(n as u32 + 2).sub(&te2)
        });
        if let (Some(te_id), Some((ei, ej))) = (te, extra_slot) {
            *s_raw.at_mut(ei - 1, ej - 1) = Rf::from_var(nv, te_id);
        }
        // in the eliminated coordinates the non-monomial denominator factor
        // is the value of the base coordinate itself, so trial division must
        // know about it
        if let Some(e) = &tb_expr {
            ring.seeds.push(e.clone());
        }
        let dep: Vec<((usize, usize), usize)> = dep_named
            .iter()
            .map(|(slot, name)| (*slot, ring.var(name).unwrap()))
            .collect();
        for &((i, j), v) in &dep {
            *s_raw.at_mut(i - 1, j - 1) = Rf::from_var(nv, v);
        }

        let mut chart = Chart {
            n,
            d,
            ring,
            t_id,
            t1,
            tb,
            te,
            cn,
            free: Vec::new(),
            indep,
            dep,
            extra_slot,
            tb_expr,
            solved: Vec::new(),
            s_raw,
            s: Mat::zero(nv, n + 1, n + 1),
            b1,
            b2,
            om,
            phi,
            weights: vec![0; nv],
            cal: calibration(n),
        };
        chart.free.push(t1);
        for &k in &names {
            chart.free.push(chart.t_id[k].unwrap());
        }
        chart.free.push(if let Some(te_id) = te { te_id } else { tb });

        chart.solve_dependents();
        chart
    }

    /// Eliminate the base coordinate from an expression (no-op for odd n).
    pub fn eliminate(&self, rf: &Rf) -> Rf {
        match &self.tb_expr {
            Some(e) if rf.num.uses_var(self.tb) || rf.den.uses_var(self.tb) => {
                rf.subst_poly(self.tb, e)
            }
            _ => rf.clone(),
        }
    }

    /// `disc^{n+1} (S_raw Omega S_raw^T - Phi)` as a polynomial matrix: the
    /// pairing constraint with denominators cleared.  The scaling is
    /// harmless because the discriminant factor is invertible on the chart.
    fn scaled_constraint(&self) -> Vec<Vec<Poly>> {
        let nn = self.n + 1;
        let nv = self.ring.nv();
        let disc = Poly::var(nv, self.t1)
            .pow(self.n as u32 + 2)
            .sub(&Poly::var(nv, self.tb));
        let disc_pow = disc.pow(self.n as u32 + 1);
        let clear = Rf::from_poly(disc_pow.clone());
        let v: Vec<Vec<Poly>> = (0..nn)
            .map(|i| {
                (0..nn)
                    .map(|j| {
                        self.om
                            .at(i, j)
                            .mul(&clear)
                            .reduce(std::slice::from_ref(&disc))
                            .as_poly()
                            .expect("pairing matrix has an unexpected denominator")
                            .clone()
                    })
                    .collect()
            })
            .collect();
        let s: Vec<Vec<Poly>> = (0..nn)
            .map(|i| {
                (0..nn)
                    .map(|j| {
                        self.s_raw
                            .at(i, j)
                            .as_poly()
                            .expect("raw chart entries are polynomial")
                            .clone()
                    })
                    .collect()
            })
            .collect();
        // T = S V, M = T S^T - disc^{n+1} Phi, skipping structural zeros
        let mut m = vec![vec![Poly::zero(nv); nn]; nn];
        for i in 0..nn {
            let t: Vec<Poly> = (0..nn)
                .map(|b| {
                    let mut acc = Poly::zero(nv);
                    for (a, row) in v.iter().enumerate() {
                        if !s[i][a].is_zero() && !row[b].is_zero() {
                            acc = acc.add(&s[i][a].mul(&row[b]));
                        }
                    }
                    acc
                })
                .collect();
            for j in 0..nn {
                let mut acc = Poly::zero(nv);
                for (b, tb) in t.iter().enumerate() {
                    if !tb.is_zero() && !s[j][b].is_zero() {
                        acc = acc.add(&tb.mul(&s[j][b]));
                    }
                }
                let phi = self.phi.at(i, j);
                if !phi.is_zero() {
                    let c = phi.as_constant().expect("constant intersection form");
                    acc = acc.sub(&disc_pow.mul_scalar(&c));
                }
                m[i][j] = acc;
            }
        }
        m
    }

    /// Solve the dependent chart entries from `S Omega S^T = Phi` by
    /// repeated sweeps that pick off entries containing exactly one unknown
    /// linearly; earlier placeholders stay symbolic and are resolved by the
    /// flattening pass below.
    fn solve_dependents(&mut self) {
        let nn = self.n + 1;
        let nv = self.ring.nv();
        let m: Vec<Vec<Poly>> = self
            .scaled_constraint()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| match &self.tb_expr {
                        Some(rep) if e.uses_var(self.tb) => e.subst_poly(self.tb, rep),
                        _ => e,
                    })
                    .collect()
            })
            .collect();

        let mut unknowns: Vec<usize> = self.dep.iter().map(|&(_, v)| v).collect();
        let mut solved: BTreeMap<usize, Rf> = BTreeMap::new();
        while !unknowns.is_empty() {
            let mut progress = false;
            'sweep: for i in 0..nn {
                for j in 0..nn {
                    let num = &m[i][j];
                    let present: Vec<usize> = unknowns
                        .iter()
                        .copied()
                        .filter(|&v| num.uses_var(v))
                        .collect();
                    if present.len() != 1 {
                        continue;
                    }
                    let u = present[0];
                    if num.degree_in(u) != 1 {
                        continue;
                    }
                    // num = a*u + b  ->  u = -b/a  (a, b may reference
                    // earlier placeholders; flattening resolves them)
                    let mut a = Poly::zero(nv);
                    let mut b = Poly::zero(nv);
                    for (mono, c) in &num.terms {
                        if mono.0[u] == 1 {
                            let mut m2 = mono.clone();
                            m2.0[u] = 0;
                            a = a.add(&Poly::term(nv, m2, c.clone()));
                        } else {
                            b = b.add(&Poly::term(nv, mono.clone(), c.clone()));
                        }
                    }
                    // resolve earlier placeholders right away: their stored
                    // solutions are already fully resolved, so one pass
                    // flattens this one too
                    let mut val = Rf::new(b.neg(), a);
                    loop {
                        let refs: Vec<usize> = solved
                            .keys()
                            .copied()
                            .filter(|&v| val.num.uses_var(v) || val.den.uses_var(v))
                            .collect();
                        if refs.is_empty() {
                            break;
                        }
                        for v in refs {
                            val = val.subst_rf(v, &solved[&v]);
                        }
                    }
                    let val = val.reduce(&self.ring.seeds);
                    solved.insert(u, val);
                    unknowns.retain(|&v| v != u);
                    progress = true;
                    break 'sweep;
                }
            }
            assert!(
                progress,
                "n={}: dependent chart entries {unknowns:?} could not be solved",
                self.n
            );
        }

        let dep_ids: Vec<usize> = self.dep.iter().map(|&(_, v)| v).collect();
        for (v, val) in &solved {
            for &d in &dep_ids {
                assert!(
                    !val.num.uses_var(d) && !val.den.uses_var(d),
                    "dependent solution for {} still references a placeholder",
                    self.ring.names[*v]
                );
            }
        }

        self.solved = self
            .dep
            .iter()
            .map(|&(_, v)| (v, solved[&v].clone()))
            .collect();

        // solved chart matrix in eliminated coordinates
        let mut s = self.s_raw.clone();
        for &((i, j), v) in &self.dep {
            *s.at_mut(i - 1, j - 1) = solved[&v].clone();
        }
        self.s = s.map(|e| self.eliminate(e).reduce(&self.ring.seeds));
    }

    /// `S Omega S^T - Phi` with the solved chart matrix; must be zero.
    pub fn pairing_residual(&self) -> Mat {
        self.s
            .mul_reduced(&self.om, &self.ring.seeds)
            .mul_reduced(&self.s.transpose(), &self.ring.seeds)
            .sub(&self.phi)
            .map(|e| self.eliminate(e).reduce(&self.ring.seeds))
    }

    /// Derivative of the raw pairing constraint along a vector field.
    ///
    /// The field (given on the free generators) is extended to the base
    /// coordinate by the chain rule through its eliminated expression (even
    /// n) and to every dependent placeholder through its solved value; the
    /// extended derivation is then applied entrywise to
    /// `S_raw Omega S_raw^T - Phi`.  A field tangent to the constraint
    /// variety gives zero identically.
    pub fn constraint_derivative(&self, field: &Field) -> Mat {
        let nv = self.ring.nv();
        let mut vdot: BTreeMap<usize, Rf> = field.clone();
        if self.te.is_some() {
            let tb_expr = self.tb_expr.as_ref().unwrap();
            let mut acc = Rf::zero(nv);
            for (&u, comp) in field.iter() {
                let d = tb_expr.derivative(u);
                if !d.is_zero() {
                    acc = acc.add(&Rf::from_poly(d).mul(comp));
                }
            }
            vdot.insert(self.tb, acc.reduce(&self.ring.seeds));
        }
        for (v, val) in &self.solved {
            let base: Vec<(usize, Rf)> =
                vdot.iter().map(|(&u, c)| (u, c.clone())).collect();
            let mut acc = Rf::zero(nv);
            for (u, comp) in &base {
                let d = val.derivative(*u);
                if !d.is_zero() {
                    acc = acc.add(&d.mul(comp));
                }
            }
            vdot.insert(*v, acc.reduce(&self.ring.seeds));
        }
        // the denominator-cleared constraint vanishes on the chart, so its
        // derivative along a tangent field vanishes exactly when the
        // derivative of the original constraint does
        let e = self.scaled_constraint();
        let nn = self.n + 1;
        let mut out = Mat::zero(nv, nn, nn);
        for (i, row) in e.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let mut acc = Rf::zero(nv);
                for (u, comp) in &vdot {
                    let d = entry.derivative(*u);
                    if !d.is_zero() {
                        acc = acc.add(&Rf::from_poly(d).mul(comp));
                    }
                }
                let mut r = acc;
                for (v, val) in &self.solved {
                    if r.num.uses_var(*v) || r.den.uses_var(*v) {
                        r = r.subst_rf(*v, val);
                    }
                }
                *out.at_mut(i, j) = self.eliminate(&r).reduce(&self.ring.seeds);
            }
        }
        out
    }

    /// Substitute the calibration value for `c_n` (no-op when the chart has
    /// no published calibration).
    pub fn calibrate(&self, rf: &Rf) -> Rf {
        match &self.cal {
            Some(c) => rf.subst_const(self.cn, c),
            None => rf.clone(),
        }
    }

    pub fn calibrate_with(&self, rf: &Rf, c: &Rat) -> Rf {
        rf.subst_const(self.cn, c)
    }

    /// Transport an expression from published coordinates (which may use the
    /// base coordinate `t_{n+2}`) into the internal eliminated coordinates.
    pub fn to_internal(&self, rf: &Rf) -> Rf {
        self.eliminate(rf)
    }

    /// Transport an internal expression back to published coordinates:
    /// even powers of the extra generator are rewritten through
    /// `te^2 = rho (t1^{n+2} - t_{n+2})`.
    pub fn to_published(&self, rf: &Rf) -> Rf {
        let te = match self.te {
            Some(te) => te,
            None => return rf.clone(),
        };
        if !rf.num.uses_var(te) && !rf.den.uses_var(te) {
            return rf.clone();
        }
        // te^2 = rho (t1^{n+2} - t_{n+2}),  rho = (-1)^{n/2}/(c_n (n+2)^n):
        // a rational function because of the 1/c_n.
        let nv = self.ring.nv();
        let n = self.n;
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        let disc = Poly::var(nv, self.t1)
            .pow(n as u32 + 2)
            .sub(&Poly::var(nv, self.tb));
        let rep = Rf::new(
            disc.mul_scalar(&rint(sign)),
            Poly::var(nv, self.cn).mul_scalar(&rint((n as i64 + 2).pow(n as u32))),
        );
        let rewrite = |p: &Poly| -> Rf {
            let mut out = Rf::zero(nv);
            for (mono, c) in &p.terms {
                let e = mono.0[te];
                let mut m2 = mono.clone();
                m2.0[te] = e % 2;
                let base = Rf::from_poly(Poly::term(nv, m2, c.clone()));
                out = out.add(&base.mul(&rep.pow((e / 2) as i64)));
            }
            out
        };
        rewrite(&rf.num).div(&rewrite(&rf.den))
    }

    /// The value of the base coordinate as a rational function of the free
    /// generators (the variable itself for odd n).
    pub fn tb_value(&self) -> Rf {
        match &self.tb_expr {
            Some(e) => Rf::from_poly(e.clone()),
            None => Rf::from_var(self.ring.nv(), self.tb),
        }
    }

    /// Contract the connection pair with a field's `(t1, t_{n+2})` velocity:
    /// `B(V) = B1 * v(t1) + B2 * v(t_{n+2})`, eliminated.
    pub fn bh(&self, t1dot: &Rf, tbdot: &Rf) -> Mat {
        self.b1
            .mul_rf(t1dot)
            .add(&self.b2.mul_rf(tbdot))
            .map(|e| self.eliminate(e).reduce(&self.ring.seeds))
    }

    /// Velocity of the base coordinate under a field on the free generators
    /// (chain rule through the elimination for even n).
    pub fn tb_dot(&self, field: &Field) -> Rf {
        match &self.tb_expr {
            Some(e) => {
                let mut acc = Rf::zero(self.ring.nv());
                for (&u, comp) in field {
                    let de = e.derivative(u);
                    if de.is_zero() {
                        continue;
                    }
                    acc = acc.add(&Rf::from_poly(de).mul(comp));
                }
                acc.reduce(&self.ring.seeds)
            }
            None => field.get(&self.tb).cloned().unwrap_or_else(|| Rf::zero(self.ring.nv())),
        }
    }

    /// Solve `S' = A S - S B(V)` for the unique field `V` on the free
    /// generators whose Gauss-Manin matrix is `A`.
    ///
    /// With `check` set, the dependent slots of the equation are verified as
    /// well (they are consequences of the pairing constraint).
    pub fn derive_field(&self, a: &Mat, check: bool) -> Field {
        let nv = self.ring.nv();
        let n = self.n;
        let a_s = a.mul(&self.s).reduced(&self.ring.seeds);
        // slot (1,1): 0 = (AS)[0][0] - B(V)[0][0] with B(V)[0][0] the
        // dt_{n+2}-part only
        let tbdot = self
            .tb_value()
            .mul(a_s.at(0, 0))
            .mul_scalar(&rint(-(n as i64 + 2)))
            .reduce(&self.ring.seeds);
        // slot (1,2): 0 = (AS)[0][1] - (v(t1) + t1 (AS)[0][0])
        let t1_rf = Rf::from_var(nv, self.t1);
        let t1dot = a_s
            .at(0, 1)
            .sub(&t1_rf.mul(a_s.at(0, 0)))
            .reduce(&self.ring.seeds);

        let bh = self.bh(&t1dot, &tbdot);
        let sdot = a_s.sub(&self.s.mul(&bh)).reduced(&self.ring.seeds);

        let mut field = Field::new();
        field.insert(self.t1, t1dot.clone());
        for &((i, j), v) in &self.indep {
            field.insert(v, sdot.at(i - 1, j - 1).clone());
        }
        match (self.te, &self.tb_expr) {
            (Some(te), Some(e)) => {
                // chain rule: v(t_{n+2}) = de/dt1 v(t1) + de/dte v(te)
                let de_t1 = Rf::from_poly(e.derivative(self.t1));
                let de_te = Rf::from_poly(e.derivative(te));
                let tedot = tbdot
                    .sub(&de_t1.mul(&t1dot))
                    .div(&de_te)
                    .reduce(&self.ring.seeds);
                field.insert(te, tedot);
            }
            _ => {
                field.insert(self.tb, tbdot.clone());
            }
        }

        if check {
            // every remaining slot equation must hold
            for i in 0..=n {
                for j in 0..=n {
                    let lhs = self.apply_field_rf(&field, self.s.at(i, j));
                    assert!(
                        lhs.equals(sdot.at(i, j)),
                        "field derivation inconsistent at slot ({}, {})",
                        i + 1,
                        j + 1
                    );
                }
            }
        }
        field
    }

    /// Apply a field to a rational function as a derivation.
    pub fn apply_field_rf(&self, field: &Field, f: &Rf) -> Rf {
        let mut acc = Rf::zero(self.ring.nv());
        for (&u, comp) in field {
            if comp.is_zero() {
                continue;
            }
            let df = f.derivative(u);
            if df.is_zero() {
                continue;
            }
            // keep the running denominator at the maximal seed power rather
            // than the product of the incoming ones
            acc = acc.add(&df.mul(comp).reduce(&self.ring.seeds));
        }
        acc.reduce(&self.ring.seeds)
    }

    /// Gauss-Manin matrix of a field: `A = (S' + S B(V)) S^{-1}`.
    pub fn conn_matrix(&self, field: &Field) -> Mat {
        let nv = self.ring.nv();
        let mut sdot = Mat::zero(nv, self.n + 1, self.n + 1);
        for i in 0..=self.n {
            for j in 0..=self.n {
                *sdot.at_mut(i, j) = self.apply_field_rf(field, self.s.at(i, j));
            }
        }
        let t1dot = field
            .get(&self.t1)
            .cloned()
            .unwrap_or_else(|| Rf::zero(nv));
        let tbdot = self.tb_dot(field);
        let bh = self.bh(&t1dot, &tbdot);
        let sinv = self.s.inverse_lower_triangular(&self.ring.seeds);
        sdot.add(&self.s.mul(&bh))
            .mul(&sinv)
            .reduced(&self.ring.seeds)
    }

    /// The q-expansion-normalized triple couplings (Yukawa-type), indexed by
    /// band position `0..n-1`.
    pub fn yukawa(&self) -> BTreeMap<usize, Rf> {
        let nv = self.ring.nv();
        let n = self.n;
        let s = &self.s;
        let mut y: BTreeMap<usize, Rf> = BTreeMap::new();
        y.insert(n - 1, Rf::from_const(nv, rint(-1)));
        y.insert(0, Rf::from_const(nv, rint(1)));
        let band = |i: usize| -> Rf {
            s.at(1, 1)
                .mul(s.at(i, i))
                .div(s.at(i + 1, i + 1))
                .reduce(&self.ring.seeds)
        };
        if n % 2 == 1 {
            let m = (n + 1) / 2;
            for i in 1..=((n.max(3) - 3) / 2) {
                let v = band(i);
                y.insert(n - i - 1, v.neg());
                y.insert(i, v);
            }
            if n >= 3 {
                let mid = (n - 1) / 2;
                let disc_elim = self.eliminate(&Rf::from_poly(
                    Poly::var(nv, self.t1)
                        .pow(n as u32 + 2)
                        .sub(&Poly::var(nv, self.tb)),
                ));
                let sign = if ((3 * n + 3) / 2) % 2 == 0 { 1 } else { -1 };
                let c = Rf::from_poly(
                    Poly::var(nv, self.cn)
                        .mul_scalar(&rint(sign * (n as i64 + 2).pow(n as u32))),
                );
                let v = c
                    .mul(s.at(1, 1))
                    .mul(&s.at(m - 1, m - 1).pow(2))
                    .div(&disc_elim)
                    .reduce(&self.ring.seeds);
                y.insert(mid, v);
            }
        } else {
            for i in 1..=((n.max(2) - 2) / 2) {
                let v = band(i);
                y.insert(n - i - 1, v.neg());
                y.insert(i, v);
            }
        }
        y
    }

    /// The couplings assembled as the superdiagonal band matrix.
    pub fn ymatrix(&self) -> Mat {
        let nv = self.ring.nv();
        let y = self.yukawa();
        let mut m = Mat::zero(nv, self.n + 1, self.n + 1);
        for i in 1..=self.n {
            *m.at_mut(i - 1, i) = y[&(i - 1)].clone();
        }
        m
    }

    /// Canonical basis element `g_{a,b}` of the pairing-preserving algebra.
    pub fn gmat(&self, a: usize, b: usize) -> Mat {
        let nv = self.ring.nv();
        let n = self.n;
        let m = if n % 2 == 1 { (n + 1) / 2 } else { n / 2 };
        let mut g = Mat::zero(nv, n + 1, n + 1);
        *g.at_mut(a - 1, b - 1) = Rf::from_const(nv, rint(1));
        let mirror = if n % 2 == 1 {
            if b <= m {
                rint(-1)
            } else {
                rint(1)
            }
        } else {
            rint(-1)
        };
        *g.at_mut(n + 2 - b - 1, n + 2 - a - 1) = Rf::from_const(nv, mirror);
        g
    }

    /// Weight of a free generator by ring id.
    pub fn weight_of_var(&self, v: usize) -> i64 {
        self.weights[v]
    }

    /// Weights restricted to the free generators, keyed by display name.
    pub fn weight_map(&self) -> BTreeMap<String, i64> {
        self.free
            .iter()
            .map(|&v| (self.ring.names[v].clone(), self.weights[v]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chart_dims() {
        let expect = [3usize, 3, 7, 7, 13, 13];
        for (i, &d) in expect.iter().enumerate() {
            assert_eq!(chart_dim(i + 1), d);
        }
    }

    #[test]
    fn placement_small() {
        let (indep, names, dep, extra) = placement(2);
        assert_eq!(indep, vec![(2, 1)]);
        assert_eq!(names, vec![2]);
        // the extra slot (2,2) stays in the dependent list here; the chart
        // builder skips it when assigning placeholders
        assert_eq!(dep, vec![(3, 3), (2, 2), (3, 2), (3, 1)]);
        assert_eq!(extra, Some((2, 2)));

        let (indep, names, _, extra) = placement(3);
        assert_eq!(indep, vec![(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)]);
        // generator names skip the base index n+2 = 5
        assert_eq!(names, vec![2, 3, 4, 6, 7]);
        assert_eq!(extra, None);
    }
}
