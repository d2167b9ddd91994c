//! Seeded random generation of homogeneous elements of the t2-free subring,
//! used by the bracket-identity and canonical-vs-standard verifications.
//! All draws go through one ChaCha stream, so a fixed seed reproduces the
//! exact same sample set on every platform.

use crate::chart::Chart;
use crate::poly::{Mono, Poly};
use crate::{rint, Rf};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
}

/// Exponent vectors over `gens` (ids with weights) of exact weighted degree
/// `target`, each exponent capped.
fn monos_of_weight(
    nv: usize,
    gens: &[(usize, i64)],
    target: i64,
    cap: u16,
) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nv];
    fn rec(
        gens: &[(usize, i64)],
        pos: usize,
        left: i64,
        cap: u16,
        exps: &mut Vec<u16>,
        out: &mut Vec<Mono>,
    ) {
        if pos == gens.len() {
            if left == 0 {
                out.push(Mono(exps.clone()));
            }
            return;
        }
        let (v, w) = gens[pos];
        for e in 0..=cap {
            let used = w * e as i64;
            if w > 0 && used > left {
                break;
            }
            exps[v] = e;
            rec(gens, pos + 1, left - used, cap, exps, out);
        }
        exps[v] = 0;
    }
    rec(gens, 0, target, cap, &mut exps, &mut out);
    out
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A random homogeneous t2-free element of positive weight: a sparse
    /// random combination of monomials of one weighted degree, occasionally
    /// divided by a power of t3 (keeping the overall weight positive).
    pub fn homogeneous(&mut self, chart: &Chart) -> (Rf, i64) {
        let nv = chart.ring.nv();
        let t2 = chart.t_id[2].expect("chart has no t2");
        let gens: Vec<(usize, i64)> = chart
            .free
            .iter()
            .filter(|&&v| v != t2)
            .map(|&v| (v, chart.weights[v]))
            .collect();
        assert!(gens.iter().all(|&(_, w)| w >= 0));
        loop {
            let target = self.rng.gen_range(1..=12i64);
            let basis = monos_of_weight(nv, &gens, target, 4);
            if basis.is_empty() {
                continue;
            }
            let picks = self.rng.gen_range(1..=3usize.min(basis.len()));
            let mut p = Poly::zero(nv);
            for _ in 0..picks {
                let m = basis[self.rng.gen_range(0..basis.len())].clone();
                let mut c = self.rng.gen_range(-3i64..=3);
                if c == 0 {
                    c = 1;
                }
                p = p.add(&Poly::term(nv, m, rint(c)));
            }
            if p.is_zero() {
                continue;
            }
            let mut f = Rf::from_poly(p);
            let mut w = target;
            let t3w = chart.weights[gens
                .iter()
                .find(|&&(v, _)| chart.ring.names[v] == "t3")
                .map(|&(v, _)| v)
                .unwrap_or(gens[0].0)];
            if t3w > 0 && self.rng.gen_range(0..5) == 0 && target - t3w >= 1 {
                let t3 = chart.ring.var("t3").unwrap();
                f = f.div(&Rf::from_var(nv, t3));
                w -= t3w;
            }
            let wcheck = f.weighted_degree(&chart.weights);
            debug_assert_eq!(wcheck, Some(w));
            return (f, w);
        }
    }

    /// A pair of independent homogeneous samples.
    pub fn pair(&mut self, chart: &Chart) -> ((Rf, i64), (Rf, i64)) {
        (self.homogeneous(chart), self.homogeneous(chart))
    }

    /// A triple of independent homogeneous samples.
    pub fn triple(&mut self, chart: &Chart) -> ((Rf, i64), (Rf, i64), (Rf, i64)) {
        (
            self.homogeneous(chart),
            self.homogeneous(chart),
            self.homogeneous(chart),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_enumeration() {
        // two generators of weights 1 and 2, target 4, cap 4:
        // e1 + 2 e2 = 4 -> (4,0), (2,1), (0,2)
        let got = monos_of_weight(2, &[(0, 1), (1, 2)], 4, 4);
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn sampler_is_deterministic() {
        let a: Vec<u64> = {
            let mut r = ChaCha8Rng::seed_from_u64(7);
            (0..4).map(|_| r.gen_range(0..1000u64)).collect()
        };
        let b: Vec<u64> = {
            let mut r = ChaCha8Rng::seed_from_u64(7);
            (0..4).map(|_| r.gen_range(0..1000u64)).collect()
        };
        assert_eq!(a, b);
    }
}
