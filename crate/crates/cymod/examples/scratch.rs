use cymod::rc::RcCtx;
use cymod::sample::Sampler;
use cymod::Chart;
use std::time::Instant;

fn main() {
    let chart = Chart::build(3);
    let ctx = RcCtx::new(&chart);
    let mut smp = Sampler::new(2024);
    for idx in 0..3 {
        let ((f, r), (g, s)) = smp.pair(&chart);
        eprintln!(
            "pair {idx}: f {} terms (w {r}), g {} terms (w {s}), f den {} terms, g den {} terms",
            f.num.terms.len(),
            g.num.terms.len(),
            f.den.terms.len(),
            g.den.terms.len()
        );
        for k in 0..=4 {
            let t0 = Instant::now();
            let std = ctx.bracket(&f, r, &g, s, k);
            let t1 = t0.elapsed();
            let t0 = Instant::now();
            let canon = ctx.canon_bracket(&f, r, &g, s, k);
            let t2 = t0.elapsed();
            let t0 = Instant::now();
            let eq = std.equals(&canon);
            let t3 = t0.elapsed();
            eprintln!(
                "  k={k}: std {t1:?} ({}n/{}d), canon {t2:?} ({}n/{}d), equals {eq} {t3:?}",
                std.num.terms.len(),
                std.den.terms.len(),
                canon.num.terms.len(),
                canon.den.terms.len()
            );
        }
    }
}
