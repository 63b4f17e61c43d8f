use pslreps::atlas::*;
use pslreps::components::{enumerate_components, BoundaryFilter};
use pslreps::surface::*;
use pslreps::*;

fn maxentry(rep: &Representation<f64>) -> f64 {
    let mut m: f64 = 0.0;
    for g in rep.a.iter().chain(rep.b.iter()).chain(rep.c.iter()) {
        let mt = g.mat();
        for e in [mt.a, mt.b, mt.c, mt.d] {
            m = m.max(e.abs());
        }
    }
    m
}

fn main() {
    for (g, p) in [(1usize, 4usize), (0, 7), (1, 5), (2, 3), (3, 1), (0, 6), (2, 2), (0, 5), (1, 2)] {
        let sig = SurfaceSig::new(g, p).unwrap();
        let mut worst_res: f64 = 0.0;
        let mut worst_entry: f64 = 0.0;
        let mut count = 0;
        let mut failures = 0;
        for ci in enumerate_components(sig, BoundaryFilter::All).unwrap() {
            let spec = ComponentSpec::new(sig, ci.n, ci.s.clone()).unwrap();
            match representative(&spec) {
                Ok(w) => {
                    worst_res = worst_res.max(relation_residual(&w.rep));
                    worst_entry = worst_entry.max(maxentry(&w.rep));
                }
                Err(e) => {
                    if failures == 0 {
                        println!("  FAIL ({g},{p}) n={} s={}: {e}", ci.n, ci.s.to_string_compact());
                    }
                    failures += 1;
                }
            }
            count += 1;
        }
        println!(
            "({g},{p}): {count} specs, {failures} failures, worst residual {:.3e}, worst maxentry {:.3e}",
            worst_res, worst_entry
        );
    }
}
