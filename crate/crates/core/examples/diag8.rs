use pslreps::atlas::*;
use pslreps::cover::*;
use pslreps::mobius::*;
use pslreps::surface::*;
use pslreps::*;

fn maxe(g: &Psl2<f64>) -> f64 {
    let m = g.mat();
    m.a.abs().max(m.b.abs()).max(m.c.abs()).max(m.d.abs())
}

fn main() {
    // (3,1) n=-5 fails; rebuild with n=-4 (works?) and n=-5 comparing stages
    for n in [-4i64, -5] {
        let spec = ComponentSpec::new(SurfaceSig::new(3, 1).unwrap(), n, SignVector::parse("-").unwrap()).unwrap();
        println!("=== n = {n} ===");
        match representative(&spec) {
            Ok(w) => {
                println!("ok resid {:.3e}", relation_residual(&w.rep));
                for (j, (a, b)) in w.rep.a.iter().zip(w.rep.b.iter()).enumerate() {
                    println!("  torus {j}: |a| {:.2e} |b| {:.2e}", maxe(a), maxe(b));
                }
            }
            Err(e) => {
                println!("err: {e}");
                // rebuild manually to find stage: use random_rep path? no - examine commutator drift:
                // reconstruct stages via the same calls:
            }
        }
    }
    // direct test: torus fiber at NEGATIVE trace target with large-ish base
    let lam = ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
    let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    let shear = Psl2::new(Mat2::new(1.0, 0.0, 2.7, 1.0)).unwrap();
    let val = conjugate(&diag, &shear);
    for t in [-1i64, 0, 1] {
        let target = mul_lifted(&z_power(t), &lift_canonical_hyp0(&val).unwrap());
        match torus_pair_with_commutator(&target) {
            Ok((a, b)) => {
                let comm = ev_commutator(&a, &b);
                println!(
                    "t={t}: pair scale {:.2e}/{:.2e} comm drift {:.3e} class {:?}",
                    maxe(&a), maxe(&b),
                    comm.base().mat().dist(target.base().mat()),
                    classify_lifted(&comm)
                );
            }
            Err(e) => println!("t={t}: {e}"),
        }
    }
}
