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
    let spec = ComponentSpec::new(SurfaceSig::new(3, 1).unwrap(), -5, SignVector::parse("-").unwrap()).unwrap();
    match representative(&spec) {
        Ok(w) => println!("ok resid {:.3e}", relation_residual(&w.rep)),
        Err(e) => println!("err: {e}"),
    }
    // measure torus fiber drift at various target scales
    for scale in [1.0f64, 2.0, 5.0] {
        let h = Psl2::new(Mat2::new(scale, 0.3, 0.2, (1.0 + 0.06) / scale)).unwrap();
        let lam = ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
        let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
        let base = conjugate(&diag, &h);
        let target = mul_lifted(&z_power(-1), &lift_canonical_hyp0(&base).unwrap());
        match torus_pair_with_commutator(&target) {
            Ok((a, b)) => {
                let comm = ev_commutator(&a, &b);
                let drift = comm.base().mat().dist(target.base().mat());
                println!(
                    "scale {scale}: target maxe {:.2e}, pair maxe {:.2e}/{:.2e}, comm drift {:.3e}",
                    maxe(target.base()), maxe(&a), maxe(&b), drift
                );
            }
            Err(e) => println!("scale {scale}: err {e}"),
        }
    }
}
