use pslreps::mobius::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn maxe(g: &Psl2<f64>) -> f64 {
    let m = g.mat();
    m.a.abs().max(m.b.abs()).max(m.c.abs()).max(m.d.abs())
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let lam = ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
    let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    for boost in [1, 3, 5, 7] {
        let mut worst = 0.0f64;
        let mut worst_scale = 0.0f64;
        for _ in 0..200 {
            // build an ill-conditioned conjugate: product of `boost` random elements
            let mut h = Psl2::identity();
            for _ in 0..boost {
                h = mul(&h, &pslreps::sample::random_psl2(&mut rng));
            }
            let target = conjugate(&diag, &h);
            let k = conjugator_matching(&diag, &target).unwrap();
            let drift = conjugate(&diag, &k).mat().dist(target.mat());
            let rel = drift / maxe(&target).max(1.0);
            if rel > worst {
                worst = rel;
                worst_scale = maxe(&target);
            }
        }
        println!("boost {boost}: worst relative conj drift {worst:.3e} at scale {worst_scale:.2e}");
    }
}
