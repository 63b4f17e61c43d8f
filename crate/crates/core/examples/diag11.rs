use pslreps::cover::*;
use pslreps::mobius::*;
use pslreps::atlas::fricke_pair;

fn main() {
    // reproduce torus 2 of (3,1) n=-5: target in Hyp(-1), scale ~77
    // build a target with similar conditioning and measure polish stages
    let lam = ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
    let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    // skew conjugator with unit determinant
    let d = 8.0f64 * 0.25 - 0.3 * 3.0; // 2.0 - 0.9 = 1.1
    let s = d.sqrt();
    let skew = Psl2::new(Mat2::new(8.0 / s, 0.3 / s, 3.0 / s, 0.25 / s)).unwrap();
    let val = conjugate(&diag, &skew);
    let target = mul_lifted(&z_power(-1), &lift_canonical_hyp0(&val).unwrap());
    println!("target scale {:.2e}", val.mat().dist(&Mat2::new(0.,0.,0.,0.)));

    // raw fricke + conjugation
    let tau = trace_lifted(&target).unwrap().abs();
    let mut lo = 2.0f64; let mut hi = 8.0;
    while hi - lo > 1e-12 {
        let mid = (lo + hi) / 2.0;
        if kappa(&mid, &mid, &mid) > -tau { lo = mid; } else { hi = mid; }
    }
    let (ma, mb) = fricke_pair(lo, lo, lo).unwrap();
    let mut a = Psl2::new(ma).unwrap();
    let mut b = Psl2::new(mb).unwrap();
    let mut comm = ev_commutator(&a, &b);
    if classify_lifted(&comm).unwrap() != LiftedClass::Hyp(-1) {
        std::mem::swap(&mut a, &mut b);
        comm = ev_commutator(&a, &b);
    }
    println!("comm class {:?}", classify_lifted(&comm).unwrap());
    let k0 = conjugator_matching(comm.base(), target.base()).unwrap();
    let a1 = conjugate(&a, &k0);
    let b1 = conjugate(&b, &k0);
    let drift1 = ev_commutator(&a1, &b1).base().mat().dist(target.base().mat());
    println!("pre-polish drift {:.3e}", drift1);
    match conjugator_matching(&b1, &mul(target.base(), &b1)) {
        Ok(a2) => {
            let drift2 = ev_commutator(&a2, &b1).base().mat().dist(target.base().mat());
            println!("post-polish drift {:.3e}", drift2);
        }
        Err(e) => println!("polish failed: {e}"),
    }
}
