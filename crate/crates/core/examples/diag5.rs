// replicate glued_representative inline with prints for (0,5) n=1 s=0-0-0
use pslreps::atlas::*;
use pslreps::cover::*;
use pslreps::mobius::*;
use pslreps::surface::*;
use pslreps::*;

fn main() {
    let spec = ComponentSpec::new(
        SurfaceSig::new(0, 5).unwrap(),
        1,
        SignVector::parse("0-0-0").unwrap(),
    )
    .unwrap();
    // replicate: slots [H,P-,H,P-,H], pants [0,1,0] per greedy
    let tau = spec.tau;
    let diag = {
        let lam = ((tau + (tau * tau - 4.0f64).sqrt()) / 2.0).ln();
        Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap()
    };
    let parm = Psl2::new(Mat2::new(1.0, -1.0, 0.0, 1.0)).unwrap();
    // P0 (anchor): (H, P-)-> Hyp(0) trace 3: t = 0
    let v0 = diag.clone();
    let v1 = parm.clone();
    let mut q = ev_product(&v0, &v1, LiftRule::Hyp0).unwrap();
    println!("after P0: {:?}", classify_lifted(&q));
    // P1: (H fixed=q.base, H) -> Hyp(1) trace -3; replicate library: model+flip+balance
    // direct model fails; flipped:
    let lam = ((tau + (tau * tau - 4.0f64).sqrt()) / 2.0).ln();
    let p = (-3.0 - 2.0) / (4.0 * lam.sinh() * lam.sinh());
    let k = Psl2::new(Mat2::new(p, p - 1.0, 1.0, 1.0)).unwrap();
    let g2 = conjugate(&diag, &k);
    let g1f = pgl_conjugate(&diag);
    let g2f = pgl_conjugate(&g2);
    println!("flipped model product: {:?}", classify_lifted(&ev_product(&g1f, &g2f, LiftRule::Hyp0).unwrap()));
    let a_val = q.base().clone();
    println!("a_val class {:?} trace {}", classify(&a_val), a_val.trace_abs());
    let k0 = conjugator_matching(&g1f, &a_val).unwrap();
    let b_val_unbal = conjugate(&g2f, &k0);
    let prod_unbal = ev_product(&a_val, &b_val_unbal, LiftRule::Hyp0).unwrap();
    println!("P1 attach unbalanced: {:?}", classify_lifted(&prod_unbal));
    q = mul_lifted(&q, &lift_canonical_hyp0(&b_val_unbal).unwrap());
    println!("q after P1: {:?}", classify_lifted(&q));

    // now with centralizer twists of the flipped model
    for u in [-8.0f64, -4.0, -1.0, 1.0, 4.0, 8.0] {
        // centralizer of g1f = diag(e^-lam, e^lam): diagonal
        let cu = Psl2::new(Mat2::new(u.exp(), 0.0, 0.0, (-u).exp())).unwrap();
        let kk = mul(&k0, &cu);
        let check = conjugate(&g1f, &kk);
        let drift = check.mat().dist(a_val.mat());
        let b_val = conjugate(&g2f, &kk);
        let prod = ev_product(&a_val, &b_val, LiftRule::Hyp0).unwrap();
        println!("u={u}: conj drift {drift:.2e}, b class {:?}, product {:?}",
            classify(&b_val), classify_lifted(&prod));
    }
    let _ = spec;
}

#[allow(dead_code)]
fn scan() {}
