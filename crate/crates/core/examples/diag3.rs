use pslreps::cover::*;
use pslreps::mobius::*;

fn main() {
    let tau: f64 = 3.0;
    let lam = ((tau + (tau * tau - 4.0f64).sqrt()) / 2.0).ln();
    let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    // P0: (Hyp, Par(-1)) -> Hyp(0), t = 0
    let par_m = Psl2::new(Mat2::new(1.0, -1.0, 0.0, 1.0)).unwrap();
    let q = ev_product(&diag, &par_m, LiftRule::Hyp0).unwrap();
    println!("P0 product: {:?} trace {:?}", classify_lifted(&q), trace_lifted(&q));

    // P1: flipped hyp-hyp model for Hyp(1)
    let t_signed = -3.0;
    let p = (t_signed - 2.0) / (4.0 * lam.sinh() * lam.sinh());
    let k = Psl2::new(Mat2::new(p, p - 1.0, 1.0, 1.0)).unwrap();
    let g2 = conjugate(&diag, &k);
    let direct = ev_product(&diag, &g2, LiftRule::Hyp0).unwrap();
    println!("P1 direct product: {:?}", classify_lifted(&direct));
    let g1f = pgl_conjugate(&diag);
    let g2f = pgl_conjugate(&g2);
    let flipped = ev_product(&g1f, &g2f, LiftRule::Hyp0).unwrap();
    println!("P1 flipped product: {:?} trace {:?}", classify_lifted(&flipped), trace_lifted(&flipped));

    // conjugate the flipped model to attach at a_val = q.base()
    let a_val = q.base().clone();
    let k0 = conjugator_matching(&g1f, &a_val).unwrap();
    let b_val = conjugate(&g2f, &k0);
    let attached = ev_product(&a_val, &b_val, LiftRule::Hyp0).unwrap();
    println!("P1 attached product: {:?}", classify_lifted(&attached));
    let q2 = mul_lifted(&q, &lift_canonical_hyp0(&b_val).unwrap());
    println!("q2: {:?}", classify_lifted(&q2));
}
