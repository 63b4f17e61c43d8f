use pslreps::atlas::*;
use pslreps::cover::*;
use pslreps::mobius::*;
use pslreps::*;

fn maxe(g: &Psl2<f64>) -> f64 {
    let m = g.mat();
    m.a.abs().max(m.b.abs()).max(m.c.abs()).max(m.d.abs())
}

fn main() {
    // manual rebuild of (3,1) n=-5 following the library algorithm
    let tau = 3.0f64;
    let lam = ((tau + (tau * tau - 4.0).sqrt()) / 2.0).ln();
    let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    // P0: (Hyp, Hyp) -> HypLevel{-1}: t_signed = -3: P = -1
    let p0 = (-3.0 - 2.0) / (4.0 * lam.sinh() * lam.sinh());
    let k_p = Psl2::new(Mat2::new(p0, p0 - 1.0, 1.0, 1.0)).unwrap();
    let v0 = diag.clone();
    let v1 = conjugate(&diag, &k_p);
    let mut q = ev_product(&v0, &v1, LiftRule::Hyp0).unwrap();
    println!("P0 q: {:?} |base| {:.2e}", classify_lifted(&q), maxe(q.base()));
    // P1 (last): (Hyp, Hyp) -> ParLevel{-1, +1}: t_signed = -2: P = -0.8
    let p1 = (-2.0 - 2.0) / (4.0 * lam.sinh() * lam.sinh());
    let k_p1 = Psl2::new(Mat2::new(p1, p1 - 1.0, 1.0, 1.0)).unwrap();
    let g1m = diag.clone();
    let g2m = conjugate(&diag, &k_p1);
    let modelprod = ev_product(&g1m, &g2m, LiftRule::Hyp0).unwrap();
    println!("P1 model product: {:?} trace {:?}", classify_lifted(&modelprod), trace_lifted(&modelprod));
    let a_val = q.base().clone();
    let k0 = conjugator_matching(&g1m, &a_val).unwrap();
    let b_val = conjugate(&g2m, &k0);
    let v2 = b_val.clone();
    q = mul_lifted(&q, &lift_canonical_hyp0(&b_val).unwrap());
    println!("q after P1: {:?} |base| {:.2e}", classify_lifted(&q), maxe(q.base()));
    let rest = inverse(q.base());
    println!("closing slot class: {:?}", classify(&rest));
    let v3 = rest.clone();
    q = mul_lifted(&q, &lift_canonical_hyp0(&rest).unwrap());
    println!("q closed: {:?}", classify_lifted(&q));
    // tori
    let mut gens = Vec::new();
    for (j, v) in [(0usize, &v0), (1, &v1), (2, &v2)] {
        let target = mul_lifted(&z_power(-1), &lift_canonical_hyp0(v).unwrap());
        let (a, b) = torus_pair_with_commutator(&target).unwrap();
        let comm = ev_commutator(&a, &b);
        println!(
            "torus {j}: target {:?}, drift {:.3e}, pair scale {:.2e}/{:.2e}",
            classify_lifted(&target),
            comm.base().mat().dist(target.base().mat()),
            maxe(&a), maxe(&b)
        );
        gens.push((a, b));
    }
    // assemble relator
    let mut acc = Psl2::identity();
    for (a, b) in &gens {
        let comm = mul(&mul(a, b), &mul(&inverse(a), &inverse(b)));
        acc = mul(&acc, &comm);
    }
    acc = mul(&acc, &v3);
    println!("relator dist from I: {:.3e}", acc.mat().dist(Psl2::identity().mat()));
}
