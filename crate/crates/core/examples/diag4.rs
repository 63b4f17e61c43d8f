use pslreps::atlas::ComponentSpec;
use pslreps::cover::*;
use pslreps::mobius::*;
use pslreps::surface::*;
use pslreps::*;

fn main() {
    // run the actual representative and inspect the failing rep pieces
    let spec = ComponentSpec::new(
        SurfaceSig::new(0, 5).unwrap(),
        1,
        SignVector::parse("0-0-0").unwrap(),
    )
    .unwrap();
    match pslreps::atlas::representative(&spec) {
        Ok(w) => println!("ok {:?}", component_of(&w.rep)),
        Err(e) => println!("err: {e}"),
    }
    // manual P2-like attachment WITH an extreme balancing twist:
    let tau: f64 = 3.0;
    let lam = ((tau + (tau * tau - 4.0f64).sqrt()) / 2.0).ln();
    let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    let par_m = Psl2::new(Mat2::new(1.0, -1.0, 0.0, 1.0)).unwrap();
    // a_val: some conjugate of diag with trace 3
    let h = Psl2::new(Mat2::new(1.4, 0.7, 0.4, 0.914285714285714285)).unwrap();
    let a_val = conjugate(&diag, &h);
    let k0 = conjugator_matching(&diag, &a_val).unwrap();
    for u in [-6.0f64, -2.0, 0.0, 2.0, 6.0] {
        let cu = Psl2::new(Mat2::new(u.exp(), 0.0, 0.0, (-u).exp())).unwrap();
        let k = mul(&k0, &cu);
        let b_val = conjugate(&par_m, &k);
        let prod = ev_product(&a_val, &b_val, LiftRule::Hyp0).unwrap();
        println!(
            "u = {u}: b class {:?}, product {:?}",
            classify(&b_val),
            classify_lifted(&prod)
        );
    }
}
