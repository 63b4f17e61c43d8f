use pslreps::atlas::*;
use pslreps::cover::*;
use pslreps::mobius::*;
use pslreps::surface::*;
use pslreps::*;

fn main() {
    // replicate the chain for (0,5) n=1 s=0-0-0 manually
    let tau = 3.0;
    let lam = ((tau + (tau * tau - 4.0f64).sqrt()) / 2.0).ln();
    let diag = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    let _ = diag;
    // slots: c1 Hyp, c2 Par(-), c3 Hyp, c4 Par(-), c5 Hyp
    // pants signs: P0: (0, -1, 0) range (-1, 0); P1: (0, -1, 0) (-1, 0); P2: (0, 0, 0)... wait
    // chain_pants_signs: P0: (s0, s1, 0) = (0, -1, 0); P1: (0, s2, 0) = (0, -1... no s2 = slot[2] = 0
    // slots = [H, P-, H, P-, H]; P0: (0, -1, 0): (-1, 0); P1: (0, 0, 0): (-1, 1); P2 last: (0, s3, s4) = (0, -1, 0): (-1, 0)
    // mins: -1, -1, -1 = -3. n = 1: deficit 4: P0 -> 0 (+1), P1 -> 1 (+2), P2 -> 0 (+1): [0, 1, 0]
    let spec = ComponentSpec::new(
        SurfaceSig::new(0, 5).unwrap(),
        1,
        SignVector::parse("0-0-0").unwrap(),
    )
    .unwrap();
    match representative(&spec) {
        Ok(w) => println!("ok resid {:.3e}", relation_residual(&w.rep)),
        Err(e) => println!("err: {e}"),
    }
    // smaller repro: last pants with Par target from (Hyp, Par) classes
    // try: target ParLevel m=0 sign +1 with classes (Hyp(3), Par(-1))
    let g1 = Psl2::new(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp())).unwrap();
    for (s2, m, sign) in [(-1i8, 0i64, 1i8), (-1, -1, -1), (1, 0, -1), (1, 1, 1)] {
        let t_signed = if m.rem_euclid(2) == 0 { 2.0 } else { -2.0 };
        let t = (2.0 * lam.cosh() - t_signed) / (2.0 * s2 as f64 * lam.sinh());
        let shear = Psl2::new(Mat2::new(1.0, 0.0, t, 1.0)).unwrap();
        let par = Psl2::new(Mat2::new(1.0, s2 as f64, 0.0, 1.0)).unwrap();
        let g2 = conjugate(&par, &shear);
        let prod = ev_product(&g1, &g2, LiftRule::Hyp0).unwrap();
        println!(
            "(s2={s2}, m={m}, wanted sign {sign}): product {:?} trace {:.3}",
            classify_lifted(&prod),
            trace_lifted(&prod).unwrap()
        );
    }
}
