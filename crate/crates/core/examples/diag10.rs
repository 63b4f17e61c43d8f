use pslreps::atlas::*;
use pslreps::surface::*;
use pslreps::*;

fn main() {
    for (g, p, n, s) in [
        (1usize, 5usize, -5i64, "0----"),
        (0, 6, -4, "00----"),
        (2, 3, -5, "---"),
        (3, 1, -5, "-"),
    ] {
        let spec = ComponentSpec::new(SurfaceSig::new(g, p).unwrap(), n, SignVector::parse(s).unwrap()).unwrap();
        print!("({g},{p}) n={n} s={s}: ");
        match representative(&spec) {
            Ok(w) => println!("ok resid {:.3e}", relation_residual(&w.rep)),
            Err(e) => println!("err: {e}"),
        }
    }
}
