//! Random element generators for property suites and tests. Entries are
//! kept bounded so float comparisons stay well-conditioned.

use crate::mobius::{conjugate, ElementClass, Mat2, Psl2};
use rand::Rng;

pub fn random_psl2(rng: &mut impl Rng) -> Psl2<f64> {
    random_psl2_bounded(rng, 2.0)
}

/// Random element with raw entries in (-bound, bound) before determinant
/// normalization; tighter bounds keep downstream conditioning under control.
pub fn random_psl2_bounded(rng: &mut impl Rng, bound: f64) -> Psl2<f64> {
    loop {
        let e: [f64; 4] = [
            rng.gen_range(-bound..bound),
            rng.gen_range(-bound..bound),
            rng.gen_range(-bound..bound),
            rng.gen_range(-bound..bound),
        ];
        let det = e[0] * e[3] - e[1] * e[2];
        if det.abs() < 0.1 * bound * bound {
            continue;
        }
        let (a, b, c, d) = if det > 0.0 {
            (e[0], e[1], e[2], e[3])
        } else {
            (e[1], e[0], e[3], e[2])
        };
        let s = (a * d - b * c).sqrt();
        return Psl2::from_mat_unchecked(Mat2::new(a / s, b / s, c / s, d / s));
    }
}

pub fn random_hyperbolic(rng: &mut impl Rng) -> Psl2<f64> {
    let lam: f64 = rng.gen_range(0.2..1.5);
    let core = Psl2::from_mat_unchecked(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp()));
    conjugate(&core, &random_psl2(rng))
}

pub fn random_parabolic(rng: &mut impl Rng, sign: i8) -> Psl2<f64> {
    let s = if sign >= 0 { 1.0 } else { -1.0 };
    let core = Psl2::from_mat_unchecked(Mat2::new(1.0, s, 0.0, 1.0));
    conjugate(&core, &random_psl2(rng))
}

pub fn random_elliptic(rng: &mut impl Rng) -> Psl2<f64> {
    let a: f64 = rng.gen_range(0.1..std::f64::consts::PI - 0.1);
    let core = Psl2::from_mat_unchecked(Mat2::new(a.cos(), a.sin(), -a.sin(), a.cos()));
    conjugate(&core, &random_psl2(rng))
}

/// A random element of the closure of the hyperbolic locus (hyperbolic or
/// parabolic; the identity is measure zero and excluded).
pub fn random_nonelliptic(rng: &mut impl Rng) -> Psl2<f64> {
    if rng.gen_bool(0.6) {
        random_hyperbolic(rng)
    } else {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        random_parabolic(rng, sign)
    }
}

/// Rejection-samples a random element of the requested class.
pub fn random_of_class(rng: &mut impl Rng, class: ElementClass) -> Psl2<f64> {
    match class {
        ElementClass::Identity => Psl2::identity(),
        ElementClass::Hyperbolic => random_hyperbolic(rng),
        ElementClass::ParabolicPos => random_parabolic(rng, 1),
        ElementClass::ParabolicNeg => random_parabolic(rng, -1),
        ElementClass::Elliptic => random_elliptic(rng),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::classify;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samplers_hit_their_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert_eq!(classify(&random_hyperbolic(&mut rng)), ElementClass::Hyperbolic);
            assert_eq!(
                classify(&random_parabolic(&mut rng, 1)),
                ElementClass::ParabolicPos
            );
            assert_eq!(
                classify(&random_parabolic(&mut rng, -1)),
                ElementClass::ParabolicNeg
            );
            assert_eq!(classify(&random_elliptic(&mut rng)), ElementClass::Elliptic);
            let det = random_psl2(&mut rng).mat().det();
            assert!((det - 1.0).abs() < 1e-12);
        }
    }
}
