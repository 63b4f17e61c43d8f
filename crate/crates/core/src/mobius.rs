//! 2x2 unit-determinant matrices, PSL(2,R) elements, classification,
//! the induced action on the boundary circle RP^1, and Fricke trace
//! machinery.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, EPS, WARN_BAND};

/// Row-major 2x2 matrix with determinant 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<S: Scalar> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(S::from_int(a), S::from_int(b), S::from_int(c), S::from_int(d))
    }

    /// Entries given as (num, den) pairs.
    pub fn from_ratios(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Self {
        Mat2::new(
            S::from_ratio(a.0, a.1),
            S::from_ratio(b.0, b.1),
            S::from_ratio(c.0, c.1),
            S::from_ratio(d.0, d.1),
        )
    }

    pub fn det(&self) -> S {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn trace(&self) -> S {
        self.a.add(&self.d)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        )
    }

    /// Adjugate; equals the inverse when det = 1.
    pub fn inverse(&self) -> Self {
        Mat2::new(self.d.clone(), self.b.neg(), self.c.neg(), self.a.clone())
    }

    pub fn neg(&self) -> Self {
        Mat2::new(self.a.neg(), self.b.neg(), self.c.neg(), self.d.neg())
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }

    pub fn to_f64(&self) -> Mat2<f64> {
        Mat2::new(self.a.to_f64(), self.b.to_f64(), self.c.to_f64(), self.d.to_f64())
    }

    /// Max-entry distance to another matrix.
    pub fn dist(&self, rhs: &Self) -> f64 {
        let e = |x: &S, y: &S| (x.to_f64() - y.to_f64()).abs();
        e(&self.a, &rhs.a)
            .max(e(&self.b, &rhs.b))
            .max(e(&self.c, &rhs.c))
            .max(e(&self.d, &rhs.d))
    }
}

/// Classification of a PSL(2,R) element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementClass {
    Identity,
    Hyperbolic,
    ParabolicPos,
    ParabolicNeg,
    Elliptic,
}

impl ElementClass {
    pub fn name(self) -> &'static str {
        match self {
            ElementClass::Identity => "identity",
            ElementClass::Hyperbolic => "hyperbolic",
            ElementClass::ParabolicPos => "parabolic+",
            ElementClass::ParabolicNeg => "parabolic-",
            ElementClass::Elliptic => "elliptic",
        }
    }

    pub fn is_parabolic(self) -> bool {
        matches!(self, ElementClass::ParabolicPos | ElementClass::ParabolicNeg)
    }

    /// Lies in the closure of the hyperbolic locus (hyperbolic, parabolic or identity).
    pub fn is_nonelliptic(self) -> bool {
        self != ElementClass::Elliptic
    }
}

/// A PSL(2,R) element stored as its canonical-sign matrix representative:
/// the first entry of (a, b, c, d) that is nonzero beyond tolerance is positive.
#[derive(Clone, Debug)]
pub struct Psl2<S: Scalar> {
    mat: Mat2<S>,
}

fn canonical_sign<S: Scalar>(m: Mat2<S>) -> Mat2<S> {
    let signs = [
        m.a.sign_eps(),
        m.b.sign_eps(),
        m.c.sign_eps(),
        m.d.sign_eps(),
    ];
    match signs.iter().find(|&&s| s != 0) {
        Some(-1) => m.neg(),
        _ => m,
    }
}

impl<S: Scalar> PartialEq for Psl2<S> {
    fn eq(&self, other: &Self) -> bool {
        self.mat.a.eq_eps(&other.mat.a)
            && self.mat.b.eq_eps(&other.mat.b)
            && self.mat.c.eq_eps(&other.mat.c)
            && self.mat.d.eq_eps(&other.mat.d)
    }
}

impl<S: Scalar> Psl2<S> {
    /// Validates determinant and finiteness, then normalizes the sign.
    pub fn new(m: Mat2<S>) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::InvalidElement);
        }
        let det = m.det();
        if !det.eq_eps(&S::one()) {
            return Err(Error::NotUnitDeterminant { det: det.to_f64() });
        }
        Ok(Psl2 {
            mat: canonical_sign(m),
        })
    }

    /// Normalizes sign without re-validating the determinant. For internal
    /// use on products of already-validated elements.
    pub fn from_mat_unchecked(m: Mat2<S>) -> Self {
        Psl2 {
            mat: canonical_sign(m),
        }
    }

    pub fn identity() -> Self {
        Psl2 {
            mat: Mat2::identity(),
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Psl2::new(Mat2::from_ints(a, b, c, d))
    }

    pub fn from_ratios(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Result<Self> {
        Psl2::new(Mat2::from_ratios(a, b, c, d))
    }

    pub fn mat(&self) -> &Mat2<S> {
        &self.mat
    }

    /// The SL(2,R) representative with nonnegative trace. Meaningful for
    /// non-elliptic elements, where the trace never vanishes.
    pub fn trace_pos_rep(&self) -> Mat2<S> {
        if self.mat.trace().sign_eps() < 0 {
            self.mat.neg()
        } else {
            self.mat.clone()
        }
    }

    /// |tr| of either matrix representative.
    pub fn trace_abs(&self) -> S {
        self.mat.trace().abs()
    }

    pub fn is_identity(&self) -> bool {
        self.mat.b.sign_eps() == 0
            && self.mat.c.sign_eps() == 0
            && self.mat.a.eq_eps(&S::one())
            && self.mat.d.eq_eps(&S::one())
    }

    pub fn to_f64(&self) -> Psl2<f64> {
        Psl2::from_mat_unchecked(self.mat.to_f64())
    }
}

pub fn mul<S: Scalar>(g: &Psl2<S>, h: &Psl2<S>) -> Psl2<S> {
    Psl2::from_mat_unchecked(g.mat().mul(h.mat()))
}

pub fn inverse<S: Scalar>(g: &Psl2<S>) -> Psl2<S> {
    Psl2::from_mat_unchecked(g.mat().inverse())
}

/// h g h^{-1}.
pub fn conjugate<S: Scalar>(g: &Psl2<S>, h: &Psl2<S>) -> Psl2<S> {
    Psl2::from_mat_unchecked(h.mat().mul(g.mat()).mul(&h.mat().inverse()))
}

/// Conjugation by the determinant -1 involution [[0,1],[1,0]]; swaps the
/// parabolic sign classes and negates lift levels.
pub fn pgl_conjugate<S: Scalar>(g: &Psl2<S>) -> Psl2<S> {
    let m = g.mat();
    Psl2::from_mat_unchecked(Mat2::new(m.d.clone(), m.c.clone(), m.b.clone(), m.a.clone()))
}

pub fn classify<S: Scalar>(g: &Psl2<S>) -> ElementClass {
    if g.is_identity() {
        return ElementClass::Identity;
    }
    let t = g.trace_abs().sub(&S::from_int(2));
    match t.sign_eps() {
        1 => ElementClass::Hyperbolic,
        -1 => ElementClass::Elliptic,
        _ => {
            let rep = g.trace_pos_rep();
            let s = match rep.b.sign_eps() {
                0 => -rep.c.sign_eps(),
                s => s,
            };
            if s >= 0 {
                ElementClass::ParabolicPos
            } else {
                ElementClass::ParabolicNeg
            }
        }
    }
}

/// Classification plus a near-parabolic warning: |(|tr| - 2)| inside the
/// band (EPS, 10 EPS] where a float classification is unreliable.
pub fn classify_with_warning<S: Scalar>(g: &Psl2<S>) -> (ElementClass, bool) {
    let class = classify(g);
    if S::EXACT {
        return (class, false);
    }
    let gap = (g.trace_abs().to_f64() - 2.0).abs();
    (class, gap > EPS && gap <= WARN_BAND * EPS)
}

/// A direction on the boundary circle RP^1, canonically in [0, pi).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Angle(pub f64);

impl Angle {
    pub fn reduce(x: f64) -> Angle {
        let mut r = x.rem_euclid(std::f64::consts::PI);
        if r >= std::f64::consts::PI {
            r -= std::f64::consts::PI;
        }
        Angle(r)
    }
}

/// Direction vector representing a point of RP^1. Canonical form: y > 0,
/// or y = 0 and x > 0 (the direction of angle zero).
#[derive(Clone, Debug, PartialEq)]
pub struct Dir<S: Scalar> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Dir<S> {
    pub fn zero_dir() -> Self {
        Dir {
            x: S::one(),
            y: S::zero(),
        }
    }

    pub fn canonical(x: S, y: S) -> Self {
        let (mut x, mut y) = (x, y);
        if !S::EXACT {
            // keep float magnitudes O(1) so sign tests stay meaningful
            let m = f64::max(x.to_f64().abs(), y.to_f64().abs());
            if m > 0.0 && m.is_finite() {
                let s = S::from_f64(1.0 / m);
                x = x.mul(&s);
                y = y.mul(&s);
            }
        }
        match y.sign_eps() {
            -1 => Dir { x: x.neg(), y: y.neg() },
            0 => Dir {
                x: x.abs(),
                y: S::zero(),
            },
            _ => Dir { x, y },
        }
    }

    pub fn is_zero_dir(&self) -> bool {
        self.y.sign_eps() == 0
    }

    /// Angle in [0, pi) of the direction, as a float.
    pub fn angle(&self) -> Angle {
        if self.is_zero_dir() {
            Angle(0.0)
        } else {
            Angle::reduce(self.y.to_f64().atan2(self.x.to_f64()))
        }
    }
}

/// Sign of ang(v) - ang(w) on [0, pi): negative when v precedes w.
pub fn cmp_dirs<S: Scalar>(v: &Dir<S>, w: &Dir<S>) -> i8 {
    // ang(v) < ang(w)  <=>  x_v y_w - x_w y_v > 0
    let cross = v.x.mul(&w.y).sub(&w.x.mul(&v.y));
    -cross.sign_eps()
}

/// The matrix implementing the circle action in the direction coordinate:
/// conjugate of the canonical representative by diag(1, -1).
pub(crate) fn action_matrix<S: Scalar>(g: &Psl2<S>) -> Mat2<S> {
    let m = g.mat();
    Mat2::new(m.a.clone(), m.b.neg(), m.c.neg(), m.d.clone())
}

/// Image of a direction under the circle action of g.
pub fn act_dir<S: Scalar>(g: &Psl2<S>, v: &Dir<S>) -> Dir<S> {
    let m = action_matrix(g);
    Dir::canonical(
        m.a.mul(&v.x).add(&m.b.mul(&v.y)),
        m.c.mul(&v.x).add(&m.d.mul(&v.y)),
    )
}

/// Image of the zero direction, i.e. the mod-pi residue of f(0) for any
/// lift f of the circle map of g.
pub fn zero_dir_image<S: Scalar>(g: &Psl2<S>) -> Dir<S> {
    act_dir(g, &Dir::zero_dir())
}

/// The induced orientation-preserving action on direction angles,
/// returned canonically in [0, pi). Strictly increasing as a circle map
/// and pi-periodic in x.
pub fn angle_action<S: Scalar>(g: &Psl2<S>, x: f64) -> f64 {
    let v = Dir::canonical(S::from_f64(x.cos()), S::from_f64(x.sin()));
    act_dir(g, &v).angle().0
}

/// Directions fixed by g: two for hyperbolic, one for parabolic, none for
/// elliptic. Errors on the central element, which fixes every direction.
pub fn fixed_directions<S: Scalar>(g: &Psl2<S>) -> Result<Vec<Angle>> {
    if g.is_identity() {
        return Err(Error::CentralElement);
    }
    let m = g.mat().to_f64();
    // q(t) = -c + (d - a) t + b t^2 vanishes at slopes t = y/x of fixed
    // directions; the direction (0, 1) is fixed exactly when b = 0.
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    let mut out = Vec::new();
    if b.abs() <= EPS {
        out.push(Angle(std::f64::consts::FRAC_PI_2));
        if (d - a).abs() > EPS {
            out.push(Angle::reduce((c / (d - a)).atan()));
        }
    } else {
        let disc = (a + d) * (a + d) - 4.0;
        if disc < -EPS {
            return Ok(Vec::new());
        }
        let disc = disc.max(0.0);
        let r = disc.sqrt();
        let t1 = (-(d - a) + r) / (2.0 * b);
        let t2 = (-(d - a) - r) / (2.0 * b);
        out.push(Angle::reduce(t1.atan()));
        if disc > EPS {
            out.push(Angle::reduce(t2.atan()));
        }
    }
    out.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    out.dedup_by(|p, q| (p.0 - q.0).abs() <= 1e-12);
    Ok(out)
}

/// kappa(x, y, z) = x^2 + y^2 + z^2 - xyz - 2, the commutator-trace
/// polynomial of the character map.
pub fn kappa<S: Scalar>(x: &S, y: &S, z: &S) -> S {
    x.mul(x)
        .add(&y.mul(y))
        .add(&z.mul(z))
        .sub(&x.mul(y).mul(z))
        .sub(&S::from_int(2))
}

/// Character of an SL(2,R) pair: (tr A, tr B, tr AB).
pub fn char_of_pair<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> (S, S, S) {
    (a.trace(), b.trace(), a.mul(b).trace())
}

/// Whether the pair preserves a common direction of R^2. For pairs whose
/// projections are non-elliptic this is the kappa = 2 criterion; an
/// elliptic member fixes no direction, so such pairs are never reducible.
pub fn is_reducible_pair<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> bool {
    let (pa, pb) = (
        Psl2::from_mat_unchecked(a.clone()),
        Psl2::from_mat_unchecked(b.clone()),
    );
    if classify(&pa) == ElementClass::Elliptic || classify(&pb) == ElementClass::Elliptic {
        return false;
    }
    let (x, y, z) = char_of_pair(a, b);
    kappa(&x, &y, &z).eq_eps(&S::from_int(2))
}

/// Unit eigenvectors (attracting, repelling) of a hyperbolic f64 element.
pub(crate) fn hyperbolic_frame(g: &Psl2<f64>) -> ([f64; 2], [f64; 2]) {
    let m = g.trace_pos_rep();
    let t = m.trace();
    let r = (t * t - 4.0).max(0.0).sqrt();
    let lam = (t + r) / 2.0;
    let vec_for = |l: f64| -> [f64; 2] {
        // rows of (M - l I) are orthogonal to the eigenvector
        let v1 = [m.b, l - m.a];
        let v2 = [l - m.d, m.c];
        let n1 = v1[0] * v1[0] + v1[1] * v1[1];
        let n2 = v2[0] * v2[0] + v2[1] * v2[1];
        let v = if n1 >= n2 { v1 } else { v2 };
        let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
        [v[0] / n, v[1] / n]
    };
    (vec_for(lam), vec_for(1.0 / lam))
}

/// Rotation matrix sending the vector v to the positive x-axis.
pub(crate) fn rotation_to_e1(v: [f64; 2]) -> Mat2<f64> {
    let th = v[1].atan2(v[0]);
    Mat2::new(th.cos(), th.sin(), -th.sin(), th.cos())
}

/// Matrix eigenvector of a parabolic element (eigenvalue 1 of the
/// trace-positive representative).
pub(crate) fn parabolic_eigvec(g: &Psl2<f64>) -> [f64; 2] {
    let m = g.trace_pos_rep();
    let v1 = [m.b, 1.0 - m.a];
    let v2 = [1.0 - m.d, m.c];
    let n1 = v1[0] * v1[0] + v1[1] * v1[1];
    let n2 = v2[0] * v2[0] + v2[1] * v2[1];
    let v = if n1 >= n2 { v1 } else { v2 };
    let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
    [v[0] / n, v[1] / n]
}

/// Trace of the SL(2,R) representative of an elliptic element with
/// positive upper-right entry. Distinguishes the two rotation senses.
pub fn elliptic_sense_trace(g: &Psl2<f64>) -> f64 {
    let m = g.mat();
    if m.b > 0.0 {
        m.trace()
    } else {
        -m.trace()
    }
}

/// Finds k in PSL(2,R) with k g k^{-1} = h. Requires g and h conjugate:
/// same class, same |trace| (and rotation sense for elliptics).
pub fn conjugator_matching(g: &Psl2<f64>, h: &Psl2<f64>) -> Result<Psl2<f64>> {
    let (cg, ch) = (classify(g), classify(h));
    if cg != ch {
        return Err(Error::NoConjugator(format!(
            "class mismatch: {} vs {}",
            cg.name(),
            ch.name()
        )));
    }
    let k = match cg {
        ElementClass::Identity => Psl2::identity(),
        ElementClass::Hyperbolic => {
            if !g.trace_abs().eq_eps(&h.trace_abs()) {
                return Err(Error::NoConjugator(format!(
                    "trace mismatch: {} vs {}",
                    g.trace_abs(),
                    h.trace_abs()
                )));
            }
            let (gp, gm) = hyperbolic_frame(g);
            let (hp, hm) = hyperbolic_frame(h);
            let fg = Mat2::new(gp[0], gm[0], gp[1], gm[1]);
            let mut fh = Mat2::new(hp[0], hm[0], hp[1], hm[1]);
            if fg.det() * fh.det() < 0.0 {
                fh = Mat2::new(-fh.a, fh.b, -fh.c, fh.d);
            }
            let k0 = fh.mul(&fg.inverse());
            let s = k0.det().abs().sqrt();
            Psl2::from_mat_unchecked(Mat2::new(k0.a / s, k0.b / s, k0.c / s, k0.d / s))
        }
        ElementClass::ParabolicPos | ElementClass::ParabolicNeg => {
            let nf = |e: &Psl2<f64>| -> (Mat2<f64>, f64) {
                let r = rotation_to_e1(parabolic_eigvec(e));
                let n = r.mul(&e.trace_pos_rep()).mul(&r.inverse());
                (r, n.b)
            };
            let (rg, tg) = nf(g);
            let (rh, th) = nf(h);
            let ratio = th / tg;
            if ratio <= 0.0 {
                return Err(Error::NoConjugator("parabolic sign mismatch".into()));
            }
            let u = ratio.sqrt();
            let s = Mat2::new(u, 0.0, 0.0, 1.0 / u);
            Psl2::from_mat_unchecked(rh.inverse().mul(&s).mul(&rg))
        }
        ElementClass::Elliptic => {
            if !elliptic_sense_trace(g).eq_eps(&elliptic_sense_trace(h)) {
                return Err(Error::NoConjugator(
                    "elliptic rotation class mismatch (angle or sense)".into(),
                ));
            }
            let transport = |e: &Psl2<f64>| -> Mat2<f64> {
                let m = e.mat();
                // fixed point x0 + i y0 of the Moebius action in H^2
                let x0 = (m.a - m.d) / (2.0 * m.c);
                let y0 = (4.0 - m.trace() * m.trace()).max(0.0).sqrt() / (2.0 * m.c.abs());
                let s = y0.sqrt();
                Mat2::new(s, x0 / s, 0.0, 1.0 / s)
            };
            let (tg, th) = (transport(g), transport(h));
            Psl2::from_mat_unchecked(th.mul(&tg.inverse()))
        }
    };
    let check = conjugate(g, &k);
    if check.mat().dist(h.mat()) > 1e-6 {
        return Err(Error::NoConjugator(format!(
            "residual {:.3e} after frame matching",
            check.mat().dist(h.mat())
        )));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::random_psl2;
    use crate::scalar::Rat;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn par_pos() -> Psl2<f64> {
        Psl2::from_ints(1, 1, 0, 1).unwrap()
    }
    fn par_neg() -> Psl2<f64> {
        Psl2::from_ints(1, 0, 1, 1).unwrap()
    }
    fn diag2() -> Psl2<f64> {
        Psl2::from_ratios((2, 1), (0, 1), (0, 1), (1, 2)).unwrap()
    }
    fn rot90() -> Psl2<f64> {
        Psl2::from_ints(0, 1, -1, 0).unwrap()
    }

    #[test]
    fn classify_explicit_examples() {
        assert_eq!(classify(&diag2()), ElementClass::Hyperbolic);
        assert_eq!(classify(&par_pos()), ElementClass::ParabolicPos);
        assert_eq!(classify(&par_neg()), ElementClass::ParabolicNeg);
        assert_eq!(classify(&rot90()), ElementClass::Elliptic);
        assert_eq!(classify(&Psl2::<f64>::identity()), ElementClass::Identity);
        // same over exact rationals
        let p: Psl2<Rat> = Psl2::from_ints(1, 1, 0, 1).unwrap();
        assert_eq!(classify(&p), ElementClass::ParabolicPos);
        let h: Psl2<Rat> = Psl2::from_ratios((2, 1), (0, 1), (0, 1), (1, 2)).unwrap();
        assert_eq!(classify(&h), ElementClass::Hyperbolic);
    }

    #[test]
    fn canonical_sign_idempotent() {
        let g: Psl2<f64> = Psl2::from_ints(-1, 2, -2, 3).unwrap();
        assert!(g.mat().a > 0.0);
        let h = Psl2::new(g.mat().neg()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn group_ops() {
        let g: Psl2<f64> = Psl2::from_ints(2, 1, 1, 1).unwrap();
        assert!(mul(&g, &inverse(&g)).is_identity());
        assert_eq!(conjugate(&g, &Psl2::identity()), g);
        let prod = mul(&par_pos(), &par_neg());
        assert_eq!(prod, Psl2::from_ints(2, 1, 1, 1).unwrap());
    }

    #[test]
    fn fixed_directions_examples() {
        let d = fixed_directions(&diag2()).unwrap();
        assert_eq!(d.len(), 2);
        assert_abs_diff_eq!(d[0].0, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d[1].0, std::f64::consts::FRAC_PI_2, epsilon = 1e-12);
        let p = fixed_directions(&par_pos()).unwrap();
        assert_eq!(p.len(), 1);
        assert_abs_diff_eq!(p[0].0, 0.0, epsilon = 1e-12);
        assert!(fixed_directions(&rot90()).unwrap().is_empty());
        assert!(matches!(
            fixed_directions(&Psl2::<f64>::identity()),
            Err(Error::CentralElement)
        ));
    }

    #[test]
    fn angle_action_examples() {
        let x = 1.1;
        assert_abs_diff_eq!(angle_action(&Psl2::<f64>::identity(), x), x, epsilon = 1e-12);
        let got = angle_action(&diag2(), std::f64::consts::FRAC_PI_4);
        assert_abs_diff_eq!(got, 0.25f64.atan(), epsilon = 1e-12);
        // fixed directions stay fixed
        for ang in fixed_directions(&diag2()).unwrap() {
            assert_abs_diff_eq!(angle_action(&diag2(), ang.0), ang.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn angle_action_increasing_and_periodic() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let steps = 4096;
        for _ in 0..50 {
            let g = random_psl2(&mut rng);
            let mut prev = f64::NEG_INFINITY;
            let mut lifted = 0.0;
            let mut last_raw = angle_action(&g, 0.0);
            for k in 1..=steps {
                let x = k as f64 * std::f64::consts::PI / steps as f64;
                let raw = angle_action(&g, x);
                let mut step = raw - last_raw;
                while step < -std::f64::consts::FRAC_PI_2 {
                    step += std::f64::consts::PI;
                }
                assert!(step < std::f64::consts::FRAC_PI_2, "subdivision too coarse");
                lifted += step;
                last_raw = raw;
                assert!(lifted > prev, "circle map not increasing");
                prev = lifted;
            }
            // period pi as a lifted map: total increase over [0, pi) is pi
            assert_abs_diff_eq!(lifted, std::f64::consts::PI, epsilon = 1e-6);
        }
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa(&2.0, &2.0, &2.0), 2.0);
        assert_eq!(kappa(&2.0, &2.0, &-2.0), 18.0);
        assert_eq!(kappa(&3.0, &3.0, &3.0), -2.0);
        let k: Rat = kappa(&Rat::from_int(2), &Rat::from_int(2), &Rat::from_int(-2));
        assert_eq!(k, Rat::from_int(18));
    }

    #[test]
    fn char_of_pair_examples() {
        let i = Mat2::<f64>::identity();
        assert_eq!(char_of_pair(&i, &i), (2.0, 2.0, 2.0));
        let a = Mat2::<Rat>::from_ints(3, -2, 2, -1);
        let b = Mat2::<Rat>::from_ints(1, 0, 2, 1);
        let (x, y, z) = char_of_pair(&a, &b);
        assert_eq!(
            (x, y, z),
            (Rat::from_int(2), Rat::from_int(2), Rat::from_int(-2))
        );
    }

    #[test]
    fn kappa_equals_commutator_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let a = random_psl2(&mut rng);
            let b = random_psl2(&mut rng);
            let (x, y, z) = char_of_pair(a.mat(), b.mat());
            let comm = a
                .mat()
                .mul(b.mat())
                .mul(&a.mat().inverse())
                .mul(&b.mat().inverse());
            assert_abs_diff_eq!(kappa(&x, &y, &z), comm.trace(), epsilon = 1e-9);
        }
    }

    #[test]
    fn reducibility_examples() {
        let up1 = Mat2::<f64>::from_ints(1, 3, 0, 1);
        let up2 = Mat2::<f64>::from_ratios((2, 1), (1, 1), (0, 1), (1, 2));
        assert!(is_reducible_pair(&up1, &up2));
        let a = Mat2::<Rat>::from_ints(3, -2, 2, -1);
        let b = Mat2::<Rat>::from_ints(1, 0, 2, 1);
        assert!(!is_reducible_pair(&a, &b));
        let g = Mat2::<f64>::from_ints(2, 1, 1, 1);
        assert!(is_reducible_pair(&g, &g.inverse()));
    }

    #[test]
    fn classification_conjugation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let g = random_psl2(&mut rng);
            let h = random_psl2(&mut rng);
            assert_eq!(classify(&g), classify(&conjugate(&g, &h)));
        }
    }

    #[test]
    fn parabolic_sign_flips_under_pgl() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..500 {
            let h = random_psl2(&mut rng);
            let p = conjugate(&par_pos(), &h);
            assert_eq!(classify(&p), ElementClass::ParabolicPos);
            assert_eq!(classify(&pgl_conjugate(&p)), ElementClass::ParabolicNeg);
        }
    }

    #[test]
    fn conjugator_matching_cases() {
        let g = diag2();
        let k = conjugator_matching(&g, &g).unwrap();
        assert_eq!(conjugate(&g, &k), g);

        let h = conjugate(&g, &par_pos());
        let k = conjugator_matching(&g, &h).unwrap();
        assert_eq!(conjugate(&g, &k), h);

        let other = Psl2::from_ratios((3, 1), (0, 1), (0, 1), (1, 3)).unwrap();
        assert!(conjugator_matching(&g, &other).is_err());

        // parabolic with matching sign, generic conjugators
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let p = conjugate(&par_pos(), &random_psl2(&mut rng));
            let q = conjugate(&par_pos(), &random_psl2(&mut rng));
            let k = conjugator_matching(&p, &q).unwrap();
            assert_eq!(conjugate(&p, &k), q);
        }
        assert!(conjugator_matching(&par_pos(), &par_neg()).is_err());

        // elliptic: same rotation class works, opposite sense fails
        let r = rot90();
        let rc = conjugate(&r, &diag2());
        let k = conjugator_matching(&r, &rc).unwrap();
        assert_eq!(conjugate(&r, &k), rc);
        let third = Psl2::new(Mat2::new(
            (std::f64::consts::FRAC_PI_3).cos(),
            (std::f64::consts::FRAC_PI_3).sin(),
            -(std::f64::consts::FRAC_PI_3).sin(),
            (std::f64::consts::FRAC_PI_3).cos(),
        ))
        .unwrap();
        let third_rev = inverse(&third);
        assert!(conjugator_matching(&third, &third_rev).is_err());
    }
}
