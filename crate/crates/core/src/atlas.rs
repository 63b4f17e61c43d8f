//! Witness constructions: an explicit representation inside every non-empty
//! component, built by solving pants fibers along the almost-path
//! decomposition and attaching torus handles through the lifted commutator.

use crate::components::{is_exceptional, is_nonempty, mw_bounds};
use crate::cover::{
    classify_lifted, ev_commutator, ev_product, inv_lifted, lift_canonical_hyp0, mul_lifted,
    trace_lifted, z_power, LiftRule, LiftedClass, LiftedElement,
};
use crate::error::{Error, Result};
use crate::mobius::{
    self, classify, conjugate, conjugator_matching, kappa, pgl_conjugate, ElementClass, Mat2, Psl2,
};
use crate::scalar::Scalar;
use crate::surface::{component_of, pgl_flip, Representation, SignVector, SurfaceSig};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Default |trace| of interior decomposition-curve images.
pub const DEFAULT_TAU: f64 = 3.0;

/// Specification of a component to construct a witness in.
#[derive(Clone, Debug)]
pub struct ComponentSpec {
    pub sig: SurfaceSig,
    pub n: i64,
    pub s: SignVector,
    /// |trace| target for interior decomposition curves.
    pub tau: f64,
}

impl ComponentSpec {
    pub fn new(sig: SurfaceSig, n: i64, s: SignVector) -> Result<Self> {
        if s.0.len() != sig.punctures {
            return Err(Error::Parse(format!(
                "sign vector length {} does not match p = {}",
                s.0.len(),
                sig.punctures
            )));
        }
        Ok(ComponentSpec {
            sig,
            n,
            s,
            tau: DEFAULT_TAU,
        })
    }
}

/// How a witness was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Glued,
    AbelianExceptional,
    TnhExceptional,
    ChiOneExplicit,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Glued => "glued",
            Construction::AbelianExceptional => "abelian-exceptional",
            Construction::TnhExceptional => "tnh-exceptional",
            Construction::ChiOneExplicit => "chi-1-explicit",
        }
    }
}

/// Per-piece Euler classes distributed over the decomposition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EulerAllocation {
    pub pants: Vec<i64>,
    pub tori: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub rep: Representation<f64>,
    pub construction: Construction,
    pub allocation: Option<EulerAllocation>,
}

/// Constructs an SL(2,R) pair with character (x, y, z): trace x, trace y and
/// product trace z. The first matrix is the companion form [[x,-1],[1,0]];
/// the second solves a quadratic whose discriminant is maximized over the
/// free diagonal entry when the easy branch fails.
pub fn fricke_pair(x: f64, y: f64, z: f64) -> Result<(Mat2<f64>, Mat2<f64>)> {
    let a = Mat2::new(x, -1.0, 1.0, 0.0);
    // B = [[t, z - x t + beta], [beta, y - t]] with det = 1:
    // beta^2 + beta (z - x t) - t (y - t) + 1 = 0
    let disc = |t: f64| (z - x * t) * (z - x * t) + 4.0 * t * (y - t) - 4.0;
    let mut t = 0.0;
    if disc(t) < 0.0 {
        // discriminant is the quadratic (x^2-4) t^2 + (4y - 2xz) t + z^2 - 4
        let qa = x * x - 4.0;
        let qb = 4.0 * y - 2.0 * x * z;
        if qa.abs() > 1e-12 {
            if qa > 0.0 {
                // opens upward: move past the larger root
                let r = (qb * qb - 4.0 * qa * (z * z - 4.0)).max(0.0).sqrt();
                t = (-qb + r) / (2.0 * qa) + 1.0;
            } else {
                t = -qb / (2.0 * qa);
            }
        } else if qb.abs() > 1e-12 {
            t = (1.0 - (z * z - 4.0)) / qb;
        }
    }
    let d = disc(t);
    if d < 0.0 {
        return Err(Error::Construction(format!(
            "character ({x}, {y}, {z}) is not realizable by an SL(2,R) pair"
        )));
    }
    let beta = (-(z - x * t) - d.sqrt()) / 2.0;
    let b = Mat2::new(t, z - x * t + beta, beta, y - t);
    let (cx, cy, cz) = mobius::char_of_pair(&a, &b);
    if (cx - x).abs() > 1e-9 || (cy - y).abs() > 1e-9 || (cz - z).abs() > 1e-9 {
        return Err(Error::Construction(format!(
            "character solve drifted: got ({cx}, {cy}, {cz}), wanted ({x}, {y}, {z})"
        )));
    }
    Ok((a, b))
}

/// Conjugacy-class prescription for one pants boundary slot.
#[derive(Clone, Copy, Debug)]
enum SlotClass {
    Par(i8),
    Hyp(f64),
}

impl SlotClass {
    fn sign(self) -> i8 {
        match self {
            SlotClass::Par(s) => s,
            SlotClass::Hyp(_) => 0,
        }
    }

    fn flip(self) -> SlotClass {
        match self {
            SlotClass::Par(s) => SlotClass::Par(-s),
            SlotClass::Hyp(t) => SlotClass::Hyp(t),
        }
    }

    fn matches(self, g: &Psl2<f64>) -> bool {
        match self {
            SlotClass::Par(s) => {
                classify(g)
                    == if s > 0 {
                        ElementClass::ParabolicPos
                    } else {
                        ElementClass::ParabolicNeg
                    }
            }
            SlotClass::Hyp(t) => {
                classify(g) == ElementClass::Hyperbolic && (g.trace_abs() - t).abs() < 1e-8
            }
        }
    }
}

/// Required component of the lifted product of the two canonical lifts.
#[derive(Clone, Copy, Debug)]
enum ProductTarget {
    HypLevel { m: i64, trace_abs: f64 },
    ParLevel { m: i64, sign: i8 },
}

impl ProductTarget {
    fn flip(self) -> ProductTarget {
        match self {
            ProductTarget::HypLevel { m, trace_abs } => {
                ProductTarget::HypLevel { m: -m, trace_abs }
            }
            ProductTarget::ParLevel { m, sign } => ProductTarget::ParLevel { m: -m, sign: -sign },
        }
    }

    /// Signed SL(2,R) trace of elements in the target component.
    fn signed_trace(self) -> f64 {
        let (m, a) = match self {
            ProductTarget::HypLevel { m, trace_abs } => (m, trace_abs),
            ProductTarget::ParLevel { m, .. } => (m, 2.0),
        };
        if m.rem_euclid(2) == 0 {
            a
        } else {
            -a
        }
    }

    fn matches(self, class: LiftedClass, trace: f64) -> bool {
        match self {
            ProductTarget::HypLevel { m, .. } => {
                class == LiftedClass::Hyp(m) && (trace - self.signed_trace()).abs() < 1e-8
            }
            ProductTarget::ParLevel { m, sign } => {
                class
                    == if sign > 0 {
                        LiftedClass::ParPos(m)
                    } else {
                        LiftedClass::ParNeg(m)
                    }
            }
        }
    }
}

fn par_matrix(s: i8) -> Psl2<f64> {
    Psl2::from_mat_unchecked(Mat2::new(1.0, s as f64, 0.0, 1.0))
}

fn frobenius(m: &Mat2<f64>) -> f64 {
    (m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d).sqrt()
}

/// Minimizes `cost` over the centralizer twist parameter of `center`
/// composed with k0: coarse grid scan followed by golden-section
/// refinement. The cost must be coercive in the twist.
fn minimize_twist(
    k0: &Psl2<f64>,
    center: &Psl2<f64>,
    cost: &dyn Fn(&Psl2<f64>) -> f64,
) -> Psl2<f64> {
    let at = |u: f64| mobius::mul(k0, &centralizer_element(center, u));
    let mut best_u = 0.0;
    let mut best = cost(&at(0.0));
    let mut u = -12.0;
    while u <= 12.0 {
        let c = cost(&at(u));
        if c < best {
            best = c;
            best_u = u;
        }
        u += 0.5;
    }
    let (mut lo, mut hi) = (best_u - 0.5, best_u + 0.5);
    let phi = 0.618_033_988_749_894_9f64;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (cost(&at(x1)), cost(&at(x2)));
    for _ in 0..40 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = cost(&at(x1));
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = cost(&at(x2));
        }
    }
    at(if f1 < f2 { x1 } else { x2 })
}

/// Replaces the conjugator k0 by k0 c, with c in the centralizer of
/// `center`, minimizing the Frobenius norm (hence the condition number) of
/// the conjugator itself.
fn balanced_conjugator(k0: &Psl2<f64>, center: &Psl2<f64>) -> Psl2<f64> {
    minimize_twist(k0, center, &|k| frobenius(k.mat()))
}

/// Conjugator balance for the chain walk: keeps the next chain value
/// small while the conjugator-norm term keeps the twist away from the
/// degenerate limits.
fn chain_balanced_conjugator(
    k0: &Psl2<f64>,
    center: &Psl2<f64>,
    chain_value: &Psl2<f64>,
    payload: &Psl2<f64>,
) -> Psl2<f64> {
    minimize_twist(k0, center, &|k| {
        let b = conjugate(payload, k);
        frobenius(mobius::mul(chain_value, &b).mat()) + frobenius(k.mat())
    })
}

fn diag_of_trace(t: f64) -> Psl2<f64> {
    let lam = ((t + (t * t - 4.0).sqrt()) / 2.0).ln();
    Psl2::from_mat_unchecked(Mat2::new(lam.exp(), 0.0, 0.0, (-lam).exp()))
}

fn lower_shear(t: f64) -> Psl2<f64> {
    Psl2::from_mat_unchecked(Mat2::new(1.0, 0.0, t, 1.0))
}

/// One attempt at the model pair: solve the family parameter against the
/// target's signed trace, then check the classification.
fn try_model(
    class_a: SlotClass,
    class_b: SlotClass,
    target: ProductTarget,
) -> Result<Option<(Psl2<f64>, Psl2<f64>)>> {
    let t_signed = target.signed_trace();
    let pair = match (class_a, class_b) {
        (SlotClass::Par(s1), SlotClass::Par(s2)) => {
            // product SL trace along the family: 2 - s1 s2 t^2
            let ratio = (2.0 - t_signed) / (s1 as f64 * s2 as f64);
            if ratio < 0.0 {
                return Ok(None);
            }
            let t = ratio.sqrt();
            (par_matrix(s1), conjugate(&par_matrix(s2), &lower_shear(t)))
        }
        (SlotClass::Par(s1), SlotClass::Hyp(tb)) => {
            // product SL trace: 2 cosh(eta) - 2 s1 t sinh(eta)
            let eta = ((tb + (tb * tb - 4.0).sqrt()) / 2.0).ln();
            let t = (2.0 * eta.cosh() - t_signed) / (2.0 * s1 as f64 * eta.sinh());
            (
                conjugate(&par_matrix(s1), &lower_shear(t)),
                diag_of_trace(tb),
            )
        }
        (SlotClass::Hyp(ta), SlotClass::Par(s2)) => {
            let lam = ((ta + (ta * ta - 4.0).sqrt()) / 2.0).ln();
            let t = (2.0 * lam.cosh() - t_signed) / (2.0 * s2 as f64 * lam.sinh());
            (
                diag_of_trace(ta),
                conjugate(&par_matrix(s2), &lower_shear(t)),
            )
        }
        (SlotClass::Hyp(ta), SlotClass::Hyp(tb)) => {
            // product SL trace: 2 cosh(lam - eta) + 4 P sinh(lam) sinh(eta)
            let lam = ((ta + (ta * ta - 4.0).sqrt()) / 2.0).ln();
            let eta = ((tb + (tb * tb - 4.0).sqrt()) / 2.0).ln();
            let p = (t_signed - 2.0 * (lam - eta).cosh()) / (4.0 * lam.sinh() * eta.sinh());
            let k = Psl2::from_mat_unchecked(Mat2::new(p, p - 1.0, 1.0, 1.0));
            (diag_of_trace(ta), conjugate(&diag_of_trace(tb), &k))
        }
    };
    let lifted = ev_product(&pair.0, &pair.1, LiftRule::Hyp0)?;
    let class = classify_lifted(&lifted)?;
    let trace = trace_lifted(&lifted)?;
    if target.matches(class, trace) && class_a.matches(&pair.0) && class_b.matches(&pair.1) {
        Ok(Some(pair))
    } else {
        Ok(None)
    }
}

/// Model pants pair with prescribed boundary classes and lifted-product
/// component; falls back to the orientation-mirrored family when the direct
/// one lands in the opposite level.
fn model_pair(
    class_a: SlotClass,
    class_b: SlotClass,
    target: ProductTarget,
) -> Result<(Psl2<f64>, Psl2<f64>)> {
    if let Some(pair) = try_model(class_a, class_b, target)? {
        return Ok(pair);
    }
    if let Some((g1, g2)) = try_model(class_a.flip(), class_b.flip(), target.flip())? {
        let pair = (pgl_conjugate(&g1), pgl_conjugate(&g2));
        let lifted = ev_product(&pair.0, &pair.1, LiftRule::Hyp0)?;
        if target.matches(classify_lifted(&lifted)?, trace_lifted(&lifted)?) {
            return Ok(pair);
        }
    }
    Err(Error::Construction(format!(
        "no model pants pair for ({class_a:?}, {class_b:?}) -> {target:?}"
    )))
}

/// A three-hole-sphere representation with peripheral signs (s1, s2, 0),
/// Euler class m, and lifted product of the first two canonical lifts equal
/// to `target` (which must lie in Hyp_m). Zero signs request hyperbolic
/// peripherals of the default trace.
pub fn pants_rep_with_boundary(
    s1: i8,
    s2: i8,
    m: i64,
    target: &LiftedElement<f64>,
) -> Result<Representation<f64>> {
    let class = classify_lifted(target)?;
    if class != LiftedClass::Hyp(m) {
        return Err(Error::ClassMismatch {
            expected: "target in Hyp_m",
            found: class.kind_name(),
        });
    }
    let trace_abs = trace_lifted(target)?.abs();
    let to_class = |s: i8| {
        if s == 0 {
            SlotClass::Hyp(DEFAULT_TAU)
        } else {
            SlotClass::Par(s)
        }
    };
    let (g1, g2) = model_pair(
        to_class(s1),
        to_class(s2),
        ProductTarget::HypLevel { m, trace_abs },
    )?;
    let prod = ev_product(&g1, &g2, LiftRule::Hyp0)?;
    let k = conjugator_matching(prod.base(), target.base())?;
    let c1 = conjugate(&g1, &k);
    let c2 = conjugate(&g2, &k);
    let achieved = ev_product(&c1, &c2, LiftRule::Hyp0)?;
    if achieved != *target {
        return Err(Error::Construction(
            "pants fiber solve missed the target lift".into(),
        ));
    }
    let c3 = mobius::inverse(&mobius::mul(&c1, &c2));
    Representation::new(SurfaceSig::new(0, 3)?, vec![], vec![], vec![c1, c2, c3])
}

/// A PSL(2,R) pair whose lifted commutator equals `target`, which must lie
/// in Hyp_m for m in {-1, 0, 1}.
pub fn torus_pair_with_commutator(target: &LiftedElement<f64>) -> Result<(Psl2<f64>, Psl2<f64>)> {
    let class = classify_lifted(target)?;
    let m = match class {
        LiftedClass::Hyp(m) if (-1..=1).contains(&m) => m,
        other => {
            return Err(Error::ClassMismatch {
                expected: "target in Hyp_{-1}, Hyp_0 or Hyp_1",
                found: other.kind_name(),
            })
        }
    };
    let tau = trace_lifted(target)?.abs();
    let (ma, mb) = if m == 0 {
        fricke_pair(0.0, 0.0, (tau + 2.0).sqrt())?
    } else {
        // kappa(w, w, w) = 3w^2 - w^3 - 2 decreases monotonically past w = 2;
        // bisect for kappa = -tau
        let mut lo = 2.0f64;
        let mut hi = 4.0f64;
        while kappa(&hi, &hi, &hi) > -tau {
            hi *= 2.0;
        }
        while hi - lo > 1e-12 {
            let mid = (lo + hi) / 2.0;
            if kappa(&mid, &mid, &mid) > -tau {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        fricke_pair(lo, lo, lo)?
    };
    let mut a = Psl2::new(ma)?;
    let mut b = Psl2::new(mb)?;
    let mut comm = ev_commutator(&a, &b);
    if classify_lifted(&comm)? != LiftedClass::Hyp(m) {
        // swapping the pair inverts the lifted commutator and negates its level
        std::mem::swap(&mut a, &mut b);
        comm = ev_commutator(&a, &b);
    }
    if classify_lifted(&comm)? != LiftedClass::Hyp(m) {
        return Err(Error::Construction(format!(
            "commutator landed in {:?} instead of Hyp({m})",
            classify_lifted(&comm)?
        )));
    }
    let k0 = conjugator_matching(comm.base(), target.base())?;
    let k = balanced_conjugator(&k0, comm.base());
    let mut a = conjugate(&a, &k);
    let mut b = conjugate(&b, &k);
    shrink_commutator_pair(&mut a, &mut b);
    newton_refine_commutator(&mut a, &mut b, target.base());
    let achieved = ev_commutator(&a, &b);
    if achieved != *target {
        return Err(Error::Construction(
            "commutator fiber solve missed the target lift".into(),
        ));
    }
    Ok((a, b))
}

/// Nudges `moving` within its conjugacy class so that tr(prefix * moving)
/// equals `want` to machine precision. The correction is tiny (it repairs
/// accumulated rounding), so classes and lift bookkeeping are untouched.
fn conjugation_trace_refine(prefix: &Psl2<f64>, moving: &mut Psl2<f64>, want: f64) {
    const BASIS: [[f64; 4]; 3] = [
        [1.0, 0.0, 0.0, -1.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
    ];
    let trace_of = |m: &Psl2<f64>| {
        let t = prefix.mat().mul(m.mat()).trace();
        if (t - want).abs() <= (t + want).abs() {
            t
        } else {
            -t
        }
    };
    for _ in 0..2 {
        let err = trace_of(moving) - want;
        if err.abs() <= 1e-14 * want.abs().max(1.0) {
            return;
        }
        let h = 1e-6;
        let mut grad = [0.0f64; 3];
        for (k, e) in BASIS.iter().enumerate() {
            let bump = |s: f64| {
                let exp = Mat2::new(1.0 + s * h * e[0], s * h * e[1], s * h * e[2], 1.0 + s * h * e[3]);
                let inv = exp.inverse();
                Psl2::from_mat_unchecked(exp.mul(moving.mat()).mul(&inv))
            };
            grad[k] = (trace_of(&bump(1.0)) - trace_of(&bump(-1.0))) / (2.0 * h);
        }
        let norm2 = grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2];
        if norm2 < 1e-20 {
            return;
        }
        let step = -err / norm2;
        let xi = [grad[0] * step, grad[1] * step, grad[2] * step];
        let exp = Mat2::new(
            1.0 + xi[0] * BASIS[0][0] + xi[1] * BASIS[1][0] + xi[2] * BASIS[2][0],
            xi[0] * BASIS[0][1] + xi[1] * BASIS[1][1] + xi[2] * BASIS[2][1],
            xi[0] * BASIS[0][2] + xi[1] * BASIS[1][2] + xi[2] * BASIS[2][2],
            1.0 + xi[0] * BASIS[0][3] + xi[1] * BASIS[1][3] + xi[2] * BASIS[2][3],
        );
        let inv = exp.inverse();
        let candidate = Psl2::from_mat_unchecked(exp.mul(moving.mat()).mul(&inv));
        if (trace_of(&candidate) - want).abs() < err.abs() {
            *moving = candidate;
        } else {
            return;
        }
    }
}

/// Shrinks a commutator pair along the fiber directions that fix the
/// commutator exactly: right-multiplying a by centralizer elements of b and
/// conversely.
fn shrink_commutator_pair(a: &mut Psl2<f64>, b: &mut Psl2<f64>) {
    for _ in 0..3 {
        for side in 0..2 {
            let (moving, fixed) = if side == 0 {
                (&mut *a, &*b)
            } else {
                (&mut *b, &*a)
            };
            if classify(fixed) == ElementClass::Identity {
                continue;
            }
            let cost = |u: f64| -> f64 {
                frobenius(
                    mobius::mul(moving, &centralizer_element(fixed, u))
                        .mat(),
                )
            };
            let mut best_u = 0.0;
            let mut best = cost(0.0);
            let mut u = -6.0;
            while u <= 6.0 {
                let c = cost(u);
                if c < best {
                    best = c;
                    best_u = u;
                }
                u += 0.25;
            }
            if best_u != 0.0 {
                *moving = mobius::mul(moving, &centralizer_element(fixed, best_u));
            }
        }
    }
}

/// Least-squares Newton polish of (a, b) so that the commutator matches the
/// base matrix exactly; the correction is far below the component scale, so
/// the lifted class is untouched.
fn newton_refine_commutator(a: &mut Psl2<f64>, b: &mut Psl2<f64>, c: &Psl2<f64>) {
    const BASIS: [[f64; 4]; 3] = [
        [1.0, 0.0, 0.0, -1.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
    ];
    let comm = |x: &Psl2<f64>, y: &Psl2<f64>| {
        mobius::mul(&mobius::mul(x, y), &mobius::mul(&mobius::inverse(x), &mobius::inverse(y)))
    };
    let c_inv = mobius::inverse(c);
    let residual = |x: &Psl2<f64>, y: &Psl2<f64>| -> [f64; 3] {
        let m = mobius::mul(&comm(x, y), &c_inv).mat().clone();
        // signed deviation from +-I in traceless coordinates
        let sign = if m.trace() >= 0.0 { 1.0 } else { -1.0 };
        [sign * (m.a - m.d) / 2.0, sign * m.b, sign * m.c]
    };
    let scale = frobenius(c.mat());
    for it in 0..3 {
        let r = residual(a, b);
        let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if std::env::var("PSLREPS_TRACE").is_ok() {
            eprintln!("  newton it {it}: rn = {rn:.3e}");
        }
        if rn <= 1e-14 * scale.max(1.0) {
            break;
        }
        let h = 1e-6;
        let mut cols: Vec<[f64; 3]> = Vec::with_capacity(6);
        for side in 0..2 {
            for e in BASIS {
                let xi = Mat2::new(h * e[0], h * e[1], h * e[2], h * e[3]);
                let bump = |m: &Psl2<f64>, s: f64| {
                    let exp = Mat2::new(
                        1.0 + s * xi.a,
                        s * xi.b,
                        s * xi.c,
                        1.0 + s * xi.d,
                    );
                    Psl2::from_mat_unchecked(exp.mul(m.mat()))
                };
                let (rp, rm) = if side == 0 {
                    (residual(&bump(a, 1.0), b), residual(&bump(a, -1.0), b))
                } else {
                    (residual(a, &bump(b, 1.0)), residual(a, &bump(b, -1.0)))
                };
                cols.push([
                    (rp[0] - rm[0]) / (2.0 * h),
                    (rp[1] - rm[1]) / (2.0 * h),
                    (rp[2] - rm[2]) / (2.0 * h),
                ]);
            }
        }
        // minimum-norm solve of J delta = -r via the 3x3 Gram matrix
        let mut gram = [[0.0f64; 3]; 3];
        for col in &cols {
            for i in 0..3 {
                for j in 0..3 {
                    gram[i][j] += col[i] * col[j];
                }
            }
        }
        let Some(w) = solve3(gram, [-r[0], -r[1], -r[2]]) else {
            break;
        };
        let mut delta = [0.0f64; 6];
        for (kk, col) in cols.iter().enumerate() {
            delta[kk] = col[0] * w[0] + col[1] * w[1] + col[2] * w[2];
        }
        let apply = |m: &Psl2<f64>, d: &[f64]| {
            let xi = Mat2::new(
                d[0] * BASIS[0][0] + d[1] * BASIS[1][0] + d[2] * BASIS[2][0],
                d[0] * BASIS[0][1] + d[1] * BASIS[1][1] + d[2] * BASIS[2][1],
                d[0] * BASIS[0][2] + d[1] * BASIS[1][2] + d[2] * BASIS[2][2],
                d[0] * BASIS[0][3] + d[1] * BASIS[1][3] + d[2] * BASIS[2][3],
            );
            // first-order exponential with determinant restored
            let e = Mat2::new(1.0 + xi.a, xi.b, xi.c, 1.0 + xi.d);
            let scale = e.det().abs().sqrt();
            let e = Mat2::new(e.a / scale, e.b / scale, e.c / scale, e.d / scale);
            Psl2::from_mat_unchecked(e.mul(m.mat()))
        };
        // damped line search: accept the first step fraction that descends
        let mut improved = false;
        let mut lambda = 1.0f64;
        for _ in 0..6 {
            let scaled: Vec<f64> = delta.iter().map(|d| d * lambda).collect();
            let a2 = apply(a, &scaled[0..3]);
            let b2 = apply(b, &scaled[3..6]);
            let r2 = residual(&a2, &b2);
            let rn2 = (r2[0] * r2[0] + r2[1] * r2[1] + r2[2] * r2[2]).sqrt();
            if std::env::var("PSLREPS_TRACE").is_ok() {
                eprintln!("  newton it {it}: lambda {lambda:.3}, rn2 = {rn2:.3e}");
            }
            if rn2 < 0.9 * rn {
                *a = a2;
                *b = b2;
                improved = true;
                break;
            }
            lambda /= 2.0;
        }
        if !improved {
            break;
        }
    }
}

fn solve3(m: [[f64; 3]; 3], rhs: [f64; 3]) -> Option<[f64; 3]> {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det.abs() < 1e-30 {
        return None;
    }
    let inv = |r: usize, c: usize| -> f64 {
        let (r1, r2) = match r {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (c1, c2) = match c {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
        let sign = if (r + c) % 2 == 0 { 1.0 } else { -1.0 };
        sign * minor / det
    };
    Some([
        inv(0, 0) * rhs[0] + inv(1, 0) * rhs[1] + inv(2, 0) * rhs[2],
        inv(0, 1) * rhs[0] + inv(1, 1) * rhs[1] + inv(2, 1) * rhs[2],
        inv(0, 2) * rhs[0] + inv(1, 2) * rhs[1] + inv(2, 2) * rhs[2],
    ])
}

/// The abelian exceptional witness: genus zero, Euler class zero, a lone
/// sign at one puncture and the opposite sign elsewhere. All peripheral
/// images are upper-triangular parabolics.
pub fn abelian_exceptional<S: Scalar>(
    sig: SurfaceSig,
    lone_index: usize,
    lone_sign: i8,
) -> Result<Representation<S>> {
    if sig.genus != 0 || lone_index >= sig.punctures {
        return Err(Error::Construction(
            "abelian exceptional witnesses require genus zero and a valid lone index".into(),
        ));
    }
    let p = sig.punctures as i64;
    let sigma = lone_sign.signum() as i64;
    let c: Vec<Psl2<S>> = (0..sig.punctures)
        .map(|i| {
            let top = if i == lone_index { sigma * (p - 1) } else { -sigma };
            Psl2::from_ints(1, top, 0, 1)
        })
        .collect::<Result<_>>()?;
    Representation::new(sig, vec![], vec![], c)
}

/// The totally non-hyperbolic exceptional witness: genus zero, all signs
/// equal to `sign`, Euler class equal to `sign`. For p >= 4 this is the
/// explicit parabolic family with off-diagonal entries 4/(2-p); for p = 3 it
/// is the discrete-faithful three-hole-sphere pair.
pub fn tnh_exceptional<S: Scalar>(sig: SurfaceSig, sign: i8) -> Result<Representation<S>> {
    if sig.genus != 0 {
        return Err(Error::Construction(
            "totally non-hyperbolic witnesses require genus zero".into(),
        ));
    }
    let p = sig.punctures;
    let rep = if p == 3 {
        let c1 = Psl2::from_ints(-1, 2, -2, 3)?;
        let c2 = Psl2::from_ints(1, 2, 0, 1)?;
        let c3 = mobius::inverse(&mobius::mul(&c1, &c2));
        Representation::new(sig, vec![], vec![], vec![c1, c2, c3])?
    } else {
        let q = (p as i64) - 2;
        let c1 = Psl2::new(Mat2::new(
            S::from_int(3),
            S::from_int(q),
            S::from_ratio(4, -q),
            S::from_int(-1),
        ))?;
        let c2 = Psl2::new(Mat2::new(S::one(), S::zero(), S::from_ratio(4, -q), S::one()))?;
        let mut c = vec![c1, c2];
        for _ in 2..p {
            c.push(Psl2::from_ints(1, 1, 0, 1)?);
        }
        Representation::new(sig, vec![], vec![], c)?
    };
    Ok(if sign >= 0 { rep } else { pgl_flip(&rep) })
}

/// Boundary-slot sequence of the almost-path decomposition:
/// (d'_1, ..., d'_g, c_1, ..., c_p).
fn slot_classes(spec: &ComponentSpec) -> Vec<SlotClass> {
    let mut out = Vec::with_capacity(spec.sig.genus + spec.sig.punctures);
    for _ in 0..spec.sig.genus {
        out.push(SlotClass::Hyp(spec.tau));
    }
    for &s in &spec.s.0 {
        out.push(if s == 0 {
            SlotClass::Hyp(spec.tau)
        } else {
            SlotClass::Par(s)
        });
    }
    out
}

/// Admissible Euler-class range of a pants piece with the given boundary
/// signs: [-1 + sum max(s, 0), 1 + sum min(s, 0)].
fn pants_range(signs: [i8; 3]) -> (i64, i64) {
    let hi: i64 = signs.iter().map(|&s| s.max(0) as i64).sum();
    let lo: i64 = signs.iter().map(|&s| s.min(0) as i64).sum();
    (-1 + hi, 1 + lo)
}

/// Per-pants boundary signs along the chain: interior slots count as zero.
fn chain_pants_signs(slots: &[SlotClass]) -> Vec<[i8; 3]> {
    let m = slots.len();
    let count = m - 2;
    (0..count)
        .map(|i| {
            let first = if i == 0 { slots[0].sign() } else { 0 };
            let (second, third) = if i < count - 1 {
                (slots[i + 1].sign(), 0)
            } else {
                (slots[m - 2].sign(), slots[m - 1].sign())
            };
            [first, second, third]
        })
        .collect()
}

/// Greedy Euler-class allocation: every piece starts at its admissible
/// minimum, then pants are raised left to right and tori last until the
/// total reaches n. Succeeds exactly when the generalized Milnor-Wood
/// inequality admits n.
fn allocate(spec: &ComponentSpec) -> Result<EulerAllocation> {
    let slots = slot_classes(spec);
    let pants_signs = chain_pants_signs(&slots);
    let g = spec.sig.genus;
    let mut pants: Vec<i64> = Vec::new();
    let mut capacity: Vec<i64> = Vec::new();
    let mut total = 0i64;
    for signs in &pants_signs {
        let (lo, hi) = pants_range(*signs);
        pants.push(lo);
        capacity.push(hi - lo);
        total += lo;
    }
    let mut tori = vec![-1i64; g];
    total -= g as i64;
    let mut deficit = spec.n - total;
    if deficit < 0 {
        return Err(Error::Construction(format!(
            "allocation infeasible: n = {} below minimum {}",
            spec.n, total
        )));
    }
    for (m, cap) in pants.iter_mut().zip(capacity.iter()) {
        let raise = deficit.min(*cap);
        *m += raise;
        deficit -= raise;
    }
    for t in tori.iter_mut() {
        let raise = deficit.min(2);
        *t += raise;
        deficit -= raise;
    }
    if deficit != 0 {
        return Err(Error::Construction(format!(
            "allocation infeasible: n = {} exceeds maximum by {}",
            spec.n, deficit
        )));
    }
    Ok(EulerAllocation { pants, tori })
}

/// Glued witness for chi <= -2: walks the pants chain, solving each fiber
/// against the running lifted product, then closes the torus handles.
fn glued_representative(spec: &ComponentSpec) -> Result<(Representation<f64>, EulerAllocation)> {
    let sig = spec.sig;
    let (g, p) = (sig.genus, sig.punctures);
    let slots = slot_classes(spec);
    let m = slots.len();
    let count = m - 2;
    let alloc = allocate(spec)?;

    let target_for = |triple_m: i64, third: SlotClass| -> ProductTarget {
        match third {
            SlotClass::Hyp(t) => ProductTarget::HypLevel {
                m: triple_m,
                trace_abs: t,
            },
            SlotClass::Par(s) => ProductTarget::ParLevel {
                m: triple_m,
                sign: -s,
            },
        }
    };

    let mut slot_values: Vec<Option<Psl2<f64>>> = vec![None; m];
    // running product of the canonical lifts of the assigned slot values
    let mut q = LiftedElement::identity();
    let mut level = 0i64;
    let mut mid_base: Option<Psl2<f64>> = None;

    for i in 0..count {
        let third = if i < count - 1 {
            SlotClass::Hyp(spec.tau)
        } else {
            slots[m - 1]
        };
        let target = target_for(alloc.pants[i], third);
        if i == 0 {
            let (v0, v1) = model_pair(slots[0], slots[1], target)?;
            slot_values[0] = Some(v0.clone());
            slot_values[1] = Some(v1.clone());
            q = ev_product(&v0, &v1, LiftRule::Hyp0)?;
        } else {
            // first boundary of this pants is the (hyperbolic) chain value
            let a_val = q.base().clone();
            let (g1, g2) = model_pair(SlotClass::Hyp(spec.tau), slots[i + 1], target)?;
            let k0 = conjugator_matching(&g1, &a_val)?;
            let k = chain_balanced_conjugator(&k0, &g1, &a_val, &g2);
            let mut b_val = conjugate(&g2, &k);
            // keep the chain trace exact so classification never sits on
            // the parabolic knife edge after later conjugations
            conjugation_trace_refine(&a_val, &mut b_val, target.signed_trace());
            slot_values[i + 1] = Some(b_val.clone());
            q = mul_lifted(&q, &lift_canonical_hyp0(&b_val)?);
        }
        level += alloc.pants[i];
        if i < count - 1 && classify_lifted(&q)? != LiftedClass::Hyp(level) {
            return Err(Error::Construction(format!(
                "chain prefix landed in {:?}, expected Hyp({level})",
                classify_lifted(&q)?
            )));
        }
        if i == (count - 1) / 2 && count >= 3 {
            mid_base = Some(q.base().clone());
        }
    }

    // re-base the configuration at the middle of the chain before closing:
    // intrinsic entry growth then splits between the two ends, and the
    // closing value is computed exactly in the final frame
    if let Some(mid) = mid_base {
        let center = conjugator_matching(&mid, &diag_of_trace(spec.tau))?;
        for v in slot_values.iter_mut().flatten() {
            *v = conjugate(v, &center);
        }
        let lifted_center = LiftedElement::from_parts(center.clone(), 0);
        q = mul_lifted(
            &mul_lifted(&lifted_center, &q),
            &inv_lifted(&lifted_center),
        );
    }

    // the closing slot value makes the chain product central
    let rest = mobius::inverse(q.base());
    slot_values[m - 1] = Some(rest.clone());
    q = mul_lifted(&q, &lift_canonical_hyp0(&rest)?);
    if classify_lifted(&q)? != LiftedClass::Central(level) {
        return Err(Error::Construction(format!(
            "chain closed at {:?}, expected z^{level}",
            classify_lifted(&q)?
        )));
    }

    // attach torus handles: [a_j, b_j] lifts to z^{t_j} times the canonical
    // lift of the d'_j value
    let mut a_gens = Vec::with_capacity(g);
    let mut b_gens = Vec::with_capacity(g);
    for j in 0..g {
        let val = slot_values[j].clone().expect("torus slot value assigned");
        let target = mul_lifted(&z_power(alloc.tori[j]), &lift_canonical_hyp0(&val)?);
        let (a, b) = torus_pair_with_commutator(&target)?;
        if std::env::var("PSLREPS_TRACE").is_ok() {
            let comm = ev_commutator(&a, &b);
            eprintln!(
                "torus {j}: drift {:.3e}, target scale {:.2e}",
                comm.base().mat().dist(target.base().mat()),
                frobenius(target.base().mat())
            );
        }
        a_gens.push(a);
        b_gens.push(b);
    }
    let c_gens: Vec<Psl2<f64>> = (0..p)
        .map(|i| slot_values[g + i].clone().expect("puncture value assigned"))
        .collect();
    let rep = Representation::new(sig, a_gens, b_gens, c_gens)?;
    Ok((rep, alloc))
}

/// Explicit chi = -1 witnesses.
fn chi_one_representative(spec: &ComponentSpec) -> Result<Representation<f64>> {
    let sig = spec.sig;
    if sig.genus == 1 {
        // one-hole torus
        let s = spec.s.0[0];
        let par = Psl2::from_ints(1, 1, 0, 1)?;
        let diag = Psl2::from_ratios((2, 1), (0, 1), (0, 1), (1, 2))?;
        let sym = Psl2::from_ratios((5, 3), (4, 3), (4, 3), (5, 3))?;
        let (a, b) = match (spec.n, s) {
            (1, 1) => (diag, sym),
            (0, 1) => (par, diag),
            (0, -1) => (diag, par),
            (-1, -1) => (sym, diag),
            (n, 0) => {
                let base = lift_canonical_hyp0(&diag_of_trace(spec.tau))?;
                let target = mul_lifted(&z_power(n), &base);
                torus_pair_with_commutator(&target)?
            }
            _ => {
                return Err(Error::Construction(format!(
                    "no one-hole torus witness for (n, s) = ({}, {})",
                    spec.n, s
                )))
            }
        };
        let comm = mobius::mul(
            &mobius::mul(&a, &b),
            &mobius::mul(&mobius::inverse(&a), &mobius::inverse(&b)),
        );
        return Representation::new(sig, vec![a], vec![b], vec![mobius::inverse(&comm)]);
    }
    // three-hole sphere with a hyperbolic boundary component somewhere
    // (every type-preserving index of the three-hole sphere is exceptional)
    let (s1, s2, s3) = (spec.s.0[0], spec.s.0[1], spec.s.0[2]);
    let to_class = |s: i8| {
        if s == 0 {
            SlotClass::Hyp(spec.tau)
        } else {
            SlotClass::Par(s)
        }
    };
    let target = match to_class(s3) {
        SlotClass::Hyp(t) => ProductTarget::HypLevel {
            m: spec.n,
            trace_abs: t,
        },
        SlotClass::Par(s) => ProductTarget::ParLevel {
            m: spec.n,
            sign: -s,
        },
    };
    let (c1, c2) = model_pair(to_class(s1), to_class(s2), target)?;
    let c3 = mobius::inverse(&mobius::mul(&c1, &c2));
    Representation::new(sig, vec![], vec![], vec![c1, c2, c3])
}

/// An explicit witness representation in the component (n, s), if non-empty.
pub fn representative(spec: &ComponentSpec) -> Result<Witness> {
    let (lo, hi) = mw_bounds(spec.sig, &spec.s);
    if !is_nonempty(spec.sig, spec.n, &spec.s) {
        return Err(Error::InfeasibleComponent {
            g: spec.sig.genus,
            p: spec.sig.punctures,
            n: spec.n,
            s: spec.s.to_string_compact(),
            lo,
            hi,
        });
    }
    let witness = if is_exceptional(spec.sig, spec.n, &spec.s) {
        if spec.n == 0 {
            let (lone_index, lone_sign) = if spec.s.p_plus() == 1 {
                (spec.s.0.iter().position(|&x| x > 0).unwrap(), 1)
            } else {
                (spec.s.0.iter().position(|&x| x < 0).unwrap(), -1)
            };
            Witness {
                rep: abelian_exceptional(spec.sig, lone_index, lone_sign)?,
                construction: Construction::AbelianExceptional,
                allocation: None,
            }
        } else {
            Witness {
                rep: tnh_exceptional(spec.sig, spec.n as i8)?,
                construction: Construction::TnhExceptional,
                allocation: None,
            }
        }
    } else if spec.sig.chi() == -1 {
        Witness {
            rep: chi_one_representative(spec)?,
            construction: Construction::ChiOneExplicit,
            allocation: None,
        }
    } else {
        let (rep, alloc) = glued_representative(spec)?;
        Witness {
            rep,
            construction: Construction::Glued,
            allocation: Some(alloc),
        }
    };
    let got = component_of(&witness.rep)?;
    if got.n != spec.n || got.s != spec.s {
        return Err(Error::Construction(format!(
            "witness landed in (n, s) = ({}, {}) instead of ({}, {})",
            got.n,
            got.s.to_string_compact(),
            spec.n,
            spec.s.to_string_compact()
        )));
    }
    Ok(witness)
}

/// An element commuting with g, at deformation amplitude u.
fn centralizer_element(g: &Psl2<f64>, u: f64) -> Psl2<f64> {
    match classify(g) {
        ElementClass::Identity => Psl2::identity(),
        ElementClass::Hyperbolic => {
            let (vp, vm) = mobius::hyperbolic_frame(g);
            let mut f = Mat2::new(vp[0], vm[0], vp[1], vm[1]);
            let det = f.det();
            let s = det.abs().sqrt();
            f = Mat2::new(f.a / s, f.b / s, f.c / s, f.d / s);
            let core = Mat2::new(u.exp(), 0.0, 0.0, (-u).exp());
            Psl2::from_mat_unchecked(f.mul(&core).mul(&f.inverse()))
        }
        ElementClass::ParabolicPos | ElementClass::ParabolicNeg => {
            let rot = mobius::rotation_to_e1(mobius::parabolic_eigvec(g));
            let core = Mat2::new(1.0, u, 0.0, 1.0);
            Psl2::from_mat_unchecked(rot.inverse().mul(&core).mul(&rot))
        }
        ElementClass::Elliptic => {
            let m = g.mat();
            let x0 = (m.a - m.d) / (2.0 * m.c);
            let y0 = (4.0 - m.trace() * m.trace()).max(0.0).sqrt() / (2.0 * m.c.abs());
            let s = y0.sqrt();
            let t = Mat2::new(s, x0 / s, 0.0, 1.0 / s);
            let core = Mat2::new(u.cos(), u.sin(), -u.sin(), u.cos());
            Psl2::from_mat_unchecked(t.mul(&core).mul(&t.inverse()))
        }
    }
}

struct Twists {
    chain: Vec<f64>,
    handles: Vec<f64>,
    global: Psl2<f64>,
}

/// Representative deformed by twists along the decomposition curves and a
/// global conjugation, staying inside the same component.
fn twisted_representative(
    spec: &ComponentSpec,
    amplitudes: &Twists,
) -> Result<Representation<f64>> {
    let witness = representative(spec)?;
    let mut rep = witness.rep;
    let dec = crate::surface::decomposition(spec.sig);
    // twist along each chain curve d_i: conjugate everything right of the
    // curve by a centralizer element of its image
    for (i, w) in dec.d_words.iter().enumerate() {
        let val = crate::surface::evaluate_word(&rep, w);
        if val.is_identity() {
            continue;
        }
        let h = centralizer_element(&val, amplitudes.chain[i]);
        for j in 0..spec.sig.genus {
            if j >= i + 2 {
                rep.a[j] = conjugate(&rep.a[j], &h);
                rep.b[j] = conjugate(&rep.b[j], &h);
            }
        }
        for cidx in 0..spec.sig.punctures {
            if spec.sig.genus + cidx >= i + 2 {
                rep.c[cidx] = conjugate(&rep.c[cidx], &h);
            }
        }
    }
    // twist each torus handle by a centralizer element of d'_j
    for (j, w) in dec.dprime_words.iter().enumerate() {
        let val = crate::surface::evaluate_word(&rep, w);
        if val.is_identity() {
            continue;
        }
        let h = centralizer_element(&val, amplitudes.handles[j]);
        rep.a[j] = conjugate(&rep.a[j], &h);
        rep.b[j] = conjugate(&rep.b[j], &h);
    }
    let g = &amplitudes.global;
    rep.a = rep.a.iter().map(|x| conjugate(x, g)).collect();
    rep.b = rep.b.iter().map(|x| conjugate(x, g)).collect();
    rep.c = rep.c.iter().map(|x| conjugate(x, g)).collect();
    Ok(rep)
}

/// A pseudorandom representation in the component, produced by twist and
/// conjugation deformations of the canonical witness.
pub fn random_rep_in_component(spec: &ComponentSpec, seed: u64) -> Result<Representation<f64>> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dec = crate::surface::decomposition(spec.sig);
    // modest amplitudes keep the relator residual well inside tolerance
    let twists = Twists {
        chain: (0..dec.d_words.len())
            .map(|_| rng.gen_range(-0.4..0.4))
            .collect(),
        handles: (0..dec.dprime_words.len())
            .map(|_| rng.gen_range(-0.4..0.4))
            .collect(),
        global: crate::sample::random_psl2_bounded(&mut rng, 1.3),
    };
    twisted_representative(spec, &twists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::BoundaryFilter;
    use crate::scalar::Rat;
    use crate::surface::{
        boundary_type, is_totally_non_hyperbolic, relation_residual, relative_euler_class,
        sign_vector, BoundaryType,
    };
    use approx::assert_abs_diff_eq;

    #[test]
    fn fricke_pair_examples() {
        // (3,3,3): commutator trace kappa(3,3,3) = -2
        let (a, b) = fricke_pair(3.0, 3.0, 3.0).unwrap();
        let comm = a.mul(&b).mul(&a.inverse()).mul(&b.inverse());
        assert_abs_diff_eq!(comm.trace(), -2.0, epsilon = 1e-9);

        // (2,2,-2): kappa = 18, the discrete-faithful pants character
        let (a, b) = fricke_pair(2.0, 2.0, -2.0).unwrap();
        let (x, y, z) = mobius::char_of_pair(&a, &b);
        assert_abs_diff_eq!(x, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(y, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(z, -2.0, epsilon = 1e-12);

        // (0,0,z) with z > 2: commutator trace z^2 - 2
        let z = 5.0f64.sqrt();
        let (a, b) = fricke_pair(0.0, 0.0, z).unwrap();
        let comm = a.mul(&b).mul(&a.inverse()).mul(&b.inverse());
        assert_abs_diff_eq!(comm.trace(), z * z - 2.0, epsilon = 1e-9);

        // inside the excluded cube: not realizable
        assert!(fricke_pair(0.0, 0.0, 0.5).is_err());
    }

    fn hyp_target(m: i64, tau: f64) -> LiftedElement<f64> {
        mul_lifted(
            &z_power(m),
            &lift_canonical_hyp0(&diag_of_trace(tau)).unwrap(),
        )
    }

    #[test]
    fn pants_fiber_examples() {
        // signs (+1, +1), m = 1, target trace -3 in Hyp_1
        let target = hyp_target(1, 3.0);
        let rep = pants_rep_with_boundary(1, 1, 1, &target).unwrap();
        assert_eq!(relative_euler_class(&rep).unwrap(), 1);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1, 1, 0]);

        // signs (+1, 0), m = 0, target trace 3
        let target = hyp_target(0, 3.0);
        let rep = pants_rep_with_boundary(1, 0, 0, &target).unwrap();
        assert_eq!(relative_euler_class(&rep).unwrap(), 0);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1, 0, 0]);

        // signs (0, 0), m = +-1
        for m in [-1i64, 1] {
            let target = hyp_target(m, 3.0);
            let rep = pants_rep_with_boundary(0, 0, m, &target).unwrap();
            assert_eq!(relative_euler_class(&rep).unwrap(), m);
            assert_eq!(sign_vector(&rep).unwrap().0, vec![0, 0, 0]);
        }

        // inadmissible: signs (+1, -1) force m = 0
        let target = hyp_target(1, 3.0);
        assert!(pants_rep_with_boundary(1, -1, 1, &target).is_err());
    }

    #[test]
    fn torus_fiber_examples() {
        for (m, tau) in [(0i64, 3.0), (1, 3.0), (-1, 3.0), (1, 4.5), (0, 7.0)] {
            let target = hyp_target(m, tau);
            let (a, b) = torus_pair_with_commutator(&target).unwrap();
            let comm = ev_commutator(&a, &b);
            assert!(comm == target, "round trip failed at (m, tau) = ({m}, {tau})");
        }
        // elliptic target is rejected
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let bad = LiftedElement::from_parts(crate::sample::random_elliptic(&mut rng), 0);
        assert!(torus_pair_with_commutator(&bad).is_err());
    }

    #[test]
    fn exceptional_witnesses_exact() {
        // abelian lone-sign family on the four-holed sphere
        let sig = SurfaceSig::new(0, 4).unwrap();
        let rep: Representation<Rat> = abelian_exceptional(sig, 0, 1).unwrap();
        assert_eq!(relative_euler_class(&rep).unwrap(), 0);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1, -1, -1, -1]);
        assert!(is_totally_non_hyperbolic(&rep).unwrap());

        // totally non-hyperbolic family, p = 4: Euler class 1, all signs +
        let rep: Representation<Rat> = tnh_exceptional(sig, 1).unwrap();
        assert_eq!(relation_residual(&rep), 0.0);
        assert_eq!(relative_euler_class(&rep).unwrap(), 1);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1, 1, 1, 1]);
        assert!(is_totally_non_hyperbolic(&rep).unwrap());

        // mirrored case
        let rep: Representation<Rat> = tnh_exceptional(sig, -1).unwrap();
        assert_eq!(relative_euler_class(&rep).unwrap(), -1);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![-1, -1, -1, -1]);

        // p = 5: interior curves elliptic, still totally non-hyperbolic
        let sig5 = SurfaceSig::new(0, 5).unwrap();
        let rep: Representation<Rat> = tnh_exceptional(sig5, 1).unwrap();
        assert_eq!(relative_euler_class(&rep).unwrap(), 1);
        assert!(is_totally_non_hyperbolic(&rep).unwrap());
    }

    #[test]
    fn representative_small_cases() {
        // punctured torus, all four type-preserving components
        let sig = SurfaceSig::new(1, 1).unwrap();
        for (n, s) in [(-1, "-"), (0, "+"), (0, "-"), (1, "+")] {
            let spec = ComponentSpec::new(sig, n, SignVector::parse(s).unwrap()).unwrap();
            let w = representative(&spec).unwrap();
            assert_eq!(w.construction, Construction::ChiOneExplicit);
        }
        // hyperbolic boundary
        for n in -1..=1 {
            let spec = ComponentSpec::new(sig, n, SignVector::parse("0").unwrap()).unwrap();
            let w = representative(&spec).unwrap();
            assert_eq!(boundary_type(&w.rep), BoundaryType::HyperbolicBoundary);
        }
        // four-holed sphere glued from two pants with m = 1 each
        let sig = SurfaceSig::new(0, 4).unwrap();
        let spec = ComponentSpec::new(sig, 2, SignVector::parse("++++").unwrap()).unwrap();
        let w = representative(&spec).unwrap();
        assert_eq!(w.construction, Construction::Glued);
        assert_eq!(w.allocation.unwrap().pants, vec![1, 1]);
        assert!(relation_residual(&w.rep) <= 1e-9);

        // two-hole torus with hyperbolic boundary, n = -1: pants 0, torus -1
        let sig = SurfaceSig::new(1, 2).unwrap();
        let spec = ComponentSpec::new(sig, -1, SignVector::parse("00").unwrap()).unwrap();
        let w = representative(&spec).unwrap();
        let alloc = w.allocation.unwrap();
        assert_eq!(alloc.pants, vec![0]);
        assert_eq!(alloc.tori, vec![-1]);

        // infeasible component
        let sig = SurfaceSig::new(0, 4).unwrap();
        let spec = ComponentSpec::new(sig, 0, SignVector::parse("++++").unwrap()).unwrap();
        assert!(matches!(
            representative(&spec),
            Err(Error::InfeasibleComponent { .. })
        ));
    }

    #[test]
    fn representative_round_trip_chi_up_to_minus_three() {
        for (g, p) in [(0usize, 4usize), (0, 5), (1, 1), (1, 2), (1, 3), (2, 1)] {
            let sig = SurfaceSig::new(g, p).unwrap();
            for ci in crate::components::enumerate_components(sig, BoundaryFilter::All).unwrap() {
                let spec = ComponentSpec::new(sig, ci.n, ci.s.clone()).unwrap();
                let w = representative(&spec).unwrap();
                assert!(
                    relation_residual(&w.rep) <= 1e-9,
                    "residual too large for {ci:?}"
                );
            }
        }
    }

    #[test]
    fn allocation_feasible_iff_milnor_wood() {
        for (g, p) in [(0usize, 4usize), (0, 6), (1, 2), (2, 1), (1, 4)] {
            let sig = SurfaceSig::new(g, p).unwrap();
            let chi = sig.chi();
            let mut signs = vec![-1i8; p];
            'outer: loop {
                let s = SignVector(signs.clone());
                let (lo, hi) = mw_bounds(sig, &s);
                for n in (chi - 1)..=(-chi + 1) {
                    let spec = ComponentSpec::new(sig, n, s.clone()).unwrap();
                    let ok = allocate(&spec).is_ok();
                    assert_eq!(ok, lo <= n && n <= hi, "allocation vs MW at ({n}, {s:?})");
                }
                let mut i = 0;
                loop {
                    if i == p {
                        break 'outer;
                    }
                    if signs[i] < 1 {
                        signs[i] += 1;
                        break;
                    }
                    signs[i] = -1;
                    i += 1;
                }
            }
        }
    }

    #[test]
    fn random_rep_stays_in_component() {
        let sig = SurfaceSig::new(0, 4).unwrap();
        let spec = ComponentSpec::new(sig, 0, SignVector::parse("++--").unwrap()).unwrap();
        let base = component_of(&representative(&spec).unwrap().rep).unwrap();
        for seed in 0..30 {
            let rep = random_rep_in_component(&spec, seed).unwrap();
            assert!(relation_residual(&rep) <= 1e-8);
            let got = component_of(&rep).unwrap();
            assert_eq!(got.n, base.n);
            assert_eq!(got.s, base.s);
        }
        // zero amplitudes reproduce the representative exactly
        let twists = Twists {
            chain: vec![0.0; 1],
            handles: vec![],
            global: Psl2::identity(),
        };
        let rep = twisted_representative(&spec, &twists).unwrap();
        let witness = representative(&spec).unwrap();
        for i in 0..4 {
            assert!(rep.c[i] == witness.rep.c[i]);
        }
    }
}
