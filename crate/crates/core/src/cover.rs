//! Arithmetic in the universal cover of PSL(2,R).
//!
//! A lifted element is stored as its base together with an integer winding:
//! the lift f of the base's circle map with f(0) = ang(D) + winding * pi,
//! where D is the image of the zero direction. Multiplication reduces to an
//! exact branch-selection rule on directions, so the group law is decidable
//! over the rational backend and drift-free over floats.

use crate::error::{Error, Result};
use crate::mobius::{
    self, classify, cmp_dirs, zero_dir_image, Dir, ElementClass, Mat2, Psl2,
};
use crate::scalar::{Scalar, EPS};

#[derive(Clone, Debug, PartialEq)]
pub struct LiftedElement<S: Scalar> {
    base: Psl2<S>,
    winding: i64,
}

/// Connected component of the universal cover containing a lifted element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftedClass {
    Central(i64),
    Hyp(i64),
    ParPos(i64),
    ParNeg(i64),
    Ell(i64),
}

impl LiftedClass {
    pub fn level(self) -> i64 {
        match self {
            LiftedClass::Central(n)
            | LiftedClass::Hyp(n)
            | LiftedClass::ParPos(n)
            | LiftedClass::ParNeg(n)
            | LiftedClass::Ell(n) => n,
        }
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            LiftedClass::Central(_) => "Central",
            LiftedClass::Hyp(_) => "Hyp",
            LiftedClass::ParPos(_) => "ParPos",
            LiftedClass::ParNeg(_) => "ParNeg",
            LiftedClass::Ell(_) => "Ell",
        }
    }
}

/// Lift selection rule for the evaluation maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftRule {
    /// Unique lift in the closure of Hyp_0; rejects elliptic inputs.
    Hyp0,
    /// Canonical lift in the closure of Hyp_0 for non-elliptic inputs,
    /// in Ell_1 for elliptic ones.
    Hyp0OrEll1,
}

impl<S: Scalar> LiftedElement<S> {
    pub fn identity() -> Self {
        LiftedElement {
            base: Psl2::identity(),
            winding: 0,
        }
    }

    /// Lift of `base` with the given winding; theta0 = ang(D_base) + winding*pi.
    pub fn from_parts(base: Psl2<S>, winding: i64) -> Self {
        LiftedElement { base, winding }
    }

    pub fn base(&self) -> &Psl2<S> {
        &self.base
    }

    pub fn winding(&self) -> i64 {
        self.winding
    }

    /// f(0) of the lifted circle map, as a float.
    pub fn theta0(&self) -> f64 {
        zero_dir_image(&self.base).angle().0 + self.winding as f64 * std::f64::consts::PI
    }
}

/// Lift of the center generator to the n-th power: (+-I, n pi).
pub fn z_power<S: Scalar>(n: i64) -> LiftedElement<S> {
    LiftedElement {
        base: Psl2::identity(),
        winding: n,
    }
}

/// The branch-selection cocycle: 1 when ang(D_{gh}) < ang(D_g), else 0.
fn cocycle<S: Scalar>(g: &Psl2<S>, d_gh: &Dir<S>) -> i64 {
    let d_g = zero_dir_image(g);
    if cmp_dirs(d_gh, &d_g) < 0 {
        1
    } else {
        0
    }
}

pub fn mul_lifted<S: Scalar>(u: &LiftedElement<S>, v: &LiftedElement<S>) -> LiftedElement<S> {
    let base = mobius::mul(&u.base, &v.base);
    let d_prod = zero_dir_image(&base);
    LiftedElement {
        winding: u.winding + v.winding + cocycle(&u.base, &d_prod),
        base,
    }
}

pub fn inv_lifted<S: Scalar>(u: &LiftedElement<S>) -> LiftedElement<S> {
    let base = mobius::inverse(&u.base);
    let fixes_zero = zero_dir_image(&base).is_zero_dir() as i64;
    LiftedElement {
        winding: -u.winding - (1 - fixes_zero),
        base,
    }
}

/// Winding of the canonical lift of a non-elliptic element in the closure
/// of Hyp_0 (the lift pinned by f(x*) = x* at a fixed direction).
fn canonical_winding_hyp0<S: Scalar>(g: &Psl2<S>) -> i64 {
    let d = zero_dir_image(g);
    if d.is_zero_dir() {
        return 0;
    }
    // Displacement sign at the zero direction: cross((1,0), M(1,0)) computed
    // on the trace-positive representative, whose sectors bound the motion.
    let m = g.trace_pos_rep();
    if m.c.neg().sign_eps() > 0 {
        0
    } else {
        -1
    }
}

/// The unique lift of a non-elliptic element lying in the closure of Hyp_0.
pub fn lift_canonical_hyp0<S: Scalar>(g: &Psl2<S>) -> Result<LiftedElement<S>> {
    let class = classify(g);
    if class == ElementClass::Elliptic {
        return Err(Error::ClassMismatch {
            expected: "hyperbolic, parabolic or identity",
            found: "elliptic",
        });
    }
    Ok(LiftedElement {
        winding: canonical_winding_hyp0(g),
        base: g.clone(),
    })
}

/// The unique lift of an elliptic element lying in Ell_1, i.e. with
/// displacement in (0, pi).
pub fn lift_canonical_ell1<S: Scalar>(g: &Psl2<S>) -> Result<LiftedElement<S>> {
    let class = classify(g);
    if class != ElementClass::Elliptic {
        return Err(Error::ClassMismatch {
            expected: "elliptic",
            found: class.name(),
        });
    }
    Ok(LiftedElement {
        winding: 0,
        base: g.clone(),
    })
}

/// Canonical lift under an evaluation-map rule.
pub fn lift_by_rule<S: Scalar>(g: &Psl2<S>, rule: LiftRule) -> Result<LiftedElement<S>> {
    match (rule, classify(g)) {
        (LiftRule::Hyp0, _) => lift_canonical_hyp0(g),
        (LiftRule::Hyp0OrEll1, ElementClass::Elliptic) => lift_canonical_ell1(g),
        (LiftRule::Hyp0OrEll1, _) => lift_canonical_hyp0(g),
    }
}

pub fn classify_lifted<S: Scalar>(u: &LiftedElement<S>) -> Result<LiftedClass> {
    let class = classify(&u.base);
    if class == ElementClass::Identity {
        return Ok(LiftedClass::Central(u.winding));
    }
    if !S::EXACT && class == ElementClass::Elliptic {
        // displacement within EPS of a multiple of pi with a near-parabolic
        // base cannot be leveled reliably
        let gap = (u.base.trace_abs().to_f64() - 2.0).abs();
        let ang = zero_dir_image(&u.base).angle().0;
        let near_branch = ang <= EPS || ang >= std::f64::consts::PI - EPS;
        if gap <= 10.0 * EPS && near_branch {
            return Err(Error::AmbiguousClassification(format!(
                "elliptic base with |tr|-2 = {:.3e} and branch angle {:.3e}",
                gap, ang
            )));
        }
    }
    match class {
        ElementClass::Identity => unreachable!(),
        ElementClass::Elliptic => {
            let k = u.winding;
            Ok(LiftedClass::Ell(if k >= 0 { k + 1 } else { k }))
        }
        _ => {
            let n = u.winding - canonical_winding_hyp0(&u.base);
            Ok(match class {
                ElementClass::Hyperbolic => LiftedClass::Hyp(n),
                ElementClass::ParabolicPos => LiftedClass::ParPos(n),
                ElementClass::ParabolicNeg => LiftedClass::ParNeg(n),
                _ => unreachable!(),
            })
        }
    }
}

/// The SL(2,R) projection of a lifted element: the matrix representative
/// consistent with the component, so that its trace is the trace of the
/// lifted element. Sign laws: (-1)^n times the trace-positive representative
/// for Hyp_n/Par_n/z^n, and for elliptic lifts the representative whose
/// upper-right entry has sign (-1)^winding.
pub fn sl2_projection<S: Scalar>(u: &LiftedElement<S>) -> Result<Mat2<S>> {
    let class = classify_lifted(u)?;
    let m = match class {
        LiftedClass::Central(n) => {
            let id = Mat2::identity();
            if n.rem_euclid(2) == 0 {
                id
            } else {
                id.neg()
            }
        }
        LiftedClass::Hyp(n) | LiftedClass::ParPos(n) | LiftedClass::ParNeg(n) => {
            let rep = u.base.trace_pos_rep();
            if n.rem_euclid(2) == 0 {
                rep
            } else {
                rep.neg()
            }
        }
        LiftedClass::Ell(_) => {
            let rep = u.base.mat().clone();
            let want: i8 = if u.winding.rem_euclid(2) == 0 { 1 } else { -1 };
            if rep.b.sign_eps() == want {
                rep
            } else {
                rep.neg()
            }
        }
    };
    Ok(m)
}

pub fn trace_lifted<S: Scalar>(u: &LiftedElement<S>) -> Result<S> {
    Ok(sl2_projection(u)?.trace())
}

/// Lifted product evaluation map: the product of the canonical lifts of the
/// two elements under the given rule.
pub fn ev_product<S: Scalar>(
    g1: &Psl2<S>,
    g2: &Psl2<S>,
    rule: LiftRule,
) -> Result<LiftedElement<S>> {
    Ok(mul_lifted(&lift_by_rule(g1, rule)?, &lift_by_rule(g2, rule)?))
}

/// Lifted commutator: independent of the choice of lifts.
pub fn ev_commutator<S: Scalar>(g1: &Psl2<S>, g2: &Psl2<S>) -> LiftedElement<S> {
    let u = LiftedElement::from_parts(g1.clone(), 0);
    let v = LiftedElement::from_parts(g2.clone(), 0);
    mul_lifted(
        &mul_lifted(&u, &v),
        &mul_lifted(&inv_lifted(&u), &inv_lifted(&v)),
    )
}

/// A one-parameter path from the identity to g realizing the canonical lift:
/// through the exponential image for non-elliptic g, through the rotation
/// family with angle in (0, pi) for elliptic g.
pub struct ElementPath {
    kind: PathKind,
}

enum PathKind {
    Constant,
    Conjugated {
        frame: Mat2<f64>,
        frame_inv: Mat2<f64>,
        inner: InnerPath,
    },
}

enum InnerPath {
    Diagonal { lambda: f64 },
    Shear { s: f64 },
    Rotation { alpha: f64 },
}

impl ElementPath {
    /// The path within the one-parameter subgroup through g that matches
    /// the Hyp0OrEll1 canonical lift.
    pub fn canonical(g: &Psl2<f64>) -> Result<ElementPath> {
        let kind = match classify(g) {
            ElementClass::Identity => PathKind::Constant,
            ElementClass::Hyperbolic => {
                let rep = g.trace_pos_rep();
                let t = rep.trace();
                let lam = ((t + (t * t - 4.0).sqrt()) / 2.0).ln();
                let (vp, vm) = mobius::hyperbolic_frame(g);
                let mut frame = Mat2::new(vp[0], vm[0], vp[1], vm[1]);
                let det = frame.det();
                let s = det.abs().sqrt();
                frame = Mat2::new(frame.a / s, frame.b / s, frame.c / s, frame.d / s);
                if det < 0.0 {
                    frame = Mat2::new(-frame.a, frame.b, -frame.c, frame.d);
                }
                let frame_inv = frame.inverse();
                PathKind::Conjugated {
                    frame,
                    frame_inv,
                    inner: InnerPath::Diagonal { lambda: lam },
                }
            }
            ElementClass::ParabolicPos | ElementClass::ParabolicNeg => {
                let rot = mobius::rotation_to_e1(mobius::parabolic_eigvec(g));
                let n = rot.mul(&g.trace_pos_rep()).mul(&rot.inverse());
                let frame = rot.inverse();
                let frame_inv = rot;
                PathKind::Conjugated {
                    frame,
                    frame_inv,
                    inner: InnerPath::Shear { s: n.b },
                }
            }
            ElementClass::Elliptic => {
                let m = g.mat();
                let x0 = (m.a - m.d) / (2.0 * m.c);
                let y0 = (4.0 - m.trace() * m.trace()).max(0.0).sqrt() / (2.0 * m.c.abs());
                let s = y0.sqrt();
                let frame = Mat2::new(s, x0 / s, 0.0, 1.0 / s);
                let frame_inv = frame.inverse();
                let n = frame_inv.mul(m).mul(&frame);
                // n = +-R_alpha; the PSL rotation class has a unique angle in (0, pi)
                let alpha = rotation_angle_psl(&n);
                PathKind::Conjugated {
                    frame,
                    frame_inv,
                    inner: InnerPath::Rotation { alpha },
                }
            }
        };
        Ok(ElementPath { kind })
    }

    pub fn at(&self, t: f64) -> Psl2<f64> {
        match &self.kind {
            PathKind::Constant => Psl2::identity(),
            PathKind::Conjugated {
                frame,
                frame_inv,
                inner,
            } => {
                let core = match inner {
                    InnerPath::Diagonal { lambda } => {
                        Mat2::new((lambda * t).exp(), 0.0, 0.0, (-lambda * t).exp())
                    }
                    InnerPath::Shear { s } => Mat2::new(1.0, s * t, 0.0, 1.0),
                    InnerPath::Rotation { alpha } => {
                        let a = alpha * t;
                        Mat2::new(a.cos(), a.sin(), -a.sin(), a.cos())
                    }
                };
                Psl2::from_mat_unchecked(frame.mul(&core).mul(frame_inv))
            }
        }
    }
}

fn rotation_angle_psl(n: &Mat2<f64>) -> f64 {
    // n is +-[[cos a, sin a], [-sin a, cos a]]; reduce to the PSL
    // representative with angle in (0, pi)
    let alpha = n.b.atan2(n.a);
    alpha.rem_euclid(std::f64::consts::PI)
}

/// Continuation state tracking a lift of a PSL(2,R) path.
pub struct PathTracker {
    theta: f64,
    last_ang: f64,
}

impl PathTracker {
    pub fn start() -> Self {
        PathTracker {
            theta: 0.0,
            last_ang: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Advance to the next point of the path; the underlying angle step must
    /// stay below pi/4 or the step is rejected.
    pub fn step(&mut self, g: &Psl2<f64>) -> Result<()> {
        let ang = zero_dir_image(g).angle().0;
        let mut delta = ang - self.last_ang;
        while delta > std::f64::consts::FRAC_PI_2 {
            delta -= std::f64::consts::PI;
        }
        while delta < -std::f64::consts::FRAC_PI_2 {
            delta += std::f64::consts::PI;
        }
        if delta.abs() >= std::f64::consts::FRAC_PI_4 {
            return Err(Error::StepSize { step: delta.abs() });
        }
        self.theta += delta;
        self.last_ang = ang;
        Ok(())
    }

    /// Lift at the endpoint g of the tracked path.
    pub fn finish(&self, g: &Psl2<f64>) -> LiftedElement<f64> {
        let ang = zero_dir_image(g).angle().0;
        let winding = ((self.theta - ang) / std::f64::consts::PI).round() as i64;
        LiftedElement::from_parts(g.clone(), winding)
    }
}

/// Advances the tracker along t in [t0, t1] for the path p, bisecting
/// adaptively whenever a step moves the angle too fast.
fn track_segment(
    tracker: &mut PathTracker,
    path: &dyn Fn(f64) -> Psl2<f64>,
    t0: f64,
    t1: f64,
    depth: u32,
) -> Result<()> {
    let saved_theta = tracker.theta;
    let saved_last = tracker.last_ang;
    match tracker.step(&path(t1)) {
        Ok(()) => Ok(()),
        Err(Error::StepSize { .. }) if depth > 0 => {
            tracker.theta = saved_theta;
            tracker.last_ang = saved_last;
            let mid = (t0 + t1) / 2.0;
            track_segment(tracker, path, t0, mid, depth - 1)?;
            track_segment(tracker, path, mid, t1, depth - 1)
        }
        Err(e) => Err(e),
    }
}

/// Lifts the path t -> path(t), t in [0, 1], to the universal cover by
/// numeric continuation with `steps` subdivisions (adaptively bisected),
/// returning the endpoint. The path must start at the identity.
pub fn lift_path(path: &dyn Fn(f64) -> Psl2<f64>, steps: u32) -> Result<LiftedElement<f64>> {
    if steps < 64 {
        return Err(Error::Construction(
            "continuation requires steps >= 64".into(),
        ));
    }
    let mut tracker = PathTracker::start();
    for k in 0..steps {
        let t0 = k as f64 / steps as f64;
        let t1 = (k + 1) as f64 / steps as f64;
        track_segment(&mut tracker, path, t0, t1, 12)?;
    }
    Ok(tracker.finish(&path(1.0)))
}

/// Numeric continuation oracle for the lifted product: lifts the path
/// t -> g1(t) g2(t) along one-parameter subgroup paths with `steps`
/// subdivisions. Independent of the branch-selection group law.
pub fn path_lift_product_oracle(
    g1: &Psl2<f64>,
    g2: &Psl2<f64>,
    rule: LiftRule,
    steps: u32,
) -> Result<LiftedElement<f64>> {
    if rule == LiftRule::Hyp0
        && (classify(g1) == ElementClass::Elliptic || classify(g2) == ElementClass::Elliptic)
    {
        return Err(Error::ClassMismatch {
            expected: "hyperbolic, parabolic or identity",
            found: "elliptic",
        });
    }
    let p1 = ElementPath::canonical(g1)?;
    let p2 = ElementPath::canonical(g2)?;
    let path = move |t: f64| mobius::mul(&p1.at(t), &p2.at(t));
    lift_path(&path, steps)
}
