//! Independent oracles and property suites: path-continuation Euler class,
//! finite-difference Jacobian ranks, image-law samplers, additivity and
//! census cross-checks, and a seed-deterministic suite runner.

use crate::atlas::{random_rep_in_component, representative, ComponentSpec};
use crate::components::{count_components_n, count_total, enumerate_components, BoundaryFilter};
use crate::cover::{
    classify_lifted, ev_commutator, ev_product, inv_lifted, lift_canonical_ell1,
    lift_canonical_hyp0, lift_path, mul_lifted, path_lift_product_oracle, sl2_projection, z_power,
    ElementPath, LiftRule, LiftedClass, LiftedElement,
};
use crate::error::{Error, Result};
use crate::mobius::{self, classify, ElementClass, Mat2, Psl2};
use crate::sample;
use crate::surface::{
    decomposition, relative_euler_class, restrict, Representation, SignVector, SurfaceSig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Tolerances and resolution of the verification suites.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Tolerances {
    pub eps_alg: f64,
    pub eps_oracle: f64,
    pub eps_trace: f64,
    pub steps: u32,
    pub rank_threshold: f64,
    pub commuting_exclusion: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_alg: 1e-8,
            eps_oracle: 1e-6,
            eps_trace: 1e-9,
            steps: 1 << 14,
            rank_threshold: 1e-4,
            commuting_exclusion: 1e-6,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub samples: u64,
    pub failures: u64,
    pub worst_deviation: f64,
    pub elapsed_s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

struct Recorder {
    name: String,
    samples: u64,
    failures: u64,
    worst: f64,
    first_failure: Option<String>,
    started: Instant,
}

impl Recorder {
    fn new(name: &str) -> Self {
        Recorder {
            name: name.to_string(),
            samples: 0,
            failures: 0,
            worst: 0.0,
            first_failure: None,
            started: Instant::now(),
        }
    }

    fn pass(&mut self, deviation: f64) {
        self.samples += 1;
        if deviation > self.worst {
            self.worst = deviation;
        }
    }

    fn fail(&mut self, what: String) {
        self.samples += 1;
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(what);
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            samples: self.samples,
            failures: self.failures,
            worst_deviation: self.worst,
            elapsed_s: self.started.elapsed().as_secs_f64(),
            first_failure: self.first_failure,
        }
    }
}

/// Task-local generator derived from the suite seed and the check name.
fn rng_for(seed: u64, check: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in check.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100000001b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Relative Euler class computed by numeric continuation of the lifted
/// relator path, independent of the branch-selection group law.
pub fn oracle_euler(rep: &Representation<f64>, steps: u32) -> Result<i64> {
    let g = rep.sig.genus;
    let mut handle_paths = Vec::with_capacity(2 * g);
    for j in 0..g {
        handle_paths.push(ElementPath::canonical(&rep.a[j])?);
        handle_paths.push(ElementPath::canonical(&rep.b[j])?);
    }
    let mut peripheral_paths = Vec::with_capacity(rep.c.len());
    for (i, ci) in rep.c.iter().enumerate() {
        let class = classify(ci);
        if class == ElementClass::Elliptic || class == ElementClass::Identity {
            return Err(Error::InvalidBoundary {
                index: i + 1,
                class: class.name(),
            });
        }
        peripheral_paths.push(ElementPath::canonical(ci)?);
    }
    let path = |t: f64| {
        let mut acc = Psl2::identity();
        for j in 0..g {
            let a = handle_paths[2 * j].at(t);
            let b = handle_paths[2 * j + 1].at(t);
            let comm = mobius::mul(
                &mobius::mul(&a, &b),
                &mobius::mul(&mobius::inverse(&a), &mobius::inverse(&b)),
            );
            acc = mobius::mul(&acc, &comm);
        }
        for p in &peripheral_paths {
            acc = mobius::mul(&acc, &p.at(t));
        }
        acc
    };
    let end = lift_path(&path, steps)?;
    match classify_lifted(&end)? {
        LiftedClass::Central(n) => Ok(n),
        other => Err(Error::InconsistentRepresentation(format!(
            "relator continuation ended in {}({})",
            other.kind_name(),
            other.level()
        ))),
    }
}

const SL2_BASIS: [[f64; 4]; 3] = [
    [1.0, 0.0, 0.0, -1.0],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
];

fn from_coords(x: [f64; 3]) -> Mat2<f64> {
    Mat2::new(x[0], x[1], x[2], -x[0])
}

/// Closed-form exponential of a traceless 2x2 matrix.
fn sl2_exp(xi: &Mat2<f64>) -> Mat2<f64> {
    // xi^2 = -det(xi) I
    let d = xi.det();
    let (c, s) = if d > 1e-300 {
        let w = d.sqrt();
        (w.cos(), w.sin() / w)
    } else if d < -1e-300 {
        let w = (-d).sqrt();
        (w.cosh(), w.sinh() / w)
    } else {
        (1.0, 1.0)
    };
    Mat2::new(c + s * xi.a, s * xi.b, s * xi.c, c + s * xi.d)
}

fn traceless_coords(m: &Mat2<f64>) -> [f64; 3] {
    [(m.a - m.d) / 2.0, m.b, m.c]
}

fn sub_scaled(x: &Mat2<f64>, y: &Mat2<f64>, denom: f64) -> Mat2<f64> {
    Mat2::new(
        (x.a - y.a) / denom,
        (x.b - y.b) / denom,
        (x.c - y.c) / denom,
        (x.d - y.d) / denom,
    )
}

/// Singular values of a 3 x k matrix given by columns, via Jacobi sweeps
/// on the 3 x 3 Gram matrix.
fn singular_values_3xk(cols: &[[f64; 3]]) -> [f64; 3] {
    let mut g = [[0.0f64; 3]; 3];
    for col in cols {
        for i in 0..3 {
            for j in 0..3 {
                g[i][j] += col[i] * col[j];
            }
        }
    }
    for _ in 0..30 {
        let off = g[0][1].abs() + g[0][2].abs() + g[1][2].abs();
        if off < 1e-30 {
            break;
        }
        for p in 0..2 {
            for q in (p + 1)..3 {
                if g[p][q].abs() < 1e-30 {
                    continue;
                }
                let theta = 0.5 * (g[q][q] - g[p][p]) / g[p][q];
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..3 {
                    let (gpk, gqk) = (g[p][k], g[q][k]);
                    g[p][k] = c * gpk - s * gqk;
                    g[q][k] = s * gpk + c * gqk;
                }
                for k in 0..3 {
                    let (gkp, gkq) = (g[k][p], g[k][q]);
                    g[k][p] = c * gkp - s * gkq;
                    g[k][q] = s * gkp + c * gkq;
                }
            }
        }
    }
    let mut ev = [g[0][0].max(0.0), g[1][1].max(0.0), g[2][2].max(0.0)];
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    [ev[0].sqrt(), ev[1].sqrt(), ev[2].sqrt()]
}

fn rank_from_singular_values(sv: [f64; 3], threshold: f64) -> usize {
    if sv[0] <= 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > threshold * sv[0]).count()
}

/// Numerical rank of the differential of (A, B) -> A B A^{-1} B^{-1},
/// a 3 x 6 matrix in traceless coordinates; 3 exactly when A and B do not
/// commute.
pub fn jacobian_rank_commutator(a: &Mat2<f64>, b: &Mat2<f64>, h: f64) -> usize {
    let r = |x: &Mat2<f64>, y: &Mat2<f64>| x.mul(y).mul(&x.inverse()).mul(&y.inverse());
    let c0_inv = r(a, b).inverse();
    let mut cols = Vec::with_capacity(6);
    let mut push_cols = |side_a: bool| {
        for basis in SL2_BASIS {
            let xi = Mat2::new(h * basis[0], h * basis[1], h * basis[2], h * basis[3]);
            let (plus, minus) = if side_a {
                (r(&sl2_exp(&xi).mul(a), b), r(&sl2_exp(&xi.neg()).mul(a), b))
            } else {
                (r(a, &sl2_exp(&xi).mul(b)), r(a, &sl2_exp(&xi.neg()).mul(b)))
            };
            let d = sub_scaled(&plus, &minus, 2.0 * h);
            cols.push(traceless_coords(&d.mul(&c0_inv)));
        }
    };
    push_cols(true);
    push_cols(false);
    rank_from_singular_values(
        singular_values_3xk(&cols),
        Tolerances::default().rank_threshold,
    )
}

/// Numerical rank of the differential of (A, B) -> AB restricted to
/// parabolic pairs (tangent directions keep both traces stationary);
/// 3 exactly when A and B do not commute.
pub fn jacobian_rank_product_par(a: &Mat2<f64>, b: &Mat2<f64>, h: f64) -> Result<usize> {
    for m in [a, b] {
        let g = Psl2::from_mat_unchecked(m.clone());
        if !classify(&g).is_parabolic() {
            return Err(Error::ClassMismatch {
                expected: "parabolic",
                found: classify(&g).name(),
            });
        }
    }
    // tr(xi M) = 0 in traceless coordinates: f . x = 0 with f = (m_a - m_d, m_c, m_b)
    let tangent_basis = |m: &Mat2<f64>| -> [[f64; 3]; 2] {
        let f = [m.a - m.d, m.c, m.b];
        let norm = (f[0] * f[0] + f[1] * f[1] + f[2] * f[2]).sqrt();
        let f = [f[0] / norm, f[1] / norm, f[2] / norm];
        let pick = if f[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let dot = pick[0] * f[0] + pick[1] * f[1] + pick[2] * f[2];
        let mut u = [
            pick[0] - dot * f[0],
            pick[1] - dot * f[1],
            pick[2] - dot * f[2],
        ];
        let un = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
        u = [u[0] / un, u[1] / un, u[2] / un];
        let v = [
            f[1] * u[2] - f[2] * u[1],
            f[2] * u[0] - f[0] * u[2],
            f[0] * u[1] - f[1] * u[0],
        ];
        [u, v]
    };
    let prod_inv = a.mul(b).inverse();
    let mut cols = Vec::with_capacity(4);
    for x in tangent_basis(a) {
        let xi = from_coords([h * x[0], h * x[1], h * x[2]]);
        let d = sub_scaled(
            &sl2_exp(&xi).mul(a).mul(b),
            &sl2_exp(&xi.neg()).mul(a).mul(b),
            2.0 * h,
        );
        cols.push(traceless_coords(&d.mul(&prod_inv)));
    }
    for x in tangent_basis(b) {
        let xi = from_coords([h * x[0], h * x[1], h * x[2]]);
        let d = sub_scaled(
            &a.mul(&sl2_exp(&xi)).mul(b),
            &a.mul(&sl2_exp(&xi.neg())).mul(b),
            2.0 * h,
        );
        cols.push(traceless_coords(&d.mul(&prod_inv)));
    }
    Ok(rank_from_singular_values(
        singular_values_3xk(&cols),
        Tolerances::default().rank_threshold,
    ))
}

fn in_commutator_image(class: LiftedClass) -> bool {
    matches!(
        class,
        LiftedClass::Central(0)
            | LiftedClass::Hyp(-1..=1)
            | LiftedClass::ParPos(-1..=0)
            | LiftedClass::ParNeg(0..=1)
            | LiftedClass::Ell(-1)
            | LiftedClass::Ell(1)
    )
}

/// Image laws of the lifted product and commutator maps.
pub fn check_image_laws(samples: u64, seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();

    // lifted products over the closure of Hyp x Hyp avoid ParPos(1),
    // ParNeg(-1) and z^{+-1}
    let mut rec = Recorder::new("image-law-product");
    let mut rng = rng_for(seed, "image-law-product");
    for _ in 0..samples {
        let g1 = sample::random_nonelliptic(&mut rng);
        let g2 = sample::random_nonelliptic(&mut rng);
        match ev_product(&g1, &g2, LiftRule::Hyp0).and_then(|l| classify_lifted(&l)) {
            Ok(class) => {
                let forbidden = matches!(
                    class,
                    LiftedClass::ParPos(1)
                        | LiftedClass::ParNeg(-1)
                        | LiftedClass::Central(1)
                        | LiftedClass::Central(-1)
                );
                if forbidden {
                    rec.fail(format!("{class:?} from {g1:?}, {g2:?}"));
                } else {
                    rec.pass(0.0);
                }
            }
            Err(e) => rec.fail(format!("classification error: {e}")),
        }
    }
    out.push(rec.finish());

    // lifted commutators land in the nine-piece image set
    let mut rec = Recorder::new("image-law-commutator");
    let mut rng = rng_for(seed, "image-law-commutator");
    for _ in 0..samples {
        let g1 = sample::random_psl2(&mut rng);
        let g2 = sample::random_psl2(&mut rng);
        match classify_lifted(&ev_commutator(&g1, &g2)) {
            Ok(class) => {
                if in_commutator_image(class) {
                    rec.pass(0.0);
                } else {
                    rec.fail(format!("{class:?} from {g1:?}, {g2:?}"));
                }
            }
            Err(e) => rec.fail(format!("classification error: {e}")),
        }
    }
    out.push(rec.finish());

    // elliptic products of Par^s x Ell land in Ell_1, of Par^s x Par^s in Ell_s
    let mut rec = Recorder::new("image-law-elliptic");
    let mut rng = rng_for(seed, "image-law-elliptic");
    for _ in 0..samples {
        let s: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let g1 = sample::random_parabolic(&mut rng, s);
        let (g2, want_level) = if rng.gen_bool(0.5) {
            (sample::random_elliptic(&mut rng), 1i64)
        } else {
            (sample::random_parabolic(&mut rng, s), s as i64)
        };
        match ev_product(&g1, &g2, LiftRule::Hyp0OrEll1).and_then(|l| classify_lifted(&l)) {
            Ok(LiftedClass::Ell(k)) => {
                if k == want_level {
                    rec.pass(0.0);
                } else {
                    rec.fail(format!(
                        "Ell({k}) from {g1:?}, {g2:?}, wanted Ell({want_level})"
                    ));
                }
            }
            Ok(_) => rec.pass(0.0),
            Err(e) => rec.fail(format!("classification error: {e}")),
        }
    }
    out.push(rec.finish());
    out
}

/// Group laws of the cover arithmetic.
pub fn check_group_laws(samples: u64, seed: u64, tol: &Tolerances) -> CheckReport {
    let mut rec = Recorder::new("cover-group-laws");
    let mut rng = rng_for(seed, "cover-group-laws");
    for _ in 0..samples {
        let u = LiftedElement::from_parts(sample::random_psl2(&mut rng), rng.gen_range(-2..=2));
        let v = LiftedElement::from_parts(sample::random_psl2(&mut rng), rng.gen_range(-2..=2));
        let w = LiftedElement::from_parts(sample::random_psl2(&mut rng), rng.gen_range(-2..=2));
        let lhs = mul_lifted(&mul_lifted(&u, &v), &w);
        let rhs = mul_lifted(&u, &mul_lifted(&v, &w));
        let dev_assoc = (lhs.theta0() - rhs.theta0()).abs();
        let inv_dev = mul_lifted(&u, &inv_lifted(&u)).theta0().abs();
        let z = z_power(1);
        let central_dev = (mul_lifted(&u, &z).theta0() - mul_lifted(&z, &u).theta0()).abs();
        let dev = dev_assoc.max(inv_dev).max(central_dev);
        if dev <= tol.eps_alg {
            rec.pass(dev);
        } else {
            rec.fail(format!("deviation {dev:.3e} at {u:?}"));
        }
    }
    rec.finish()
}

/// Branch-selection multiplication against the path-continuation oracle.
pub fn check_oracle_agreement(samples: u64, seed: u64, tol: &Tolerances) -> CheckReport {
    let mut rec = Recorder::new("product-vs-continuation");
    let mut rng = rng_for(seed, "product-vs-continuation");
    let mut done = 0;
    while done < samples {
        let g1 = sample::random_nonelliptic(&mut rng);
        let g2 = sample::random_nonelliptic(&mut rng);
        let fast = match ev_product(&g1, &g2, LiftRule::Hyp0) {
            Ok(l) => l,
            Err(_) => continue,
        };
        match path_lift_product_oracle(&g1, &g2, LiftRule::Hyp0, tol.steps) {
            Ok(slow) => {
                let dev = (fast.theta0() - slow.theta0()).abs();
                if fast.winding() == slow.winding() && dev <= tol.eps_oracle {
                    rec.pass(dev);
                } else {
                    rec.fail(format!(
                        "winding {} vs {}, theta dev {dev:.3e} at {g1:?}, {g2:?}",
                        fast.winding(),
                        slow.winding()
                    ));
                }
            }
            Err(e) => rec.fail(format!("oracle error: {e}")),
        }
        done += 1;
    }
    rec.finish()
}

fn census_sigs() -> Vec<SurfaceSig> {
    let mut sigs = Vec::new();
    for g in 0..=4usize {
        for p in 1..=6usize {
            if g == 0 && p < 3 {
                continue;
            }
            let chi = 2i64 - 2 * g as i64 - p as i64;
            if (-6..=-1).contains(&chi) {
                sigs.push(SurfaceSig::new(g, p).unwrap());
            }
        }
    }
    sigs
}

fn random_nonempty_spec(rng: &mut ChaCha8Rng, max_abs_chi: i64) -> ComponentSpec {
    let sigs: Vec<SurfaceSig> = census_sigs()
        .into_iter()
        .filter(|s| s.chi() >= -max_abs_chi)
        .collect();
    loop {
        let sig = sigs[rng.gen_range(0..sigs.len())];
        let s = SignVector(
            (0..sig.punctures)
                .map(|_| [-1i8, 0, 1][rng.gen_range(0..3)])
                .collect(),
        );
        let (lo, hi) = crate::components::mw_bounds(sig, &s);
        if lo > hi {
            continue;
        }
        let n = rng.gen_range(lo..=hi);
        return ComponentSpec::new(sig, n, s).unwrap();
    }
}

/// Euler-class additivity over the almost-path decomposition on random
/// glued representations with hyperbolic decomposition curves.
pub fn check_additivity(samples: u64, seed: u64) -> CheckReport {
    let mut rec = Recorder::new("euler-additivity");
    let mut rng = rng_for(seed, "euler-additivity");
    for _ in 0..samples {
        let spec = random_nonempty_spec(&mut rng, 4);
        let rep = match random_rep_in_component(&spec, rng.gen()) {
            Ok(r) => r,
            Err(e) => {
                rec.fail(format!("construction failed for {spec:?}: {e}"));
                continue;
            }
        };
        let total = match relative_euler_class(&rep) {
            Ok(n) => n,
            Err(e) => {
                rec.fail(format!("euler class failed for {spec:?}: {e}"));
                continue;
            }
        };
        let dec = decomposition(rep.sig);
        let mut sum = 0i64;
        let mut ok = true;
        for piece in &dec.pieces {
            match restrict(&rep, piece).and_then(|r| relative_euler_class(&r)) {
                Ok(m) => sum += m,
                Err(e) => {
                    rec.fail(format!("restriction failed for {spec:?}: {e}"));
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        if sum == total {
            rec.pass(0.0);
        } else {
            rec.fail(format!("pieces sum to {sum}, total {total} for {spec:?}"));
        }
    }
    rec.finish()
}

/// PGL flip negates the Euler class and the sign vector.
pub fn check_pgl_flip(samples: u64, seed: u64) -> CheckReport {
    let mut rec = Recorder::new("pgl-flip");
    let mut rng = rng_for(seed, "pgl-flip");
    for _ in 0..samples {
        let spec = random_nonempty_spec(&mut rng, 4);
        let rep = match random_rep_in_component(&spec, rng.gen()) {
            Ok(r) => r,
            Err(e) => {
                rec.fail(format!("construction failed for {spec:?}: {e}"));
                continue;
            }
        };
        let flipped = crate::surface::pgl_flip(&rep);
        let ok = relative_euler_class(&flipped)
            .map(|n| n == -spec.n)
            .unwrap_or(false)
            && crate::surface::sign_vector(&flipped)
                .map(|s| s == spec.s.negate())
                .unwrap_or(false);
        if ok {
            rec.pass(0.0);
        } else {
            rec.fail(format!("flip mismatch for {spec:?}"));
        }
    }
    rec.finish()
}

/// Counting formulas against brute-force enumeration.
pub fn check_census() -> CheckReport {
    let mut rec = Recorder::new("census-formulas");
    for sig in census_sigs() {
        let all = match enumerate_components(sig, BoundaryFilter::TypePreserving) {
            Ok(v) => v,
            Err(e) => {
                rec.fail(format!("enumeration failed for {sig:?}: {e}"));
                continue;
            }
        };
        let mut ok = all.len() as u64 == count_total(sig);
        for n in sig.chi()..=-sig.chi() {
            let by_enum = all.iter().filter(|ci| ci.n == n).count() as u64;
            if by_enum != count_components_n(sig, n) {
                ok = false;
            }
        }
        if ok {
            rec.pass(0.0);
        } else {
            rec.fail(format!("formula/enumeration mismatch at {sig:?}"));
        }
    }
    rec.finish()
}

/// Witness round trips: every non-empty index over small surfaces produces
/// a representation classifying back to its index.
pub fn check_witnesses() -> CheckReport {
    let mut rec = Recorder::new("witness-round-trip");
    for sig in census_sigs().into_iter().filter(|s| s.chi() >= -5) {
        let all = match enumerate_components(sig, BoundaryFilter::All) {
            Ok(v) => v,
            Err(e) => {
                rec.fail(format!("enumeration failed for {sig:?}: {e}"));
                continue;
            }
        };
        for ci in all {
            let spec = ComponentSpec::new(sig, ci.n, ci.s.clone()).unwrap();
            match representative(&spec) {
                Ok(w) => {
                    let residual = crate::surface::relation_residual(&w.rep);
                    if residual <= 1e-9 {
                        rec.pass(residual);
                    } else {
                        rec.fail(format!("residual {residual:.3e} for {ci:?}"));
                    }
                }
                Err(e) => rec.fail(format!("witness failed for {ci:?}: {e}")),
            }
        }
    }
    rec.finish()
}

/// Continuation Euler class against the cocycle computation.
pub fn check_euler_oracle(samples: u64, seed: u64, tol: &Tolerances) -> CheckReport {
    let mut rec = Recorder::new("euler-vs-continuation");
    let mut rng = rng_for(seed, "euler-vs-continuation");
    for _ in 0..samples {
        let spec = random_nonempty_spec(&mut rng, 3);
        let rep = match random_rep_in_component(&spec, rng.gen()) {
            Ok(r) => r,
            Err(e) => {
                rec.fail(format!("construction failed for {spec:?}: {e}"));
                continue;
            }
        };
        match (relative_euler_class(&rep), oracle_euler(&rep, tol.steps)) {
            (Ok(n1), Ok(n2)) if n1 == n2 => rec.pass(0.0),
            (n1, n2) => rec.fail(format!("{n1:?} vs {n2:?} for {spec:?}")),
        }
    }
    rec.finish()
}

/// Finite-difference Jacobian rank dichotomies for the commutator and the
/// parabolic-restricted product maps.
pub fn check_jacobians(samples: u64, seed: u64, tol: &Tolerances) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let h = 1e-5;

    let mut rec = Recorder::new("jacobian-commutator");
    let mut rng = rng_for(seed, "jacobian-commutator");
    let mut done = 0;
    while done < samples {
        let commuting = rng.gen_bool(0.3);
        let (a, b) = if commuting {
            // two elements of a common hyperbolic one-parameter subgroup
            let base = sample::random_hyperbolic(&mut rng);
            let (vp, vm) = mobius::hyperbolic_frame(&base);
            let f = Mat2::new(vp[0], vm[0], vp[1], vm[1]);
            let scale = f.det().abs().sqrt();
            let f = Mat2::new(f.a / scale, f.b / scale, f.c / scale, f.d / scale);
            let fi = f.inverse();
            let (u, v): (f64, f64) = (rng.gen_range(0.3..1.2), rng.gen_range(0.3..1.2));
            (
                f.mul(&Mat2::new(u.exp(), 0.0, 0.0, (-u).exp())).mul(&fi),
                f.mul(&Mat2::new(v.exp(), 0.0, 0.0, (-v).exp())).mul(&fi),
            )
        } else {
            (
                sample::random_psl2(&mut rng).mat().clone(),
                sample::random_psl2(&mut rng).mat().clone(),
            )
        };
        let comm = a.mul(&b).mul(&a.inverse()).mul(&b.inverse());
        let dist = comm
            .dist(&Mat2::identity())
            .min(comm.dist(&Mat2::identity().neg()));
        if !commuting && dist < tol.commuting_exclusion {
            continue;
        }
        let rank = jacobian_rank_commutator(&a, &b, h);
        if (rank == 3) == !commuting {
            rec.pass(0.0);
        } else {
            rec.fail(format!("rank {rank} (commuting: {commuting})"));
        }
        done += 1;
    }
    out.push(rec.finish());

    let mut rec = Recorder::new("jacobian-product-parabolic");
    let mut rng = rng_for(seed, "jacobian-product-parabolic");
    let mut done = 0;
    while done < samples {
        let commuting = rng.gen_bool(0.3);
        let s1: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let (a, b) = if commuting {
            // powers of a common unipotent
            let g = sample::random_parabolic(&mut rng, s1);
            let a = g.trace_pos_rep();
            let rot = mobius::rotation_to_e1(mobius::parabolic_eigvec(&g));
            let n = rot.mul(&a).mul(&rot.inverse());
            let scaled = Mat2::new(1.0, 2.5 * n.b, 0.0, 1.0);
            let b = rot.inverse().mul(&scaled).mul(&rot);
            (a, b)
        } else {
            let s2: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            (
                sample::random_parabolic(&mut rng, s1).trace_pos_rep(),
                sample::random_parabolic(&mut rng, s2).trace_pos_rep(),
            )
        };
        let comm = a.mul(&b).mul(&a.inverse()).mul(&b.inverse());
        let dist = comm
            .dist(&Mat2::identity())
            .min(comm.dist(&Mat2::identity().neg()));
        if !commuting && dist < tol.commuting_exclusion {
            continue;
        }
        match jacobian_rank_product_par(&a, &b, h) {
            Ok(rank) => {
                if (rank == 3) == !commuting {
                    rec.pass(0.0);
                } else {
                    rec.fail(format!("rank {rank} (commuting: {commuting})"));
                }
            }
            Err(e) => rec.fail(format!("rank computation failed: {e}")),
        }
        done += 1;
    }
    out.push(rec.finish());
    out
}

/// Off-diagonal entry sign laws of the SL(2,R) projections of lifted
/// parabolic and elliptic elements.
pub fn check_sign_laws(samples: u64, seed: u64) -> CheckReport {
    let mut rec = Recorder::new("projection-sign-laws");
    let mut rng = rng_for(seed, "projection-sign-laws");
    for _ in 0..samples {
        let level_shift: i64 = rng.gen_range(-2..=2);
        if rng.gen_bool(0.5) {
            let g = sample::random_elliptic(&mut rng);
            let l = mul_lifted(&z_power(level_shift), &lift_canonical_ell1(&g).unwrap());
            let n = classify_lifted(&l).unwrap().level();
            let proj = sl2_projection(&l).unwrap();
            // odd level: sgn(a12) = sgn(n) = -sgn(a21); even: reversed
            let want_b = if n.rem_euclid(2) == 1 {
                n.signum() as f64
            } else {
                -n.signum() as f64
            };
            let ok = proj.b != 0.0
                && proj.c != 0.0
                && proj.b.signum() == want_b
                && proj.c.signum() == -want_b;
            if ok {
                rec.pass(0.0);
            } else {
                rec.fail(format!("elliptic sign law violated at level {n}: {proj:?}"));
            }
        } else {
            let s: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let g = sample::random_parabolic(&mut rng, s);
            let l = mul_lifted(&z_power(level_shift), &lift_canonical_hyp0(&g).unwrap());
            let n = classify_lifted(&l).unwrap().level();
            let proj = sl2_projection(&l).unwrap();
            let sgn = |x: f64| {
                if x > crate::scalar::EPS {
                    1i8
                } else if x < -crate::scalar::EPS {
                    -1
                } else {
                    0
                }
            };
            let (sb, sc) = (sgn(proj.b), sgn(proj.c));
            // even level: sign = sgn(a12) = -sgn(a21); odd level: reversed
            let expected = if n.rem_euclid(2) == 0 { s } else { -s };
            let ok =
                (sb == 0 || sb == expected) && (sc == 0 || sc == -expected) && (sb, sc) != (0, 0);
            if ok {
                rec.pass(0.0);
            } else {
                rec.fail(format!("parabolic sign law violated at level {n}: {proj:?}"));
            }
        }
    }
    rec.finish()
}

/// Suite configuration.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: u64,
    pub only: Option<Vec<String>>,
    pub tolerances: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 10_000,
            only: None,
            tolerances: Tolerances::default(),
        }
    }
}

/// Runs the configured checks with deterministic per-check seeds.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let tol = &config.tolerances;
    let wanted = |name: &str| {
        config
            .only
            .as_ref()
            .map(|names| names.iter().any(|n| n == name))
            .unwrap_or(true)
    };
    let mut checks = Vec::new();
    if wanted("image-laws") {
        checks.extend(check_image_laws(config.samples, config.seed));
    }
    if wanted("group-laws") {
        checks.push(check_group_laws(config.samples, config.seed, tol));
    }
    if wanted("oracle") {
        checks.push(check_oracle_agreement(
            (config.samples / 10).clamp(10, 1000),
            config.seed,
            tol,
        ));
        checks.push(check_euler_oracle(
            (config.samples / 100).clamp(5, 200),
            config.seed,
            tol,
        ));
    }
    if wanted("additivity") {
        checks.push(check_additivity(
            (config.samples / 50).clamp(20, 500),
            config.seed,
        ));
    }
    if wanted("pgl-flip") {
        checks.push(check_pgl_flip(
            (config.samples / 100).clamp(10, 200),
            config.seed,
        ));
    }
    if wanted("census") {
        checks.push(check_census());
    }
    if wanted("witnesses") {
        checks.push(check_witnesses());
    }
    if wanted("jacobians") {
        checks.extend(check_jacobians(
            (config.samples / 10).clamp(10, 2000),
            config.seed,
            tol,
        ));
    }
    if wanted("sign-laws") {
        checks.push(check_sign_laws(config.samples, config.seed));
    }
    SuiteReport {
        seed: config.seed,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_euler_on_explicit_reps() {
        // totally non-hyperbolic witness: Euler class 1
        let sig = SurfaceSig::new(0, 4).unwrap();
        let rep: Representation<f64> = crate::atlas::tnh_exceptional(sig, 1).unwrap();
        assert_eq!(oracle_euler(&rep, 1 << 12).unwrap(), 1);

        // abelian lone-sign witness: Euler class 0
        let rep: Representation<f64> = crate::atlas::abelian_exceptional(sig, 0, 1).unwrap();
        assert_eq!(oracle_euler(&rep, 1 << 12).unwrap(), 0);

        // punctured-torus discrete component: Euler class 1
        let spec = ComponentSpec::new(
            SurfaceSig::new(1, 1).unwrap(),
            1,
            SignVector::parse("+").unwrap(),
        )
        .unwrap();
        let w = representative(&spec).unwrap();
        assert_eq!(oracle_euler(&w.rep, 1 << 12).unwrap(), 1);
    }

    #[test]
    fn jacobian_ranks_dichotomy() {
        // commuting diagonal pair: rank <= 2
        let a = Mat2::new(2.0, 0.0, 0.0, 0.5);
        let b = Mat2::new(3.0, 0.0, 0.0, 1.0 / 3.0);
        assert!(jacobian_rank_commutator(&a, &b, 1e-5) <= 2);

        // the discrete pants pair: rank 3
        let a = Mat2::new(3.0, -2.0, 2.0, -1.0);
        let b = Mat2::new(1.0, 0.0, 2.0, 1.0);
        assert_eq!(jacobian_rank_commutator(&a, &b, 1e-5), 3);

        // parabolic pairs
        let up1 = Mat2::new(1.0, 1.0, 0.0, 1.0);
        let up2 = Mat2::new(1.0, 2.0, 0.0, 1.0);
        assert!(jacobian_rank_product_par(&up1, &up2, 1e-5).unwrap() <= 2);
        let low = Mat2::new(1.0, 0.0, 1.0, 1.0);
        assert_eq!(jacobian_rank_product_par(&up1, &low, 1e-5).unwrap(), 3);
        // non-parabolic input rejected
        let hyp = Mat2::new(2.0, 0.0, 0.0, 0.5);
        assert!(jacobian_rank_product_par(&hyp, &up1, 1e-5).is_err());
    }

    #[test]
    fn quick_suite_passes() {
        let config = SuiteConfig {
            seed: 7,
            samples: 300,
            only: None,
            tolerances: Tolerances {
                steps: 1 << 10,
                ..Default::default()
            },
        };
        let report = run_suite(&config);
        for check in &report.checks {
            assert_eq!(
                check.failures, 0,
                "{} failed: {:?}",
                check.name, check.first_failure
            );
        }
    }
}
