//! Surface-group presentations, representation data, the relative Euler
//! class and sign vector, almost-path pants decompositions and restriction
//! to pieces.
//!
//! The fixed presentation is
//!   < a_1, b_1, ..., a_g, b_g, c_1, ..., c_p |
//!     [a_1,b_1] ... [a_g,b_g] c_1 ... c_p >
//! with the commutators first. Decomposition curve words are derived in this
//! ordering from the slot sequence (d'_1, ..., d'_g, c_1, ..., c_p).

use crate::cover::{
    classify_lifted, lift_canonical_hyp0, mul_lifted, trace_lifted, LiftedClass, LiftedElement,
};
use crate::error::{Error, Result};
use crate::mobius::{self, classify, ElementClass, Psl2};
use crate::scalar::Scalar;

/// Surface signature: genus g and p >= 1 punctures with chi = 2 - 2g - p <= -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceSig {
    pub genus: usize,
    pub punctures: usize,
}

impl SurfaceSig {
    pub fn new(genus: usize, punctures: usize) -> Result<Self> {
        let sig = SurfaceSig { genus, punctures };
        if punctures == 0 || sig.chi() > -1 {
            return Err(Error::Parse(format!(
                "surface signature (g={genus}, p={punctures}) must have p >= 1 and chi <= -1"
            )));
        }
        Ok(sig)
    }

    pub fn chi(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.punctures as i64
    }
}

/// Signed generator letter of the surface group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    A(usize),
    B(usize),
    C(usize),
}

/// A word in the generators: a sequence of letters with exponents +-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<(Gen, i8)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Gen) -> Self {
        Word(vec![(g, 1)])
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// [a_j, b_j] as a word.
    pub fn commutator(j: usize) -> Self {
        Word(vec![
            (Gen::A(j), 1),
            (Gen::B(j), 1),
            (Gen::A(j), -1),
            (Gen::B(j), -1),
        ])
    }
}

/// Representation of the surface group: images of the generators, with the
/// relator product equal to +-I.
#[derive(Clone, Debug)]
pub struct Representation<S: Scalar> {
    pub sig: SurfaceSig,
    pub a: Vec<Psl2<S>>,
    pub b: Vec<Psl2<S>>,
    pub c: Vec<Psl2<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryType {
    TypePreserving,
    HyperbolicBoundary,
    Mixed,
    Invalid,
}

impl BoundaryType {
    pub fn name(self) -> &'static str {
        match self {
            BoundaryType::TypePreserving => "type-preserving",
            BoundaryType::HyperbolicBoundary => "hyperbolic",
            BoundaryType::Mixed => "mixed",
            BoundaryType::Invalid => "invalid",
        }
    }
}

/// Per-puncture signs: +1 positive parabolic, -1 negative parabolic,
/// 0 hyperbolic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn p_plus(&self) -> usize {
        self.0.iter().filter(|&&s| s > 0).count()
    }
    pub fn p_zero(&self) -> usize {
        self.0.iter().filter(|&&s| s == 0).count()
    }
    pub fn p_minus(&self) -> usize {
        self.0.iter().filter(|&&s| s < 0).count()
    }
    pub fn negate(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| -s).collect())
    }

    pub fn to_string_compact(&self) -> String {
        self.0
            .iter()
            .map(|s| match s.signum() {
                1 => '+',
                -1 => '-',
                _ => '0',
            })
            .collect()
    }

    pub fn parse(s: &str) -> Result<SignVector> {
        s.chars()
            .map(|ch| match ch {
                '+' => Ok(1),
                '-' => Ok(-1),
                '0' => Ok(0),
                _ => Err(Error::Parse(format!("invalid sign character {ch:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl<S: Scalar> Representation<S> {
    pub fn new(sig: SurfaceSig, a: Vec<Psl2<S>>, b: Vec<Psl2<S>>, c: Vec<Psl2<S>>) -> Result<Self> {
        if a.len() != sig.genus || b.len() != sig.genus || c.len() != sig.punctures {
            return Err(Error::Parse(format!(
                "generator counts ({}, {}, {}) do not match signature (g={}, p={})",
                a.len(),
                b.len(),
                c.len(),
                sig.genus,
                sig.punctures
            )));
        }
        Ok(Representation { sig, a, b, c })
    }

    pub fn gen_image(&self, g: Gen) -> &Psl2<S> {
        match g {
            Gen::A(j) => &self.a[j],
            Gen::B(j) => &self.b[j],
            Gen::C(i) => &self.c[i],
        }
    }

    /// Product of the relator [a_1,b_1]...[a_g,b_g] c_1...c_p in PSL(2,R).
    pub fn relator_product(&self) -> Psl2<S> {
        let mut acc = Psl2::identity();
        for j in 0..self.sig.genus {
            let comm = mobius::mul(
                &mobius::mul(&self.a[j], &self.b[j]),
                &mobius::mul(&mobius::inverse(&self.a[j]), &mobius::inverse(&self.b[j])),
            );
            acc = mobius::mul(&acc, &comm);
        }
        for ci in &self.c {
            acc = mobius::mul(&acc, ci);
        }
        acc
    }

    pub fn to_f64(&self) -> Representation<f64> {
        Representation {
            sig: self.sig,
            a: self.a.iter().map(|g| g.to_f64()).collect(),
            b: self.b.iter().map(|g| g.to_f64()).collect(),
            c: self.c.iter().map(|g| g.to_f64()).collect(),
        }
    }
}

/// Max-entry distance of the relator product from +-I.
pub fn relation_residual<S: Scalar>(rep: &Representation<S>) -> f64 {
    let p = rep.relator_product();
    p.mat().dist(Psl2::identity().mat())
}

pub fn boundary_type<S: Scalar>(rep: &Representation<S>) -> BoundaryType {
    let mut seen_par = false;
    let mut seen_hyp = false;
    for ci in &rep.c {
        match classify(ci) {
            ElementClass::Hyperbolic => seen_hyp = true,
            ElementClass::ParabolicPos | ElementClass::ParabolicNeg => seen_par = true,
            _ => return BoundaryType::Invalid,
        }
    }
    match (seen_par, seen_hyp) {
        (true, false) => BoundaryType::TypePreserving,
        (false, true) => BoundaryType::HyperbolicBoundary,
        (true, true) => BoundaryType::Mixed,
        (false, false) => BoundaryType::Invalid,
    }
}

fn peripheral_guard<S: Scalar>(rep: &Representation<S>) -> Result<()> {
    for (i, ci) in rep.c.iter().enumerate() {
        let class = classify(ci);
        if !class.is_nonelliptic() || class == ElementClass::Identity {
            return Err(Error::InvalidBoundary {
                index: i + 1,
                class: class.name(),
            });
        }
    }
    Ok(())
}

/// The relative Euler class: the central level of the lifted relator
/// product, with peripheral images lifted canonically into the closure of
/// Hyp_0 and handle generators lifted arbitrarily.
pub fn relative_euler_class<S: Scalar>(rep: &Representation<S>) -> Result<i64> {
    peripheral_guard(rep)?;
    let mut acc = LiftedElement::identity();
    for j in 0..rep.sig.genus {
        let comm = crate::cover::ev_commutator(&rep.a[j], &rep.b[j]);
        acc = mul_lifted(&acc, &comm);
    }
    for ci in &rep.c {
        acc = mul_lifted(&acc, &lift_canonical_hyp0(ci)?);
    }
    match classify_lifted(&acc)? {
        LiftedClass::Central(n) => Ok(n),
        other => Err(Error::InconsistentRepresentation(format!(
            "lifted relator product is {}({}) instead of central; relator residual {:.3e}",
            other.kind_name(),
            other.level(),
            relation_residual(rep)
        ))),
    }
}

pub fn sign_vector<S: Scalar>(rep: &Representation<S>) -> Result<SignVector> {
    peripheral_guard(rep)?;
    Ok(SignVector(
        rep.c
            .iter()
            .map(|ci| match classify(ci) {
                ElementClass::ParabolicPos => 1,
                ElementClass::ParabolicNeg => -1,
                _ => 0,
            })
            .collect(),
    ))
}

/// Index of the connected component containing the representation.
pub fn component_of<S: Scalar>(
    rep: &Representation<S>,
) -> Result<crate::components::ComponentIndex> {
    let boundary = boundary_type(rep);
    if boundary == BoundaryType::Invalid {
        peripheral_guard(rep)?;
        unreachable!();
    }
    Ok(crate::components::ComponentIndex {
        n: relative_euler_class(rep)?,
        s: sign_vector(rep)?,
        boundary,
    })
}

/// Conjugates every generator image by the orientation-reversing involution
/// [[0,1],[1,0]]; negates the relative Euler class and the sign vector.
pub fn pgl_flip<S: Scalar>(rep: &Representation<S>) -> Representation<S> {
    Representation {
        sig: rep.sig,
        a: rep.a.iter().map(mobius::pgl_conjugate).collect(),
        b: rep.b.iter().map(mobius::pgl_conjugate).collect(),
        c: rep.c.iter().map(mobius::pgl_conjugate).collect(),
    }
}

/// One piece of an almost-path decomposition.
#[derive(Clone, Debug)]
pub enum Piece {
    /// Three-hole sphere with the boundary words multiplying to the identity.
    Pants { boundary: [Word; 3] },
    /// One-hole torus around handle j, with boundary word d'_j = [a_j, b_j].
    Torus { handle: usize, boundary: Word },
}

/// Almost-path pants decomposition: g one-hole tori and g + p - 2 pants whose
/// dual graph restricted to the pants is a path.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub sig: SurfaceSig,
    pub pieces: Vec<Piece>,
    /// Words of the pants-chain curves d_1, ..., d_{g+p-3}.
    pub d_words: Vec<Word>,
    /// Words of the torus curves d'_1, ..., d'_g.
    pub dprime_words: Vec<Word>,
}

/// The fixed almost-path decomposition with slot sequence
/// (d'_1, ..., d'_g, c_1, ..., c_p) and chain curves
/// d_i = (x_1 ... x_{i+1})^{-1}.
pub fn decomposition(sig: SurfaceSig) -> Decomposition {
    let (g, p) = (sig.genus, sig.punctures);
    let slots: Vec<Word> = (0..g)
        .map(Word::commutator)
        .chain((0..p).map(|i| Word::letter(Gen::C(i))))
        .collect();
    let m = slots.len();

    let dprime_words: Vec<Word> = (0..g).map(Word::commutator).collect();
    let mut pieces: Vec<Piece> = (0..g)
        .map(|j| Piece::Torus {
            handle: j,
            boundary: Word::commutator(j),
        })
        .collect();

    let mut d_words: Vec<Word> = Vec::new();
    if sig.chi() == -1 {
        if g == 0 {
            pieces.push(Piece::Pants {
                boundary: [slots[0].clone(), slots[1].clone(), slots[2].clone()],
            });
        }
        return Decomposition {
            sig,
            pieces,
            d_words,
            dprime_words,
        };
    }

    // running product word x_1 ... x_{i+1}; d_i is its inverse
    let mut prefix = slots[0].clone();
    for i in 1..=(m - 3) {
        prefix = prefix.concat(&slots[i]);
        d_words.push(prefix.inverse());
    }
    for i in 0..(m - 2) {
        let first = if i == 0 {
            slots[0].clone()
        } else {
            d_words[i - 1].inverse()
        };
        let (second, third) = if i < m - 3 {
            (slots[i + 1].clone(), d_words[i].clone())
        } else {
            (slots[m - 2].clone(), slots[m - 1].clone())
        };
        pieces.push(Piece::Pants {
            boundary: [first, second, third],
        });
    }
    Decomposition {
        sig,
        pieces,
        d_words,
        dprime_words,
    }
}

pub fn evaluate_word<S: Scalar>(rep: &Representation<S>, w: &Word) -> Psl2<S> {
    let mut acc = Psl2::identity();
    for &(g, e) in &w.0 {
        let img = rep.gen_image(g);
        let img = if e >= 0 { img.clone() } else { mobius::inverse(img) };
        acc = mobius::mul(&acc, &img);
    }
    acc
}

/// Restriction of the representation to a piece of the decomposition, as a
/// representation of the piece's own surface group. All boundary words must
/// evaluate to non-elliptic, non-central elements.
pub fn restrict<S: Scalar>(rep: &Representation<S>, piece: &Piece) -> Result<Representation<S>> {
    match piece {
        Piece::Torus { handle, boundary } => {
            let val = evaluate_word(rep, boundary);
            let class = classify(&val);
            if !class.is_nonelliptic() || class == ElementClass::Identity {
                return Err(Error::RestrictionUndefined { class: class.name() });
            }
            Representation::new(
                SurfaceSig::new(1, 1)?,
                vec![rep.a[*handle].clone()],
                vec![rep.b[*handle].clone()],
                vec![mobius::inverse(&val)],
            )
        }
        Piece::Pants { boundary } => {
            let vals: Vec<Psl2<S>> = boundary.iter().map(|w| evaluate_word(rep, w)).collect();
            for v in &vals {
                let class = classify(v);
                if !class.is_nonelliptic() || class == ElementClass::Identity {
                    return Err(Error::RestrictionUndefined { class: class.name() });
                }
            }
            Representation::new(SurfaceSig::new(0, 3)?, vec![], vec![], vals)
        }
    }
}

/// True when every decomposition curve (d_i and d'_j) maps to a
/// non-hyperbolic element.
pub fn is_totally_non_hyperbolic<S: Scalar>(rep: &Representation<S>) -> Result<bool> {
    if boundary_type(rep) != BoundaryType::TypePreserving {
        return Err(Error::InconsistentRepresentation(
            "totally-non-hyperbolic analysis requires a type-preserving representation".into(),
        ));
    }
    let dec = decomposition(rep.sig);
    for w in dec.d_words.iter().chain(dec.dprime_words.iter()) {
        if classify(&evaluate_word(rep, w)) == ElementClass::Hyperbolic {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the restriction of the representation to the piece is abelian:
/// the piece's two generator images commute.
pub fn piece_is_abelian<S: Scalar>(rep: &Representation<S>, piece: &Piece) -> bool {
    let (g1, g2) = match piece {
        Piece::Torus { handle, .. } => (rep.a[*handle].clone(), rep.b[*handle].clone()),
        Piece::Pants { boundary } => (
            evaluate_word(rep, &boundary[0]),
            evaluate_word(rep, &boundary[1]),
        ),
    };
    let comm = mobius::mul(
        &mobius::mul(&g1, &g2),
        &mobius::mul(&mobius::inverse(&g1), &mobius::inverse(&g2)),
    );
    comm.is_identity()
}

/// Character of a three-hole sphere representation: traces of the canonical
/// lifts of c_1, c_2 and their product.
pub fn character_pants<S: Scalar>(rep: &Representation<S>) -> Result<(S, S, S)> {
    if rep.sig != (SurfaceSig { genus: 0, punctures: 3 }) {
        return Err(Error::Parse("character requires a (0,3) signature".into()));
    }
    let l1 = lift_canonical_hyp0(&rep.c[0])?;
    let l2 = lift_canonical_hyp0(&rep.c[1])?;
    Ok((
        trace_lifted(&l1)?,
        trace_lifted(&l2)?,
        trace_lifted(&mul_lifted(&l1, &l2))?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    pub(crate) fn pants_rep<S: Scalar>(c1: Psl2<S>, c2: Psl2<S>) -> Representation<S> {
        let c3 = mobius::inverse(&mobius::mul(&c1, &c2));
        Representation::new(SurfaceSig::new(0, 3).unwrap(), vec![], vec![], vec![c1, c2, c3])
            .unwrap()
    }

    pub(crate) fn torus_rep<S: Scalar>(a: Psl2<S>, b: Psl2<S>) -> Representation<S> {
        let comm = mobius::mul(
            &mobius::mul(&a, &b),
            &mobius::mul(&mobius::inverse(&a), &mobius::inverse(&b)),
        );
        Representation::new(
            SurfaceSig::new(1, 1).unwrap(),
            vec![a],
            vec![b],
            vec![mobius::inverse(&comm)],
        )
        .unwrap()
    }

    fn exact_pants_negative() -> Representation<Rat> {
        pants_rep(
            Psl2::from_ints(3, -2, 2, -1).unwrap(),
            Psl2::from_ints(1, 0, 2, 1).unwrap(),
        )
    }

    fn exact_pants_positive() -> Representation<Rat> {
        pants_rep(
            Psl2::from_ints(-1, 2, -2, 3).unwrap(),
            Psl2::from_ints(1, 2, 0, 1).unwrap(),
        )
    }

    #[test]
    fn residual_and_boundary_type() {
        let rep = exact_pants_negative();
        assert_eq!(relation_residual(&rep), 0.0);
        assert_eq!(boundary_type(&rep), BoundaryType::TypePreserving);

        // identity peripheral is invalid
        let bad: Representation<f64> = pants_rep(
            Psl2::from_ints(1, 1, 0, 1).unwrap(),
            Psl2::from_ints(1, -1, 0, 1).unwrap(),
        );
        assert_eq!(boundary_type(&bad), BoundaryType::Invalid);

        // perturbing one entry breaks the relator residual
        let rep: Representation<f64> = pants_rep(
            Psl2::from_ints(1, 1, 0, 1).unwrap(),
            Psl2::from_ints(1, 0, 1, 1).unwrap(),
        );
        let mut pert = rep.clone();
        let m = pert.c[0].mat().clone();
        let scale = 1.0 + 1e-3;
        pert.c[0] =
            Psl2::from_mat_unchecked(crate::mobius::Mat2::new(m.a * scale, m.b, m.c, m.d / scale));
        assert!(relation_residual(&pert) > 1e-4);
    }

    #[test]
    fn pants_euler_classes_exact() {
        let rep = exact_pants_negative();
        assert_eq!(relative_euler_class(&rep).unwrap(), -1);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![-1, -1, -1]);

        let rep = exact_pants_positive();
        assert_eq!(relative_euler_class(&rep).unwrap(), 1);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1, 1, 1]);

        let (x, y, z) = character_pants(&exact_pants_negative()).unwrap();
        assert_eq!(x, Rat::from_int(2));
        assert_eq!(y, Rat::from_int(2));
        assert_eq!(z, Rat::from_int(-2));
    }

    #[test]
    fn hp_pants_mixed_sign_example() {
        // +-[[1,1],[0,1]], +-[[1,0],[1,1]] lies in the mixed class with
        // Euler class 0 and signs (+1, -1, 0)
        let rep: Representation<Rat> = pants_rep(
            Psl2::from_ints(1, 1, 0, 1).unwrap(),
            Psl2::from_ints(1, 0, 1, 1).unwrap(),
        );
        assert_eq!(boundary_type(&rep), BoundaryType::Mixed);
        assert_eq!(relative_euler_class(&rep).unwrap(), 0);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1, -1, 0]);
    }

    #[test]
    fn abelian_parabolic_pants_character() {
        let rep: Representation<Rat> = pants_rep(
            Psl2::from_ints(1, 2, 0, 1).unwrap(),
            Psl2::from_ints(1, 3, 0, 1).unwrap(),
        );
        let (x, y, z) = character_pants(&rep).unwrap();
        assert_eq!((x, y, z), (Rat::from_int(2), Rat::from_int(2), Rat::from_int(2)));
        assert_eq!(relative_euler_class(&rep).unwrap(), 0);
    }

    #[test]
    fn punctured_torus_components_exact() {
        let h: Psl2<Rat> = Psl2::from_ratios((5, 3), (4, 3), (4, 3), (5, 3)).unwrap();
        let d: Psl2<Rat> = Psl2::from_ratios((2, 1), (0, 1), (0, 1), (1, 2)).unwrap();
        let p: Psl2<Rat> = Psl2::from_ints(1, 1, 0, 1).unwrap();

        let rep = torus_rep(h.clone(), d.clone());
        assert_eq!(relative_euler_class(&rep).unwrap(), -1);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![-1]);

        let rep = torus_rep(d.clone(), p.clone());
        assert_eq!(relative_euler_class(&rep).unwrap(), 0);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![-1]);

        let rep = torus_rep(p, d.clone());
        assert_eq!(relative_euler_class(&rep).unwrap(), 0);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1]);

        let rep = torus_rep(d, h);
        assert_eq!(relative_euler_class(&rep).unwrap(), 1);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1]);
    }

    #[test]
    fn pgl_flip_negates() {
        let rep = exact_pants_positive();
        let flipped = pgl_flip(&rep);
        assert_eq!(relative_euler_class(&flipped).unwrap(), -1);
        assert_eq!(sign_vector(&flipped).unwrap().0, vec![-1, -1, -1]);
        let twice = pgl_flip(&flipped);
        assert_eq!(relative_euler_class(&twice).unwrap(), 1);
        for i in 0..3 {
            assert!(twice.c[i] == rep.c[i]);
        }
    }

    #[test]
    fn decomposition_shapes() {
        let d = decomposition(SurfaceSig::new(0, 4).unwrap());
        assert_eq!(d.pieces.len(), 2);
        assert_eq!(d.d_words.len(), 1);
        // d_1 = (c_1 c_2)^{-1}
        assert_eq!(
            d.d_words[0],
            Word(vec![(Gen::C(1), -1), (Gen::C(0), -1)])
        );

        let d = decomposition(SurfaceSig::new(1, 2).unwrap());
        assert_eq!(d.pieces.len(), 2); // one torus + one pants
        assert_eq!(d.d_words.len(), 0);
        assert_eq!(d.dprime_words.len(), 1);

        let d = decomposition(SurfaceSig::new(1, 1).unwrap());
        assert_eq!(d.pieces.len(), 1);

        let d = decomposition(SurfaceSig::new(2, 3).unwrap());
        assert_eq!(d.pieces.len(), 2 + 3);
        assert_eq!(d.d_words.len(), 2);
        assert_eq!(d.dprime_words.len(), 2);
    }

    #[test]
    fn decomposition_words_consistent_with_relator() {
        // each pants piece's boundary words multiply to the identity in any
        // valid representation
        use crate::sample;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for (g, p) in [(0, 4), (0, 5), (1, 2), (2, 3), (3, 1)] {
            let sig = SurfaceSig::new(g, p).unwrap();
            let dec = decomposition(sig);
            // random assignment that satisfies the relator: choose all
            // generators freely except c_p, which closes the relator
            let a: Vec<_> = (0..g).map(|_| sample::random_psl2(&mut rng)).collect();
            let b: Vec<_> = (0..g).map(|_| sample::random_psl2(&mut rng)).collect();
            let mut c: Vec<_> = (0..p - 1).map(|_| sample::random_psl2(&mut rng)).collect();
            let mut acc = Psl2::identity();
            for j in 0..g {
                let comm = mobius::mul(
                    &mobius::mul(&a[j], &b[j]),
                    &mobius::mul(&mobius::inverse(&a[j]), &mobius::inverse(&b[j])),
                );
                acc = mobius::mul(&acc, &comm);
            }
            for ci in &c {
                acc = mobius::mul(&acc, ci);
            }
            c.push(mobius::inverse(&acc));
            let rep = Representation::new(sig, a, b, c).unwrap();
            assert!(relation_residual(&rep) < 1e-9);
            for piece in &dec.pieces {
                if let Piece::Pants { boundary } = piece {
                    let prod = mobius::mul(
                        &mobius::mul(
                            &evaluate_word(&rep, &boundary[0]),
                            &evaluate_word(&rep, &boundary[1]),
                        ),
                        &evaluate_word(&rep, &boundary[2]),
                    );
                    assert!(prod.is_identity(), "pants boundary words do not close");
                }
            }
        }
    }

    #[test]
    fn evaluate_word_basics() {
        let rep = exact_pants_negative();
        assert!(evaluate_word(&rep, &Word::empty()).is_identity());
        let w = Word(vec![(Gen::C(0), 1), (Gen::C(1), 1), (Gen::C(2), 1)]);
        assert!(evaluate_word(&rep, &w).is_identity());
    }

    #[test]
    fn restriction_examples() {
        // a (0,4) representation built from two upper/lower parabolic pants
        let c1: Psl2<Rat> = Psl2::from_ints(1, 1, 0, 1).unwrap();
        let c2: Psl2<Rat> = Psl2::from_ints(1, 0, 1, 1).unwrap();
        let c12 = mobius::mul(&c1, &c2);
        let c3 = Psl2::from_ints(1, 0, 2, 1).unwrap();
        let c4 = mobius::inverse(&mobius::mul(&c12, &c3));
        let rep = Representation::new(
            SurfaceSig::new(0, 4).unwrap(),
            vec![],
            vec![],
            vec![c1, c2, c3, c4],
        )
        .unwrap();
        assert_eq!(relation_residual(&rep), 0.0);
        let dec = decomposition(rep.sig);
        let mut euler_sum = 0;
        for piece in dec.pieces.iter() {
            let r = restrict(&rep, piece).unwrap();
            euler_sum += relative_euler_class(&r).unwrap();
        }
        assert_eq!(euler_sum, relative_euler_class(&rep).unwrap());
    }

    #[test]
    fn totally_non_hyperbolic_abelian_family() {
        // abelian type-preserving representation with a lone positive sign
        let p = 4;
        let mut c = vec![Psl2::<Rat>::from_ints(1, (p - 1) as i64, 0, 1).unwrap()];
        for _ in 1..p {
            c.push(Psl2::from_ints(1, -1, 0, 1).unwrap());
        }
        let rep = Representation::new(SurfaceSig::new(0, p).unwrap(), vec![], vec![], c).unwrap();
        assert_eq!(relative_euler_class(&rep).unwrap(), 0);
        assert_eq!(sign_vector(&rep).unwrap().0, vec![1, -1, -1, -1]);
        assert!(is_totally_non_hyperbolic(&rep).unwrap());
        let dec = decomposition(rep.sig);
        for piece in &dec.pieces {
            assert!(piece_is_abelian(&rep, piece));
        }
    }
}
