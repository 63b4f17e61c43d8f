//! Component-index theory: the generalized Milnor-Wood inequality,
//! exceptional triples, non-emptiness, counting formulas and enumeration.

use crate::error::{Error, Result};
use crate::surface::{BoundaryType, SignVector, SurfaceSig};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Index of a connected component of the representation space: relative
/// Euler class, boundary sign vector and boundary type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentIndex {
    pub n: i64,
    pub s: SignVector,
    pub boundary: BoundaryType,
}

/// Which boundary conditions an enumeration covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryFilter {
    TypePreserving,
    Mixed,
    Hyperbolic,
    All,
}

impl BoundaryFilter {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "tp" => Ok(BoundaryFilter::TypePreserving),
            "mixed" => Ok(BoundaryFilter::Mixed),
            "hyp" => Ok(BoundaryFilter::Hyperbolic),
            "all" => Ok(BoundaryFilter::All),
            _ => Err(Error::Parse(format!(
                "boundary filter must be tp|mixed|hyp|all, got {s:?}"
            ))),
        }
    }

    fn admits(self, s: &SignVector) -> bool {
        let p0 = s.p_zero();
        let p = s.0.len();
        match self {
            BoundaryFilter::TypePreserving => p0 == 0,
            BoundaryFilter::Hyperbolic => p0 == p,
            BoundaryFilter::Mixed => p0 > 0 && p0 < p,
            BoundaryFilter::All => true,
        }
    }
}

pub fn boundary_type_of_signs(s: &SignVector) -> BoundaryType {
    let p0 = s.p_zero();
    if p0 == 0 {
        BoundaryType::TypePreserving
    } else if p0 == s.0.len() {
        BoundaryType::HyperbolicBoundary
    } else {
        BoundaryType::Mixed
    }
}

/// The generalized Milnor-Wood bounds: chi + p_+ <= n <= -chi - p_-.
/// The interval may be empty (lo > hi).
pub fn mw_bounds(sig: SurfaceSig, s: &SignVector) -> (i64, i64) {
    let chi = sig.chi();
    (chi + s.p_plus() as i64, -chi - s.p_minus() as i64)
}

/// Exceptional triples: genus zero, all peripheral signs nonzero, and
/// either n = 0 with a lone sign, or n = +-1 with all signs equal to n.
pub fn is_exceptional(sig: SurfaceSig, n: i64, s: &SignVector) -> bool {
    if sig.genus != 0 || s.p_zero() != 0 {
        return false;
    }
    let (pp, pm) = (s.p_plus(), s.p_minus());
    match n {
        0 => pm == 1 || pp == 1,
        1 => pm == 0,
        -1 => pp == 0,
        _ => false,
    }
}

/// Whether the component with index (n, s) is non-empty: the generalized
/// Milnor-Wood inequality holds, or the triple is exceptional.
pub fn is_nonempty(sig: SurfaceSig, n: i64, s: &SignVector) -> bool {
    let (lo, hi) = mw_bounds(sig, s);
    (lo <= n && n <= hi) || is_exceptional(sig, n, s)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k.min(n - k) {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc.to_u64().expect("binomial fits u64 for censused sizes")
}

/// Number of connected components of the type-preserving space with relative
/// Euler class n: a binomial sum over admissible sign vectors, plus the
/// exceptional components in genus zero (2p for n = 0, one for n = +-1).
pub fn count_components_n(sig: SurfaceSig, n: i64) -> u64 {
    let chi = sig.chi();
    let p = sig.punctures as i64;
    let lo = (n + p + chi).max(0);
    let hi = (n - chi).min(p);
    let mut total = 0u64;
    let mut k = lo;
    while k <= hi {
        total += binomial(sig.punctures, k as usize);
        k += 1;
    }
    if sig.genus == 0 {
        if n == 0 {
            total += 2 * sig.punctures as u64;
        } else if n == 1 || n == -1 {
            total += 1;
        }
    }
    total
}

/// Total number of connected components of the type-preserving space.
pub fn count_total(sig: SurfaceSig) -> u64 {
    let chi = sig.chi();
    let mut total = 0u64;
    for n in chi..=-chi {
        let p = sig.punctures as i64;
        let lo = (n + p + chi).max(0);
        let hi = (n - chi).min(p);
        let mut k = lo;
        while k <= hi {
            total += binomial(sig.punctures, k as usize);
            k += 1;
        }
    }
    if sig.genus == 0 {
        total += 2 * sig.punctures as u64 + 2;
    }
    total
}

/// Census table: per-Euler-class counts of type-preserving components.
#[derive(Clone, Debug)]
pub struct CountTable {
    pub sig: SurfaceSig,
    pub per_n: Vec<(i64, u64)>,
    pub total: u64,
}

pub fn count_table(sig: SurfaceSig) -> CountTable {
    let chi = sig.chi();
    let per_n: Vec<(i64, u64)> = (chi..=-chi)
        .map(|n| (n, count_components_n(sig, n)))
        .collect();
    CountTable {
        sig,
        per_n,
        total: count_total(sig),
    }
}

/// Enumerates all non-empty component indices matching the boundary filter,
/// in lexicographic sign order and increasing Euler class.
pub fn enumerate_components(sig: SurfaceSig, filter: BoundaryFilter) -> Result<Vec<ComponentIndex>> {
    let p = sig.punctures;
    if p > 16 {
        return Err(Error::ResourceGuard(format!(
            "enumeration over 3^{p} sign vectors refused (p > 16)"
        )));
    }
    let chi = sig.chi();
    let mut out = Vec::new();
    let mut signs = vec![-1i8; p];
    loop {
        let s = SignVector(signs.clone());
        if filter.admits(&s) {
            for n in chi..=-chi {
                if is_nonempty(sig, n, &s) {
                    out.push(ComponentIndex {
                        n,
                        s: s.clone(),
                        boundary: boundary_type_of_signs(&s),
                    });
                }
            }
        }
        // advance odometer over {-1, 0, +1}^p
        let mut i = 0;
        loop {
            if i == p {
                return Ok(out);
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

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g: usize, p: usize) -> SurfaceSig {
        SurfaceSig::new(g, p).unwrap()
    }

    fn sv(s: &str) -> SignVector {
        SignVector::parse(s).unwrap()
    }

    #[test]
    fn mw_bounds_examples() {
        assert_eq!(mw_bounds(sig(1, 1), &sv("+")), (0, 1));
        assert_eq!(mw_bounds(sig(0, 3), &sv("+++")), (2, 1)); // empty interval
        assert_eq!(mw_bounds(sig(0, 4), &sv("0000")), (-2, 2));
    }

    #[test]
    fn exceptional_examples() {
        assert!(is_exceptional(sig(0, 4), 1, &sv("++++")));
        assert!(is_exceptional(sig(0, 4), 0, &sv("+---")));
        assert!(!is_exceptional(sig(1, 2), 1, &sv("++")));
        assert!(!is_exceptional(sig(0, 4), 0, &sv("++--")));
        assert!(!is_exceptional(sig(0, 4), 2, &sv("++++")));
    }

    #[test]
    fn three_holed_sphere_type_preserving_census() {
        // exactly eight non-empty type-preserving indices
        let s = sig(0, 3);
        let all = enumerate_components(s, BoundaryFilter::TypePreserving).unwrap();
        assert_eq!(all.len(), 8);
        assert!(all
            .iter()
            .any(|ci| ci.n == -1 && ci.s == sv("---")));
        assert!(all.iter().any(|ci| ci.n == 1 && ci.s == sv("+++")));
        let zeros = all.iter().filter(|ci| ci.n == 0).count();
        assert_eq!(zeros, 6);
        // and none outside those
        assert!(!is_nonempty(s, 1, &sv("++-")));
        assert!(!is_nonempty(s, -1, &sv("--+")));
        assert!(!is_nonempty(s, 0, &sv("+++")));
        assert!(!is_nonempty(s, 2, &sv("+++")));
    }

    #[test]
    fn three_holed_sphere_mixed() {
        assert!(is_nonempty(sig(0, 3), 0, &sv("+-0")));
        assert!(!is_nonempty(sig(0, 3), 1, &sv("+-0")));
        assert!(is_nonempty(sig(0, 3), 1, &sv("++0")));
        assert!(!is_nonempty(sig(0, 3), -1, &sv("++0")));
        assert!(is_nonempty(sig(0, 3), 0, &sv("+00")));
        assert!(is_nonempty(sig(0, 3), 1, &sv("+00")));
        assert!(!is_nonempty(sig(0, 3), -1, &sv("+00")));
    }

    #[test]
    fn punctured_torus_census() {
        let s = sig(1, 1);
        let all = enumerate_components(s, BoundaryFilter::TypePreserving).unwrap();
        let expect = [(-1, "-"), (0, "+"), (0, "-"), (1, "+")];
        assert_eq!(all.len(), 4);
        for (n, signs) in expect {
            assert!(all.iter().any(|ci| ci.n == n && ci.s == sv(signs)));
        }
        assert_eq!(count_total(s), 4);
        assert_eq!(count_components_n(s, 0), 2);
    }

    #[test]
    fn four_holed_sphere_counts() {
        let s = sig(0, 4);
        assert_eq!(count_components_n(s, 1), 5);
        assert_eq!(count_components_n(s, -1), 5);
        assert_eq!(count_components_n(s, 0), 14);
        assert_eq!(count_components_n(s, 2), 1);
        assert_eq!(count_components_n(s, -2), 1);
        assert_eq!(count_total(s), 26);
    }

    #[test]
    fn formula_matches_enumeration() {
        for g in 0..=3usize {
            for p in 1..=6usize {
                let chi = 2i64 - 2 * g as i64 - p as i64;
                if !(-6..=-1).contains(&chi) || (g == 0 && p < 3) {
                    continue;
                }
                let s = sig(g, p);
                let all = enumerate_components(s, BoundaryFilter::TypePreserving).unwrap();
                assert_eq!(all.len() as u64, count_total(s), "total for {s:?}");
                for n in s.chi()..=-s.chi() {
                    let by_formula = count_components_n(s, n);
                    let by_enum = all.iter().filter(|ci| ci.n == n).count() as u64;
                    assert_eq!(by_formula, by_enum, "count for {s:?}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn mw_and_exceptional_disjoint() {
        for g in 0..=3usize {
            for p in 1..=6usize {
                let chi = 2i64 - 2 * g as i64 - p as i64;
                if !(-6..=-1).contains(&chi) || (g == 0 && p < 3) {
                    continue;
                }
                let s = sig(g, p);
                for ci in enumerate_components(s, BoundaryFilter::All).unwrap() {
                    let (lo, hi) = mw_bounds(s, &ci.s);
                    let mw = lo <= ci.n && ci.n <= hi;
                    let exc = is_exceptional(s, ci.n, &ci.s);
                    assert!(mw ^ exc, "exactly one of MW/exceptional for {ci:?}");
                }
            }
        }
    }

    #[test]
    fn negation_symmetry() {
        for g in 0..=2usize {
            for p in 1..=5usize {
                let chi = 2i64 - 2 * g as i64 - p as i64;
                if !(-6..=-1).contains(&chi) || (g == 0 && p < 3) {
                    continue;
                }
                let s = sig(g, p);
                for ci in enumerate_components(s, BoundaryFilter::All).unwrap() {
                    assert!(is_nonempty(s, -ci.n, &ci.s.negate()));
                }
            }
        }
    }

    #[test]
    fn hyperbolic_boundary_is_plain_milnor_wood() {
        let s = sig(0, 4);
        let zeros = sv("0000");
        for n in -4..=4 {
            assert_eq!(
                is_nonempty(s, n, &zeros),
                (-2..=2).contains(&n),
                "n = {n}"
            );
        }
    }
}
