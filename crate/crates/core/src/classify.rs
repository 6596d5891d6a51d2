//! Derived-equivalence invariants and derived-simplicity certificates for algebras with two
//! simple modules.

use std::fmt;

use num_integer::Roots;
use thiserror::Error;

use crate::algebra::{top_dual_degree, DualDegree, QuiverPresentation};
use crate::homology::{hh_b_formula, hh_koszul, HHProfile, HomologyError};
use crate::repr::{min_resolution, simple_rep, PathAlgebra, ReprError};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("certificates need exactly two simple modules, got {0}")]
    WrongSimpleCount(usize),
    #[error("the algebra has infinite global dimension")]
    InfiniteGlobalDimension,
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Repr(#[from] ReprError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    DerivedSimple,
    ConsistentWithQuasiHereditary,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::DerivedSimple => "DerivedSimple",
            Verdict::ConsistentWithQuasiHereditary => "ConsistentWithQuasiHereditary",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A degree above 2 with nonzero Hochschild cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub degree: i64,
    pub dim: u64,
}

/// Hypotheses behind the dichotomy. The first two are checked on the presentation; the field is
/// never inspected, so algebraic closedness is an assumption of every certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assumptions {
    pub two_simple_modules: bool,
    pub finite_global_dimension: bool,
    pub algebraically_closed_field: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// `(x, y)` with `HH^*(B(x, y))` equal to the profile.
    pub candidates: Vec<(u64, u64)>,
    pub assumptions: Assumptions,
    pub global_dimension: usize,
    pub profile: HHProfile,
}

/// All `(x, y)` whose `B(x, y)` has this Hochschild profile, found by solving
/// `xy + 1 = h0`, `x² + y² − 1 = h1`, `xy = h2` (or the profile `{0: 2}` of `B(0, 0)`).
pub fn b_profile_solutions(profile: &HHProfile) -> Vec<(u64, u64)> {
    if profile.min_degree().is_some_and(|d| d < 0) || profile.max_degree().is_some_and(|d| d > 2) {
        return Vec::new();
    }
    let (h0, h1, h2) = (profile.get(0), profile.get(1), profile.get(2));
    let mut out = Vec::new();
    if (h0, h1, h2) == (2, 0, 0) {
        out.push((0, 0));
    }
    if h0 != h2 + 1 {
        return out;
    }
    let squares = h1 + 1;
    for x in 0..=squares.sqrt() {
        let rest = squares - x * x;
        let y = rest.sqrt();
        if y * y == rest && x * y == h2 && x + y >= 1 {
            out.push((x, y));
        }
    }
    out
}

/// Global dimension of a two-vertex monomial quadratic algebra, confirmed by resolving both
/// simples; the resolutions must end by the length the quadratic dual predicts.
fn global_dimension(presentation: &QuiverPresentation) -> Result<usize, ClassifyError> {
    let DualDegree::Finite(d) = top_dual_degree(presentation) else {
        return Err(ClassifyError::InfiniteGlobalDimension);
    };
    let algebra = PathAlgebra::new(presentation.clone())?;
    let mut gl = 0;
    for v in 0..algebra.vertex_count() {
        let r = min_resolution(&simple_rep::<Rational>(&algebra, v)?, d + 1);
        if !r.is_complete() {
            return Err(ClassifyError::InfiniteGlobalDimension);
        }
        gl = gl.max(r.length());
    }
    Ok(gl)
}

pub fn certify(presentation: &QuiverPresentation) -> Result<Certificate, ClassifyError> {
    let n = presentation.vertex_count();
    if n != 2 {
        return Err(ClassifyError::WrongSimpleCount(n));
    }
    let global_dimension = global_dimension(presentation)?;
    let profile = hh_koszul(presentation)?;
    let witness = profile
        .entries()
        .filter(|&(p, d)| p > 2 && d > 0)
        .last()
        .map(|(degree, dim)| Witness { degree, dim });
    let candidates = if witness.is_some() {
        Vec::new()
    } else {
        b_profile_solutions(&profile)
    };
    let verdict = match (witness, candidates.is_empty()) {
        (Some(_), _) => Verdict::DerivedSimple,
        (None, false) => Verdict::ConsistentWithQuasiHereditary,
        (None, true) => Verdict::Inconclusive,
    };
    let assumptions = Assumptions {
        two_simple_modules: true,
        finite_global_dimension: true,
        algebraically_closed_field: true,
    };
    Ok(Certificate {
        verdict,
        witness,
        candidates,
        assumptions,
        global_dimension,
        profile,
    })
}

/// Whether `B(x, y)` and `B(x2, y2)` are derived equivalent: equal products and equal sums of
/// squares, or both zero.
pub fn b_derived_equivalent(x: u64, y: u64, x2: u64, y2: u64) -> bool {
    let both_zero = x == 0 && y == 0 && x2 == 0 && y2 == 0;
    let neither_zero = (x, y) != (0, 0) && (x2, y2) != (0, 0);
    let solved =
        both_zero || (neither_zero && x * y == x2 * y2 && x * x + y * y == x2 * x2 + y2 * y2);
    let as_sets = (x, y) == (x2, y2) || (x, y) == (y2, x2);
    assert_eq!(
        solved, as_sets,
        "equation system disagrees with unordered comparison"
    );
    solved
}

/// Whether the algebra has the Hochschild profile of `B(x, y)`.
pub fn hh_invariance_check(
    presentation: &QuiverPresentation,
    x: u64,
    y: u64,
) -> Result<bool, ClassifyError> {
    let n = presentation.vertex_count();
    if n != 2 {
        return Err(ClassifyError::WrongSimpleCount(n));
    }
    Ok(hh_koszul(presentation)?.same_dims(&hh_b_formula(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_an, build_b};

    #[test]
    fn solutions_for_b_profiles() {
        assert_eq!(
            b_profile_solutions(&hh_b_formula(2, 3)),
            vec![(2, 3), (3, 2)]
        );
        assert_eq!(b_profile_solutions(&hh_b_formula(0, 0)), vec![(0, 0)]);
        assert_eq!(
            b_profile_solutions(&hh_b_formula(1, 0)),
            vec![(0, 1), (1, 0)]
        );
        assert_eq!(b_profile_solutions(&hh_b_formula(2, 2)), vec![(2, 2)]);
    }

    #[test]
    fn b23_is_consistent() {
        let c = certify(&build_b(2, 3)).unwrap();
        assert_eq!(c.verdict, Verdict::ConsistentWithQuasiHereditary);
        assert_eq!(c.candidates, vec![(2, 3), (3, 2)]);
        assert_eq!(c.global_dimension, 2);
    }

    #[test]
    fn semisimple_is_b00() {
        let c = certify(&build_b(0, 0)).unwrap();
        assert_eq!(c.candidates, vec![(0, 0)]);
        assert_eq!(c.global_dimension, 0);
    }

    #[test]
    fn a3_is_derived_simple() {
        let c = certify(&build_an(3, &[1, 1], &[1]).unwrap()).unwrap();
        assert_eq!(c.verdict, Verdict::DerivedSimple);
        assert_eq!(c.witness, Some(Witness { degree: 3, dim: 1 }));
    }

    #[test]
    fn examples_of_equivalence() {
        assert!(b_derived_equivalent(2, 3, 3, 2));
        assert!(!b_derived_equivalent(1, 4, 2, 2));
        assert!(b_derived_equivalent(0, 0, 0, 0));
        assert!(!b_derived_equivalent(0, 0, 1, 0));
    }

    #[test]
    fn invariance_examples() {
        assert!(hh_invariance_check(&build_an(2, &[3], &[2]).unwrap(), 3, 2).unwrap());
        assert!(hh_invariance_check(&build_b(0, 0), 0, 0).unwrap());
        let a3 = build_an(3, &[1, 1], &[1]).unwrap();
        for x in 0..=5 {
            for y in 0..=5 {
                assert!(!hh_invariance_check(&a3, x, y).unwrap());
            }
        }
    }

    #[test]
    fn loop_has_infinite_global_dimension() {
        let raw = crate::algebra::RawPresentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![crate::algebra::ArrowDecl::new("l", "1", "1")],
            relations: vec![("l".into(), "l".into())],
        };
        let p = crate::algebra::validate(&raw).unwrap();
        assert_eq!(
            certify(&p).unwrap_err(),
            ClassifyError::InfiniteGlobalDimension
        );
    }
}
