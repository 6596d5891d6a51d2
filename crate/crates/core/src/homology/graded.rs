use std::collections::BTreeMap;

use super::{HHProfile, Method};
use crate::linalg::Matrix;
use crate::Rational;

/// The two-term complex `g: span{e_1, e_2} → ⊕_{(α, ρ)} k` of a graded Kronecker algebra, split by
/// internal degree. Position 0 sits in internal degree 0; the slot `(α, ρ)` of position 1 sits in
/// internal degree `deg α − deg ρ`.
#[derive(Clone, Debug)]
pub struct GradedKroneckerComplex {
    /// Ordered arrow pairs `(α, ρ)` of position 1, grouped by internal degree.
    pub slots: BTreeMap<i64, Vec<(usize, usize)>>,
    /// Matrix of `g` into the internal-degree-0 slots: `g(e_1) = Σ_ρ (ρ, ρ) = −g(e_2)`.
    pub g: Matrix<Rational>,
}

pub fn graded_kronecker_complex(degrees: &[i64]) -> GradedKroneckerComplex {
    let n = degrees.len();
    let mut slots: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for alpha in 0..n {
        for rho in 0..n {
            slots
                .entry(degrees[alpha] - degrees[rho])
                .or_default()
                .push((alpha, rho));
        }
    }
    let zero_slots = slots.get(&0).map_or(&[][..], Vec::as_slice);
    let rows = zero_slots
        .iter()
        .map(|&(alpha, rho)| {
            if alpha == rho {
                vec![
                    (0, Rational::from_integer(1.into())),
                    (1, Rational::from_integer((-1).into())),
                ]
            } else {
                Vec::new()
            }
        })
        .collect();
    let g = Matrix::from_sparse_rows(zero_slots.len(), 2, rows);
    GradedKroneckerComplex { slots, g }
}

/// `dim HH^p` of a graded Kronecker algebra from its two-term complex, with total degree =
/// position + internal degree.
pub fn hh_graded_kronecker(degrees: &[i64]) -> HHProfile {
    let complex = graded_kronecker_complex(degrees);
    let rank = complex.g.rank();
    let mut profile = HHProfile::new(Method::GradedTwoTerm);
    profile.add(0, (2 - rank) as u64);
    for (&internal, slots) in &complex.slots {
        let image = if internal == 0 { rank } else { 0 };
        profile.add(1 + internal, (slots.len() - image) as u64);
    }
    profile.degree_bounds = degree_bounds(degrees);
    profile
}

/// Closed form in terms of `Δ = deg α − deg β` over ordered arrow pairs:
/// `HH^0 = #{Δ = −1} + 1`, `HH^1 = #{Δ = 0} − 1`, `HH^p = #{Δ = p − 1}` otherwise.
pub fn hh_kronecker_formula(degrees: &[i64]) -> HHProfile {
    let mut profile = HHProfile::new(Method::Formula);
    if degrees.is_empty() {
        profile.add(0, 2);
        return profile;
    }
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for a in degrees {
        for b in degrees {
            *counts.entry(a - b).or_insert(0) += 1;
        }
    }
    let count = |d: i64| counts.get(&d).copied().unwrap_or(0);
    profile.add(0, count(-1) + 1);
    profile.add(1, count(0) - 1);
    for (&delta, &c) in &counts {
        if delta != -1 && delta != 0 {
            profile.add(delta + 1, c);
        }
    }
    profile.degree_bounds = degree_bounds(degrees);
    profile
}

fn degree_bounds(degrees: &[i64]) -> Option<(i64, i64)> {
    Some((*degrees.iter().min()?, *degrees.iter().max()?))
}
