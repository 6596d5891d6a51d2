//! Hochschild cohomology dimensions.
//!
//! Four independent routes are available:
//!
//! * [`hh_koszul`]: the small cochain complex built from the quadratic dual, valid for ungraded
//!   quadratic monomial algebras;
//! * [`hh_bar_oracle`]: the normalized bar complex relative to the span of the vertices, with no
//!   Koszul input at all (slow, used to cross-check the previous one);
//! * [`hh_graded_kronecker`]: the two-term complex of a graded Kronecker algebra;
//! * closed forms: [`hh_kronecker_formula`] and [`hh_top_formula`].

mod bar;
mod complex;
mod formula;
mod graded;
mod koszul;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use bar::{
    bar_cochain_complex, bar_cochain_dims, bar_differentials_square_to_zero, hh_bar_oracle,
    DEFAULT_MAX_DIM,
};
pub use complex::{alternating_sum, euler_characteristic, CochainComplex};
pub use formula::{hh_b_formula, hh_top_formula, hh_top_formula_revised, FormulaError};
pub use graded::{
    graded_kronecker_complex, hh_graded_kronecker, hh_kronecker_formula, GradedKroneckerComplex,
};
pub use koszul::{hh_koszul, koszul_cochain_complex, koszul_complex};

use crate::algebra::PathError;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("arrow `{0}` has nonzero internal degree; this method needs an ungraded algebra")]
    GradedInput(String),
    #[error("the quadratic dual is infinite-dimensional")]
    InfiniteDual,
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("cochain space C^{p} has dimension {dim}, above the cap of {cap}")]
    SizeLimit { p: usize, dim: u128, cap: usize },
    #[error("the formula needs n >= 2, got n = {0}")]
    DomainError(usize),
}

/// Which computation produced a profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Koszul,
    Bar,
    GradedTwoTerm,
    Formula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Koszul => "koszul",
            Method::Bar => "bar",
            Method::GradedTwoTerm => "graded-two-term",
            Method::Formula => "formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `p ↦ dim HH^p`, finitely supported. Zero entries are never stored, so two profiles compare
/// equal exactly when they agree in every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHProfile {
    dims: BTreeMap<i64, u64>,
    pub method: Method,
    /// Smallest and largest arrow degree, for profiles of graded Kronecker algebras.
    pub degree_bounds: Option<(i64, i64)>,
}

impl HHProfile {
    pub fn new(method: Method) -> Self {
        HHProfile {
            dims: BTreeMap::new(),
            method,
            degree_bounds: None,
        }
    }

    pub fn from_pairs(method: Method, pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut profile = HHProfile::new(method);
        for (p, d) in pairs {
            profile.add(p, d);
        }
        profile
    }

    pub fn add(&mut self, p: i64, dim: u64) {
        if dim > 0 {
            *self.dims.entry(p).or_insert(0) += dim;
        }
    }

    pub fn get(&self, p: i64) -> u64 {
        self.dims.get(&p).copied().unwrap_or(0)
    }

    /// Nonzero entries in increasing degree.
    pub fn entries(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&p, &d)| (p, d))
    }

    pub fn as_map(&self) -> &BTreeMap<i64, u64> {
        &self.dims
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.dims.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.dims.keys().next_back().copied()
    }

    /// Same dimensions, regardless of method and degree bounds.
    pub fn same_dims(&self, other: &HHProfile) -> bool {
        self.dims == other.dims
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.entries()
            .map(|(p, d)| {
                if p.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }
}

impl fmt::Display for HHProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().map(|(p, d)| format!("{p}:{d}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
