//! Quiver presentations with quadratic monomial relations and their combinatorics: path bases,
//! Cartan matrices and quadratic duals.
//!
//! Paths compose right to left. A relation is stored as a `(later, earlier)` pair, so the pair
//! `(β, α)` kills the path `β·α` in which `α` acts first. With this convention the Cartan entry
//! `c[i][j]` counts allowed paths from `j` to `i`.

mod dual;
mod paths;
mod presentation;

pub use dual::{
    dual_degree_component, dual_is_finite, quadratic_dual, top_dual_degree, DualDegree,
};
pub use paths::{
    cartan_matrix, count_paths, enumerate_paths, is_finite_dimensional, CartanMatrix, Path,
    PathBasis, PathDisplay, PathError,
};
pub use presentation::{
    validate, Arrow, ArrowDecl, PresentationError, QuiverPresentation, RawPresentation,
};
