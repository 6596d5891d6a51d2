//! Path algebras of quivers with quadratic monomial relations, with a focus on two-vertex
//! algebras: Cartan matrices, quadratic duals, Hochschild cohomology, Ext groups and
//! derived-equivalence certificates.
//!
//! Linear algebra is generic over a [`Scalar`] field. Everything that reports a dimension uses
//! exact rational arithmetic ([`Rational`]); the floating point scalars exist for quick
//! experiments where a tolerance-based rank is acceptable.

pub mod algebra;
pub mod classify;
pub mod families;
pub mod homology;
pub mod linalg;
pub mod repr;
pub mod scalar;

pub use algebra::{
    cartan_matrix, enumerate_paths, quadratic_dual, top_dual_degree, validate, ArrowDecl,
    CartanMatrix, DualDegree, Path, PathBasis, QuiverPresentation, RawPresentation,
};
pub use families::{build_an, build_b, build_lambda, fibonacci, FamilyError, FamilyParams};
pub use linalg::Matrix;
pub use scalar::Scalar;

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
pub type RationalMatrix = Matrix<Rational>;
pub type F64Matrix = Matrix<f64>;
