//! Finite-dimensional right modules, given as quiver representations.
//!
//! An arrow `α: i → j` acts by a linear map from the vertex-`j` space to the vertex-`i` space
//! (right multiplication by `α` sends `e_j`-parts to `e_i`-parts), and a relation `(β, α)` demands
//! `M_α ∘ M_β = 0`. The projective `e_iA` has the paths `j → i` as basis of its vertex-`j` space.

mod heredity;
mod hom;
mod projective;
mod resolution;
mod structure;
mod tilting;

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{enumerate_paths, Path, PathBasis, PathError, QuiverPresentation};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::Rational;

pub use heredity::{
    is_heredity_ideal, is_quasi_hereditary_two_vertex, HeredityVerdict, QuasiHereditaryVerdict,
};
pub use hom::{hom_dimension, hom_space};
pub use projective::{
    ideal_rep, projective_rep, quotient_by_ideal, regular_rep, simple_rep, ProjectiveSum,
};
pub use resolution::{
    ext_complex, ext_dims, min_resolution, projective_cover, ProjectiveCover, Resolution,
};
pub use structure::{
    cokernel, image, kernel, quotient, radical, socle, span_submodule, top, Quotient, Submodule,
};
pub use tilting::{tilting_check, TiltingReport};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("representations live over different algebras")]
    AlgebraMismatch,
    #[error("action of arrow `{arrow}` has shape {got:?}, expected {expected:?}")]
    Shape {
        arrow: String,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("relation ({later}, {earlier}) is not satisfied by the representation")]
    RelationViolated { later: String, earlier: String },
    #[error("vertex index {0} is out of range")]
    UnknownVertex(usize),
    #[error("the quasi-heredity check handles exactly two vertices, got {0}")]
    MoreThanTwoVertices(usize),
    #[error("{0}")]
    DomainError(String),
}

/// A finite-dimensional algebra given by a presentation together with its path basis.
#[derive(Debug)]
pub struct PathAlgebra {
    presentation: QuiverPresentation,
    basis: PathBasis,
    /// `times_arrow[w][α]`: basis id of `w·α` (`α` acting first), or `None` when zero.
    times_arrow: Vec<Vec<Option<usize>>>,
    /// `drop_first[w]`: `w` without its first-acting arrow (None for trivial paths).
    drop_first: Vec<Option<usize>>,
}

impl PathAlgebra {
    pub fn new(presentation: QuiverPresentation) -> Result<Arc<Self>, ReprError> {
        let basis = enumerate_paths(&presentation)?;
        let arrow_paths: Vec<Path> = (0..presentation.arrows().len())
            .map(|a| Path::from_arrow(&presentation, a))
            .collect();
        let times_arrow = basis
            .paths()
            .iter()
            .map(|w| {
                arrow_paths
                    .iter()
                    .map(|a| {
                        a.compose_after(&presentation, w)
                            .and_then(|p| basis.index_of(&p))
                    })
                    .collect()
            })
            .collect();
        let drop_first = basis
            .paths()
            .iter()
            .map(|w| {
                w.drop_first(&presentation)
                    .map(|p| basis.index_of(&p).expect("subpath"))
            })
            .collect();
        Ok(Arc::new(PathAlgebra {
            presentation,
            basis,
            times_arrow,
            drop_first,
        }))
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn basis(&self) -> &PathBasis {
        &self.basis
    }

    pub fn vertex_count(&self) -> usize {
        self.presentation.vertex_count()
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    /// `w·α`, the path `α` followed by `w`.
    pub fn times_arrow(&self, w: usize, arrow: usize) -> Option<usize> {
        self.times_arrow[w][arrow]
    }

    /// `w·u`, the path `u` followed by `w`.
    pub fn times_path(&self, w: usize, u: usize) -> Option<usize> {
        let mut out = w;
        for &a in self.basis.path(u).arrows().iter().rev() {
            out = self.times_arrow[out][a]?;
        }
        Some(out)
    }

    pub fn drop_first(&self, w: usize) -> Option<usize> {
        self.drop_first[w]
    }
}

/// A right module: a vector space per vertex and a matrix per arrow.
#[derive(Clone)]
pub struct Representation<T> {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    /// `actions[α]` for `α: i → j` has shape `dims[i] × dims[j]`.
    actions: Vec<Matrix<T>>,
}

pub type RationalRep = Representation<Rational>;

impl<T: Scalar> Representation<T> {
    /// Checks shapes and relations.
    pub fn new(
        algebra: Arc<PathAlgebra>,
        dims: Vec<usize>,
        actions: Vec<Matrix<T>>,
    ) -> Result<Self, ReprError> {
        let rep = Representation {
            algebra,
            dims,
            actions,
        };
        rep.check()?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<PathAlgebra>,
        dims: Vec<usize>,
        actions: Vec<Matrix<T>>,
    ) -> Self {
        let rep = Representation {
            algebra,
            dims,
            actions,
        };
        debug_assert!(rep.check().is_ok(), "{:?}", rep.check());
        rep
    }

    fn check(&self) -> Result<(), ReprError> {
        let p = self.algebra.presentation();
        if self.dims.len() != p.vertex_count() || self.actions.len() != p.arrows().len() {
            return Err(ReprError::AlgebraMismatch);
        }
        for (a, m) in p.arrows().iter().zip(&self.actions) {
            let expected = (self.dims[a.source], self.dims[a.target]);
            if (m.nrows(), m.ncols()) != expected {
                return Err(ReprError::Shape {
                    arrow: a.label.clone(),
                    expected,
                    got: (m.nrows(), m.ncols()),
                });
            }
        }
        for &(later, earlier) in p.relations() {
            if !self.actions[earlier].mul(&self.actions[later]).is_zero() {
                return Err(ReprError::RelationViolated {
                    later: p.arrow(later).label.clone(),
                    earlier: p.arrow(earlier).label.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<PathAlgebra>) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let actions = algebra
            .presentation()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Representation {
            algebra,
            dims,
            actions,
        }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, vertex: usize) -> usize {
        self.dims[vertex]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &Matrix<T> {
        &self.actions[arrow]
    }

    pub fn actions(&self) -> &[Matrix<T>] {
        &self.actions
    }

    pub fn same_algebra(&self, other: &Representation<T>) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
            || self.algebra.presentation() == other.algebra.presentation()
    }

    /// Matrix of right multiplication by the basis path `u: s → t`, a map from the vertex-`t`
    /// space to the vertex-`s` space.
    pub fn path_action(&self, u: usize) -> Matrix<T> {
        let path = self.algebra.basis().path(u);
        let mut m = Matrix::identity(self.dims[path.target()]);
        for &a in path.arrows().iter().rev() {
            m = self.actions[a].mul(&m);
        }
        m
    }

    /// `v·u` for a vector `v` of the vertex-`t(u)` space.
    pub fn act(&self, v: &[(usize, T)], u: usize) -> Vec<(usize, T)> {
        let mut out = v.to_vec();
        for &a in self.algebra.basis().path(u).arrows().iter().rev() {
            out = self.actions[a].mul_sparse_vec(&out);
        }
        out
    }

    pub fn direct_sum(&self, other: &Representation<T>) -> Result<Representation<T>, ReprError> {
        if !self.same_algebra(other) {
            return Err(ReprError::AlgebraMismatch);
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| Matrix::block_diag(&[a.clone(), b.clone()]))
            .collect();
        Ok(Representation {
            algebra: self.algebra.clone(),
            dims,
            actions,
        })
    }

    pub fn identity_map(&self) -> ModuleMap<T> {
        ModuleMap {
            maps: self.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for Representation<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.dims)
            .field("actions", &self.actions)
            .finish()
    }
}

/// A module homomorphism `M → N`: one matrix per vertex, `maps[i]` of shape `N_i × M_i`.
#[derive(Clone, PartialEq)]
pub struct ModuleMap<T> {
    pub maps: Vec<Matrix<T>>,
}

impl<T: Scalar> ModuleMap<T> {
    pub fn zero(source: &Representation<T>, target: &Representation<T>) -> Self {
        ModuleMap {
            maps: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&m, &n)| Matrix::zeros(n, m))
                .collect(),
        }
    }

    /// Whether `f_i ∘ M_α = N_α ∘ f_j` holds for every arrow `α: i → j`.
    pub fn is_homomorphism(&self, source: &Representation<T>, target: &Representation<T>) -> bool {
        let p = source.algebra.presentation();
        p.arrows().iter().enumerate().all(|(k, a)| {
            self.maps[a.source].mul(&source.actions[k])
                == target.actions[k].mul(&self.maps[a.target])
        })
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap<T>) -> ModuleMap<T> {
        ModuleMap {
            maps: self
                .maps
                .iter()
                .zip(&first.maps)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for ModuleMap<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleMap")
            .field("maps", &self.maps)
            .finish()
    }
}
