use std::sync::Arc;

use super::{PathAlgebra, ReprError, Representation};
use crate::linalg::{Matrix, SparseRow};
use crate::scalar::Scalar;

/// A direct sum `⊕_g e_{v_g} A` of indecomposable projectives, one summand per generator.
///
/// The vertex-`j` space has one coordinate per pair `(g, w)` with `w` a basis path from `j` to
/// `v_g`, ordered by generator and then by basis order of `w`.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    algebra: Arc<PathAlgebra>,
    generators: Vec<usize>,
    /// `offsets[j][g]`: first coordinate of generator `g` in the vertex-`j` space.
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
    /// `(g, w)` for every coordinate of every vertex space.
    coords: Vec<Vec<(usize, usize)>>,
    /// Position of each basis path among the paths parallel to it.
    parallel_pos: Vec<usize>,
}

impl ProjectiveSum {
    /// `generators[g]` is the vertex of the `g`-th summand.
    pub fn new(algebra: Arc<PathAlgebra>, generators: Vec<usize>) -> Self {
        let basis = algebra.basis();
        let n = algebra.vertex_count();
        let mut parallel_pos = vec![0; basis.dimension()];
        for s in 0..n {
            for t in 0..n {
                for (k, &w) in basis.parallel(s, t).iter().enumerate() {
                    parallel_pos[w] = k;
                }
            }
        }
        let mut offsets = vec![Vec::with_capacity(generators.len()); n];
        let mut dims = vec![0; n];
        for j in 0..n {
            for &v in &generators {
                offsets[j].push(dims[j]);
                dims[j] += basis.parallel(j, v).len();
            }
        }
        let coords = (0..n)
            .map(|j| {
                generators
                    .iter()
                    .enumerate()
                    .flat_map(|(g, &v)| basis.parallel(j, v).iter().map(move |&w| (g, w)))
                    .collect()
            })
            .collect();
        ProjectiveSum {
            algebra,
            generators,
            offsets,
            dims,
            coords,
            parallel_pos,
        }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Number of summands at each vertex.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.algebra.vertex_count()];
        for &v in &self.generators {
            m[v] += 1;
        }
        m
    }

    /// Coordinate of `(g, w)` in the vertex-`s(w)` space.
    pub fn coordinate(&self, g: usize, w: usize) -> usize {
        let path = self.algebra.basis().path(w);
        debug_assert_eq!(path.target(), self.generators[g]);
        self.offsets[path.source()][g] + self.parallel_pos[w]
    }

    /// The pairs `(g, w)` of the vertex-`j` space, in coordinate order.
    pub fn coordinates_at(&self, j: usize) -> &[(usize, usize)] {
        &self.coords[j]
    }

    /// The generator `g` itself, as a vector of the vertex-`v_g` space.
    pub fn generator_vector<T: Scalar>(&self, g: usize) -> SparseRow<T> {
        let v = self.generators[g];
        vec![(
            self.coordinate(g, self.algebra.basis().trivial(v)),
            T::one(),
        )]
    }

    /// Right multiplication by the basis path `u: s → t`, on a vector of the vertex-`t` space.
    pub fn act<T: Scalar>(&self, vector: &[(usize, T)], u: usize) -> SparseRow<T> {
        let coords = &self.coords[self.algebra.basis().path(u).target()];
        let mut out: SparseRow<T> = Vec::with_capacity(vector.len());
        for (c, value) in vector {
            let (g, w) = coords[*c];
            if let Some(wu) = self.algebra.times_path(w, u) {
                out.push((self.coordinate(g, wu), value.clone()));
            }
        }
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn to_representation<T: Scalar>(&self) -> Representation<T> {
        let p = self.algebra.presentation();
        let actions = p
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut rows: Vec<SparseRow<T>> = vec![Vec::new(); self.dims[arrow.source]];
                for (c, &(g, w)) in self.coords[arrow.target].iter().enumerate() {
                    if let Some(wa) = self.algebra.times_arrow(w, a) {
                        rows[self.coordinate(g, wa)].push((c, T::one()));
                    }
                }
                Matrix::from_sparse_rows(self.dims[arrow.source], self.dims[arrow.target], rows)
            })
            .collect();
        Representation::new_unchecked(self.algebra.clone(), self.dims.clone(), actions)
    }
}

/// The indecomposable projective `e_iA`.
pub fn projective_rep<T: Scalar>(
    algebra: &Arc<PathAlgebra>,
    vertex: usize,
) -> Result<Representation<T>, ReprError> {
    if vertex >= algebra.vertex_count() {
        return Err(ReprError::UnknownVertex(vertex));
    }
    Ok(ProjectiveSum::new(algebra.clone(), vec![vertex]).to_representation())
}

/// The regular module `A_A = ⊕_i e_iA`.
pub fn regular_rep<T: Scalar>(algebra: &Arc<PathAlgebra>) -> Representation<T> {
    ProjectiveSum::new(algebra.clone(), (0..algebra.vertex_count()).collect()).to_representation()
}

/// The simple module at `vertex`.
pub fn simple_rep<T: Scalar>(
    algebra: &Arc<PathAlgebra>,
    vertex: usize,
) -> Result<Representation<T>, ReprError> {
    let n = algebra.vertex_count();
    if vertex >= n {
        return Err(ReprError::UnknownVertex(vertex));
    }
    let dims: Vec<usize> = (0..n).map(|i| usize::from(i == vertex)).collect();
    let actions = algebra
        .presentation()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.source], dims[a.target]))
        .collect();
    Ok(Representation::new_unchecked(
        algebra.clone(),
        dims,
        actions,
    ))
}

/// Whether the basis path `w` visits a vertex of `subset` (endpoints included).
pub(crate) fn passes_through(algebra: &PathAlgebra, w: usize, subset: &[usize]) -> bool {
    let p = algebra.presentation();
    let path = algebra.basis().path(w);
    subset.contains(&path.source())
        || path
            .arrows()
            .iter()
            .any(|&a| subset.contains(&p.arrow(a).target))
}

/// The regular module cut down to the coordinates whose path satisfies `keep`. Valid when the
/// kept paths span a submodule, or when the dropped paths do (then the result is the quotient).
fn regular_restricted<T: Scalar>(
    algebra: &Arc<PathAlgebra>,
    keep: impl Fn(usize) -> bool,
) -> Representation<T> {
    let regular = ProjectiveSum::new(algebra.clone(), (0..algebra.vertex_count()).collect());
    let full: Representation<T> = regular.to_representation();
    let kept: Vec<Vec<usize>> = (0..algebra.vertex_count())
        .map(|j| {
            regular
                .coordinates_at(j)
                .iter()
                .enumerate()
                .filter(|(_, (_, w))| keep(*w))
                .map(|(c, _)| c)
                .collect()
        })
        .collect();
    let dims = kept.iter().map(Vec::len).collect();
    let actions = algebra
        .presentation()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            full.action(a)
                .select_rows(&kept[arrow.source])
                .select_columns(&kept[arrow.target])
        })
        .collect();
    Representation::new_unchecked(algebra.clone(), dims, actions)
}

/// The two-sided ideal `AeA` (with `e` the sum of the idempotents in `subset`) as a right module:
/// spanned by the paths that pass through a vertex of `subset`.
pub fn ideal_rep<T: Scalar>(algebra: &Arc<PathAlgebra>, subset: &[usize]) -> Representation<T> {
    regular_restricted(algebra, |w| passes_through(algebra, w, subset))
}

/// `A / AeA` as a right module: spanned by the paths avoiding `subset`.
pub fn quotient_by_ideal<T: Scalar>(
    algebra: &Arc<PathAlgebra>,
    subset: &[usize],
) -> Representation<T> {
    regular_restricted(algebra, |w| !passes_through(algebra, w, subset))
}
