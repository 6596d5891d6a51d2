use super::{ModuleMap, ReprError, Representation};
use crate::linalg::{echelon_of_rows, Matrix, SparseRow};
use crate::scalar::Scalar;

/// A submodule together with its inclusion.
#[derive(Clone, Debug)]
pub struct Submodule<T> {
    pub module: Representation<T>,
    pub inclusion: ModuleMap<T>,
}

/// A quotient module together with the projection onto it.
#[derive(Clone, Debug)]
pub struct Quotient<T> {
    pub module: Representation<T>,
    pub projection: ModuleMap<T>,
}

/// A basis of a subspace of `k^n` (as columns) and rows on which the basis restricts to the
/// identity, so coordinates of a vector in the subspace are its entries at `coord_rows`.
struct Subspace<T> {
    basis: Matrix<T>,
    coord_rows: Vec<usize>,
}

impl<T: Scalar> Subspace<T> {
    fn span(n: usize, vectors: impl IntoIterator<Item = SparseRow<T>>) -> Self {
        let ech = echelon_of_rows(vectors, n);
        let basis = Matrix::from_sparse_columns(n, &ech.rows);
        Subspace {
            basis,
            coord_rows: ech.pivots,
        }
    }

    fn kernel(m: &Matrix<T>) -> Self {
        let (basis, coord_rows) = m.nullspace_with_free_columns();
        Subspace { basis, coord_rows }
    }

    fn dim(&self) -> usize {
        self.coord_rows.len()
    }
}

/// The submodule with the given subspaces, which must be closed under the action.
fn submodule<T: Scalar>(module: &Representation<T>, spaces: Vec<Subspace<T>>) -> Submodule<T> {
    let p = module.algebra().presentation();
    let actions = p
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let image = module.action(a).mul(&spaces[arrow.target].basis);
            image.select_rows(&spaces[arrow.source].coord_rows)
        })
        .collect();
    let dims = spaces.iter().map(Subspace::dim).collect();
    let sub = Representation::new_unchecked(module.algebra().clone(), dims, actions);
    let inclusion = ModuleMap {
        maps: spaces.into_iter().map(|s| s.basis).collect(),
    };
    debug_assert!(inclusion.is_homomorphism(&sub.clone(), module));
    Submodule {
        module: sub,
        inclusion,
    }
}

/// The submodule generated as a vector space by `spanning[i]` at each vertex `i`. The spans must
/// already be closed under the action.
pub fn span_submodule<T: Scalar>(
    module: &Representation<T>,
    spanning: Vec<Vec<SparseRow<T>>>,
) -> Submodule<T> {
    let spaces = spanning
        .into_iter()
        .enumerate()
        .map(|(i, vs)| Subspace::span(module.dim_at(i), vs))
        .collect();
    submodule(module, spaces)
}

/// Kernel of `f: M → N`.
pub fn kernel<T: Scalar>(f: &ModuleMap<T>, source: &Representation<T>) -> Submodule<T> {
    submodule(source, f.maps.iter().map(Subspace::kernel).collect())
}

/// Image of `f: M → N` as a submodule of `N`.
pub fn image<T: Scalar>(f: &ModuleMap<T>, target: &Representation<T>) -> Submodule<T> {
    span_submodule(target, f.maps.iter().map(Matrix::columns).collect())
}

/// `M / U` for the subspaces `spanning[i] ⊆ M_i`, which must form a submodule.
pub fn quotient<T: Scalar>(
    module: &Representation<T>,
    spanning: Vec<Vec<SparseRow<T>>>,
) -> Quotient<T> {
    let n = module.algebra().vertex_count();
    let mut projections = Vec::with_capacity(n);
    let mut complements = Vec::with_capacity(n);
    for (i, vs) in spanning.into_iter().enumerate() {
        let d = module.dim_at(i);
        let ech = echelon_of_rows(vs, d);
        let mut is_pivot = vec![false; d];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..d).filter(|&c| !is_pivot[c]).collect();
        let mut position = vec![usize::MAX; d];
        for (k, &c) in complement.iter().enumerate() {
            position[c] = k;
        }
        // e_c ↦ e_c for non-pivots; e_p ↦ e_p − r_p, which lives on the non-pivot coordinates
        let mut columns: Vec<SparseRow<T>> = vec![Vec::new(); d];
        for &c in &complement {
            columns[c] = vec![(position[c], T::one())];
        }
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            columns[p] = row
                .iter()
                .filter(|(j, _)| !is_pivot[*j])
                .map(|(j, v)| (position[*j], -v.clone()))
                .collect();
        }
        projections.push(Matrix::from_sparse_columns(complement.len(), &columns));
        complements.push(complement);
    }
    let p = module.algebra().presentation();
    let actions = p
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let lifted = module.action(a).select_columns(&complements[arrow.target]);
            projections[arrow.source].mul(&lifted)
        })
        .collect();
    let dims = complements.iter().map(Vec::len).collect();
    let q = Representation::new_unchecked(module.algebra().clone(), dims, actions);
    let projection = ModuleMap { maps: projections };
    debug_assert!(projection.is_homomorphism(module, &q));
    Quotient {
        module: q,
        projection,
    }
}

/// Cokernel of `f: M → N`.
pub fn cokernel<T: Scalar>(f: &ModuleMap<T>, target: &Representation<T>) -> Quotient<T> {
    quotient(target, f.maps.iter().map(Matrix::columns).collect())
}

/// Radical: at vertex `i`, the span of the images of all arrows leaving `i`.
pub fn radical<T: Scalar>(module: &Representation<T>) -> Submodule<T> {
    span_submodule(module, radical_spans(module))
}

fn radical_spans<T: Scalar>(module: &Representation<T>) -> Vec<Vec<SparseRow<T>>> {
    let p = module.algebra().presentation();
    let mut spans: Vec<Vec<SparseRow<T>>> = vec![Vec::new(); p.vertex_count()];
    for (a, arrow) in p.arrows().iter().enumerate() {
        spans[arrow.source].extend(module.action(a).columns());
    }
    spans
}

/// Top `M / rad M`, with the projection.
pub fn top<T: Scalar>(module: &Representation<T>) -> Quotient<T> {
    quotient(module, radical_spans(module))
}

/// Socle: at vertex `i`, the joint kernel of all arrows acting on `M_i`.
pub fn socle<T: Scalar>(module: &Representation<T>) -> Submodule<T> {
    let p = module.algebra().presentation();
    let spaces = (0..p.vertex_count())
        .map(|i| {
            let acting: Vec<usize> = (0..p.arrows().len())
                .filter(|&a| p.arrow(a).target == i)
                .collect();
            let stacked = acting
                .iter()
                .fold(Matrix::zeros(0, module.dim_at(i)), |acc, &a| {
                    acc.vstack(module.action(a))
                });
            Subspace::kernel(&stacked)
        })
        .collect();
    submodule(module, spaces)
}

/// Checks that two representations live over the same algebra.
pub(crate) fn same_algebra<T: Scalar>(
    a: &Representation<T>,
    b: &Representation<T>,
) -> Result<(), ReprError> {
    if a.same_algebra(b) {
        Ok(())
    } else {
        Err(ReprError::AlgebraMismatch)
    }
}
