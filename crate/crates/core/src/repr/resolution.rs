use std::sync::Arc;

use super::structure::same_algebra;
use super::{ModuleMap, PathAlgebra, ProjectiveSum, ReprError, Representation};
use crate::homology::CochainComplex;
use crate::linalg::{echelon_of_rows, Matrix, SparseRow};
use crate::scalar::Scalar;

/// A minimal projective cover `P → M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<T> {
    pub projective: ProjectiveSum,
    pub module: Representation<T>,
    pub map: ModuleMap<T>,
}

/// A minimal projective resolution `⋯ → P_1 → P_0 → M`, possibly truncated.
#[derive(Clone, Debug)]
pub struct Resolution<T> {
    algebra: Arc<PathAlgebra>,
    module_dims: Vec<usize>,
    terms: Vec<ProjectiveSum>,
    /// `maps[k][j]`: the vertex-`j` matrix of `P_k → P_{k−1}` (of `P_0 → M` for `k = 0`).
    maps: Vec<Vec<Matrix<T>>>,
    /// `images[k][g]`: where generator `g` of `P_k` goes, as a vector of `P_{k−1}` (of `M` for
    /// `k = 0`) at the generator's vertex.
    images: Vec<Vec<SparseRow<T>>>,
    complete: bool,
}

impl<T: Scalar> Resolution<T> {
    pub fn terms(&self) -> &[ProjectiveSum] {
        &self.terms
    }

    /// Multiplicity of each indecomposable projective in `P_k`.
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(ProjectiveSum::multiplicities)
            .collect()
    }

    /// Whether the last computed syzygy vanished, i.e. the resolution is finite and complete.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Index of the last nonzero term (the projective dimension when complete); 0 for the zero
    /// module.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Vertex matrices of `P_k → P_{k−1}` (`P_0 → M` for `k = 0`).
    pub fn map(&self, k: usize) -> &[Matrix<T>] {
        &self.maps[k]
    }

    /// Image of each generator of `P_k`.
    pub fn generator_images(&self, k: usize) -> &[SparseRow<T>] {
        &self.images[k]
    }

    /// Checks that consecutive maps compose to zero, that `P_0 → M` is onto, and exactness at
    /// every computed term, all by exact ranks.
    pub fn is_exact(&self) -> bool {
        let n = self.algebra.vertex_count();
        for j in 0..n {
            let mut previous_rank = match self.maps.first() {
                Some(m) => m[j].rank(),
                None => 0,
            };
            if previous_rank != self.module_dims[j] {
                return false;
            }
            for k in 0..self.terms.len() {
                let next_rank = self.maps.get(k + 1).map_or(0, |m| m[j].rank());
                let kernel = self.terms[k].dims()[j] - previous_rank;
                let last_computed = k + 1 == self.terms.len();
                if kernel != next_rank && !(last_computed && !self.complete) {
                    return false;
                }
                if let Some(next) = self.maps.get(k + 1) {
                    if !self.maps[k][j].mul(&next[j]).is_zero() {
                        return false;
                    }
                }
                previous_rank = next_rank;
            }
        }
        true
    }
}

/// Chooses generators of `U / rad U`: `dim` is the dimension of `U_i` (in coordinates) and
/// `radical` spans `rad U_i`. Returns coordinate indices whose unit vectors complete a basis of
/// the radical.
fn complement_coordinates<T: Scalar>(dim: usize, radical: Vec<SparseRow<T>>) -> Vec<usize> {
    let ech = echelon_of_rows(radical, dim);
    let mut is_pivot = vec![false; dim];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..dim).filter(|&c| !is_pivot[c]).collect()
}

/// Vertex matrices of the map `P → X` sending generator `g` to `images[g]`, where `act(v, u)`
/// multiplies a vector of `X` by a basis path.
pub(crate) fn induced_map<T: Scalar>(
    projective: &ProjectiveSum,
    target_dims: &[usize],
    images: &[SparseRow<T>],
    act: impl Fn(&[(usize, T)], usize) -> SparseRow<T>,
) -> Vec<Matrix<T>> {
    (0..target_dims.len())
        .map(|j| {
            let columns: Vec<SparseRow<T>> = projective
                .coordinates_at(j)
                .iter()
                .map(|&(g, w)| act(&images[g], w))
                .collect();
            Matrix::from_sparse_columns(target_dims[j], &columns)
        })
        .collect()
}

/// Minimal projective cover of `M`.
pub fn projective_cover<T: Scalar>(module: &Representation<T>) -> ProjectiveCover<T> {
    let (projective, images) = cover_generators(module);
    let map = induced_map(&projective, module.dims(), &images, |v, u| module.act(v, u));
    let rep = projective.to_representation();
    let map = ModuleMap { maps: map };
    debug_assert!(map.is_homomorphism(&rep, module));
    ProjectiveCover {
        projective,
        module: rep,
        map,
    }
}

fn cover_generators<T: Scalar>(module: &Representation<T>) -> (ProjectiveSum, Vec<SparseRow<T>>) {
    let algebra = module.algebra();
    let p = algebra.presentation();
    let mut radical: Vec<Vec<SparseRow<T>>> = vec![Vec::new(); algebra.vertex_count()];
    for (a, arrow) in p.arrows().iter().enumerate() {
        radical[arrow.source].extend(module.action(a).columns());
    }
    let mut generators = Vec::new();
    let mut images = Vec::new();
    for (i, rad) in radical.into_iter().enumerate() {
        for c in complement_coordinates(module.dim_at(i), rad) {
            generators.push(i);
            images.push(vec![(c, T::one())]);
        }
    }
    (ProjectiveSum::new(algebra.clone(), generators), images)
}

/// Minimal projective resolution of `M`, computed up to `P_{max_len}`. The result is complete
/// when a syzygy vanished on the way.
pub fn min_resolution<T: Scalar>(module: &Representation<T>, max_len: usize) -> Resolution<T> {
    let algebra = module.algebra().clone();
    let n = algebra.vertex_count();
    let (p0, images0) = cover_generators(module);
    let mut resolution = Resolution {
        algebra: algebra.clone(),
        module_dims: module.dims().to_vec(),
        terms: Vec::new(),
        maps: Vec::new(),
        images: Vec::new(),
        complete: false,
    };
    if p0.generators().is_empty() {
        resolution.complete = true;
        return resolution;
    }
    let map0 = induced_map(&p0, module.dims(), &images0, |v, u| module.act(v, u));
    resolution.terms.push(p0);
    resolution.maps.push(map0);
    resolution.images.push(images0);
    for k in 1..=max_len {
        let previous = &resolution.terms[k - 1];
        // the syzygy: kernel of P_{k−1} → P_{k−2} (or → M), as a basis in free-column form
        let kernels: Vec<(Matrix<T>, Vec<usize>)> = resolution.maps[k - 1]
            .iter()
            .map(Matrix::nullspace_with_free_columns)
            .collect();
        if kernels.iter().all(|(b, _)| b.ncols() == 0) {
            resolution.complete = true;
            return resolution;
        }
        let bases: Vec<Vec<SparseRow<T>>> = kernels.iter().map(|(b, _)| b.columns()).collect();
        let mut generators = Vec::new();
        let mut images = Vec::new();
        for i in 0..n {
            let (_, coord_rows) = &kernels[i];
            let mut position = vec![usize::MAX; previous.dims()[i]];
            for (c, &r) in coord_rows.iter().enumerate() {
                position[r] = c;
            }
            let mut radical: Vec<SparseRow<T>> = Vec::new();
            for (a, arrow) in algebra.presentation().arrows().iter().enumerate() {
                if arrow.source != i {
                    continue;
                }
                let arrow_path = algebra
                    .basis()
                    .index_of(&crate::algebra::Path::from_arrow(algebra.presentation(), a));
                let arrow_path = arrow_path.expect("arrows are basis paths");
                for b in &bases[arrow.target] {
                    let moved = previous.act(b, arrow_path);
                    let mut coords: SparseRow<T> = moved
                        .into_iter()
                        .filter(|(r, _)| position[*r] != usize::MAX)
                        .map(|(r, v)| (position[r], v))
                        .collect();
                    coords.sort_by_key(|e| e.0);
                    radical.push(coords);
                }
            }
            for c in complement_coordinates(coord_rows.len(), radical) {
                generators.push(i);
                images.push(bases[i][c].clone());
            }
        }
        let term = ProjectiveSum::new(algebra.clone(), generators);
        let map = induced_map(&term, previous.dims(), &images, |v, u| previous.act(v, u));
        resolution.terms.push(term);
        resolution.maps.push(map);
        resolution.images.push(images);
    }
    let last = resolution.maps.last().expect("P_0 exists");
    resolution.complete = last.iter().all(|m| m.rank() == m.ncols());
    resolution
}

/// The complex `Hom(P_0, N) → Hom(P_1, N) → ⋯ → Hom(P_{p_max+1}, N)` for the minimal resolution
/// `P` of `M`, using `Hom(e_vA, N) = N_v`.
pub fn ext_complex<T: Scalar>(
    m: &Representation<T>,
    n: &Representation<T>,
    p_max: usize,
) -> Result<CochainComplex<T>, ReprError> {
    same_algebra(m, n)?;
    let resolution = min_resolution(m, p_max + 1);
    let basis = n.algebra().basis();
    let path_actions: Vec<Matrix<T>> = (0..basis.dimension()).map(|w| n.path_action(w)).collect();
    let hom_offsets = |term: &ProjectiveSum| -> (Vec<usize>, usize) {
        let mut offsets = Vec::with_capacity(term.generators().len());
        let mut total = 0;
        for &v in term.generators() {
            offsets.push(total);
            total += n.dim_at(v);
        }
        (offsets, total)
    };
    let terms = resolution.terms();
    let mut dims = Vec::with_capacity(p_max + 2);
    let mut differentials = Vec::with_capacity(p_max + 1);
    for k in 0..=p_max + 1 {
        dims.push(terms.get(k).map_or(0, |t| hom_offsets(t).1));
    }
    for k in 1..=p_max + 1 {
        let (Some(source), Some(target)) = (terms.get(k - 1), terms.get(k)) else {
            differentials.push(Matrix::zeros(dims[k], dims[k - 1]));
            continue;
        };
        let (col_offsets, cols) = hom_offsets(source);
        let (row_offsets, rows) = hom_offsets(target);
        let mut data: Vec<SparseRow<T>> = vec![Vec::new(); rows];
        // (φ ∘ d)(g') = Σ c · φ(g)·w over the terms c·(g, w) of d(g')
        for (g_new, image) in resolution.generator_images(k).iter().enumerate() {
            let v_new = target.generators()[g_new];
            let coords = source.coordinates_at(v_new);
            for (c, coeff) in image {
                let (g, w) = coords[*c];
                let block = path_actions[w].scale(coeff);
                for r in 0..block.nrows() {
                    data[row_offsets[g_new] + r].extend(
                        block
                            .row(r)
                            .iter()
                            .map(|(j, v)| (col_offsets[g] + j, v.clone())),
                    );
                }
            }
        }
        differentials.push(Matrix::from_sparse_rows(rows, cols, data));
    }
    Ok(CochainComplex::new(0, dims, differentials))
}

/// `dim Ext^p(M, N)` for `0 ≤ p ≤ p_max`.
pub fn ext_dims<T: Scalar>(
    m: &Representation<T>,
    n: &Representation<T>,
    p_max: usize,
) -> Result<Vec<usize>, ReprError> {
    let complex = ext_complex(m, n, p_max)?;
    Ok(complex
        .cohomology_dims()
        .into_iter()
        .take(p_max + 1)
        .map(|(_, d)| d)
        .collect())
}
