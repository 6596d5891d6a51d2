use std::collections::HashMap;

use super::{CochainComplex, HHProfile, HomologyError, Method};
use crate::algebra::QuiverPresentation;
use crate::algebra::{
    dual_degree_component, enumerate_paths, top_dual_degree, DualDegree, Path, PathBasis,
};
use crate::linalg::{Matrix, SparseRow};
use crate::scalar::Scalar;
use crate::Rational;

/// Basis of `C^p = ⊕_w e_{t(w)} A e_{s(w)}`, `w` running over dual paths of length `p`.
struct CochainBasis {
    dual: Vec<Path>,
    dual_index: HashMap<Path, usize>,
    /// `offsets[k]` is the position of the first slot belonging to `dual[k]`.
    offsets: Vec<usize>,
    dim: usize,
}

impl CochainBasis {
    fn new(presentation: &QuiverPresentation, basis: &PathBasis, p: usize) -> Self {
        let dual = dual_degree_component(presentation, p);
        let dual_index = dual
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let mut offsets = Vec::with_capacity(dual.len());
        let mut dim = 0;
        for w in &dual {
            offsets.push(dim);
            dim += basis.parallel(w.source(), w.target()).len();
        }
        CochainBasis {
            dual,
            dual_index,
            offsets,
            dim,
        }
    }

    /// Position of the slot `(w, u)`, with `u` a basis path id parallel to `w`.
    fn slot(&self, basis: &PathBasis, w: usize, u: usize) -> usize {
        let path = basis.path(u);
        let parallel = basis.parallel(path.source(), path.target());
        let k = parallel.binary_search(&u).expect("u is parallel to w");
        self.offsets[w] + k
    }
}

fn ungraded_finite(presentation: &QuiverPresentation) -> Result<(PathBasis, usize), HomologyError> {
    if let Some(a) = presentation.arrows().iter().find(|a| a.degree != 0) {
        return Err(HomologyError::GradedInput(a.label.clone()));
    }
    let basis = enumerate_paths(presentation)?;
    match top_dual_degree(presentation) {
        DualDegree::Finite(top) => Ok((basis, top)),
        DualDegree::Infinite => Err(HomologyError::InfiniteDual),
    }
}

/// The Koszul cochain complex computing Hochschild cohomology of an ungraded quadratic monomial
/// algebra, in degrees `0..=top_dual_degree`.
///
/// For a dual path `w = ρ_1 ⋯ ρ_{p+1}` (`ρ_{p+1}` acting first):
/// `d^p(φ)(w) = ρ_1 · φ(ρ_2 ⋯ ρ_{p+1}) + (−1)^{p+1} φ(ρ_1 ⋯ ρ_p) · ρ_{p+1}`.
pub fn koszul_complex<T: Scalar>(
    presentation: &QuiverPresentation,
) -> Result<CochainComplex<T>, HomologyError> {
    let (basis, top) = ungraded_finite(presentation)?;
    let spaces: Vec<CochainBasis> = (0..=top)
        .map(|p| CochainBasis::new(presentation, &basis, p))
        .collect();
    let mut differentials = Vec::with_capacity(top);
    for p in 0..top {
        let (source, target) = (&spaces[p], &spaces[p + 1]);
        let sign = if p % 2 == 0 { -T::one() } else { T::one() };
        let mut rows: Vec<SparseRow<T>> = vec![Vec::new(); target.dim];
        for (k, w) in target.dual.iter().enumerate() {
            // ρ_1 · φ(ρ_2 ⋯ ρ_{p+1})
            let rho_first = Path::from_arrow(presentation, w.last_arrow().expect("p + 1 >= 1"));
            let inner = w.drop_last(presentation).expect("nontrivial");
            let inner_id = source.dual_index[&inner];
            for &u in basis.parallel(inner.source(), inner.target()) {
                if let Some(v) = basis.path(u).compose_after(presentation, &rho_first) {
                    let v = basis.index_of(&v).expect("allowed product");
                    rows[target.slot(&basis, k, v)]
                        .push((source.slot(&basis, inner_id, u), T::one()));
                }
            }
            // φ(ρ_1 ⋯ ρ_p) · ρ_{p+1}
            let rho_last = Path::from_arrow(presentation, w.first_arrow().expect("p + 1 >= 1"));
            let inner = w.drop_first(presentation).expect("nontrivial");
            let inner_id = source.dual_index[&inner];
            for &u in basis.parallel(inner.source(), inner.target()) {
                if let Some(v) = rho_last.compose_after(presentation, basis.path(u)) {
                    let v = basis.index_of(&v).expect("allowed product");
                    rows[target.slot(&basis, k, v)]
                        .push((source.slot(&basis, inner_id, u), sign.clone()));
                }
            }
        }
        differentials.push(Matrix::from_sparse_rows(target.dim, source.dim, rows));
    }
    Ok(CochainComplex::new(
        0,
        spaces.iter().map(|s| s.dim).collect(),
        differentials,
    ))
}

/// [`koszul_complex`] over the rationals.
pub fn koszul_cochain_complex(
    presentation: &QuiverPresentation,
) -> Result<CochainComplex<Rational>, HomologyError> {
    koszul_complex(presentation)
}

/// `dim HH^p` from the Koszul cochain complex.
pub fn hh_koszul(presentation: &QuiverPresentation) -> Result<HHProfile, HomologyError> {
    let complex = koszul_cochain_complex(presentation)?;
    Ok(HHProfile::from_pairs(
        Method::Koszul,
        complex
            .cohomology_dims()
            .into_iter()
            .map(|(p, d)| (p, d as u64)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_b, build_lambda};

    #[test]
    fn b21_dims() {
        let c = koszul_cochain_complex(&build_b(2, 1)).unwrap();
        assert_eq!(c.dims(), &[4, 5, 2]);
        assert!(c.is_complex());
        let hh = hh_koszul(&build_b(2, 1)).unwrap();
        assert_eq!(
            hh,
            HHProfile::from_pairs(Method::Koszul, [(0, 3), (1, 4), (2, 2)])
        );
    }

    #[test]
    fn semisimple() {
        let hh = hh_koszul(&build_b(0, 0)).unwrap();
        assert_eq!(hh, HHProfile::from_pairs(Method::Koszul, [(0, 2)]));
    }

    #[test]
    fn rejects_graded() {
        assert_eq!(
            hh_koszul(&build_lambda(&[0, 1])).unwrap_err(),
            HomologyError::GradedInput("k.2".to_string())
        );
    }

    #[test]
    fn float_scalars_agree() {
        let b = build_b(3, 2);
        let exact = koszul_cochain_complex(&b).unwrap().cohomology_dims();
        let float = koszul_complex::<f64>(&b).unwrap().cohomology_dims();
        assert_eq!(exact, float);
    }
}
