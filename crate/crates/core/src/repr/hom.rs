use super::structure::same_algebra;
use super::{ModuleMap, ReprError, Representation};
use crate::linalg::{Matrix, SparseRow};
use crate::scalar::Scalar;

/// A basis of `Hom(M, N)`: the solutions of `f_i ∘ M_α = N_α ∘ f_j` for every arrow `α: i → j`.
pub fn hom_space<T: Scalar>(
    m: &Representation<T>,
    n: &Representation<T>,
) -> Result<Vec<ModuleMap<T>>, ReprError> {
    same_algebra(m, n)?;
    let p = m.algebra().presentation();
    let vertices = p.vertex_count();
    // unknown f_i[r][c] lives at offsets[i] + r * dim M_i + c
    let mut offsets = Vec::with_capacity(vertices);
    let mut unknowns = 0;
    for i in 0..vertices {
        offsets.push(unknowns);
        unknowns += n.dim_at(i) * m.dim_at(i);
    }
    let var = |i: usize, r: usize, c: usize| offsets[i] + r * m.dim_at(i) + c;
    let mut equations: Vec<SparseRow<T>> = Vec::new();
    for (a, arrow) in p.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let m_cols = m.action(a).columns();
        let n_act = n.action(a);
        for r in 0..n.dim_at(i) {
            for c in 0..m.dim_at(j) {
                // Σ_k f_i[r][k] M_α[k][c] − Σ_k N_α[r][k] f_j[k][c]
                let mut eq: SparseRow<T> = m_cols[c]
                    .iter()
                    .map(|(k, v)| (var(i, r, *k), v.clone()))
                    .collect();
                eq.extend(
                    n_act
                        .row(r)
                        .iter()
                        .map(|(k, v)| (var(j, *k, c), -v.clone())),
                );
                if !eq.is_empty() {
                    equations.push(eq);
                }
            }
        }
    }
    let rows = equations.len();
    let system = Matrix::from_sparse_rows(rows, unknowns, equations);
    let solutions = system.nullspace();
    let maps = solutions
        .columns()
        .into_iter()
        .map(|sol| {
            let mut dense: Vec<Vec<SparseRow<T>>> = (0..vertices)
                .map(|i| vec![Vec::new(); n.dim_at(i)])
                .collect();
            for (idx, v) in sol {
                let i = offsets.partition_point(|&o| o <= idx) - 1;
                let local = idx - offsets[i];
                let (r, c) = (local / m.dim_at(i), local % m.dim_at(i));
                dense[i][r].push((c, v));
            }
            ModuleMap {
                maps: dense
                    .into_iter()
                    .enumerate()
                    .map(|(i, rows)| Matrix::from_sparse_rows(n.dim_at(i), m.dim_at(i), rows))
                    .collect(),
            }
        })
        .collect();
    Ok(maps)
}

/// `dim Hom(M, N)`.
pub fn hom_dimension<T: Scalar>(
    m: &Representation<T>,
    n: &Representation<T>,
) -> Result<usize, ReprError> {
    Ok(hom_space(m, n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_an, build_b};
    use crate::repr::{projective_rep, regular_rep, simple_rep, PathAlgebra};
    use crate::Rational;

    #[test]
    fn maps_satisfy_the_equations() {
        let a = PathAlgebra::new(build_b(2, 1)).unwrap();
        let m: Representation<Rational> = regular_rep(&a);
        let n: Representation<Rational> = projective_rep(&a, 1).unwrap();
        for f in hom_space(&m, &n).unwrap() {
            assert!(f.is_homomorphism(&m, &n));
        }
        assert!(hom_dimension(&m, &m).unwrap() >= 1);
    }

    #[test]
    fn hom_from_projective_is_vertex_space() {
        let a = PathAlgebra::new(build_an(3, &[2, 1], &[1]).unwrap()).unwrap();
        let modules: Vec<Representation<Rational>> = vec![
            regular_rep(&a),
            simple_rep(&a, 0).unwrap(),
            projective_rep(&a, 1).unwrap(),
            crate::repr::top(&regular_rep::<Rational>(&a)).module,
        ];
        for m in &modules {
            for v in 0..2 {
                let p: Representation<Rational> = projective_rep(&a, v).unwrap();
                assert_eq!(hom_dimension(&p, m).unwrap(), m.dim_at(v));
            }
        }
    }

    #[test]
    fn simples_at_different_vertices() {
        let a = PathAlgebra::new(build_b(1, 1)).unwrap();
        let s1: Representation<Rational> = simple_rep(&a, 0).unwrap();
        let s2: Representation<Rational> = simple_rep(&a, 1).unwrap();
        assert_eq!(hom_dimension(&s1, &s2).unwrap(), 0);
        assert_eq!(hom_dimension(&s1, &s1).unwrap(), 1);
    }
}
