use std::sync::Arc;

use super::resolution::induced_map;
use super::{
    cokernel, ext_dims, hom_dimension, min_resolution, projective_rep, ModuleMap, PathAlgebra,
    ProjectiveSum,
};
use super::{ReprError, Representation};
use crate::algebra::{cartan_matrix, enumerate_paths, Path};
use crate::families::build_b;
use crate::Rational;

/// Self-orthogonality data of `T = cok(f) ⊕ P_2` over `B(x, y)`, where
/// `f = (α_1, …, α_x)^tr : P_1 → P_2^x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingReport {
    pub x: u32,
    pub y: u32,
    pub cokernel_dims: Vec<usize>,
    /// `Ext^1(T, T)` and `Ext^2(T, T)`.
    pub ext: [usize; 2],
    /// Projective dimension of `T`, `None` if no resolution ended within the search bound.
    pub projective_dimension: Option<usize>,
    pub end_dim: usize,
    /// `hom[i][j] = dim Hom(T_i, T_j)` with `T_0 = cok(f)` and `T_1 = P_2`.
    pub hom: [[usize; 2]; 2],
    /// `(x', y')` whose algebra `B(x', y')` has dimension `end_dim`.
    pub candidates: Vec<(u32, u32)>,
    /// Candidates whose Cartan matrix equals `hom` up to reordering and transposition.
    pub cartan_matches: Vec<(u32, u32)>,
}

impl TiltingReport {
    pub fn is_self_orthogonal(&self) -> bool {
        self.ext == [0, 0]
    }
}

fn b_dimension(x: u32, y: u32) -> usize {
    let (x, y) = (x as usize, y as usize);
    2 + x + y + x * y
}

/// Every arrangement of a 2×2 matrix under swapping the two indices and transposing.
fn arrangements(m: [[usize; 2]; 2]) -> [[[usize; 2]; 2]; 4] {
    let swap = [[m[1][1], m[1][0]], [m[0][1], m[0][0]]];
    let t = |a: [[usize; 2]; 2]| [[a[0][0], a[1][0]], [a[0][1], a[1][1]]];
    [m, swap, t(m), t(swap)]
}

pub fn tilting_check(x: u32, y: u32) -> Result<TiltingReport, ReprError> {
    if x == 0 {
        return Err(ReprError::DomainError("tilting check needs x ≥ 1".into()));
    }
    let presentation = build_b(x, y);
    let algebra = PathAlgebra::new(presentation)?;
    let p = algebra.presentation();
    let basis = algebra.basis();
    let (v1, v2) = (0, 1);
    let source = ProjectiveSum::new(Arc::clone(&algebra), vec![v1]);
    let target = ProjectiveSum::new(Arc::clone(&algebra), vec![v2; x as usize]);
    // generator images: α_p sits in the p-th copy of P_2 at vertex 1
    let image: Vec<(usize, Rational)> = {
        let mut v: Vec<(usize, Rational)> = (1..=x)
            .map(|k| {
                let a = p
                    .arrow_index(&format!("a.{k}"))
                    .expect("B has arrows a.1..a.x");
                let w = basis
                    .index_of(&Path::from_arrow(p, a))
                    .expect("arrows are basis paths");
                (target.coordinate(k as usize - 1, w), num_traits::One::one())
            })
            .collect();
        v.sort_by_key(|e| e.0);
        v
    };
    let f = ModuleMap {
        maps: induced_map(&source, target.dims(), &[image], |v, u| target.act(v, u)),
    };
    let p2_sum: Representation<Rational> = target.to_representation();
    debug_assert!(f.is_homomorphism(&source.to_representation(), &p2_sum));
    let cok = cokernel(&f, &p2_sum).module;
    let p2: Representation<Rational> = projective_rep(&algebra, v2)?;
    let t = cok.direct_sum(&p2)?;

    let ext = ext_dims(&t, &t, 2)?;
    let resolution = min_resolution(&t, algebra.vertex_count() + 2);
    let projective_dimension = resolution.is_complete().then(|| resolution.length());
    let summands = [&cok, &p2];
    let mut hom = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            hom[i][j] = hom_dimension(summands[i], summands[j])?;
        }
    }
    let end_dim = hom_dimension(&t, &t)?;
    let mut candidates = Vec::new();
    let mut cartan_matches = Vec::new();
    let bound = end_dim as u32;
    for xp in 0..=bound {
        for yp in 0..=bound {
            if b_dimension(xp, yp) != end_dim {
                continue;
            }
            candidates.push((xp, yp));
            let c = cartan_matrix(&enumerate_paths(&build_b(xp, yp))?);
            let c = [
                [c.entry(0, 0), c.entry(0, 1)],
                [c.entry(1, 0), c.entry(1, 1)],
            ];
            if arrangements(hom).contains(&c) {
                cartan_matches.push((xp, yp));
            }
        }
    }
    Ok(TiltingReport {
        x,
        y,
        cokernel_dims: cok.dims().to_vec(),
        ext: [ext[1], ext[2]],
        projective_dimension,
        end_dim,
        hom,
        candidates,
        cartan_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b21_tilting_module() {
        let r = tilting_check(2, 1).unwrap();
        assert!(r.is_self_orthogonal());
        assert!(r.projective_dimension.is_some());
        assert_eq!(r.end_dim, r.hom.iter().flatten().sum::<usize>());
        assert!(!r.candidates.is_empty());
        assert!(r.cartan_matches.is_empty());
    }

    #[test]
    fn cokernel_dimension_by_ranks() {
        // over B(1, 0) the map P_1 → P_2 is injective, so dim cok = dim P_2 − dim P_1
        let r = tilting_check(1, 0).unwrap();
        let a = PathAlgebra::new(build_b(1, 0)).unwrap();
        let p1: Representation<Rational> = projective_rep(&a, 0).unwrap();
        let p2: Representation<Rational> = projective_rep(&a, 1).unwrap();
        assert_eq!(
            r.cokernel_dims.iter().sum::<usize>(),
            p2.total_dim() - p1.total_dim()
        );
    }

    #[test]
    fn x_zero_is_rejected() {
        assert!(matches!(
            tilting_check(0, 2),
            Err(ReprError::DomainError(_))
        ));
    }
}
