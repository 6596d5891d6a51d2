use std::sync::Arc;

use super::projective::passes_through;
use super::{ideal_rep, projective_cover, PathAlgebra, ReprError};
use crate::Rational;

/// Outcome of the heredity-ideal test for `AeA`, with the data behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeredityVerdict {
    pub subset: Vec<usize>,
    pub is_heredity: bool,
    /// Nontrivial basis paths between vertices of the subset; `eAe` is semisimple iff empty.
    pub corner_paths: Vec<usize>,
    pub ideal_dim: usize,
    /// Total dimension of the projective cover of `AeA`.
    pub cover_dim: usize,
    pub reason: String,
}

/// Whether `AeA` is a heredity ideal, `e` the sum of the idempotents of `subset`: `eAe` must be
/// semisimple and `AeA` projective, the latter tested by comparing `AeA` with its projective cover.
pub fn is_heredity_ideal(
    algebra: &Arc<PathAlgebra>,
    subset: &[usize],
) -> Result<HeredityVerdict, ReprError> {
    let n = algebra.vertex_count();
    if let Some(&v) = subset.iter().find(|&&v| v >= n) {
        return Err(ReprError::UnknownVertex(v));
    }
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    let basis = algebra.basis();
    let corner_paths: Vec<usize> = (0..basis.dimension())
        .filter(|&w| {
            let path = basis.path(w);
            !path.is_trivial() && subset.contains(&path.source()) && subset.contains(&path.target())
        })
        .collect();
    let ideal = ideal_rep::<Rational>(algebra, &subset);
    let cover = projective_cover(&ideal);
    let ideal_dim = ideal.total_dim();
    let cover_dim = cover.module.total_dim();
    let is_heredity = corner_paths.is_empty() && ideal_dim == cover_dim;
    let reason = if !corner_paths.is_empty() {
        format!(
            "eAe is not semisimple: {} nontrivial paths between the chosen vertices",
            corner_paths.len()
        )
    } else if ideal_dim != cover_dim {
        format!(
            "AeA is not projective: dimension {ideal_dim}, projective cover dimension {cover_dim}"
        )
    } else {
        "eAe is semisimple and AeA is projective".to_string()
    };
    Ok(HeredityVerdict {
        subset,
        is_heredity,
        corner_paths,
        ideal_dim,
        cover_dim,
        reason,
    })
}

/// Outcome of the two-vertex quasi-heredity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiHereditaryVerdict {
    pub quasi_hereditary: bool,
    /// Vertex order `(v, u)` of a heredity chain `0 ⊂ Ae_vA ⊂ A`, when one exists.
    pub ordering: Option<(usize, usize)>,
    /// One entry per vertex `v`, testing `Ae_vA` as the bottom of the chain.
    pub attempts: Vec<HeredityVerdict>,
}

/// Quasi-heredity of an algebra with at most two vertices: some `Ae_vA` is a heredity ideal and
/// the quotient by it is semisimple (no nontrivial path at the other vertex avoids `v`).
pub fn is_quasi_hereditary_two_vertex(
    algebra: &Arc<PathAlgebra>,
) -> Result<QuasiHereditaryVerdict, ReprError> {
    let n = algebra.vertex_count();
    if n > 2 {
        return Err(ReprError::MoreThanTwoVertices(n));
    }
    let basis = algebra.basis();
    if n < 2 {
        // a local algebra is quasi-hereditary only when it is the field itself
        let qh = basis.dimension() == n;
        return Ok(QuasiHereditaryVerdict {
            quasi_hereditary: qh,
            ordering: None,
            attempts: Vec::new(),
        });
    }
    let mut attempts = Vec::new();
    let mut ordering = None;
    for v in 0..2 {
        let u = 1 - v;
        let mut verdict = is_heredity_ideal(algebra, &[v])?;
        let surviving = (0..basis.dimension())
            .filter(|&w| !basis.path(w).is_trivial() && !passes_through(algebra, w, &[v]))
            .count();
        if verdict.is_heredity && surviving > 0 {
            verdict.reason = format!(
                "{}, but A/AeA keeps {surviving} nontrivial paths",
                verdict.reason
            );
        } else if verdict.is_heredity && ordering.is_none() {
            ordering = Some((v, u));
        }
        attempts.push(verdict);
    }
    Ok(QuasiHereditaryVerdict {
        quasi_hereditary: ordering.is_some(),
        ordering,
        attempts,
    })
}
