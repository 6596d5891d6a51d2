use std::fmt;

use super::paths::{arrow_graph_is_acyclic, enumerate_chains, enumerate_paths, Path};
use super::presentation::QuiverPresentation;

/// The quadratic dual: same quiver, relations are the composable pairs that are *not* relations
/// of the input. Its allowed paths are exactly the relation chains of the input.
pub fn quadratic_dual(presentation: &QuiverPresentation) -> QuiverPresentation {
    let complement = presentation
        .composable_pairs()
        .into_iter()
        .filter(|&(l, e)| !presentation.is_relation(l, e))
        .collect();
    presentation.with_relations(complement)
}

/// Length-`p` paths all of whose length-two subpaths are relations (the degree-`p` part of the
/// quadratic dual).
pub fn dual_degree_component(presentation: &QuiverPresentation, p: usize) -> Vec<Path> {
    let mut paths = enumerate_chains(
        presentation,
        |l, e| presentation.is_relation(l, e),
        Some(p),
        0,
    );
    paths.sort();
    paths
}

/// Whether the quadratic dual is finite-dimensional.
pub fn dual_is_finite(presentation: &QuiverPresentation) -> bool {
    arrow_graph_is_acyclic(presentation, |l, e| presentation.is_relation(l, e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualDegree {
    Finite(usize),
    Infinite,
}

impl DualDegree {
    pub fn finite(self) -> Option<usize> {
        match self {
            DualDegree::Finite(d) => Some(d),
            DualDegree::Infinite => None,
        }
    }
}

impl fmt::Display for DualDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualDegree::Finite(d) => write!(f, "{d}"),
            DualDegree::Infinite => write!(f, "infinite"),
        }
    }
}

/// Largest `p` with a nonzero degree-`p` dual component.
pub fn top_dual_degree(presentation: &QuiverPresentation) -> DualDegree {
    let dual = quadratic_dual(presentation);
    match enumerate_paths(&dual) {
        Ok(basis) => DualDegree::Finite(basis.paths().iter().map(Path::len).max().unwrap_or(0)),
        Err(_) => DualDegree::Infinite,
    }
}
