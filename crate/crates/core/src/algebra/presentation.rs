use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

/// An arrow as written in a presentation file: endpoints are vertex names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub label: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
}

impl ArrowDecl {
    pub fn new(
        label: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
    ) -> Self {
        ArrowDecl {
            label: label.into(),
            source: source.into(),
            target: target.into(),
            degree: 0,
        }
    }

    pub fn with_degree(mut self, degree: i64) -> Self {
        self.degree = degree;
        self
    }
}

/// Unvalidated presentation data. Relations are `(later, earlier)` label pairs: the pair
/// `(b, a)` declares the path "a, then b" (written `b·a`) to be zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow label `{0}`")]
    DuplicateLabel(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    DanglingVertex { arrow: String, vertex: String },
    #[error("relation refers to undeclared arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation ({later}, {earlier}) is not composable: `{earlier}` does not end where `{later}` starts")]
    NonComposableRelation { later: String, earlier: String },
    #[error("relation ({later}, {earlier}) is listed twice")]
    DuplicateRelation { later: String, earlier: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
}

/// A validated quiver with quadratic monomial relations.
///
/// Vertices and arrows are indexed by declaration order. Relations are stored as
/// `(later, earlier)` arrow index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: BTreeSet<(usize, usize)>,
    forbidden: Vec<Vec<bool>>,
}

/// Checks every presentation invariant and builds the indexed form.
pub fn validate(raw: &RawPresentation) -> Result<QuiverPresentation, PresentationError> {
    let mut vertex_index: HashMap<&str, usize> = HashMap::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if vertex_index.insert(v.as_str(), i).is_some() {
            return Err(PresentationError::DuplicateVertex(v.clone()));
        }
    }
    let mut arrow_index: HashMap<&str, usize> = HashMap::new();
    let mut arrows = Vec::with_capacity(raw.arrows.len());
    for (i, a) in raw.arrows.iter().enumerate() {
        if arrow_index.insert(a.label.as_str(), i).is_some() {
            return Err(PresentationError::DuplicateLabel(a.label.clone()));
        }
        let lookup = |name: &str| {
            vertex_index
                .get(name)
                .copied()
                .ok_or_else(|| PresentationError::DanglingVertex {
                    arrow: a.label.clone(),
                    vertex: name.to_string(),
                })
        };
        let source = lookup(&a.source)?;
        let target = lookup(&a.target)?;
        arrows.push(Arrow {
            label: a.label.clone(),
            source,
            target,
            degree: a.degree,
        });
    }
    let mut relations = BTreeSet::new();
    for (later, earlier) in &raw.relations {
        let l = *arrow_index
            .get(later.as_str())
            .ok_or_else(|| PresentationError::UnknownArrow(later.clone()))?;
        let e = *arrow_index
            .get(earlier.as_str())
            .ok_or_else(|| PresentationError::UnknownArrow(earlier.clone()))?;
        if arrows[e].target != arrows[l].source {
            return Err(PresentationError::NonComposableRelation {
                later: later.clone(),
                earlier: earlier.clone(),
            });
        }
        if !relations.insert((l, e)) {
            return Err(PresentationError::DuplicateRelation {
                later: later.clone(),
                earlier: earlier.clone(),
            });
        }
    }
    Ok(QuiverPresentation::assemble(
        raw.vertices.clone(),
        arrows,
        relations,
    ))
}

impl QuiverPresentation {
    fn assemble(
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: BTreeSet<(usize, usize)>,
    ) -> Self {
        let n = arrows.len();
        let mut forbidden = vec![vec![false; n]; n];
        for &(l, e) in &relations {
            forbidden[l][e] = true;
        }
        QuiverPresentation {
            vertices,
            arrows,
            relations,
            forbidden,
        }
    }

    /// Same quiver, different relation set. Every pair must be composable.
    pub(crate) fn with_relations(&self, relations: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(relations.iter().all(|&(l, e)| self.composable(l, e)));
        Self::assemble(self.vertices.clone(), self.arrows.clone(), relations)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, index: usize) -> &Arrow {
        &self.arrows[index]
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Relation pairs `(later, earlier)` as arrow indices, in sorted order.
    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    /// Whether `later·earlier` is a path of the quiver.
    pub fn composable(&self, later: usize, earlier: usize) -> bool {
        self.arrows[earlier].target == self.arrows[later].source
    }

    /// Whether `later·earlier` is zero in the algebra.
    pub fn is_relation(&self, later: usize, earlier: usize) -> bool {
        self.forbidden[later][earlier]
    }

    /// Whether `later·earlier` is a nonzero length-two path.
    pub fn allows(&self, later: usize, earlier: usize) -> bool {
        self.composable(later, earlier) && !self.forbidden[later][earlier]
    }

    /// All composable `(later, earlier)` pairs.
    pub fn composable_pairs(&self) -> BTreeSet<(usize, usize)> {
        let n = self.arrows.len();
        (0..n)
            .flat_map(|l| (0..n).map(move |e| (l, e)))
            .filter(|&(l, e)| self.composable(l, e))
            .collect()
    }

    /// True when every arrow has internal degree zero.
    pub fn is_ungraded(&self) -> bool {
        self.arrows.iter().all(|a| a.degree == 0)
    }

    pub fn to_raw(&self) -> RawPresentation {
        RawPresentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDecl {
                    label: a.label.clone(),
                    source: self.vertices[a.source].clone(),
                    target: self.vertices[a.target].clone(),
                    degree: a.degree,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(l, e)| (self.arrows[l].label.clone(), self.arrows[e].label.clone()))
                .collect(),
        }
    }

    /// Whether `self` is obtained from `other` by deleting arrows (and the relations that
    /// mention them), matching arrows by label.
    pub fn is_sub_presentation_of(&self, other: &QuiverPresentation) -> bool {
        if self.vertices != other.vertices {
            return false;
        }
        let mut map = Vec::with_capacity(self.arrows.len());
        for a in &self.arrows {
            match other.arrow_index(&a.label) {
                Some(j) => {
                    let b = &other.arrows[j];
                    if (a.source, a.target, a.degree) != (b.source, b.target, b.degree) {
                        return false;
                    }
                    map.push(j);
                }
                None => return false,
            }
        }
        let n = self.arrows.len();
        (0..n).all(|l| (0..n).all(|e| self.is_relation(l, e) == other.is_relation(map[l], map[e])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b11() -> RawPresentation {
        RawPresentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![
                ArrowDecl::new("alpha", "1", "2"),
                ArrowDecl::new("beta", "2", "1"),
            ],
            relations: vec![("beta".into(), "alpha".into())],
        }
    }

    #[test]
    fn accepts_b11() {
        let p = validate(&b11()).unwrap();
        assert_eq!(p.arrows().len(), 2);
        assert!(p.is_relation(1, 0));
        assert!(p.allows(0, 1));
        assert_eq!(p.to_raw(), b11());
    }

    #[test]
    fn rejects_dangling_vertex() {
        let mut raw = b11();
        raw.arrows.push(ArrowDecl::new("gamma", "3", "1"));
        assert_eq!(
            validate(&raw),
            Err(PresentationError::DanglingVertex {
                arrow: "gamma".into(),
                vertex: "3".into()
            })
        );
    }

    #[test]
    fn rejects_non_composable_relation() {
        let mut raw = b11();
        raw.relations = vec![("alpha".into(), "alpha".into())];
        assert!(matches!(
            validate(&raw),
            Err(PresentationError::NonComposableRelation { .. })
        ));
    }

    #[test]
    fn rejects_duplicates() {
        let mut raw = b11();
        raw.arrows.push(ArrowDecl::new("alpha", "1", "2"));
        assert_eq!(
            validate(&raw),
            Err(PresentationError::DuplicateLabel("alpha".into()))
        );

        let mut raw = b11();
        raw.relations.push(("beta".into(), "alpha".into()));
        assert!(matches!(
            validate(&raw),
            Err(PresentationError::DuplicateRelation { .. })
        ));

        let mut raw = b11();
        raw.vertices.push("1".into());
        assert_eq!(
            validate(&raw),
            Err(PresentationError::DuplicateVertex("1".into()))
        );

        let mut raw = b11();
        raw.relations = vec![("delta".into(), "alpha".into())];
        assert_eq!(
            validate(&raw),
            Err(PresentationError::UnknownArrow("delta".into()))
        );
    }
}
