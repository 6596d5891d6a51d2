use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use super::presentation::QuiverPresentation;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("the algebra is infinite-dimensional: allowed paths form a cycle")]
    InfiniteDimensional,
}

/// A path in the quiver. Arrows are stored in the order they act (earliest first); the usual
/// written form reverses them, so `arrows = [a, b]` is the path `b·a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
    degree: i64,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
            degree: 0,
        }
    }

    pub fn from_arrow(presentation: &QuiverPresentation, arrow: usize) -> Self {
        let a = presentation.arrow(arrow);
        Path {
            source: a.source,
            target: a.target,
            arrows: vec![arrow],
            degree: a.degree,
        }
    }

    /// Builds a path from arrows in acting order, checking only quiver composability.
    pub fn from_arrows(presentation: &QuiverPresentation, arrows: &[usize]) -> Option<Self> {
        let (&first, rest) = arrows.split_first()?;
        let mut path = Path::from_arrow(presentation, first);
        for &a in rest {
            if presentation.arrow(a).source != path.target {
                return None;
            }
            path = path.then(presentation, a);
        }
        Some(path)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Arrows in acting order.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// The arrow that acts first.
    pub fn first_arrow(&self) -> Option<usize> {
        self.arrows.first().copied()
    }

    /// The arrow that acts last.
    pub fn last_arrow(&self) -> Option<usize> {
        self.arrows.last().copied()
    }

    /// Extends by one arrow acting after the path. Only the quiver endpoints are checked.
    fn then(&self, presentation: &QuiverPresentation, arrow: usize) -> Self {
        let a = presentation.arrow(arrow);
        debug_assert_eq!(a.source, self.target);
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path {
            source: self.source,
            target: a.target,
            arrows,
            degree: self.degree + a.degree,
        }
    }

    /// The product `later·self` in the algebra, or `None` if it is zero.
    pub fn compose_after(&self, presentation: &QuiverPresentation, later: &Path) -> Option<Path> {
        if self.target != later.source {
            return None;
        }
        if let (Some(junction_earlier), Some(junction_later)) =
            (self.last_arrow(), later.first_arrow())
        {
            if presentation.is_relation(junction_later, junction_earlier) {
                return None;
            }
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&later.arrows);
        Some(Path {
            source: self.source,
            target: later.target,
            arrows,
            degree: self.degree + later.degree,
        })
    }

    /// Path with the last-acting arrow removed.
    pub fn drop_last(&self, presentation: &QuiverPresentation) -> Option<Path> {
        let (&last, rest) = self.arrows.split_last()?;
        Some(match rest.is_empty() {
            true => Path::trivial(self.source),
            false => Path {
                source: self.source,
                target: presentation.arrow(last).source,
                arrows: rest.to_vec(),
                degree: self.degree - presentation.arrow(last).degree,
            },
        })
    }

    /// Path with the first-acting arrow removed.
    pub fn drop_first(&self, presentation: &QuiverPresentation) -> Option<Path> {
        let (&first, rest) = self.arrows.split_first()?;
        Some(match rest.is_empty() {
            true => Path::trivial(self.target),
            false => Path {
                source: presentation.arrow(first).target,
                target: self.target,
                arrows: rest.to_vec(),
                degree: self.degree - presentation.arrow(first).degree,
            },
        })
    }

    /// Whether no consecutive pair of arrows is a relation.
    pub fn is_allowed(&self, presentation: &QuiverPresentation) -> bool {
        self.arrows
            .windows(2)
            .all(|w| !presentation.is_relation(w[1], w[0]))
    }

    /// Whether every consecutive pair of arrows is a relation.
    pub fn is_relation_chain(&self, presentation: &QuiverPresentation) -> bool {
        self.arrows
            .windows(2)
            .all(|w| presentation.is_relation(w[1], w[0]))
    }

    /// Multidegree: how often each arrow occurs.
    pub fn arrow_counts(&self, arrow_count: usize) -> Vec<u32> {
        let mut counts = vec![0; arrow_count];
        for &a in &self.arrows {
            counts[a] += 1;
        }
        counts
    }

    /// Written form, last arrow first: `b.1.1*a.1.1`; trivial paths print as `e<vertex>`.
    pub fn display<'a>(&'a self, presentation: &'a QuiverPresentation) -> PathDisplay<'a> {
        PathDisplay {
            path: self,
            presentation,
        }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    presentation: &'a QuiverPresentation,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "e{}", self.presentation.vertices()[self.path.source]);
        }
        let labels: Vec<&str> = self
            .path
            .arrows
            .iter()
            .rev()
            .map(|&a| self.presentation.arrow(a).label.as_str())
            .collect();
        write!(f, "{}", labels.join("*"))
    }
}

/// Basis of the algebra: every allowed path, bucketed by endpoints and length.
#[derive(Clone, Debug)]
pub struct PathBasis {
    paths: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    buckets: BTreeMap<(usize, usize, usize), Vec<usize>>,
    parallel: Vec<Vec<Vec<usize>>>,
    vertex_count: usize,
}

impl PathBasis {
    fn from_paths(mut paths: Vec<Path>, vertex_count: usize) -> Self {
        paths.sort_by(|a, b| (a.len(), a.source, &a.arrows).cmp(&(b.len(), b.source, &b.arrows)));
        let mut index = HashMap::with_capacity(paths.len());
        let mut buckets: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
        let mut parallel = vec![vec![Vec::new(); vertex_count]; vertex_count];
        for (i, p) in paths.iter().enumerate() {
            index.insert((p.source, p.arrows.clone()), i);
            buckets
                .entry((p.source, p.target, p.len()))
                .or_default()
                .push(i);
            parallel[p.source][p.target].push(i);
        }
        PathBasis {
            paths,
            index,
            buckets,
            parallel,
            vertex_count,
        }
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, id: usize) -> &Path {
        &self.paths[id]
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn index_of(&self, path: &Path) -> Option<usize> {
        self.index.get(&(path.source, path.arrows.clone())).copied()
    }

    pub fn trivial(&self, vertex: usize) -> usize {
        self.index[&(vertex, Vec::new())]
    }

    /// Ids of allowed paths from `source` to `target`, in basis order.
    pub fn parallel(&self, source: usize, target: usize) -> &[usize] {
        &self.parallel[source][target]
    }

    pub fn bucket(&self, source: usize, target: usize, length: usize) -> &[usize] {
        self.buckets
            .get(&(source, target, length))
            .map_or(&[], Vec::as_slice)
    }

    pub fn buckets(&self) -> &BTreeMap<(usize, usize, usize), Vec<usize>> {
        &self.buckets
    }

    /// Product `later·earlier` as a basis id, or `None` when it vanishes.
    pub fn product(
        &self,
        presentation: &QuiverPresentation,
        later: usize,
        earlier: usize,
    ) -> Option<usize> {
        let p = self.paths[earlier].compose_after(presentation, &self.paths[later])?;
        self.index_of(&p)
    }
}

/// Whether the graph on arrows with an edge `a -> b` whenever `b·a` is composable and `keep(b, a)`
/// holds is acyclic.
pub(crate) fn arrow_graph_is_acyclic(
    presentation: &QuiverPresentation,
    keep: impl Fn(usize, usize) -> bool,
) -> bool {
    let n = presentation.arrows().len();
    let successors = arrow_successors(presentation, &keep);
    let mut indegree = vec![0usize; n];
    for succ in &successors {
        for &b in succ {
            indegree[b] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&a| indegree[a] == 0).collect();
    let mut seen = 0;
    while let Some(a) = stack.pop() {
        seen += 1;
        for &b in &successors[a] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                stack.push(b);
            }
        }
    }
    seen == n
}

fn arrow_successors(
    presentation: &QuiverPresentation,
    keep: &impl Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let n = presentation.arrows().len();
    (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| presentation.composable(b, a) && keep(b, a))
                .collect()
        })
        .collect()
}

/// True iff the allowed-path set is finite.
pub fn is_finite_dimensional(presentation: &QuiverPresentation) -> bool {
    arrow_graph_is_acyclic(presentation, |later, earlier| {
        !presentation.is_relation(later, earlier)
    })
}

/// Number of allowed paths, counted with memoized suffix counts over the arrow DAG.
pub fn count_paths(presentation: &QuiverPresentation) -> Result<usize, PathError> {
    if !is_finite_dimensional(presentation) {
        return Err(PathError::InfiniteDimensional);
    }
    let successors = arrow_successors(presentation, &|l, e| !presentation.is_relation(l, e));
    let mut memo: Vec<Option<usize>> = vec![None; presentation.arrows().len()];
    fn from(a: usize, successors: &[Vec<usize>], memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(c) = memo[a] {
            return c;
        }
        let c = 1 + successors[a]
            .iter()
            .map(|&b| from(b, successors, memo))
            .sum::<usize>();
        memo[a] = Some(c);
        c
    }
    let nontrivial: usize = (0..presentation.arrows().len())
        .map(|a| from(a, &successors, &mut memo))
        .sum();
    Ok(presentation.vertex_count() + nontrivial)
}

/// Every allowed path, including one trivial path per vertex.
pub fn enumerate_paths(presentation: &QuiverPresentation) -> Result<PathBasis, PathError> {
    let expected = count_paths(presentation)?;
    let paths = enumerate_chains(
        presentation,
        |l, e| !presentation.is_relation(l, e),
        None,
        expected,
    );
    debug_assert_eq!(paths.len(), expected);
    Ok(PathBasis::from_paths(paths, presentation.vertex_count()))
}

/// Paths whose consecutive pairs all satisfy `keep(later, earlier)`, optionally restricted to a
/// single length. The caller guarantees termination (acyclic graph or bounded length).
pub(crate) fn enumerate_chains(
    presentation: &QuiverPresentation,
    keep: impl Fn(usize, usize) -> bool,
    only_length: Option<usize>,
    capacity: usize,
) -> Vec<Path> {
    let successors = arrow_successors(presentation, &keep);
    let mut out = Vec::with_capacity(capacity);
    if only_length.is_none_or(|l| l == 0) {
        out.extend((0..presentation.vertex_count()).map(Path::trivial));
    }
    if only_length == Some(0) {
        return out;
    }
    let mut stack: Vec<Path> = (0..presentation.arrows().len())
        .rev()
        .map(|a| Path::from_arrow(presentation, a))
        .collect();
    while let Some(path) = stack.pop() {
        let len = path.len();
        let last = path.last_arrow().expect("nontrivial");
        if only_length.is_none_or(|l| l > len) {
            for &b in successors[last].iter().rev() {
                stack.push(path.then(presentation, b));
            }
        }
        if only_length.is_none_or(|l| l == len) {
            out.push(path);
        }
    }
    out
}

/// Integer matrix with `c[i][j]` = number of allowed paths from vertex `j` to vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<usize>>,
}

impl CartanMatrix {
    pub fn from_entries(entries: Vec<Vec<usize>>) -> Self {
        assert!(
            entries.iter().all(|r| r.len() == entries.len()),
            "Cartan matrix must be square"
        );
        CartanMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        CartanMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }
}

pub fn cartan_matrix(basis: &PathBasis) -> CartanMatrix {
    let n = basis.vertex_count();
    let entries = (0..n)
        .map(|i| (0..n).map(|j| basis.parallel(j, i).len()).collect())
        .collect();
    CartanMatrix { entries }
}
