//! Visibility among the points of a finite set, and the two quantities of the
//! big-line/big-clique question: the largest collinear subset and the
//! largest pairwise-visible subset.
//!
//! Two points of a set are visible when no other point of the set lies on
//! the open segment between them.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::clique;
use crate::geometry::on_open_segment;
use crate::incidence::LineIncidenceMap;
use crate::pointset::{PointSet, PointSetError};

/// Undirected graph on point indices `1..=n` whose edges are visible pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibilityGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<BitSet>,
}

impl VisibilityGraph {
    fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut adjacency = vec![BitSet::new(n + 1); n + 1];
        for &(i, j) in &edges {
            adjacency[i].insert(j);
            adjacency[j].insert(i);
        }
        VisibilityGraph { n, edges, adjacency }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i <= self.n && j <= self.n && i > 0 && j > 0 && self.adjacency[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count()
    }

    /// Neighbors of `i` in ascending order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i].iter()
    }

    pub(crate) fn adjacency(&self, i: usize) -> &BitSet {
        &self.adjacency[i]
    }

    /// Triangles `(i, j, k)` with `i < j < k`, in lexicographic order.
    pub fn triangles(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().flat_map(move |&(i, j)| {
            self.adjacency[i]
                .intersection(&self.adjacency[j])
                .iter()
                .filter(move |&k| k > j)
                .map(move |k| (i, j, k))
                .collect::<Vec<_>>()
        })
    }
}

impl Serialize for VisibilityGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VisibilityGraph", 2)?;
        s.serialize_field("n", &self.n)?;
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(i, j)| [i, j]).collect();
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}

/// Smallest index strictly between points `i` and `j`, if any.
pub fn blocker(ps: &PointSet, i: usize, j: usize) -> Result<Option<usize>, PointSetError> {
    ps.check_pair(i, j)?;
    let (a, b) = (&ps[i], &ps[j]);
    for (r, p) in ps.iter() {
        if r != i && r != j && on_open_segment(p, a, b).expect("distinct points") {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

pub fn is_visible(ps: &PointSet, i: usize, j: usize) -> Result<bool, PointSetError> {
    Ok(blocker(ps, i, j)?.is_none())
}

/// Visibility graph by grouping points per line: on each line only
/// consecutive points see each other.
pub fn build_visibility_graph(ps: &PointSet) -> VisibilityGraph {
    let map = LineIncidenceMap::build(ps);
    visibility_from_incidence(&map)
}

pub fn visibility_from_incidence(map: &LineIncidenceMap) -> VisibilityGraph {
    let mut edges = Vec::new();
    for id in 0..map.line_count() {
        let order = map.ordered_along(id);
        for w in order.windows(2) {
            edges.push((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    VisibilityGraph::from_edges(map.point_count(), edges)
}

/// Visibility graph by testing every pair against every other point.
pub fn build_visibility_graph_exhaustive(ps: &PointSet) -> VisibilityGraph {
    let n = ps.len();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if is_visible(ps, i, j).expect("valid pair") {
                edges.push((i, j));
            }
        }
    }
    VisibilityGraph::from_edges(n, edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collinear {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// Largest collinear subset; the witness is the lexicographically smallest
/// index list among maximum lines.
pub fn max_collinear(ps: &PointSet) -> Result<Collinear, PointSetError> {
    if ps.len() < 2 {
        return Err(PointSetError::Argument(format!(
            "max_collinear needs at least 2 points, got {}",
            ps.len()
        )));
    }
    let map = LineIncidenceMap::build(ps);
    let best = map.max_line().expect("two points span a line");
    Ok(Collinear {
        size: best.len(),
        witness: best.indices.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Ascending indices.
    pub witness: Vec<usize>,
    /// True when the search stopped at the cap; `size` is then a lower bound.
    pub capped: bool,
}

/// Largest set of pairwise visible points.
pub fn max_visible_clique(ps: &PointSet, cap: Option<usize>) -> Result<CliqueResult, PointSetError> {
    if ps.is_empty() {
        return Err(PointSetError::Argument("max_visible_clique needs at least 1 point".into()));
    }
    let graph = build_visibility_graph(ps);
    Ok(clique_of_graph(&graph, cap))
}

pub fn clique_of_graph(graph: &VisibilityGraph, cap: Option<usize>) -> CliqueResult {
    let found = clique::maximum_clique(graph, cap);
    let capped = matches!(cap, Some(c) if found.len() >= c);
    let mut witness = found;
    if let Some(c) = cap {
        witness.truncate(c.max(1));
    }
    CliqueResult {
        size: witness.len(),
        witness,
        capped,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlbcOutcome {
    CollinearFound,
    CliqueFound,
    BothFound,
    NeitherFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlbcVerdict {
    pub k: usize,
    pub l: usize,
    pub outcome: BlbcOutcome,
    pub collinear_witness: Option<Vec<usize>>,
    pub clique_witness: Option<Vec<usize>>,
}

/// Does `ps` contain `l` collinear points, `k` pairwise visible points, both
/// or neither.
pub fn check_blbc_instance(ps: &PointSet, k: usize, l: usize) -> Result<BlbcVerdict, PointSetError> {
    if k < 2 || l < 2 {
        return Err(PointSetError::Argument(format!("k and l must be at least 2, got k={k}, l={l}")));
    }
    let collinear_witness = if ps.len() >= 2 {
        let c = max_collinear(ps)?;
        (c.size >= l).then_some(c.witness)
    } else {
        None
    };
    let clique_witness = if ps.is_empty() {
        None
    } else {
        let c = max_visible_clique(ps, Some(k))?;
        (c.size >= k).then_some(c.witness)
    };
    let outcome = match (collinear_witness.is_some(), clique_witness.is_some()) {
        (true, true) => BlbcOutcome::BothFound,
        (true, false) => BlbcOutcome::CollinearFound,
        (false, true) => BlbcOutcome::CliqueFound,
        (false, false) => BlbcOutcome::NeitherFound,
    };
    Ok(BlbcVerdict {
        k,
        l,
        outcome,
        collinear_witness,
        clique_witness,
    })
}
