//! Independent checks of the finite-prefix properties of a constructed
//! sequence.
//!
//! Every check recomputes from raw coordinates with exact predicates. Traces
//! and pending sets produced by the construction are only ever the claim
//! under test. A failed report always carries the lexicographically least
//! counterexample.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::construction::{exclusion_bound, InsertionRecord, OrdinaryPair};
use crate::geometry::{line_through, on_open_segment, CanonicalLine, Homogeneous, Point};
use crate::incidence::LineIncidenceMap;
use crate::pointset::{PointSet, PointSetError};
use crate::visibility::{visibility_from_incidence, VisibilityGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Argument(String),
    #[error("trace does not match the points: {0}")]
    TraceMismatch(String),
    #[error(transparent)]
    PointSet(#[from] PointSetError),
}

/// Names accepted by the `--checks` selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Check {
    #[serde(rename = "no4collinear")]
    NoFourCollinear,
    #[serde(rename = "unique-triple")]
    UniqueTriple,
    #[serde(rename = "visible-pair-lemma")]
    VisiblePairLemma,
    #[serde(rename = "triangle-pending")]
    TrianglePending,
    #[serde(rename = "exclusion-bound")]
    ExclusionBound,
    #[serde(rename = "ordinary-oracle")]
    OrdinaryOracle,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::NoFourCollinear,
        Check::UniqueTriple,
        Check::VisiblePairLemma,
        Check::TrianglePending,
        Check::ExclusionBound,
        Check::OrdinaryOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::NoFourCollinear => "no4collinear",
            Check::UniqueTriple => "unique-triple",
            Check::VisiblePairLemma => "visible-pair-lemma",
            Check::TrianglePending => "triangle-pending",
            Check::ExclusionBound => "exclusion-bound",
            Check::OrdinaryOracle => "ordinary-oracle",
        }
    }

    pub fn needs_trace(self) -> bool {
        matches!(
            self,
            Check::UniqueTriple | Check::ExclusionBound | Check::OrdinaryOracle
        )
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// At least `k` points on one line; `indices` are the first `k`.
    Collinear { indices: Vec<usize> },
    /// The point inserted at step `n` is not in exactly the recorded triple.
    Insertion {
        n: usize,
        reason: String,
        collinear_pairs: Vec<[usize; 2]>,
    },
    /// A visible pair `i < k` whose line breaks the blocking pattern.
    VisiblePair {
        i: usize,
        k: usize,
        line: Vec<usize>,
        reason: String,
    },
    /// A pairwise-visible triple none of whose pairs is pending.
    Triangle { indices: [usize; 3] },
    /// A pair claimed pending whose line does not hold exactly two points.
    PendingPair { i: usize, j: usize, points_on_line: usize },
    ExclusionBound {
        n: usize,
        excluded_count: usize,
        bound: usize,
    },
    OrdinarySelection {
        selected: [usize; 2],
        oracle: Option<[usize; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub stats: BTreeMap<String, u64>,
}

impl VerificationReport {
    fn new(check: impl Into<String>, counterexample: Option<Counterexample>, stats: &[(&str, usize)]) -> Self {
        VerificationReport {
            check: check.into(),
            passed: counterexample.is_none(),
            counterexample,
            stats: stats.iter().map(|&(k, v)| (k.to_string(), v as u64)).collect(),
        }
    }
}

fn collinear_name(k: usize) -> String {
    format!("no{k}collinear")
}

/// Least `k`-prefix of an index list among lines holding at least `k` points.
fn least_k_collinear<'a>(lines: impl Iterator<Item = &'a Vec<usize>>, k: usize) -> Option<Vec<usize>> {
    lines
        .filter(|indices| indices.len() >= k)
        .map(|indices| indices[..k].to_vec())
        .min()
}

pub fn verify_no_k_collinear(ps: &PointSet, k: usize) -> Result<VerificationReport, VerifyError> {
    if k < 3 {
        return Err(VerifyError::Argument(format!("k must be at least 3, got {k}")));
    }
    let map = LineIncidenceMap::build(ps);
    let witness = least_k_collinear(map.lines().iter().map(|e| &e.indices), k);
    let largest = map.max_line().map_or(ps.len().min(1), |e| e.len());
    Ok(VerificationReport::new(
        collinear_name(k),
        witness.map(|indices| Counterexample::Collinear { indices }),
        &[("points", ps.len()), ("lines", map.line_count()), ("max_collinear", largest)],
    ))
}

fn check_trace_shape(trace: &[InsertionRecord], ps: &PointSet) -> Result<(), VerifyError> {
    let expected = ps.len().saturating_sub(3);
    if ps.len() < 3 || trace.len() != expected {
        return Err(VerifyError::TraceMismatch(format!(
            "{} points need {expected} records, found {}",
            ps.len(),
            trace.len()
        )));
    }
    for (pos, record) in trace.iter().enumerate() {
        let n = pos + 4;
        if record.n != n {
            return Err(VerifyError::TraceMismatch(format!(
                "record {pos} has n = {}, expected {n}",
                record.n
            )));
        }
        if ps[n] != record.point {
            return Err(VerifyError::TraceMismatch(format!(
                "record n = {n} places {} but point {n} is {}",
                record.point, ps[n]
            )));
        }
        let OrdinaryPair { i, j } = record.pair;
        if !(1 <= i && i < j && j < n) {
            return Err(VerifyError::TraceMismatch(format!(
                "record n = {n} names pair ({i}, {j})"
            )));
        }
    }
    Ok(())
}

/// Checks one record against the points `1..=record.n` of `ps`.
fn check_insertion(ps: &PointSet, record: &InsertionRecord) -> Option<Counterexample> {
    let n = record.n;
    let xn = &ps[n];
    let mut groups: HashMap<_, Vec<usize>> = HashMap::new();
    for m in 1..n {
        let line = line_through(&ps[m], xn).expect("distinct points");
        groups.entry(line).or_default().push(m);
    }
    let mut pairs: Vec<[usize; 2]> = Vec::new();
    for members in groups.values() {
        for (a, &p) in members.iter().enumerate() {
            for &q in &members[a + 1..] {
                pairs.push([p.min(q), p.max(q)]);
            }
        }
    }
    pairs.sort_unstable();
    let expected = [record.pair.i, record.pair.j];
    let reason = if pairs.len() != 1 {
        format!("x{n} is collinear with {} pairs of earlier points", pairs.len())
    } else if pairs[0] != expected {
        format!(
            "x{n} is collinear with ({}, {}), not the recorded {}",
            pairs[0][0], pairs[0][1], record.pair
        )
    } else if !on_open_segment(xn, &ps[expected[0]], &ps[expected[1]]).expect("distinct points") {
        format!("x{n} is not strictly between x{} and x{}", expected[0], expected[1])
    } else {
        return None;
    };
    Some(Counterexample::Insertion {
        n,
        reason,
        collinear_pairs: pairs,
    })
}

pub fn verify_unique_triple_at_insertion(
    trace: &[InsertionRecord],
    ps: &PointSet,
) -> Result<VerificationReport, VerifyError> {
    check_trace_shape(trace, ps)?;
    let failure = trace.iter().find_map(|record| check_insertion(ps, record));
    Ok(VerificationReport::new(
        Check::UniqueTriple.name(),
        failure,
        &[("records", trace.len())],
    ))
}

/// For a visible pair `i < k` on line `line` (sorted indices), the third
/// point must exist alone, precede `k`, and have `x_k` between it and `x_i`.
fn check_visible_pair(ps: &PointSet, i: usize, k: usize, line: &[usize]) -> Option<Counterexample> {
    let reason = if line.len() != 3 {
        format!("line holds {} points, expected 3", line.len())
    } else {
        let third = *line.iter().find(|&&r| r != i && r != k).expect("three indices");
        if third > k {
            format!("third point {third} comes after {k}")
        } else if !on_open_segment(&ps[k], &ps[i], &ps[third]).expect("distinct points") {
            format!("x{k} is not strictly between x{i} and x{third}")
        } else {
            return None;
        }
    };
    Some(Counterexample::VisiblePair {
        i,
        k,
        line: line.to_vec(),
        reason,
    })
}

pub fn verify_visible_pair_lemma(ps: &PointSet) -> VerificationReport {
    let map = LineIncidenceMap::build(ps);
    let graph = visibility_from_incidence(&map);
    let mut qualifying = 0;
    let mut failure = None;
    for &(i, k) in graph.edges() {
        let line = &map.pair_line(i, k).indices;
        if line.len() < 3 {
            continue;
        }
        qualifying += 1;
        if failure.is_none() {
            failure = check_visible_pair(ps, i, k, line);
        }
    }
    VerificationReport::new(
        Check::VisiblePairLemma.name(),
        failure,
        &[("visible_pairs", graph.edge_count()), ("qualifying_pairs", qualifying)],
    )
}

/// Least pending pair (by `(i, j)`) that is not an ordinary pair of `map`.
fn bad_pending_pair(map: &LineIncidenceMap, pending: &BTreeSet<OrdinaryPair>) -> Option<Counterexample> {
    let n = map.point_count();
    pending
        .iter()
        .filter_map(|&OrdinaryPair { i, j }| {
            let count = if i >= 1 && i < j && j <= n {
                map.pair_line(i, j).len()
            } else {
                0
            };
            (count != 2).then_some((i, j, count))
        })
        .min()
        .map(|(i, j, points_on_line)| Counterexample::PendingPair { i, j, points_on_line })
}

/// Every pairwise-visible triple must still have a pending pair.
pub fn verify_triangle_pending(ps: &PointSet, pending: &BTreeSet<OrdinaryPair>) -> VerificationReport {
    let map = LineIncidenceMap::build(ps);
    let graph: VisibilityGraph = visibility_from_incidence(&map);
    let is_pending = |a: usize, b: usize| pending.contains(&OrdinaryPair::new(a, b));
    let mut triangles = 0;
    let mut failure = None;
    for (i, j, k) in graph.triangles() {
        triangles += 1;
        if failure.is_none() && !is_pending(i, j) && !is_pending(i, k) && !is_pending(j, k) {
            failure = Some(Counterexample::Triangle { indices: [i, j, k] });
        }
    }
    let failure = failure.or_else(|| bad_pending_pair(&map, pending));
    VerificationReport::new(
        Check::TrianglePending.name(),
        failure,
        &[
            ("visible_pairs", graph.edge_count()),
            ("pending_pairs", pending.len()),
            ("triangles", triangles),
        ],
    )
}

fn check_bound(record: &InsertionRecord) -> Option<Counterexample> {
    let bound = exclusion_bound(record.n);
    (record.excluded_count > bound).then_some(Counterexample::ExclusionBound {
        n: record.n,
        excluded_count: record.excluded_count,
        bound,
    })
}

pub fn verify_exclusion_bound(trace: &[InsertionRecord]) -> VerificationReport {
    let failure = trace.iter().find_map(check_bound);
    let max = trace.iter().map(|r| r.excluded_count).max().unwrap_or(0);
    VerificationReport::new(
        Check::ExclusionBound.name(),
        failure,
        &[("records", trace.len()), ("max_excluded", max)],
    )
}

/// The `(j, i)`-least ordinary pair of `ps` by exhaustive collinearity
/// testing, plus the number of pairs scanned to find it.
pub fn least_ordinary_pair(ps: &PointSet) -> (Option<OrdinaryPair>, usize) {
    let coords: Vec<Homogeneous> = ps.points().iter().map(Point::homogeneous).collect();
    least_ordinary_in(&coords)
}

// Scans pairs in key order; each candidate's line equation is tested
// against every other point in integer arithmetic.
fn least_ordinary_in(coords: &[Homogeneous]) -> (Option<OrdinaryPair>, usize) {
    let n = coords.len();
    let mut scanned = 0;
    for j in 1..n {
        for i in 0..j {
            scanned += 1;
            let line = CanonicalLine::through_homogeneous(&coords[i], &coords[j]).expect("points are distinct");
            let ordinary = (0..n)
                .filter(|&r| r != i && r != j)
                .all(|r| !line.eval(&coords[r]).is_zero());
            if ordinary {
                return (Some(OrdinaryPair::new(i + 1, j + 1)), scanned);
            }
        }
    }
    (None, scanned)
}

/// Recomputes the ordinary pairs of `ps` without any incidence structure and
/// checks that `selected` is the least of them.
pub fn verify_ordinary_oracle(ps: &PointSet, selected: OrdinaryPair) -> VerificationReport {
    let (oracle, scanned) = least_ordinary_pair(ps);
    let failure = (oracle != Some(selected)).then(|| Counterexample::OrdinarySelection {
        selected: [selected.i, selected.j],
        oracle: oracle.map(|p| [p.i, p.j]),
    });
    VerificationReport::new(
        Check::OrdinaryOracle.name(),
        failure,
        &[("points", ps.len()), ("pairs_scanned", scanned)],
    )
}

/// Runs [`verify_ordinary_oracle`] for every step of a trace against the
/// points present before that step.
pub fn verify_ordinary_oracle_trace(
    trace: &[InsertionRecord],
    ps: &PointSet,
) -> Result<VerificationReport, VerifyError> {
    check_trace_shape(trace, ps)?;
    let coords: Vec<Homogeneous> = ps.points().iter().map(Point::homogeneous).collect();
    let mut scanned = 0;
    let mut failure = None;
    for record in trace {
        let (oracle, count) = least_ordinary_in(&coords[..record.n - 1]);
        scanned += count;
        if oracle != Some(record.pair) {
            failure = Some(Counterexample::OrdinarySelection {
                selected: [record.pair.i, record.pair.j],
                oracle: oracle.map(|p| [p.i, p.j]),
            });
            break;
        }
    }
    Ok(VerificationReport::new(
        Check::OrdinaryOracle.name(),
        failure,
        &[("records", trace.len()), ("pairs_scanned", scanned)],
    ))
}

/// Runs the five prefix checks on every prefix of a growing sequence
/// without recomputing from scratch.
///
/// The verifier keeps its own line map built from the raw coordinates it is
/// fed. Checks whose result for a prefix depends only on earlier points
/// (the per-record checks) are evaluated once per record and accumulated.
#[derive(Debug, Clone, Default)]
pub struct PrefixVerifier {
    points: PointSet,
    map: LineIncidenceMap,
    rich_lines: BTreeSet<usize>,
    insertion_failure: Option<Counterexample>,
    bound_failure: Option<Counterexample>,
    records: usize,
    max_excluded: usize,
}

impl PrefixVerifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// Appends the next point. From the fourth point on, `record` is the
    /// trace entry claimed to have produced it.
    pub fn push(&mut self, point: &Point, record: Option<&InsertionRecord>) -> Result<(), VerifyError> {
        let n = self.points.len() + 1;
        match record {
            Some(r) if r.n != n || r.point != *point => {
                return Err(VerifyError::TraceMismatch(format!(
                    "record n = {} does not describe point {n}",
                    r.n
                )))
            }
            Some(r) if !(1 <= r.pair.i && r.pair.i < r.pair.j && r.pair.j < n) => {
                return Err(VerifyError::TraceMismatch(format!(
                    "record n = {n} names pair {}",
                    r.pair
                )))
            }
            None if n >= 4 => {
                return Err(VerifyError::TraceMismatch(format!("point {n} has no record")))
            }
            _ => {}
        }
        let insertion = self.map.push_point(point)?;
        for id in insertion.extended {
            self.rich_lines.insert(id);
        }
        self.points.push_unchecked(point.clone());
        if let Some(record) = record {
            self.records += 1;
            self.max_excluded = self.max_excluded.max(record.excluded_count);
            if self.insertion_failure.is_none() {
                self.insertion_failure = check_insertion(&self.points, record);
            }
            if self.bound_failure.is_none() {
                self.bound_failure = check_bound(record);
            }
        }
        Ok(())
    }

    fn rich_orders(&self) -> impl Iterator<Item = (usize, Vec<usize>)> + '_ {
        self.rich_lines.iter().map(|&id| (id, self.map.ordered_along(id)))
    }

    /// Reports for the current prefix, in the order no4collinear,
    /// unique-triple, visible-pair-lemma, triangle-pending, exclusion-bound.
    pub fn reports(&self, pending: &BTreeSet<OrdinaryPair>) -> [VerificationReport; 5] {
        let n = self.points.len();

        let collinear = least_k_collinear(
            self.rich_lines.iter().map(|&id| &self.map.entry(id).indices),
            4,
        );
        let largest = self
            .rich_lines
            .iter()
            .map(|&id| self.map.entry(id).len())
            .max()
            .unwrap_or(n.min(2));
        let no_four = VerificationReport::new(
            collinear_name(4),
            collinear.map(|indices| Counterexample::Collinear { indices }),
            &[("points", n), ("lines", self.map.line_count()), ("max_collinear", largest)],
        );

        let unique = VerificationReport::new(
            Check::UniqueTriple.name(),
            self.insertion_failure.clone(),
            &[("records", self.records)],
        );

        // Visible pairs: one per two-point line, plus consecutive points on
        // each richer line.
        let mut visible = self.map.line_count() - self.rich_lines.len();
        let mut rich_visible: Vec<(usize, usize, usize)> = Vec::new();
        for (id, order) in self.rich_orders() {
            for w in order.windows(2) {
                rich_visible.push((w[0].min(w[1]), w[0].max(w[1]), id));
            }
        }
        visible += rich_visible.len();
        rich_visible.sort_unstable();
        let lemma_failure = rich_visible
            .iter()
            .find_map(|&(i, k, id)| check_visible_pair(&self.points, i, k, &self.map.entry(id).indices));
        let lemma = VerificationReport::new(
            Check::VisiblePairLemma.name(),
            lemma_failure,
            &[("visible_pairs", visible), ("qualifying_pairs", rich_visible.len())],
        );

        // Triangles can only be formed from visible pairs outside `pending`.
        let mut unpended: Vec<(usize, usize)> = rich_visible
            .iter()
            .map(|&(i, k, _)| (i, k))
            .filter(|&(i, k)| !pending.contains(&OrdinaryPair::new(i, k)))
            .collect();
        for entry in self.map.lines() {
            if entry.len() == 2 {
                let (i, j) = (entry.indices[0], entry.indices[1]);
                if !pending.contains(&OrdinaryPair::new(i, j)) {
                    unpended.push((i, j));
                }
            }
        }
        let triangle_failure = least_triangle(&unpended)
            .map(|indices| Counterexample::Triangle { indices })
            .or_else(|| bad_pending_pair(&self.map, pending));
        let triangle = VerificationReport::new(
            Check::TrianglePending.name(),
            triangle_failure,
            &[("visible_pairs", visible), ("pending_pairs", pending.len())],
        );

        let bound = VerificationReport::new(
            Check::ExclusionBound.name(),
            self.bound_failure.clone(),
            &[("records", self.records), ("max_excluded", self.max_excluded)],
        );

        [no_four, unique, lemma, triangle, bound]
    }
}

/// Lexicographically least triangle of an edge list.
fn least_triangle(edges: &[(usize, usize)]) -> Option<[usize; 3]> {
    let mut adjacency: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(i, j) in edges {
        adjacency.entry(i).or_default().insert(j);
        adjacency.entry(j).or_default().insert(i);
    }
    for (&i, ni) in &adjacency {
        for &j in ni.range(i + 1..) {
            let nj = &adjacency[&j];
            if let Some(&k) = ni.range(j + 1..).find(|k| nj.contains(k)) {
                return Some([i, j, k]);
            }
        }
    }
    None
}

/// Runs the five prefix checks on a whole sequence at once.
pub fn verify_all(
    ps: &PointSet,
    trace: &[InsertionRecord],
    pending: &BTreeSet<OrdinaryPair>,
) -> Result<Vec<VerificationReport>, VerifyError> {
    Ok(vec![
        verify_no_k_collinear(ps, 4)?,
        verify_unique_triple_at_insertion(trace, ps)?,
        verify_visible_pair_lemma(ps),
        verify_triangle_pending(ps, pending),
        verify_exclusion_bound(trace),
    ])
}
