//! Builds a point sequence with no four collinear points in which every
//! visible pair is eventually blocked.
//!
//! Starting from three non-collinear points, each step takes the ordinary
//! line (a line through exactly two current points) whose pair `(i, j)`,
//! `i < j`, is smallest by `(j, i)`, and places the next point strictly
//! between `x_i` and `x_j` so that `{x_i, x_n, x_j}` is the only collinear
//! triple containing it. The placement parameter is the first fraction in
//! Farey order that avoids every crossing of another spanned line.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::farey::choose_parameter;
use crate::geometry::{
    orientation, segment_crossing, segment_param_point, CanonicalLine, GeometryError, Orientation,
    Point,
};
use crate::incidence::LineIncidenceMap;
use crate::pointset::PointSet;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid seed: points {first} and {second} coincide")]
    DuplicateSeed { first: usize, second: usize },
    #[error("invalid seed: points 1, 2, 3 are collinear")]
    CollinearSeed,
    #[error("invalid seed: expected exactly 3 points, got {0}")]
    SeedSize(usize),
    #[error("count must be at least 3, got {0}")]
    CountTooSmall(usize),
    #[error("no ordinary pair is pending among {0} points; the state is corrupt")]
    EmptyPending(usize),
    #[error("pair {0} is not pending")]
    NotPending(OrdinaryPair),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("placing x{n} at t = {t} on {pair} puts it on the line through points {conflict:?}")]
    Placement {
        n: usize,
        pair: OrdinaryPair,
        t: Rational,
        conflict: Vec<usize>,
    },
    #[error("corrupt state: {0}")]
    Corrupt(String),
}

/// Pair `i < j` spanning an ordinary line, ordered by `(j, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrdinaryPair {
    pub i: usize,
    pub j: usize,
}

impl OrdinaryPair {
    pub fn new(a: usize, b: usize) -> Self {
        OrdinaryPair {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn key(&self) -> (usize, usize) {
        (self.j, self.i)
    }
}

impl Ord for OrdinaryPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for OrdinaryPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrdinaryPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedTriple([Point; 3]);

impl SeedTriple {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self, ConstructionError> {
        for (first, second, p, q) in [(1, 2, &a, &b), (1, 3, &a, &c), (2, 3, &b, &c)] {
            if p == q {
                return Err(ConstructionError::DuplicateSeed { first, second });
            }
        }
        if orientation(&a, &b, &c) == Orientation::Collinear {
            return Err(ConstructionError::CollinearSeed);
        }
        Ok(SeedTriple([a, b, c]))
    }

    pub fn points(&self) -> &[Point; 3] {
        &self.0
    }
}

impl Default for SeedTriple {
    /// `(0, 0), (1, 0), (0, 1)`.
    fn default() -> Self {
        SeedTriple([Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)])
    }
}

impl TryFrom<Vec<Point>> for SeedTriple {
    type Error = ConstructionError;

    fn try_from(points: Vec<Point>) -> Result<Self, Self::Error> {
        let n = points.len();
        let [a, b, c]: [Point; 3] = points
            .try_into()
            .map_err(|_| ConstructionError::SeedSize(n))?;
        SeedTriple::new(a, b, c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionRecord {
    pub n: usize,
    pub pair: OrdinaryPair,
    /// Distinct forbidden parameters on the pair's open segment.
    pub excluded_count: usize,
    pub t: Rational,
    pub point: Point,
}

/// `C(n - 3, 2)`, the number of lines spanned by the points other than the
/// chosen pair, which bounds the forbidden placements for `x_n`.
pub fn exclusion_bound(n: usize) -> usize {
    let m = n.saturating_sub(3);
    m * m.saturating_sub(1) / 2
}

#[derive(Debug, Clone)]
pub struct ConstructionState {
    points: PointSet,
    lines: LineIncidenceMap,
    pending: BTreeSet<OrdinaryPair>,
    trace: Vec<InsertionRecord>,
}

impl ConstructionState {
    pub fn new(seed: &SeedTriple) -> Self {
        let mut lines = LineIncidenceMap::new();
        for p in seed.points() {
            lines.push_point(p).expect("seed points are distinct");
        }
        ConstructionState {
            points: PointSet::from_distinct(seed.points().to_vec()),
            lines,
            pending: [(1, 2), (1, 3), (2, 3)]
                .into_iter()
                .map(|(i, j)| OrdinaryPair::new(i, j))
                .collect(),
            trace: Vec::new(),
        }
    }

    /// State for an arbitrary point set: every pair whose line holds exactly
    /// two points is pending, and the trace is empty.
    pub fn from_points(points: PointSet) -> Result<Self, ConstructionError> {
        let lines = LineIncidenceMap::build(&points);
        let pending: BTreeSet<OrdinaryPair> = lines
            .lines()
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| OrdinaryPair::new(e.indices[0], e.indices[1]))
            .collect();
        if pending.is_empty() {
            return Err(ConstructionError::EmptyPending(points.len()));
        }
        Ok(ConstructionState {
            points,
            lines,
            pending,
            trace: Vec::new(),
        })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn lines(&self) -> &LineIncidenceMap {
        &self.lines
    }

    /// Pairs whose line holds exactly two points, in `(j, i)` order.
    pub fn pending(&self) -> &BTreeSet<OrdinaryPair> {
        &self.pending
    }

    pub fn trace(&self) -> &[InsertionRecord] {
        &self.trace
    }

    pub fn into_parts(self) -> (PointSet, Vec<InsertionRecord>) {
        (self.points, self.trace)
    }

    /// The pending pair with the smallest `j`, then the smallest `i`.
    pub fn select_ordinary_pair(&self) -> Result<OrdinaryPair, ConstructionError> {
        self.pending
            .first()
            .copied()
            .ok_or(ConstructionError::EmptyPending(self.len()))
    }

    /// Parameters `t` in (0, 1) at which the point `x_i + t (x_j - x_i)`
    /// would lie on a spanned line other than the pair's own.
    ///
    /// Every stored line is examined. Lines through `x_i` or `x_j` cannot
    /// cross the open segment; membership of both endpoints is re-derived
    /// from the coordinates and any disagreement with the map is reported as
    /// corruption.
    pub fn excluded_parameters(&self, pair: OrdinaryPair) -> Result<HashSet<Rational>, ConstructionError> {
        if !self.pending.contains(&pair) {
            return Err(ConstructionError::NotPending(pair));
        }
        let own = self.lines.pair_line_id(pair.i, pair.j);
        let a = self.lines.coords(pair.i);
        let b = self.lines.coords(pair.j);
        let mut excluded = HashSet::new();
        for (id, entry) in self.lines.lines().iter().enumerate() {
            if id == own {
                continue;
            }
            let has_i = entry.indices.binary_search(&pair.i).is_ok();
            let has_j = entry.indices.binary_search(&pair.j).is_ok();
            if has_i && has_j {
                return Err(ConstructionError::Corrupt(format!(
                    "pair {pair} appears on two stored lines"
                )));
            }
            let on_i = entry.line.eval(a).sign() == num_bigint::Sign::NoSign;
            let on_j = entry.line.eval(b).sign() == num_bigint::Sign::NoSign;
            if on_i != has_i || on_j != has_j {
                return Err(ConstructionError::Corrupt(format!(
                    "line {:?} membership of {pair} disagrees with coordinates",
                    entry.line
                )));
            }
            if has_i || has_j {
                continue;
            }
            if let Some(t) = segment_crossing(&entry.line, a, b) {
                excluded.insert(t);
            }
        }
        Ok(excluded)
    }

    /// Places `x_n = x_i + t (x_j - x_i)`, after checking that `t` avoids
    /// every excluded parameter.
    pub fn insert_point(&mut self, pair: OrdinaryPair, t: Rational) -> Result<&InsertionRecord, ConstructionError> {
        let excluded = self.excluded_parameters(pair)?;
        self.insert_checked(pair, t, excluded.len())
    }

    fn insert_checked(
        &mut self,
        pair: OrdinaryPair,
        t: Rational,
        excluded_count: usize,
    ) -> Result<&InsertionRecord, ConstructionError> {
        if !self.pending.contains(&pair) {
            return Err(ConstructionError::NotPending(pair));
        }
        let n = self.len() + 1;
        let point = segment_param_point(&self.points[pair.i], &self.points[pair.j], &t)?;
        let own = self.lines.pair_line_id(pair.i, pair.j);

        // A second collinear triple through the new point would show up as
        // a line from it to some other point that is already stored.
        let coords = point.homogeneous();
        for m in 1..n {
            if m == pair.i || m == pair.j {
                continue;
            }
            let line = CanonicalLine::through_homogeneous(self.lines.coords(m), &coords)
                .ok_or_else(|| ConstructionError::Placement {
                    n,
                    pair,
                    t: t.clone(),
                    conflict: vec![m],
                })?;
            if let Some(entry) = self.lines.get(&line) {
                return Err(ConstructionError::Placement {
                    n,
                    pair,
                    t,
                    conflict: entry.indices.clone(),
                });
            }
        }

        let insertion = self
            .lines
            .push_point(&point)
            .map_err(|e| ConstructionError::Corrupt(e.to_string()))?;
        if insertion.extended != [own] || insertion.created.len() != n - 3 {
            return Err(ConstructionError::Corrupt(format!(
                "x{n} extended lines {:?} and created {} lines",
                insertion.extended,
                insertion.created.len()
            )));
        }
        self.pending.remove(&pair);
        for id in insertion.created {
            let indices = &self.lines.entry(id).indices;
            self.pending.insert(OrdinaryPair::new(indices[0], indices[1]));
        }
        self.points.push_unchecked(point.clone());
        self.trace.push(InsertionRecord {
            n,
            pair,
            excluded_count,
            t,
            point,
        });
        Ok(self.trace.last().expect("just pushed"))
    }

    /// One full step: select, exclude, choose, insert.
    pub fn step(&mut self) -> Result<&InsertionRecord, ConstructionError> {
        let pair = self.select_ordinary_pair()?;
        let excluded = self.excluded_parameters(pair)?;
        let t = choose_parameter(&excluded);
        self.insert_checked(pair, t, excluded.len())
    }
}

/// The first `count` points of the sequence grown from `seed`.
pub fn generate(seed: &SeedTriple, count: usize) -> Result<ConstructionState, ConstructionError> {
    if count < 3 {
        return Err(ConstructionError::CountTooSmall(count));
    }
    let mut state = ConstructionState::new(seed);
    while state.len() < count {
        state.step()?;
    }
    Ok(state)
}

/// Pending pairs implied by a trace: the seed pairs, minus each step's
/// chosen pair, plus the fresh pairs `(m, n)` each step creates.
pub fn pending_from_trace(trace: &[InsertionRecord]) -> BTreeSet<OrdinaryPair> {
    let mut pending: BTreeSet<OrdinaryPair> = [(1, 2), (1, 3), (2, 3)]
        .into_iter()
        .map(|(i, j)| OrdinaryPair::new(i, j))
        .collect();
    for record in trace {
        apply_record(&mut pending, record);
    }
    pending
}

/// Updates a pending set for one insertion step.
pub fn apply_record(pending: &mut BTreeSet<OrdinaryPair>, record: &InsertionRecord) {
    pending.remove(&record.pair);
    for m in 1..record.n {
        if m != record.pair.i && m != record.pair.j {
            pending.insert(OrdinaryPair::new(m, record.n));
        }
    }
}
