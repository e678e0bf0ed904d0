//! Map from each line spanned by a point sequence to the points on it.
//!
//! Every unordered pair of points lies on exactly one stored line, so the
//! map partitions the pairs. Points are addressed by 1-based index and the
//! map can grow one point at a time.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::geometry::{CanonicalLine, Homogeneous, Point};
use crate::pointset::{PointSet, PointSetError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineEntry {
    pub line: CanonicalLine,
    /// Ascending point indices, at least two.
    pub indices: Vec<usize>,
}

impl LineEntry {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// What happened to the map when a point was appended.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PointInsertion {
    /// Lines that already held two or more earlier points and gained the new one.
    pub extended: Vec<usize>,
    /// Fresh two-point lines, one per earlier point not on an extended line.
    pub created: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct LineIncidenceMap {
    coords: Vec<Homogeneous>,
    lines: Vec<LineEntry>,
    index: HashMap<CanonicalLine, usize>,
    // pair_lines[j - 2][i - 1] is the line id of the pair i < j.
    pair_lines: Vec<Vec<u32>>,
}

impl LineIncidenceMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds the map by enumerating every pair of `ps`.
    pub fn build(ps: &PointSet) -> Self {
        let coords: Vec<Homogeneous> = ps.points().iter().map(Homogeneous::from).collect();
        let n = coords.len();
        let mut map = LineIncidenceMap {
            coords,
            lines: Vec::new(),
            index: HashMap::new(),
            pair_lines: (2..=n).map(|j| vec![0; j - 1]).collect(),
        };
        for j in 2..=n {
            for i in 1..j {
                let line = CanonicalLine::through_homogeneous(&map.coords[i - 1], &map.coords[j - 1])
                    .expect("point set holds distinct points");
                let id = match map.index.get(&line) {
                    Some(&id) => id,
                    None => {
                        let id = map.lines.len();
                        map.index.insert(line.clone(), id);
                        map.lines.push(LineEntry {
                            line,
                            indices: Vec::new(),
                        });
                        id
                    }
                };
                let entry = &mut map.lines[id].indices;
                entry.push(i);
                entry.push(j);
                map.pair_lines[j - 2][i - 1] = id as u32;
            }
        }
        for entry in &mut map.lines {
            entry.indices.sort_unstable();
            entry.indices.dedup();
        }
        map
    }

    /// Appends a point as index `point_count() + 1`.
    pub fn push_point(&mut self, p: &Point) -> Result<PointInsertion, PointSetError> {
        let coords = Homogeneous::from(p);
        let n = self.coords.len() + 1;
        let mut row = Vec::with_capacity(n - 1);
        let mut lines_for_row = Vec::with_capacity(n - 1);
        for (m, other) in self.coords.iter().enumerate() {
            match CanonicalLine::through_homogeneous(other, &coords) {
                Some(line) => lines_for_row.push(line),
                None => {
                    return Err(PointSetError::Duplicate {
                        first: m + 1,
                        second: n,
                        point: p.clone(),
                    })
                }
            }
        }
        let mut result = PointInsertion::default();
        for (m, line) in lines_for_row.into_iter().enumerate() {
            let id = match self.index.get(&line) {
                Some(&id) => {
                    let entry = &mut self.lines[id].indices;
                    if entry.last() != Some(&n) {
                        entry.push(n);
                        result.extended.push(id);
                    }
                    id
                }
                None => {
                    let id = self.lines.len();
                    self.index.insert(line.clone(), id);
                    self.lines.push(LineEntry {
                        line,
                        indices: vec![m + 1, n],
                    });
                    result.created.push(id);
                    id
                }
            };
            row.push(id as u32);
        }
        self.coords.push(coords);
        if n >= 2 {
            self.pair_lines.push(row);
        }
        Ok(result)
    }

    pub fn point_count(&self) -> usize {
        self.coords.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[LineEntry] {
        &self.lines
    }

    pub fn entry(&self, id: usize) -> &LineEntry {
        &self.lines[id]
    }

    pub fn get(&self, line: &CanonicalLine) -> Option<&LineEntry> {
        self.index.get(line).map(|&id| &self.lines[id])
    }

    pub fn line_id(&self, line: &CanonicalLine) -> Option<usize> {
        self.index.get(line).copied()
    }

    /// Homogeneous coordinates of point `index` (1-based).
    pub fn coords(&self, index: usize) -> &Homogeneous {
        &self.coords[index - 1]
    }

    /// Id of the line through points `i` and `j`.
    pub fn pair_line_id(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i >= 1 && i < j && j <= self.coords.len(), "pair ({i}, {j}) out of range");
        self.pair_lines[j - 2][i - 1] as usize
    }

    pub fn pair_line(&self, i: usize, j: usize) -> &LineEntry {
        &self.lines[self.pair_line_id(i, j)]
    }

    /// Indices of line `id` sorted by position along the line.
    pub fn ordered_along(&self, id: usize) -> Vec<usize> {
        let entry = &self.lines[id];
        let mut order = entry.indices.clone();
        let vertical = entry.line.is_vertical();
        order.sort_by(|&p, &q| self.cmp_along(vertical, p, q));
        order
    }

    fn cmp_along(&self, vertical: bool, p: usize, q: usize) -> Ordering {
        let (a, b) = (&self.coords[p - 1], &self.coords[q - 1]);
        if vertical {
            (&a.y * &b.w).cmp(&(&b.y * &a.w))
        } else {
            (&a.x * &b.w).cmp(&(&b.x * &a.w))
        }
    }

    /// Largest number of points on one line, with the lexicographically
    /// smallest index list among lines of that size.
    pub fn max_line(&self) -> Option<&LineEntry> {
        self.lines
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.indices.cmp(&a.indices)))
    }
}
