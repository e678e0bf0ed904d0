use std::collections::HashMap;
use std::ops::Index;

use thiserror::Error;

use crate::geometry::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointSetError {
    #[error("points {first} and {second} are both {point}")]
    Duplicate {
        first: usize,
        second: usize,
        point: Point,
    },
    #[error("index {index} is out of range 1..={len}")]
    OutOfRange { index: usize, len: usize },
    #[error("indices must differ, got {0} twice")]
    SameIndex(usize),
    #[error("{0}")]
    Argument(String),
}

/// Ordered set of pairwise distinct points, addressed by 1-based index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, PointSetError> {
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
        for (pos, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(PointSetError::Duplicate {
                    first,
                    second: pos + 1,
                    point: p.clone(),
                });
            }
            seen.insert(p, pos + 1);
        }
        Ok(PointSet { points })
    }

    pub(crate) fn from_distinct(points: Vec<Point>) -> Self {
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point with 1-based index `index`.
    pub fn get(&self, index: usize) -> Option<&Point> {
        index.checked_sub(1).and_then(|i| self.points.get(i))
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// `(index, point)` pairs in index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Point)> {
        self.points.iter().enumerate().map(|(i, p)| (i + 1, p))
    }

    /// The first `n` points.
    pub fn prefix(&self, n: usize) -> PointSet {
        PointSet {
            points: self.points[..n.min(self.points.len())].to_vec(),
        }
    }

    pub(crate) fn push_unchecked(&mut self, p: Point) {
        self.points.push(p);
    }

    pub fn check_index(&self, index: usize) -> Result<(), PointSetError> {
        if index == 0 || index > self.len() {
            Err(PointSetError::OutOfRange {
                index,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn check_pair(&self, i: usize, j: usize) -> Result<(), PointSetError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(PointSetError::SameIndex(i));
        }
        Ok(())
    }
}

impl Index<usize> for PointSet {
    type Output = Point;

    /// 1-based.
    fn index(&self, index: usize) -> &Point {
        &self.points[index - 1]
    }
}

impl TryFrom<Vec<Point>> for PointSet {
    type Error = PointSetError;

    fn try_from(points: Vec<Point>) -> Result<Self, Self::Error> {
        PointSet::new(points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_naming_both_indices() {
        let err = PointSet::new(vec![Point::int(0, 0), Point::int(1, 1), Point::int(0, 0)]).unwrap_err();
        assert_eq!(
            err,
            PointSetError::Duplicate {
                first: 1,
                second: 3,
                point: Point::int(0, 0)
            }
        );
    }

    #[test]
    fn one_based_access() {
        let ps = PointSet::new(vec![Point::int(0, 0), Point::int(1, 1)]).unwrap();
        assert_eq!(ps[1], Point::int(0, 0));
        assert_eq!(ps.get(2), Some(&Point::int(1, 1)));
        assert_eq!(ps.get(0), None);
        assert_eq!(ps.get(3), None);
        assert!(ps.check_pair(1, 2).is_ok());
        assert_eq!(ps.check_pair(1, 1), Err(PointSetError::SameIndex(1)));
        assert_eq!(ps.check_index(3), Err(PointSetError::OutOfRange { index: 3, len: 2 }));
        assert_eq!(ps.prefix(1).len(), 1);
    }
}
