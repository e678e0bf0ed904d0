//! Exact planar primitives: points, canonical lines, orientation and the
//! open-segment blocking predicate.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("degenerate segment: both endpoints are {0}")]
    DegenerateSegment(Point),
    #[error("degenerate input: cannot take the line through {0} and itself")]
    DegenerateLine(Point),
    #[error("segment parameter {0} is outside the open interval (0, 1)")]
    ParameterOutOfRange(Rational),
}

/// Exact point in the plane.
///
/// Ordering is lexicographic on `(x, y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Shorthand for integer coordinates.
    pub fn int(x: i64, y: i64) -> Self {
        Point::new(x, y)
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Point {
        Point {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }

    pub fn homogeneous(&self) -> Homogeneous {
        Homogeneous::from(self)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integer homogeneous coordinates `(x, y, w)` with `w > 0`, so the point is
/// `(x / w, y / w)`. Used to evaluate line equations without rational
/// normalization in the hot loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneous {
    pub x: BigInt,
    pub y: BigInt,
    pub w: BigInt,
}

impl From<&Point> for Homogeneous {
    fn from(p: &Point) -> Self {
        let w = p.x.denom().lcm(p.y.denom());
        Homogeneous {
            x: p.x.numer() * (&w / p.x.denom()),
            y: p.y.numer() * (&w / p.y.denom()),
            w,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    CounterClockwise,
    Collinear,
    Clockwise,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::Clockwise => Orientation::CounterClockwise,
        }
    }
}

/// Sign of `(b - a) x (c - a)`. Coincident inputs give `Collinear`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    match cross.signum() {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// True iff `p` lies strictly inside the segment from `a` to `b`.
///
/// Betweenness is decided on the axis along which `a` and `b` differ most,
/// which is exact and needs no division.
pub fn on_open_segment(p: &Point, a: &Point, b: &Point) -> Result<bool, GeometryError> {
    if a == b {
        return Err(GeometryError::DegenerateSegment(a.clone()));
    }
    if orientation(a, b, p) != Orientation::Collinear {
        return Ok(false);
    }
    let dx = (&b.x - &a.x).abs();
    let dy = (&b.y - &a.y).abs();
    let (pv, av, bv) = if dx >= dy {
        (&p.x, &a.x, &b.x)
    } else {
        (&p.y, &a.y, &b.y)
    };
    let (lo, hi) = if av < bv { (av, bv) } else { (bv, av) };
    Ok(lo < pv && pv < hi)
}

/// Line `a*x + b*y = c` with coprime integer coefficients, `a > 0` or
/// `a = 0, b > 0`. Equal values describe equal point sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLine {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl CanonicalLine {
    /// Normalizes an arbitrary nonzero `(a, b)` triple.
    pub fn from_coefficients(a: BigInt, b: BigInt, c: BigInt) -> Option<CanonicalLine> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            c = -c;
        }
        Some(CanonicalLine { a, b, c })
    }

    /// Line through two distinct homogeneous points (their cross product).
    pub fn through_homogeneous(p: &Homogeneous, q: &Homogeneous) -> Option<CanonicalLine> {
        let a = &p.y * &q.w - &p.w * &q.y;
        let b = &p.w * &q.x - &p.x * &q.w;
        let c = &p.y * &q.x - &p.x * &q.y;
        CanonicalLine::from_coefficients(a, b, c)
    }

    /// `a*x + b*y - c*w` for a homogeneous point; its sign is the side of the
    /// line the point lies on.
    pub fn eval(&self, p: &Homogeneous) -> BigInt {
        &self.a * &p.x + &self.b * &p.y - &self.c * &p.w
    }

    pub fn side(&self, p: &Homogeneous) -> Ordering {
        self.eval(p).sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(&p.homogeneous()).is_zero()
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// Compares two points on this line by their position along it.
    pub fn cmp_along(&self, p: &Point, q: &Point) -> Ordering {
        if self.is_vertical() {
            p.y.cmp(&q.y)
        } else {
            p.x.cmp(&q.x)
        }
    }
}

impl fmt::Display for CanonicalLine {
    /// `x - 3y = 0`, `2y = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |k: &BigInt, var: &str| match k.to_string().as_str() {
            "1" => var.to_string(),
            "-1" => format!("-{var}"),
            s => format!("{s}{var}"),
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (false, true) => write!(f, "{}", term(&self.a, "x"))?,
            (true, false) => write!(f, "{}", term(&self.b, "y"))?,
            _ => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} {}", term(&self.a, "x"), term(&self.b.abs(), "y"))?
            }
        }
        write!(f, " = {}", self.c)
    }
}

impl fmt::Debug for CanonicalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn line_through(a: &Point, b: &Point) -> Result<CanonicalLine, GeometryError> {
    if a == b {
        return Err(GeometryError::DegenerateLine(a.clone()));
    }
    Ok(CanonicalLine::through_homogeneous(&a.homogeneous(), &b.homogeneous())
        .expect("distinct points span a line"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineIntersection {
    At(Point),
    Parallel,
    Identical,
}

impl LineIntersection {
    pub fn point(&self) -> Option<&Point> {
        match self {
            LineIntersection::At(p) => Some(p),
            _ => None,
        }
    }
}

pub fn intersect(l1: &CanonicalLine, l2: &CanonicalLine) -> LineIntersection {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return if l1 == l2 {
            LineIntersection::Identical
        } else {
            LineIntersection::Parallel
        };
    }
    let x = &l1.c * &l2.b - &l2.c * &l1.b;
    let y = &l1.a * &l2.c - &l2.a * &l1.c;
    LineIntersection::At(Point {
        x: Rational::new(x, det.clone()),
        y: Rational::new(y, det),
    })
}

/// `a + t (b - a)` for `0 < t < 1`.
pub fn segment_param_point(a: &Point, b: &Point, t: &Rational) -> Result<Point, GeometryError> {
    if a == b {
        return Err(GeometryError::DegenerateSegment(a.clone()));
    }
    if !t.is_positive() || *t >= Rational::one() {
        return Err(GeometryError::ParameterOutOfRange(t.clone()));
    }
    Ok(Point {
        x: &a.x + t * (&b.x - &a.x),
        y: &a.y + t * (&b.y - &a.y),
    })
}

/// Parameter `t` at which `line` crosses the open segment from `a` to `b`,
/// or `None` if it misses, touches only an endpoint, or contains the segment.
pub fn segment_crossing(line: &CanonicalLine, a: &Homogeneous, b: &Homogeneous) -> Option<Rational> {
    let fa = line.eval(a);
    let fb = line.eval(b);
    if fa.is_zero() || fb.is_zero() || fa.sign() == fb.sign() {
        return None;
    }
    // f is affine along the segment once both ends are put on the same
    // homogeneous scale: f(t) = fa/wa + t (fb/wb - fa/wa).
    let sa = &fa * &b.w;
    let sb = &fb * &a.w;
    Some(Rational::new(sa.clone(), sa - sb))
}
