//! Brute-force oracles written against plain rational arithmetic, sharing no
//! code with the library's predicates, plus random point-set sources.

#![allow(dead_code)]

use blbc::{Point, PointSet, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn set(pts: &[(i64, i64)]) -> PointSet {
    PointSet::new(pts.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap()
}

pub fn grid3() -> PointSet {
    let mut pts = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            pts.push((x, y));
        }
    }
    set(&pts)
}

fn cross(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    cross(a, b, c).is_zero()
}

/// `p` strictly between `a` and `b`: collinear, and both dot products from
/// the endpoints positive.
pub fn strictly_between(p: &Point, a: &Point, b: &Point) -> bool {
    if !collinear(a, b, p) {
        return false;
    }
    let dot = |o: &Point, u: &Point, v: &Point| (&u.x - &o.x) * (&v.x - &o.x) + (&u.y - &o.y) * (&v.y - &o.y);
    dot(a, p, b).is_positive() && dot(b, p, a).is_positive()
}

/// Visibility matrix, 0-based.
pub fn visibility_matrix(pts: &[Point]) -> Vec<Vec<bool>> {
    let n = pts.len();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let seen = !(0..n).any(|k| k != i && k != j && strictly_between(&pts[k], &pts[i], &pts[j]));
            m[i][j] = seen;
            m[j][i] = seen;
        }
    }
    m
}

/// Sorted 1-based visible pairs.
pub fn visible_pairs(pts: &[Point]) -> Vec<(usize, usize)> {
    let m = visibility_matrix(pts);
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &seen) in row.iter().enumerate().skip(i + 1) {
            if seen {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// Largest pairwise-visible subset size, by checking all 2^n subsets.
pub fn clique_oracle(pts: &[Point]) -> usize {
    let n = pts.len();
    assert!(n <= 16, "exhaustive oracle is for small sets");
    let m = visibility_matrix(pts);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let ok = members
            .iter()
            .enumerate()
            .all(|(a, &i)| members[a + 1..].iter().all(|&j| m[i][j]));
        if ok {
            best = size;
        }
    }
    best
}

pub fn is_clique(pts: &[Point], witness: &[usize]) -> bool {
    let m = visibility_matrix(pts);
    witness
        .iter()
        .enumerate()
        .all(|(a, &i)| witness[a + 1..].iter().all(|&j| i != j && m[i - 1][j - 1]))
}

/// Largest collinear subset size: for each pair, count the points on its line.
pub fn collinear_oracle(pts: &[Point]) -> usize {
    let n = pts.len();
    let mut best = n.min(1);
    for i in 0..n {
        for j in i + 1..n {
            let on = (0..n).filter(|&k| collinear(&pts[i], &pts[j], &pts[k])).count();
            best = best.max(on);
        }
    }
    best
}

/// Least pair in (j, i) order whose line holds no third point.
pub fn ordinary_pair_oracle(pts: &[Point]) -> Option<(usize, usize)> {
    let n = pts.len();
    for j in 1..n {
        for i in 0..j {
            if !(0..n).any(|k| k != i && k != j && collinear(&pts[i], &pts[j], &pts[k])) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// A rational with small numerator and denominator, so that random sets are
/// rich in collinearities and coincident crossings.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let den = *[1i64, 1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap();
    Rational::new(rng.gen_range(-4i64..=4), den)
}

/// `n` distinct random points.
pub fn random_points(rng: &mut impl Rng, n: usize) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::new(small_rational(rng), small_rational(rng));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}
