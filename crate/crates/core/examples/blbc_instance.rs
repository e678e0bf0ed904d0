//! Asks, for a few point sets and (k, l), whether there are l collinear or
//! k pairwise visible points.

use blbc::visibility::check_blbc_instance;
use blbc::{generate, Point, PointSet, SeedTriple};

fn ints(pts: &[(i64, i64)]) -> PointSet {
    PointSet::new(pts.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap()
}

fn main() {
    let grid = PointSet::new((0..4).flat_map(|x| (0..4).map(move |y| Point::int(x, y))).collect()).unwrap();
    let prefix = generate(&SeedTriple::default(), 40).unwrap();
    let cases = [
        ("triangle", ints(&[(0, 0), (1, 0), (0, 1)]), 3, 3),
        ("collinear triple", ints(&[(0, 0), (1, 1), (2, 2)]), 3, 3),
        ("4x4 grid", grid.clone(), 5, 4),
        ("4x4 grid", grid, 6, 5),
        ("generated prefix of 40", prefix.points().clone(), 4, 4),
    ];
    for (name, ps, k, l) in cases {
        let v = check_blbc_instance(&ps, k, l).unwrap();
        println!(
            "{name:<24} k={k} l={l}: {:?}  collinear {:?}  clique {:?}",
            v.outcome, v.collinear_witness, v.clique_witness
        );
    }
}
