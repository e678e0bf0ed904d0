//! Exact orientation, betweenness and line arithmetic on rational points.

use blbc::geometry::{intersect, line_through, on_open_segment, orientation, segment_crossing, segment_param_point};
use blbc::{Point, Rational};

fn main() {
    let a = Point::int(0, 0);
    let b = Point::int(3, 1);
    let third = Point::new(1, Rational::new(1, 3));
    let off = Point::new(1, Rational::new(333_333, 1_000_000));

    println!("orientation(a, b, {third}) = {:?}", orientation(&a, &b, &third));
    println!("orientation(a, b, {off}) = {:?}", orientation(&a, &b, &off));
    println!("{third} strictly inside ab: {}", on_open_segment(&third, &a, &b).unwrap());
    println!("{b} strictly inside ab: {}", on_open_segment(&b, &a, &b).unwrap());

    let ab = line_through(&a, &b).unwrap();
    let cd = line_through(&Point::int(0, 2), &Point::int(2, 0)).unwrap();
    println!("ab: {ab}");
    println!("cd: {cd}");
    let hit = intersect(&ab, &cd);
    println!("ab meets cd at {}", hit.point().unwrap());

    // where cd crosses the segment from a to b, as a parameter on ab
    let t = segment_crossing(&cd, &a.homogeneous(), &b.homogeneous()).unwrap();
    println!("crossing parameter t = {t}, point {}", segment_param_point(&a, &b, &t).unwrap());
}
