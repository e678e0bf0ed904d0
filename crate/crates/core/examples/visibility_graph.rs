//! Visibility graph, largest visible clique and largest collinear subset of
//! the 3x3 grid.

use blbc::visibility::{blocker, build_visibility_graph, max_collinear, max_visible_clique};
use blbc::{Point, PointSet};

fn main() {
    let grid = PointSet::new((0..3).flat_map(|x| (0..3).map(move |y| Point::int(x, y))).collect()).unwrap();
    let graph = build_visibility_graph(&grid);
    println!("{} points, {} visible pairs", graph.n(), graph.edge_count());
    for i in 1..=grid.len() {
        let seen: Vec<usize> = graph.neighbors(i).collect();
        println!("  {i} {} sees {seen:?}", grid[i]);
    }
    println!("corner 1 to corner 9 blocked by {:?}", blocker(&grid, 1, 9).unwrap());

    let clique = max_visible_clique(&grid, None).unwrap();
    println!("largest visible clique: {} points {:?}", clique.size, clique.witness);
    let line = max_collinear(&grid).unwrap();
    println!("largest collinear set: {} points {:?}", line.size, line.witness);
}
