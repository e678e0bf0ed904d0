//! Grows the sequence from the default seed and prints each insertion.
//!
//! `cargo run --example generate_prefix -- 25`

use blbc::construction::exclusion_bound;
use blbc::{generate, SeedTriple};

fn main() {
    let count: usize = std::env::args().nth(1).map_or(15, |s| s.parse().expect("a point count"));
    let state = generate(&SeedTriple::default(), count).unwrap();
    for (i, p) in state.points().iter().take(3) {
        println!("x{i} = {p}  (seed)");
    }
    for r in state.trace() {
        println!(
            "x{} = {}  on pair {} at t = {}, {} of at most {} parameters excluded",
            r.n,
            r.point,
            r.pair,
            r.t,
            r.excluded_count,
            exclusion_bound(r.n)
        );
    }
    println!("{} ordinary pairs waiting", state.pending().len());
}
