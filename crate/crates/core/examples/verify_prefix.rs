//! Checks every prefix of a generated sequence incrementally, then the whole
//! sequence once more with the standalone checks.

use std::collections::BTreeSet;
use std::time::Instant;

use blbc::construction::{apply_record, OrdinaryPair};
use blbc::verifier::{verify_all, verify_ordinary_oracle_trace, PrefixVerifier};
use blbc::{generate, SeedTriple};

fn main() {
    let count: usize = std::env::args().nth(1).map_or(150, |s| s.parse().expect("a point count"));
    let start = Instant::now();
    let state = generate(&SeedTriple::default(), count).unwrap();
    println!("generated {count} points in {:.2?}", start.elapsed());

    let mut verifier = PrefixVerifier::new();
    let mut pending = BTreeSet::new();
    let mut failures = 0;
    for (n, p) in state.points().iter() {
        let record = (n >= 4).then(|| &state.trace()[n - 4]);
        verifier.push(p, record).unwrap();
        match record {
            Some(r) => apply_record(&mut pending, r),
            None if n == 3 => pending = [(1, 2), (1, 3), (2, 3)].map(|(i, j)| OrdinaryPair::new(i, j)).into(),
            None => {}
        }
        if n >= 3 {
            failures += verifier.reports(&pending).iter().filter(|r| !r.passed).count();
        }
    }
    println!("prefixes 3..={count}: {failures} failed checks ({:.2?})", start.elapsed());

    for report in verify_all(state.points(), state.trace(), state.pending()).unwrap() {
        println!("  {:<20} {}  {:?}", report.check, if report.passed { "pass" } else { "FAIL" }, report.stats);
    }
    let oracle = verify_ordinary_oracle_trace(state.trace(), state.points()).unwrap();
    println!("  {:<20} {}", oracle.check, if oracle.passed { "pass" } else { "FAIL" });
}
