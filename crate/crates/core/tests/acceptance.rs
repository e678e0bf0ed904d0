//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs under `cargo test`; tolerances are the constants
//! below.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::sync::OnceLock;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use blbc::cli::{run, Cli};
use blbc::construction::{apply_record, exclusion_bound, OrdinaryPair};
use blbc::format::{Metadata, PointFile, TraceFile};
use blbc::geometry::segment_param_point;
use blbc::verifier::{verify_all, verify_ordinary_oracle_trace, PrefixVerifier};
use blbc::visibility::{build_visibility_graph, check_blbc_instance, max_collinear, max_visible_clique};
use blbc::{generate, BlbcOutcome, ConstructionState, Point, PointSet, Rational, SeedTriple};
use clap::Parser;
use common::*;
use rand::Rng;

const SUITE_N: usize = 300;
const SUITE_BUDGET: Duration = Duration::from_secs(120);
const ORACLE_STEPS_MAX_N: usize = 40;
const RANDOM_SETS: usize = 200;
const RANDOM_SET_MAX_N: usize = 10;
const BLOCKING_EDGES: usize = 100;
const ROUND_TRIPS: usize = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

static SUITE_STATE: OnceLock<ConstructionState> = OnceLock::new();

fn suite_state() -> &'static ConstructionState {
    SUITE_STATE.get_or_init(|| generate(&SeedTriple::default(), SUITE_N).expect("default seed generates"))
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn golden_prefix() -> Outcome {
    let six = generate(&SeedTriple::default(), 6).map_err(|e| e.to_string())?;
    let pts: Vec<String> = six.points().iter().map(|(_, p)| p.to_string()).collect();
    let expected = ["(0, 0)", "(1, 0)", "(0, 1)", "(1/2, 0)", "(0, 1/2)", "(1/2, 1/2)"];
    ensure!(pts == expected, "points {pts:?}");
    let pairs: Vec<(usize, usize)> = six.trace().iter().map(|r| (r.pair.i, r.pair.j)).collect();
    ensure!(pairs == [(1, 2), (1, 3), (2, 3)], "pairs {pairs:?}");
    let seven = generate(&SeedTriple::default(), 7).map_err(|e| e.to_string())?;
    let step4 = &seven.trace()[3];
    ensure!(step4.pair == OrdinaryPair::new(3, 4), "n = 7 took {}", step4.pair);

    let points_json = PointFile::new(six.points().points().to_vec()).to_json();
    let trace_json = TraceFile::new(six.trace().to_vec()).to_json();
    ensure!(points_json == include_str!("golden/p6.json"), "point file differs from golden bytes");
    ensure!(trace_json == include_str!("golden/trace6.json"), "trace file differs from golden bytes");
    let again = generate(&SeedTriple::default(), 6).map_err(|e| e.to_string())?;
    ensure!(
        PointFile::new(again.points().points().to_vec()).to_json() == points_json,
        "second run differs"
    );
    Ok(format!("6 points and 3 pairs match, n=7 takes (3, 4) with t = {}", step4.t))
}

fn surrogate_suite() -> Outcome {
    let start = Instant::now();
    let state = suite_state();
    let generated = start.elapsed();
    let ps = state.points();
    let trace = state.trace();

    let mut verifier = PrefixVerifier::new();
    let mut pending = BTreeSet::new();
    let mut checked = 0;
    for (idx, p) in ps.iter() {
        let record = (idx >= 4).then(|| &trace[idx - 4]);
        verifier.push(p, record).map_err(|e| e.to_string())?;
        if let Some(r) = record {
            apply_record(&mut pending, r);
        } else if idx == 3 {
            pending = [(1, 2), (1, 3), (2, 3)].map(|(i, j)| OrdinaryPair::new(i, j)).into();
        }
        if idx >= 3 {
            for report in verifier.reports(&pending) {
                ensure!(report.passed, "prefix {idx}: {} failed: {:?}", report.check, report.counterexample);
            }
            checked += 1;
        }
    }
    ensure!(&pending == state.pending(), "replayed pending differs from the construction's");

    // the full set once more through the standalone checks
    for report in verify_all(ps, trace, &pending).map_err(|e| e.to_string())? {
        ensure!(report.passed, "standalone {} failed at n = {SUITE_N}", report.check);
    }
    let total = start.elapsed();
    ensure!(total < SUITE_BUDGET, "took {total:.1?}, budget {SUITE_BUDGET:?}");
    Ok(format!(
        "{checked} prefixes x 5 checks pass; generation {generated:.1?}, total {total:.1?} (budget {SUITE_BUDGET:?})"
    ))
}

fn exclusion_bound_check() -> Outcome {
    let trace = suite_state().trace();
    ensure!(trace[0].n == 4 && trace[0].excluded_count == 0, "n = 4 excluded {}", trace[0].excluded_count);
    let mut at_bound = 0;
    let mut max_count = 0;
    for r in trace {
        let bound = exclusion_bound(r.n);
        ensure!(r.excluded_count <= bound, "n = {}: {} > {bound}", r.n, r.excluded_count);
        at_bound += usize::from(r.excluded_count == bound);
        max_count = max_count.max(r.excluded_count);
    }
    Ok(format!(
        "{} records within C(n-3,2); {at_bound} at equality, largest count {max_count}, n=4 has 0",
        trace.len()
    ))
}

fn ordinary_oracle() -> Outcome {
    let state = generate(&SeedTriple::default(), ORACLE_STEPS_MAX_N).map_err(|e| e.to_string())?;
    let pts = state.points().points();
    for r in state.trace() {
        let oracle = ordinary_pair_oracle(&pts[..r.n - 1]);
        ensure!(oracle == Some((r.pair.i, r.pair.j)), "n = {}: selected {}, oracle {oracle:?}", r.n, r.pair);
    }
    let report = verify_ordinary_oracle_trace(state.trace(), state.points()).map_err(|e| e.to_string())?;
    ensure!(report.passed, "library oracle disagrees: {:?}", report.counterexample);
    Ok(format!("{} steps agree with both exhaustive scans", state.trace().len()))
}

fn analyzer_oracles() -> Outcome {
    let mut r = rng(0x5eed_0005);
    let mut disagreements = Vec::new();
    for case in 0..RANDOM_SETS {
        let n = r.gen_range(2..=RANDOM_SET_MAX_N);
        let pts = random_points(&mut r, n);
        let ps = PointSet::new(pts.clone()).map_err(|e| e.to_string())?;
        let clique = max_visible_clique(&ps, None).map_err(|e| e.to_string())?;
        let line = max_collinear(&ps).map_err(|e| e.to_string())?;
        if clique.size != clique_oracle(&pts) || !is_clique(&pts, &clique.witness) {
            disagreements.push(format!("case {case}: clique"));
        }
        if line.size != collinear_oracle(&pts) {
            disagreements.push(format!("case {case}: collinear"));
        }
    }
    ensure!(disagreements.is_empty(), "{} disagreements: {:?}", disagreements.len(), disagreements);
    Ok(format!("{RANDOM_SETS} sets with n <= {RANDOM_SET_MAX_N}, 0 disagreements"))
}

fn blocking_monotonicity() -> Outcome {
    let state = generate(&SeedTriple::default(), 60).map_err(|e| e.to_string())?;
    let all = state.points();
    let mut r = rng(0x5eed_0006);
    let mut retries = 0;
    for case in 0..BLOCKING_EDGES {
        let m = r.gen_range(3..=all.len());
        let ps = all.prefix(m);
        let graph = build_visibility_graph(&ps);
        let &(i, j) = &graph.edges()[r.gen_range(0..graph.edge_count())];
        let pts = ps.points();
        // a fresh point on the open segment that lies on no other segment
        let point = loop {
            let den = r.gen_range(2i64..40);
            let t = Rational::new(r.gen_range(1..den), den);
            let p = segment_param_point(&pts[i - 1], &pts[j - 1], &t).map_err(|e| e.to_string())?;
            let elsewhere = graph
                .edges()
                .iter()
                .any(|&(a, b)| (a, b) != (i, j) && strictly_between(&p, &pts[a - 1], &pts[b - 1]));
            if !pts.contains(&p) && !elsewhere {
                break p;
            }
            retries += 1;
        };
        let mut grown: Vec<Point> = pts.to_vec();
        grown.push(point);
        let bigger = PointSet::new(grown.clone()).map_err(|e| e.to_string())?;
        let after = build_visibility_graph(&bigger);
        ensure!(!after.has_edge(i, j), "case {case}: ({i}, {j}) still visible");
        let lost: Vec<(usize, usize)> =
            graph.edges().iter().copied().filter(|&(a, b)| !after.has_edge(a, b)).collect();
        ensure!(lost == [(i, j)], "case {case}: lost {lost:?}");
        let new = m + 1;
        for k in 1..=m {
            let seen = !(1..=m).any(|b| b != k && strictly_between(&grown[b - 1], &grown[k - 1], &grown[m]));
            ensure!(
                after.has_edge(k, new) == seen,
                "case {case}: edge ({k}, {new}) disagrees with brute force"
            );
        }
    }
    Ok(format!("{BLOCKING_EDGES} edges each lost exactly themselves ({retries} placements redrawn)"))
}

fn blbc_sanity() -> Outcome {
    let tri = set(&[(0, 0), (1, 0), (0, 1)]);
    let v = check_blbc_instance(&tri, 3, 3).map_err(|e| e.to_string())?;
    ensure!(v.outcome == BlbcOutcome::CliqueFound, "triangle gave {:?}", v.outcome);
    let mut r = rng(0x5eed_0007);
    for _ in 0..20 {
        let a = Point::new(small_rational(&mut r), small_rational(&mut r));
        let d = Point::new(small_rational(&mut r), small_rational(&mut r));
        if d.x.is_zero() && d.y.is_zero() {
            continue;
        }
        let line = PointSet::new((0..3).map(|k| a.translate(&(&d.x * Rational::from(k)), &(&d.y * Rational::from(k)))).collect())
            .map_err(|e| e.to_string())?;
        let v = check_blbc_instance(&line, 3, 3).map_err(|e| e.to_string())?;
        ensure!(v.outcome == BlbcOutcome::CollinearFound, "collinear triple gave {:?}", v.outcome);
    }
    let grid = grid3();
    let pts = grid.points().to_vec();
    let expected = match (collinear_oracle(&pts) >= 4, clique_oracle(&pts) >= 4) {
        (true, true) => BlbcOutcome::BothFound,
        (true, false) => BlbcOutcome::CollinearFound,
        (false, true) => BlbcOutcome::CliqueFound,
        (false, false) => BlbcOutcome::NeitherFound,
    };
    let v = check_blbc_instance(&grid, 4, 4).map_err(|e| e.to_string())?;
    ensure!(v.outcome == expected, "grid gave {:?}, oracles say {expected:?}", v.outcome);
    Ok(format!("triangle CliqueFound, collinear triples CollinearFound, 3x3 grid {expected:?}"))
}

fn random_file(r: &mut impl Rng) -> PointFile {
    let n = r.gen_range(0..20);
    let mut pts = Vec::with_capacity(n);
    for _ in 0..n {
        let coord = |r: &mut dyn rand::RngCore| {
            let num: i64 = r.gen_range(-1_000_000_000_000i64..=1_000_000_000_000);
            let den: i64 = r.gen_range(1..=1_000_000_000);
            let big = Rational::new(num, den) * Rational::new(r.gen_range(-5i64..=5), r.gen_range(1i64..=7));
            if r.gen_bool(0.3) {
                big * Rational::new(num, den)
            } else {
                big
            }
        };
        pts.push(Point::new(coord(r), coord(r)));
    }
    let file = PointFile::new(pts);
    if r.gen_bool(0.5) {
        file.with_metadata(Metadata {
            seed: r.gen_bool(0.5).then(|| format!("seed \"{}\" \u{e9}\n", r.gen::<u32>())),
            generator: None,
            steps: r.gen_bool(0.5).then(|| r.gen_range(0..1000)),
        })
    } else {
        file
    }
}

fn format_round_trip() -> Outcome {
    let mut r = rng(0x5eed_0008);
    for case in 0..ROUND_TRIPS {
        let file = random_file(&mut r);
        let bytes = file.to_json();
        let parsed = PointFile::parse(&bytes).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(parsed == file, "case {case}: parse changed the value");
        ensure!(parsed.to_json() == bytes, "case {case}: bytes changed");
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("bad.json");
    let mut diagnostics = Vec::new();
    for bad in ["2/4", "1/-3", "1/0"] {
        let text = format!(r#"{{"format_version": 1, "points": [{{"x": "0", "y": "0"}}, {{"x": "{bad}", "y": "1"}}]}}"#);
        fs::write(&path, text).map_err(|e| e.to_string())?;
        let cli = Cli::try_parse_from(["blbc", "verify", path.to_str().unwrap()]).map_err(|e| e.to_string())?;
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        let err = String::from_utf8_lossy(&err).into_owned();
        ensure!(code == 2, "{bad}: exit {code}");
        ensure!(err.contains("points[1].x"), "{bad}: diagnostic {err:?}");
        diagnostics.push(err.trim().rsplit(": ").next().unwrap_or_default().to_string());
    }
    Ok(format!("{ROUND_TRIPS} files byte-identical; malformed inputs exit 2 at points[1].x ({})", diagnostics.join("; ")))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden prefix", golden_prefix),
        ("prefix property suite", surrogate_suite),
        ("exclusion bound", exclusion_bound_check),
        ("ordinary-line cross-validation", ordinary_oracle),
        ("analyzer oracle equivalence", analyzer_oracles),
        ("blocking monotonicity", blocking_monotonicity),
        ("conjecture-instance sanity", blbc_sanity),
        ("format round-trip", format_round_trip),
    ];
    let mut failed = 0;
    for (number, (name, criterion)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = started.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{elapsed:.2?}] {detail}", number + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{elapsed:.2?}] {detail}", number + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
