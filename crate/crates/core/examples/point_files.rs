//! Writes a generated prefix and its trace as JSON, reads them back, and
//! shows the diagnostics for malformed coordinates.

use blbc::format::{Metadata, PointFile, TraceFile};
use blbc::{generate, SeedTriple};

fn main() {
    let state = generate(&SeedTriple::default(), 7).unwrap();
    let file = PointFile::new(state.points().points().to_vec()).with_metadata(Metadata {
        seed: Some("default".into()),
        generator: None,
        steps: Some(state.trace().len()),
    });
    let json = file.to_json();
    print!("{json}");
    assert_eq!(PointFile::parse(&json).unwrap().to_json(), json);

    let trace = TraceFile::new(state.trace().to_vec()).to_json();
    println!("trace is {} bytes, {} records", trace.len(), TraceFile::parse(&trace).unwrap().records.len());

    for bad in ["2/4", "1/-3", "1/0", "0.5"] {
        let text = format!(r#"{{"format_version": 1, "points": [{{"x": "0", "y": "{bad}"}}]}}"#);
        println!("{bad:>5}: {}", PointFile::parse(&text).unwrap_err());
    }
}
