//! Renders a generated prefix with each edge layer.
//!
//! `cargo run --example render_svg -- out_dir`

use std::fs;
use std::path::PathBuf;

use blbc::svg::{render, EdgeLayer};
use blbc::{generate, SeedTriple};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let state = generate(&SeedTriple::default(), 20).unwrap();
    for (layer, name) in [
        (EdgeLayer::None, "points"),
        (EdgeLayer::Collinear, "collinear"),
        (EdgeLayer::Visibility, "visibility"),
    ] {
        let path = dir.join(format!("prefix20-{name}.svg"));
        let svg = render(state.points(), layer);
        fs::write(&path, &svg).unwrap();
        println!("{} ({} segments)", path.display(), svg.matches("<line").count());
    }
}
