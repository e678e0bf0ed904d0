//! Static SVG figures of point sets.
//!
//! Coordinates are printed with 12 significant digits (round half to even)
//! and the y axis points up. The rendering is lossy and never read back.

use std::fmt::Write;

use crate::incidence::LineIncidenceMap;
use crate::pointset::PointSet;
use crate::rational::Rational;
use crate::visibility::visibility_from_incidence;

const DIGITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum EdgeLayer {
    /// Every visible pair.
    Visibility,
    /// One segment per line holding at least three points.
    Collinear,
    #[default]
    None,
}

fn dec(r: &Rational) -> String {
    r.to_decimal(DIGITS)
}

struct Frame {
    min_x: Rational,
    max_y: Rational,
    width: Rational,
    height: Rational,
    unit: Rational,
}

impl Frame {
    fn new(ps: &PointSet) -> Frame {
        let xs = ps.points().iter().map(|p| &p.x);
        let ys = ps.points().iter().map(|p| &p.y);
        let (min_x, max_x) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (min_y, max_y) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let mut dx = max_x - min_x;
        let mut dy = max_y - min_y;
        if dx.is_zero() && dy.is_zero() {
            dx = Rational::one();
            dy = Rational::one();
        } else if dx.is_zero() {
            dx = dy.clone();
        } else if dy.is_zero() {
            dy = dx.clone();
        }
        let margin_x = &dx / Rational::from(20);
        let margin_y = &dy / Rational::from(20);
        let unit = std::cmp::max(&dx, &dy) / Rational::from(100);
        Frame {
            min_x: min_x - &margin_x,
            max_y: max_y + &margin_y,
            width: &dx + &margin_x * Rational::from(2),
            height: &dy + &margin_y * Rational::from(2),
            unit,
        }
    }
}

/// Renders `ps` with its points labeled by 1-based index.
pub fn render(ps: &PointSet, edges: EdgeLayer) -> String {
    assert!(!ps.is_empty(), "nothing to render");
    let frame = Frame::new(ps);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        dec(&frame.min_x),
        dec(&-&frame.max_y),
        dec(&frame.width),
        dec(&frame.height)
    )
    .unwrap();

    let segments: Vec<(usize, usize)> = match edges {
        EdgeLayer::None => Vec::new(),
        EdgeLayer::Visibility => {
            let map = LineIncidenceMap::build(ps);
            visibility_from_incidence(&map).edges().to_vec()
        }
        EdgeLayer::Collinear => {
            let map = LineIncidenceMap::build(ps);
            let mut segs: Vec<(usize, usize)> = (0..map.line_count())
                .filter(|&id| map.entry(id).len() >= 3)
                .map(|id| {
                    let order = map.ordered_along(id);
                    (order[0], order[order.len() - 1])
                })
                .collect();
            segs.sort_unstable();
            segs
        }
    };
    if edges != EdgeLayer::None {
        writeln!(
            out,
            "  <g id=\"{}\" stroke=\"#7a7a7a\" stroke-width=\"{}\" fill=\"none\">",
            match edges {
                EdgeLayer::Visibility => "visibility",
                _ => "collinear",
            },
            dec(&(&frame.unit / Rational::from(4)))
        )
        .unwrap();
        for (a, b) in segments {
            let (p, q) = (&ps[a], &ps[b]);
            writeln!(
                out,
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                dec(&p.x),
                dec(&-&p.y),
                dec(&q.x),
                dec(&-&q.y)
            )
            .unwrap();
        }
        out.push_str("  </g>\n");
    }

    out.push_str("  <g id=\"points\" fill=\"#1f4e99\">\n");
    let radius = dec(&frame.unit);
    for (_, p) in ps.iter() {
        writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{radius}\"/>",
            dec(&p.x),
            dec(&-&p.y)
        )
        .unwrap();
    }
    out.push_str("  </g>\n");

    writeln!(
        out,
        "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"{}\" fill=\"#222222\">",
        dec(&(&frame.unit * Rational::from(3)))
    )
    .unwrap();
    for (i, p) in ps.iter() {
        writeln!(
            out,
            "    <text x=\"{}\" y=\"{}\">{i}</text>",
            dec(&(&p.x + &frame.unit * Rational::from(2))),
            dec(&(-&p.y - &frame.unit))
        )
        .unwrap();
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
