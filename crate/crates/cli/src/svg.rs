//! Deterministic SVG rendering of the line family `a·x + b·y = d` for
//! `d = 1..=d_max`: every first-quadrant segment, a marker on each integer
//! solution, and a distinct dashed stroke for the lines that miss the
//! integer grid entirely (the gaps).
//!
//! Output is byte-stable for identical arguments: fixed element order,
//! fixed attribute order, and all coordinates printed with three decimals.

use std::fmt::Write as _;

use twocoin::diophantine::CoinPair;
use twocoin::geometry::{self, LatticeLine};
use twocoin::Result;

/// Maps mathematical coordinates into the pixel box with a uniform scale,
/// 10% margins, and the y axis pointing up.
struct Frame {
    scale: f64,
    offset_x: f64,
    offset_y: f64,
    x_min: f64,
    y_min: f64,
    height: f64,
}

impl Frame {
    fn fit(x_min: f64, x_max: f64, y_min: f64, y_max: f64, width: f64, height: f64) -> Frame {
        let margin_x = 0.10 * width;
        let margin_y = 0.10 * height;
        let scale = ((width - 2.0 * margin_x) / (x_max - x_min))
            .min((height - 2.0 * margin_y) / (y_max - y_min));
        Frame {
            scale,
            offset_x: (width - scale * (x_max - x_min)) / 2.0,
            offset_y: (height - scale * (y_max - y_min)) / 2.0,
            x_min,
            y_min,
            height,
        }
    }

    fn x(&self, x: f64) -> f64 {
        self.offset_x + (x - self.x_min) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        self.height - self.offset_y - (y - self.y_min) * self.scale
    }
}

pub fn render(pair: CoinPair, d_max: i64, width: u32, height: u32) -> Result<String> {
    let (a, b) = (pair.a(), pair.b());
    // fit the box that contains every segment plus one unit of axis context
    let x_max = d_max as f64 / a as f64 + 1.0;
    let y_max = d_max as f64 / b as f64 + 1.0;
    let frame = Frame::fit(-1.0, x_max, -1.0, y_max, width as f64, height as f64);

    let mut out = String::new();
    let mut markers = String::new();

    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "<title>{a}x + {b}y = d for d = 1..{d_max}</title>").unwrap();
    writeln!(
        out,
        "<style>\n\
         .axis {{ stroke: #888888; stroke-width: 1; }}\n\
         .line-hit {{ stroke: #1f6fb2; stroke-width: 1.2; fill: none; }}\n\
         .line-gap {{ stroke: #c22f2f; stroke-width: 1.2; stroke-dasharray: 5 4; fill: none; }}\n\
         .pt {{ fill: #114b2e; stroke: none; }}\n\
         </style>"
    )
    .unwrap();

    // axes
    writeln!(
        out,
        r#"<line class="axis" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
        frame.x(-1.0),
        frame.y(0.0),
        frame.x(x_max),
        frame.y(0.0)
    )
    .unwrap();
    writeln!(
        out,
        r#"<line class="axis" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
        frame.x(0.0),
        frame.y(-1.0),
        frame.x(0.0),
        frame.y(y_max)
    )
    .unwrap();

    for d in 1..=d_max {
        let line = LatticeLine::new(pair, d)?;
        let points = geometry::lattice_points_first_quadrant(&line)?;
        let (right, top) = geometry::segment_endpoints(&line);
        let class = if points.is_empty() { "line-gap" } else { "line-hit" };
        writeln!(
            out,
            r#"<line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            frame.x(right.0.to_f64()),
            frame.y(right.1.to_f64()),
            frame.x(top.0.to_f64()),
            frame.y(top.1.to_f64())
        )
        .unwrap();
        for (x, y) in points {
            writeln!(
                markers,
                r#"<circle class="pt" cx="{:.3}" cy="{:.3}" r="3"/>"#,
                frame.x(x as f64),
                frame.y(y as f64)
            )
            .unwrap();
        }
    }

    out.push_str(&markers);
    out.push_str("</svg>\n");
    Ok(out)
}
