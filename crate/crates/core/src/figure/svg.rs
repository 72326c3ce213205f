use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{FigureScene, THROAT_MARKER_LABEL};
use crate::error::Result;

const STYLE: &str = "\
.hyperboloid-meridian, .hyperboloid-parallel { fill: none; stroke: #9aa5b1; stroke-width: 0.6; }
.throat-circle { fill: none; stroke: #3e4c59; stroke-width: 1.2; }
.worldline { fill: none; stroke: #1f6feb; stroke-width: 2; }
.horizon-past { fill: none; stroke: #d1242f; stroke-width: 2; }
.horizon-future { fill: none; stroke: #bf8700; stroke-width: 2; stroke-dasharray: 6 3; }
.cone-psi { fill: none; stroke: #8250df; stroke-width: 1; }
.throat-intersection { fill: #d1242f; stroke: none; }
.annotation { font: 12px sans-serif; fill: #d1242f; }";

/// Screen coordinates: `(u, −v)` scaled by the projection's pixel size.
fn screen(scene: &FigureScene, e: &crate::desitter::Event) -> (f64, f64) {
    let (u, v) = scene.projection.project(e);
    let k = scene.projection.pixels_per_unit;
    (u * k, -v * k)
}

fn fmt_num(x: f64) -> String {
    // Avoid "-0.000" so output is stable under sign-of-zero noise.
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Writes an SVG 1.1 document with one `<path>` per polyline and one
/// `<circle>` per throat marker; output is a pure function of the scene.
pub fn write_svg<W: Write>(scene: &FigureScene, mut out: W) -> Result<()> {
    let pts = scene
        .polylines
        .iter()
        .flat_map(|p| p.points.iter())
        .chain(scene.markers.iter().map(|m| &m.event))
        .map(|e| screen(scene, e));
    let (mut x0, mut y0, mut x1, mut y1) = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for (x, y) in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if !x0.is_finite() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let (w, h) = ((x1 - x0).max(1.0), (y1 - y0).max(1.0));
    let (mx, my) = (0.05 * w, 0.05 * h);
    let (vx, vy, vw, vh) = (x0 - mx, y0 - my, w + 2.0 * mx, h + 2.0 * my);

    let mut doc = String::new();
    doc.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        fmt_num(vx),
        fmt_num(vy),
        fmt_num(vw),
        fmt_num(vh),
        fmt_num(vw),
        fmt_num(vh)
    );
    if !scene.notes.is_empty() {
        doc.push_str("<desc>\n");
        for note in &scene.notes {
            let _ = writeln!(doc, "{}", escape(note));
        }
        doc.push_str("</desc>\n");
    }
    let _ = writeln!(doc, "<style>\n{STYLE}\n</style>");

    for p in &scene.polylines {
        let mut d = String::new();
        for (i, e) in p.points.iter().enumerate() {
            let (x, y) = screen(scene, e);
            let _ = write!(
                d,
                "{}{},{}",
                if i == 0 { "M" } else { " L" },
                fmt_num(x),
                fmt_num(y)
            );
        }
        if p.closed {
            d.push_str(" Z");
        }
        let _ = writeln!(doc, "<path class=\"{}\" d=\"{}\"/>", p.label.as_str(), d);
    }

    let r_marker = 0.01 * w.max(h);
    for m in &scene.markers {
        let (x, y) = screen(scene, &m.event);
        let _ = writeln!(
            doc,
            "<circle class=\"{THROAT_MARKER_LABEL}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            fmt_num(x),
            fmt_num(y),
            fmt_num(r_marker)
        );
        if scene.annotate_throat {
            let c = m.event.coords();
            let _ = writeln!(
                doc,
                "<text class=\"annotation\" x=\"{}\" y=\"{}\">horizon meets throat at ({}, {}, {}), distance \u{3c0}R/2 from the observer</text>",
                fmt_num(x + 2.0 * r_marker),
                fmt_num(y - 2.0 * r_marker),
                fmt_num(c[0]),
                fmt_num(c[1]),
                fmt_num(c[2])
            );
        }
    }
    doc.push_str("</svg>\n");
    out.write_all(doc.as_bytes())?;
    Ok(())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn emit_svg(scene: &FigureScene, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_svg(scene, &mut w)?;
    w.flush()?;
    Ok(())
}
