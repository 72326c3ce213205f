use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{FigureScene, THROAT_MARKER_LABEL};
use crate::error::Result;

pub const CSV_HEADER: &str = "label,polyline,vertex,x1,x2,t,u,v";

/// Writes one row per polyline vertex, then one row per throat marker
/// (`polyline` is the marker index, `vertex` is 0).
///
/// Compactified scenes are preceded by `#` comment lines describing the map.
pub fn write_csv<W: Write>(scene: &FigureScene, mut out: W) -> Result<()> {
    if scene.compactified {
        for note in &scene.notes {
            writeln!(out, "# {note}")?;
        }
    }
    writeln!(out, "{CSV_HEADER}")?;
    let proj = &scene.projection;
    let mut row = |label: &str,
                   poly: usize,
                   vertex: usize,
                   e: &crate::desitter::Event|
     -> std::io::Result<()> {
        let c = e.coords();
        let (u, v) = proj.project(e);
        writeln!(
            out,
            "{label},{poly},{vertex},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            c[0], c[1], c[2], u, v
        )
    };
    for (i, p) in scene.polylines.iter().enumerate() {
        for (j, e) in p.points.iter().enumerate() {
            row(p.label.as_str(), i, j, e)?;
        }
    }
    for (i, m) in scene.markers.iter().enumerate() {
        row(THROAT_MARKER_LABEL, i, 0, &m.event)?;
    }
    Ok(())
}

pub fn emit_csv(scene: &FigureScene, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_csv(scene, &mut w)?;
    w.flush()?;
    Ok(())
}
