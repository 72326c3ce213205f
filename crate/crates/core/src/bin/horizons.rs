//! `horizons`: emit figures of the eternal observer's event horizon in de Sitter space.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use desitter::causal::{past_horizon, throat_intersection};
use desitter::desitter::{canonical_worldline, on_hyperboloid, SpacetimeContext};
use desitter::figure::{
    build_scene, emit_csv, emit_svg, FigureKind, FigureScene, Projection, SceneOptions,
};
use desitter::sampling::sample_event;
use desitter::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Csv,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "horizons",
    version,
    about = "Observer event-horizon figures for de Sitter space-time"
)]
struct Args {
    /// fig2 (0 <= t <= t_max), fig3 (0 <= t <= infinity, compactified) or cones
    figure: String,

    /// de Sitter radius R
    #[arg(long, default_value_t = 1.0)]
    radius: f64,

    /// upper time bound for fig2 and cones
    #[arg(long = "t-max", default_value_t = 2.0)]
    t_max: f64,

    /// segments per sampled curve (at least 8)
    #[arg(long, default_value_t = 64)]
    resolution: usize,

    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,

    /// output path; with --format both the extension is replaced by .svg and .csv
    #[arg(long)]
    out: PathBuf,

    /// rapidities of the cones drawn by the `cones` figure
    #[arg(long = "psi-list", value_delimiter = ',', allow_hyphen_values = true)]
    psi_list: Vec<f64>,

    /// seed of the post-build spot check
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// projection coefficients: u = x2 - ux1*x1, v = t - vx1*x1
    #[arg(long, value_delimiter = ',', num_args = 1, value_name = "UX1,VX1")]
    proj: Option<Vec<f64>>,

    /// label the points where the past horizon meets the throat
    #[arg(long = "annotate-throat")]
    annotate_throat: bool,

    /// also draw t < 0 (down to -t_max) and the future horizon
    #[arg(long = "full-time")]
    full_time: bool,

    /// spatial dimension n; figures exist only for n = 2
    #[arg(long, default_value_t = 2)]
    dim: usize,
}

fn run(args: &Args) -> Result<(), Error> {
    let figure: FigureKind = args.figure.parse()?;
    let ctx = SpacetimeContext::new(args.radius, args.dim)?;
    let mut opts = SceneOptions::new(figure, args.t_max, args.resolution);
    opts.psi_list = args.psi_list.clone();
    opts.annotate_throat = args.annotate_throat;
    opts.full_time = args.full_time;
    if let Some(p) = &args.proj {
        if p.len() != 2 {
            return Err(Error::InvalidArgument(format!(
                "--proj expects two values ux1,vx1, got {}",
                p.len()
            )));
        }
        opts.projection = Projection {
            u_x1: p[0],
            v_x1: p[1],
            ..Projection::default()
        };
    }

    let mut scene = build_scene(&ctx, &opts)?;
    scene.notes.push(format!("seed {}", args.seed));
    spot_check(&scene, args.seed)?;

    let write_one = |path: &Path, fmt: Format| -> Result<(), Error> {
        match fmt {
            Format::Svg => emit_svg(&scene, path)?,
            Format::Csv => emit_csv(&scene, path)?,
            Format::Both => unreachable!(),
        }
        eprintln!("wrote {}", path.display());
        Ok(())
    };
    match args.format {
        Format::Both => {
            write_one(&args.out.with_extension("svg"), Format::Svg)?;
            write_one(&args.out.with_extension("csv"), Format::Csv)?;
        }
        fmt => write_one(&args.out, fmt)?,
    }
    Ok(())
}

/// Confirms the emitted vertices are on S(R), the markers are at distance
/// πR/2 from the observer, and a seeded sample of events splits cleanly
/// across the past horizon.
fn spot_check(scene: &FigureScene, seed: u64) -> Result<(), Error> {
    let ctx = scene.context();
    for e in scene.polylines.iter().flat_map(|p| &p.points) {
        if !on_hyperboloid(e.point(), ctx)? {
            return Err(Error::OffHyperboloid {
                residual: ctx.form_residual(e.point()),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = throat_intersection(&canonical_worldline(ctx), 64, &mut rng)?;
    let horizon = past_horizon(ctx);
    let mut split = [0usize; 3];
    for _ in 0..1000 {
        let e = sample_event(&mut rng, ctx, 2.0 * ctx.radius());
        let v = horizon.residual(&e)?;
        split[if v > 0.0 {
            0
        } else if v < 0.0 {
            2
        } else {
            1
        }] += 1;
    }
    eprintln!(
        "throat intersection: {} points at distance pi*R/2 (max error {:.1e}); \
         1000 seeded events: {} seen by the observer, {} on the horizon, {} beyond it",
        scene.markers.len(),
        report.max_error,
        split[0],
        split[1],
        split[2]
    );
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Io(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
