//! Sampled figures of the observer's horizon on the hyperboloid in `Mink³`.
//!
//! A [`FigureScene`] is a list of labelled polylines on `S(R)` plus the
//! throat markers, together with the cabinet projection used for drawing.
//! [`emit_csv`] and [`emit_svg`] write it out.

mod csv;
mod svg;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::causal::throat_intersection;
use crate::desitter::{canonical_worldline, null_ray, on_hyperboloid, Event, SpacetimeContext};
use crate::error::{Error, Result};
use crate::minkowski::{boost, Vector};

pub use self::csv::{emit_csv, write_csv, CSV_HEADER};
pub use self::svg::{emit_svg, write_svg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FigureKind {
    /// Bounded time `0 ≤ t ≤ t_max`.
    Fig2,
    /// Compactified time `0 ≤ t ≤ ∞`.
    Fig3,
    /// Bounded time with the cones of `L(ψ)` overlaid.
    Cones,
}

impl FromStr for FigureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig2" => Ok(FigureKind::Fig2),
            "fig3" => Ok(FigureKind::Fig3),
            "cones" => Ok(FigureKind::Cones),
            other => Err(Error::InvalidArgument(format!(
                "unknown figure {other:?} (expected fig2, fig3 or cones)"
            ))),
        }
    }
}

impl fmt::Display for FigureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigureKind::Fig2 => "fig2",
            FigureKind::Fig3 => "fig3",
            FigureKind::Cones => "cones",
        })
    }
}

/// Element vocabulary; the string form is the SVG class and CSV label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementLabel {
    HyperboloidMeridian,
    HyperboloidParallel,
    Worldline,
    HorizonPast,
    HorizonFuture,
    ThroatCircle,
    ConePsi,
}

impl ElementLabel {
    pub const ALL: [ElementLabel; 7] = [
        ElementLabel::HyperboloidMeridian,
        ElementLabel::HyperboloidParallel,
        ElementLabel::Worldline,
        ElementLabel::HorizonPast,
        ElementLabel::HorizonFuture,
        ElementLabel::ThroatCircle,
        ElementLabel::ConePsi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ElementLabel::HyperboloidMeridian => "hyperboloid-meridian",
            ElementLabel::HyperboloidParallel => "hyperboloid-parallel",
            ElementLabel::Worldline => "worldline",
            ElementLabel::HorizonPast => "horizon-past",
            ElementLabel::HorizonFuture => "horizon-future",
            ElementLabel::ThroatCircle => "throat-circle",
            ElementLabel::ConePsi => "cone-psi",
        }
    }
}

impl FromStr for ElementLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ElementLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown element label {s:?}")))
    }
}

/// Label of the marker rows and circles for `Γ⁻(L) ∩ S(R, 0)`.
pub const THROAT_MARKER_LABEL: &str = "throat-intersection";

#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    pub label: ElementLabel,
    pub points: Vec<Event>,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Marker {
    pub event: Event,
}

/// Cabinet projection `u = x_2 − u_x1·x_1`, `v = t − v_x1·x_1`, drawn at
/// `pixels_per_unit`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Projection {
    pub u_x1: f64,
    pub v_x1: f64,
    pub pixels_per_unit: f64,
}

impl Default for Projection {
    fn default() -> Self {
        Projection {
            u_x1: 0.35,
            v_x1: 0.20,
            pixels_per_unit: 100.0,
        }
    }
}

impl Projection {
    pub fn project(&self, e: &Event) -> (f64, f64) {
        let c = e.coords();
        (c[1] - self.u_x1 * c[0], c[2] - self.v_x1 * c[0])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureScene {
    pub polylines: Vec<Polyline>,
    pub markers: Vec<Marker>,
    pub projection: Projection,
    pub compactified: bool,
    pub t_max: f64,
    /// Free-form lines written into the output file headers.
    pub notes: Vec<String>,
    pub annotate_throat: bool,
    ctx: SpacetimeContext,
}

impl FigureScene {
    /// An empty scene; `t_max` must be finite and positive unless compactified.
    pub fn new(
        ctx: SpacetimeContext,
        projection: Projection,
        compactified: bool,
        t_max: f64,
    ) -> Result<Self> {
        if !compactified && !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "t_max must be finite and positive, got {t_max}"
            )));
        }
        Ok(FigureScene {
            polylines: Vec::new(),
            markers: Vec::new(),
            projection,
            compactified,
            t_max,
            notes: Vec::new(),
            annotate_throat: false,
            ctx,
        })
    }

    pub fn context(&self) -> &SpacetimeContext {
        &self.ctx
    }

    pub fn vertex_count(&self) -> usize {
        self.polylines.iter().map(|p| p.points.len()).sum()
    }

    pub fn count(&self, label: ElementLabel) -> usize {
        self.polylines.iter().filter(|p| p.label == label).count()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SceneOptions {
    pub figure: FigureKind,
    pub t_max: f64,
    pub resolution: usize,
    /// Rapidities of the cones drawn by [`FigureKind::Cones`].
    pub psi_list: Vec<f64>,
    pub projection: Projection,
    /// Extend every element to negative time (`−t_max ≤ t`, or `−∞` for fig3)
    /// and draw the future horizon.
    pub full_time: bool,
    pub annotate_throat: bool,
}

impl SceneOptions {
    pub fn new(figure: FigureKind, t_max: f64, resolution: usize) -> Self {
        SceneOptions {
            figure,
            t_max,
            resolution,
            psi_list: Vec::new(),
            projection: Projection::default(),
            full_time: false,
            annotate_throat: false,
        }
    }
}

pub const MERIDIANS: usize = 12;
pub const DEFAULT_CONE_PSIS: [f64; 3] = [0.0, 0.5, 1.0];

/// `(x, t) ↦ (√(R² + τ²)·x/|x|, τ)` with `τ = (2R/π) arctan(t/R)`.
///
/// Keeps the spatial direction and shrinks the scale so the image stays on
/// `S(R)` while `t = ±∞` lands on the slices `τ = ±R`.
pub fn compactify(e: &Event) -> Event {
    let r = e.context().radius();
    let tau = 2.0 * r / PI * (e.time() / r).atan();
    at_compact_time(e, tau)
}

fn at_compact_time(e: &Event, tau: f64) -> Event {
    let r = e.context().radius();
    let xs = e.point().spatial();
    let norm = xs.iter().map(|a| a * a).sum::<f64>().sqrt();
    let rho = r.hypot(tau);
    let mut c: Vec<f64> = xs.iter().map(|a| a / norm * rho).collect();
    c.push(tau);
    Event::new(Vector::new(c).expect("n >= 2"), *e.context())
        .expect("compactified point stays on S(R)")
}

/// Polylines over a time interval, either literal or compactified.
struct Sampler<'a> {
    ctx: &'a SpacetimeContext,
    compactified: bool,
    t_lo: f64,
    t_hi: f64,
    segments: usize,
}

impl Sampler<'_> {
    /// Samples `element(t)` over the interval; in compact mode the samples
    /// are uniform in `τ` and the endpoints at `τ = ±R` use the limiting
    /// spatial direction.
    fn curve(&self, element: impl Fn(f64) -> Event) -> Vec<Event> {
        let k = self.segments;
        if !self.compactified {
            return (0..=k)
                .map(|i| element(self.t_lo + (self.t_hi - self.t_lo) * i as f64 / k as f64))
                .collect();
        }
        let r = self.ctx.radius();
        let tau_lo = 2.0 * r / PI * (self.t_lo / r).atan();
        let tau_hi = r;
        (0..=k)
            .map(|i| {
                let tau = tau_lo + (tau_hi - tau_lo) * i as f64 / k as f64;
                if tau.abs() >= r {
                    // direction of element(t) as t → ±∞
                    let far = element(tau.signum() * r * 1e15);
                    at_compact_time(&far, tau.signum() * r)
                } else {
                    compactify(&element(r * (FRAC_PI_2 * tau / r).tan()))
                }
            })
            .collect()
    }
}

fn ring(ctx: &SpacetimeContext, t: f64, spatial_radius: f64, segments: usize) -> Vec<Event> {
    (0..segments)
        .map(|i| {
            let phi = 2.0 * PI * i as f64 / segments as f64;
            let v = Vector::new(vec![
                spatial_radius * phi.cos(),
                spatial_radius * phi.sin(),
                t,
            ])
            .expect("n = 2");
            Event::new(v, *ctx).expect("ring on S(R)")
        })
        .collect()
}

fn meridian_point(ctx: &SpacetimeContext, phi: f64, t: f64) -> Event {
    let rho = ctx.radius().hypot(t);
    let v = Vector::new(vec![rho * phi.cos(), rho * phi.sin(), t]).expect("n = 2");
    Event::new(v, *ctx).expect("meridian on S(R)")
}

/// Samples the geometry of the requested figure.
///
/// Requires `n = 2` and `resolution ≥ 8`.
pub fn build_scene(ctx: &SpacetimeContext, opts: &SceneOptions) -> Result<FigureScene> {
    if ctx.n() != 2 {
        return Err(Error::InvalidArgument(format!(
            "figures are drawn for n = 2 (the hyperboloid in Mink^3), got n = {}; \
             use the CSV export of sampled events for n != 2",
            ctx.n()
        )));
    }
    if opts.resolution < 8 {
        return Err(Error::InvalidArgument(format!(
            "resolution must be at least 8, got {}",
            opts.resolution
        )));
    }
    let compactified = opts.figure == FigureKind::Fig3;
    let mut scene = FigureScene::new(*ctx, opts.projection, compactified, opts.t_max)?;
    scene.annotate_throat = opts.annotate_throat;
    let r = ctx.radius();
    let k = opts.resolution;
    let t_max = if compactified {
        f64::INFINITY
    } else {
        opts.t_max
    };
    let t_lo = if opts.full_time { -t_max } else { 0.0 };
    let sampler = Sampler {
        ctx,
        compactified,
        t_lo,
        t_hi: t_max,
        segments: k,
    };

    scene
        .notes
        .push(format!("figure {}; R = {r}; n = 2", opts.figure));
    scene.notes.push(format!(
        "projection: u = x2 - {} * x1, v = t - {} * x1",
        opts.projection.u_x1, opts.projection.v_x1
    ));
    if compactified {
        scene.notes.push(
            "compactified time: (x, t) -> (sqrt(R^2 + tau^2) * x/|x|, tau), tau = (2R/pi) * atan(t/R); \
             t = infinity maps to tau = R"
                .into(),
        );
    } else {
        scene
            .notes
            .push(format!("time range: {t_lo} <= t <= {t_max}"));
    }

    // Wireframe.
    for j in 0..MERIDIANS {
        let phi = 2.0 * PI * j as f64 / MERIDIANS as f64;
        scene.polylines.push(Polyline {
            label: ElementLabel::HyperboloidMeridian,
            points: sampler.curve(|t| meridian_point(ctx, phi, t)),
            closed: false,
        });
    }
    let signs: &[f64] = if opts.full_time { &[1.0, -1.0] } else { &[1.0] };
    for &sign in signs {
        for q in 1..=4 {
            let level = q as f64 / 4.0;
            let (t, rho) = if compactified {
                let tau = sign * r * level;
                (tau, r.hypot(tau))
            } else {
                let t = sign * opts.t_max * level;
                (t, r.hypot(t))
            };
            scene.polylines.push(Polyline {
                label: ElementLabel::HyperboloidParallel,
                points: ring(ctx, t, rho, k),
                closed: true,
            });
        }
    }
    scene.polylines.push(Polyline {
        label: ElementLabel::ThroatCircle,
        points: ring(ctx, 0.0, r, k),
        closed: true,
    });

    // The observer.
    let line = canonical_worldline(ctx);
    let worldline = if compactified {
        sampler.curve(|t| line.at((t / r).asinh()))
    } else {
        let psi_hi = (t_max / r).asinh();
        let psi_lo = (t_lo / r).asinh();
        (0..=k)
            .map(|i| line.at(psi_lo + (psi_hi - psi_lo) * i as f64 / k as f64))
            .collect()
    };
    scene.polylines.push(Polyline {
        label: ElementLabel::Worldline,
        points: worldline,
        closed: false,
    });

    // Horizons: rulings through (0, ±R, 0) with directions (1, 0, 1) and (−1, 0, 1).
    let rulings: &[(ElementLabel, f64)] = if opts.full_time {
        &[
            (ElementLabel::HorizonPast, 1.0),
            (ElementLabel::HorizonFuture, -1.0),
        ]
    } else {
        &[(ElementLabel::HorizonPast, 1.0)]
    };
    for &(label, dir_x1) in rulings {
        for side in [1.0, -1.0] {
            let base = Event::from_coords(&[0.0, side * r, 0.0], *ctx)?;
            let ray = null_ray(&base, Vector::new(vec![dir_x1, 0.0, 1.0])?)?;
            scene.polylines.push(Polyline {
                label,
                points: sampler.curve(|t| ray.at(t)),
                closed: false,
            });
        }
    }

    // Γ⁻(L) ∩ S(R, 0); fixed by the compactification since it lies at t = 0.
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let throat = throat_intersection(&line, 0, &mut rng)?;
    scene.markers = throat
        .members
        .into_iter()
        .map(|event| Marker { event })
        .collect();

    if opts.figure == FigureKind::Cones {
        let psis: &[f64] = if opts.psi_list.is_empty() {
            &DEFAULT_CONE_PSIS
        } else {
            &opts.psi_list
        };
        for &psi in psis {
            let b = boost(psi, 2)?;
            let (ch, sh) = (psi.cosh(), psi.sinh());
            // boost(ψ)(R, ±s, s) has time R sinh ψ + s cosh ψ.
            let s_lo = (t_lo - r * sh) / ch;
            let s_hi = (t_max - r * sh) / ch;
            for side in [1.0, -1.0] {
                let points = (0..=k)
                    .map(|i| {
                        let s = s_lo + (s_hi - s_lo) * i as f64 / k as f64;
                        Event::from_coords(&[r, side * s, s], *ctx).and_then(|e| e.transformed(&b))
                    })
                    .collect::<Result<Vec<_>>>()?;
                scene.polylines.push(Polyline {
                    label: ElementLabel::ConePsi,
                    points,
                    closed: false,
                });
            }
            scene.notes.push(format!(
                "cone-psi: isotropic cone of L(psi) for psi = {psi}"
            ));
        }
    }

    debug_assert!(scene
        .polylines
        .iter()
        .flat_map(|p| &p.points)
        .all(|e| on_hyperboloid(e.point(), ctx).unwrap_or(false)));
    Ok(scene)
}
