//! Isotropic cones, causal pasts and futures, and the observer's event horizons.
//!
//! Every set here is a section of `S(R)` by a half-space or hyperplane
//! `{e : a·e rel θ}` written with the Euclidean dot product of coordinates.
//! Membership is three-way: events within a tolerance band of the defining
//! hyperplane are reported as [`Verdict::Boundary`].

use std::f64::consts::FRAC_PI_2;

use rand::Rng;

use crate::desitter::{canonicalize, Event, SpacetimeContext, WorldLine};
use crate::error::{Error, Result};
use crate::minkowski::{Isometry, Vector};
use crate::sampling::{random_unit, sample_canonical_past, sample_cone_at_throat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Greater,
    Equal,
    LessEq,
    GreaterEq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Inside,
    Boundary,
    Outside,
}

/// Three-way membership answer with the signed residual that produced it.
///
/// `margin > 0` means the strict defining inequality holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CausalVerdict {
    pub verdict: Verdict,
    pub margin: f64,
}

impl CausalVerdict {
    fn from_margin(margin: f64, band: f64) -> CausalVerdict {
        let verdict = if margin.abs() <= band {
            Verdict::Boundary
        } else if margin > 0.0 {
            Verdict::Inside
        } else {
            Verdict::Outside
        };
        CausalVerdict { verdict, margin }
    }

    pub fn is_inside(&self) -> bool {
        self.verdict == Verdict::Inside
    }

    pub fn is_boundary(&self) -> bool {
        self.verdict == Verdict::Boundary
    }

    pub fn is_outside(&self) -> bool {
        self.verdict == Verdict::Outside
    }
}

/// `{e ∈ S(R) : a·coords(e) rel threshold}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpaceSet {
    covector: Vec<f64>,
    relation: Relation,
    threshold: f64,
    ctx: SpacetimeContext,
}

impl HalfSpaceSet {
    pub fn new(
        ctx: &SpacetimeContext,
        covector: Vec<f64>,
        relation: Relation,
        threshold: f64,
    ) -> Result<Self> {
        if covector.len() != ctx.n() + 1 {
            return Err(Error::DimensionMismatch {
                expected: ctx.n() + 1,
                actual: covector.len(),
            });
        }
        if covector.iter().all(|&a| a == 0.0) {
            return Err(Error::InvalidArgument("covector must be non-zero".into()));
        }
        Ok(HalfSpaceSet {
            covector,
            relation,
            threshold,
            ctx: *ctx,
        })
    }

    pub fn covector(&self) -> &[f64] {
        &self.covector
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn context(&self) -> &SpacetimeContext {
        &self.ctx
    }

    /// Open regions are defined by strict inequalities.
    pub fn is_open(&self) -> bool {
        matches!(self.relation, Relation::Less | Relation::Greater)
    }

    pub fn is_equality(&self) -> bool {
        self.relation == Relation::Equal
    }

    /// `a·x − θ`.
    pub fn residual(&self, e: &Event) -> Result<f64> {
        let x = e.coords();
        if x.len() != self.covector.len() {
            return Err(Error::DimensionMismatch {
                expected: self.covector.len(),
                actual: x.len(),
            });
        }
        Ok(self.covector.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() - self.threshold)
    }

    /// Width of the boundary band at `e`: `tol · |a| · max(R, |e|)`.
    pub fn band(&self, e: &Event) -> f64 {
        let a = self.covector.iter().map(|c| c * c).sum::<f64>().sqrt();
        self.ctx.tol() * a * self.ctx.radius().max(e.point().euclid_norm())
    }

    pub fn verdict(&self, e: &Event) -> Result<CausalVerdict> {
        let raw = self.residual(e)?;
        let band = self.band(e);
        let margin = match self.relation {
            Relation::Greater | Relation::GreaterEq | Relation::Equal => raw,
            Relation::Less | Relation::LessEq => -raw,
        };
        let mut v = CausalVerdict::from_margin(margin, band);
        if self.relation == Relation::Equal && v.verdict == Verdict::Inside {
            v.verdict = Verdict::Outside;
        }
        Ok(v)
    }

    /// Set membership: strict relations accept only `Inside`, the others
    /// also accept the boundary band.
    pub fn contains(&self, e: &Event) -> Result<bool> {
        let v = self.verdict(e)?;
        Ok(match self.relation {
            Relation::Less | Relation::Greater => v.is_inside(),
            _ => !v.is_outside(),
        })
    }
}

fn axis_covector(ctx: &SpacetimeContext, time_coeff: f64) -> Vec<f64> {
    let mut a = vec![0.0; ctx.n() + 1];
    a[0] = 1.0;
    a[ctx.n()] = time_coeff;
    a
}

fn build(
    ctx: &SpacetimeContext,
    time_coeff: f64,
    relation: Relation,
    threshold: f64,
) -> HalfSpaceSet {
    HalfSpaceSet::new(ctx, axis_covector(ctx, time_coeff), relation, threshold)
        .expect("valid covector")
}

/// Isotropic cone of the throat event `(R, 0, …, 0)`: `{x_1 = R}`.
pub fn throat_cone(ctx: &SpacetimeContext) -> HalfSpaceSet {
    build(ctx, 0.0, Relation::Equal, ctx.radius())
}

/// Isotropic cone of `L(ψ)`: `{x_1 − t tanh ψ = R / cosh ψ}`.
pub fn worldline_cone(ctx: &SpacetimeContext, psi: f64) -> HalfSpaceSet {
    build(ctx, -psi.tanh(), Relation::Equal, ctx.radius() / psi.cosh())
}

/// Events the canonical observer can see: `{x_1 − t > 0}`.
pub fn observer_past(ctx: &SpacetimeContext) -> HalfSpaceSet {
    build(ctx, -1.0, Relation::Greater, 0.0)
}

/// Events the canonical observer can influence: `{x_1 + t > 0}`.
pub fn observer_future(ctx: &SpacetimeContext) -> HalfSpaceSet {
    build(ctx, 1.0, Relation::Greater, 0.0)
}

/// Causal future of the antipodal observer `−L`: `{x_1 − t < 0}`.
pub fn antipodal_future(ctx: &SpacetimeContext) -> HalfSpaceSet {
    build(ctx, -1.0, Relation::Less, 0.0)
}

/// Causal past of the antipodal observer `−L`: `{x_1 + t < 0}`.
pub fn antipodal_past(ctx: &SpacetimeContext) -> HalfSpaceSet {
    build(ctx, 1.0, Relation::Less, 0.0)
}

/// The observer's past event horizon `{x_1 = t}`.
pub fn past_horizon(ctx: &SpacetimeContext) -> HalfSpaceSet {
    build(ctx, -1.0, Relation::Equal, 0.0)
}

/// The observer's future event horizon `{x_1 + t = 0}`.
pub fn future_horizon(ctx: &SpacetimeContext) -> HalfSpaceSet {
    build(ctx, 1.0, Relation::Equal, 0.0)
}

/// Frame in which an event `p` sits at `(R, 0, …, 0)` with `Y(p) = (0, …, 0, 1)`.
#[derive(Clone, Debug)]
pub struct EventFrame {
    apex: Event,
    to_canonical: Isometry,
}

impl EventFrame {
    pub fn new(p: &Event) -> Result<EventFrame> {
        let line = WorldLine::new(p.clone(), p.orientation_y())?;
        let to_canonical = canonicalize(&line)?.inverse();
        Ok(EventFrame {
            apex: p.clone(),
            to_canonical,
        })
    }

    pub fn apex(&self) -> &Event {
        &self.apex
    }

    fn canonical_coords(&self, q: &Event) -> Result<Vector> {
        self.to_canonical.apply(q.point())
    }

    fn verdict(&self, q: &Event, sign: f64) -> Result<CausalVerdict> {
        let ctx = self.apex.context();
        let c = self.canonical_coords(q)?;
        Ok(canonical_region_verdict(
            ctx,
            c.coords()[0],
            c.time(),
            sign,
            c.euclid_norm(),
        ))
    }

    /// `q ∈ J⁻(p)`, cone included as `Boundary`.
    pub fn past_verdict(&self, q: &Event) -> Result<CausalVerdict> {
        self.verdict(q, -1.0)
    }

    /// `q ∈ J⁺(p)`, cone included as `Boundary`.
    pub fn future_verdict(&self, q: &Event) -> Result<CausalVerdict> {
        self.verdict(q, 1.0)
    }
}

/// Verdict for the canonical region `{x_1 ≥ R, sign·t ≥ 0}`.
///
/// Margin is `min(R(x_1 − R), sign·R·t)`, in units of `R²`.
fn canonical_region_verdict(
    ctx: &SpacetimeContext,
    x1: f64,
    t: f64,
    sign: f64,
    norm: f64,
) -> CausalVerdict {
    let r = ctx.radius();
    let margin = (r * (x1 - r)).min(sign * r * t);
    let band = ctx.tol() * r * r.max(norm);
    CausalVerdict::from_margin(margin, band)
}

fn check_same_context(p: &Event, q: &Event) -> Result<()> {
    if p.context() != q.context() {
        return Err(Error::InvalidArgument(
            "events belong to different space-times".into(),
        ));
    }
    Ok(())
}

/// Whether `q` lies in the causal past of `p`, decided in the frame of `p`.
pub fn causal_past_of_event(q: &Event, p: &Event) -> Result<CausalVerdict> {
    check_same_context(p, q)?;
    EventFrame::new(p)?.past_verdict(q)
}

/// Whether `q` lies in the causal future of `p`, decided in the frame of `p`.
pub fn causal_future_of_event(q: &Event, p: &Event) -> Result<CausalVerdict> {
    check_same_context(p, q)?;
    EventFrame::new(p)?.future_verdict(q)
}

/// Causal relation of `q` to `p` read off the ambient chord `q − p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChordVerdict {
    /// `q ∈ J⁻(p)`.
    pub past: CausalVerdict,
    /// `q ∈ J⁺(p)`.
    pub future: CausalVerdict,
}

/// Independent oracle: `q ∈ J^±(p)` iff `inner(p, q) ≥ R²` (equivalently the
/// chord is non-spacelike) and `±(q_t − p_t) ≥ 0`.
pub fn chord_oracle(p: &Event, q: &Event) -> Result<ChordVerdict> {
    check_same_context(p, q)?;
    let ctx = p.context();
    let r = ctx.radius();
    // inner(q−p, q−p) = 2R² − 2 inner(p,q) on S(R)
    let m = p.point().form(q.point()) - r * r;
    let dt = q.time() - p.time();
    let band = ctx.tol() * (r * r).max(p.point().euclid_norm() * q.point().euclid_norm());
    Ok(ChordVerdict {
        past: CausalVerdict::from_margin(m.min(-r * dt), band),
        future: CausalVerdict::from_margin(m.min(r * dt), band),
    })
}

/// Coordinates of `q` in the frame of `L(ψ)`, i.e. `boost(−ψ) q`, evaluated in
/// light-cone form so large `ψ` does not cancel catastrophically.
fn boosted_back(q: &Event, psi: f64) -> (f64, f64) {
    let x1 = q.coords()[0];
    let t = q.time();
    let (ep, em) = (psi.exp(), (-psi).exp());
    let x1p = 0.5 * ((x1 - t) * ep + (x1 + t) * em);
    let tp = 0.5 * ((t - x1) * ep + (x1 + t) * em);
    (x1p, tp)
}

/// `q ∈ J⁻(L(ψ))` for the canonical world line.
pub fn worldline_past_verdict(ctx: &SpacetimeContext, psi: f64, q: &Event) -> CausalVerdict {
    let (x1, t) = boosted_back(q, psi);
    let rest: f64 = q.coords()[1..ctx.n()].iter().map(|a| a * a).sum();
    let norm = (x1 * x1 + t * t + rest).sqrt();
    canonical_region_verdict(ctx, x1, t, -1.0, norm)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NestingReport {
    pub samples: usize,
    pub violations: usize,
    /// Smallest margin seen against `J⁻(L(ψ₂))`.
    pub worst_margin: f64,
}

/// Samples `J⁻(L(ψ₁))` and checks every event lies in `J⁻(L(ψ₂))`.
///
/// A quarter of the samples are taken on the past cone of `L(ψ₁)`, and the
/// apex `L(ψ₁)` itself is always included.
pub fn nesting_check<R: Rng + ?Sized>(
    ctx: &SpacetimeContext,
    psi1: f64,
    psi2: f64,
    samples: usize,
    rng: &mut R,
) -> Result<NestingReport> {
    if psi1.is_nan() || psi2.is_nan() || psi1 >= psi2 {
        return Err(Error::InvalidArgument(format!(
            "nesting requires psi1 < psi2, got {psi1} >= {psi2}"
        )));
    }
    let to_psi1 = crate::minkowski::boost(psi1, ctx.n())?;
    let depth = 3.0 * ctx.radius();
    let mut report = NestingReport {
        samples: 0,
        violations: 0,
        worst_margin: f64::INFINITY,
    };
    let mut record = |q: &Event| {
        let v = worldline_past_verdict(ctx, psi2, q);
        report.samples += 1;
        report.worst_margin = report.worst_margin.min(v.margin);
        if v.is_outside() {
            report.violations += 1;
        }
    };
    record(&ctx.throat_event().transformed(&to_psi1)?);
    for i in 1..samples {
        let e = if i % 4 == 0 {
            past_half(ctx, &sample_cone_at_throat(rng, ctx, depth))
        } else {
            sample_canonical_past(rng, ctx, depth)
        };
        record(&e.transformed(&to_psi1)?);
    }
    Ok(report)
}

// (R, y, t) ↦ (R, y, −|t|) stays on the throat cone.
fn past_half(ctx: &SpacetimeContext, e: &Event) -> Event {
    let mut c = e.coords().to_vec();
    let last = c.len() - 1;
    c[last] = -c[last].abs();
    Event::new(Vector::new(c).expect("same dim"), *ctx).expect("cone point")
}

/// Bisection search on `ψ ∈ [−60, 60]` for a world-line event whose causal
/// past contains `q` strictly.
///
/// Returns `None` when no such `ψ` exists in range, which for members of the
/// observer's past only happens within the saturation of double precision.
pub fn union_witness(ctx: &SpacetimeContext, q: &Event) -> Option<f64> {
    const LO: f64 = -60.0;
    const HI: f64 = 60.0;
    let inside = |psi: f64| worldline_past_verdict(ctx, psi, q).is_inside();
    if !inside(HI) {
        return None;
    }
    if inside(LO) {
        return Some(LO);
    }
    let (mut lo, mut hi) = (LO, HI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// Distance of a past-horizon event from the cone of `L(ψ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitResidual {
    pub psi: f64,
    /// `|x_1 − t tanh ψ − R / cosh ψ|`, the cone equation evaluated at the event.
    ///
    /// On the horizon this equals `sech ψ · |t e^{−ψ} − R|`, which vanishes at
    /// `ψ = ln(t/R)` and peaks at `ψ = asinh(t/R)` before decaying, so it is
    /// not monotone in `ψ` for `t > R`.
    pub cone_residual: f64,
    /// `|x_1 − t tanh ψ| + R / cosh ψ`: covector mismatch plus offset, an upper
    /// bound on `cone_residual` that decreases strictly to 0 on the horizon.
    pub convergence_bound: f64,
}

/// Residuals of a past-horizon event against the cones of `L(ψ)`.
pub fn horizon_limit_check(
    ctx: &SpacetimeContext,
    q: &Event,
    psis: &[f64],
) -> Result<Vec<LimitResidual>> {
    let horizon = past_horizon(ctx);
    let v = horizon.verdict(q)?;
    if !v.is_boundary() {
        return Err(Error::NotOnHorizon(v.margin));
    }
    let x1 = q.coords()[0];
    let t = q.time();
    let r = ctx.radius();
    Ok(psis
        .iter()
        .map(|&psi| {
            let tilt = x1 - t * psi.tanh();
            let offset = r / psi.cosh();
            LimitResidual {
                psi,
                cone_residual: (tilt - offset).abs(),
                convergence_bound: tilt.abs() + offset,
            }
        })
        .collect())
}

/// Great-circle distance on the throat sphere `S(R, 0)`: `R·arccos(x·y / R²)`.
pub fn throat_distance(ctx: &SpacetimeContext, a: &Event, b: &Event) -> f64 {
    let r = ctx.radius();
    let dot: f64 = a
        .point()
        .spatial()
        .iter()
        .zip(b.point().spatial())
        .map(|(x, y)| x * y)
        .sum();
    r * (dot / (r * r)).clamp(-1.0, 1.0).acos()
}

#[derive(Clone, Debug)]
pub struct ThroatReport {
    /// Where the world line crosses `t = 0`.
    pub crossing: Event,
    /// Unit spatial normal of the great sphere `Γ⁻ ∩ S(R, 0)`.
    pub normal: Vec<f64>,
    pub members: Vec<Event>,
    /// Great-circle distances from `crossing` to each member.
    pub distances: Vec<f64>,
    /// `max |distance − πR/2|`.
    pub max_error: f64,
}

/// `Γ⁻(L′) ∩ S(R, 0)` for a world line `L′`.
///
/// The past horizon is `{e : inner(e, k) = 0}` with `k = p + R u` the future
/// null asymptote of `L′`, so its trace on the throat is the great sphere
/// orthogonal to the spatial part of `k`. For `n = 2` the two members are
/// returned exactly and `samples` is ignored; otherwise `samples` members are
/// drawn uniformly from the great sphere.
///
/// The distance from the crossing event is `πR/2` whenever `L′` meets the
/// throat orthogonally (an integral curve of `Y`). A line crossing the throat
/// with spatial velocity has its horizon trace centred elsewhere; the report
/// still records the actual distances.
pub fn throat_intersection<R: Rng + ?Sized>(
    line: &WorldLine,
    samples: usize,
    rng: &mut R,
) -> Result<ThroatReport> {
    let ctx = *line.context();
    let r = ctx.radius();
    let n = ctx.n();
    let (psi0, crossing) = line.throat_crossing()?;
    let k =
        WorldLine::new(line.at(psi0), line.velocity(psi0).scaled(1.0 / r))?.future_null_direction();
    let ks = k.spatial();
    let knorm = ks.iter().map(|a| a * a).sum::<f64>().sqrt();
    let normal: Vec<f64> = ks.iter().map(|a| a / knorm).collect();

    let member = |dir: Vec<f64>| -> Result<Event> {
        let mut c = dir;
        c.push(0.0);
        Event::new(Vector::new(c)?, ctx)
    };

    let mut members = Vec::new();
    if n == 2 {
        let perp = [-normal[1], normal[0]];
        members.push(member(vec![perp[0] * r, perp[1] * r])?);
        members.push(member(vec![-perp[0] * r, -perp[1] * r])?);
    } else {
        while members.len() < samples {
            let d = random_unit(rng, n);
            let along: f64 = d.iter().zip(&normal).map(|(a, b)| a * b).sum();
            let w: Vec<f64> = d.iter().zip(&normal).map(|(a, b)| a - along * b).collect();
            let wn = w.iter().map(|a| a * a).sum::<f64>().sqrt();
            if wn < 1e-6 {
                continue;
            }
            members.push(member(w.into_iter().map(|a| a / wn * r).collect())?);
        }
    }

    let distances: Vec<f64> = members
        .iter()
        .map(|m| throat_distance(&ctx, &crossing, m))
        .collect();
    let max_error = distances
        .iter()
        .fold(0.0_f64, |m, d| m.max((d - FRAC_PI_2 * r).abs()));
    Ok(ThroatReport {
        crossing,
        normal,
        members,
        distances,
        max_error,
    })
}
