//! Seeded samplers over `S(R)` and over the canonical regions used by the checks.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::desitter::{Event, SpacetimeContext};
use crate::minkowski::{boost_along, spatial_rotation, Isometry, Vector};

/// Uniform direction on the unit sphere `S^{k−1} ⊂ ℝ^k`.
pub fn random_unit<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..k).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|a| a / norm).collect();
        }
    }
}

fn event(coords: Vec<f64>, ctx: &SpacetimeContext) -> Event {
    Event::new(Vector::new(coords).expect("n >= 2"), *ctx)
        .expect("sampler constructs events on S(R)")
}

/// Event with `t` uniform in `[−t_bound, t_bound]` and uniform spatial direction.
pub fn sample_event<R: Rng + ?Sized>(rng: &mut R, ctx: &SpacetimeContext, t_bound: f64) -> Event {
    let t = if t_bound > 0.0 {
        rng.gen_range(-t_bound..=t_bound)
    } else {
        0.0
    };
    let rho = ctx.radius().hypot(t);
    let mut c: Vec<f64> = random_unit(rng, ctx.n())
        .into_iter()
        .map(|a| a * rho)
        .collect();
    c.push(t);
    event(c, ctx)
}

/// Event in the canonical causal past `{x_1 ≥ R, t ≤ 0}` of `(R, 0, …, 0)`.
pub fn sample_canonical_past<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: &SpacetimeContext,
    depth: f64,
) -> Event {
    let r = ctx.radius();
    let t = -rng.gen_range(0.0..=depth);
    let rho = r.hypot(t);
    let x1 = rng.gen_range(r..=rho);
    let rest = (rho * rho - x1 * x1).max(0.0).sqrt();
    let mut c = vec![x1];
    c.extend(random_unit(rng, ctx.n() - 1).into_iter().map(|a| a * rest));
    c.push(t);
    event(c, ctx)
}

/// Event on the isotropic cone `{x_1 = R}` of the throat event, `|t| ≤ t_bound`.
pub fn sample_cone_at_throat<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: &SpacetimeContext,
    t_bound: f64,
) -> Event {
    let t = rng.gen_range(-t_bound..=t_bound);
    let mut c = vec![ctx.radius()];
    c.extend(
        random_unit(rng, ctx.n() - 1)
            .into_iter()
            .map(|a| a * t.abs()),
    );
    c.push(t);
    event(c, ctx)
}

/// Event `(s, y, s)` with `|y| = R` on the past horizon `x_1 = t`.
pub fn sample_horizon_past<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: &SpacetimeContext,
    s_bound: f64,
) -> Event {
    let s = rng.gen_range(-s_bound..=s_bound);
    horizon_point(rng, ctx, s, s)
}

/// Event `(−s, y, s)` with `|y| = R` on the future horizon `x_1 + t = 0`.
pub fn sample_horizon_future<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: &SpacetimeContext,
    s_bound: f64,
) -> Event {
    let s = rng.gen_range(-s_bound..=s_bound);
    horizon_point(rng, ctx, -s, s)
}

fn horizon_point<R: Rng + ?Sized>(rng: &mut R, ctx: &SpacetimeContext, x1: f64, t: f64) -> Event {
    let mut c = vec![x1];
    c.extend(
        random_unit(rng, ctx.n() - 1)
            .into_iter()
            .map(|a| a * ctx.radius()),
    );
    c.push(t);
    event(c, ctx)
}

/// A time-preserving isometry built from random spatial rotations and boosts
/// with rapidities in `[−max_rapidity, max_rapidity]`.
pub fn random_isometry<R: Rng + ?Sized>(rng: &mut R, n: usize, max_rapidity: f64) -> Isometry {
    let mut iso = Isometry::identity(n).expect("n >= 2");
    for _ in 0..3 {
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..=n);
        while j == i {
            j = rng.gen_range(1..=n);
        }
        let rot = spatial_rotation(
            (i, j),
            rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
            n,
        )
        .expect("valid axes");
        let axis = rng.gen_range(1..=n);
        let b =
            boost_along(axis, rng.gen_range(-max_rapidity..=max_rapidity), n).expect("valid axis");
        iso = rot
            .compose(&b)
            .and_then(|m| m.compose(&iso))
            .expect("same dimension");
    }
    iso
}
