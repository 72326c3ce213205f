//! The one-sheeted hyperboloid `S(R) : Σ x_k² − t² = R²` inside `Mink^{n+1}`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::minkowski::{
    check_n, sign_threshold, time_direction, Isometry, Matrix, TimeDirection, Vector, EPS,
};
use crate::sampling::random_unit;

/// Radius, spatial dimension and relative tolerance shared by every event.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpacetimeContext {
    radius: f64,
    n: usize,
    tol: f64,
}

impl SpacetimeContext {
    pub fn new(radius: f64, n: usize) -> Result<Self> {
        Self::with_tolerance(radius, n, EPS)
    }

    pub fn with_tolerance(radius: f64, n: usize, tol: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidRadius(radius));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidTolerance(tol));
        }
        check_n(n)?;
        Ok(SpacetimeContext { radius, n, tol })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The throat event `(R, 0, …, 0)`.
    pub fn throat_event(&self) -> Event {
        let mut c = vec![0.0; self.n + 1];
        c[0] = self.radius;
        Event::new_unchecked(Vector::new(c).expect("n >= 2"), *self)
    }

    /// Signed residual `inner(v, v) − R²`.
    pub fn form_residual(&self, v: &Vector) -> f64 {
        v.form(v) - self.radius * self.radius
    }

    /// Membership threshold for `v`: `tol · max(R², |v|²)`.
    pub fn membership_threshold(&self, v: &Vector) -> f64 {
        self.tol * (self.radius * self.radius).max(v.euclid_norm_sq())
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.n + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.n + 1,
                actual: v.dim(),
            });
        }
        Ok(())
    }
}

/// `|inner(v,v) − R²| ≤ tol · max(R², |v|²)`.
pub fn on_hyperboloid(v: &Vector, ctx: &SpacetimeContext) -> Result<bool> {
    ctx.check_dim(v)?;
    Ok(ctx.form_residual(v).abs() <= ctx.membership_threshold(v))
}

/// A point of `S(R)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Event {
    point: Vector,
    ctx: SpacetimeContext,
}

impl Event {
    pub fn new(point: Vector, ctx: SpacetimeContext) -> Result<Event> {
        if !on_hyperboloid(&point, &ctx)? {
            return Err(Error::OffHyperboloid {
                residual: ctx.form_residual(&point),
            });
        }
        Ok(Event { point, ctx })
    }

    pub fn from_coords(coords: &[f64], ctx: SpacetimeContext) -> Result<Event> {
        Event::new(Vector::from_slice(coords)?, ctx)
    }

    /// Wraps a point that is on S(R) by construction, skipping the membership check.
    pub(crate) fn new_unchecked(point: Vector, ctx: SpacetimeContext) -> Event {
        debug_assert_eq!(point.dim(), ctx.n + 1);
        Event { point, ctx }
    }

    pub fn point(&self) -> &Vector {
        &self.point
    }

    pub fn coords(&self) -> &[f64] {
        self.point.coords()
    }

    pub fn context(&self) -> &SpacetimeContext {
        &self.ctx
    }

    pub fn time(&self) -> f64 {
        self.point.time()
    }

    /// Image under an isometry; form preservation keeps it on `S(R)`.
    pub fn transformed(&self, iso: &Isometry) -> Result<Event> {
        Ok(Event::new_unchecked(iso.apply(&self.point)?, self.ctx))
    }

    pub fn orientation_y(&self) -> Vector {
        orientation_field(&self.point, &self.ctx)
    }
}

/// The constant-time slice `S(R, c) = S(R) ∩ {t = c}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SliceSphere {
    pub t: f64,
    pub spatial_radius: f64,
    ctx: SpacetimeContext,
}

impl SliceSphere {
    /// The event on the slice in spatial direction `dir` (normalized here).
    pub fn event_towards(&self, dir: &[f64]) -> Result<Event> {
        if dir.len() != self.ctx.n {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.n,
                actual: dir.len(),
            });
        }
        let norm = dir.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidArgument("zero direction".into()));
        }
        let mut c: Vec<f64> = dir.iter().map(|a| a / norm * self.spatial_radius).collect();
        c.push(self.t);
        Ok(Event::new_unchecked(Vector::new(c)?, self.ctx))
    }

    /// Uniformly distributed event on the slice.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Event {
        let dir = random_unit(rng, self.ctx.n);
        self.event_towards(&dir)
            .expect("unit direction of length n")
    }
}

/// Sphere descriptor `{t = c, Σ x_k² = R² + c²}`.
pub fn slice_sphere(ctx: &SpacetimeContext, c: f64) -> SliceSphere {
    let r = ctx.radius;
    SliceSphere {
        t: c,
        spatial_radius: r.hypot(c),
        ctx: *ctx,
    }
}

/// Unit future timelike field tangent to `S(R)` and orthogonal to the slices.
///
/// At `(x, t)` with `|x| = √(R² + t²)` it is `((t/R)·x/|x|, |x|/R)`.
pub fn orientation_y(v: &Vector, ctx: &SpacetimeContext) -> Result<Vector> {
    if !on_hyperboloid(v, ctx)? {
        return Err(Error::OffHyperboloid {
            residual: ctx.form_residual(v),
        });
    }
    Ok(orientation_field(v, ctx))
}

fn orientation_field(v: &Vector, ctx: &SpacetimeContext) -> Vector {
    let r = ctx.radius;
    let t = v.time();
    let xs = v.spatial();
    let norm = xs.iter().map(|a| a * a).sum::<f64>().sqrt();
    let mut c: Vec<f64> = xs.iter().map(|a| t / r * a / norm).collect();
    c.push(norm / r);
    Vector::new(c).expect("same dimension as input")
}

/// A timelike geodesic `L(ψ) = cosh ψ · p + R sinh ψ · u`.
#[derive(Clone, Debug, PartialEq)]
pub struct WorldLine {
    base: Event,
    tangent: Vector,
}

impl WorldLine {
    /// Requires `inner(u,u) = −1`, `inner(p,u) = 0` and `u` future directed.
    pub fn new(base: Event, tangent: Vector) -> Result<WorldLine> {
        check_tangent(&base, &tangent)?;
        Ok(WorldLine { base, tangent })
    }

    /// Image of the canonical world line under a time-preserving isometry.
    pub fn from_isometry(ctx: &SpacetimeContext, iso: &Isometry) -> Result<WorldLine> {
        if !iso.preserves_time() {
            return Err(Error::InvalidArgument(
                "isometry reverses time orientation".into(),
            ));
        }
        let canon = canonical_worldline(ctx);
        let base = canon.base.transformed(iso)?;
        let tangent = iso.apply(&canon.tangent)?;
        WorldLine::new(base, tangent)
    }

    pub fn base(&self) -> &Event {
        &self.base
    }

    pub fn tangent(&self) -> &Vector {
        &self.tangent
    }

    pub fn context(&self) -> &SpacetimeContext {
        &self.base.ctx
    }

    pub fn at(&self, psi: f64) -> Event {
        let r = self.base.ctx.radius;
        let point = self
            .base
            .point
            .scaled(psi.cosh())
            .add_scaled(r * psi.sinh(), &self.tangent);
        Event::new_unchecked(point, self.base.ctx)
    }

    /// `dL/dψ = sinh ψ · p + R cosh ψ · u`.
    pub fn velocity(&self, psi: f64) -> Vector {
        let r = self.base.ctx.radius;
        self.base
            .point
            .scaled(psi.sinh())
            .add_scaled(r * psi.cosh(), &self.tangent)
    }

    /// Null direction `p + R u`; `L(ψ) e^{−ψ}` tends to half of it as `ψ → +∞`.
    pub fn future_null_direction(&self) -> Vector {
        self.base
            .point
            .add_scaled(self.base.ctx.radius, &self.tangent)
    }

    /// Null direction `p − R u`, the `ψ → −∞` asymptote.
    pub fn past_null_direction(&self) -> Vector {
        self.base
            .point
            .add_scaled(-self.base.ctx.radius, &self.tangent)
    }

    /// Parameter and event where the world line meets `t = 0`.
    pub fn throat_crossing(&self) -> Result<(f64, Event)> {
        // t(ψ) = a cosh ψ + b sinh ψ
        let a = self.base.time();
        let b = self.base.ctx.radius * self.tangent.time();
        if b.is_nan() || b <= a.abs() {
            return Err(Error::NoThroatCrossing);
        }
        let psi = (-a / b).atanh();
        let mut e = self.at(psi);
        // Pin the time coordinate; the spatial part stays on the throat sphere.
        let mut c = e.point.clone().into_coords();
        let last = c.len() - 1;
        c[last] = 0.0;
        e.point = Vector::new(c)?;
        Ok((psi, e))
    }
}

fn check_tangent(base: &Event, u: &Vector) -> Result<()> {
    let p = &base.point;
    p.check_same_dim(u)?;
    if (u.form(u) + 1.0).abs() > sign_threshold(u, u) {
        return Err(Error::DegenerateTangent("tangent is not unit timelike"));
    }
    let scale = base.ctx.radius.max(1.0);
    if p.form(u).abs() > sign_threshold(p, u) * scale {
        return Err(Error::DegenerateTangent(
            "tangent is not orthogonal to the base event",
        ));
    }
    if time_direction(u) != TimeDirection::Future {
        return Err(Error::DegenerateTangent("tangent is not future directed"));
    }
    Ok(())
}

/// World line through `(R, 0, …, 0)` with tangent `(0, …, 0, 1)`.
pub fn canonical_worldline(ctx: &SpacetimeContext) -> WorldLine {
    WorldLine {
        base: ctx.throat_event(),
        tangent: Vector::time_axis(ctx.n).expect("n >= 2"),
    }
}

/// Time-preserving isometry carrying the canonical world line onto `line`.
///
/// The columns of the returned matrix are `p/R`, an orthonormal spacelike
/// basis of `span{p, u}^⊥`, and `u`.
pub fn canonicalize(line: &WorldLine) -> Result<Isometry> {
    check_tangent(&line.base, &line.tangent)?;
    let r = line.base.ctx.radius;
    let n = line.base.ctx.n;
    let p_hat = line.base.point.scaled(1.0 / r);
    let u = &line.tangent;

    let project = |w: &Vector, frame: &[Vector]| -> Vector {
        let mut w = w
            .add_scaled(-w.form(&p_hat), &p_hat)
            .add_scaled(w.form(u), u);
        for f in frame {
            w = w.add_scaled(-w.form(f), f);
        }
        w
    };

    let candidates: Vec<Vector> = (0..=n)
        .map(|i| Vector::basis(n, i).expect("index in range"))
        .collect();
    let mut frame: Vec<Vector> = Vec::with_capacity(n - 1);
    while frame.len() < n - 1 {
        let mut best: Option<(f64, Vector)> = None;
        for c in &candidates {
            let w = project(c, &frame);
            let q = w.form(&w);
            if best.as_ref().is_none_or(|(bq, _)| q > *bq) {
                best = Some((q, w));
            }
        }
        let (q, w) = best.expect("non-empty candidate list");
        if q.is_nan() || q <= EPS {
            return Err(Error::DegenerateTangent(
                "could not complete an orthonormal frame",
            ));
        }
        // Second pass against the frame built so far.
        let w = project(&w.scaled(1.0 / q.sqrt()), &frame);
        let q = w.form(&w);
        frame.push(w.scaled(1.0 / q.sqrt()));
    }

    let mut cols = Vec::with_capacity(n + 1);
    cols.push(p_hat.clone());
    cols.extend(frame);
    cols.push(u.clone());
    let iso = Isometry::new(Matrix::from_columns(&cols)?)?;
    debug_assert!(iso.preserves_time());
    Ok(iso)
}

/// An isotropic geodesic `γ(s) = p₀ + s·u` lying on `S(R)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NullRay {
    base: Event,
    direction: Vector,
}

impl NullRay {
    pub fn base(&self) -> &Event {
        &self.base
    }

    pub fn direction(&self) -> &Vector {
        &self.direction
    }

    pub fn at(&self, s: f64) -> Event {
        Event::new_unchecked(
            self.base.point.add_scaled(s, &self.direction),
            self.base.ctx,
        )
    }
}

pub fn null_ray(base: &Event, direction: Vector) -> Result<NullRay> {
    base.point.check_same_dim(&direction)?;
    if direction.is_zero() {
        return Err(Error::InvalidNullRay("direction is zero"));
    }
    if direction.form(&direction).abs() > sign_threshold(&direction, &direction) {
        return Err(Error::InvalidNullRay("direction is not null"));
    }
    let scale = base.ctx.radius.max(1.0);
    if base.point.form(&direction).abs() > sign_threshold(&base.point, &direction) * scale {
        return Err(Error::InvalidNullRay(
            "direction is not tangent to S(R) at the base event",
        ));
    }
    Ok(NullRay {
        base: base.clone(),
        direction,
    })
}
