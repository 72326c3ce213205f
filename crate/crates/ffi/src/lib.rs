//! C ABI over `desitter`.
//!
//! Every fallible entry point returns a [`DsStatus`]; on failure the message is
//! kept in a thread-local slot readable with [`ds_last_error_message`].
//! Handles (`DsContext`, `DsIsometry`, `DsScene`) are opaque and must be
//! released with their `_free` function. Vectors are passed as `(ptr, len)`
//! with coordinates ordered `(x1, …, xn, t)`, so `len = n + 1`.

use std::cell::RefCell;
use std::ffi::CStr;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use libc::{c_char, c_int, size_t};

use desitter::causal::{
    antipodal_future, antipodal_past, causal_future_of_event, causal_past_of_event, chord_oracle,
    future_horizon, observer_future, observer_past, past_horizon, CausalVerdict, Verdict,
};
use desitter::desitter::{on_hyperboloid, orientation_y, Event, SpacetimeContext};
use desitter::figure::{build_scene, emit_csv, emit_svg, FigureKind, FigureScene, SceneOptions};
use desitter::minkowski::{self, CausalClass, Isometry, TimeDirection, Vector};
use desitter::quotient::quotient_rep;
use desitter::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    OffHyperboloid = 4,
    NotAnIsometry = 5,
    Io = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsCausalClass {
    Timelike = 0,
    Spacelike = 1,
    Null = 2,
    Zero = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsTimeDirection {
    Future = 0,
    Past = 1,
    None = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsMembership {
    Inside = 0,
    Boundary = 1,
    Outside = 2,
}

/// Three-way membership plus the signed margin (positive means inside).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DsVerdict {
    pub membership: DsMembership,
    pub margin: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsRegion {
    /// `x1 − t > 0`
    ObserverPast = 0,
    /// `x1 + t > 0`
    ObserverFuture = 1,
    /// `x1 − t < 0`
    AntipodalFuture = 2,
    /// `x1 + t < 0`
    AntipodalPast = 3,
    /// `x1 = t`
    PastHorizon = 4,
    /// `x1 + t = 0`
    FutureHorizon = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsFigure {
    Fig2 = 0,
    Fig3 = 1,
    Cones = 2,
}

pub struct DsContext {
    inner: SpacetimeContext,
}

pub struct DsIsometry {
    inner: Isometry,
}

pub struct DsScene {
    inner: FigureScene,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> DsStatus {
    match err {
        Error::DimensionMismatch { .. } => DsStatus::DimensionMismatch,
        Error::OffHyperboloid { .. } => DsStatus::OffHyperboloid,
        Error::NotAnIsometry(_) => DsStatus::NotAnIsometry,
        Error::Io(_) => DsStatus::Io,
        _ => DsStatus::InvalidArgument,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
    Buffer(usize),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> DsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            DsStatus::Ok
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            DsStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Buffer(need))) => {
            set_error(format!("output buffer too small: need {need} values"));
            DsStatus::BufferTooSmall
        }
        Err(_) => {
            set_error("internal panic".into());
            DsStatus::Panic
        }
    }
}

unsafe fn href<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn slice<'a>(p: *const f64, len: size_t, what: &'static str) -> Result<&'a [f64], Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_vec(out: *mut f64, len: size_t, v: &[f64]) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    if len < v.len() {
        return Err(Fail::Buffer(v.len()));
    }
    ptr::copy_nonoverlapping(v.as_ptr(), out, v.len());
    Ok(())
}

unsafe fn event(
    ctx: &SpacetimeContext,
    p: *const f64,
    len: size_t,
    what: &'static str,
) -> Result<Event, Fail> {
    Ok(Event::from_coords(slice(p, len, what)?, *ctx)?)
}

fn verdict(v: CausalVerdict) -> DsVerdict {
    let membership = match v.verdict {
        Verdict::Inside => DsMembership::Inside,
        Verdict::Boundary => DsMembership::Boundary,
        Verdict::Outside => DsMembership::Outside,
    };
    DsVerdict {
        membership,
        margin: v.margin,
    }
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len − 1` bytes) and returns the full message length.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ds_last_error_message(buf: *mut c_char, len: size_t) -> size_t {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_context_new(
    radius: f64,
    n: size_t,
    out: *mut *mut DsContext,
) -> DsStatus {
    guard(|| {
        let inner = SpacetimeContext::new(radius, n)?;
        write_out(out, Box::into_raw(Box::new(DsContext { inner })), "out")
    })
}

/// # Safety
/// `ctx` must be null or a handle from `ds_context_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_context_free(ctx: *mut DsContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Minkowski inner product of two vectors of equal length.
///
/// # Safety
/// `u` and `v` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_inner(
    u: *const f64,
    v: *const f64,
    len: size_t,
    out: *mut f64,
) -> DsStatus {
    guard(|| {
        let u = Vector::from_slice(slice(u, len, "u")?)?;
        let v = Vector::from_slice(slice(v, len, "v")?)?;
        write_out(out, minkowski::inner(&u, &v)?, "out")
    })
}

/// # Safety
/// `v` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_classify(
    v: *const f64,
    len: size_t,
    out: *mut DsCausalClass,
) -> DsStatus {
    guard(|| {
        let v = Vector::from_slice(slice(v, len, "v")?)?;
        let c = match minkowski::classify(&v) {
            CausalClass::Timelike => DsCausalClass::Timelike,
            CausalClass::Spacelike => DsCausalClass::Spacelike,
            CausalClass::Null => DsCausalClass::Null,
            CausalClass::Zero => DsCausalClass::Zero,
        };
        write_out(out, c, "out")
    })
}

/// # Safety
/// `v` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_time_direction(
    v: *const f64,
    len: size_t,
    out: *mut DsTimeDirection,
) -> DsStatus {
    guard(|| {
        let v = Vector::from_slice(slice(v, len, "v")?)?;
        let d = match minkowski::time_direction(&v) {
            TimeDirection::Future => DsTimeDirection::Future,
            TimeDirection::Past => DsTimeDirection::Past,
            TimeDirection::None => DsTimeDirection::None,
        };
        write_out(out, d, "out")
    })
}

unsafe fn new_isometry(iso: desitter::Result<Isometry>, out: *mut *mut DsIsometry) -> DsStatus {
    guard(|| {
        let inner = iso?;
        write_out(out, Box::into_raw(Box::new(DsIsometry { inner })), "out")
    })
}

/// Boost of rapidity `psi` in the `(x1, t)` plane.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_boost(psi: f64, n: size_t, out: *mut *mut DsIsometry) -> DsStatus {
    new_isometry(minkowski::boost(psi, n), out)
}

/// Boost along spatial axis `axis` (1-based).
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_boost_along(
    axis: size_t,
    psi: f64,
    n: size_t,
    out: *mut *mut DsIsometry,
) -> DsStatus {
    new_isometry(minkowski::boost_along(axis, psi, n), out)
}

/// `x ↦ −x`.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_central_symmetry(n: size_t, out: *mut *mut DsIsometry) -> DsStatus {
    new_isometry(minkowski::central_symmetry(n), out)
}

/// Rotation by `angle` in the plane of spatial axes `i`, `j` (1-based).
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_spatial_rotation(
    i: size_t,
    j: size_t,
    angle: f64,
    n: size_t,
    out: *mut *mut DsIsometry,
) -> DsStatus {
    new_isometry(minkowski::spatial_rotation((i, j), angle, n), out)
}

/// `a ∘ b`.
///
/// # Safety
/// `a`, `b` must be live isometry handles; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_isometry_compose(
    a: *const DsIsometry,
    b: *const DsIsometry,
    out: *mut *mut DsIsometry,
) -> DsStatus {
    let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
        return guard(|| Err(Fail::Null("isometry")));
    };
    new_isometry(a.inner.compose(&b.inner), out)
}

/// # Safety
/// `iso` must be a live isometry handle; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_isometry_inverse(
    iso: *const DsIsometry,
    out: *mut *mut DsIsometry,
) -> DsStatus {
    let Some(iso) = iso.as_ref() else {
        return guard(|| Err(Fail::Null("isometry")));
    };
    new_isometry(Ok(iso.inner.inverse()), out)
}

/// # Safety
/// `iso` must be a live handle; `v` and `out` must each hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_isometry_apply(
    iso: *const DsIsometry,
    v: *const f64,
    len: size_t,
    out: *mut f64,
) -> DsStatus {
    guard(|| {
        let iso = href(iso, "isometry")?;
        let v = Vector::from_slice(slice(v, len, "v")?)?;
        write_vec(out, len, iso.inner.apply(&v)?.coords())
    })
}

/// Copies the `(n+1)²` matrix entries, row-major, into `out`.
///
/// # Safety
/// `iso` must be a live handle; `out` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_isometry_matrix(
    iso: *const DsIsometry,
    out: *mut f64,
    len: size_t,
) -> DsStatus {
    guard(|| {
        let iso = href(iso, "isometry")?;
        write_vec(out, len, iso.inner.matrix().as_row_major())
    })
}

/// Scaled `max|ΛᵀGΛ − G|`; NaN for a null handle.
///
/// # Safety
/// `iso` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ds_isometry_residual(iso: *const DsIsometry) -> f64 {
    iso.as_ref().map_or(f64::NAN, |i| i.inner.residual())
}

/// # Safety
/// `iso` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_isometry_free(iso: *mut DsIsometry) {
    if !iso.is_null() {
        drop(Box::from_raw(iso));
    }
}

/// Writes 1 to `out` when `v` lies on S(R) within tolerance, else 0.
///
/// # Safety
/// `ctx` must be live; `v` must hold `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_on_hyperboloid(
    ctx: *const DsContext,
    v: *const f64,
    len: size_t,
    out: *mut c_int,
) -> DsStatus {
    guard(|| {
        let ctx = href(ctx, "context")?;
        let v = Vector::from_slice(slice(v, len, "v")?)?;
        write_out(out, c_int::from(on_hyperboloid(&v, &ctx.inner)?), "out")
    })
}

/// Time-orientation field at `v`, written into `out`.
///
/// # Safety
/// `ctx` must be live; `v` and `out` must each hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_orientation_y(
    ctx: *const DsContext,
    v: *const f64,
    len: size_t,
    out: *mut f64,
) -> DsStatus {
    guard(|| {
        let ctx = href(ctx, "context")?;
        let v = Vector::from_slice(slice(v, len, "v")?)?;
        write_vec(out, len, orientation_y(&v, &ctx.inner)?.coords())
    })
}

/// Membership of `q` in the causal past (`future = 0`) or future (`future != 0`) of `p`.
///
/// # Safety
/// `ctx` must be live; `q`, `p` must hold `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_causal_relation(
    ctx: *const DsContext,
    q: *const f64,
    p: *const f64,
    len: size_t,
    future: c_int,
    out: *mut DsVerdict,
) -> DsStatus {
    guard(|| {
        let ctx = href(ctx, "context")?;
        let q = event(&ctx.inner, q, len, "q")?;
        let p = event(&ctx.inner, p, len, "p")?;
        let v = if future == 0 {
            causal_past_of_event(&q, &p)?
        } else {
            causal_future_of_event(&q, &p)?
        };
        write_out(out, verdict(v), "out")
    })
}

/// Chord test `⟨p, q⟩ ≥ R²` with time order.
///
/// # Safety
/// `ctx` must be live; `p`, `q` must hold `len` doubles; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_chord_oracle(
    ctx: *const DsContext,
    p: *const f64,
    q: *const f64,
    len: size_t,
    out_past: *mut DsVerdict,
    out_future: *mut DsVerdict,
) -> DsStatus {
    guard(|| {
        let ctx = href(ctx, "context")?;
        let p = event(&ctx.inner, p, len, "p")?;
        let q = event(&ctx.inner, q, len, "q")?;
        let c = chord_oracle(&p, &q)?;
        write_out(out_past, verdict(c.past), "out_past")?;
        write_out(out_future, verdict(c.future), "out_future")
    })
}

/// Membership of `e` in one of the canonical observer's regions.
///
/// # Safety
/// `ctx` must be live; `e` must hold `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_region_verdict(
    ctx: *const DsContext,
    region: DsRegion,
    e: *const f64,
    len: size_t,
    out: *mut DsVerdict,
) -> DsStatus {
    guard(|| {
        let ctx = href(ctx, "context")?;
        let c = &ctx.inner;
        let set = match region {
            DsRegion::ObserverPast => observer_past(c),
            DsRegion::ObserverFuture => observer_future(c),
            DsRegion::AntipodalFuture => antipodal_future(c),
            DsRegion::AntipodalPast => antipodal_past(c),
            DsRegion::PastHorizon => past_horizon(c),
            DsRegion::FutureHorizon => future_horizon(c),
        };
        let e = event(c, e, len, "e")?;
        write_out(out, verdict(set.verdict(&e)?), "out")
    })
}

/// Sign-normalized representative of `±e` in the antipodal quotient.
///
/// # Safety
/// `ctx` must be live; `e` and `out` must each hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_quotient_rep(
    ctx: *const DsContext,
    e: *const f64,
    len: size_t,
    out: *mut f64,
) -> DsStatus {
    guard(|| {
        let ctx = href(ctx, "context")?;
        let e = event(&ctx.inner, e, len, "e")?;
        write_vec(out, len, quotient_rep(&e).representative().coords())
    })
}

/// Builds a figure scene (requires n = 2). `psi_list` may be null when `psi_len = 0`.
///
/// # Safety
/// `ctx` must be live; `psi_list` must hold `psi_len` doubles; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn ds_scene_build(
    ctx: *const DsContext,
    figure: DsFigure,
    t_max: f64,
    resolution: size_t,
    psi_list: *const f64,
    psi_len: size_t,
    annotate_throat: c_int,
    out: *mut *mut DsScene,
) -> DsStatus {
    guard(|| {
        let ctx = href(ctx, "context")?;
        let kind = match figure {
            DsFigure::Fig2 => FigureKind::Fig2,
            DsFigure::Fig3 => FigureKind::Fig3,
            DsFigure::Cones => FigureKind::Cones,
        };
        let mut opts = SceneOptions::new(kind, t_max, resolution);
        if psi_len > 0 {
            opts.psi_list = slice(psi_list, psi_len, "psi_list")?.to_vec();
        }
        opts.annotate_throat = annotate_throat != 0;
        let inner = build_scene(&ctx.inner, &opts)?;
        write_out(out, Box::into_raw(Box::new(DsScene { inner })), "out")
    })
}

/// Number of polylines in the scene; 0 for a null handle.
///
/// # Safety
/// `scene` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn ds_scene_polyline_count(scene: *const DsScene) -> size_t {
    scene.as_ref().map_or(0, |s| s.inner.polylines.len())
}

unsafe fn scene_path<'a>(
    scene: *const DsScene,
    path: *const c_char,
) -> Result<(&'a DsScene, &'a Path), Fail> {
    let scene = href(scene, "scene")?;
    if path.is_null() {
        return Err(Fail::Null("path"));
    }
    let path = CStr::from_ptr(path)
        .to_str()
        .map_err(|_| Error::InvalidArgument("path is not valid UTF-8".into()))?;
    Ok((scene, Path::new(path)))
}

/// # Safety
/// `scene` must be live; `path` a NUL-terminated UTF-8 string.
#[no_mangle]
pub unsafe extern "C" fn ds_scene_write_svg(
    scene: *const DsScene,
    path: *const c_char,
) -> DsStatus {
    guard(|| {
        let (s, p) = scene_path(scene, path)?;
        Ok(emit_svg(&s.inner, p)?)
    })
}

/// # Safety
/// `scene` must be live; `path` a NUL-terminated UTF-8 string.
#[no_mangle]
pub unsafe extern "C" fn ds_scene_write_csv(
    scene: *const DsScene,
    path: *const c_char,
) -> DsStatus {
    guard(|| {
        let (s, p) = scene_path(scene, path)?;
        Ok(emit_csv(&s.inner, p)?)
    })
}

/// # Safety
/// `scene` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_scene_free(scene: *mut DsScene) {
    if !scene.is_null() {
        drop(Box::from_raw(scene));
    }
}
