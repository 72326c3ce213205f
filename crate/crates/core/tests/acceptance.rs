//! Acceptance suite: one test per criterion, named `criterion_NN_*`.
//!
//! Each test prints a `PASS`/`FAIL` line with the measured values; run with
//! `cargo test -p desitter-core --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::f64::consts::FRAC_PI_2;
use std::path::Path;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use desitter::causal::{
    antipodal_future, antipodal_past, causal_past_of_event, chord_oracle, future_horizon,
    horizon_limit_check, nesting_check, observer_future, observer_past, past_horizon, throat_cone,
    throat_intersection, union_witness, worldline_cone, HalfSpaceSet,
};
use desitter::desitter::{canonical_worldline, null_ray, Event, SpacetimeContext};
use desitter::minkowski::{boost, central_symmetry, inner, verify_isometry, Vector};
use desitter::quotient::{antipode, horizon_symmetry_check, injectivity_check, quotient_rep};
use desitter::sampling::{random_unit, sample_cone_at_throat, sample_event, sample_horizon_past};

type Outcome = Result<String, String>;

fn ctx(r: f64, n: usize) -> SpacetimeContext {
    SpacetimeContext::new(r, n).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Every sampled point of Γ⁻(L) ∩ S(R,0) is at distance πR/2 from p.
fn corollary_constant() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for n in [2, 3] {
        for r in [1.0, 2.5] {
            let c = ctx(r, n);
            let rep = throat_intersection(&canonical_worldline(&c), 1000, &mut rng(11))
                .map_err(|e| e.to_string())?;
            let horizon = past_horizon(&c);
            for m in &rep.members {
                if m.time() != 0.0 || !horizon.contains(m).unwrap() {
                    return Err(format!(
                        "member {:?} is not on the past horizon at t = 0",
                        m.coords()
                    ));
                }
                // Independent great-circle distance from p = (R, 0, …, 0).
                let s = m.point().spatial();
                let along = s[0];
                let across = s[1..].iter().map(|a| a * a).sum::<f64>().sqrt();
                let d = r * across.atan2(along);
                worst = worst.max((d - FRAC_PI_2 * r).abs() / r);
                worst = worst.max(rep.max_error / r);
                count += 1;
            }
        }
    }
    ensure(
        worst <= 1e-9,
        format!("{count} points, max |d - piR/2| / R = {worst:.2e} (tol 1e-9)"),
    )
}

/// sign(x1 − t) decides J⁻(L), Γ⁻ and J⁺(−L); the sets are checked against
/// the world-line union computed by bisection.
fn horizon_characterization() -> Outcome {
    let mut bad = 0usize;
    let mut in_band = 0usize;
    let total = 100_000;
    for (k, r) in [1.0, 2.5].into_iter().enumerate() {
        let c = ctx(r, 2 + k);
        let (past, horizon, beyond) = (observer_past(&c), past_horizon(&c), antipodal_future(&c));
        let mut g = rng(21 + k as u64);
        for i in 0..total / 2 {
            // Every tenth event is drawn on the horizon itself.
            let q = if i % 10 == 0 {
                sample_horizon_past(&mut g, &c, 5.0 * r)
            } else {
                sample_event(&mut g, &c, 5.0 * r)
            };
            let s = q.coords()[0] - q.time();
            let band = horizon.band(&q);
            let in_past = union_witness(&c, &q).is_some();
            // −L(ψ) = i₀ L(ψ) and i₀ reverses time, so q ∈ J⁺(−L) iff −q ∈ J⁻(L).
            let in_beyond = union_witness(&c, &antipode(&q)).is_some();
            if s.abs() <= band {
                in_band += 1;
                if !horizon.contains(&q).unwrap() {
                    bad += 1;
                }
                continue;
            }
            let ok = if s > 0.0 {
                in_past
                    && !in_beyond
                    && past.verdict(&q).unwrap().is_inside()
                    && !horizon.contains(&q).unwrap()
            } else {
                !in_past
                    && in_beyond
                    && beyond.verdict(&q).unwrap().is_inside()
                    && !horizon.contains(&q).unwrap()
            };
            if !ok {
                bad += 1;
            }
        }
    }
    ensure(
        bad == 0,
        format!("{total} events, {bad} misclassified, {in_band} in band"),
    )
}

/// Frame-based J⁻(p) agrees with the chord oracle away from the boundary.
fn oracle_equivalence() -> Outcome {
    let total = 100_000;
    let (mut disagree, mut outside_band, mut related) = (0usize, 0usize, 0usize);
    let mut g = rng(31);
    for i in 0..total {
        let (r, n) = [(1.0, 2), (2.5, 2), (1.0, 3), (2.5, 3)][i % 4];
        let c = ctx(r, n);
        let p = sample_event(&mut g, &c, 3.0 * r);
        let q = sample_event(&mut g, &c, 3.0 * r);
        let frame = causal_past_of_event(&q, &p).map_err(|e| e.to_string())?;
        let chord = chord_oracle(&p, &q).map_err(|e| e.to_string())?.past;
        if !chord.is_outside() {
            related += 1;
        }
        if frame.is_outside() != chord.is_outside() {
            disagree += 1;
            let tol = 1e-7 * r * r;
            if frame.margin.abs() > tol && chord.margin.abs() > tol {
                outside_band += 1;
            }
        }
    }
    ensure(
        outside_band == 0,
        format!("{total} pairs ({related} related), {disagree} disagreements, {outside_band} with |margin| > 1e-7 R^2"),
    )
}

/// boost(a)·boost(b) = boost(a+b) and boosts are isometries.
fn boost_group() -> Outcome {
    let mut g = rng(41);
    let mut worst_group: f64 = 0.0;
    for _ in 0..1000 {
        let a = g.gen_range(-5.0..=5.0);
        let b = g.gen_range(-5.0..=5.0);
        let ab = boost(a, 2).unwrap().compose(&boost(b, 2).unwrap()).unwrap();
        worst_group = worst_group.max(ab.matrix().max_abs_diff(boost(a + b, 2).unwrap().matrix()));
    }
    let mut worst_iso: f64 = 0.0;
    for i in 0..=400 {
        let psi = -20.0 + 0.1 * i as f64;
        for n in [2, 3] {
            worst_iso = worst_iso.max(verify_isometry(boost(psi, n).unwrap().matrix()));
        }
    }
    ensure(
        worst_group <= 1e-10 && worst_iso <= 1e-10,
        format!("group max {worst_group:.2e}, isometry residual max {worst_iso:.2e} (tol 1e-10)"),
    )
}

/// boost(ψ) carries the throat cone onto x1 − t tanh ψ = R / cosh ψ.
fn cone_push_forward() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut bad_verdicts = 0;
    for (k, (r, n)) in [(1.0, 2), (2.5, 3)].into_iter().enumerate() {
        let c = ctx(r, n);
        let cone = throat_cone(&c);
        let mut g = rng(51 + k as u64);
        let pts: Vec<Event> = (0..10_000)
            .map(|_| sample_cone_at_throat(&mut g, &c, 3.0 * r))
            .collect();
        if pts.iter().any(|e| !cone.contains(e).unwrap()) {
            return Err("sampled point off the throat cone".into());
        }
        for j in 0..20 {
            let psi = -4.75 + 0.5 * j as f64;
            let b = boost(psi, n).unwrap();
            let image = worldline_cone(&c, psi);
            for e in &pts {
                let f = e.transformed(&b).unwrap();
                let res = (f.coords()[0] - f.time() * psi.tanh() - r / psi.cosh()).abs();
                worst = worst.max(res / r);
                if !image.contains(&f).unwrap() {
                    bad_verdicts += 1;
                }
            }
        }
    }
    ensure(
        worst <= 1e-9 && bad_verdicts == 0,
        format!("2 x 10^4 points x 20 psi, max residual / R = {worst:.2e} (tol 1e-9), {bad_verdicts} off-cone verdicts"),
    )
}

fn nesting() -> Outcome {
    let c = ctx(1.5, 2);
    let grid = [
        (-3.0, -2.0),
        (-2.0, -1.5),
        (-1.0, 0.0),
        (-0.5, 0.5),
        (0.0, 0.1),
        (0.0, 1.0),
        (0.5, 3.0),
        (1.0, 1.0001),
        (2.0, 5.0),
        (4.0, 8.0),
    ];
    let mut g = rng(61);
    let mut total = 0;
    let mut violations = 0;
    for (a, b) in grid {
        let rep = nesting_check(&c, a, b, 10_000, &mut g).map_err(|e| e.to_string())?;
        total += rep.samples;
        violations += rep.violations;
    }
    ensure(
        violations == 0,
        format!("10 (psi1, psi2) pairs, {total} samples, {violations} violations"),
    )
}

/// Decreasing approach of the cones of L(ψ) to the past horizon.
fn limit_to_horizon() -> Outcome {
    let psis = [1.0, 2.0, 4.0, 8.0, 16.0];
    let mut worst_final: f64 = 0.0;
    let mut worst_cone_final: f64 = 0.0;
    let mut non_monotone = 0;
    for (k, r) in [1.0, 2.5].into_iter().enumerate() {
        let c = ctx(r, 2);
        let mut g = rng(71 + k as u64);
        for _ in 0..100 {
            let s = g.gen_range(0.0..=10.0 * r);
            let y = if g.gen_bool(0.5) { r } else { -r };
            let q = Event::from_coords(&[s, y, s], c).unwrap();
            let res = horizon_limit_check(&c, &q, &psis).map_err(|e| e.to_string())?;
            if res
                .windows(2)
                .any(|w| w[1].convergence_bound >= w[0].convergence_bound)
            {
                non_monotone += 1;
            }
            worst_final = worst_final.max(res[4].convergence_bound / r);
            worst_cone_final = worst_cone_final.max(res[4].cone_residual / r);
        }
    }
    ensure(
        non_monotone == 0 && worst_final <= 1e-6 && worst_cone_final <= 1e-6,
        format!(
            "200 horizon points, {non_monotone} non-decreasing sequences, final residual / R = {worst_final:.2e} (tol 1e-6)"
        ),
    )
}

/// e ∈ A iff i₀(e) ∈ B for the pairs exchanged by the central symmetry.
fn central_symmetry_identities() -> Outcome {
    let c = ctx(2.0, 3);
    let i0 = central_symmetry(3).unwrap();
    // (A, B, whether the boundary samples go on x1 + t = 0 rather than x1 = t)
    let pairs: [(HalfSpaceSet, HalfSpaceSet, bool); 4] = [
        (observer_past(&c), antipodal_future(&c), false),
        (observer_future(&c), antipodal_past(&c), true),
        (past_horizon(&c), past_horizon(&c), false),
        (future_horizon(&c), future_horizon(&c), true),
    ];
    let mut g = rng(81);
    let mut violations = 0;
    for (a, b, future_side) in &pairs {
        for i in 0..10_000 {
            // Every other sample sits on a horizon so the equality sets are exercised.
            let e = if i % 2 == 0 {
                sample_event(&mut g, &c, 4.0)
            } else {
                let h = sample_horizon_past(&mut g, &c, 4.0);
                if *future_side {
                    Event::from_coords(&[-h.coords()[0], h.coords()[1], h.coords()[2], h.time()], c)
                        .unwrap()
                } else {
                    h
                }
            };
            let m = e.transformed(&i0).unwrap();
            if a.verdict(&e).unwrap().verdict != b.verdict(&m).unwrap().verdict {
                violations += 1;
            }
        }
    }
    ensure(
        violations == 0,
        format!("4 set pairs x 10^4 samples, {violations} violations"),
    )
}

fn antipodal_gluing() -> Outcome {
    let c = ctx(1.0, 2);
    let mut g = rng(91);
    let mut inj = 0;
    for set in [
        observer_past(&c),
        observer_future(&c),
        antipodal_future(&c),
        antipodal_past(&c),
    ] {
        inj += injectivity_check(&set, 10_000, &mut g)
            .map_err(|e| e.to_string())?
            .violations;
    }
    let sym = horizon_symmetry_check(&c, 10_000, &mut g)
        .map_err(|e| e.to_string())?
        .violations;
    let mut rep = 0;
    for _ in 0..10_000 {
        let e = sample_event(&mut g, &c, 5.0);
        if quotient_rep(&e) != quotient_rep(&antipode(&e)) {
            rep += 1;
        }
    }
    ensure(
        inj == 0 && sym == 0 && rep == 0,
        format!("injectivity {inj}, horizon symmetry {sym}, quotient_rep mismatches {rep}"),
    )
}

/// Unit spacelike tangent at `e` orthogonal to Y(e).
fn spacelike_tangent(g: &mut ChaCha8Rng, e: &Event, y: &Vector) -> Vector {
    let r2 = e.context().radius().powi(2);
    loop {
        let mut w = Vector::new(random_unit(g, e.point().dim())).unwrap();
        w = w.add_scaled(-inner(&w, e.point()).unwrap() / r2, e.point());
        w = w.add_scaled(inner(&w, y).unwrap(), y);
        let nn = inner(&w, &w).unwrap();
        if nn > 1e-6 {
            return w.scaled(1.0 / nn.sqrt());
        }
    }
}

fn null_rulings() -> Outcome {
    let mut worst_ruling: f64 = 0.0;
    for r in [1.0, 2.5] {
        let c = ctx(r, 2);
        let mut g = rng(101);
        for _ in 0..10_000 {
            let e = sample_horizon_past(&mut g, &c, 10.0 * r);
            let [x1, x2, t] = [e.coords()[0], e.coords()[1], e.time()];
            // Distance to the nearer of the rays (s, R, s) and (s, −R, s).
            let d = ((x1 - t).powi(2) / 2.0 + (x2.abs() - r).powi(2)).sqrt();
            worst_ruling = worst_ruling.max(d / r);
        }
    }
    let mut worst_ray: f64 = 0.0;
    let mut g = rng(102);
    for (r, n) in [(1.0, 2), (2.5, 2), (1.0, 3), (2.5, 4)] {
        let c = ctx(r, n);
        for _ in 0..500 {
            let base = sample_event(&mut g, &c, 3.0 * r);
            let y = base.orientation_y();
            let w = spacelike_tangent(&mut g, &base, &y);
            let ray = null_ray(&base, &y + &w).map_err(|e| e.to_string())?;
            for j in 0..=40 {
                let s = -10.0 * r + 0.5 * r * j as f64;
                worst_ray = worst_ray.max(c.form_residual(ray.at(s).point()) / (r * r));
            }
        }
        // The two rulings through the horizon point (0, ±R, 0) for n = 2.
        if n == 2 {
            for sign in [1.0, -1.0] {
                let base = Event::from_coords(&[0.0, sign * r, 0.0], c).unwrap();
                let ray = null_ray(&base, Vector::new(vec![1.0, 0.0, 1.0]).unwrap())
                    .map_err(|e| e.to_string())?;
                for j in 0..=40 {
                    let s = -10.0 * r + 0.5 * r * j as f64;
                    worst_ray = worst_ray.max(c.form_residual(ray.at(s).point()) / (r * r));
                    if !past_horizon(&c).contains(&ray.at(s)).unwrap() {
                        return Err(format!(
                            "ruling through (0, {sign}R, 0) leaves the horizon at s = {s}"
                        ));
                    }
                }
            }
        }
    }
    ensure(
        worst_ruling <= 1e-9 && worst_ray <= 1e-9,
        format!("ruling distance / R = {worst_ruling:.2e}, ray residual / R^2 = {worst_ray:.2e} (tol 1e-9)"),
    )
}

fn run_fig2(out: &Path, r: f64) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_horizons"))
        .args([
            "fig2",
            "--radius",
            &r.to_string(),
            "--t-max",
            "3",
            "--resolution",
            "32",
            "--format",
            "both",
        ])
        .args(["--seed", "7", "--out"])
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    if !status.status.success() {
        return Err(format!("horizons exited with {}", status.status));
    }
    Ok(())
}

fn figure_outputs() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let r = 2.5;
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    run_fig2(&a, r)?;
    run_fig2(&b, r)?;
    let read = |p: &Path| std::fs::read(p).map_err(|e| e.to_string());
    let (svg, csv) = (
        read(&a.with_extension("svg"))?,
        read(&a.with_extension("csv"))?,
    );
    if svg != read(&b.with_extension("svg"))? || csv != read(&b.with_extension("csv"))? {
        return Err("output differs between identical runs".into());
    }
    let csv = String::from_utf8(csv).map_err(|e| e.to_string())?;
    let svg = String::from_utf8(svg).map_err(|e| e.to_string())?;
    if csv.contains('\r') {
        return Err("CSV contains CR line endings".into());
    }
    let mut lines = csv.lines().filter(|l| !l.starts_with('#'));
    if lines.next() != Some("label,polyline,vertex,x1,x2,t,u,v") {
        return Err("unexpected CSV header".into());
    }
    let mut worst: f64 = 0.0;
    let mut horizon_ids = std::collections::BTreeSet::new();
    let mut markers = Vec::new();
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let x: Vec<f64> = f[3..6].iter().map(|s| s.parse().unwrap()).collect();
        worst = worst.max((x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - r * r).abs() / (r * r));
        match f[0] {
            "horizon-past" => {
                horizon_ids.insert(f[1].to_string());
            }
            "throat-intersection" => markers.push(x),
            _ => {}
        }
        rows += 1;
    }
    let svg_paths = svg.matches("<path class=\"horizon-past\"").count();
    let mut expected = vec![(0.0, r, 0.0), (0.0, -r, 0.0)];
    let markers_ok = markers.len() == 2
        && markers.iter().all(|m| {
            let hit = expected.iter().position(|e| {
                (m[0] - e.0).abs() <= 1e-9 * r
                    && (m[1] - e.1).abs() <= 1e-9 * r
                    && (m[2] - e.2).abs() <= 1e-9 * r
            });
            hit.map(|i| expected.remove(i)).is_some()
        });
    let svg_markers = svg.matches("<circle class=\"throat-intersection\"").count();
    ensure(
        worst <= 1e-8 && horizon_ids.len() == 2 && svg_paths == 2 && markers_ok && svg_markers == 2,
        format!(
            "{rows} CSV rows, max form residual / R^2 = {worst:.2e} (tol 1e-8), {} horizon-past polylines, \
             {svg_paths} horizon-past SVG paths, throat markers at (0, +-R, 0): {markers_ok}",
            horizon_ids.len()
        ),
    )
}

/// Prints the PASS/FAIL line and fails the test on FAIL.
fn report(id: u32, name: &str, outcome: Outcome) {
    match outcome {
        Ok(d) => println!("PASS {id:>2} {name}: {d}"),
        Err(d) => {
            println!("FAIL {id:>2} {name}: {d}");
            panic!("criterion {id} ({name}) failed: {d}");
        }
    }
}

macro_rules! criteria {
    ($($id:literal $test:ident $name:literal $check:ident;)*) => {
        $(
            #[test]
            fn $test() {
                report($id, $name, $check());
            }
        )*
    };
}

criteria! {
    1 criterion_01_corollary_constant "corollary constant" corollary_constant;
    2 criterion_02_horizon_characterization "horizon characterization" horizon_characterization;
    3 criterion_03_oracle_equivalence "oracle equivalence" oracle_equivalence;
    4 criterion_04_boost_group_exactness "boost-group exactness" boost_group;
    5 criterion_05_cone_push_forward "cone push-forward" cone_push_forward;
    6 criterion_06_nesting "nesting" nesting;
    7 criterion_07_limit_to_horizon "limit to horizon" limit_to_horizon;
    8 criterion_08_central_symmetry_identities "central-symmetry identities" central_symmetry_identities;
    9 criterion_09_antipodal_gluing "antipodal gluing" antipodal_gluing;
    10 criterion_10_null_rulings "null rulings" null_rulings;
    11 criterion_11_figure_outputs "figure outputs" figure_outputs;
}
