//! Antipodal identification `pr : S(R) → S(R)/{e ~ −e}`.

use rand::Rng;

use crate::causal::{future_horizon, past_horizon, HalfSpaceSet};
use crate::desitter::{Event, SpacetimeContext};
use crate::error::{Error, Result};
use crate::minkowski::EPS;
use crate::sampling::{sample_event, sample_horizon_future, sample_horizon_past};

/// A point of the quotient, stored as its sign-normalized representative.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientPoint {
    representative: Event,
}

impl QuotientPoint {
    pub fn representative(&self) -> &Event {
        &self.representative
    }
}

pub fn antipode(e: &Event) -> Event {
    Event::new_unchecked(-e.point(), *e.context())
}

/// Negates `e` iff the first coordinate with `|c| > ε·R`, scanning
/// `(x_1, …, x_n, t)`, is negative.
pub fn quotient_rep(e: &Event) -> QuotientPoint {
    let guard = EPS * e.context().radius();
    let negate = e
        .coords()
        .iter()
        .find(|c| c.abs() > guard)
        .is_some_and(|&c| c < 0.0);
    let representative = if negate { antipode(e) } else { e.clone() };
    QuotientPoint { representative }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GluingReport {
    pub samples: usize,
    pub violations: usize,
}

/// Samples events strictly inside `region` and counts those whose antipode
/// is not outside it.
pub fn injectivity_check<R: Rng + ?Sized>(
    region: &HalfSpaceSet,
    samples: usize,
    rng: &mut R,
) -> Result<GluingReport> {
    if !region.is_open() {
        return Err(Error::EqualityRegion);
    }
    let ctx = *region.context();
    let mut report = GluingReport {
        samples: 0,
        violations: 0,
    };
    let mut attempts = 0usize;
    while report.samples < samples {
        attempts += 1;
        if attempts > samples.saturating_mul(1000).max(1000) {
            return Err(Error::InvalidArgument(
                "region is too thin to sample".into(),
            ));
        }
        let e = sample_event(rng, &ctx, 4.0 * ctx.radius());
        if !region.verdict(&e)?.is_inside() {
            continue;
        }
        report.samples += 1;
        if !region.verdict(&antipode(&e))?.is_outside() {
            report.violations += 1;
        }
    }
    Ok(report)
}

/// Checks that both horizons are centrally symmetric and that the antipode
/// of a past-horizon event is on the future horizon only when `x_1 = t = 0`.
pub fn horizon_symmetry_check<R: Rng + ?Sized>(
    ctx: &SpacetimeContext,
    samples: usize,
    rng: &mut R,
) -> Result<GluingReport> {
    let past = past_horizon(ctx);
    let future = future_horizon(ctx);
    let s_bound = 4.0 * ctx.radius();
    let mut report = GluingReport {
        samples: 0,
        violations: 0,
    };
    for i in 0..samples {
        let (e, own, other) = if i % 2 == 0 {
            (sample_horizon_past(rng, ctx, s_bound), &past, &future)
        } else {
            (sample_horizon_future(rng, ctx, s_bound), &future, &past)
        };
        let m = antipode(&e);
        report.samples += 1;
        if !own.contains(&m)? {
            report.violations += 1;
            continue;
        }
        // Both equations hold only on the throat trace x_1 = t = 0.
        let on_other = other.contains(&m)?;
        let on_throat_trace = e.coords()[0].abs() <= ctx.tol() * ctx.radius()
            && e.time().abs() <= ctx.tol() * ctx.radius();
        if on_other != on_throat_trace {
            report.violations += 1;
        }
    }
    Ok(report)
}

/// The two preimages `±e` of a quotient point.
pub fn preimages(q: &QuotientPoint) -> [Event; 2] {
    let e = q.representative.clone();
    let m = antipode(&e);
    [e, m]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::causal::{antipodal_future, antipodal_past, observer_future, observer_past};
    use crate::desitter::on_hyperboloid;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx() -> SpacetimeContext {
        SpacetimeContext::new(1.0, 2).unwrap()
    }

    fn ev(c: &[f64]) -> Event {
        Event::from_coords(c, ctx()).unwrap()
    }

    #[test]
    fn antipode_examples() {
        let e = ev(&[1., 0., 0.]);
        assert_eq!(antipode(&e).coords(), &[-1., 0., 0.]);
        assert_eq!(antipode(&antipode(&e)), e);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let e = sample_event(&mut rng, &ctx(), 3.0);
            assert!(on_hyperboloid(antipode(&e).point(), &ctx()).unwrap());
        }
    }

    #[test]
    fn quotient_rep_examples() {
        assert_eq!(
            quotient_rep(&ev(&[-1., 0., 0.])).representative().coords(),
            &[1., 0., 0.]
        );
        assert_eq!(
            quotient_rep(&ev(&[0., -1., 0.])).representative().coords(),
            &[0., 1., 0.]
        );
        // Coordinates below the guard do not decide the sign.
        let e = ev(&[-1e-12, -1.0, 0.0]);
        assert_eq!(quotient_rep(&e).representative().coords()[1], 1.0);
    }

    #[test]
    fn quotient_rep_glues_antipodes_and_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10_000 {
            let e = sample_event(&mut rng, &ctx(), 5.0);
            let a = quotient_rep(&e);
            assert_eq!(a, quotient_rep(&antipode(&e)));
            assert_eq!(quotient_rep(a.representative()), a);
        }
    }

    #[test]
    fn injectivity_on_open_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = ctx();
        for region in [
            observer_past(&c),
            observer_future(&c),
            antipodal_future(&c),
            antipodal_past(&c),
        ] {
            let rep = injectivity_check(&region, 10_000, &mut rng).unwrap();
            assert_eq!(
                rep,
                GluingReport {
                    samples: 10_000,
                    violations: 0
                }
            );
        }
        assert!(matches!(
            injectivity_check(&past_horizon(&c), 10, &mut rng),
            Err(Error::EqualityRegion)
        ));
    }

    #[test]
    fn horizon_symmetry() {
        let e = ev(&[2.0, 1.0, 2.0]);
        assert!(past_horizon(&ctx()).contains(&antipode(&e)).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let rep = horizon_symmetry_check(&ctx(), 10_000, &mut rng).unwrap();
        assert_eq!(rep.violations, 0);
    }

    #[test]
    fn pr_is_two_to_one_on_horizon_and_injective_on_past() {
        let c = ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let h = sample_horizon_past(&mut rng, &c, 3.0);
            let q = quotient_rep(&h);
            let pre = preimages(&q);
            assert!(pre.iter().all(|p| past_horizon(&c).contains(p).unwrap()));
            assert_ne!(pre[0], pre[1]);
            assert!(pre.contains(&h));
        }
        let past = observer_past(&c);
        let mut members = Vec::new();
        while members.len() < 2000 {
            let e = sample_event(&mut rng, &c, 3.0);
            if past.verdict(&e).unwrap().is_inside() {
                members.push(e);
            }
        }
        for e in &members {
            let [a, b] = preimages(&quotient_rep(e));
            let other = if a == *e { b } else { a };
            assert!(!past.contains(&other).unwrap());
        }
    }
}
