//! Invariant checks shared by the property tests and the acceptance run.
//!
//! Each check takes plain sampled numbers and fails with a
//! [`TestCaseError`]; the strategies that feed them live next to them.

use ductwave::curves::{
    l_curve_slope, l_curve_u, rarefaction1_slope, rarefaction_state, shock_speed, shock_state, w1, w3,
};
use ductwave::gas::GasState;
use ductwave::riemann::{star_state, zero_speed_shock_pressure};
use ductwave::stationary::{admissible_stationary, rho_m, stationary_jump};
use ductwave::WaveFamily;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::{bisection_star_pressure, gamma_strategy, gas, golden_a_min, invariants, rel, st, state_strategy};

type Check = Result<(), TestCaseError>;

fn sound(s: &GasState, gamma: f64) -> f64 {
    (gamma * s.p / s.rho).sqrt()
}

/// Scaled mass, momentum and energy jump conditions, written out directly.
pub fn rh_residual(l: &GasState, r: &GasState, sigma: f64, gamma: f64) -> f64 {
    let e = |s: &GasState| s.p / (gamma - 1.0) + 0.5 * s.rho * s.u * s.u;
    let cons = |s: &GasState| [s.rho, s.rho * s.u, e(s)];
    let flux = |s: &GasState| [s.rho * s.u, s.rho * s.u * s.u + s.p, s.u * (e(s) + s.p)];
    let (ql, qr, fl, fr) = (cons(l), cons(r), flux(l), flux(r));
    (0..3)
        .map(|k| {
            let scale = fl[k].abs().max(fr[k].abs()) + sigma.abs() * ql[k].abs().max(qr[k].abs());
            (fr[k] - fl[k] - sigma * (qr[k] - ql[k])).abs() / scale
        })
        .fold(0.0, f64::max)
}

// ---- stationary waves ----

pub fn stationary_inputs() -> impl Strategy<Value = (f64, GasState, f64)> {
    let u = prop_oneof![-5.0f64..-0.05, 0.05f64..5.0];
    (gamma_strategy(), 0.1f64..10.0, u, 0.1f64..10.0, 1e-3f64..4.0)
        .prop_map(|(g, rho, u, p, s)| (g, st(rho, u, p, 1.0), 1.0 + s))
}

/// Both roots keep `(aρu, Bernoulli, κ)` and straddle the sonic density.
pub fn stationary_triple((gamma, anchor, factor): (f64, GasState, f64)) -> Check {
    let g = gas(gamma);
    let amin = golden_a_min(&anchor, gamma);
    let a = amin * factor;
    // targets inside the absolute coincidence band are answered with the
    // sonic state by design
    prop_assume!(a - amin > 1e-6 * anchor.a);
    let pair = stationary_jump(anchor, a, g).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let i0 = invariants(&anchor, gamma);
    for root in [pair.supersonic, pair.subsonic] {
        prop_assert_eq!(root.a, a);
        let i1 = invariants(&root, gamma);
        for k in 0..3 {
            prop_assert!(rel(i0[k], i1[k]) <= 1e-10, "invariant {} off by {:e}", k, rel(i0[k], i1[k]));
        }
        prop_assert_eq!(root.u.signum(), anchor.u.signum());
    }
    let rm = rho_m(anchor, g).unwrap();
    prop_assert!(pair.subsonic.rho > rm && rm > pair.supersonic.rho);
    prop_assert!(pair.supersonic.u.abs() >= sound(&pair.supersonic, gamma));
    prop_assert!(pair.subsonic.u.abs() <= sound(&pair.subsonic, gamma));
    Ok(())
}

pub fn contact_shift_inputs() -> impl Strategy<Value = (f64, GasState, f64, f64)> {
    (gamma_strategy(), 0.2f64..5.0, 0.1f64..5.0, 0.2f64..10.0, 0.3f64..3.0, 1e-3f64..3.0)
        .prop_map(|(g, rho, u, p, shift, s)| (g, st(rho, u, p, 1.0), shift, s))
}

/// With `u, p` fixed and the density moved along a contact, every stationary
/// root at a common target area lies on `u p^(1/γ) = const`.
pub fn contact_shifted_l_curve((gamma, anchor, shift, s): (f64, GasState, f64, f64)) -> Check {
    let g = gas(gamma);
    let moved = GasState { rho: anchor.rho * shift, ..anchor };
    let a = golden_a_min(&anchor, gamma).max(golden_a_min(&moved, gamma)).max(1e-3) * (1.0 + s);
    let base = stationary_jump(anchor, a, g).unwrap();
    let lp = |r: &GasState| r.u * r.p.powf(1.0 / gamma);
    let reference = lp(&base.supersonic);
    let shifted = stationary_jump(moved, a, g).unwrap();
    for r in [base.subsonic, shifted.supersonic, shifted.subsonic] {
        prop_assert!(rel(lp(&r), reference) <= 1e-8, "u p^(1/γ) drifts by {:e}", rel(lp(&r), reference));
    }
    Ok(())
}

pub fn supersonic_shift_inputs() -> impl Strategy<Value = (f64, GasState, f64, f64)> {
    (gamma_strategy(), 0.2f64..5.0, 1.05f64..4.0, 0.2f64..10.0, 0.3f64..3.0, 0.01f64..3.0).prop_map(
        |(g, rho, mach, p, ratio, s)| {
            let u = mach * (g * p / rho).sqrt();
            // `ratio` > 1 keeps the shifted state supersonic; below 1 it is
            // clamped to stay there too
            let ratio = ratio.max(1.0 / (mach * mach) * 1.0001);
            (g, st(rho, u, p, 1.0), ratio, 1.0 + s)
        },
    )
}

/// Supersonic contact shift into a wider duct: the downstream pressure
/// orders like the densities (`ρ- ≷ ρm ⇔ p-* ≷ p+`), in agreement with the
/// sign of `dp1/dρ0`.
pub fn supersonic_pressure_ordering((gamma, um, ratio, a1): (f64, GasState, f64, f64)) -> Check {
    let g = gas(gamma);
    let minus = GasState { rho: um.rho * ratio, ..um };
    prop_assume!((ratio - 1.0).abs() > 1e-6);
    let plus = admissible_stationary(um, a1, g).unwrap();
    let minus_star = admissible_stationary(minus, a1, g).unwrap();
    let slope = |rho0: f64, r: &GasState| {
        let c1 = sound(r, gamma);
        gamma * gamma * um.p * r.p * (rho0.powf(gamma - 1.0) - r.rho.powf(gamma - 1.0))
            / ((gamma - 1.0) * rho0.powf(gamma + 1.0) * (r.u * r.u - c1 * c1))
    };
    prop_assert!(slope(um.rho, &plus) > 0.0 && slope(minus.rho, &minus_star) > 0.0);
    if ratio > 1.0 {
        prop_assert!(minus_star.p > plus.p);
    } else {
        prop_assert!(minus_star.p < plus.p);
    }
    Ok(())
}

// ---- shocks and rarefactions ----

pub fn curve_inputs() -> impl Strategy<Value = (f64, GasState, f64)> {
    (gamma_strategy(), state_strategy(), 1.0001f64..50.0)
}

/// Both shock branches satisfy the jump conditions and Lax's inequalities,
/// and κ grows from the pre-shock to the post-shock side.
pub fn shock_admissibility((gamma, anchor, ratio): (f64, GasState, f64)) -> Check {
    let g = gas(gamma);
    let kap = |s: &GasState| s.p / s.rho.powf(gamma);

    let s1 = shock_state(anchor.p * ratio, anchor, WaveFamily::S1, g).unwrap();
    let sigma = shock_speed(anchor, s1, WaveFamily::S1).unwrap();
    prop_assert!(rh_residual(&anchor, &s1, sigma, gamma) <= 1e-10);
    prop_assert!(s1.u - sound(&s1, gamma) < sigma && sigma < anchor.u - sound(&anchor, gamma));
    prop_assert!(kap(&s1) > kap(&anchor));

    let s3 = shock_state(anchor.p / ratio, anchor, WaveFamily::S3, g).unwrap();
    let sigma = shock_speed(anchor, s3, WaveFamily::S3).unwrap();
    prop_assert!(rh_residual(&anchor, &s3, sigma, gamma) <= 1e-10);
    prop_assert!(s3.u + sound(&s3, gamma) < sigma && sigma < anchor.u + sound(&anchor, gamma));
    prop_assert!(kap(&anchor) > kap(&s3));
    Ok(())
}

/// Sign of the backward shock speed: negative from a non-supersonic anchor,
/// changing sign at the zero-speed pressure from a supersonic one.
pub fn backward_shock_speed_sign((gamma, anchor, ratio): (f64, GasState, f64)) -> Check {
    let g = gas(gamma);
    let p = anchor.p * ratio;
    let s1 = shock_state(p, anchor, WaveFamily::S1, g).unwrap();
    let sigma = shock_speed(anchor, s1, WaveFamily::S1).unwrap();
    if anchor.u <= sound(&anchor, gamma) {
        prop_assert!(sigma < 0.0);
        prop_assert!(zero_speed_shock_pressure(anchor, g).is_none());
    } else {
        let pz = zero_speed_shock_pressure(anchor, g).unwrap();
        prop_assume!(rel(p, pz) > 1e-8);
        prop_assert_eq!(sigma > 0.0, p < pz);
    }
    Ok(())
}

/// κ is constant along both rarefaction curves.
pub fn rarefaction_isentropic((gamma, anchor, ratio): (f64, GasState, f64)) -> Check {
    let g = gas(gamma);
    let kap = |s: &GasState| s.p / s.rho.powf(gamma);
    for (p, family) in [(anchor.p / ratio, WaveFamily::R1), (anchor.p * ratio, WaveFamily::R3)] {
        let s = rarefaction_state(p, anchor, family, g).unwrap();
        prop_assert!(rel(kap(&s), kap(&anchor)) <= 1e-12);
    }
    // slope gap between the 1-rarefaction and the l-curve
    let gap = rarefaction1_slope(anchor, g) - l_curve_slope(anchor, g);
    let c = sound(&anchor, gamma);
    let expect = (anchor.u - c) / (anchor.rho * c * c);
    prop_assert!((gap - expect).abs() <= 1e-12 * (1.0 / (anchor.rho * c) + gap.abs()));
    Ok(())
}

/// `w1` is decreasing and convex, `w3` increasing and concave, on a uniform
/// pressure grid spanning both branches.
pub fn wave_curve_shape((gamma, anchor, span): (f64, GasState, f64)) -> Check {
    let g = gas(gamma);
    let n = 200;
    let (lo, hi) = (anchor.p / (1.0 + span), anchor.p * (1.0 + span));
    let h = (hi - lo) / n as f64;
    let ps: Vec<f64> = (0..=n).map(|k| lo + k as f64 * h).collect();
    let scale = anchor.u.abs() + sound(&anchor, gamma);
    for (curve, sign) in [(w1 as fn(_, _, _) -> f64, 1.0), (w3, -1.0)] {
        let v: Vec<f64> = ps.iter().map(|&p| curve(p, anchor, g)).collect();
        for k in 1..n {
            prop_assert!(sign * (v[k + 1] - v[k]) < 0.0);
            let d2 = v[k + 1] - 2.0 * v[k] + v[k - 1];
            prop_assert!(sign * d2 >= -1e-12 * scale, "second difference {:e}", d2);
        }
    }
    Ok(())
}

pub fn subsonic_inputs() -> impl Strategy<Value = (f64, GasState, f64)> {
    (prop_oneof![Just(1.2), Just(1.5), Just(2.0)], 0.1f64..10.0, 0.01f64..0.99, 0.1f64..10.0, 1.001f64..1e4)
        .prop_map(|(g, rho, mach, p, ratio)| (g, st(rho, mach * (g * p / rho).sqrt(), p, 1.0), ratio))
}

/// From a subsonic anchor with `u > 0` the backward shock curve stays below
/// the l-curve through the anchor.
pub fn shock_below_l_curve((gamma, anchor, ratio): (f64, GasState, f64)) -> Check {
    let g = gas(gamma);
    let p = anchor.p * ratio;
    let s1 = shock_state(p, anchor, WaveFamily::S1, g).unwrap();
    prop_assert!(s1.u < l_curve_u(p, anchor, g));
    Ok(())
}

/// The cubic whose sign decides the shock/rarefaction slope gap: returns
/// `(g(1), g'(1))`.
pub fn slope_cubic_at_one(gamma: f64) -> (f64, f64) {
    let m = (gamma - 1.0) / (gamma + 1.0);
    let c3 = 4.0 * m - gamma * (1.0 - m);
    let c2 = 4.0 + 8.0 * m * m - 2.0 * gamma * (1.0 - m) * (1.0 + 2.0 * m);
    let c1 = 8.0 * m - gamma * (1.0 - m) * (1.0 + 2.0 * m).powi(2) + 4.0 * m.powi(3);
    let c0 = 4.0 * m * m;
    (c3 + c2 + c1 + c0, 3.0 * c3 + 2.0 * c2 + c1)
}

// ---- classical Riemann problem ----

pub fn pair_inputs() -> impl Strategy<Value = (f64, GasState, GasState)> {
    (gamma_strategy(), state_strategy(), state_strategy())
}

/// Safeguarded Newton agrees with plain bisection on the star pressure.
pub fn newton_matches_bisection((gamma, l, r): (f64, GasState, GasState)) -> Check {
    let newton = star_state(l, r, gas(gamma)).unwrap().map(|(p, _)| p);
    let bisect = bisection_star_pressure(&l, &r, gamma);
    match (newton, bisect) {
        (Some(a), Some(b)) => prop_assert!(rel(a, b) <= 1e-11, "newton {} bisection {}", a, b),
        (None, None) => {}
        (a, b) => prop_assert!(false, "vacuum disagreement: newton {:?}, bisection {:?}", a, b),
    }
    Ok(())
}
