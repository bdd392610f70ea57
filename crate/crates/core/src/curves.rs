//! Elementary wave curves in the `(u, p)` plane.
//!
//! Rarefaction and shock curves are parameterized by pressure and oriented
//! with the anchor as the *left* state of the wave: `R1`/`S1` reach the
//! right-hand state of a backward wave, `R3`/`S3` the right-hand state of a
//! forward wave. The composite [`w1`] and [`w3`] curves used by the Riemann
//! solvers are two-sided; [`w3`] is anchored at the state on the *right* of
//! the forward wave, which is how the star region is closed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gas::{GasConstants, GasState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WaveFamily {
    R1,
    S1,
    J,
    S0,
    R3,
    S3,
}

impl WaveFamily {
    pub fn label(self) -> &'static str {
        match self {
            WaveFamily::R1 => "R1",
            WaveFamily::S1 => "S1",
            WaveFamily::J => "J",
            WaveFamily::S0 => "S0",
            WaveFamily::R3 => "R3",
            WaveFamily::S3 => "S3",
        }
    }

    /// Characteristic field: 1, 2 or 3; the stationary wave belongs to field 4.
    pub fn field(self) -> u8 {
        match self {
            WaveFamily::R1 | WaveFamily::S1 => 1,
            WaveFamily::J => 2,
            WaveFamily::R3 | WaveFamily::S3 => 3,
            WaveFamily::S0 => 4,
        }
    }

    pub fn is_rarefaction(self) -> bool {
        matches!(self, WaveFamily::R1 | WaveFamily::R3)
    }

    pub fn is_shock(self) -> bool {
        matches!(self, WaveFamily::S1 | WaveFamily::S3)
    }

    /// Same field, opposite direction: `R1 <-> R3`, `S1 <-> S3`.
    pub fn mirrored(self) -> Self {
        match self {
            WaveFamily::R1 => WaveFamily::R3,
            WaveFamily::R3 => WaveFamily::R1,
            WaveFamily::S1 => WaveFamily::S3,
            WaveFamily::S3 => WaveFamily::S1,
            other => other,
        }
    }
}

impl fmt::Display for WaveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A state on the curve of `family` through `anchor`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub state: GasState,
    pub family: WaveFamily,
    pub anchor: GasState,
}

impl CurvePoint {
    pub fn new(p: f64, anchor: GasState, family: WaveFamily, gas: GasConstants) -> Result<Self> {
        let state = match family {
            WaveFamily::R1 | WaveFamily::R3 => rarefaction_state(p, anchor, family, gas)?,
            WaveFamily::S1 | WaveFamily::S3 => shock_state(p, anchor, family, gas)?,
            _ => {
                return Err(Error::Domain(format!(
                    "{family} curves are not parameterized by pressure"
                )))
            }
        };
        Ok(Self { state, family, anchor })
    }

    /// Largest scaled residual of the relations that define the curve.
    pub fn residual(&self, gas: GasConstants) -> f64 {
        let (s, a) = (self.state, self.anchor);
        match self.family {
            WaveFamily::R1 | WaveFamily::R3 => {
                let k = 2.0 / gas.gm1();
                let inv = |st: &GasState| match self.family {
                    WaveFamily::R1 => st.u + k * st.c(gas),
                    _ => st.u - k * st.c(gas),
                };
                let scale = a.u.abs() + k * a.c(gas);
                let r_inv = (inv(&s) - inv(&a)).abs() / scale;
                let r_kap = (s.kap(gas) / a.kap(gas) - 1.0).abs();
                r_inv.max(r_kap)
            }
            WaveFamily::S1 | WaveFamily::S3 => match shock_speed(a, s, self.family) {
                Ok(sigma) => rankine_hugoniot_residual(a, s, sigma, gas)
                    .into_iter()
                    .fold(0.0, f64::max),
                Err(_) => 0.0,
            },
            WaveFamily::J => {
                let scale = a.u.abs() + a.c(gas);
                ((s.u - a.u).abs() / scale).max((s.p / a.p - 1.0).abs())
            }
            WaveFamily::S0 => crate::stationary::jump_residual(a, s, gas),
        }
    }
}

/// `∫ c/ρ dp` from `p0` to `p` along the isentrope of `anchor`.
fn isentrope_integral(p: f64, anchor: &GasState, gas: GasConstants) -> f64 {
    let z = gas.z();
    2.0 * anchor.c(gas) / gas.gm1() * ((p / anchor.p).powf(z) - 1.0)
}

fn check_pressure(p: f64) -> Result<()> {
    if !(p >= 0.0 && p.is_finite()) {
        return Err(Error::Domain(format!("pressure must be finite and >= 0, got {p}")));
    }
    Ok(())
}

/// Velocity on the rarefaction curve of `family` through `anchor` at pressure `p`.
///
/// `R1` is defined for `p <= p_anchor`, `R3` for `p >= p_anchor`. At `p = 0`
/// `R1` returns the vacuum edge speed `u0 + 2 c0 / (γ - 1)`.
pub fn rarefaction_u(p: f64, anchor: GasState, family: WaveFamily, gas: GasConstants) -> Result<f64> {
    anchor.check()?;
    check_pressure(p)?;
    match family {
        WaveFamily::R1 if p <= anchor.p => Ok(anchor.u - isentrope_integral(p, &anchor, gas)),
        WaveFamily::R3 if p >= anchor.p => Ok(anchor.u + isentrope_integral(p, &anchor, gas)),
        WaveFamily::R1 | WaveFamily::R3 => Err(Error::Domain(format!(
            "{family} from p0={} cannot reach p={p}",
            anchor.p
        ))),
        _ => Err(Error::Domain(format!("{family} is not a rarefaction"))),
    }
}

/// Full state on a rarefaction curve; density follows the anchor isentrope.
pub fn rarefaction_state(p: f64, anchor: GasState, family: WaveFamily, gas: GasConstants) -> Result<GasState> {
    let u = rarefaction_u(p, anchor, family, gas)?;
    if p == 0.0 {
        return Ok(GasState::vacuum(u, anchor.a));
    }
    let rho = anchor.rho * (p / anchor.p).powf(1.0 / gas.gamma());
    Ok(GasState { rho, u, p, a: anchor.a })
}

/// Hugoniot density `ρ` reached from `anchor` at pressure `p`.
fn hugoniot_rho(p: f64, anchor: &GasState, gas: GasConstants) -> f64 {
    let m2 = gas.mu2();
    anchor.rho * (p + m2 * anchor.p) / (m2 * p + anchor.p)
}

/// `(p - p0) sqrt((1 - μ²) τ0 / (p + μ² p0))`.
fn hugoniot_velocity_jump(p: f64, anchor: &GasState, gas: GasConstants) -> f64 {
    let m2 = gas.mu2();
    (p - anchor.p) * ((1.0 - m2) * anchor.tau() / (p + m2 * anchor.p)).sqrt()
}

/// Right-hand state of a shock of `family` from `anchor` at pressure `p`.
/// `S1` needs `p >= p_anchor`, `S3` needs `p <= p_anchor`.
pub fn shock_state(p: f64, anchor: GasState, family: WaveFamily, gas: GasConstants) -> Result<GasState> {
    anchor.check()?;
    check_pressure(p)?;
    let u = match family {
        WaveFamily::S1 if p >= anchor.p => anchor.u - hugoniot_velocity_jump(p, &anchor, gas),
        WaveFamily::S3 if p <= anchor.p && p > 0.0 => {
            anchor.u + hugoniot_velocity_jump(p, &anchor, gas)
        }
        WaveFamily::S1 | WaveFamily::S3 => {
            return Err(Error::Domain(format!(
                "{family} from p0={} cannot reach p={p}",
                anchor.p
            )))
        }
        _ => return Err(Error::Domain(format!("{family} is not a shock"))),
    };
    Ok(GasState {
        rho: hugoniot_rho(p, &anchor, gas),
        u,
        p,
        a: anchor.a,
    })
}

/// Shock speed with `left` as the anchor: `σ = u_l ∓ sqrt(ρ_r [p] / (ρ_l [ρ]))`,
/// minus for `S1`, plus for `S3`.
///
/// This is the form that follows from the mass relation
/// `ρ_l (u_l - σ) = ρ_r (u_r - σ)`; it reduces to `sqrt(ρ_r ρ_l [p]/[ρ])`
/// when `ρ_l = 1`.
pub fn shock_speed(left: GasState, right: GasState, family: WaveFamily) -> Result<f64> {
    let drho = right.rho - left.rho;
    if drho == 0.0 {
        return Err(Error::ContactNotShock);
    }
    let arg = right.rho * (right.p - left.p) / (left.rho * drho);
    if !(arg >= 0.0) {
        return Err(Error::Domain(format!(
            "states are not connected by a shock: rho [p]/(rho0 [rho]) = {arg}"
        )));
    }
    match family {
        WaveFamily::S1 => Ok(left.u - arg.sqrt()),
        WaveFamily::S3 => Ok(left.u + arg.sqrt()),
        _ => Err(Error::Domain(format!("{family} is not a shock"))),
    }
}

/// Scaled residuals of the three Rankine–Hugoniot relations for a
/// discontinuity of speed `sigma` between `left` and `right`.
pub fn rankine_hugoniot_residual(left: GasState, right: GasState, sigma: f64, gas: GasConstants) -> [f64; 3] {
    let cons = |s: &GasState| {
        let e = s.rho * s.total_energy(gas);
        [s.rho, s.rho * s.u, e]
    };
    let flux = |s: &GasState| {
        let e = s.rho * s.total_energy(gas);
        [s.rho * s.u, s.rho * s.u * s.u + s.p, s.u * (e + s.p)]
    };
    let (ul, ur, fl, fr) = (cons(&left), cons(&right), flux(&left), flux(&right));
    let mut out = [0.0; 3];
    for k in 0..3 {
        let scale = fl[k].abs().max(fr[k].abs()) + sigma.abs() * ul[k].abs().max(ur[k].abs()) + f64::MIN_POSITIVE;
        out[k] = (-sigma * (ur[k] - ul[k]) + (fr[k] - fl[k])).abs() / scale;
    }
    out
}

/// Lax conditions `λ_i(right) < σ_i < λ_i(left)` with `anchor` on the left.
pub fn lax_admissible(anchor: GasState, state: GasState, family: WaveFamily, gas: GasConstants) -> bool {
    let idx = match family {
        WaveFamily::S1 => 0,
        WaveFamily::S3 => 2,
        _ => return false,
    };
    let (Ok(la), Ok(ls)) = (anchor.eigenvalues(gas), state.eigenvalues(gas)) else {
        return false;
    };
    match shock_speed(anchor, state, family) {
        Ok(sigma) => ls[idx] < sigma && sigma < la[idx],
        Err(_) => false,
    }
}

/// Contact discontinuity from `anchor` to density `rho_new`: `u` and `p` are kept.
pub fn contact_state(anchor: GasState, rho_new: f64) -> Result<GasState> {
    anchor.check()?;
    if !(rho_new > 0.0 && rho_new.is_finite()) {
        return Err(Error::Domain(format!("contact density must be positive, got {rho_new}")));
    }
    if rho_new == anchor.rho {
        return Err(Error::DegenerateContact);
    }
    Ok(GasState { rho: rho_new, ..anchor })
}

/// State inside a centered rarefaction fan at `ξ = x/t`, with `anchor` the
/// state on the left of the fan.
///
/// For `R1` the fan satisfies `u - c = ξ` with `u + 2c/(γ-1)` and `κ` fixed;
/// `ξ` may range from `λ1(anchor)` up to the vacuum edge. For `R3`,
/// `u + c = ξ` with `u - 2c/(γ-1)` and `κ` fixed, for `ξ >= λ3(anchor)`.
pub fn fan_state(xi: f64, anchor: GasState, family: WaveFamily, gas: GasConstants) -> Result<GasState> {
    anchor.check()?;
    let c0 = anchor.c(gas);
    let slack = 1e-12 * (anchor.u.abs() + c0);
    let head = match family {
        WaveFamily::R1 => anchor.u - c0,
        WaveFamily::R3 => anchor.u + c0,
        _ => return Err(Error::Domain(format!("{family} has no fan"))),
    };
    if xi < head - slack {
        return Err(Error::Domain(format!("xi={xi} lies left of the {family} fan head")));
    }
    fan_state_through(xi, anchor, family, gas)
        .ok_or_else(|| Error::Domain(format!("xi={xi} lies beyond the vacuum edge")))
}

/// Fan state at `ξ` on the fan of `family` passing through the non-vacuum
/// state `on_fan`, without checking which side of `on_fan` `ξ` lies on.
/// `None` beyond the vacuum edge.
pub(crate) fn fan_state_through(xi: f64, on_fan: GasState, family: WaveFamily, gas: GasConstants) -> Option<GasState> {
    let g = gas.gamma();
    let c0 = on_fan.c(gas);
    let k = 2.0 / gas.gm1();
    let c = match family {
        WaveFamily::R1 => (gas.gm1() / (g + 1.0)) * (on_fan.u + k * c0 - xi),
        _ => (gas.gm1() / (g + 1.0)) * (xi - on_fan.u + k * c0),
    };
    if c < 0.0 {
        return None;
    }
    let u = match family {
        WaveFamily::R1 => xi + c,
        _ => xi - c,
    };
    if c == 0.0 {
        return Some(GasState::vacuum(u, on_fan.a));
    }
    // c^2 = γ κ ρ^(γ-1) on the isentrope through on_fan
    let rho = on_fan.rho * (c / c0).powf(2.0 / gas.gm1());
    let p = on_fan.p * (rho / on_fan.rho).powf(g);
    Some(GasState { rho, u, p, a: on_fan.a })
}

/// Velocity change across a 1- or 3-wave from `anchor` to pressure `p`
/// (positive when `p > p_anchor`), and its derivative in `p`.
pub(crate) fn wave_jump(p: f64, anchor: &GasState, gas: GasConstants) -> (f64, f64) {
    let m2 = gas.mu2();
    if p > anchor.p {
        let a = (1.0 - m2) * anchor.tau();
        let b = m2 * anchor.p;
        let s = (a / (p + b)).sqrt();
        let f = (p - anchor.p) * s;
        let df = s * (1.0 - 0.5 * (p - anchor.p) / (p + b));
        (f, df)
    } else {
        let c0 = anchor.c(gas);
        let z = gas.z();
        let f = 2.0 * c0 / gas.gm1() * ((p / anchor.p).powf(z) - 1.0);
        let df = if p > 0.0 {
            c0 / (gas.gamma() * anchor.p) * (p / anchor.p).powf(-(gas.gamma() + 1.0) / (2.0 * gas.gamma()))
        } else {
            f64::INFINITY
        };
        (f, df)
    }
}

/// Backward wave curve: velocity of the state reached from `anchor` (left)
/// by a 1-rarefaction (`p < p_anchor`) or 1-shock (`p > p_anchor`).
pub fn w1(p: f64, anchor: GasState, gas: GasConstants) -> f64 {
    anchor.u - wave_jump(p, &anchor, gas).0
}

/// Forward wave curve: velocity of the state that `anchor` (right) is reached
/// from by a 3-rarefaction (`p < p_anchor`) or 3-shock (`p > p_anchor`).
pub fn w3(p: f64, anchor: GasState, gas: GasConstants) -> f64 {
    anchor.u + wave_jump(p, &anchor, gas).0
}

/// Density of the state at pressure `p` on either composite curve through
/// `anchor`: Hugoniot branch above `p_anchor`, isentrope below.
pub fn wave_curve_rho(p: f64, anchor: GasState, gas: GasConstants) -> f64 {
    if p > anchor.p {
        hugoniot_rho(p, &anchor, gas)
    } else {
        anchor.rho * (p / anchor.p).powf(1.0 / gas.gamma())
    }
}

pub fn w1_state(p: f64, anchor: GasState, gas: GasConstants) -> GasState {
    let u = w1(p, anchor, gas);
    if p == 0.0 {
        return GasState::vacuum(u, anchor.a);
    }
    GasState { rho: wave_curve_rho(p, anchor, gas), u, p, a: anchor.a }
}

pub fn w3_state(p: f64, anchor: GasState, gas: GasConstants) -> GasState {
    let u = w3(p, anchor, gas);
    if p == 0.0 {
        return GasState::vacuum(u, anchor.a);
    }
    GasState { rho: wave_curve_rho(p, anchor, gas), u, p, a: anchor.a }
}

/// The curve `u p^(1/γ) = u_ref p_ref^(1/γ)` through `reference`.
pub fn l_curve_u(p: f64, reference: GasState, gas: GasConstants) -> f64 {
    reference.u * (reference.p / p).powf(1.0 / gas.gamma())
}

/// `du/dp` along the l-curve at `(u, p)`: `-u / (γ p)`.
pub fn l_curve_slope(state: GasState, gas: GasConstants) -> f64 {
    -state.u / (gas.gamma() * state.p)
}

/// `du/dp` along the 1-rarefaction through `state`: `-1 / (ρ c)`.
pub fn rarefaction1_slope(state: GasState, gas: GasConstants) -> f64 {
    -1.0 / (state.rho * state.c(gas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn g2() -> GasConstants {
        GasConstants::new(2.0).unwrap()
    }

    fn st(rho: f64, u: f64, p: f64) -> GasState {
        GasState::new(rho, u, p, 1.0).unwrap()
    }

    const P_SYM: f64 = 3.350_781_059_358_212; // (7 + sqrt(41)) / 4

    #[test]
    fn closed_form_pressure() {
        assert_relative_eq!(P_SYM, (7.0 + 41f64.sqrt()) / 4.0, max_relative = 1e-15);
    }

    #[test]
    fn rarefaction_examples() {
        let g = g2();
        let anchor = st(1.0, 5.0, 5.0);
        // Riemann invariant u + 2c/(γ-1): c(p=2) on the anchor isentrope.
        let c0 = 10f64.sqrt();
        let rho2 = (2.0f64 / 5.0).sqrt();
        let c2 = (2.0 * 2.0 / rho2).sqrt();
        assert_relative_eq!(c2, 2.51487, max_relative = 1e-5);
        let expect = 5.0 + 2.0 * c0 - 2.0 * c2;
        let u = rarefaction_u(2.0, anchor, WaveFamily::R1, g).unwrap();
        assert_relative_eq!(u, expect, max_relative = 1e-14);
        assert_relative_eq!(u, 6.29482, max_relative = 1e-5);

        assert_eq!(rarefaction_u(5.0, anchor, WaveFamily::R1, g).unwrap(), 5.0);
        let edge = rarefaction_u(0.0, anchor, WaveFamily::R1, g).unwrap();
        assert_relative_eq!(edge, 5.0 + 2.0 * c0, max_relative = 1e-15);
        assert!(rarefaction_state(0.0, anchor, WaveFamily::R1, g).unwrap().is_vacuum());
    }

    #[test]
    fn rarefaction_one_sided() {
        let g = g2();
        let anchor = st(1.0, 5.0, 5.0);
        assert!(rarefaction_u(6.0, anchor, WaveFamily::R1, g).is_err());
        assert!(rarefaction_u(4.0, anchor, WaveFamily::R3, g).is_err());
        assert!(rarefaction_u(-1.0, anchor, WaveFamily::R1, g).is_err());
        assert!(rarefaction_u(1.0, anchor, WaveFamily::S1, g).is_err());
    }

    #[test]
    fn shock_example() {
        let g = g2();
        let anchor = st(1.0, 0.0, 1.0);
        let s = shock_state(P_SYM, anchor, WaveFamily::S1, g).unwrap();
        assert_relative_eq!(s.u, -1.0, max_relative = 1e-13);
        assert_relative_eq!(s.rho, 1.74032, max_relative = 1e-5);
        let sigma = shock_speed(anchor, s, WaveFamily::S1).unwrap();
        // mass relation oracle: σ = [ρu]/[ρ]
        let oracle = (s.rho * s.u - anchor.rho * anchor.u) / (s.rho - anchor.rho);
        assert_relative_eq!(sigma, oracle, max_relative = 1e-13);
        assert_relative_eq!(sigma, -2.35074, max_relative = 1e-4);
        let mass = -sigma * (s.rho - anchor.rho) + (s.rho * s.u - anchor.rho * anchor.u);
        assert!(mass.abs() < 1e-10);
        for r in rankine_hugoniot_residual(anchor, s, sigma, g) {
            assert!(r < 1e-12, "{r}");
        }
    }

    #[test]
    fn shock_endpoint_and_sides() {
        let g = g2();
        let anchor = st(1.0, 0.3, 1.0);
        let s = shock_state(1.0 + 1e-10, anchor, WaveFamily::S1, g).unwrap();
        assert!((s.u - anchor.u).abs() < 1e-9 && (s.rho - anchor.rho).abs() < 1e-9);
        assert!(shock_state(0.5, anchor, WaveFamily::S1, g).is_err());
        assert!(shock_state(1.5, anchor, WaveFamily::S3, g).is_err());
    }

    #[test]
    fn shock_curves_are_not_inverses() {
        let g = g2();
        let anchor = st(1.0, 0.0, 1.0);
        let post = shock_state(P_SYM, anchor, WaveFamily::S1, g).unwrap();
        let back = shock_state(1.0, post, WaveFamily::S3, g).unwrap();
        assert!((back.u - anchor.u).abs() > 0.5);
        assert_relative_eq!(back.u, -2.0, max_relative = 1e-12);
    }

    #[test]
    fn weak_shock_speed_tends_to_characteristic() {
        let g = g2();
        let anchor = st(1.0, 0.7, 2.0);
        let s = shock_state(2.0 * (1.0 + 1e-7), anchor, WaveFamily::S1, g).unwrap();
        let sigma = shock_speed(anchor, s, WaveFamily::S1).unwrap();
        let l1 = anchor.eigenvalues(g).unwrap()[0];
        assert!((sigma - l1).abs() < 1e-6);
    }

    #[test]
    fn contact_in_shock_speed() {
        let a = st(1.0, 0.0, 1.0);
        let b = st(1.0, 0.0, 2.0);
        assert!(matches!(shock_speed(a, b, WaveFamily::S1), Err(Error::ContactNotShock)));
    }

    #[test]
    fn lax_examples() {
        let g = g2();
        let anchor = st(1.0, 0.0, 1.0);
        let s = shock_state(P_SYM, anchor, WaveFamily::S1, g).unwrap();
        assert!(lax_admissible(anchor, s, WaveFamily::S1, g));
        let l = s.eigenvalues(g).unwrap()[0];
        assert_relative_eq!(l, -2.962, max_relative = 1e-3);
        assert!(!lax_admissible(s, anchor, WaveFamily::S1, g));
        assert!(!lax_admissible(anchor, anchor, WaveFamily::S1, g));
    }

    #[test]
    fn contact_examples() {
        let g = g2();
        let anchor = st(1.0, 5.0, 5.0);
        let j = contact_state(anchor, 2.25).unwrap();
        assert_eq!((j.rho, j.u, j.p), (2.25, 5.0, 5.0));
        let ratio = j.kappa(g).unwrap() / anchor.kappa(g).unwrap();
        assert_relative_eq!(ratio, (1.0f64 / 2.25).powi(2), max_relative = 1e-14);
        assert!(matches!(contact_state(anchor, 1.0), Err(Error::DegenerateContact)));
        assert!(contact_state(anchor, -1.0).is_err());
    }

    #[test]
    fn fan_examples() {
        let g = g2();
        let anchor = st(1.0, 5.0, 5.0);
        let head = anchor.u - anchor.c(g);
        let s = fan_state(head, anchor, WaveFamily::R1, g).unwrap();
        assert_relative_eq!(s.rho, anchor.rho, max_relative = 1e-14);
        assert_relative_eq!(s.u, anchor.u, max_relative = 1e-14);
        assert_relative_eq!(s.p, anchor.p, max_relative = 1e-14);

        let tail = rarefaction_state(2.0, anchor, WaveFamily::R1, g).unwrap();
        let s = fan_state(tail.u - tail.c(g), anchor, WaveFamily::R1, g).unwrap();
        assert_relative_eq!(s.rho, tail.rho, max_relative = 1e-12);
        assert_relative_eq!(s.u, tail.u, max_relative = 1e-12);
        assert_relative_eq!(s.p, tail.p, max_relative = 1e-12);

        let mid = fan_state(0.5 * (head + tail.u - tail.c(g)), anchor, WaveFamily::R1, g).unwrap();
        let inv = |x: &GasState| x.u + 2.0 * x.c(g);
        assert_relative_eq!(inv(&mid), inv(&anchor), max_relative = 1e-12);
        assert_relative_eq!(mid.kap(g), anchor.kap(g), max_relative = 1e-12);

        assert!(fan_state(head - 1.0, anchor, WaveFamily::R1, g).is_err());
        assert!(fan_state(inv(&anchor) + 1.0, anchor, WaveFamily::R1, g).is_err());
        assert!(fan_state(inv(&anchor), anchor, WaveFamily::R1, g).unwrap().is_vacuum());
    }

    #[test]
    fn r3_fan_matches_curve() {
        let g = g2();
        let anchor = st(0.8, -1.0, 2.0);
        let tail = rarefaction_state(3.5, anchor, WaveFamily::R3, g).unwrap();
        let s = fan_state(tail.u + tail.c(g), anchor, WaveFamily::R3, g).unwrap();
        assert_relative_eq!(s.p, tail.p, max_relative = 1e-12);
        assert_relative_eq!(s.u, tail.u, max_relative = 1e-12);
    }

    #[test]
    fn composite_curves() {
        let g = g2();
        let anchor = st(1.0, 5.0, 5.0);
        assert_eq!(w1(5.0, anchor, g), 5.0);
        assert_eq!(w3(5.0, anchor, g), 5.0);
        // w1 uses the forward-oriented branches
        assert_relative_eq!(
            w1(2.0, anchor, g),
            rarefaction_u(2.0, anchor, WaveFamily::R1, g).unwrap(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            w1(7.0, anchor, g),
            shock_state(7.0, anchor, WaveFamily::S1, g).unwrap().u,
            max_relative = 1e-15
        );
        // w3 anchored on the right: the left state of an R3 into `anchor`
        let left = w3_state(2.0, anchor, g);
        let back = rarefaction_state(5.0, left, WaveFamily::R3, g).unwrap();
        assert_relative_eq!(back.u, anchor.u, max_relative = 1e-13);
        assert_relative_eq!(back.rho, anchor.rho, max_relative = 1e-13);
    }

    #[test]
    fn w3_shock_branch_connects_to_anchor() {
        let g = g2();
        let right = st(1.0, -1.0, 1.0);
        let left = w3_state(P_SYM, right, g);
        assert_relative_eq!(left.u, 0.0, epsilon = 1e-13);
        let sigma = shock_speed(left, right, WaveFamily::S3).unwrap();
        for r in rankine_hugoniot_residual(left, right, sigma, g) {
            assert!(r < 1e-12, "{r}");
        }
        assert!(lax_admissible(left, right, WaveFamily::S3, g));
    }

    #[test]
    fn wave_jump_derivative() {
        let g = GasConstants::new(1.4).unwrap();
        let anchor = st(0.7, 1.0, 2.0);
        for p in [0.3, 1.0, 1.99, 2.01, 5.0, 40.0] {
            let h = 1e-6 * p;
            let fd = (wave_jump(p + h, &anchor, g).0 - wave_jump(p - h, &anchor, g).0) / (2.0 * h);
            assert_relative_eq!(wave_jump(p, &anchor, g).1, fd, max_relative = 1e-6);
        }
    }

    #[test]
    fn l_curve_examples() {
        let g = g2();
        let r = GasState::new(0.688168, 5.589, 2.3679, 1.3).unwrap();
        assert_eq!(l_curve_u(r.p, r, g), r.u);
        assert_relative_eq!(r.u * r.p.sqrt(), 8.6004, max_relative = 1e-4);
        let p = 3.1;
        let u = l_curve_u(p, r, g);
        assert_relative_eq!(u * p.sqrt(), r.u * r.p.sqrt(), max_relative = 1e-14);
        let h = 1e-6 * p;
        let fd = (l_curve_u(p + h, r, g) - l_curve_u(p - h, r, g)) / (2.0 * h);
        let here = GasState { u, p, ..r };
        assert_relative_eq!(fd, l_curve_slope(here, g), max_relative = 1e-8);
    }
}
