//! Zero-speed waves across a jump in cross-section.
//!
//! A stationary wave from `U0` (area `a0`) to `U` (area `a`) keeps the mass
//! flux `a ρ u`, the Bernoulli quantity `u²/2 + c²/(γ-1)` and `κ` fixed.
//! Eliminating `u` leaves a scalar equation in `ρ` with at most two roots,
//! separated by the sonic density `ρ_m`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gas::{GasConstants, GasState, Region};
use crate::root::bisect;

/// Relative band around `a_min` treated as the sonic coincidence.
pub const COINCIDENCE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StationaryPair {
    /// Root with `|u| >= c`.
    pub supersonic: GasState,
    /// Root with `|u| <= c`.
    pub subsonic: GasState,
    pub target_a: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BranchSelector {
    Supersonic,
    Subsonic,
    /// The root in the closure of the anchor's own domain.
    FromAnchorRegion,
}

/// `(a ρ u, u²/2 + c²/(γ-1), κ)`: the quantities a stationary wave preserves.
pub fn stationary_invariants(state: GasState, gas: GasConstants) -> [f64; 3] {
    let c = state.c(gas);
    [
        state.a * state.rho * state.u,
        0.5 * state.u * state.u + c * c / gas.gm1(),
        state.kap(gas),
    ]
}

/// Largest scaled residual of the three stationary-wave relations between
/// `anchor` and `state`.
pub fn jump_residual(anchor: GasState, state: GasState, gas: GasConstants) -> f64 {
    let i0 = stationary_invariants(anchor, gas);
    let i1 = stationary_invariants(state, gas);
    let mass_scale = anchor.a * anchor.rho * (anchor.u.abs() + anchor.c(gas));
    let r_mass = (i1[0] - i0[0]).abs() / mass_scale;
    let r_bern = (i1[1] - i0[1]).abs() / i0[1];
    let r_kap = (i1[2] - i0[2]).abs() / i0[2];
    r_mass.max(r_bern).max(r_kap)
}

/// Sonic density of the stationary family through `anchor`.
pub fn rho_m(anchor: GasState, gas: GasConstants) -> Result<f64> {
    anchor.check()?;
    let g = gas.gamma();
    let k = anchor.kap(gas);
    let base = gas.gm1() / (k * g * (g + 1.0)) * anchor.u * anchor.u
        + 2.0 / (g + 1.0) * anchor.rho.powf(gas.gm1());
    Ok(base.powf(1.0 / gas.gm1()))
}

/// Smallest cross-section a stationary wave from `anchor` can reach.
/// Zero when `u = 0`: with no mass flux every area is reachable.
pub fn a_min(anchor: GasState, gas: GasConstants) -> Result<f64> {
    let rm = rho_m(anchor, gas)?;
    let g = gas.gamma();
    let k = anchor.kap(gas);
    Ok(anchor.a * anchor.rho * anchor.u.abs() / ((k * g).sqrt() * rm.powf(0.5 * (g + 1.0))))
}

struct Family {
    m: f64,
    k: f64,
    bern: f64,
    a: f64,
    g: f64,
    gm1: f64,
}

impl Family {
    fn f(&self, rho: f64) -> f64 {
        let v = self.m / (self.a * rho);
        0.5 * v * v + self.g * self.k * rho.powf(self.gm1) / self.gm1 - self.bern
    }

    fn df(&self, rho: f64) -> f64 {
        let aa = self.a * self.a;
        -self.m * self.m / (aa * rho * rho * rho) + self.g * self.k * rho.powf(self.gm1 - 1.0)
    }

    fn solve(&self, lo: f64, hi: f64) -> f64 {
        let mut r = bisect(|x| Some(self.f(x)), lo, hi, 1e-13).unwrap_or(0.5 * (lo + hi));
        for _ in 0..2 {
            let d = self.df(r);
            if d == 0.0 {
                break;
            }
            let next = r - self.f(r) / d;
            if next > lo.min(hi) && next < lo.max(hi) && self.f(next).abs() <= self.f(r).abs() {
                r = next;
            }
        }
        r
    }

    fn state(&self, rho: f64) -> GasState {
        GasState {
            rho,
            u: self.m / (self.a * rho),
            p: self.k * rho.powf(self.g),
            a: self.a,
        }
    }
}

/// Both roots of the stationary-wave system from `anchor` to `a_target`.
///
/// Within the coincidence band around `a_min` the sonic root is reported on
/// both branches. For `a_target == anchor.a` the root on the anchor's own
/// branch is the anchor itself.
pub fn stationary_jump(anchor: GasState, a_target: f64, gas: GasConstants) -> Result<StationaryPair> {
    anchor.check()?;
    if !(a_target > 0.0 && a_target.is_finite()) {
        return Err(Error::Domain(format!("target cross-section must be positive, got {a_target}")));
    }
    if anchor.u == 0.0 {
        let s = anchor.with_area(a_target);
        return Ok(StationaryPair { supersonic: s, subsonic: s, target_a: a_target });
    }

    let amin = a_min(anchor, gas)?;
    let band = COINCIDENCE_TOL * anchor.a;
    if a_target < amin - band {
        return Err(Error::NoStationarySolution { a_target, a_min: amin });
    }

    let g = gas.gamma();
    let inv = stationary_invariants(anchor, gas);
    let fam = Family { m: inv[0], k: inv[2], bern: inv[1], a: a_target, g, gm1: gas.gm1() };
    let rm = rho_m(anchor, gas)?;

    let (sup, sub) = if (a_target - amin).abs() <= band || fam.f(rm) >= 0.0 {
        (rm, rm)
    } else {
        let lo = fam.m.abs() / (a_target * (2.0 * fam.bern).sqrt());
        let hi = (gas.gm1() * fam.bern / (g * fam.k)).powf(1.0 / gas.gm1());
        (fam.solve(lo, rm), fam.solve(rm, hi))
    };
    let mut pair = StationaryPair {
        supersonic: fam.state(sup),
        subsonic: fam.state(sub),
        target_a: a_target,
    };
    if a_target == anchor.a {
        let c = anchor.c(gas);
        if anchor.u.abs() >= c {
            pair.supersonic = anchor;
        }
        if anchor.u.abs() <= c {
            pair.subsonic = anchor;
        }
    }
    Ok(pair)
}

/// The root chosen by `selector`.
pub fn stationary_branch(
    anchor: GasState,
    a_target: f64,
    selector: BranchSelector,
    gas: GasConstants,
) -> Result<GasState> {
    let pair = stationary_jump(anchor, a_target, gas)?;
    match selector {
        BranchSelector::Supersonic => Ok(pair.supersonic),
        BranchSelector::Subsonic => Ok(pair.subsonic),
        BranchSelector::FromAnchorRegion => pick_by_region(anchor, pair, gas),
    }
}

fn pick_by_region(anchor: GasState, pair: StationaryPair, gas: GasConstants) -> Result<GasState> {
    match anchor.region(gas)? {
        Region::D1 | Region::D4 => Ok(pair.supersonic),
        Region::D2 | Region::D3 | Region::Gamma0 => Ok(pair.subsonic),
        Region::GammaPlus | Region::GammaMinus => {
            let coincident = (pair.supersonic.rho - pair.subsonic.rho).abs()
                <= 1e-9 * pair.subsonic.rho;
            if coincident {
                Ok(pair.subsonic)
            } else {
                Err(Error::AmbiguousBranch)
            }
        }
    }
}

/// The stationary-wave state that satisfies the global entropy condition:
/// it stays in the closure of the anchor's domain.
pub fn admissible_stationary(anchor: GasState, a_target: f64, gas: GasConstants) -> Result<GasState> {
    stationary_branch(anchor, a_target, BranchSelector::FromAnchorRegion, gas)
}
