//! Shared strategies and independent oracles for the integration tests.
//!
//! The oracles below deliberately avoid the library's own root finders and
//! closed forms: they re-derive each quantity from the conservation laws.

#![allow(dead_code)]

pub mod checks;

use ductwave::gas::{GasConstants, GasState};
use ductwave::presets::Preset;
use ductwave::riemann::WaveFan;
use proptest::prelude::*;

pub fn gas(gamma: f64) -> GasConstants {
    GasConstants::new(gamma).expect("valid gamma")
}

pub fn st(rho: f64, u: f64, p: f64, a: f64) -> GasState {
    GasState::new(rho, u, p, a).expect("physical state")
}

pub fn gamma_strategy() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.2), Just(1.4), Just(5.0 / 3.0), Just(2.0), 1.05f64..2.9]
}

/// Physical state on unit area with `ρ, p` spread over two decades.
pub fn state_strategy() -> impl Strategy<Value = GasState> {
    (0.1f64..10.0, -5.0f64..5.0, 0.1f64..10.0).prop_map(|(rho, u, p)| st(rho, u, p, 1.0))
}

/// `(a ρ u, u²/2 + γ p / ((γ-1) ρ), p / ρ^γ)` written out from scratch.
pub fn invariants(s: &GasState, gamma: f64) -> [f64; 3] {
    [
        s.a * s.rho * s.u,
        0.5 * s.u * s.u + gamma * s.p / ((gamma - 1.0) * s.rho),
        s.p / s.rho.powf(gamma),
    ]
}

pub fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(f64::MIN_POSITIVE)
}

/// Smallest area a stationary wave from `anchor` can reach, by golden-section
/// minimisation of `a(ρ) = a0 ρ0 u0 / (ρ u(ρ))` with `u(ρ)` from Bernoulli.
pub fn golden_a_min(anchor: &GasState, gamma: f64) -> f64 {
    let [m, b, k] = invariants(anchor, gamma);
    let h = |rho: f64| gamma * k * rho.powf(gamma - 1.0) / (gamma - 1.0);
    let area = |rho: f64| {
        let u2 = 2.0 * (b - h(rho));
        if u2 <= 0.0 {
            f64::INFINITY
        } else {
            m.abs() / (rho * u2.sqrt())
        }
    };
    let rho_max = ((gamma - 1.0) * b / (gamma * k)).powf(1.0 / (gamma - 1.0));
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let (mut lo, mut hi) = (0.0, rho_max);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (area(x1), area(x2));
    while hi - lo > 1e-15 * rho_max {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = area(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = area(x2);
        }
    }
    area(0.5 * (lo + hi))
}

/// Velocity jump across a 1- or 3-wave from `s` to pressure `p`, in the
/// textbook form with `A = 2 / ((γ+1) ρ)` and `B = (γ-1)/(γ+1) p_s`.
fn pressure_function(p: f64, s: &GasState, gamma: f64) -> f64 {
    if p > s.p {
        let a = 2.0 / ((gamma + 1.0) * s.rho);
        let b = (gamma - 1.0) / (gamma + 1.0) * s.p;
        (p - s.p) * (a / (p + b)).sqrt()
    } else {
        let c = (gamma * s.p / s.rho).sqrt();
        2.0 * c / (gamma - 1.0) * ((p / s.p).powf((gamma - 1.0) / (2.0 * gamma)) - 1.0)
    }
}

/// Star pressure of the constant-area problem by plain bisection, or `None`
/// when a vacuum forms.
pub fn bisection_star_pressure(left: &GasState, right: &GasState, gamma: f64) -> Option<f64> {
    let f = |p: f64| {
        pressure_function(p, left, gamma) + pressure_function(p, right, gamma) + right.u - left.u
    };
    if f(0.0) >= 0.0 {
        return None;
    }
    let (mut lo, mut hi) = (0.0, left.p.max(right.p));
    while f(hi) < 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// `Σ (|Δρ| + |Δu| + |Δp|) dx` over the rows with `lo <= x <= hi`.
pub fn l1_error(numeric: &[(f64, GasState)], exact: &[(f64, GasState)], dx: f64, lo: f64, hi: f64) -> f64 {
    numeric
        .iter()
        .zip(exact)
        .filter(|((x, _), _)| *x >= lo && *x <= hi)
        .map(|((_, a), (_, b))| ((a.rho - b.rho).abs() + (a.u - b.u).abs() + (a.p - b.p).abs()) * dx)
        .sum()
}

/// L1 distance between the simulated preset at `cells` resolution and the
/// exact interaction solution, over `[1, 9]`.
pub fn preset_l1(preset: &Preset, cells: usize) -> f64 {
    use ductwave::interaction::{exact_profile, resolve};
    use ductwave::io::grid_rows;

    let cfg = ductwave::SimConfig { cells, ..preset.config };
    let g = cfg.gas().unwrap();
    let grid = ductwave::fvm::run(&cfg).expect("simulation runs");
    let rows = grid_rows(&grid, g).unwrap();
    let fan: WaveFan = resolve(&preset.interaction_input(), g).unwrap().fans.remove(0);
    let xs: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let exact = exact_profile(&cfg.initial, &fan, cfg.t_end, &xs, g).unwrap();
    l1_error(&rows, &exact, grid.dx, 1.0, 9.0)
}
