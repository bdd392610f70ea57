//! Interaction of a contact discontinuity with a stationary wave.
//!
//! Initially `U-` (area `a0`) and `Um` (area `a0`) are joined by a contact
//! and `Um`, `U+` (area `a1`) by a stationary wave. When the contact reaches
//! the area jump a new Riemann problem `(U-, a0 | U+, a1)` is posed; its
//! solution pattern depends on the regimes of `U-` and `Um` and on the
//! ordering of their densities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gas::{GasConstants, GasState, Region};
use crate::fvm::ThreeStateInit;
use crate::riemann::{sample, solve_duct_with, Construction, WaveFan};
use crate::stationary::{admissible_stationary, stationary_invariants};

/// Default relative tolerance for [`validate_input`].
pub const VALIDATION_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InteractionInput {
    pub u_minus: GasState,
    pub u_m: GasState,
    pub u_plus: GasState,
    pub a0: f64,
    pub a1: f64,
}

impl InteractionInput {
    /// Builds the input, stamping `a0` on `U-` and `Um` and `a1` on `U+`.
    pub fn new(u_minus: GasState, u_m: GasState, u_plus: GasState, a0: f64, a1: f64) -> Self {
        Self {
            u_minus: u_minus.with_area(a0),
            u_m: u_m.with_area(a0),
            u_plus: u_plus.with_area(a1),
            a0,
            a1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InteractionCase {
    /// Both supersonic, `ρ- > ρm`: `S0 R1 J R3`.
    Case1,
    /// As `Case1` with the rarefactions separated by vacuum.
    Case1Vacuum,
    /// Both supersonic, `ρ- < ρm`: `S0 S1 J S3`.
    Case2,
    /// `Um` supersonic, `U-` subsonic.
    Transonic2,
    /// Both subsonic, `ρ- > ρm`: `R1 S0 J S3`.
    Case3,
    /// Both subsonic, `ρ- < ρm`: `S1 S0 J W3`.
    Case4,
    /// `Um` subsonic, `U-` supersonic; up to three solutions.
    Transonic4,
}

impl fmt::Display for InteractionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InteractionResult {
    pub case: InteractionCase,
    pub fans: Vec<WaveFan>,
    /// How each entry of `fans` was built.
    pub constructions: Vec<Construction>,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// `|u- - um| / (|um| + cm)`.
    pub contact_velocity: f64,
    /// `|p- - pm| / pm`.
    pub contact_pressure: f64,
    /// Relative mismatch of `a ρ u` between `Um` and `U+`.
    pub mass_flux: f64,
    /// Relative mismatch of `u²/2 + c²/(γ-1)`.
    pub bernoulli: f64,
    /// Relative mismatch of `κ`.
    pub kappa: f64,
    pub tol: f64,
    /// Names of stationary relations whose residual exceeds `tol`.
    pub flags: Vec<String>,
}

impl ValidationReport {
    pub fn is_flagged(&self) -> bool {
        !self.flags.is_empty()
    }
}

/// Residuals of the contact relation `U- | Um` and the stationary relation
/// `Um | U+`. Stationary mismatches are flagged; a broken contact relation is
/// an error because classification presumes it.
pub fn validate_input(inp: &InteractionInput, tol: f64, gas: GasConstants) -> Result<ValidationReport> {
    inp.u_minus.check()?;
    inp.u_m.check()?;
    inp.u_plus.check()?;
    let (um, um_) = (inp.u_m, inp.u_minus);
    let contact_velocity = (um_.u - um.u).abs() / (um.u.abs() + um.c(gas));
    let contact_pressure = (um_.p - um.p).abs() / um.p;
    if contact_velocity > tol || contact_pressure > tol {
        return Err(Error::InvalidInput(format!(
            "U- and Um are not joined by a contact: velocity residual {contact_velocity:.3e}, \
             pressure residual {contact_pressure:.3e}"
        )));
    }
    if um_.rho == um.rho {
        return Err(Error::DegenerateContact);
    }

    let i0 = stationary_invariants(um, gas);
    let i1 = stationary_invariants(inp.u_plus, gas);
    let rel = |x: f64, y: f64| (x - y).abs() / x.abs().max(f64::MIN_POSITIVE);
    let mass_flux = rel(i0[0], i1[0]);
    let bernoulli = rel(i0[1], i1[1]);
    let kappa = rel(i0[2], i1[2]);
    let flags = [("mass_flux", mass_flux), ("bernoulli", bernoulli), ("kappa", kappa)]
        .into_iter()
        .filter(|(_, r)| *r > tol)
        .map(|(n, _)| n.to_string())
        .collect();
    Ok(ValidationReport {
        contact_velocity,
        contact_pressure,
        mass_flux,
        bernoulli,
        kappa,
        tol,
        flags,
    })
}

/// `(u_R - 2c_R/(γ-1)) - (u_L + 2c_L/(γ-1))`; a vacuum opens between two
/// rarefactions iff this is non-negative.
pub fn vacuum_gap(left_edge: GasState, right_edge: GasState, gas: GasConstants) -> Result<f64> {
    left_edge.check()?;
    right_edge.check()?;
    let k = 2.0 / gas.gm1();
    Ok((right_edge.u - k * right_edge.c(gas)) - (left_edge.u + k * left_edge.c(gas)))
}

fn supersonic(region: Region) -> Result<bool> {
    match region {
        Region::D1 => Ok(true),
        Region::D2 => Ok(false),
        Region::GammaPlus | Region::Gamma0 => Err(Error::AmbiguousClassification),
        _ => Err(Error::InvalidInput(
            "interaction states must move to the right (u > 0)".into(),
        )),
    }
}

pub fn classify(inp: &InteractionInput, gas: GasConstants) -> Result<InteractionCase> {
    let m_sup = supersonic(inp.u_m.region(gas)?)?;
    let minus_sup = supersonic(inp.u_minus.region(gas)?)?;
    let denser = inp.u_minus.rho > inp.u_m.rho;
    Ok(match (m_sup, minus_sup) {
        (true, true) if denser => {
            let vacuum = admissible_stationary(inp.u_minus, inp.a1, gas)
                .and_then(|s| vacuum_gap(s, inp.u_plus, gas))
                .map(|gap| gap >= 0.0)
                .unwrap_or(false);
            if vacuum {
                InteractionCase::Case1Vacuum
            } else {
                InteractionCase::Case1
            }
        }
        (true, true) => InteractionCase::Case2,
        (true, false) => InteractionCase::Transonic2,
        (false, false) if denser => InteractionCase::Case3,
        (false, false) => InteractionCase::Case4,
        (false, true) => InteractionCase::Transonic4,
    })
}

fn constructions_for(case: InteractionCase) -> &'static [Construction] {
    match case {
        InteractionCase::Case1 | InteractionCase::Case1Vacuum | InteractionCase::Case2 => {
            &[Construction::SupersonicFirst]
        }
        InteractionCase::Case3 | InteractionCase::Case4 => &[Construction::WaveThenStationary],
        InteractionCase::Transonic2 => &[Construction::SonicAttachment],
        InteractionCase::Transonic4 => &[
            Construction::SupersonicFirst,
            Construction::WaveThenStationary,
            Construction::Resonant,
        ],
    }
}

/// Classifies the input and builds the post-interaction wave pattern(s).
pub fn resolve(inp: &InteractionInput, gas: GasConstants) -> Result<InteractionResult> {
    let report = validate_input(inp, VALIDATION_TOL, gas)?;
    let case = classify(inp, gas)?;
    let sols = solve_duct_with(inp.u_minus, inp.u_plus, inp.a1, constructions_for(case), gas)?;
    if sols.is_empty() {
        let amin = crate::stationary::a_min(inp.u_minus, gas)?;
        return Err(Error::NoSolution(format!(
            "{case}: no admissible pattern for a0={}, a1={} (a_min(U-)={amin})",
            inp.a0, inp.a1
        )));
    }
    let mut notes = Vec::new();
    if report.is_flagged() {
        notes.push(format!(
            "Um and U+ do not satisfy the stationary relations ({}; mass {:.3e}, bernoulli {:.3e}, kappa {:.3e})",
            report.flags.join(", "),
            report.mass_flux,
            report.bernoulli,
            report.kappa
        ));
    }
    if sols.len() > 1 {
        notes.push(format!("{} admissible solutions; none is preferred", sols.len()));
    }
    Ok(InteractionResult {
        case,
        constructions: sols.iter().map(|s| s.construction).collect(),
        fans: sols.into_iter().map(|s| s.fan).collect(),
        notes: notes.join("; "),
    })
}

/// Time at which the contact starting at `x1` reaches the area jump at `x2`.
pub fn arrival_time(init: &ThreeStateInit) -> Result<f64> {
    if !(init.middle.u > 0.0) {
        return Err(Error::InvalidInput("the contact never reaches the area jump (um <= 0)".into()));
    }
    Ok((init.x2 - init.x1) / init.middle.u)
}

/// Exact profile of the three-state data at time `t`.
///
/// Until the contact arrives the data translates rigidly (the `Um | U+`
/// stationary wave is taken as steady); afterwards `fan` is centred at
/// `(x2, t0)`.
pub fn exact_profile(
    init: &ThreeStateInit,
    fan: &WaveFan,
    t: f64,
    xs: &[f64],
    gas: GasConstants,
) -> Result<Vec<(f64, GasState)>> {
    let t0 = arrival_time(init)?;
    let dt = t - t0;
    Ok(xs
        .iter()
        .map(|&x| {
            let s = if dt > 0.0 {
                sample(fan, (x - init.x2) / dt, gas)
            } else if x < init.x1 + init.middle.u * t {
                init.left
            } else if x < init.x2 {
                init.middle
            } else {
                init.right
            };
            (x, s)
        })
        .collect())
}
