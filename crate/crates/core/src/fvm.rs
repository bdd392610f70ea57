//! First-order finite-volume solver for the duct equations: Rusanov fluxes on
//! the area-weighted conserved variables plus a pointwise `p a_x` source in
//! the momentum equation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gas::{ConservedCell, GasConstants, GasState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// Zero-gradient ghost cells.
    #[default]
    Transmissive,
}

/// Difference of areas used for `a_x` in cell `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceStencil {
    /// `(a[i+1] - a[i-1]) / (2 dx)`: sums to `p Δa` across a jump.
    #[default]
    Centered,
    /// `(a[i+1] - a[i]) / (2 dx)`: only half of `p Δa` reaches the momentum.
    Forward,
}

/// Piecewise-constant data: `left` on `x < x1`, `middle` on `x1 < x < x2`,
/// `right` on `x > x2`. The cross-section jumps at `x2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThreeStateInit {
    pub x1: f64,
    pub x2: f64,
    pub left: GasState,
    pub middle: GasState,
    pub right: GasState,
}

fn default_domain() -> [f64; 2] {
    [0.0, 10.0]
}
fn default_cells() -> usize {
    2000
}
fn default_cfl() -> f64 {
    0.75
}
fn default_gamma() -> f64 {
    2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    #[serde(default = "default_gamma")]
    pub gamma: f64,
    #[serde(default = "default_domain")]
    pub domain: [f64; 2],
    #[serde(default = "default_cells")]
    pub cells: usize,
    #[serde(default = "default_cfl")]
    pub cfl: f64,
    pub t_end: f64,
    #[serde(flatten)]
    pub initial: ThreeStateInit,
    #[serde(default)]
    pub boundary: Boundary,
    #[serde(default)]
    pub source: SourceStencil,
}

impl SimConfig {
    pub fn gas(&self) -> Result<GasConstants> {
        GasConstants::new(self.gamma).map_err(|e| Error::Config(format!("gamma: {e}")))
    }

    /// Checks every field; errors name the offending field.
    pub fn validate(&self) -> Result<()> {
        let bad = |field: &str, msg: String| Err(Error::Config(format!("{field}: {msg}")));
        self.gas()?;
        let [lo, hi] = self.domain;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return bad("domain", format!("need finite lo < hi, got [{lo}, {hi}]"));
        }
        if self.cells < 4 {
            return bad("cells", format!("need at least 4, got {}", self.cells));
        }
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return bad("cfl", format!("must lie in (0, 1], got {}", self.cfl));
        }
        if !(self.t_end >= 0.0 && self.t_end.is_finite()) {
            return bad("t_end", format!("must be finite and >= 0, got {}", self.t_end));
        }
        let init = &self.initial;
        if !(lo < init.x1 && init.x1 < init.x2 && init.x2 < hi) {
            return bad(
                "x1",
                format!("need domain lo < x1 < x2 < hi, got x1={}, x2={}", init.x1, init.x2),
            );
        }
        for (name, s) in [("left", init.left), ("middle", init.middle), ("right", init.right)] {
            for (field, v) in [("rho", s.rho), ("p", s.p), ("a", s.a)] {
                if !(v > 0.0 && v.is_finite()) {
                    return bad(&format!("{name}.{field}"), format!("must be positive, got {v}"));
                }
            }
            if !s.u.is_finite() {
                return bad(&format!("{name}.u"), format!("must be finite, got {}", s.u));
            }
        }
        if init.left.a != init.middle.a {
            return bad(
                "middle.a",
                format!("area may only jump at x2; left.a={} but middle.a={}", init.left.a, init.middle.a),
            );
        }
        Ok(())
    }

    pub fn dx(&self) -> f64 {
        (self.domain[1] - self.domain[0]) / self.cells as f64
    }

    /// Index of the cell interface nearest to `x`.
    pub fn interface_index(&self, x: f64) -> usize {
        ((x - self.domain[0]) / self.dx()).round().clamp(0.0, self.cells as f64) as usize
    }
}

/// Cell averages `V_i` on a uniform grid at time `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimGrid {
    pub cells: Vec<ConservedCell>,
    pub x_lo: f64,
    pub dx: f64,
    pub t: f64,
    pub steps: usize,
}

impl SimGrid {
    /// Projects the three-state data onto the grid; both state boundaries
    /// are moved to the nearest cell interface.
    pub fn initial(cfg: &SimConfig) -> Result<Self> {
        cfg.validate()?;
        let gas = cfg.gas()?;
        let i1 = cfg.interface_index(cfg.initial.x1);
        let i2 = cfg.interface_index(cfg.initial.x2);
        let cells = (0..cfg.cells)
            .map(|i| {
                let s = if i < i1 {
                    cfg.initial.left
                } else if i < i2 {
                    cfg.initial.middle
                } else {
                    cfg.initial.right
                };
                s.to_conserved(gas)
            })
            .collect();
        Ok(Self { cells, x_lo: cfg.domain[0], dx: cfg.dx(), t: 0.0, steps: 0 })
    }

    pub fn x_center(&self, i: usize) -> f64 {
        self.x_lo + (i as f64 + 0.5) * self.dx
    }

    pub fn primitives(&self, gas: GasConstants) -> Result<Vec<GasState>> {
        self.cells
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_primitive(gas).map_err(|e| with_location(e, i, self.t)))
            .collect()
    }

    /// `Σ V_i Δx` for each conserved component.
    pub fn totals(&self) -> [f64; 3] {
        let mut t = [0.0; 3];
        for c in &self.cells {
            t[0] += c.m * self.dx;
            t[1] += c.q * self.dx;
            t[2] += c.en * self.dx;
        }
        t
    }
}

fn with_location(e: Error, index: usize, time: f64) -> Error {
    match e {
        Error::NonPhysicalCell { rho, p, .. } => Error::NonPhysicalCell {
            index: Some(index),
            time: Some(time),
            rho,
            p,
        },
        other => other,
    }
}

/// `F(V) = (aρu, a(ρu² + p), au(ρE + p))`.
pub fn physical_flux(state: GasState, gas: GasConstants) -> [f64; 3] {
    let GasState { rho, u, p, a } = state;
    let e = rho * state.total_energy(gas);
    [a * rho * u, a * (rho * u * u + p), a * u * (e + p)]
}

fn max_speed(s: &GasState, gas: GasConstants) -> f64 {
    let c = s.c(gas);
    (s.u - c).abs().max((s.u + c).abs())
}

fn rusanov_prim(l: &GasState, r: &GasState, cl: &ConservedCell, cr: &ConservedCell, gas: GasConstants) -> [f64; 3] {
    let s = max_speed(l, gas).max(max_speed(r, gas));
    let fl = physical_flux(*l, gas);
    let fr = physical_flux(*r, gas);
    let dv = [cr.m - cl.m, cr.q - cl.q, cr.en - cl.en];
    [
        0.5 * (fl[0] + fr[0] - s * dv[0]),
        0.5 * (fl[1] + fr[1] - s * dv[1]),
        0.5 * (fl[2] + fr[2] - s * dv[2]),
    ]
}

/// `½ (F_L + F_R - S (V_R - V_L))` with `S` the largest `|λ1|`, `|λ3|` of
/// the two cells.
pub fn rusanov_flux(left: ConservedCell, right: ConservedCell, gas: GasConstants) -> Result<[f64; 3]> {
    let l = left.to_primitive(gas)?;
    let r = right.to_primitive(gas)?;
    Ok(rusanov_prim(&l, &r, &left, &right, gas))
}

/// Momentum increment `dt · p · (a_right - a_left) / (2 dx)`.
pub fn source_increment(p_cell: f64, a_left: f64, a_right: f64, dx: f64, dt: f64) -> f64 {
    dt * p_cell * (a_right - a_left) / (2.0 * dx)
}

/// Stable step `cfl · dx / max(|u| + c)`, clipped so as not to pass `t_end`.
pub fn time_step(grid: &SimGrid, cfg: &SimConfig, gas: GasConstants) -> Result<f64> {
    let prims = grid.primitives(gas)?;
    Ok(stable_dt(&prims, grid, cfg, gas))
}

fn stable_dt(prims: &[GasState], grid: &SimGrid, cfg: &SimConfig, gas: GasConstants) -> f64 {
    let smax = prims.iter().map(|s| max_speed(s, gas)).fold(0.0, f64::max);
    let dt = cfg.cfl * grid.dx / smax;
    dt.min((cfg.t_end - grid.t).max(0.0))
}

/// One forward-Euler update. The cross-section never changes.
pub fn step(grid: &SimGrid, cfg: &SimConfig, gas: GasConstants) -> Result<SimGrid> {
    let prims = grid.primitives(gas)?;
    let dt = stable_dt(&prims, grid, cfg, gas);
    advance(grid, &prims, cfg, gas, dt)
}

fn advance(grid: &SimGrid, prims: &[GasState], cfg: &SimConfig, gas: GasConstants, dt: f64) -> Result<SimGrid> {
    let n = grid.cells.len();
    let lam = dt / grid.dx;
    // interface k sits between cells k-1 and k; ghosts copy the edge cells
    let cell = |i: isize| -> usize { i.clamp(0, n as isize - 1) as usize };
    let fluxes: Vec<[f64; 3]> = (0..=n as isize)
        .map(|k| {
            let (l, r) = (cell(k - 1), cell(k));
            rusanov_prim(&prims[l], &prims[r], &grid.cells[l], &grid.cells[r], gas)
        })
        .collect();

    let t_new = grid.t + dt;
    let mut cells = Vec::with_capacity(n);
    for i in 0..n {
        let c = grid.cells[i];
        let (fl, fr) = (fluxes[i], fluxes[i + 1]);
        let a_hi = grid.cells[cell(i as isize + 1)].a;
        let a_lo = match cfg.source {
            SourceStencil::Centered => grid.cells[cell(i as isize - 1)].a,
            SourceStencil::Forward => c.a,
        };
        let next = ConservedCell {
            m: c.m - lam * (fr[0] - fl[0]),
            q: c.q - lam * (fr[1] - fl[1]) + source_increment(prims[i].p, a_lo, a_hi, grid.dx, dt),
            en: c.en - lam * (fr[2] - fl[2]),
            a: c.a,
        };
        next.to_primitive(gas).map_err(|e| with_location(e, i, t_new))?;
        cells.push(next);
    }
    Ok(SimGrid { cells, x_lo: grid.x_lo, dx: grid.dx, t: t_new, steps: grid.steps + 1 })
}

/// Advances from `grid` to `cfg.t_end`.
pub fn run_from(mut grid: SimGrid, cfg: &SimConfig, gas: GasConstants) -> Result<SimGrid> {
    while grid.t < cfg.t_end {
        let prims = grid.primitives(gas)?;
        let dt = stable_dt(&prims, &grid, cfg, gas);
        if dt <= 0.0 {
            break;
        }
        grid = advance(&grid, &prims, cfg, gas, dt)?;
        // absorb round-off so the last step lands exactly on t_end
        if cfg.t_end - grid.t <= 1e-14 * cfg.t_end.max(1.0) {
            grid.t = cfg.t_end;
        }
    }
    Ok(grid)
}

pub fn run(cfg: &SimConfig) -> Result<SimGrid> {
    let gas = cfg.gas()?;
    run_from(SimGrid::initial(cfg)?, cfg, gas)
}
