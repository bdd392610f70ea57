//! JSON configuration and CSV profile output.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::fvm::{SimConfig, SimGrid};
use crate::gas::{GasConstants, GasState};
use crate::riemann::{sample, WaveFan};

pub const CSV_HEADER: &str = "x,a,rho,u,p,kappa,mach";

/// Parses a simulation config from JSON text and validates it.
///
/// Optional fields: `gamma` (2), `domain` ([0, 10]), `cells` (2000),
/// `cfl` (0.75), `boundary`, `source`.
pub fn parse_config(text: &str) -> Result<SimConfig> {
    let cfg: SimConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

pub fn load_config(path: impl AsRef<Path>) -> Result<SimConfig> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

pub fn config_to_json(cfg: &SimConfig) -> String {
    serde_json::to_string_pretty(cfg).expect("config serializes")
}

fn write_row<W: Write>(w: &mut W, x: f64, s: &GasState, gas: GasConstants) -> std::io::Result<()> {
    // a vacuum has no entropy or Mach number; both are written as 0
    let (kappa, mach) = if s.is_vacuum() { (0.0, 0.0) } else { (s.kap(gas), s.u / s.c(gas)) };
    writeln!(
        w,
        "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
        x, s.a, s.rho, s.u, s.p, kappa, mach
    )
}

/// Writes `(x, state)` rows under [`CSV_HEADER`] with 17 significant digits.
pub fn write_profile<W: Write>(w: &mut W, rows: &[(f64, GasState)], gas: GasConstants) -> Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for (x, s) in rows {
        write_row(w, *x, s, gas)?;
    }
    w.flush()?;
    Ok(())
}

pub fn grid_rows(grid: &SimGrid, gas: GasConstants) -> Result<Vec<(f64, GasState)>> {
    Ok(grid
        .primitives(gas)?
        .into_iter()
        .enumerate()
        .map(|(i, s)| (grid.x_center(i), s))
        .collect())
}

/// The exact solution `x -> fan((x - x0) / t)` at the points `xs`.
pub fn fan_rows(fan: &WaveFan, x0: f64, t: f64, xs: &[f64], gas: GasConstants) -> Vec<(f64, GasState)> {
    xs.iter()
        .map(|&x| {
            let xi = if t > 0.0 { (x - x0) / t } else if x < x0 { f64::NEG_INFINITY } else { f64::INFINITY };
            (x, sample(fan, xi, gas))
        })
        .collect()
}

pub fn write_grid_csv(path: impl AsRef<Path>, grid: &SimGrid, gas: GasConstants) -> Result<()> {
    write_rows_csv(path, &grid_rows(grid, gas)?, gas)
}

pub fn write_rows_csv(path: impl AsRef<Path>, rows: &[(f64, GasState)], gas: GasConstants) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    write_profile(&mut w, rows, gas)
}

/// One parsed CSV row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    pub x: f64,
    pub a: f64,
    pub rho: f64,
    pub u: f64,
    pub p: f64,
    pub kappa: f64,
    pub mach: f64,
}

/// Reads a profile written by [`write_profile`].
pub fn read_profile(text: &str) -> Result<Vec<ProfileRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == CSV_HEADER => {}
        other => {
            return Err(Error::InvalidInput(format!(
                "expected header `{CSV_HEADER}`, found {other:?}"
            )))
        }
    }
    lines
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, line)| {
            let v: Vec<f64> = line
                .split(',')
                .map(|f| f.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::InvalidInput(format!("row {}: {e}", n + 1)))?;
            if v.len() != 7 {
                return Err(Error::InvalidInput(format!("row {}: expected 7 fields, got {}", n + 1, v.len())));
            }
            Ok(ProfileRow { x: v[0], a: v[1], rho: v[2], u: v[3], p: v[4], kappa: v[5], mach: v[6] })
        })
        .collect()
}
