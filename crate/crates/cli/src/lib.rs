//! Argument parsing and command execution for the `ductwave` binary.
//!
//! [`parse_args`] turns argv into a [`RunSpec`]; [`execute`] runs it and
//! returns a [`Report`] holding the summary lines and, for profile-producing
//! modes, the CSV rows.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use ductwave::gas::{GasConstants, GasState};
use ductwave::interaction::{exact_profile, resolve, validate_input, VALIDATION_TOL};
use ductwave::io::{fan_rows, grid_rows, load_config, write_profile};
use ductwave::presets::{interaction_input, preset_by_name};
use ductwave::riemann::solve_duct;
use ductwave::stationary::{a_min, admissible_stationary, rho_m, stationary_jump};
use ductwave::{fvm, SimConfig};

const PRESETS: [&str; 7] = ["test1", "test2", "test3", "test4", "test5", "test6", "test7"];

#[derive(Debug, Parser)]
#[command(name = "ductwave", version, about = "Nonisentropic flow in a duct with a jump in cross-section")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the finite-volume scheme and write the final profile.
    Simulate(CaseArgs),
    /// Solve a duct Riemann problem and sample its exact solution.
    Riemann(RiemannArgs),
    /// Resolve a contact/stationary-wave interaction and write the exact profile at t_end.
    Interact(CaseArgs),
    /// Both stationary-wave states reachable from a state at a new cross-section.
    Stationary(StationaryArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["preset", "config"])))]
struct CaseArgs {
    /// Built-in experiment.
    #[arg(long, value_parser = PRESETS)]
    preset: Option<String>,
    /// JSON configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    cells: Option<usize>,
    #[arg(long)]
    cfl: Option<f64>,
    #[arg(long)]
    tend: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RiemannArgs {
    /// Left state as `rho,u,p,a`.
    #[arg(long, value_parser = parse_state, allow_hyphen_values = true)]
    left: GasState,
    /// Right state as `rho,u,p,a`.
    #[arg(long, value_parser = parse_state, allow_hyphen_values = true)]
    right: GasState,
    #[arg(long, default_value_t = 2.0)]
    gamma: f64,
    /// Sampling time.
    #[arg(long, default_value_t = 0.1)]
    tend: f64,
    /// Number of sample points.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Sampled interval `lo,hi`; the initial discontinuity sits at x = 0.
    #[arg(long, value_parser = parse_pair, default_value = "-1,1", allow_hyphen_values = true)]
    domain: (f64, f64),
    /// Which solution to sample when several are admissible.
    #[arg(long, default_value_t = 0)]
    solution: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct StationaryArgs {
    /// Upstream state as `rho,u,p,a`.
    #[arg(long, value_parser = parse_state, allow_hyphen_values = true)]
    state: GasState,
    /// Target cross-section.
    #[arg(long)]
    area: f64,
    #[arg(long, default_value_t = 2.0)]
    gamma: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_numbers(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|f| f.trim().parse::<f64>().map_err(|e| format!("`{f}`: {e}")))
        .collect()
}

fn parse_state(text: &str) -> Result<GasState, String> {
    let v = parse_numbers(text)?;
    let [rho, u, p, a] = v[..] else {
        return Err(format!("expected rho,u,p,a; got {} values", v.len()));
    };
    GasState::new(rho, u, p, a).map_err(|e| e.to_string())
}

fn parse_pair(text: &str) -> Result<(f64, f64), String> {
    match parse_numbers(text)?[..] {
        [lo, hi] if lo < hi => Ok((lo, hi)),
        _ => Err(format!("expected lo,hi with lo < hi; got `{text}`")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Simulate,
    Riemann,
    Interact,
    Stationary,
}

/// Values that replace the preset or config entries.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub cells: Option<usize>,
    pub cfl: Option<f64>,
    pub t_end: Option<f64>,
    pub gamma: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub mode: Mode,
    pub preset: Option<String>,
    pub config_path: Option<PathBuf>,
    /// `None` writes to standard output.
    pub output_path: Option<PathBuf>,
    pub overrides: Overrides,
    /// Riemann states, or the stationary upstream state in `left`.
    pub left: Option<GasState>,
    pub right: Option<GasState>,
    pub area: Option<f64>,
    pub samples: usize,
    pub domain: (f64, f64),
    pub solution: usize,
}

impl RunSpec {
    fn new(mode: Mode, output_path: Option<PathBuf>) -> Self {
        Self {
            mode,
            preset: None,
            config_path: None,
            output_path,
            overrides: Overrides::default(),
            left: None,
            right: None,
            area: None,
            samples: 0,
            domain: (0.0, 0.0),
            solution: 0,
        }
    }

    fn from_case(mode: Mode, a: CaseArgs) -> Self {
        Self {
            preset: a.preset,
            config_path: a.config,
            overrides: Overrides { cells: a.cells, cfl: a.cfl, t_end: a.tend, gamma: a.gamma },
            ..Self::new(mode, a.out)
        }
    }

    /// The preset or config with overrides applied, validated.
    pub fn sim_config(&self) -> anyhow::Result<SimConfig> {
        let mut cfg = match (&self.preset, &self.config_path) {
            (Some(name), None) => preset_by_name(name).with_context(|| format!("unknown preset `{name}`"))?.config,
            (None, Some(path)) => load_config(path)?,
            _ => bail!("exactly one of --preset and --config is required"),
        };
        let o = self.overrides;
        cfg.cells = o.cells.unwrap_or(cfg.cells);
        cfg.cfl = o.cfl.unwrap_or(cfg.cfl);
        cfg.t_end = o.t_end.unwrap_or(cfg.t_end);
        cfg.gamma = o.gamma.unwrap_or(cfg.gamma);
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses a full argv (program name first).
pub fn parse_args<I, T>(argv: I) -> Result<RunSpec, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    Ok(match cli.command {
        Command::Simulate(a) => RunSpec::from_case(Mode::Simulate, a),
        Command::Interact(a) => RunSpec::from_case(Mode::Interact, a),
        Command::Riemann(a) => RunSpec {
            left: Some(a.left),
            right: Some(a.right),
            overrides: Overrides { t_end: Some(a.tend), gamma: Some(a.gamma), ..Overrides::default() },
            samples: a.samples,
            domain: a.domain,
            solution: a.solution,
            ..RunSpec::new(Mode::Riemann, a.out)
        },
        Command::Stationary(a) => RunSpec {
            left: Some(a.state),
            area: Some(a.area),
            overrides: Overrides { gamma: Some(a.gamma), ..Overrides::default() },
            ..RunSpec::new(Mode::Stationary, a.out)
        },
    })
}

/// What a run produced: summary lines and, unless empty, profile rows.
#[derive(Debug, Clone)]
pub struct Report {
    pub summary: Vec<String>,
    pub rows: Vec<(f64, GasState)>,
    pub gas: GasConstants,
}

impl Report {
    pub fn csv(&self) -> anyhow::Result<String> {
        let mut buf = Vec::new();
        write_profile(&mut buf, &self.rows, self.gas)?;
        Ok(String::from_utf8(buf)?)
    }
}

fn state_line(label: &str, s: &GasState) -> String {
    format!("{label}: rho={:.12} u={:.12} p={:.12} a={}", s.rho, s.u, s.p, s.a)
}

pub fn execute(spec: &RunSpec) -> anyhow::Result<Report> {
    match spec.mode {
        Mode::Simulate => simulate(spec),
        Mode::Interact => interact(spec),
        Mode::Riemann => riemann(spec),
        Mode::Stationary => stationary(spec),
    }
}

fn simulate(spec: &RunSpec) -> anyhow::Result<Report> {
    let cfg = spec.sim_config()?;
    let gas = cfg.gas()?;
    let grid = fvm::run(&cfg)?;
    Ok(Report {
        summary: vec![format!("t: {} after {} steps on {} cells", grid.t, grid.steps, cfg.cells)],
        rows: grid_rows(&grid, gas)?,
        gas,
    })
}

fn interact(spec: &RunSpec) -> anyhow::Result<Report> {
    let cfg = spec.sim_config()?;
    let gas = cfg.gas()?;
    let inp = interaction_input(&cfg);
    let check = validate_input(&inp, VALIDATION_TOL, gas)?;
    let res = resolve(&inp, gas)?;
    let mut summary = vec![format!("case: {}", res.case)];
    for (fan, how) in res.fans.iter().zip(&res.constructions) {
        summary.push(format!("pattern: {}", fan.pattern_string()));
        summary.push(format!("construction: {how}"));
    }
    if check.is_flagged() {
        summary.push(format!("warning: {}", res.notes));
    } else if !res.notes.is_empty() {
        summary.push(format!("note: {}", res.notes));
    }
    let grid = fvm::SimGrid::initial(&cfg)?;
    let xs: Vec<f64> = (0..cfg.cells).map(|i| grid.x_center(i)).collect();
    let rows = exact_profile(&cfg.initial, &res.fans[0], cfg.t_end, &xs, gas)?;
    Ok(Report { summary, rows, gas })
}

fn riemann(spec: &RunSpec) -> anyhow::Result<Report> {
    let gas = GasConstants::new(spec.overrides.gamma.unwrap_or(2.0))?;
    let (Some(l), Some(r)) = (spec.left, spec.right) else {
        bail!("riemann needs --left and --right");
    };
    if spec.samples < 2 {
        bail!("--samples must be at least 2");
    }
    let t = spec.overrides.t_end.unwrap_or(0.1);
    if !(t > 0.0) {
        bail!("--tend must be positive");
    }
    let sols = solve_duct(l, l.a, r, r.a, gas)?;
    let mut summary = Vec::new();
    for s in &sols.solutions {
        let tag = if s.mirrored { ", mirrored" } else { "" };
        summary.push(format!("pattern: {} ({}{tag})", s.fan.pattern_string(), s.construction));
    }
    summary.push(format!("note: {}", sols.multiplicity_note));
    let chosen = sols.solutions.get(spec.solution).with_context(|| {
        format!("--solution {} requested but only {} solution(s) exist", spec.solution, sols.len())
    })?;
    let (lo, hi) = spec.domain;
    let n = spec.samples;
    let xs: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
    Ok(Report { summary, rows: fan_rows(&chosen.fan, 0.0, t, &xs, gas), gas })
}

fn stationary(spec: &RunSpec) -> anyhow::Result<Report> {
    let gas = GasConstants::new(spec.overrides.gamma.unwrap_or(2.0))?;
    let (Some(s), Some(a)) = (spec.left, spec.area) else {
        bail!("stationary needs --state and --area");
    };
    let mut summary = vec![
        format!("a_min: {:.12}", a_min(s, gas)?),
        format!("rho_m: {:.12}", rho_m(s, gas)?),
        format!("region: {:?}", s.region(gas)?),
    ];
    let pair = stationary_jump(s, a, gas)?;
    summary.push(state_line("supersonic", &pair.supersonic));
    summary.push(state_line("subsonic", &pair.subsonic));
    match admissible_stationary(s, a, gas) {
        Ok(chosen) => summary.push(state_line("admissible", &chosen)),
        Err(e) => summary.push(format!("admissible: {e}")),
    }
    Ok(Report { summary, rows: Vec::new(), gas })
}

/// Writes the CSV to `out`, or to `stdout` when no path is given. Summary
/// lines go to `stdout` unless the CSV occupies it, then to `stderr`.
/// Reports without rows are written where the CSV would have gone.
pub fn emit(
    report: &Report,
    out: Option<&Path>,
    stdout: &mut dyn std::io::Write,
    stderr: &mut dyn std::io::Write,
) -> anyhow::Result<()> {
    let mut text = String::new();
    for line in &report.summary {
        writeln!(text, "{line}")?;
    }
    if report.rows.is_empty() {
        match out {
            Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
            None => stdout.write_all(text.as_bytes())?,
        }
        return Ok(());
    }
    let csv = report.csv()?;
    match out {
        Some(path) => {
            std::fs::write(path, csv).with_context(|| format!("cannot write {}", path.display()))?;
            stdout.write_all(text.as_bytes())?;
        }
        None => {
            stdout.write_all(csv.as_bytes())?;
            stderr.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
