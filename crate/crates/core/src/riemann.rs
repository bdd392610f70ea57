//! Exact Riemann solvers: the classical constant-area problem and the duct
//! problem with a jump in cross-section at `x = 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curves::{
    fan_state_through, lax_admissible, shock_speed, shock_state, w1_state, w3, wave_curve_rho,
    wave_jump, CurvePoint, WaveFamily,
};
use crate::error::{Error, Result};
use crate::gas::{GasConstants, GasState, Region};
use crate::root::{bisect, geomspace, linspace, roots_on_grid};
use crate::stationary::{a_min, jump_residual, stationary_branch, BranchSelector};

/// Relative pressure change below which a 1- or 3-wave is dropped.
const ZERO_STRENGTH: f64 = 1e-12;

/// One elementary wave between two constant states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wave {
    pub family: WaveFamily,
    pub left: GasState,
    pub right: GasState,
    pub speed_lo: f64,
    pub speed_hi: f64,
}

impl Wave {
    fn discontinuity(family: WaveFamily, left: GasState, right: GasState, speed: f64) -> Self {
        Self { family, left, right, speed_lo: speed, speed_hi: speed }
    }

    /// Largest scaled residual of the relations defining this wave.
    pub fn residual(&self, gas: GasConstants) -> f64 {
        let (l, r) = (self.left, self.right);
        let k = 2.0 / gas.gm1();
        match self.family {
            WaveFamily::R1 | WaveFamily::R3 if l.is_vacuum() || r.is_vacuum() => {
                // only the invariant through the non-vacuum side is meaningful
                let (s, edge) = if l.is_vacuum() { (r, l) } else { (l, r) };
                let inv = match self.family {
                    WaveFamily::R1 => s.u + k * s.c(gas),
                    _ => s.u - k * s.c(gas),
                };
                (edge.u - inv).abs() / (s.u.abs() + k * s.c(gas))
            }
            WaveFamily::S1 | WaveFamily::S3 => {
                let rh = crate::curves::rankine_hugoniot_residual(l, r, self.speed_lo, gas);
                let scale = l.u.abs() + l.c(gas);
                let speed = match shock_speed(l, r, self.family) {
                    Ok(s) => (s - self.speed_lo).abs() / scale,
                    Err(_) => f64::INFINITY,
                };
                rh.into_iter().fold(speed, f64::max)
            }
            _ => CurvePoint { state: r, family: self.family, anchor: l }.residual(gas),
        }
    }

    /// Family-specific admissibility: Lax conditions for shocks, a single
    /// domain closure for stationary waves, an expanding fan for rarefactions.
    pub fn admissible(&self, gas: GasConstants) -> bool {
        match self.family {
            WaveFamily::S1 | WaveFamily::S3 => lax_admissible(self.left, self.right, self.family, gas),
            WaveFamily::S0 => {
                let (Ok(a), Ok(b)) = (self.left.region(gas), self.right.region(gas)) else {
                    return false;
                };
                a.adjacent_domains().iter().any(|d| b.in_closure_of(*d))
            }
            WaveFamily::R1 | WaveFamily::R3 => self.speed_lo <= self.speed_hi,
            WaveFamily::J => true,
        }
    }

    /// The same wave seen in the mirror `x -> -x`.
    pub fn reflect(&self) -> Self {
        Self {
            family: self.family.mirrored(),
            left: self.right.reflect(),
            right: self.left.reflect(),
            speed_lo: -self.speed_hi,
            speed_hi: -self.speed_lo,
        }
    }
}

/// Ordered waves of a self-similar solution with the constant states
/// between them: `states[i]` lies left of `waves[i]`, `states[i + 1]` right.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaveFan {
    pub waves: Vec<Wave>,
    pub states: Vec<GasState>,
    /// Speeds bounding a vacuum wedge, if any.
    pub vacuum: Option<(f64, f64)>,
}

impl WaveFan {
    pub fn from_waves(left: GasState, waves: Vec<Wave>) -> Self {
        let mut states = vec![left];
        let mut vacuum = None;
        for (i, w) in waves.iter().enumerate() {
            states.push(w.right);
            if w.right.is_vacuum() {
                if let Some(next) = waves.get(i + 1) {
                    vacuum = Some((w.speed_hi, next.speed_lo));
                }
            }
        }
        Self { waves, states, vacuum }
    }

    pub fn left_state(&self) -> GasState {
        self.states[0]
    }

    pub fn right_state(&self) -> GasState {
        *self.states.last().expect("fan has at least one state")
    }

    pub fn families(&self) -> Vec<WaveFamily> {
        self.waves.iter().map(|w| w.family).collect()
    }

    /// Wave labels in order, with `Vacuum` marking a vacuum wedge.
    pub fn pattern(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (i, w) in self.waves.iter().enumerate() {
            out.push(w.family.label());
            if w.right.is_vacuum() && i + 1 < self.waves.len() {
                out.push("Vacuum");
            }
        }
        out
    }

    pub fn pattern_string(&self) -> String {
        self.pattern().join(" ")
    }

    /// Whether wave speeds are non-decreasing left to right, up to `tol`.
    pub fn is_monotone(&self, tol: f64) -> bool {
        self.waves.iter().all(|w| w.speed_lo <= w.speed_hi + tol)
            && self
                .waves
                .windows(2)
                .all(|p| p[0].speed_hi <= p[1].speed_lo + tol)
    }

    pub fn max_residual(&self, gas: GasConstants) -> f64 {
        self.waves.iter().map(|w| w.residual(gas)).fold(0.0, f64::max)
    }

    pub fn all_admissible(&self, gas: GasConstants) -> bool {
        self.waves.iter().all(|w| w.admissible(gas))
    }

    /// Largest `|u| + c` over the constant states; a natural speed scale.
    pub fn speed_scale(&self, gas: GasConstants) -> f64 {
        self.states
            .iter()
            .map(|s| s.u.abs() + s.c(gas))
            .fold(0.0, f64::max)
    }

    pub fn reflect(&self) -> Self {
        Self {
            waves: self.waves.iter().rev().map(Wave::reflect).collect(),
            states: self.states.iter().rev().map(|s| s.reflect()).collect(),
            vacuum: self.vacuum.map(|(lo, hi)| (-hi, -lo)),
        }
    }

    /// Same wave families and all states within `rel` (relative, floored at 1).
    pub fn approx_eq(&self, other: &Self, rel: f64) -> bool {
        let close = |x: f64, y: f64| (x - y).abs() <= rel * (1.0 + x.abs().max(y.abs()));
        // the velocity stored on a vacuum state is only a label; the wedge
        // speeds carry the information
        let wedge = match (self.vacuum, other.vacuum) {
            (Some(x), Some(y)) => close(x.0, y.0) && close(x.1, y.1),
            (None, None) => true,
            _ => false,
        };
        self.families() == other.families()
            && wedge
            && self.states.iter().zip(&other.states).all(|(a, b)| match (a.is_vacuum(), b.is_vacuum()) {
                (true, true) => close(a.a, b.a),
                (false, false) => close(a.rho, b.rho) && close(a.u, b.u) && close(a.p, b.p) && close(a.a, b.a),
                _ => false,
            })
    }
}

/// Value of the self-similar solution at `ξ = x / t`.
///
/// Right-continuous: at the speed of a discontinuity (in particular at
/// `ξ = 0` with stationary waves present) the state on its right is returned.
/// Inside a vacuum wedge the vacuum state with `u = ξ` is returned.
pub fn sample(fan: &WaveFan, xi: f64, gas: GasConstants) -> GasState {
    for (i, w) in fan.waves.iter().enumerate() {
        if xi < w.speed_lo {
            let s = fan.states[i];
            return if s.is_vacuum() { GasState::vacuum(xi, s.a) } else { s };
        }
        if w.family.is_rarefaction() && xi < w.speed_hi {
            let through = if w.left.is_vacuum() { w.right } else { w.left };
            return fan_state_through(xi, through, w.family, gas)
                .unwrap_or_else(|| GasState::vacuum(xi, through.a));
        }
    }
    fan.right_state()
}

/// Star-region pressure and velocity of the constant-area problem, or
/// `None` when the two rarefactions leave a vacuum.
///
/// Safeguarded Newton on `w1(p; left) - w3(p; right)` starting from the
/// two-rarefaction estimate, falling back to bisection whenever a step
/// leaves the current bracket.
pub fn star_state(left: GasState, right: GasState, gas: GasConstants) -> Result<Option<(f64, f64)>> {
    left.check()?;
    right.check()?;
    let k = 2.0 / gas.gm1();
    let (cl, cr) = (left.c(gas), right.c(gas));
    if left.u + k * cl <= right.u - k * cr {
        return Ok(None);
    }
    let gap = |p: f64| {
        let (fl, dl) = wave_jump(p, &left, gas);
        let (fr, dr) = wave_jump(p, &right, gas);
        (left.u - fl - right.u - fr, -(dl + dr))
    };

    let mut lo = 0.0;
    let mut hi = left.p.max(right.p);
    while gap(hi).0 > 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    let z = gas.z();
    let guess = ((cl + cr - 0.5 * gas.gm1() * (right.u - left.u))
        / (cl / left.p.powf(z) + cr / right.p.powf(z)))
    .powf(1.0 / z);
    let mut p = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };

    for _ in 0..200 {
        let (f, d) = gap(p);
        if f == 0.0 {
            break;
        }
        if f > 0.0 {
            lo = p;
        } else {
            hi = p;
        }
        let mut next = p - f / d;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let done = (next - p).abs() <= 1e-12 * p.max(1.0);
        p = next;
        if done {
            break;
        }
    }
    let u = 0.5 * (crate::curves::w1(p, left, gas) + w3(p, right, gas));
    Ok(Some((p, u)))
}

/// 1-wave from `left` to `star` (which must carry the post-wave `u`, `p`
/// and density); `None` for zero strength.
fn one_wave(left: GasState, star: GasState, gas: GasConstants) -> Result<Option<Wave>> {
    if star.is_vacuum() {
        return Ok(Some(Wave {
            family: WaveFamily::R1,
            left,
            right: star,
            speed_lo: left.u - left.c(gas),
            speed_hi: star.u,
        }));
    }
    if (star.p - left.p).abs() <= ZERO_STRENGTH * left.p {
        return Ok(None);
    }
    Ok(Some(if star.p > left.p {
        Wave::discontinuity(WaveFamily::S1, left, star, shock_speed(left, star, WaveFamily::S1)?)
    } else {
        Wave {
            family: WaveFamily::R1,
            left,
            right: star,
            speed_lo: left.u - left.c(gas),
            speed_hi: star.u - star.c(gas),
        }
    }))
}

fn three_wave(star: GasState, right: GasState, gas: GasConstants) -> Result<Option<Wave>> {
    if star.is_vacuum() {
        return Ok(Some(Wave {
            family: WaveFamily::R3,
            left: star,
            right,
            speed_lo: star.u,
            speed_hi: right.u + right.c(gas),
        }));
    }
    if (star.p - right.p).abs() <= ZERO_STRENGTH * right.p {
        return Ok(None);
    }
    Ok(Some(if star.p > right.p {
        Wave::discontinuity(WaveFamily::S3, star, right, shock_speed(star, right, WaveFamily::S3)?)
    } else {
        Wave {
            family: WaveFamily::R3,
            left: star,
            right,
            speed_lo: star.u + star.c(gas),
            speed_hi: right.u + right.c(gas),
        }
    }))
}

fn contact(left: GasState, right: GasState) -> Option<Wave> {
    if (left.rho - right.rho).abs() <= ZERO_STRENGTH * left.rho.max(right.rho) {
        return None;
    }
    Some(Wave::discontinuity(WaveFamily::J, left, right, left.u))
}

fn stationary_wave(left: GasState, right: GasState) -> Wave {
    Wave::discontinuity(WaveFamily::S0, left, right, 0.0)
}

/// Contact plus 3-wave closing a star state `star` (left of the contact)
/// against `right`. `star` must lie on the forward curve of `right`.
fn close_right(star: GasState, right: GasState, gas: GasConstants) -> Result<Vec<Wave>> {
    let bar = GasState {
        rho: wave_curve_rho(star.p, right, gas),
        u: star.u,
        p: star.p,
        a: right.a,
    };
    let mut waves = Vec::new();
    let mut cur = star;
    if let Some(j) = contact(star, bar) {
        waves.push(j);
        cur = bar;
    }
    if let Some(w) = three_wave(cur, right, gas)? {
        waves.push(w);
    }
    Ok(waves)
}

fn classical_waves(left: GasState, right: GasState, gas: GasConstants) -> Result<Vec<Wave>> {
    if left == right {
        return Ok(Vec::new());
    }
    let Some((p, u)) = star_state(left, right, gas)? else {
        let k = 2.0 / gas.gm1();
        let edge_l = left.u + k * left.c(gas);
        let edge_r = right.u - k * right.c(gas);
        return Ok(vec![
            one_wave(left, GasState::vacuum(edge_l, left.a), gas)?.expect("vacuum wave"),
            three_wave(GasState::vacuum(edge_r, right.a), right, gas)?.expect("vacuum wave"),
        ]);
    };
    let mut waves = Vec::new();
    let mut star_l = GasState { rho: wave_curve_rho(p, left, gas), u, p, a: left.a };
    match one_wave(left, star_l, gas)? {
        Some(w) => waves.push(w),
        None => star_l = left,
    }
    let star = GasState { u: star_l.u, p: star_l.p, ..star_l };
    waves.extend(close_right(star, right, gas)?);
    Ok(waves)
}

/// Exact solution of the Riemann problem with constant cross-section.
pub fn solve_constant_area(left: GasState, right: GasState, gas: GasConstants) -> Result<WaveFan> {
    left.check()?;
    right.check()?;
    if left.a != right.a {
        return Err(Error::InvalidInput(format!(
            "constant-area solver needs equal areas, got {} and {}",
            left.a, right.a
        )));
    }
    Ok(WaveFan::from_waves(left, classical_waves(left, right, gas)?))
}

/// How a duct solution was assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    /// No area jump: the classical solution.
    ConstantArea,
    /// Supersonic stationary jump at `x = 0`, then the classical waves.
    SupersonicFirst,
    /// Backward wave with non-positive speed, subsonic stationary jump,
    /// contact and forward wave.
    WaveThenStationary,
    /// Backward rarefaction to the sonic line, supersonic jump, then the
    /// classical waves.
    SonicAttachment,
    /// Stationary jump, zero-speed 1-shock and a second stationary jump all
    /// superposed at `x = 0`.
    Resonant,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Construction::ConstantArea => "constant-area",
            Construction::SupersonicFirst => "supersonic-first",
            Construction::WaveThenStationary => "wave-then-stationary",
            Construction::SonicAttachment => "sonic-attachment",
            Construction::Resonant => "resonant",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DuctSolution {
    pub construction: Construction,
    /// Built on the mirrored problem and reflected back.
    pub mirrored: bool,
    pub fan: WaveFan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DuctRiemannSolutions {
    pub solutions: Vec<DuctSolution>,
    pub multiplicity_note: String,
}

impl DuctRiemannSolutions {
    pub fn fans(&self) -> impl Iterator<Item = &WaveFan> {
        self.solutions.iter().map(|s| &s.fan)
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Pressure on `S1(anchor)` where the shock speed vanishes; exists only for
/// supersonic anchors with `u > c`.
pub fn zero_speed_shock_pressure(anchor: GasState, gas: GasConstants) -> Option<f64> {
    if anchor.u <= anchor.c(gas) {
        return None;
    }
    let sigma = |p: f64| {
        let s = shock_state(p, anchor, WaveFamily::S1, gas).ok()?;
        shock_speed(anchor, s, WaveFamily::S1).ok()
    };
    let lo = anchor.p * (1.0 + 1e-9);
    let mut hi = 2.0 * anchor.p;
    while sigma(hi)? >= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return None;
        }
    }
    bisect(sigma, lo, hi, 1e-15)
}

/// Sonic point `u = c` on the 1-rarefaction through `left`.
fn sonic_point(left: GasState, gas: GasConstants) -> GasState {
    let g = gas.gamma();
    let k = 2.0 / gas.gm1();
    let c_l = left.c(gas);
    let c = gas.gm1() / (g + 1.0) * (left.u + k * c_l);
    let rho = left.rho * (c / c_l).powf(k);
    let p = left.p * (rho / left.rho).powf(g);
    GasState { rho, u: c, p, a: left.a }
}

struct Problem {
    left: GasState,
    right: GasState,
    a_right: f64,
    gas: GasConstants,
}

impl Problem {
    fn supersonic_first(&self) -> Vec<WaveFan> {
        let (l, gas) = (self.left, self.gas);
        if l.u <= l.c(gas) {
            return Vec::new();
        }
        let Ok(ls) = stationary_branch(l, self.a_right, BranchSelector::Supersonic, gas) else {
            return Vec::new();
        };
        let Ok(rest) = classical_waves(ls, self.right, gas) else {
            return Vec::new();
        };
        let mut waves = vec![stationary_wave(l, ls)];
        waves.extend(rest);
        vec![WaveFan::from_waves(l, waves)]
    }

    /// Subsonic stationary jump from the post-1-wave state at pressure `p`,
    /// if that state is admissible for this construction.
    fn after_jump(&self, p: f64) -> Option<(GasState, GasState)> {
        let u = w1_state(p, self.left, self.gas);
        if u.is_vacuum() || u.u.abs() > u.c(self.gas) * (1.0 + 1e-12) {
            return None;
        }
        let us = stationary_branch(u, self.a_right, BranchSelector::Subsonic, self.gas).ok()?;
        Some((u, us))
    }

    fn wave_then_stationary(&self) -> Vec<WaveFan> {
        let (l, gas) = (self.left, self.gas);
        let c_l = l.c(gas);
        let p_lo = if l.u - c_l <= 0.0 {
            sonic_point(l, gas).p
        } else {
            match zero_speed_shock_pressure(l, gas) {
                Some(p) => p,
                None => return Vec::new(),
            }
        };
        let p_hi = l.p * 1e6;
        if !(p_lo < p_hi) {
            return Vec::new();
        }
        let mut grid = geomspace(p_lo, p_hi, 400);
        if l.p > p_lo {
            grid.push(l.p);
            grid.sort_by(|a, b| a.total_cmp(b));
        }
        let closure = |p: f64| {
            let (_, us) = self.after_jump(p)?;
            Some(us.u - w3(us.p, self.right, gas))
        };
        let mut out = Vec::new();
        for p in roots_on_grid(closure, &grid, 1e-15) {
            let Some((u, us)) = self.after_jump(p) else { continue };
            let scale = us.u.abs() + us.c(gas);
            if (us.u - w3(us.p, self.right, gas)).abs() > 1e-8 * scale {
                continue;
            }
            let build = || -> Result<Vec<Wave>> {
                let mut waves = Vec::new();
                let mut cur = l;
                if let Some(w) = one_wave(l, u, gas)? {
                    waves.push(w);
                    cur = u;
                }
                waves.push(stationary_wave(cur, us));
                waves.extend(close_right(us, self.right, gas)?);
                Ok(waves)
            };
            if let Ok(waves) = build() {
                out.push(WaveFan::from_waves(l, waves));
            }
        }
        out
    }

    fn sonic_attachment(&self) -> Vec<WaveFan> {
        let (l, gas) = (self.left, self.gas);
        if !(l.u > 0.0 && l.u < l.c(gas)) || self.a_right < l.a {
            return Vec::new();
        }
        let uc = sonic_point(l, gas);
        let Ok(ucs) = stationary_branch(uc, self.a_right, BranchSelector::Supersonic, gas) else {
            return Vec::new();
        };
        let Ok(rest) = classical_waves(ucs, self.right, gas) else {
            return Vec::new();
        };
        let r1 = Wave {
            family: WaveFamily::R1,
            left: l,
            right: uc,
            speed_lo: l.u - l.c(gas),
            speed_hi: 0.0,
        };
        let mut waves = vec![r1, stationary_wave(uc, ucs)];
        waves.extend(rest);
        vec![WaveFan::from_waves(l, waves)]
    }

    /// States of the resonant construction through the intermediate area `a`.
    fn resonant_states(&self, a: f64) -> Option<[GasState; 3]> {
        let gas = self.gas;
        let ls = stationary_branch(self.left, a, BranchSelector::Supersonic, gas).ok()?;
        let p6 = zero_speed_shock_pressure(ls, gas)?;
        let u6 = shock_state(p6, ls, WaveFamily::S1, gas).ok()?;
        let u6s = stationary_branch(u6, self.a_right, BranchSelector::Subsonic, gas).ok()?;
        Some([ls, u6, u6s])
    }

    fn resonant(&self) -> Vec<WaveFan> {
        let (l, gas) = (self.left, self.gas);
        if l.u <= l.c(gas) || l.a == self.a_right {
            return Vec::new();
        }
        let (lo, hi) = if l.a < self.a_right { (l.a, self.a_right) } else { (self.a_right, l.a) };
        let grid = linspace(lo, hi, 202);
        let grid = &grid[1..201];
        let closure = |a: f64| {
            let [_, _, u6s] = self.resonant_states(a)?;
            Some(u6s.u - w3(u6s.p, self.right, gas))
        };
        let mut out = Vec::new();
        for a in roots_on_grid(closure, grid, 1e-15) {
            let Some([ls, u6, u6s]) = self.resonant_states(a) else { continue };
            let Ok(sigma) = shock_speed(ls, u6, WaveFamily::S1) else { continue };
            let mut waves = vec![
                stationary_wave(l, ls),
                Wave::discontinuity(WaveFamily::S1, ls, u6, sigma),
                stationary_wave(u6, u6s),
            ];
            match close_right(u6s, self.right, gas) {
                Ok(rest) => waves.extend(rest),
                Err(_) => continue,
            }
            out.push(WaveFan::from_waves(l, waves));
        }
        out
    }

    fn solve(&self, which: &[Construction]) -> Vec<DuctSolution> {
        let gas = self.gas;
        let mut out: Vec<DuctSolution> = Vec::new();
        for &construction in which {
            let fans = match construction {
                Construction::ConstantArea => continue,
                Construction::SupersonicFirst => self.supersonic_first(),
                Construction::WaveThenStationary => self.wave_then_stationary(),
                Construction::SonicAttachment => self.sonic_attachment(),
                Construction::Resonant => self.resonant(),
            };
            for fan in fans {
                let tol = 1e-9 * fan.speed_scale(gas);
                if !fan.is_monotone(tol) || !fan.all_admissible(gas) {
                    continue;
                }
                if out.iter().any(|s| s.fan.approx_eq(&fan, 1e-8)) {
                    continue;
                }
                out.push(DuctSolution { construction, mirrored: false, fan });
            }
        }
        out
    }
}

const ALL: [Construction; 4] = [
    Construction::SupersonicFirst,
    Construction::WaveThenStationary,
    Construction::SonicAttachment,
    Construction::Resonant,
];

/// Admissible solutions from the listed constructions only, without the
/// mirror fallback. `left.a` and `a_right` are the two cross-sections.
pub fn solve_duct_with(
    left: GasState,
    right: GasState,
    a_right: f64,
    which: &[Construction],
    gas: GasConstants,
) -> Result<Vec<DuctSolution>> {
    left.check()?;
    let right = right.with_area(a_right);
    right.check()?;
    Ok(Problem { left, right, a_right, gas }.solve(which))
}

/// All admissible self-similar solutions of the duct Riemann problem with
/// `left` on cross-section `a_left` and `right` on `a_right`.
///
/// Solutions are built from the four constructions described on
/// [`Construction`]; each candidate must have non-decreasing wave speeds and
/// admissible waves. When none applies directly, the mirrored problem is
/// tried and its solutions reflected back.
pub fn solve_duct(
    left: GasState,
    a_left: f64,
    right: GasState,
    a_right: f64,
    gas: GasConstants,
) -> Result<DuctRiemannSolutions> {
    let left = left.with_area(a_left);
    let right = right.with_area(a_right);
    left.check()?;
    right.check()?;

    if a_left == a_right {
        let fan = solve_constant_area(left, right, gas)?;
        return Ok(DuctRiemannSolutions {
            solutions: vec![DuctSolution { construction: Construction::ConstantArea, mirrored: false, fan }],
            multiplicity_note: "constant cross-section: unique classical solution".into(),
        });
    }

    let mut solutions = Problem { left, right, a_right, gas }.solve(&ALL);
    if solutions.is_empty() {
        let mirror = Problem { left: right.reflect(), right: left.reflect(), a_right: a_left, gas };
        solutions = mirror
            .solve(&ALL)
            .into_iter()
            .map(|s| DuctSolution { mirrored: true, fan: s.fan.reflect(), ..s })
            .collect();
    }

    if solutions.is_empty() {
        let amin_l = a_min(left, gas)?;
        let amin_r = a_min(right, gas)?;
        let region = left.region(gas).unwrap_or(Region::Gamma0);
        return Err(Error::NoSolution(format!(
            "no construction closes: left in {region:?}, a_left={a_left}, a_right={a_right}, \
             a_min(left)={amin_l}, a_min(right)={amin_r}"
        )));
    }

    let multiplicity_note = match solutions.len() {
        1 => format!("unique admissible solution ({})", solutions[0].construction),
        n => format!(
            "{n} admissible solutions ({}); no selection rule is applied",
            solutions
                .iter()
                .map(|s| s.construction.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    };
    Ok(DuctRiemannSolutions { solutions, multiplicity_note })
}

/// Consistency of every stationary wave in `fan` with the stationary
/// relations; used by tests and diagnostics.
pub fn stationary_residual(fan: &WaveFan, gas: GasConstants) -> f64 {
    fan.waves
        .iter()
        .filter(|w| w.family == WaveFamily::S0)
        .map(|w| jump_residual(w.left, w.right, gas))
        .fold(0.0, f64::max)
}
