//! The seven contact/stationary-wave interaction experiments.
//!
//! Every preset uses `γ = 2`, the domain `[0, 10]`, 2000 cells, CFL 0.75,
//! a contact at `x1 = 2.9` and the area jump at `x2 = 3.0`. The states are
//! the published values and are kept verbatim even where they do not satisfy
//! the stationary relations exactly (see [`crate::interaction::validate_input`]).

use crate::fvm::{Boundary, SimConfig, SourceStencil, ThreeStateInit};
use crate::gas::GasState;
use crate::interaction::InteractionInput;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub config: SimConfig,
}

impl Preset {
    pub fn interaction_input(&self) -> InteractionInput {
        interaction_input(&self.config)
    }
}

/// `(U-, Um, U+)` of a three-state configuration as an interaction problem.
pub fn interaction_input(cfg: &SimConfig) -> InteractionInput {
    let i = cfg.initial;
    InteractionInput::new(i.left, i.middle, i.right, i.middle.a, i.right.a)
}

const fn s(rho: f64, u: f64, p: f64, a: f64) -> GasState {
    GasState { rho, u, p, a }
}

const fn preset(name: &'static str, left: GasState, middle: GasState, right: GasState, t_end: f64) -> Preset {
    Preset {
        name,
        config: SimConfig {
            gamma: 2.0,
            domain: [0.0, 10.0],
            cells: 2000,
            cfl: 0.75,
            t_end,
            initial: ThreeStateInit { x1: 2.9, x2: 3.0, left, middle, right },
            boundary: Boundary::Transmissive,
            source: SourceStencil::Centered,
        },
    }
}

pub const PRESETS: [Preset; 7] = [
    preset(
        "test1",
        s(2.25, 5.0, 5.0, 1.0),
        s(1.0, 5.0, 5.0, 1.0),
        s(0.688168, 5.589, 2.3679, 1.5),
        0.35,
    ),
    preset(
        "test2",
        s(0.75, 5.0, 5.0, 1.0),
        s(1.0, 5.0, 5.0, 1.0),
        s(0.688168, 5.589, 2.3679, 1.3),
        0.35,
    ),
    preset(
        "test3",
        s(0.25, 5.0, 5.0, 1.0),
        s(1.0, 5.0, 5.0, 1.0),
        s(0.688168, 5.589, 2.3679, 1.5),
        0.5,
    ),
    preset(
        "test4",
        s(1.075, 1.5, 5.0, 1.0),
        s(1.0, 1.5, 5.0, 1.0),
        s(1.0687, 0.9357, 4.3777, 1.5),
        1.0,
    ),
    preset(
        "test5",
        s(1.0, 4.0, 10.0, 1.0),
        s(1.2, 4.0, 10.0, 1.0),
        s(1.63872, 1.9527, 18.6486, 1.5),
        0.5,
    ),
    preset(
        "test6",
        s(7.0, 1.5, 5.0, 1.0),
        s(1.0, 1.5, 5.0, 1.0),
        s(1.0687, 0.9375, 4.3777, 1.5),
        1.0,
    ),
    preset(
        "test7",
        s(1.5, 4.0, 10.0, 1.0),
        s(1.2, 4.0, 10.0, 1.0),
        s(1.63872, 1.9527, 18.6486, 1.5),
        0.5,
    ),
];

/// Looks up a preset by name (`test1` .. `test7`).
pub fn preset_by_name(name: &str) -> Option<Preset> {
    PRESETS.iter().copied().find(|p| p.name == name)
}

pub fn preset_names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|p| p.name)
}
