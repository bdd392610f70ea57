//! Polytropic gas `p = κ ρ^γ` in a duct of cross-section `a`.
//!
//! States are primitive `(ρ, u, p, a)`. The entropy enters only through
//! `κ = p / ρ^γ`, so no separate entropy variable is stored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative width of the band around `|u| = c` and `u = 0` that is treated
/// as a sonic boundary: `||u| - c| <= REGION_TOL * (|u| + c)`.
pub const REGION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GasConstants {
    gamma: f64,
}

impl GasConstants {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 1.0 && gamma < 3.0) {
            return Err(Error::Domain(format!(
                "adiabatic exponent must satisfy 1 < gamma < 3, got {gamma}"
            )));
        }
        Ok(Self { gamma })
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `μ² = (γ - 1) / (γ + 1)`.
    #[inline]
    pub fn mu2(&self) -> f64 {
        (self.gamma - 1.0) / (self.gamma + 1.0)
    }

    #[inline]
    pub(crate) fn gm1(&self) -> f64 {
        self.gamma - 1.0
    }

    /// Exponent `(γ - 1) / (2γ)` relating sound speed to pressure on an isentrope.
    #[inline]
    pub(crate) fn z(&self) -> f64 {
        (self.gamma - 1.0) / (2.0 * self.gamma)
    }
}

/// The seven pieces of state space cut out by the sonic surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// `u > c`
    D1,
    /// `0 < u < c`
    D2,
    /// `-c < u < 0`
    D3,
    /// `u < -c`
    D4,
    /// `u = c`, where `λ1 = λ4 = 0`
    GammaPlus,
    /// `u = -c`, where `λ3 = λ4 = 0`
    GammaMinus,
    /// `u = 0`, where `λ2 = λ4 = 0`
    Gamma0,
}

impl Region {
    pub fn is_boundary(self) -> bool {
        matches!(self, Region::GammaPlus | Region::GammaMinus | Region::Gamma0)
    }

    /// Whether `self` lies in the closure of the open domain `domain`.
    pub fn in_closure_of(self, domain: Region) -> bool {
        use Region::*;
        match domain {
            D1 => matches!(self, D1 | GammaPlus),
            D2 => matches!(self, D2 | GammaPlus | Gamma0),
            D3 => matches!(self, D3 | GammaMinus | Gamma0),
            D4 => matches!(self, D4 | GammaMinus),
            _ => self == domain,
        }
    }

    /// Open domains whose closure contains `self`.
    pub fn adjacent_domains(self) -> &'static [Region] {
        use Region::*;
        match self {
            D1 => &[D1],
            D2 => &[D2],
            D3 => &[D3],
            D4 => &[D4],
            GammaPlus => &[D1, D2],
            GammaMinus => &[D3, D4],
            Gamma0 => &[D2, D3],
        }
    }
}

/// Primitive duct state. A vacuum is the distinguished value `ρ = p = 0`
/// with `u` recording the speed of the bounding rarefaction edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GasState {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
    pub a: f64,
}

impl GasState {
    pub fn new(rho: f64, u: f64, p: f64, a: f64) -> Result<Self> {
        let s = Self { rho, u, p, a };
        s.check()?;
        Ok(s)
    }

    pub fn vacuum(u: f64, a: f64) -> Self {
        Self { rho: 0.0, u, p: 0.0, a }
    }

    pub fn is_vacuum(&self) -> bool {
        self.rho == 0.0 && self.p == 0.0
    }

    /// Fails unless the state is a finite, non-vacuum physical state.
    pub fn check(&self) -> Result<()> {
        if self.is_vacuum() {
            return Err(Error::Vacuum);
        }
        let finite = self.rho.is_finite() && self.u.is_finite() && self.p.is_finite();
        if !finite || self.rho <= 0.0 || self.p <= 0.0 {
            return Err(Error::NonPhysicalCell {
                index: None,
                time: None,
                rho: self.rho,
                p: self.p,
            });
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::Domain(format!("cross-section must be positive, got {}", self.a)));
        }
        Ok(())
    }

    pub fn with_area(self, a: f64) -> Self {
        Self { a, ..self }
    }

    /// Mirror image under `x -> -x`.
    pub fn reflect(self) -> Self {
        Self { u: -self.u, ..self }
    }

    #[inline]
    pub(crate) fn c(&self, gas: GasConstants) -> f64 {
        if self.is_vacuum() {
            0.0
        } else {
            (gas.gamma() * self.p / self.rho).sqrt()
        }
    }

    #[inline]
    pub(crate) fn kap(&self, gas: GasConstants) -> f64 {
        self.p / self.rho.powf(gas.gamma())
    }

    pub fn sound_speed(&self, gas: GasConstants) -> Result<f64> {
        self.check()?;
        Ok(self.c(gas))
    }

    /// Entropy variable `κ = p / ρ^γ`.
    pub fn kappa(&self, gas: GasConstants) -> Result<f64> {
        self.check()?;
        Ok(self.kap(gas))
    }

    pub fn tau(&self) -> f64 {
        1.0 / self.rho
    }

    pub fn internal_energy(&self, gas: GasConstants) -> f64 {
        self.p / (gas.gm1() * self.rho)
    }

    pub fn total_energy(&self, gas: GasConstants) -> f64 {
        self.internal_energy(gas) + 0.5 * self.u * self.u
    }

    pub fn mach(&self, gas: GasConstants) -> Result<f64> {
        Ok(self.u / self.sound_speed(gas)?)
    }

    /// `(λ1, λ2, λ3, λ4) = (u - c, u, u + c, 0)`.
    pub fn eigenvalues(&self, gas: GasConstants) -> Result<[f64; 4]> {
        let c = self.sound_speed(gas)?;
        Ok([self.u - c, self.u, self.u + c, 0.0])
    }

    /// `(ρ p''(ρ) + 2 p'(ρ)) / (2 sqrt(p'(ρ)))` for `p = κ ρ^γ`; positive for
    /// every physical state.
    pub fn genuine_nonlinearity(&self, gas: GasConstants) -> Result<f64> {
        let k = self.kappa(gas)?;
        let g = gas.gamma();
        let dp = g * k * self.rho.powf(g - 1.0);
        let d2p = g * (g - 1.0) * k * self.rho.powf(g - 2.0);
        Ok((self.rho * d2p + 2.0 * dp) / (2.0 * dp.sqrt()))
    }

    /// Region tag; states within `rel_tol * (|u| + c)` of a sonic surface get
    /// the boundary tag.
    pub fn classify_region(&self, gas: GasConstants, rel_tol: f64) -> Result<Region> {
        let c = self.sound_speed(gas)?;
        let band = rel_tol * (self.u.abs() + c);
        let u = self.u;
        Ok(if u.abs() <= band {
            Region::Gamma0
        } else if (u.abs() - c).abs() <= band {
            if u > 0.0 {
                Region::GammaPlus
            } else {
                Region::GammaMinus
            }
        } else if u > c {
            Region::D1
        } else if u > 0.0 {
            Region::D2
        } else if u > -c {
            Region::D3
        } else {
            Region::D4
        })
    }

    pub fn region(&self, gas: GasConstants) -> Result<Region> {
        self.classify_region(gas, REGION_TOL)
    }

    pub fn to_conserved(&self, gas: GasConstants) -> ConservedCell {
        let m = self.a * self.rho;
        ConservedCell {
            m,
            q: m * self.u,
            en: m * self.total_energy(gas),
            a: self.a,
        }
    }
}

/// Area-weighted conserved variables `(aρ, aρu, aρE)` of one cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConservedCell {
    pub m: f64,
    pub q: f64,
    pub en: f64,
    pub a: f64,
}

impl ConservedCell {
    pub fn to_primitive(&self, gas: GasConstants) -> Result<GasState> {
        let rho = self.m / self.a;
        let u = self.q / self.m;
        let p = gas.gm1() * (self.en / self.a - 0.5 * self.q * u / self.a);
        let ok = rho > 0.0 && p > 0.0 && rho.is_finite() && p.is_finite() && u.is_finite();
        if !ok {
            return Err(Error::NonPhysicalCell {
                index: None,
                time: None,
                rho,
                p,
            });
        }
        Ok(GasState { rho, u, p, a: self.a })
    }
}
