//! Sagnac phase in the linear regime.
//!
//! With `H = −½ T₀₀ h₀₀`, `T₀₀ = mc²` and `h₀₀ = Ω²r²/c²`, the phase difference
//! between the two counter-propagating arms after one full turn of duration
//! `2π/Ω` is
//!
//! ```text
//! Δφ = (mc²/ħ) · (Ω²r²/c²) · (2π/Ω) = (2m/ħ) · Ω · πr²
//! ```
//!
//! The closed form on the right is the one used everywhere downstream; it is
//! continuous through `Ω = 0`. [`factored_phase`] evaluates the left-hand
//! product for cross-checking.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::constants::{regime_check, require_positive_mass, ConstantSet, RegimeCheck};
use crate::error::{Error, Result};
use crate::metric::{perturbation, rotating_disk_metric};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseResult {
    pub phi: f64,
    /// `None` when `Ω = 0`: the disk never completes a loop.
    pub t_loop: Option<f64>,
    pub area: f64,
    pub h00: f64,
    pub regime: RegimeCheck,
}

pub fn loop_time(omega: f64) -> Result<f64> {
    if omega == 0.0 {
        return Err(Error::NoCompleteLoop);
    }
    if !omega.is_finite() {
        return Err(Error::invalid(format!(
            "angular frequency must be finite, got {omega}"
        )));
    }
    Ok(2.0 * PI / omega.abs())
}

pub fn enclosed_area(r: f64) -> f64 {
    PI * r * r
}

/// `−½ m c² h₀₀`.
pub fn hamiltonian_energy(m: f64, h00: f64, consts: &ConstantSet) -> f64 {
    -0.5 * m * consts.c * consts.c * h00
}

pub fn sagnac_phase(m: f64, omega: f64, r: f64, consts: &ConstantSet) -> Result<PhaseResult> {
    require_positive_mass(m)?;
    let regime = regime_check(omega, r, consts)?.require_linear()?;
    let h00 = perturbation(&rotating_disk_metric(omega, r, consts)?).h00;
    let area = enclosed_area(r);
    Ok(PhaseResult {
        phi: closed_form(m, omega, area, consts),
        t_loop: loop_time(omega).ok(),
        area,
        h00,
        regime,
    })
}

fn closed_form(m: f64, omega: f64, area: f64, consts: &ConstantSet) -> f64 {
    2.0 * m / consts.hbar * omega * area
}

/// `(mc²/ħ)·h₀₀·(2π/|Ω|)·sign(Ω)`, the phase assembled from the Hamiltonian
/// energy and the loop time. Zero at `Ω = 0`.
pub fn factored_phase(m: f64, omega: f64, r: f64, consts: &ConstantSet) -> Result<f64> {
    let res = sagnac_phase(m, omega, r, consts)?;
    let Some(t_loop) = res.t_loop else {
        return Ok(0.0);
    };
    let rest_energy = m * consts.c * consts.c;
    Ok(rest_energy / consts.hbar * res.h00 * t_loop * omega.signum())
}

/// `(2m/ħ)·Ω·(A₂ − A₁)`: the phase of the `r₂` branch relative to the `r₁` branch.
pub fn two_radius_relative_phase(
    m: f64,
    omega: f64,
    r1: f64,
    r2: f64,
    consts: &ConstantSet,
) -> Result<f64> {
    require_positive_mass(m)?;
    regime_check(omega, r1, consts)?;
    regime_check(omega, r1.max(r2), consts)?.require_linear()?;
    let d_area = PI * (r2 * r2 - r1 * r1);
    Ok(closed_form(m, omega, d_area, consts))
}
