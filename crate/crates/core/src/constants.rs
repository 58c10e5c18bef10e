//! Unit systems, physical constants and the linear-regime guard.
//!
//! SI values are CODATA 2018, with `ħ = h / 2π` from the exact Planck constant.
//!
//! Natural units set `ħ = c = m_e = 1`; the Bohr radius is then `1/α`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Planck constant, exact by definition of the SI (J·s).
pub const PLANCK_SI: f64 = 6.626_070_15e-34;
/// Speed of light in vacuum, exact (m/s).
pub const SPEED_OF_LIGHT_SI: f64 = 299_792_458.0;
/// Electron mass (kg).
pub const ELECTRON_MASS_SI: f64 = 9.109_383_701_5e-31;
/// Bohr radius (m).
pub const BOHR_RADIUS_SI: f64 = 5.291_772_109_03e-11;
/// Fine-structure constant.
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;

/// Rim speeds above this fraction of `c` are flagged as leaving the small-perturbation regime.
pub const REGIME_WARN_BETA: f64 = 0.1;
/// Rim speeds at or above `c` are rejected.
pub const REGIME_ERROR_BETA: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum UnitSystem {
    #[default]
    #[serde(rename = "SI")]
    Si,
    #[serde(rename = "natural")]
    Natural,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantSet {
    pub units: UnitSystem,
    pub hbar: f64,
    pub c: f64,
    pub m_e: f64,
    pub a0: f64,
    pub alpha: f64,
}

pub fn constants_for(units: UnitSystem) -> ConstantSet {
    match units {
        UnitSystem::Si => ConstantSet {
            units,
            hbar: PLANCK_SI / (2.0 * PI),
            c: SPEED_OF_LIGHT_SI,
            m_e: ELECTRON_MASS_SI,
            a0: BOHR_RADIUS_SI,
            alpha: FINE_STRUCTURE,
        },
        UnitSystem::Natural => ConstantSet {
            units,
            hbar: 1.0,
            c: 1.0,
            m_e: 1.0,
            a0: 1.0 / FINE_STRUCTURE,
            alpha: FINE_STRUCTURE,
        },
    }
}

impl UnitSystem {
    pub fn constants(self) -> ConstantSet {
        constants_for(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RegimeStatus {
    Ok,
    Warn,
    Error,
}

impl RegimeStatus {
    pub fn from_beta(beta: f64) -> Self {
        if beta >= REGIME_ERROR_BETA {
            RegimeStatus::Error
        } else if beta > REGIME_WARN_BETA {
            RegimeStatus::Warn
        } else {
            RegimeStatus::Ok
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RegimeStatus::Ok => "Ok",
            RegimeStatus::Warn => "Warn",
            RegimeStatus::Error => "Error",
        }
    }
}

/// Rim speed `|Ω| r / c` and its classification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeCheck {
    pub beta: f64,
    pub status: RegimeStatus,
}

impl RegimeCheck {
    /// Fails with [`Error::Regime`] when the status is `Error`.
    pub fn require_linear(self) -> Result<Self> {
        match self.status {
            RegimeStatus::Error => Err(Error::Regime { beta: self.beta }),
            _ => Ok(self),
        }
    }
}

pub fn regime_check(omega: f64, r: f64, consts: &ConstantSet) -> Result<RegimeCheck> {
    if !omega.is_finite() {
        return Err(Error::invalid(format!(
            "angular frequency must be finite, got {omega}"
        )));
    }
    if !r.is_finite() || r < 0.0 {
        return Err(Error::invalid(format!(
            "radius must be finite and non-negative, got {r}"
        )));
    }
    let beta = omega.abs() * r / consts.c;
    Ok(RegimeCheck {
        beta,
        status: RegimeStatus::from_beta(beta),
    })
}

pub(crate) fn require_positive_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "mass must be finite and positive, got {m}"
        )))
    }
}
