//! Parameter design for maximal entanglement.
//!
//! `Δ` is linear in `Ω₂` and in `r₂²`, so targeting `Δ = (2k+1)π` has a closed
//! form in either parameter. [`sweep`] maps `Δ`, concurrence and entropy along
//! one parameter with the others held at a base configuration.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::constants::{regime_check, require_positive_mass, ConstantSet, RegimeStatus};
use crate::error::{Error, Result};
use crate::state::{
    assemble_full_state, concurrence, entanglement_entropy, entangling_phase, InterferometerConfig,
};

fn odd_multiple(k: i64) -> f64 {
    (2 * k + 1) as f64
}

/// `Ω₂ = Ω₁ − (2k+1)πħ / (2m(A₁ − A₂))`.
pub fn solve_omega2(
    m: f64,
    r1: f64,
    r2: f64,
    omega1: f64,
    k: i64,
    consts: &ConstantSet,
) -> Result<f64> {
    require_positive_mass(m)?;
    regime_check(omega1, r1, consts)?;
    regime_check(omega1, r2, consts)?;
    let d_area = PI * (r1 * r1 - r2 * r2);
    if d_area == 0.0 {
        return Err(Error::DegenerateRadii);
    }
    let omega2 = omega1 - odd_multiple(k) * PI * consts.hbar / (2.0 * m * d_area);
    regime_check(omega2, r1.max(r2), consts)?.require_linear()?;
    Ok(omega2)
}

/// `r₂ = √(r₁² − (2k+1)ħ / (2m(Ω₁ − Ω₂)))`.
pub fn solve_r2(
    m: f64,
    r1: f64,
    omega1: f64,
    omega2: f64,
    k: i64,
    consts: &ConstantSet,
) -> Result<f64> {
    require_positive_mass(m)?;
    regime_check(omega1, r1, consts)?;
    regime_check(omega2, r1, consts)?;
    let d_omega = omega1 - omega2;
    if d_omega == 0.0 {
        return Err(Error::DegenerateFrequencies);
    }
    let radicand = r1 * r1 - odd_multiple(k) * consts.hbar / (2.0 * m * d_omega);
    if radicand.is_nan() || radicand < 0.0 {
        return Err(Error::NoRealRadius { radicand });
    }
    let r2 = radicand.sqrt();
    regime_check(omega1.abs().max(omega2.abs()), r1.max(r2), consts)?.require_linear()?;
    Ok(r2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepVariable {
    Omega2,
    R2,
    Mass,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub varying: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub base: InterferometerConfig,
}

/// Row status: the regime at the fastest rim, or `Invalid` when the point is
/// not a usable configuration for another reason (zero frequency, negative
/// radius or mass).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowStatus {
    Ok,
    Warn,
    Error,
    Invalid,
}

impl From<RegimeStatus> for RowStatus {
    fn from(s: RegimeStatus) -> Self {
        match s {
            RegimeStatus::Ok => RowStatus::Ok,
            RegimeStatus::Warn => RowStatus::Warn,
            RegimeStatus::Error => RowStatus::Error,
        }
    }
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Ok => "Ok",
            RowStatus::Warn => "Warn",
            RowStatus::Error => "Error",
            RowStatus::Invalid => "Invalid",
        }
    }
}

/// One grid point. Measures are `None` on rows whose status is `Error` or `Invalid`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub delta: Option<f64>,
    pub concurrence: Option<f64>,
    pub entropy_bits: Option<f64>,
    pub regime: RowStatus,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::invalid("sweep count must be at least 1"));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(Error::invalid("sweep bounds must be finite"));
        }
        if self.start > self.stop {
            return Err(Error::invalid(format!(
                "sweep start {} exceeds stop {}",
                self.start, self.stop
            )));
        }
        Ok(())
    }

    /// Inclusive linear grid; a single point is the start value.
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let last = self.count - 1;
        let step = (self.stop - self.start) / last as f64;
        (0..self.count)
            .map(|i| {
                if i == last {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }

    pub fn config_at(&self, value: f64) -> InterferometerConfig {
        let mut cfg = self.base;
        match self.varying {
            SweepVariable::Omega2 => cfg.omega2 = value,
            SweepVariable::R2 => cfg.r2 = value,
            SweepVariable::Mass => cfg.m = value,
        }
        cfg
    }
}

fn evaluate(cfg: &InterferometerConfig, value: f64) -> SweepRow {
    let invalid = |regime| SweepRow {
        value,
        delta: None,
        concurrence: None,
        entropy_bits: None,
        regime,
    };
    let consts = cfg.constants();
    let fastest = regime_check(
        cfg.omega1.abs().max(cfg.omega2.abs()),
        cfg.r1.max(cfg.r2),
        &consts,
    );
    let status = match fastest {
        Ok(check) => RowStatus::from(check.status),
        Err(_) => return invalid(RowStatus::Invalid),
    };
    let measured = assemble_full_state(cfg).and_then(|state| Ok((entangling_phase(cfg)?, state)));
    match measured {
        Ok((delta, state)) => SweepRow {
            value,
            delta: Some(delta),
            concurrence: Some(concurrence(&state)),
            entropy_bits: Some(entanglement_entropy(&state)),
            regime: status,
        },
        Err(Error::Regime { .. }) => invalid(RowStatus::Error),
        Err(_) => invalid(RowStatus::Invalid),
    }
}

/// Rows in ascending order of the varied value, one per grid point.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    Ok(spec
        .values()
        .into_par_iter()
        .map(|value| evaluate(&spec.config_at(value), value))
        .collect())
}
