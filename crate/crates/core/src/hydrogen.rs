//! Circular Bohr orbits as a natural instance of the two-radius,
//! two-frequency interferometer.
//!
//! Orbit `n` has radius `n² a₀` and angular frequency `α c / (n³ a₀)`, so
//! `m_e Ω r² = n ħ`. The order-of-magnitude estimate `m_e Ω A / ħ` is then
//! `π n`, and the full loop phase `(2m_e/ħ) Ω A` is `2π n`; both are reported.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::constants::{ConstantSet, UnitSystem};
use crate::error::{Error, Result};
use crate::state::{entanglement_report, EntanglementReport, InterferometerConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BohrOrbit {
    pub n: u32,
    pub r: f64,
    pub omega: f64,
    pub area: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HydrogenPhase {
    /// `m_e Ω A / ħ`.
    pub paper_estimate: f64,
    /// `(2 m_e / ħ) Ω A`.
    pub eq1_phase: f64,
}

fn require_si(consts: &ConstantSet) -> Result<()> {
    match consts.units {
        UnitSystem::Si => Ok(()),
        UnitSystem::Natural => Err(Error::SiUnitsRequired),
    }
}

fn require_quantum_number(n: u32) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::invalid(
            "principal quantum number must be at least 1",
        ))
    }
}

pub fn bohr_orbit(n: u32, consts: &ConstantSet) -> Result<BohrOrbit> {
    require_quantum_number(n)?;
    require_si(consts)?;
    let nf = f64::from(n);
    let r = nf * nf * consts.a0;
    let omega = consts.alpha * consts.c / (nf * nf * nf * consts.a0);
    Ok(BohrOrbit {
        n,
        r,
        omega,
        area: PI * r * r,
    })
}

pub fn hydrogen_phase(n: u32, consts: &ConstantSet) -> Result<HydrogenPhase> {
    let orbit = bohr_orbit(n, consts)?;
    let paper_estimate = consts.m_e * orbit.omega * orbit.area / consts.hbar;
    Ok(HydrogenPhase {
        paper_estimate,
        eq1_phase: 2.0 * consts.m_e / consts.hbar * orbit.omega * orbit.area,
    })
}

/// Electron superposed over orbits `n1` (radius `r₁`, frequency `Ω₁`) and
/// `n2` (radius `r₂`, frequency `Ω₂`).
pub fn hydrogen_config(n1: u32, n2: u32, consts: &ConstantSet) -> Result<InterferometerConfig> {
    if n1 == n2 {
        return Err(Error::invalid(format!(
            "quantum numbers must differ, got {n1} twice"
        )));
    }
    let a = bohr_orbit(n1, consts)?;
    let b = bohr_orbit(n2, consts)?;
    Ok(InterferometerConfig {
        m: consts.m_e,
        r1: a.r,
        r2: b.r,
        omega1: a.omega,
        omega2: b.omega,
        units: consts.units,
    })
}

pub fn hydrogen_pair_report(n1: u32, n2: u32, consts: &ConstantSet) -> Result<EntanglementReport> {
    entanglement_report(&hydrogen_config(n1, n2, consts)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{constants_for, regime_check, RegimeStatus};
    use crate::state::concurrence_from_delta;

    fn si() -> ConstantSet {
        constants_for(UnitSystem::Si)
    }

    #[test]
    fn ground_state_orbit() {
        let o = bohr_orbit(1, &si()).unwrap();
        assert_eq!(o.r, 5.291_772_109_03e-11);
        assert!((o.omega / 4.134e16 - 1.0).abs() < 1e-3);
        assert!((o.omega / 4.134_137_333_5e16 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn scaling_with_n() {
        let k = si();
        let o1 = bohr_orbit(1, &k).unwrap();
        let o2 = bohr_orbit(2, &k).unwrap();
        assert_eq!(o2.r, 4.0 * o1.r);
        assert!((o2.omega / (o1.omega / 8.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quantization_and_rim_speed() {
        let k = si();
        for n in 1..=50 {
            let o = bohr_orbit(n, &k).unwrap();
            let action = k.m_e * o.omega * o.r * o.r;
            assert!((action / (f64::from(n) * k.hbar) - 1.0).abs() < 1e-9);
            let check = regime_check(o.omega, o.r, &k).unwrap();
            assert!(check.beta < 0.008);
            assert_eq!(check.status, RegimeStatus::Ok);
        }
    }

    #[test]
    fn phase_estimates() {
        let k = si();
        let p1 = hydrogen_phase(1, &k).unwrap();
        assert!((p1.paper_estimate / PI - 1.0).abs() < 1e-6);
        let p3 = hydrogen_phase(3, &k).unwrap();
        assert!((p3.paper_estimate / (3.0 * PI) - 1.0).abs() < 1e-6);
        assert!((p3.eq1_phase / (6.0 * PI) - 1.0).abs() < 1e-6);
        assert_eq!(p3.eq1_phase, 2.0 * p3.paper_estimate);
    }

    #[test]
    fn pair_report() {
        let k = si();
        let r = hydrogen_pair_report(1, 2, &k).unwrap();
        assert!((r.delta / (-26.25 * PI) - 1.0).abs() < 1e-9);
        assert!((r.concurrence - (PI / 8.0).sin()).abs() < 1e-9);
        assert!((r.concurrence - concurrence_from_delta(r.delta)).abs() < 1e-10);
        assert!((r.entropy_bits - 0.2334).abs() < 5e-4);
        let swapped = hydrogen_pair_report(2, 1, &k).unwrap();
        assert!((swapped.concurrence - r.concurrence).abs() < 1e-12);
        assert!(!r.maximal);
    }

    #[test]
    fn rejects_bad_inputs() {
        let k = si();
        assert!(bohr_orbit(0, &k).is_err());
        assert!(hydrogen_pair_report(2, 2, &k).is_err());
        assert_eq!(
            bohr_orbit(1, &constants_for(UnitSystem::Natural)),
            Err(Error::SiUnitsRequired)
        );
    }
}
