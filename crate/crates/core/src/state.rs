//! Radial ⊗ angular branch states and their entanglement.
//!
//! The particle is split over radii `r₁, r₂` while the disk rotates in a
//! superposition of `Ω₁, Ω₂`. After each branch completes its loop the joint
//! state is
//!
//! ```text
//! ½ Σ_jk e^{iφ_jk} |r_j⟩|Ω_k⟩,   φ_jk = (2m/ħ) Ω_k A_j
//! ```
//!
//! Written as a 2×2 amplitude matrix `M` (rows `r`, columns `Ω`), every
//! entanglement measure depends on the phases only through
//! `Δ = φ₁₁ + φ₂₂ − φ₁₂ − φ₂₁ = (2m/ħ)(Ω₁ − Ω₂)(A₁ − A₂)`, with concurrence
//! `2|det M| = |sin(Δ/2)|`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::constants::{regime_check, require_positive_mass, ConstantSet, RegimeCheck, UnitSystem};
use crate::error::{Error, Result};
use crate::phase::sagnac_phase;

/// Maximum allowed deviation of `Σ|M_jk|²` from one.
pub const NORM_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAXIMALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterferometerConfig {
    pub m: f64,
    pub r1: f64,
    pub r2: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub units: UnitSystem,
}

impl InterferometerConfig {
    pub fn constants(&self) -> ConstantSet {
        self.units.constants()
    }

    /// Checks mass and radii and returns the regime at the fastest rim,
    /// `(max|Ω|, max r)`.
    pub fn validate(&self) -> Result<RegimeCheck> {
        require_positive_mass(self.m)?;
        let consts = self.constants();
        for (omega, r) in [(self.omega1, self.r1), (self.omega2, self.r2)] {
            regime_check(omega, r, &consts)?;
        }
        regime_check(
            self.omega1.abs().max(self.omega2.abs()),
            self.r1.max(self.r2),
            &consts,
        )?
        .require_linear()
    }

    /// `φ_jk = (2m/ħ) Ω_k A_j`, rows indexed by radius and columns by frequency.
    pub fn branch_phases(&self) -> Result<[[f64; 2]; 2]> {
        self.validate()?;
        let consts = self.constants();
        let mut phases = [[0.0; 2]; 2];
        for (j, r) in [self.r1, self.r2].into_iter().enumerate() {
            for (k, omega) in [self.omega1, self.omega2].into_iter().enumerate() {
                phases[j][k] = sagnac_phase(self.m, omega, r, &consts)?.phi;
            }
        }
        Ok(phases)
    }
}

/// Normalized amplitudes over `{r₁, r₂} ⊗ {Ω₁, Ω₂}`.
///
/// Serialized as `{"rows", "columns", "amplitudes"}` with each amplitude an
/// `{"re", "im"}` object; deserialization re-checks normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "StateWire", try_from = "StateWire")]
pub struct PureState2x2 {
    amplitudes: [[Complex64; 2]; 2],
}

impl PureState2x2 {
    pub const ROW_LABELS: [&'static str; 2] = ["r1", "r2"];
    pub const COLUMN_LABELS: [&'static str; 2] = ["omega1", "omega2"];

    pub fn new(amplitudes: [[Complex64; 2]; 2]) -> Result<Self> {
        let norm_sqr: f64 = amplitudes.iter().flatten().map(|a| a.norm_sqr()).sum();
        if norm_sqr.is_nan() || (norm_sqr - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Unnormalized { norm_sqr });
        }
        Ok(Self { amplitudes })
    }

    pub fn amplitudes(&self) -> &[[Complex64; 2]; 2] {
        &self.amplitudes
    }

    pub fn amplitude(&self, row: usize, col: usize) -> Complex64 {
        self.amplitudes[row][col]
    }

    pub fn det(&self) -> Complex64 {
        let [[a, b], [c, d]] = self.amplitudes;
        a * d - b * c
    }

    /// Eigenvalues of the reduced state `M M†`, descending.
    fn reduced_spectrum(&self) -> [f64; 2] {
        let trace: f64 = self.amplitudes.iter().flatten().map(|a| a.norm_sqr()).sum();
        let det = self.det().norm_sqr();
        let disc = (trace * trace - 4.0 * det).max(0.0).sqrt();
        let high = 0.5 * (trace + disc);
        let low = if high > 0.0 {
            (det / high).min(high)
        } else {
            0.0
        };
        [high, low]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPair {
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize)]
struct StateWire {
    rows: [String; 2],
    columns: [String; 2],
    amplitudes: [[ComplexPair; 2]; 2],
}

impl From<PureState2x2> for StateWire {
    fn from(state: PureState2x2) -> Self {
        StateWire {
            rows: PureState2x2::ROW_LABELS.map(String::from),
            columns: PureState2x2::COLUMN_LABELS.map(String::from),
            amplitudes: state
                .amplitudes
                .map(|row| row.map(|a| ComplexPair { re: a.re, im: a.im })),
        }
    }
}

impl TryFrom<StateWire> for PureState2x2 {
    type Error = Error;

    fn try_from(wire: StateWire) -> Result<Self> {
        if wire.rows != PureState2x2::ROW_LABELS || wire.columns != PureState2x2::COLUMN_LABELS {
            return Err(Error::invalid("unexpected basis labels"));
        }
        PureState2x2::new(
            wire.amplitudes
                .map(|row| row.map(|p| Complex64::new(p.re, p.im))),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntanglementReport {
    pub delta: f64,
    pub concurrence: f64,
    pub schmidt: [f64; 2],
    pub entropy_bits: f64,
    pub maximal: bool,
}

/// `(1/√2)(e^{iφ(r₁)}, e^{iφ(r₂)})` for a disk at a single frequency.
pub fn assemble_two_radius_state(
    m: f64,
    omega: f64,
    r1: f64,
    r2: f64,
    consts: &ConstantSet,
) -> Result<[Complex64; 2]> {
    regime_check(omega, r1, consts)?;
    regime_check(omega, r1.max(r2), consts)?.require_linear()?;
    let branch =
        |r| sagnac_phase(m, omega, r, consts).map(|p| Complex64::from_polar(FRAC_1_SQRT_2, p.phi));
    Ok([branch(r1)?, branch(r2)?])
}

pub fn assemble_full_state(cfg: &InterferometerConfig) -> Result<PureState2x2> {
    if cfg.omega1 == 0.0 || cfg.omega2 == 0.0 {
        return Err(Error::NoCompleteLoop);
    }
    let phases = cfg.branch_phases()?;
    let amplitudes = phases.map(|row| row.map(|phi| Complex64::from_polar(0.5, phi)));
    PureState2x2::new(amplitudes)
}

/// `Δ = (2m/ħ)(Ω₁ − Ω₂)(A₁ − A₂)`.
pub fn entangling_phase(cfg: &InterferometerConfig) -> Result<f64> {
    cfg.validate()?;
    let consts = cfg.constants();
    let d_area = PI * (cfg.r1 * cfg.r1 - cfg.r2 * cfg.r2);
    Ok(2.0 * cfg.m / consts.hbar * (cfg.omega1 - cfg.omega2) * d_area)
}

/// `2|det M|`, clamped to `[0, 1]` against rounding.
pub fn concurrence(state: &PureState2x2) -> f64 {
    (2.0 * state.det().norm()).min(1.0)
}

pub fn concurrence_from_delta(delta: f64) -> f64 {
    (0.5 * delta).sin().abs()
}

/// Schmidt coefficients (singular values of `M`), descending.
pub fn schmidt_decompose(state: &PureState2x2) -> [f64; 2] {
    state.reduced_spectrum().map(f64::sqrt)
}

/// Von Neumann entropy of either reduced state, in bits.
pub fn entanglement_entropy(state: &PureState2x2) -> f64 {
    state
        .reduced_spectrum()
        .iter()
        .filter(|&&p| p > 0.0)
        .fold(0.0, |s, &p| s - p * p.log2())
}

pub fn is_maximally_entangled(state: &PureState2x2, tol: f64) -> Result<bool> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok((concurrence(state) - 1.0).abs() <= tol)
}

pub fn entanglement_report(cfg: &InterferometerConfig) -> Result<EntanglementReport> {
    let state = assemble_full_state(cfg)?;
    Ok(EntanglementReport {
        delta: entangling_phase(cfg)?,
        concurrence: concurrence(&state),
        schmidt: schmidt_decompose(&state),
        entropy_bits: entanglement_entropy(&state),
        maximal: is_maximally_entangled(&state, DEFAULT_MAXIMALITY_TOL)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::constants_for;
    use std::f64::consts::SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn state(m: [[f64; 2]; 2]) -> PureState2x2 {
        PureState2x2::new(m.map(|row| row.map(c))).unwrap()
    }

    fn product() -> PureState2x2 {
        state([[0.5, 0.5], [0.5, 0.5]])
    }

    fn maximal() -> PureState2x2 {
        state([[0.5, 0.5], [0.5, -0.5]])
    }

    fn worked() -> InterferometerConfig {
        InterferometerConfig {
            m: 1000.0,
            r1: 1.0,
            r2: SQRT_2,
            omega1: 0.01,
            omega2: 0.0105,
            units: UnitSystem::Natural,
        }
    }

    #[test]
    fn two_radius_state() {
        let k = constants_for(UnitSystem::Natural);
        let s = assemble_two_radius_state(1.0, 0.0, 1.0, 2.0, &k).unwrap();
        assert_eq!(s, [c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)]);
        let s = assemble_two_radius_state(1.0, 0.001, 1.0, 2.0, &k).unwrap();
        let rel = (s[1] / s[0]).arg();
        assert!((rel - 0.018_849_555_9).abs() < 1e-10);
        assert!((s[0].norm_sqr() + s[1].norm_sqr() - 1.0).abs() < 1e-15);
        assert!(assemble_two_radius_state(1.0, 0.9, 1.0, 2.0, &k).is_err());
    }

    #[test]
    fn worked_configuration_state() {
        let s = assemble_full_state(&worked()).unwrap();
        // phases 20π, 21π / 40π, 42π reduce to [[1, -1], [1, 1]] / 2
        let expected = [[0.5, -0.5], [0.5, 0.5]];
        for (j, row) in expected.iter().enumerate() {
            for (k, &e) in row.iter().enumerate() {
                let a = s.amplitude(j, k);
                assert!((a - c(e)).norm() < 1e-12, "M[{j}][{k}] = {a}");
            }
        }
        assert!((entangling_phase(&worked()).unwrap() - PI).abs() < 1e-12);
    }

    #[test]
    fn zero_frequency_is_rejected_for_full_state() {
        let cfg = InterferometerConfig {
            omega2: 0.0,
            ..worked()
        };
        assert_eq!(assemble_full_state(&cfg), Err(Error::NoCompleteLoop));
    }

    #[test]
    fn config_validation() {
        assert!(InterferometerConfig { m: 0.0, ..worked() }
            .validate()
            .is_err());
        assert!(InterferometerConfig {
            r2: -1.0,
            ..worked()
        }
        .validate()
        .is_err());
        let fast = InterferometerConfig {
            omega2: 0.8,
            ..worked()
        };
        assert!(matches!(fast.validate(), Err(Error::Regime { .. })));
        assert!(matches!(
            assemble_full_state(&fast),
            Err(Error::Regime { .. })
        ));
    }

    #[test]
    fn entangling_phase_degenerate_cases() {
        assert_eq!(
            entangling_phase(&InterferometerConfig {
                omega2: 0.01,
                ..worked()
            })
            .unwrap(),
            0.0
        );
        assert_eq!(
            entangling_phase(&InterferometerConfig {
                r2: 1.0,
                ..worked()
            })
            .unwrap(),
            0.0
        );
    }

    #[test]
    fn concurrence_examples() {
        assert!(concurrence(&product()).abs() < 1e-15);
        assert!((concurrence(&maximal()) - 1.0).abs() < 1e-15);
        assert!((concurrence(&state([[0.5, -0.5], [0.5, 0.5]])) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn concurrence_from_delta_examples() {
        assert_eq!(concurrence_from_delta(0.0), 0.0);
        assert!((concurrence_from_delta(PI) - 1.0).abs() < 1e-15);
        assert!((concurrence_from_delta(-26.25 * PI) - 0.382_683_4).abs() < 1e-7);
    }

    #[test]
    fn schmidt_examples() {
        assert_eq!(schmidt_decompose(&product()), [1.0, 0.0]);
        let s = schmidt_decompose(&maximal());
        assert!((s[0] - FRAC_1_SQRT_2).abs() < 1e-15 && (s[1] - FRAC_1_SQRT_2).abs() < 1e-15);

        let half = PI / 8.0;
        // Δ = π/4 puts the concurrence at sin(π/8)
        let st = PureState2x2::new([
            [Complex64::from_polar(0.5, PI / 4.0), c(0.5)],
            [c(0.5), c(0.5)],
        ])
        .unwrap();
        assert!((concurrence(&st) - half.sin()).abs() < 1e-15);
        let s = schmidt_decompose(&st);
        assert!((s[0] - 0.980_785).abs() < 1e-6, "{s:?}");
        assert!((s[1] - 0.195_090).abs() < 1e-6, "{s:?}");
        assert!((s[0] * s[0] + s[1] * s[1] - 1.0).abs() < 1e-12);
        assert!((entanglement_entropy(&st) - 0.2334).abs() < 5e-4);
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entanglement_entropy(&product()), 0.0);
        assert!((entanglement_entropy(&maximal()) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn maximality() {
        assert!(is_maximally_entangled(&maximal(), 1e-9).unwrap());
        assert!(!is_maximally_entangled(&product(), 1e-9).unwrap());
        let near = PureState2x2::new([
            [Complex64::from_polar(0.5, 0.999 * PI), c(0.5)],
            [c(0.5), c(0.5)],
        ])
        .unwrap();
        assert!(!is_maximally_entangled(&near, 1e-9).unwrap());
        assert!(is_maximally_entangled(&maximal(), 0.0).is_err());
    }

    #[test]
    fn unnormalized_rejected() {
        let err = PureState2x2::new([[c(1.0), c(1.0)], [c(0.0), c(0.0)]]).unwrap_err();
        assert!(matches!(err, Error::Unnormalized { norm_sqr } if norm_sqr == 2.0));
        assert!(PureState2x2::new([[c(f64::NAN), c(0.0)], [c(0.0), c(0.0)]]).is_err());
    }

    #[test]
    fn report_of_worked_configuration() {
        let r = entanglement_report(&worked()).unwrap();
        assert!((r.concurrence - 1.0).abs() < 1e-9);
        assert!((r.entropy_bits - 1.0).abs() < 1e-9);
        assert!(r.maximal);
        assert!(r.schmidt[0] >= r.schmidt[1]);
    }
}
