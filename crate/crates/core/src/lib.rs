//! Simulation of a matter-wave Sagnac interferometer on a rotating disk,
//! extended to a particle superposed over two radii while the disk spins in a
//! superposition of two angular frequencies.
//!
//! The pipeline runs from the rotating-disk metric ([`metric`]) through the
//! linear-regime phase law ([`phase`]) to the four-branch radial/angular state
//! and its entanglement ([`state`]). [`design`] solves for parameters giving
//! maximal entanglement and sweeps the landscape around them; [`hydrogen`]
//! evaluates the same construction on circular Bohr orbits.

pub mod constants;
pub mod design;
mod error;
pub mod hydrogen;
pub mod metric;
pub mod phase;
pub mod state;

pub use constants::{
    constants_for, regime_check, ConstantSet, RegimeCheck, RegimeStatus, UnitSystem,
};
pub use design::{solve_omega2, solve_r2, sweep, RowStatus, SweepRow, SweepSpec, SweepVariable};
pub use error::{Error, Result};
pub use hydrogen::{
    bohr_orbit, hydrogen_config, hydrogen_pair_report, hydrogen_phase, BohrOrbit, HydrogenPhase,
};
pub use metric::{perturbation, rotating_disk_metric, DiskMetric, Perturbation};
pub use phase::{
    hamiltonian_energy, loop_time, sagnac_phase, two_radius_relative_phase, PhaseResult,
};
pub use state::{
    assemble_full_state, assemble_two_radius_state, concurrence, concurrence_from_delta,
    entanglement_entropy, entanglement_report, entangling_phase, is_maximally_entangled,
    schmidt_decompose, ComplexPair, EntanglementReport, InterferometerConfig, PureState2x2,
};
