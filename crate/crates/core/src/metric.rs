//! Metric of a rotating disk in co-rotating cylindrical coordinates
//! `(t, r, φ, z)` with signature `(−,+,+,+)`, and its split into the flat
//! cylindrical background plus a perturbation.
//!
//! Components carry the `1/c` factors of the time-like row as written in the
//! usual rotating-frame line element with `x⁰ = t`, i.e. `g₀φ = Ω r²/c`.

use serde::{Deserialize, Serialize};

use crate::constants::{regime_check, ConstantSet};
use crate::error::Result;

pub type Components = [[f64; 4]; 4];

pub const T: usize = 0;
pub const R: usize = 1;
pub const PHI: usize = 2;
pub const Z: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskMetric {
    pub g: Components,
    pub omega: f64,
    pub r: f64,
    /// Speed of light of the unit system the metric was built in.
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Perturbation {
    pub h00: f64,
    pub h0phi: f64,
    pub full: Components,
}

/// `diag(−1, 1, r², 1)`.
pub fn minkowski_background(r: f64) -> Components {
    let mut eta = [[0.0; 4]; 4];
    eta[T][T] = -1.0;
    eta[R][R] = 1.0;
    eta[PHI][PHI] = r * r;
    eta[Z][Z] = 1.0;
    eta
}

fn h00_of(omega: f64, r: f64, c: f64) -> f64 {
    let beta = omega * r / c;
    beta * beta
}

pub fn rotating_disk_metric(omega: f64, r: f64, consts: &ConstantSet) -> Result<DiskMetric> {
    regime_check(omega, r, consts)?.require_linear()?;
    let c = consts.c;
    let mut g = minkowski_background(r);
    g[T][T] = -1.0 + h00_of(omega, r, c);
    g[T][PHI] = omega * r * r / c;
    g[PHI][T] = g[T][PHI];
    Ok(DiskMetric { g, omega, r, c })
}

pub fn perturbation(metric: &DiskMetric) -> Perturbation {
    let eta = minkowski_background(metric.r);
    let mut full = [[0.0; 4]; 4];
    for (i, row) in full.iter_mut().enumerate() {
        for (j, h) in row.iter_mut().enumerate() {
            *h = metric.g[i][j] - eta[i][j];
        }
    }
    full[T][T] = h00_of(metric.omega, metric.r, metric.c);
    Perturbation {
        h00: full[T][T],
        h0phi: full[T][PHI],
        full,
    }
}

impl Perturbation {
    /// `η + h`, which reproduces the metric the perturbation was taken from.
    pub fn recombine(&self, r: f64) -> Components {
        let mut g = minkowski_background(r);
        for (i, row) in g.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v += self.full[i][j];
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{constants_for, regime_check, UnitSystem};
    use crate::Error;
    use proptest::prelude::*;

    fn natural() -> ConstantSet {
        constants_for(UnitSystem::Natural)
    }

    #[test]
    fn static_disk_is_cylindrical_minkowski() {
        let m = rotating_disk_metric(0.0, 2.0, &natural()).unwrap();
        let mut expected = [[0.0; 4]; 4];
        expected[0][0] = -1.0;
        expected[1][1] = 1.0;
        expected[2][2] = 4.0;
        expected[3][3] = 1.0;
        assert_eq!(m.g, expected);
        let p = perturbation(&m);
        assert_eq!(p.full, [[0.0; 4]; 4]);
        assert_eq!(p.h00, 0.0);
        assert_eq!(p.h0phi, 0.0);
    }

    #[test]
    fn substituted_components() {
        let m = rotating_disk_metric(0.1, 1.0, &natural()).unwrap();
        assert!((m.g[0][0] + 0.99).abs() < 1e-15);
        assert_eq!(m.g[0][2], 0.1);
        assert_eq!(m.g[2][0], 0.1);
        assert_eq!(m.g[2][2], 1.0);
        for (i, j) in [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)] {
            assert_eq!(m.g[i][j], 0.0);
            assert_eq!(m.g[j][i], 0.0);
        }
    }

    #[test]
    fn perturbation_example() {
        let p = perturbation(&rotating_disk_metric(0.1, 2.0, &natural()).unwrap());
        assert!((p.h00 - 0.04).abs() < 1e-15);
        assert!((p.h0phi - 0.4).abs() < 1e-15);
        assert_eq!(p.full[2][2], 0.0);
    }

    #[test]
    fn si_components_carry_c() {
        let k = constants_for(UnitSystem::Si);
        let (omega, r) = (1.0e3, 10.0);
        let m = rotating_disk_metric(omega, r, &k).unwrap();
        let p = perturbation(&m);
        let expected = omega * omega * r * r / (k.c * k.c);
        assert!((p.h00 / expected - 1.0).abs() < 1e-14);
        assert!((m.g[0][2] / (omega * r * r / k.c) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn error_regime_and_negative_radius_rejected() {
        let k = natural();
        assert!(matches!(
            rotating_disk_metric(2.0, 1.0, &k),
            Err(Error::Regime { .. })
        ));
        assert!(matches!(
            rotating_disk_metric(0.1, -1.0, &k),
            Err(Error::InvalidInput(_))
        ));
    }

    proptest! {
        #[test]
        fn background_plus_perturbation_round_trips(omega in -0.9f64..0.9, r in 0.0f64..1.0) {
            let m = rotating_disk_metric(omega, r, &natural()).unwrap();
            let p = perturbation(&m);
            prop_assert_eq!(p.recombine(r), m.g);
        }

        #[test]
        fn parity_in_omega(omega in 0.0f64..0.9, r in 0.0f64..1.0) {
            let k = natural();
            let plus = perturbation(&rotating_disk_metric(omega, r, &k).unwrap());
            let minus = perturbation(&rotating_disk_metric(-omega, r, &k).unwrap());
            prop_assert_eq!(plus.h00, minus.h00);
            prop_assert_eq!(plus.h0phi, -minus.h0phi);
        }

        #[test]
        fn h00_is_beta_squared(omega in -0.9f64..0.9, r in 0.0f64..1.0) {
            let k = natural();
            let beta = regime_check(omega, r, &k).unwrap().beta;
            let p = perturbation(&rotating_disk_metric(omega, r, &k).unwrap());
            prop_assert_eq!(p.h00, beta * beta);
            prop_assert!(p.h00 >= 0.0);
        }
    }
}
