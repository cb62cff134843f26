//! Canned sweeps for the seven figures.
//!
//! Figures 1 and 2 follow their captions exactly. The remaining horizons and
//! grid densities are choices made here:
//!
//! | figure | axes                                   | fixed                      |
//! |--------|----------------------------------------|----------------------------|
//! | 1      | θ ∈ [0, 2π], 201 points                | Ω=1, λ=5, t=10, p1=p2=0.5  |
//! | 2      | p1 × p2 ∈ [0, 1]², 51 × 51             | θ=π/2, Ω=1, λ=5, t=10      |
//! | 3      | Ω ∈ [1, 40] (40) × t ∈ [0, 20] (201)   | θ=π/2, λ=3, p=0            |
//! | 4      | Ω ∈ {1, 10, 40} × t ∈ [0, 1000] (2000) | θ=π/2, λ=3, p=0            |
//! | 5      | λ ∈ [0.01, 3] (60) × t ∈ [0, 20] (201) | θ=π/2, Ω=1, p=0            |
//! | 6      | λ ∈ {0.01, 0.1, 1, 3} × t ∈ [0, 20] (401) | θ=π/2, Ω=1, p=0         |
//! | 7      | λ ∈ [0.01, 3], 30 log-spaced           | Ω=1, horizon 50, 50000 steps, BLP |

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};

use crate::error::{CliError, Result};
use crate::sweep::{Axis, Metric, Param, SweepSpec};

fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    let last = (count - 1) as f64;
    (0..count)
        .map(|i| if i + 1 == count { stop } else { start + (stop - start) * i as f64 / last })
        .collect()
}

fn logspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    let ratio = (stop / start).ln();
    (0..count)
        .map(|i| if i + 1 == count { stop } else { start * (ratio * i as f64 / (count - 1) as f64).exp() })
        .collect()
}

fn fixed(pairs: &[(Param, f64)]) -> BTreeMap<Param, f64> {
    pairs.iter().copied().collect()
}

pub fn figure_spec(n: u8) -> Result<SweepSpec> {
    use Param::*;
    let unmeasured = [(Theta, FRAC_PI_2), (P1, 0.0), (P2, 0.0)];
    let spec = match n {
        1 => SweepSpec::new(
            Axis::new(Theta, linspace(0.0, TAU, 201)),
            None,
            fixed(&[(P1, 0.5), (P2, 0.5), (Omega, 1.0), (Lambda, 5.0), (T, 10.0)]),
            Metric::CL1,
        ),
        2 => SweepSpec::new(
            Axis::new(P1, linspace(0.0, 1.0, 51)),
            Some(Axis::new(P2, linspace(0.0, 1.0, 51))),
            fixed(&[(Theta, FRAC_PI_2), (Omega, 1.0), (Lambda, 5.0), (T, 10.0)]),
            Metric::CL1,
        ),
        3 => SweepSpec::new(
            Axis::new(Omega, linspace(1.0, 40.0, 40)),
            Some(Axis::new(T, linspace(0.0, 20.0, 201))),
            fixed(&[unmeasured[0], unmeasured[1], unmeasured[2], (Lambda, 3.0)]),
            Metric::CL1,
        ),
        4 => SweepSpec::new(
            Axis::new(Omega, vec![1.0, 10.0, 40.0]),
            Some(Axis::new(T, linspace(0.0, 1000.0, 2000))),
            fixed(&[unmeasured[0], unmeasured[1], unmeasured[2], (Lambda, 3.0)]),
            Metric::CL1,
        ),
        5 => SweepSpec::new(
            Axis::new(Lambda, linspace(0.01, 3.0, 60)),
            Some(Axis::new(T, linspace(0.0, 20.0, 201))),
            fixed(&[unmeasured[0], unmeasured[1], unmeasured[2], (Omega, 1.0)]),
            Metric::CL1,
        ),
        6 => SweepSpec::new(
            Axis::new(Lambda, vec![0.01, 0.1, 1.0, 3.0]),
            Some(Axis::new(T, linspace(0.0, 20.0, 401))),
            fixed(&[unmeasured[0], unmeasured[1], unmeasured[2], (Omega, 1.0)]),
            Metric::CL1,
        ),
        7 => SweepSpec::new(
            Axis::new(Lambda, logspace(0.01, 3.0, 30)),
            None,
            fixed(&[(Omega, 1.0), (T, 50.0)]),
            Metric::N,
        ),
        _ => return Err(CliError::Usage(format!("figure must be 1..=7, got {n}"))),
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_validate() {
        for n in 1..=7 {
            let mut spec = figure_spec(n).unwrap();
            spec.validate().unwrap();
        }
        assert!(figure_spec(0).is_err());
        assert!(figure_spec(8).is_err());
    }

    #[test]
    fn caption_parameters() {
        let f1 = figure_spec(1).unwrap();
        assert_eq!(f1.fixed[&Param::Omega], 1.0);
        assert_eq!(f1.fixed[&Param::Lambda], 5.0);
        assert_eq!(f1.fixed[&Param::T], 10.0);
        assert_eq!(f1.fixed[&Param::P1], 0.5);
        assert_eq!(f1.fixed[&Param::P2], 0.5);
        assert_eq!(f1.axis1.values.len(), 201);
        let f2 = figure_spec(2).unwrap();
        assert_eq!(f2.fixed[&Param::Theta], FRAC_PI_2);
        assert_eq!(f2.fixed[&Param::Lambda], 5.0);
        assert!(!f2.options.normalize);
        let f7 = figure_spec(7).unwrap();
        assert_eq!(f7.options.steps, 50_000);
        assert_eq!(f7.axis1.values.len(), 30);
    }
}
