//! Weak measurement, dissipative evolution, reversal, and coherence
//! quantifiers.
//!
//! The pipeline is
//!
//! ```text
//! |ψ0> = cos(θ/2)|e> + sin(θ/2)|g>
//!   -> K1 = diag(√(1−p1), 1)      weak measurement, damps |e>
//!   -> cavity evolution for time t
//!   -> K2 = diag(1, √(1−p2))      reversal, damps |g>
//! ```
//!
//! Post-measurement states are left unnormalized unless
//! [`ProtocolConfig::normalize`] is set.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::model::{
    embed_atom_with_vacuum, evolve_dressed, reduce_to_atom, AtomState, PhysicalParams,
};
use crate::C64;

/// Polar angle of the initial pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialPreparation {
    theta: f64,
}

impl InitialPreparation {
    /// Angles outside `[0, 2π]` are reduced mod 2π.
    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::domain("theta", format!("must be finite, got {theta}")));
        }
        let theta = if (0.0..=TAU).contains(&theta) {
            theta
        } else {
            theta.rem_euclid(TAU)
        };
        Ok(Self { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementStrengths {
    p1: f64,
    p2: f64,
}

impl MeasurementStrengths {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        Ok(Self {
            p1: check_strength("p1", p1)?,
            p2: check_strength("p2", p2)?,
        })
    }

    pub fn none() -> Self {
        Self { p1: 0.0, p2: 0.0 }
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }
}

fn check_strength(name: &'static str, p: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(Error::domain(name, format!("strength must lie in [0, 1], got {p}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolConfig {
    pub params: PhysicalParams,
    pub prep: InitialPreparation,
    pub strengths: MeasurementStrengths,
    /// Divide the final state by its trace.
    pub normalize: bool,
}

/// Coherence and populations of the protocol output at one time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceSample {
    pub t: f64,
    pub c_l1: f64,
    pub c_rel: f64,
    pub rho_ee: f64,
    pub trace: f64,
}

impl CoherenceSample {
    pub fn evaluate(cfg: &ProtocolConfig, t: f64) -> Result<Self> {
        let state = run_protocol(cfg, t)?;
        Ok(Self::from_state(t, &state))
    }

    /// The zero operator (all amplitude removed by measurement) reports
    /// `c_rel = 0`.
    pub fn from_state(t: f64, state: &AtomState) -> Self {
        let c_rel = coherence_rel_entropy(state).unwrap_or(0.0);
        Self {
            t,
            c_l1: coherence_l1(state),
            c_rel,
            rho_ee: state.rho_ee(),
            trace: state.trace(),
        }
    }
}

/// `|ψ0><ψ0|` with `|ψ0> = cos(θ/2)|e> + sin(θ/2)|g>`.
pub fn prepare_initial(prep: &InitialPreparation) -> AtomState {
    let (s, c) = (0.5 * prep.theta).sin_cos();
    let off = C64::new(s * c, 0.0);
    AtomState::from_raw([[C64::new(c * c, 0.0), off], [off, C64::new(s * s, 0.0)]])
}

/// `K a K†` for a real diagonal Kraus operator `K = diag(ke, kg)`.
fn diagonal_kraus(a: &AtomState, ke: f64, kg: f64) -> AtomState {
    let m = a.matrix();
    AtomState::from_raw([
        [m[0][0] * (ke * ke), m[0][1] * (ke * kg)],
        [m[1][0] * (ke * kg), m[1][1] * (kg * kg)],
    ])
}

/// Weak measurement of strength `p1`: `diag(√(1−p1), 1)` in `(e, g)` order.
pub fn apply_weak_measurement(a: &AtomState, p1: f64) -> Result<AtomState> {
    let p1 = check_strength("p1", p1)?;
    Ok(diagonal_kraus(a, (1.0 - p1).sqrt(), 1.0))
}

/// Measurement reversal of strength `p2`: `diag(1, √(1−p2))` in `(e, g)` order.
pub fn apply_reversal(a: &AtomState, p2: f64) -> Result<AtomState> {
    let p2 = check_strength("p2", p2)?;
    Ok(diagonal_kraus(a, 1.0, (1.0 - p2).sqrt()))
}

/// Atom state at time `t` after the full measure / evolve / reverse sequence.
pub fn run_protocol(cfg: &ProtocolConfig, t: f64) -> Result<AtomState> {
    let prop = cfg.params.propagator(t)?;
    let initial = prepare_initial(&cfg.prep);
    let measured = apply_weak_measurement(&initial, cfg.strengths.p1)?;
    let evolved = reduce_to_atom(&evolve_dressed(&embed_atom_with_vacuum(&measured), &prop));
    let reversed = apply_reversal(&evolved, cfg.strengths.p2)?;
    if cfg.normalize {
        reversed.normalized()
    } else {
        Ok(reversed)
    }
}

/// Sum of the moduli of the off-diagonal entries, on the state as given.
pub fn coherence_l1(a: &AtomState) -> f64 {
    a.rho_eg().norm() + a.rho_ge().norm()
}

/// `S(ρ_diag) − S(ρ)` in bits, evaluated on the trace-normalized state.
pub fn coherence_rel_entropy(a: &AtomState) -> Result<f64> {
    let tr = a.trace();
    if tr.is_nan() || tr <= 0.0 {
        return Err(Error::domain("trace", format!("relative entropy needs positive trace, got {tr}")));
    }
    let ee = a.rho_ee() / tr;
    let gg = a.rho_gg() / tr;
    let eg = a.rho_eg().norm() / tr;
    // eigenvalues of a unit-trace 2x2 Hermitian matrix are (1 ± r)/2
    let r = ((ee - gg).powi(2) + 4.0 * eg * eg).sqrt().min(1.0);
    let s_full = binary_entropy(0.5 * (1.0 + r));
    let s_diag = binary_entropy(ee.clamp(0.0, 1.0));
    Ok((s_diag - s_full).max(0.0))
}

fn binary_entropy(p: f64) -> f64 {
    let term = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    term(p) + term(1.0 - p)
}
