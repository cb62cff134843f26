//! Trace-distance dynamics and the BLP non-Markovianity measure.
//!
//! For a pair of initial atom states the measure accumulates every increase
//! of their trace distance along a uniform time grid, i.e. the discrete
//! version of `∫_{σ>0} σ(t) dt` with `σ = dD/dt`. The maximum over pairs is
//! estimated by sampling pure states uniformly on the Bloch sphere.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{
    embed_atom_with_vacuum, evolve_dressed, reduce_to_atom, AtomState, DressedPropagator,
    PhysicalParams,
};
use crate::oracle::{TimeGrid, Trajectory};
use crate::C64;

/// Default seed for pair sampling.
pub const DEFAULT_SEED: u64 = 0x5eed_b1b0;

/// Envelope of the oscillating cross term above which a horizon is reported
/// as too short.
pub const HORIZON_ENVELOPE_TOL: f64 = 1e-2;

const TRACE_TOL: f64 = 1e-9;

/// Two normalized initial states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatePair {
    pub first: AtomState,
    pub second: AtomState,
}

impl StatePair {
    pub fn new(first: AtomState, second: AtomState) -> Result<Self> {
        check_normalized(&first)?;
        check_normalized(&second)?;
        Ok(Self { first, second })
    }

    /// `(|e><e|, |g><g|)`.
    pub fn canonical() -> Self {
        Self {
            first: AtomState::excited(),
            second: AtomState::ground(),
        }
    }

    /// `((|e> + |g>)/√2, (|e> − |g>)/√2)`.
    pub fn equatorial() -> Self {
        let s = C64::new(FRAC_1_SQRT_2, 0.0);
        Self {
            first: AtomState::pure(s, s).expect("unit amplitudes"),
            second: AtomState::pure(s, -s).expect("unit amplitudes"),
        }
    }
}

fn check_normalized(a: &AtomState) -> Result<()> {
    let tr = a.trace();
    if (tr - 1.0).abs() > TRACE_TOL {
        return Err(Error::Validation(format!("state trace {tr} is not 1")));
    }
    Ok(())
}

/// Pure state `cos(β/2)|e> + e^{iφ} sin(β/2)|g>` with `(β, φ)` uniform on
/// the Bloch sphere.
pub fn random_pure_state<R: Rng + ?Sized>(rng: &mut R) -> AtomState {
    let cos_beta: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let half = 0.5 * cos_beta.clamp(-1.0, 1.0).acos();
    AtomState::pure(C64::new(half.cos(), 0.0), C64::from_polar(half.sin(), phi))
        .expect("unit amplitudes")
}

/// `½ ‖a − b‖₁` for two normalized states.
pub fn trace_distance(a: &AtomState, b: &AtomState) -> Result<f64> {
    check_normalized(a)?;
    check_normalized(b)?;
    Ok(raw_trace_distance(a, b))
}

fn raw_trace_distance(a: &AtomState, b: &AtomState) -> f64 {
    let dee = a.rho_ee() - b.rho_ee();
    let dgg = a.rho_gg() - b.rho_gg();
    let deg = a.rho_eg() - b.rho_eg();
    let mean = 0.5 * (dee + dgg);
    let radius = (0.25 * (dee - dgg).powi(2) + deg.norm_sqr()).sqrt();
    0.5 * ((mean + radius).abs() + (mean - radius).abs())
}

/// Trace distance sampled on a grid, with forward-difference rates.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSeries {
    pub grid: TimeGrid,
    pub d: Vec<f64>,
    pub sigma: Vec<f64>,
}

impl DistanceSeries {
    /// `d` must hold one value per grid point.
    pub fn from_distances(grid: TimeGrid, d: Vec<f64>) -> Result<Self> {
        if d.len() != grid.len() {
            return Err(Error::Validation(format!(
                "{} distances for a grid of {} points",
                d.len(),
                grid.len()
            )));
        }
        let dt = grid.dt();
        let sigma = d.windows(2).map(|w| (w[1] - w[0]) / dt).collect();
        Ok(Self { grid, d, sigma })
    }

    /// Distance series of two trajectories on the same grid, e.g. from the
    /// RK4 integrator.
    pub fn from_trajectories(grid: TimeGrid, first: &Trajectory, second: &Trajectory) -> Result<Self> {
        let d = first
            .states()
            .zip(second.states())
            .map(|(a, b)| raw_trace_distance(&reduce_to_atom(a), &reduce_to_atom(b)))
            .collect();
        Self::from_distances(grid, d)
    }

    /// Sum of the positive increments of `d`.
    pub fn positive_variation(&self) -> f64 {
        let dt = self.grid.dt();
        self.sigma.iter().filter(|&&s| s > 0.0).map(|s| s * dt).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonMarkovResult {
    pub n_value: f64,
    pub pair: StatePair,
    pub horizon: f64,
    /// The oscillating part of the dynamics has not died out by the horizon,
    /// so a longer horizon could still add to `n_value`.
    pub horizon_limited: bool,
}

/// Closed-form propagators precomputed on a grid, shared across pairs.
#[derive(Debug, Clone)]
pub struct GridChannel {
    grid: TimeGrid,
    props: Vec<DressedPropagator>,
    horizon_limited: bool,
}

impl GridChannel {
    pub fn new(params: &PhysicalParams, grid: &TimeGrid) -> Result<Self> {
        let props = grid
            .times()
            .map(|t| params.propagator(t - grid.t_start()))
            .collect::<Result<Vec<_>>>()?;
        let m = params.memory_integrals(grid.t_end() - grid.t_start())?;
        let envelope = (-0.25 * (m.i_plus + m.i_minus)).exp();
        Ok(Self {
            grid: *grid,
            props,
            horizon_limited: envelope > HORIZON_ENVELOPE_TOL,
        })
    }

    pub fn horizon_limited(&self) -> bool {
        self.horizon_limited
    }

    pub fn distance_series(&self, pair: &StatePair) -> DistanceSeries {
        let r1 = embed_atom_with_vacuum(&pair.first);
        let r2 = embed_atom_with_vacuum(&pair.second);
        let d = self
            .props
            .iter()
            .map(|p| {
                let a = reduce_to_atom(&evolve_dressed(&r1, p));
                let b = reduce_to_atom(&evolve_dressed(&r2, p));
                raw_trace_distance(&a, &b)
            })
            .collect();
        DistanceSeries::from_distances(self.grid, d).expect("one distance per grid point")
    }

    pub fn measure(&self, pair: &StatePair) -> NonMarkovResult {
        NonMarkovResult {
            n_value: self.distance_series(pair).positive_variation(),
            pair: *pair,
            horizon: self.grid.t_end(),
            horizon_limited: self.horizon_limited,
        }
    }

    /// Pair with the largest measure; ties go to the earliest pair.
    pub fn best_of(&self, pairs: &[StatePair]) -> Option<NonMarkovResult> {
        pairs
            .par_iter()
            .enumerate()
            .map(|(i, pair)| (i, self.measure(pair)))
            .reduce_with(|a, b| {
                if b.1.n_value > a.1.n_value || (b.1.n_value == a.1.n_value && b.0 < a.0) {
                    b
                } else {
                    a
                }
            })
            .map(|(_, r)| r)
    }
}

/// Evolve both states of `pair` through the measurement-free channel and
/// record their trace distance on `grid`.
pub fn evolve_pair(params: &PhysicalParams, pair: &StatePair, grid: &TimeGrid) -> Result<DistanceSeries> {
    Ok(GridChannel::new(params, grid)?.distance_series(pair))
}

pub fn blp_measure(params: &PhysicalParams, pair: &StatePair, grid: &TimeGrid) -> Result<NonMarkovResult> {
    Ok(GridChannel::new(params, grid)?.measure(pair))
}

/// Candidate pairs: the canonical pair, the equatorial pair, then `samples`
/// random pure-state pairs drawn from a generator seeded with `seed`.
pub fn candidate_pairs(samples: usize, seed: u64) -> Vec<StatePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = vec![StatePair::canonical(), StatePair::equatorial()];
    pairs.extend((0..samples).map(|_| StatePair {
        first: random_pure_state(&mut rng),
        second: random_pure_state(&mut rng),
    }));
    pairs
}

/// Largest measure over [`candidate_pairs`].
pub fn maximize_over_pairs(
    params: &PhysicalParams,
    grid: &TimeGrid,
    samples: usize,
    seed: u64,
) -> Result<NonMarkovResult> {
    if samples == 0 {
        return Err(Error::domain("samples", "need at least one random pair"));
    }
    let channel = GridChannel::new(params, grid)?;
    Ok(channel
        .best_of(&candidate_pairs(samples, seed))
        .expect("candidate list is never empty"))
}
