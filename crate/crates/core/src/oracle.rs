//! Fixed-step RK4 integration of the time-local master equation in the
//! dressed basis.
//!
//! This path knows nothing about the closed-form propagator beyond the decay
//! rates; it exists to check [`DressedPropagator`](crate::model::DressedPropagator)
//! entry by entry, phases included.

use crate::error::{Error, Result};
use crate::model::{check_time, DressedState, Mat3, PhysicalParams};
use crate::C64;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// Uniform time grid with `steps + 1` points from `t_start` to `t_end`.
///
/// `t_end == t_start` describes a single point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_start: f64,
    t_end: f64,
    steps: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, t_end: f64, steps: usize) -> Result<Self> {
        check_time(t_start)?;
        if !(t_end.is_finite() && t_end >= t_start) {
            return Err(Error::domain(
                "t_end",
                format!("must be finite and >= t_start = {t_start}, got {t_end}"),
            ));
        }
        if steps == 0 {
            return Err(Error::domain("steps", "need at least one step"));
        }
        Ok(Self {
            t_start,
            t_end,
            steps,
        })
    }

    /// Grid on `[0, t_end]` with spacing as close to `dt` as an integer step
    /// count allows.
    pub fn with_spacing(t_end: f64, dt: f64) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::domain("dt", format!("must be > 0, got {dt}")));
        }
        let steps = ((t_end / dt).round() as usize).max(1);
        Self::new(0.0, t_end, steps)
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn is_single_point(&self) -> bool {
        self.t_end == self.t_start
    }

    pub fn dt(&self) -> f64 {
        (self.t_end - self.t_start) / self.steps as f64
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        if self.is_single_point() {
            1
        } else {
            self.steps + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Time of point `i`; the last point is exactly `t_end`.
    pub fn time(&self, i: usize) -> f64 {
        if i + 1 >= self.len() {
            self.t_end
        } else {
            self.t_start + i as f64 * self.dt()
        }
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| self.time(i))
    }

    /// Same interval with twice as many steps.
    pub fn refined(&self) -> Self {
        Self {
            steps: self.steps * 2,
            ..*self
        }
    }
}

/// States sampled on a [`TimeGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    points: Vec<(f64, DressedState)>,
}

impl Trajectory {
    pub fn points(&self) -> &[(f64, DressedState)] {
        &self.points
    }

    pub fn states(&self) -> impl Iterator<Item = &DressedState> {
        self.points.iter().map(|(_, r)| r)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn last(&self) -> &DressedState {
        &self.points.last().expect("trajectory is never empty").1
    }
}

/// Time derivative of the dressed density matrix:
/// `−i[H, R] + γ+(t) D+[R] + γ−(t) D−[R]` with
/// `H = diag(ω0/2 + Ω, ω0/2 − Ω, −ω0/2)` and
/// `D±[R] = ½ |E0><E1±| R |E1±><E0| − ¼ {|E1±><E1±|, R}`.
pub fn master_rhs(params: &PhysicalParams, t: f64, r: &Mat3) -> Result<Mat3> {
    let g_plus = params.gamma_plus(t)?;
    let g_minus = params.gamma_minus(t)?;
    Ok(rhs_with_rates(params, g_plus, g_minus, r))
}

fn rhs_with_rates(params: &PhysicalParams, g_plus: f64, g_minus: f64, r: &Mat3) -> Mat3 {
    let (w0, w) = (params.omega0(), params.omega());
    let energy = [0.5 * w0 + w, 0.5 * w0 - w, -0.5 * w0];
    // rate at which each dressed level is projected out; E0 is stable
    let gamma = [g_plus, g_minus, 0.0];

    let mut out = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let commutator = C64::new(0.0, -(energy[i] - energy[j])) * r[i][j];
            let anticomm = -0.25 * (gamma[i] + gamma[j]);
            out[i][j] = commutator + r[i][j] * anticomm;
        }
    }
    out[2][2] += 0.5 * (g_plus * r[0][0] + g_minus * r[1][1]);
    out
}

fn axpy(a: &Mat3, h: f64, k: &Mat3) -> Mat3 {
    let mut out = *a;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] += k[i][j] * h;
        }
    }
    out
}

fn symmetrize(r: &mut Mat3) {
    for i in 0..3 {
        r[i][i].im = 0.0;
        for j in (i + 1)..3 {
            let avg = 0.5 * (r[i][j] + r[j][i].conj());
            r[i][j] = avg;
            r[j][i] = avg.conj();
        }
    }
}

fn all_finite(r: &Mat3) -> bool {
    r.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Classical RK4 from `r0` at `grid.t_start()` across the grid; each stored
/// state is Hermitian-symmetrized.
pub fn integrate(params: &PhysicalParams, r0: &DressedState, grid: &TimeGrid) -> Result<Trajectory> {
    let mut points = Vec::with_capacity(grid.len());
    integrate_with(params, r0, grid, |t, r| points.push((t, *r)))?;
    Ok(Trajectory { points })
}

/// Like [`integrate`] but hands each grid state to `visit` instead of storing
/// it.
pub fn integrate_with<F>(params: &PhysicalParams, r0: &DressedState, grid: &TimeGrid, mut visit: F) -> Result<()>
where
    F: FnMut(f64, &DressedState),
{
    let mut r = *r0.matrix();
    visit(grid.t_start(), r0);
    if grid.is_single_point() {
        return Ok(());
    }
    let h = grid.dt();
    for i in 0..grid.steps() {
        let t = grid.time(i);
        let rates = |s: f64| -> Result<(f64, f64)> { Ok((params.gamma_plus(s)?, params.gamma_minus(s)?)) };
        let (gp0, gm0) = rates(t)?;
        let (gp1, gm1) = rates(t + 0.5 * h)?;
        let (gp2, gm2) = rates(t + h)?;

        let k1 = rhs_with_rates(params, gp0, gm0, &r);
        let k2 = rhs_with_rates(params, gp1, gm1, &axpy(&r, 0.5 * h, &k1));
        let k3 = rhs_with_rates(params, gp1, gm1, &axpy(&r, 0.5 * h, &k2));
        let k4 = rhs_with_rates(params, gp2, gm2, &axpy(&r, h, &k3));
        for a in 0..3 {
            for b in 0..3 {
                r[a][b] += (k1[a][b] + 2.0 * k2[a][b] + 2.0 * k3[a][b] + k4[a][b]) * (h / 6.0);
            }
        }
        symmetrize(&mut r);

        let t_next = grid.time(i + 1);
        if !all_finite(&r) {
            return Err(Error::Numerical {
                t: t_next,
                what: "non-finite density matrix entry".into(),
            });
        }
        visit(t_next, &DressedState::from_raw(r));
    }
    Ok(())
}

/// Largest entrywise deviation between the closed-form propagation and the
/// RK4 trajectory over all grid points.
pub fn compare_closed_form(params: &PhysicalParams, r0: &DressedState, grid: &TimeGrid) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let mut failure = None;
    integrate_with(params, r0, grid, |t, r| {
        if failure.is_some() {
            return;
        }
        // closed form counts time from 0; the grid may start later
        match params.propagator(t - grid.t_start()) {
            Ok(p) => worst = worst.max(p.evolve(r0).max_abs_diff(r)),
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(worst),
    }
}
