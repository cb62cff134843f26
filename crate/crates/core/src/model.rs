//! Closed-form dynamics of the atom–cavity pair in the dressed basis.
//!
//! Basis order for [`DressedState`] is `[|E1+>, |E1->, |E0>]` with
//! `|E1±> = (|1g> ± |0e>)/√2` and `|E0> = |0g>`. Basis order for
//! [`AtomState`] is `[|e>, |g>]`.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::C64;

pub type Mat2 = [[C64; 2]; 2];
pub type Mat3 = [[C64; 3]; 3];

/// Default atomic Bohr frequency in units of `lambda0`. No reported
/// observable depends on it.
pub const DEFAULT_OMEGA0: f64 = 100.0;

/// Tolerance on Hermiticity when accepting a matrix as a state.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Tolerance on negative diagonal entries and on trace overshoot.
pub const POSITIVITY_TOL: f64 = 1e-12;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// Rate constants of the reservoir, cavity and atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    lambda0: f64,
    lambda: f64,
    omega: f64,
    omega0: f64,
}

impl PhysicalParams {
    /// `lambda0`: system–environment coupling, `lambda`: spectral width,
    /// `omega`: atom–cavity coupling, `omega0`: atomic Bohr frequency.
    pub fn new(lambda0: f64, lambda: f64, omega: f64, omega0: f64) -> Result<Self> {
        positive("lambda0", lambda0)?;
        positive("lambda", lambda)?;
        non_negative("omega", omega)?;
        non_negative("omega0", omega0)?;
        Ok(Self {
            lambda0,
            lambda,
            omega,
            omega0,
        })
    }

    /// Parameters in units where `lambda0 = 1`, with the default `omega0`.
    pub fn scaled(lambda: f64, omega: f64) -> Result<Self> {
        Self::new(1.0, lambda, omega, DEFAULT_OMEGA0)
    }

    pub fn with_omega0(self, omega0: f64) -> Result<Self> {
        Self::new(self.lambda0, self.lambda, self.omega, omega0)
    }

    pub fn with_lambda(self, lambda: f64) -> Result<Self> {
        Self::new(self.lambda0, lambda, self.omega, self.omega0)
    }

    pub fn with_omega(self, omega: f64) -> Result<Self> {
        Self::new(self.lambda0, self.lambda, omega, self.omega0)
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// Markovian regime: the spectral width exceeds twice the coupling.
    pub fn is_weak_regime(&self) -> bool {
        self.lambda > 2.0 * self.lambda0
    }

    /// `λ0 λ² / (4Ω² + λ²)`: the long-time limit of the `|E1+>` decay rate.
    pub fn gamma_plus_asymptote(&self) -> f64 {
        let l2 = self.lambda * self.lambda;
        self.lambda0 * l2 / (4.0 * self.omega * self.omega + l2)
    }

    /// Decay rate of `|E1->`, which sits on the Lorentzian peak:
    /// `λ0 (1 − e^{−λt})`.
    pub fn gamma_minus(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        Ok(-self.lambda0 * (-self.lambda * t).exp_m1())
    }

    /// Decay rate of `|E1+>`, detuned by `2Ω` from the peak. Transiently
    /// negative when `2Ω > λ`.
    pub fn gamma_plus(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        let two_omega_t = 2.0 * self.omega * t;
        let bracket = (2.0 * self.omega / self.lambda) * two_omega_t.sin() - two_omega_t.cos();
        Ok(self.gamma_plus_asymptote() * (1.0 + bracket * (-self.lambda * t).exp()))
    }

    /// Closed-form time integrals of the two decay rates.
    pub fn memory_integrals(&self, t: f64) -> Result<MemoryIntegrals> {
        check_time(t)?;
        let (l, w) = (self.lambda, self.omega);
        let x = l * t;

        let i_minus = self.lambda0 / l * x_plus_expm1_neg(x);

        let d = 4.0 * w * w + l * l;
        let decay = (-x).exp();
        let two_omega_t = 2.0 * w * t;
        // e^{-x} cos(2Ωt) − 1, written to keep the small-t digits
        let cos_term = (-x).exp_m1() * two_omega_t.cos() - 2.0 * (0.5 * two_omega_t).sin().powi(2);
        let bracket = t - 4.0 * w * decay * two_omega_t.sin() / d
            + (l * l - 4.0 * w * w) * cos_term / (l * d);
        let i_plus = self.gamma_plus_asymptote() * bracket;

        Ok(MemoryIntegrals { i_plus, i_minus })
    }

    /// The six coefficients of the closed-form dressed propagator at time `t`.
    pub fn propagator(&self, t: f64) -> Result<DressedPropagator> {
        let MemoryIntegrals { i_plus, i_minus } = self.memory_integrals(t)?;
        let phase = |freq: f64| C64::from_polar(1.0, -freq * t);
        Ok(DressedPropagator {
            a11: (-0.5 * i_plus).exp(),
            a22: (-0.5 * i_minus).exp(),
            a33: 1.0,
            a12: phase(2.0 * self.omega) * (-0.25 * (i_plus + i_minus)).exp(),
            a13: phase(self.omega0 + self.omega) * (-0.25 * i_plus).exp(),
            a23: phase(self.omega0 - self.omega) * (-0.25 * i_minus).exp(),
        })
    }
}

/// `x + e^{−x} − 1`, accurate for small `x`.
fn x_plus_expm1_neg(x: f64) -> f64 {
    if x.abs() < 1e-3 {
        // x²/2 − x³/6 + x⁴/24 − x⁵/120
        let x2 = x * x;
        x2 * (0.5 - x / 6.0 + x2 / 24.0 - x2 * x / 120.0)
    } else {
        x + (-x).exp_m1()
    }
}

pub(crate) fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain("t", format!("time must be finite and >= 0, got {t}")))
    }
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(name, format!("must be finite and > 0, got {v}")))
    }
}

fn non_negative(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(name, format!("must be finite and >= 0, got {v}")))
    }
}

/// Accumulated decay exponents `I±(t) = ∫₀ᵗ γ±(s) ds` (dimensionless).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MemoryIntegrals {
    pub i_plus: f64,
    pub i_minus: f64,
}

/// Coefficients mapping the initial dressed density matrix to its value at
/// time `t`. Entries with transposed indices are the complex conjugates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedPropagator {
    pub a11: f64,
    pub a22: f64,
    pub a33: f64,
    pub a12: C64,
    pub a13: C64,
    pub a23: C64,
}

impl DressedPropagator {
    pub fn identity() -> Self {
        let one = C64::new(1.0, 0.0);
        Self {
            a11: 1.0,
            a22: 1.0,
            a33: 1.0,
            a12: one,
            a13: one,
            a23: one,
        }
    }

    pub fn evolve(&self, r0: &DressedState) -> DressedState {
        evolve_dressed(r0, self)
    }
}

/// Density matrix of the atom–cavity pair in the dressed basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedState {
    r: Mat3,
}

impl DressedState {
    /// Accepts `r` if it is finite, Hermitian, has a non-negative diagonal and
    /// trace at most one.
    pub fn new(r: Mat3) -> Result<Self> {
        let flat: Vec<C64> = r.iter().flatten().copied().collect();
        check_finite(&flat)?;
        let dev = hermitian_deviation3(&r);
        if dev > HERMITIAN_TOL {
            return Err(Error::Validation(format!(
                "dressed matrix is not Hermitian (deviation {dev:e})"
            )));
        }
        check_diagonal(&[r[0][0].re, r[1][1].re, r[2][2].re])?;
        Ok(Self { r })
    }

    /// Projector onto dressed basis vector `k` (0: `|E1+>`, 1: `|E1->`, 2: `|E0>`).
    pub fn projector(k: usize) -> Self {
        assert!(k < 3, "dressed basis index {k} out of range");
        let mut r = [[ZERO; 3]; 3];
        r[k][k] = C64::new(1.0, 0.0);
        Self { r }
    }

    pub(crate) fn from_raw(r: Mat3) -> Self {
        Self { r }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.r
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.r[i][j]
    }

    pub fn trace(&self) -> f64 {
        self.r[0][0].re + self.r[1][1].re + self.r[2][2].re
    }

    pub fn hermitian_deviation(&self) -> f64 {
        hermitian_deviation3(&self.r)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &DressedState) -> f64 {
        self.r
            .iter()
            .flatten()
            .zip(other.r.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Density matrix of the atom alone, possibly sub-normalized after a
/// measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomState {
    m: Mat2,
}

impl AtomState {
    /// Accepts `m` if it is finite, Hermitian, has a non-negative diagonal and
    /// trace in `[0, 1]`.
    pub fn new(m: Mat2) -> Result<Self> {
        let flat: Vec<C64> = m.iter().flatten().copied().collect();
        check_finite(&flat)?;
        let dev = hermitian_deviation2(&m);
        if dev > HERMITIAN_TOL {
            return Err(Error::Validation(format!(
                "atom matrix is not Hermitian (deviation {dev:e})"
            )));
        }
        check_diagonal(&[m[0][0].re, m[1][1].re])?;
        Ok(Self { m })
    }

    /// `|ψ><ψ|` for `|ψ> = ce|e> + cg|g>`; the amplitudes are normalized.
    pub fn pure(ce: C64, cg: C64) -> Result<Self> {
        let norm = (ce.norm_sqr() + cg.norm_sqr()).sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Validation("pure state with zero norm".into()));
        }
        let (ce, cg) = (ce / norm, cg / norm);
        Ok(Self {
            m: [
                [ce * ce.conj(), ce * cg.conj()],
                [cg * ce.conj(), cg * cg.conj()],
            ],
        })
    }

    pub fn excited() -> Self {
        Self::diagonal(1.0, 0.0)
    }

    pub fn ground() -> Self {
        Self::diagonal(0.0, 1.0)
    }

    pub(crate) fn diagonal(ee: f64, gg: f64) -> Self {
        Self {
            m: [
                [C64::new(ee, 0.0), ZERO],
                [ZERO, C64::new(gg, 0.0)],
            ],
        }
    }

    pub(crate) fn from_raw(m: Mat2) -> Self {
        Self { m }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn rho_ee(&self) -> f64 {
        self.m[0][0].re
    }

    pub fn rho_gg(&self) -> f64 {
        self.m[1][1].re
    }

    pub fn rho_eg(&self) -> C64 {
        self.m[0][1]
    }

    pub fn rho_ge(&self) -> C64 {
        self.m[1][0]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0].re + self.m[1][1].re
    }

    pub fn hermitian_deviation(&self) -> f64 {
        hermitian_deviation2(&self.m)
    }

    /// The state divided by its trace.
    pub fn normalized(&self) -> Result<Self> {
        let tr = self.trace();
        if tr <= 0.0 {
            return Err(Error::domain("trace", format!("cannot normalize a state with trace {tr}")));
        }
        Ok(self.scaled(1.0 / tr))
    }

    pub(crate) fn scaled(&self, s: f64) -> Self {
        let mut m = self.m;
        m.iter_mut().flatten().for_each(|z| *z *= s);
        Self { m }
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &AtomState) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn check_finite(entries: &[C64]) -> Result<()> {
    if entries.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::Validation("matrix has non-finite entries".into()))
    }
}

fn check_diagonal(diag: &[f64]) -> Result<()> {
    if let Some(d) = diag.iter().find(|&&d| d < -POSITIVITY_TOL) {
        return Err(Error::Validation(format!("negative population {d}")));
    }
    let tr: f64 = diag.iter().sum();
    if tr > 1.0 + POSITIVITY_TOL {
        return Err(Error::Validation(format!("trace {tr} exceeds 1")));
    }
    Ok(())
}

fn hermitian_deviation3(r: &Mat3) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..3 {
        for j in i..3 {
            dev = dev.max((r[i][j] - r[j][i].conj()).norm());
        }
    }
    dev
}

fn hermitian_deviation2(m: &Mat2) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..2 {
        for j in i..2 {
            dev = dev.max((m[i][j] - m[j][i].conj()).norm());
        }
    }
    dev
}

/// Applies the closed-form propagator to an initial dressed state.
///
/// Populations of `|E1±>` decay into `|E0>`; coherences pick up the phases
/// and damping carried by the propagator. The trace is preserved exactly.
pub fn evolve_dressed(r0: &DressedState, p: &DressedPropagator) -> DressedState {
    let r = &r0.r;
    let mut out = [[ZERO; 3]; 3];
    out[0][0] = r[0][0] * p.a11;
    out[1][1] = r[1][1] * p.a22;
    out[2][2] = r[0][0] * (1.0 - p.a11) + r[1][1] * (1.0 - p.a22) + r[2][2] * p.a33;
    out[0][1] = p.a12 * r[0][1];
    out[0][2] = p.a13 * r[0][2];
    out[1][2] = p.a23 * r[1][2];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        out[j][i] = out[i][j].conj();
    }
    // populations are real by construction
    for k in 0..3 {
        out[k][k].im = 0.0;
    }
    DressedState { r: out }
}

/// Tensor an atom state with the empty cavity and express it in the dressed
/// basis.
pub fn embed_atom_with_vacuum(a: &AtomState) -> DressedState {
    let ee = a.m[0][0];
    let eg = a.m[0][1];
    let half_ee = ee * 0.5;
    let eg_s = eg * FRAC_1_SQRT_2;
    let mut r = [[ZERO; 3]; 3];
    r[0][0] = half_ee;
    r[1][1] = half_ee;
    r[0][1] = -half_ee;
    r[0][2] = eg_s;
    r[1][2] = -eg_s;
    r[2][2] = a.m[1][1];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        r[j][i] = r[i][j].conj();
    }
    DressedState { r }
}

/// Trace out the cavity from a dressed-basis state.
pub fn reduce_to_atom(r: &DressedState) -> AtomState {
    let r = &r.r;
    let ee = 0.5 * (r[0][0] - r[0][1] - r[1][0] + r[1][1]).re;
    let gg = (0.5 * (r[0][0] + r[0][1] + r[1][0] + r[1][1]) + r[2][2]).re;
    let eg = (r[0][2] - r[1][2]) * FRAC_1_SQRT_2;
    AtomState {
        m: [
            [C64::new(ee, 0.0), eg],
            [eg.conj(), C64::new(gg, 0.0)],
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(lambda: f64, omega: f64) -> PhysicalParams {
        PhysicalParams::scaled(lambda, omega).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert!(PhysicalParams::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, -1.0, 1.0, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, -0.1, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, f64::NAN, 1.0, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, 1.0, f64::INFINITY).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn weak_regime_threshold() {
        assert!(p(3.0, 1.0).is_weak_regime());
        assert!(!p(2.0, 1.0).is_weak_regime());
        assert!(!p(0.1, 1.0).is_weak_regime());
    }

    #[test]
    fn negative_time_is_a_domain_error() {
        let params = p(5.0, 1.0);
        assert!(matches!(params.gamma_minus(-1.0), Err(Error::Domain { name: "t", .. })));
        assert!(params.gamma_plus(-1e-9).is_err());
        assert!(params.memory_integrals(-2.0).is_err());
        assert!(params.propagator(f64::NAN).is_err());
    }

    #[test]
    fn gamma_minus_values() {
        assert_eq!(p(5.0, 1.0).gamma_minus(0.0).unwrap(), 0.0);
        assert_relative_eq!(p(5.0, 1.0).gamma_minus(10.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(
            p(0.1, 1.0).gamma_minus(10.0).unwrap(),
            0.632_120_558_828_557_7,
            epsilon = 1e-14
        );
    }

    #[test]
    fn gamma_minus_is_derivative_of_i_minus() {
        let params = p(0.1, 1.0);
        let (t, h) = (10.0, 1e-4);
        let slope = (params.memory_integrals(t + h).unwrap().i_minus
            - params.memory_integrals(t - h).unwrap().i_minus)
            / (2.0 * h);
        assert_relative_eq!(slope, params.gamma_minus(t).unwrap(), epsilon = 1e-8);
    }

    #[test]
    fn gamma_plus_values() {
        assert_eq!(p(5.0, 1.0).gamma_plus(0.0).unwrap(), 0.0);
        assert_relative_eq!(p(5.0, 1.0).gamma_plus(200.0).unwrap(), 25.0 / 29.0, epsilon = 1e-14);
        // 2π J(ω0 + Ω) with the peak at ω0 − Ω: λ0 λ² / ((2Ω)² + λ²)
        let lorentz = 1.0 * 25.0 / (4.0 + 25.0);
        assert_relative_eq!(p(5.0, 1.0).gamma_plus_asymptote(), lorentz, epsilon = 1e-15);

        let t = std::f64::consts::FRAC_PI_4;
        let expected = 0.01 / 4.01 * (1.0 + 20.0 * (-0.1 * t).exp());
        let got = p(0.1, 1.0).gamma_plus(t).unwrap();
        assert_relative_eq!(got, expected, epsilon = 1e-15);
        assert_relative_eq!(got, 0.048_601_758_123_504, epsilon = 1e-12);
    }

    #[test]
    fn gamma_plus_goes_negative_for_strong_coupling() {
        let params = p(0.1, 10.0);
        let min = (0..2000)
            .map(|k| params.gamma_plus(k as f64 * 0.005).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!(min < 0.0);
    }

    #[test]
    fn memory_integrals_values() {
        let zero = p(5.0, 1.0).memory_integrals(0.0).unwrap();
        assert_eq!(zero.i_plus, 0.0);
        assert_eq!(zero.i_minus, 0.0);

        // quadrature of the decay rates (scipy quad, epsrel 1e-13)
        let m = p(5.0, 1.0).memory_integrals(10.0).unwrap();
        assert_relative_eq!(m.i_minus, 9.8, max_relative = 1e-12);
        assert_relative_eq!(m.i_plus, 8.495_838_287_752_674, max_relative = 1e-10);
        let m = p(3.0, 1.0).memory_integrals(10.0).unwrap();
        assert_relative_eq!(m.i_minus, 9.666_666_666_666_698, max_relative = 1e-10);
        assert_relative_eq!(m.i_plus, 6.834_319_526_627_204, max_relative = 1e-10);
    }

    #[test]
    fn memory_integrals_small_time_series() {
        let params = p(0.01, 0.0);
        let t = 1e-3;
        let m = params.memory_integrals(t).unwrap();
        // λ t²/2 − λ² t³/6 for both when Ω = 0
        let exact = 0.01 * t * t / 2.0 - 1e-4 * t * t * t / 6.0;
        assert_relative_eq!(m.i_minus, exact, max_relative = 1e-10);
        assert_relative_eq!(m.i_plus, exact, max_relative = 1e-6);
    }

    #[test]
    fn propagator_at_zero_is_identity() {
        let prop = p(5.0, 1.0).propagator(0.0).unwrap();
        assert_eq!(prop, DressedPropagator::identity());
    }

    #[test]
    fn propagator_moduli() {
        let prop = p(5.0, 1.0).propagator(10.0).unwrap();
        assert_relative_eq!(prop.a13.norm(), 0.119_557_294_343_366_47, epsilon = 1e-12);
        assert_relative_eq!(prop.a23.norm(), 0.086_293_586_499_370_54, epsilon = 1e-12);
        assert_relative_eq!(prop.a12.norm(), (prop.a11 * prop.a22).sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn ground_state_is_stationary() {
        let params = p(0.1, 10.0);
        let g = DressedState::projector(2);
        for t in [0.0, 0.3, 7.0, 100.0] {
            let out = evolve_dressed(&g, &params.propagator(t).unwrap());
            assert_eq!(out, g);
        }
    }

    #[test]
    fn lower_branch_decays_into_ground() {
        let prop = p(5.0, 1.0).propagator(10.0).unwrap();
        let out = evolve_dressed(&DressedState::projector(1), &prop);
        assert_relative_eq!(out.get(1, 1).re, 0.007_446_583_070_924_344, epsilon = 1e-14);
        assert_relative_eq!(out.get(2, 2).re, 1.0 - 0.007_446_583_070_924_344, epsilon = 1e-14);
    }

    #[test]
    fn identity_propagator_leaves_state_alone() {
        let a = AtomState::pure(C64::new(0.6, 0.0), C64::new(0.0, 0.8)).unwrap();
        let r = embed_atom_with_vacuum(&a);
        assert_eq!(evolve_dressed(&r, &DressedPropagator::identity()), r);
    }

    #[test]
    fn rejects_non_hermitian_dressed() {
        let mut r = *DressedState::projector(0).matrix();
        r[0][1] = C64::new(0.1, 0.0);
        assert!(matches!(DressedState::new(r), Err(Error::Validation(_))));
        let mut r = *DressedState::projector(0).matrix();
        r[0][0] = C64::new(1.5, 0.0);
        assert!(DressedState::new(r).is_err());
    }

    #[test]
    fn rejects_non_hermitian_atom() {
        let mut m = *AtomState::excited().matrix();
        m[0][1] = C64::new(0.0, 0.2);
        assert!(matches!(AtomState::new(m), Err(Error::Validation(_))));
        let m = [[C64::new(-0.1, 0.0), ZERO], [ZERO, C64::new(1.0, 0.0)]];
        assert!(AtomState::new(m).is_err());
    }

    #[test]
    fn embed_excited_and_ground() {
        let r = embed_atom_with_vacuum(&AtomState::excited());
        assert_eq!(r.get(0, 0).re, 0.5);
        assert_eq!(r.get(1, 1).re, 0.5);
        assert_eq!(r.get(0, 1).re, -0.5);
        assert_eq!(r.get(1, 0).re, -0.5);
        assert_eq!(r.get(2, 2).re, 0.0);
        assert_eq!(embed_atom_with_vacuum(&AtomState::ground()), DressedState::projector(2));
    }

    #[test]
    fn reduce_basis_states() {
        let g = reduce_to_atom(&DressedState::projector(2));
        assert_eq!(g, AtomState::ground());
        let upper = reduce_to_atom(&DressedState::projector(0));
        assert_relative_eq!(upper.rho_ee(), 0.5);
        assert_relative_eq!(upper.rho_gg(), 0.5);
        assert_eq!(upper.rho_eg(), ZERO);
    }

    #[test]
    fn excited_population_at_markovian_point() {
        let params = p(3.0, 1.0);
        let prop = params.propagator(10.0).unwrap();
        let a = reduce_to_atom(&evolve_dressed(&embed_atom_with_vacuum(&AtomState::excited()), &prop));
        assert_relative_eq!(a.rho_ee(), 0.013_488_558_557_524_11, epsilon = 1e-13);
        assert_relative_eq!(a.trace(), 1.0, epsilon = 1e-15);
    }
}
