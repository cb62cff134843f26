//! Parameter grids evaluated through the protocol or the BLP measure.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use cavity_coherence::model::DEFAULT_OMEGA0;
use cavity_coherence::nonmarkov::{GridChannel, DEFAULT_SEED};
use cavity_coherence::{
    maximize_over_pairs, CoherenceSample, InitialPreparation, MeasurementStrengths, PhysicalParams,
    ProtocolConfig, StatePair, TimeGrid,
};
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::table::SeriesTable;

/// Sweepable parameters. Rates are in units of `lambda0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Theta,
    P1,
    P2,
    Omega,
    Lambda,
    T,
}

impl Param {
    pub const ALL: [Param; 6] = [Param::Theta, Param::P1, Param::P2, Param::Omega, Param::Lambda, Param::T];

    pub fn name(self) -> &'static str {
        match self {
            Param::Theta => "theta",
            Param::P1 => "p1",
            Param::P2 => "p2",
            Param::Omega => "omega",
            Param::Lambda => "lambda",
            Param::T => "t",
        }
    }

    pub fn default_value(self) -> f64 {
        match self {
            Param::Theta => FRAC_PI_2,
            Param::P1 | Param::P2 => 0.0,
            Param::Omega | Param::Lambda => 1.0,
            Param::T => 10.0,
        }
    }

    pub fn check(self, v: f64) -> Result<()> {
        let ok = match self {
            Param::Theta => v.is_finite(),
            Param::P1 | Param::P2 => (0.0..=1.0).contains(&v),
            Param::Omega | Param::T => v.is_finite() && v >= 0.0,
            Param::Lambda => v.is_finite() && v > 0.0,
        };
        if ok {
            Ok(())
        } else {
            let domain = match self {
                Param::Theta => "finite",
                Param::P1 | Param::P2 => "in [0, 1]",
                Param::Omega | Param::T => "finite and >= 0",
                Param::Lambda => "finite and > 0",
            };
            Err(CliError::domain(self.name(), format!("value {v} must be {domain}")))
        }
    }
}

impl FromStr for Param {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown parameter {s:?}")))
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    CL1,
    CRel,
    RhoEe,
    /// BLP measure; `t` is the horizon.
    N,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::CL1 => "c_l1",
            Metric::CRel => "c_rel",
            Metric::RhoEe => "rho_ee",
            Metric::N => "N",
        }
    }
}

impl FromStr for Metric {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c_l1" => Ok(Metric::CL1),
            "c_rel" => Ok(Metric::CRel),
            "rho_ee" => Ok(Metric::RhoEe),
            "N" => Ok(Metric::N),
            _ => Err(CliError::domain("metric", format!("unknown metric {s:?} (c_l1, c_rel, rho_ee, N)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub param: Param,
    pub values: Vec<f64>,
}

impl Axis {
    pub fn new(param: Param, values: Vec<f64>) -> Self {
        Self { param, values }
    }
}

/// Settings that are not sweep coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub omega0: f64,
    pub normalize: bool,
    /// Grid steps over the horizon for the BLP measure.
    pub steps: usize,
    /// Random pairs for the BLP maximization; 0 uses the canonical pair only.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            omega0: DEFAULT_OMEGA0,
            normalize: false,
            steps: 50_000,
            samples: 0,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis1: Axis,
    pub axis2: Option<Axis>,
    pub fixed: BTreeMap<Param, f64>,
    pub metric: Metric,
    pub options: SweepOptions,
}

impl SweepSpec {
    pub fn new(axis1: Axis, axis2: Option<Axis>, fixed: BTreeMap<Param, f64>, metric: Metric) -> Self {
        Self {
            axis1,
            axis2,
            fixed,
            metric,
            options: SweepOptions::default(),
        }
    }

    pub fn with_options(mut self, options: SweepOptions) -> Self {
        self.options = options;
        self
    }

    fn axes(&self) -> impl Iterator<Item = &Axis> {
        std::iter::once(&self.axis1).chain(self.axis2.as_ref())
    }

    /// Checks names, domains and the axis/fixed/metric combination; sorts the
    /// axis values ascending.
    pub fn validate(&mut self) -> Result<()> {
        if let Some(a2) = &self.axis2 {
            if a2.param == self.axis1.param {
                return Err(CliError::Usage(format!("{}: used for both axes", a2.param)));
            }
        }
        for axis in self.axes() {
            if axis.values.is_empty() {
                return Err(CliError::Usage(format!("{}: axis has no values", axis.param)));
            }
            if self.fixed.contains_key(&axis.param) {
                return Err(CliError::Usage(format!("{}: given both as axis and fixed value", axis.param)));
            }
            for &v in &axis.values {
                axis.param.check(v)?;
            }
        }
        for (&p, &v) in &self.fixed {
            p.check(v)?;
        }
        if !(self.options.omega0.is_finite() && self.options.omega0 >= 0.0) {
            return Err(CliError::domain("omega0", "must be finite and >= 0"));
        }
        if self.metric == Metric::N {
            if self.options.steps == 0 {
                return Err(CliError::domain("steps", "must be >= 1"));
            }
            let irrelevant = [Param::Theta, Param::P1, Param::P2];
            if let Some(p) = self
                .axes()
                .map(|a| a.param)
                .chain(self.fixed.keys().copied())
                .find(|p| irrelevant.contains(p))
            {
                return Err(CliError::Usage(format!("{p}: not a parameter of metric N")));
            }
        }
        for axis in [Some(&mut self.axis1), self.axis2.as_mut()].into_iter().flatten() {
            axis.values.sort_by(f64::total_cmp);
        }
        Ok(())
    }

    fn value(&self, p: Param, point: &[(Param, f64)]) -> f64 {
        point
            .iter()
            .find(|(q, _)| *q == p)
            .map(|&(_, v)| v)
            .or_else(|| self.fixed.get(&p).copied())
            .unwrap_or_else(|| match (p, self.metric) {
                (Param::T, Metric::N) => 50.0,
                _ => p.default_value(),
            })
    }

    fn column_names(&self) -> Vec<String> {
        let mut cols: Vec<String> = self.axes().map(|a| a.param.name().to_string()).collect();
        cols.push(self.metric.name().to_string());
        if self.metric == Metric::N {
            cols.push("horizon_limited".into());
        }
        cols
    }

    fn points(&self) -> Vec<Vec<(Param, f64)>> {
        let mut points = Vec::new();
        for &v1 in &self.axis1.values {
            match &self.axis2 {
                None => points.push(vec![(self.axis1.param, v1)]),
                Some(a2) => {
                    for &v2 in &a2.values {
                        points.push(vec![(self.axis1.param, v1), (a2.param, v2)]);
                    }
                }
            }
        }
        points
    }

    fn evaluate(&self, point: &[(Param, f64)]) -> Result<Vec<f64>> {
        let v = |p| self.value(p, point);
        let params = PhysicalParams::new(1.0, v(Param::Lambda), v(Param::Omega), self.options.omega0)?;
        let t = v(Param::T);
        if self.metric == Metric::N {
            let grid = TimeGrid::new(0.0, t, self.options.steps)?;
            let result = if self.options.samples == 0 {
                GridChannel::new(&params, &grid)?.measure(&StatePair::canonical())
            } else {
                maximize_over_pairs(&params, &grid, self.options.samples, self.options.seed)?
            };
            return Ok(vec![result.n_value, f64::from(u8::from(result.horizon_limited))]);
        }
        let cfg = ProtocolConfig {
            params,
            prep: InitialPreparation::new(v(Param::Theta))?,
            strengths: MeasurementStrengths::new(v(Param::P1), v(Param::P2))?,
            normalize: self.options.normalize,
        };
        let sample = CoherenceSample::evaluate(&cfg, t)?;
        Ok(vec![match self.metric {
            Metric::CL1 => sample.c_l1,
            Metric::CRel => sample.c_rel,
            Metric::RhoEe => sample.rho_ee,
            Metric::N => unreachable!("handled above"),
        }])
    }
}

/// Evaluates `spec` at every grid point, axis 1 outer and axis 2 inner.
///
/// Points are evaluated on the current rayon pool; row order does not depend
/// on scheduling.
pub fn run_sweep(spec: &SweepSpec) -> Result<SeriesTable> {
    let mut spec = spec.clone();
    spec.validate()?;
    let points = spec.points();
    let values = points
        .par_iter()
        .map(|pt| spec.evaluate(pt))
        .collect::<Result<Vec<_>>>()?;
    let mut table = SeriesTable::new(spec.column_names());
    for (pt, vals) in points.iter().zip(values) {
        let mut row: Vec<f64> = pt.iter().map(|&(_, v)| v).collect();
        row.extend(vals);
        table.push(row);
    }
    Ok(table)
}
