//! Plain-text sweep configuration.
//!
//! ```text
//! # Figure 1 equivalent
//! theta  = 0:6.2832:201        # start:stop:count, linear
//! lambda = 0.01:3:30:log       # start:stop:count, geometric
//! p1     = 0, 0.25, 0.5        # explicit list
//! p2     = 0.5                 # a single number is a fixed value
//! metric = c_l1
//! ```
//!
//! Any parameter whose value is a list or a range becomes a sweep axis, in
//! order of appearance; at most two are allowed.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::error::{CliError, Result};
use crate::sweep::{Axis, Metric, Param, SweepOptions, SweepSpec};

/// Upper bound on the number of values a single range may expand to.
pub const MAX_AXIS_POINTS: usize = 1_000_000;

/// Expands a list (`a, b, c`) or range (`start:stop:count[:lin|:log]`).
pub fn parse_values(s: &str) -> std::result::Result<Vec<f64>, String> {
    let s = s.trim();
    if s.contains(':') {
        parse_range(s)
    } else {
        s.split(',').map(parse_number).collect()
    }
}

fn parse_number(s: &str) -> std::result::Result<f64, String> {
    let s = s.trim();
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("not a finite number: {s:?}")),
    }
}

fn parse_range(s: &str) -> std::result::Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    let (start, stop, count, scale) = match parts.as_slice() {
        [a, b, n] => (a, b, n, "lin"),
        [a, b, n, scale] => (a, b, n, *scale),
        _ => return Err(format!("range must be start:stop:count[:lin|:log], got {s:?}")),
    };
    let start = parse_number(start)?;
    let stop = parse_number(stop)?;
    let count: usize = count
        .parse()
        .map_err(|_| format!("range count must be a positive integer, got {count:?}"))?;
    if count == 0 || count > MAX_AXIS_POINTS {
        return Err(format!("range count must lie in 1..={MAX_AXIS_POINTS}, got {count}"));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let last = (count - 1) as f64;
    let values = match scale {
        "lin" => (0..count)
            .map(|i| {
                if i == count - 1 {
                    stop
                } else {
                    start + (stop - start) * i as f64 / last
                }
            })
            .collect(),
        "log" => {
            if !(start > 0.0 && stop > 0.0) {
                return Err("log range needs positive endpoints".into());
            }
            let ratio = (stop / start).ln();
            (0..count)
                .map(|i| {
                    if i == count - 1 {
                        stop
                    } else {
                        start * (ratio * i as f64 / last).exp()
                    }
                })
                .collect()
        }
        other => return Err(format!("unknown range scale {other:?} (lin, log)")),
    };
    Ok(values)
}

/// Parses configuration text into a validated [`SweepSpec`].
pub fn parse_config_str(text: &str) -> Result<SweepSpec> {
    let mut axes: Vec<Axis> = Vec::new();
    let mut fixed = BTreeMap::new();
    let mut metric = Metric::CL1;
    let mut options = SweepOptions::default();
    let mut seen: Vec<String> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let syntax = |msg: String| CliError::Syntax { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| syntax(format!("expected `key = value`, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || value.is_empty() {
            return Err(syntax(format!("expected `key = value`, got {line:?}")));
        }
        if seen.iter().any(|k| k == key) {
            return Err(syntax(format!("duplicate key {key:?}")));
        }
        seen.push(key.to_string());

        match key {
            "metric" => metric = value.parse()?,
            "normalize" => {
                options.normalize = match value {
                    "true" => true,
                    "false" => false,
                    _ => return Err(CliError::domain("normalize", format!("expected true or false, got {value:?}"))),
                }
            }
            "omega0" => options.omega0 = parse_number(value).map_err(|m| CliError::domain("omega0", m))?,
            "steps" => options.steps = parse_count("steps", value)?,
            "samples" => options.samples = parse_count("samples", value)?,
            "seed" => {
                options.seed = value
                    .parse()
                    .map_err(|_| CliError::domain("seed", format!("expected an unsigned integer, got {value:?}")))?
            }
            _ => {
                let param: Param = key
                    .parse()
                    .map_err(|_| syntax(format!("unknown key {key:?}")))?;
                let values = parse_values(value).map_err(|m| CliError::domain(key, m))?;
                if value.contains(',') || value.contains(':') {
                    if axes.len() == 2 {
                        return Err(syntax(format!("{key}: at most two axes may be swept")));
                    }
                    axes.push(Axis::new(param, values));
                } else {
                    fixed.insert(param, values[0]);
                }
            }
        }
    }

    let mut axes = axes.into_iter();
    let axis1 = axes
        .next()
        .ok_or_else(|| CliError::Usage("config defines no sweep axis (use a list or range)".into()))?;
    let mut spec = SweepSpec::new(axis1, axes.next(), fixed, metric).with_options(options);
    spec.validate()?;
    Ok(spec)
}

fn parse_count(key: &str, value: &str) -> Result<usize> {
    value
        .parse::<usize>()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::domain(key, format!("expected a positive integer, got {value:?}")))
}

pub fn parse_config(path: &Path) -> Result<SweepSpec> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_one_config() {
        let spec =
            parse_config_str("theta = 0:6.25:201\np1 = 0.5\np2 = 0.5\nomega = 1\nlambda = 5\nt = 10\nmetric = c_l1")
                .unwrap();
        assert_eq!(spec.axis1.param, Param::Theta);
        assert_eq!(spec.axis1.values.len(), 201);
        assert_eq!(spec.axis1.values[200], 6.25);
        assert!(spec.axis2.is_none());
        assert_eq!(spec.metric, Metric::CL1);
        let expected: BTreeMap<Param, f64> = [
            (Param::P1, 0.5),
            (Param::P2, 0.5),
            (Param::Omega, 1.0),
            (Param::Lambda, 5.0),
            (Param::T, 10.0),
        ]
        .into_iter()
        .collect();
        assert_eq!(spec.fixed, expected);
    }

    #[test]
    fn out_of_domain_names_key() {
        let err = parse_config_str("theta = 0,1\np1 = 1.5").unwrap_err();
        assert!(matches!(&err, CliError::Domain { key, .. } if key == "p1"), "{err}");
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn log_range() {
        let v = parse_values("0.01:3:30:log").unwrap();
        assert_eq!(v.len(), 30);
        assert_eq!(v[0], 0.01);
        assert_eq!(v[29], 3.0);
        let ratio = v[1] / v[0];
        assert!(v.windows(2).all(|w| (w[1] / w[0] - ratio).abs() < 1e-12));
    }

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_values("1, 2,3").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(parse_values("0:1:5").unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(parse_values("2:7:1").unwrap(), vec![2.0]);
        assert!(parse_values("0:1:0").is_err());
        assert!(parse_values("0:1").is_err());
        assert!(parse_values("0:1:3:cubic").is_err());
        assert!(parse_values("-1:1:3:log").is_err());
        assert!(parse_values("nan").is_err());
        assert!(parse_values("1,,2").is_err());
        assert!(parse_values("0:1:99999999999").is_err());
    }

    #[test]
    fn malformed_lines_carry_numbers() {
        let err = parse_config_str("# header\ntheta = 0:1:3\n\nbogus line\n").unwrap_err();
        assert!(matches!(err, CliError::Syntax { line: 4, .. }), "{err}");
        let err = parse_config_str("theta = 0:1:3\ncolour = red\n").unwrap_err();
        assert!(matches!(err, CliError::Syntax { line: 2, .. }), "{err}");
        let err = parse_config_str("theta = 0:1:3\ntheta = 1\n").unwrap_err();
        assert!(matches!(err, CliError::Syntax { line: 2, .. }), "{err}");
        let err = parse_config_str("theta = 0:1:3\np1 = 0,1\np2 = 0,1\n").unwrap_err();
        assert!(matches!(err, CliError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn options_and_comments() {
        let spec = parse_config_str(
            "lambda = 0.01:3:4:log  # fig7 style\nomega = 1\nt = 50\nmetric = N\nsteps = 100\nsamples = 3\nseed = 9\nomega0 = 5\n",
        )
        .unwrap();
        assert_eq!(spec.metric, Metric::N);
        assert_eq!(spec.options.steps, 100);
        assert_eq!(spec.options.samples, 3);
        assert_eq!(spec.options.seed, 9);
        assert_eq!(spec.options.omega0, 5.0);
        assert!(parse_config_str("p1 = 0\n").is_err());
        assert!(parse_config_str("t = 0,1\nnormalize = maybe\n").is_err());
        assert!(parse_config_str("t = 0,1\nmetric = fidelity\n").is_err());
    }
}
