//! Sweep engine, figure presets, configuration parsing and CSV output for the
//! `cavcoh` command-line tool.

pub mod config;
pub mod error;
pub mod presets;
pub mod sweep;
pub mod table;

pub use config::{parse_config, parse_config_str, parse_values};
pub use error::{CliError, Result};
pub use presets::figure_spec;
pub use sweep::{run_sweep, Axis, Metric, Param, SweepOptions, SweepSpec};
pub use table::SeriesTable;
