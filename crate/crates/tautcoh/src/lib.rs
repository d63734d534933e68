//! Command-line front end for the decomposition library: JSON configs in,
//! JSON or aligned-text reports out.
//!
//! The binary has two subcommands. `compute` evaluates one query from a
//! config file (`--mode`, `--n`, `--k` override the config); `check` runs
//! the cross-validation suites. Exit codes: 0 on success, 1 on config or
//! usage problems, 2 when a check ran and failed.

pub mod config;
pub mod report;
pub mod run;

pub use config::{build_surface, load_config, ConfigFile};
pub use report::{render_json, render_text, Report};
pub use run::{evaluate, exit_code_for, Mode, Suite};
