//! Run settings assembled from defaults, `MAJMETER_CONFIG` and global flags.

use std::path::{Path, PathBuf};

use majmeter_core::asymptotics::QuadratureConfig;
use majmeter_core::exact::DEFAULT_EXACT_CAP;
use serde::Deserialize;

use crate::error::CliError;

pub const CONFIG_ENV: &str = "MAJMETER_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(default)]
    quad: QuadSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadSection {
    nodes: Option<usize>,
    rel_tol: Option<f64>,
    max_doublings: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub quad: QuadratureConfig,
    pub seed: u64,
    pub exact_cap: usize,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

/// Flag overrides; `None` keeps the file or built-in value.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub quad_nodes: Option<usize>,
    pub quad_tol: Option<f64>,
    pub seed: Option<u64>,
    pub exact_cap: Option<usize>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

fn read_file(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
}

impl RunConfig {
    pub fn resolve(config_path: Option<&Path>, o: Overrides) -> Result<Self, CliError> {
        let mut quad = QuadratureConfig::default();
        if let Some(path) = config_path {
            let file = read_file(path)?;
            if let Some(v) = file.quad.nodes {
                quad.nodes = v;
            }
            if let Some(v) = file.quad.rel_tol {
                quad.rel_tol = v;
            }
            if let Some(v) = file.quad.max_doublings {
                quad.max_doublings = v;
            }
        }
        if let Some(v) = o.quad_nodes {
            quad.nodes = v;
        }
        if let Some(v) = o.quad_tol {
            quad.rel_tol = v;
        }
        quad.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(RunConfig {
            quad,
            seed: o.seed.unwrap_or(0),
            exact_cap: o.exact_cap.unwrap_or(DEFAULT_EXACT_CAP),
            format: o.format,
            output: o.output,
        })
    }
}
