//! TOML experiment files.
//!
//! ```toml
//! [model]
//! kind = "zener"                 # spring-pot | voigt | maxwell | zener
//! params = { alpha = 0.5, e0 = 2.0, e_inf = 1.0, k = 1.0 }
//!
//! [load]
//! kind = "impulse"               # step | ramp | impulse | power-law | sampled
//! quantity = "stress"            # stress | strain
//! params = { magnitude = 1.0 }
//!
//! [grid]
//! dt = 0.000244140625
//! n = 4096
//! ```

use std::path::{Path, PathBuf};

use fracrheo::grid::{LoadingProgram, Program, Quantity, Signal, TimeGrid};
use fracrheo::models::{Maxwell, Model, SpringPot, Voigt, Zener};
use serde::Deserialize;
use thiserror::Error;

pub const DEFAULT_DT: f64 = 1.0 / 4096.0;
pub const DEFAULT_N: usize = 4096;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: toml::de::Error,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Model(#[from] fracrheo::Error),
}

fn field(name: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Field {
        field: name.to_string(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Numerical vs closed-form response, relative.
    pub catalog: f64,
    /// Cross-checks between the stepping and Green's function solvers, relative.
    pub agreement: f64,
    /// Recovered initial conditions, relative.
    pub ic: f64,
    /// Zero initial conditions, relative to the load scale.
    pub zero_ic: f64,
    /// Equation residual of the closed form.
    pub substitution: f64,
    /// Caputo vs Riemann-Liouville solutions for zero initial conditions, relative.
    pub caputo: f64,
    /// Minimum observed order in convergence studies.
    pub min_order: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            catalog: 1e-3,
            agreement: 5e-3,
            ic: 0.02,
            zero_ic: 1e-3,
            substitution: 1e-2,
            caputo: 1e-6,
            min_order: 0.9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSection {
    pub dt: f64,
    pub n: usize,
}

impl Default for GridSection {
    fn default() -> Self {
        Self {
            dt: DEFAULT_DT,
            n: DEFAULT_N,
        }
    }
}

impl GridSection {
    pub fn with_overrides(mut self, dt: Option<f64>, n: Option<usize>) -> Self {
        self.dt = dt.unwrap_or(self.dt);
        self.n = n.unwrap_or(self.n);
        self
    }

    pub fn build(&self) -> Result<TimeGrid, ConfigError> {
        TimeGrid::new(self.dt, self.n).map_err(|e| field("grid", e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    SpringPot,
    Voigt,
    Maxwell,
    Zener,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelParams {
    pub alpha: f64,
    pub k: Option<f64>,
    pub e: Option<f64>,
    pub lambda: Option<f64>,
    pub mu: Option<f64>,
    pub nu: Option<f64>,
    pub e0: Option<f64>,
    pub e_inf: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    pub kind: ModelKind,
    pub params: ModelParams,
}

impl ModelSection {
    pub fn build(&self) -> Result<Model, ConfigError> {
        let p = &self.params;
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| field(&format!("model.params.{name}"), "missing"))
        };
        let model = match self.kind {
            ModelKind::SpringPot => Model::SpringPot(SpringPot::new(need(p.k, "k")?, p.alpha)?),
            ModelKind::Voigt => {
                Model::Voigt(Voigt::new(need(p.e, "e")?, need(p.k, "k")?, p.alpha)?)
            }
            ModelKind::Maxwell => {
                Model::Maxwell(Maxwell::new(need(p.e, "e")?, need(p.k, "k")?, p.alpha)?)
            }
            ModelKind::Zener => match (p.lambda, p.mu, p.nu) {
                (Some(l), Some(m), Some(n)) => Model::Zener(Zener::new(l, m, n, p.alpha)?),
                (None, None, None) => Model::Zener(Zener::from_moduli(
                    need(p.e0, "e0")?,
                    need(p.e_inf, "e_inf")?,
                    need(p.k, "k")?,
                    p.alpha,
                )?),
                _ => {
                    return Err(field(
                        "model.params",
                        "zener needs either lambda, mu, nu or e0, e_inf, k",
                    ))
                }
            },
        };
        Ok(model)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LoadKind {
    Step,
    Ramp,
    Impulse,
    PowerLaw,
    Sampled,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadParams {
    pub amplitude: Option<f64>,
    pub rate: Option<f64>,
    pub magnitude: Option<f64>,
    pub coeff: Option<f64>,
    pub exponent: Option<f64>,
    /// `time,value` CSV, relative to the config file.
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadSection {
    pub kind: LoadKind,
    pub quantity: Quantity,
    #[serde(default)]
    pub params: LoadParams,
}

impl LoadSection {
    /// `base` resolves relative sample files; `grid` is checked against them.
    pub fn build(&self, base: &Path, grid: &TimeGrid) -> Result<LoadingProgram, ConfigError> {
        let p = &self.params;
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| field(&format!("load.params.{name}"), "missing"))
        };
        let program = match self.kind {
            LoadKind::Step => Program::Step {
                amplitude: need(p.amplitude, "amplitude")?,
            },
            LoadKind::Ramp => Program::Ramp {
                rate: need(p.rate, "rate")?,
            },
            LoadKind::Impulse => Program::Impulse {
                magnitude: need(p.magnitude, "magnitude")?,
            },
            LoadKind::PowerLaw => Program::PowerLaw {
                coeff: need(p.coeff, "coeff")?,
                exponent: need(p.exponent, "exponent")?,
            },
            LoadKind::Sampled => {
                let file = p
                    .file
                    .as_ref()
                    .ok_or_else(|| field("load.params.file", "missing"))?;
                let signal = read_signal(&base.join(file), self.quantity)?;
                signal
                    .check_grid(grid)
                    .map_err(|e| field("load.params.file", e.to_string()))?;
                Program::Sampled(signal)
            }
        };
        Ok(LoadingProgram::new(program, self.quantity)?)
    }
}

pub fn read_signal(path: &Path, quantity: Quantity) -> Result<Signal, ConfigError> {
    let file = std::fs::File::open(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Signal::read_csv(std::io::BufReader::new(file), quantity)?)
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub model: ModelSection,
    pub load: Option<LoadSection>,
    #[serde(default)]
    pub grid: GridSection,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub output: OutputSection,
}

/// One cell of a verification matrix.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseSpec {
    pub model: ModelSection,
    pub load: LoadSection,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MatrixConfig {
    /// Order used by the built-in matrix.
    pub alpha: f64,
    pub grid: GridSection,
    pub tolerances: Tolerances,
    pub output: OutputSection,
    /// Replaces the built-in matrix when present.
    pub cases: Option<Vec<CaseSpec>>,
}

impl Default for MatrixConfig {
    fn default() -> Self {
        Self {
            alpha: 0.5,
            grid: GridSection::default(),
            tolerances: Tolerances::default(),
            output: OutputSection::default(),
            cases: None,
        }
    }
}

pub fn load_toml<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    toml::from_str(&text).map_err(|source| ConfigError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Directory holding `path`, for resolving relative references inside it.
pub fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}
