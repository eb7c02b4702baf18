//! Recovering initial-condition values from a recorded twin history.
//!
//! The twin is the quantity imposed by the loading program (stress for
//! creep-type tests, strain for relaxation-type tests), recorded from the
//! origin up to some `t = a`. Integrating the constitutive law once and
//! letting `a → 0⁺`, every term acting on the response vanishes and the
//! twin side reduces to its first integral `∫₀ᵃ twin`. This is zero for
//! finite loads and equals the impulse magnitude for a Dirac load. Scaling
//! by the model coefficient in front of the response's `D^{α-1}` term
//! gives the initial-condition value.
//!
//! The integral is evaluated with the plain Grünwald-Letnikov sum of order
//! `-1` with the twin at rest at the origin (the right-endpoint rectangle
//! rule). A box of width `dt` and height `B/dt` standing in for an impulse
//! then integrates to `B` exactly.

use crate::error::{invalid, Error, Result};
use crate::fracops::{gl_deriv_with, GlOptions};
use crate::grid::{Quantity, Signal, SingularSignal};
use crate::models::Model;

/// Minimum number of samples kept at the shortest truncation.
pub const MIN_SAMPLES: usize = 8;

/// Observed and assumed orders may differ by this fraction before the
/// observed one is used.
pub const ORDER_SLACK: f64 = 0.2;

#[derive(Debug, Clone, PartialEq)]
pub struct TwinHistory {
    recorded: Signal,
    model: Model,
}

impl TwinHistory {
    /// `recorded` must be tagged stress or strain; it is integrated up to
    /// its last sample, `a = n·dt`.
    pub fn new(recorded: Signal, model: Model) -> Result<Self> {
        if recorded.quantity() == Quantity::Generic {
            return Err(invalid(
                "the recorded twin must be tagged as stress or strain",
            ));
        }
        model.impulse_ic_factor(recorded.quantity())?;
        Ok(Self { recorded, model })
    }

    pub fn recorded(&self) -> &Signal {
        &self.recorded
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    /// End of the record.
    pub fn a(&self) -> f64 {
        self.recorded.grid().end()
    }

    /// Factor turning the twin-side limit into the initial-condition value.
    pub fn ic_factor(&self) -> f64 {
        self.model
            .impulse_ic_factor(self.recorded.quantity())
            .unwrap_or(f64::NAN)
    }

    /// `∫₀ᵗ twin` at every grid point.
    fn running_integral(&self) -> Result<Vec<f64>> {
        let d = gl_deriv_with(
            &SingularSignal::regular(self.recorded.clone()),
            -1.0,
            GlOptions::grunwald(),
        )?;
        Ok(d.values())
    }
}

/// Twin side of the once-integrated constitutive law at `t = a`.
pub fn estimate_at(h: &TwinHistory) -> Result<f64> {
    Ok(*h.running_integral()?.last().expect("grids are never empty"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Extrapolation {
    /// `(a_i, estimate_at(a_i))`, longest record first.
    pub samples: Vec<(f64, f64)>,
    /// Limit of the twin side as `a → 0⁺`.
    pub limit: f64,
    /// Initial-condition value implied by `limit`.
    pub ic_value: f64,
    /// Decay order in `a` used for the final Richardson step.
    pub order: f64,
    /// False when successive differences fail to contract.
    pub converged: bool,
    /// Size of the Richardson correction plus the change of the estimate
    /// across one sampling cell.
    pub error_bar: f64,
}

/// Evaluates the twin side at `a_i = a/2^i`, `i = 0..=halvings`, and
/// extrapolates to `a → 0⁺` assuming first-order decay unless the data
/// show a clearly different order.
pub fn extrapolate(h: &TwinHistory, halvings: usize) -> Result<Extrapolation> {
    if halvings == 0 {
        return Err(invalid("at least one halving is needed"));
    }
    let n = h.recorded.grid().len();
    if n >> halvings < MIN_SAMPLES {
        return Err(Error::InsufficientSamples(format!(
            "{n} samples cannot be halved {halvings} times keeping {MIN_SAMPLES} per record"
        )));
    }
    let grid = h.recorded.grid();
    let running = h.running_integral()?;
    let samples: Vec<(f64, f64)> = (0..=halvings)
        .map(|i| {
            let k = n >> i;
            (grid.t(k), running[k - 1])
        })
        .collect();
    let scale = samples
        .iter()
        .map(|s| s.1.abs())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let diffs: Vec<f64> = samples.windows(2).map(|w| w[0].1 - w[1].1).collect();
    let (a_prev, e_prev) = samples[samples.len() - 2];
    let (a_last, e_last) = samples[samples.len() - 1];
    let tiny = 1e-14 * scale;

    if diffs.iter().all(|d| d.abs() <= tiny) {
        return Ok(Extrapolation {
            samples,
            limit: e_last,
            ic_value: e_last * h.ic_factor(),
            order: 1.0,
            converged: true,
            error_bar: 0.0,
        });
    }

    let mut order = 1.0;
    if diffs.len() >= 2 {
        let (d1, d2) = (diffs[diffs.len() - 2], diffs[diffs.len() - 1]);
        let ratio_a = samples[samples.len() - 3].0 / a_prev;
        let observed = (d1 / d2).abs().ln() / ratio_a.ln();
        if observed.is_finite() && observed > 0.0 && (observed - 1.0).abs() > ORDER_SLACK {
            order = observed;
        }
    }
    let (pp, pl) = (a_prev.powf(order), a_last.powf(order));
    let limit = (e_last * pp - e_prev * pl) / (pp - pl);
    let converged = diffs
        .windows(2)
        .all(|w| w[1].abs() <= w[0].abs() + tiny && w[0] * w[1] >= 0.0);
    let slope = (e_prev - e_last).abs() / (a_prev - a_last);
    Ok(Extrapolation {
        samples,
        limit,
        ic_value: limit * h.ic_factor(),
        order,
        converged,
        error_bar: (limit - e_last).abs() + slope * grid.dt(),
    })
}
