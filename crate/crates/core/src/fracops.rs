//! Fractional derivatives and integrals of sampled signals.
//!
//! `gl_deriv` works on a [`SingularSignal`]. The symbolic power terms and
//! any Dirac mass are transformed exactly by the power rule. The regular samples
//! are split into their origin value, also transformed exactly, and a
//! remainder vanishing at `t = 0`. The remainder is handled by backward
//! difference convolution quadrature, `h^{-α} Σ_j w_j g_{k-j}`, where `w_j`
//! are the power series coefficients of `δ(ζ)^α`. The first-order rule
//! `δ(ζ) = 1 - ζ` gives the classical Grünwald-Letnikov weights.

use crate::error::{invalid, Error, Result};
use crate::grid::{Signal, SingularSignal};
use crate::special::{gamma, rgamma, snap};

/// `coeff·t^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coeff: f64,
    pub exponent: f64,
}

impl PowerTerm {
    pub const ZERO: PowerTerm = PowerTerm {
        coeff: 0.0,
        exponent: 0.0,
    };

    pub const fn new(coeff: f64, exponent: f64) -> Self {
        Self { coeff, exponent }
    }

    pub fn eval(&self, t: f64) -> f64 {
        if self.coeff == 0.0 {
            0.0
        } else {
            self.coeff * t.powf(self.exponent)
        }
    }
}

/// Exact `D^order (a·t^p) = a·Γ(1+p)/Γ(1+p-order)·t^{p-order}` for `p > -1`.
/// Poles of the denominator give an exactly zero coefficient.
pub fn power_law_deriv(term: PowerTerm, order: f64) -> Result<PowerTerm> {
    let p = term.exponent;
    if !(p > -1.0) {
        return Err(invalid(format!(
            "power-law exponent must exceed -1, got {p}"
        )));
    }
    if !order.is_finite() {
        return Err(Error::UnsupportedOrder(order));
    }
    let arg = snap(1.0 + p - order);
    let coeff = if term.coeff == 0.0 {
        0.0
    } else {
        term.coeff * gamma(1.0 + p) * rgamma(arg)
    };
    Ok(PowerTerm::new(coeff, snap(p - order)))
}

/// Generating polynomial of the backward difference used for the quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BackwardDifference {
    /// `1 - ζ`: Grünwald-Letnikov, first order.
    First,
    /// `3/2 - 2ζ + ζ²/2`.
    Second,
    /// `11/6 - 3ζ + 3ζ²/2 - ζ³/3`.
    #[default]
    Third,
}

impl BackwardDifference {
    fn polynomial(self) -> &'static [f64] {
        match self {
            BackwardDifference::First => &[1.0, -1.0],
            BackwardDifference::Second => &[1.5, -2.0, 0.5],
            BackwardDifference::Third => &[11.0 / 6.0, -3.0, 1.5, -1.0 / 3.0],
        }
    }
}

/// How the regular samples are continued to `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Origin {
    /// Extrapolate the origin value from the first samples and treat it exactly.
    #[default]
    Extrapolate,
    /// The signal is at rest at `t = 0`.
    Rest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GlOptions {
    pub rule: BackwardDifference,
    pub origin: Origin,
}

impl GlOptions {
    /// Plain Grünwald-Letnikov sum with the signal at rest at the origin.
    pub const fn grunwald() -> Self {
        Self {
            rule: BackwardDifference::First,
            origin: Origin::Rest,
        }
    }
}

/// Grünwald-Letnikov weights `w_0 = 1`, `w_j = w_{j-1}·(1 - (order+1)/j)`.
pub fn gl_weights(order: f64, n: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(n);
    let mut prev = 1.0;
    for j in 0..n {
        if j > 0 {
            prev *= 1.0 - (order + 1.0) / j as f64;
        }
        w.push(prev);
    }
    w
}

/// First `n` coefficients of `δ(ζ)^order` for the chosen rule.
pub fn difference_weights(order: f64, n: usize, rule: BackwardDifference) -> Vec<f64> {
    if rule == BackwardDifference::First {
        return gl_weights(order, n);
    }
    let p = rule.polynomial();
    let mut q = Vec::with_capacity(n);
    if n == 0 {
        return q;
    }
    q.push(p[0].powf(order));
    for k in 1..n {
        let s: f64 = (1..=k.min(p.len() - 1))
            .map(|i| ((order + 1.0) * i as f64 - k as f64) * p[i] * q[k - i])
            .sum();
        q.push(s / (k as f64 * p[0]));
    }
    q
}

/// `y_i = Σ_{j<=i} w_j x_{i-j}`.
pub(crate) fn convolve(w: &[f64], x: &[f64]) -> Vec<f64> {
    (0..x.len())
        .map(|i| {
            w[..=i]
                .iter()
                .zip(x[..=i].iter().rev())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

/// Fractional derivative (`order > 0`) or integral (`order < 0`) of a signal
/// with the default third-order rule and extrapolated origin value.
pub fn gl_deriv(f: &SingularSignal, order: f64) -> Result<SingularSignal> {
    gl_deriv_with(f, order, GlOptions::default())
}

pub fn gl_deriv_with(f: &SingularSignal, order: f64, opts: GlOptions) -> Result<SingularSignal> {
    if !order.is_finite() || order.abs() >= 2.0 {
        return Err(Error::UnsupportedOrder(order));
    }
    if order == 0.0 {
        return Ok(f.clone());
    }
    let grid = f.grid();
    let mut terms = Vec::with_capacity(f.terms().len() + 2);
    for t in f.terms() {
        terms.push(power_law_deriv(*t, order)?);
    }
    if f.impulse() != 0.0 {
        terms.push(PowerTerm::new(
            f.impulse() * rgamma(snap(-order)),
            -order - 1.0,
        ));
    }
    let regular = f.regular_part();
    let f0 = match opts.origin {
        Origin::Extrapolate => regular.origin_extrapolation(),
        Origin::Rest => 0.0,
    };
    if f0 != 0.0 {
        terms.push(power_law_deriv(PowerTerm::new(f0, 0.0), order)?);
    }
    let g: Vec<f64> = regular.values().iter().map(|v| v - f0).collect();
    let w = difference_weights(order, g.len(), opts.rule);
    let scale = grid.dt().powf(-order);
    let values = convolve(&w, &g).into_iter().map(|v| v * scale).collect();
    let out = Signal::new(grid, values, regular.quantity())?;
    SingularSignal::from_terms(out, &terms)
}

/// Caputo derivative `D^order (f - f0)` for `0 < order < 1`.
pub fn caputo_deriv(f: &Signal, order: f64, f0: f64) -> Result<SingularSignal> {
    if !(order > 0.0 && order < 1.0) {
        return Err(Error::UnsupportedOrder(order));
    }
    let shifted = SingularSignal::regular(f.map(|v| v - f0));
    gl_deriv_with(
        &shifted,
        order,
        GlOptions {
            origin: Origin::Rest,
            ..GlOptions::default()
        },
    )
}
