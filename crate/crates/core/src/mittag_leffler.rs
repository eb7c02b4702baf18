//! Two-parameter Mittag-Leffler function `E_{α,β}(z) = Σ z^k / Γ(αk+β)`
//! for real arguments.
//!
//! Branches:
//!
//! * `z = 0`: `1/Γ(β)`.
//! * `α = 1`: the exponential for `β = 1`, otherwise a positive-term
//!   Kummer expansion on the negative axis.
//! * Small `|z|` and all admissible positive `z`: the power series.
//! * Large negative `z`: the asymptotic expansion, optimally truncated, used
//!   only when its own error estimate meets the tolerance.
//! * Everything in between on the negative axis: a real integral
//!   representation evaluated by adaptive Gauss-Kronrod quadrature.

use std::f64::consts::PI;

use crate::error::{invalid, Error, Result};
use crate::special::{cospi, integrate, ln_gamma, ln_rgamma, rgamma, sinpi, snap};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlParams {
    alpha: f64,
    beta: f64,
}

impl MlParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(invalid(format!(
                "Mittag-Leffler alpha must lie in (0, 1], got {alpha}"
            )));
        }
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(invalid(format!(
                "Mittag-Leffler beta must be positive, got {beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Branch thresholds and tolerances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlConfig {
    /// Largest positive argument accepted.
    pub z_max: f64,
    /// Negative arguments beyond `-z_switch` prefer the asymptotic expansion.
    pub z_switch: f64,
    /// The series is used on the negative axis while `|z|^{1/α}` stays below this.
    pub series_reach: f64,
    /// Relative accuracy demanded from the asymptotic and quadrature branches.
    pub tolerance: f64,
    /// Relative disagreement tolerated between branches in the crossover band.
    pub crossover_tolerance: f64,
    pub max_terms: usize,
}

impl Default for MlConfig {
    fn default() -> Self {
        Self {
            z_max: 5.0,
            z_switch: 20.0,
            series_reach: 4.0,
            tolerance: 1e-13,
            crossover_tolerance: 1e-10,
            max_terms: 10_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Origin,
    Exponential,
    Kummer,
    Series,
    Integral,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub branch: Branch,
}

/// `E_{α,β}(z)` with the default configuration.
pub fn ml(p: MlParams, z: f64) -> Result<f64> {
    ml_with(p, z, &MlConfig::default()).map(|e| e.value)
}

/// Convenience wrapper validating `(α, β)` on the fly.
pub fn ml_ab(alpha: f64, beta: f64, z: f64) -> Result<f64> {
    ml(MlParams::new(alpha, beta)?, z)
}

pub fn ml_with(p: MlParams, z: f64, cfg: &MlConfig) -> Result<Evaluation> {
    if !z.is_finite() {
        return Err(invalid(format!(
            "Mittag-Leffler argument must be finite, got {z}"
        )));
    }
    if z > cfg.z_max {
        return Err(invalid(format!(
            "argument {z} exceeds the supported maximum {}",
            cfg.z_max
        )));
    }
    let MlParams { alpha, beta } = p;
    let done = |value: f64, branch| Ok(Evaluation { value, branch });
    if z == 0.0 {
        return done(rgamma(beta), Branch::Origin);
    }
    if alpha == 1.0 && beta == 1.0 {
        return done(z.exp(), Branch::Exponential);
    }
    if z > 0.0 {
        return done(series(p, z, cfg.max_terms)?, Branch::Series);
    }
    let x = -z;
    if alpha == 1.0 {
        if x < 40.0 {
            return done(kummer(beta, x, cfg.max_terms)?, Branch::Kummer);
        }
        let (v, err) = asymptotic(p, z)?;
        if err <= cfg.tolerance * v.abs() {
            return done(v, Branch::Asymptotic);
        }
        return done(kummer(beta, x, cfg.max_terms)?, Branch::Kummer);
    }
    if x.powf(1.0 / alpha) <= cfg.series_reach {
        return done(series(p, z, cfg.max_terms)?, Branch::Series);
    }
    let band = (0.8 * cfg.z_switch, 1.2 * cfg.z_switch);
    if x >= band.0 {
        let (v, err) = asymptotic(p, z)?;
        if err <= cfg.tolerance * v.abs() {
            if x <= band.1 {
                let vi = integral(p, z, cfg.tolerance)?;
                if (v - vi).abs() > cfg.crossover_tolerance * v.abs().max(vi.abs()) {
                    return Err(Error::AccuracyLoss(format!(
                        "E_{{{alpha},{beta}}}({z}): asymptotic {v:e} and integral {vi:e} disagree"
                    )));
                }
                if x < cfg.z_switch {
                    return done(vi, Branch::Integral);
                }
            }
            return done(v, Branch::Asymptotic);
        }
    }
    done(integral(p, z, cfg.tolerance)?, Branch::Integral)
}

/// Power series, stopped once two consecutive terms fall below
/// `1e-16·|sum|`.
pub fn series(p: MlParams, z: f64, max_terms: usize) -> Result<f64> {
    let MlParams { alpha, beta } = p;
    let lnz = z.abs().ln();
    let mut sum = 0.0;
    let mut quiet = 0;
    for k in 0..max_terms {
        let arg = alpha * k as f64 + beta;
        let term = if k == 0 {
            rgamma(beta)
        } else if arg < 170.0 && k as f64 * lnz.abs() < 700.0 {
            z.powi(k as i32) * rgamma(arg)
        } else {
            let sign = if z < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
            sign * (k as f64 * lnz - ln_gamma(arg).0).exp()
        };
        if !term.is_finite() {
            return Err(Error::AccuracyLoss(format!(
                "series term overflow for E_{{{alpha},{beta}}}({z})"
            )));
        }
        sum += term;
        let past_peak = k as f64 * alpha > 1.0 && arg > z.abs().powf(1.0 / alpha);
        if past_peak && term.abs() <= 1e-16 * sum.abs() {
            quiet += 1;
            if quiet == 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::AccuracyLoss(format!(
        "series for E_{{{alpha},{beta}}}({z}) did not converge in {max_terms} terms"
    )))
}

/// `E_{1,β}(-x) = e^{-x}/Γ(β)·[1 + (β-1)·Σ_{k>=1} x^k/(k!(k+β-1))]`.
fn kummer(beta: f64, x: f64, max_terms: usize) -> Result<f64> {
    let mut pow = 1.0; // x^k / k!
    let mut s = 0.0;
    for k in 1..max_terms {
        pow *= x / k as f64;
        let term = pow / (k as f64 + beta - 1.0);
        s += term;
        if k as f64 > x && term <= 1e-17 * s {
            return Ok((-x).exp() * rgamma(beta) * (1.0 + (beta - 1.0) * s));
        }
    }
    Err(Error::AccuracyLoss(format!(
        "Kummer expansion of E_{{1,{beta}}}({}) did not converge",
        -x
    )))
}

/// Asymptotic expansion `-Σ_{k>=1} z^{-k}/Γ(β-αk)` for negative `z`,
/// truncated before the terms start to grow or once two terms in a row are
/// negligible. Returns the value and the magnitude of the last term
/// considered as an error estimate.
pub fn asymptotic(p: MlParams, z: f64) -> Result<(f64, f64)> {
    if z >= 0.0 {
        return Err(invalid("asymptotic branch is for negative arguments"));
    }
    let MlParams { alpha, beta } = p;
    let lnx = (-z).ln();
    let mut sum = 0.0;
    // last two magnitudes: a term next to a pole of 1/Γ is small on its own
    let mut recent = [f64::INFINITY; 2];
    let mut quiet = 0;
    for k in 1..2000usize {
        let (lr, sign) = ln_rgamma(snap(beta - alpha * k as f64));
        if sign == 0.0 {
            continue;
        }
        let mag = (lr - k as f64 * lnx).exp();
        if mag >= recent[0].max(recent[1]) {
            return Ok((sum, mag));
        }
        // (-1)^{k+1} sign(1/Γ)·|z|^{-k}
        let s = if k % 2 == 1 { sign } else { -sign };
        sum += s * mag;
        if mag <= 1e-17 * sum.abs() {
            quiet += 1;
            if quiet == 2 {
                return Ok((sum, mag));
            }
        } else {
            quiet = 0;
        }
        recent = [recent[1], mag];
    }
    Ok((sum, recent[1]))
}

/// Real integral representation for `z = -x < 0`, `0 < α < 1`:
///
/// `E_{α,β}(-x) = (1/π) ∫_0^∞ e^{-u} u^{α-β} [u^α sin(π(1-β)) + x sin(π(1-β+α))]
///                 / (u^{2α} + 2u^α x cos(πα) + x²) du`,
///
/// valid for `β < 1+α`. Larger `β` are lowered with
/// `E_{α,β}(z) = (E_{α,β-α}(z) - 1/Γ(β-α)) / z`.
pub fn integral(p: MlParams, z: f64, tol: f64) -> Result<f64> {
    let MlParams { alpha, beta } = p;
    if !(z < 0.0 && alpha < 1.0) {
        return Err(invalid("integral branch needs z < 0 and alpha < 1"));
    }
    if beta > 1.0 + 0.5 * alpha {
        let lower = MlParams {
            alpha,
            beta: beta - alpha,
        };
        return Ok((integral(lower, z, tol)? - rgamma(beta - alpha)) / z);
    }
    let x = -z;
    let q = 1.0 + alpha - beta;
    let s1 = sinpi(1.0 - beta);
    let s2 = x * sinpi(1.0 - beta + alpha);
    let c = 2.0 * x * cospi(alpha);
    // u = s^{1/q} absorbs the u^{α-β} endpoint behaviour
    let f = |s: f64| {
        let u = s.powf(1.0 / q);
        let ua = u.powf(alpha);
        (-u).exp() * (ua * s1 + s2) / (ua * ua + c * ua + x * x)
    };
    // the denominator is smallest near u = x^{1/α}; e^{-u} has no mass left past 750
    let peak = x.powf(1.0 / alpha);
    let hi = (peak + 60.0).min(750.0);
    let mut cuts: Vec<f64> = [0.0, peak.min(1.0), peak, peak + 5.0, 5.0, 20.0, 60.0, hi]
        .into_iter()
        .filter(|&c| c <= hi)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs().max(1.0));
    let panels: Vec<(f64, f64)> = cuts
        .windows(2)
        .map(|w| (w[0].powf(q), w[1].powf(q)))
        .collect();
    // panels can cancel, so each one is held to a share of the total magnitude
    let scale: f64 = panels
        .iter()
        .map(|&(a, b)| integrate(f, a, b, 0.0, 1e-3).value.abs())
        .sum();
    let abs_tol = (tol * scale / panels.len() as f64).max(1e-300);
    let mut total = 0.0;
    for &(a, b) in &panels {
        let r = integrate(f, a, b, abs_tol, tol);
        if !r.converged {
            return Err(Error::AccuracyLoss(format!(
                "quadrature for E_{{{alpha},{beta}}}({z}) did not converge (error {:e})",
                r.error
            )));
        }
        total += r.value;
    }
    Ok(total / (PI * q))
}
