//! Gamma-family helpers and adaptive Gauss-Kronrod quadrature.

use std::f64::consts::PI;

/// Largest argument for which `Γ(x)` is finite in f64.
const GAMMA_OVERFLOW: f64 = 171.6;

/// `Γ(x)`; infinite at the poles.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `ln|Γ(x)|` together with the sign of `Γ(x)`.
pub fn ln_gamma(x: f64) -> (f64, f64) {
    let (v, s) = libm::lgamma_r(x);
    (v, if s < 0 { -1.0 } else { 1.0 })
}

pub fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Rounds values within a few ulps of an integer, so that exponents such as
/// `(α-1) - α` land exactly on the poles of `1/Γ`.
pub(crate) fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= 1e-12 * r.abs().max(1.0) {
        r
    } else {
        x
    }
}

/// `1/Γ(x)`, exactly zero at the poles and for large arguments where
/// `Γ` overflows.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 0.0 && x < GAMMA_OVERFLOW {
        return 1.0 / gamma(x);
    }
    if x >= GAMMA_OVERFLOW {
        return (-ln_gamma(x).0).exp();
    }
    // reflection: 1/Γ(x) = sin(πx) Γ(1-x) / π
    let s = sinpi(x);
    if 1.0 - x < GAMMA_OVERFLOW {
        s * gamma(1.0 - x) / PI
    } else {
        s.signum() * (ln_gamma(1.0 - x).0 + s.abs().ln() - PI.ln()).exp()
    }
}

/// `ln|1/Γ(x)|` and its sign; `(-inf, 0)` at the poles.
pub fn ln_rgamma(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::NEG_INFINITY, 0.0);
    }
    let (v, s) = ln_gamma(x);
    (-v, s)
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sinpi(x: f64) -> f64 {
    if x == x.round() {
        return 0.0;
    }
    let r = x - 2.0 * (x / 2.0).floor(); // in [0, 2)
    let (r, sign) = if r > 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    sign * (PI * r).sin()
}

/// `cos(πx)` with exact zeros at half-integers.
pub fn cospi(x: f64) -> f64 {
    sinpi(x + 0.5)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel; returns the estimate and `|K15 - G7|`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x) + f(c + x);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub converged: bool,
}

/// Globally adaptive Gauss-Kronrod integration over `[a, b]`, bisecting the
/// panel with the largest error until `error <= max(abs_tol, rel_tol*|value|)`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Quadrature {
    const MAX_PANELS: usize = 4000;
    let (v, e) = gk15(&f, a, b);
    let mut panels = vec![(a, b, v, e)];
    let mut value = v;
    let mut error = e;
    while error > abs_tol.max(rel_tol * value.abs()) {
        if panels.len() >= MAX_PANELS {
            return Quadrature {
                value,
                error,
                converged: false,
            };
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, p)| {
                if p.3 > best.1 {
                    (i, p.3)
                } else {
                    best
                }
            });
        let (pa, pb, pv, pe) = panels.swap_remove(idx);
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            return Quadrature {
                value,
                error,
                converged: false,
            };
        }
        let (lv, le) = gk15(&f, pa, mid);
        let (rv, re) = gk15(&f, mid, pb);
        value += lv + rv - pv;
        error += le + re - pe;
        panels.push((pa, mid, lv, le));
        panels.push((mid, pb, rv, re));
    }
    let value = panels.iter().map(|p| p.2).sum();
    let error = panels.iter().map(|p| p.3).sum();
    Quadrature {
        value,
        error,
        converged: true,
    }
}
