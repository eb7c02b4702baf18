//! Solvers for the two-term equation `c1 D^α u + c0 u = f(t)` with the
//! Riemann-Liouville initial condition `[D^{α-1} u]_{t→0⁺} = b1`.
//!
//! The solution is split as `u = b1 t^{α-1}/Γ(α) + y + v`. The first part
//! is the symbolic singular response to the initial condition. `y` is a
//! truncated power series that solves the equation exactly for every power
//! term of the forcing, up to a residual of order `t²`. The remainder `v`
//! starts smoothly at the origin and is stepped implicitly with third-order
//! backward-difference convolution quadrature (`solve_gl`), or obtained from
//! the Mittag-Leffler Green's function by product integration
//! (`solve_green`).
//!
//! Negative orders (`c1 D^{-β} u = f`, `c0 = 0`) and the integral form
//! `c1 u + c0 D^{-α} u = f` with `[D^{-1} u] = m` are also accepted; the
//! latter is reduced to the differential form, and the Dirac mass `m` is
//! reported on the result.

use crate::error::{invalid, Error, Result};
use crate::fracops::{
    convolve, difference_weights, gl_deriv, power_law_deriv, BackwardDifference, PowerTerm,
};
use crate::grid::{Quantity, Signal, SingularSignal, TimeGrid};
use crate::mittag_leffler::{ml, MlParams};
use crate::models::InitialCondition;
use crate::special::{gamma, rgamma};

/// Smallest error treated as resolved rather than roundoff in convergence studies.
pub const ROUNDOFF_FLOOR: f64 = 1e-12;

/// Steps per relaxation time `(c1/c0)^{1/α}` below which stepping is refused.
pub const MIN_RELAXATION_STEPS: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// `c1 D^order u + c0 u = f`.
    Differential,
    /// `c1 u + c0 D^{-order} u = f`, initial condition on `D^{-1} u`.
    Integral,
}

/// Right-hand side: exact power terms plus optional regular samples.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Forcing {
    pub terms: Vec<PowerTerm>,
    pub sampled: Option<Signal>,
}

impl Forcing {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn terms(terms: Vec<PowerTerm>) -> Self {
        Self {
            terms,
            sampled: None,
        }
    }

    pub fn scaled(mut self, s: f64) -> Self {
        self.terms.iter_mut().for_each(|t| t.coeff *= s);
        self.sampled = self.sampled.map(|x| x.map(|v| s * v));
        self
    }

    /// Pointwise values on `grid`.
    pub fn evaluate(&self, grid: &TimeGrid) -> Result<Vec<f64>> {
        let mut v = match &self.sampled {
            Some(s) => {
                s.check_grid(grid)?;
                s.values().to_vec()
            }
            None => vec![0.0; grid.len()],
        };
        for (k, x) in v.iter_mut().enumerate() {
            *x += self
                .terms
                .iter()
                .map(|t| t.eval(grid.t(k + 1)))
                .sum::<f64>();
        }
        Ok(v)
    }

    pub fn combine(mut self, other: &Forcing) -> Result<Self> {
        self.terms.extend(other.terms.iter().copied());
        self.sampled = match (self.sampled, &other.sampled) {
            (Some(a), Some(b)) => {
                b.check_grid(&a.grid())?;
                let values = a
                    .values()
                    .iter()
                    .zip(b.values())
                    .map(|(x, y)| x + y)
                    .collect();
                Some(Signal::new(a.grid(), values, a.quantity())?)
            }
            (a, b) => a.or_else(|| b.clone()),
        };
        Ok(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FdeProblem {
    pub c0: f64,
    pub c1: f64,
    pub order: f64,
    pub form: Form,
    pub forcing: Forcing,
    pub ic: InitialCondition,
    pub unknown: Quantity,
}

impl FdeProblem {
    pub fn new(
        c0: f64,
        c1: f64,
        order: f64,
        form: Form,
        forcing: Forcing,
        ic: InitialCondition,
        unknown: Quantity,
    ) -> Result<Self> {
        let p = Self {
            c0,
            c1,
            order,
            form,
            forcing,
            ic,
            unknown,
        };
        p.validate()?;
        Ok(p)
    }

    /// `c1 D^α u + c0 u = f` with `[D^{α-1} u] = b1`.
    pub fn differential(c0: f64, c1: f64, alpha: f64, forcing: Forcing, b1: f64) -> Result<Self> {
        let ic = InitialCondition {
            order: alpha - 1.0,
            value: b1,
            quantity: Quantity::Generic,
        };
        Self::new(
            c0,
            c1,
            alpha,
            Form::Differential,
            forcing,
            ic,
            Quantity::Generic,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidProblem(m));
        if !(self.c1 > 0.0 && self.c1.is_finite()) {
            return bad(format!("c1 must be positive, got {}", self.c1));
        }
        if !(self.c0 >= 0.0 && self.c0.is_finite()) {
            return bad(format!("c0 must be non-negative, got {}", self.c0));
        }
        if !(self.order.abs() > 0.0 && self.order.abs() < 1.0) {
            return bad(format!(
                "order must satisfy 0 < |order| < 1, got {}",
                self.order
            ));
        }
        let expect_ic = match self.form {
            Form::Differential => self.order - 1.0,
            Form::Integral => -1.0,
        };
        if (self.ic.order - expect_ic).abs() > 1e-12 {
            return bad(format!(
                "initial condition must be on order {expect_ic}, got {}",
                self.ic.order
            ));
        }
        if self.order < 0.0
            && (self.form == Form::Integral || self.c0 != 0.0 || self.ic.value != 0.0)
        {
            return bad(
                "negative orders need the differential form, c0 = 0 and a zero initial condition"
                    .into(),
            );
        }
        if self.form == Form::Integral && self.order < 0.0 {
            return bad("integral form needs a positive order".into());
        }
        if let Some(t) = self
            .forcing
            .terms
            .iter()
            .find(|t| t.coeff != 0.0 && !(t.exponent > -1.0))
        {
            return Err(Error::UnsupportedForcing(format!(
                "forcing exponent {} is not integrable",
                t.exponent
            )));
        }
        Ok(())
    }
}

/// Differential form with the symbolic pieces collected.
struct Standard {
    c0: f64,
    c1: f64,
    order: f64,
    terms: Vec<PowerTerm>,
    sampled: Option<Signal>,
    b1: f64,
    impulse: f64,
}

fn standardize(p: &FdeProblem, grid: &TimeGrid) -> Result<Standard> {
    p.validate()?;
    if let Some(s) = &p.forcing.sampled {
        s.check_grid(grid)?;
    }
    match p.form {
        Form::Differential => Ok(Standard {
            c0: p.c0,
            c1: p.c1,
            order: p.order,
            terms: p.forcing.terms.clone(),
            sampled: p.forcing.sampled.clone(),
            b1: p.ic.value,
            impulse: 0.0,
        }),
        Form::Integral => {
            if p.forcing.sampled.is_some() {
                return Err(Error::InvalidProblem(
                    "integral form with sampled forcing cannot be reduced to differential form"
                        .into(),
                ));
            }
            let alpha = p.order;
            let m = p.ic.value;
            let mut f_at_origin = 0.0;
            let mut terms = Vec::with_capacity(p.forcing.terms.len());
            for t in p.forcing.terms.iter().filter(|t| t.coeff != 0.0) {
                terms.push(power_law_deriv(*t, alpha)?);
                let q = t.exponent + 1.0 - alpha;
                if q.abs() < 1e-12 {
                    f_at_origin += t.coeff * gamma(1.0 + t.exponent);
                } else if q < 0.0 {
                    return Err(Error::InvalidProblem(format!(
                        "forcing t^{} is too singular to reduce the integral form",
                        t.exponent
                    )));
                }
            }
            Ok(Standard {
                c0: p.c0,
                c1: p.c1,
                order: alpha,
                terms,
                sampled: None,
                b1: (f_at_origin - p.c0 * m) / p.c1,
                impulse: m,
            })
        }
    }
}

/// Splits the sampled forcing into its extrapolated origin value, appended
/// to `terms`, and samples vanishing at the origin.
fn split_sampled(s: &Standard, grid: &TimeGrid, terms: &mut Vec<PowerTerm>) -> Vec<f64> {
    match &s.sampled {
        Some(f) => {
            let f0 = f.origin_extrapolation();
            if f0 != 0.0 {
                terms.push(PowerTerm::new(f0, 0.0));
            }
            f.values().iter().map(|v| v - f0).collect()
        }
        None => vec![0.0; grid.len()],
    }
}

fn check_terms(terms: &[PowerTerm]) -> Result<()> {
    match terms
        .iter()
        .find(|t| t.coeff != 0.0 && !(t.exponent > -1.0))
    {
        Some(t) => Err(Error::UnsupportedForcing(format!(
            "forcing exponent {} is not integrable",
            t.exponent
        ))),
        None => Ok(()),
    }
}

/// Number of starting-series terms to subtract. Each extra term smooths the
/// remainder near the origin, where the stepping error on a `t^e` forcing
/// scales like `dt^{1+e}`, but once `(c0/c1) t^α` is large at the end of the
/// grid the partial sums grow and the remainder must cancel them.
fn start_length(series: &[PowerTerm], grid: &TimeGrid) -> usize {
    let (h, end) = (grid.dt(), grid.end());
    let mut largest = 0.0f64;
    let mut best = (f64::INFINITY, 1);
    for (m, t) in series.iter().enumerate() {
        largest = largest.max(t.coeff.abs() * end.powf(t.exponent).max(h.powf(t.exponent)));
        let est = t.coeff.abs() * h.powf(1.0 + t.exponent) + f64::EPSILON * largest;
        if est <= best.0 {
            best = (est, m + 1);
        }
    }
    best.1
}

/// Series start plus implicit convolution-quadrature stepping.
fn step(
    s: &Standard,
    terms: Vec<PowerTerm>,
    mut resid: Vec<f64>,
    grid: &TimeGrid,
    unknown: Quantity,
) -> Result<SingularSignal> {
    let (c0, c1, a) = (s.c0, s.c1, s.order);
    check_terms(&terms)?;
    if c0 > 0.0 && a > 0.0 {
        let tau = (c1 / c0).powf(1.0 / a);
        if tau < MIN_RELAXATION_STEPS * grid.dt() {
            return Err(Error::AccuracyLoss(format!(
                "relaxation time (c1/c0)^(1/order) = {tau:.3e} spans fewer than {MIN_RELAXATION_STEPS} steps of {:.3e}; refine the grid",
                grid.dt()
            )));
        }
    }
    let mut sol = Vec::new();
    for t in terms.iter().filter(|t| t.coeff != 0.0) {
        let base = t.coeff * gamma(1.0 + t.exponent) / c1;
        if c0 == 0.0 {
            sol.push(PowerTerm::new(
                base * rgamma(1.0 + t.exponent + a),
                t.exponent + a,
            ));
            continue;
        }
        let m_terms = (((2.0 - t.exponent) / a).ceil() as usize).clamp(1, 400);
        let ratio = -c0 / c1;
        let series: Vec<PowerTerm> = (0..m_terms)
            .map(|m| {
                let e = t.exponent + (m + 1) as f64 * a;
                PowerTerm::new(base * ratio.powi(m as i32) * rgamma(1.0 + e), e)
            })
            .collect();
        let keep = start_length(&series, grid);
        let last = series[keep - 1];
        sol.extend_from_slice(&series[..keep]);
        for (k, r) in resid.iter_mut().enumerate() {
            *r -= c0 * last.eval(grid.t(k + 1));
        }
    }
    let h = grid.dt();
    let w = difference_weights(a, grid.len(), BackwardDifference::Third);
    let scale = c1 * h.powf(-a);
    let lead = scale * w[0] + c0;
    let mut v = vec![0.0; grid.len()];
    for i in 0..v.len() {
        let hist: f64 = w[1..=i]
            .iter()
            .zip(v[..i].iter().rev())
            .map(|(wj, vj)| wj * vj)
            .sum();
        v[i] = (resid[i] - scale * hist) / lead;
    }
    if s.b1 != 0.0 {
        sol.push(PowerTerm::new(s.b1 * rgamma(a), a - 1.0));
    }
    Ok(SingularSignal::from_terms(Signal::new(*grid, v, unknown)?, &sol)?.with_impulse(s.impulse))
}

/// Solution by convolution-quadrature stepping.
///
/// Fails with [`Error::AccuracyLoss`] when the relaxation time
/// `(c1/c0)^{1/α}` spans fewer than [`MIN_RELAXATION_STEPS`] steps.
pub fn solve_gl(p: &FdeProblem, grid: &TimeGrid) -> Result<SingularSignal> {
    let s = standardize(p, grid)?;
    let mut terms = s.terms.clone();
    let resid = split_sampled(&s, grid, &mut terms);
    if s.b1 != 0.0 {
        terms.push(PowerTerm::new(
            -s.c0 * s.b1 * rgamma(s.order),
            s.order - 1.0,
        ));
    }
    step(&s, terms, resid, grid, p.unknown)
}

/// Same equation posed with a Caputo derivative, `c1 D^α (u - u0) + c0 u = f`,
/// where `u0` is fixed by the `t^{-α}` content of the forcing. Requires a
/// zero Riemann-Liouville initial condition; agrees with [`solve_gl`] then.
pub fn solve_caputo(p: &FdeProblem, grid: &TimeGrid) -> Result<SingularSignal> {
    let s = standardize(p, grid)?;
    if s.order < 0.0 || s.b1 != 0.0 || s.impulse != 0.0 {
        return Err(Error::InvalidProblem(
            "Caputo formulation needs a positive order and a zero initial condition".into(),
        ));
    }
    let a = s.order;
    let mut u0 = 0.0;
    let mut terms = Vec::with_capacity(s.terms.len() + 2);
    for t in s.terms.iter().filter(|t| t.coeff != 0.0) {
        if (t.exponent + a).abs() < 1e-12 {
            u0 += t.coeff * gamma(1.0 - a) / s.c1;
        } else if t.exponent < -a {
            return Err(Error::InvalidProblem(format!(
                "forcing t^{} makes the solution unbounded at the origin",
                t.exponent
            )));
        } else {
            terms.push(*t);
        }
    }
    if u0 != 0.0 {
        terms.push(PowerTerm::new(-s.c0 * u0, 0.0));
    }
    let resid = split_sampled(&s, grid, &mut terms);
    let w = step(&s, terms, resid, grid, p.unknown)?;
    let shift = SingularSignal::regular(Signal::from_fn(*grid, p.unknown, |_| u0));
    w.add(&shift)
}

/// `coef·t^{e} E_{α,β}(-λ t^α)` with the `coef/Γ(β)·t^e` part kept
/// symbolic when `e <= 0`.
pub(crate) fn ml_power(
    coef: f64,
    e: f64,
    alpha: f64,
    beta: f64,
    lambda: f64,
    grid: &TimeGrid,
    q: Quantity,
) -> Result<SingularSignal> {
    let p = MlParams::new(alpha, beta)?;
    let r0 = rgamma(beta);
    let singular = e <= 0.0;
    let values = grid
        .times()
        .map(|t| {
            let ev = ml(p, -lambda * t.powf(alpha))?;
            Ok(coef * t.powf(e) * if singular { ev - r0 } else { ev })
        })
        .collect::<Result<Vec<_>>>()?;
    let regular = Signal::new(*grid, values, q)?;
    if singular {
        SingularSignal::new(regular, PowerTerm::new(coef * r0, e))
    } else {
        Ok(SingularSignal::regular(regular))
    }
}

/// Solution by the Mittag-Leffler Green's function. Power terms and the
/// initial condition are integrated exactly; sampled forcing is
/// interpolated linearly and integrated against the kernel exactly.
pub fn solve_green(p: &FdeProblem, grid: &TimeGrid) -> Result<SingularSignal> {
    let s = standardize(p, grid)?;
    let q = p.unknown;
    let mut terms = s.terms.clone();
    let g = split_sampled(&s, grid, &mut terms);
    check_terms(&terms)?;
    let h = grid.dt();
    let n = grid.len();
    if s.order < 0.0 {
        let beta = -s.order;
        let exact = terms
            .iter()
            .filter(|t| t.coeff != 0.0)
            .map(|t| power_law_deriv(PowerTerm::new(t.coeff / s.c1, t.exponent), beta))
            .collect::<Result<Vec<_>>>()?;
        let c = h.powf(1.0 - beta) * rgamma(2.0 - beta) / s.c1;
        let w: Vec<f64> = (0..n)
            .map(|m| c * ((m as f64 + 1.0).powf(1.0 - beta) - (m as f64).powf(1.0 - beta)))
            .collect();
        let slopes: Vec<f64> = (0..n)
            .map(|k| (g[k] - if k == 0 { 0.0 } else { g[k - 1] }) / h)
            .collect();
        let v = convolve(&w, &slopes);
        return SingularSignal::from_terms(Signal::new(*grid, v, q)?, &exact);
    }
    let a = s.order;
    let lambda = s.c0 / s.c1;
    let mut u = SingularSignal::regular(Signal::zeros(*grid, q));
    if s.b1 != 0.0 {
        u = u.add(&ml_power(s.b1, a - 1.0, a, a, lambda, grid, q)?)?;
    }
    for t in terms.iter().filter(|t| t.coeff != 0.0) {
        let coef = t.coeff * gamma(1.0 + t.exponent) / s.c1;
        u = u.add(&ml_power(
            coef,
            t.exponent + a,
            a,
            t.exponent + a + 1.0,
            lambda,
            grid,
            q,
        )?)?;
    }
    if g.iter().any(|&x| x != 0.0) {
        let p1 = MlParams::new(a, a + 1.0)?;
        let p2 = MlParams::new(a, a + 2.0)?;
        let mut h1 = Vec::with_capacity(n + 1);
        let mut h2 = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let sm = m as f64 * h;
            let z = -lambda * sm.powf(a);
            h1.push(sm.powf(a) * ml(p1, z)? / s.c1);
            h2.push(sm.powf(a + 1.0) * ml(p2, z)? / s.c1);
        }
        let i_w: Vec<f64> = (0..n).map(|m| h1[m + 1] - h1[m]).collect();
        let j_w: Vec<f64> = (0..n)
            .map(|m| h1[m + 1] - (h2[m + 1] - h2[m]) / h)
            .collect();
        let w: Vec<f64> = (0..n)
            .map(|m| i_w[m] - j_w[m] + if m > 0 { j_w[m - 1] } else { 0.0 })
            .collect();
        let v = convolve(&w, &g);
        u = u.add(&SingularSignal::regular(Signal::new(*grid, v, q)?))?;
    }
    Ok(u.with_impulse(s.impulse))
}

/// Substitutes `u` into the equation and returns the largest mismatch
/// `|lhs - f|` on `t >= t_min`, relative to the largest of the individual
/// terms there. A Dirac mass on `u` is ignored for the differential form,
/// which only describes `t > 0`.
pub fn residual(p: &FdeProblem, u: &SingularSignal, t_min: f64) -> Result<f64> {
    p.validate()?;
    let grid = u.grid();
    let f = p.forcing.evaluate(&grid)?;
    let (a, b) = match p.form {
        Form::Differential => {
            let u = u.clone().with_impulse(0.0);
            (gl_deriv(&u, p.order)?.scale(p.c1), u.scale(p.c0))
        }
        Form::Integral => (u.scale(p.c1), gl_deriv(u, -p.order)?.scale(p.c0)),
    };
    let start = grid.first_at_or_after(t_min);
    let (mut num, mut den) = (0.0f64, 0.0f64);
    for k in start..=grid.len() {
        let (x, y) = (a.value(k), b.value(k));
        num = num.max((x + y - f[k - 1]).abs());
        den = den.max(x.abs()).max(y.abs()).max(f[k - 1].abs());
    }
    Ok(if den == 0.0 { num } else { num / den })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub dt: f64,
    pub max_rel_err: f64,
    /// `log2` of the error ratio to the previous level; `None` on the first
    /// level or when either error is at roundoff.
    pub order: Option<f64>,
}

/// Maximum relative difference between two solutions over the points of
/// `coarse` with `t >= t_min`; the solutions may live on a refinement of it.
pub fn max_relative_error(
    numeric: &SingularSignal,
    reference: &SingularSignal,
    coarse: &TimeGrid,
    t_min: f64,
) -> Result<f64> {
    if numeric.len() != reference.len() || !numeric.len().is_multiple_of(coarse.len()) {
        return Err(Error::Dimension {
            expected: reference.len(),
            found: numeric.len(),
        });
    }
    let stride = numeric.len() / coarse.len();
    let start = coarse.first_at_or_after(t_min);
    let pts: Vec<(f64, f64)> = (start..=coarse.len())
        .map(|k| (numeric.value(k * stride), reference.value(k * stride)))
        .collect();
    let scale = pts.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    Ok(pts
        .iter()
        .map(|(x, r)| (x - r).abs() / r.abs().max(1e-14 * scale).max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max))
}

/// Halves `base.dt` `levels - 1` times at fixed horizon and reports the
/// error of [`solve_gl`] against [`solve_green`] on the points of `base`
/// with `t >= 10·base.dt`.
pub fn convergence_study(
    p: &FdeProblem,
    base: &TimeGrid,
    levels: usize,
) -> Result<Vec<ConvergenceRow>> {
    if levels < 2 {
        return Err(invalid("a convergence study needs at least two levels"));
    }
    if p.forcing.sampled.is_some() {
        return Err(Error::InvalidProblem(
            "sampled forcing cannot be refined".into(),
        ));
    }
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(levels);
    for i in 0..levels {
        let grid = base.refine(1 << i)?;
        let err = max_relative_error(
            &solve_gl(p, &grid)?,
            &solve_green(p, &grid)?,
            base,
            10.0 * base.dt(),
        )?;
        let order = rows
            .last()
            .filter(|prev| prev.max_rel_err > ROUNDOFF_FLOOR && err > ROUNDOFF_FLOOR)
            .map(|prev| (prev.max_rel_err / err).log2());
        rows.push(ConvergenceRow {
            dt: grid.dt(),
            max_rel_err: err,
            order,
        });
    }
    Ok(rows)
}
