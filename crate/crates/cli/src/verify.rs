//! Verification matrix: every supported (model, load) pair run through the
//! solvers, the closed-form catalog and the initial-condition estimator.

use std::fmt::Write as _;

use fracrheo::grid::{
    impulse_box, sample_program, LoadingProgram, Program, Quantity, Signal, TimeGrid,
};
use fracrheo::ic_estimator::{extrapolate, TwinHistory};
use fracrheo::models::{analytic_response, build_problem, Maxwell, Model, SpringPot, Voigt, Zener};
use fracrheo::solver::{max_relative_error, residual, solve_caputo, solve_gl, solve_green, Form};
use fracrheo::{gl_deriv, Error, SingularSignal};
use rayon::prelude::*;

use crate::config::Tolerances;

/// Truncations used when extrapolating recorded twins.
pub const HALVINGS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub model: Model,
    pub load: LoadingProgram,
}

impl Case {
    pub fn new(model: Model, load: LoadingProgram) -> Self {
        Self { model, load }
    }

    pub fn label(&self) -> String {
        format!(
            "{} / {} {}",
            self.model.name(),
            self.load.applied,
            self.load.program.name()
        )
    }
}

/// Unit-coefficient models at order `alpha`; the Zener model has
/// `E0 = 2`, `E∞ = 1`, `K = 1`.
pub fn default_models(alpha: f64) -> fracrheo::Result<[Model; 4]> {
    Ok([
        Model::SpringPot(SpringPot::new(1.0, alpha)?),
        Model::Voigt(Voigt::new(1.0, 1.0, alpha)?),
        Model::Maxwell(Maxwell::new(1.0, 1.0, alpha)?),
        Model::Zener(Zener::from_moduli(2.0, 1.0, 1.0, alpha)?),
    ])
}

/// Built-in matrix on `grid`: steps, ramps, a power law, a smooth sampled
/// history and every realizable impulse.
pub fn default_matrix(alpha: f64, grid: &TimeGrid) -> fracrheo::Result<Vec<Case>> {
    let [sp, vo, mx, ze] = default_models(alpha)?;
    let step = Program::Step { amplitude: 1.0 };
    let ramp = Program::Ramp { rate: 1.0 };
    let impulse = Program::Impulse { magnitude: 1.0 };
    let power = Program::PowerLaw {
        coeff: 1.0,
        exponent: 1.5,
    };
    let smooth = |q: Quantity| {
        Program::Sampled(Signal::from_fn(*grid, q, |t| {
            (std::f64::consts::PI * t).sin() + 0.5 * t
        }))
    };
    let stress = LoadingProgram::stress;
    let strain = LoadingProgram::strain;
    Ok(vec![
        Case::new(sp, stress(step.clone())),
        Case::new(sp, strain(step.clone())),
        Case::new(sp, stress(ramp.clone())),
        Case::new(sp, strain(ramp.clone())),
        Case::new(sp, stress(power.clone())),
        Case::new(sp, stress(impulse.clone())),
        Case::new(vo, stress(step.clone())),
        Case::new(vo, stress(ramp.clone())),
        Case::new(vo, stress(smooth(Quantity::Stress))),
        Case::new(vo, stress(impulse.clone())),
        Case::new(mx, strain(step.clone())),
        Case::new(mx, strain(power)),
        Case::new(mx, strain(impulse.clone())),
        Case::new(mx, stress(impulse.clone())),
        Case::new(ze, strain(step.clone())),
        Case::new(ze, stress(step)),
        Case::new(ze, stress(ramp)),
        Case::new(ze, strain(smooth(Quantity::Strain))),
        Case::new(ze, stress(impulse.clone())),
        Case::new(ze, strain(impulse)),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Stepping solver vs closed form.
    Catalog,
    /// Green's function solver vs closed form.
    GreenCatalog,
    /// Stepping vs Green's function solver.
    Agreement,
    /// Equation residual of the closed form.
    Substitution,
    /// Initial condition read back from the numerical response.
    IcRealization,
    /// Initial condition recovered from the recorded twin.
    Estimator,
    /// Caputo vs Riemann-Liouville formulation.
    Caputo,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Catalog => "catalog",
            CheckKind::GreenCatalog => "green-catalog",
            CheckKind::Agreement => "agreement",
            CheckKind::Substitution => "substitution",
            CheckKind::IcRealization => "ic-realization",
            CheckKind::Estimator => "estimator",
            CheckKind::Caputo => "caputo",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub kind: CheckKind,
    pub value: f64,
    pub limit: f64,
    /// Why the check could not be evaluated.
    pub note: Option<String>,
}

impl Check {
    pub fn new(kind: CheckKind, value: f64, limit: f64) -> Self {
        Self {
            kind,
            value,
            limit,
            note: None,
        }
    }

    fn failed(kind: CheckKind, limit: f64, note: String) -> Self {
        Self {
            kind,
            value: f64::NAN,
            limit,
            note: Some(note),
        }
    }

    pub fn passed(&self) -> bool {
        self.value <= self.limit
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub label: String,
    pub checks: Vec<Check>,
    /// Set when the case could not be run at all.
    pub error: Option<String>,
}

impl CaseReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count() + usize::from(self.error.is_some())
    }

    pub fn check(&self, kind: CheckKind) -> Option<&Check> {
        self.checks.iter().find(|c| c.kind == kind)
    }
}

/// Relative error of `value` against `target`, or absolute error against
/// `scale` when the target is zero.
fn ic_error(value: f64, target: f64, scale: f64, tol: &Tolerances) -> Check {
    if target == 0.0 {
        Check::new(CheckKind::IcRealization, value.abs() / scale, tol.zero_ic)
    } else {
        Check::new(
            CheckKind::IcRealization,
            ((value - target) / target).abs(),
            tol.ic,
        )
    }
}

/// The load as an instrument would record it.
pub fn recorded_twin(load: &LoadingProgram, grid: &TimeGrid) -> fracrheo::Result<Signal> {
    match load.program {
        Program::Impulse { magnitude } => Ok(impulse_box(magnitude, grid, load.applied)),
        _ => Ok(sample_program(load, grid)?.to_signal()),
    }
}

/// `None` when the model has no integrated form for the recorded quantity.
fn estimator_check(case: &Case, grid: &TimeGrid, tol: &Tolerances) -> Option<Check> {
    let (limit, relative) = match case.load.program {
        Program::Impulse { magnitude } => (tol.ic, Some(magnitude)),
        _ => (tol.zero_ic, None),
    };
    let twin = match recorded_twin(&case.load, grid) {
        Ok(t) => t,
        Err(e) => return Some(Check::failed(CheckKind::Estimator, limit, e.to_string())),
    };
    let history = match TwinHistory::new(twin.clone(), case.model) {
        Ok(h) => h,
        Err(Error::UnsupportedPairing(_)) => return None,
        Err(e) => return Some(Check::failed(CheckKind::Estimator, limit, e.to_string())),
    };
    let x = match extrapolate(&history, HALVINGS) {
        Ok(x) => x,
        Err(e) => return Some(Check::failed(CheckKind::Estimator, limit, e.to_string())),
    };
    let value = match relative {
        Some(m) => ((x.limit - m) / m).abs(),
        None => {
            let scale = twin.values().iter().fold(0.0f64, |m, v| m.max(v.abs())) * history.a();
            x.limit.abs() / scale
        }
    };
    Some(Check::new(CheckKind::Estimator, value, limit))
}

fn run_checks(case: &Case, grid: &TimeGrid, tol: &Tolerances) -> fracrheo::Result<Vec<Check>> {
    let t_min = 10.0 * grid.dt();
    let p = build_problem(&case.model, &case.load)?;
    let gl = solve_gl(&p, grid)?;
    let green = solve_green(&p, grid)?;
    let mut checks = Vec::new();
    let analytic = match analytic_response(&case.model, &case.load, grid) {
        Ok(a) => Some(a),
        Err(Error::NoClosedForm(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(a) = &analytic {
        checks.push(Check::new(
            CheckKind::Catalog,
            max_relative_error(&gl, a, grid, t_min)?,
            tol.catalog,
        ));
        checks.push(Check::new(
            CheckKind::GreenCatalog,
            max_relative_error(&green, a, grid, t_min)?,
            tol.agreement,
        ));
    }
    checks.push(Check::new(
        CheckKind::Agreement,
        max_relative_error(&gl, &green, grid, t_min)?,
        tol.agreement,
    ));
    checks.push(Check::new(
        CheckKind::Substitution,
        residual(&p, analytic.as_ref().unwrap_or(&gl), t_min)?,
        tol.substitution,
    ));

    let recovered = gl_deriv(&gl, p.ic.order)?.limit_at_origin()?;
    let scale = response_scale(&gl, t_min);
    checks.push(ic_error(recovered, p.ic.value, scale, tol));

    checks.extend(estimator_check(case, grid, tol));
    let zero_ic = p.ic.value == 0.0 && !case.load.program.is_impulse();
    if zero_ic && p.form == Form::Differential && p.order > 0.0 {
        let caputo = solve_caputo(&p, grid)?;
        checks.push(Check::new(
            CheckKind::Caputo,
            max_relative_error(&caputo, &gl, grid, t_min)?,
            tol.caputo,
        ));
    }
    Ok(checks)
}

/// Largest magnitude of `u` on `t >= t_min`, never zero.
fn response_scale(u: &SingularSignal, t_min: f64) -> f64 {
    let g = u.grid();
    (g.first_at_or_after(t_min)..=g.len())
        .map(|k| u.value(k).abs())
        .fold(f64::MIN_POSITIVE, f64::max)
}

pub fn run_case(case: &Case, grid: &TimeGrid, tol: &Tolerances) -> CaseReport {
    let label = case.label();
    match run_checks(case, grid, tol) {
        Ok(checks) => CaseReport {
            label,
            checks,
            error: None,
        },
        Err(e) => CaseReport {
            label,
            checks: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

/// Runs the cases in parallel; reports keep the order of `cases`.
pub fn run_matrix(cases: &[Case], grid: &TimeGrid, tol: &Tolerances) -> Vec<CaseReport> {
    cases.par_iter().map(|c| run_case(c, grid, tol)).collect()
}

pub fn render(reports: &[CaseReport], grid: &TimeGrid) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verification matrix: {} cases, dt = {:e}, n = {}",
        reports.len(),
        grid.dt(),
        grid.len()
    );
    if reports.is_empty() {
        let _ = writeln!(out, "warning: empty matrix, nothing was checked");
    }
    for r in reports {
        let _ = writeln!(out, "{}", r.label);
        if let Some(e) = &r.error {
            let _ = writeln!(out, "  {:<16}{e}  FAIL", "error");
        }
        for c in &r.checks {
            let verdict = if c.passed() { "pass" } else { "FAIL" };
            match &c.note {
                Some(note) => {
                    let _ = writeln!(out, "  {:<16}{note}  {verdict}", c.kind.name());
                }
                None => {
                    let _ = writeln!(
                        out,
                        "  {:<16}{:>10.3e} <= {:<9.1e} {verdict}",
                        c.kind.name(),
                        c.value,
                        c.limit
                    );
                }
            }
        }
    }
    let checks: usize = reports
        .iter()
        .map(|r| r.checks.len() + usize::from(r.error.is_some()))
        .sum();
    let failed: usize = reports.iter().map(CaseReport::failures).sum();
    let _ = writeln!(out, "summary: {checks} checks, {failed} failed");
    out
}
