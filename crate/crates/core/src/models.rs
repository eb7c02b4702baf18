//! Fractional constitutive models, the equations they impose for a given
//! loading program, their initial conditions and closed-form responses.
//!
//! | model      | law                                      |
//! |------------|------------------------------------------|
//! | spring-pot | `σ = K D^α ε`                            |
//! | Voigt      | `σ = E ε + K D^α ε`                      |
//! | Maxwell    | `(1/E) D^α σ + σ/K = D^α ε`              |
//! | Zener      | `σ + ν D^α σ = λ ε + μ D^α ε`            |

use crate::error::{invalid, Error, Result};
use crate::fracops::{gl_deriv, power_law_deriv, PowerTerm};
use crate::grid::{LoadingProgram, Program, Quantity, Signal, SingularSignal, TimeGrid};
use crate::mittag_leffler::{ml, MlParams};
use crate::solver::{ml_power, FdeProblem, Forcing, Form};
use crate::special::rgamma;

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("alpha must lie in (0, 1], got {alpha}")))
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!(
            "{name} must be positive and finite, got {v}"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpringPot {
    pub k: f64,
    pub alpha: f64,
}

impl SpringPot {
    pub fn new(k: f64, alpha: f64) -> Result<Self> {
        check_positive("K", k)?;
        check_alpha(alpha)?;
        Ok(Self { k, alpha })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Voigt {
    pub e: f64,
    pub k: f64,
    pub alpha: f64,
}

impl Voigt {
    pub fn new(e: f64, k: f64, alpha: f64) -> Result<Self> {
        check_positive("E", e)?;
        check_positive("K", k)?;
        check_alpha(alpha)?;
        Ok(Self { e, k, alpha })
    }

    /// `E/K`, the rate in the Mittag-Leffler argument.
    pub fn rate(&self) -> f64 {
        self.e / self.k
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maxwell {
    pub e: f64,
    pub k: f64,
    pub alpha: f64,
}

impl Maxwell {
    pub fn new(e: f64, k: f64, alpha: f64) -> Result<Self> {
        check_positive("E", e)?;
        check_positive("K", k)?;
        check_alpha(alpha)?;
        Ok(Self { e, k, alpha })
    }

    pub fn rate(&self) -> f64 {
        self.e / self.k
    }
}

/// Standard linear solid `σ + ν D^α σ = λ ε + μ D^α ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Zener {
    pub lambda: f64,
    pub mu: f64,
    pub nu: f64,
    pub alpha: f64,
}

impl Zener {
    pub fn new(lambda: f64, mu: f64, nu: f64, alpha: f64) -> Result<Self> {
        check_positive("lambda", lambda)?;
        check_positive("mu", mu)?;
        check_positive("nu", nu)?;
        check_alpha(alpha)?;
        if mu / nu <= lambda {
            return Err(invalid(format!(
                "instantaneous modulus mu/nu = {} must exceed the relaxed modulus lambda = {lambda}",
                mu / nu
            )));
        }
        Ok(Self {
            lambda,
            mu,
            nu,
            alpha,
        })
    }

    /// From the instantaneous modulus `E0`, the relaxed modulus `E∞` and
    /// the spring-pot constant `K`.
    pub fn from_moduli(e0: f64, e_inf: f64, k: f64, alpha: f64) -> Result<Self> {
        check_positive("E0", e0)?;
        check_positive("E_inf", e_inf)?;
        check_positive("K", k)?;
        if e0 <= e_inf {
            return Err(invalid(format!("E0 = {e0} must exceed E_inf = {e_inf}")));
        }
        let mu = k * (e0 - e_inf) / e0;
        Self::new(e_inf, mu, mu / e0, alpha)
    }

    /// Instantaneous modulus `E0 = μ/ν`.
    pub fn e0(&self) -> f64 {
        self.mu / self.nu
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    SpringPot(SpringPot),
    Voigt(Voigt),
    Maxwell(Maxwell),
    Zener(Zener),
}

impl Model {
    pub fn alpha(&self) -> f64 {
        match self {
            Model::SpringPot(m) => m.alpha,
            Model::Voigt(m) => m.alpha,
            Model::Maxwell(m) => m.alpha,
            Model::Zener(m) => m.alpha,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Model::SpringPot(_) => "spring-pot",
            Model::Voigt(_) => "voigt",
            Model::Maxwell(_) => "maxwell",
            Model::Zener(_) => "zener",
        }
    }

    /// Same model with a different order.
    pub fn with_alpha(&self, alpha: f64) -> Result<Model> {
        Ok(match *self {
            Model::SpringPot(m) => Model::SpringPot(SpringPot::new(m.k, alpha)?),
            Model::Voigt(m) => Model::Voigt(Voigt::new(m.e, m.k, alpha)?),
            Model::Maxwell(m) => Model::Maxwell(Maxwell::new(m.e, m.k, alpha)?),
            Model::Zener(m) => Model::Zener(Zener::new(m.lambda, m.mu, m.nu, alpha)?),
        })
    }

    /// Coefficient that turns the first integral of a recorded impulse
    /// twin into the value of this model's initial condition.
    pub fn impulse_ic_factor(&self, recorded: Quantity) -> Result<f64> {
        match (self, recorded) {
            (Model::SpringPot(m), Quantity::Stress) => Ok(1.0 / m.k),
            (Model::Voigt(m), Quantity::Stress) => Ok(1.0 / m.k),
            (Model::Maxwell(m), Quantity::Stress) => Ok(1.0 / m.k),
            (Model::Maxwell(m), Quantity::Strain) => Ok(m.e),
            (Model::Zener(m), Quantity::Stress) => Ok(1.0 / m.mu),
            (Model::Zener(m), Quantity::Strain) => Ok(1.0 / m.nu),
            (m, q) => Err(Error::UnsupportedPairing(format!(
                "{} with recorded {q}",
                m.name()
            ))),
        }
    }
}

/// `[D^{order} u]_{t→0⁺} = value` for the unknown quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialCondition {
    pub order: f64,
    pub value: f64,
    pub quantity: Quantity,
}

impl InitialCondition {
    pub fn zero(order: f64, quantity: Quantity) -> Self {
        Self {
            order,
            value: 0.0,
            quantity,
        }
    }
}

/// `D^order` of a non-impulsive load.
fn load_deriv(load: &LoadingProgram, order: f64) -> Result<Forcing> {
    if let Some(terms) = load.program.power_terms() {
        let terms = terms
            .into_iter()
            .map(|t| power_law_deriv(t, order))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Forcing::terms(terms));
    }
    match &load.program {
        Program::Sampled(s) => {
            let d = gl_deriv(&SingularSignal::regular(s.clone()), order)?;
            Ok(Forcing {
                terms: d.terms().to_vec(),
                sampled: Some(d.regular_part().clone()),
            })
        }
        _ => Err(Error::UnsupportedSampling),
    }
}

fn unsupported(model: &Model, load: &LoadingProgram) -> Error {
    Error::UnsupportedPairing(format!(
        "{} with prescribed {} {}",
        model.name(),
        load.applied,
        load.program.name()
    ))
}

/// The two-term equation `c1 D^α u + c0 u = f` (or its integral form) that
/// the response to `load` must satisfy, with its initial condition.
pub fn build_problem(model: &Model, load: &LoadingProgram) -> Result<FdeProblem> {
    let alpha = model.alpha();
    if alpha >= 1.0 {
        return Err(Error::InvalidProblem(
            "alpha = 1 is only available through closed forms".into(),
        ));
    }
    let unknown = load.applied.dual();
    let rl = |value: f64| InitialCondition {
        order: alpha - 1.0,
        value,
        quantity: unknown,
    };
    let impulse = match load.program {
        Program::Impulse { magnitude } => Some(magnitude),
        _ => None,
    };
    let differential = |c1: f64, c0: f64, forcing: Forcing, ic: InitialCondition| {
        FdeProblem::new(c0, c1, alpha, Form::Differential, forcing, ic, unknown)
    };
    match (*model, load.applied) {
        (Model::SpringPot(m), Quantity::Stress) => match impulse {
            Some(b) => differential(1.0, 0.0, Forcing::none(), rl(b / m.k)),
            None => differential(1.0, 0.0, load_deriv(load, 0.0)?.scaled(1.0 / m.k), rl(0.0)),
        },
        (Model::SpringPot(m), Quantity::Strain) => match impulse {
            Some(_) => Err(Error::UnrealizableLoad(
                "a strain impulse on a spring-pot needs a non-integrable stress".into(),
            )),
            None => FdeProblem::new(
                0.0,
                1.0,
                -alpha,
                Form::Differential,
                load_deriv(load, 0.0)?.scaled(m.k),
                InitialCondition::zero(-alpha - 1.0, unknown),
                unknown,
            ),
        },
        (Model::Voigt(m), Quantity::Stress) => match impulse {
            Some(b) => differential(m.k, m.e, Forcing::none(), rl(b / m.k)),
            None => differential(m.k, m.e, load_deriv(load, 0.0)?, rl(0.0)),
        },
        (Model::Maxwell(m), Quantity::Strain) => match impulse {
            Some(a) => FdeProblem::new(
                1.0 / m.k,
                1.0 / m.e,
                alpha,
                Form::Integral,
                Forcing::none(),
                InitialCondition {
                    order: -1.0,
                    value: a * m.e,
                    quantity: unknown,
                },
                unknown,
            ),
            None => differential(1.0 / m.e, 1.0 / m.k, load_deriv(load, alpha)?, rl(0.0)),
        },
        (Model::Maxwell(m), Quantity::Stress) => match impulse {
            Some(b) => differential(1.0, 0.0, Forcing::none(), rl(b / m.k)),
            None => Err(unsupported(model, load)),
        },
        (Model::Zener(m), Quantity::Stress) => match impulse {
            Some(b) => differential(m.mu, m.lambda, Forcing::none(), rl(b / m.mu)),
            None => {
                let f = load_deriv(load, 0.0)?.combine(&load_deriv(load, alpha)?.scaled(m.nu))?;
                differential(m.mu, m.lambda, f, rl(0.0))
            }
        },
        (Model::Zener(m), Quantity::Strain) => match impulse {
            Some(a) => differential(m.nu, 1.0, Forcing::none(), rl(a / m.nu)),
            None => {
                let f = load_deriv(load, 0.0)?
                    .scaled(m.lambda)
                    .combine(&load_deriv(load, alpha)?.scaled(m.mu))?;
                differential(m.nu, 1.0, f, rl(0.0))
            }
        },
        _ => Err(unsupported(model, load)),
    }
}

/// Initial condition carried by the response of `model` to `load`.
pub fn initial_condition(model: &Model, load: &LoadingProgram) -> Result<InitialCondition> {
    build_problem(model, load).map(|p| p.ic)
}

/// `b·t^{α-1} E_{α,α}(-r t^α)` with the `b/Γ(α)·t^{α-1}` part kept symbolic.
fn impulse_kernel(
    b: f64,
    rate: f64,
    alpha: f64,
    grid: &TimeGrid,
    q: Quantity,
) -> Result<SingularSignal> {
    ml_power(b, alpha - 1.0, alpha, alpha, rate, grid, q)
}

/// `t ↦ f(E_α(-r t^α))` sampled on the grid.
fn relaxation_shape(
    rate: f64,
    alpha: f64,
    grid: &TimeGrid,
    q: Quantity,
    f: impl Fn(f64) -> f64,
) -> Result<SingularSignal> {
    let p = MlParams::new(alpha, 1.0)?;
    let values = grid
        .times()
        .map(|t| Ok(f(ml(p, -rate * t.powf(alpha))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SingularSignal::regular(Signal::new(*grid, values, q)?))
}

/// Closed-form response, when one is catalogued.
pub fn analytic_response(
    model: &Model,
    load: &LoadingProgram,
    grid: &TimeGrid,
) -> Result<SingularSignal> {
    let alpha = model.alpha();
    let q = load.applied.dual();
    let no_form = || {
        Error::NoClosedForm(format!(
            "{} with prescribed {} {}",
            model.name(),
            load.applied,
            load.program.name()
        ))
    };
    let zeros = Signal::zeros(*grid, q);
    match (*model, load.applied, &load.program) {
        (Model::SpringPot(_), Quantity::Strain, Program::Impulse { .. }) => {
            Err(Error::UnrealizableLoad(
                "a strain impulse on a spring-pot needs a non-integrable stress".into(),
            ))
        }
        (Model::SpringPot(m), Quantity::Stress, Program::Impulse { magnitude }) => {
            SingularSignal::new(
                zeros,
                PowerTerm::new(magnitude / m.k * rgamma(alpha), alpha - 1.0),
            )
        }
        (Model::SpringPot(m), applied, program) => {
            let terms = program.power_terms().ok_or_else(no_form)?;
            let (order, scale) = if applied == Quantity::Stress {
                (-alpha, 1.0 / m.k)
            } else {
                (alpha, m.k)
            };
            let terms = terms
                .into_iter()
                .map(|t| power_law_deriv(PowerTerm::new(scale * t.coeff, t.exponent), order))
                .collect::<Result<Vec<_>>>()?;
            SingularSignal::from_terms(zeros, &terms)
        }
        (Model::Voigt(m), Quantity::Stress, Program::Step { amplitude }) => {
            relaxation_shape(m.rate(), alpha, grid, q, |e| amplitude / m.e * (1.0 - e))
        }
        (Model::Voigt(m), Quantity::Stress, Program::Impulse { magnitude }) => {
            impulse_kernel(magnitude / m.k, m.rate(), alpha, grid, q)
        }
        (Model::Maxwell(m), Quantity::Strain, Program::Step { amplitude }) => {
            relaxation_shape(m.rate(), alpha, grid, q, |e| m.e * amplitude * e)
        }
        (Model::Maxwell(m), Quantity::Strain, Program::Impulse { magnitude }) => {
            let b = -magnitude * m.e * m.rate();
            Ok(impulse_kernel(b, m.rate(), alpha, grid, q)?.with_impulse(magnitude * m.e))
        }
        (Model::Maxwell(m), Quantity::Stress, Program::Impulse { magnitude }) => {
            let s = SingularSignal::new(
                zeros,
                PowerTerm::new(magnitude / m.k * rgamma(alpha), alpha - 1.0),
            )?;
            Ok(s.with_impulse(magnitude / m.e))
        }
        (Model::Zener(m), Quantity::Strain, Program::Step { amplitude }) => {
            relaxation_shape(1.0 / m.nu, alpha, grid, q, |e| {
                amplitude * (m.lambda + (m.e0() - m.lambda) * e)
            })
        }
        (Model::Zener(m), Quantity::Stress, Program::Step { amplitude }) => {
            relaxation_shape(m.lambda / m.mu, alpha, grid, q, |e| {
                amplitude * (1.0 / m.lambda - (1.0 / m.lambda - 1.0 / m.e0()) * e)
            })
        }
        (Model::Zener(m), Quantity::Stress, Program::Impulse { magnitude }) => {
            impulse_kernel(magnitude / m.mu, m.lambda / m.mu, alpha, grid, q)
        }
        (Model::Zener(m), Quantity::Strain, Program::Impulse { magnitude }) => {
            impulse_kernel(magnitude / m.nu, 1.0 / m.nu, alpha, grid, q)
        }
        (Model::Voigt(_), Quantity::Strain, _) | (Model::Maxwell(_), Quantity::Stress, _) => {
            Err(unsupported(model, load))
        }
        _ => Err(no_form()),
    }
}
