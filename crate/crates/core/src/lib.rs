//! Fractional-order viscoelastic models (spring-pot, Voigt, Maxwell, Zener)
//! driven by prescribed stress or strain histories, with Riemann-Liouville
//! initial conditions handled symbolically.
//!
//! The crate is organised bottom-up:
//!
//! * [`grid`]: uniform time grids, sampled signals and loading programs.
//! * [`fracops`]: Grünwald-Letnikov type fractional derivatives and integrals.
//! * [`mittag_leffler`]: two-parameter Mittag-Leffler function.
//! * [`models`]: constitutive models, their initial conditions and closed forms.
//! * [`solver`]: two-term linear fractional differential equation solvers.
//! * [`ic_estimator`]: recovery of initial-condition values from recorded twins.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fracops;
pub mod grid;
pub mod ic_estimator;
pub mod mittag_leffler;
pub mod models;
pub mod solver;
pub mod special;

pub use error::{Error, Result};
pub use fracops::{caputo_deriv, gl_deriv, gl_deriv_with, power_law_deriv, PowerTerm};
pub use grid::{LoadingProgram, Program, Quantity, Signal, SingularSignal, TimeGrid};
pub use mittag_leffler::{ml, MlParams};
pub use models::{InitialCondition, Model};
pub use solver::{solve_caputo, solve_gl, solve_green, FdeProblem};
