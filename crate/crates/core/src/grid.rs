//! Uniform time grids, sampled signals with symbolic power terms, and
//! loading programs.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::fracops::PowerTerm;

/// Uniform grid `t_k = k·dt`, `k = 1..=n`. The origin is implicit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    dt: f64,
    n: usize,
}

impl TimeGrid {
    pub fn new(dt: f64, n: usize) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(invalid(format!(
                "time step must be positive and finite, got {dt}"
            )));
        }
        if n < 1 {
            return Err(invalid("grid needs at least one point"));
        }
        Ok(Self { dt, n })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Time of the `k`-th point, `k` in `1..=n`.
    pub fn t(&self, k: usize) -> f64 {
        k as f64 * self.dt
    }

    pub fn end(&self) -> f64 {
        self.t(self.n)
    }

    /// Grid times `t_1 ..= t_n`.
    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=self.n).map(move |k| self.t(k))
    }

    /// Same step, first `n` points.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: n,
            });
        }
        Self::new(self.dt, n)
    }

    /// Same horizon with the step divided by `factor`.
    pub fn refine(&self, factor: usize) -> Result<Self> {
        Self::new(self.dt / factor as f64, self.n * factor)
    }

    /// Index of the first point with `t_k >= t`.
    pub fn first_at_or_after(&self, t: f64) -> usize {
        ((t / self.dt - 1e-9).ceil().max(1.0) as usize).min(self.n + 1)
    }

    fn same_as(&self, other: &TimeGrid) -> bool {
        self.n == other.n && (self.dt - other.dt).abs() <= 1e-12 * self.dt
    }
}

pub fn make_grid(dt: f64, n: usize) -> Result<TimeGrid> {
    TimeGrid::new(dt, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Stress,
    Strain,
    Generic,
}

impl Quantity {
    pub fn dual(self) -> Quantity {
        match self {
            Quantity::Stress => Quantity::Strain,
            Quantity::Strain => Quantity::Stress,
            Quantity::Generic => Quantity::Generic,
        }
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Quantity::Stress => "stress",
            Quantity::Strain => "strain",
            Quantity::Generic => "generic",
        })
    }
}

impl std::str::FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stress" => Ok(Quantity::Stress),
            "strain" => Ok(Quantity::Strain),
            "generic" => Ok(Quantity::Generic),
            _ => Err(invalid(format!("unknown quantity {s:?}"))),
        }
    }
}

/// Samples on the points of a [`TimeGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    grid: TimeGrid,
    values: Vec<f64>,
    quantity: Quantity,
}

impl Signal {
    pub fn new(grid: TimeGrid, values: Vec<f64>, quantity: Quantity) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Dimension {
                expected: grid.len(),
                found: values.len(),
            });
        }
        Ok(Self {
            grid,
            values,
            quantity,
        })
    }

    pub fn from_fn(grid: TimeGrid, quantity: Quantity, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.times().map(f).collect();
        Self {
            grid,
            values,
            quantity,
        }
    }

    pub fn zeros(grid: TimeGrid, quantity: Quantity) -> Self {
        Self {
            grid,
            values: vec![0.0; grid.len()],
            quantity,
        }
    }

    pub fn grid(&self) -> TimeGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn quantity(&self) -> Quantity {
        self.quantity
    }

    pub fn with_quantity(mut self, quantity: Quantity) -> Self {
        self.quantity = quantity;
        self
    }

    pub fn truncate(&self, n: usize) -> Result<Self> {
        let grid = self.grid.truncate(n)?;
        Ok(Self {
            grid,
            values: self.values[..n].to_vec(),
            quantity: self.quantity,
        })
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
            quantity: self.quantity,
        }
    }

    pub fn check_grid(&self, grid: &TimeGrid) -> Result<()> {
        if self.grid.same_as(grid) {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: grid.len(),
                found: self.grid.len(),
            })
        }
    }

    /// Value at the origin extrapolated from the first samples
    /// (quadratic when three samples are available).
    pub fn origin_extrapolation(&self) -> f64 {
        match self.values.as_slice() {
            [] => 0.0,
            [a] => *a,
            [a, b] => 2.0 * a - b,
            [a, b, c, ..] => 3.0 * a - 3.0 * b + c,
        }
    }

    /// `time,value` CSV with twelve significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "time,value")?;
        for (t, v) in self.grid.times().zip(&self.values) {
            writeln!(w, "{},{}", fmt_sig(t), fmt_sig(*v))?;
        }
        Ok(())
    }

    /// Reads a `time,value` CSV whose times are `k·dt`, `k = 1..=n`.
    pub fn read_csv<R: BufRead>(r: R, quantity: Quantity) -> Result<Self> {
        let mut times = Vec::new();
        let mut values = Vec::new();
        let mut header = false;
        for (i, line) in r.lines().enumerate() {
            let line = line.map_err(|e| invalid(format!("reading CSV: {e}")))?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if !header {
                if !line.replace(' ', "").starts_with("time,") {
                    return Err(invalid(format!(
                        "line {}: expected header `time,value`",
                        i + 1
                    )));
                }
                header = true;
                continue;
            }
            let mut cols = line.split(',');
            let mut next = |name: &str| -> Result<f64> {
                cols.next()
                    .ok_or_else(|| invalid(format!("line {}: missing {name}", i + 1)))?
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| invalid(format!("line {}: bad {name}: {e}", i + 1)))
            };
            times.push(next("time")?);
            values.push(next("value")?);
        }
        let n = times.len();
        if n == 0 {
            return Err(Error::InsufficientSamples("CSV has no data rows".into()));
        }
        let dt = times[n - 1] / n as f64;
        for (k, t) in times.iter().enumerate() {
            let expect = (k + 1) as f64 * dt;
            if (t - expect).abs() > 1e-6 * dt {
                return Err(invalid(format!(
                    "row {}: time {t} is not on the uniform grid t_k = k*{dt}",
                    k + 1
                )));
            }
        }
        Signal::new(TimeGrid::new(dt, n)?, values, quantity)
    }
}

/// Twelve significant digits, scientific notation. Negative zero prints as zero.
pub fn fmt_sig(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    let mut s = String::new();
    let _ = write!(s, "{x:.11e}");
    s
}

/// Sampled regular part plus a symbolic sum of power terms `Σ c_i t^{γ_i}`,
/// `γ_i > -1`, and an optional Dirac mass at the origin.
///
/// Grid values are `regular_k + Σ c_i t_k^{γ_i}`. The Dirac mass has no
/// pointwise value and only shows up under fractional integration. Most
/// signals carry at most one term, the singular part `c·t^γ`, `-1 < γ <= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularSignal {
    regular: Signal,
    terms: Vec<PowerTerm>,
    impulse: f64,
}

impl SingularSignal {
    pub fn regular(regular: Signal) -> Self {
        Self {
            regular,
            terms: Vec::new(),
            impulse: 0.0,
        }
    }

    /// Regular samples plus one singular term with exponent in `(-1, 0]`.
    pub fn new(regular: Signal, singular: PowerTerm) -> Result<Self> {
        if singular.coeff != 0.0 && !(singular.exponent > -1.0 && singular.exponent <= 0.0) {
            return Err(invalid(format!(
                "singular exponent must lie in (-1, 0], got {}",
                singular.exponent
            )));
        }
        Self::from_terms(regular, &[singular])
    }

    /// Regular samples plus any number of power terms; equal exponents are
    /// merged and zero coefficients dropped.
    pub fn from_terms(regular: Signal, terms: &[PowerTerm]) -> Result<Self> {
        let mut merged: Vec<PowerTerm> = Vec::new();
        for t in terms.iter().filter(|t| t.coeff != 0.0) {
            match merged
                .iter_mut()
                .find(|m| (m.exponent - t.exponent).abs() < 1e-13)
            {
                Some(m) => m.coeff += t.coeff,
                None => merged.push(*t),
            }
        }
        merged.retain(|t| t.coeff != 0.0);
        if let Some(bad) = merged.iter().find(|t| !(t.exponent > -1.0)) {
            return Err(Error::Singularity(bad.exponent));
        }
        merged.sort_by(|a, b| a.exponent.total_cmp(&b.exponent));
        Ok(Self {
            regular,
            terms: merged,
            impulse: 0.0,
        })
    }

    pub fn with_impulse(mut self, mass: f64) -> Self {
        self.impulse = mass;
        self
    }

    pub fn grid(&self) -> TimeGrid {
        self.regular.grid
    }

    pub fn len(&self) -> usize {
        self.regular.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regular.values.is_empty()
    }

    pub fn quantity(&self) -> Quantity {
        self.regular.quantity
    }

    pub fn regular_part(&self) -> &Signal {
        &self.regular
    }

    /// Symbolic terms, most singular first.
    pub fn terms(&self) -> &[PowerTerm] {
        &self.terms
    }

    /// The most singular symbolic term if its exponent is in `(-1, 0]`,
    /// else [`PowerTerm::ZERO`].
    pub fn singular_part(&self) -> PowerTerm {
        match self.terms.first() {
            Some(t) if t.exponent <= 0.0 => *t,
            _ => PowerTerm::ZERO,
        }
    }

    pub fn impulse(&self) -> f64 {
        self.impulse
    }

    /// Pointwise value at `t_k`, `k` in `1..=n`.
    pub fn value(&self, k: usize) -> f64 {
        let t = self.regular.grid.t(k);
        self.regular.values[k - 1] + self.terms.iter().map(|p| p.eval(t)).sum::<f64>()
    }

    pub fn values(&self) -> Vec<f64> {
        (1..=self.len()).map(|k| self.value(k)).collect()
    }

    /// Pointwise values as a plain signal.
    pub fn to_signal(&self) -> Signal {
        Signal {
            grid: self.regular.grid,
            values: self.values(),
            quantity: self.regular.quantity,
        }
    }

    /// Everything folded into samples except the singular part.
    pub fn collapsed(&self) -> Self {
        let s = self.singular_part();
        let values = (1..=self.len())
            .map(|k| self.value(k) - s.eval(self.regular.grid.t(k)))
            .collect();
        let regular = Signal {
            grid: self.regular.grid,
            values,
            quantity: self.regular.quantity,
        };
        Self {
            regular,
            terms: if s.coeff == 0.0 { vec![] } else { vec![s] },
            impulse: self.impulse,
        }
    }

    pub fn with_quantity(mut self, quantity: Quantity) -> Self {
        self.regular.quantity = quantity;
        self
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            regular: self.regular.map(|v| s * v),
            terms: self
                .terms
                .iter()
                .map(|t| PowerTerm::new(s * t.coeff, t.exponent))
                .collect(),
            impulse: s * self.impulse,
        }
    }

    /// Sum of two signals on the same grid.
    pub fn add(&self, other: &Self) -> Result<Self> {
        other.regular.check_grid(&self.regular.grid)?;
        let values = self
            .regular
            .values
            .iter()
            .zip(&other.regular.values)
            .map(|(a, b)| a + b)
            .collect();
        let regular = Signal {
            grid: self.regular.grid,
            values,
            quantity: self.regular.quantity,
        };
        let terms: Vec<PowerTerm> = self.terms.iter().chain(&other.terms).copied().collect();
        Ok(Self::from_terms(regular, &terms)?.with_impulse(self.impulse + other.impulse))
    }

    pub fn truncate(&self, n: usize) -> Result<Self> {
        Ok(Self {
            regular: self.regular.truncate(n)?,
            terms: self.terms.clone(),
            impulse: self.impulse,
        })
    }

    /// Limit as `t → 0⁺`. Symbolic terms are taken exactly; the regular
    /// part is extrapolated from its first samples.
    pub fn limit_at_origin(&self) -> Result<f64> {
        let mut sing = 0.0;
        for t in &self.terms {
            if t.exponent < 0.0 {
                return Err(Error::Singularity(t.exponent));
            }
            if t.exponent == 0.0 {
                sing += t.coeff;
            }
        }
        Ok(sing + extrapolate_to_origin(&self.regular.values))
    }
}

/// Wynn's epsilon table over the samples at `t_1, t_2, t_4, ...`, which is
/// exact for `L + Σ c_i t^{q_i}` with as many powers as the table depth
/// allows. Falls back to shallower estimates when a difference vanishes.
fn extrapolate_to_origin(v: &[f64]) -> f64 {
    match v.len() {
        0 => return 0.0,
        1 => return v[0],
        2 | 3 => return 2.0 * v[0] - v[1],
        _ => {}
    }
    let s: Vec<f64> = (0..5)
        .map(|j| 1usize << j)
        .take_while(|&i| i <= v.len())
        .map(|i| v[i - 1])
        .collect();
    let mut prev = vec![0.0; s.len() + 1];
    let mut cur = s.clone();
    let mut best = s[0];
    for k in 1..s.len() {
        let next: Vec<f64> = (0..cur.len() - 1)
            .map(|j| {
                let d = cur[j + 1] - cur[j];
                if d == 0.0 {
                    f64::NAN
                } else {
                    prev[j + 1] + 1.0 / d
                }
            })
            .collect();
        if next.is_empty() || !next[0].is_finite() {
            break;
        }
        if k % 2 == 0 {
            best = next[0];
        }
        prev = cur;
        cur = next;
    }
    if s.len() >= 3 && best == s[0] && s[1] != s[0] {
        return 2.0 * v[0] - v[1];
    }
    best
}

/// Shape of a prescribed loading history.
#[derive(Debug, Clone, PartialEq)]
pub enum Program {
    /// `amplitude·H(t)`.
    Step { amplitude: f64 },
    /// `magnitude·δ(t)`; only ever enters through an initial condition.
    Impulse { magnitude: f64 },
    /// `rate·t`.
    Ramp { rate: f64 },
    /// `coeff·t^exponent`, `exponent > -1`.
    PowerLaw { coeff: f64, exponent: f64 },
    /// Arbitrary samples, continuous at the origin.
    Sampled(Signal),
}

impl Program {
    /// The program as exact power terms, when it has that form.
    pub fn power_terms(&self) -> Option<Vec<PowerTerm>> {
        match *self {
            Program::Step { amplitude } => Some(vec![PowerTerm::new(amplitude, 0.0)]),
            Program::Ramp { rate } => Some(vec![PowerTerm::new(rate, 1.0)]),
            Program::PowerLaw { coeff, exponent } => Some(vec![PowerTerm::new(coeff, exponent)]),
            Program::Impulse { .. } | Program::Sampled(_) => None,
        }
    }

    pub fn is_impulse(&self) -> bool {
        matches!(self, Program::Impulse { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Program::Step { .. } => "step",
            Program::Impulse { .. } => "impulse",
            Program::Ramp { .. } => "ramp",
            Program::PowerLaw { .. } => "power-law",
            Program::Sampled(_) => "sampled",
        }
    }
}

/// A program applied to one of the two conjugate quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadingProgram {
    pub program: Program,
    pub applied: Quantity,
}

impl LoadingProgram {
    pub fn new(program: Program, applied: Quantity) -> Result<Self> {
        if applied == Quantity::Generic {
            return Err(invalid("a load must prescribe stress or strain"));
        }
        if let Program::PowerLaw { exponent, .. } = program {
            if !(exponent > -1.0) {
                return Err(invalid(format!(
                    "power-law exponent must exceed -1, got {exponent}"
                )));
            }
        }
        Ok(Self { program, applied })
    }

    pub fn stress(program: Program) -> Self {
        Self {
            program,
            applied: Quantity::Stress,
        }
    }

    pub fn strain(program: Program) -> Self {
        Self {
            program,
            applied: Quantity::Strain,
        }
    }
}

/// Samples a load on a grid. Power laws with `exponent <= 0` are kept
/// symbolic; impulses cannot be sampled.
pub fn sample_program(load: &LoadingProgram, grid: &TimeGrid) -> Result<SingularSignal> {
    let q = load.applied;
    match &load.program {
        Program::Impulse { .. } => Err(Error::UnsupportedSampling),
        Program::Step { amplitude } => {
            Ok(SingularSignal::regular(Signal::from_fn(*grid, q, |_| {
                *amplitude
            })))
        }
        Program::Ramp { rate } => Ok(SingularSignal::regular(Signal::from_fn(*grid, q, |t| {
            rate * t
        }))),
        Program::PowerLaw { coeff, exponent } => {
            let term = PowerTerm::new(*coeff, *exponent);
            if *exponent > 0.0 {
                Ok(SingularSignal::regular(Signal::from_fn(*grid, q, |t| {
                    term.eval(t)
                })))
            } else {
                SingularSignal::new(Signal::zeros(*grid, q), term)
            }
        }
        Program::Sampled(s) => {
            s.check_grid(grid)?;
            Ok(SingularSignal::regular(s.clone().with_quantity(q)))
        }
    }
}

/// A box of width `dt` and height `magnitude/dt` on the first cell: the
/// finite-width stand-in for an impulse used to emulate a recorded twin.
pub fn impulse_box(magnitude: f64, grid: &TimeGrid, quantity: Quantity) -> Signal {
    let mut values = vec![0.0; grid.len()];
    values[0] = magnitude / grid.dt();
    Signal {
        grid: *grid,
        values,
        quantity,
    }
}
