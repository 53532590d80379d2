//! Fixed-step classical Runge–Kutta integration of the SIR family in rescaled
//! time, with extinction-based termination and cubic Hermite dense output.

use crate::error::{EpiError, Result};
use crate::model::{rates_for, ModelKind, ModelParams, Rates, State, SQRT_DOMAIN_SLACK};
use crate::roots;

/// Consecutive decreasing steps of I required before the extinction
/// threshold is armed.
pub const DECREASING_STEPS_BEFORE_EXTINCTION: usize = 10;

/// Maximum number of local step halvings for the modified model near S = 1/2.
pub const MAX_HALVINGS: u32 = 40;

/// Event times are refined on the interpolant to this width in tau.
pub const EVENT_TAU_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub step_size: f64,
    pub tau_max: f64,
    /// Stop once I drops below this after the peak.
    pub extinction_threshold: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            step_size: 1e-3,
            tau_max: 100.0,
            extinction_threshold: 1e-9,
        }
    }
}

impl IntegratorConfig {
    pub fn with_step_size(mut self, h: f64) -> Self {
        self.step_size = h;
        self
    }

    pub fn with_tau_max(mut self, tau_max: f64) -> Self {
        self.tau_max = tau_max;
        self
    }

    pub fn with_extinction_threshold(mut self, threshold: f64) -> Self {
        self.extinction_threshold = threshold;
        self
    }

    pub fn validate(&self, params: &ModelParams) -> Result<()> {
        if !(self.step_size.is_finite() && self.step_size > 0.0) {
            return Err(EpiError::Config(format!(
                "step size must be positive, got {}",
                self.step_size
            )));
        }
        if !(self.tau_max.is_finite() && self.tau_max > 0.0) {
            return Err(EpiError::Config(format!(
                "tau_max must be positive, got {}",
                self.tau_max
            )));
        }
        if !(self.extinction_threshold > 0.0 && self.extinction_threshold < params.i0()) {
            return Err(EpiError::Config(format!(
                "extinction threshold must lie in (0, i0 = {}), got {}",
                params.i0(),
                self.extinction_threshold
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    InfectionExtinct,
    TauMaxReached,
}

/// Events that can be located on a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Event {
    /// Maximum of I, where the effective reproduction number falls through 1.
    PeakOfI,
    /// S falls through the given value.
    SCrossesValue(f64),
    /// I falls through the given value.
    IFallsBelow(f64),
}

/// An integrated solution. Immutable once built.
#[derive(Debug, Clone)]
pub struct Trajectory {
    params: ModelParams,
    model_kind: ModelKind,
    states: Vec<State>,
    rates: Vec<Rates>,
    step_size: f64,
    termination: Termination,
}

type Vec3 = [f64; 3];

fn derivative(kind: ModelKind, r0: f64, y: &Vec3) -> Result<Vec3> {
    let d = rates_for(kind, r0, y[0], y[1])?;
    Ok([d.ds, d.di, d.dr])
}

fn offset(y: &Vec3, h: f64, k: &Vec3) -> Vec3 {
    [y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]]
}

fn rk4_step(kind: ModelKind, r0: f64, y: &Vec3, h: f64) -> Result<Vec3> {
    let k1 = derivative(kind, r0, y)?;
    let k2 = derivative(kind, r0, &offset(y, 0.5 * h, &k1))?;
    let k3 = derivative(kind, r0, &offset(y, 0.5 * h, &k2))?;
    let k4 = derivative(kind, r0, &offset(y, h, &k3))?;
    let w = h / 6.0;
    Ok([
        y[0] + w * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        y[1] + w * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        y[2] + w * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
    ])
}

fn acceptable(kind: ModelKind, y: &Vec3) -> bool {
    match kind {
        ModelKind::ModifiedSir => 2.0 * y[0] - 1.0 >= -SQRT_DOMAIN_SLACK,
        _ => true,
    }
}

/// Advances by `h`. For the modified model a step whose stages leave the
/// square-root domain is split in half, recursively, up to `MAX_HALVINGS`.
fn advance(kind: ModelKind, r0: f64, y: &Vec3, h: f64, depth: u32) -> Result<Vec3> {
    match rk4_step(kind, r0, y, h) {
        Ok(next) if acceptable(kind, &next) => Ok(next),
        outcome => {
            if depth >= MAX_HALVINGS {
                return match outcome {
                    Err(e) => Err(e),
                    Ok(next) => Err(EpiError::Domain(format!(
                        "step left the modified-model domain: S = {}",
                        next[0]
                    ))),
                };
            }
            let mid = advance(kind, r0, y, 0.5 * h, depth + 1)?;
            advance(kind, r0, &mid, 0.5 * h, depth + 1)
        }
    }
}

/// Integrates `kind` from the initial state of `params` with classical RK4.
///
/// Integration stops when I has fallen below the extinction threshold after
/// decreasing for [`DECREASING_STEPS_BEFORE_EXTINCTION`] consecutive steps,
/// or at `tau_max`. The modified model requires `r0 > 1`.
pub fn integrate(
    params: &ModelParams,
    kind: ModelKind,
    config: &IntegratorConfig,
) -> Result<Trajectory> {
    config.validate(params)?;
    if kind == ModelKind::ModifiedSir && params.r0() <= 1.0 {
        return Err(EpiError::Domain(format!(
            "the modified model needs r0 > 1, got {}",
            params.r0()
        )));
    }
    let r0 = params.r0();
    let h = config.step_size;
    let n_steps = ((config.tau_max / h) - 1e-9).ceil().max(1.0) as usize;

    let first = State::initial(params);
    let mut states = Vec::with_capacity(n_steps.min(1 << 20) + 1);
    let mut rates = Vec::with_capacity(n_steps.min(1 << 20) + 1);
    rates.push(rates_for(kind, r0, first.s, first.i)?);
    states.push(first);

    let mut y: Vec3 = [first.s, first.i, first.r];
    let mut tau = 0.0;
    let mut decreasing = 0usize;
    let mut armed = false;
    let mut termination = Termination::TauMaxReached;

    for k in 1..=n_steps {
        let next_tau = if k == n_steps {
            config.tau_max
        } else {
            k as f64 * h
        };
        let next = advance(kind, r0, &y, next_tau - tau, 0)?;
        let state = State::new(next_tau, next[0], next[1], next[2])?;

        if next[1] < y[1] {
            decreasing += 1;
            if decreasing >= DECREASING_STEPS_BEFORE_EXTINCTION {
                armed = true;
            }
        } else {
            decreasing = 0;
        }

        rates.push(rates_for(kind, r0, state.s, state.i)?);
        states.push(state);
        y = next;
        tau = next_tau;

        if armed && y[1] < config.extinction_threshold {
            termination = Termination::InfectionExtinct;
            break;
        }
    }

    Ok(Trajectory {
        params: *params,
        model_kind: kind,
        states,
        rates,
        step_size: h,
        termination,
    })
}

impl Trajectory {
    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn model_kind(&self) -> ModelKind {
        self.model_kind
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    /// Right-hand side evaluated at each stored state.
    pub fn rates(&self) -> &[Rates] {
        &self.rates
    }

    pub fn step_size(&self) -> f64 {
        self.step_size
    }

    pub fn termination(&self) -> Termination {
        self.termination
    }

    pub fn final_state(&self) -> &State {
        self.states
            .last()
            .expect("a trajectory holds at least its initial state")
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Cubic Hermite interpolant built from the stored states and rates.
    /// `None` outside the integrated span.
    pub fn interpolate(&self, tau: f64) -> Option<State> {
        let first = self.states.first()?.tau;
        let last = self.final_state().tau;
        if !(tau >= first && tau <= last) {
            return None;
        }
        let k = self
            .states
            .partition_point(|st| st.tau <= tau)
            .saturating_sub(1)
            .min(self.states.len().saturating_sub(2));
        if self.states.len() == 1 {
            return Some(self.states[0]);
        }
        Some(self.hermite(k, tau))
    }

    fn hermite(&self, k: usize, tau: f64) -> State {
        let (a, b) = (&self.states[k], &self.states[k + 1]);
        let (fa, fb) = (&self.rates[k], &self.rates[k + 1]);
        let h = b.tau - a.tau;
        let t = (tau - a.tau) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        let blend =
            |ya: f64, da: f64, yb: f64, db: f64| h00 * ya + h10 * h * da + h01 * yb + h11 * h * db;
        State {
            tau,
            s: blend(a.s, fa.ds, b.s, fb.ds),
            i: blend(a.i, fa.di, b.i, fb.di),
            r: blend(a.r, fa.dr, b.r, fb.dr),
        }
    }

    /// Locates the first occurrence of `event`. The bracketing step is found
    /// on the grid and the crossing is refined by bisection on the Hermite
    /// interpolant to [`EVENT_TAU_TOL`].
    pub fn locate_event(&self, event: Event) -> Result<(f64, State)> {
        let r0 = self.params.r0();
        let kind = self.model_kind;
        let g: Box<dyn Fn(&State) -> f64> = match event {
            Event::PeakOfI => match kind {
                ModelKind::Sir => Box::new(move |st: &State| r0 * st.s - 1.0),
                ModelKind::ModifiedSir => {
                    Box::new(move |st: &State| r0 * (2.0 * st.s - 1.0).max(0.0).sqrt() - 1.0)
                }
                ModelKind::Si => {
                    return Err(EpiError::EventNotFound(
                        "I is monotone in the SI model and has no peak".into(),
                    ))
                }
            },
            Event::SCrossesValue(v) => Box::new(move |st: &State| st.s - v),
            Event::IFallsBelow(v) => Box::new(move |st: &State| st.i - v),
        };

        let values: Vec<f64> = self.states.iter().map(&g).collect();
        let k = values
            .windows(2)
            .position(|w| w[0] > 0.0 && w[1] <= 0.0)
            .ok_or_else(|| {
                EpiError::EventNotFound(format!(
                    "{event:?} does not occur on [0, {}]",
                    self.final_state().tau
                ))
            })?;
        if values[k + 1] == 0.0 {
            let st = self.states[k + 1];
            return Ok((st.tau, st));
        }
        let (ta, tb) = (self.states[k].tau, self.states[k + 1].tau);
        let root = roots::bisect(|tau| g(&self.hermite(k, tau)), ta, tb, EVENT_TAU_TOL, 200)?;
        Ok((root.x, self.hermite(k, root.x)))
    }
}

/// Free-function form of [`Trajectory::locate_event`].
pub fn locate_event(traj: &Trajectory, event: Event) -> Result<(f64, State)> {
    traj.locate_event(event)
}
