//! Domain types and the right-hand sides of the SIR family in rescaled time
//! `tau = a t`, together with the exact algebraic relations among S, I and R.
//!
//! Three systems are covered:
//!
//! ```text
//! SIR          dS = -r0 S I            dI = (r0 S - 1) I            dR = I
//! modified     dS = -r0 sqrt(2S-1) I   dI = (r0 sqrt(2S-1) - 1) I   dR = I
//! SI           dS = -r0 S I            dI = r0 S I                  dR = 0
//! ```
//!
//! The SI system is the `a = 0` limit. In rescaled time its infection rate is
//! `b / a = r0`; with the default `a = 1` the time axis is physical time and
//! `r0` plays the role of `b`.

use crate::error::{EpiError, Result};

/// Absolute tolerance on `S + I + R = 1` for validated states.
pub const SIMPLEX_TOL: f64 = 1e-9;

/// Tolerance on `s0 + i0 = 1` for parameters.
pub const INITIAL_SUM_TOL: f64 = 1e-12;

/// Rounding slack below zero tolerated for `2S - 1` before it is clamped.
pub const SQRT_DOMAIN_SLACK: f64 = 1e-12;

/// Basic reproduction number, removal rate and initial proportions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    r0: f64,
    a: f64,
    s0: f64,
    i0: f64,
}

impl ModelParams {
    /// Parameters with `s0 = 1 - i0` and unit removal rate.
    pub fn new(r0: f64, i0: f64) -> Result<Self> {
        Self::with_initial(r0, 1.0 - i0, i0)
    }

    pub fn with_initial(r0: f64, s0: f64, i0: f64) -> Result<Self> {
        let p = ModelParams { r0, a: 1.0, s0, i0 };
        p.validate()?;
        Ok(p)
    }

    /// The `S0 = 1`, `I0 = 0` limit used by the closed-form peak and
    /// final-size formulas. Such parameters cannot be integrated.
    pub fn idealized(r0: f64) -> Result<Self> {
        Self::with_initial(r0, 1.0, 0.0)
    }

    /// Sets the removal rate `a`, which only converts between `tau` and `t`.
    pub fn with_removal_rate(mut self, a: f64) -> Result<Self> {
        self.a = a;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(EpiError::InvalidParameter(msg));
        if !(self.r0.is_finite() && self.r0 > 0.0) {
            return bad(format!("r0 must be positive and finite, got {}", self.r0));
        }
        if !(self.a.is_finite() && self.a > 0.0) {
            return bad(format!("a must be positive and finite, got {}", self.a));
        }
        if !(self.i0 >= 0.0 && self.i0 < 1.0) {
            return bad(format!("i0 must lie in [0, 1), got {}", self.i0));
        }
        if !(self.s0 > 0.0 && self.s0 <= 1.0) {
            return bad(format!("s0 must lie in (0, 1], got {}", self.s0));
        }
        if (self.s0 + self.i0 - 1.0).abs() > INITIAL_SUM_TOL {
            return bad(format!(
                "s0 + i0 must equal 1, got {} + {}",
                self.s0, self.i0
            ));
        }
        Ok(())
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// Infection rate `b = r0 a`.
    pub fn b(&self) -> f64 {
        self.r0 * self.a
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    pub fn i0(&self) -> f64 {
        self.i0
    }

    /// `r0 S0 > 1`: the infection initially grows.
    pub fn has_epidemic(&self) -> bool {
        self.r0 * self.s0 > 1.0
    }

    pub(crate) fn require_epidemic(&self) -> Result<()> {
        if self.has_epidemic() {
            Ok(())
        } else {
            Err(EpiError::NoEpidemic {
                r0: self.r0,
                s0: self.s0,
            })
        }
    }
}

/// Which member of the model family a trajectory belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Sir,
    ModifiedSir,
    Si,
}

/// One point `(tau, S, I, R)` of a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub tau: f64,
    pub s: f64,
    pub i: f64,
    pub r: f64,
}

impl State {
    pub fn new(tau: f64, s: f64, i: f64, r: f64) -> Result<Self> {
        let st = State { tau, s, i, r };
        st.check()?;
        Ok(st)
    }

    /// The `tau = 0` state `(S0, I0, 0)`.
    pub fn initial(params: &ModelParams) -> Self {
        State {
            tau: 0.0,
            s: params.s0,
            i: params.i0,
            r: 0.0,
        }
    }

    pub fn check(&self) -> Result<()> {
        let finite =
            self.tau.is_finite() && self.s.is_finite() && self.i.is_finite() && self.r.is_finite();
        if !finite || self.s <= 0.0 || self.i < 0.0 || self.r < 0.0 {
            return Err(EpiError::Domain(format!("state out of range: {self:?}")));
        }
        let sum = self.s + self.i + self.r;
        if (sum - 1.0).abs() > SIMPLEX_TOL {
            return Err(EpiError::Domain(format!(
                "S + I + R = {sum} violates the simplex constraint at tau = {}",
                self.tau
            )));
        }
        Ok(())
    }
}

/// Time derivatives `(dS, dI, dR)` with respect to rescaled time.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Rates {
    pub ds: f64,
    pub di: f64,
    pub dr: f64,
}

/// `sqrt(2S - 1)`, clamping rounding-level negatives to zero.
pub(crate) fn modified_sqrt(s: f64) -> Result<f64> {
    let arg = 2.0 * s - 1.0;
    if arg >= 0.0 {
        Ok(arg.sqrt())
    } else if arg >= -SQRT_DOMAIN_SLACK {
        Ok(0.0)
    } else {
        Err(EpiError::Domain(format!(
            "modified model needs S >= 1/2, got S = {s}"
        )))
    }
}

pub(crate) fn sir_rates(r0: f64, s: f64, i: f64) -> Rates {
    let infection = r0 * s * i;
    Rates {
        ds: -infection,
        di: infection - i,
        dr: i,
    }
}

pub(crate) fn modified_rates(r0: f64, s: f64, i: f64) -> Result<Rates> {
    let infection = r0 * modified_sqrt(s)? * i;
    Ok(Rates {
        ds: -infection,
        di: infection - i,
        dr: i,
    })
}

pub(crate) fn si_rates(r0: f64, s: f64, i: f64) -> Rates {
    let infection = r0 * s * i;
    Rates {
        ds: -infection,
        di: infection,
        dr: 0.0,
    }
}

pub(crate) fn rates_for(kind: ModelKind, r0: f64, s: f64, i: f64) -> Result<Rates> {
    match kind {
        ModelKind::Sir => Ok(sir_rates(r0, s, i)),
        ModelKind::ModifiedSir => modified_rates(r0, s, i),
        ModelKind::Si => Ok(si_rates(r0, s, i)),
    }
}

pub fn sir_rhs(state: &State, params: &ModelParams) -> Rates {
    sir_rates(params.r0, state.s, state.i)
}

/// Right-hand side of the modified system. Fails when `S < 1/2` beyond
/// [`SQRT_DOMAIN_SLACK`].
pub fn modified_rhs(state: &State, params: &ModelParams) -> Result<Rates> {
    modified_rates(params.r0, state.s, state.i)
}

pub fn si_rhs(state: &State, params: &ModelParams) -> Rates {
    si_rates(params.r0, state.s, state.i)
}

pub fn rhs(kind: ModelKind, state: &State, params: &ModelParams) -> Result<Rates> {
    rates_for(kind, params.r0, state.s, state.i)
}

/// New infections per removal at susceptible proportion `s`:
/// `r0 S` for SIR and `r0 sqrt(2S - 1)` for the modified model.
pub fn effective_r(s: f64, params: &ModelParams, kind: ModelKind) -> Result<f64> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(EpiError::Domain(format!("S must lie in (0, 1], got {s}")));
    }
    match kind {
        ModelKind::Sir => Ok(params.r0 * s),
        ModelKind::ModifiedSir => Ok(params.r0 * modified_sqrt(s)?),
        ModelKind::Si => Err(EpiError::Domain(
            "the SI model has no removals, so no reproduction number".into(),
        )),
    }
}

/// `S = S0 exp(-r0 R)`.
pub fn s_of_r(r: f64, params: &ModelParams) -> f64 {
    params.s0 * (-params.r0 * r).exp()
}

/// `R = -(1/r0) ln(S / S0)`, the inverse of [`s_of_r`].
pub fn r_of_s(s: f64, params: &ModelParams) -> Result<f64> {
    if !(s > 0.0 && s <= params.s0) {
        return Err(EpiError::Domain(format!(
            "S must lie in (0, S0 = {}], got {s}",
            params.s0
        )));
    }
    Ok(-ln_ratio(s, params.s0) / params.r0)
}

/// `ln(s / s0)`, accurate when `s` is close to `s0`.
pub(crate) fn ln_ratio(s: f64, s0: f64) -> f64 {
    ((s - s0) / s0).ln_1p()
}

/// `I(S) = 1 - S + (1/r0) ln(S/S0)` without domain checks.
pub(crate) fn infected_along_orbit(s: f64, params: &ModelParams) -> f64 {
    (1.0 - s) + ln_ratio(s, params.s0) / params.r0
}

/// Infected proportion as a function of the susceptible proportion along the
/// SIR orbit. Valid for `S_inf <= s <= S0`, which is exactly where the value
/// is non-negative.
pub fn i_of_s(s: f64, params: &ModelParams) -> Result<f64> {
    if !(s > 0.0 && s <= params.s0) {
        return Err(EpiError::Domain(format!(
            "S must lie in (0, S0 = {}], got {s}",
            params.s0
        )));
    }
    let i = infected_along_orbit(s, params);
    if i < -SQRT_DOMAIN_SLACK {
        return Err(EpiError::Domain(format!(
            "S = {s} lies below the final susceptible proportion"
        )));
    }
    Ok(i.max(0.0))
}

/// `S = 1 - r0 R + (r0 R)^2 / 2`, the modified-model orbit (with `S0 = 1`).
pub fn modified_s_of_r(r: f64, params: &ModelParams) -> Result<f64> {
    let x = params.r0 * r;
    if !(0.0..=1.0 + SQRT_DOMAIN_SLACK).contains(&x) {
        return Err(EpiError::Domain(format!(
            "modified orbit needs 0 <= r0 R <= 1, got {x}"
        )));
    }
    Ok(1.0 - x + 0.5 * x * x)
}
