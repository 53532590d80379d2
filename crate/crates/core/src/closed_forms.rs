//! Exact solutions: the SI (logistic) model and the modified SIR model with
//! its tanh / sech² profile, plus the alignment used to compare the modified
//! model against a numerically integrated SIR run.

use crate::error::{EpiError, Result};
use crate::integrator::{integrate, IntegratorConfig};
use crate::model::{ModelKind, ModelParams, State};

fn sech2(x: f64) -> f64 {
    let c = x.cosh();
    1.0 / (c * c)
}

/// Logistic curve `I(t) = 1/2 + 1/2 tanh(b (t - t*) / 2)` in physical time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticSolution {
    b: f64,
    t_star: f64,
}

impl LogisticSolution {
    pub fn new(b: f64, t_star: f64) -> Result<Self> {
        if !(b.is_finite() && b > 0.0 && t_star.is_finite()) {
            return Err(EpiError::InvalidParameter(format!(
                "logistic solution needs b > 0 and finite t*, got b = {b}, t* = {t_star}"
            )));
        }
        Ok(LogisticSolution { b, t_star })
    }

    /// The solution with `I(0) = i0`.
    pub fn through_initial(b: f64, i0: f64) -> Result<Self> {
        if !(i0 > 0.0 && i0 < 1.0) {
            return Err(EpiError::Domain(format!("i0 must lie in (0, 1), got {i0}")));
        }
        Self::new(b, -(i0 / (1.0 - i0)).ln() / b)
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Time of half infection.
    pub fn t_star(&self) -> f64 {
        self.t_star
    }
}

/// `(I(t), dI/dt)` with `dI/dt = (b/4) sech²(b (t - t*) / 2)`.
pub fn si_solution(sol: &LogisticSolution, t: f64) -> (f64, f64) {
    let x = 0.5 * sol.b * (t - sol.t_star);
    (0.5 + 0.5 * x.tanh(), 0.25 * sol.b * sech2(x))
}

/// Inverse of [`si_solution`]: `t = t* + ln(I / (1 - I)) / b`.
pub fn si_time_of_i(sol: &LogisticSolution, i: f64) -> Result<f64> {
    if !(i > 0.0 && i < 1.0) {
        return Err(EpiError::Domain(format!(
            "I must lie strictly in (0, 1), got {i}"
        )));
    }
    Ok(sol.t_star + (i / (1.0 - i)).ln() / sol.b)
}

/// Exact modified-SIR solution (with `S0 = 1`) peaking at `tau_star`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModifiedClosedForm {
    r0: f64,
    tau_star: f64,
}

impl ModifiedClosedForm {
    pub fn new(r0: f64, tau_star: f64) -> Result<Self> {
        if !(r0.is_finite() && r0 > 1.0) {
            return Err(EpiError::Domain(format!(
                "the modified model needs r0 > 1, got {r0}"
            )));
        }
        if !tau_star.is_finite() {
            return Err(EpiError::InvalidParameter(format!(
                "tau* must be finite, got {tau_star}"
            )));
        }
        Ok(ModifiedClosedForm { r0, tau_star })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn tau_star(&self) -> f64 {
        self.tau_star
    }

    /// Scale `2 (1/r0)(1 - 1/r0)` that maps R onto the logistic variable.
    pub fn r_scale(&self) -> f64 {
        2.0 / self.r0 * (1.0 - 1.0 / self.r0)
    }
}

/// S, I, R of the modified model at rescaled time `tau`:
///
/// ```text
/// R = (1/r0)(1 - 1/r0)(1 + tanh(x))
/// I = (1/2)(1 - 1/r0)^2 sech^2(x),      x = (r0 - 1)(tau - tau*) / 2
/// S = 1 - I - R
/// ```
pub fn modified_solution(cf: &ModifiedClosedForm, tau: f64) -> State {
    let r0 = cf.r0;
    let x = 0.5 * (r0 - 1.0) * (tau - cf.tau_star);
    let p = 1.0 - 1.0 / r0;
    let r = p / r0 * (1.0 + x.tanh());
    let i = 0.5 * p * p * sech2(x);
    State {
        tau,
        s: 1.0 - i - r,
        i,
        r,
    }
}

/// `(R_inf, I_peak) = (2 (1/r0)(1 - 1/r0), (1/2)(1 - 1/r0)^2)`.
pub fn modified_final_values(r0: f64) -> Result<(f64, f64)> {
    if !(r0.is_finite() && r0 > 1.0) {
        return Err(EpiError::Domain(format!(
            "the modified model needs r0 > 1, got {r0}"
        )));
    }
    let p = 1.0 - 1.0 / r0;
    Ok((2.0 * p / r0, 0.5 * p * p))
}

/// Places the peak so that the closed form passes through `I(0) = i0` on its
/// rising branch.
pub fn calibrate_tau_star(r0: f64, i0: f64) -> Result<ModifiedClosedForm> {
    let (_, i_peak) = modified_final_values(r0)?;
    if !(i0 > 0.0 && i0 <= i_peak) {
        return Err(EpiError::Domain(format!(
            "i0 = {i0} must lie in (0, I_peak = {i_peak}] to calibrate the peak time"
        )));
    }
    let x = (i_peak / i0).sqrt().acosh();
    ModifiedClosedForm::new(r0, 2.0 * x / (r0 - 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub tau: f64,
    pub i_sir: f64,
    pub i_modified: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelComparison {
    pub rows: Vec<ComparisonRow>,
    pub closed_form: ModifiedClosedForm,
    pub max_abs_diff: f64,
    /// R at the end of the integrated SIR run.
    pub sir_final_r: f64,
    pub modified_final_r: f64,
}

/// Integrates SIR from `(1 - i0, i0, 0)` and evaluates the calibrated modified
/// closed form on the same grid.
pub fn compare_models(r0: f64, i0: f64, config: &IntegratorConfig) -> Result<ModelComparison> {
    let params = ModelParams::new(r0, i0)?;
    params.require_epidemic()?;
    let closed_form = calibrate_tau_star(r0, i0)?;
    let (modified_final_r, _) = modified_final_values(r0)?;
    let traj = integrate(&params, ModelKind::Sir, config)?;
    let rows: Vec<ComparisonRow> = traj
        .states()
        .iter()
        .map(|st| ComparisonRow {
            tau: st.tau,
            i_sir: st.i,
            i_modified: modified_solution(&closed_form, st.tau).i,
        })
        .collect();
    let max_abs_diff = rows
        .iter()
        .map(|row| (row.i_sir - row.i_modified).abs())
        .fold(0.0, f64::max);
    Ok(ModelComparison {
        rows,
        closed_form,
        max_abs_diff,
        sir_final_r: traj.final_state().r,
        modified_final_r,
    })
}
