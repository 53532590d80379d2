//! # epikit-core
//!
//! The SIR epidemic model in rescaled time `tau = a t`, with its exactly
//! solvable relatives: the SI (logistic) model and a modified SIR model whose
//! infection curve is a sech² profile.
//!
//! - [`model`]: parameters, states and right-hand sides, plus the exact
//!   relations between S, I and R along an orbit.
//! - [`integrator`]: fixed-step RK4 with dense output and event location.
//! - [`analysis`]: peak values, final size, fastest growth, extrema of
//!   dI/dtau and time reconstruction by quadrature.
//! - [`closed_forms`]: logistic and sech² solutions and the SIR-vs-modified
//!   comparison.
//!
//! ```
//! use epikit_core::{final_size, peak_values, FinalSizeMethod, ModelParams};
//!
//! let params = ModelParams::idealized(2.0).unwrap();
//! let peak = peak_values(&params).unwrap();
//! let end = final_size(&params, FinalSizeMethod::Bisection).unwrap();
//! assert_eq!(peak.s_star, 0.5);
//! assert!((end.r_inf - 0.7968).abs() < 1e-4);
//! ```

pub mod analysis;
pub mod closed_forms;
pub mod error;
pub mod integrator;
pub mod model;
pub mod quadrature;
pub mod roots;

pub use analysis::{
    fastest_new_infections, final_size, final_size_sweep, i_rate_extrema, peak_values,
    peak_values_with_time, r_star, r_star_extremum_check, tau_of_s, FastestIncrease,
    FinalSizeMethod, FinalSizeReport, IRateExtrema, PeakReport, RStarExtremum, Tolerances,
};
pub use closed_forms::{
    calibrate_tau_star, compare_models, modified_final_values, modified_solution, si_solution,
    si_time_of_i, ComparisonRow, LogisticSolution, ModelComparison, ModifiedClosedForm,
};
pub use error::{EpiError, Result};
pub use integrator::{integrate, locate_event, Event, IntegratorConfig, Termination, Trajectory};
pub use model::{
    effective_r, i_of_s, modified_rhs, modified_s_of_r, r_of_s, rhs, s_of_r, si_rhs, sir_rhs,
    ModelKind, ModelParams, Rates, State,
};
