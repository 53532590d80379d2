//! Closed-form and root-finding analytics of the SIR model: peak values,
//! final size, fastest growth of new infections, extrema of dI/dtau, and the
//! time to reach a given susceptible level by quadrature.
//!
//! Everything here works on the orbit relations
//!
//! ```text
//! S = S0 exp(-r0 R),    I(S) = 1 - S + ln(S/S0) / r0
//! ```
//!
//! so no trajectory is integrated except by [`peak_values_with_time`].

use crate::error::{EpiError, Result};
use crate::integrator::{integrate, Event, IntegratorConfig};
use crate::model::{infected_along_orbit, ModelKind, ModelParams};
use crate::quadrature;
use crate::roots;

/// Numerical tolerances used by the analytics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Bracket width at which root bisection stops (0 means full precision).
    pub root: f64,
    /// Absolute error target for `tau_of_s`.
    pub quadrature: f64,
    pub max_panels: usize,
    /// Fixed-point iteration stops when successive iterates differ by less.
    pub fixed_point_step: f64,
    pub max_fixed_point_iterations: usize,
    pub max_bisections: usize,
    /// `tau_of_s` refuses targets this close to `S_inf`.
    pub final_size_guard: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            root: 1e-12,
            quadrature: 1e-10,
            max_panels: 10_000,
            fixed_point_step: 1e-14,
            max_fixed_point_iterations: 1_000_000,
            max_bisections: 200,
            final_size_guard: 1e-6,
        }
    }
}

/// Values of S, I, R at peak infection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakReport {
    pub s_star: f64,
    pub i_star: f64,
    pub r_star: f64,
    /// Rescaled peak time, present when taken from a trajectory.
    pub tau_star: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinalSizeMethod {
    FixedPoint,
    Bisection,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinalSizeReport {
    pub s_inf: f64,
    pub r_inf: f64,
    pub iterations: usize,
    pub method: FinalSizeMethod,
    /// `|1 - r_inf - S0 exp(-r0 r_inf)|`.
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastestIncrease {
    pub s_at_max: f64,
    pub i_at_max: f64,
    /// Largest value of `-dS/dtau`.
    pub rate_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IRateExtrema {
    /// S where dI/dtau is largest (before the peak).
    pub s_at_max: f64,
    /// S where dI/dtau is most negative (after the peak).
    pub s_at_min: f64,
    pub residual_max: f64,
    pub residual_min: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RStarExtremum {
    pub argmax_r0: f64,
    pub max_r_star: f64,
    /// `|R*(e/S0) - S0/e|`.
    pub analytic_residual: f64,
}

/// Peak values. At the threshold `r0 S0 = 1` the peak is the initial state.
pub fn peak_values(params: &ModelParams) -> Result<PeakReport> {
    let r0 = params.r0();
    let x = r0 * params.s0();
    if x < 1.0 {
        return Err(EpiError::NoEpidemic {
            r0,
            s0: params.s0(),
        });
    }
    let s_star = 1.0 / r0;
    let r_star = x.ln() / r0;
    let i_star = 1.0 - s_star - r_star;
    Ok(PeakReport {
        s_star,
        i_star,
        r_star,
        tau_star: None,
    })
}

/// Peak values plus the peak time located on an integrated trajectory.
pub fn peak_values_with_time(
    params: &ModelParams,
    config: &IntegratorConfig,
) -> Result<PeakReport> {
    params.require_epidemic()?;
    let mut report = peak_values(params)?;
    let traj = integrate(params, ModelKind::Sir, config)?;
    let (tau, _) = traj.locate_event(Event::PeakOfI)?;
    report.tau_star = Some(tau);
    Ok(report)
}

/// `R*` as a function of `r0`; zero where there is no interior peak.
pub fn r_star(r0: f64, s0: f64) -> f64 {
    let x = r0 * s0;
    if x <= 1.0 {
        0.0
    } else {
        x.ln() / r0
    }
}

fn final_size_residual(r: f64, params: &ModelParams) -> f64 {
    1.0 - r - params.s0() * (-params.r0() * r).exp()
}

fn report(
    r_inf: f64,
    params: &ModelParams,
    iterations: usize,
    method: FinalSizeMethod,
) -> FinalSizeReport {
    FinalSizeReport {
        s_inf: params.s0() * (-params.r0() * r_inf).exp(),
        r_inf,
        iterations,
        method,
        residual: final_size_residual(r_inf, params).abs(),
    }
}

/// Iterates of `g(R) = 1 - S0 exp(-r0 R)` starting from `R = 1 - 1/r0`.
pub fn fixed_point_iterates(params: &ModelParams) -> impl Iterator<Item = f64> {
    let (r0, s0) = (params.r0(), params.s0());
    std::iter::successors(Some(1.0 - 1.0 / r0), move |r| {
        Some(1.0 - s0 * (-r0 * r).exp())
    })
}

/// Solves `1 - R = S0 exp(-r0 R)` for the final removed proportion.
pub fn final_size(params: &ModelParams, method: FinalSizeMethod) -> Result<FinalSizeReport> {
    final_size_with(params, method, &Tolerances::default())
}

pub fn final_size_with(
    params: &ModelParams,
    method: FinalSizeMethod,
    tol: &Tolerances,
) -> Result<FinalSizeReport> {
    match method {
        FinalSizeMethod::FixedPoint => final_size_fixed_point(params, tol),
        FinalSizeMethod::Bisection => final_size_bisection(params, tol),
    }
}

fn final_size_fixed_point(params: &ModelParams, tol: &Tolerances) -> Result<FinalSizeReport> {
    params.require_epidemic()?;
    let mut iterates = fixed_point_iterates(params);
    let mut prev = iterates.next().expect("iterator is infinite");
    for (n, next) in iterates.enumerate().take(tol.max_fixed_point_iterations) {
        if (next - prev).abs() < tol.fixed_point_step {
            return Ok(report(next, params, n + 1, FinalSizeMethod::FixedPoint));
        }
        prev = next;
    }
    Err(EpiError::Convergence {
        what: format!("final-size fixed-point iteration for r0 = {}", params.r0()),
        iterations: tol.max_fixed_point_iterations,
    })
}

fn final_size_bisection(params: &ModelParams, tol: &Tolerances) -> Result<FinalSizeReport> {
    let r0 = params.r0();
    let lo = params.i0().max(1.0 - 1.0 / r0);
    let hi = 1.0 - 1e-16;
    let f = |r: f64| final_size_residual(r, params);
    let method = FinalSizeMethod::Bisection;
    if f(lo) <= 0.0 {
        return Ok(report(lo, params, 0, method));
    }
    if f(hi) >= 0.0 {
        // root closer to 1 than double precision resolves
        return Ok(report(hi, params, 0, method));
    }
    let root = roots::bisect(f, lo, hi, 0.0, tol.max_bisections)?;
    Ok(report(root.x, params, root.iterations, method))
}

/// Final size for each `r0` in the grid with the given `S0` (and
/// `I0 = 1 - S0`). Output is sorted by `r0`.
pub fn final_size_sweep(r0_grid: &[f64], s0: f64) -> Result<Vec<(f64, f64)>> {
    let mut grid = r0_grid.to_vec();
    grid.sort_by(f64::total_cmp);
    grid.into_iter()
        .map(|r0| {
            let attach = |source: EpiError| EpiError::SweepPoint {
                r0,
                source: Box::new(source),
            };
            let params = ModelParams::with_initial(r0, s0, 1.0 - s0).map_err(attach)?;
            let rep = final_size(&params, FinalSizeMethod::Bisection).map_err(attach)?;
            Ok((r0, rep.r_inf))
        })
        .collect()
}

/// Point of fastest growth of new infections, where `r0 I = r0 S - 1`.
///
/// If the initial state is already past that point (large `I0`), the maximum
/// of `-dS/dtau` along the orbit is at `tau = 0` and the initial state is
/// returned.
pub fn fastest_new_infections(params: &ModelParams) -> Result<FastestIncrease> {
    fastest_new_infections_with(params, &Tolerances::default())
}

pub fn fastest_new_infections_with(
    params: &ModelParams,
    tol: &Tolerances,
) -> Result<FastestIncrease> {
    params.require_epidemic()?;
    let r0 = params.r0();
    let (s0, i0) = (params.s0(), params.i0());
    let h = |s: f64| r0 * infected_along_orbit(s, params) - (r0 * s - 1.0);
    if h(s0) >= 0.0 {
        return Ok(FastestIncrease {
            s_at_max: s0,
            i_at_max: i0,
            rate_max: r0 * s0 * i0,
        });
    }
    let root = roots::bisect(h, 1.0 / r0, s0, tol.root, tol.max_bisections)?;
    let s = root.x;
    Ok(FastestIncrease {
        s_at_max: s,
        i_at_max: s - 1.0 / r0,
        rate_max: s * (r0 * s - 1.0),
    })
}

/// `(r0 S - 1)^2 - r0^2 S I(S)`; zero where `d^2 I / dtau^2` vanishes.
pub fn i_rate_extremum_residual(s: f64, params: &ModelParams) -> f64 {
    let r0 = params.r0();
    let g = r0 * s - 1.0;
    g * g - r0 * r0 * s * infected_along_orbit(s, params)
}

/// The two values of S at which dI/dtau is extremal; they bracket `1/r0`.
pub fn i_rate_extrema(params: &ModelParams) -> Result<IRateExtrema> {
    i_rate_extrema_with(params, &Tolerances::default())
}

pub fn i_rate_extrema_with(params: &ModelParams, tol: &Tolerances) -> Result<IRateExtrema> {
    params.require_epidemic()?;
    let r0 = params.r0();
    let s0 = params.s0();
    let q = |s: f64| i_rate_extremum_residual(s, params);
    let s_peak = 1.0 / r0;

    let s_at_max = if q(s0) <= 0.0 {
        s0
    } else {
        roots::bisect(q, s_peak, s0, 0.0, tol.max_bisections)?.x
    };
    let s_inf = final_size_with(params, FinalSizeMethod::Bisection, tol)?.s_inf;
    let s_at_min = roots::bisect(q, s_inf, s_peak, 0.0, tol.max_bisections)?.x;
    Ok(IRateExtrema {
        s_at_max,
        s_at_min,
        residual_max: q(s_at_max).abs(),
        residual_min: q(s_at_min).abs(),
    })
}

/// Rescaled time at which S has fallen to `s_target`:
/// `tau = integral from s_target to S0 of dS / (r0 S I(S))`.
pub fn tau_of_s(s_target: f64, params: &ModelParams) -> Result<f64> {
    tau_of_s_with(s_target, params, &Tolerances::default())
}

pub fn tau_of_s_with(s_target: f64, params: &ModelParams, tol: &Tolerances) -> Result<f64> {
    let s0 = params.s0();
    if params.i0() <= 0.0 {
        return Err(EpiError::Domain(
            "tau(S) diverges when I0 = 0; use an initial infected proportion".into(),
        ));
    }
    let s_inf = final_size_with(params, FinalSizeMethod::Bisection, tol)?.s_inf;
    if !(s_target <= s0 && s_target > s_inf + tol.final_size_guard) {
        return Err(EpiError::Domain(format!(
            "S target {s_target} outside (S_inf + {} = {}, S0 = {s0}]",
            tol.final_size_guard,
            s_inf + tol.final_size_guard
        )));
    }
    if s_target == s0 {
        return Ok(0.0);
    }
    let r0 = params.r0();
    let integrand = |s: f64| 1.0 / (r0 * s * infected_along_orbit(s, params));
    let res = quadrature::integrate(integrand, s_target, s0, tol.quadrature, tol.max_panels)?;
    Ok(res.value)
}

/// Scans `R*(r0)` over a grid and returns the grid maximum, together with the
/// residual of the analytic maximum `R*(e/S0) = S0/e`. `None` for an empty grid.
pub fn r_star_extremum_check(s0: f64, r0_grid: &[f64]) -> Option<RStarExtremum> {
    let (argmax_r0, max_r_star) = r0_grid.iter().map(|&r0| (r0, r_star(r0, s0))).fold(
        None,
        |best: Option<(f64, f64)>, cur| match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        },
    )?;
    let e = std::f64::consts::E;
    Some(RStarExtremum {
        argmax_r0,
        max_r_star,
        analytic_residual: (r_star(e / s0, s0) - s0 / e).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::i_of_s;
    use approx::assert_abs_diff_eq;

    fn ideal(r0: f64) -> ModelParams {
        ModelParams::idealized(r0).unwrap()
    }

    #[test]
    fn peak_examples() {
        let p = peak_values(&ideal(2.0)).unwrap();
        assert_eq!(p.s_star, 0.5);
        assert_abs_diff_eq!(p.i_star, 0.1534, epsilon = 5e-5);
        assert_abs_diff_eq!(p.r_star, 0.3466, epsilon = 5e-5);
        assert!(p.tau_star.is_none());

        let p = peak_values(&ideal(6.0)).unwrap();
        assert_abs_diff_eq!(p.s_star, 0.1667, epsilon = 5e-5);
        assert_abs_diff_eq!(p.i_star, 0.5347, epsilon = 5e-5);
        assert_abs_diff_eq!(p.r_star, 0.2986, epsilon = 5e-5);
    }

    #[test]
    fn peak_at_threshold_is_initial_state() {
        let params = ModelParams::with_initial(2.0, 0.5, 0.5).unwrap();
        let p = peak_values(&params).unwrap();
        assert_eq!(p.s_star, 0.5);
        assert_eq!(p.r_star, 0.0);
        assert_abs_diff_eq!(p.i_star, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn peak_requires_epidemic() {
        assert!(matches!(
            peak_values(&ideal(0.9)),
            Err(EpiError::NoEpidemic { .. })
        ));
    }

    #[test]
    fn peak_general_s0() {
        // r0 = 4, S0 = 0.5: S* = 1/4, R* = ln 2 / 4, I* = 3/4 - ln 2 / 4
        let params = ModelParams::with_initial(4.0, 0.5, 0.5).unwrap();
        let p = peak_values(&params).unwrap();
        assert_abs_diff_eq!(p.s_star, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(p.r_star, 2f64.ln() / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.i_star, 0.75 - 2f64.ln() / 4.0, epsilon = 1e-15);
    }

    #[test]
    fn peak_matches_orbit() {
        for r0 in [1.5, 2.0, 3.0, 6.0, 10.0] {
            for i0 in [0.0, 1e-6, 1e-2] {
                let params = ModelParams::new(r0, i0).unwrap();
                let p = peak_values(&params).unwrap();
                assert_abs_diff_eq!(
                    i_of_s(1.0 / r0, &params).unwrap(),
                    p.i_star,
                    epsilon = 1e-12
                );
                assert_abs_diff_eq!(p.s_star + p.i_star + p.r_star, 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn final_size_examples() {
        let f = final_size(&ideal(2.0), FinalSizeMethod::Bisection).unwrap();
        assert_abs_diff_eq!(f.r_inf, 0.7968, epsilon = 5e-5);
        assert!(f.residual <= 1e-12);
        let f = final_size(&ideal(6.0), FinalSizeMethod::Bisection).unwrap();
        assert_abs_diff_eq!(f.r_inf, 0.9975, epsilon = 1e-4);
        assert_abs_diff_eq!(f.s_inf, 0.0025, epsilon = 1e-4);
        let f = final_size(&ideal(3.0), FinalSizeMethod::Bisection).unwrap();
        assert_abs_diff_eq!(f.r_inf, 0.9405, epsilon = 5e-5);
    }

    #[test]
    fn final_size_report_invariants() {
        for r0 in [0.5, 1.2, 2.0, 6.0, 20.0] {
            for method in [FinalSizeMethod::Bisection, FinalSizeMethod::FixedPoint] {
                let params = ModelParams::new(r0, 1e-4).unwrap();
                let Ok(f) = final_size(&params, method) else {
                    assert!(r0 <= 1.0 && method == FinalSizeMethod::FixedPoint);
                    continue;
                };
                assert_abs_diff_eq!(f.s_inf + f.r_inf, 1.0, epsilon = 1e-12);
                assert_abs_diff_eq!(
                    f.s_inf,
                    params.s0() * (-r0 * f.r_inf).exp(),
                    epsilon = 1e-12
                );
                assert!(f.residual <= 1e-12, "{r0}: {}", f.residual);
            }
        }
    }

    #[test]
    fn fixed_point_agrees_with_bisection() {
        for r0 in [1.2, 2.0, 3.0, 6.0, 10.0] {
            let p = ideal(r0);
            let fp = final_size(&p, FinalSizeMethod::FixedPoint).unwrap();
            let bi = final_size(&p, FinalSizeMethod::Bisection).unwrap();
            assert_abs_diff_eq!(fp.r_inf, bi.r_inf, epsilon = 1e-10);
            assert!(fp.iterations > 1);
        }
    }

    #[test]
    fn fixed_point_iterates_increase() {
        for r0 in [1.2, 2.0, 6.0] {
            let p = ideal(r0);
            let target = final_size(&p, FinalSizeMethod::Bisection).unwrap().r_inf;
            let seq: Vec<f64> = fixed_point_iterates(&p)
                .take_while(|r| target - r > 1e-13)
                .collect();
            assert!(seq.len() > 1);
            assert!(seq.windows(2).all(|w| w[1] > w[0]));
        }
    }

    #[test]
    fn fixed_point_needs_epidemic() {
        assert!(matches!(
            final_size(&ideal(0.8), FinalSizeMethod::FixedPoint),
            Err(EpiError::NoEpidemic { .. })
        ));
        // bisection handles the subcritical case
        let p = ModelParams::new(0.8, 0.01).unwrap();
        let f = final_size(&p, FinalSizeMethod::Bisection).unwrap();
        assert!(f.r_inf >= 0.01 && f.r_inf < 0.1);
    }

    #[test]
    fn fixed_point_iteration_cap() {
        let tol = Tolerances {
            max_fixed_point_iterations: 3,
            ..Tolerances::default()
        };
        assert!(matches!(
            final_size_with(&ideal(1.05), FinalSizeMethod::FixedPoint, &tol),
            Err(EpiError::Convergence { .. })
        ));
    }

    #[test]
    fn final_size_bound() {
        for k in 1..60 {
            let r0 = 1.0 + 0.1 * k as f64;
            let f = final_size(&ideal(r0), FinalSizeMethod::Bisection).unwrap();
            assert!(f.s_inf < 1.0 / r0);
            assert!(f.r_inf > 1.0 - 1.0 / r0);
        }
    }

    #[test]
    fn sweep_examples() {
        let out = final_size_sweep(&[6.0, 2.0, 3.0], 1.0).unwrap();
        let r0s: Vec<f64> = out.iter().map(|p| p.0).collect();
        assert_eq!(r0s, vec![2.0, 3.0, 6.0]);
        assert_abs_diff_eq!(out[0].1, 0.7968, epsilon = 5e-5);
        assert_abs_diff_eq!(out[1].1, 0.9405, epsilon = 5e-5);
        assert_abs_diff_eq!(out[2].1, 0.9975, epsilon = 1e-4);
    }

    #[test]
    fn sweep_near_threshold() {
        let i0 = 1e-6;
        let out = final_size_sweep(&[1.0 + 1e-6], 1.0 - i0).unwrap();
        let r_inf = out[0].1;
        assert!(r_inf > i0 && r_inf < 1e-2, "{r_inf}");
        // orbit with S0 r0 ~ 1: R_inf ~ sqrt(2 I0)
        assert_abs_diff_eq!(r_inf, (2.0 * i0).sqrt(), epsilon = 2e-5);
    }

    #[test]
    fn sweep_reports_offending_r0() {
        let err = final_size_sweep(&[2.0, -1.0], 1.0).unwrap_err();
        assert!(matches!(err, EpiError::SweepPoint { r0, .. } if r0 == -1.0));
    }

    #[test]
    fn fastest_examples() {
        let f = fastest_new_infections(&ideal(2.0)).unwrap();
        assert_abs_diff_eq!(f.s_at_max, 0.637, epsilon = 5e-4);
        assert_abs_diff_eq!(f.rate_max, 0.175, epsilon = 5e-4);
        // ln S = 4 S - 3 at the root for r0 = 2
        assert_abs_diff_eq!(f.s_at_max.ln(), 4.0 * f.s_at_max - 3.0, epsilon = 1e-11);
        for r0 in [1.1, 2.0, 4.0, 10.0] {
            let f = fastest_new_infections(&ideal(r0)).unwrap();
            assert!(f.rate_max <= r0 / 4.0);
        }
    }

    #[test]
    fn fastest_vanishes_at_threshold() {
        let f = fastest_new_infections(&ideal(1.0 + 1e-9)).unwrap();
        assert!(f.rate_max >= 0.0 && f.rate_max < 1e-6);
        assert!(matches!(
            fastest_new_infections(&ideal(0.8)),
            Err(EpiError::NoEpidemic { .. })
        ));
    }

    #[test]
    fn fastest_at_start_for_large_i0() {
        let params = ModelParams::new(2.0, 0.3).unwrap();
        let f = fastest_new_infections(&params).unwrap();
        assert_eq!(f.s_at_max, 0.7);
        assert_abs_diff_eq!(f.rate_max, 2.0 * 0.7 * 0.3, epsilon = 1e-15);
    }

    #[test]
    fn i_rate_extrema_bracket_peak() {
        for r0 in [1.5, 2.0, 3.0, 6.0] {
            let e = i_rate_extrema(&ideal(r0)).unwrap();
            assert!(e.s_at_max > 1.0 / r0 && e.s_at_min < 1.0 / r0);
            assert!(e.residual_max <= 1e-10 && e.residual_min <= 1e-10);
        }
        assert!(i_rate_extrema(&ideal(1.0)).is_err());
    }

    #[test]
    fn tau_of_s_edges() {
        let params = ModelParams::new(2.0, 1e-6).unwrap();
        assert_eq!(tau_of_s(params.s0(), &params).unwrap(), 0.0);
        assert!(tau_of_s(1.0, &params).is_err());
        let s_inf = final_size(&params, FinalSizeMethod::Bisection)
            .unwrap()
            .s_inf;
        assert!(tau_of_s(s_inf + 5e-7, &params).is_err());
        assert!(tau_of_s(s_inf + 1e-3, &params).is_ok());
        assert!(tau_of_s(0.5, &ideal(2.0)).is_err());
    }

    #[test]
    fn tau_of_s_decreasing() {
        let params = ModelParams::new(3.0, 1e-4).unwrap();
        let taus: Vec<f64> = [0.95, 0.8, 0.5, 1.0 / 3.0, 0.2, 0.1]
            .iter()
            .map(|&s| tau_of_s(s, &params).unwrap())
            .collect();
        assert!(taus.windows(2).all(|w| w[1] > w[0]), "{taus:?}");
    }

    #[test]
    fn r_star_extremum() {
        let grid: Vec<f64> = (1..=19_000).map(|k| 1.0 + k as f64 * 1e-3).collect();
        let e = r_star_extremum_check(1.0, &grid).unwrap();
        assert_abs_diff_eq!(e.argmax_r0, std::f64::consts::E, epsilon = 1e-3);
        assert_abs_diff_eq!(e.max_r_star, (-1.0f64).exp(), epsilon = 1e-6);
        assert!(e.analytic_residual <= 1e-12);
        assert!(grid
            .iter()
            .all(|&r0| r_star(r0, 1.0) <= (-1.0f64).exp() + 1e-12));
        assert_eq!(r_star(1.0, 1.0), 0.0);
        assert_eq!(r_star(2.0, 0.5), 0.0);
        assert!(r_star_extremum_check(1.0, &[]).is_none());
    }

    #[test]
    fn r_star_extremum_general_s0() {
        let s0 = 0.8;
        let grid: Vec<f64> = (1..=20_000).map(|k| 1.25 + k as f64 * 1e-3).collect();
        let e = r_star_extremum_check(s0, &grid).unwrap();
        assert_abs_diff_eq!(e.argmax_r0, std::f64::consts::E / s0, epsilon = 1e-3);
        assert_abs_diff_eq!(e.max_r_star, s0 / std::f64::consts::E, epsilon = 1e-6);
    }
}
