//! Bracketing bisection for scalar roots.

use crate::error::{EpiError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub iterations: usize,
}

/// Bisection on `[lo, hi]`, which must bracket a sign change.
///
/// Stops once the bracket is narrower than `x_tol`, an exact zero is hit, or
/// the midpoint is no longer representable between the endpoints. With
/// `x_tol = 0` the bracket is shrunk to adjacent floats. The returned point is
/// the endpoint with the smaller residual.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, x_tol: f64, max_iter: usize) -> Result<Root>
where
    F: Fn(f64) -> f64,
{
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(Root {
            x: lo,
            fx: 0.0,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Ok(Root {
            x: hi,
            fx: 0.0,
            iterations: 0,
        });
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(EpiError::Domain(format!(
            "no sign change on [{lo}, {hi}]: f = ({f_lo}, {f_hi})"
        )));
    }
    for iterations in 1..=max_iter {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            return Ok(best(lo, f_lo, hi, f_hi, iterations - 1));
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(Root {
                x: mid,
                fx: 0.0,
                iterations,
            });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        if hi - lo <= x_tol {
            return Ok(best(lo, f_lo, hi, f_hi, iterations));
        }
    }
    Err(EpiError::Convergence {
        what: format!("bisection on [{lo}, {hi}]"),
        iterations: max_iter,
    })
}

fn best(lo: f64, f_lo: f64, hi: f64, f_hi: f64, iterations: usize) -> Root {
    if f_lo.abs() <= f_hi.abs() {
        Root {
            x: lo,
            fx: f_lo,
            iterations,
        }
    } else {
        Root {
            x: hi,
            fx: f_hi,
            iterations,
        }
    }
}
