//! Pekeris expansion of the centrifugal factor `1/(1+r)^2` around the
//! equilibrium separation, and diagnostics for how well it holds.
//!
//! With `r = (R - R0)/R0` the relative displacement, the factor is replaced by
//! `C0 + C1 exp(-alpha r) + C2 exp(-2 alpha r)`. The coefficients are fixed by
//! matching the Taylor series `1 - 2r + 3r^2 - ...` through second order.

use serde::Serialize;

use crate::error::{domain, Result};

/// Coefficients of the three-term exponential replacement of `1/(1+r)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PekerisCoefficients {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub alpha: f64,
}

impl PekerisCoefficients {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(domain(format!("alpha must be positive and finite, got {alpha}")));
        }
        let inv = 1.0 / alpha;
        let inv2 = inv * inv;
        Ok(Self {
            c0: 1.0 - 3.0 * inv + 3.0 * inv2,
            c1: 4.0 * inv - 6.0 * inv2,
            c2: -inv + 3.0 * inv2,
            alpha,
        })
    }

    /// `C0 + C1 e^{-alpha r} + C2 e^{-2 alpha r}`.
    pub fn eval(&self, r: f64) -> f64 {
        let e = (-self.alpha * r).exp();
        self.c0 + e * (self.c1 + self.c2 * e)
    }

    pub fn sum(&self) -> f64 {
        self.c0 + self.c1 + self.c2
    }
}

/// Shorthand for [`PekerisCoefficients::new`].
pub fn pekeris_coefficients(alpha: f64) -> Result<PekerisCoefficients> {
    PekerisCoefficients::new(alpha)
}

/// The exact centrifugal factor `1/(1+r)^2`, defined for `r > -1`.
pub fn centrifugal_exact(r: f64) -> Result<f64> {
    if !(r > -1.0) || !r.is_finite() {
        return Err(domain(format!("centrifugal factor requires finite r > -1, got {r}")));
    }
    let s = 1.0 + r;
    Ok(1.0 / (s * s))
}

pub fn centrifugal_pekeris(coeffs: &PekerisCoefficients, r: f64) -> f64 {
    coeffs.eval(r)
}

/// Exact and approximated centrifugal factor on a uniform grid in `r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscrepancyProfile {
    pub alpha: f64,
    pub r_values: Vec<f64>,
    pub exact: Vec<f64>,
    pub approx: Vec<f64>,
    pub relative_error: Vec<f64>,
}

impl DiscrepancyProfile {
    pub fn len(&self) -> usize {
        self.r_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r_values.is_empty()
    }

    /// Relative error at the grid point nearest to `r`.
    pub fn relative_error_near(&self, r: f64) -> Option<f64> {
        self.r_values
            .iter()
            .zip(&self.relative_error)
            .min_by(|a, b| (a.0 - r).abs().total_cmp(&(b.0 - r).abs()))
            .map(|(_, e)| *e)
    }
}

/// Uniform grid of `samples` points on `[r_min, r_max]`.
pub fn uniform_grid(r_min: f64, r_max: f64, samples: usize) -> Vec<f64> {
    let step = (r_max - r_min) / (samples - 1) as f64;
    (0..samples)
        .map(|i| if i + 1 == samples { r_max } else { r_min + step * i as f64 })
        .collect()
}

pub fn discrepancy_profile(
    alpha: f64,
    r_min: f64,
    r_max: f64,
    samples: usize,
) -> Result<DiscrepancyProfile> {
    let coeffs = PekerisCoefficients::new(alpha)?;
    if !(r_min > -1.0) || !r_max.is_finite() || !(r_min < r_max) {
        return Err(domain(format!(
            "profile range must satisfy -1 < r_min < r_max, got [{r_min}, {r_max}]"
        )));
    }
    if samples < 2 {
        return Err(domain(format!("profile needs at least 2 samples, got {samples}")));
    }

    let r_values = uniform_grid(r_min, r_max, samples);
    let mut exact = Vec::with_capacity(samples);
    let mut approx = Vec::with_capacity(samples);
    let mut relative_error = Vec::with_capacity(samples);
    for &r in &r_values {
        let ex = centrifugal_exact(r)?;
        let ap = coeffs.eval(r);
        exact.push(ex);
        approx.push(ap);
        relative_error.push((ap - ex).abs() / ex.abs());
    }
    Ok(DiscrepancyProfile {
        alpha,
        r_values,
        exact,
        approx,
        relative_error,
    })
}
