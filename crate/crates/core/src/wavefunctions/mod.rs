//! Normalized radial eigenfunctions
//!
//! ```text
//! R_n(y) = N_n y^{kappa/2 - (n + 1/2)} e^{-y/2} L_n^{kappa - 2n - 1}(y),   y = (2 eta / alpha) e^{-alpha r}
//! N_n    = [alpha n! (kappa - 2n - 1) / (R0 Gamma(kappa - n))]^{1/2}
//! ```
//!
//! Normalization is with respect to the physical separation, `int |R|^2 dR = 1`.
//! Since `dR = R0 dr` and `dr = -dy / (alpha y)`, this is
//! `R0 int_0^inf |R(y)|^2 / (alpha y) dy = 1`; for `R0 = 1` it is the bare
//! `1/(alpha y)`-weighted condition. The integral runs over the whole line
//! `r in (-inf, inf)`; the part beyond the physical edge `r = -1` (`R = 0`) is
//! exponentially small for any realistic well.
//!
//! Every magnitude is assembled in log space: with `kappa ~ 35` the power
//! `y^{kappa/2}` and `Gamma(kappa - n)` overflow quickly for heavier molecules.

pub mod quadrature;
pub mod special;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::spectrum::{bound_state, BoundState, MoleculeParams, SpectralParams};
use quadrature::{integrate_log_panels, PanelIntegral};
use special::{laguerre_unchecked, ln_factorial};

pub use special::{laguerre, ln_gamma};

/// Panel-doubling stops once the integral moves by less than this.
pub const QUADRATURE_TOL: f64 = 1e-10;

pub fn normalization_constant(kappa: f64, n: u32, alpha: f64, r0: f64) -> Result<f64> {
    let order = kappa - 2.0 * n as f64 - 1.0;
    if !(order > 0.0) {
        return Err(domain(format!(
            "normalization needs kappa - 2n - 1 > 0, got {order} (kappa={kappa}, n={n})"
        )));
    }
    if !(alpha > 0.0) || !(r0 > 0.0) {
        return Err(domain("alpha and r0 must be positive"));
    }
    let ln_sq = alpha.ln() + ln_factorial(n) + order.ln() - r0.ln() - ln_gamma(kappa - n as f64)?;
    Ok((0.5 * ln_sq).exp())
}

pub fn y_of_r(params: &SpectralParams, alpha: f64, r: f64) -> f64 {
    2.0 * params.eta() / alpha * (-alpha * r).exp()
}

pub fn r_of_y(params: &SpectralParams, alpha: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(domain(format!("y must be positive, got {y}")));
    }
    Ok(-(y * alpha / (2.0 * params.eta())).ln() / alpha)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialEigenfunction {
    pub state: BoundState,
    pub kappa: f64,
    /// `N_n`, in Angstrom^{-1/2}.
    pub norm_constant: f64,
    /// `2 eta / alpha`, the value of `y` at equilibrium.
    pub y_scale: f64,
    pub alpha: f64,
    pub r0: f64,
    ln_norm: f64,
}

impl RadialEigenfunction {
    pub fn new(state: BoundState, alpha: f64, r0: f64) -> Result<Self> {
        let kappa = state.params.kappa;
        let norm_constant = normalization_constant(kappa, state.n, alpha, r0)?;
        let y_scale = 2.0 * state.params.eta() / alpha;
        Ok(Self {
            ln_norm: norm_constant.ln(),
            kappa,
            norm_constant,
            y_scale,
            alpha,
            r0,
            state,
        })
    }

    pub fn for_molecule(mol: &MoleculeParams, n: u32, ell: u32, dimension: u32) -> Result<Self> {
        let state = bound_state(mol, n, ell, dimension)?;
        Self::new(state, mol.alpha, mol.r0)
    }

    pub fn n(&self) -> u32 {
        self.state.n
    }

    /// `kappa/2 - (n + 1/2)`, which equals `beta`.
    pub fn exponent(&self) -> f64 {
        0.5 * self.kappa - (self.state.n as f64 + 0.5)
    }

    pub fn laguerre_order(&self) -> f64 {
        self.kappa - 2.0 * self.state.n as f64 - 1.0
    }

    pub fn y_of_r(&self, r: f64) -> f64 {
        y_of_r(&self.state.params, self.alpha, r)
    }

    pub fn r_of_y(&self, y: f64) -> Result<f64> {
        r_of_y(&self.state.params, self.alpha, y)
    }

    pub fn at_y(&self, y: f64) -> f64 {
        if y <= 0.0 || !y.is_finite() {
            return 0.0;
        }
        let lag = laguerre_unchecked(self.state.n, self.laguerre_order(), y);
        if lag == 0.0 {
            return 0.0;
        }
        let ln_mag = self.ln_norm + self.exponent() * y.ln() - 0.5 * y + lag.abs().ln();
        ln_mag.exp().copysign(lag)
    }

    /// `R` at relative displacement `r`; zero as `r -> inf`.
    pub fn at_r(&self, r: f64) -> f64 {
        self.at_y(self.y_of_r(r))
    }

    /// `y` interval outside of which the normalization integrand carries
    /// less than ~1e-16 of the total.
    pub fn integration_range(&self) -> (f64, f64) {
        let weight = |y: f64| self.at_y(y).powi(2) / (self.alpha * y);
        let p2 = 2.0 * self.exponent();
        // near 0: integrand ~ y^{2 beta - 1}, so int_0^y = y f(y) / (2 beta)
        let mut lo = (self.y_scale * 1e-2).min(1.0);
        while lo > 1e-300 && lo * weight(lo) / p2 > 1e-17 {
            lo *= 0.5;
        }
        let power = p2 + 2.0 * self.state.n as f64;
        let mut hi = self.y_scale.max(2.0 * power + 10.0);
        while weight(hi) * 4.0 > 1e-17 {
            hi *= 1.25;
        }
        (lo, hi)
    }

    /// `R0 int |R(y)|^2 / (alpha y) dy`, i.e. `int |R|^2 dR`.
    pub fn normalization_integral(&self) -> PanelIntegral {
        self.overlap(self)
    }

    /// `R0 int R_a R_b / (alpha y) dy` for two states of the same potential.
    pub fn overlap(&self, other: &Self) -> PanelIntegral {
        let (lo_a, hi_a) = self.integration_range();
        let (lo_b, hi_b) = other.integration_range();
        // both share alpha but y_scale may differ between (ell, N) pairs; map
        // through r so the same physical point is sampled.
        let ratio = other.y_scale / self.y_scale;
        let lo = lo_a.min(lo_b / ratio);
        let hi = hi_a.max(hi_b / ratio);
        let scale = self.r0 / self.alpha;
        integrate_log_panels(|y: f64| scale * self.at_y(y) * other.at_y(y * ratio) / y, lo, hi, QUADRATURE_TOL)
    }

    /// Largest residual of
    /// `y^2 R'' + y R' - (y^2/4) R + (kappa/2) y R - beta^2 R = 0` on `samples`
    /// log-spaced points of `[y_lo, y_hi]`, divided by `max|R| * max(y_hi^2, kappa y_hi / 2, beta^2)`.
    /// Derivatives use fourth-order central differences with relative step 1e-3.
    pub fn ode_residual(&self, y_lo: f64, y_hi: f64, samples: usize) -> Result<f64> {
        if !(y_lo > 0.0 && y_hi > y_lo) || samples < 2 {
            return Err(domain("ode_residual needs 0 < y_lo < y_hi and at least 2 samples"));
        }
        let beta = self.exponent();
        let ratio = (y_hi / y_lo).ln() / (samples - 1) as f64;
        let mut max_res = 0.0f64;
        let mut max_r = 0.0f64;
        for i in 0..samples {
            let y = y_lo * (ratio * i as f64).exp();
            let h = 1e-3 * y;
            let f = |k: f64| self.at_y(y + k * h);
            let (m2, m1, c, p1, p2) = (f(-2.0), f(-1.0), f(0.0), f(1.0), f(2.0));
            let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
            let d2 = (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
            let res = y * y * d2 + y * d1 + (-0.25 * y * y + 0.5 * self.kappa * y - beta * beta) * c;
            max_res = max_res.max(res.abs());
            max_r = max_r.max(c.abs());
        }
        let coeff = (y_hi * y_hi).max(0.5 * self.kappa * y_hi).max(beta * beta);
        Ok(max_res / (max_r * coeff))
    }

    /// Sign changes of `R` on `samples` log-spaced points over the
    /// integration range.
    pub fn count_nodes(&self, samples: usize) -> usize {
        let (lo, hi) = self.integration_range();
        let ratio = (hi / lo).ln() / (samples - 1) as f64;
        let values: Vec<f64> = (0..samples)
            .map(|i| self.at_y(lo * (ratio * i as f64).exp()))
            .filter(|v| *v != 0.0)
            .collect();
        values.windows(2).filter(|w| w[0].signum() != w[1].signum()).count()
    }
}

/// Shorthand for [`RadialEigenfunction::at_r`].
pub fn radial_wavefunction(eig: &RadialEigenfunction, r: f64) -> f64 {
    eig.at_r(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn h2() -> MoleculeParams {
        MoleculeParams::new("H2", 4.7446, 1.4405, 7.5416e-3, 0.7416)
    }

    #[test]
    fn normalization_constant_simple() {
        assert_relative_eq!(normalization_constant(3.0, 0, 1.0, 1.0).unwrap(), 1.0, max_relative = 1e-14);
        let tiny = normalization_constant(2.0 * 3.0 + 1.0 + 1e-12, 3, 1.0, 1.0).unwrap();
        assert!(tiny > 0.0 && tiny < 1e-5, "{tiny}");
        assert!(normalization_constant(7.0, 3, 1.0, 1.0).is_err());
        assert!(normalization_constant(5.0, 3, 1.0, 1.0).is_err());
    }

    #[test]
    fn normalization_constant_scales_with_r0() {
        let a = normalization_constant(34.8, 2, 1.4405, 1.0).unwrap();
        let b = normalization_constant(34.8, 2, 1.4405, 4.0).unwrap();
        assert_relative_eq!(a / b, 2.0, max_relative = 1e-14);
    }

    #[test]
    fn coordinate_maps() {
        let eig = RadialEigenfunction::for_molecule(&h2(), 0, 0, 3).unwrap();
        assert_relative_eq!(eig.y_of_r(0.0), eig.y_scale, max_relative = 1e-15);
        assert!(eig.y_of_r(500.0) < 1e-300);
        for r in [-0.5, 0.0, 1.0, 5.0] {
            assert_abs_diff_eq!(eig.r_of_y(eig.y_of_r(r)).unwrap(), r, epsilon = 1e-12);
        }
        assert!(eig.r_of_y(0.0).is_err());
        assert!(eig.r_of_y(-1.0).is_err());
        assert_eq!(eig.at_r(f64::INFINITY), 0.0);
    }

    #[test]
    fn ground_state_has_no_node() {
        let eig = RadialEigenfunction::for_molecule(&h2(), 0, 0, 3).unwrap();
        for i in 0..2000 {
            let r = -0.99 + i as f64 * (20.99 / 2000.0);
            let v = radial_wavefunction(&eig, r);
            assert!(v > 0.0, "r={r} R={v}");
        }
    }

    #[test]
    fn first_excited_state_has_one_node() {
        let eig = RadialEigenfunction::for_molecule(&h2(), 1, 0, 3).unwrap();
        let values: Vec<f64> = (0..10_000)
            .map(|i| eig.at_r(-0.99 + i as f64 * (20.99 / 10_000.0)))
            .filter(|v| *v != 0.0)
            .collect();
        let changes = values.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
        assert_eq!(changes, 1);
        assert_eq!(eig.count_nodes(20_000), 1);
    }

    #[test]
    fn node_counts_match_n() {
        for n in [0, 2, 5, 9, 16] {
            let eig = RadialEigenfunction::for_molecule(&h2(), n, 0, 3).unwrap();
            assert_eq!(eig.count_nodes(40_000), n as usize, "n={n}");
        }
    }

    #[test]
    fn normalized_for_h2() {
        for (n, ell, dim) in [(0, 0, 3), (1, 0, 3), (3, 5, 3), (16, 0, 3), (0, 0, 7), (2, 3, 4)] {
            let eig = RadialEigenfunction::for_molecule(&h2(), n, ell, dim).unwrap();
            let q = eig.normalization_integral();
            assert!(q.converged);
            assert_abs_diff_eq!(q.value, 1.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn orthogonal_within_a_potential() {
        let a = RadialEigenfunction::for_molecule(&h2(), 0, 2, 3).unwrap();
        let b = RadialEigenfunction::for_molecule(&h2(), 1, 2, 3).unwrap();
        let c = RadialEigenfunction::for_molecule(&h2(), 4, 2, 3).unwrap();
        for (x, y) in [(&a, &b), (&a, &c), (&b, &c)] {
            assert!(x.overlap(y).value.abs() < 1e-7);
        }
    }

    #[test]
    fn satisfies_y_form_ode() {
        for n in [0, 1, 3, 8] {
            let eig = RadialEigenfunction::for_molecule(&h2(), n, 1, 3).unwrap();
            let res = eig.ode_residual(0.1, 2.0 * eig.kappa, 400).unwrap();
            assert!(res < 1e-6, "n={n}: {res}");
        }
    }
}
