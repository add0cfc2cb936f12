//! Closed-form bound-state energies of the Morse oscillator with the
//! centrifugal barrier in the Pekeris approximation, for any dimension
//! `N >= 2` (N = 3 being the ordinary radial problem).
//!
//! Working in units of the energy scale `eps = hbar^2 / (2 m R0^2)`, with
//! `d = D / eps` and `L = lambda^2 - 1/4` the angular barrier strength:
//!
//! ```text
//! eta^2  = d + L C2
//! zeta^2 = 2d - L C1
//! kappa  = zeta^2 / (eta alpha)
//! E / eps = L C0 - alpha^2 (n + 1/2 - kappa/2)^2,   kappa - 2n - 1 > 0
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::pekeris::PekerisCoefficients;

fn default_provenance() -> String {
    "user".to_string()
}

/// Physical parameters of a diatomic Morse oscillator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoleculeParams {
    pub name: String,
    /// Well depth `D` in eV.
    #[serde(rename = "D_eV")]
    pub well_depth_d: f64,
    pub alpha: f64,
    /// `hbar^2 / (2 m R0^2)` in eV.
    #[serde(rename = "eps_eV")]
    pub energy_scale_eps: f64,
    /// Equilibrium separation in Angstrom.
    #[serde(rename = "r0_angstrom")]
    pub r0: f64,
    #[serde(default = "default_provenance")]
    pub provenance: String,
}

impl MoleculeParams {
    pub fn new(name: &str, well_depth_d: f64, alpha: f64, energy_scale_eps: f64, r0: f64) -> Self {
        Self {
            name: name.to_string(),
            well_depth_d,
            alpha,
            energy_scale_eps,
            r0,
            provenance: default_provenance(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("well_depth_D", self.well_depth_d),
            ("alpha", self.alpha),
            ("energy_scale_eps", self.energy_scale_eps),
            ("r0", self.r0),
        ];
        for (field, value) in fields {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidEntry {
                    entry: self.name.clone(),
                    message: format!("{field} must be positive (got {value})"),
                });
            }
        }
        if self.name.trim().is_empty() {
            return Err(Error::InvalidEntry {
                entry: self.name.clone(),
                message: "name must not be empty".into(),
            });
        }
        Ok(())
    }

    /// Dimensionless well depth `D / eps`.
    pub fn reduced_depth(&self) -> f64 {
        self.well_depth_d / self.energy_scale_eps
    }
}

/// `lambda = ell - 1 + N/2`.
pub fn lambda_index(ell: u32, dimension: u32) -> Result<f64> {
    if dimension < 2 {
        return Err(domain(format!("dimension N must be at least 2, got {dimension}")));
    }
    Ok(ell as f64 - 1.0 + dimension as f64 / 2.0)
}

/// Angular barrier strength `lambda^2 - 1/4`, exact for the half-integer and
/// integer values lambda takes.
pub fn barrier_strength(lambda: f64) -> f64 {
    (lambda - 0.5) * (lambda + 0.5)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralParams {
    pub lambda: f64,
    /// `lambda^2 - 1/4`; equals `ell (ell + 1)` in three dimensions.
    pub barrier: f64,
    pub eta_sq: f64,
    pub zeta_sq: f64,
    pub kappa: f64,
    pub dimension: u32,
    pub ell: u32,
    pub coeffs: PekerisCoefficients,
    pub reduced_depth: f64,
}

impl SpectralParams {
    pub fn eta(&self) -> f64 {
        self.eta_sq.sqrt()
    }

    pub fn alpha(&self) -> f64 {
        self.coeffs.alpha
    }

    /// Number of levels `n >= 0` with `kappa - 2n - 1 > 0`.
    pub fn bound_state_count(&self) -> u32 {
        if self.kappa <= 1.0 {
            return 0;
        }
        ((self.kappa - 1.0) / 2.0).ceil() as u32
    }

    pub fn is_bound(&self, n: u32) -> bool {
        self.kappa - 2.0 * n as f64 - 1.0 > 0.0
    }

    /// Energy in units of `eps`.
    pub fn reduced_energy(&self, n: u32) -> f64 {
        let a = self.alpha();
        let shift = n as f64 + 0.5 - 0.5 * self.kappa;
        self.barrier * self.coeffs.c0 - a * a * shift * shift
    }

    /// `beta = beta_1 / alpha`, recovered from a reduced energy through
    /// `beta_1^2 = -E/eps + L C0`. `None` when `beta^2 < 0`.
    pub fn beta_from_reduced_energy(&self, reduced_energy: f64) -> Option<f64> {
        let beta1_sq = -reduced_energy + self.barrier * self.coeffs.c0;
        if beta1_sq < 0.0 {
            return None;
        }
        Some(beta1_sq.sqrt() / self.alpha())
    }
}

pub fn spectral_params(mol: &MoleculeParams, ell: u32, dimension: u32) -> Result<SpectralParams> {
    mol.validate()?;
    let lambda = lambda_index(ell, dimension)?;
    let coeffs = PekerisCoefficients::new(mol.alpha)?;
    let d = mol.reduced_depth();
    let barrier = barrier_strength(lambda);

    let eta_sq = d + barrier * coeffs.c2;
    let zeta_sq = 2.0 * d - barrier * coeffs.c1;
    let fail = |reason: String| Error::NoBoundSpectrum {
        ell,
        dimension,
        reason,
    };
    if !(eta_sq > 0.0) {
        return Err(fail(format!("eta^2 = {eta_sq} is not positive")));
    }
    if !(zeta_sq > 0.0) {
        return Err(fail(format!("zeta^2 = {zeta_sq} is not positive")));
    }
    let kappa = zeta_sq / (eta_sq.sqrt() * mol.alpha);

    Ok(SpectralParams {
        lambda,
        barrier,
        eta_sq,
        zeta_sq,
        kappa,
        dimension,
        ell,
        coeffs,
        reduced_depth: d,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundState {
    pub n: u32,
    pub ell: u32,
    pub dimension: u32,
    /// Energy in eV.
    pub energy: f64,
    pub params: SpectralParams,
}

impl BoundState {
    /// `kappa - 2n - 1`, the Laguerre order; strictly positive for a bound state.
    pub fn laguerre_order(&self) -> f64 {
        self.params.kappa - 2.0 * self.n as f64 - 1.0
    }
}

pub fn bound_state(mol: &MoleculeParams, n: u32, ell: u32, dimension: u32) -> Result<BoundState> {
    let params = spectral_params(mol, ell, dimension)?;
    if !params.is_bound(n) {
        return Err(Error::NotBound {
            n,
            count: params.bound_state_count(),
        });
    }
    Ok(BoundState {
        n,
        ell,
        dimension,
        energy: mol.energy_scale_eps * params.reduced_energy(n),
        params,
    })
}

/// Closed-form energy in eV.
pub fn energy(mol: &MoleculeParams, n: u32, ell: u32, dimension: u32) -> Result<f64> {
    bound_state(mol, n, ell, dimension).map(|s| s.energy)
}

pub fn bound_state_count(mol: &MoleculeParams, ell: u32, dimension: u32) -> Result<u32> {
    spectral_params(mol, ell, dimension).map(|p| p.bound_state_count())
}

/// A cell of the `(n, ell)` table that has no bound state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkippedCell {
    pub n: u32,
    pub ell: u32,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SpectrumTable {
    pub states: Vec<BoundState>,
    pub skipped: Vec<SkippedCell>,
}

/// All bound `(n, ell)` cells with `n <= n_max`, `ell <= ell_max`, ordered by
/// `ell` then `n`. Cells without a bound state land in `skipped`.
pub fn spectrum_table(mol: &MoleculeParams, n_max: u32, ell_max: u32, dimension: u32) -> SpectrumTable {
    let cells: Vec<(u32, u32)> = (0..=ell_max)
        .flat_map(|ell| (0..=n_max).map(move |n| (ell, n)))
        .collect();
    let results: Vec<_> = cells
        .par_iter()
        .map(|&(ell, n)| (ell, n, bound_state(mol, n, ell, dimension)))
        .collect();

    let mut table = SpectrumTable::default();
    for (ell, n, res) in results {
        match res {
            Ok(state) => table.states.push(state),
            Err(e) => table.skipped.push(SkippedCell {
                n,
                ell,
                reason: e.to_string(),
            }),
        }
    }
    table
}
