//! Bound states of the N-dimensional Schrodinger equation with a Morse
//! potential, with the centrifugal barrier treated in the Pekeris
//! approximation.
//!
//! * [`pekeris`]: the exponential expansion of `1/(1+r)^2` and its error.
//! * [`spectrum`]: spectral parameters and closed-form energies.
//! * [`wavefunctions`]: normalized Laguerre eigenfunctions.
//! * [`oracle`]: a Numerov shooting solver for the same radial equations.
//! * [`molecules`]: the parameter registry and its JSON format.

pub mod error;
pub mod molecules;
pub mod oracle;
pub mod pekeris;
pub mod spectrum;
pub mod wavefunctions;

pub use error::{Error, Result};
pub use molecules::{builtin_registry, load_molecules, save_molecules, MoleculeFile};
pub use oracle::{find_eigenvalue, oracle_energy, NumerovResult, RadialProblem, Variant};
pub use pekeris::{
    centrifugal_exact, centrifugal_pekeris, discrepancy_profile, pekeris_coefficients, DiscrepancyProfile,
    PekerisCoefficients,
};
pub use spectrum::{
    bound_state, bound_state_count, energy, lambda_index, spectral_params, spectrum_table, BoundState,
    MoleculeParams, SpectralParams, SpectrumTable,
};
pub use wavefunctions::{normalization_constant, radial_wavefunction, RadialEigenfunction};
