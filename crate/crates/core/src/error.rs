use thiserror::Error;

/// Errors raised by the spectral, wavefunction, oracle and registry routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no Pekeris bound spectrum for (ell={ell}, N={dimension}): {reason}")]
    NoBoundSpectrum {
        ell: u32,
        dimension: u32,
        reason: String,
    },

    #[error("n={n} exceeds bound-state count {count} (valid n: 0..{count})")]
    NotBound { n: u32, count: u32 },

    #[error("eigenvalue not bracketed: {0}")]
    NotBracketed(String),

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("unknown molecule \"{0}\"")]
    UnknownMolecule(String),

    #[error("invalid molecule entry \"{entry}\": {message}")]
    InvalidEntry { entry: String, message: String },

    #[error("parse error in {path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
