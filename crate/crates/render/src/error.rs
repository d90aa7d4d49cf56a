use std::path::PathBuf;

use thiserror::Error;

/// Errors from term construction, colormap handling, and image I/O.
#[derive(Debug, Error)]
pub enum RenderError {
    /// Overflow or pair-domain errors bubbling up from the forest crate.
    #[error(transparent)]
    Core(#[from] coprime_forest::Error),

    #[error("map (a,b;c,d)=({a},{b};{c},{d}) has determinant {det}, expected 1")]
    NotUnimodular {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        det: i128,
    },

    #[error(
        "window must satisfy x_min < x_max and 0 < y_min < y_max, \
         got x in [{x_min},{x_max}], y in [{y_min},{y_max}]"
    )]
    InvalidWindow {
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
    },

    #[error("invalid render configuration: {0}")]
    Config(String),

    #[error("{path}: {what}")]
    Colormap { path: PathBuf, what: String },

    #[error("not a valid PPM image: {0}")]
    PpmFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
