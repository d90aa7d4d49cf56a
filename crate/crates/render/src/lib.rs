//! Hyperbolic-wallpaper rendering over the coprime-pair forest.
//!
//! Forest nodes (m,n) with Bezout coefficients (u,v) become unimodular
//! Mobius maps gamma(z) = (az+b)/(cz+d) via (c,d) = (m,n), (a,b) = (v,-u).
//! A render evaluates the finite sum F(z) = sum of h(gamma(z)) over a
//! deduplicated term set at every pixel center of an upper-half-plane
//! window, then colors F(z) through a torus-wrapped colormap. Output is a
//! binary PPM whose bytes depend only on the configuration.
//!
//! The crate also houses the generation benchmark of tree-carried Bezout
//! coefficients against per-pair extended-gcd calls ([`bench_generation`]).
//!
//! ```
//! use coprime_wallpaper::{render, Motif, RenderConfig};
//!
//! let cfg = RenderConfig {
//!     width: 16,
//!     height: 16,
//!     term_depth: 1,
//!     motif: Motif::Exp,
//!     ..RenderConfig::default()
//! };
//! let image = render(&cfg).unwrap();
//! assert_eq!(image.to_ppm(), render(&cfg).unwrap().to_ppm());
//! ```

mod bench;
mod colormap;
mod complex;
mod error;
mod mobius;
mod ppm;
mod render;

pub use bench::{bench_generation, GenerationBench};
pub use colormap::{Colormap, ColormapSource};
pub use complex::ComplexPoint;
pub use error::RenderError;
pub use mobius::MobiusMap;
pub use ppm::Image;
pub use render::{
    build_terms, eval_sum, pixel_center, render, render_to_file, Motif, RenderConfig, Window,
};
