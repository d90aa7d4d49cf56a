//! Mapping summed complex values to colors.
//!
//! The sum F at a pixel is folded onto the unit torus by taking fractional
//! parts of its real and imaginary components, and the torus position picks
//! a color: either from the builtin hue wheel or from a user-supplied PPM
//! texture by nearest texel. Non-finite sums get a black sentinel pixel.

use std::path::PathBuf;

use crate::complex::ComplexPoint;
use crate::error::RenderError;
use crate::ppm::Image;

/// Where a colormap comes from, as named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColormapSource {
    Builtin,
    File(PathBuf),
}

/// A loaded, sampleable colormap.
#[derive(Debug, Clone)]
pub enum Colormap {
    /// Synthesized hue wheel: torus x is the hue, torus y dims the value
    /// from full (y=0) to half (y->1).
    Wheel,
    /// A texture sampled by nearest texel; row 0 corresponds to torus y=0.
    Texture(Image),
}

impl Colormap {
    pub fn load(source: &ColormapSource) -> Result<Colormap, RenderError> {
        match source {
            ColormapSource::Builtin => Ok(Colormap::Wheel),
            ColormapSource::File(path) => {
                let bytes = std::fs::read(path).map_err(|e| RenderError::Colormap {
                    path: path.clone(),
                    what: e.to_string(),
                })?;
                let image = Image::from_ppm(&bytes).map_err(|e| RenderError::Colormap {
                    path: path.clone(),
                    what: e.to_string(),
                })?;
                Ok(Colormap::Texture(image))
            }
        }
    }

    /// Color for a summed value.
    pub fn sample(&self, f: ComplexPoint) -> [u8; 3] {
        if !f.is_finite() {
            return [0, 0, 0];
        }
        let fx = frac(f.re);
        let fy = frac(f.im);
        match self {
            Colormap::Wheel => wheel(fx, fy),
            Colormap::Texture(img) => {
                let x = ((fx * img.width() as f64) as u32).min(img.width() - 1);
                let y = ((fy * img.height() as f64) as u32).min(img.height() - 1);
                img.pixel(x, y)
            }
        }
    }
}

/// Fractional part in [0,1). The guard catches tiny negative inputs whose
/// fractional part rounds up to exactly 1.0 in f64.
fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Hue wheel at full saturation: hue = fx turns, value = 1 - fy/2. The
/// origin of the torus is pure red.
fn wheel(fx: f64, fy: f64) -> [u8; 3] {
    let h = fx * 6.0;
    let v = 1.0 - 0.5 * fy;
    let x = v * (1.0 - (h % 2.0 - 1.0).abs());
    let (r, g, b) = match h as u32 {
        0 => (v, x, 0.0),
        1 => (x, v, 0.0),
        2 => (0.0, v, x),
        3 => (0.0, x, v),
        4 => (x, 0.0, v),
        _ => (v, 0.0, x),
    };
    [to_byte(r), to_byte(g), to_byte(b)]
}

fn to_byte(c: f64) -> u8 {
    (c * 255.0).round() as u8
}
