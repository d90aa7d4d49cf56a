//! Domain-colored rendering of a finite Mobius-map sum over the upper
//! half-plane.
//!
//! Every pixel center z gets the value F(z) = sum over terms of h(gamma(z)),
//! where the gammas come from forest nodes (see [`build_terms`]) and h is a
//! configurable motif. F(z) is then folded onto the unit torus and colored.
//! Terms are evaluated in one fixed, sorted order, and each pixel depends
//! only on its own coordinates, so output bytes are identical across runs
//! and across thread counts.

use std::collections::BTreeSet;
use std::path::PathBuf;

use coprime_forest::forest::enumerate;
use coprime_forest::{BezoutPair, CoprimePair};

use crate::colormap::{Colormap, ColormapSource};
use crate::complex::ComplexPoint;
use crate::error::RenderError;
use crate::mobius::MobiusMap;
use crate::ppm::Image;

/// An axis-aligned view rectangle strictly inside the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Window {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Window, RenderError> {
        if x_min < x_max && 0.0 < y_min && y_min < y_max {
            Ok(Window {
                x_min,
                x_max,
                y_min,
                y_max,
            })
        } else {
            Err(RenderError::InvalidWindow {
                x_min,
                x_max,
                y_min,
                y_max,
            })
        }
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn y_min(&self) -> f64 {
        self.y_min
    }

    pub fn y_max(&self) -> f64 {
        self.y_max
    }
}

/// The function averaged over the term set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Motif {
    /// h(w) = exp(2*pi*i*w); periodic in re(w) and decaying in im(w).
    Exp,
    /// h(w) = w; useful for debugging term sets.
    Identity,
}

impl Motif {
    fn apply(self, w: ComplexPoint) -> ComplexPoint {
        match self {
            Motif::Identity => w,
            Motif::Exp => {
                let r = (-std::f64::consts::TAU * w.im).exp();
                let arg = std::f64::consts::TAU * w.re;
                ComplexPoint::new(r * arg.cos(), r * arg.sin())
            }
        }
    }
}

/// Everything a render needs. `output` is only consulted by
/// [`render_to_file`]; [`render`] itself is pure.
#[derive(Debug, Clone)]
pub struct RenderConfig {
    pub window: Window,
    pub width: u32,
    pub height: u32,
    /// Both trees contribute nodes of levels 0..=term_depth.
    pub term_depth: u32,
    /// Also include the maps for (c,d) in {(0,1), (1,0), (1,1)}.
    pub include_base_terms: bool,
    /// Also include each node's swapped-pair map.
    pub include_swapped: bool,
    pub motif: Motif,
    pub colormap: ColormapSource,
    pub output: Option<PathBuf>,
    /// Worker threads; 0 uses the available parallelism.
    pub threads: usize,
}

impl Default for RenderConfig {
    fn default() -> RenderConfig {
        RenderConfig {
            window: Window::new(-1.0, 1.0, 0.05, 2.05).expect("default window is valid"),
            width: 512,
            height: 512,
            term_depth: 5,
            include_base_terms: false,
            include_swapped: false,
            motif: Motif::Exp,
            colormap: ColormapSource::Builtin,
            output: None,
            threads: 0,
        }
    }
}

/// Collects the deduplicated term set for a configuration: one map per
/// forest node of levels 0..=term_depth (both trees), plus optional swapped
/// and base maps, sorted by (c,d,a,b).
pub fn build_terms(cfg: &RenderConfig) -> Result<Vec<MobiusMap>, RenderError> {
    // Key order (c,d,a,b) is the documented canonical term order.
    let mut keys: BTreeSet<(i64, i64, i64, i64)> = BTreeSet::new();
    let mut insert = |map: MobiusMap| {
        let (a, b, c, d) = map.coefficients();
        keys.insert((c, d, a, b));
    };
    for root in [CoprimePair::MIXED_ROOT, CoprimePair::ODD_ROOT] {
        let nodes = enumerate(root, BezoutPair::STANDARD_SEED, cfg.term_depth, true)?;
        for node in nodes {
            let node = node?;
            insert(MobiusMap::from_node(node.pair, node.bezout)?);
            if cfg.include_swapped {
                insert(MobiusMap::from_swapped_node(node.pair, node.bezout)?);
            }
        }
    }
    if cfg.include_base_terms {
        insert(MobiusMap::IDENTITY); // (c,d) = (0,1)
        insert(MobiusMap::new(0, -1, 1, 0)?); // (c,d) = (1,0): z -> -1/z
        insert(MobiusMap::new(1, 0, 1, 1)?); // (c,d) = (1,1): z -> z/(z+1)
    }
    keys.into_iter()
        .map(|(c, d, a, b)| MobiusMap::new(a, b, c, d))
        .collect()
}

/// Sums the motif over all term images of z, in term order.
pub fn eval_sum(terms: &[MobiusMap], motif: Motif, z: ComplexPoint) -> ComplexPoint {
    let mut acc = ComplexPoint::ZERO;
    for t in terms {
        acc = acc + motif.apply(t.apply(z));
    }
    acc
}

/// The complex coordinate at the center of pixel (col, row); row 0 is the
/// top of the image, i.e. the largest imaginary part.
pub fn pixel_center(window: &Window, width: u32, height: u32, col: u32, row: u32) -> ComplexPoint {
    let dx = (window.x_max - window.x_min) / width as f64;
    let dy = (window.y_max - window.y_min) / height as f64;
    ComplexPoint::new(
        window.x_min + (col as f64 + 0.5) * dx,
        window.y_max - (row as f64 + 0.5) * dy,
    )
}

/// Renders the configured image in memory.
pub fn render(cfg: &RenderConfig) -> Result<Image, RenderError> {
    if cfg.width == 0 || cfg.height == 0 {
        return Err(RenderError::Config(format!(
            "image size {}x{} must be positive",
            cfg.width, cfg.height
        )));
    }
    let colormap = Colormap::load(&cfg.colormap)?;
    let terms = build_terms(cfg)?;

    let width = cfg.width as usize;
    let height = cfg.height as usize;
    let threads = match cfg.threads {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    };

    let mut pixels = vec![[0u8; 3]; width * height];
    // Horizontal bands of whole rows, one per worker. Pixels are pure
    // functions of their coordinates, so the split cannot affect the bytes.
    let band_rows = height.div_ceil(threads).max(1);
    std::thread::scope(|scope| {
        for (band_index, band) in pixels.chunks_mut(band_rows * width).enumerate() {
            let terms = &terms;
            let colormap = &colormap;
            scope.spawn(move || {
                let first_row = band_index * band_rows;
                for (offset, px) in band.iter_mut().enumerate() {
                    let row = (first_row + offset / width) as u32;
                    let col = (offset % width) as u32;
                    let z = pixel_center(&cfg.window, cfg.width, cfg.height, col, row);
                    let f = eval_sum(terms, cfg.motif, z);
                    *px = colormap.sample(f);
                }
            });
        }
    });
    Image::from_pixels(cfg.width, cfg.height, pixels)
}

/// Renders and writes the PPM to `cfg.output`.
pub fn render_to_file(cfg: &RenderConfig) -> Result<(), RenderError> {
    let Some(path) = &cfg.output else {
        return Err(RenderError::Config("no output path set".into()));
    };
    let image = render(cfg)?;
    std::fs::write(path, image.to_ppm())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im)
    }

    #[test]
    fn window_validation() {
        assert!(Window::new(-1.0, 1.0, 0.1, 2.0).is_ok());
        for bad in [
            (1.0, -1.0, 0.1, 2.0),  // x reversed
            (-1.0, 1.0, 0.0, 2.0),  // touches the real axis
            (-1.0, 1.0, -0.5, 2.0), // below the real axis
            (-1.0, 1.0, 2.0, 0.1),  // y reversed
            (f64::NAN, 1.0, 0.1, 2.0),
        ] {
            let (a, b, c, d) = bad;
            assert!(matches!(
                Window::new(a, b, c, d),
                Err(RenderError::InvalidWindow { .. })
            ));
        }
    }

    #[test]
    fn pixel_centers() {
        let w = Window::new(0.5, 2.5, 0.5, 2.5).unwrap();
        assert_eq!(pixel_center(&w, 2, 2, 0, 0), z(1.0, 2.0));
        assert_eq!(pixel_center(&w, 2, 2, 1, 1), z(2.0, 1.0));
        // 1x1: the center of the window.
        assert_eq!(pixel_center(&w, 1, 1, 0, 0), z(1.5, 1.5));
    }

    #[test]
    fn eval_sum_identity_cases() {
        let id = [MobiusMap::IDENTITY];
        let w = eval_sum(&id, Motif::Identity, z(0.3, 0.7));
        assert_eq!(w, z(0.3, 0.7));

        let both = [MobiusMap::IDENTITY, MobiusMap::new(0, -1, 1, 0).unwrap()];
        let w = eval_sum(&both, Motif::Identity, z(0.0, 1.0));
        assert!((w.re).abs() < 1e-15 && (w.im - 2.0).abs() < 1e-15);
    }

    #[test]
    fn eval_sum_exp_motif_at_i() {
        // Both terms fix i, and exp(2*pi*i*i) = exp(-2*pi).
        let both = [MobiusMap::IDENTITY, MobiusMap::new(0, -1, 1, 0).unwrap()];
        let w = eval_sum(&both, Motif::Exp, z(0.0, 1.0));
        let expected = 2.0 * (-std::f64::consts::TAU).exp();
        assert!((w.re - expected).abs() < 1e-15, "{} vs {expected}", w.re);
        assert!(w.im.abs() < 1e-18);
    }

    fn cfg(term_depth: u32, base: bool, swapped: bool) -> RenderConfig {
        RenderConfig {
            term_depth,
            include_base_terms: base,
            include_swapped: swapped,
            ..RenderConfig::default()
        }
    }

    #[test]
    fn term_counts() {
        assert_eq!(build_terms(&cfg(0, true, false)).unwrap().len(), 5);
        assert_eq!(build_terms(&cfg(1, false, false)).unwrap().len(), 8);
        assert_eq!(build_terms(&cfg(5, true, false)).unwrap().len(), 731);
        assert_eq!(build_terms(&cfg(5, true, true)).unwrap().len(), 1459);
    }

    #[test]
    fn terms_are_sorted_and_distinct() {
        let terms = build_terms(&cfg(4, true, true)).unwrap();
        let keys: Vec<_> = terms
            .iter()
            .map(|t| {
                let (a, b, c, d) = t.coefficients();
                (c, d, a, b)
            })
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn root_terms_match_hand_derivation() {
        let terms = build_terms(&cfg(0, false, false)).unwrap();
        let coeffs: Vec<_> = terms.iter().map(|t| t.coefficients()).collect();
        // (2,1) and (3,1) with seed (0,1) both produce (a,b) = (1,0).
        assert_eq!(coeffs, vec![(1, 0, 2, 1), (1, 0, 3, 1)]);
    }

    #[test]
    fn one_pixel_render_composes_the_pipeline() {
        let mut c = cfg(2, true, false);
        c.window = Window::new(-0.5, 0.5, 0.5, 1.5).unwrap();
        c.width = 1;
        c.height = 1;
        let img = render(&c).unwrap();

        let center = pixel_center(&c.window, 1, 1, 0, 0);
        assert_eq!(center, z(0.0, 1.0));
        let f = eval_sum(&build_terms(&c).unwrap(), c.motif, center);
        let expected = Colormap::Wheel.sample(f);
        assert_eq!(img.pixel(0, 0), expected);
    }

    #[test]
    fn single_identity_term_pipeline_matches_direct_colorize() {
        let at_i = z(0.0, 1.0);
        let f = eval_sum(&[MobiusMap::IDENTITY], Motif::Identity, at_i);
        assert_eq!(f, at_i);
        assert_eq!(Colormap::Wheel.sample(f), Colormap::Wheel.sample(at_i));
    }

    #[test]
    fn renders_are_deterministic_across_runs_and_threads() {
        let mut c = cfg(2, false, true);
        c.width = 24;
        c.height = 16;
        c.threads = 1;
        let one = render(&c).unwrap().to_ppm();
        let again = render(&c).unwrap().to_ppm();
        assert_eq!(one, again);
        c.threads = 3;
        assert_eq!(render(&c).unwrap().to_ppm(), one);
        c.threads = 64; // more threads than rows
        assert_eq!(render(&c).unwrap().to_ppm(), one);
    }

    #[test]
    fn render_to_file_writes_parseable_ppm() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = cfg(1, false, false);
        c.width = 8;
        c.height = 8;
        c.output = Some(dir.path().join("out.ppm"));
        render_to_file(&c).unwrap();
        let bytes = std::fs::read(c.output.as_ref().unwrap()).unwrap();
        let img = Image::from_ppm(&bytes).unwrap();
        assert_eq!((img.width(), img.height()), (8, 8));
        assert_eq!(img, render(&c).unwrap());
    }

    #[test]
    fn render_to_file_requires_a_path() {
        let c = cfg(1, false, false);
        assert!(matches!(render_to_file(&c), Err(RenderError::Config(_))));
    }

    #[test]
    fn zero_size_is_a_config_error() {
        let mut c = cfg(1, false, false);
        c.width = 0;
        assert!(matches!(render(&c), Err(RenderError::Config(_))));
    }
}
