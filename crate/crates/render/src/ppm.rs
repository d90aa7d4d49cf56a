//! Minimal PPM handling: binary P6 out, P6 or P3 in.
//!
//! Output is canonical and comment-free — `P6\n<w> <h>\n255\n` followed by
//! raw RGB rows — so identical pixel data always produces identical bytes.
//! Input accepts header comments and any maxval up to 255 (samples are
//! rescaled to full range).

use crate::error::RenderError;

/// A row-major RGB image, top row first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: u32,
    height: u32,
    pixels: Vec<[u8; 3]>,
}

impl Image {
    pub fn from_pixels(
        width: u32,
        height: u32,
        pixels: Vec<[u8; 3]>,
    ) -> Result<Image, RenderError> {
        if width == 0 || height == 0 {
            return Err(RenderError::PpmFormat(format!(
                "zero-sized image ({width}x{height})"
            )));
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(RenderError::PpmFormat(format!(
                "pixel buffer holds {} pixels, {width}x{height} needs {expected}",
                pixels.len()
            )));
        }
        Ok(Image {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[[u8; 3]] {
        &self.pixels
    }

    /// Pixel at column x, row y (row 0 is the top).
    pub fn pixel(&self, x: u32, y: u32) -> [u8; 3] {
        assert!(
            x < self.width && y < self.height,
            "pixel ({x},{y}) out of bounds"
        );
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    /// Serializes as binary PPM (P6), maxval 255, no comments.
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.reserve(self.pixels.len() * 3);
        for px in &self.pixels {
            out.extend_from_slice(px);
        }
        out
    }

    /// Parses a P6 or P3 image with maxval <= 255; samples are rescaled to
    /// 0..=255 by nearest value.
    pub fn from_ppm(bytes: &[u8]) -> Result<Image, RenderError> {
        let mut cur = Cursor { bytes, pos: 0 };
        let magic = cur.token("magic number")?;
        let binary = match magic {
            b"P6" => true,
            b"P3" => false,
            other => {
                return Err(RenderError::PpmFormat(format!(
                    "unsupported magic {:?}, want P6 or P3",
                    String::from_utf8_lossy(other)
                )))
            }
        };
        let width = cur.number("width")?;
        let height = cur.number("height")?;
        let maxval = cur.number("maxval")?;
        if width == 0 || height == 0 {
            return Err(RenderError::PpmFormat(format!(
                "zero-sized image ({width}x{height})"
            )));
        }
        if maxval == 0 || maxval > 255 {
            return Err(RenderError::PpmFormat(format!(
                "maxval {maxval} unsupported, want 1..=255"
            )));
        }
        let count = width as usize * height as usize;

        let mut samples = Vec::with_capacity(count.min(1 << 24) * 3);
        if binary {
            // One single whitespace byte separates the header from the raster.
            match cur.bytes.get(cur.pos) {
                Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
                _ => {
                    return Err(RenderError::PpmFormat(
                        "missing whitespace between header and raster".into(),
                    ))
                }
            }
            let raster = &cur.bytes[cur.pos..];
            if raster.len() < count * 3 {
                return Err(RenderError::PpmFormat(format!(
                    "raster truncated: {} bytes for {count} pixels",
                    raster.len()
                )));
            }
            samples.extend_from_slice(&raster[..count * 3]);
        } else {
            for i in 0..count * 3 {
                let v = cur.number(&format!("sample {i}"))?;
                if v > maxval {
                    return Err(RenderError::PpmFormat(format!(
                        "sample {v} exceeds maxval {maxval}"
                    )));
                }
                samples.push(v as u8);
            }
        }

        let rescale = |v: u8| -> u8 {
            if maxval == 255 {
                v
            } else {
                ((v as u32 * 255 + maxval / 2) / maxval) as u8
            }
        };
        let pixels = samples
            .chunks_exact(3)
            .map(|s| [rescale(s[0]), rescale(s[1]), rescale(s[2])])
            .collect();
        Image::from_pixels(width, height, pixels)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    /// Skips whitespace and `#`-to-end-of-line comments.
    fn skip_filler(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&b) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if b == b'\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn token(&mut self, what: &str) -> Result<&'a [u8], RenderError> {
        self.skip_filler();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(RenderError::PpmFormat(format!("missing {what}")));
        }
        Ok(&self.bytes[start..self.pos])
    }

    fn number(&mut self, what: &str) -> Result<u32, RenderError> {
        let tok = self.token(what)?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                RenderError::PpmFormat(format!("bad {what}: {:?}", String::from_utf8_lossy(tok)))
            })
    }
}
