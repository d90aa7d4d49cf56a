//! Integer Mobius maps z -> (az+b)/(cz+d) with ad - bc = 1.
//!
//! Such maps send the open upper half-plane to itself: the imaginary part
//! transforms as im(gamma(z)) = im(z) / |cz+d|^2, and cz+d cannot vanish for
//! im(z) > 0 because c and d are real and not both zero.

use coprime_forest::{BezoutPair, CoprimePair};

use crate::complex::ComplexPoint;
use crate::error::RenderError;

/// A unimodular integer Mobius map. Construction checks the determinant, so
/// a value of this type always satisfies a*d - b*c = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MobiusMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl MobiusMap {
    /// z -> z.
    pub const IDENTITY: MobiusMap = MobiusMap {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<MobiusMap, RenderError> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det == 1 {
            Ok(MobiusMap { a, b, c, d })
        } else {
            Err(RenderError::NotUnimodular { a, b, c, d, det })
        }
    }

    /// The map derived from a tree node (m,n) with coefficients (u,v):
    /// (c,d) = (m,n) and (a,b) = (v,-u), so ad - bc = mu + nv = 1.
    pub fn from_node(pair: CoprimePair, coeffs: BezoutPair) -> Result<MobiusMap, RenderError> {
        let b = coeffs
            .u
            .checked_neg()
            .ok_or_else(|| coprime_forest::Error::Overflow(format!("negating {coeffs}")))?;
        MobiusMap::new(coeffs.v, b, pair.m(), pair.n())
    }

    /// The swapped-pair variant: (c,d) = (n,m) and (a,b) = (u,-v), so
    /// ad - bc = mu + nv = 1 again.
    pub fn from_swapped_node(
        pair: CoprimePair,
        coeffs: BezoutPair,
    ) -> Result<MobiusMap, RenderError> {
        let b = coeffs
            .v
            .checked_neg()
            .ok_or_else(|| coprime_forest::Error::Overflow(format!("negating {coeffs}")))?;
        MobiusMap::new(coeffs.u, b, pair.n(), pair.m())
    }

    /// Coefficients as (a, b, c, d).
    pub fn coefficients(self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    /// Evaluates (az+b)/(cz+d).
    pub fn apply(self, z: ComplexPoint) -> ComplexPoint {
        let (a, b, c, d) = (self.a as f64, self.b as f64, self.c as f64, self.d as f64);
        let num = ComplexPoint::new(a * z.re + b, a * z.im);
        let den = ComplexPoint::new(c * z.re + d, c * z.im);
        // num/den = num * conj(den) / |den|^2
        let scale = den.norm_sqr();
        ComplexPoint::new(
            (num.re * den.re + num.im * den.im) / scale,
            (num.im * den.re - num.re * den.im) / scale,
        )
    }
}
