//! Extended Euclidean algorithm, the oracle the trees are checked against.
//!
//! The implementation is the standard iterative remainder/coefficient loop
//! and shares no code with the tree recursions in [`crate::pair`]. For
//! coprime input it returns the same normalized coefficients as the
//! recursive formulation gcd(a,0) = (a, 1, 0), gcd(a,b) = (g, y, x - (a/b)y):
//! gcd(2,1) -> (1, 0, 1) and gcd(3,1) -> (1, 0, 1).

use crate::error::Error;
use crate::pair::BezoutPair;

/// Result of [`extended_gcd`]: g = gcd(a,b) together with coefficients
/// satisfying a*u + b*v = g.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GcdResult {
    pub g: i64,
    pub coeffs: BezoutPair,
}

/// Extended Euclidean algorithm for a >= b >= 1.
///
/// The domain matches tree pairs (ordered, positive); anything else is a
/// caller bug and comes back as [`Error::GcdDomain`]. Arithmetic is
/// overflow-checked, although for inputs that fit in i64 the coefficients
/// do too (they are bounded by the inputs).
pub fn extended_gcd(a: i64, b: i64) -> Result<GcdResult, Error> {
    if b < 1 || a < b {
        return Err(Error::GcdDomain { a, b });
    }
    let overflow = || Error::Overflow(format!("extended_gcd({a},{b})"));

    let (mut old_r, mut r) = (a, b);
    let (mut old_u, mut u) = (1i64, 0i64);
    let (mut old_v, mut v) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        let step = |older: &mut i64, newer: &mut i64| -> Result<(), Error> {
            let next = q
                .checked_mul(*newer)
                .and_then(|qn| older.checked_sub(qn))
                .ok_or_else(overflow)?;
            *older = std::mem::replace(newer, next);
            Ok(())
        };
        step(&mut old_r, &mut r)?;
        step(&mut old_u, &mut u)?;
        step(&mut old_v, &mut v)?;
    }
    Ok(GcdResult {
        g: old_r,
        coeffs: BezoutPair::new(old_u, old_v),
    })
}
