//! The little slice of complex arithmetic the renderer needs.

use std::fmt;
use std::ops::Add;

/// A point of the complex plane; render inputs always have `im > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

impl ComplexPoint {
    pub const ZERO: ComplexPoint = ComplexPoint { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint { re, im }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Squared modulus |z|^2.
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

impl Add for ComplexPoint {
    type Output = ComplexPoint;

    fn add(self, rhs: ComplexPoint) -> ComplexPoint {
        ComplexPoint::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl fmt::Display for ComplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
