//! Pair values and the one-step child recursions shared by both trees.
//!
//! A node of a trinary tree is an ordered pair (m,n) with m > n >= 1; its
//! three children come from applying f(m,n) = (2m+n, m) to the node itself
//! and to its two associated pairs (m,-n) and (n,m). The matching Bezout
//! coefficients follow the companion recursion g(u,v) = (v, u-2v) applied to
//! the same three input forms.

use std::fmt;

use crate::error::Error;

/// The three branch labels in canonical order A < B < C (top to bottom in the
/// usual tree drawings).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// `A`: child built from the associated pair (m,-n), coefficients (u,-v).
    Minus,
    /// `B`: child built from (m,n) unchanged, coefficients (u,v).
    Plain,
    /// `C`: child built from the swapped pair (n,m), coefficients (v,u).
    Swap,
}

impl Branch {
    /// All branches in canonical order.
    pub const ALL: [Branch; 3] = [Branch::Minus, Branch::Plain, Branch::Swap];

    /// Single-letter label used in paths and dump files.
    pub fn label(self) -> char {
        match self {
            Branch::Minus => 'A',
            Branch::Plain => 'B',
            Branch::Swap => 'C',
        }
    }

    pub fn from_label(c: char) -> Option<Branch> {
        match c {
            'A' => Some(Branch::Minus),
            'B' => Some(Branch::Plain),
            'C' => Some(Branch::Swap),
            _ => None,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// An ordered pair (m,n) with m > n >= 1, the payload of a tree node.
///
/// Coprimality of (m,n) is a contract, not a constructor check: the two
/// standard roots are coprime by inspection, `child` preserves coprimality,
/// and [`crate::forest::find_path`] detects violations dynamically for
/// arbitrary input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoprimePair {
    m: i64,
    n: i64,
}

impl CoprimePair {
    /// Root (2,1) of the tree holding every coprime pair of opposite parity.
    pub const MIXED_ROOT: CoprimePair = CoprimePair { m: 2, n: 1 };

    /// Root (3,1) of the tree holding every coprime pair of two odd values.
    pub const ODD_ROOT: CoprimePair = CoprimePair { m: 3, n: 1 };

    pub fn new(m: i64, n: i64) -> Result<CoprimePair, Error> {
        if m > n && n >= 1 {
            Ok(CoprimePair { m, n })
        } else {
            Err(Error::InvalidPair { m, n })
        }
    }

    pub fn m(self) -> i64 {
        self.m
    }

    pub fn n(self) -> i64 {
        self.n
    }

    /// True for pairs in the (3,1) parity class, false for the (2,1) class.
    /// Coprimality rules out even/even, so the two classes are exhaustive.
    pub fn both_odd(self) -> bool {
        self.m & 1 == 1 && self.n & 1 == 1
    }

    /// Child pair on a branch: (2m-n, m) for A, (2m+n, m) for B, (2n+m, n)
    /// for C. Children of a valid pair are always valid.
    pub fn child(self, branch: Branch) -> Result<CoprimePair, Error> {
        let CoprimePair { m, n } = self;
        let grown = match branch {
            Branch::Minus => m.checked_mul(2).and_then(|t| t.checked_sub(n)),
            Branch::Plain => m.checked_mul(2).and_then(|t| t.checked_add(n)),
            Branch::Swap => n.checked_mul(2).and_then(|t| t.checked_add(m)),
        };
        let Some(grown) = grown else {
            return Err(Error::Overflow(format!(
                "child of {self} on branch {branch}"
            )));
        };
        let small = match branch {
            Branch::Minus | Branch::Plain => m,
            Branch::Swap => n,
        };
        debug_assert!(grown > small && small >= 1);
        Ok(CoprimePair { m: grown, n: small })
    }

    /// The Pythagorean triple (m^2 - n^2, 2mn, m^2 + n^2) generated by the
    /// pair; all three components are positive for a valid pair.
    pub fn triple(self) -> Result<PythagoreanTriple, Error> {
        let overflow = || Error::Overflow(format!("triple of {self}"));
        let mm = self.m.checked_mul(self.m).ok_or_else(overflow)?;
        let nn = self.n.checked_mul(self.n).ok_or_else(overflow)?;
        let x = mm.checked_sub(nn).ok_or_else(overflow)?;
        let y = self
            .m
            .checked_mul(self.n)
            .and_then(|t| t.checked_mul(2))
            .ok_or_else(overflow)?;
        let z = mm.checked_add(nn).ok_or_else(overflow)?;
        Ok(PythagoreanTriple { x, y, z })
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// Bezout coefficients (u,v); meaningful next to a pair (m,n) with mu+nv = 1.
/// There is no standalone invariant, so the fields are public.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BezoutPair {
    pub u: i64,
    pub v: i64,
}

impl BezoutPair {
    /// The seed (0,1) used at both standard roots; 2*0 + 1*1 = 3*0 + 1*1 = 1.
    pub const STANDARD_SEED: BezoutPair = BezoutPair { u: 0, v: 1 };

    pub fn new(u: i64, v: i64) -> BezoutPair {
        BezoutPair { u, v }
    }

    /// Coefficients for the same branch's child pair: (-v, u+2v) for A,
    /// (v, u-2v) for B, (u, v-2u) for C. If (u,v) certifies (m,n), the
    /// result certifies the child of (m,n) on that branch.
    pub fn child(self, branch: Branch) -> Result<BezoutPair, Error> {
        let BezoutPair { u, v } = self;
        let overflow =
            || Error::Overflow(format!("coefficient child of ({u},{v}) on branch {branch}"));
        let (u2, v2) = match branch {
            Branch::Minus => (
                v.checked_neg().ok_or_else(overflow)?,
                v.checked_mul(2)
                    .and_then(|t| u.checked_add(t))
                    .ok_or_else(overflow)?,
            ),
            Branch::Plain => (
                v,
                v.checked_mul(2)
                    .and_then(|t| u.checked_sub(t))
                    .ok_or_else(overflow)?,
            ),
            Branch::Swap => (
                u,
                u.checked_mul(2)
                    .and_then(|t| v.checked_sub(t))
                    .ok_or_else(overflow)?,
            ),
        };
        Ok(BezoutPair { u: u2, v: v2 })
    }
}

impl fmt::Display for BezoutPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A triple (x,y,z) with x^2 + y^2 = z^2, produced by [`CoprimePair::triple`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PythagoreanTriple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl fmt::Display for PythagoreanTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// True iff m*u + n*v == 1.
///
/// Evaluated in 128-bit arithmetic so the products of any two i64 values are
/// exact; deep nodes have coefficients of the same magnitude as the pair,
/// making m*u overflow i64 long before the values themselves do.
pub fn verify_bezout(pair: CoprimePair, coeffs: BezoutPair) -> Result<bool, Error> {
    let mu = pair.m() as i128 * coeffs.u as i128;
    let nv = pair.n() as i128 * coeffs.v as i128;
    match mu.checked_add(nv) {
        Some(s) => Ok(s == 1),
        None => Err(Error::Overflow(format!(
            "verifying {coeffs} against {pair}"
        ))),
    }
}
