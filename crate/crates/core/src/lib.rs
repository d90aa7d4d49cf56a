//! Trinary trees of relatively prime pairs and their Bezout-coefficient
//! trees.
//!
//! Two trees cover all coprime pairs (m,n) with m > n >= 1: the one rooted
//! at (2,1) holds every pair of opposite parity, the one rooted at (3,1)
//! every pair of two odds. A node's three children apply f(m,n) = (2m+n, m)
//! to the pair itself (branch B) and to its associated pairs (m,-n) and
//! (n,m) (branches A and C). A companion recursion g(u,v) = (v, u-2v), run
//! over the same branches from a seed with m*u + n*v = 1, produces Bezout
//! coefficients for every node without any division.
//!
//! The crate provides:
//!
//! - the single-step recursions and pair types ([`CoprimePair`],
//!   [`BezoutPair`], [`Branch`]);
//! - streaming level-order enumeration and pair-to-path resolution
//!   ([`forest`]);
//! - an extended-Euclid oracle ([`euclid`]);
//! - the tree-vs-oracle comparison, including the one-node coefficient
//!   patch that reconciles the (2,1) tree ([`conjecture`]).
//!
//! ```
//! use coprime_forest::{Branch, CoprimePair};
//!
//! let root = CoprimePair::MIXED_ROOT; // (2,1)
//! let child = root.child(Branch::Plain).unwrap();
//! assert_eq!((child.m(), child.n()), (5, 2));
//! let t = child.triple().unwrap();
//! assert_eq!((t.x, t.y, t.z), (21, 20, 29));
//! ```

pub mod conjecture;
mod error;
pub mod euclid;
pub mod forest;
mod pair;

pub use error::Error;
pub use pair::{verify_bezout, BezoutPair, Branch, CoprimePair, PythagoreanTriple};
