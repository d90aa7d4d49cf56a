//! Wall-clock comparison of the two ways to get Bezout coefficients for
//! every pair in the forest: carrying them along the tree recursion versus
//! running the extended Euclidean algorithm per pair.
//!
//! This is a report, not a pass/fail check — absolute numbers are machine
//! dependent. Both passes enumerate the same nodes, so the difference
//! isolates the per-pair gcd cost.

use std::fmt;
use std::hint::black_box;
use std::time::{Duration, Instant};

use coprime_forest::euclid::extended_gcd;
use coprime_forest::forest::enumerate;
use coprime_forest::{BezoutPair, CoprimePair, Error};

/// Timings of one benchmark run.
#[derive(Debug, Clone, Copy)]
pub struct GenerationBench {
    pub depth: u32,
    /// Pairs visited per method (levels 1..=depth of both trees).
    pub pairs: u64,
    /// Enumeration with recursion-carried coefficients.
    pub tree_elapsed: Duration,
    /// Enumeration plus one extended-gcd call per pair.
    pub oracle_elapsed: Duration,
}

impl GenerationBench {
    pub fn tree_ns_per_pair(&self) -> f64 {
        self.tree_elapsed.as_nanos() as f64 / self.pairs.max(1) as f64
    }

    pub fn oracle_ns_per_pair(&self) -> f64 {
        self.oracle_elapsed.as_nanos() as f64 / self.pairs.max(1) as f64
    }

    /// Oracle cost over tree cost; above 1.0 means the recursion is cheaper.
    pub fn ratio(&self) -> f64 {
        self.oracle_ns_per_pair() / self.tree_ns_per_pair().max(f64::MIN_POSITIVE)
    }
}

impl fmt::Display for GenerationBench {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "coefficient generation at depth {} ({} pairs per method)",
            self.depth, self.pairs
        )?;
        writeln!(f, "{:<16} {:>14} {:>12}", "method", "total", "ns/pair")?;
        writeln!(
            f,
            "{:<16} {:>14} {:>12.1}",
            "tree recursion",
            format!("{:?}", self.tree_elapsed),
            self.tree_ns_per_pair()
        )?;
        writeln!(
            f,
            "{:<16} {:>14} {:>12.1}",
            "extended gcd",
            format!("{:?}", self.oracle_elapsed),
            self.oracle_ns_per_pair()
        )?;
        write!(f, "ratio (gcd / tree): {:.2}x", self.ratio())
    }
}

/// Times both methods over levels 1..=depth of both trees.
pub fn bench_generation(depth: u32) -> Result<GenerationBench, Error> {
    let roots = [CoprimePair::MIXED_ROOT, CoprimePair::ODD_ROOT];

    let started = Instant::now();
    let mut pairs = 0u64;
    for root in roots {
        for node in enumerate(root, BezoutPair::STANDARD_SEED, depth, false)? {
            let node = node?;
            black_box((node.pair, node.bezout));
            pairs += 1;
        }
    }
    let tree_elapsed = started.elapsed();

    let started = Instant::now();
    for root in roots {
        for node in enumerate(root, BezoutPair::STANDARD_SEED, depth, false)? {
            let node = node?;
            let oracle = extended_gcd(node.pair.m(), node.pair.n())?;
            black_box(oracle.coeffs);
        }
    }
    let oracle_elapsed = started.elapsed();

    Ok(GenerationBench {
        depth,
        pairs,
        tree_elapsed,
        oracle_elapsed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_at_depth_one() {
        let b = bench_generation(1).unwrap();
        assert_eq!(b.depth, 1);
        assert_eq!(b.pairs, 6);
        assert!(b.ratio().is_finite());
        let text = b.to_string();
        assert!(text.contains("ns/pair"), "{text}");
        assert!(text.contains("tree recursion"), "{text}");
        assert!(text.contains("extended gcd"), "{text}");
    }

    #[test]
    fn pair_counts_scale_with_depth() {
        let b = bench_generation(4).unwrap();
        assert_eq!(b.pairs, 240);
    }
}
