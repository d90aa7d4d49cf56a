//! Tree-vs-oracle comparison: enumerate both Bezout trees and check every
//! node's coefficients against [`crate::euclid::extended_gcd`].
//!
//! The interesting outcome, which [`ComparisonReport::conjecture_holds`]
//! encodes, is that the (3,1) tree agrees with the oracle everywhere, while
//! the (2,1) tree disagrees on exactly the subtree under its branch-A child
//! — one sixth of all nodes at any depth. Replacing that single level-1
//! coefficient pair with (1,-1) and recursing onward ("patching") removes
//! every disagreement.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::euclid::extended_gcd;
use crate::forest::{enumerate, enumerate_subtree, node_count, TreeNode, TreePath};
use crate::pair::{BezoutPair, Branch, CoprimePair};

/// Replacement coefficients for the level-1 branch-A node of the (2,1) tree,
/// i.e. for the pair (3,2): 3*1 + 2*(-1) = 1. This is also what the oracle
/// returns for (3,2), which is why the patch reconciles the whole subtree.
pub const PATCH_COEFFS: BezoutPair = BezoutPair { u: 1, v: -1 };

/// Most differing paths kept for a scattered-summary sample list.
const SAMPLE_CAP: usize = 100;

/// An exact non-negative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub numerator: u64,
    pub denominator: u64,
}

impl Fraction {
    /// Reduces numerator/denominator; zero normalizes to 0/1. Panics on a
    /// zero denominator, which is always a caller bug here.
    pub fn new(numerator: u64, denominator: u64) -> Fraction {
        assert_ne!(denominator, 0, "fraction with zero denominator");
        let g = gcd(numerator, denominator);
        Fraction {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Shape of the differing-node set, as printed in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DifferingSummary {
    /// No node differed from the oracle.
    Empty,
    /// The differing nodes are exactly the subtree below the given path
    /// (subtree root included).
    Subtree { root: String },
    /// Any other shape; `samples` holds up to 100 differing paths,
    /// lexicographically sorted.
    Scattered { samples: Vec<String> },
}

/// Outcome of [`compare_forest`] at one depth.
///
/// `matched`/`differed` always describe the run that was made, patched or
/// not; `patched_matched`/`patched_differed` repeat them when `patched` is
/// true so a patched report is self-describing, and are null otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub depth: u32,
    pub total_nodes: u64,
    pub matched: u64,
    pub differed: u64,
    pub differed_fraction: Fraction,
    pub differing_paths_summary: DifferingSummary,
    pub patched: bool,
    pub patched_matched: Option<u64>,
    pub patched_differed: Option<u64>,
}

impl ComparisonReport {
    /// True when the report shows the conjectured pattern: an unpatched run
    /// must disagree on exactly the (2,1) branch-A subtree (one sixth of all
    /// nodes); a patched run must not disagree anywhere.
    pub fn conjecture_holds(&self) -> bool {
        if self.matched.checked_add(self.differed) != Some(self.total_nodes) {
            return false;
        }
        if self.patched {
            self.differed == 0
        } else {
            self.differed_fraction == Fraction::new(1, 6)
                && self.differing_paths_summary
                    == DifferingSummary::Subtree {
                        root: minus_subtree_path().to_string(),
                    }
        }
    }
}

fn minus_subtree_path() -> TreePath {
    TreePath::new(CoprimePair::MIXED_ROOT, vec![Branch::Minus])
}

/// Running totals of one comparison sweep.
#[derive(Default)]
struct Tally {
    matched: u64,
    differed: u64,
    /// Differing nodes under (2,1) branch A specifically.
    differed_in_minus: u64,
    /// The `SAMPLE_CAP` smallest differing paths seen so far.
    samples: BTreeSet<TreePath>,
}

impl Tally {
    fn record(&mut self, node: &TreeNode) -> Result<(), Error> {
        let oracle = extended_gcd(node.pair.m(), node.pair.n())?;
        debug_assert_eq!(oracle.g, 1, "tree node {} not coprime", node.pair);
        if oracle.coeffs == node.bezout {
            self.matched += 1;
            return Ok(());
        }
        self.differed += 1;
        if node.path.root == CoprimePair::MIXED_ROOT
            && node.path.steps.first() == Some(&Branch::Minus)
        {
            self.differed_in_minus += 1;
        }
        let keep = self.samples.len() < SAMPLE_CAP
            || self.samples.last().is_some_and(|worst| node.path < *worst);
        if keep {
            self.samples.insert(node.path.clone());
            if self.samples.len() > SAMPLE_CAP {
                self.samples.pop_last();
            }
        }
        Ok(())
    }
}

/// Collapses a differing set into its summary. `expected_minus` is the size
/// of the (2,1) branch-A subtree at the swept depth; matching it while no
/// node outside that subtree differs is the subtree pattern.
fn classify(
    differed: u64,
    differed_in_minus: u64,
    expected_minus: u64,
    samples: BTreeSet<TreePath>,
) -> DifferingSummary {
    if differed == 0 {
        DifferingSummary::Empty
    } else if differed == differed_in_minus && differed == expected_minus {
        DifferingSummary::Subtree {
            root: minus_subtree_path().to_string(),
        }
    } else {
        DifferingSummary::Scattered {
            samples: samples.into_iter().map(|p| p.to_string()).collect(),
        }
    }
}

/// Compares every node of both trees, levels 1..=depth, against the
/// extended-gcd oracle.
///
/// With `patch`, the (2,1) tree's level-1 branch-A coefficients are replaced
/// by [`PATCH_COEFFS`] and the coefficient recursion proceeds from the
/// replacement throughout that subtree; its siblings and the (3,1) tree are
/// untouched.
pub fn compare_forest(depth: u32, patch: bool) -> Result<ComparisonReport, Error> {
    let seed = BezoutPair::STANDARD_SEED;
    let mut tally = Tally::default();

    if patch {
        // The (2,1) tree as three level-1 subtrees, so the branch-A seed can
        // be swapped out while B and C keep their recursion-produced values.
        if depth >= 1 {
            for branch in Branch::ALL {
                let sub_pair = CoprimePair::MIXED_ROOT.child(branch)?;
                let sub_bezout = if branch == Branch::Minus {
                    PATCH_COEFFS
                } else {
                    seed.child(branch)?
                };
                let sub = enumerate_subtree(
                    CoprimePair::MIXED_ROOT,
                    vec![branch],
                    sub_pair,
                    sub_bezout,
                    depth - 1,
                    true,
                )?;
                for node in sub {
                    tally.record(&node?)?;
                }
            }
        }
    } else {
        for node in enumerate(CoprimePair::MIXED_ROOT, seed, depth, false)? {
            tally.record(&node?)?;
        }
    }
    for node in enumerate(CoprimePair::ODD_ROOT, seed, depth, false)? {
        tally.record(&node?)?;
    }

    let total_nodes = node_count(depth, false, 2)?;
    debug_assert_eq!(tally.matched + tally.differed, total_nodes);

    // Size of the (2,1) branch-A subtree over levels 1..=depth.
    let expected_minus = if depth == 0 {
        0
    } else {
        (3u64
            .checked_pow(depth)
            .ok_or_else(|| Error::Overflow(format!("subtree size at depth {depth}")))?
            - 1)
            / 2
    };
    let summary = classify(
        tally.differed,
        tally.differed_in_minus,
        expected_minus,
        tally.samples,
    );

    Ok(ComparisonReport {
        depth,
        total_nodes,
        matched: tally.matched,
        differed: tally.differed,
        differed_fraction: Fraction::new(tally.differed, total_nodes.max(1)),
        differing_paths_summary: summary,
        patched: patch,
        patched_matched: patch.then_some(tally.matched),
        patched_differed: patch.then_some(tally.differed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_reduces() {
        assert_eq!(
            Fraction::new(3280, 19680),
            Fraction {
                numerator: 1,
                denominator: 6
            }
        );
        assert_eq!(
            Fraction::new(0, 5),
            Fraction {
                numerator: 0,
                denominator: 1
            }
        );
        assert_eq!(
            Fraction::new(7, 7),
            Fraction {
                numerator: 1,
                denominator: 1
            }
        );
        assert_eq!(Fraction::new(121, 726).to_string(), "1/6");
    }

    #[test]
    fn depth_one_unpatched() {
        let r = compare_forest(1, false).unwrap();
        assert_eq!(r.total_nodes, 6);
        assert_eq!(r.matched, 5);
        assert_eq!(r.differed, 1);
        assert_eq!(r.differed_fraction, Fraction::new(1, 6));
        assert_eq!(
            r.differing_paths_summary,
            DifferingSummary::Subtree {
                root: "(2,1):[A]".into()
            }
        );
        assert_eq!(r.patched_matched, None);
        assert!(r.conjecture_holds());
    }

    #[test]
    fn depth_two_unpatched() {
        let r = compare_forest(2, false).unwrap();
        assert_eq!(r.total_nodes, 24);
        assert_eq!(r.differed, 4);
        assert!(r.conjecture_holds());
    }

    #[test]
    fn depth_five_unpatched() {
        let r = compare_forest(5, false).unwrap();
        assert_eq!(r.total_nodes, 726);
        assert_eq!(r.differed, 121);
        assert_eq!(r.differed_fraction, Fraction::new(1, 6));
        assert!(r.conjecture_holds());
    }

    #[test]
    fn depth_four_patched() {
        let r = compare_forest(4, true).unwrap();
        assert_eq!(r.total_nodes, 240);
        assert_eq!(r.differed, 0);
        assert_eq!(r.matched, 240);
        assert_eq!(r.differing_paths_summary, DifferingSummary::Empty);
        assert_eq!(r.patched_matched, Some(240));
        assert_eq!(r.patched_differed, Some(0));
        assert!(r.conjecture_holds());
    }

    #[test]
    fn tampered_reports_do_not_hold() {
        let mut r = compare_forest(2, false).unwrap();
        r.differed += 1;
        assert!(!r.conjecture_holds());

        let mut r = compare_forest(2, true).unwrap();
        r.differed = 1;
        r.matched -= 1;
        assert!(!r.conjecture_holds());

        let mut r = compare_forest(2, false).unwrap();
        r.differing_paths_summary = DifferingSummary::Empty;
        assert!(!r.conjecture_holds());
    }

    #[test]
    fn report_serializes_with_stable_field_shapes() {
        let r = compare_forest(1, false).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["differed_fraction"]["numerator"], 1);
        assert_eq!(json["differed_fraction"]["denominator"], 6);
        assert_eq!(json["differing_paths_summary"]["kind"], "subtree");
        assert_eq!(json["differing_paths_summary"]["root"], "(2,1):[A]");
        assert_eq!(json["patched_matched"], serde_json::Value::Null);

        let back: ComparisonReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn classify_shapes() {
        let empty = BTreeSet::new();
        assert_eq!(classify(0, 0, 4, empty.clone()), DifferingSummary::Empty);
        assert_eq!(
            classify(4, 4, 4, empty),
            DifferingSummary::Subtree {
                root: "(2,1):[A]".into()
            }
        );

        // A differing node outside branch A scatters the summary.
        let mut samples = BTreeSet::new();
        samples.insert(TreePath::new(CoprimePair::MIXED_ROOT, vec![Branch::Plain]));
        samples.insert(TreePath::new(CoprimePair::MIXED_ROOT, vec![Branch::Minus]));
        assert_eq!(
            classify(2, 1, 4, samples),
            DifferingSummary::Scattered {
                samples: vec!["(2,1):[A]".into(), "(2,1):[B]".into()],
            }
        );
    }

    #[test]
    fn sample_list_keeps_the_hundred_smallest() {
        let mut tally = Tally::default();
        // Feed synthetic differing nodes at paths [], [B], [BB], ...; the
        // coefficients (9,9) never match the oracle.
        for len in 0..150usize {
            let path = TreePath::new(CoprimePair::MIXED_ROOT, vec![Branch::Plain; len]);
            let node = TreeNode {
                pair: CoprimePair::new(5, 2).unwrap(),
                bezout: BezoutPair::new(9, 9),
                level: len as u32,
                path,
            };
            tally.record(&node).unwrap();
        }
        assert_eq!(tally.differed, 150);
        assert_eq!(tally.samples.len(), SAMPLE_CAP);
        let longest = tally.samples.last().unwrap();
        assert_eq!(longest.steps.len(), SAMPLE_CAP - 1);
    }
}
