//! Streaming enumeration of the two trees, node addressing, and the inverse
//! pair-to-path walk.
//!
//! The forest consists of the tree rooted at (2,1), which reaches every
//! coprime pair of opposite parity, and the tree rooted at (3,1), which
//! reaches every coprime pair of two odd values. Nodes are addressed by a
//! [`TreePath`]: the root plus a branch-label word, e.g. `(3,1):[AB]`.

use std::fmt;

use crate::error::Error;
use crate::pair::{verify_bezout, BezoutPair, Branch, CoprimePair};

/// Canonical address of a node: a root and the branch word leading to it.
///
/// Ordering is root-major then lexicographic in the steps (with A < B < C),
/// which matches the serialized level-order within a level.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreePath {
    pub root: CoprimePair,
    pub steps: Vec<Branch>,
}

impl TreePath {
    pub fn new(root: CoprimePair, steps: Vec<Branch>) -> TreePath {
        TreePath { root, steps }
    }

    /// The addressed node's level; the root itself is level 0.
    pub fn level(&self) -> u32 {
        self.steps.len() as u32
    }

    /// The steps as a plain label word, e.g. `"AB"`; empty for the root.
    pub fn word(&self) -> String {
        self.steps.iter().map(|b| b.label()).collect()
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[{}]", self.root, self.word())
    }
}

/// One enumerated node: the pair, its running Bezout coefficients, and where
/// in the tree it sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub pair: CoprimePair,
    pub bezout: BezoutPair,
    pub level: u32,
    pub path: TreePath,
}

/// Total node count over `tree_count` trees at levels 1..=max_level, plus
/// the roots when `include_root`: tree_count * ((3^(max_level+1) - 3)/2 + r).
pub fn node_count(max_level: u32, include_root: bool, tree_count: u64) -> Result<u64, Error> {
    let overflow = || Error::Overflow(format!("node_count to level {max_level}"));
    let pow = max_level
        .checked_add(1)
        .and_then(|e| 3u64.checked_pow(e))
        .ok_or_else(overflow)?;
    let per_tree = (pow - 3) / 2 + u64::from(include_root);
    tree_count.checked_mul(per_tree).ok_or_else(overflow)
}

/// Level-order enumeration of one tree.
///
/// Yields the root first when `include_root`, then every level 1..=max_level
/// in lexicographic path order. The seed must satisfy the Bezout identity at
/// the root. Memory stays proportional to the depth: the iterator keeps only
/// the current path and the node values along it, advancing the path like a
/// base-3 odometer and re-deriving values from the deepest unchanged
/// ancestor.
pub fn enumerate(
    root: CoprimePair,
    seed: BezoutPair,
    max_level: u32,
    include_root: bool,
) -> Result<TreeIter, Error> {
    TreeIter::new(root, Vec::new(), root, seed, max_level, include_root)
}

/// Enumeration of the subtree below `prefix` in a tree rooted at
/// `display_root`, starting from explicitly supplied node values. Reported
/// paths and levels are relative to `display_root`; `max_level` counts
/// levels below the subtree root. This is how a replacement coefficient pair
/// is propagated through a subtree without touching its siblings.
pub(crate) fn enumerate_subtree(
    display_root: CoprimePair,
    prefix: Vec<Branch>,
    subtree_pair: CoprimePair,
    subtree_bezout: BezoutPair,
    max_level: u32,
    include_root: bool,
) -> Result<TreeIter, Error> {
    TreeIter::new(
        display_root,
        prefix,
        subtree_pair,
        subtree_bezout,
        max_level,
        include_root,
    )
}

/// Iterator over [`TreeNode`]s; see [`enumerate`]. Yields at most one `Err`
/// (the first overflow) and is fused afterwards.
#[derive(Debug)]
pub struct TreeIter {
    display_root: CoprimePair,
    prefix: Vec<Branch>,
    max_level: u32,
    include_root: bool,
    /// Current path below the subtree root; length is the local level.
    digits: Vec<Branch>,
    /// Node values along the current path; `states[i]` corresponds to
    /// `digits[..i]`, so the entry at `digits.len()` is the current node.
    states: Vec<(CoprimePair, BezoutPair)>,
    started: bool,
    done: bool,
}

impl TreeIter {
    fn new(
        display_root: CoprimePair,
        prefix: Vec<Branch>,
        subtree_pair: CoprimePair,
        subtree_bezout: BezoutPair,
        max_level: u32,
        include_root: bool,
    ) -> Result<TreeIter, Error> {
        if !verify_bezout(subtree_pair, subtree_bezout)? {
            return Err(Error::SeedMismatch {
                m: subtree_pair.m(),
                n: subtree_pair.n(),
                u: subtree_bezout.u,
                v: subtree_bezout.v,
            });
        }
        Ok(TreeIter {
            display_root,
            prefix,
            max_level,
            include_root,
            digits: Vec::new(),
            states: vec![(subtree_pair, subtree_bezout)],
            started: false,
            done: false,
        })
    }

    fn current_node(&self) -> TreeNode {
        let (pair, bezout) = *self.states.last().expect("states is never empty");
        let mut steps = Vec::with_capacity(self.prefix.len() + self.digits.len());
        steps.extend_from_slice(&self.prefix);
        steps.extend_from_slice(&self.digits);
        let path = TreePath::new(self.display_root, steps);
        TreeNode {
            pair,
            bezout,
            level: path.level(),
            path,
        }
    }

    /// Extend `states` to cover `digits` again after the suffix from
    /// position `from` changed.
    fn refill_states(&mut self, from: usize) -> Result<(), Error> {
        self.states.truncate(from + 1);
        for i in from..self.digits.len() {
            let b = self.digits[i];
            let (p, q) = self.states[i];
            let next = p
                .child(b)
                .and_then(|p2| q.child(b).map(|q2| (p2, q2)))
                .map_err(|e| self.locate_overflow(e, i + 1))?;
            self.states.push(next);
        }
        Ok(())
    }

    /// Rewrites an overflow from a child step as one naming the full path of
    /// the node that could not be built.
    fn locate_overflow(&self, e: Error, len: usize) -> Error {
        match e {
            Error::Overflow(what) => {
                let mut steps = Vec::with_capacity(self.prefix.len() + len);
                steps.extend_from_slice(&self.prefix);
                steps.extend_from_slice(&self.digits[..len]);
                let at = TreePath::new(self.display_root, steps);
                Error::Overflow(format!("{what} (node {at})"))
            }
            other => other,
        }
    }

    /// Move `digits` to the next path in level order. Returns false when the
    /// enumeration is exhausted.
    fn advance(&mut self) -> Result<bool, Error> {
        // Rightmost digit that can still be bumped within the current level.
        let bump = self.digits.iter().rposition(|&b| b != Branch::Swap);
        match bump {
            Some(i) => {
                self.digits[i] = match self.digits[i] {
                    Branch::Minus => Branch::Plain,
                    Branch::Plain => Branch::Swap,
                    Branch::Swap => unreachable!("rposition skips C"),
                };
                for d in &mut self.digits[i + 1..] {
                    *d = Branch::Minus;
                }
                self.refill_states(i)?;
                Ok(true)
            }
            None => {
                // All C (or empty): start the next level over from AAA...A.
                if self.digits.len() as u32 >= self.max_level {
                    return Ok(false);
                }
                self.digits.push(Branch::Minus);
                for d in &mut self.digits {
                    *d = Branch::Minus;
                }
                self.refill_states(0)?;
                Ok(true)
            }
        }
    }
}

impl Iterator for TreeIter {
    type Item = Result<TreeNode, Error>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.include_root {
                return Some(Ok(self.current_node()));
            }
        }
        match self.advance() {
            Ok(true) => Some(Ok(self.current_node())),
            Ok(false) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

impl std::iter::FusedIterator for TreeIter {}

/// Resolves a pair to its unique address in the forest by walking the parent
/// rule until a root is reached.
///
/// With the current node (p,q): if q < p < 2q the node came from its parent
/// (q, 2q-p) via branch A; if 2q < p < 3q from (q, p-2q) via B; if p > 3q
/// from (p-2q, q) via C. The boundary cases p = 2q and p = 3q force q to
/// divide p, so for coprime input they occur only at the roots (2,1) and
/// (3,1); hitting them anywhere else proves the input was not coprime. Each
/// step shrinks p+q, so the walk terminates.
pub fn find_path(pair: CoprimePair) -> Result<TreePath, Error> {
    // i128 keeps 2q and 3q exact even for pairs near the i64 limit; parents
    // are componentwise smaller than their children, so no step grows.
    let mut p = pair.m() as i128;
    let mut q = pair.n() as i128;
    let mut taken = Vec::new();
    let root = loop {
        if (p, q) == (2, 1) {
            break CoprimePair::MIXED_ROOT;
        }
        if (p, q) == (3, 1) {
            break CoprimePair::ODD_ROOT;
        }
        if p < 2 * q {
            taken.push(Branch::Minus);
            let child_p = p;
            p = q;
            q = 2 * q - child_p;
        } else if p == 2 * q || p == 3 * q {
            return Err(Error::NotInForest {
                m: pair.m(),
                n: pair.n(),
            });
        } else if p < 3 * q {
            taken.push(Branch::Plain);
            let child_p = p;
            p = q;
            q = child_p - 2 * q;
        } else {
            taken.push(Branch::Swap);
            p -= 2 * q;
        }
    };
    taken.reverse();
    Ok(TreePath::new(root, taken))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(m: i64, n: i64) -> CoprimePair {
        CoprimePair::new(m, n).unwrap()
    }

    fn bez(u: i64, v: i64) -> BezoutPair {
        BezoutPair::new(u, v)
    }

    fn collect(root: CoprimePair, max_level: u32, include_root: bool) -> Vec<TreeNode> {
        enumerate(root, BezoutPair::STANDARD_SEED, max_level, include_root)
            .unwrap()
            .collect::<Result<Vec<_>, _>>()
            .unwrap()
    }

    #[test]
    fn root_only() {
        let nodes = collect(CoprimePair::ODD_ROOT, 0, true);
        assert_eq!(nodes.len(), 1);
        assert_eq!(nodes[0].pair, pair(3, 1));
        assert_eq!(nodes[0].bezout, bez(0, 1));
        assert_eq!(nodes[0].level, 0);
        assert_eq!(nodes[0].path.to_string(), "(3,1):[]");
    }

    #[test]
    fn level_one_of_odd_tree_matches_figure() {
        let nodes = collect(CoprimePair::ODD_ROOT, 1, false);
        let got: Vec<_> = nodes.iter().map(|t| (t.pair, t.bezout)).collect();
        assert_eq!(
            got,
            vec![
                (pair(5, 3), bez(-1, 2)),
                (pair(7, 3), bez(1, -2)),
                (pair(5, 1), bez(0, 1)),
            ]
        );
    }

    #[test]
    fn level_two_of_odd_tree_matches_figure() {
        let nodes = collect(CoprimePair::ODD_ROOT, 2, false);
        let level2: Vec<_> = nodes
            .iter()
            .filter(|t| t.level == 2)
            .map(|t| (t.pair, t.bezout))
            .collect();
        assert_eq!(
            level2,
            vec![
                (pair(7, 5), bez(-2, 3)),
                (pair(13, 5), bez(2, -5)),
                (pair(11, 3), bez(-1, 4)),
                (pair(11, 7), bez(2, -3)),
                (pair(17, 7), bez(-2, 5)),
                (pair(13, 3), bez(1, -4)),
                (pair(9, 5), bez(-1, 2)),
                (pair(11, 5), bez(1, -2)),
                (pair(7, 1), bez(0, 1)),
            ]
        );
    }

    #[test]
    fn level_order_and_path_order() {
        let nodes = collect(CoprimePair::MIXED_ROOT, 3, true);
        assert_eq!(nodes.len(), 1 + 3 + 9 + 27);
        for w in nodes.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            assert!(a.level <= b.level);
            if a.level == b.level {
                assert!(a.path < b.path, "{} !< {}", a.path, b.path);
            }
            assert_eq!(b.level, b.path.level());
        }
    }

    #[test]
    fn paths_replay_to_their_nodes() {
        for root in [CoprimePair::MIXED_ROOT, CoprimePair::ODD_ROOT] {
            for node in collect(root, 4, true) {
                let mut p = root;
                let mut q = BezoutPair::STANDARD_SEED;
                for &b in &node.path.steps {
                    p = p.child(b).unwrap();
                    q = q.child(b).unwrap();
                }
                assert_eq!((p, q), (node.pair, node.bezout), "at {}", node.path);
            }
        }
    }

    #[test]
    fn subtree_enumeration_relabels_paths() {
        // Subtree under (2,1) branch B, i.e. rooted at (5,2)/(1,-2).
        let nodes: Vec<_> = enumerate_subtree(
            CoprimePair::MIXED_ROOT,
            vec![Branch::Plain],
            pair(5, 2),
            bez(1, -2),
            1,
            true,
        )
        .unwrap()
        .collect::<Result<Vec<_>, _>>()
        .unwrap();
        let got: Vec<_> = nodes
            .iter()
            .map(|t| (t.path.to_string(), t.level, t.pair))
            .collect();
        assert_eq!(
            got,
            vec![
                ("(2,1):[B]".to_string(), 1, pair(5, 2)),
                ("(2,1):[BA]".to_string(), 2, pair(8, 5)),
                ("(2,1):[BB]".to_string(), 2, pair(12, 5)),
                ("(2,1):[BC]".to_string(), 2, pair(9, 2)),
            ]
        );
    }

    #[test]
    fn seed_mismatch_is_rejected() {
        let err = enumerate(CoprimePair::ODD_ROOT, bez(1, 1), 1, false).unwrap_err();
        assert_eq!(
            err,
            Error::SeedMismatch {
                m: 3,
                n: 1,
                u: 1,
                v: 1
            }
        );
    }

    #[test]
    fn overflow_mid_stream_names_the_path_and_fuses() {
        let huge = pair(i64::MAX / 2 + 1, 1);
        let mut it = enumerate(huge, bez(0, 1), 2, false).unwrap();
        match it.next() {
            Some(Err(Error::Overflow(msg))) => {
                assert!(msg.contains(":[A]"), "message should name the path: {msg}");
            }
            other => panic!("expected overflow, got {other:?}"),
        }
        assert!(it.next().is_none());
    }

    #[test]
    fn node_counts() {
        assert_eq!(node_count(13, false, 2).unwrap(), 4_782_966);
        assert_eq!(node_count(0, true, 1).unwrap(), 1);
        assert_eq!(node_count(0, false, 1).unwrap(), 0);
        assert_eq!(node_count(2, false, 1).unwrap(), 12);
        assert_eq!(node_count(8, false, 2).unwrap(), 19_680);
        assert!(matches!(node_count(64, false, 1), Err(Error::Overflow(_))));
    }

    #[test]
    fn enumeration_length_matches_node_count() {
        for level in 0..6 {
            for include_root in [false, true] {
                let n = collect(CoprimePair::ODD_ROOT, level, include_root).len() as u64;
                assert_eq!(n, node_count(level, include_root, 1).unwrap());
            }
        }
    }

    #[test]
    fn find_path_examples() {
        let p = find_path(pair(7, 5)).unwrap();
        assert_eq!(p.to_string(), "(3,1):[AA]");
        let p = find_path(pair(17, 7)).unwrap();
        assert_eq!(p.to_string(), "(3,1):[BB]");
        let p = find_path(pair(3, 1)).unwrap();
        assert_eq!(p.to_string(), "(3,1):[]");
        let p = find_path(pair(2, 1)).unwrap();
        assert_eq!(p.to_string(), "(2,1):[]");
        let p = find_path(pair(5, 2)).unwrap();
        assert_eq!(p.to_string(), "(2,1):[B]");
    }

    #[test]
    fn find_path_rejects_common_factors() {
        for (m, n) in [(4, 2), (6, 3), (9, 6), (10, 4), (100, 64)] {
            assert_eq!(
                find_path(pair(m, n)).unwrap_err(),
                Error::NotInForest { m, n },
                "({m},{n})"
            );
        }
    }

    #[test]
    fn find_path_inverts_enumeration() {
        for root in [CoprimePair::MIXED_ROOT, CoprimePair::ODD_ROOT] {
            for node in collect(root, 5, true) {
                assert_eq!(find_path(node.pair).unwrap(), node.path);
            }
        }
    }

    #[test]
    fn find_path_handles_pairs_near_the_integer_limit() {
        // Ride branch B up from (2,1) until the next child would overflow.
        // Classifying the final pair compares p against 2q and 3q with
        // p close to i64::MAX, which only works in wider arithmetic.
        let mut p = CoprimePair::MIXED_ROOT;
        let mut steps = 0;
        while let Ok(next) = p.child(Branch::Plain) {
            p = next;
            steps += 1;
        }
        assert!(p.m() > i64::MAX / 3);
        let path = find_path(p).unwrap();
        assert_eq!(path.root, CoprimePair::MIXED_ROOT);
        assert_eq!(path.steps, vec![Branch::Plain; steps]);
    }
}
