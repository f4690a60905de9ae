//! Labeled plane k-ary trees and their ascent/descent statistics.
//!
//! A plane k-ary tree on `[n] = {1, ..., n}` is a rooted tree in which every
//! node has `k` ordered child slots, each empty or holding one child.  For a
//! non-root node `q` sitting in slot `i` of its parent `p`, the edge is an
//! *i-descent* if `p > q` and an *i-ascent* if `p < q`.  The statistics
//! vectors `dsc(T)` and `asc(T)` record, per slot, how many descents and
//! ascents occur.
//!
//! Four tree classes are defined by forbidding local edge patterns:
//!
//! * *increasing*: no i-descents for any slot `i` (labels grow away from the
//!   root);
//! * *right-increasing*: no k-descents;
//! * *ltree*: no 1-ascents and no k-descents;
//! * *ltree-b*: ltree, and additionally slot `k` of node `1` and slot `1` of
//!   node `n` are empty.
//!
//! Because membership is a conjunction of per-edge conditions, the
//! enumerator prunes forbidden edges as it assigns them, so counting a
//! sparse class never visits the full tree family.
//!
//! The *spine* of a tree is the path of labels from the root to node `n`;
//! its left-to-right maxima (indices whose value exceeds everything before,
//! the final index always included since `n` is the global maximum) drive
//! the inverse bijection to colored rook placements.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, limit, Result};
use crate::multipoly::WeakComposition;
use crate::Limits;

/// A labeled plane k-ary tree on `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneKaryTree {
    n: usize,
    k: usize,
    root: usize,
    /// `parents[label - 1]` is `None` for the root and `(parent, slot)`
    /// otherwise, with slots 1-indexed.
    parents: Vec<Option<(usize, usize)>>,
}

/// Per-slot descent and ascent counts of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStatistics {
    /// `dsc[i]` counts edges where a slot-i child is smaller than its parent.
    pub dsc: WeakComposition,
    /// `asc[i]` counts edges where a slot-i child is larger than its parent.
    pub asc: WeakComposition,
}

/// The tree classes the engine counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeClass {
    /// Every plane k-ary tree.
    All,
    /// No i-descents for any slot i.
    Increasing,
    /// No k-descents.
    RightIncreasing,
    /// No 1-ascents and no k-descents.
    Ltree,
    /// Ltree with slot k of node 1 and slot 1 of node n both empty.
    LtreeB,
}

impl TreeClass {
    /// Whether an edge (child `q` in slot `s` of parent `p`) is permitted in
    /// a tree on `[n]` of this class.  Conjunction over all edges equals
    /// class membership.
    fn edge_allowed(self, n: usize, k: usize, q: usize, p: usize, s: usize) -> bool {
        match self {
            TreeClass::All => true,
            TreeClass::Increasing => p < q,
            TreeClass::RightIncreasing => !(s == k && p > q),
            TreeClass::Ltree => !(s == 1 && p < q) && !(s == k && p > q),
            TreeClass::LtreeB => {
                TreeClass::Ltree.edge_allowed(n, k, q, p, s)
                    && !(p == 1 && s == k)
                    && !(p == n && s == 1)
            }
        }
    }

    fn requires_k_at_least_two(self) -> bool {
        !matches!(self, TreeClass::All)
    }
}

impl PlaneKaryTree {
    /// Validates a tree given its parent/slot table (`parents[label - 1]`,
    /// root entry `None`).
    pub fn new(
        n: usize,
        k: usize,
        root: usize,
        parents: Vec<Option<(usize, usize)>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(invalid("a tree needs at least one node"));
        }
        if k == 0 {
            return Err(invalid("trees need at least one child slot"));
        }
        if root == 0 || root > n {
            return Err(invalid(format!("root {root} outside 1..={n}")));
        }
        if parents.len() != n {
            return Err(invalid(format!(
                "parent table has {} entries for {n} nodes",
                parents.len()
            )));
        }
        let mut slot_used = vec![false; n * k];
        for (idx, entry) in parents.iter().enumerate() {
            let q = idx + 1;
            match entry {
                None => {
                    if q != root {
                        return Err(invalid(format!("non-root node {q} lacks a parent")));
                    }
                }
                Some((p, s)) => {
                    if q == root {
                        return Err(invalid("the root must not have a parent"));
                    }
                    if *p == 0 || *p > n {
                        return Err(invalid(format!("parent {p} outside 1..={n}")));
                    }
                    if *s == 0 || *s > k {
                        return Err(invalid(format!("slot {s} outside 1..={k}")));
                    }
                    let key = (*p - 1) * k + (*s - 1);
                    if slot_used[key] {
                        return Err(invalid(format!("slot {s} of node {p} holds two children")));
                    }
                    slot_used[key] = true;
                }
            }
        }
        // Acyclicity: every node must reach the root in at most n-1 steps.
        for start in 1..=n {
            let mut cur = start;
            let mut steps = 0usize;
            while let Some((p, _)) = parents[cur - 1] {
                cur = p;
                steps += 1;
                if steps >= n {
                    return Err(invalid(format!("cycle through node {start}")));
                }
            }
            if cur != root {
                return Err(invalid("parent table is disconnected"));
            }
        }
        Ok(PlaneKaryTree { n, k, root, parents })
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Slots per node.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The root label.
    pub fn root(&self) -> usize {
        self.root
    }

    /// `(parent, slot)` of a node, or `None` for the root.
    pub fn parent_slot(&self, label: usize) -> Option<(usize, usize)> {
        self.parents[label - 1]
    }

    /// The child in slot `s` of node `p`, if any.
    pub fn child(&self, p: usize, s: usize) -> Option<usize> {
        (1..=self.n).find(|&q| self.parents[q - 1] == Some((p, s)))
    }

    /// All children of a node as `(slot, child)` pairs, slot-ascending.
    pub fn children(&self, p: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (1..=self.n)
            .filter_map(|q| match self.parents[q - 1] {
                Some((pp, s)) if pp == p => Some((s, q)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Per-slot descent and ascent counts.
    pub fn statistics(&self) -> TreeStatistics {
        let mut dsc = WeakComposition::zeros(self.k);
        let mut asc = WeakComposition::zeros(self.k);
        for q in 1..=self.n {
            if let Some((p, s)) = self.parents[q - 1] {
                if p > q {
                    dsc.bump(s);
                } else {
                    asc.bump(s);
                }
            }
        }
        TreeStatistics { dsc, asc }
    }

    /// The path of labels from the root to node `n` (inclusive on both
    /// ends; a single entry when the root is `n`).
    pub fn spine(&self) -> Vec<usize> {
        let mut path = vec![self.n];
        let mut cur = self.n;
        while let Some((p, _)) = self.parents[cur - 1] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Class membership test; the restrictive classes require `k >= 2`.
    pub fn is_in_class(&self, class: TreeClass) -> Result<bool> {
        if class.requires_k_at_least_two() && self.k < 2 {
            return Err(invalid("class predicates require k >= 2"));
        }
        Ok((1..=self.n).all(|q| match self.parents[q - 1] {
            Some((p, s)) => class.edge_allowed(self.n, self.k, q, p, s),
            None => true,
        }))
    }
}

/// Indices (1-based) of the left-to-right maxima of a sequence: position
/// `i` qualifies when `seq[i]` strictly exceeds every earlier entry.  The
/// first index always qualifies, and so does the last whenever the sequence
/// ends in its global maximum (as tree spines do, ending in `n`).
pub fn left_to_right_maxima(seq: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best: Option<usize> = None;
    for (i, &x) in seq.iter().enumerate() {
        if best.is_none_or(|b| x > b) {
            out.push(i + 1);
            best = Some(x);
        }
    }
    out
}

/// `|T^pl_{n,k}| = (kn)(kn-1)...(kn-n+2)` — the falling product with `n-1`
/// factors.
fn plane_tree_count(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..n.saturating_sub(1) {
        acc *= BigInt::from(k * n - i);
    }
    acc
}

/// Closed-form ltree count
/// `l_{n,k} = 2^{-n} Σ_{j=0}^{n} C(n,j) (1 + (k-2) n + j)^{n-1}`.
///
/// # Panics
/// If the binomial sum is not divisible by `2^n` (internal inconsistency).
pub fn ltree_count_formula(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k < 2 {
        return Err(invalid("ltree counting requires n >= 1 and k >= 2"));
    }
    let mut sum = BigInt::zero();
    for j in 0..=n {
        let base = BigInt::from(1 + (k - 2) * n + j);
        sum += binomial(BigInt::from(n), BigInt::from(j)) * base.pow((n - 1) as u32);
    }
    let (q, r) = num_integer::div_rem(sum, BigInt::from(2).pow(n as u32));
    assert!(r.is_zero(), "ltree closed form produced a non-integer");
    Ok(q)
}

/// Closed-form increasing-tree count `Π_{i=1}^{n-1} (1 + i(k-1))`.
pub fn increasing_count_formula(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k < 2 {
        return Err(invalid("increasing-tree counting requires n >= 1 and k >= 2"));
    }
    let mut acc = BigInt::one();
    for i in 1..n {
        acc *= BigInt::from(1 + i * (k - 1));
    }
    Ok(acc)
}

/// Visits every tree of the class exactly once, pruning forbidden edges
/// during construction.  Trees are produced in lexicographic order of
/// `(root, parent/slot list by label)`.  Fails once more than
/// `limits.max_enum` trees have been visited.
pub fn for_each_tree_in_class<F>(
    n: usize,
    k: usize,
    class: TreeClass,
    limits: &Limits,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&PlaneKaryTree) -> Result<()>,
{
    if n == 0 || k == 0 {
        return Err(invalid("tree enumeration requires n >= 1 and k >= 1"));
    }
    if class.requires_k_at_least_two() && k < 2 {
        return Err(invalid("class predicates require k >= 2"));
    }
    struct State<'a, F> {
        n: usize,
        k: usize,
        class: TreeClass,
        parents: Vec<Option<(usize, usize)>>,
        slot_used: Vec<bool>,
        visited: u64,
        max_enum: u64,
        visit: &'a mut F,
    }
    impl<F> State<'_, F>
    where
        F: FnMut(&PlaneKaryTree) -> Result<()>,
    {
        /// Does assigning `q -> p` close a directed cycle through edges
        /// assigned so far?
        fn creates_cycle(&self, q: usize, p: usize) -> bool {
            let mut cur = p;
            loop {
                if cur == q {
                    return true;
                }
                match self.parents[cur - 1] {
                    Some((next, _)) => cur = next,
                    None => return false,
                }
            }
        }

        fn rec(&mut self, root: usize, label: usize) -> Result<()> {
            if label > self.n {
                if self.visited >= self.max_enum {
                    return Err(limit(format!(
                        "tree enumeration exceeds cap {}",
                        self.max_enum
                    )));
                }
                self.visited += 1;
                let tree = PlaneKaryTree {
                    n: self.n,
                    k: self.k,
                    root,
                    parents: self.parents.clone(),
                };
                return (self.visit)(&tree);
            }
            if label == root {
                return self.rec(root, label + 1);
            }
            for p in 1..=self.n {
                for s in 1..=self.k {
                    let key = (p - 1) * self.k + (s - 1);
                    if self.slot_used[key]
                        || !self.class.edge_allowed(self.n, self.k, label, p, s)
                        || self.creates_cycle(label, p)
                    {
                        continue;
                    }
                    self.slot_used[key] = true;
                    self.parents[label - 1] = Some((p, s));
                    self.rec(root, label + 1)?;
                    self.parents[label - 1] = None;
                    self.slot_used[key] = false;
                }
            }
            Ok(())
        }
    }
    let mut state = State {
        n,
        k,
        class,
        parents: vec![None; n],
        slot_used: vec![false; n * k],
        visited: 0,
        max_enum: limits.max_enum,
        visit: &mut visit,
    };
    for root in 1..=n {
        state.rec(root, 1)?;
    }
    Ok(())
}

/// Materializes every plane k-ary tree on `[n]` under the default caps.
pub fn enumerate_plane_trees(n: usize, k: usize) -> Result<Vec<PlaneKaryTree>> {
    enumerate_plane_trees_with(n, k, &Limits::default())
}

/// Materializes every plane k-ary tree on `[n]`; `(kn)_{n-1}` must not
/// exceed `limits.max_enum`.
pub fn enumerate_plane_trees_with(n: usize, k: usize, limits: &Limits) -> Result<Vec<PlaneKaryTree>> {
    if n == 0 || k == 0 {
        return Err(invalid("tree enumeration requires n >= 1 and k >= 1"));
    }
    let total = plane_tree_count(n, k);
    if total > BigInt::from(limits.max_enum) {
        return Err(limit(format!(
            "{total} plane trees exceed cap {}",
            limits.max_enum
        )));
    }
    let mut out = Vec::new();
    for_each_tree_in_class(n, k, TreeClass::All, limits, |t| {
        out.push(t.clone());
        Ok(())
    })?;
    Ok(out)
}

/// Counts the trees of a class under the default caps.
pub fn count_class(n: usize, k: usize, class: TreeClass) -> Result<BigInt> {
    count_class_with(n, k, class, &Limits::default())
}

/// Counts the trees of a class.
///
/// Classes with a closed form (`All`, `Increasing`, `Ltree`) are counted by
/// formula and, whenever the class itself fits below `limits.max_enum`,
/// cross-checked against direct enumeration; a disagreement would be an
/// internal inconsistency and panics.  The remaining classes are counted by
/// pruned enumeration alone and fail with a resource-limit error beyond the
/// cap.
pub fn count_class_with(n: usize, k: usize, class: TreeClass, limits: &Limits) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return Err(invalid("tree counting requires n >= 1 and k >= 1"));
    }
    if class.requires_k_at_least_two() && k < 2 {
        return Err(invalid("class predicates require k >= 2"));
    }
    let formula = match class {
        TreeClass::All => Some(plane_tree_count(n, k)),
        TreeClass::Increasing => Some(increasing_count_formula(n, k)?),
        TreeClass::Ltree => Some(ltree_count_formula(n, k)?),
        TreeClass::RightIncreasing | TreeClass::LtreeB => None,
    };
    match formula {
        Some(count) => {
            if count <= BigInt::from(limits.max_enum) {
                let mut seen = BigInt::zero();
                for_each_tree_in_class(n, k, class, limits, |_| {
                    seen += 1;
                    Ok(())
                })?;
                assert_eq!(
                    seen, count,
                    "closed form and enumeration disagree for {class:?} at n={n}, k={k}"
                );
            }
            Ok(count)
        }
        None => {
            let mut seen = BigInt::zero();
            for_each_tree_in_class(n, k, class, limits, |_| {
                seen += 1;
                Ok(())
            })?;
            Ok(seen)
        }
    }
}

/// JSON form of a tree: nodes sorted by label with the root entry omitted,
/// e.g. `{"n":2,"k":2,"root":1,"nodes":[{"label":2,"parent":1,"slot":1}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub k: usize,
    pub root: usize,
    pub nodes: Vec<TreeNodeJson>,
}

/// One non-root node of [`TreeJson`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeNodeJson {
    pub label: usize,
    pub parent: usize,
    pub slot: usize,
}

impl TreeJson {
    /// Serializes a tree.
    pub fn from_tree(tree: &PlaneKaryTree) -> Self {
        let nodes = (1..=tree.n())
            .filter_map(|q| {
                tree.parent_slot(q).map(|(parent, slot)| TreeNodeJson {
                    label: q,
                    parent,
                    slot,
                })
            })
            .collect();
        TreeJson {
            n: tree.n(),
            k: tree.k(),
            root: tree.root(),
            nodes,
        }
    }

    /// Parses and validates a tree.
    pub fn to_tree(&self) -> Result<PlaneKaryTree> {
        let mut parents = vec![None; self.n];
        for node in &self.nodes {
            if node.label == 0 || node.label > self.n {
                return Err(invalid(format!("label {} outside 1..={}", node.label, self.n)));
            }
            if parents[node.label - 1].is_some() {
                return Err(invalid(format!("label {} appears twice", node.label)));
            }
            parents[node.label - 1] = Some((node.parent, node.slot));
        }
        PlaneKaryTree::new(self.n, self.k, self.root, parents)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, k: usize, root: usize, edges: &[(usize, usize, usize)]) -> PlaneKaryTree {
        let mut parents = vec![None; n];
        for &(label, parent, slot) in edges {
            parents[label - 1] = Some((parent, slot));
        }
        PlaneKaryTree::new(n, k, root, parents).unwrap()
    }

    #[test]
    fn validation_catches_malformed_trees() {
        // Two children in one slot.
        assert!(PlaneKaryTree::new(
            3,
            2,
            1,
            vec![None, Some((1, 1)), Some((1, 1))]
        )
        .is_err());
        // A two-cycle.
        assert!(PlaneKaryTree::new(
            3,
            2,
            1,
            vec![None, Some((3, 1)), Some((2, 1))]
        )
        .is_err());
        // The root must have no parent and everyone else must have one.
        assert!(PlaneKaryTree::new(2, 2, 1, vec![Some((2, 1)), Some((1, 1))]).is_err());
        assert!(PlaneKaryTree::new(2, 2, 1, vec![None, None]).is_err());
        // Slot out of range.
        assert!(PlaneKaryTree::new(2, 2, 1, vec![None, Some((1, 3))]).is_err());
    }

    #[test]
    fn statistics_and_children_on_a_small_tree() {
        // Root 2 with 1 in slot 1 (a 1-descent) and 3 in slot 2 (a 2-ascent).
        let t = tree(3, 2, 2, &[(1, 2, 1), (3, 2, 2)]);
        let stats = t.statistics();
        assert_eq!(stats.dsc.parts(), &[1, 0]);
        assert_eq!(stats.asc.parts(), &[0, 1]);
        assert_eq!(t.children(2), vec![(1, 1), (2, 3)]);
        assert_eq!(t.child(2, 2), Some(3));
        assert_eq!(t.child(1, 1), None);
        assert_eq!(t.spine(), vec![2, 3]);
    }

    #[test]
    fn class_membership_on_the_four_two_node_trees() {
        // (root, slot of the other node) -> expected class memberships.
        let cases = [
            // root 1, child 2 in slot 1: a 1-ascent.
            (1, 1, true, true, false, false),
            // root 1, child 2 in slot 2: a 2-ascent.
            (1, 2, true, true, true, false),
            // root 2, child 1 in slot 1: a 1-descent.
            (2, 1, false, true, true, false),
            // root 2, child 1 in slot 2: a 2-descent.
            (2, 2, false, false, false, false),
        ];
        for (root, slot, inc, rinc, ltree, ltree_b) in cases {
            let child = 3 - root;
            let t = tree(2, 2, root, &[(child, root, slot)]);
            assert_eq!(t.is_in_class(TreeClass::Increasing).unwrap(), inc);
            assert_eq!(t.is_in_class(TreeClass::RightIncreasing).unwrap(), rinc);
            assert_eq!(t.is_in_class(TreeClass::Ltree).unwrap(), ltree);
            assert_eq!(t.is_in_class(TreeClass::LtreeB).unwrap(), ltree_b);
            assert!(t.is_in_class(TreeClass::All).unwrap());
        }
    }

    #[test]
    fn class_predicates_require_binary_slots() {
        let t = tree(2, 1, 1, &[(2, 1, 1)]);
        assert!(t.is_in_class(TreeClass::Ltree).is_err());
        assert!(t.is_in_class(TreeClass::All).is_ok());
    }

    #[test]
    fn left_to_right_maxima_examples() {
        assert_eq!(left_to_right_maxima(&[5, 4, 3, 7, 20, 12, 21]), vec![1, 4, 5, 7]);
        assert_eq!(left_to_right_maxima(&[1]), vec![1]);
        assert_eq!(left_to_right_maxima(&[3, 2, 1]), vec![1]);
        assert_eq!(left_to_right_maxima(&[1, 2, 3]), vec![1, 2, 3]);
    }

    #[test]
    fn enumeration_counts_match_falling_product() {
        // |T^pl_{n,k}| = (kn)(kn-1)...(kn-n+2).
        for (n, k, expected) in [(1, 2, 1), (2, 2, 4), (3, 2, 30), (2, 3, 6), (3, 3, 72)] {
            let trees = enumerate_plane_trees(n, k).unwrap();
            assert_eq!(trees.len(), expected, "n={n}, k={k}");
            // No duplicates, and every tree validates.
            for (i, t) in trees.iter().enumerate() {
                let rebuilt =
                    PlaneKaryTree::new(t.n(), t.k(), t.root(), t.parents.clone()).unwrap();
                assert_eq!(&rebuilt, t);
                for u in trees.iter().skip(i + 1) {
                    assert_ne!(t, u);
                }
            }
        }
    }

    #[test]
    fn class_counts_on_two_nodes() {
        let n = 2;
        let k = 2;
        assert_eq!(count_class(n, k, TreeClass::All).unwrap(), BigInt::from(4));
        assert_eq!(count_class(n, k, TreeClass::Increasing).unwrap(), BigInt::from(2));
        assert_eq!(count_class(n, k, TreeClass::RightIncreasing).unwrap(), BigInt::from(3));
        assert_eq!(count_class(n, k, TreeClass::Ltree).unwrap(), BigInt::from(2));
        assert_eq!(count_class(n, k, TreeClass::LtreeB).unwrap(), BigInt::from(0));
    }

    #[test]
    fn ltree_counts_match_known_sequence() {
        // l_{n,2} = 1, 2, 7, 36, 246 for n = 1..5; count_class cross-checks
        // the closed form against pruned enumeration internally.
        let expected = [1, 2, 7, 36, 246];
        for (i, &e) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(count_class(n, 2, TreeClass::Ltree).unwrap(), BigInt::from(e));
        }
    }

    #[test]
    fn pruned_class_enumeration_agrees_with_filtering() {
        // Enumerating a class directly must equal filtering the full family.
        for n in 1..=5 {
            for k in 2..=3 {
                let all = enumerate_plane_trees(n, k).unwrap();
                for class in [
                    TreeClass::Increasing,
                    TreeClass::RightIncreasing,
                    TreeClass::Ltree,
                    TreeClass::LtreeB,
                ] {
                    let filtered = all
                        .iter()
                        .filter(|t| t.is_in_class(class).unwrap())
                        .count();
                    let counted = count_class(n, k, class).unwrap();
                    assert_eq!(
                        counted,
                        BigInt::from(filtered),
                        "class {class:?} at n={n}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn single_node_tree_is_degenerate_everywhere() {
        let t = tree(1, 2, 1, &[]);
        assert_eq!(t.spine(), vec![1]);
        assert_eq!(t.statistics().dsc.total(), 0);
        // With no edges and no children at all, every class contains it —
        // including ltree-b, whose slot conditions are vacuous here.
        for class in [
            TreeClass::Increasing,
            TreeClass::RightIncreasing,
            TreeClass::Ltree,
            TreeClass::LtreeB,
        ] {
            assert!(t.is_in_class(class).unwrap());
        }
        assert_eq!(count_class(1, 2, TreeClass::LtreeB).unwrap(), BigInt::one());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let limits = Limits {
            max_enum: 10,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_plane_trees_with(3, 2, &limits),
            Err(crate::Error::ResourceLimit(_))
        ));
        // The pruned ltree enumeration at the same size fits under a cap the
        // full family would burst.
        let limits = Limits {
            max_enum: 7,
            ..Limits::default()
        };
        assert_eq!(
            count_class_with(3, 2, TreeClass::Ltree, &limits).unwrap(),
            BigInt::from(7)
        );
    }

    #[test]
    fn json_round_trip_and_shape() {
        let t = tree(3, 2, 2, &[(1, 2, 1), (3, 2, 2)]);
        let json = TreeJson::from_tree(&t);
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(
            text,
            r#"{"n":3,"k":2,"root":2,"nodes":[{"label":1,"parent":2,"slot":1},{"label":3,"parent":2,"slot":2}]}"#
        );
        let back: TreeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_tree().unwrap(), t);
    }

    #[test]
    fn increasing_formula_small_values() {
        // Π_{i=1}^{n-1} (1 + i(k-1)): binary 1, 2, 6, 24; ternary 1, 3, 15, 105.
        assert_eq!(increasing_count_formula(1, 2).unwrap(), BigInt::from(1));
        assert_eq!(increasing_count_formula(3, 2).unwrap(), BigInt::from(6));
        assert_eq!(increasing_count_formula(4, 2).unwrap(), BigInt::from(2 * 3 * 4));
        assert_eq!(increasing_count_formula(4, 3).unwrap(), BigInt::from(3 * 5 * 7));
    }
}
