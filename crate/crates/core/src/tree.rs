//! Binary trees, their symmetric order, completion and canopy.

use std::fmt;

use crate::limits::Limits;
use crate::{Error, Result};

/// A rooted binary tree: either empty or a vertex with a left and a right
/// subtree.
///
/// The derived ordering compares the empty tree below every vertex and then
/// compares left subtrees before right subtrees; enumerators rely on it only
/// for determinism.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryTree(Option<Box<Node>>);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub left: BinaryTree,
    pub right: BinaryTree,
}

/// Letter of a canopy word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanopyLetter {
    /// The vertex has a right son (equivalently, the leaf is a left daughter).
    A,
    /// The vertex has no right son.
    B,
}

/// Canopy of a binary tree: one letter per vertex in symmetric order, the
/// last vertex dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanopyWord(pub Vec<CanopyLetter>);

impl fmt::Display for CanopyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                CanopyLetter::A => "a",
                CanopyLetter::B => "b",
            })?;
        }
        Ok(())
    }
}

impl CanopyWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Per-vertex data collected by an inorder walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexInfo {
    /// Preorder label (root = 0, then the left subtree, then the right one).
    pub label: usize,
    pub has_left: bool,
    pub has_right: bool,
    /// Number of right edges on the path from the root to this vertex.
    pub right_height: usize,
}

impl BinaryTree {
    pub const fn empty() -> Self {
        BinaryTree(None)
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree(Some(Box::new(Node { left, right })))
    }

    /// A single vertex.
    pub fn leaf() -> Self {
        Self::node(Self::empty(), Self::empty())
    }

    /// `n` vertices linked by left edges.
    pub fn left_chain(n: usize) -> Self {
        (0..n).fold(Self::empty(), |acc, _| Self::node(acc, Self::empty()))
    }

    /// `n` vertices linked by right edges.
    pub fn right_chain(n: usize) -> Self {
        (0..n).fold(Self::empty(), |acc, _| Self::node(Self::empty(), acc))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn root(&self) -> Option<&Node> {
        self.0.as_deref()
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        self.root().map(|n| &n.left)
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        self.root().map(|n| &n.right)
    }

    pub fn into_parts(self) -> Option<(BinaryTree, BinaryTree)> {
        self.0.map(|n| {
            let Node { left, right } = *n;
            (left, right)
        })
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        match self.root() {
            None => 0,
            Some(n) => 1 + n.left.size() + n.right.size(),
        }
    }

    /// Vertex count of the left branch (root, its left son, ...).
    pub fn left_branch_len(&self) -> usize {
        let mut len = 0;
        let mut cur = self;
        while let Some(n) = cur.root() {
            len += 1;
            cur = &n.left;
        }
        len
    }

    /// Vertex count of the right branch.
    pub fn right_branch_len(&self) -> usize {
        let mut len = 0;
        let mut cur = self;
        while let Some(n) = cur.root() {
            len += 1;
            cur = &n.right;
        }
        len
    }

    /// `lb(B)`: left branch length diminished by one (0 for the empty tree).
    pub fn lb(&self) -> usize {
        self.left_branch_len().saturating_sub(1)
    }

    /// `rb(B)`: right branch length diminished by one.
    pub fn rb(&self) -> usize {
        self.right_branch_len().saturating_sub(1)
    }

    /// Walk the vertices in symmetric order (left subtree, root, right subtree).
    pub fn inorder(&self) -> Vec<VertexInfo> {
        fn walk(t: &BinaryTree, next_label: &mut usize, rh: usize, out: &mut Vec<VertexInfo>) {
            let Some(n) = t.root() else { return };
            let label = *next_label;
            *next_label += 1;
            // Reserve labels for the left subtree before emitting this vertex.
            walk(&n.left, next_label, rh, out);
            out.push(VertexInfo {
                label,
                has_left: !n.left.is_empty(),
                has_right: !n.right.is_empty(),
                right_height: rh,
            });
            walk(&n.right, next_label, rh + 1, out);
        }
        let mut out = Vec::with_capacity(self.size());
        walk(self, &mut 0, 0, &mut out);
        out
    }

    /// Preorder labels of the vertices, listed in symmetric order.
    pub fn symmetric_order(&self) -> Vec<usize> {
        self.inorder().into_iter().map(|v| v.label).collect()
    }

    /// The complete binary tree obtained by giving every missing son an
    /// external vertex. The original vertices become the internal ones, so a
    /// tree with `n` vertices maps to one with `2n + 1`.
    pub fn complete(&self) -> BinaryTree {
        match self.root() {
            None => BinaryTree::leaf(),
            Some(n) => BinaryTree::node(n.left.complete(), n.right.complete()),
        }
    }

    /// Whether no vertex has exactly one son.
    pub fn is_complete(&self) -> bool {
        match self.root() {
            None => true,
            Some(n) => {
                n.left.is_empty() == n.right.is_empty()
                    && n.left.is_complete()
                    && n.right.is_complete()
            }
        }
    }

    /// Canopy from the vertex definition: the `i`-th letter is `a` iff the
    /// `i`-th vertex in symmetric order has a right son.
    ///
    /// Returns an empty word for the empty tree.
    pub fn canopy(&self) -> CanopyWord {
        let mut letters: Vec<CanopyLetter> = self
            .inorder()
            .into_iter()
            .map(|v| {
                if v.has_right {
                    CanopyLetter::A
                } else {
                    CanopyLetter::B
                }
            })
            .collect();
        letters.pop();
        CanopyWord(letters)
    }

    /// Canopy read from the leaves of the completed tree: in symmetric order,
    /// a left daughter gives `a` and a right daughter gives `b`; the first and
    /// the last leaf are skipped.
    pub fn canopy_from_leaves(&self) -> CanopyWord {
        fn walk(t: &BinaryTree, is_left: bool, out: &mut Vec<CanopyLetter>) {
            match t.root() {
                Some(n) if !n.left.is_empty() => {
                    walk(&n.left, true, out);
                    walk(&n.right, false, out);
                }
                _ => out.push(if is_left {
                    CanopyLetter::A
                } else {
                    CanopyLetter::B
                }),
            }
        }
        let full = self.complete();
        let mut leaves = Vec::new();
        if let Some(n) = full.root() {
            if !n.left.is_empty() {
                walk(&n.left, true, &mut leaves);
                walk(&n.right, false, &mut leaves);
            }
        }
        if leaves.len() < 2 {
            return CanopyWord(Vec::new());
        }
        leaves.pop();
        leaves.remove(0);
        CanopyWord(leaves)
    }
}

/// Enumerate every binary tree with `n` vertices, in a deterministic order.
pub fn enumerate_trees(n: usize, limits: &Limits) -> Result<Vec<BinaryTree>> {
    if n > limits.max_enumeration {
        return Err(Error::CapExceeded {
            what: "tree enumeration",
            requested: n,
            cap: limits.max_enumeration,
        });
    }
    Ok(all_trees_up_to(n).swap_remove(n))
}

/// `table[m]` lists all trees with `m` vertices, for `m = 0..=n`.
fn all_trees_up_to(n: usize) -> Vec<Vec<BinaryTree>> {
    let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::empty()]];
    for m in 1..=n {
        let mut level = Vec::new();
        for left_size in 0..m {
            let right_size = m - 1 - left_size;
            for l in &table[left_size] {
                for r in &table[right_size] {
                    level.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(level);
    }
    table
}

impl fmt::Display for BinaryTree {
    /// Empty trees print as `.`, vertices as `(left right)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            None => f.write_str("."),
            Some(n) => write!(f, "({} {})", n.left, n.right),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.left, self.right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::catalan;

    fn word(s: &str) -> CanopyWord {
        CanopyWord(
            s.chars()
                .map(|c| {
                    if c == 'a' {
                        CanopyLetter::A
                    } else {
                        CanopyLetter::B
                    }
                })
                .collect(),
        )
    }

    fn full3() -> BinaryTree {
        BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf())
    }

    #[test]
    fn symmetric_order_examples() {
        assert_eq!(BinaryTree::leaf().symmetric_order(), vec![0]);
        assert_eq!(BinaryTree::left_chain(2).symmetric_order(), vec![1, 0]);
        assert_eq!(full3().symmetric_order(), vec![1, 0, 2]);
    }

    #[test]
    fn canopy_examples() {
        assert_eq!(BinaryTree::leaf().canopy(), word(""));
        assert_eq!(BinaryTree::right_chain(2).canopy(), word("a"));
        assert_eq!(full3().canopy(), word("ba"));
    }

    #[test]
    fn completion_sizes() {
        assert_eq!(BinaryTree::empty().complete(), BinaryTree::leaf());
        assert_eq!(BinaryTree::leaf().complete().size(), 3);
        let c = BinaryTree::right_chain(2).complete();
        assert_eq!(c.size(), 5);
        assert!(c.is_complete());
        let internal = c.size() - c.inorder().iter().filter(|v| !v.has_left).count();
        assert_eq!(internal, 2);
    }

    #[test]
    fn branch_lengths() {
        let t = full3();
        assert_eq!((t.lb(), t.rb()), (1, 1));
        assert_eq!(BinaryTree::right_chain(4).rb(), 3);
        assert_eq!(BinaryTree::right_chain(4).lb(), 0);
    }

    #[test]
    fn enumeration_counts() {
        let limits = Limits::default();
        for n in 0..=10 {
            let trees = enumerate_trees(n, &limits).unwrap();
            assert_eq!(trees.len() as u64, catalan(n as u32), "n = {n}");
        }
        assert_eq!(enumerate_trees(3, &limits).unwrap().len(), 5);
        assert_eq!(enumerate_trees(10, &limits).unwrap().len(), 16796);
    }

    #[test]
    fn enumeration_cap() {
        let limits = Limits::default().with_enumeration(4);
        assert!(matches!(
            enumerate_trees(5, &limits),
            Err(Error::CapExceeded {
                requested: 5,
                cap: 4,
                ..
            })
        ));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let trees = enumerate_trees(8, &Limits::default()).unwrap();
        let set: std::collections::HashSet<_> = trees.iter().collect();
        assert_eq!(set.len(), trees.len());
        assert!(trees.iter().all(|t| t.size() == 8));
    }

    #[test]
    fn canopy_definitions_agree() {
        let limits = Limits::default();
        for n in 1..=10 {
            for t in enumerate_trees(n, &limits).unwrap() {
                let c = t.canopy();
                assert_eq!(c.len(), n - 1);
                assert_eq!(c, t.canopy_from_leaves(), "tree {t}");
                // The last vertex in symmetric order never has a right son.
                assert!(!t.inorder().last().unwrap().has_right);
            }
        }
    }
}
