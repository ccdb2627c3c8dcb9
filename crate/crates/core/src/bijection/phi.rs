//! The bijection between Catalan tableaux of index `n` and binary trees with
//! `n` vertices.
//!
//! The forward map works on a *tailed binary tree*: a binary tree whose right
//! branch `s_0, s_1, …` carries a tail path attached at some `s_r`. The running
//! tableau's border is always the right branch up to `s_r` (as N steps)
//! followed by the tail, so the tail is never stored: `r` is the number of
//! rows of full width, and the first corner of the profile is the top cell of
//! the leftmost column.
//!
//! * 0 in that corner: the row is all zeros; delete it and move the tail to
//!   the father `s_{r-1}`.
//! * 1 in that corner: delete the leftmost column. The subtree rooted at
//!   `s_r` becomes the left subtree of a new vertex put in its place, and the
//!   N steps that followed the deleted E step extend the right branch with
//!   fresh vertices. The tail now hangs at the end of the right branch.
//!
//! When no column is left, the root `s_0` (which never gets a left son) is
//! removed.

use crate::tableau::CatalanTableau;
use crate::tree::BinaryTree;
use crate::{Error, Result};

/// Right branch of a tree, stored as the left subtree of each of its
/// vertices from the root down.
#[derive(Debug, Clone, Default)]
struct Spine(Vec<BinaryTree>);

impl Spine {
    fn from_tree(t: &BinaryTree) -> Spine {
        let mut out = Vec::new();
        let mut cur = t.clone();
        while let Some((left, right)) = cur.into_parts() {
            out.push(left);
            cur = right;
        }
        Spine(out)
    }

    /// Rebuild the tree hanging from vertex `from` of the branch.
    fn tree_from(&self, from: usize) -> BinaryTree {
        self.0[from..]
            .iter()
            .rev()
            .fold(BinaryTree::empty(), |acc, left| {
                BinaryTree::node(left.clone(), acc)
            })
    }

    fn len(&self) -> usize {
        self.0.len()
    }
}

/// Tableau → binary tree.
pub fn phi(t: &CatalanTableau) -> Result<BinaryTree> {
    t.ensure_valid()?;
    let shape = t.shape();
    let mut rows: Vec<Vec<bool>> = t.filling().to_vec();
    rows.resize(shape.rows(), Vec::new());
    let mut width = shape.width();

    let full_rows =
        |rows: &[Vec<bool>], width: usize| rows.iter().take_while(|r| r.len() == width).count();

    // Vertices s_0..s_r of the initial right branch.
    let r0 = full_rows(&rows, width);
    let mut spine = Spine(vec![BinaryTree::empty(); r0 + 1]);

    while width > 0 {
        let r = full_rows(&rows, width);
        let corner = rows[r - 1][width - 1];
        if !corner {
            rows.remove(r - 1);
        } else {
            for row in rows.iter_mut().take(r) {
                row.pop();
            }
            width -= 1;
            let grown = full_rows(&rows, width) - r;
            let pushed_down = spine.tree_from(r);
            spine.0.truncate(r);
            spine.0.push(pushed_down);
            spine
                .0
                .extend(std::iter::repeat_n(BinaryTree::empty(), grown));
        }
    }

    if !spine.0[0].is_empty() {
        return Err(Error::Internal(
            "root of the tailed tree has a left son".into(),
        ));
    }
    Ok(spine.tree_from(1))
}

/// Binary tree → tableau, undoing the forward steps in reverse order.
///
/// The tail sits below the end of the right branch only right after a column
/// step, so a tail strictly inside the branch means the last step deleted a
/// row. Otherwise the last column step created the lowest vertex of the right
/// branch that has a left subtree; if there is none, the start is reached.
pub fn phi_inverse(b: &BinaryTree) -> Result<CatalanTableau> {
    if b.is_empty() {
        return Err(Error::InvalidArgument(
            "the empty tree has no tableau".into(),
        ));
    }
    let mut spine = Spine::from_tree(&BinaryTree::node(BinaryTree::empty(), b.clone()));
    let mut tail = spine.len() - 1;
    let mut rows: Vec<Vec<bool>> = vec![Vec::new(); tail];
    let mut width = 0;

    loop {
        if tail + 1 < spine.len() {
            rows.insert(tail, vec![false; width]);
            tail += 1;
            continue;
        }
        let Some(x) = (1..spine.len()).rev().find(|&i| !spine.0[i].is_empty()) else {
            break;
        };
        let pushed_down = Spine::from_tree(&spine.0[x]);
        spine.0.truncate(x);
        spine.0.extend(pushed_down.0);
        for row in rows.iter_mut().take(x - 1) {
            row.push(false);
        }
        rows[x - 1].push(true);
        width += 1;
        tail = x;
    }

    let k = rows.len();
    CatalanTableau::from_rows(k, rows)
}
