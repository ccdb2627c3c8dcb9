//! Three routes from tableaux and trees to pairs of paths `(ω, η)`:
//!
//! 1. tree → visit word → parallelogram polyomino → pair,
//! 2. tree → pair directly, placing each E step of `η` below the matching E
//!    step of `ω` by the right height of the matching left edge,
//! 3. tableau → pair directly, from the white cells of each column.
//!
//! All three agree (checked exhaustively in the tests and in the acceptance
//! suite).

use crate::path::{Column, DyckLetter, DyckWord, LatticePath, PathPair, Polyomino, Step};
use crate::tableau::CatalanTableau;
use crate::tree::BinaryTree;
use crate::{Error, Result};

/// Visit word of the completed tree in reverse prefix order (root, right
/// subtree, left subtree): `U` for an internal vertex, `D` for a leaf.
pub fn tree_to_dyck(b: &BinaryTree) -> Result<DyckWord> {
    if b.is_empty() {
        return Err(Error::InvalidArgument(
            "the empty tree has no visit word".into(),
        ));
    }
    fn visit(t: &BinaryTree, out: &mut Vec<DyckLetter>) {
        match t.root() {
            None => out.push(DyckLetter::D),
            Some(n) => {
                out.push(DyckLetter::U);
                visit(&n.right, out);
                visit(&n.left, out);
            }
        }
    }
    let mut letters = Vec::with_capacity(2 * b.size() + 1);
    visit(b, &mut letters);
    DyckWord::new(letters)
}

/// Heights of the peaks and valleys of the Dyck path drawn from a visit word.
///
/// The word is drawn from right to left, so the path read left to right is
/// the reversed word with leaves as up steps and internal vertices as down
/// steps; its first step (the last leaf) is dropped so the path starts and
/// ends at height 0.
fn peaks_and_valleys(x: &DyckWord) -> (Vec<usize>, Vec<usize>) {
    let ups: Vec<bool> = x
        .letters()
        .iter()
        .rev()
        .skip(1)
        .map(|&l| l == DyckLetter::D)
        .collect();
    let mut peaks = Vec::new();
    let mut valleys = Vec::new();
    let mut h = 0usize;
    for (i, &up) in ups.iter().enumerate() {
        if up {
            h += 1;
        } else {
            h -= 1;
        }
        match ups.get(i + 1) {
            Some(false) if up => peaks.push(h),
            Some(true) if !up => valleys.push(h),
            None if up => peaks.push(h),
            _ => {}
        }
    }
    (peaks, valleys)
}

/// One column per peak with the peak's height, consecutive columns sharing
/// `valley + 1` vertical edges.
pub fn dyck_to_polyomino(x: &DyckWord) -> Result<Polyomino> {
    let (peaks, valleys) = peaks_and_valleys(x);
    if peaks.is_empty() {
        return Err(Error::InvalidWord {
            word: x.to_string(),
            reason: "visit word of the empty tree has no peak".into(),
        });
    }
    let columns = peaks
        .iter()
        .enumerate()
        .map(|(i, &height)| Column {
            height,
            glue: (i > 0).then(|| valleys[i - 1] + 1),
        })
        .collect();
    Polyomino::new(columns)
}

/// Remove the two corners of the polyomino and slide its lower border by one
/// NW step: the upper border loses its first N and last E, the lower border
/// its first E and last N.
pub fn polyomino_to_pair(p: &Polyomino) -> Result<PathPair> {
    let ext = p.extents();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    let mut top = 0;
    for (i, &(bottom, t)) in ext.iter().enumerate() {
        upper.extend(std::iter::repeat_n(Step::N, t - top));
        upper.push(Step::E);
        top = t;
        let next_bottom = ext.get(i + 1).map_or(top, |&(b, _)| b);
        lower.push(Step::E);
        lower.extend(std::iter::repeat_n(Step::N, next_bottom - bottom));
    }
    let trim = |mut w: Vec<Step>| {
        w.pop();
        w.remove(0);
        LatticePath::new(w)
    };
    PathPair::new(trim(upper), trim(lower))
}

/// Pair of paths of a tree with `n + 1` vertices, built from right heights:
/// `ω` is the canopy, and the `j`-th E step of `η` lies below the `j`-th E
/// step of `ω` by the right height of the `j`-th left edge (left edges ordered
/// by their fathers in symmetric order).
pub fn pair_of_paths_direct(b: &BinaryTree) -> Result<PathPair> {
    if b.is_empty() {
        return Err(Error::InvalidArgument(
            "the empty tree has no pair of paths".into(),
        ));
    }
    let omega = LatticePath::from_canopy(&b.canopy());
    let depths: Vec<usize> = b
        .inorder()
        .into_iter()
        .filter(|v| v.has_left)
        .map(|v| v.right_height)
        .collect();
    let tops = omega.e_step_heights();
    if depths.len() != tops.len() {
        return Err(Error::Internal(format!(
            "{} left edges for {} E steps in {omega}",
            depths.len(),
            tops.len()
        )));
    }
    let levels = tops
        .iter()
        .zip(&depths)
        .map(|(&top, &d)| {
            top.checked_sub(d).ok_or_else(|| {
                Error::Internal(format!(
                    "left edge at right height {d} falls below the axis"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let eta = LatticePath::from_e_heights(&levels, omega.count_n())
        .map_err(|e| Error::Internal(format!("levels {levels:?} are not a staircase: {e}")))?;
    PathPair::new(omega, eta).map_err(|e| Error::Internal(e.to_string()))
}

/// Pair of paths read directly off a tableau of index `n + 1`.
///
/// Yellow cells are those above the 1 of their column, plus every cell to the
/// right of one of those in the same row. In each column the E step of `η`
/// sits below the upper border by the number of white (0, not yellow) cells.
#[allow(clippy::needless_range_loop)]
pub fn tableau_to_pair_direct(t: &CatalanTableau) -> Result<PathPair> {
    t.ensure_valid()?;
    let shape = t.shape();
    let width = shape.width();
    let omega = t.profile();

    // Leftmost column holding a restricted cell, per row (columns are counted
    // from the right, so every cell of the row with a smaller index is yellow).
    let mut leftmost_restricted = vec![0usize; shape.rows() + 1];
    for c in 1..=width {
        for r in 1..=shape.column_height(c) {
            if t.is_restricted(r, c) {
                leftmost_restricted[r] = leftmost_restricted[r].max(c);
            }
        }
    }
    let white = |c: usize| {
        (1..=shape.column_height(c))
            .filter(|&r| t.cell(r, c) == Some(false))
            .filter(|&r| !t.is_restricted(r, c) && leftmost_restricted[r] <= c)
            .count()
    };

    // E steps of the profile run from the leftmost column to the rightmost.
    let levels = (1..=width)
        .rev()
        .map(|c| {
            let top = shape.column_height(c) - 1;
            top.checked_sub(white(c))
                .ok_or_else(|| Error::Internal(format!("column {c} has no 1")))
        })
        .collect::<Result<Vec<_>>>()?;
    let eta = LatticePath::from_e_heights(&levels, omega.count_n())
        .map_err(|e| Error::Internal(format!("levels {levels:?} are not a staircase: {e}")))?;
    PathPair::new(omega, eta).map_err(|e| Error::Internal(e.to_string()))
}
