//! Catalan tableaux: right-justified Ferrers shapes filled with 0's and 1's.
//!
//! Rows are numbered from the bottom starting at 1 and columns from the right
//! starting at 1. The bottom row is the longest, so every column is a
//! contiguous run of cells starting at row 1.

use std::fmt;

use crate::limits::Limits;
use crate::path::{LatticePath, Step};
use crate::{Error, Result};

/// Shape of a tableau inside its `k × (index − k)` box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    index: usize,
    rows: usize,
    /// Non-zero row lengths, bottom row first.
    parts: Vec<usize>,
}

impl Shape {
    /// Trailing zero parts are dropped; rows of length zero are implied by
    /// `rows`.
    pub fn new(index: usize, rows: usize, mut parts: Vec<usize>) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidShape("index must be positive".into()));
        }
        if rows > index {
            return Err(Error::InvalidShape(format!(
                "{rows} rows exceed the index {index}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let width = index - rows;
        if parts.len() > rows {
            return Err(Error::InvalidShape(format!(
                "{} non-empty rows in a box of {rows} rows",
                parts.len()
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "row lengths {parts:?} must weakly decrease from the bottom row up"
            )));
        }
        if parts.iter().any(|&p| p > width) {
            return Err(Error::InvalidShape(format!(
                "row lengths {parts:?} exceed the box width {width}"
            )));
        }
        if width >= 1 && parts.first() != Some(&width) {
            return Err(Error::InvalidShape(format!(
                "the bottom row must fill all {width} columns"
            )));
        }
        Ok(Shape { index, rows, parts })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Number of rows `k` of the box.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns `index − k`.
    pub fn width(&self) -> usize {
        self.index - self.rows
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length of row `r` (1-based from the bottom); zero above the last part.
    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Height of column `c` (1-based from the right).
    pub fn column_height(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    /// The NW border of the shape inside its box, read from the SW corner.
    pub fn border(&self) -> LatticePath {
        let mut steps = Vec::with_capacity(self.index);
        let mut prev = self.width();
        for r in 1..=self.rows {
            let len = self.row_len(r);
            steps.extend(std::iter::repeat_n(Step::E, prev - len));
            steps.push(Step::N);
            prev = len;
        }
        steps.extend(std::iter::repeat_n(Step::E, prev));
        LatticePath::new(steps)
    }

    /// Inverse of [`Shape::border`] composed with first-step deletion: the
    /// shape of index `len + 1` whose profile is `profile`.
    pub fn from_profile(profile: &LatticePath) -> Shape {
        let index = profile.len() + 1;
        let rows = profile.count_n() + 1;
        let mut remaining = profile.count_e();
        let mut parts = vec![remaining];
        for s in profile.steps() {
            match s {
                Step::E => remaining -= 1,
                Step::N => parts.push(remaining),
            }
        }
        Shape::new(index, rows, parts).expect("profile always describes a valid shape")
    }
}

/// The first condition a filling violates, with 1-based coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    ColumnWithoutOne {
        column: usize,
    },
    ColumnWithMultipleOnes {
        column: usize,
    },
    /// A 0 with a 1 below it in its column and a 1 to its right in its row.
    ForbiddenZero {
        row: usize,
        column: usize,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::ColumnWithoutOne { .. } => "column-without-one",
            Violation::ColumnWithMultipleOnes { .. } => "column-with-multiple-ones",
            Violation::ForbiddenZero { .. } => "forbidden-zero",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColumnWithoutOne { column }
            | Violation::ColumnWithMultipleOnes { column } => {
                write!(f, "{} at column {column}", self.kind())
            }
            Violation::ForbiddenZero { row, column } => {
                write!(f, "{} at row {row}, column {column}", self.kind())
            }
        }
    }
}

/// A shape with a 0/1 filling. The filling is not required to satisfy the
/// Catalan conditions; see [`CatalanTableau::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanTableau {
    shape: Shape,
    /// Rows bottom first, each listed right to left.
    filling: Vec<Vec<bool>>,
}

impl CatalanTableau {
    pub fn new(shape: Shape, filling: Vec<Vec<bool>>) -> Result<Self> {
        if filling.len() != shape.parts.len() {
            return Err(Error::InvalidFilling(format!(
                "{} filled rows for {} non-empty rows",
                filling.len(),
                shape.parts.len()
            )));
        }
        for (r, (row, &len)) in filling.iter().zip(&shape.parts).enumerate() {
            if row.len() != len {
                return Err(Error::InvalidFilling(format!(
                    "row {} has {} cells, the shape says {len}",
                    r + 1,
                    row.len()
                )));
            }
        }
        Ok(CatalanTableau { shape, filling })
    }

    /// Build from `rows` (box height) and the filled rows; the index is
    /// `rows + width` where width is the bottom row length. Zero-length rows
    /// may appear in `filling` and are trimmed.
    pub(crate) fn from_rows(rows: usize, mut filling: Vec<Vec<bool>>) -> Result<Self> {
        while filling.last().is_some_and(|r| r.is_empty()) {
            filling.pop();
        }
        let width = filling.first().map_or(0, Vec::len);
        let parts = filling.iter().map(Vec::len).collect();
        let shape = Shape::new(rows + width, rows, parts)?;
        CatalanTableau::new(shape, filling)
    }

    /// Build a tableau from the row holding the 1 of each column, columns
    /// listed right to left.
    pub fn from_ones(shape: Shape, one_rows: &[usize]) -> Result<Self> {
        if one_rows.len() != shape.width() {
            return Err(Error::InvalidFilling(format!(
                "{} column entries for width {}",
                one_rows.len(),
                shape.width()
            )));
        }
        let mut filling: Vec<Vec<bool>> = shape.parts.iter().map(|&p| vec![false; p]).collect();
        for (c, &r) in one_rows.iter().enumerate() {
            if r == 0 || r > shape.column_height(c + 1) {
                return Err(Error::InvalidFilling(format!(
                    "column {} has no row {r}",
                    c + 1
                )));
            }
            filling[r - 1][c] = true;
        }
        CatalanTableau::new(shape, filling)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn index(&self) -> usize {
        self.shape.index
    }

    pub fn filling(&self) -> &[Vec<bool>] {
        &self.filling
    }

    /// Bit at (row `r`, column `c`), both 1-based; `None` outside the shape.
    pub fn cell(&self, r: usize, c: usize) -> Option<bool> {
        self.filling
            .get(r.checked_sub(1)?)?
            .get(c.checked_sub(1)?)
            .copied()
    }

    /// Row holding the 1 of column `c`, assuming the column has exactly one.
    fn one_row(&self, c: usize) -> Option<usize> {
        (1..=self.shape.column_height(c)).find(|&r| self.cell(r, c) == Some(true))
    }

    /// Check both Catalan conditions, columns first.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let width = self.shape.width();
        for c in 1..=width {
            let ones = (1..=self.shape.column_height(c))
                .filter(|&r| self.cell(r, c) == Some(true))
                .count();
            match ones {
                0 => return Err(Violation::ColumnWithoutOne { column: c }),
                1 => {}
                _ => return Err(Violation::ColumnWithMultipleOnes { column: c }),
            }
        }
        for (r, row) in self.filling.iter().enumerate() {
            let r = r + 1;
            for (c, &bit) in row.iter().enumerate() {
                let c = c + 1;
                if bit {
                    continue;
                }
                let one_below = (1..r).any(|rr| self.cell(rr, c) == Some(true));
                let one_right = (1..c).any(|cc| self.cell(r, cc) == Some(true));
                if one_below && one_right {
                    return Err(Violation::ForbiddenZero { row: r, column: c });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        self.validate().map_err(Error::InvalidTableau)
    }

    /// The NW border read from the SW corner with its first (N) step deleted.
    pub fn profile(&self) -> LatticePath {
        let mut border = self.shape.border().steps().to_vec();
        border.remove(0);
        LatticePath::new(border)
    }

    /// Number of 1's in the bottom row.
    pub fn ones_in_first_row(&self) -> usize {
        self.filling
            .first()
            .map_or(0, |row| row.iter().filter(|&&b| b).count())
    }

    /// Whether the cell is a 0 lying above the 1 of its column.
    pub fn is_restricted(&self, r: usize, c: usize) -> bool {
        self.cell(r, c) == Some(false) && self.one_row(c).is_some_and(|one| one < r)
    }

    /// Rows of the full box (zero-length rows included) without a restricted
    /// entry.
    pub fn unrestricted_row_count(&self) -> usize {
        (1..=self.shape.rows)
            .filter(|&r| !(1..=self.shape.row_len(r)).any(|c| self.is_restricted(r, c)))
            .count()
    }
}

impl fmt::Display for CatalanTableau {
    /// Rows top first, each drawn left to right.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.shape.width();
        for r in (1..=self.shape.rows).rev() {
            let len = self.shape.row_len(r);
            let mut line = String::with_capacity(width);
            line.extend(std::iter::repeat_n(' ', width - len));
            for c in (1..=len).rev() {
                line.push(if self.cell(r, c) == Some(true) {
                    '1'
                } else {
                    '0'
                });
            }
            writeln!(f, "|{line}|")?;
        }
        Ok(())
    }
}

/// Every Catalan tableau of index `n`, in a deterministic order: by number of
/// rows, then by shape in reverse-lexicographic recursion order, then by
/// filling.
pub fn enumerate_tableaux(n: usize, limits: &Limits) -> Result<Vec<CatalanTableau>> {
    if n > limits.max_enumeration {
        return Err(Error::CapExceeded {
            what: "tableau enumeration",
            requested: n,
            cap: limits.max_enumeration,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("index must be positive".into()));
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let width = n - k;
        for parts in shapes_in_box(k, width) {
            let shape = Shape::new(n, k, parts).expect("generated shapes are valid");
            fill_columns(&shape, &mut out);
        }
    }
    Ok(out)
}

/// Every Catalan tableau whose profile is `profile` (index `len + 1`).
pub fn tableaux_with_profile(
    profile: &LatticePath,
    limits: &Limits,
) -> Result<Vec<CatalanTableau>> {
    let n = profile.len() + 1;
    if n > limits.max_enumeration {
        return Err(Error::CapExceeded {
            what: "tableau enumeration",
            requested: n,
            cap: limits.max_enumeration,
        });
    }
    let mut out = Vec::new();
    fill_columns(&Shape::from_profile(profile), &mut out);
    Ok(out)
}

/// Partitions with first part `width` (none when `width == 0`) and at most
/// `k` parts, generated by descending-parts recursion.
fn shapes_in_box(k: usize, width: usize) -> Vec<Vec<usize>> {
    fn rec(max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if slots == 0 {
            return;
        }
        for p in (1..=max_part).rev() {
            cur.push(p);
            rec(p, slots - 1, cur, out);
            cur.pop();
        }
    }
    if width == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut cur = vec![width];
    rec(width, k - 1, &mut cur, &mut out);
    out
}

/// Append every valid filling of `shape`, placing the 1 of each column from
/// right to left and pruning forbidden zeros as soon as a column is placed.
fn fill_columns(shape: &Shape, out: &mut Vec<CatalanTableau>) {
    fn rec(
        shape: &Shape,
        c: usize,
        rows_with_one: u64,
        ones: &mut Vec<usize>,
        out: &mut Vec<CatalanTableau>,
    ) {
        let width = shape.width();
        if c > width {
            out.push(
                CatalanTableau::from_ones(shape.clone(), ones).expect("placement stays in shape"),
            );
            return;
        }
        let h = shape.column_height(c);
        for r in 1..=h {
            // Zeros above the new 1 (rows r+1..=h) must not see a 1 to their
            // right in the same row.
            let above = ((1u64 << (h - r)) - 1) << (r + 1);
            if rows_with_one & above != 0 {
                continue;
            }
            ones.push(r);
            rec(shape, c + 1, rows_with_one | (1 << r), ones, out);
            ones.pop();
        }
    }
    rec(shape, 1, 0, &mut Vec::with_capacity(shape.width()), out);
}
