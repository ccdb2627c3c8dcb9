//! Lattice paths over {N, E}, pairs of non-crossing paths, Dyck words and
//! parallelogram polyominoes.

use std::fmt;
use std::str::FromStr;

use crate::tree::{CanopyLetter, CanopyWord};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

/// A word over {N, E}, read as a path from the origin.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath(Vec<Step>);

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_n(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::N).count()
    }

    pub fn count_e(&self) -> usize {
        self.0.len() - self.count_n()
    }

    /// Endpoint `(x, y) = (#E, #N)`.
    pub fn endpoint(&self) -> (usize, usize) {
        (self.count_e(), self.count_n())
    }

    /// Height of the path after each prefix: `heights()[m]` is `#N` among the
    /// first `m` steps (length `len + 1`).
    pub fn prefix_heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.0.len() + 1);
        let mut y = 0;
        h.push(0);
        for s in &self.0 {
            if *s == Step::N {
                y += 1;
            }
            h.push(y);
        }
        h
    }

    /// Height of each E step, left to right.
    pub fn e_step_heights(&self) -> Vec<usize> {
        let mut y = 0;
        let mut out = Vec::new();
        for s in &self.0 {
            match s {
                Step::N => y += 1,
                Step::E => out.push(y),
            }
        }
        out
    }

    /// Build the path whose E steps sit at the given non-decreasing heights,
    /// padded with N steps up to `total_n`.
    pub fn from_e_heights(heights: &[usize], total_n: usize) -> Result<Self> {
        let mut steps = Vec::with_capacity(heights.len() + total_n);
        let mut y = 0;
        for &h in heights {
            if h < y || h > total_n {
                return Err(Error::InvalidArgument(format!(
                    "E-step heights {heights:?} are not a monotone staircase below {total_n}"
                )));
            }
            steps.extend(std::iter::repeat_n(Step::N, h - y));
            steps.push(Step::E);
            y = h;
        }
        steps.extend(std::iter::repeat_n(Step::N, total_n - y));
        Ok(LatticePath(steps))
    }

    /// Whether `self` stays weakly below `upper`: same length and, after every
    /// prefix length, no more N steps than `upper`.
    pub fn is_weakly_below(&self, upper: &LatticePath) -> bool {
        self.len() == upper.len()
            && self
                .prefix_heights()
                .iter()
                .zip(upper.prefix_heights())
                .all(|(&lo, hi)| lo <= hi)
    }

    /// Length of the maximal trailing run of N steps.
    pub fn trailing_n(&self) -> usize {
        self.0.iter().rev().take_while(|&&s| s == Step::N).count()
    }

    pub fn from_canopy(c: &CanopyWord) -> Self {
        LatticePath(
            c.0.iter()
                .map(|l| match l {
                    CanopyLetter::A => Step::N,
                    CanopyLetter::B => Step::E,
                })
                .collect(),
        )
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                _ => Err(Error::InvalidWord {
                    word: s.to_string(),
                    reason: format!("unexpected letter {c:?}, expected N or E"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Two paths with the same endpoints, `eta` weakly below `omega`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPair {
    omega: LatticePath,
    eta: LatticePath,
}

impl PathPair {
    pub fn new(omega: LatticePath, eta: LatticePath) -> Result<Self> {
        if omega.endpoint() != eta.endpoint() {
            return Err(Error::InvalidPair(format!(
                "endpoints differ: omega = {omega}, eta = {eta}"
            )));
        }
        if !eta.is_weakly_below(&omega) {
            return Err(Error::InvalidPair(format!(
                "eta = {eta} crosses above omega = {omega}"
            )));
        }
        Ok(PathPair { omega, eta })
    }

    pub fn omega(&self) -> &LatticePath {
        &self.omega
    }

    pub fn eta(&self) -> &LatticePath {
        &self.eta
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    /// Number of horizontal unit edges shared by both paths.
    pub fn contacts(&self) -> usize {
        self.omega
            .e_step_heights()
            .iter()
            .zip(self.eta.e_step_heights())
            .filter(|(&a, b)| a == *b)
            .count()
    }

    /// Trailing run of N steps of `eta`.
    pub fn final_rise(&self) -> usize {
        self.eta.trailing_n()
    }
}

/// Visit word of a completed binary tree: `U` per internal vertex, `D` per
/// external vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyckLetter {
    U,
    D,
}

/// Reverse-prefix reading (root, right subtree, left subtree) of a complete
/// binary tree, with `n` U's and `n + 1` D's.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord(Vec<DyckLetter>);

impl DyckWord {
    /// Checks the prefix-code property: every proper prefix has at least as
    /// many U's as D's, and the whole word has exactly one more D than U.
    pub fn new(letters: Vec<DyckLetter>) -> Result<Self> {
        let mut balance: i64 = 0;
        for (i, l) in letters.iter().enumerate() {
            balance += match l {
                DyckLetter::U => 1,
                DyckLetter::D => -1,
            };
            let last = i + 1 == letters.len();
            if (!last && balance < 0) || (last && balance != -1) {
                let w = DyckWord(letters.clone()).to_string();
                return Err(Error::InvalidWord {
                    word: w,
                    reason: "not the visit word of a complete binary tree".into(),
                });
            }
        }
        if letters.is_empty() {
            return Err(Error::InvalidWord {
                word: String::new(),
                reason: "empty visit word".into(),
            });
        }
        Ok(DyckWord(letters))
    }

    pub fn letters(&self) -> &[DyckLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of internal vertices (U letters).
    pub fn internal_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == DyckLetter::U).count()
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'U' => Ok(DyckLetter::U),
                'D' => Ok(DyckLetter::D),
                _ => Err(Error::InvalidWord {
                    word: s.to_string(),
                    reason: format!("unexpected letter {c:?}, expected U or D"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWord::new(letters)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                DyckLetter::U => "U",
                DyckLetter::D => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// One column of a parallelogram polyomino.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub height: usize,
    /// Vertical edges shared with the previous column; `None` on the first.
    pub glue: Option<usize>,
}

/// Parallelogram polyomino given column by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino(Vec<Column>);

impl Polyomino {
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidPolyomino("no columns".into()));
        }
        for (i, c) in columns.iter().enumerate() {
            if c.height == 0 {
                return Err(Error::InvalidPolyomino(format!("column {i} has height 0")));
            }
            match (i, c.glue) {
                (0, None) => {}
                (0, Some(_)) => {
                    return Err(Error::InvalidPolyomino(
                        "first column cannot be glued".into(),
                    ))
                }
                (_, None) => {
                    return Err(Error::InvalidPolyomino(format!("column {i} has no glue")))
                }
                (_, Some(g)) => {
                    let prev = columns[i - 1].height;
                    if g == 0 || g > prev.min(c.height) {
                        return Err(Error::InvalidPolyomino(format!(
                            "column {i}: glue {g} outside 1..={}",
                            prev.min(c.height)
                        )));
                    }
                }
            }
        }
        Ok(Polyomino(columns))
    }

    pub fn columns(&self) -> &[Column] {
        &self.0
    }

    /// `(bottom, top)` of every column, the first column starting at 0.
    pub fn extents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            let bottom = match (out.last(), c.glue) {
                (Some(&(_, prev_top)), Some(g)) => prev_top - g,
                _ => 0,
            };
            out.push((bottom, bottom + c.height));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn endpoints_and_heights() {
        let w = p("NENNE");
        assert_eq!(w.endpoint(), (2, 3));
        assert_eq!(w.prefix_heights(), vec![0, 1, 1, 2, 3, 3]);
        assert_eq!(w.e_step_heights(), vec![1, 3]);
        assert_eq!(w.trailing_n(), 0);
        assert_eq!(p("ENN").trailing_n(), 2);
    }

    #[test]
    fn e_heights_roundtrip() {
        let w = p("NEENNEN");
        let rebuilt = LatticePath::from_e_heights(&w.e_step_heights(), w.count_n()).unwrap();
        assert_eq!(rebuilt, w);
        assert!(LatticePath::from_e_heights(&[2, 1], 3).is_err());
    }

    #[test]
    fn pair_validation() {
        assert!(PathPair::new(p("NE"), p("EN")).is_ok());
        assert!(PathPair::new(p("EN"), p("NE")).is_err());
        assert!(PathPair::new(p("NE"), p("NN")).is_err());
        let pair = PathPair::new(p("NENE"), p("ENNE")).unwrap();
        assert_eq!(pair.contacts(), 1);
        assert_eq!(pair.final_rise(), 0);
    }

    #[test]
    fn dyck_word_validation() {
        assert!("UDD".parse::<DyckWord>().is_ok());
        assert!("D".parse::<DyckWord>().is_ok());
        assert!("UD".parse::<DyckWord>().is_err());
        assert!("DUD".parse::<DyckWord>().is_err());
        assert!("UUDDD".parse::<DyckWord>().is_ok());
        assert!("UDX".parse::<DyckWord>().is_err());
    }

    #[test]
    fn polyomino_extents() {
        let poly = Polyomino::new(vec![
            Column {
                height: 2,
                glue: None,
            },
            Column {
                height: 3,
                glue: Some(1),
            },
        ])
        .unwrap();
        assert_eq!(poly.extents(), vec![(0, 2), (1, 4)]);
        assert!(Polyomino::new(vec![
            Column {
                height: 1,
                glue: None
            },
            Column {
                height: 2,
                glue: Some(2)
            },
        ])
        .is_err());
    }
}
