use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::path::{LatticePath, Step};
use crate::{Error, Result};

/// Occupancy of the `n` cells, cell 1 (the entry side) first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TasepState(Vec<bool>);

impl TasepState {
    pub fn new(cells: Vec<bool>) -> Self {
        TasepState(cells)
    }

    pub fn cells(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position in the canonical order: the word read as a binary number.
    pub fn rank(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| acc << 1 | usize::from(b))
    }

    pub fn from_rank(n: usize, rank: usize) -> Self {
        TasepState((0..n).map(|i| rank >> (n - 1 - i) & 1 == 1).collect())
    }

    /// All `2^n` states in binary-ascending order.
    pub fn all(n: usize) -> impl Iterator<Item = TasepState> {
        (0..1usize << n).map(move |r| TasepState::from_rank(n, r))
    }

    /// Mirror the strip and swap occupied with empty.
    pub fn reverse_complement(&self) -> Self {
        TasepState(self.0.iter().rev().map(|&b| !b).collect())
    }

    /// Occupied cell → N, empty cell → E.
    pub fn to_path(&self) -> LatticePath {
        LatticePath::new(
            self.0
                .iter()
                .map(|&b| if b { Step::N } else { Step::E })
                .collect(),
        )
    }
}

/// Occupied cell → N, empty cell → E.
pub fn state_to_path(u: &TasepState) -> LatticePath {
    u.to_path()
}

impl FromStr for TasepState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(Error::InvalidWord {
                    word: s.to_string(),
                    reason: format!("unexpected cell {c:?}, expected 0 or 1"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(TasepState)
    }
}

impl fmt::Display for TasepState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for TasepState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Entry rate `alpha` and exit rate `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RateParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl RateParams {
    /// Any positive rates; enough for the combinatorial formulas.
    pub fn new(alpha: BigRational, beta: BigRational) -> Result<Self> {
        for (name, v) in [("alpha", &alpha), ("beta", &beta)] {
            if !v.is_positive() {
                return Err(Error::InvalidRate {
                    name,
                    value: v.to_string(),
                });
            }
        }
        Ok(RateParams { alpha, beta })
    }

    pub fn from_ints(alpha: (i64, i64), beta: (i64, i64)) -> Result<Self> {
        let r = |(p, q): (i64, i64)| {
            if q == 0 {
                Err(Error::InvalidArgument("zero denominator".into()))
            } else {
                Ok(BigRational::new(p.into(), q.into()))
            }
        };
        Self::new(r(alpha)?, r(beta)?)
    }

    /// `alpha = beta = 1`.
    pub fn unit() -> Self {
        RateParams {
            alpha: BigRational::one(),
            beta: BigRational::one(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.alpha.is_one() && self.beta.is_one()
    }

    /// Rates must also be at most 1 to serve as transition probabilities.
    pub fn check_probabilities(&self) -> Result<()> {
        for (name, v) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            if !v.is_positive() || *v > BigRational::one() {
                return Err(Error::InvalidRate {
                    name,
                    value: v.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Exchange the entry and exit rates.
    pub fn swapped(&self) -> Self {
        RateParams {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    pub(crate) fn inv_alpha(&self) -> BigRational {
        self.alpha.recip()
    }

    pub(crate) fn inv_beta(&self) -> BigRational {
        self.beta.recip()
    }
}

/// Exact probability vector over the `2^n` states, indexed by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    n: usize,
    probs: Vec<BigRational>,
}

impl Distribution {
    /// Checks non-negativity and that the values sum to exactly 1.
    pub fn new(n: usize, probs: Vec<BigRational>) -> Result<Self> {
        if probs.len() != 1 << n {
            return Err(Error::InvalidArgument(format!(
                "{} probabilities for {} states",
                probs.len(),
                1usize << n
            )));
        }
        if probs.iter().any(Signed::is_negative) {
            return Err(Error::InvalidArgument("negative probability".into()));
        }
        let total: BigRational = probs.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidArgument(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(Distribution { n, probs })
    }

    /// Normalize non-negative weights (not all zero).
    pub fn from_weights(n: usize, weights: Vec<BigRational>) -> Result<Self> {
        let total: BigRational = weights.iter().sum();
        if total.is_zero() {
            return Err(Error::InvalidArgument("all weights are zero".into()));
        }
        Self::new(n, weights.into_iter().map(|w| w / &total).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: &TasepState) -> &BigRational {
        &self.probs[u.rank()]
    }

    pub fn probs(&self) -> &[BigRational] {
        &self.probs
    }

    /// `(state, probability)` in binary-ascending state order.
    pub fn iter(&self) -> impl Iterator<Item = (TasepState, &BigRational)> {
        let n = self.n;
        self.probs
            .iter()
            .enumerate()
            .map(move |(r, p)| (TasepState::from_rank(n, r), p))
    }

    /// The first state where the two distributions differ.
    pub fn first_difference(&self, other: &Distribution) -> Option<TasepState> {
        if self.n != other.n {
            return Some(TasepState::new(Vec::new()));
        }
        self.probs
            .iter()
            .zip(&other.probs)
            .position(|(a, b)| a != b)
            .map(|r| TasepState::from_rank(self.n, r))
    }
}

impl fmt::Display for Distribution {
    /// `state:p/q` entries joined by `", "`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (u, p)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}:{}/{}", p.numer(), p.denom())?;
        }
        Ok(())
    }
}
