//! The discrete-time TASEP chain on `n` cells and its exact stationary law.
//!
//! At each step one of the `n + 1` walls is chosen uniformly. An internal
//! wall moves a particle across it when the cell on its left is occupied and
//! the cell on its right is empty; the leftmost wall injects a particle into
//! an empty first cell with probability `alpha`; the rightmost wall removes
//! the particle of an occupied last cell with probability `beta`. Anything
//! else leaves the state unchanged.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::state::{Distribution, RateParams, TasepState};
use crate::linalg::{self, Matrix};
use crate::{Error, Result};

/// Transition matrix over the `2^n` states, rows and columns in rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    n: usize,
    rates: RateParams,
    matrix: Matrix,
}

impl Chain {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rates(&self) -> &RateParams {
        &self.rates
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn transition(&self, from: &TasepState, to: &TasepState) -> &BigRational {
        &self.matrix[from.rank()][to.rank()]
    }

    /// Exact `π P − π` for a candidate vector.
    pub fn residual(&self, pi: &[BigRational]) -> Vec<BigRational> {
        let size = self.matrix.len();
        (0..size)
            .map(|j| {
                let flow: BigRational = (0..size)
                    .filter(|&i| !self.matrix[i][j].is_zero())
                    .map(|i| &pi[i] * &self.matrix[i][j])
                    .sum();
                flow - &pi[j]
            })
            .collect()
    }
}

/// Build the transition matrix. Rates must lie in `(0, 1]`.
pub fn build_chain(n: usize, rates: &RateParams) -> Result<Chain> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the strip needs at least one cell".into(),
        ));
    }
    if n >= usize::BITS as usize - 1 {
        return Err(Error::InvalidArgument(format!(
            "{n} cells is too many states"
        )));
    }
    rates.check_probabilities()?;
    let size = 1usize << n;
    let wall = BigRational::new(1.into(), (n as i64 + 1).into());
    let mut matrix = vec![vec![BigRational::zero(); size]; size];

    for (from, row) in matrix.iter_mut().enumerate() {
        let u = TasepState::from_rank(n, from);
        let cells = u.cells();
        let mut moves = Vec::with_capacity(n + 1);
        if !cells[0] {
            let mut v = cells.to_vec();
            v[0] = true;
            moves.push((v, &wall * &rates.alpha));
        }
        for i in 0..n - 1 {
            if cells[i] && !cells[i + 1] {
                let mut v = cells.to_vec();
                v.swap(i, i + 1);
                moves.push((v, wall.clone()));
            }
        }
        if cells[n - 1] {
            let mut v = cells.to_vec();
            v[n - 1] = false;
            moves.push((v, &wall * &rates.beta));
        }
        let mut stay = BigRational::one();
        for (v, p) in moves {
            stay -= &p;
            row[TasepState::new(v).rank()] += p;
        }
        row[from] += stay;
    }
    Ok(Chain {
        n,
        rates: rates.clone(),
        matrix,
    })
}

/// Solve `π P = π`, `Σ π = 1` exactly.
///
/// The balance equations `(Pᵀ − I) π = 0` have rank `2^n − 1` for an
/// irreducible chain; the last one is replaced by the normalization.
pub fn stationary(c: &Chain) -> Result<Distribution> {
    let size = c.matrix.len();
    let mut a: Matrix = (0..size)
        .map(|j| {
            (0..size)
                .map(|i| {
                    let mut v = c.matrix[i][j].clone();
                    if i == j {
                        v -= BigRational::one();
                    }
                    v
                })
                .collect()
        })
        .collect();
    a[size - 1] = vec![BigRational::one(); size];
    let mut b = vec![BigRational::zero(); size];
    b[size - 1] = BigRational::one();

    let pi = linalg::solve(a, b).map_err(|e| match e {
        Error::Singular => Error::Internal("balance system is singular; chain is reducible".into()),
        other => other,
    })?;
    if c.residual(&pi).iter().any(|r| !r.is_zero()) {
        return Err(Error::Internal("stationary residual is not zero".into()));
    }
    Distribution::new(c.n, pi)
}

/// Monte Carlo run parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationConfig {
    pub steps: u64,
    pub burn_in: u64,
    pub seed: u64,
    /// Rank of the starting state.
    pub start: usize,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        SimulationConfig {
            steps: 1_000_000,
            burn_in: 1_000,
            seed: 0,
            start: 0,
        }
    }
}

/// Occupation frequencies of a simulated trajectory. After `burn_in` steps
/// the current state is recorded, then once more after each of `steps`
/// further steps. Deterministic for a given seed.
pub fn simulate(c: &Chain, cfg: &SimulationConfig) -> Result<Vec<f64>> {
    let size = c.matrix.len();
    if cfg.start >= size {
        return Err(Error::InvalidArgument(format!(
            "start state {} out of range for {size} states",
            cfg.start
        )));
    }
    // Sparse rows as cumulative probabilities.
    let rows: Vec<Vec<(usize, f64)>> = c
        .matrix
        .iter()
        .map(|row| {
            let mut acc = 0.0;
            row.iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(j, p)| {
                    acc += p.to_f64().unwrap_or(0.0);
                    (j, acc)
                })
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut step = |s: usize| -> usize {
        let x: f64 = rng.gen::<f64>();
        let row = &rows[s];
        row.iter()
            .find(|&&(_, cum)| x < cum)
            .or(row.last())
            .map_or(s, |&(j, _)| j)
    };

    let mut s = cfg.start;
    for _ in 0..cfg.burn_in {
        s = step(s);
    }
    let mut counts = vec![0u64; size];
    counts[s] += 1;
    for _ in 0..cfg.steps {
        s = step(s);
        counts[s] += 1;
    }
    let total = (cfg.steps + 1) as f64;
    Ok(counts.into_iter().map(|k| k as f64 / total).collect())
}

/// `½ Σ |p − q|` between an empirical vector and an exact distribution.
pub fn total_variation(empirical: &[f64], exact: &Distribution) -> f64 {
    empirical
        .iter()
        .zip(exact.probs())
        .map(|(p, q)| (p - q.to_f64().unwrap_or(f64::NAN)).abs())
        .sum::<f64>()
        / 2.0
}
