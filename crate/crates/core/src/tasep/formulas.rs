//! Combinatorial expressions for the stationary probabilities.
//!
//! With `ω` the path of a state `u` of length `n`:
//!
//! * paths: `prob(u) = #{η below ω} / C_{n+1}` (rates 1),
//! * tableaux: `prob(u) = #{T of index n+1 with profile ω} / C_{n+1}` (rates 1),
//! * trees: `prob(u; α, β) = Σ α^{-lb(B)} β^{-rb(B)} / Z_n` over trees with
//!   `n + 1` vertices and canopy `ω`,
//! * pairs: `prob(u; α, β) = Σ α^{-f} β^{-g} / Z_n` over `η` below `ω`, where
//!   `f` counts shared horizontal edges and `g` is the final run of N's of `η`.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::chain::{build_chain, stationary};
use super::state::{Distribution, RateParams, TasepState};
use crate::count::{self, binomial, catalan_big};
use crate::limits::Limits;
use crate::path::{LatticePath, PathPair};
use crate::tableau::{tableaux_with_profile, CatalanTableau};
use crate::tree::{enumerate_trees, BinaryTree};
use crate::{Error, Result};

fn weight(inv_alpha: &BigRational, inv_beta: &BigRational, a: usize, b: usize) -> BigRational {
    inv_alpha.pow(a as i32) * inv_beta.pow(b as i32)
}

fn catalan_next(n: usize) -> BigRational {
    BigRational::from_integer(catalan_big(n as u32 + 1).into())
}

fn require_unit(r: &RateParams, what: &str) -> Result<()> {
    if r.is_unit() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "the {what} formula only holds at alpha = beta = 1"
        )))
    }
}

/// `#{η below ω} / C_{n+1}`.
pub fn prob_paths(u: &TasepState, limits: &Limits) -> Result<BigRational> {
    let below = count::count_paths_below(&u.to_path(), limits)?;
    Ok(BigRational::from_integer(below.into()) / catalan_next(u.len()))
}

/// `#{T : profile(T) = ω} / C_{n+1}`.
pub fn prob_tableaux(u: &TasepState, limits: &Limits) -> Result<BigRational> {
    let fiber = tableaux_with_profile(&u.to_path(), limits)?;
    Ok(BigRational::from_integer(fiber.len().into()) / catalan_next(u.len()))
}

/// `α^{-lb(B)} β^{-rb(B)}`.
pub fn tree_weight(b: &BinaryTree, r: &RateParams) -> BigRational {
    weight(&r.inv_alpha(), &r.inv_beta(), b.lb(), b.rb())
}

/// `α^{-f} β^{-g}`.
pub fn pair_weight(p: &PathPair, r: &RateParams) -> BigRational {
    weight(&r.inv_alpha(), &r.inv_beta(), p.contacts(), p.final_rise())
}

/// `α^{-(1's in the bottom row)} β^{-(unrestricted rows − 1)}`.
pub fn tableau_weight(t: &CatalanTableau, r: &RateParams) -> BigRational {
    weight(
        &r.inv_alpha(),
        &r.inv_beta(),
        t.ones_in_first_row(),
        t.unrestricted_row_count() - 1,
    )
}

/// Unnormalized tree weights grouped by canopy path, for trees of `n + 1`
/// vertices.
fn tree_weights_by_canopy(
    n: usize,
    r: &RateParams,
    limits: &Limits,
) -> Result<HashMap<LatticePath, BigRational>> {
    let (ia, ib) = (r.inv_alpha(), r.inv_beta());
    let mut out: HashMap<LatticePath, BigRational> = HashMap::new();
    for b in enumerate_trees(n + 1, limits)? {
        *out.entry(LatticePath::from_canopy(&b.canopy()))
            .or_insert_with(BigRational::zero) += weight(&ia, &ib, b.lb(), b.rb());
    }
    Ok(out)
}

/// Sum of `p(B)` over trees with canopy `ω(u)`, divided by `Z_n`.
pub fn prob_trees(u: &TasepState, r: &RateParams, limits: &Limits) -> Result<BigRational> {
    let n = u.len();
    let omega = u.to_path();
    let (ia, ib) = (r.inv_alpha(), r.inv_beta());
    let mut numer = BigRational::zero();
    for b in enumerate_trees(n + 1, limits)? {
        if LatticePath::from_canopy(&b.canopy()) == omega {
            numer += weight(&ia, &ib, b.lb(), b.rb());
        }
    }
    Ok(numer / partition_z(n, r, ZMethod::ClosedForm)?)
}

/// Sum of `p(ω, η)` over `η` weakly below `ω(u)`, divided by `Z_n`.
pub fn prob_pairs(u: &TasepState, r: &RateParams, limits: &Limits) -> Result<BigRational> {
    let omega = u.to_path();
    let mut numer = BigRational::zero();
    for eta in count::paths_below(&omega, limits)? {
        let p = PathPair::new(omega.clone(), eta)?;
        numer += pair_weight(&p, r);
    }
    Ok(numer / partition_z(u.len(), r, ZMethod::ClosedForm)?)
}

/// Tableau weights over the profile fiber of `ω(u)`, divided by `Z_n`.
pub fn prob_tableaux_weighted(
    u: &TasepState,
    r: &RateParams,
    limits: &Limits,
) -> Result<BigRational> {
    let numer: BigRational = tableaux_with_profile(&u.to_path(), limits)?
        .iter()
        .map(|t| tableau_weight(t, r))
        .sum();
    Ok(numer / partition_z(u.len(), r, ZMethod::ClosedForm)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZMethod {
    /// `Σ p(B)` over all trees with `n + 1` vertices.
    TreeSum,
    /// Ballot-number closed form, each quotient
    /// `(α^{-(i+1)} − β^{-(i+1)}) / (α^{-1} − β^{-1})` expanded as the
    /// homogeneous sum `Σ_{k=0..i} α^{-k} β^{-(i-k)}` so that `α = β` is fine.
    ClosedForm,
}

/// The normalizing constant `Z_n`.
pub fn partition_z(n: usize, r: &RateParams, method: ZMethod) -> Result<BigRational> {
    partition_z_with(
        n,
        r,
        method,
        &Limits::default().with_enumeration(usize::MAX),
    )
}

pub fn partition_z_with(
    n: usize,
    r: &RateParams,
    method: ZMethod,
    limits: &Limits,
) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("Z_n needs n >= 1".into()));
    }
    let (ia, ib) = (r.inv_alpha(), r.inv_beta());
    match method {
        ZMethod::TreeSum => {
            // Histogram of (lb, rb) first; the enumeration dominates the cost.
            let mut hist: HashMap<(usize, usize), u64> = HashMap::new();
            for b in enumerate_trees(n + 1, limits)? {
                *hist.entry((b.lb(), b.rb())).or_default() += 1;
            }
            Ok(hist
                .into_iter()
                .map(|((lb, rb), k)| weight(&ia, &ib, lb, rb) * BigRational::from_integer(k.into()))
                .sum())
        }
        ZMethod::ClosedForm => {
            let n = n as i64;
            let mut z = BigRational::zero();
            for i in 1..=n {
                let ballot = BigRational::new(binomial(2 * n - i, n) * i, (2 * n - i).into());
                let homogeneous: BigRational = (0..=i as usize)
                    .map(|k| weight(&ia, &ib, k, i as usize - k))
                    .sum();
                z += ballot * homogeneous;
            }
            Ok(z)
        }
    }
}

/// Which expression to evaluate for a whole distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exact solve of the Markov chain.
    Chain,
    Trees,
    Pairs,
    /// Rates 1 only.
    Paths,
    /// Rates 1 only.
    Tableaux,
    /// Branch statistics of tableaux, transported through the tree formula.
    WeightedTableaux,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Chain,
        Method::Trees,
        Method::Pairs,
        Method::Paths,
        Method::Tableaux,
        Method::WeightedTableaux,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Chain => "chain",
            Method::Trees => "trees",
            Method::Pairs => "pairs",
            Method::Paths => "paths",
            Method::Tableaux => "tableaux",
            Method::WeightedTableaux => "weighted-tableaux",
        }
    }
}

/// The stationary distribution on `n` cells, computed by `method`.
pub fn distribution(
    n: usize,
    r: &RateParams,
    method: Method,
    limits: &Limits,
) -> Result<Distribution> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the strip needs at least one cell".into(),
        ));
    }
    let states: Vec<TasepState> = TasepState::all(n).collect();
    let probs: Vec<BigRational> = match method {
        Method::Chain => {
            limits.check_chain(n)?;
            return stationary(&build_chain(n, r)?);
        }
        Method::Trees => {
            let z = partition_z(n, r, ZMethod::ClosedForm)?;
            let by_canopy = tree_weights_by_canopy(n, r, limits)?;
            states
                .iter()
                .map(|u| {
                    by_canopy
                        .get(&u.to_path())
                        .cloned()
                        .unwrap_or_else(BigRational::zero)
                        / &z
                })
                .collect()
        }
        Method::Pairs => states
            .iter()
            .map(|u| prob_pairs(u, r, limits))
            .collect::<Result<_>>()?,
        Method::Paths => {
            require_unit(r, "paths")?;
            states
                .iter()
                .map(|u| prob_paths(u, limits))
                .collect::<Result<_>>()?
        }
        Method::Tableaux => {
            require_unit(r, "tableaux")?;
            states
                .iter()
                .map(|u| prob_tableaux(u, limits))
                .collect::<Result<_>>()?
        }
        Method::WeightedTableaux => states
            .iter()
            .map(|u| prob_tableaux_weighted(u, r, limits))
            .collect::<Result<_>>()?,
    };
    Distribution::new(n, probs)
}

/// `Z_n` at `α = β = 1` is `C_{n+1}`.
pub fn unit_partition(n: usize) -> BigRational {
    catalan_next(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn st(s: &str) -> TasepState {
        s.parse().unwrap()
    }

    fn rates(a: (i64, i64), b: (i64, i64)) -> RateParams {
        RateParams::from_ints(a, b).unwrap()
    }

    fn pair(o: &str, e: &str) -> PathPair {
        PathPair::new(o.parse().unwrap(), e.parse().unwrap()).unwrap()
    }

    #[test]
    fn path_and_tableau_examples() {
        let lim = Limits::default();
        assert_eq!(prob_paths(&st("1"), &lim).unwrap(), q(1, 2));
        assert_eq!(prob_paths(&st("10"), &lim).unwrap(), q(2, 5));
        assert_eq!(prob_paths(&st("11"), &lim).unwrap(), q(1, 5));
        assert_eq!(prob_tableaux(&st("10"), &lim).unwrap(), q(2, 5));
        assert_eq!(prob_tableaux(&st("01"), &lim).unwrap(), q(1, 5));
    }

    #[test]
    fn weight_examples() {
        let r = rates((1, 2), (1, 3));
        assert_eq!(tree_weight(&BinaryTree::leaf(), &r), q(1, 1));
        assert_eq!(tree_weight(&BinaryTree::right_chain(2), &r), q(3, 1));
        let both = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
        assert_eq!(tree_weight(&both, &r), q(6, 1));

        assert_eq!(pair_weight(&pair("E", "E"), &r), q(2, 1));
        assert_eq!(pair_weight(&pair("N", "N"), &r), q(3, 1));
        assert_eq!(pair_weight(&pair("NE", "EN"), &r), q(3, 1));
    }

    #[test]
    fn tree_and_pair_examples() {
        let lim = Limits::default();
        let r = rates((1, 2), (1, 3));
        let (ia, ib) = (q(2, 1), q(3, 1));
        // α / (α + β) = (1/2) / (5/6).
        assert_eq!(prob_trees(&st("1"), &r, &lim).unwrap(), q(3, 5));
        let z1 = &ia + &ib;
        assert_eq!(prob_pairs(&st("0"), &r, &lim).unwrap(), &ia / &z1);
        let z2 = partition_z(2, &r, ZMethod::TreeSum).unwrap();
        assert_eq!(prob_trees(&st("10"), &r, &lim).unwrap(), (&ia + &ib) / &z2);
        assert_eq!(prob_pairs(&st("10"), &r, &lim).unwrap(), (&ia + &ib) / &z2);
    }

    #[test]
    fn partition_examples() {
        let r = rates((1, 2), (1, 3));
        let (ia, ib) = (q(2, 1), q(3, 1));
        let z1 = &ia + &ib;
        let z2 = &ia * &ia + &ia * &ib + &ib * &ib + &ia + &ib;
        for m in [ZMethod::TreeSum, ZMethod::ClosedForm] {
            assert_eq!(partition_z(1, &r, m).unwrap(), z1);
            assert_eq!(partition_z(2, &r, m).unwrap(), z2);
        }
        for n in 1..=8 {
            for m in [ZMethod::TreeSum, ZMethod::ClosedForm] {
                assert_eq!(
                    partition_z(n, &RateParams::unit(), m).unwrap(),
                    unit_partition(n)
                );
            }
        }
    }

    #[test]
    fn z_methods_agree_off_and_on_the_diagonal() {
        for r in [
            rates((1, 4), (2, 3)),
            rates((1, 3), (1, 3)),
            rates((5, 2), (1, 7)),
        ] {
            for n in 1..=7 {
                assert_eq!(
                    partition_z(n, &r, ZMethod::TreeSum).unwrap(),
                    partition_z(n, &r, ZMethod::ClosedForm).unwrap(),
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn unit_rate_methods_reject_other_rates() {
        let lim = Limits::default();
        let r = rates((1, 2), (1, 1));
        assert!(distribution(2, &r, Method::Paths, &lim).is_err());
        assert!(distribution(2, &r, Method::Tableaux, &lim).is_err());
        assert!(distribution(2, &r, Method::Trees, &lim).is_ok());
    }

    #[test]
    fn all_methods_match_the_chain_for_small_n() {
        let lim = Limits::default();
        for r in [
            RateParams::unit(),
            rates((1, 3), (2, 3)),
            rates((1, 4), (1, 2)),
        ] {
            for n in 1..=4 {
                let exact = distribution(n, &r, Method::Chain, &lim).unwrap();
                for m in Method::ALL {
                    if matches!(m, Method::Paths | Method::Tableaux) && !r.is_unit() {
                        continue;
                    }
                    let d = distribution(n, &r, m, &lim).unwrap();
                    assert_eq!(
                        d.first_difference(&exact),
                        None,
                        "{} n = {n} {r:?}",
                        m.name()
                    );
                }
            }
        }
    }

    #[test]
    fn per_state_tree_formula_matches_grouped() {
        let lim = Limits::default();
        let r = rates((2, 3), (1, 4));
        let grouped = distribution(3, &r, Method::Trees, &lim).unwrap();
        for (u, p) in grouped.iter() {
            assert_eq!(&prob_trees(&u, &r, &lim).unwrap(), p);
        }
    }
}
