use std::collections::BTreeMap;

use catalan_tasep::bijection::{
    dyck_to_polyomino, pair_of_paths_direct, phi, phi_inverse, polyomino_to_pair,
    tableau_to_pair_direct, tree_to_dyck,
};
use catalan_tasep::count::{catalan, narayana_count};
use catalan_tasep::tasep::{
    distribution, partition_z, prob_trees, Method, RateParams, TasepState, ZMethod,
};
use catalan_tasep::{
    enumerate_tableaux, enumerate_trees, tableaux_with_profile, BinaryTree, LatticePath, Limits,
    Rational, Shape,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn tree(max_size: u32) -> impl Strategy<Value = BinaryTree> {
    Just(BinaryTree::empty()).prop_recursive(8, max_size, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| BinaryTree::node(l, r))
    })
}

fn rate() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=12).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn phi_roundtrips_on_large_trees(b in tree(40)) {
        prop_assume!(!b.is_empty());
        let t = phi_inverse(&b).unwrap();
        prop_assert!(t.is_valid());
        prop_assert_eq!(t.index(), b.size());
        prop_assert_eq!(phi(&t).unwrap(), b.clone());
        prop_assert_eq!(LatticePath::from_canopy(&b.canopy()), t.profile());
        prop_assert_eq!(b.lb(), t.ones_in_first_row());
        prop_assert_eq!(b.rb() + 1, t.unrestricted_row_count());
    }

    #[test]
    fn routes_agree_on_large_trees(b in tree(40)) {
        prop_assume!(!b.is_empty());
        let direct = pair_of_paths_direct(&b).unwrap();
        let via = polyomino_to_pair(&dyck_to_polyomino(&tree_to_dyck(&b).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(&via, &direct);
        let t = phi_inverse(&b).unwrap();
        prop_assert_eq!(tableau_to_pair_direct(&t).unwrap(), direct.clone());
        prop_assert_eq!(direct.omega(), &t.profile());
    }

    #[test]
    fn dyck_word_shape(b in tree(40)) {
        prop_assume!(!b.is_empty());
        let w = tree_to_dyck(&b).unwrap();
        prop_assert_eq!(w.internal_count(), b.size());
        prop_assert_eq!(w.len(), 2 * b.size() + 1);
    }

    #[test]
    fn partition_forms_agree_at_random_rates(a in rate(), c in rate()) {
        // The tree sum and the closed form agree at arbitrary positive rates.
        let r = RateParams::new(a, c).unwrap();
        for n in 1..=6 {
            prop_assert_eq!(
                partition_z(n, &r, ZMethod::TreeSum).unwrap(),
                partition_z(n, &r, ZMethod::ClosedForm).unwrap()
            );
        }
    }

    #[test]
    fn tree_formula_duality_at_any_rates(a in rate(), c in rate()) {
        let r = RateParams::new(a, c).unwrap();
        let lim = Limits::default();
        for n in 1..=5 {
            for u in TasepState::all(n) {
                prop_assert_eq!(
                    prob_trees(&u, &r, &lim).unwrap(),
                    prob_trees(&u.reverse_complement(), &r.swapped(), &lim).unwrap()
                );
            }
        }
    }
}

#[test]
fn profile_fibers_match_narayana() {
    // Tableaux with a given profile are as many as paths below it.
    let lim = Limits::default();
    for n in 1..=8 {
        let mut fibers: BTreeMap<LatticePath, usize> = BTreeMap::new();
        for t in enumerate_tableaux(n, &lim).unwrap() {
            *fibers.entry(t.profile()).or_default() += 1;
        }
        assert_eq!(fibers.len(), 1 << (n - 1), "n={n}");
        for (omega, count) in &fibers {
            assert_eq!(narayana_count(omega), (*count).into(), "omega={omega}");
            assert_eq!(tableaux_with_profile(omega, &lim).unwrap().len(), *count);
        }
    }
}

#[test]
fn phi_transports_shapes_to_canopies() {
    let lim = Limits::default();
    for n in 1..=8 {
        for b in enumerate_trees(n, &lim).unwrap() {
            let t = phi_inverse(&b).unwrap();
            let shape = Shape::from_profile(&LatticePath::from_canopy(&b.canopy()));
            assert_eq!(t.shape(), &shape, "{b}");
        }
        assert_eq!(
            enumerate_trees(n, &lim).unwrap().len() as u64,
            catalan(n as u32)
        );
    }
}

fn grid_points() -> Vec<RateParams> {
    [
        ((1, 4), (2, 3)),
        ((1, 2), (1, 2)),
        ((1, 3), (1, 1)),
        ((1, 1), (1, 4)),
    ]
    .into_iter()
    .map(|(a, b)| RateParams::from_ints(a, b).unwrap())
    .collect()
}

#[test]
fn formulas_match_the_chain_at_six_cells() {
    let lim = Limits::default();
    for r in grid_points() {
        let chain = distribution(6, &r, Method::Chain, &lim).unwrap();
        for m in [Method::Trees, Method::Pairs, Method::WeightedTableaux] {
            let d = distribution(6, &r, m, &lim).unwrap();
            assert_eq!(d.first_difference(&chain), None, "{} {:?}", m.name(), r);
        }
    }
}

#[test]
fn tree_probabilities_are_normalized() {
    let lim = Limits::default();
    for n in 1..=7 {
        for r in grid_points() {
            let total: Rational = TasepState::all(n)
                .map(|u| prob_trees(&u, &r, &lim).unwrap())
                .sum();
            assert!(total.is_one(), "n={n}");
            assert!(TasepState::all(n).all(|u| !prob_trees(&u, &r, &lim).unwrap().is_zero()));
        }
    }
}
