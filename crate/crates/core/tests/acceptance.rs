//! Acceptance criteria, one line of output per criterion.
//!
//! Every check is exact except the Monte Carlo one, whose threshold is a
//! total-variation distance of 0.01.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use catalan_tasep::bijection::{
    dyck_to_polyomino, pair_of_paths_direct, phi, phi_inverse, polyomino_to_pair,
    tableau_to_pair_direct, tree_to_dyck,
};
use catalan_tasep::count::{catalan, count_paths_below, narayana_count};
use catalan_tasep::tasep::{
    build_chain, distribution, partition_z, simulate, stationary, total_variation, unit_partition,
    Distribution, Method, RateParams, SimulationConfig, TasepState, ZMethod,
};
use catalan_tasep::{enumerate_tableaux, enumerate_trees, LatticePath, Limits, Rational, Step};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const GRID: [(i64, i64); 5] = [(1, 4), (1, 3), (1, 2), (2, 3), (1, 1)];

fn grid() -> impl Iterator<Item = RateParams> {
    GRID.iter().flat_map(|&a| {
        GRID.iter()
            .map(move |&b| RateParams::from_ints(a, b).unwrap())
    })
}

fn show(r: &RateParams) -> String {
    format!("alpha={} beta={}", r.alpha, r.beta)
}

fn limits() -> Limits {
    Limits::default()
}

fn within(budget: Duration, start: Instant, detail: String) -> Outcome {
    let took = start.elapsed();
    if took <= budget {
        Ok(format!(
            "{detail}; {:.2}s (budget {}s)",
            took.as_secs_f64(),
            budget.as_secs()
        ))
    } else {
        Err(format!(
            "took {:.2}s, budget {}s",
            took.as_secs_f64(),
            budget.as_secs()
        ))
    }
}

fn ac1_catalan_counts() -> Outcome {
    let start = Instant::now();
    for n in 1..=10 {
        let c = catalan(n as u32) as usize;
        let t = enumerate_tableaux(n, &limits())
            .map_err(|e| e.to_string())?
            .len();
        let b = enumerate_trees(n, &limits())
            .map_err(|e| e.to_string())?
            .len();
        if t != c || b != c {
            return Err(format!("n={n}: {t} tableaux, {b} trees, C_n={c}"));
        }
    }
    within(
        Duration::from_secs(30),
        start,
        "C_1..C_10 matched, C_10 = 16796".into(),
    )
}

fn ac2_bijection() -> Outcome {
    for n in 1..=10 {
        let trees: HashSet<_> = enumerate_trees(n, &limits()).unwrap().into_iter().collect();
        let mut image = HashSet::new();
        for t in enumerate_tableaux(n, &limits()).unwrap() {
            let b = phi(&t).map_err(|e| format!("phi failed on\n{t}: {e}"))?;
            if phi_inverse(&b).as_ref() != Ok(&t) {
                return Err(format!("phi_inverse(phi(T)) != T for\n{t}"));
            }
            if !image.insert(b.clone()) {
                return Err(format!("phi not injective: second preimage of {b}"));
            }
        }
        if image != trees {
            return Err(format!("n={n}: image is not the set of trees"));
        }
        for b in &trees {
            let back = phi_inverse(b).and_then(|t| phi(&t));
            if back.as_ref() != Ok(b) {
                return Err(format!("phi(phi_inverse(B)) != B for {b}"));
            }
        }
    }
    Ok("bijective with two-sided inverse for n = 1..10".into())
}

fn ac3_canopy_is_profile() -> Outcome {
    let mut checked = 0;
    for n in 1..=10 {
        for t in enumerate_tableaux(n, &limits()).unwrap() {
            let b = phi(&t).unwrap();
            if LatticePath::from_canopy(&b.canopy()) != t.profile() {
                return Err(format!(
                    "canopy {} vs profile {} for\n{t}",
                    b.canopy(),
                    t.profile()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} tableaux"))
}

fn ac4_branch_statistics() -> Outcome {
    let mut checked = 0;
    for n in 1..=10 {
        for t in enumerate_tableaux(n, &limits()).unwrap() {
            let b = phi(&t).unwrap();
            if b.lb() != t.ones_in_first_row() || b.rb() + 1 != t.unrestricted_row_count() {
                return Err(format!(
                    "lb={} rb={} vs ones={} unrestricted={} for\n{t}",
                    b.lb(),
                    b.rb(),
                    t.ones_in_first_row(),
                    t.unrestricted_row_count()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} tableaux"))
}

fn ac5_narayana() -> Outcome {
    let nene: LatticePath = "NENE".parse().unwrap();
    if narayana_count(&nene) != 5.into() {
        return Err(format!("NENE gives {}", narayana_count(&nene)));
    }
    let mut checked = 0;
    for len in 0..=12usize {
        for mask in 0u32..(1 << len) {
            let w = LatticePath::new(
                (0..len)
                    .map(|i| if mask >> i & 1 == 1 { Step::N } else { Step::E })
                    .collect(),
            );
            let brute = count_paths_below(&w, &limits()).unwrap();
            if narayana_count(&w) != brute.into() {
                return Err(format!(
                    "omega={w}: det {} vs count {brute}",
                    narayana_count(&w)
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} paths, NENE -> 5"))
}

fn compare(label: &str, got: &Distribution, want: &Distribution) -> Result<(), String> {
    match got.first_difference(want) {
        None => Ok(()),
        Some(u) => Err(format!(
            "{label}: state {u}: {} vs chain {}",
            got.get(&u),
            want.get(&u)
        )),
    }
}

fn ac6_unit_rates() -> Outcome {
    let r = RateParams::unit();
    for n in 1..=6 {
        let chain = distribution(n, &r, Method::Chain, &limits()).map_err(|e| e.to_string())?;
        for m in [Method::Paths, Method::Tableaux] {
            let d = distribution(n, &r, m, &limits()).map_err(|e| e.to_string())?;
            compare(&format!("n={n} {}", m.name()), &d, &chain)?;
        }
        if n == 2 {
            let want: Vec<Rational> = [(1, 5), (1, 5), (2, 5), (1, 5)]
                .iter()
                .map(|&(p, q)| Rational::new(p.into(), q.into()))
                .collect();
            if chain.probs() != want.as_slice() {
                return Err(format!("n=2 chain gives {chain}"));
            }
        }
    }
    Ok("n = 1..6 exact; n=2 -> (1/5, 1/5, 2/5, 1/5)".into())
}

fn ac7_weighted() -> Outcome {
    let start = Instant::now();
    for n in 1..=5 {
        for r in grid() {
            let chain = distribution(n, &r, Method::Chain, &limits()).map_err(|e| e.to_string())?;
            for m in [Method::Trees, Method::Pairs] {
                let d = distribution(n, &r, m, &limits()).map_err(|e| e.to_string())?;
                compare(&format!("n={n} {} {}", show(&r), m.name()), &d, &chain)?;
            }
        }
    }
    within(
        Duration::from_secs(60),
        start,
        "n = 1..5 on the 5x5 grid".into(),
    )
}

fn ac8_partition() -> Outcome {
    for n in 1..=10 {
        for r in grid() {
            let tree = partition_z(n, &r, ZMethod::TreeSum).map_err(|e| e.to_string())?;
            let closed = partition_z(n, &r, ZMethod::ClosedForm).map_err(|e| e.to_string())?;
            if tree != closed {
                return Err(format!(
                    "n={n} {}: tree sum {tree} vs closed form {closed}",
                    show(&r)
                ));
            }
        }
        let unit = partition_z(n, &RateParams::unit(), ZMethod::ClosedForm).unwrap();
        if unit != unit_partition(n) {
            return Err(format!("n={n}: Z_n(1,1) = {unit}, not C_(n+1)"));
        }
    }
    Ok("n = 1..10 on the grid, Z_n(1,1) = C_(n+1)".into())
}

fn ac9_pipelines() -> Outcome {
    let mut trees_checked = 0;
    let mut tableaux_checked = 0;
    for n in 1..=9 {
        for b in enumerate_trees(n, &limits()).unwrap() {
            let direct = pair_of_paths_direct(&b).map_err(|e| format!("{b}: {e}"))?;
            let via = tree_to_dyck(&b)
                .and_then(|w| dyck_to_polyomino(&w))
                .and_then(|p| polyomino_to_pair(&p))
                .map_err(|e| format!("{b}: {e}"))?;
            if via != direct {
                return Err(format!(
                    "tree {b}: polyomino route {via:?} vs right heights {direct:?}"
                ));
            }
            trees_checked += 1;
        }
        for t in enumerate_tableaux(n, &limits()).unwrap() {
            let fig = tableau_to_pair_direct(&t).map_err(|e| format!("{t}: {e}"))?;
            let via = pair_of_paths_direct(&phi(&t).unwrap()).unwrap();
            if fig != via {
                return Err(format!(
                    "tableau\n{t}direct {fig:?} vs through the tree {via:?}"
                ));
            }
            tableaux_checked += 1;
        }
    }
    Ok(format!(
        "{trees_checked} trees, {tableaux_checked} tableaux"
    ))
}

fn ac10_duality() -> Outcome {
    for n in 1..=6 {
        let by_rates: Vec<(RateParams, Distribution)> = grid()
            .map(|r| {
                let d = stationary(&build_chain(n, &r).unwrap()).unwrap();
                (r, d)
            })
            .collect();
        for (r, d) in &by_rates {
            let swapped = r.swapped();
            let (_, dual) = by_rates.iter().find(|(s, _)| *s == swapped).unwrap();
            let trees_dual = distribution(n, &swapped, Method::Trees, &limits()).unwrap();
            for u in TasepState::all(n) {
                let v = u.reverse_complement();
                if d.get(&u) != dual.get(&v) || d.get(&u) != trees_dual.get(&v) {
                    return Err(format!(
                        "n={n} {} u={u}: {} vs dual {}",
                        show(r),
                        d.get(&u),
                        dual.get(&v)
                    ));
                }
            }
        }
    }
    Ok("n = 1..6 on the grid".into())
}

fn ac11_monte_carlo() -> Outcome {
    let chain = build_chain(3, &RateParams::unit()).unwrap();
    let exact = stationary(&chain).unwrap();
    let cfg = SimulationConfig {
        steps: 1_000_000,
        burn_in: 1_000,
        seed: 2007,
        start: 0,
    };
    let emp = simulate(&chain, &cfg).map_err(|e| e.to_string())?;
    let tv = total_variation(&emp, &exact);
    if tv <= 0.01 {
        Ok(format!(
            "total variation {tv:.5} <= 0.01 (seed {}, 10^6 steps)",
            cfg.seed
        ))
    } else {
        Err(format!("total variation {tv:.5} > 0.01"))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1 Catalan counts", ac1_catalan_counts),
        ("AC2 tableau/tree bijection", ac2_bijection),
        ("AC3 canopy equals profile", ac3_canopy_is_profile),
        (
            "AC4 branch lengths vs tableau statistics",
            ac4_branch_statistics,
        ),
        ("AC5 Narayana determinant", ac5_narayana),
        ("AC6 stationary law at alpha = beta = 1", ac6_unit_rates),
        ("AC7 weighted tree and pair formulas", ac7_weighted),
        ("AC8 partition function", ac8_partition),
        ("AC9 pair-of-paths routes agree", ac9_pipelines),
        ("AC10 left/right duality", ac10_duality),
        ("AC11 Monte Carlo sanity", ac11_monte_carlo),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} [{secs:.2}s]"),
            Err(witness) => {
                failed += 1;
                println!("[FAIL] {name}: {witness} [{secs:.2}s]");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
