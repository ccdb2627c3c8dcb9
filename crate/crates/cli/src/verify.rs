//! Batch verification suites and their reports.
//!
//! Every check compares exact values. A failing check carries the object or
//! state where the comparison broke.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use catalan_tasep::bijection::{
    dyck_to_polyomino, pair_of_paths_direct, phi, phi_inverse, polyomino_to_pair,
    tableau_to_pair_direct, tree_to_dyck,
};
use catalan_tasep::count::{catalan, count_paths_below, narayana_count};
use catalan_tasep::tasep::{
    distribution, partition_z_with, unit_partition, Distribution, Method, RateParams, TasepState,
    ZMethod,
};
use catalan_tasep::{
    enumerate_tableaux, enumerate_trees, BinaryTree, LatticePath, Limits, Rational, Step,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::wire::{format_rational, parse_rational, Object};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Bijections,
    Pipelines,
    Tasep,
    Partition,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Counts,
        Suite::Bijections,
        Suite::Pipelines,
        Suite::Tasep,
        Suite::Partition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Bijections => "bijections",
            Suite::Pipelines => "pipelines",
            Suite::Tasep => "tasep",
            Suite::Partition => "partition",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Counts | Suite::Partition => 10,
            Suite::Bijections => 8,
            Suite::Pipelines => 9,
            Suite::Tasep => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown suite {s:?}")))
    }
}

/// The rate grid used when none is given.
pub const DEFAULT_GRID: &str = "1/4,1/3,1/2,2/3,1";

/// Comma-separated rationals, each in `(0, 1]`.
pub fn parse_grid(s: &str) -> Result<Vec<Rational>, CliError> {
    let values = s
        .split(',')
        .map(|v| {
            let r = parse_rational(v.trim())?;
            let ok = r > Rational::from_integer(0.into()) && r <= Rational::from_integer(1.into());
            if ok {
                Ok(r)
            } else {
                Err(CliError::Usage(format!("grid value {v} is outside (0, 1]")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen = HashSet::new();
    Ok(values
        .into_iter()
        .filter(|r| seen.insert(r.clone()))
        .collect())
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub grid: Vec<Rational>,
    pub limits: Limits,
    /// Corrupt one computed value at the largest size, to prove the suite
    /// can fail.
    pub mutate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Result of one suite. The duration is kept out of the serialized report so
/// identical runs print identical bytes.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(skip)]
    pub duration: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let params = match &c.params {
                Value::Object(m) => m
                    .iter()
                    .map(|(k, v)| match v {
                        Value::String(s) => format!("{k}={s}"),
                        v => format!("{k}={v}"),
                    })
                    .collect::<Vec<_>>()
                    .join(" "),
                v => v.to_string(),
            };
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {} {params}\n", c.name));
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    out.push_str(&format!("       {line}\n"));
                }
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{}: {} checks, {} passed, {} failed\n",
            self.suite, s.total, s.passed, s.failed
        ));
        out
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn record(&mut self, name: &str, params: Value, outcome: Result<(), String>) {
        self.checks.push(Check {
            name: name.to_string(),
            params,
            pass: outcome.is_ok(),
            witness: outcome.err(),
        });
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let mut rec = Recorder { checks: Vec::new() };
    match suite {
        Suite::Counts => counts(opts, &mut rec)?,
        Suite::Bijections => bijections(opts, &mut rec)?,
        Suite::Pipelines => pipelines(opts, &mut rec)?,
        Suite::Tasep => tasep(opts, &mut rec)?,
        Suite::Partition => partition(opts, &mut rec)?,
    }
    let passed = rec.checks.iter().filter(|c| c.pass).count();
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        max_n: opts.max_n,
        summary: Summary {
            total: rec.checks.len(),
            passed,
            failed: rec.checks.len() - passed,
        },
        checks: rec.checks,
        duration: start.elapsed(),
    })
}

fn mutated(opts: &VerifyOptions, n: usize) -> bool {
    opts.mutate && n == opts.max_n
}

fn compact(obj: Object) -> String {
    obj.to_compact()
}

fn counts(opts: &VerifyOptions, rec: &mut Recorder) -> Result<(), CliError> {
    for n in 1..=opts.max_n {
        let expected = catalan(n as u32) as usize;
        let tableaux = enumerate_tableaux(n, &opts.limits)?.len() + usize::from(mutated(opts, n));
        let trees = enumerate_trees(n, &opts.limits)?.len();
        let outcome = if tableaux == expected && trees == expected {
            Ok(())
        } else {
            Err(format!(
                "{tableaux} tableaux, {trees} trees, C_{n} = {expected}"
            ))
        };
        rec.record("catalan-count", json!({ "n": n }), outcome);
    }
    Ok(())
}

fn bijections(opts: &VerifyOptions, rec: &mut Recorder) -> Result<(), CliError> {
    for n in 1..=opts.max_n {
        let tableaux = enumerate_tableaux(n, &opts.limits)?;
        let trees = enumerate_trees(n, &opts.limits)?;
        let mut images: Vec<BinaryTree> = tableaux.iter().map(phi).collect::<Result<_, _>>()?;
        if mutated(opts, n) {
            images[0] = images[images.len() - 1].clone();
        }
        let params = json!({ "n": n });

        let bijective = (|| {
            let mut seen = HashSet::new();
            for (t, b) in tableaux.iter().zip(&images) {
                if phi_inverse(b).as_ref() != Ok(t) {
                    return Err(format!(
                        "phi_inverse(phi(T)) differs from T = {}",
                        compact(Object::Tableau(t.clone()))
                    ));
                }
                if !seen.insert(b) {
                    return Err(format!(
                        "two tableaux map to {}",
                        compact(Object::Tree(b.clone()))
                    ));
                }
            }
            for b in &trees {
                if !seen.contains(b) {
                    return Err(format!(
                        "tree {} is not hit",
                        compact(Object::Tree(b.clone()))
                    ));
                }
            }
            Ok(())
        })();
        rec.record("phi-bijective", params.clone(), bijective);

        let canopy = tableaux
            .iter()
            .zip(&images)
            .find(|(t, b)| LatticePath::from_canopy(&b.canopy()) != t.profile())
            .map_or(Ok(()), |(t, b)| {
                Err(format!(
                    "canopy {} vs profile {} for T = {}",
                    b.canopy(),
                    t.profile(),
                    compact(Object::Tableau(t.clone()))
                ))
            });
        rec.record("canopy-equals-profile", params.clone(), canopy);

        let stats = tableaux
            .iter()
            .zip(&images)
            .find(|(t, b)| {
                b.lb() != t.ones_in_first_row() || b.rb() + 1 != t.unrestricted_row_count()
            })
            .map_or(Ok(()), |(t, b)| {
                Err(format!(
                    "lb={} rb={} but ones_in_first_row={} unrestricted_rows={} for T = {}",
                    b.lb(),
                    b.rb(),
                    t.ones_in_first_row(),
                    t.unrestricted_row_count(),
                    compact(Object::Tableau(t.clone()))
                ))
            });
        rec.record("branch-statistics", params, stats);
    }
    Ok(())
}

fn pipelines(opts: &VerifyOptions, rec: &mut Recorder) -> Result<(), CliError> {
    for n in 1..=opts.max_n {
        let trees = enumerate_trees(n, &opts.limits)?;
        let direct: Vec<_> = trees
            .iter()
            .map(pair_of_paths_direct)
            .collect::<Result<_, _>>()?;
        let mut tree_routes = Ok(());
        for (i, b) in trees.iter().enumerate() {
            let via = tree_to_dyck(b)
                .and_then(|w| dyck_to_polyomino(&w))
                .and_then(|p| polyomino_to_pair(&p))?;
            let want = if i == 0 && mutated(opts, n) {
                direct.last().unwrap_or(&direct[0])
            } else {
                &direct[i]
            };
            if via != *want {
                tree_routes = Err(format!(
                    "tree {}: polyomino route {} vs right heights {}",
                    compact(Object::Tree(b.clone())),
                    compact(Object::Pair(via)),
                    compact(Object::Pair(want.clone()))
                ));
                break;
            }
        }
        rec.record("tree-routes-agree", json!({ "n": n }), tree_routes);

        let mut tableau_route = Ok(());
        for t in enumerate_tableaux(n, &opts.limits)? {
            let fig = tableau_to_pair_direct(&t)?;
            let via = pair_of_paths_direct(&phi(&t)?)?;
            if fig != via {
                tableau_route = Err(format!(
                    "T = {}: direct {} vs through the tree {}",
                    compact(Object::Tableau(t.clone())),
                    compact(Object::Pair(fig)),
                    compact(Object::Pair(via))
                ));
                break;
            }
        }
        rec.record("tableau-route-agrees", json!({ "n": n }), tableau_route);

        let mut narayana = Ok(());
        'paths: for mask in 0u32..1 << n {
            let omega = LatticePath::new(
                (0..n)
                    .map(|i| {
                        if mask >> (n - 1 - i) & 1 == 1 {
                            Step::N
                        } else {
                            Step::E
                        }
                    })
                    .collect(),
            );
            let brute = count_paths_below(&omega, &opts.limits)?;
            let det = narayana_count(&omega);
            if det != brute.into() {
                narayana = Err(format!("omega = {omega}: determinant {det}, count {brute}"));
                break 'paths;
            }
        }
        rec.record("narayana-determinant", json!({ "length": n }), narayana);
    }
    Ok(())
}

fn rate_params(r: &RateParams) -> Value {
    json!({ "alpha": format_rational(&r.alpha), "beta": format_rational(&r.beta) })
}

fn with_n(mut params: Value, n: usize) -> Value {
    params["n"] = json!(n);
    params
}

fn grid_rates(grid: &[Rational]) -> Vec<RateParams> {
    grid.iter()
        .flat_map(|a| {
            grid.iter()
                .map(move |b| RateParams::new(a.clone(), b.clone()).expect("grid is positive"))
        })
        .collect()
}

fn difference(label: &str, got: &Distribution, want: &Distribution) -> Result<(), String> {
    match got.first_difference(want) {
        None => Ok(()),
        Some(u) => Err(format!(
            "state {u}: {label} gives {}, chain gives {}",
            format_rational(got.get(&u)),
            format_rational(want.get(&u))
        )),
    }
}

fn tasep(opts: &VerifyOptions, rec: &mut Recorder) -> Result<(), CliError> {
    let rates = grid_rates(&opts.grid);
    for n in 1..=opts.max_n {
        let mut chains: HashMap<usize, Distribution> = HashMap::new();
        for (i, r) in rates.iter().enumerate() {
            let mut chain = distribution(n, r, Method::Chain, &opts.limits)?;
            if i == 0 && mutated(opts, n) {
                let mut w = chain.probs().to_vec();
                w[0] = &w[0] * Rational::from_integer(2.into());
                chain = Distribution::from_weights(n, w)?;
            }
            let mut methods = vec![Method::Trees, Method::Pairs, Method::WeightedTableaux];
            if r.is_unit() {
                methods.extend([Method::Paths, Method::Tableaux]);
            }
            let mut outcome = Ok(());
            for m in methods {
                let d = distribution(n, r, m, &opts.limits)?;
                if let Err(e) = difference(m.name(), &d, &chain) {
                    outcome = Err(e);
                    break;
                }
            }
            rec.record("formula-agreement", with_n(rate_params(r), n), outcome);
            chains.insert(i, chain);
        }
        for (i, r) in rates.iter().enumerate() {
            let swapped = r.swapped();
            let Some(j) = rates.iter().position(|s| *s == swapped) else {
                continue;
            };
            let (d, dual) = (&chains[&i], &chains[&j]);
            let outcome = TasepState::all(n)
                .find(|u| d.get(u) != dual.get(&u.reverse_complement()))
                .map_or(Ok(()), |u| {
                    Err(format!(
                        "state {u}: {} but {} at swapped rates for {}",
                        format_rational(d.get(&u)),
                        format_rational(dual.get(&u.reverse_complement())),
                        u.reverse_complement()
                    ))
                });
            rec.record("duality", with_n(rate_params(r), n), outcome);
        }
        if n == 2 {
            if let Some(i) = rates.iter().position(RateParams::is_unit) {
                let want: Vec<Rational> = [(1, 5), (1, 5), (2, 5), (1, 5)]
                    .iter()
                    .map(|&(p, q): &(i64, i64)| Rational::new(p.into(), q.into()))
                    .collect();
                let got = &chains[&i];
                let outcome = if got.probs() == want.as_slice() {
                    Ok(())
                } else {
                    Err(format!("chain gives {got}"))
                };
                rec.record(
                    "two-cell-law",
                    json!({ "n": 2, "alpha": "1/1", "beta": "1/1" }),
                    outcome,
                );
            }
        }
    }
    Ok(())
}

fn partition(opts: &VerifyOptions, rec: &mut Recorder) -> Result<(), CliError> {
    let rates = grid_rates(&opts.grid);
    // The tree sum enumerates trees with n + 1 vertices.
    let limits = opts
        .limits
        .with_enumeration(opts.limits.max_enumeration.max(opts.max_n + 1));
    for n in 1..=opts.max_n {
        for (i, r) in rates.iter().enumerate() {
            let tree = partition_z_with(n, r, ZMethod::TreeSum, &limits)?;
            let mut closed = partition_z_with(n, r, ZMethod::ClosedForm, &limits)?;
            if i == 0 && mutated(opts, n) {
                closed += Rational::from_integer(1.into());
            }
            let outcome = if tree == closed {
                Ok(())
            } else {
                Err(format!(
                    "tree sum {}, closed form {}",
                    format_rational(&tree),
                    format_rational(&closed)
                ))
            };
            rec.record("partition-closed-form", with_n(rate_params(r), n), outcome);
        }
        let unit = partition_z_with(n, &RateParams::unit(), ZMethod::ClosedForm, &limits)?;
        let want = unit_partition(n);
        let outcome = if unit == want {
            Ok(())
        } else {
            Err(format!(
                "Z = {}, C_(n+1) = {}",
                format_rational(&unit),
                format_rational(&want)
            ))
        };
        rec.record("partition-unit-catalan", json!({ "n": n }), outcome);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_n: usize, grid: &str) -> VerifyOptions {
        VerifyOptions {
            max_n,
            grid: parse_grid(grid).unwrap(),
            limits: Limits::default(),
            mutate: false,
        }
    }

    #[test]
    fn counts_suite() {
        let report = run_suite(Suite::Counts, &opts(10, DEFAULT_GRID)).unwrap();
        assert!(report.passed());
        assert_eq!(report.summary.total, 10);
    }

    #[test]
    fn tasep_suite_small() {
        let report = run_suite(Suite::Tasep, &opts(2, "1")).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "two-cell-law" && c.pass));
    }

    #[test]
    fn mutation_is_caught() {
        for suite in Suite::ALL {
            let mut o = opts(3, "1/2,1");
            o.mutate = true;
            let report = run_suite(suite, &o).unwrap();
            assert!(!report.passed(), "{suite} missed the mutation");
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.pass).collect();
            assert!(failed.iter().all(|c| c.witness.is_some()));
        }
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("1/2, 1, 2/4").unwrap().len(), 2);
        assert!(parse_grid("3/2").is_err());
        assert!(parse_grid("0").is_err());
    }
}
