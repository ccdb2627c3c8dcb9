//! The enumerate, map, tasep and simulate commands. Each returns the exact
//! text to print on standard output.

use catalan_tasep::bijection::{
    dyck_to_polyomino, pair_of_paths_direct, phi, phi_inverse, polyomino_to_pair,
    tableau_to_pair_direct, tree_to_dyck,
};
use catalan_tasep::tasep::{
    build_chain, distribution, simulate as run_chain, stationary, total_variation, Method,
    RateParams, SimulationConfig,
};
use catalan_tasep::{enumerate_tableaux, enumerate_trees, LatticePath, Limits, Step};
use serde::Serialize;

use crate::error::CliError;
use crate::wire::{distribution_to_wire, format_rational, Kind, Object};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(CliError::Usage(format!(
                "unknown format {s:?}; use json or text"
            ))),
        }
    }
}

pub fn parse_method(s: &str) -> Result<Method, CliError> {
    Method::ALL
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| {
            let names: Vec<_> = Method::ALL.iter().map(Method::name).collect();
            CliError::Usage(format!(
                "unknown method {s:?}; use one of {}",
                names.join(", ")
            ))
        })
}

/// Every object of `kind` and size `n`, ordered by serialization.
pub fn enumerate_objects(kind: Kind, n: usize, limits: &Limits) -> Result<Vec<Object>, CliError> {
    let trees = || enumerate_trees(n, limits).map_err(CliError::from);
    let mut objects: Vec<Object> = match kind {
        Kind::Tableau => enumerate_tableaux(n, limits)?
            .into_iter()
            .map(Object::Tableau)
            .collect(),
        Kind::Tree => trees()?.into_iter().map(Object::Tree).collect(),
        Kind::Pair => trees()?
            .iter()
            .map(|b| pair_of_paths_direct(b).map(Object::Pair))
            .collect::<Result<_, _>>()?,
        Kind::Dyck => trees()?
            .iter()
            .map(|b| tree_to_dyck(b).map(Object::Dyck))
            .collect::<Result<_, _>>()?,
        Kind::Polyomino => trees()?
            .iter()
            .map(|b| {
                tree_to_dyck(b)
                    .and_then(|w| dyck_to_polyomino(&w))
                    .map(Object::Polyomino)
            })
            .collect::<Result<_, _>>()?,
        Kind::Path => {
            if n > limits.max_path_len {
                return Err(CliError::Cap(catalan_tasep::Error::CapExceeded {
                    what: "path length",
                    requested: n,
                    cap: limits.max_path_len,
                }));
            }
            (0u64..1 << n)
                .map(|mask| {
                    Object::Path(LatticePath::new(
                        (0..n)
                            .map(|i| {
                                if mask >> (n - 1 - i) & 1 == 1 {
                                    Step::N
                                } else {
                                    Step::E
                                }
                            })
                            .collect(),
                    ))
                })
                .collect()
        }
        Kind::Distribution => {
            return Err(CliError::Usage(
                "distributions are not enumerable; use the tasep command".into(),
            ))
        }
    };
    let mut keyed: Vec<(String, Object)> = objects.drain(..).map(|o| (o.to_compact(), o)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, o)| o).collect())
}

pub fn cmd_enumerate(
    kind: Kind,
    n: usize,
    count_only: bool,
    format: Format,
    limits: &Limits,
) -> Result<String, CliError> {
    let objects = enumerate_objects(kind, n, limits)?;
    if count_only {
        return Ok(format!("{}\n", objects.len()));
    }
    Ok(match format {
        Format::Json => {
            let values: Vec<_> = objects.iter().map(Object::to_json).collect();
            format!("{}\n", serde_json::Value::Array(values))
        }
        Format::Text => {
            let sep = if kind == Kind::Tableau { "\n\n" } else { "\n" };
            let texts: Vec<String> = objects
                .iter()
                .map(|o| o.to_text().trim_end().to_string())
                .collect();
            format!("{}\n", texts.join(sep))
        }
    })
}

/// The `(from, to)` pairs accepted by [`cmd_map`].
pub const MAPS: [(Kind, Kind); 7] = [
    (Kind::Tableau, Kind::Tree),
    (Kind::Tree, Kind::Tableau),
    (Kind::Tableau, Kind::Pair),
    (Kind::Tree, Kind::Pair),
    (Kind::Tree, Kind::Dyck),
    (Kind::Dyck, Kind::Polyomino),
    (Kind::Polyomino, Kind::Pair),
];

pub fn map_object(obj: &Object, to: Kind) -> Result<Object, CliError> {
    let out = match (obj, to) {
        (Object::Tableau(t), Kind::Tree) => phi(t).map(Object::Tree),
        (Object::Tree(b), Kind::Tableau) => phi_inverse(b).map(Object::Tableau),
        (Object::Tableau(t), Kind::Pair) => tableau_to_pair_direct(t).map(Object::Pair),
        (Object::Tree(b), Kind::Pair) => pair_of_paths_direct(b).map(Object::Pair),
        (Object::Tree(b), Kind::Dyck) => tree_to_dyck(b).map(Object::Dyck),
        (Object::Dyck(w), Kind::Polyomino) => dyck_to_polyomino(w).map(Object::Polyomino),
        (Object::Polyomino(p), Kind::Pair) => polyomino_to_pair(p).map(Object::Pair),
        _ => return Err(unsupported(obj.kind(), to)),
    };
    out.map_err(CliError::invalid)
}

fn unsupported(from: Kind, to: Kind) -> CliError {
    CliError::UnsupportedMap {
        from: from.to_string(),
        to: to.to_string(),
        supported: MAPS
            .iter()
            .map(|(a, b)| format!("{a}->{b}"))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

pub fn cmd_map(from: Kind, to: Kind, input: &str, format: Format) -> Result<String, CliError> {
    if !MAPS.contains(&(from, to)) {
        return Err(unsupported(from, to));
    }
    let obj = Object::parse(from, input)?;
    let out = map_object(&obj, to)?;
    Ok(match format {
        Format::Json => format!("{}\n", out.to_compact()),
        Format::Text => format!("{}\n", out.to_text().trim_end()),
    })
}

pub fn cmd_tasep(
    n: usize,
    rates: &RateParams,
    method: Method,
    format: Format,
    limits: &Limits,
) -> Result<String, CliError> {
    let d = distribution(n, rates, method, limits)?;
    Ok(match format {
        Format::Text => format!("{d}\n"),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&distribution_to_wire(&d)).expect("serializable")
        ),
    })
}

#[derive(Debug, Serialize)]
struct Frequency {
    state: String,
    freq: f64,
}

/// Monte Carlo summary. All floating-point fields are approximate.
#[derive(Debug, Serialize)]
struct SimulationReport {
    approximate: bool,
    n: usize,
    alpha: String,
    beta: String,
    seed: u64,
    steps: u64,
    burn_in: u64,
    frequencies: Vec<Frequency>,
    total_variation: f64,
}

pub fn cmd_simulate(
    n: usize,
    rates: &RateParams,
    cfg: &SimulationConfig,
    format: Format,
    limits: &Limits,
) -> Result<String, CliError> {
    limits.check_chain(n)?;
    let chain = build_chain(n, rates)?;
    let exact = stationary(&chain)?;
    let freqs = run_chain(&chain, cfg)?;
    let tv = total_variation(&freqs, &exact);
    let report = SimulationReport {
        approximate: true,
        n,
        alpha: format_rational(&rates.alpha),
        beta: format_rational(&rates.beta),
        seed: cfg.seed,
        steps: cfg.steps,
        burn_in: cfg.burn_in,
        frequencies: exact
            .iter()
            .zip(&freqs)
            .map(|((u, _), &freq)| Frequency {
                state: u.to_string(),
                freq,
            })
            .collect(),
        total_variation: tv,
    };
    Ok(match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&report).expect("serializable")
        ),
        Format::Text => {
            let mut out = format!(
                "approximate (Monte Carlo, seed {}, {} steps after {} burn-in)\n",
                cfg.seed, cfg.steps, cfg.burn_in
            );
            for ((u, p), f) in exact.iter().zip(&freqs) {
                out.push_str(&format!("{u}: ~{f:.6} (exact {})\n", format_rational(p)));
            }
            out.push_str(&format!("approximate total variation: {tv:.6}\n"));
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> RateParams {
        RateParams::unit()
    }

    #[test]
    fn enumerate_counts() {
        let lim = Limits::default();
        let out = cmd_enumerate(Kind::Tableau, 5, true, Format::Json, &lim).unwrap();
        assert_eq!(out, "42\n");
        let trees = enumerate_objects(Kind::Tree, 1, &lim).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].to_compact(), r#"{"l":null,"r":null}"#);
        assert_eq!(enumerate_objects(Kind::Tableau, 2, &lim).unwrap().len(), 2);
        assert_eq!(enumerate_objects(Kind::Path, 3, &lim).unwrap().len(), 8);
    }

    #[test]
    fn enumerate_is_sorted_by_serialization() {
        let lim = Limits::default();
        for kind in [
            Kind::Tableau,
            Kind::Tree,
            Kind::Pair,
            Kind::Dyck,
            Kind::Polyomino,
        ] {
            let keys: Vec<String> = enumerate_objects(kind, 4, &lim)
                .unwrap()
                .iter()
                .map(Object::to_compact)
                .collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "{kind}");
        }
    }

    #[test]
    fn map_examples() {
        let one = r#"{"index":2,"k":1,"parts":[1],"filling":[[1]]}"#;
        assert_eq!(
            cmd_map(Kind::Tableau, Kind::Pair, one, Format::Json).unwrap(),
            "{\"omega\":\"E\",\"eta\":\"E\"}\n"
        );
        let index_one = r#"{"index":1,"k":1,"parts":[],"filling":[]}"#;
        assert_eq!(
            cmd_map(Kind::Tableau, Kind::Tree, index_one, Format::Json).unwrap(),
            "{\"l\":null,\"r\":null}\n"
        );
        assert!(matches!(
            cmd_map(Kind::Dyck, Kind::Tree, "\"D\"", Format::Json),
            Err(CliError::UnsupportedMap { .. })
        ));
    }

    #[test]
    fn tasep_examples() {
        let lim = Limits::default();
        assert_eq!(
            cmd_tasep(2, &unit(), Method::Chain, Format::Text, &lim).unwrap(),
            "00:1/5, 01:1/5, 10:2/5, 11:1/5\n"
        );
        let r = RateParams::from_ints((1, 2), (1, 3)).unwrap();
        assert_eq!(
            cmd_tasep(1, &r, Method::Trees, Format::Text, &lim).unwrap(),
            "0:2/5, 1:3/5\n"
        );
        assert_eq!(
            cmd_tasep(2, &unit(), Method::Chain, Format::Json, &lim).unwrap(),
            "[{\"state\":\"00\",\"p\":\"1/5\"},{\"state\":\"01\",\"p\":\"1/5\"},\
             {\"state\":\"10\",\"p\":\"2/5\"},{\"state\":\"11\",\"p\":\"1/5\"}]\n"
        );
        assert!(matches!(
            cmd_tasep(2, &r, Method::Paths, Format::Text, &lim),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            cmd_tasep(9, &unit(), Method::Chain, Format::Text, &lim),
            Err(CliError::Cap(_))
        ));
    }
}
