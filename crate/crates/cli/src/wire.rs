//! JSON wire format for every object the tool reads or prints.
//!
//! Field order is fixed by the struct definitions, so printing is
//! byte-stable. Rationals only ever travel as `"p/q"` strings.

use std::fmt;
use std::str::FromStr;

use catalan_tasep::tasep::{Distribution, RateParams};
use catalan_tasep::{
    BinaryTree, CatalanTableau, Column, DyckWord, LatticePath, PathPair, Polyomino, Rational, Shape,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// The object kinds understood by `map` and `enumerate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Tableau,
    Tree,
    Path,
    Pair,
    Dyck,
    Polyomino,
    Distribution,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Tableau,
        Kind::Tree,
        Kind::Path,
        Kind::Pair,
        Kind::Dyck,
        Kind::Polyomino,
        Kind::Distribution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Tableau => "tableau",
            Kind::Tree => "tree",
            Kind::Path => "path",
            Kind::Pair => "pair",
            Kind::Dyck => "dyck",
            Kind::Polyomino => "polyomino",
            Kind::Distribution => "distribution",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = CliError;

    /// Singular or plural names, e.g. `tree` or `trees`.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let lower = s.to_ascii_lowercase();
        let singular = |suffix| lower.strip_suffix(suffix).unwrap_or(&lower);
        Kind::ALL
            .into_iter()
            .find(|k| [lower.as_str(), singular('s'), singular('x')].contains(&k.name()))
            .ok_or_else(|| CliError::Usage(format!("unknown object kind {s:?}")))
    }
}

/// A parsed object of any kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Tableau(CatalanTableau),
    Tree(BinaryTree),
    Path(LatticePath),
    Pair(PathPair),
    Dyck(DyckWord),
    Polyomino(Polyomino),
    Distribution(Distribution),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Tableau(_) => Kind::Tableau,
            Object::Tree(_) => Kind::Tree,
            Object::Path(_) => Kind::Path,
            Object::Pair(_) => Kind::Pair,
            Object::Dyck(_) => Kind::Dyck,
            Object::Polyomino(_) => Kind::Polyomino,
            Object::Distribution(_) => Kind::Distribution,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let v = match self {
            Object::Tableau(t) => serde_json::to_value(TableauWire::from(t)),
            Object::Tree(b) => serde_json::to_value(tree_to_wire(b)),
            Object::Path(p) => Ok(serde_json::Value::String(p.to_string())),
            Object::Pair(p) => serde_json::to_value(PairWire::from(p)),
            Object::Dyck(w) => Ok(serde_json::Value::String(w.to_string())),
            Object::Polyomino(p) => serde_json::to_value(PolyominoWire::from(p)),
            Object::Distribution(d) => serde_json::to_value(distribution_to_wire(d)),
        };
        v.expect("wire structs always serialize")
    }

    /// Compact single-line JSON; the canonical serialization.
    pub fn to_compact(&self) -> String {
        self.to_json().to_string()
    }

    /// Parse the JSON text of an object of the given kind.
    pub fn parse(kind: Kind, text: &str) -> Result<Object, CliError> {
        let value: serde_json::Value = serde_json::from_str(text.trim())
            .map_err(|e| CliError::Parse(format!("{kind}: {e}")))?;
        Object::from_json(kind, value)
    }

    pub fn from_json(kind: Kind, value: serde_json::Value) -> Result<Object, CliError> {
        fn body<T: serde::de::DeserializeOwned>(
            kind: Kind,
            value: serde_json::Value,
        ) -> Result<T, CliError> {
            serde_json::from_value(value).map_err(|e| CliError::Parse(format!("{kind}: {e}")))
        }
        Ok(match kind {
            Kind::Tableau => Object::Tableau(body::<TableauWire>(kind, value)?.try_into()?),
            Kind::Tree => Object::Tree(wire_to_tree(body(kind, value)?)),
            Kind::Path => Object::Path(parse_path(&body::<String>(kind, value)?)?),
            Kind::Pair => Object::Pair(body::<PairWire>(kind, value)?.try_into()?),
            Kind::Dyck => Object::Dyck(
                body::<String>(kind, value)?
                    .parse()
                    .map_err(CliError::invalid)?,
            ),
            Kind::Polyomino => Object::Polyomino(body::<PolyominoWire>(kind, value)?.try_into()?),
            Kind::Distribution => Object::Distribution(wire_to_distribution(body(kind, value)?)?),
        })
    }

    /// Human-oriented rendering used by `--format text`.
    pub fn to_text(&self) -> String {
        match self {
            Object::Tableau(t) => t.to_string(),
            Object::Tree(b) => b.to_string(),
            Object::Path(p) => p.to_string(),
            Object::Pair(p) => format!("omega={} eta={}", p.omega(), p.eta()),
            Object::Dyck(w) => w.to_string(),
            Object::Polyomino(p) => p
                .columns()
                .iter()
                .map(|c| match c.glue {
                    None => c.height.to_string(),
                    Some(g) => format!("{}/{g}", c.height),
                })
                .collect::<Vec<_>>()
                .join(" "),
            Object::Distribution(d) => d.to_string(),
        }
    }
}

/// Rows bottom first; each row lists its cells right to left as 0/1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauWire {
    pub index: usize,
    pub k: usize,
    pub parts: Vec<usize>,
    pub filling: Vec<Vec<u8>>,
}

impl From<&CatalanTableau> for TableauWire {
    fn from(t: &CatalanTableau) -> Self {
        TableauWire {
            index: t.index(),
            k: t.shape().rows(),
            parts: t.shape().parts().to_vec(),
            filling: t
                .filling()
                .iter()
                .map(|row| row.iter().map(|&b| u8::from(b)).collect())
                .collect(),
        }
    }
}

impl TryFrom<TableauWire> for CatalanTableau {
    type Error = CliError;

    fn try_from(w: TableauWire) -> Result<Self, CliError> {
        let mut filling = w
            .filling
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| match x {
                        0 => Ok(false),
                        1 => Ok(true),
                        _ => Err(CliError::Invalid(format!("cell value {x} is not 0 or 1"))),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<bool>>, _>>()?;
        // The shape trims zero-length top rows; so does the filling.
        while filling.last().is_some_and(Vec::is_empty) {
            filling.pop();
        }
        let shape = Shape::new(w.index, w.k, w.parts).map_err(CliError::invalid)?;
        let t = CatalanTableau::new(shape, filling).map_err(CliError::invalid)?;
        t.validate()
            .map_err(|v| CliError::Invalid(format!("not a Catalan tableau: {v}")))?;
        Ok(t)
    }
}

/// A vertex with its two subtrees; the empty tree is `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeWire {
    pub l: Option<Box<TreeWire>>,
    pub r: Option<Box<TreeWire>>,
}

pub fn tree_to_wire(b: &BinaryTree) -> Option<TreeWire> {
    b.root().map(|node| TreeWire {
        l: tree_to_wire(&node.left).map(Box::new),
        r: tree_to_wire(&node.right).map(Box::new),
    })
}

pub fn wire_to_tree(w: Option<TreeWire>) -> BinaryTree {
    match w {
        None => BinaryTree::empty(),
        Some(node) => BinaryTree::node(
            wire_to_tree(node.l.map(|b| *b)),
            wire_to_tree(node.r.map(|b| *b)),
        ),
    }
}

fn parse_path(s: &str) -> Result<LatticePath, CliError> {
    s.parse().map_err(CliError::invalid)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairWire {
    pub omega: String,
    pub eta: String,
}

impl From<&PathPair> for PairWire {
    fn from(p: &PathPair) -> Self {
        PairWire {
            omega: p.omega().to_string(),
            eta: p.eta().to_string(),
        }
    }
}

impl TryFrom<PairWire> for PathPair {
    type Error = CliError;

    fn try_from(w: PairWire) -> Result<Self, CliError> {
        PathPair::new(parse_path(&w.omega)?, parse_path(&w.eta)?).map_err(CliError::invalid)
    }
}

/// Columns left to right as `[height]` for the first, `[height, glue]` after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyominoWire {
    pub cols: Vec<Vec<usize>>,
}

impl From<&Polyomino> for PolyominoWire {
    fn from(p: &Polyomino) -> Self {
        PolyominoWire {
            cols: p
                .columns()
                .iter()
                .map(|c| std::iter::once(c.height).chain(c.glue).collect())
                .collect(),
        }
    }
}

impl TryFrom<PolyominoWire> for Polyomino {
    type Error = CliError;

    fn try_from(w: PolyominoWire) -> Result<Self, CliError> {
        let columns = w
            .cols
            .iter()
            .enumerate()
            .map(|(i, c)| match c.as_slice() {
                [h] => Ok(Column {
                    height: *h,
                    glue: None,
                }),
                [h, g] => Ok(Column {
                    height: *h,
                    glue: Some(*g),
                }),
                _ => Err(CliError::Parse(format!(
                    "polyomino column {i}: expected [h] or [h, g], got {} numbers",
                    c.len()
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Polyomino::new(columns).map_err(CliError::invalid)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateProb {
    pub state: String,
    pub p: String,
}

pub fn distribution_to_wire(d: &Distribution) -> Vec<StateProb> {
    d.iter()
        .map(|(u, p)| StateProb {
            state: u.to_string(),
            p: format_rational(p),
        })
        .collect()
}

fn wire_to_distribution(w: Vec<StateProb>) -> Result<Distribution, CliError> {
    let n = w.first().map_or(0, |e| e.state.len());
    if w.len() != 1usize.checked_shl(n as u32).unwrap_or(0) {
        return Err(CliError::Invalid(format!(
            "{} entries for states of length {n}",
            w.len()
        )));
    }
    let mut probs = vec![None; w.len()];
    for e in &w {
        let u: catalan_tasep::tasep::TasepState = e.state.parse().map_err(CliError::invalid)?;
        if u.len() != n {
            return Err(CliError::Invalid(format!(
                "state {} is not of length {n}",
                e.state
            )));
        }
        let slot = &mut probs[u.rank()];
        if slot.is_some() {
            return Err(CliError::Invalid(format!("state {} listed twice", e.state)));
        }
        *slot = Some(parse_rational(&e.p)?);
    }
    let probs = probs.into_iter().map(Option::unwrap).collect();
    Distribution::new(n, probs).map_err(CliError::invalid)
}

/// `p/q` in lowest terms; integers still carry `/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.parse()
        .map_err(|e| CliError::Parse(format!("{s:?} is not a rational of the form p/q: {e}")))
}

pub fn parse_rates(alpha: &str, beta: &str) -> Result<RateParams, CliError> {
    RateParams::new(parse_rational(alpha)?, parse_rational(beta)?).map_err(CliError::from)
}
