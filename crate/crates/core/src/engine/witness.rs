use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::pattern::{PatternJson, PatternSpec};
use super::EngineError;
use crate::graph::Graph;

/// One vertex class per pattern vertex, in the pattern's vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WitnessJson", try_from = "WitnessJson")]
pub struct WitnessStructure {
    pattern: PatternSpec,
    classes: Vec<BTreeSet<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub pattern: PatternJson,
    pub classes: BTreeMap<String, Vec<String>>,
}

impl From<WitnessStructure> for WitnessJson {
    fn from(w: WitnessStructure) -> Self {
        let classes = w
            .pattern
            .vertex_names()
            .into_iter()
            .zip(w.classes)
            .map(|(name, class)| (name, class.into_iter().collect()))
            .collect();
        WitnessJson {
            pattern: w.pattern.into(),
            classes,
        }
    }
}

impl TryFrom<WitnessJson> for WitnessStructure {
    type Error = EngineError;

    fn try_from(w: WitnessJson) -> Result<Self, Self::Error> {
        let pattern = PatternSpec::try_from(w.pattern)?;
        WitnessStructure::from_named(
            pattern,
            w.classes
                .into_iter()
                .map(|(k, v)| (k, v.into_iter().collect())),
        )
    }
}

impl WitnessStructure {
    pub fn new(pattern: PatternSpec, classes: Vec<BTreeSet<String>>) -> Result<Self, EngineError> {
        pattern.validate()?;
        if classes.len() != pattern.order() {
            return Err(EngineError::InvalidWitness(format!(
                "pattern has {} vertices but {} classes were given",
                pattern.order(),
                classes.len()
            )));
        }
        Ok(WitnessStructure { pattern, classes })
    }

    /// Build from classes keyed by pattern vertex name.
    pub fn from_named(
        pattern: PatternSpec,
        named: impl IntoIterator<Item = (String, BTreeSet<String>)>,
    ) -> Result<Self, EngineError> {
        let mut named: HashMap<String, BTreeSet<String>> = named.into_iter().collect();
        let mut classes = Vec::with_capacity(pattern.order());
        for name in pattern.vertex_names() {
            let class = named.remove(&name).ok_or_else(|| {
                EngineError::InvalidWitness(format!("no class for pattern vertex `{name}`"))
            })?;
            classes.push(class);
        }
        if let Some(extra) = named.keys().min() {
            return Err(EngineError::InvalidWitness(format!(
                "class `{extra}` is not a pattern vertex"
            )));
        }
        WitnessStructure::new(pattern, classes)
    }

    pub fn pattern(&self) -> &PatternSpec {
        &self.pattern
    }

    pub fn classes(&self) -> &[BTreeSet<String>] {
        &self.classes
    }

    pub fn class(&self, pattern_vertex: &str) -> Option<&BTreeSet<String>> {
        let i = self
            .pattern
            .vertex_names()
            .iter()
            .position(|n| n == pattern_vertex)?;
        Some(&self.classes[i])
    }

    /// Classes paired with their pattern vertex names.
    pub fn named_classes(&self) -> impl Iterator<Item = (String, &BTreeSet<String>)> {
        self.pattern.vertex_names().into_iter().zip(&self.classes)
    }

    /// Path witness read from the other end (`p1 <-> pl`).
    pub fn reversed_path(&self) -> Option<WitnessStructure> {
        match self.pattern {
            PatternSpec::Path(_) => Some(WitnessStructure {
                pattern: self.pattern.clone(),
                classes: self.classes.iter().rev().cloned().collect(),
            }),
            _ => None,
        }
    }

    /// Contract every class of `g` to a vertex named after its pattern vertex.
    pub fn quotient(&self, g: &Graph) -> Result<Graph, EngineError> {
        Ok(g.quotient(self.named_classes())?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// First failed witness condition. `bullet()` numbers them: 1 = connected
/// classes, 2 = partition, 3 = adjacency pattern.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessViolation {
    #[error("class count {classes} does not match pattern order {pattern}")]
    ClassCount { classes: usize, pattern: usize },
    #[error("class {0} is empty")]
    EmptyClass(String),
    #[error("class {class} contains unknown vertex `{vertex}`")]
    UnknownVertex { class: String, vertex: String },
    #[error("vertex `{vertex}` is in both {first} and {second}")]
    Overlap {
        vertex: String,
        first: String,
        second: String,
    },
    #[error("vertex `{0}` is in no class")]
    Uncovered(String),
    #[error("class {0} does not induce a connected subgraph")]
    Disconnected(String),
    #[error("pattern edge {0}-{1} has no edge between its classes")]
    MissingEdge(String, String),
    #[error("classes {0} and {1} are joined by an edge but {0}-{1} is not a pattern edge")]
    UnexpectedEdge(String, String),
}

impl WitnessViolation {
    pub fn bullet(&self) -> u8 {
        match self {
            WitnessViolation::Disconnected(_) => 1,
            WitnessViolation::MissingEdge(..) | WitnessViolation::UnexpectedEdge(..) => 3,
            _ => 2,
        }
    }
}

/// Check the three witness-structure conditions: the classes partition
/// `V(g)`, each class induces a connected subgraph, and two classes are
/// joined by an edge iff their pattern vertices are adjacent.
pub fn verify_witness(g: &Graph, ws: &WitnessStructure) -> Result<(), WitnessViolation> {
    let names = ws.pattern.vertex_names();
    if ws.classes.len() != names.len() {
        return Err(WitnessViolation::ClassCount {
            classes: ws.classes.len(),
            pattern: names.len(),
        });
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.order()];
    for (ci, class) in ws.classes.iter().enumerate() {
        if class.is_empty() {
            return Err(WitnessViolation::EmptyClass(names[ci].clone()));
        }
        for v in class {
            let i = g.index_of(v).ok_or_else(|| WitnessViolation::UnknownVertex {
                class: names[ci].clone(),
                vertex: v.clone(),
            })?;
            if let Some(prev) = owner[i] {
                return Err(WitnessViolation::Overlap {
                    vertex: v.clone(),
                    first: names[prev].clone(),
                    second: names[ci].clone(),
                });
            }
            owner[i] = Some(ci);
        }
    }
    if let Some(i) = owner.iter().position(Option::is_none) {
        return Err(WitnessViolation::Uncovered(g.name(i).to_string()));
    }
    for (ci, class) in ws.classes.iter().enumerate() {
        if !g.is_connected_subset(class).unwrap_or(false) {
            return Err(WitnessViolation::Disconnected(names[ci].clone()));
        }
    }
    let k = names.len();
    let mut joined = vec![vec![false; k]; k];
    for (a, b) in g.edges() {
        let (ca, cb) = (
            owner[g.index_of(a).unwrap()].unwrap(),
            owner[g.index_of(b).unwrap()].unwrap(),
        );
        if ca != cb {
            joined[ca][cb] = true;
            joined[cb][ca] = true;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            match (ws.pattern.adjacent(i, j), joined[i][j]) {
                (true, false) => {
                    return Err(WitnessViolation::MissingEdge(names[i].clone(), names[j].clone()))
                }
                (false, true) => {
                    return Err(WitnessViolation::UnexpectedEdge(
                        names[i].clone(),
                        names[j].clone(),
                    ))
                }
                _ => {}
            }
        }
    }
    Ok(())
}
