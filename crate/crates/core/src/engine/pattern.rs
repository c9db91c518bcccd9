use serde::{Deserialize, Serialize};

use super::bits::{bit, Mask};
use super::EngineError;
use crate::graph::Graph;

/// Largest explicit pattern graph accepted.
pub const MAX_EXPLICIT_PATTERN: usize = 8;

/// Target graph of a contraction. Paths and cycles use vertices
/// `p1..pl` and `c1..ck` in order; explicit patterns use their own ids in
/// sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PatternJson", try_from = "PatternJson")]
pub enum PatternSpec {
    Path(usize),
    Cycle(usize),
    Explicit(Graph),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PatternJson {
    Path { size: usize },
    Cycle { size: usize },
    Explicit { graph: Graph },
}

impl From<PatternSpec> for PatternJson {
    fn from(p: PatternSpec) -> Self {
        match p {
            PatternSpec::Path(size) => PatternJson::Path { size },
            PatternSpec::Cycle(size) => PatternJson::Cycle { size },
            PatternSpec::Explicit(graph) => PatternJson::Explicit { graph },
        }
    }
}

impl TryFrom<PatternJson> for PatternSpec {
    type Error = EngineError;

    fn try_from(p: PatternJson) -> Result<Self, Self::Error> {
        let spec = match p {
            PatternJson::Path { size } => PatternSpec::Path(size),
            PatternJson::Cycle { size } => PatternSpec::Cycle(size),
            PatternJson::Explicit { graph } => PatternSpec::Explicit(graph),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl PatternSpec {
    pub fn validate(&self) -> Result<(), EngineError> {
        match self {
            PatternSpec::Path(0) => Err(EngineError::InvalidPattern(
                "a path needs at least one vertex".into(),
            )),
            PatternSpec::Cycle(k) if *k < 3 => Err(EngineError::InvalidPattern(format!(
                "a cycle needs at least three vertices, got {k}"
            ))),
            PatternSpec::Explicit(g) if g.order() == 0 || g.order() > MAX_EXPLICIT_PATTERN => {
                Err(EngineError::InvalidPattern(format!(
                    "explicit patterns must have 1..={MAX_EXPLICIT_PATTERN} vertices, got {}",
                    g.order()
                )))
            }
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            PatternSpec::Path(l) => *l,
            PatternSpec::Cycle(k) => *k,
            PatternSpec::Explicit(g) => g.order(),
        }
    }

    pub fn vertex_names(&self) -> Vec<String> {
        match self {
            PatternSpec::Path(l) => (1..=*l).map(|i| format!("p{i}")).collect(),
            PatternSpec::Cycle(k) => (1..=*k).map(|i| format!("c{i}")).collect(),
            PatternSpec::Explicit(g) => g.vertices().map(str::to_string).collect(),
        }
    }

    /// Whether pattern vertices `i` and `j` (positions in `vertex_names`) are adjacent.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        match self {
            PatternSpec::Path(_) => i.abs_diff(j) == 1,
            PatternSpec::Cycle(k) => {
                let d = i.abs_diff(j);
                d == 1 || d == k - 1
            }
            PatternSpec::Explicit(g) => g.has_edge(g.name(i), g.name(j)),
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            PatternSpec::Path(l) => Graph::path("p", *l),
            PatternSpec::Cycle(k) => Graph::cycle("c", *k),
            PatternSpec::Explicit(g) => g.clone(),
        }
    }

    pub fn is_connected(&self) -> bool {
        match self {
            PatternSpec::Path(_) | PatternSpec::Cycle(_) => true,
            PatternSpec::Explicit(g) => g.is_connected(),
        }
    }

    pub(crate) fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.order();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(i, j))
            .collect()
    }

    /// Closed neighbourhood of each pattern vertex as a mask over positions.
    pub(crate) fn closed_neighbourhoods(&self) -> Vec<Mask> {
        let k = self.order();
        (0..k)
            .map(|i| {
                (0..k)
                    .filter(|&j| j == i || self.adjacent(i, j))
                    .fold(0, |m, j| m | bit(j))
            })
            .collect()
    }

    /// One position per orbit of the pattern's automorphism group (the
    /// smallest position in each orbit).
    pub(crate) fn orbit_representatives(&self) -> Mask {
        match self {
            PatternSpec::Path(l) => (0..l.div_ceil(2)).fold(0, |m, i| m | bit(i)),
            PatternSpec::Cycle(_) => bit(0),
            PatternSpec::Explicit(_) => {
                let k = self.order();
                let mut orbit_min: Vec<usize> = (0..k).collect();
                let mut perm: Vec<usize> = (0..k).collect();
                for_each_permutation(&mut perm, 0, &mut |p| {
                    let is_auto = (0..k).all(|i| {
                        (i + 1..k).all(|j| self.adjacent(i, j) == self.adjacent(p[i], p[j]))
                    });
                    if is_auto {
                        // the orbit of i is {p(i) : p automorphism}
                        for i in 0..k {
                            orbit_min[i] = orbit_min[i].min(p[i]);
                        }
                    }
                });
                (0..k).filter(|&i| orbit_min[i] == i).fold(0, |m, i| m | bit(i))
            }
        }
    }
}

fn for_each_permutation(p: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == p.len() {
        f(p);
        return;
    }
    for i in at..p.len() {
        p.swap(at, i);
        for_each_permutation(p, at + 1, f);
        p.swap(at, i);
    }
}
