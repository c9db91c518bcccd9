//! Hypergraph 2-colourability instances and an exhaustive colouring oracle.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("hyperedge {0} mentions unknown element `{1}`")]
    UnknownElement(usize, String),
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("need at least two elements, got {0}")]
    TooFewElements(usize),
    #[error("too many elements for exhaustive colouring: {0}")]
    TooManyElements(usize),
}

/// Elements `q1..qm` (in input order) and hyperedges `S1..Sn`.
///
/// Hyperedges are stored as sorted element indices; duplicates in the
/// hyperedge list are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    elements: Vec<String>,
    hyperedges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphJson {
    pub elements: Vec<String>,
    pub hyperedges: Vec<Vec<String>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(value: HypergraphJson) -> Result<Self, Self::Error> {
        Hypergraph::new(value.elements, value.hyperedges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        HypergraphJson {
            hyperedges: h
                .hyperedges
                .iter()
                .map(|e| e.iter().map(|&i| h.elements[i].clone()).collect())
                .collect(),
            elements: h.elements,
        }
    }
}

/// A partition `(q1, q2)` of the elements. Validity against a hypergraph is
/// checked by [`Hypergraph::check_colouring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColouring {
    pub q1: BTreeSet<String>,
    pub q2: BTreeSet<String>,
}

impl TwoColouring {
    pub fn new<S: Into<String>>(
        q1: impl IntoIterator<Item = S>,
        q2: impl IntoIterator<Item = S>,
    ) -> Self {
        TwoColouring {
            q1: q1.into_iter().map(Into::into).collect(),
            q2: q2.into_iter().map(Into::into).collect(),
        }
    }

    pub fn swapped(&self) -> Self {
        TwoColouring {
            q1: self.q2.clone(),
            q2: self.q1.clone(),
        }
    }
}

impl Hypergraph {
    pub fn new<E, S>(
        elements: impl IntoIterator<Item = E>,
        hyperedges: impl IntoIterator<Item = Vec<S>>,
    ) -> Result<Self, HypergraphError>
    where
        E: Into<String>,
        S: AsRef<str>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(HypergraphError::DuplicateElement(e.clone()));
            }
        }
        let mut edges = Vec::new();
        for (j, edge) in hyperedges.into_iter().enumerate() {
            let mut members = BTreeSet::new();
            for s in &edge {
                let s = s.as_ref();
                let i = index
                    .get(s)
                    .ok_or_else(|| HypergraphError::UnknownElement(j + 1, s.to_string()))?;
                members.insert(*i);
            }
            edges.push(members.into_iter().collect());
        }
        Ok(Hypergraph {
            elements,
            hyperedges: edges,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    /// Member indices (0-based, sorted) of each hyperedge.
    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// Total number of incidences, `sum |S_j|`.
    pub fn incidence_count(&self) -> usize {
        self.hyperedges.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, edge: usize, element: usize) -> bool {
        self.hyperedges[edge].binary_search(&element).is_ok()
    }

    /// Append the full element set as the last hyperedge (twice if there
    /// would otherwise be fewer than two hyperedges).
    pub fn normalize(&self) -> Result<Hypergraph, HypergraphError> {
        if self.elements.len() < 2 {
            return Err(HypergraphError::TooFewElements(self.elements.len()));
        }
        if let Some(j) = self.hyperedges.iter().position(Vec::is_empty) {
            return Err(HypergraphError::EmptyHyperedge(j + 1));
        }
        let all: Vec<usize> = (0..self.elements.len()).collect();
        let mut hyperedges = self.hyperedges.clone();
        hyperedges.push(all.clone());
        if hyperedges.len() < 2 {
            hyperedges.push(all);
        }
        Ok(Hypergraph {
            elements: self.elements.clone(),
            hyperedges,
        })
    }

    /// At least two elements and two hyperedges, none empty, last one full.
    pub fn is_normalized(&self) -> bool {
        self.elements.len() >= 2
            && self.hyperedges.len() >= 2
            && self.hyperedges.iter().all(|e| !e.is_empty())
            && self.hyperedges.last().map(Vec::len) == Some(self.elements.len())
    }

    pub fn check_colouring(&self, c: &TwoColouring) -> bool {
        if !c.q1.is_disjoint(&c.q2) || c.q1.len() + c.q2.len() != self.elements.len() {
            return false;
        }
        let mut in_q1 = vec![false; self.elements.len()];
        for (i, e) in self.elements.iter().enumerate() {
            match (c.q1.contains(e), c.q2.contains(e)) {
                (true, false) => in_q1[i] = true,
                (false, true) => {}
                _ => return false,
            }
        }
        self.hyperedges.iter().all(|edge| {
            edge.iter().any(|&i| in_q1[i]) && edge.iter().any(|&i| !in_q1[i])
        })
    }

    /// Exhaustive search over the `2^(m-1)` assignments with the first
    /// element fixed in `q1`. Assignments are visited in lexicographic order
    /// of the side sequence (elements in input order, `q1` before `q2`), so
    /// the first valid colouring found is returned.
    pub fn two_colouring(&self) -> Result<Option<TwoColouring>, HypergraphError> {
        let m = self.elements.len();
        if m == 0 {
            return Ok(self.hyperedges.is_empty().then(|| TwoColouring::new(
                Vec::<String>::new(),
                Vec::<String>::new(),
            )));
        }
        if m > 63 {
            return Err(HypergraphError::TooManyElements(m));
        }
        // bit (m-1-i) of `code` is 1 when element i sits in q2; element 0 is
        // the most significant position and always 0.
        let masks: Vec<u64> = self
            .hyperedges
            .iter()
            .map(|e| e.iter().fold(0u64, |acc, &i| acc | 1 << (m - 1 - i)))
            .collect();
        for code in 0..(1u64 << (m - 1)) {
            if masks.iter().all(|&s| s & code != 0 && s & !code != 0) {
                let (mut q1, mut q2) = (Vec::new(), Vec::new());
                for (i, e) in self.elements.iter().enumerate() {
                    if code >> (m - 1 - i) & 1 == 1 {
                        q2.push(e.clone());
                    } else {
                        q1.push(e.clone());
                    }
                }
                return Ok(Some(TwoColouring::new(q1, q2)));
            }
        }
        Ok(None)
    }

    pub fn is_two_colourable(&self) -> Result<bool, HypergraphError> {
        Ok(self.two_colouring()?.is_some())
    }
}
