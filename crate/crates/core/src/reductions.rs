//! Hypergraph 2-colouring gadgets for P5, C6 and P6 contraction, with
//! conversions between colourings and witness structures.
//!
//! For a normalized hypergraph with elements `q_i` and hyperedges `S_j`
//! the P5 gadget has vertices
//!
//! * `q{i}` for each element and `S{j}`, `Sp{j}` for each hyperedge and its copy,
//! * `q{i}_{j}` subdividing the incidence `q_i ∈ S_j`,
//! * `qstar`, `u1`, `u2`, `v`, `w`,
//!
//! and edges `q_i - q{i}_{j} - S_j`, `q_i - Sp_j` (for `q_i ∈ S_j`), all of
//! `S × Sp`, `qstar` to `u1`, `u2` and every subdivision vertex, `u1` and
//! `u2` to every `S_j` and to `v`, and `w` to every `Sp_j`.
//!
//! The C6 gadget drops `qstar` and `u2` and adds `x` adjacent to `v` and
//! `w`; the P6 gadget is the C6 gadget without the edge `vx`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{verify_witness, PatternSpec, WitnessStructure};
use crate::graph::{Graph, GraphError};
use crate::hypergraph::{Hypergraph, HypergraphError, TwoColouring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("hypergraph is not normalized (need m >= 2, n >= 2, nonempty hyperedges, last hyperedge = all elements)")]
    NotNormalized,
    #[error("expected a {expected} gadget, got {found}")]
    WrongKind { expected: GadgetKind, found: GadgetKind },
    #[error("not a 2-colouring of the source hypergraph")]
    InvalidColouring,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("witness end classes are not {{v}} and {{w}}")]
    EndpointMismatch,
    #[error("extracted colouring is inconsistent: {0}")]
    Inconsistent(String),
    #[error("role mismatch: {0}")]
    RoleMismatch(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Role of a gadget vertex. Element and hyperedge indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexRole {
    Star,
    U1,
    U2,
    V,
    W,
    X,
    Element(usize),
    Hyperedge(usize),
    HyperedgeCopy(usize),
    Subdivision(usize, usize),
}

/// Vertex types used when tabulating distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RoleClass {
    U1,
    U2,
    V,
    W,
    S,
    SPrime,
    Q,
    QPrime,
    Star,
    X,
}

impl VertexRole {
    pub fn vertex_id(&self) -> String {
        match *self {
            VertexRole::Star => "qstar".into(),
            VertexRole::U1 => "u1".into(),
            VertexRole::U2 => "u2".into(),
            VertexRole::V => "v".into(),
            VertexRole::W => "w".into(),
            VertexRole::X => "x".into(),
            VertexRole::Element(i) => format!("q{i}"),
            VertexRole::Hyperedge(j) => format!("S{j}"),
            VertexRole::HyperedgeCopy(j) => format!("Sp{j}"),
            VertexRole::Subdivision(i, j) => format!("q{i}_{j}"),
        }
    }

    pub fn class(&self) -> RoleClass {
        match self {
            VertexRole::Star => RoleClass::Star,
            VertexRole::U1 => RoleClass::U1,
            VertexRole::U2 => RoleClass::U2,
            VertexRole::V => RoleClass::V,
            VertexRole::W => RoleClass::W,
            VertexRole::X => RoleClass::X,
            VertexRole::Element(_) => RoleClass::Q,
            VertexRole::Hyperedge(_) => RoleClass::S,
            VertexRole::HyperedgeCopy(_) => RoleClass::SPrime,
            VertexRole::Subdivision(..) => RoleClass::QPrime,
        }
    }
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Star => write!(f, "Star"),
            VertexRole::U1 => write!(f, "U1"),
            VertexRole::U2 => write!(f, "U2"),
            VertexRole::V => write!(f, "V"),
            VertexRole::W => write!(f, "W"),
            VertexRole::X => write!(f, "X"),
            VertexRole::Element(i) => write!(f, "Element:{i}"),
            VertexRole::Hyperedge(j) => write!(f, "Hyperedge:{j}"),
            VertexRole::HyperedgeCopy(j) => write!(f, "HyperedgeCopy:{j}"),
            VertexRole::Subdivision(i, j) => write!(f, "Subdivision:{i}:{j}"),
        }
    }
}

impl FromStr for VertexRole {
    type Err = ReductionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ReductionError::RoleMismatch(format!("unknown role `{s}`"));
        let num = |t: &str| t.parse::<usize>().ok().filter(|&i| i >= 1).ok_or_else(bad);
        let parts: Vec<&str> = s.split(':').collect();
        Ok(match parts.as_slice() {
            ["Star"] => VertexRole::Star,
            ["U1"] => VertexRole::U1,
            ["U2"] => VertexRole::U2,
            ["V"] => VertexRole::V,
            ["W"] => VertexRole::W,
            ["X"] => VertexRole::X,
            ["Element", i] => VertexRole::Element(num(i)?),
            ["Hyperedge", j] => VertexRole::Hyperedge(num(j)?),
            ["HyperedgeCopy", j] => VertexRole::HyperedgeCopy(num(j)?),
            ["Subdivision", i, j] => VertexRole::Subdivision(num(i)?, num(j)?),
            _ => return Err(bad()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    P5,
    C6,
    P6,
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::P5 => "p5",
            GadgetKind::C6 => "c6",
            GadgetKind::P6 => "p6",
        })
    }
}

impl FromStr for GadgetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p5" => Ok(GadgetKind::P5),
            "c6" => Ok(GadgetKind::C6),
            "p6" => Ok(GadgetKind::P6),
            _ => Err(format!("unknown gadget kind `{s}`")),
        }
    }
}

/// A gadget graph with the role of every vertex and the hypergraph it
/// was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGadget {
    pub kind: GadgetKind,
    pub graph: Graph,
    pub roles: BTreeMap<String, VertexRole>,
    pub source: Hypergraph,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GadgetJson {
    kind: GadgetKind,
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
    roles: BTreeMap<String, String>,
    source: Hypergraph,
}

pub fn build_gadget(kind: GadgetKind, h: &Hypergraph) -> Result<LabeledGadget, ReductionError> {
    match kind {
        GadgetKind::P5 => build_p5_gadget(h),
        GadgetKind::C6 => build_c6_gadget(h),
        GadgetKind::P6 => build_p6_gadget(h),
    }
}

pub fn build_p5_gadget(h: &Hypergraph) -> Result<LabeledGadget, ReductionError> {
    if !h.is_normalized() {
        return Err(ReductionError::NotNormalized);
    }
    use VertexRole::*;
    let (m, n) = (h.element_count(), h.hyperedge_count());
    let mut roles: Vec<VertexRole> = vec![Star, U1, U2, V, W];
    roles.extend((1..=m).map(Element));
    roles.extend((1..=n).map(Hyperedge));
    roles.extend((1..=n).map(HyperedgeCopy));

    let id = |r: VertexRole| r.vertex_id();
    let mut edges: Vec<(String, String)> = vec![
        (id(Star), id(U1)),
        (id(Star), id(U2)),
        (id(U1), id(V)),
        (id(U2), id(V)),
    ];
    for (j0, members) in h.hyperedges().iter().enumerate() {
        let j = j0 + 1;
        for &i0 in members {
            let i = i0 + 1;
            let sub = Subdivision(i, j);
            roles.push(sub);
            edges.push((id(Element(i)), id(sub)));
            edges.push((id(sub), id(Hyperedge(j))));
            edges.push((id(Element(i)), id(HyperedgeCopy(j))));
            edges.push((id(Star), id(sub)));
        }
        for k in 1..=n {
            edges.push((id(Hyperedge(j)), id(HyperedgeCopy(k))));
        }
        edges.push((id(U1), id(Hyperedge(j))));
        edges.push((id(U2), id(Hyperedge(j))));
        edges.push((id(W), id(HyperedgeCopy(j))));
    }
    let graph = Graph::new(roles.iter().map(VertexRole::vertex_id), edges)?;
    Ok(LabeledGadget {
        kind: GadgetKind::P5,
        graph,
        roles: roles.into_iter().map(|r| (r.vertex_id(), r)).collect(),
        source: h.clone(),
    })
}

pub fn build_c6_gadget(h: &Hypergraph) -> Result<LabeledGadget, ReductionError> {
    let p5 = build_p5_gadget(h)?;
    let x = VertexRole::X.vertex_id();
    let graph = p5
        .graph
        .without_vertices(&["qstar", "u2"])?
        .with_vertex(&x, &["v", "w"])?;
    let mut roles = p5.roles;
    roles.remove("qstar");
    roles.remove("u2");
    roles.insert(x, VertexRole::X);
    Ok(LabeledGadget {
        kind: GadgetKind::C6,
        graph,
        roles,
        source: p5.source,
    })
}

pub fn build_p6_gadget(h: &Hypergraph) -> Result<LabeledGadget, ReductionError> {
    let c6 = build_c6_gadget(h)?;
    Ok(LabeledGadget {
        kind: GadgetKind::P6,
        graph: c6.graph.without_edge("v", "x")?,
        ..c6
    })
}

impl LabeledGadget {
    pub fn role(&self, v: &str) -> Option<VertexRole> {
        self.roles.get(v).copied()
    }

    /// Vertices of the given role class, sorted by id.
    pub fn vertices_of(&self, class: RoleClass) -> BTreeSet<String> {
        self.roles
            .iter()
            .filter(|(_, r)| r.class() == class)
            .map(|(v, _)| v.clone())
            .collect()
    }

    fn element_vertex(&self, element: &str) -> Result<String, ReductionError> {
        let i = self
            .source
            .elements()
            .iter()
            .position(|e| e == element)
            .ok_or(ReductionError::InvalidColouring)?;
        Ok(VertexRole::Element(i + 1).vertex_id())
    }

    fn expect_kind(&self, expected: GadgetKind) -> Result<(), ReductionError> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(ReductionError::WrongKind {
                expected,
                found: self.kind,
            })
        }
    }

    /// The two middle classes `S ∪ Q1 ∪ Q'` and `S' ∪ Q2` shared by the P5
    /// and C6 witnesses.
    fn middle_classes(
        &self,
        c: &TwoColouring,
    ) -> Result<(BTreeSet<String>, BTreeSet<String>), ReductionError> {
        if !self.source.check_colouring(c) {
            return Err(ReductionError::InvalidColouring);
        }
        let mut left = self.vertices_of(RoleClass::S);
        left.extend(self.vertices_of(RoleClass::QPrime));
        for e in &c.q1 {
            left.insert(self.element_vertex(e)?);
        }
        let mut right = self.vertices_of(RoleClass::SPrime);
        for e in &c.q2 {
            right.insert(self.element_vertex(e)?);
        }
        Ok((left, right))
    }

    /// Maximum distance between two distinct vertices of each pair of role
    /// classes. Keys are ordered pairs with `a <= b`.
    pub fn class_distance_table(&self) -> BTreeMap<(RoleClass, RoleClass), usize> {
        let dist = self.graph.distances();
        let class_of: Vec<RoleClass> = self
            .graph
            .vertices()
            .map(|v| self.roles[v].class())
            .collect();
        let mut table = BTreeMap::new();
        for i in 0..self.graph.order() {
            for j in i + 1..self.graph.order() {
                let Some(d) = dist.get(i, j) else { continue };
                let (a, b) = (class_of[i].min(class_of[j]), class_of[i].max(class_of[j]));
                let e = table.entry((a, b)).or_insert(0);
                *e = (*e).max(d);
            }
        }
        table
    }

    pub fn to_json(&self) -> String {
        let graph_json: crate::graph::GraphJson = self.graph.clone().into();
        let out = GadgetJson {
            kind: self.kind,
            vertices: graph_json.vertices,
            edges: graph_json.edges,
            roles: self
                .roles
                .iter()
                .map(|(v, r)| (v.clone(), r.to_string()))
                .collect(),
            source: self.source.clone(),
        };
        serde_json::to_string(&out).expect("gadget serializes")
    }

    /// Parse a gadget and check it against a fresh construction from its
    /// embedded source hypergraph.
    pub fn from_json(text: &str) -> Result<LabeledGadget, GadgetParseError> {
        let raw: GadgetJson = serde_json::from_str(text)?;
        let graph = Graph::new(raw.vertices, raw.edges.into_iter().map(|[a, b]| (a, b)))
            .map_err(ReductionError::from)?;
        let mut roles = BTreeMap::new();
        for (v, r) in raw.roles {
            roles.insert(v, r.parse::<VertexRole>()?);
        }
        let parsed = LabeledGadget {
            kind: raw.kind,
            graph,
            roles,
            source: raw.source,
        };
        let expected = build_gadget(parsed.kind, &parsed.source)?;
        if parsed.roles != expected.roles {
            return Err(ReductionError::RoleMismatch(
                "roles differ from the construction for the embedded source".into(),
            )
            .into());
        }
        if parsed.graph != expected.graph {
            return Err(ReductionError::RoleMismatch(
                "edges differ from the construction for the embedded source".into(),
            )
            .into());
        }
        Ok(parsed)
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot_with(&format!("{}_gadget", self.kind), |v| {
            let colour = match self.roles.get(v)?.class() {
                RoleClass::V | RoleClass::W | RoleClass::X => "gold",
                RoleClass::Star => "tomato",
                RoleClass::U1 | RoleClass::U2 => "orange",
                RoleClass::Q => "lightblue",
                RoleClass::QPrime => "lightgrey",
                RoleClass::S => "palegreen",
                RoleClass::SPrime => "darkseagreen",
            };
            Some(format!("style=filled, fillcolor={colour}"))
        })
    }
}

#[derive(Debug, Error)]
pub enum GadgetParseError {
    #[error("malformed gadget JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

/// P5 witness `{v}, {qstar,u1,u2}, S ∪ Q1 ∪ Q', S' ∪ Q2, {w}`.
pub fn colouring_to_p5_witness(
    gadget: &LabeledGadget,
    c: &TwoColouring,
) -> Result<WitnessStructure, ReductionError> {
    gadget.expect_kind(GadgetKind::P5)?;
    let (left, right) = gadget.middle_classes(c)?;
    let single = |v: &str| BTreeSet::from([v.to_string()]);
    let ws = WitnessStructure::new(
        PatternSpec::Path(5),
        vec![
            single("v"),
            ["qstar", "u1", "u2"].iter().map(|s| s.to_string()).collect(),
            left,
            right,
            single("w"),
        ],
    )
    .map_err(|e| ReductionError::InvalidWitness(e.to_string()))?;
    Ok(ws)
}

/// C6 witness `{v}, {u1}, S ∪ Q1 ∪ Q', S' ∪ Q2, {w}, {x}`.
pub fn colouring_to_c6_witness(
    gadget: &LabeledGadget,
    c: &TwoColouring,
) -> Result<WitnessStructure, ReductionError> {
    gadget.expect_kind(GadgetKind::C6)?;
    let (left, right) = gadget.middle_classes(c)?;
    let single = |v: &str| BTreeSet::from([v.to_string()]);
    WitnessStructure::new(
        PatternSpec::Cycle(6),
        vec![single("v"), single("u1"), left, right, single("w"), single("x")],
    )
    .map_err(|e| ReductionError::InvalidWitness(e.to_string()))
}

/// Read a 2-colouring off a P5 witness with end classes `{v}` and `{w}`:
/// elements in the third class form `Q1`, elements in the fourth form `Q2`.
///
/// No element can sit in the second class: it would be adjacent to the
/// last copy vertex `Sp{n}`, which lies in the fourth class. An element
/// outside both middle classes is therefore reported as an inconsistency.
pub fn p5_witness_to_colouring(
    gadget: &LabeledGadget,
    ws: &WitnessStructure,
) -> Result<TwoColouring, ReductionError> {
    gadget.expect_kind(GadgetKind::P5)?;
    if ws.pattern() != &PatternSpec::Path(5) {
        return Err(ReductionError::InvalidWitness(
            "pattern is not a 5-vertex path".into(),
        ));
    }
    verify_witness(&gadget.graph, ws).map_err(|e| ReductionError::InvalidWitness(e.to_string()))?;
    let is = |class: &BTreeSet<String>, v: &str| class.len() == 1 && class.contains(v);
    let classes = ws.classes();
    let oriented = if is(&classes[0], "v") && is(&classes[4], "w") {
        ws.clone()
    } else if is(&classes[0], "w") && is(&classes[4], "v") {
        ws.reversed_path().expect("path witness")
    } else {
        return Err(ReductionError::EndpointMismatch);
    };
    let (third, fourth) = (&oriented.classes()[2], &oriented.classes()[3]);
    let (mut q1, mut q2) = (Vec::new(), Vec::new());
    for (i, e) in gadget.source.elements().iter().enumerate() {
        let vid = VertexRole::Element(i + 1).vertex_id();
        if third.contains(&vid) {
            q1.push(e.clone());
        } else if fourth.contains(&vid) {
            q2.push(e.clone());
        } else {
            return Err(ReductionError::Inconsistent(format!(
                "element `{e}` lies in neither middle class"
            )));
        }
    }
    let c = TwoColouring::new(q1, q2);
    if !gadget.source.check_colouring(&c) {
        return Err(ReductionError::Inconsistent(
            "extracted partition does not 2-colour the hypergraph".into(),
        ));
    }
    Ok(c)
}
