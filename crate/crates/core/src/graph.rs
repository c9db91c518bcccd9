//! Finite simple undirected graphs with stable string vertex ids.
//!
//! Vertices are kept in lexicographic order of their ids and addressed
//! internally by dense indices into that order. Every operation that changes
//! the graph returns a new value; ids of untouched vertices are preserved.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Separator between a vertex id and its merge count after contraction.
pub const MERGE_SEPARATOR: char = '#';

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("`{0}`-`{1}` is not an edge")]
    NotAnEdge(String, String),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex `{0}` appears in more than one class")]
    OverlappingClasses(String),
    #[error("vertex `{0}` is not covered by any class")]
    UncoveredVertex(String),
    #[error("class `{0}` is empty")]
    EmptyClass(String),
    #[error("duplicate class label `{0}`")]
    DuplicateLabel(String),
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Wire form of a graph. Writers always emit it in canonical order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, Self::Error> {
        Graph::new(value.vertices, value.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            edges: g
                .edges()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
            vertices: g.names,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

/// All-pairs BFS distances, indexed by vertex index. `None` means unreachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distances {
    rows: Vec<Vec<Option<usize>>>,
}

impl Distances {
    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.rows[a][b]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// A proper 2-colouring of the vertices. Both sides are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl Graph {
    pub fn new<V, A, B>(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, GraphError>
    where
        V: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut adj = vec![Vec::new(); names.len()];
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            if !seen.insert((ia.min(ib), ia.max(ib))) {
                return Err(GraphError::DuplicateEdge(a.to_string(), b.to_string()));
            }
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            names,
            index,
            adj,
            edge_count: seen.len(),
        })
    }

    /// Graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges<A, B>(edges: impl IntoIterator<Item = (A, B)>) -> Result<Self, GraphError>
    where
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let edges: Vec<(String, String)> = edges
            .into_iter()
            .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
            .collect();
        let vertices: BTreeSet<String> = edges
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        Graph::new(vertices, edges)
    }

    /// Path `p1 - p2 - ... - pn` on vertices named `{prefix}{i}`.
    pub fn path(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let edges: Vec<_> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Graph::new(names, edges).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices named `{prefix}{i}`.
    pub fn cycle(prefix: &str, n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let edges: Vec<_> = (0..n)
            .map(|i| (names[i].clone(), names[(i + 1) % n].clone()))
            .collect();
        Graph::new(names, edges).expect("cycle is simple")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.names.iter().map(String::as_str)
    }

    pub fn contains(&self, v: &str) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &str) -> Option<usize> {
        self.index.get(v).copied()
    }

    fn require(&self, v: &str) -> Result<usize, GraphError> {
        self.index_of(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn neighbors(&self, v: &str) -> Result<Vec<&str>, GraphError> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(|&j| self.name(j)).collect())
    }

    pub fn degree(&self, v: &str) -> Result<usize, GraphError> {
        Ok(self.adj[self.require(v)?].len())
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Edges as `(smaller, larger)` id pairs, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, list)| {
            list.iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (self.name(i), self.name(j)))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.names.is_empty() {
            return true;
        }
        let all: Vec<bool> = vec![true; self.order()];
        self.reach_within(0, &all).iter().all(|&r| r)
    }

    /// Vertices reachable from `start` using only vertices with `allowed[i]`.
    fn reach_within(&self, start: usize, allowed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if allowed[y] && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Whether `G[s]` is connected.
    pub fn is_connected_subset<S: AsRef<str>>(
        &self,
        s: impl IntoIterator<Item = S>,
    ) -> Result<bool, GraphError> {
        let mut allowed = vec![false; self.order()];
        let mut first = None;
        for v in s {
            let i = self.require(v.as_ref())?;
            allowed[i] = true;
            first.get_or_insert(i);
        }
        let Some(start) = first else {
            return Err(GraphError::EmptySet);
        };
        let seen = self.reach_within(start, &allowed);
        Ok(allowed.iter().zip(&seen).all(|(&a, &s)| !a || s))
    }

    fn bfs(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap() + 1;
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> Distances {
        Distances {
            rows: (0..self.order()).map(|i| self.bfs(i)).collect(),
        }
    }

    pub fn distance(&self, a: &str, b: &str) -> Result<Option<usize>, GraphError> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        Ok(self.bfs(i)[j])
    }

    /// Largest distance between two vertices; infinite if disconnected.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for i in 0..self.order() {
            for d in self.bfs(i) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// BFS 2-colouring. Each component is rooted at its smallest id, which
    /// goes to side `a`. Returns `None` if there is an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for root in 0..self.order() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &y in &self.adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, s) in side.into_iter().enumerate() {
            if s == Some(false) {
                a.push(self.names[i].clone());
            } else {
                b.push(self.names[i].clone());
            }
        }
        Some(Bipartition { a, b })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    fn name_edges(&self) -> Vec<(String, String)> {
        self.edges()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn fresh_name(&self, candidate: String, taken: &BTreeSet<&str>) -> String {
        if !self.contains(&candidate) && !taken.contains(candidate.as_str()) {
            return candidate;
        }
        (1..)
            .map(|k| format!("{candidate}'{k}"))
            .find(|c| !self.contains(c) && !taken.contains(c.as_str()))
            .unwrap()
    }

    /// Contract the edge `uv`. The merged vertex is named after the smaller
    /// of the two ids, with a suffix counting how many merges it absorbed.
    pub fn contract_edge(&self, u: &str, v: &str) -> Result<Graph, GraphError> {
        let (iu, iv) = (self.require(u)?, self.require(v)?);
        if iu == iv {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u.to_string(), v.to_string()));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let (base, k_lo) = split_merge_count(lo);
        let (_, k_hi) = split_merge_count(hi);
        let merged = format!("{base}{MERGE_SEPARATOR}{}", k_lo + k_hi + 1);
        let merged = if self.contains(&merged) && merged != u && merged != v {
            self.fresh_name(merged, &BTreeSet::new())
        } else {
            merged
        };
        let rename = |x: &str| -> String {
            if x == u || x == v {
                merged.clone()
            } else {
                x.to_string()
            }
        };
        let vertices: Vec<String> = self
            .vertices()
            .filter(|&x| x != u && x != v)
            .map(str::to_string)
            .chain(std::iter::once(merged.clone()))
            .collect();
        let edges: BTreeSet<(String, String)> = self
            .edges()
            .filter(|&(a, b)| !((a == u && b == v) || (a == v && b == u)))
            .map(|(a, b)| {
                let (a, b) = (rename(a), rename(b));
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        Graph::new(vertices, edges)
    }

    /// Replace the edge `uv` by a path `u - z - v` through a fresh vertex `z`.
    pub fn subdivide_edge(&self, u: &str, v: &str) -> Result<Graph, GraphError> {
        self.require(u)?;
        self.require(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u.to_string(), v.to_string()));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let z = self.fresh_name(format!("{lo}~{hi}"), &BTreeSet::new());
        let mut edges: Vec<(String, String)> = self
            .edges()
            .filter(|&(a, b)| (a, b) != (lo, hi))
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        edges.push((lo.to_string(), z.clone()));
        edges.push((hi.to_string(), z.clone()));
        Graph::new(self.names.iter().cloned().chain([z]), edges)
    }

    /// Subdivide every edge once.
    pub fn subdivide_all(&self) -> Graph {
        let mut taken: BTreeSet<String> = BTreeSet::new();
        let mut vertices = self.names.clone();
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            let borrowed: BTreeSet<&str> = taken.iter().map(String::as_str).collect();
            let z = self.fresh_name(format!("{a}~{b}"), &borrowed);
            taken.insert(z.clone());
            edges.push((a.to_string(), z.clone()));
            edges.push((b.to_string(), z.clone()));
            vertices.push(z);
        }
        Graph::new(vertices, edges).expect("subdivision is simple")
    }

    /// Collapse each labelled class to a single vertex named by its label.
    /// Two class vertices are adjacent iff some edge crosses between them.
    /// Classes need not be connected.
    pub fn quotient<L, C, V>(&self, parts: impl IntoIterator<Item = (L, C)>) -> Result<Graph, GraphError>
    where
        L: Into<String>,
        C: IntoIterator<Item = V>,
        V: AsRef<str>,
    {
        let mut owner: Vec<Option<usize>> = vec![None; self.order()];
        let mut labels: Vec<String> = Vec::new();
        for (ci, (label, members)) in parts.into_iter().enumerate() {
            let label = label.into();
            let mut empty = true;
            for v in members {
                let i = self.require(v.as_ref())?;
                if owner[i].is_some_and(|o| o != ci) {
                    return Err(GraphError::OverlappingClasses(v.as_ref().to_string()));
                }
                owner[i] = Some(ci);
                empty = false;
            }
            if empty {
                return Err(GraphError::EmptyClass(label));
            }
            labels.push(label);
        }
        if let Some(i) = owner.iter().position(Option::is_none) {
            return Err(GraphError::UncoveredVertex(self.names[i].clone()));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateLabel(w[0].clone()));
        }
        let mut edges = BTreeSet::new();
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list {
                let (a, b) = (owner[i].unwrap(), owner[j].unwrap());
                if a < b {
                    edges.insert((labels[a].clone(), labels[b].clone()));
                }
            }
        }
        Graph::new(labels, edges)
    }

    pub fn without_vertices<S: AsRef<str>>(&self, remove: &[S]) -> Result<Graph, GraphError> {
        let mut gone = BTreeSet::new();
        for v in remove {
            gone.insert(self.require(v.as_ref())?);
        }
        let vertices: Vec<String> = (0..self.order())
            .filter(|i| !gone.contains(i))
            .map(|i| self.names[i].clone())
            .collect();
        let edges: Vec<(String, String)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| i < j && !gone.contains(&i) && !gone.contains(&j))
            .map(|(i, j)| (self.names[i].clone(), self.names[j].clone()))
            .collect();
        Graph::new(vertices, edges)
    }

    pub fn without_edge(&self, u: &str, v: &str) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            self.require(u)?;
            self.require(v)?;
            return Err(GraphError::NotAnEdge(u.to_string(), v.to_string()));
        }
        let edges: Vec<_> = self
            .name_edges()
            .into_iter()
            .filter(|(a, b)| !((a == u && b == v) || (a == v && b == u)))
            .collect();
        Graph::new(self.names.clone(), edges)
    }

    /// Add a new vertex adjacent to the given existing vertices.
    pub fn with_vertex<S: AsRef<str>>(&self, name: &str, neighbors: &[S]) -> Result<Graph, GraphError> {
        if self.contains(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let mut edges = self.name_edges();
        for n in neighbors {
            self.require(n.as_ref())?;
            edges.push((name.to_string(), n.as_ref().to_string()));
        }
        Graph::new(self.names.iter().cloned().chain([name.to_string()]), edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Undirected DOT rendering. `attrs` may return extra node attributes.
    pub fn to_dot_with(&self, name: &str, attrs: impl Fn(&str) -> Option<String>) -> String {
        let mut out = format!("graph {} {{\n", dot_quote(name));
        for v in self.vertices() {
            match attrs(v) {
                Some(a) => out.push_str(&format!("  {} [{a}];\n", dot_quote(v))),
                None => out.push_str(&format!("  {};\n", dot_quote(v))),
            }
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", dot_quote(a), dot_quote(b)));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_with("G", |_| None)
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Split `base#k` into `(base, k)`; ids without a numeric suffix count 0.
fn split_merge_count(id: &str) -> (&str, usize) {
    if let Some((base, k)) = id.rsplit_once(MERGE_SEPARATOR) {
        if !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()) {
            if let Ok(k) = k.parse() {
                return (base, k);
            }
        }
    }
    (id, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Graph {
        Graph::path("", n)
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(
            Graph::new(["a"], [("a", "a")]).unwrap_err(),
            GraphError::SelfLoop("a".into())
        );
        assert!(matches!(
            Graph::new(["a", "b"], [("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge(..))
        ));
        assert!(matches!(
            Graph::new(["a"], [("a", "z")]),
            Err(GraphError::UnknownVertex(_))
        ));
        assert!(matches!(
            Graph::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(GraphError::DuplicateVertex(_))
        ));
    }

    #[test]
    fn contract_triangle_gives_edge() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let h = g.contract_edge("a", "b").unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.size(), 1);
        assert!(h.has_edge("a#1", "c"));
    }

    #[test]
    fn contract_path_middle() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let h = g.contract_edge("b", "c").unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 2);
        assert!(h.has_edge("a", "b#1") && h.has_edge("b#1", "d"));
    }

    #[test]
    fn contract_c6_gives_c5() {
        let g = Graph::cycle("c", 6);
        let h = g.contract_edge("c3", "c4").unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(h.size(), 5);
        assert!(h.vertices().all(|v| h.degree(v).unwrap() == 2));
        assert!(h.is_connected());
    }

    #[test]
    fn contraction_is_symmetric_and_counts_merges() {
        let g = Graph::cycle("c", 5);
        assert_eq!(g.contract_edge("c1", "c2"), g.contract_edge("c2", "c1"));
        let h = g.contract_edge("c1", "c2").unwrap();
        let h = h.contract_edge("c1#1", "c3").unwrap();
        assert!(h.contains("c1#2"));
    }

    #[test]
    fn contract_rejects_non_edges() {
        let g = p(4);
        assert!(matches!(g.contract_edge("1", "3"), Err(GraphError::NotAnEdge(..))));
        assert!(matches!(g.contract_edge("1", "1"), Err(GraphError::SelfLoop(_))));
        assert!(matches!(g.contract_edge("1", "9"), Err(GraphError::UnknownVertex(_))));
    }

    #[test]
    fn quotient_of_p6_blocks() {
        let g = p(6);
        let q = g
            .quotient([("x", vec!["1", "2"]), ("y", vec!["3", "4"]), ("z", vec!["5", "6"])])
            .unwrap();
        assert_eq!(q, Graph::from_edges([("x", "y"), ("y", "z")]).unwrap());
        let all = g.quotient([("k", g.vertices().collect::<Vec<_>>())]).unwrap();
        assert_eq!(all.order(), 1);
        assert_eq!(all.size(), 0);
    }

    #[test]
    fn quotient_rejects_bad_partitions() {
        let g = p(3);
        assert!(matches!(
            g.quotient([("x", vec!["1", "2"]), ("y", vec!["2", "3"])]),
            Err(GraphError::OverlappingClasses(_))
        ));
        assert!(matches!(
            g.quotient([("x", vec!["1", "2"])]),
            Err(GraphError::UncoveredVertex(_))
        ));
        assert!(matches!(
            g.quotient([("x", vec!["1", "2", "3"]), ("y", vec![])]),
            Err(GraphError::EmptyClass(_))
        ));
    }

    #[test]
    fn bipartition_of_even_and_odd_cycles() {
        let b = Graph::cycle("c", 4).bipartition().unwrap();
        assert_eq!(b.a, vec!["c1", "c3"]);
        assert_eq!(b.b, vec!["c2", "c4"]);
        assert!(Graph::cycle("c", 5).bipartition().is_none());
    }

    #[test]
    fn distances_and_diameter() {
        let g = Graph::path("p", 5);
        assert_eq!(g.distance("p1", "p5").unwrap(), Some(4));
        assert_eq!(g.diameter(), Diameter::Finite(4));
        let two = Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(two.diameter(), Diameter::Infinite);
        assert_eq!(two.distance("a", "b").unwrap(), None);
    }

    #[test]
    fn connected_subsets() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        assert!(g.is_connected_subset(["a", "b"]).unwrap());
        assert!(!g.is_connected_subset(["a", "c"]).unwrap());
        assert_eq!(
            g.is_connected_subset(Vec::<&str>::new()),
            Err(GraphError::EmptySet)
        );
        assert!(matches!(
            g.is_connected_subset(["a", "zz"]),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn subdivision() {
        let k2 = Graph::from_edges([("a", "b")]).unwrap();
        let s = k2.subdivide_edge("a", "b").unwrap();
        assert_eq!((s.order(), s.size()), (3, 2));
        assert!(!s.has_edge("a", "b"));
        let c3 = Graph::cycle("c", 3);
        let c4 = c3.subdivide_edge("c1", "c2").unwrap();
        assert_eq!((c4.order(), c4.size()), (4, 4));
        assert!(c4.vertices().all(|v| c4.degree(v).unwrap() == 2));
        assert!(matches!(
            c4.subdivide_edge("c1", "c2"),
            Err(GraphError::NotAnEdge(..))
        ));
    }

    #[test]
    fn json_is_canonical() {
        let g = Graph::from_edges([("b", "a"), ("c", "a")]).unwrap();
        assert_eq!(
            g.to_json(),
            r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","c"]]}"#
        );
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert!(Graph::from_json(r#"{"vertices":["a"],"edges":[["a","a"]]}"#).is_err());
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges([("a", "b")]).unwrap();
        assert_eq!(g.to_dot(), "graph \"G\" {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
    }
}
