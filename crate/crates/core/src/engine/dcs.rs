//! 2-Disjoint Connected Subgraphs and the pair-guessing P4 test built on it.

use std::collections::BTreeSet;

use super::bits::{bit, full, lowest, ones, BitGraph, Mask};
use super::pattern::PatternSpec;
use super::witness::WitnessStructure;
use super::{Budget, EngineError, Meter};
use crate::graph::Graph;

/// A split of the vertex set into two connected sides `a1 ⊇ z1`, `a2 ⊇ z2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDcsSolution {
    pub a1: BTreeSet<String>,
    pub a2: BTreeSet<String>,
}

impl TwoDcsSolution {
    /// Whether this is a valid answer for the instance `(g, z1, z2)`.
    pub fn is_valid_for(&self, g: &Graph, z1: &BTreeSet<String>, z2: &BTreeSet<String>) -> bool {
        self.a1.is_disjoint(&self.a2)
            && self.a1.len() + self.a2.len() == g.order()
            && self.a1.iter().chain(&self.a2).all(|v| g.contains(v))
            && z1.is_subset(&self.a1)
            && z2.is_subset(&self.a2)
            && g.is_connected_subset(&self.a1).unwrap_or(false)
            && g.is_connected_subset(&self.a2).unwrap_or(false)
    }
}

fn to_mask(g: &Graph, set: &BTreeSet<String>) -> Result<Mask, EngineError> {
    set.iter().try_fold(0, |m, v| {
        g.index_of(v)
            .map(|i| m | bit(i))
            .ok_or_else(|| EngineError::Graph(crate::graph::GraphError::UnknownVertex(v.clone())))
    })
}

fn names(g: &Graph, m: Mask) -> BTreeSet<String> {
    ones(m).map(|i| g.name(i).to_string()).collect()
}

/// Partition `V(g)` into connected `a1 ⊇ z1` and `a2 ⊇ z2`, if possible.
pub fn solve_2dcs(
    g: &Graph,
    z1: &BTreeSet<String>,
    z2: &BTreeSet<String>,
    budget: Budget,
) -> Result<Option<TwoDcsSolution>, EngineError> {
    if z1.is_empty() || z2.is_empty() {
        return Err(EngineError::InvalidTerminals("terminal sets must be nonempty".into()));
    }
    if let Some(v) = z1.intersection(z2).next() {
        return Err(EngineError::InvalidTerminals(format!(
            "vertex `{v}` is in both terminal sets"
        )));
    }
    let bg = BitGraph::from_graph(g)?;
    let (m1, m2) = (to_mask(g, z1)?, to_mask(g, z2)?);
    let mut meter = budget.meter();
    Ok(split(&bg, full(g.order()), m1, m2, &mut meter)?.map(|(a1, a2)| TwoDcsSolution {
        a1: names(g, a1),
        a2: names(g, a2),
    }))
}

/// Branch on the free vertices of `alive \ (s1 ∪ s2)`. A free vertex that
/// side 1 cannot reach through its potential territory is forced to side 2
/// and vice versa; a side whose fixed vertices fall into different
/// components of its territory kills the branch.
pub(crate) fn split(
    g: &BitGraph,
    alive: Mask,
    s1: Mask,
    s2: Mask,
    meter: &mut Meter,
) -> Result<Option<(Mask, Mask)>, EngineError> {
    let (mut s1, mut s2) = (s1, s2);
    let mut free = alive & !(s1 | s2);
    loop {
        let c1 = g.component(lowest(s1), s1 | free);
        let c2 = g.component(lowest(s2), s2 | free);
        if s1 & !c1 != 0 || s2 & !c2 != 0 {
            return Ok(None);
        }
        let to2 = free & !c1;
        let to1 = free & !c2;
        if to1 & to2 != 0 {
            return Ok(None);
        }
        if to1 | to2 == 0 {
            break;
        }
        s1 |= to1;
        s2 |= to2;
        free &= !(to1 | to2);
    }
    if free == 0 {
        return Ok(Some((s1, s2)));
    }
    // grow side 1 along its frontier
    let frontier = free & g.neighbourhood(s1);
    let pool = if frontier != 0 { frontier } else { free };
    let x = ones(pool)
        .max_by_key(|&x| (g.degree(x), std::cmp::Reverse(x)))
        .unwrap();
    meter.tick()?;
    if let Some(found) = split(g, alive, s1 | bit(x), s2, meter)? {
        return Ok(Some(found));
    }
    meter.tick()?;
    split(g, alive, s1, s2 | bit(x), meter)
}

/// P4-contractibility by guessing the end vertices: for every pair `u < v`
/// of non-adjacent vertices with disjoint nonempty neighbourhoods, solve
/// 2-DCS on `g - {u, v}` with terminals `N(u)` and `N(v)`.
///
/// `g` must be connected; then any path from `u` to `v` crosses from the
/// first side to the second, so the two middle classes are adjacent.
pub fn p4_contractible(g: &Graph, budget: Budget) -> Result<Option<WitnessStructure>, EngineError> {
    let n = g.order();
    if n < 4 || !g.is_connected() {
        return Ok(None);
    }
    let bg = BitGraph::from_graph(g)?;
    let mut meter = budget.meter();
    for u in 0..n {
        for v in u + 1..n {
            let (nu, nv) = (bg.adj[u], bg.adj[v]);
            if nu & bit(v) != 0 || nu & nv != 0 || nu == 0 || nv == 0 {
                continue;
            }
            let alive = full(n) & !bit(u) & !bit(v);
            if let Some((a1, a2)) = split(&bg, alive, nu, nv, &mut meter)? {
                let classes = vec![
                    names(g, bit(u)),
                    names(g, a1),
                    names(g, a2),
                    names(g, bit(v)),
                ];
                let ws = WitnessStructure::new(PatternSpec::Path(4), classes)?;
                debug_assert_eq!(super::verify_witness(g, &ws), Ok(()));
                return Ok(Some(ws));
            }
        }
    }
    Ok(None)
}
