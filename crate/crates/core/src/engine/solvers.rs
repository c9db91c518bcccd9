use std::collections::BTreeSet;

use super::bits::{bit, full, BitGraph, Mask};
use super::pattern::PatternSpec;
use super::search::ClassSearch;
use super::witness::WitnessStructure;
use super::{Budget, EngineError};
use crate::graph::Graph;

/// Endpoints of a path witness whose end classes are `{u}` and `{v}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuitablePair {
    pub u: String,
    pub v: String,
    pub witness: WitnessStructure,
}

fn to_witness(
    g: &Graph,
    pattern: PatternSpec,
    assignment: &[usize],
) -> Result<WitnessStructure, EngineError> {
    let mut classes = vec![BTreeSet::new(); pattern.order()];
    for (x, &c) in assignment.iter().enumerate() {
        classes[c].insert(g.name(x).to_string());
    }
    let ws = WitnessStructure::new(pattern, classes)?;
    debug_assert_eq!(super::verify_witness(g, &ws), Ok(()));
    Ok(ws)
}

/// Search for an `h`-witness structure of `g`.
///
/// The highest-degree vertex is restricted to one class per orbit of the
/// pattern's automorphism group; every other vertex starts unrestricted.
pub fn contracts_to(
    g: &Graph,
    h: &PatternSpec,
    budget: Budget,
) -> Result<Option<WitnessStructure>, EngineError> {
    h.validate()?;
    let (k, n) = (h.order(), g.order());
    if k > n {
        return Err(EngineError::PatternTooLarge {
            pattern: k,
            graph: n,
        });
    }
    let bg = BitGraph::from_graph(g)?;
    if h.is_connected() && !g.is_connected() {
        return Ok(None);
    }
    let search = ClassSearch::new(&bg, h);
    let mut domains = vec![search.all_classes(); n];
    let root = (0..n)
        .max_by_key(|&x| (bg.degree(x), std::cmp::Reverse(x)))
        .expect("graph is nonempty");
    domains[root] = h.orbit_representatives();
    let mut meter = budget.meter();
    match search.solve(domains, &mut meter)? {
        Some(assignment) => Ok(Some(to_witness(g, h.clone(), &assignment)?)),
        None => Ok(None),
    }
}

/// Search for a `P_l`-suitable pair, scanning pairs `u < v` (by id) at
/// distance at least `l - 1`. For each pair the remaining vertices are split
/// among the `l - 2` inner classes.
pub fn find_suitable_pair(
    g: &Graph,
    l: usize,
    budget: Budget,
) -> Result<Option<SuitablePair>, EngineError> {
    if l < 3 {
        return Err(EngineError::InvalidPattern(format!(
            "suitable pairs need a path of at least 3 vertices, got {l}"
        )));
    }
    let n = g.order();
    if l > n || !g.is_connected() {
        return Ok(None);
    }
    let bg = BitGraph::from_graph(g)?;
    let pattern = PatternSpec::Path(l);
    let search = ClassSearch::new(&bg, &pattern);
    let inner: Mask = full(l - 1) & !bit(0);
    let dist = g.distances();
    let mut meter = budget.meter();
    for u in 0..n {
        for v in u + 1..n {
            if dist.get(u, v).is_none_or(|d| d < l - 1) {
                continue;
            }
            let mut domains = vec![inner; n];
            domains[u] = bit(0);
            domains[v] = bit(l - 1);
            if let Some(assignment) = search.solve(domains, &mut meter)? {
                return Ok(Some(SuitablePair {
                    u: g.name(u).to_string(),
                    v: g.name(v).to_string(),
                    witness: to_witness(g, pattern, &assignment)?,
                }));
            }
        }
    }
    Ok(None)
}

/// A graph contracts to a triangle iff it is connected and not a tree.
pub fn c3_contractible(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.size() >= g.order()
}

/// Length of the longest cycle `g` contracts to, or 0 if none.
///
/// Contracting to `C_k` implies contracting to every `C_l` with
/// `3 <= l <= k`, so the scan goes upwards and stops at the first failure.
pub fn cyclicity(g: &Graph, budget: Budget) -> Result<usize, EngineError> {
    if !c3_contractible(g) {
        return Ok(0);
    }
    for k in 4..=g.order() {
        if contracts_to(g, &PatternSpec::Cycle(k), budget)?.is_none() {
            return Ok(k - 1);
        }
    }
    Ok(g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::verify_witness;

    fn star() -> Graph {
        Graph::from_edges([("s", "a"), ("s", "b"), ("s", "c")]).unwrap()
    }

    #[test]
    fn cycle_contracts_to_smaller_cycle_only() {
        let c6 = Graph::cycle("v", 6);
        let w = contracts_to(&c6, &PatternSpec::Cycle(5), Budget::UNLIMITED)
            .unwrap()
            .unwrap();
        assert_eq!(verify_witness(&c6, &w), Ok(()));
        assert!(contracts_to(&c6, &PatternSpec::Path(4), Budget::UNLIMITED)
            .unwrap()
            .is_none());
    }

    #[test]
    fn star_is_not_p4() {
        assert!(contracts_to(&star(), &PatternSpec::Path(4), Budget::UNLIMITED)
            .unwrap()
            .is_none());
    }

    #[test]
    fn pattern_larger_than_graph_is_rejected() {
        assert!(matches!(
            contracts_to(&star(), &PatternSpec::Path(5), Budget::UNLIMITED),
            Err(EngineError::PatternTooLarge { pattern: 5, graph: 4 })
        ));
    }

    #[test]
    fn budget_is_not_a_no() {
        let g = Graph::cycle("v", 12);
        let r = contracts_to(&g, &PatternSpec::Path(4), Budget::nodes(3));
        assert_eq!(r, Err(EngineError::BudgetExceeded(3)));
    }

    #[test]
    fn suitable_pair_of_p5() {
        let g = Graph::path("x", 5);
        let pair = find_suitable_pair(&g, 5, Budget::UNLIMITED).unwrap().unwrap();
        assert_eq!((pair.u.as_str(), pair.v.as_str()), ("x1", "x5"));
        assert_eq!(verify_witness(&g, &pair.witness), Ok(()));
        assert!(find_suitable_pair(&g, 2, Budget::UNLIMITED).is_err());
        assert!(find_suitable_pair(&g, 6, Budget::UNLIMITED).unwrap().is_none());
    }

    #[test]
    fn c3_and_cyclicity() {
        assert!(!c3_contractible(&star()));
        assert!(c3_contractible(&Graph::cycle("c", 3)));
        assert_eq!(cyclicity(&Graph::cycle("c", 6), Budget::UNLIMITED), Ok(6));
        assert_eq!(cyclicity(&star(), Budget::UNLIMITED), Ok(0));
        let k4 = Graph::from_edges([
            ("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"),
        ])
        .unwrap();
        assert_eq!(cyclicity(&k4, Budget::UNLIMITED), Ok(3));
    }

    #[test]
    fn explicit_pattern() {
        // a square with a pendant vertex contracts to a triangle with a pendant
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("d", "e")]).unwrap();
        let paw = Graph::from_edges([("x", "y"), ("y", "z"), ("z", "x"), ("z", "t")]).unwrap();
        let w = contracts_to(&g, &PatternSpec::Explicit(paw), Budget::UNLIMITED)
            .unwrap()
            .unwrap();
        assert_eq!(verify_witness(&g, &w), Ok(()));
    }
}
