//! Assignment of graph vertices to pattern classes by branching with
//! domain propagation.
//!
//! Each vertex carries a domain (mask of classes it may still join); each
//! class carries its territory (vertices whose domain still contains it).
//! After every decision the following are enforced to a fixpoint:
//!
//! * a vertex fixed to class `c` restricts its neighbours to the closed
//!   pattern neighbourhood of `c`;
//! * the fixed members of a class must lie in one component of its
//!   territory, and territory outside that component is dropped;
//! * every class keeps a nonempty territory;
//! * every pattern edge `ab` keeps some graph edge between the territories
//!   of `a` and `b`.
//!
//! When every domain is a singleton these checks are exactly the witness
//! conditions.

use super::bits::{bit, full, lowest, ones, BitGraph, Mask};
use super::pattern::PatternSpec;
use super::{EngineError, Meter};

pub(crate) struct ClassSearch<'a> {
    g: &'a BitGraph,
    k: usize,
    closed: Vec<Mask>,
    pattern_edges: Vec<(usize, usize)>,
}

#[derive(Clone)]
struct State {
    dom: Vec<Mask>,
    terr: Vec<Mask>,
    fixed: Vec<Mask>,
    queue: Vec<usize>,
}

impl<'a> ClassSearch<'a> {
    pub(crate) fn new(g: &'a BitGraph, pattern: &PatternSpec) -> Self {
        ClassSearch {
            g,
            k: pattern.order(),
            closed: pattern.closed_neighbourhoods(),
            pattern_edges: pattern.edges(),
        }
    }

    /// Mask of all classes.
    pub(crate) fn all_classes(&self) -> Mask {
        full(self.k)
    }

    /// Find an assignment consistent with the initial domains. Returns the
    /// class of each vertex.
    pub(crate) fn solve(
        &self,
        domains: Vec<Mask>,
        meter: &mut Meter,
    ) -> Result<Option<Vec<usize>>, EngineError> {
        let n = self.g.order();
        debug_assert_eq!(domains.len(), n);
        let mut st = State {
            dom: vec![self.all_classes(); n],
            terr: vec![full(n); self.k],
            fixed: vec![0; self.k],
            queue: Vec::new(),
        };
        for (x, d) in domains.into_iter().enumerate() {
            if !self.restrict(&mut st, x, d) {
                return Ok(None);
            }
        }
        if !self.propagate(&mut st) {
            return Ok(None);
        }
        Ok(self
            .branch(st, meter)?
            .map(|st| st.dom.iter().map(|&d| lowest(d)).collect()))
    }

    fn restrict(&self, st: &mut State, x: usize, allowed: Mask) -> bool {
        let removed = st.dom[x] & !allowed;
        if removed == 0 {
            return st.dom[x] != 0;
        }
        st.dom[x] &= allowed;
        for c in ones(removed) {
            st.terr[c] &= !bit(x);
        }
        match st.dom[x].count_ones() {
            0 => false,
            1 => {
                st.fixed[lowest(st.dom[x])] |= bit(x);
                st.queue.push(x);
                true
            }
            _ => true,
        }
    }

    fn propagate(&self, st: &mut State) -> bool {
        loop {
            while let Some(x) = st.queue.pop() {
                let allowed = self.closed[lowest(st.dom[x])];
                for y in ones(self.g.adj[x]) {
                    if !self.restrict(st, y, allowed) {
                        return false;
                    }
                }
            }
            let mut changed = false;
            for c in 0..self.k {
                if st.terr[c] == 0 {
                    return false;
                }
                if st.fixed[c] == 0 {
                    continue;
                }
                let comp = self.g.component(lowest(st.fixed[c]), st.terr[c]);
                if st.fixed[c] & !comp != 0 {
                    return false;
                }
                let outside = st.terr[c] & !comp;
                for x in ones(outside) {
                    if !self.restrict(st, x, !bit(c)) {
                        return false;
                    }
                    changed = true;
                }
            }
            for &(a, b) in &self.pattern_edges {
                if self.g.neighbourhood(st.terr[a]) & st.terr[b] == 0 {
                    return false;
                }
            }
            if !changed && st.queue.is_empty() {
                return true;
            }
        }
    }

    fn branch(&self, st: State, meter: &mut Meter) -> Result<Option<State>, EngineError> {
        // smallest domain first, then highest degree, then lowest index
        let pick = (0..self.g.order())
            .filter(|&x| st.dom[x].count_ones() > 1)
            .min_by_key(|&x| (st.dom[x].count_ones(), std::cmp::Reverse(self.g.degree(x)), x));
        let Some(x) = pick else {
            return Ok(Some(st));
        };
        for c in ones(st.dom[x]) {
            meter.tick()?;
            let mut child = st.clone();
            if self.restrict(&mut child, x, bit(c)) && self.propagate(&mut child) {
                if let Some(done) = self.branch(child, meter)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }
}
