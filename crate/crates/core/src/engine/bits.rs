use super::{EngineError, MAX_SEARCH_VERTICES};
use crate::graph::Graph;

pub(crate) type Mask = u128;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1 << i
}

#[inline]
pub(crate) fn lowest(m: Mask) -> usize {
    m.trailing_zeros() as usize
}

pub(crate) fn full(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub(crate) fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = lowest(m);
            m &= m - 1;
            Some(i)
        }
    })
}

/// Adjacency rows as bitsets, in the graph's vertex index order.
#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    pub(crate) adj: Vec<Mask>,
}

impl BitGraph {
    pub(crate) fn from_graph(g: &Graph) -> Result<Self, EngineError> {
        if g.order() > MAX_SEARCH_VERTICES {
            return Err(EngineError::GraphTooLarge(g.order()));
        }
        let adj = (0..g.order())
            .map(|i| g.neighbor_indices(i).iter().fold(0, |m, &j| m | bit(j)))
            .collect();
        Ok(BitGraph { adj })
    }

    pub(crate) fn order(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn degree(&self, x: usize) -> u32 {
        self.adj[x].count_ones()
    }

    /// Open neighbourhood of a set (may intersect the set itself).
    pub(crate) fn neighbourhood(&self, set: Mask) -> Mask {
        ones(set).fold(0, |m, x| m | self.adj[x])
    }

    /// Component of `start` in the subgraph induced by `within`.
    pub(crate) fn component(&self, start: usize, within: Mask) -> Mask {
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let next = self.neighbourhood(frontier) & within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    #[cfg(test)]
    pub(crate) fn is_connected_set(&self, set: Mask) -> bool {
        set != 0 && self.component(lowest(set), set) == set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_helpers() {
        assert_eq!(ones(0b1011).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(128), u128::MAX);
        assert_eq!(lowest(0b1000), 3);
    }

    #[test]
    fn components() {
        let g = Graph::path("", 5);
        let bg = BitGraph::from_graph(&g).unwrap();
        // vertex order is "1".."5"
        assert_eq!(bg.component(0, full(5)), full(5));
        assert_eq!(bg.component(0, 0b11011), 0b00011);
        assert!(!bg.is_connected_set(0b101));
        assert!(bg.is_connected_set(0b110));
    }
}
