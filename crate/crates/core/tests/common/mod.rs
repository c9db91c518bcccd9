//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use contractibility::{Graph, Hypergraph, RoleClass};
use rand::Rng;

/// Zero-padded so that lexicographic and numeric order agree.
pub fn vname(i: usize) -> String {
    format!("v{i:02}")
}

pub fn graph_on(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(
        (0..n).map(vname),
        edges.iter().map(|&(a, b)| (vname(a), vname(b))),
    )
    .expect("simple graph")
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Labelled graph on `n` vertices whose edge set is selected by `mask`
/// over `pairs(n)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    graph_on(n, &edges)
}

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |mask| graph_from_mask(n, mask))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    graph_on(n, &edges)
}

pub fn random_connected_graph<R: Rng>(rng: &mut R, nmin: usize, nmax: usize) -> Graph {
    loop {
        let n = rng.gen_range(nmin..=nmax);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Adjacency rows as bitmasks, using the graph's index order.
pub fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|i| g.neighbor_indices(i).iter().fold(0, |m, &j| m | 1 << j))
        .collect()
}

pub fn connected_mask(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut grow = seen;
        for (i, row) in adj.iter().enumerate() {
            if seen >> i & 1 == 1 {
                grow |= row & set;
            }
        }
        if grow == seen {
            return seen == set;
        }
        seen = grow;
    }
}

/// Every set partition of `0..n` into exactly `k` blocks, as block masks.
pub fn set_partitions(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, n: usize, k: usize, blocks: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n - i < k - blocks.len() {
            return;
        }
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] |= 1 << i;
            go(i + 1, n, k, blocks, out);
            blocks[b] &= !(1 << i);
        }
        if blocks.len() < k {
            blocks.push(1 << i);
            go(i + 1, n, k, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Contractibility to `P_l` straight from the definition: some partition
/// into `l` connected blocks whose quotient is a path. A connected
/// quotient with `l - 1` edges and maximum degree 2 is exactly `P_l`.
pub fn brute_force_path(g: &Graph, l: usize) -> bool {
    let adj = adjacency(g);
    set_partitions(g.order(), l).into_iter().any(|blocks| {
        if !blocks.iter().all(|&b| connected_mask(&adj, b)) {
            return false;
        }
        let reach: Vec<u32> = blocks
            .iter()
            .map(|&b| (0..adj.len()).filter(|i| b >> i & 1 == 1).fold(0, |m, i| m | adj[i]))
            .collect();
        let qadj: Vec<u32> = reach
            .iter()
            .enumerate()
            .map(|(a, r)| {
                blocks
                    .iter()
                    .enumerate()
                    .filter(|&(b, blk)| a != b && r & blk != 0)
                    .fold(0, |m, (b, _)| m | 1 << b)
            })
            .collect();
        let edges: u32 = qadj.iter().map(|r| r.count_ones()).sum::<u32>() / 2;
        edges as usize == l - 1
            && qadj.iter().all(|r| r.count_ones() <= 2)
            && connected_mask(&qadj, (1u32 << l) - 1)
    })
}

/// 2-DCS by trying every assignment of the free vertices.
pub fn brute_force_2dcs(g: &Graph, z1: &BTreeSet<String>, z2: &BTreeSet<String>) -> bool {
    let adj = adjacency(g);
    let mask = |s: &BTreeSet<String>| s.iter().fold(0u32, |m, v| m | 1 << g.index_of(v).unwrap());
    let (m1, m2) = (mask(z1), mask(z2));
    let free: Vec<usize> = (0..g.order()).filter(|i| (m1 | m2) >> i & 1 == 0).collect();
    (0..1u32 << free.len()).any(|code| {
        let extra = free
            .iter()
            .enumerate()
            .filter(|(k, _)| code >> k & 1 == 1)
            .fold(0, |m, (_, &i)| m | 1 << i);
        let a1 = m1 | extra;
        let all = (1u32 << g.order()) - 1;
        connected_mask(&adj, a1) && connected_mask(&adj, all & !a1)
    })
}

/// Whether an odd cycle exists, found as an odd closed walk of length at
/// most `n` via boolean adjacency-matrix powers.
pub fn has_odd_cycle(g: &Graph) -> bool {
    let n = g.order();
    let adj = adjacency(g);
    let mut walk: Vec<u32> = (0..n).map(|i| 1 << i).collect();
    for len in 1..=n {
        walk = walk
            .iter()
            .map(|row| (0..n).filter(|j| row >> j & 1 == 1).fold(0, |m, j| m | adj[j]))
            .collect();
        if len % 2 == 1 && (0..n).any(|i| walk[i] >> i & 1 == 1) {
            return true;
        }
    }
    false
}

pub fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// The worked instance: Q = {q1,q2,q3}, S1 = {q2,q3}, S2 = {q1,q2}, S3 = Q.
pub fn worked_instance_raw() -> Hypergraph {
    Hypergraph::new(["q1", "q2", "q3"], [vec!["q2", "q3"], vec!["q1", "q2"]]).unwrap()
}

pub fn worked_instance() -> Hypergraph {
    worked_instance_raw().normalize().unwrap()
}

/// The drawing of the worked instance, transcribed edge by edge. Node
/// `s2` carries label S3 and `s3` carries S2; drawn S-Q edges are
/// subdivided by the Q' nodes placed on them, which are also joined to q*.
pub fn worked_instance_drawing() -> Graph {
    let drawn = "v/u1, v/u2, q/u1, q/u2, u1/s1, u1/s2, u1/s3, u2/s1, u2/s2, u2/s3, \
        s1/ss1, s1/ss2, s1/ss3, s2/ss1, s2/ss2, s2/ss3, s3/ss1, s3/ss2, s3/ss3, \
        ss1/w, ss2/w, ss3/w, s2/q3, s3/q2, s3/q1, ss2/q3, ss3/q2, ss3/q1, s1/q3, \
        s1/q2, ss1/q3, ss1/q2, s2/q2, s2/q1, ss2/q2, ss2/q1";
    let label: BTreeMap<&str, &str> = [
        ("v", "v"),
        ("u1", "u1"),
        ("u2", "u2"),
        ("q", "qstar"),
        ("s1", "S1"),
        ("s2", "S3"),
        ("s3", "S2"),
        ("ss1", "Sp1"),
        ("ss2", "Sp3"),
        ("ss3", "Sp2"),
        ("w", "w"),
        ("q1", "q1"),
        ("q2", "q2"),
        ("q3", "q3"),
    ]
    .into_iter()
    .collect();
    let mut edges = Vec::new();
    for pair in drawn.split(',') {
        let (a, b) = pair.trim().split_once('/').unwrap();
        let (a, b) = (label[a], label[b]);
        if a.starts_with('S') && !a.starts_with("Sp") && b.starts_with('q') {
            let mid = format!("{b}_{}", &a[1..]);
            edges.push((b.to_string(), mid.clone()));
            edges.push((mid.clone(), a.to_string()));
            edges.push((mid, "qstar".to_string()));
        } else {
            edges.push((a.to_string(), b.to_string()));
        }
    }
    Graph::from_edges(edges).unwrap()
}

/// Maximum distances between vertex types, upper triangle in the order
/// u1, u2, v, w, S, S', Q, Q', q*.
pub const DISTANCE_BOUNDS: [[usize; 9]; 9] = [
    [0, 2, 1, 3, 1, 2, 3, 2, 1],
    [0, 0, 1, 3, 1, 2, 3, 2, 1],
    [0, 0, 0, 4, 2, 3, 4, 3, 2],
    [0, 0, 0, 0, 2, 1, 2, 3, 4],
    [0, 0, 0, 0, 2, 1, 2, 3, 2],
    [0, 0, 0, 0, 0, 2, 3, 2, 3],
    [0, 0, 0, 0, 0, 0, 2, 3, 2],
    [0, 0, 0, 0, 0, 0, 0, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const DISTANCE_CLASSES: [RoleClass; 9] = [
    RoleClass::U1,
    RoleClass::U2,
    RoleClass::V,
    RoleClass::W,
    RoleClass::S,
    RoleClass::SPrime,
    RoleClass::Q,
    RoleClass::QPrime,
    RoleClass::Star,
];
