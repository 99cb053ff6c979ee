//! Undirected graphs: plain simple graphs and label-annotated unions of
//! comparability graphs.

use crate::error::{Error, Result};
use crate::order::StrictOrder;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<u32>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds from an edge list; duplicate edges collapse, loops are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(Error::IndexOutOfRange {
                        what: "vertex",
                        got: x as usize,
                        limit: n,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.adj[u as usize].push(v);
            g.adj[v as usize].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n as u32)
            .map(|v| (0..n as u32).filter(|&u| u != v).collect())
            .collect();
        SimpleGraph { n, adj }
    }

    /// Complete bipartite graph on parts `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let n = p + q;
        let adj = (0..n)
            .map(|v| {
                if v < p {
                    (p as u32..n as u32).collect()
                } else {
                    (0..p as u32).collect()
                }
            })
            .collect();
        SimpleGraph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, vs)| {
            let u = u as u32;
            vs.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> SimpleGraph {
        let adj = (0..self.n as u32)
            .map(|v| {
                let nb = &self.adj[v as usize];
                (0..self.n as u32)
                    .filter(|&u| u != v && nb.binary_search(&u).is_err())
                    .collect()
            })
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Edge-scan check that `vs` induces a clique.
    pub fn is_clique(&self, vs: &[u32]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| {
            vs[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Edge-scan check that `vs` induces an independent set.
    pub fn is_independent(&self, vs: &[u32]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// The comparability graph of a strict partial order: edge {u, v} iff u and
/// v are comparable.
pub fn comparability_graph(p: &StrictOrder) -> SimpleGraph {
    let n = p.n();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (u, v) in p.pairs() {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    SimpleGraph { n, adj }
}

/// Union of comparability graphs, with each edge annotated by the set of
/// constituent orders that relate its endpoints.
///
/// Labels are stored as a bitmask; bit `s` set means order `s` (0-based)
/// relates the pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledUnionGraph {
    n: usize,
    r: usize,
    edges: Vec<(u32, u32, u32)>, // (u, v, label mask), u < v, sorted
}

pub const MAX_UNION_ORDERS: usize = 32;

impl LabeledUnionGraph {
    /// Builds from pre-labeled edges. Edges may arrive in any order; masks
    /// for duplicate pairs are merged.
    pub fn from_labeled_edges(
        n: usize,
        r: usize,
        mut edges: Vec<(u32, u32, u32)>,
    ) -> Result<Self> {
        if r > MAX_UNION_ORDERS {
            return Err(Error::InvalidParameter(format!(
                "at most {MAX_UNION_ORDERS} constituent orders supported, got {r}"
            )));
        }
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0, e.2);
            }
            if e.0 == e.1 {
                return Err(Error::InvalidParameter(format!("loop at vertex {}", e.0)));
            }
            if e.1 as usize >= n {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    got: e.1 as usize,
                    limit: n,
                });
            }
            if e.2 == 0 || (r < 32 && e.2 >> r != 0) {
                return Err(Error::InvalidParameter(format!(
                    "edge ({}, {}) has label mask {:#x} outside 1..=r={}",
                    e.0, e.1, e.2, r
                )));
            }
        }
        edges.sort_unstable_by_key(|&(u, v, _)| (u, v));
        let mut merged: Vec<(u32, u32, u32)> = Vec::with_capacity(edges.len());
        for (u, v, m) in edges {
            match merged.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 |= m,
                _ => merged.push((u, v, m)),
            }
        }
        Ok(LabeledUnionGraph {
            n,
            r,
            edges: merged,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of constituent orders.
    pub fn order_count(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted (u, v, label mask) triples with u < v.
    pub fn labeled_edges(&self) -> &[(u32, u32, u32)] {
        &self.edges
    }

    /// Label mask of edge {u, v}, or None if not an edge.
    pub fn labels(&self, u: u32, v: u32) -> Option<u32> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by_key(&key, |&(a, b, _)| (a, b))
            .ok()
            .map(|i| self.edges[i].2)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v, _) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn to_simple(&self) -> SimpleGraph {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); self.n];
        for &(u, v, _) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleGraph { n: self.n, adj }
    }
}

/// Union of the comparability graphs of `orders`, labeled by constituent
/// index. All orders must share a vertex count; an empty list yields the
/// empty graph on zero vertices.
pub fn union_graphs(orders: &[StrictOrder]) -> Result<LabeledUnionGraph> {
    let n = match orders.first() {
        None => {
            return LabeledUnionGraph::from_labeled_edges(0, 0, Vec::new());
        }
        Some(p) => p.n(),
    };
    for p in orders {
        if p.n() != n {
            return Err(Error::MismatchedVertexCount {
                left: n,
                right: p.n(),
            });
        }
    }
    let total: usize = orders.iter().map(StrictOrder::pair_count).sum();
    let mut edges = Vec::with_capacity(total);
    for (s, p) in orders.iter().enumerate() {
        let bit = 1u32 << s;
        for (u, v) in p.pairs() {
            edges.push((u.min(v), u.max(v), bit));
        }
    }
    LabeledUnionGraph::from_labeled_edges(n, orders.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_comparability_is_complete() {
        let g = comparability_graph(&StrictOrder::chain(3));
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_clique(&[0, 1, 2]));
    }

    #[test]
    fn antichain_comparability_is_empty() {
        let g = comparability_graph(&StrictOrder::empty(4));
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_independent(&[0, 1, 2, 3]));
    }

    #[test]
    fn disjoint_two_chains_give_perfect_matching() {
        let p = StrictOrder::transitive_closure(4, &[(0, 1), (2, 3)]).unwrap();
        let g = comparability_graph(&p);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(2, 3));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn union_of_chain_and_antichain_is_labeled_one() {
        let u = union_graphs(&[StrictOrder::chain(3), StrictOrder::empty(3)]).unwrap();
        assert_eq!(u.edge_count(), 3);
        for &(_, _, m) in u.labeled_edges() {
            assert_eq!(m, 0b01);
        }
    }

    #[test]
    fn union_of_no_orders_is_empty() {
        let u = union_graphs(&[]).unwrap();
        assert_eq!(u.n(), 0);
        assert_eq!(u.edge_count(), 0);
    }

    #[test]
    fn union_rejects_mismatched_vertex_counts() {
        let err = union_graphs(&[StrictOrder::chain(3), StrictOrder::empty(4)]).unwrap_err();
        assert!(matches!(err, Error::MismatchedVertexCount { .. }));
    }

    #[test]
    fn labels_merge_across_orders() {
        let u = union_graphs(&[StrictOrder::chain(2), StrictOrder::chain(2)]).unwrap();
        assert_eq!(u.labels(0, 1), Some(0b11));
        assert_eq!(u.labels(1, 0), Some(0b11));
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = SimpleGraph::empty(3).complement();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, SimpleGraph::complete(3));
    }

    #[test]
    fn complete_bipartite_shape() {
        let g = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(g.edge_count(), 9);
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(0, 1));
    }
}
