//! Exact maximum balanced biclique in the subgraph sense: disjoint parts
//! X, Y with |X| = |Y| and every cross pair adjacent; edges inside the
//! parts are permitted. The reported value is the size of one part.

use crate::analysis::{OracleResult, OracleWitness};
use crate::bitset::BitRow;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_BICLIQUE_VERTEX_LIMIT: usize = 24;

struct BicliqueSearch<'a> {
    adj: &'a [BitRow],
    n: usize,
    best: usize,
    best_parts: (Vec<u32>, Vec<u32>),
    explored: u64,
}

impl BicliqueSearch<'_> {
    /// Vertices before `pos` are decided; candidates track which undecided
    /// vertices may still join each side (adjacent to all of the other
    /// side so far).
    fn branch(
        &mut self,
        pos: usize,
        x: &mut Vec<u32>,
        y: &mut Vec<u32>,
        cand_x: &BitRow,
        cand_y: &BitRow,
    ) {
        self.explored += 1;
        let t = x.len().min(y.len());
        if t > self.best {
            self.best = t;
            self.best_parts = (x.clone(), y.clone());
        }
        if pos == self.n {
            return;
        }
        let remaining_x: usize = (pos..self.n).filter(|&v| cand_x.get(v)).count();
        let remaining_y: usize = (pos..self.n).filter(|&v| cand_y.get(v)).count();
        if (x.len() + remaining_x).min(y.len() + remaining_y) <= self.best {
            return;
        }
        let v = pos;
        if cand_x.get(v) {
            let mut ny = cand_y.clone();
            ny.intersect_with(&self.adj[v]);
            x.push(v as u32);
            self.branch(pos + 1, x, y, cand_x, &ny);
            x.pop();
        }
        // Swapping the parts is a symmetry; force the lowest-indexed chosen
        // vertex into X.
        if cand_y.get(v) && !x.is_empty() {
            let mut nx = cand_x.clone();
            nx.intersect_with(&self.adj[v]);
            y.push(v as u32);
            self.branch(pos + 1, x, y, &nx, cand_y);
            y.pop();
        }
        self.branch(pos + 1, x, y, cand_x, cand_y);
    }
}

/// Exact maximum balanced biclique; errors when the graph exceeds
/// `vertex_limit`.
pub fn max_balanced_biclique_exact(
    g: &SimpleGraph,
    vertex_limit: usize,
) -> Result<OracleResult> {
    let n = g.n();
    if n > vertex_limit {
        return Err(Error::LimitExceeded {
            n,
            limit: vertex_limit,
        });
    }
    let adj: Vec<BitRow> = (0..n as u32)
        .map(|v| {
            let mut row = BitRow::zeros(n);
            for &u in g.neighbors(v) {
                row.set(u as usize);
            }
            row
        })
        .collect();
    let mut all = BitRow::zeros(n);
    for v in 0..n {
        all.set(v);
    }
    let mut search = BicliqueSearch {
        adj: &adj,
        n,
        best: 0,
        best_parts: (Vec::new(), Vec::new()),
        explored: 0,
    };
    let mut x = Vec::new();
    let mut y = Vec::new();
    search.branch(0, &mut x, &mut y, &all, &all);

    let (mut left, mut right) = search.best_parts;
    // The parts may be lopsided; trim the larger one.
    let t = search.best;
    left.truncate(t);
    right.truncate(t);
    left.sort_unstable();
    right.sort_unstable();
    debug_assert!(left
        .iter()
        .all(|&u| right.iter().all(|&v| g.has_edge(u, v))));
    Ok(OracleResult {
        value: t,
        witness: OracleWitness::Bipartition { left, right },
        explored: search.explored,
        exact: true,
    })
}
