//! Exact maximum clique by branch and bound with greedy coloring bounds,
//! plus maximal-clique enumeration with pivoting.

use crate::analysis::{OracleResult, OracleWitness};
use crate::bitset::BitRow;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Default cap on instance size for the clique oracles.
pub const DEFAULT_CLIQUE_VERTEX_LIMIT: usize = 40;

/// Default node budget; effectively unlimited at oracle scales.
pub const DEFAULT_CLIQUE_NODE_BUDGET: u64 = u64::MAX;

struct Search<'a> {
    adj: &'a [BitRow],
    best: Vec<u32>,
    explored: u64,
    budget: u64,
    truncated: bool,
}

impl Search<'_> {
    fn expand(&mut self, clique: &mut Vec<u32>, cands: &[u32]) {
        self.explored += 1;
        if self.explored > self.budget {
            self.truncated = true;
            return;
        }
        if cands.is_empty() {
            if clique.len() > self.best.len() {
                self.best = clique.clone();
            }
            return;
        }
        let (ordered, colors) = greedy_color(self.adj, cands);
        for idx in (0..ordered.len()).rev() {
            if self.truncated {
                return;
            }
            // Colors ascend with idx, so once one bound fails they all do.
            if clique.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = ordered[idx];
            let next: Vec<u32> = ordered[..idx]
                .iter()
                .copied()
                .filter(|&u| self.adj[v as usize].get(u as usize))
                .collect();
            clique.push(v);
            self.expand(clique, &next);
            clique.pop();
        }
    }
}

/// Sequential greedy coloring of the candidate set; returns the candidates
/// reordered class by class together with 1-based color numbers.
fn greedy_color(adj: &[BitRow], cands: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for &v in cands {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&u| !adj[v as usize].get(u as usize)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut ordered = Vec::with_capacity(cands.len());
    let mut colors = Vec::with_capacity(cands.len());
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            ordered.push(v);
            colors.push(c + 1);
        }
    }
    (ordered, colors)
}

fn adjacency_rows(g: &SimpleGraph) -> Vec<BitRow> {
    (0..g.n() as u32)
        .map(|v| {
            let mut row = BitRow::zeros(g.n());
            for &u in g.neighbors(v) {
                row.set(u as usize);
            }
            row
        })
        .collect()
}

/// Exact maximum clique. When the node budget runs out the best clique
/// found so far is returned with `exact = false`.
pub fn max_clique_exact(g: &SimpleGraph, node_budget: u64) -> OracleResult {
    let adj = adjacency_rows(g);
    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        explored: 0,
        budget: node_budget,
        truncated: false,
    };
    let all: Vec<u32> = (0..g.n() as u32).collect();
    let mut clique = Vec::new();
    search.expand(&mut clique, &all);
    let mut witness = search.best;
    witness.sort_unstable();
    debug_assert!(g.is_clique(&witness));
    OracleResult {
        value: witness.len(),
        witness: OracleWitness::VertexSet(witness),
        explored: search.explored,
        exact: !search.truncated,
    }
}

/// Exact maximum independent set: maximum clique of the complement.
pub fn max_independent_exact(g: &SimpleGraph, node_budget: u64) -> OracleResult {
    let result = max_clique_exact(&g.complement(), node_budget);
    if let OracleWitness::VertexSet(vs) = &result.witness {
        debug_assert!(g.is_independent(vs));
    }
    result
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn enumerate_maximal_cliques(g: &SimpleGraph, vertex_limit: usize) -> Result<Vec<Vec<u32>>> {
    if g.n() > vertex_limit {
        return Err(Error::LimitExceeded {
            n: g.n(),
            limit: vertex_limit,
        });
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let adj = adjacency_rows(g);
    let mut p = BitRow::zeros(g.n());
    for v in 0..g.n() {
        p.set(v);
    }
    let x = BitRow::zeros(g.n());
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(&adj, &mut r, p, x, &mut out);
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    adj: &[BitRow],
    r: &mut Vec<u32>,
    mut p: BitRow,
    mut x: BitRow,
    out: &mut Vec<Vec<u32>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    // Pivot on the vertex of P ∪ X covering the most of P.
    let pivot = p
        .iter_ones()
        .chain(x.iter_ones())
        .max_by_key(|&u| {
            let mut cover = p.clone();
            cover.intersect_with(&adj[u]);
            (cover.count_ones(), std::cmp::Reverse(u))
        })
        .expect("P or X nonempty");
    let todo: Vec<usize> = p
        .iter_ones()
        .filter(|&v| !adj[pivot].get(v))
        .collect();
    for v in todo {
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        r.push(v as u32);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.unset(v);
        x.set(v);
    }
}
